//! Randomized property suites for the exact linear algebra kernel and the
//! monomial normalization, checked against straightforward reimplementations
//! kept local to this file.

use num_traits::{One, Zero};
use proptest::prelude::*;

use supercoh::algebra::{cartan_subalgebra, make_gl, quotient_basis};
use supercoh::cochain::normalize_word;
use supercoh::linalg::rref;
use supercoh::rational::{ratio, Rat};
use supercoh::{RationalMatrix, Subspace};

/// Textbook Gauss elimination over Q, written independently of the
/// fraction-free pivoting used by the library.
fn naive_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for x in &mut rows[rank] {
            *x /= &pivot;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in 0..cols {
                    let t = &rows[rank][k] * &f;
                    rows[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
    prop::collection::vec(prop::collection::vec(small_rat(), cols), rows)
}

fn to_sparse(dense: &[Vec<Rat>]) -> RationalMatrix {
    let cols = dense.first().map_or(0, Vec::len);
    let mut m = RationalMatrix::zero(dense.len(), cols);
    for (i, row) in dense.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v.clone());
            }
        }
    }
    m
}

proptest! {
    #[test]
    fn fraction_free_rank_matches_naive_elimination(dense in matrix(5, 6)) {
        let sparse = to_sparse(&dense);
        prop_assert_eq!(sparse.rank(), naive_rank(dense));
    }

    #[test]
    fn kernel_vectors_are_annihilated(dense in matrix(4, 6)) {
        let sparse = to_sparse(&dense);
        let kernel = sparse.kernel();
        prop_assert_eq!(sparse.rank() + kernel.dim(), 6);
        for v in kernel.basis() {
            prop_assert!(sparse.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_is_invariant_under_transpose(dense in matrix(5, 4)) {
        let sparse = to_sparse(&dense);
        prop_assert_eq!(sparse.rank(), sparse.transpose().rank());
    }

    #[test]
    fn subspace_dimension_is_modular(
        u in matrix(3, 5),
        v in matrix(3, 5),
    ) {
        let su = Subspace::from_spanning(5, u);
        let sv = Subspace::from_spanning(5, v);
        let sum = su.sum(&sv);
        let meet = su.intersect(&sv);
        prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sv.dim());
        prop_assert!(sum.contains(&su));
        prop_assert!(sum.contains(&sv));
        prop_assert!(su.contains(&meet));
        prop_assert!(sv.contains(&meet));
    }

    #[test]
    fn annihilator_has_complementary_dimension(u in matrix(3, 5)) {
        let su = Subspace::from_spanning(5, u);
        let ann = su.annihilator();
        prop_assert_eq!(su.dim() + ann.len(), 5);
        for w in &ann {
            for b in su.basis() {
                let dot = b.iter().zip(w).fold(Rat::zero(), |s, (x, y)| s + x * y);
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn echelon_form_is_a_basis_of_the_row_space(dense in matrix(4, 5)) {
        let (rows, pivots) = rref(dense.clone());
        prop_assert_eq!(rows.len(), pivots.len());
        let space = Subspace::from_spanning(5, rows.clone());
        for r in &dense {
            prop_assert!(space.contains_vec(r));
        }
        for (r, &p) in rows.iter().zip(&pivots) {
            prop_assert!(r[p].is_one());
            prop_assert!(r[..p].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn normalized_words_are_fixed_points(word in prop::collection::vec(0usize..7, 0..5)) {
        // words over the 7-dimensional quotient of gl(2|1) by its Cartan
        let alg = make_gl(2, 1).unwrap();
        let quot = quotient_basis(&alg, &cartan_subalgebra(&alg));
        prop_assume!(word.iter().all(|&i| i < quot.dim()));
        if let Some((sign, mono)) = normalize_word(&quot, &word) {
            prop_assert!(sign.clone() * sign.clone() == Rat::one(), "sign is a unit");
            let again = normalize_word(&quot, &mono).expect("canonical words normalize");
            prop_assert_eq!(again.0, Rat::one());
            prop_assert_eq!(again.1, mono);
        }
    }
}
