//! The spectral sequence of the filtration of the relative complex by the
//! number of even arguments: filtration subspaces, page dimensions, page
//! differentials, collapse detection, the factorization of the second page,
//! and the edge-vs-restriction comparison.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{EvenSubalgebra, LieSuperalgebra, Representation};
use crate::cochain::{even_factors, restriction_matrix, RelativeComplex};
use crate::linalg::Subspace;
use crate::rational::Rat;

/// The filtered relative complex together with cached filtration and cycle
/// subspaces. All subspaces live in the internal coordinates of the
/// equivariant spaces of the underlying complex.
pub struct SpectralSequence<'a> {
    pub complex: &'a RelativeComplex,
    /// Largest degree for which filtration data is meaningful; degree
    /// `max_n + 1` is still used as a differential target.
    pub max_n: usize,
    filt: RefCell<BTreeMap<(isize, usize), Subspace>>,
    cycles: RefCell<BTreeMap<(isize, isize, isize), Subspace>>,
}

impl<'a> SpectralSequence<'a> {
    pub fn new(complex: &'a RelativeComplex, max_n: usize) -> SpectralSequence<'a> {
        SpectralSequence {
            complex,
            max_n,
            filt: RefCell::new(BTreeMap::new()),
            cycles: RefCell::new(BTreeMap::new()),
        }
    }

    /// F^p of degree n, in equivariant coordinates: the span of elementary
    /// cochains whose monomial has at most n - p even factors.
    pub fn filtration(&self, p: isize, n: usize) -> Subspace {
        let eq = self.complex.equivariant(n);
        if p <= 0 {
            return Subspace::full(eq.dim());
        }
        if p >= n as isize + 1 {
            return Subspace::zero(eq.dim());
        }
        if let Some(s) = self.filt.borrow().get(&(p, n)) {
            return s.clone();
        }
        let monos = self.complex.monomials(n);
        let dim_m = self.complex.module_dim();
        let quot = &self.complex.quot;
        let limit = n - p as usize;
        // forbidden full coordinates: monomials with too many even factors
        let forbidden: Vec<bool> = (0..eq.full_dim)
            .map(|c| even_factors(quot, &monos[c / dim_m]) > limit)
            .collect();
        let basis_ok = |v: &Vec<Rat>| -> bool {
            v.iter()
                .enumerate()
                .all(|(c, x)| !forbidden[c] || x.is_zero())
        };
        // rows of the expansion at forbidden coordinates must vanish
        let s = if eq.is_coordinate() {
            let keep: Vec<usize> = (0..eq.dim())
                .filter(|&k| !forbidden[eq.coords[k]])
                .collect();
            let mut vecs = Vec::with_capacity(keep.len());
            for k in keep {
                let mut e = vec![Rat::zero(); eq.dim()];
                e[k] = crate::rational::rat(1);
                vecs.push(e);
            }
            Subspace::from_spanning(eq.dim(), vecs)
        } else {
            let rows: Vec<Vec<Rat>> = (0..eq.full_dim)
                .filter(|&c| forbidden[c])
                .map(|c| {
                    (0..eq.dim())
                        .map(|k| {
                            let mut e = vec![Rat::zero(); eq.dim()];
                            e[k] = crate::rational::rat(1);
                            eq.expand(&e)[c].clone()
                        })
                        .collect()
                })
                .collect();
            crate::linalg::kernel_of_dense(&rows, eq.dim())
        };
        debug_assert!(s.basis().iter().map(|v| eq.expand(v)).all(|v| basis_ok(&v)));
        self.filt.borrow_mut().insert((p, n), s.clone());
        s
    }

    /// Z_r^{p,q} = F^p C^{p+q} intersected with the preimage of
    /// F^{p+r} C^{p+q+1} under the differential.
    fn z_space(&self, r: isize, p: isize, q: isize) -> Subspace {
        let n = p + q;
        if n < 0 {
            return Subspace::zero(0);
        }
        let n = n as usize;
        if let Some(s) = self.cycles.borrow().get(&(r, p, q)) {
            return s.clone();
        }
        let fp = self.filtration(p, n);
        let target = self.filtration(p + r, n + 1);
        let d = self.complex.coboundary_eq(n);
        let s = fp.intersect(&target.preimage(&d));
        self.cycles.borrow_mut().insert((r, p, q), s.clone());
        s
    }

    /// The boundary part of the page denominator:
    /// Z_{r-1}^{p+1,q-1} + d(Z_{r-1}^{p-r+1,q+r-2}).
    fn denominator(&self, r: isize, p: isize, q: isize) -> Subspace {
        let n = p + q;
        let stay = self.z_space(r - 1, p + 1, q - 1);
        if n <= 0 {
            return stay;
        }
        let incoming = self
            .z_space(r - 1, p - r + 1, q + r - 2)
            .map_through(&self.complex.coboundary_eq(n as usize - 1));
        stay.sum(&incoming)
    }

    /// dim E_r^{p,q}.
    pub fn page_dim(&self, r: isize, p: isize, q: isize) -> usize {
        if p + q < 0 {
            return 0;
        }
        let z = self.z_space(r, p, q);
        let b = self.denominator(r, p, q);
        assert!(z.contains(&b), "page denominator lies inside the cycles");
        z.dim() - b.dim()
    }

    /// Rank of the page differential d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}.
    pub fn dr_rank(&self, r: isize, p: isize, q: isize) -> usize {
        let n = p + q;
        if n < 0 {
            return 0;
        }
        let image = self
            .z_space(r, p, q)
            .map_through(&self.complex.coboundary_eq(n as usize));
        let target_b = self.denominator(r, p + r, q - r + 1);
        image.sum(&target_b).dim() - target_b.dim()
    }

    /// dim E_infinity^{p,q}: the page formula at a turn r large enough that
    /// both filtration clamps are active, which gives
    /// (F^p ∩ ker d) / (F^{p+1} ∩ ker d + F^p ∩ im d).
    pub fn infinity_dim(&self, p: isize, q: isize) -> usize {
        if p + q < 0 {
            return 0;
        }
        let r = p + q + 2;
        self.page_dim(r.max(2), p, q)
    }

    /// Checks the three filtration axioms on every degree up to `max_n`:
    /// the steps decrease, the filtration is exhaustive and bounded
    /// (F^0 = C^n and F^{n+1} = 0), and the differential maps F^p into F^p.
    pub fn check_filtration_invariants(&self) -> Result<(), String> {
        for n in 0..=self.max_n {
            let eq_dim = self.complex.equivariant(n).dim();
            let full = self.filtration(0, n);
            if full.dim() != eq_dim {
                return Err(format!("F^0 C^{n} is not all of C^{n}"));
            }
            if !self.filtration(n as isize + 1, n).is_zero() {
                return Err(format!("F^{} C^{n} is nonzero", n + 1));
            }
            for p in 0..=n as isize {
                let fp = self.filtration(p, n);
                let fp1 = self.filtration(p + 1, n);
                if !fp.contains(&fp1) {
                    return Err(format!("F^{} C^{n} is not inside F^{p} C^{n}", p + 1));
                }
                if n < self.max_n {
                    let d = self.complex.coboundary_eq(n);
                    let image = fp.map_through(&d);
                    let fp_next = self.filtration(p, n + 1);
                    if !fp_next.contains(&image) {
                        return Err(format!("d(F^{p} C^{n}) leaves F^{p} C^{}", n + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// (sum of dim E_infinity over p+q = n, dim H^n); equal when the
    /// sequence converges to the cohomology.
    pub fn convergence_check(&self, n: usize) -> (usize, usize) {
        let total: usize = (0..=n as isize)
            .map(|p| self.infinity_dim(p, n as isize - p))
            .sum();
        (total, self.complex.cohomology(n).dim)
    }

    /// All (r, p, q) with p + q <= within_total and a nonzero page
    /// differential d_r, for 2 <= r <= max_n + 1.
    pub fn nonzero_differentials(&self, within_total: usize) -> Vec<(isize, isize, isize, usize)> {
        let mut out = Vec::new();
        for r in 2..=(self.max_n as isize + 1) {
            for n in 0..=within_total as isize {
                for p in 0..=n {
                    let q = n - p;
                    let rank = self.dr_rank(r, p, q);
                    if rank > 0 {
                        out.push((r, p, q, rank));
                    }
                }
            }
        }
        out
    }

    /// Page dimension table for one r, all cells with p + q <= max_total.
    pub fn page_table(&self, r: isize, max_total: usize) -> BTreeMap<(isize, isize), usize> {
        let mut t = BTreeMap::new();
        for n in 0..=max_total as isize {
            for p in 0..=n {
                let q = n - p;
                t.insert((p, q), self.page_dim(r, p, q));
            }
        }
        t
    }
}

/// The even subalgebra g0, as an explicit index subalgebra.
pub fn g0_subalgebra(alg: &LieSuperalgebra) -> EvenSubalgebra {
    EvenSubalgebra::from_indices(alg, &alg.even_indices()).expect("g0 is an even subalgebra")
}

/// Translates `a` (given inside g, supported on even coordinates) into the
/// standalone even-part algebra returned by `even_part`.
pub fn subalgebra_in_even_part(
    alg: &LieSuperalgebra,
    even_alg: &LieSuperalgebra,
    even_index: &[usize],
    sub: &EvenSubalgebra,
) -> EvenSubalgebra {
    let vectors: Vec<Vec<Rat>> = sub
        .vectors()
        .iter()
        .map(|v| {
            for &i in &alg.odd_indices() {
                assert!(v[i].is_zero(), "even subalgebra vector with odd support");
            }
            even_index.iter().map(|&i| v[i].clone()).collect()
        })
        .collect();
    EvenSubalgebra::new(even_alg, vectors).expect("subalgebra survives in the even part")
}

/// One cell of the second-page comparison: (p, q, dim E_2^{p,q},
/// dim H^p(g,g0;M) * dim H^q(g0,a;C)).
pub type FactorCell = (isize, isize, usize, usize);

/// Compares E_2^{p,q} with H^p(g, g0; M) (x) H^q(g0, a; C) for all cells with
/// p + q <= max_total. Returns every cell; the caller checks for mismatches.
pub fn e2_factorization(
    alg: &LieSuperalgebra,
    sub: &EvenSubalgebra,
    rep: &Representation,
    max_total: usize,
) -> Vec<FactorCell> {
    let complex = RelativeComplex::new(alg.clone(), sub.clone(), rep.clone())
        .expect("relative complex");
    let ss = SpectralSequence::new(&complex, max_total + 2);

    let g0 = g0_subalgebra(alg);
    let outer = RelativeComplex::new(alg.clone(), g0, rep.clone()).expect("outer complex");

    let (even_alg, even_index) = alg.even_part();
    let sub_even = subalgebra_in_even_part(alg, &even_alg, &even_index, sub);
    let inner = RelativeComplex::new(
        even_alg.clone(),
        sub_even,
        Representation::trivial(&even_alg),
    )
    .expect("inner complex");

    let mut outer_dims: BTreeMap<usize, usize> = BTreeMap::new();
    let mut inner_dims: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for n in 0..=max_total as isize {
        for p in 0..=n {
            let q = n - p;
            let e2 = ss.page_dim(2, p, q);
            let hp = *outer_dims
                .entry(p as usize)
                .or_insert_with(|| outer.cohomology(p as usize).dim);
            let hq = *inner_dims
                .entry(q as usize)
                .or_insert_with(|| inner.cohomology(q as usize).dim);
            out.push((p, q, e2, hp * hq));
        }
    }
    out
}

/// Rank of the restriction H^n(g, g0; M) -> H^n(g, a; M) and of the edge
/// E_infinity^{n,0} of the spectral sequence of (g, a; M); the two agree.
pub fn edge_vs_restriction(
    alg: &LieSuperalgebra,
    sub: &EvenSubalgebra,
    rep: &Representation,
    n: usize,
) -> (usize, usize) {
    let g0 = g0_subalgebra(alg);
    let src = RelativeComplex::new(alg.clone(), g0, rep.clone()).expect("source complex");
    let dst = RelativeComplex::new(alg.clone(), sub.clone(), rep.clone()).expect("target complex");
    let r = restriction_matrix(&src, &dst, n);

    let src_h = src.cohomology(n);
    let dst_h = dst.cohomology(n);
    let mapped = Subspace::from_spanning(
        dst.hom_dim(n),
        src_h.kernel.basis().iter().map(|v| r.mul_vec(v)).collect(),
    );
    let rank_res = mapped.sum(&dst_h.image).dim() - dst_h.image.dim();

    let ss = SpectralSequence::new(&dst, n + 2);
    let rank_edge = ss.infinity_dim(n as isize, 0);
    (rank_res, rank_edge)
}
