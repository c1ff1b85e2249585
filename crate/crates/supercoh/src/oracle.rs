//! Brute-force reference implementation used to cross-check the main engine.
//!
//! Everything here is deliberately written from scratch against the defining
//! formulas: dense naive Gaussian elimination over Q (no fraction-free
//! tricks), its own complement/projection construction for g/a, its own
//! monomial enumeration and normalization, and the coboundary assembled
//! directly from the alternating-sum formula. It shares only the input data
//! types with the rest of the crate, never the algorithms, so agreement
//! between the two routes is meaningful evidence.

use crate::algebra::{EvenSubalgebra, LieSuperalgebra, Parity, Representation};
use crate::rational::{rat, Rat};
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// naive dense linear algebra
// ---------------------------------------------------------------------------

/// Plain Gauss-Jordan elimination over Q, in place. Returns the pivot
/// columns. Intentionally the textbook algorithm with no optimizations.
fn gauss_jordan(m: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rank_dense(mut m: Vec<Vec<Rat>>) -> usize {
    gauss_jordan(&mut m).len()
}

/// Kernel basis of the linear map given by `rows` (each row a functional on
/// Q^ncols), via free variables of the reduced form.
fn kernel_dense(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        rows.push(vec![Rat::zero(); ncols]);
    }
    let pivots = gauss_jordan(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `cols * x = b` for square-or-tall column lists, by eliminating the
/// augmented matrix. Returns None when inconsistent.
fn solve_dense(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = b.len();
    let k = cols.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = gauss_jordan(&mut aug);
    if pivots.contains(&k) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); k];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][k].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// quotient data, built independently of algebra::quotient_basis
// ---------------------------------------------------------------------------

struct OracleQuotient {
    /// Representatives of g/a as coefficient vectors in g, even ones first.
    reps: Vec<Vec<Rat>>,
    parities: Vec<Parity>,
    /// Columns of the full change of basis: a-basis then representatives.
    chart: Vec<Vec<Rat>>,
    a_dim: usize,
}

impl OracleQuotient {
    fn build(alg: &LieSuperalgebra, a: &EvenSubalgebra) -> OracleQuotient {
        let d = alg.dim();
        let mut chart: Vec<Vec<Rat>> = Vec::new();
        let keep = |chart: &mut Vec<Vec<Rat>>, v: Vec<Rat>| -> bool {
            let mut m: Vec<Vec<Rat>> = (0..d)
                .map(|i| chart.iter().map(|c| c[i].clone()).collect())
                .collect();
            for (i, row) in m.iter_mut().enumerate() {
                row.push(v[i].clone());
            }
            if rank_dense(m) > chart.len() {
                chart.push(v);
                true
            } else {
                false
            }
        };
        for v in a.vectors() {
            keep(&mut chart, v.clone());
        }
        let a_dim = chart.len();
        let mut reps = Vec::new();
        let mut parities = Vec::new();
        for &i in alg.even_indices().iter().chain(alg.odd_indices().iter()) {
            let mut e = vec![Rat::zero(); d];
            e[i] = rat(1);
            if keep(&mut chart, e.clone()) {
                reps.push(e);
                parities.push(alg.parity(i));
            }
        }
        OracleQuotient {
            reps,
            parities,
            chart,
            a_dim,
        }
    }

    fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Quotient coordinates of a g-vector: solve against the chart and drop
    /// the a-part.
    fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let x = solve_dense(&self.chart, v).expect("chart is a basis of g");
        x[self.a_dim..].to_vec()
    }
}

// ---------------------------------------------------------------------------
// monomials in the super exterior algebra of g/a
// ---------------------------------------------------------------------------

/// A canonical monomial: quotient indices, even ones strictly increasing
/// followed by odd ones weakly increasing.
type Mono = Vec<usize>;

fn enumerate_monomials(quot: &OracleQuotient, n: usize) -> Vec<Mono> {
    let evens: Vec<usize> = (0..quot.dim())
        .filter(|&i| quot.parities[i] == Parity::Even)
        .collect();
    let odds: Vec<usize> = (0..quot.dim())
        .filter(|&i| quot.parities[i] == Parity::Odd)
        .collect();
    let mut out = Vec::new();
    for p in 0..=n.min(evens.len()) {
        let q = n - p;
        let even_parts = combinations(&evens, p);
        let odd_parts = multisets(&odds, q);
        for e in &even_parts {
            for o in &odd_parts {
                let mut m = e.clone();
                m.extend_from_slice(o);
                out.push(m);
            }
        }
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn multisets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in multisets(&items[i..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Sorts a wedge word into canonical order by adjacent transpositions; each
/// swap of neighbours u, v contributes (-1)^{1 + |u||v|}. Returns None when a
/// repeated even factor kills the word.
fn normalize(quot: &OracleQuotient, word: &[usize]) -> Option<(Rat, Mono)> {
    let key = |i: usize| match quot.parities[i] {
        Parity::Even => (0usize, i),
        Parity::Odd => (1usize, i),
    };
    let mut w: Vec<usize> = word.to_vec();
    let mut sign = Rat::one();
    // bubble sort so every exchange is an adjacent transposition
    for pass in 0..w.len() {
        let _ = pass;
        let mut moved = false;
        for t in 0..w.len().saturating_sub(1) {
            if key(w[t]) > key(w[t + 1]) {
                let both_odd = quot.parities[w[t]] == Parity::Odd
                    && quot.parities[w[t + 1]] == Parity::Odd;
                if !both_odd {
                    sign = -sign;
                }
                w.swap(t, t + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    // repeated even factor => zero
    for t in 0..w.len().saturating_sub(1) {
        if w[t] == w[t + 1] && quot.parities[w[t]] == Parity::Even {
            return None;
        }
    }
    Some((sign, w))
}

fn parity_bit(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

fn mono_parity(quot: &OracleQuotient, m: &[usize]) -> usize {
    m.iter().map(|&i| parity_bit(quot.parities[i])).sum::<usize>() % 2
}

// ---------------------------------------------------------------------------
// the dense relative complex
// ---------------------------------------------------------------------------

/// Column index of the elementary cochain sending monomial `mi` to carrier
/// vector `v` (cochain coordinates are monomial-major).
fn coord(mi: usize, v: usize, dim_m: usize) -> usize {
    mi * dim_m + v
}

fn mono_index(monos: &[Mono], m: &Mono) -> usize {
    monos
        .iter()
        .position(|x| x == m)
        .expect("normalized monomial is in the enumeration")
}

/// Full coboundary matrix C^n -> C^{n+1} on the whole Hom space (no
/// equivariance imposed), as dense rows.
fn coboundary_dense(
    alg: &LieSuperalgebra,
    quot: &OracleQuotient,
    rep: &Representation,
    monos_n: &[Mono],
    monos_n1: &[Mono],
) -> Vec<Vec<Rat>> {
    let dim_m = rep.carrier_dim();
    let ncols = monos_n.len() * dim_m;
    let nrows = monos_n1.len() * dim_m;
    let mut d = vec![vec![Rat::zero(); ncols]; nrows];

    for (wi, w) in monos_n1.iter().enumerate() {
        let alphas: Vec<usize> = w.iter().map(|&i| parity_bit(quot.parities[i])).collect();
        // first sum: omega_i acting on the value
        for i in 0..w.len() {
            let rest: Mono = w
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i)
                .map(|(_, &x)| x)
                .collect();
            let ci = mono_index(monos_n, &rest);
            let rho = rep.act(&quot.reps[w[i]]);
            let prefix: usize = alphas[..i].iter().sum();
            for v in 0..dim_m {
                // the acting cochain has parity |rest| + |v|
                let beta = (mono_parity(quot, &rest) + parity_bit(rep.carrier_parity(v))) % 2;
                let tau = i + alphas[i] * (prefix + beta);
                let s = if tau % 2 == 0 { rat(1) } else { rat(-1) };
                for u in 0..dim_m {
                    let e = rho.get(u, v);
                    if !e.is_zero() {
                        d[coord(wi, u, dim_m)][coord(ci, v, dim_m)] += &s * e;
                    }
                }
            }
        }
        // second sum: brackets of pairs of arguments
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let sigma = i
                    + j
                    + alphas[i] * alphas[j]
                    + alphas[i] * alphas[..i].iter().sum::<usize>()
                    + alphas[j] * alphas[..j].iter().sum::<usize>();
                let s0 = if sigma % 2 == 0 { rat(1) } else { rat(-1) };
                let br = alg.bracket_vec(&quot.reps[w[i]], &quot.reps[w[j]]);
                let qc = quot.project(&br);
                let rest: Mono = w
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &x)| x)
                    .collect();
                for (k, c) in qc.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut word = vec![k];
                    word.extend_from_slice(&rest);
                    let Some((sw, m)) = normalize(quot, &word) else {
                        continue;
                    };
                    let ci = mono_index(monos_n, &m);
                    let coef = &s0 * c * sw;
                    for v in 0..dim_m {
                        d[coord(wi, v, dim_m)][coord(ci, v, dim_m)] += &coef;
                    }
                }
            }
        }
    }
    d
}

/// Basis of the a-equivariant cochains in degree n, as coordinate vectors of
/// the full Hom space.
fn equivariant_basis(
    alg: &LieSuperalgebra,
    a: &EvenSubalgebra,
    quot: &OracleQuotient,
    rep: &Representation,
    monos: &[Mono],
) -> Vec<Vec<Rat>> {
    let dim_m = rep.carrier_dim();
    let ncols = monos.len() * dim_m;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for x in a.vectors() {
        let rho = rep.act(x);
        // (x.f)(m) = rho(x) f(m) - sum_i f(m with arg_i replaced by [x, arg_i])
        for (mi, m) in monos.iter().enumerate() {
            for u in 0..dim_m {
                let mut row = vec![Rat::zero(); ncols];
                for v in 0..dim_m {
                    let e = rho.get(u, v);
                    if !e.is_zero() {
                        row[coord(mi, v, dim_m)] += e;
                    }
                }
                for t in 0..m.len() {
                    let br = alg.bracket_vec(x, &quot.reps[m[t]]);
                    let qc = quot.project(&br);
                    for (k, c) in qc.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut word = m.clone();
                        word[t] = k;
                        let Some((sw, m2)) = normalize(quot, &word) else {
                            continue;
                        };
                        let ci = mono_index(monos, &m2);
                        row[coord(ci, u, dim_m)] -= c * &sw;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    kernel_dense(rows, ncols)
}

fn apply_dense(d: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    d.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .fold(Rat::zero(), |s, t| s + t)
        })
        .collect()
}

/// Dimension of H^n(g, a; M) computed entirely by the brute-force route.
pub fn oracle_cohomology(
    alg: &LieSuperalgebra,
    a: &EvenSubalgebra,
    rep: &Representation,
    n: usize,
) -> usize {
    let quot = OracleQuotient::build(alg, a);
    let monos_n = enumerate_monomials(&quot, n);
    let monos_n1 = enumerate_monomials(&quot, n + 1);
    let eq_n = equivariant_basis(alg, a, &quot, rep, &monos_n);
    let d_n = coboundary_dense(alg, &quot, rep, &monos_n, &monos_n1);

    // rank of d restricted to the equivariant subspace
    let images: Vec<Vec<Rat>> = eq_n.iter().map(|v| apply_dense(&d_n, v)).collect();
    let rank_n = rank_dense(images);
    let ker_dim = eq_n.len() - rank_n;

    let rank_prev = if n == 0 {
        0
    } else {
        let monos_p = enumerate_monomials(&quot, n - 1);
        let eq_p = equivariant_basis(alg, a, &quot, rep, &monos_p);
        let d_p = coboundary_dense(alg, &quot, rep, &monos_p, &monos_n);
        let prev_images: Vec<Vec<Rat>> = eq_p.iter().map(|v| apply_dense(&d_p, v)).collect();
        rank_dense(prev_images)
    };
    ker_dim - rank_prev
}

/// Dimension of the degree-q invariants S^q(g_1^*)^{g_0}: the even part acts
/// on polynomial functions of the odd part by derivations; this computes the
/// joint kernel directly.
pub fn oracle_invariants(alg: &LieSuperalgebra, q: usize) -> usize {
    let odds = alg.odd_indices();
    let evens = alg.even_indices();
    let monos = multisets(&(0..odds.len()).collect::<Vec<_>>(), q);
    if monos.is_empty() {
        return 0;
    }
    let n = monos.len();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for &x in &evens {
        // x . phi_i = - sum_j A_{ij} phi_j where [x, v_j] = sum_i A_{ij} v_i
        let mut a = vec![vec![Rat::zero(); odds.len()]; odds.len()];
        for (jj, &vj) in odds.iter().enumerate() {
            let br = alg.bracket(x, vj);
            for (ii, &vi) in odds.iter().enumerate() {
                a[ii][jj] = br[vi].clone();
            }
        }
        // derivation action on each monomial, one linear constraint per
        // (monomial, target monomial) pair
        let mut action = vec![vec![Rat::zero(); n]; n];
        for (mi, m) in monos.iter().enumerate() {
            for t in 0..m.len() {
                for j in 0..odds.len() {
                    let c = -a[m[t]][j].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let mut m2 = m.clone();
                    m2[t] = j;
                    m2.sort_unstable();
                    let ti = monos.iter().position(|x| *x == m2).unwrap();
                    action[ti][mi] += &c;
                }
            }
        }
        rows.extend(action);
    }
    kernel_dense(rows, n).len()
}
