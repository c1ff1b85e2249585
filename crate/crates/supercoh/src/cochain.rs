//! The relative Koszul complex: monomial bases of the superexterior powers,
//! the signed coboundary, equivariant subspaces, and cohomology groups with
//! canonical representatives.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use num_traits::Zero;

use crate::algebra::{EvenSubalgebra, LieSuperalgebra, Parity, QuotientBasis, Representation};
use crate::linalg::{quotient_coords, RationalMatrix, Subspace};
use crate::rational::{rat, Rat};

/// A canonical monomial in the superexterior algebra of g/a: quotient indices
/// with the even ones strictly increasing followed by the odd ones weakly
/// increasing.
pub type Mono = Vec<usize>;

fn parity_bit(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// Number of even factors of a monomial; this is what the filtration counts.
pub fn even_factors(quot: &QuotientBasis, m: &[usize]) -> usize {
    m.iter()
        .filter(|&&i| quot.parity(i) == Parity::Even)
        .count()
}

/// Parity of a monomial as an element of the superexterior algebra.
pub fn mono_parity(quot: &QuotientBasis, m: &[usize]) -> usize {
    m.iter()
        .map(|&i| parity_bit(quot.parity(i)))
        .sum::<usize>()
        % 2
}

/// Degree-n monomial basis, ordered with the even-heavy monomials first so
/// that each filtration step is a contiguous tail of the coordinate list.
pub fn monomial_basis(quot: &QuotientBasis, n: usize) -> Vec<Mono> {
    let evens: Vec<usize> = (0..quot.dim())
        .filter(|&i| quot.parity(i) == Parity::Even)
        .collect();
    let odds: Vec<usize> = (0..quot.dim())
        .filter(|&i| quot.parity(i) == Parity::Odd)
        .collect();
    let mut out = Vec::new();
    for p in (0..=n.min(evens.len())).rev() {
        let q = n - p;
        for e in subsets(&evens, p) {
            for o in weak_tuples(&odds, q) {
                let mut m = e.clone();
                m.extend_from_slice(&o);
                out.push(m);
            }
        }
    }
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

fn weak_tuples(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

/// Brings a wedge word into canonical order. Exchanging adjacent factors u, v
/// costs (-1)^{1 + |u||v|}; the total sign is therefore -1 to the number of
/// inversion pairs that are not both odd. A repeated even factor kills the
/// word (None).
pub fn normalize_word(quot: &QuotientBasis, word: &[usize]) -> Option<(Rat, Mono)> {
    let key = |i: usize| (parity_bit(quot.parity(i)), i);
    let mut flips = 0usize;
    for s in 0..word.len() {
        for t in s + 1..word.len() {
            if word[s] == word[t] && quot.parity(word[s]) == Parity::Even {
                return None;
            }
            if key(word[s]) > key(word[t]) {
                let both_odd =
                    quot.parity(word[s]) == Parity::Odd && quot.parity(word[t]) == Parity::Odd;
                if !both_odd {
                    flips += 1;
                }
            }
        }
    }
    let mut m = word.to_vec();
    m.sort_by_key(|&i| key(i));
    let sign = if flips % 2 == 0 { rat(1) } else { rat(-1) };
    Some((sign, m))
}

/// Index of the elementary cochain (monomial `mi`, carrier vector `v`) in the
/// monomial-major coordinates of the full Hom space.
pub fn hom_coord(mi: usize, v: usize, dim_m: usize) -> usize {
    mi * dim_m + v
}

/// The coboundary matrix C^n -> C^{n+1} on the full Hom space. The sign of a
/// term with the acting argument at position i is -(-1)^{tau_i} with
/// tau_i = i + a_i (a_0 + ... + a_{i-1} + |f|), and the sign of the bracket
/// term for positions i < j is -(-1)^{sigma_ij} with
/// sigma_ij = i + j + a_i a_j + a_i (a_0+...+a_{i-1}) + a_j (a_0+...+a_{j-1}),
/// where the a's are the argument parities and |f| is the cochain parity.
pub fn coboundary_matrix(
    alg: &LieSuperalgebra,
    quot: &QuotientBasis,
    rep: &Representation,
    monos_n: &[Mono],
    monos_n1: &[Mono],
) -> RationalMatrix {
    let dim_m = rep.carrier_dim();
    let index: BTreeMap<&Mono, usize> = monos_n.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut d = RationalMatrix::zero(monos_n1.len() * dim_m, monos_n.len() * dim_m);

    for (wi, w) in monos_n1.iter().enumerate() {
        let alphas: Vec<usize> = w.iter().map(|&i| parity_bit(quot.parity(i))).collect();
        let prefix: Vec<usize> = {
            let mut acc = 0;
            let mut p = Vec::with_capacity(w.len());
            for &a in &alphas {
                p.push(acc);
                acc += a;
            }
            p
        };
        // action terms: argument i acts on the value of f at the others
        for i in 0..w.len() {
            let rest: Mono = w
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i)
                .map(|(_, &x)| x)
                .collect();
            let rest_parity = mono_parity(quot, &rest);
            let ci = index[&rest];
            let rho = rep.act(&quot.reps[w[i]]);
            for (u, v, e) in rho.iter() {
                let beta = (rest_parity + parity_bit(rep.carrier_parity(v))) % 2;
                let tau = i + alphas[i] * (prefix[i] + beta);
                let val = if tau % 2 == 0 { -e.clone() } else { e.clone() };
                d.add_to(hom_coord(wi, u, dim_m), hom_coord(ci, v, dim_m), &val);
            }
        }
        // bracket terms: two arguments collapse into their projected bracket
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let sigma = i + j + alphas[i] * alphas[j] + alphas[i] * prefix[i]
                    + alphas[j] * prefix[j];
                let s0 = if sigma % 2 == 0 { rat(-1) } else { rat(1) };
                let br = alg.bracket_vec(&quot.reps[w[i]], &quot.reps[w[j]]);
                let qc = quot.project(&br);
                if qc.iter().all(|c| c.is_zero()) {
                    continue;
                }
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
                    let mut word = Vec::with_capacity(rest.len() + 1);
                    word.push(k);
                    word.extend_from_slice(&rest);
                    let Some((sw, m)) = normalize_word(quot, &word) else {
                        continue;
                    };
                    let ci = index[&m];
                    let coef = &s0 * c * sw;
                    for v in 0..dim_m {
                        d.add_to(hom_coord(wi, v, dim_m), hom_coord(ci, v, dim_m), &coef);
                    }
                }
            }
        }
    }
    d
}

/// Action of a subalgebra element x on the full Hom space:
/// (x.f)(m) = rho(x) f(m) - sum_t f(m with argument t replaced by [x, m_t]).
pub fn subalgebra_action(
    alg: &LieSuperalgebra,
    quot: &QuotientBasis,
    rep: &Representation,
    x: &[Rat],
    monos: &[Mono],
) -> RationalMatrix {
    let dim_m = rep.carrier_dim();
    let index: BTreeMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut op = RationalMatrix::zero(monos.len() * dim_m, monos.len() * dim_m);
    let rho = rep.act(x);
    for (mi, m) in monos.iter().enumerate() {
        for (u, v, e) in rho.iter() {
            op.add_to(hom_coord(mi, u, dim_m), hom_coord(mi, v, dim_m), e);
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
                let Some((sw, m2)) = normalize_word(quot, &word) else {
                    continue;
                };
                let ci = index[&m2];
                let coef = -(c * &sw);
                for v in 0..dim_m {
                    op.add_to(hom_coord(mi, v, dim_m), hom_coord(ci, v, dim_m), &coef);
                }
            }
        }
    }
    op
}

/// The a-equivariant subspace of a Hom space, kept factored: operators that
/// are diagonal in the elementary-cochain basis (torus elements) carve out a
/// coordinate subspace, and only the remaining operators need an actual
/// kernel computation inside it. This keeps the large instances tractable.
#[derive(Debug, Clone)]
pub struct EquivariantSpace {
    pub full_dim: usize,
    /// Elementary cochains allowed by the diagonal operators, ascending.
    pub coords: Vec<usize>,
    /// Kernel of the non-diagonal operators inside the coordinate subspace;
    /// None means the whole coordinate subspace.
    pub inner: Option<Subspace>,
}

impl EquivariantSpace {
    pub fn compute(
        alg: &LieSuperalgebra,
        sub: &EvenSubalgebra,
        quot: &QuotientBasis,
        rep: &Representation,
        monos: &[Mono],
    ) -> EquivariantSpace {
        let dim_m = rep.carrier_dim();
        let full_dim = monos.len() * dim_m;
        if sub.vectors().is_empty() {
            return EquivariantSpace {
                full_dim,
                coords: (0..full_dim).collect(),
                inner: None,
            };
        }
        let ops: Vec<RationalMatrix> = sub
            .vectors()
            .iter()
            .map(|x| subalgebra_action(alg, quot, rep, x, monos))
            .collect();
        let (diag, rest): (Vec<&RationalMatrix>, Vec<&RationalMatrix>) = ops
            .iter()
            .partition(|op| op.iter().all(|(i, j, _)| i == j));
        let mut allowed = vec![true; full_dim];
        for op in &diag {
            for (i, _, v) in op.iter() {
                if !v.is_zero() {
                    allowed[i] = false;
                }
            }
        }
        let coords: Vec<usize> = (0..full_dim).filter(|&i| allowed[i]).collect();
        if rest.is_empty() {
            return EquivariantSpace {
                full_dim,
                coords,
                inner: None,
            };
        }
        // stack the non-diagonal constraints, columns restricted to coords
        let pos: BTreeMap<usize, usize> = coords.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for op in &rest {
            let mut by_row: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
            for (i, j, v) in op.iter() {
                if let Some(&pj) = pos.get(&j) {
                    by_row
                        .entry(i)
                        .or_insert_with(|| vec![Rat::zero(); coords.len()])[pj] = v.clone();
                }
            }
            rows.extend(by_row.into_values());
        }
        let stacked = Subspace::from_spanning(coords.len(), rows);
        let inner = crate::linalg::kernel_of_dense(stacked.basis(), coords.len());
        EquivariantSpace {
            full_dim,
            coords,
            inner: Some(inner),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.inner {
            None => self.coords.len(),
            Some(s) => s.dim(),
        }
    }

    /// True when the space is exactly a coordinate subspace.
    pub fn is_coordinate(&self) -> bool {
        self.inner.is_none()
    }

    /// Expands an internal coordinate vector into full Hom coordinates.
    pub fn expand(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim(), "coordinate length mismatch");
        let mut out = vec![Rat::zero(); self.full_dim];
        match &self.inner {
            None => {
                for (p, &c) in self.coords.iter().enumerate() {
                    out[c] = v[p].clone();
                }
            }
            Some(s) => {
                for (coef, row) in v.iter().zip(s.basis()) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (p, &c) in self.coords.iter().enumerate() {
                        if !row[p].is_zero() {
                            out[c] += coef * &row[p];
                        }
                    }
                }
            }
        }
        out
    }

    /// Internal coordinates of a full Hom vector, or None when it lies
    /// outside the space.
    pub fn coordinates(&self, full: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(full.len(), self.full_dim, "ambient mismatch");
        let inside: std::collections::BTreeSet<usize> = self.coords.iter().copied().collect();
        for (i, v) in full.iter().enumerate() {
            if !v.is_zero() && !inside.contains(&i) {
                return None;
            }
        }
        let restricted: Vec<Rat> = self.coords.iter().map(|&c| full[c].clone()).collect();
        match &self.inner {
            None => Some(restricted),
            Some(s) => s.coordinates(&restricted),
        }
    }

    /// Full-coordinate basis vectors of the space.
    pub fn basis_full(&self) -> Vec<Vec<Rat>> {
        (0..self.dim())
            .map(|k| {
                let mut e = vec![Rat::zero(); self.dim()];
                e[k] = rat(1);
                self.expand(&e)
            })
            .collect()
    }
}

/// A cohomology group with deterministic, echelon-normalized representatives
/// (full Hom coordinates).
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub dim: usize,
    pub representatives: Vec<Vec<Rat>>,
    /// Relative cocycles, as a subspace of the full Hom space.
    pub kernel: Subspace,
    /// Relative coboundaries, as a subspace of the full Hom space.
    pub image: Subspace,
}

impl CohomologyGroup {
    /// Coordinates of a cocycle in the stored representative basis, reducing
    /// modulo coboundaries. Panics if `z` is not a cocycle of this degree.
    pub fn class_coordinates(&self, z: &[Rat]) -> Vec<Rat> {
        assert!(self.kernel.contains_vec(z), "not a relative cocycle");
        quotient_coords(z, &self.representatives, &self.image)
    }
}

/// The relative Koszul complex of (g, a) with coefficients in a module,
/// with all per-degree data computed on demand and cached.
pub struct RelativeComplex {
    pub alg: LieSuperalgebra,
    pub sub: EvenSubalgebra,
    pub rep: Representation,
    pub quot: QuotientBasis,
    monos: RefCell<BTreeMap<usize, Rc<Vec<Mono>>>>,
    eq: RefCell<BTreeMap<usize, Rc<EquivariantSpace>>>,
    d_full: RefCell<BTreeMap<usize, Rc<RationalMatrix>>>,
    d_eq: RefCell<BTreeMap<usize, Rc<RationalMatrix>>>,
}

impl RelativeComplex {
    pub fn new(
        alg: LieSuperalgebra,
        sub: EvenSubalgebra,
        rep: Representation,
    ) -> Result<RelativeComplex, String> {
        if rep.matrices.len() != alg.dim() {
            return Err(format!(
                "module has {} action matrices for an algebra of dimension {}",
                rep.matrices.len(),
                alg.dim()
            ));
        }
        let quot = crate::algebra::quotient_basis(&alg, &sub);
        Ok(RelativeComplex {
            alg,
            sub,
            rep,
            quot,
            monos: RefCell::new(BTreeMap::new()),
            eq: RefCell::new(BTreeMap::new()),
            d_full: RefCell::new(BTreeMap::new()),
            d_eq: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn module_dim(&self) -> usize {
        self.rep.carrier_dim()
    }

    pub fn monomials(&self, n: usize) -> Rc<Vec<Mono>> {
        if let Some(m) = self.monos.borrow().get(&n) {
            return m.clone();
        }
        let m = Rc::new(monomial_basis(&self.quot, n));
        self.monos.borrow_mut().insert(n, m.clone());
        m
    }

    /// Dimension of the full (not yet equivariant) Hom space in degree n.
    pub fn hom_dim(&self, n: usize) -> usize {
        self.monomials(n).len() * self.module_dim()
    }

    /// Full-space coboundary C^n -> C^{n+1}.
    pub fn coboundary_full(&self, n: usize) -> Rc<RationalMatrix> {
        if let Some(d) = self.d_full.borrow().get(&n) {
            return d.clone();
        }
        let monos_n = self.monomials(n);
        let monos_n1 = self.monomials(n + 1);
        let d = Rc::new(coboundary_matrix(
            &self.alg, &self.quot, &self.rep, &monos_n, &monos_n1,
        ));
        self.d_full.borrow_mut().insert(n, d.clone());
        d
    }

    pub fn equivariant(&self, n: usize) -> Rc<EquivariantSpace> {
        if let Some(e) = self.eq.borrow().get(&n) {
            return e.clone();
        }
        let monos = self.monomials(n);
        let e = Rc::new(EquivariantSpace::compute(
            &self.alg, &self.sub, &self.quot, &self.rep, &monos,
        ));
        self.eq.borrow_mut().insert(n, e.clone());
        e
    }

    /// Coboundary in the internal coordinates of the equivariant spaces.
    pub fn coboundary_eq(&self, n: usize) -> Rc<RationalMatrix> {
        if let Some(d) = self.d_eq.borrow().get(&n) {
            return d.clone();
        }
        let src = self.equivariant(n);
        let dst = self.equivariant(n + 1);
        let d_full = self.coboundary_full(n);
        let d = if src.is_coordinate() && dst.is_coordinate() {
            // restriction of the sparse matrix to the allowed coordinates
            let col_pos: BTreeMap<usize, usize> =
                src.coords.iter().enumerate().map(|(p, &c)| (c, p)).collect();
            let row_pos: BTreeMap<usize, usize> =
                dst.coords.iter().enumerate().map(|(p, &c)| (c, p)).collect();
            let mut m = RationalMatrix::zero(dst.coords.len(), src.coords.len());
            for (i, j, v) in d_full.iter() {
                if let Some(&pj) = col_pos.get(&j) {
                    let pi = row_pos
                        .get(&i)
                        .expect("coboundary leaves the equivariant subspace");
                    m.set(*pi, pj, v.clone());
                }
            }
            m
        } else {
            let mut m = RationalMatrix::zero(dst.dim(), src.dim());
            for (k, b) in src.basis_full().iter().enumerate() {
                let y = d_full.mul_vec(b);
                let c = dst
                    .coordinates(&y)
                    .expect("coboundary leaves the equivariant subspace");
                for (i, v) in c.into_iter().enumerate() {
                    m.set(i, k, v);
                }
            }
            m
        };
        let d = Rc::new(d);
        self.d_eq.borrow_mut().insert(n, d.clone());
        d
    }

    /// H^n(g, a; M) with canonical representatives.
    pub fn cohomology(&self, n: usize) -> CohomologyGroup {
        let eq_n = self.equivariant(n);
        let ker_eq = self.coboundary_eq(n).kernel();
        let im_eq = if n == 0 {
            Subspace::zero(eq_n.dim())
        } else {
            self.coboundary_eq(n - 1).image()
        };
        assert!(
            ker_eq.contains(&im_eq),
            "coboundaries are cocycles (d^2 = 0)"
        );
        let reps_eq = ker_eq.complement_of(&im_eq);
        let representatives: Vec<Vec<Rat>> = reps_eq.iter().map(|v| eq_n.expand(v)).collect();
        let kernel = Subspace::from_spanning(
            eq_n.full_dim,
            ker_eq.basis().iter().map(|v| eq_n.expand(v)).collect(),
        );
        let image = Subspace::from_spanning(
            eq_n.full_dim,
            im_eq.basis().iter().map(|v| eq_n.expand(v)).collect(),
        );
        CohomologyGroup {
            degree: n,
            dim: representatives.len(),
            representatives,
            kernel,
            image,
        }
    }

    /// Index of a canonical monomial in the degree-n basis.
    pub fn monomial_index(&self, n: usize, m: &[usize]) -> Option<usize> {
        self.monomials(n).iter().position(|x| x.as_slice() == m)
    }
}

/// Matrix of the restriction C^n(g, g0; M) -> C^n(g, a; M) in full Hom
/// coordinates: the pullback through g/a -> g/g0 kills every monomial with an
/// even factor and is the identity on the purely odd ones (the odd
/// representatives of both quotients are the same odd basis vectors, in the
/// same order).
pub fn restriction_matrix(
    src: &RelativeComplex,
    dst: &RelativeComplex,
    n: usize,
) -> RationalMatrix {
    let dim_m = src.module_dim();
    assert_eq!(dim_m, dst.module_dim(), "module mismatch");
    let src_odd = src.quot.dim() - src.quot.even_count;
    let dst_odd = dst.quot.dim() - dst.quot.even_count;
    assert_eq!(src.quot.even_count, 0, "source must be relative to g0");
    assert_eq!(src_odd, dst_odd, "odd parts of the quotients must agree");
    let src_monos = src.monomials(n);
    let dst_monos = dst.monomials(n);
    let src_index: BTreeMap<&Mono, usize> =
        src_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut r = RationalMatrix::zero(dst_monos.len() * dim_m, src_monos.len() * dim_m);
    for (di, m) in dst_monos.iter().enumerate() {
        if even_factors(&dst.quot, m) > 0 {
            continue;
        }
        // translate odd indices of g/a to odd indices of g/g0
        let translated: Mono = m
            .iter()
            .map(|&i| i - dst.quot.even_count)
            .collect();
        let si = src_index[&translated];
        for v in 0..dim_m {
            r.set(hom_coord(di, v, dim_m), hom_coord(si, v, dim_m), rat(1));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_gl, make_sl2};
    use crate::oracle;

    fn gl11_center(alg: &LieSuperalgebra) -> EvenSubalgebra {
        EvenSubalgebra::new(alg, vec![vec![rat(1), rat(1), rat(0), rat(0)]]).unwrap()
    }

    #[test]
    fn monomial_basis_is_even_heavy_first_and_counted() {
        let alg = make_gl(1, 1).unwrap();
        let quot = crate::algebra::quotient_basis(&alg, &EvenSubalgebra::zero());
        for n in 0..6 {
            let monos = monomial_basis(&quot, n);
            let expect: usize = (0..=n.min(2))
                .map(|p| [1usize, 2, 1][p] * (n - p + 1))
                .sum();
            assert_eq!(monos.len(), expect, "degree {n}");
            // even-factor counts are non-increasing along the list
            let counts: Vec<usize> = monos.iter().map(|m| even_factors(&quot, m)).collect();
            assert!(counts.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn normalize_matches_bubble_reference() {
        let alg = make_gl(2, 1).unwrap();
        let quot = crate::algebra::quotient_basis(&alg, &EvenSubalgebra::zero());
        // reference: explicit adjacent-transposition bubble sort
        let bubble = |word: &[usize]| -> Option<(Rat, Mono)> {
            let key = |i: usize| (parity_bit(quot.parity(i)), i);
            let mut w = word.to_vec();
            let mut sign = rat(1);
            loop {
                let mut moved = false;
                for t in 0..w.len().saturating_sub(1) {
                    if key(w[t]) > key(w[t + 1]) {
                        let both_odd = quot.parity(w[t]) == Parity::Odd
                            && quot.parity(w[t + 1]) == Parity::Odd;
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
            for t in 0..w.len().saturating_sub(1) {
                if w[t] == w[t + 1] && quot.parity(w[t]) == Parity::Even {
                    return None;
                }
            }
            Some((sign, w))
        };
        // exhaustive over all words of length 3 in a 9-dimensional quotient
        let d = quot.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let w = [a, b, c];
                    assert_eq!(normalize_word(&quot, &w), bubble(&w), "word {w:?}");
                }
            }
        }
    }

    #[test]
    fn d_squared_vanishes_on_small_relative_complexes() {
        let alg = make_gl(1, 1).unwrap();
        let cases: Vec<EvenSubalgebra> = vec![
            EvenSubalgebra::zero(),
            gl11_center(&alg),
            EvenSubalgebra::from_indices(&alg, &alg.even_indices()).unwrap(),
        ];
        for sub in cases {
            for rep in [Representation::trivial(&alg), Representation::adjoint(&alg)] {
                let c = RelativeComplex::new(alg.clone(), sub.clone(), rep).unwrap();
                for n in 0..4 {
                    let d1 = c.coboundary_eq(n + 1);
                    let d0 = c.coboundary_eq(n);
                    assert!(d1.composition_is_zero(&d0), "degree {n}");
                }
            }
        }
    }

    #[test]
    fn printed_coefficient_small_cases() {
        // relative to the center of gl(1|1), with trivial coefficients, the
        // coboundary of the dual of b1^i b2^j is (i - j) times the dual of
        // the even generator wedged onto b1^i b2^j
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_center(&alg);
        let c = RelativeComplex::new(alg, sub, Representation::trivial(&make_gl(1, 1).unwrap()))
            .unwrap();
        assert_eq!(c.quot.even_count, 1);
        for i in 0..=3usize {
            for j in 0..=3usize {
                let n = i + j;
                let mut m: Mono = vec![1; i]; // quotient index 1 = first odd
                m.extend(vec![2; j]);
                let col = c.monomial_index(n, &m).unwrap();
                let mut w: Mono = vec![0];
                w.extend(&m);
                let row = c.monomial_index(n + 1, &w).unwrap();
                let d = c.coboundary_full(n);
                let got = d.get(row, col);
                assert_eq!(got, rat(i as i64 - j as i64), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn cohomology_matches_oracle_gl11() {
        let alg = make_gl(1, 1).unwrap();
        let subs = vec![
            EvenSubalgebra::zero(),
            gl11_center(&alg),
            EvenSubalgebra::from_indices(&alg, &alg.even_indices()).unwrap(),
        ];
        for sub in subs {
            let c = RelativeComplex::new(
                alg.clone(),
                sub.clone(),
                Representation::trivial(&alg),
            )
            .unwrap();
            for n in 0..=4 {
                assert_eq!(
                    c.cohomology(n).dim,
                    oracle::oracle_cohomology(&alg, &sub, &Representation::trivial(&alg), n),
                    "degree {n}"
                );
            }
        }
    }

    #[test]
    fn sl2_relative_cartan_adjoint_vanishes() {
        let alg = make_sl2();
        let h = EvenSubalgebra::from_indices(&alg, &[1]).unwrap();
        let c = RelativeComplex::new(alg.clone(), h, Representation::adjoint(&alg)).unwrap();
        for n in 0..=4 {
            assert_eq!(c.cohomology(n).dim, 0, "degree {n}");
        }
    }

    #[test]
    fn representatives_are_cocycles_outside_the_image() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_center(&alg);
        let c = RelativeComplex::new(alg.clone(), sub, Representation::trivial(&alg)).unwrap();
        let h = c.cohomology(4);
        assert!(h.dim >= 1);
        for r in &h.representatives {
            assert!(h.kernel.contains_vec(r));
            assert!(!h.image.contains_vec(r));
        }
    }

    #[test]
    fn restriction_matrix_shape_and_pullback() {
        let alg = make_gl(1, 1).unwrap();
        let g0 = EvenSubalgebra::from_indices(&alg, &alg.even_indices()).unwrap();
        let center = gl11_center(&alg);
        let src =
            RelativeComplex::new(alg.clone(), g0, Representation::trivial(&alg)).unwrap();
        let dst =
            RelativeComplex::new(alg.clone(), center, Representation::trivial(&alg)).unwrap();
        let r = restriction_matrix(&src, &dst, 2);
        // purely odd degree-2 monomials exist in both; the pullback must be
        // nonzero and must send cocycles to cocycles
        assert!(!r.is_zero());
        let d_src = src.coboundary_full(2);
        let d_dst = dst.coboundary_full(2);
        let r3 = restriction_matrix(&src, &dst, 3);
        // naturality: d_dst . r = r_{n+1} . d_src on the equivariant part
        let lhs = d_dst.mul(&r);
        let rhs = r3.mul(&d_src);
        for b in src.equivariant(2).basis_full() {
            assert_eq!(lhs.mul_vec(&b), rhs.mul_vec(&b));
        }
    }
}
