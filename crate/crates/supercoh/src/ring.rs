//! Cup products, the truncated cohomology ring, Hilbert series, a degreewise
//! generator probe, and the Ext module with its ring action and annihilator
//! data.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{
    dual_tensor_module, EvenSubalgebra, LieSuperalgebra, Parity, Representation,
};
use crate::cochain::{hom_coord, mono_parity, CohomologyGroup, Mono, RelativeComplex};
use crate::linalg::{kernel_of_dense, Subspace};
use crate::rational::Rat;

fn parity_bit(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// Super parity of a cochain given in full Hom coordinates. Returns None for
/// the zero cochain; panics on a parity-mixed vector (the coboundary and the
/// equivariance constraints preserve parity, so every natural basis is
/// parity-homogeneous).
pub fn cochain_super_parity(complex: &RelativeComplex, n: usize, coords: &[Rat]) -> Option<usize> {
    let monos = complex.monomials(n);
    let dim_m = complex.module_dim();
    let mut parity = None;
    for (c, x) in coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mi = c / dim_m;
        let v = c % dim_m;
        let p = (mono_parity(&complex.quot, &monos[mi])
            + parity_bit(complex.rep.carrier_parity(v)))
            % 2;
        match parity {
            None => parity = Some(p),
            Some(q) => assert_eq!(q, p, "parity-mixed cochain"),
        }
    }
    parity
}

/// Cup product of a scalar cochain f (degree m, coefficients C) with a
/// cochain g (degree n) of `values`, both over the same pair (g, a):
///
/// (f . g)(w) = sum over m-element position sets S of
///     eps(S) * (-1)^{|g| |w_S|} * f(w_S) * g(w_{S^c}),
///
/// where eps(S) is the sign of unshuffling w into (w_S, w_{S^c}) — the
/// product over crossing pairs of the super exchange factor (-1)^{1+uv} —
/// and |g|, |w_S| are super parities.
pub fn cup(
    scalar: &RelativeComplex,
    m: usize,
    f: &[Rat],
    values: &RelativeComplex,
    n: usize,
    g: &[Rat],
) -> Vec<Rat> {
    assert_eq!(scalar.module_dim(), 1, "left factor must be scalar-valued");
    assert_eq!(f.len(), scalar.hom_dim(m), "left cochain length");
    assert_eq!(g.len(), values.hom_dim(n), "right cochain length");
    assert_eq!(
        scalar.quot.parities, values.quot.parities,
        "cup factors must live over the same quotient"
    );
    let dim_m = values.module_dim();
    let out_monos = values.monomials(m + n);
    let mut out = vec![Rat::zero(); out_monos.len() * dim_m];
    let g_parity = match cochain_super_parity(values, n, g) {
        None => return out,
        Some(p) => p,
    };
    let f_index: BTreeMap<Mono, usize> = scalar
        .monomials(m)
        .iter()
        .enumerate()
        .map(|(i, mo)| (mo.clone(), i))
        .collect();
    let g_index: BTreeMap<Mono, usize> = values
        .monomials(n)
        .iter()
        .enumerate()
        .map(|(i, mo)| (mo.clone(), i))
        .collect();
    let quot = &values.quot;

    for (wi, w) in out_monos.iter().enumerate() {
        let ps: Vec<usize> = w.iter().map(|&i| parity_bit(quot.parity(i))).collect();
        for s in position_subsets(w.len(), m) {
            let mut in_s = vec![false; w.len()];
            for &i in &s {
                in_s[i] = true;
            }
            // unshuffle sign: every pair (i < j) with i outside S and j
            // inside S crosses exactly once
            let mut flips = 0usize;
            for i in 0..w.len() {
                if in_s[i] {
                    continue;
                }
                for j in i + 1..w.len() {
                    if in_s[j] {
                        flips += 1 + ps[i] * ps[j];
                    }
                }
            }
            let ws: Mono = s.iter().map(|&i| w[i]).collect();
            let wsc: Mono = (0..w.len()).filter(|&i| !in_s[i]).map(|i| w[i]).collect();
            let fv = &f[f_index[&ws]];
            if fv.is_zero() {
                continue;
            }
            let ws_parity: usize = ws.iter().map(|&i| parity_bit(quot.parity(i))).sum();
            let sign_exp = flips + g_parity * ws_parity;
            let coef = if sign_exp % 2 == 0 {
                fv.clone()
            } else {
                -fv.clone()
            };
            let gi = g_index[&wsc];
            for v in 0..dim_m {
                let gv = &g[hom_coord(gi, v, dim_m)];
                if !gv.is_zero() {
                    out[hom_coord(wi, v, dim_m)] += &coef * gv;
                }
            }
        }
    }
    out
}

fn position_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(len: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(len, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(len, k, 0, &mut cur, &mut out);
    out
}

/// The cohomology ring H*(g, a; C) truncated at a degree bound:
/// representative bases and the full multiplication tables.
pub struct GradedRingTruncation {
    pub max_degree: usize,
    pub dims: Vec<usize>,
    pub groups: Vec<CohomologyGroup>,
    /// tables[(i,j)][a][b] = coordinates of rep_a (deg i) . rep_b (deg j)
    /// in the representative basis of H^{i+j}.
    pub tables: BTreeMap<(usize, usize), Vec<Vec<Vec<Rat>>>>,
}

/// Builds the truncated ring from a trivial-coefficient relative complex.
pub fn ring_truncation(complex: &RelativeComplex, max_degree: usize) -> GradedRingTruncation {
    assert_eq!(complex.module_dim(), 1, "ring truncation needs scalar coefficients");
    let groups: Vec<CohomologyGroup> = (0..=max_degree).map(|n| complex.cohomology(n)).collect();
    let dims: Vec<usize> = groups.iter().map(|g| g.dim).collect();
    let mut tables = BTreeMap::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            let mut table = Vec::with_capacity(groups[i].dim);
            for fa in &groups[i].representatives {
                let mut row = Vec::with_capacity(groups[j].dim);
                for gb in &groups[j].representatives {
                    let prod = cup(complex, i, fa, complex, j, gb);
                    row.push(groups[i + j].class_coordinates(&prod));
                }
                table.push(row);
            }
            tables.insert((i, j), table);
        }
    }
    GradedRingTruncation {
        max_degree,
        dims,
        groups,
        tables,
    }
}

/// Per-degree dimension list of the truncated ring.
pub fn hilbert_series(rt: &GradedRingTruncation) -> Vec<usize> {
    rt.dims.clone()
}

/// Minimal generators by degree: in each degree, a complement of the span of
/// products of positive lower-degree classes. `generated_by_half` reports
/// whether no generator appears above max_degree/2 (a finite-generation
/// signal within the truncation, nothing more).
pub struct GeneratorReport {
    pub generators: Vec<(usize, usize)>,
    pub generated_by_half: bool,
}

pub fn generator_probe(rt: &GradedRingTruncation) -> GeneratorReport {
    let mut generators = Vec::new();
    for n in 1..=rt.max_degree {
        let dim_n = rt.dims[n];
        if dim_n == 0 {
            continue;
        }
        let mut products: Vec<Vec<Rat>> = Vec::new();
        for i in 1..n {
            let j = n - i;
            if let Some(t) = rt.tables.get(&(i, j)) {
                for row in t {
                    for coords in row {
                        products.push(coords.clone());
                    }
                }
            }
        }
        let spanned = Subspace::from_spanning(dim_n, products);
        let fresh = dim_n - spanned.dim();
        if fresh > 0 {
            generators.push((n, fresh));
        }
    }
    let generated_by_half = generators
        .iter()
        .all(|&(deg, _)| 2 * deg <= rt.max_degree);
    GeneratorReport {
        generators,
        generated_by_half,
    }
}

/// Ext*(M, M) over (g, a) as a module for the truncated cohomology ring,
/// with degreewise annihilator data.
pub struct ExtModuleTruncation {
    pub max_degree: usize,
    pub ring: GradedRingTruncation,
    pub ext_dims: Vec<usize>,
    pub ext_groups: Vec<CohomologyGroup>,
    /// action[(i,j)][a][b] = coordinates of ring_rep_a (deg i) acting on
    /// ext_rep_b (deg j), in the representative basis of Ext^{i+j}.
    pub action: BTreeMap<(usize, usize), Vec<Vec<Vec<Rat>>>>,
    /// annihilator[i - 1] for ring degree i: classes of H^i killing every
    /// Ext^j with j <= max_degree - i, in ring-representative coordinates.
    pub annihilator: Vec<Subspace>,
}

/// Builds Ext*(M, M) = H*(g, a; M* (x) M) with the cup action of the ring.
pub fn ext_module(
    alg: &LieSuperalgebra,
    sub: &EvenSubalgebra,
    module: &Representation,
    max_degree: usize,
) -> ExtModuleTruncation {
    let scalar = RelativeComplex::new(
        alg.clone(),
        sub.clone(),
        Representation::trivial(alg),
    )
    .expect("scalar complex");
    let ring = ring_truncation(&scalar, max_degree);

    let coeffs = dual_tensor_module(alg, module);
    let values =
        RelativeComplex::new(alg.clone(), sub.clone(), coeffs).expect("Ext coefficient complex");
    let ext_groups: Vec<CohomologyGroup> =
        (0..=max_degree).map(|n| values.cohomology(n)).collect();
    let ext_dims: Vec<usize> = ext_groups.iter().map(|g| g.dim).collect();

    let mut action = BTreeMap::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            let mut table = Vec::with_capacity(ring.groups[i].dim);
            for fa in &ring.groups[i].representatives {
                let mut row = Vec::with_capacity(ext_groups[j].dim);
                for gb in &ext_groups[j].representatives {
                    let prod = cup(&scalar, i, fa, &values, j, gb);
                    row.push(ext_groups[i + j].class_coordinates(&prod));
                }
                table.push(row);
            }
            action.insert((i, j), table);
        }
    }

    // degreewise annihilator: x in H^i with x . Ext^j = 0 for all reachable j
    let mut annihilator = Vec::new();
    for i in 1..=max_degree {
        let dim_i = ring.dims[i];
        if dim_i == 0 {
            annihilator.push(Subspace::zero(0));
            continue;
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for j in 0..=max_degree - i {
            let table = &action[&(i, j)];
            for b in 0..ext_dims[j] {
                for t in 0..ext_dims[i + j] {
                    // constraint sum_a x_a table[a][b][t] = 0
                    rows.push((0..dim_i).map(|a| table[a][b][t].clone()).collect());
                }
            }
        }
        annihilator.push(kernel_of_dense(&rows, dim_i));
    }

    ExtModuleTruncation {
        max_degree,
        ring,
        ext_dims,
        ext_groups,
        action,
        annihilator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{induced_gl11_module, make_abelian, make_gl};
    use crate::rational::rat;
    use crate::linalg::RationalMatrix;

    fn gl11_g0(alg: &LieSuperalgebra) -> EvenSubalgebra {
        EvenSubalgebra::from_indices(alg, &alg.even_indices()).unwrap()
    }

    fn scalar_complex(alg: &LieSuperalgebra, sub: &EvenSubalgebra) -> RelativeComplex {
        RelativeComplex::new(alg.clone(), sub.clone(), Representation::trivial(alg)).unwrap()
    }

    /// All equivariant parity-homogeneous basis cochains of a degree.
    fn eq_basis_by_parity(c: &RelativeComplex, n: usize) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for b in c.equivariant(n).basis_full() {
            match cochain_super_parity(c, n, &b) {
                Some(0) | None => even.push(b),
                Some(_) => odd.push(b),
            }
        }
        (even, odd)
    }

    #[test]
    fn unit_acts_as_identity() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_g0(&alg);
        let c = scalar_complex(&alg, &sub);
        let one = vec![rat(1)]; // the constant cochain in degree 0
        for n in 0..=4 {
            for b in c.equivariant(n).basis_full() {
                assert_eq!(cup(&c, 0, &one, &c, n, &b), b);
            }
        }
    }

    #[test]
    fn leibniz_on_all_equivariant_basis_pairs() {
        let alg = make_gl(1, 1).unwrap();
        let center =
            EvenSubalgebra::new(&alg, vec![vec![rat(1), rat(1), rat(0), rat(0)]]).unwrap();
        for sub in [gl11_g0(&alg), center, EvenSubalgebra::zero()] {
            let c = scalar_complex(&alg, &sub);
            for m in 0..=2usize {
                for n in 0..=2usize {
                    let (fe, fo) = eq_basis_by_parity(&c, m);
                    let (ge, go) = eq_basis_by_parity(&c, n);
                    for f in fe.iter().chain(&fo) {
                        for g in ge.iter().chain(&go) {
                            check_leibniz(&c, m, f, n, g);
                        }
                    }
                }
            }
        }
    }

    fn full_vec_apply(d: &RationalMatrix, v: &[Rat]) -> Vec<Rat> {
        d.mul_vec(v)
    }

    fn check_leibniz(c: &RelativeComplex, m: usize, f: &[Rat], n: usize, g: &[Rat]) {
        let lhs = full_vec_apply(&c.coboundary_full(m + n), &cup(c, m, f, c, n, g));
        let df = full_vec_apply(&c.coboundary_full(m), f);
        let dg = full_vec_apply(&c.coboundary_full(n), g);
        let mut rhs = cup(c, m + 1, &df, c, n, g);
        let t2 = cup(c, m, f, c, n + 1, &dg);
        for (r, t) in rhs.iter_mut().zip(t2) {
            if m % 2 == 0 {
                *r += t;
            } else {
                *r -= t;
            }
        }
        assert_eq!(lhs, rhs, "Leibniz fails at degrees ({m},{n})");
    }

    #[test]
    fn graded_commutativity_with_super_sign() {
        let alg = make_gl(1, 1).unwrap();
        let center =
            EvenSubalgebra::new(&alg, vec![vec![rat(1), rat(1), rat(0), rat(0)]]).unwrap();
        let c = scalar_complex(&alg, &center);
        for m in 0..=2usize {
            for n in 0..=2usize {
                let (fe, fo) = eq_basis_by_parity(&c, m);
                let (ge, go) = eq_basis_by_parity(&c, n);
                for f in fe.iter().chain(&fo) {
                    for g in ge.iter().chain(&go) {
                        let fp = cochain_super_parity(&c, m, f).unwrap_or(0);
                        let gp = cochain_super_parity(&c, n, g).unwrap_or(0);
                        let fg = cup(&c, m, f, &c, n, g);
                        let gf = cup(&c, n, g, &c, m, f);
                        let sign = (m * n + fp * gp) % 2;
                        let expected: Vec<Rat> = gf
                            .iter()
                            .map(|x| if sign == 0 { x.clone() } else { -x.clone() })
                            .collect();
                        assert_eq!(fg, expected, "degrees ({m},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn ring_gl11_g0_polynomial_on_one_generator() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_g0(&alg);
        let c = scalar_complex(&alg, &sub);
        let rt = ring_truncation(&c, 8);
        assert_eq!(hilbert_series(&rt), vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
        let report = generator_probe(&rt);
        assert_eq!(report.generators, vec![(2, 1)]);
        assert!(report.generated_by_half);
        // the degree-2 generator squared is nonzero in degree 4
        let sq = &rt.tables[&(2, 2)][0][0];
        assert!(sq.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn ring_purely_odd_line_is_polynomial() {
        let alg = make_abelian(&[Parity::Odd]);
        let c = scalar_complex(&alg, &EvenSubalgebra::zero());
        let rt = ring_truncation(&c, 5);
        assert_eq!(hilbert_series(&rt), vec![1; 6]);
        let report = generator_probe(&rt);
        assert_eq!(report.generators, vec![(1, 1)]);
    }

    #[test]
    fn ext_of_trivial_module_is_the_ring() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_g0(&alg);
        let ext = ext_module(&alg, &sub, &Representation::trivial(&alg), 4);
        assert_eq!(ext.ext_dims, ext.ring.dims);
        // the ring acts faithfully on itself here: annihilators vanish in
        // every positive degree with a nonzero component
        for (k, ann) in ext.annihilator.iter().enumerate() {
            let i = k + 1;
            if ext.ring.dims[i] > 0 {
                assert!(ann.is_zero(), "degree {i}");
            }
        }
    }

    #[test]
    fn induced_module_has_vanishing_higher_ext() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_g0(&alg);
        let m = induced_gl11_module(&alg).unwrap();
        let ext = ext_module(&alg, &sub, &m, 4);
        assert!(ext.ext_dims[0] > 0);
        for n in 1..=4 {
            assert_eq!(ext.ext_dims[n], 0, "Ext^{n}");
        }
        // everything positive annihilates: the annihilator is all of H^i
        for (k, ann) in ext.annihilator.iter().enumerate() {
            let i = k + 1;
            assert_eq!(ann.dim(), ext.ring.dims[i], "degree {i}");
        }
    }

    #[test]
    fn action_tables_are_associative() {
        let alg = make_gl(1, 1).unwrap();
        let sub = gl11_g0(&alg);
        let ext = ext_module(&alg, &sub, &Representation::adjoint(&alg), 4);
        let rt = &ext.ring;
        // (x.y).e = x.(y.e) for all table triples within the bound
        for i in 0..=4usize {
            for j in 0..=4 - i {
                for k in 0..=4 - i - j {
                    for a in 0..rt.dims[i] {
                        for b in 0..rt.dims[j] {
                            for e in 0..ext.ext_dims[k] {
                                let xy = &rt.tables[&(i, j)][a][b];
                                let ye = &ext.action[&(j, k)][b][e];
                                // (x.y).e via the (i+j, k) table
                                let mut lhs = vec![Rat::zero(); ext.ext_dims[i + j + k]];
                                for (t, ct) in xy.iter().enumerate() {
                                    if ct.is_zero() {
                                        continue;
                                    }
                                    for (s, v) in
                                        ext.action[&(i + j, k)][t][e].iter().enumerate()
                                    {
                                        lhs[s] += ct * v;
                                    }
                                }
                                // x.(y.e) via the (i, j+k) table
                                let mut rhs = vec![Rat::zero(); ext.ext_dims[i + j + k]];
                                for (t, ct) in ye.iter().enumerate() {
                                    if ct.is_zero() {
                                        continue;
                                    }
                                    for (s, v) in
                                        ext.action[&(i, j + k)][a][t].iter().enumerate()
                                    {
                                        rhs[s] += ct * v;
                                    }
                                }
                                assert_eq!(lhs, rhs, "triple ({i},{j},{k})");
                            }
                        }
                    }
                }
            }
        }
    }
}
