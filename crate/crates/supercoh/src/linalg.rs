//! Exact rational linear algebra: sparse matrices, fraction-free (Bareiss)
//! elimination, and the subspace lattice (sum, intersection, preimage,
//! quotients) that the spectral-sequence page formulas need.
//!
//! Subspaces are always kept in reduced-echelon canonical form, so equality
//! of subspaces is equality of representations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{to_i128_pair, Rat};

/// Sparse matrix over Q. No zero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_dense(d: &[Vec<Rat>]) -> Self {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        let mut m = Self::zero(rows, cols);
        for (i, row) in d.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rat) {
        if v.is_zero() {
            return;
        }
        assert!(i < self.rows && j < self.cols, "index out of range");
        let e = self.entries.entry((i, j)).or_insert_with(Rat::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut d = vec![vec![Rat::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    /// Matrix-vector product with a dense vector.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut out = vec![Rat::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] += a * &v[j];
            }
        }
        out
    }

    /// Sparse product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        // group self by column for cache-friendly accumulation
        let mut by_col: BTreeMap<usize, Vec<(usize, &Rat)>> = BTreeMap::new();
        for (&(i, k), v) in &self.entries {
            by_col.entry(k).or_default().push((i, v));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for (&(k, j), b) in &other.entries {
            if let Some(col) = by_col.get(&k) {
                for (i, a) in col {
                    out.add_to(*i, j, &(*a * b));
                }
            }
        }
        out
    }

    /// Exact check that `self * other == 0`, with an integer fast path for
    /// the large coboundary-composition matrices whose entries are small
    /// integers.
    pub fn composition_is_zero(&self, other: &Self) -> bool {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        if let Some(z) = self.composition_is_zero_i128(other) {
            return z;
        }
        self.mul(other).is_zero()
    }

    fn composition_is_zero_i128(&self, other: &Self) -> Option<bool> {
        const LIMIT: i128 = 1 << 40;
        let small = |m: &Self| -> Option<Vec<((usize, usize), i128)>> {
            m.entries
                .iter()
                .map(|(&k, v)| {
                    let (n, d) = to_i128_pair(v)?;
                    if d != 1 || n.abs() >= LIMIT {
                        None
                    } else {
                        Some((k, n))
                    }
                })
                .collect()
        };
        let a = small(self)?;
        let b = small(other)?;
        let mut a_by_col: BTreeMap<usize, Vec<(usize, i128)>> = BTreeMap::new();
        for ((i, k), v) in a {
            a_by_col.entry(k).or_default().push((i, v));
        }
        let mut b_by_col: BTreeMap<usize, Vec<(usize, i128)>> = BTreeMap::new();
        for ((k, j), v) in b {
            b_by_col.entry(j).or_default().push((k, v));
        }
        let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
        for col in b_by_col.values() {
            acc.clear();
            for (k, bv) in col {
                if let Some(avs) = a_by_col.get(k) {
                    for (i, av) in avs {
                        let p = av.checked_mul(*bv)?;
                        let e = acc.entry(*i).or_insert(0);
                        *e = e.checked_add(p)?;
                    }
                }
            }
            if acc.values().any(|v| *v != 0) {
                return Some(false);
            }
        }
        Some(true)
    }

    pub fn rank(&self) -> usize {
        rref(self.to_dense()).1.len()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_of_dense(&self.to_dense(), self.cols)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.rows, self.transpose().to_dense())
    }
}

/// Reduced row echelon form of a dense matrix. Forward elimination is
/// fraction-free (Bareiss one-step) over big integers; back substitution
/// normalizes over Q. Returns the nonzero rows and the pivot columns.
pub fn rref(dense: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let nrows = dense.len();
    let ncols = dense.first().map_or(0, |r| r.len());
    if nrows == 0 || ncols == 0 {
        return (Vec::new(), Vec::new());
    }
    // clear denominators row by row
    let mut m: Vec<Vec<BigInt>> = dense
        .into_iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for v in &row {
                if !v.is_zero() {
                    lcm = num_integer::lcm(lcm, v.denom().clone());
                }
            }
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in (r + 1)..nrows {
            if m[i][c].is_zero() {
                // still must rescale to keep the Bareiss invariant
                for j in (c + 1)..ncols {
                    let t = &m[r][c] * &m[i][j];
                    m[i][j] = t / &prev;
                }
            } else {
                for j in (c + 1)..ncols {
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    // back substitution over Q
    let mut rows: Vec<Vec<Rat>> = m
        .into_iter()
        .take(pivots.len())
        .map(|row| row.into_iter().map(Rat::from_integer).collect())
        .collect();
    for k in (0..pivots.len()).rev() {
        let pc = pivots[k];
        let lead = rows[k][pc].clone();
        for v in rows[k].iter_mut() {
            *v /= &lead;
        }
        for i in 0..k {
            let f = rows[i][pc].clone();
            if f.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(k);
            let (ri, rk) = (&mut head[i], &tail[0]);
            for j in pc..rows_len(rk) {
                let t = &f * &rk[j];
                ri[j] -= t;
            }
        }
    }
    (rows, pivots)
}

fn rows_len(r: &[Rat]) -> usize {
    r.len()
}

pub fn kernel_of_dense(dense: &[Vec<Rat>], ncols: usize) -> Subspace {
    let (rows, pivots) = rref(dense.to_vec());
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for fc in 0..ncols {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[fc] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[r][fc].clone();
        }
        basis.push(v);
    }
    Subspace::from_spanning(ncols, basis)
}

/// Solves `sum_i x_i a_i = b` for columns `a_i`; returns `None` when `b` is
/// not in their span. Deterministic particular solution (free variables 0).
pub fn solve_columns(columns: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let d = b.len();
    let k = columns.len();
    let mut aug = vec![vec![Rat::zero(); k + 1]; d];
    for (j, col) in columns.iter().enumerate() {
        assert_eq!(col.len(), d, "column length mismatch");
        for i in 0..d {
            aug[i][j] = col[i].clone();
        }
    }
    for i in 0..d {
        aug[i][k] = b[i].clone();
    }
    let (rows, pivots) = rref(aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][k].clone();
    }
    Some(x)
}

/// A linear subspace of Q^ambient in reduced-echelon canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        let (basis, _) = rref(vectors);
        Subspace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduces `v` against the echelon basis; the remainder is zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut v = v.to_vec();
        for row in &self.basis {
            let pc = pivot_of(row).expect("canonical basis row cannot be zero");
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Coordinates of `v` in the canonical basis, or None when `v` is not in
    /// the subspace. Because the basis is fully reduced, the coordinate along
    /// each basis row is the entry of `v` at that row's pivot column.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let coords: Vec<Rat> = self
            .basis
            .iter()
            .map(|row| {
                let pc = pivot_of(row).expect("canonical basis row cannot be zero");
                v[pc].clone()
            })
            .collect();
        let mut r = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (x, b) in r.iter_mut().zip(row.iter()) {
                    *x -= c * b;
                }
            }
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vec(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, vecs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // solve U^T a = V^T b via the kernel of [U^T | -V^T]
        let k = self.dim();
        let l = other.dim();
        let mut m = vec![vec![Rat::zero(); k + l]; self.ambient];
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[i][j] = u[i].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[i][k + j] = -v[i].clone();
            }
        }
        let ker = kernel_of_dense(&m, k + l);
        let vecs = ker
            .basis
            .iter()
            .map(|ab| {
                let mut x = vec![Rat::zero(); self.ambient];
                for (j, u) in self.basis.iter().enumerate() {
                    if !ab[j].is_zero() {
                        for i in 0..self.ambient {
                            x[i] += &ab[j] * &u[i];
                        }
                    }
                }
                x
            })
            .collect();
        Subspace::from_spanning(self.ambient, vecs)
    }

    /// Basis of the annihilator { c : b . c = 0 for all basis vectors b }.
    /// Over Q with the standard form this cuts out exactly `self`.
    pub fn annihilator(&self) -> Vec<Vec<Rat>> {
        let ker = kernel_of_dense(&self.basis, self.ambient);
        ker.basis
    }

    /// `{ x : m x in self }` for an `ambient x n` matrix `m`.
    pub fn preimage(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.rows, self.ambient, "ambient mismatch");
        if self.dim() == self.ambient {
            return Subspace::full(m.cols);
        }
        let ann = self.annihilator();
        // rows of (ann * m); kernel of that stack
        let mt = m.transpose();
        let stacked: Vec<Vec<Rat>> = ann.iter().map(|c| mt.mul_vec(c)).collect();
        kernel_of_dense(&stacked, m.cols)
    }

    /// dim(self / other); panics unless `other` is contained in `self`.
    pub fn quotient_dim(&self, other: &Subspace) -> usize {
        assert!(self.contains(other), "quotient by a non-subspace");
        self.dim() - other.dim()
    }

    /// Image of this subspace under `m`.
    pub fn map_through(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.cols, self.ambient, "ambient mismatch");
        let vecs = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_spanning(m.rows, vecs)
    }

    /// Deterministic representatives of `self / other` (`other` need not be
    /// contained in `self`; the quotient is by the intersection). Returned
    /// vectors are fully reduced against `other` and echelon-normalized.
    pub fn complement_of(&self, other: &Subspace) -> Vec<Vec<Rat>> {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut acc = IncrementalRref::new(self.ambient);
        for v in other.basis.iter() {
            acc.insert(v.clone());
        }
        let mut reps = Vec::new();
        for v in &self.basis {
            if let Some(reduced) = acc.insert(v.clone()) {
                reps.push(reduced);
            }
        }
        reps
    }
}

fn pivot_of(row: &[Rat]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Incrementally maintained reduced-echelon span; used for deterministic
/// complement construction.
pub struct IncrementalRref {
    ambient: usize,
    rows: Vec<Vec<Rat>>, // sorted by pivot, fully reduced
}

impl IncrementalRref {
    pub fn new(ambient: usize) -> Self {
        IncrementalRref {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector. Returns the normalized remainder when the vector
    /// enlarges the span, `None` when it was already contained.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        for row in &self.rows {
            let pc = pivot_of(row).unwrap();
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &f * r;
                }
            }
        }
        let pc = pivot_of(&v)?;
        let lead = v[pc].clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        // keep full reduction: clear the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for (x, r) in row.iter_mut().zip(v.iter()) {
                    *x -= &f * r;
                }
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pc, |r| pivot_of(r).unwrap())
            .unwrap_err();
        self.rows.insert(pos, v.clone());
        Some(v)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pc = pivot_of(row).unwrap();
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &f * r;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Coordinates of `z` in the quotient spanned by `reps` modulo `modulus`.
/// Panics if `z` is not in span(reps) + modulus.
pub fn quotient_coords(z: &[Rat], reps: &[Vec<Rat>], modulus: &Subspace) -> Vec<Rat> {
    let mut cols: Vec<Vec<Rat>> = reps.to_vec();
    cols.extend(modulus.basis().iter().cloned());
    let x = solve_columns(&cols, z).expect("vector not in span(reps) + modulus");
    x.into_iter().take(reps.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn dm(rows: &[&[i64]]) -> RationalMatrix {
        let d: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        RationalMatrix::from_dense(&d)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(dm(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(dm(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(RationalMatrix::zero(0, 0).rank(), 0);
        assert_eq!(RationalMatrix::zero(3, 4).rank(), 0);
    }

    #[test]
    fn hilbert_3x3_is_nonsingular() {
        // cofactor-expansion oracle: det = 1/2160, so rank 3
        let h: Vec<Vec<Rat>> = (1..=3i64)
            .map(|i| (1..=3i64).map(|j| ratio(1, i + j - 1)).collect())
            .collect();
        let det = {
            let d = |i: usize, j: usize| h[i][j].clone();
            d(0, 0) * (d(1, 1) * d(2, 2) - d(1, 2) * d(2, 1))
                - d(0, 1) * (d(1, 0) * d(2, 2) - d(1, 2) * d(2, 0))
                + d(0, 2) * (d(1, 0) * d(2, 1) - d(1, 1) * d(2, 0))
        };
        assert_eq!(det, ratio(1, 2160));
        assert_eq!(RationalMatrix::from_dense(&h).rank(), 3);
    }

    #[test]
    fn kernel_and_image() {
        let m = dm(&[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vec(&[rat(1), rat(-1)]));
        assert_eq!(RationalMatrix::zero(2, 3).image().dim(), 0);
        assert_eq!(m.kernel().dim() + m.rank(), m.cols);
    }

    #[test]
    fn lattice_examples() {
        let e1 = Subspace::from_spanning(2, vec![vec![rat(1), rat(0)]]);
        let e2 = Subspace::from_spanning(2, vec![vec![rat(0), rat(1)]]);
        let diag = Subspace::from_spanning(2, vec![vec![rat(1), rat(1)]]);
        assert_eq!(e1.intersect(&e2).dim(), 0);
        assert_eq!(e1.sum(&diag), Subspace::full(2));
        let id = RationalMatrix::identity(2);
        assert_eq!(diag.preimage(&id), diag);
        // dim(u ∩ v) + dim(u + v) = dim u + dim v
        assert_eq!(
            e1.intersect(&diag).dim() + e1.sum(&diag).dim(),
            e1.dim() + diag.dim()
        );
    }

    #[test]
    fn preimage_general() {
        // m: Q^3 -> Q^2, (x,y,z) -> (x+y, z); preimage of span{(1,0)} is {z=0}
        let m = dm(&[&[1, 1, 0], &[0, 0, 1]]);
        let w = Subspace::from_spanning(2, vec![vec![rat(1), rat(0)]]);
        let p = w.preimage(&m);
        assert_eq!(p.dim(), 2);
        assert!(p.contains_vec(&[rat(1), rat(0), rat(0)]));
        assert!(p.contains_vec(&[rat(0), rat(1), rat(0)]));
        assert!(!p.contains_vec(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn complement_and_quotient_coords() {
        let full = Subspace::full(3);
        let sub = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)]]);
        let reps = full.complement_of(&sub);
        assert_eq!(reps.len(), 2);
        let z = vec![rat(2), rat(3), rat(5)];
        let c = quotient_coords(&z, &reps, &sub);
        // reconstruct z modulo sub
        let mut w = vec![Rat::zero(); 3];
        for (ci, r) in c.iter().zip(reps.iter()) {
            for (wi, ri) in w.iter_mut().zip(r.iter()) {
                *wi += ci * ri;
            }
        }
        let diff: Vec<Rat> = z.iter().zip(w.iter()).map(|(a, b)| a - b).collect();
        assert!(sub.contains_vec(&diff));
    }

    #[test]
    fn solve_columns_basic() {
        let cols = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        let x = solve_columns(&cols, &[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        assert!(solve_columns(&[vec![rat(1), rat(0)]], &[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn composition_zero_paths_agree() {
        let a = dm(&[&[1, 2], &[2, 4]]);
        let b = dm(&[&[2, -4], &[-1, 2]]);
        assert!(a.composition_is_zero(&b));
        let c = dm(&[&[1, 0], &[0, 1]]);
        assert!(!a.composition_is_zero(&c));
    }
}
