//! Lie superalgebras by structure constants, even subalgebras, quotient
//! bases, and finite-dimensional representations, with full axiom checking.
//!
//! Conventions frozen here and relied on everywhere else:
//! - structure constants are stored only for basis pairs `i <= j`; the
//!   `i > j` bracket is derived from super anticommutativity;
//! - quotient bases list all even representatives before all odd ones;
//! - module carriers list their even basis vectors first.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::{solve_columns, IncrementalRref, RationalMatrix};
use crate::rational::{rat, Rat};

/// Z2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_u8(v: u8) -> Result<Parity, String> {
        match v {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(format!("parity must be 0 or 1, got {v}")),
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Sign (-1)^{x y} for parities x, y, as a rational +-1.
pub fn super_sign(x: Parity, y: Parity) -> Rat {
    if x == Parity::Odd && y == Parity::Odd {
        rat(-1)
    } else {
        rat(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub parity: Parity,
}

/// A single broken axiom, with the offending basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Grading { i: usize, j: usize, k: usize },
    AntiCommutativity { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    ParityBlock { gen: usize, row: usize, col: usize },
    Homomorphism { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { i, j, k } => {
                write!(f, "grading violated: [x{i}, x{j}] has a component on x{k}")
            }
            Violation::AntiCommutativity { i, j } => {
                write!(f, "super anticommutativity violated on pair (x{i}, x{j})")
            }
            Violation::Jacobi { i, j, k } => {
                write!(f, "super Jacobi violated on triple (x{i}, x{j}, x{k})")
            }
            Violation::ParityBlock { gen, row, col } => write!(
                f,
                "representation of x{gen} breaks the parity block structure at ({row}, {col})"
            ),
            Violation::Homomorphism { i, j } => write!(
                f,
                "homomorphism law fails on pair (x{i}, x{j}): rho([x,y]) != [rho(x), rho(y)]"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "all axioms hold")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Errors distinct from axiom failures: malformed input documents.
#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("empty basis")]
    EmptyBasis,
    #[error("bracket table references basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("bracket table entry for pair ({0}, {1}) has i > j; store only i <= j")]
    UnorderedPair(usize, usize),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("{0}")]
    Malformed(String),
}

/// A finite-dimensional Lie superalgebra over Q given by structure
/// constants on an ordered homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    pub name: String,
    basis: Vec<BasisVector>,
    /// c_{ij}^k for i <= j only; each value is a full coefficient vector.
    brackets: BTreeMap<(usize, usize), Vec<Rat>>,
    /// User-supplied assertion that g is classical (reductive G_0); gates
    /// only the E_2-identification reporting, never the computations.
    pub classical: bool,
}

impl LieSuperalgebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<BasisVector>,
        brackets: BTreeMap<(usize, usize), Vec<Rat>>,
        classical: bool,
    ) -> Result<Self, SchemaError> {
        if basis.is_empty() {
            return Err(SchemaError::EmptyBasis);
        }
        let dim = basis.len();
        for (&(i, j), c) in &brackets {
            if i > j {
                return Err(SchemaError::UnorderedPair(i, j));
            }
            if j >= dim {
                return Err(SchemaError::IndexOutOfRange(j));
            }
            if c.len() != dim {
                return Err(SchemaError::Malformed(format!(
                    "coefficient vector for pair ({i}, {j}) has length {} != {dim}",
                    c.len()
                )));
            }
        }
        Ok(LieSuperalgebra {
            name: name.into(),
            basis,
            brackets,
            classical,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parity(i) == Parity::Even)
            .collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parity(i) == Parity::Odd)
            .collect()
    }

    /// [x_i, x_j] as a coefficient vector, for any index order.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Rat> {
        if i <= j {
            self.brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Rat::zero(); self.dim()])
        } else {
            // [x_i, x_j] = -(-1)^{ij} [x_j, x_i]
            let s = -super_sign(self.parity(i), self.parity(j));
            self.bracket(j, i).into_iter().map(|c| c * &s).collect()
        }
    }

    /// Bracket of two arbitrary coefficient vectors. Correct for the
    /// bilinear extension; inputs need not be homogeneous only when one of
    /// them is (callers keep everything homogeneous).
    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let b = self.bracket(i, j);
                for (o, bk) in out.iter_mut().zip(b.iter()) {
                    *o += xi * yj * bk;
                }
            }
        }
        out
    }

    /// Checks grading, super anticommutativity on stored diagonal pairs,
    /// and the super Jacobi identity on all basis triples.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let pij = self.parity(i) + self.parity(j);
                for (k, c) in self.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() && self.parity(k) != pij {
                        report.violations.push(Violation::Grading { i, j, k });
                    }
                }
            }
        }
        // [x,y] + (-1)^{xy}[y,x] = 0; with the i <= j storage the only
        // self-consistency content is on diagonal pairs of odd vectors
        // ([x,x] must vanish for even x) and even diagonal pairs.
        for i in 0..n {
            let b = self.bracket(i, i);
            let doubled_vanishes = self.parity(i) == Parity::Even;
            if doubled_vanishes && b.iter().any(|c| !c.is_zero()) {
                report.violations.push(Violation::AntiCommutativity { i, j: i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.jacobi_holds(i, j, k) {
                        report.violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        report
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        // [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]]
        let e = |idx: usize| {
            let mut v = vec![Rat::zero(); self.dim()];
            v[idx] = rat(1);
            v
        };
        let lhs = self.bracket_vec(&e(i), &self.bracket(j, k));
        let a = self.bracket_vec(&self.bracket(i, j), &e(k));
        let b = self.bracket_vec(&e(j), &self.bracket(i, k));
        let s = super_sign(self.parity(i), self.parity(j));
        lhs.iter()
            .zip(a.iter().zip(b.iter()))
            .all(|(l, (x, y))| l == &(x + &s * y))
    }

    /// The even part as a standalone (purely even) Lie superalgebra,
    /// together with the list of ambient indices it came from.
    pub fn even_part(&self) -> (LieSuperalgebra, Vec<usize>) {
        let idx = self.even_indices();
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let basis = idx
            .iter()
            .map(|&i| BasisVector {
                name: self.basis[i].name.clone(),
                parity: Parity::Even,
            })
            .collect();
        let mut brackets = BTreeMap::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if a > b {
                    continue;
                }
                let c = self.bracket(i, j);
                let mut v = vec![Rat::zero(); idx.len()];
                let mut nonzero = false;
                for (k, ck) in c.iter().enumerate() {
                    if !ck.is_zero() {
                        // brackets of even elements stay even
                        let p = pos[&k];
                        v[p] = ck.clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    brackets.insert((a, b), v);
                }
            }
        }
        let alg = LieSuperalgebra::new(
            format!("{}_even", self.name),
            basis,
            brackets,
            self.classical,
        )
        .expect("even part construction");
        (alg, idx)
    }
}

/// Default cap on m+n for `make_gl`.
pub const GL_SIZE_CAP: usize = 6;

/// gl(m|n): all (m+n) x (m+n) matrix units, even basis vectors first.
pub fn make_gl(m: usize, n: usize) -> Result<LieSuperalgebra, SchemaError> {
    make_gl_capped(m, n, GL_SIZE_CAP)
}

pub fn make_gl_capped(m: usize, n: usize, cap: usize) -> Result<LieSuperalgebra, SchemaError> {
    if m < 1 || n < 1 {
        return Err(SchemaError::Malformed("gl(m|n) requires m, n >= 1".into()));
    }
    if m + n > cap {
        return Err(SchemaError::SizeCap(format!(
            "gl({m}|{n}) has m+n = {} > cap {cap}",
            m + n
        )));
    }
    let d = m + n;
    // even units first (a, b in the same block), then odd units
    let mut units: Vec<(usize, usize)> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if (a < m) == (b < m) {
                units.push((a, b));
            }
        }
    }
    for a in 0..d {
        for b in 0..d {
            if (a < m) != (b < m) {
                units.push((a, b));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> =
        units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let basis: Vec<BasisVector> = units
        .iter()
        .map(|&(a, b)| BasisVector {
            name: format!("e{}{}", a + 1, b + 1),
            parity: if (a < m) == (b < m) {
                Parity::Even
            } else {
                Parity::Odd
            },
        })
        .collect();
    let dim = basis.len();
    let mut brackets = BTreeMap::new();
    for i in 0..dim {
        for j in i..dim {
            let (a, b) = units[i];
            let (c, e) = units[j];
            // [E_ab, E_ce] = delta_bc E_ae - (-1)^{p q} delta_ea E_cb
            let mut v = vec![Rat::zero(); dim];
            if b == c {
                v[index[&(a, e)]] += rat(1);
            }
            if e == a {
                let s = super_sign(basis[i].parity, basis[j].parity);
                v[index[&(c, b)]] -= s;
            }
            if v.iter().any(|x| !x.is_zero()) {
                brackets.insert((i, j), v);
            }
        }
    }
    LieSuperalgebra::new(format!("gl({m}|{n})"), basis, brackets, true)
}

/// sl(2) as a purely even superalgebra with basis (e, h, f).
pub fn make_sl2() -> LieSuperalgebra {
    let basis = ["e", "h", "f"]
        .iter()
        .map(|&s| BasisVector {
            name: s.into(),
            parity: Parity::Even,
        })
        .collect();
    let mut brackets = BTreeMap::new();
    // [e,h] = -2e, [e,f] = h, [h,f] = -2f
    brackets.insert((0, 1), vec![rat(-2), rat(0), rat(0)]);
    brackets.insert((0, 2), vec![rat(0), rat(1), rat(0)]);
    brackets.insert((1, 2), vec![rat(0), rat(0), rat(-2)]);
    LieSuperalgebra::new("sl(2)", basis, brackets, true).expect("sl2 construction")
}

/// An abelian superalgebra with the given parities (all brackets zero).
pub fn make_abelian(parities: &[Parity]) -> LieSuperalgebra {
    let basis = parities
        .iter()
        .enumerate()
        .map(|(i, &p)| BasisVector {
            name: format!("x{i}"),
            parity: p,
        })
        .collect();
    LieSuperalgebra::new("abelian", basis, BTreeMap::new(), true).expect("abelian construction")
}

/// The center of g intersected with the even part: even vectors commuting
/// with the whole algebra, found by an exact kernel computation.
pub fn center_subalgebra(alg: &LieSuperalgebra) -> EvenSubalgebra {
    let evens = alg.even_indices();
    let d = alg.dim();
    // unknowns: coefficients along the even basis vectors
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for j in 0..d {
        for k in 0..d {
            let row: Vec<Rat> = evens.iter().map(|&i| alg.bracket(i, j)[k].clone()).collect();
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = crate::linalg::kernel_of_dense(&rows, evens.len());
    let vectors: Vec<Vec<Rat>> = kernel
        .basis()
        .iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); d];
            for (p, &i) in evens.iter().enumerate() {
                v[i] = c[p].clone();
            }
            v
        })
        .collect();
    EvenSubalgebra::new(alg, vectors).expect("the even center is an even subalgebra")
}

/// The span of the even standard basis vectors whose adjoint action is
/// diagonal on the basis. For the built-in gl(m|n) and sl(2) presets this is
/// exactly the usual Cartan subalgebra of diagonal elements.
pub fn cartan_subalgebra(alg: &LieSuperalgebra) -> EvenSubalgebra {
    let d = alg.dim();
    let diagonal = |i: usize| -> bool {
        (0..d).all(|j| {
            alg.bracket(i, j)
                .iter()
                .enumerate()
                .all(|(k, c)| k == j || c.is_zero())
        })
    };
    let mut vectors = Vec::new();
    for i in alg.even_indices() {
        if diagonal(i) {
            let mut v = vec![Rat::zero(); d];
            v[i] = rat(1);
            vectors.push(v);
        }
    }
    EvenSubalgebra::new(alg, vectors).expect("diagonal basis vectors close under the bracket")
}

/// An even subalgebra of the ambient algebra, spanned by explicit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSubalgebra {
    vectors: Vec<Vec<Rat>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SubalgebraError {
    #[error("subalgebra vector {0} has an odd component")]
    OddComponent(usize),
    #[error("subalgebra is not closed under the bracket (vectors {0}, {1})")]
    NotClosed(usize, usize),
    #[error("subalgebra vector {0} has length {1}, ambient dimension is {2}")]
    DimensionMismatch(usize, usize, usize),
    #[error("subalgebras are not nested")]
    NotNested,
}

impl EvenSubalgebra {
    /// Checks evenness and bracket closure before accepting the span.
    pub fn new(alg: &LieSuperalgebra, vectors: Vec<Vec<Rat>>) -> Result<Self, SubalgebraError> {
        for (n, v) in vectors.iter().enumerate() {
            if v.len() != alg.dim() {
                return Err(SubalgebraError::DimensionMismatch(n, v.len(), alg.dim()));
            }
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() && alg.parity(i) == Parity::Odd {
                    return Err(SubalgebraError::OddComponent(n));
                }
            }
        }
        let mut span = IncrementalRref::new(alg.dim());
        for v in &vectors {
            span.insert(v.clone());
        }
        for (i, x) in vectors.iter().enumerate() {
            for (j, y) in vectors.iter().enumerate() {
                let b = alg.bracket_vec(x, y);
                if !span.contains(&b) {
                    return Err(SubalgebraError::NotClosed(i, j));
                }
            }
        }
        Ok(EvenSubalgebra { vectors })
    }

    pub fn from_indices(
        alg: &LieSuperalgebra,
        indices: &[usize],
    ) -> Result<Self, SubalgebraError> {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); alg.dim()];
                if i < alg.dim() {
                    v[i] = rat(1);
                }
                v
            })
            .collect();
        EvenSubalgebra::new(alg, vectors)
    }

    pub fn zero() -> Self {
        EvenSubalgebra { vectors: vec![] }
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn dim(&self, alg: &LieSuperalgebra) -> usize {
        let mut span = IncrementalRref::new(alg.dim());
        for v in &self.vectors {
            span.insert(v.clone());
        }
        span.dim()
    }

    /// True when every vector of `self` lies in the span of `other`.
    pub fn contained_in(&self, alg: &LieSuperalgebra, other: &EvenSubalgebra) -> bool {
        let mut span = IncrementalRref::new(alg.dim());
        for v in &other.vectors {
            span.insert(v.clone());
        }
        self.vectors.iter().all(|v| span.contains(v))
    }
}

/// Ordered basis of g/a (even representatives first) plus the projection
/// g -> g/a killing exactly span(a).
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    /// Representatives as coefficient vectors in g.
    pub reps: Vec<Vec<Rat>>,
    pub even_count: usize,
    /// (dim g/a) x (dim g) projection matrix.
    pub projection: RationalMatrix,
    pub parities: Vec<Parity>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn parity(&self, rep: usize) -> Parity {
        self.parities[rep]
    }

    /// Coordinates of a g-vector in the quotient.
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.projection.mul_vec(v)
    }
}

/// Extends a basis of `a` to a basis of g by standard basis vectors, taking
/// even candidates first, and builds the projection.
pub fn quotient_basis(alg: &LieSuperalgebra, a: &EvenSubalgebra) -> QuotientBasis {
    let d = alg.dim();
    let mut span = IncrementalRref::new(d);
    let mut a_basis: Vec<Vec<Rat>> = Vec::new();
    for v in a.vectors() {
        if span.insert(v.clone()).is_some() {
            a_basis.push(v.clone());
        }
    }
    let mut reps = Vec::new();
    let mut parities = Vec::new();
    let mut even_count = 0;
    for &i in alg.even_indices().iter().chain(alg.odd_indices().iter()) {
        let mut v = vec![Rat::zero(); d];
        v[i] = rat(1);
        if span.insert(v.clone()).is_some() {
            if alg.parity(i) == Parity::Even {
                even_count += 1;
            }
            parities.push(alg.parity(i));
            reps.push(v);
        }
    }
    // projection: last q coordinates of the inverse change of basis
    let mut cols: Vec<Vec<Rat>> = a_basis.clone();
    cols.extend(reps.iter().cloned());
    let q = reps.len();
    let k = a_basis.len();
    let mut projection = RationalMatrix::zero(q, d);
    for i in 0..d {
        let mut e = vec![Rat::zero(); d];
        e[i] = rat(1);
        let x = solve_columns(&cols, &e).expect("a-basis plus representatives span g");
        for r in 0..q {
            projection.set(r, i, x[k + r].clone());
        }
    }
    QuotientBasis {
        reps,
        even_count,
        projection,
        parities,
    }
}

/// A finite-dimensional g-module: one matrix per ambient basis vector on a
/// graded carrier (even coordinates first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// matrices[i] acts for basis vector x_i; each is carrier_dim x carrier_dim.
    pub matrices: Vec<RationalMatrix>,
}

impl Representation {
    pub fn carrier_dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn carrier_parity(&self, k: usize) -> Parity {
        if k < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The trivial one-dimensional module C.
    pub fn trivial(alg: &LieSuperalgebra) -> Representation {
        Representation {
            name: "trivial".into(),
            even_dim: 1,
            odd_dim: 0,
            matrices: vec![RationalMatrix::zero(1, 1); alg.dim()],
        }
    }

    /// The adjoint module; the carrier is the algebra basis reordered
    /// even-first.
    pub fn adjoint(alg: &LieSuperalgebra) -> Representation {
        let order: Vec<usize> = alg
            .even_indices()
            .into_iter()
            .chain(alg.odd_indices())
            .collect();
        let slot: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(s, &i)| (i, s)).collect();
        let even_dim = alg.even_indices().len();
        let d = alg.dim();
        let matrices = (0..d)
            .map(|i| {
                let mut m = RationalMatrix::zero(d, d);
                for (s, &j) in order.iter().enumerate() {
                    for (k, c) in alg.bracket(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            m.add_to(slot[&k], s, c);
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            name: "adjoint".into(),
            even_dim,
            odd_dim: d - even_dim,
            matrices,
        }
    }

    /// Action of an arbitrary algebra element given by coefficients.
    pub fn act(&self, coeffs: &[Rat]) -> RationalMatrix {
        let d = self.carrier_dim();
        let mut out = RationalMatrix::zero(d, d);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, s, v) in self.matrices[i].iter() {
                out.add_to(r, s, &(c * v));
            }
        }
        out
    }

    /// Validates parity-block structure and the homomorphism law
    /// rho([x,y]) = rho(x)rho(y) - (-1)^{xy} rho(y)rho(x).
    pub fn validate(&self, alg: &LieSuperalgebra) -> Result<ValidationReport, SchemaError> {
        let d = self.carrier_dim();
        if self.matrices.len() != alg.dim() {
            return Err(SchemaError::Malformed(format!(
                "expected {} matrices, got {}",
                alg.dim(),
                self.matrices.len()
            )));
        }
        for m in &self.matrices {
            if m.rows != d || m.cols != d {
                return Err(SchemaError::Malformed(format!(
                    "matrix size {}x{} does not match carrier dimension {d}",
                    m.rows, m.cols
                )));
            }
        }
        let mut report = ValidationReport::default();
        for (g, m) in self.matrices.iter().enumerate() {
            let pg = alg.parity(g);
            for (r, c, v) in m.iter() {
                if !v.is_zero() && self.carrier_parity(r) != self.carrier_parity(c) + pg {
                    report.violations.push(Violation::ParityBlock { gen: g, row: r, col: c });
                }
            }
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.act(&alg.bracket(i, j));
                let s = super_sign(alg.parity(i), alg.parity(j));
                let mut rhs = self.matrices[i].mul(&self.matrices[j]);
                for (r, c, v) in self.matrices[j].mul(&self.matrices[i]).iter() {
                    rhs.add_to(r, c, &(-&s * v));
                }
                if lhs != rhs {
                    report.violations.push(Violation::Homomorphism { i, j });
                }
            }
        }
        Ok(report)
    }
}

/// M* tensor M with the super sign rule for duals and tensor products; the
/// coefficient module realizing Ext(M, M). Carrier basis: pairs
/// (dual index a, index b) reordered even-first, lexicographic within each
/// parity block.
pub fn dual_tensor_module(alg: &LieSuperalgebra, rep: &Representation) -> Representation {
    let d = rep.carrier_dim();
    let pair_parity = |a: usize, b: usize| rep.carrier_parity(a) + rep.carrier_parity(b);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if pair_parity(a, b) == Parity::Even {
                pairs.push((a, b));
            }
        }
    }
    let even_dim = pairs.len();
    for a in 0..d {
        for b in 0..d {
            if pair_parity(a, b) == Parity::Odd {
                pairs.push((a, b));
            }
        }
    }
    let slot: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(s, &p)| (p, s)).collect();
    let dd = pairs.len();
    let matrices = (0..alg.dim())
        .map(|g| {
            let px = alg.parity(g);
            let rho = &rep.matrices[g];
            let mut m = RationalMatrix::zero(dd, dd);
            for (s, &(a, b)) in pairs.iter().enumerate() {
                // x.(phi_a ⊗ m_b) = (x.phi_a) ⊗ m_b + (-1)^{x a} phi_a ⊗ (x.m_b)
                // with (x.phi_a) = -(-1)^{x a} sum_c rho(x)[a, c] phi_c
                let sa = super_sign(px, rep.carrier_parity(a));
                for c in 0..d {
                    let v = rho.get(a, c);
                    if !v.is_zero() {
                        m.add_to(slot[&(c, b)], s, &(-&sa * &v));
                    }
                    let w = rho.get(c, b);
                    if !w.is_zero() {
                        m.add_to(slot[&(a, c)], s, &(&sa * &w));
                    }
                }
            }
            m
        })
        .collect();
    Representation {
        name: format!("{}*⊗{}", rep.name, rep.name),
        even_dim,
        odd_dim: dd - even_dim,
        matrices,
    }
}

/// The induced module U(g) ⊗_{U(g_0)} C for g = gl(1|1): relatively
/// projective for the pair (g, g_0). Basis (1, e12·e21, e12, e21)⊗1.
pub fn induced_gl11_module(alg: &LieSuperalgebra) -> Result<Representation, SchemaError> {
    if alg.name != "gl(1|1)" {
        return Err(SchemaError::Malformed(
            "the induced preset is only available for gl(1|1)".into(),
        ));
    }
    // basis order in make_gl(1,1): e11, e22 (even), e12, e21 (odd)
    // carrier: w0 = 1⊗1, wxy = e12 e21 ⊗ 1 (even) | wx = e12⊗1, wy = e21⊗1 (odd)
    let z = RationalMatrix::zero(4, 4);
    let mut e11 = z.clone();
    e11.set(2, 2, rat(1)); // e11.wx = wx
    e11.set(3, 3, rat(-1)); // e11.wy = -wy
    let mut e22 = z.clone();
    e22.set(2, 2, rat(-1));
    e22.set(3, 3, rat(1));
    let mut x = z.clone();
    x.set(2, 0, rat(1)); // x.w0 = wx
    x.set(1, 3, rat(1)); // x.wy = wxy
    let mut y = z.clone();
    y.set(3, 0, rat(1)); // y.w0 = wy
    y.set(1, 2, rat(-1)); // y.wx = -wxy
    Ok(Representation {
        name: "induced".into(),
        even_dim: 2,
        odd_dim: 2,
        matrices: vec![e11, e22, x, y],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_constructor() {
        let g = make_gl(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.even_indices().len(), 2);
        assert_eq!(g.odd_indices().len(), 2);
        // basis order: e11, e22, e12, e21
        assert_eq!(g.basis()[0].name, "e11");
        assert_eq!(g.basis()[2].name, "e12");
        // [e11, e12] = e12
        assert_eq!(g.bracket(0, 2), vec![rat(0), rat(0), rat(1), rat(0)]);
        // [e12, e21] = e11 + e22 (supercommutator, checked against the
        // matrix-unit oracle below)
        assert_eq!(g.bracket(2, 3), vec![rat(1), rat(1), rat(0), rat(0)]);
        assert!(g.validate().is_valid());
    }

    /// Independent matrix oracle for gl(1|1) brackets: 2x2 matrices with
    /// the supercommutator.
    #[test]
    fn gl11_bracket_matches_matrix_oracle() {
        let g = make_gl(1, 1).unwrap();
        let units = [(0usize, 0usize), (1, 1), (0, 1), (1, 0)]; // e11, e22, e12, e21
        let to_mat = |&(a, b): &(usize, usize)| {
            let mut m = [[0i64; 2]; 2];
            m[a][b] = 1;
            m
        };
        let mul = |x: [[i64; 2]; 2], y: [[i64; 2]; 2]| {
            let mut r = [[0i64; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        r[i][j] += x[i][k] * y[k][j];
                    }
                }
            }
            r
        };
        for i in 0..4 {
            for j in 0..4 {
                let (xi, xj) = (to_mat(&units[i]), to_mat(&units[j]));
                let sign = if i >= 2 && j >= 2 { 1 } else { -1 };
                let xy = mul(xi, xj);
                let yx = mul(xj, xi);
                let mut comm = [[0i64; 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        comm[r][c] = xy[r][c] + sign * yx[r][c];
                    }
                }
                let b = g.bracket(i, j);
                let mut expected = [[0i64; 2]; 2];
                for (k, coeff) in b.iter().enumerate() {
                    let (a, c) = units[k];
                    let n: i64 = coeff.numer().try_into().unwrap();
                    assert_eq!(coeff.denom(), &num_bigint::BigInt::from(1));
                    expected[a][c] += n;
                }
                assert_eq!(comm, expected, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn gl21_dimensions() {
        let g = make_gl(2, 1).unwrap();
        assert_eq!(g.dim(), 9);
        assert_eq!(g.even_indices().len(), 5);
        assert_eq!(g.odd_indices().len(), 4);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn gl_even_odd_dimension_counts() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
            let g = make_gl(m, n).unwrap();
            assert_eq!(g.even_indices().len(), m * m + n * n);
            assert_eq!(g.odd_indices().len(), 2 * m * n);
        }
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(make_gl(5, 3), Err(SchemaError::SizeCap(_))));
        assert!(make_gl_capped(5, 3, 8).is_ok());
    }

    #[test]
    fn abelian_validates() {
        let g = make_abelian(&[Parity::Even, Parity::Odd, Parity::Odd]);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn corrupted_bracket_fails_jacobi() {
        // gl(1|1) with [e12, e21] altered to e11 only
        let g = make_gl(1, 1).unwrap();
        let mut brackets = BTreeMap::new();
        for i in 0..4 {
            for j in i..4 {
                let b = g.bracket(i, j);
                if b.iter().any(|c| !c.is_zero()) {
                    brackets.insert((i, j), b);
                }
            }
        }
        brackets.insert((2, 3), vec![rat(1), rat(0), rat(0), rat(0)]);
        let bad = LieSuperalgebra::new("bad", g.basis().to_vec(), brackets, false).unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn sl2_validates() {
        let g = make_sl2();
        assert!(g.validate().is_valid());
        // [h, e] = 2e
        assert_eq!(g.bracket(1, 0), vec![rat(2), rat(0), rat(0)]);
    }

    #[test]
    fn quotient_gl11_center() {
        let g = make_gl(1, 1).unwrap();
        // a = span(e11 + e22)
        let a = EvenSubalgebra::new(&g, vec![vec![rat(1), rat(1), rat(0), rat(0)]]).unwrap();
        let q = quotient_basis(&g, &a);
        assert_eq!(q.dim(), 3);
        assert_eq!(q.even_count, 1);
        // representatives: e11 (even), e12, e21 (odd)
        assert_eq!(q.reps[0], vec![rat(1), rat(0), rat(0), rat(0)]);
        // projection kills a
        assert_eq!(
            q.project(&[rat(1), rat(1), rat(0), rat(0)]),
            vec![rat(0), rat(0), rat(0)]
        );
        // projection ∘ inclusion = identity on representatives
        for (i, r) in q.reps.iter().enumerate() {
            let p = q.project(r);
            for (j, c) in p.iter().enumerate() {
                assert_eq!(c, &rat(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn quotient_zero_subalgebra_is_identity() {
        let g = make_gl(1, 1).unwrap();
        let q = quotient_basis(&g, &EvenSubalgebra::zero());
        assert_eq!(q.dim(), 4);
        assert_eq!(q.even_count, 2);
    }

    #[test]
    fn quotient_gl21_cartan() {
        let g = make_gl(2, 1).unwrap();
        let diag: Vec<usize> = (0..g.dim())
            .filter(|&i| {
                let n = &g.basis()[i].name;
                n.as_bytes()[1] == n.as_bytes()[2]
            })
            .collect();
        assert_eq!(diag.len(), 3);
        let a = EvenSubalgebra::from_indices(&g, &diag).unwrap();
        let q = quotient_basis(&g, &a);
        assert_eq!(q.dim(), 6);
        assert_eq!(q.even_count, 2);
    }

    #[test]
    fn subalgebra_rejects_odd_and_unclosed() {
        let g = make_gl(1, 1).unwrap();
        assert_eq!(
            EvenSubalgebra::from_indices(&g, &[2]),
            Err(SubalgebraError::OddComponent(0))
        );
        let sl2 = make_sl2();
        // span(e) alone is closed; span(e, f) is not
        assert!(EvenSubalgebra::from_indices(&sl2, &[0]).is_ok());
        assert!(matches!(
            EvenSubalgebra::from_indices(&sl2, &[0, 2]),
            Err(SubalgebraError::NotClosed(..))
        ));
    }

    #[test]
    fn trivial_and_adjoint_modules_validate() {
        for g in [make_gl(1, 1).unwrap(), make_gl(2, 1).unwrap(), make_sl2()] {
            let t = Representation::trivial(&g);
            assert!(t.validate(&g).unwrap().is_valid());
            let ad = Representation::adjoint(&g);
            assert!(ad.validate(&g).unwrap().is_valid(), "adjoint of {}", g.name);
        }
    }

    #[test]
    fn corrupted_adjoint_fails_validation() {
        let g = make_gl(1, 1).unwrap();
        let mut ad = Representation::adjoint(&g);
        // flip one sign in ad(e12)
        let old = ad.matrices[2].get(2, 0);
        assert!(!old.is_zero());
        ad.matrices[2].set(2, 0, -old);
        let report = ad.validate(&g).unwrap();
        assert!(!report.is_valid());
    }

    #[test]
    fn dual_tensor_dimensions_and_validity() {
        let g = make_gl(1, 1).unwrap();
        let t = Representation::trivial(&g);
        let tt = dual_tensor_module(&g, &t);
        assert_eq!((tt.even_dim, tt.odd_dim), (1, 0));
        assert!(tt.validate(&g).unwrap().is_valid());
        let ad = Representation::adjoint(&g); // graded dim (2, 2)
        let dt = dual_tensor_module(&g, &ad);
        assert_eq!((dt.even_dim, dt.odd_dim), (8, 8));
        assert!(dt.validate(&g).unwrap().is_valid());
    }

    #[test]
    fn dual_tensor_of_1_1_module() {
        // M of graded dim (1,1): use the restriction of the gl(1|1) natural
        // module; here just check parity bookkeeping on the induced module
        // pieces via a (1,1) sub-example built from the adjoint of gl(1|1)
        // is overkill -- directly: carrier (1,1) gives (2,2).
        let g = make_gl(1, 1).unwrap();
        let nat = natural_gl11(&g);
        assert!(nat.validate(&g).unwrap().is_valid());
        let dt = dual_tensor_module(&g, &nat);
        assert_eq!((dt.even_dim, dt.odd_dim), (2, 2));
        assert!(dt.validate(&g).unwrap().is_valid());
    }

    #[test]
    fn induced_module_validates() {
        let g = make_gl(1, 1).unwrap();
        let w = induced_gl11_module(&g).unwrap();
        assert!(w.validate(&g).unwrap().is_valid());
    }

    /// The natural 2-dimensional module of gl(1|1) (matrix units acting on
    /// column vectors), used as a small (1,1)-dimensional test module.
    pub fn natural_gl11(alg: &LieSuperalgebra) -> Representation {
        assert_eq!(alg.name, "gl(1|1)");
        let mut ms = vec![RationalMatrix::zero(2, 2); 4];
        ms[0].set(0, 0, rat(1)); // e11
        ms[1].set(1, 1, rat(1)); // e22
        ms[2].set(0, 1, rat(1)); // e12
        ms[3].set(1, 0, rat(1)); // e21
        Representation {
            name: "natural".into(),
            even_dim: 1,
            odd_dim: 1,
            matrices: ms,
        }
    }
}
