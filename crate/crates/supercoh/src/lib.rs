//! Exact computation of relative cohomology rings of finite-dimensional Lie
//! superalgebras over the rationals.
//!
//! The crate builds the relative Koszul complex of a pair `(g, a)` where `g`
//! is a Lie superalgebra given by structure constants and `a` is an even
//! subalgebra, computes cohomology groups with coefficients in a
//! finite-dimensional module, the spectral sequence of the filtration by the
//! number of even arguments, cup products, and the Ext-module data used for
//! support varieties. All arithmetic is exact (arbitrary-precision
//! rationals); there is no floating-point mode.

pub mod algebra;
pub mod cochain;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod ring;
pub mod spectral;

pub use algebra::{
    EvenSubalgebra, LieSuperalgebra, Parity, QuotientBasis, Representation, ValidationReport,
};
pub use cochain::{CohomologyGroup, RelativeComplex};
pub use linalg::{RationalMatrix, Subspace};
pub use rational::Rat;
