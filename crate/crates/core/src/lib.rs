//! Exact-rational toolkit for hom-Lie algebras, Manin triples and their
//! polyubles, hom-classical Yang-Baxter residuals, stabilizer conditions and
//! the type-A flag correspondence maps.
//!
//! All algorithms are generic over [`Field`]; the aliases below fix the
//! scalar to arbitrary-precision rationals.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod error;
pub mod flagleaf;
pub mod homlie;
pub mod io;
pub mod manin;
pub mod matrix;
pub mod perm;
pub mod polyuble;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod stabilizer;
pub mod subspace;
pub mod tensor;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use report::Report;
pub use scalar::Field;

pub type Rational = num_rational::BigRational;
pub type Matrix = matrix::Matrix<Rational>;
pub type Tensor = tensor::SparseTensor<Rational>;
pub type Subspace = subspace::Subspace<Rational>;
pub type Algebra = homlie::HomLieAlgebra<Rational>;
pub type LinearRep = homlie::LinearRep<Rational>;
pub type ManinTriple = manin::ManinTriple<Rational>;

pub type RMatrixReport = rmatrix::RMatrixReport<Rational>;
pub type LinearAction = stabilizer::LinearAction<Rational>;
pub type GroupElement = flagleaf::GroupElement<Rational>;
