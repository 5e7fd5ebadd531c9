//! Exact symbolic computation with supersymmetric frieze patterns, the
//! supersymmetric Hill difference equation and supercontinuants.
//!
//! All arithmetic is over the supercommutative Laurent ring of
//! [`grassmann::SuperScalar`] with rational coefficients.

pub mod continuants;
pub mod expr;
pub mod frieze;
pub mod grassmann;
pub mod hill;
pub mod presets;
pub mod supermatrix;
pub mod variety;

pub use frieze::{Diamond, FriezeError, FriezeIndex, Superfrieze};
pub use grassmann::{GeneratorId, GrassmannError, Monomial, Parity, ParityClass, Rational, SuperScalar};
pub use hill::{HillCoefficients, HillError, HillSystem, SuperSequencePair};
pub use supermatrix::{MatrixError, SuperMatrix};
