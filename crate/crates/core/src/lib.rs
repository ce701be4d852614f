//! Exact arithmetic for substitution-invariant Sturmian words.
//!
//! Slopes and intercepts are elements `a + b sqrt(d)` of real quadratic
//! fields ([`exactnum`]); words are generated from them by the floor and
//! ceiling rotation codings ([`words`]); morphisms of `{0,1}*` and their
//! monoids live in [`morphisms`]; the Kepler, matrix, morphism and
//! Sturm-number trees in [`trees`]; the fractional-linear action of the
//! elementary morphisms on `(alpha, rho)` in [`solver`]; and the search for
//! a fixing morphism in [`search`].
//!
//! Everything numeric is generic over an integer [`Scalar`]. The aliases
//! below fix it to [`num_bigint::BigInt`]; `i64` works for small inputs
//! and overflows (panics in debug builds) on large ones.

pub mod error;
pub mod exactnum;
pub mod matrix;
pub mod morphisms;
pub mod scalar;
pub mod search;
pub mod solver;
pub mod trees;
pub mod words;

pub use error::{Error, Result};
pub use morphisms::{BinaryMorphism, Generator, GeneratorSet, GeneratorWord};
pub use scalar::Scalar;
pub use search::RhoKind;
pub use trees::NodeAddress;
pub use words::{BinaryWord, Representative};

pub use num_bigint::BigInt;

/// Quadratic numbers over unbounded integers.
pub type Quadratic = exactnum::QuadraticNumber<BigInt>;
/// Quadratic numbers over `i64`; fast but bounded.
pub type Quadratic64 = exactnum::QuadraticNumber<i64>;
pub type Matrix = matrix::Matrix2<BigInt>;
pub type Fraction = trees::Fraction<BigInt>;
pub type FracLinMap = solver::FracLinMap<BigInt>;
pub type Solution = solver::Solution<BigInt>;
pub type FoundMorphism = search::FoundMorphism<BigInt>;
