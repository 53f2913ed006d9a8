//! Exact arithmetic for non-archimedean analysis on finite data.
//!
//! The crate covers absolute values on the rationals and p-adic residue
//! arithmetic, q-metric and ultrametric audits of finite distance matrices,
//! η-chain connectivity and the subdominant ultrametric, ℓ^r norms of finitely
//! supported vector-valued functions, and simple-function integration against
//! finitely-additive measures on `[0, 1)`.
//!
//! Distance matrices and chain analysis are generic over [`Scalar`], which is
//! implemented for exact [`Rational`]s and for `f32`/`f64`. Everything that
//! needs exact power-domain comparisons works on rationals directly.

pub mod absval;
pub mod chain;
pub mod padic;
pub mod enclosure;
pub mod error;
pub mod lr;
pub mod measure;
pub mod metric;
pub mod rational;
pub mod scalar;
pub mod union_find;

pub use absval::{AbsoluteValue, Magnitude, Valuation};
pub use chain::{Chain, Partition, Threshold};
pub use padic::PadicApprox;
pub use enclosure::Enclosure;
pub use error::{Error, ParseError, Result};
pub use lr::{FiniteVec, Key, NormedSpace};
pub use measure::{AtomicSpace, FAMeasure, IntervalSet, SimpleFn};
pub use metric::{DistMatrix, MaxExponent};
pub use scalar::{Exponent, PowerValue, Scalar};

/// Arbitrary-precision signed rational, the exact scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Distance matrix with exact rational entries.
pub type ExactDistMatrix = DistMatrix<Rational>;
/// Distance matrix with `f64` entries and a comparison tolerance.
pub type FloatDistMatrix = DistMatrix<f64>;
