//! Exact coefficient counts and asymptotic formulas for skew plane
//! partitions and cylindric partitions.
//!
//! The crate is organized around four layers:
//! - [`series`]: exact truncated expansion of products of geometric
//!   factors over arbitrary-precision integers.
//! - [`profile`]: profiles (±1 sequences) and the derivation of the
//!   exact factor sets for skew and cylindric regions.
//! - [`asym`]: the ψ-parameter calculus producing closed-form
//!   asymptotics `C·n^α·exp(β·n^p)` in log space.
//! - [`oracle`] and [`validate`]: independent brute-force counting and
//!   numeric checks that certify the engine and the asymptotics.

pub mod asym;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod profile;
pub mod series;
pub mod validate;

pub use asym::{PolyExpParams, PsiParams};
pub use error::Error;
pub use profile::{CylindricWindow, Profile, SkewProfile};
pub use series::{CoefficientSeries, FactorSet, GeometricFactor, ProgressionFactor};
pub use validate::{RatioReport, RatioRow};

pub type Result<T> = std::result::Result<T, Error>;
