//! Exact intersection theory, line-bundle cohomology and the numerical
//! classification of rank-2 aCM bundles on F = P1 x P1 x P1.

pub mod chow;
pub mod cohomology;
pub mod conformance;
pub mod delpezzo;
pub mod enumerate;
pub mod error;
pub mod golden;
pub mod invariants;

pub use chow::{ChowClass, Coeff, CurveClass, DivisorClass, Perm, Triple};
pub use error::{Error, Result};
pub use invariants::BundleData;
