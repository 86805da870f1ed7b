//! Growth series of the torus link groups `<x, y, z | x^p = y^q = z>`.
//!
//! The crate builds the rational growth function exactly, checks it against
//! Cayley-graph sphere counts and an enumeration of minimal normal words,
//! and locates the growth rate together with the dominance of its root.

pub mod error;
pub mod formulas;
pub mod group;
pub mod polyring;
pub mod spectral;

pub use error::{Error, Result};
pub use formulas::{ParityCase, TorusParams};
pub use group::{CanonicalElement, SphereCounts, TorusGroup};
pub use polyring::{series_expand, Polynomial, RationalFunction, RfOp, SeriesPrefix};
pub use spectral::{PerronReport, RootEstimate, Verdict};
