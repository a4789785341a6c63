//! Exact-arithmetic combinatorics of affine root systems: parahoric facets
//! and cyclic gradings, Hessenberg weight data with emptiness and
//! meagerness gates, spherical-pair dimension counts, character
//! genericity, double-coset span checks and rigidity numerology.
//!
//! Everything is computed over exact rationals; no floating point enters
//! any verdict (SVG plotting is the only consumer of floats).

pub mod affine;
pub mod chargen;
pub mod cone;
pub mod coset_span;
pub mod error;
pub mod grading;
pub mod hessenberg;
pub mod plot;
pub mod psi;
pub mod rat;
pub mod report;
pub mod rigidity;
pub mod root_system;
pub mod scenario;
pub mod spherical;

pub use error::{Error, Result};
pub use rat::{Rat, RatVec};
pub use root_system::{GroupType, RootSystem};
