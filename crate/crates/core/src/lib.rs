//! Exact-arithmetic bounds on the geometric genera of curves lying on
//! polarized smooth surfaces.
//!
//! Given the numerical invariants (d, e, p, q, n4) of a polarized surface,
//! the library computes the discriminants and threshold indices that control
//! which genera must occur on the surface, certifies that the resulting
//! non-gap intervals chain together above an explicit threshold, and, for
//! smooth surfaces in projective 3-space, produces concrete realization
//! witnesses (an auxiliary curve degree and a node count) for every genus.
//! A companion module accepts Hilbert-polynomial data for higher-dimensional
//! ambients and extracts the analogous threshold from it.
//!
//! Every certified quantity is computed over arbitrary-precision integers
//! and rationals; floating point appears nowhere in a certified path.
//! Floating-point output exists only as a display convenience next to exact
//! rational brackets.

pub mod absgaps;
pub mod batch;
pub mod error;
pub mod exact;
pub mod intervals;
pub mod nfold;
pub mod p3;
pub mod surface;

pub use absgaps::RealizationWitness;
pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use intervals::{CoverageCertificate, GenusInterval};
pub use nfold::{HilbertData, NfoldBoundResult};
pub use surface::{BoundProfile, Eps, PolarizedSurface};
