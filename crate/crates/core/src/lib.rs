//! Invariants of numerical semigroups and of two families with unique Apéry
//! expansions.
//!
//! The crate is split into a generic oracle engine ([`semigroup`]) that works
//! for any numerical semigroup, closed forms for the two families
//! ([`gamma4`] for partial sums of an arithmetic progression, [`geo`] for the
//! geometric variant), the ladder analysis of Apéry tables
//! ([`tangent_cone`]), and an exact polynomial kernel used to instantiate
//! and check the defining ideals and free resolutions of the `Γ₄` family
//! ([`ideal`]).
//!
//! Every closed form can be compared against the oracle engine; [`verify`]
//! bundles those comparisons per instance and over parameter grids.

pub mod error;
pub mod gamma4;
pub mod geo;
pub mod ideal;
pub mod report;
pub mod semigroup;
pub mod tangent_cone;
pub mod verify;

pub use error::{Error, Result};
pub use gamma4::Gamma4Params;
pub use geo::GeoParams;
pub use report::Discrepancy;
pub use semigroup::{AperySet, AperyTable, Factorization, NumericalSemigroup};
pub use tangent_cone::{CzDecomposition, HilbertSeries};
