//! Exact computations with twisted tensor products of small algebras:
//! twisting maps and their census, duplicates, classification by invariants,
//! and Hochschild cohomology through three cochain complexes.
//!
//! Arithmetic is exact over `ℚ` and over `𝔽_p`. The guide in `book/`
//! walks through the pipeline; its examples run as doctests.

pub mod algebra;
pub mod classify;
pub mod duplicate;
pub mod errata;
pub mod error;
pub mod field;
pub mod hochschild;
pub mod io;
pub mod matrix;
pub mod quiver;
pub mod reproduce;
pub mod twist;

pub use algebra::{AlgebraElement, FiniteDimAlgebra, StandardAlgebra, SubspaceBasis};
pub use classify::{classify_4dim, fingerprint, Fingerprint, IsoClassLabel};
pub use duplicate::{DuplicateDatum, RoundTripParams};
pub use error::{Error, Result};
pub use field::{FieldDescriptor, FieldKind, Scalar};
pub use hochschild::{HHMethod, HHProfile};
pub use matrix::{MatrixOfScalars, Vector};
pub use quiver::{Path, Quiver, StandardQuiver};
pub use twist::{TwistFamily, TwistFamilyDescriptor, TwistingMap};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/twisting-maps.md")]
    mod twisting_maps {}
    #[doc = include_str!("../../../book/src/duplicates.md")]
    mod duplicates {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/hochschild.md")]
    mod hochschild {}
    #[doc = include_str!("../../../book/src/counterexample.md")]
    mod counterexample {}
    #[doc = include_str!("../../../book/src/errata.md")]
    mod errata {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
