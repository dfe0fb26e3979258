//! Spectra of power graphs of cyclic, dihedral and dicyclic groups through
//! their generalized join structure, with dense oracles for every route.

pub mod closedforms;
pub mod error;
pub mod groups;
pub mod joinstruct;
pub mod numtheory;
pub mod spectra;

pub use error::{Error, Result};
pub use groups::{Element, Family, GroupSpec, LabeledGraph};
pub use joinstruct::{build_join, JoinStructure, Variant};
pub use spectra::{Spectrum, UniversalParams};
