//! Exact-arithmetic toolkit for minuscule crystals and the homogeneous simple
//! modules of cyclotomic quiver Hecke algebras.
//!
//! The crate builds the crystal of a minuscule fundamental weight on its Weyl
//! orbit, enumerates crystal paths and shifted standard tableaux, realizes the
//! corresponding modules by integer matrices, and verifies every defining
//! relation of the algebra as an exact matrix identity. All arithmetic is
//! exact: `i64` matrix entries, `Rational64` where polynomial coefficients
//! enter.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod klr;
pub mod matrix;
pub mod tableaux;
pub mod weyl;

pub use cartan::{CartanDatum, TypeLabel, Weight};
pub use crystal::{build_crystal, BijectionStatus, CrystalGraph, Path};
pub use error::{Error, Result};
pub use klr::{
    branching_check, build_module_paths, build_module_tableaux, build_module_tableaux_d,
    check_klr_relations, cyclotomic_basis, dimension_table, head_witness_check,
    isomorphism_check_b_d, HomogeneousModule, QSpec,
};
pub use tableaux::{StandardTableau, StrictPartition};
