//! Exact morphism counting from CW-complexes into finite crossed complexes.
//!
//! A CW-complex with a single 0-cell is described combinatorially by a
//! [`CWPresentation`]; a coefficient object is a [`FiniteCrossedComplex`].
//! Morphisms between the fundamental crossed complex of the presentation and
//! the coefficient object are colourings of cells compatible with the
//! boundaries, and their number, weighted by an alternating product of group
//! orders, gives the homotopy invariant computed by [`invariant_ia`].

pub mod crossed;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod homotopy;
pub mod invariant;
pub mod morphism;
pub mod presentation;
pub mod selfcheck;
pub mod suite;
mod unionfind;

pub use crossed::{FiniteCrossedComplex, ValidationReport, Violation};
pub use enumerate::{
    count_homs, count_homs_bruteforce, count_homs_with, enumerate_homs, enumerate_homs_with, SearchConfig,
};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupAction, GroupHom, NormalSubgroup, Subgroup};
pub use homotopy::{
    count_homotopies_from, homotopy_classes, homotopy_classes_with, homotopy_target, Homotopy1, HomotopyClasses,
};
pub use invariant::{euler_char_mapping_space, invariant_ia, invariant_ia_with, normalization_factor, ExactRational};
pub use morphism::Morphism;
pub use presentation::{wedge, CWPresentation, CrossedWord, ModuleElt, Word};
pub use unionfind::UnionFind;
