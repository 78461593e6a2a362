//! Finite groups given by Cayley tables, their automorphism subgroups, and
//! executable checks of when those subgroups coincide.

pub mod abelian;
pub mod aut;
pub mod catalog;
pub mod dsl;
pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod morphism;
pub mod product;
pub mod quotient;
pub mod search;
pub mod subgroup;
pub mod theorems;

pub use error::{GroupError, Result};
pub use group::FiniteGroup;
pub use morphism::Morphism;
pub use subgroup::Subgroup;
