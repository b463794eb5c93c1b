//! Finite Coxeter groups, subword complexes and multi-cluster complexes.

pub mod coxeter;
pub mod error;
pub mod harness;
pub mod multicluster;
pub mod quiver;
pub mod sorting;
pub mod subword;

pub use coxeter::{CoxeterSystem, Element, GroupDescriptor, Root, SignedRoot, Word};
pub use error::{Error, Result};
pub use subword::{PositionSet, SubwordComplex};
