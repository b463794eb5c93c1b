//! Finite Coxeter groups: descriptors, root systems, elements and words.

mod descriptor;
mod element;
mod roots;
mod scalar;
mod system;
mod word;

pub use descriptor::{Family, GroupDescriptor};
pub use element::Element;
pub use roots::{Root, RootSystem, SignedRoot};
pub use scalar::{GoldenInt, Scalar, FLOAT_TOLERANCE, TAU};
pub use system::CoxeterSystem;
pub use word::Word;
