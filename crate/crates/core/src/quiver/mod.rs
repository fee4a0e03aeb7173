//! Quivers, paths, relations and the path algebra `kQ/(R)`.

mod algebra;
mod compat;
mod graph;
mod intertwine;
mod morphism;
mod relation;

pub use algebra::{Coords, ModuleMap, PathAlgebra, TensorCheck, TensorWitness};
pub use compat::{compatibility, Compatibility};
pub use graph::{Arrow, Path, Quiver, Subquiver};
pub use intertwine::{intertwiners, Family};
pub use morphism::QuiverMorphism;
pub use relation::Relation;
