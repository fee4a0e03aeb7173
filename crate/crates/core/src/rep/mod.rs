//! The abelian tensor category of representations satisfying the relations.

mod filtration;
mod morphism;
mod representation;

pub use filtration::{unit_filtration, Filtration, FiltrationStep};
pub use morphism::{hom_space, sub_quotient, RepMorphism, SubQuotient};
pub use representation::Representation;
