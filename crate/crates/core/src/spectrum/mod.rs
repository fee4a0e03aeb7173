//! Prime tensor ideals of `D(Q)`, the spectrum and its structure sheaf.

mod ideal;
mod report;
mod sections;

pub use ideal::{ideal_of, IdealDescriptor};
pub use report::{induced_spectrum_map, spc, ClosedSet, Point, SpectrumMap, SpectrumReport};
pub use sections::{presheaf_sections, sheaf_sections, SectionAlgebra};
