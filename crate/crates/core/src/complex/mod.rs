//! Bounded complexes of representations and their vertex-wise cohomology.

mod bounded;
mod cohomology;
mod graded;
mod split;

pub use bounded::{BoundedComplex, ChainMap};
pub use cohomology::StrandCohomology;
pub use graded::GradedDims;
pub use split::{split_vector_complex, SplitWitness};
