//! Points of `D(Q)`, natural transformations between them, and the algebra
//! `A(D(Q))` that recovers `kQ/(R)`.

mod assemble;
mod center;
mod points;
mod transform;

pub use assemble::{assemble_a, BlockDims, ReconstructedAlgebra};
pub use center::{center_and_z, CenterReport};
pub use points::{rational_points, PointsCertificate, RationalPoint};
pub use transform::{phi, psi, Transformation};
