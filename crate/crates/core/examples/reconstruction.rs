// Rebuilding `kQ/(R)` from the points of `D(Q)` and the natural
// transformations between them.

use quiver_tensor::fixtures;
use quiver_tensor::reconstruct::{assemble_a, center_and_z, rational_points};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["kronecker2", "square", "S2", "disconnected"] {
        let alg = fixtures::algebra(name)?;
        let points = rational_points(&alg)?;
        let a = assemble_a(&alg)?;
        let center = center_and_z(&alg, &a)?;
        println!(
            "{name:>12}: {} points, dim A = {}, same structure constants: {}, dim Z(A) = {} ({} components)",
            points.points.len(),
            a.dim(),
            a.isomorphic,
            center.dim(),
            center.components
        );
        assert!(points.certified() && a.round_trip && a.isomorphic && center.certified());
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
