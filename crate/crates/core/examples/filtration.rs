use quiver_tensor::fixtures;
use quiver_tensor::quiver::compatibility;
use quiver_tensor::rep::unit_filtration;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = fixtures::algebra("square")?;
    let q = alg.quiver();
    let f = unit_filtration(&alg)?;
    for step in &f.steps {
        println!("K at {}: dims {:?}, quotient simple: {}", q.vertex_label(step.vertex), step.k.dims(), step.quotient_iso.is_some());
    }
    assert!(f.certified());

    for verts in [vec![1, 3], vec![0, 1, 3], vec![0, 1, 2, 3]] {
        let c = compatibility(q, alg.field(), alg.relations(), &verts)?;
        println!("{verts:?}: compatible = {}, reduced = {:?}", c.compatible, c.reduced_display());
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
