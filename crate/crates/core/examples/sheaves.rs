use quiver_tensor::fixtures;
use quiver_tensor::spectrum::{presheaf_sections, sheaf_sections};
use quiver_tensor::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // The structure sheaf is the constant sheaf k, so sections over W are k^|W|.
    let a4 = fixtures::algebra("a4")?;
    for w in [vec![0], vec![0, 2], vec![0, 1, 2, 3]] {
        let s = sheaf_sections(&a4, &w)?;
        println!("O({w:?}) has dimension {}, componentwise product: {}", s.dim(), s.is_componentwise());
        assert_eq!(s.dim(), w.len());
    }

    // End(U_W) only sees the connected components of Q_W.
    let split = presheaf_sections(&a4, &[0, 2])?;
    let joined = presheaf_sections(&a4, &[0, 1])?;
    println!("End(U) on {{1,3}}: {}, on {{1,2}}: {}", split.dim(), joined.dim());

    // The presheaf cannot tell Kronecker quivers apart.
    let k2 = presheaf_sections(&fixtures::algebra("kronecker2")?, &[0, 1])?;
    let k3 = presheaf_sections(&fixtures::algebra("kronecker3")?, &[0, 1])?;
    assert!(k2.same_structure(&k3));

    match presheaf_sections(&fixtures::algebra("square")?, &[0, 1, 3]) {
        Err(Error::Incompatible { reduced, .. }) => println!("square on {{1,2,4}} refused, witness {reduced:?}"),
        other => return Err(format!("expected a refusal, got {other:?}").into()),
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
