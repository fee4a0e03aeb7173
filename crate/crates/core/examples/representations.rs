use std::sync::Arc;

use quiver_tensor::fixtures;
use quiver_tensor::rep::{hom_space, Representation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = fixtures::algebra("kronecker2")?;
    let q = alg.quiver_arc();
    let field = alg.field();

    let unit = Representation::unit(Arc::clone(&q), field);
    let p1 = Representation::projective(&alg, 0);
    let s2 = Representation::simple(Arc::clone(&q), field, 1)?;
    println!("U dims {:?}, P_1 dims {:?}, S_2 dims {:?}", unit.dims(), p1.dims(), s2.dims());

    // U is the unit: U ⊗ P_1 has the same dimensions as P_1.
    let up = unit.tensor(&p1)?;
    assert_eq!(up.dims(), p1.dims());
    assert!(up.satisfies(alg.relations()));

    let homs = hom_space(&p1, &p1)?;
    println!("dim End(P_1) = {}", homs.len());
    let to_simple = hom_space(&p1, &s2)?;
    let from_simple = hom_space(&s2, &p1)?;
    println!("dim Hom(P_1, S_2) = {}, dim Hom(S_2, P_1) = {}", to_simple.len(), from_simple.len());
    assert_eq!(from_simple.len(), 2);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
