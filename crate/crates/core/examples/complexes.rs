// Bounded complexes of representations: cohomology, tensor products with
// the Koszul sign, shifts and cones.

use std::sync::Arc;

use quiver_tensor::complex::{split_vector_complex, BoundedComplex, ChainMap};
use quiver_tensor::linalg::{Field, Matrix};
use quiver_tensor::quiver::Quiver;
use quiver_tensor::rep::{RepMorphism, Representation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::Rational;
    let point = Arc::new(Quiver::build(&["*"], &[])?);
    let k = Representation::unit(Arc::clone(&point), field);
    let k2 = k.direct_sum(&k)?;

    // k --[1 1]^T--> k^2
    let d = RepMorphism {
        components: vec![Matrix::from_i64(field, &[&[1], &[1]])],
    };
    let c = BoundedComplex::two_term(k.clone(), k2, d, 0)?;
    println!("H(C) = {:?}", c.cohomology_at(0));
    assert_eq!(c.cohomology_at(0).total(), 1);

    let cc = c.tensor(&c)?;
    println!("C ⊗ C: degrees {:?}, cohomology {:?}", cc.degrees(), cc.cohomology_at(0));
    assert_eq!(cc.cohomology_at(0).euler_characteristic(), c.cohomology_at(0).euler_characteristic().pow(2));

    let shifted = c.shift(1);
    println!("C[1] starts in degree {}", shifted.degrees().start());

    // The cone of the identity is acyclic.
    let cone = BoundedComplex::cone(&ChainMap::identity(&c), &c, &c)?;
    println!("cone(id) acyclic: {}", cone.is_acyclic());
    assert!(cone.is_acyclic());

    // Over a single vertex every complex is quasi-isomorphic to its cohomology.
    let w = split_vector_complex(&c)?;
    assert!(w.verify(&c));
    println!("splitting verified, homology {:?}", w.homology.cohomology_at(0));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
