// The prime spectrum of `D(S_m)` for the Beilinson quivers: `m + 1`
// points, each one open.

use quiver_tensor::complex::BoundedComplex;
use quiver_tensor::fixtures;
use quiver_tensor::rep::Representation;
use quiver_tensor::spectrum::{ideal_of, spc, IdealDescriptor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=3 {
        let alg = fixtures::algebra(&format!("S{m}"))?;
        let report = spc(&alg)?;
        println!("Spc D(S_{m}): {} points, discrete = {}", report.len(), report.is_discrete());
        assert_eq!(report.len(), m + 1);
        assert!(report.is_discrete());
    }

    let alg = fixtures::algebra("S2")?;
    let report = spc(&alg)?;
    let q = alg.quiver_arc();
    let p2 = BoundedComplex::concentrated(Representation::projective(&alg, 1), 0);
    println!("supp P_2 = {:?}", p2.support());
    let closed = report.closed_set(std::slice::from_ref(&p2));
    println!("Z(P_2) = {:?}, agrees with the support: {}", closed.points, closed.agrees());

    let ideal = ideal_of(&q, &[p2]);
    println!("ideal generated by P_2 bounds supports by {:?}", ideal.bound());
    assert!(ideal.is_subideal_of(&IdealDescriptor::prime_at(3, 0)));
    for p in &report.points {
        println!("  P_{} prime: {}, maximal: {}", p.label, p.prime.is_prime()?, p.prime.is_maximal()?);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
