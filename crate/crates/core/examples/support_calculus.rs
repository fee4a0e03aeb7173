// Supports of random complexes: tensor products intersect them, direct
// sums unite them.

use quiver_tensor::fixtures;
use quiver_tensor::random::Generator;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = fixtures::algebra("square")?;
    let mut g = Generator::new(2024);
    for _ in 0..5 {
        let v = g.complex(&alg, 4);
        let w = g.complex(&alg, 4);
        let (sv, sw) = (v.support(), w.support());
        let tensor = v.tensor(&w)?.support();
        let sum = v.direct_sum(&w)?.support();
        println!("supp V = {sv:?}, supp W = {sw:?}, supp V⊗W = {tensor:?}");
        assert_eq!(tensor, sv.intersection(&sw).copied().collect());
        assert_eq!(sum, sv.union(&sw).copied().collect());
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
