use quiver_tensor::dsl::parse_quiver;

const SQUARE: &str = "
quiver square
field Q
vertices 1 2 3 4
arrow a: 1 -> 2
arrow b: 2 -> 4
arrow c: 1 -> 3
arrow d: 3 -> 4
relation a*b - c*d
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = parse_quiver(SQUARE)?;
    let alg = spec.algebra()?;
    println!("{} over {}: dim {}", spec.name, alg.field(), alg.dim());
    for k in 0..alg.dim() {
        let (n, m) = alg.basis_block(k);
        println!("  {:>4}  in e_{} Λ e_{}", alg.basis_word(k), alg.quiver().vertex_label(n), alg.quiver().vertex_label(m));
    }
    assert_eq!(alg.dim(), 9);
    assert_eq!(alg.block_dim(0, 3), 1);

    // a*b and c*d name the same basis element
    let q = alg.quiver();
    let ab = alg.path_element(&q.path_from_labels(&["a", "b"])?);
    let cd = alg.path_element(&q.path_from_labels(&["c", "d"])?);
    assert_eq!(ab, cd);
    let a = alg.path_element(&q.path_from_labels(&["a"])?);
    let b = alg.path_element(&q.path_from_labels(&["b"])?);
    assert_eq!(alg.mul(&a, &b), ab);
    assert!(alg.mul(&b, &a).iter().all(|x| x.is_zero()));

    let check = alg.tensor_check();
    println!("tensor relations: {}", check.is_tensor);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
