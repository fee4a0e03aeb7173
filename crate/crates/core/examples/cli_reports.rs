use quiver_tensor::cli::run_args;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let spectrum = run_args(["spectrum".to_string(), format!("{dir}/S2.quiver")]);
    println!("{}", spectrum.render());
    assert_eq!(spectrum.code, 0);
    assert_eq!(spectrum.report["count"], 3);

    let refused = run_args(["reconstruct".to_string(), format!("{dir}/monomial.quiver")]);
    println!("exit {}: {}", refused.code, refused.report["error"]["message"]);
    assert_eq!(refused.code, 1);

    let compat = run_args(["compat".to_string(), format!("{dir}/square.quiver"), "--verts".into(), "1,2,4".into()]);
    println!("compatible: {}, witness {}", compat.report["compatible"], compat.report["reduced"]);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
