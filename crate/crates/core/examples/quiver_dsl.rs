// Parsing, error positions and pretty-printing of `.quiver` files.

use quiver_tensor::dsl::parse_quiver;
use quiver_tensor::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = "\
quiver demo   # a comment
field F_5
vertices x, y, z
arrow p: x -> y
arrow q: x -> y
arrow r: y -> z
relation 2 p*r - 2*q*r
";
    let spec = parse_quiver(text)?;
    let pretty = spec.pretty();
    print!("{pretty}");
    assert_eq!(parse_quiver(&pretty)?, spec);

    match parse_quiver("quiver bad\nfield Q\nvertices 1 2\narrow a 1 -> 2\n") {
        Err(Error::Parse { line, col, msg }) => println!("error at {line}:{col}: {msg}"),
        other => return Err(format!("expected a parse error, got {other:?}").into()),
    }
    match parse_quiver("quiver bad\nfield Q\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n") {
        Err(e @ Error::NotComposable(_)) => println!("{e}"),
        other => return Err(format!("expected a composability error, got {other:?}").into()),
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
