mod exact_linalg {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_linalg.rs"));
}

#[test]
fn exact_linalg_example_runs() {
    exact_linalg::run_example().expect("exact_linalg example should run");
}

mod path_algebra {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/path_algebra.rs"));
}

#[test]
fn path_algebra_example_runs() {
    path_algebra::run_example().expect("path_algebra example should run");
}

mod quiver_dsl {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quiver_dsl.rs"));
}

#[test]
fn quiver_dsl_example_runs() {
    quiver_dsl::run_example().expect("quiver_dsl example should run");
}

mod representations {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/representations.rs"));
}

#[test]
fn representations_example_runs() {
    representations::run_example().expect("representations example should run");
}

mod complexes {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes.rs"));
}

#[test]
fn complexes_example_runs() {
    complexes::run_example().expect("complexes example should run");
}

mod spectrum {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/spectrum.rs"));
}

#[test]
fn spectrum_example_runs() {
    spectrum::run_example().expect("spectrum example should run");
}

mod sheaves {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sheaves.rs"));
}

#[test]
fn sheaves_example_runs() {
    sheaves::run_example().expect("sheaves example should run");
}

mod reconstruction {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reconstruction.rs"));
}

#[test]
fn reconstruction_example_runs() {
    reconstruction::run_example().expect("reconstruction example should run");
}

mod filtration {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/filtration.rs"));
}

#[test]
fn filtration_example_runs() {
    filtration::run_example().expect("filtration example should run");
}

mod support_calculus {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/support_calculus.rs"));
}

#[test]
fn support_calculus_example_runs() {
    support_calculus::run_example().expect("support_calculus example should run");
}

mod cli_reports {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_reports.rs"));
}

#[test]
fn cli_reports_example_runs() {
    cli_reports::run_example().expect("cli_reports example should run");
}
