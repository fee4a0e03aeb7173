use std::process::Command;

use quiver_tensor::cli::run_args;
use quiver_tensor::fixtures;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn args(parts: &[&str]) -> Vec<String> {
    parts
        .iter()
        .map(|p| match p.strip_prefix('@') {
            Some(name) => fixture(name),
            None => p.to_string(),
        })
        .collect()
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("spectrum_S2", &["spectrum", "@S2"]),
    ("reconstruct_kronecker2", &["reconstruct", "@kronecker2"]),
    ("compat_square", &["compat", "@square", "--verts", "1,2,4"]),
    ("presheaf_a4", &["presheaf", "@a4", "--open", "1,3,4"]),
    ("check_tensor_monomial", &["check-tensor", "@monomial"]),
    ("filtration_square", &["filtration", "@square"]),
];

#[test]
fn reports_match_golden_files() {
    for (name, cmd) in GOLDEN {
        let first = run_args(args(cmd));
        let second = run_args(args(cmd));
        assert_eq!(first.code, 0, "{name}");
        assert_eq!(first.render(), second.render(), "{name} is not stable");
        assert_eq!(format!("{}\n", first.render()), golden(name), "{name}");
    }
}

/// Every key a report definition requires is present in the golden report.
#[test]
fn golden_reports_carry_the_documented_keys() {
    let path = format!("{}/../../docs/report.schema.json", env!("CARGO_MANIFEST_DIR"));
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let defs = &schema["$defs"];
    let required = |def: &str| -> Vec<String> {
        let d = &defs[def];
        let mut keys: Vec<String> = d["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap().to_string()).collect();
        if d.get("allOf").is_some() {
            keys.extend(defs["header"]["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap().to_string()));
        }
        keys
    };
    for (name, cmd) in GOLDEN {
        let report: serde_json::Value = serde_json::from_str(&golden(name)).unwrap();
        let def = cmd[0].replace('-', "_");
        for key in required(&def).iter().chain(&["schema".to_string(), "command".to_string(), "ok".to_string()]) {
            assert!(report.get(key).is_some(), "{name} lacks `{key}`");
        }
    }
}

#[test]
fn binary_prints_the_same_report() {
    let out = Command::new(env!("CARGO_BIN_EXE_quiver-tt"))
        .args(args(&["spectrum", "@S2"]))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("spectrum_S2"));

    let refused = Command::new(env!("CARGO_BIN_EXE_quiver-tt"))
        .args(args(&["spectrum", "@monomial"]))
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(1));
}

#[test]
fn spectrum_and_reconstruct_headlines() {
    let s = run_args(args(&["spectrum", "@S2"]));
    assert_eq!(s.report["count"], 3);
    assert_eq!(s.report["discrete"], true);
    let r = run_args(args(&["reconstruct", "@kronecker2"]));
    assert_eq!(r.report["dim"], 4);
    assert_eq!(r.report["isomorphic"], true);
}

#[test]
fn validate_accepts_by_purpose() {
    for (name, _) in fixtures::ALL {
        let tensor = fixtures::TENSOR.contains(name);
        let plain = run_args(args(&["validate", &format!("@{name}")]));
        assert_eq!(plain.code, 0, "{name}");
        assert_eq!(plain.report["tensor"], tensor);
        for purpose in ["spectrum", "reconstruct"] {
            let strict = run_args(args(&["validate", &format!("@{name}"), "--for", purpose]));
            assert_eq!(strict.code == 0, tensor, "{name} for {purpose}");
        }
    }
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("quiver-tt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.quiver");
    std::fs::write(&broken, "quiver b\nfield Q\nvertices\n").unwrap();
    let out = run_args(["validate".to_string(), broken.display().to_string()]);
    assert_eq!(out.code, 2);
    assert_eq!(out.report["error"]["kind"], "parse");
    assert_eq!(out.report["error"]["line"], 3);

    let cyclic = dir.join("cyclic.quiver");
    std::fs::write(&cyclic, "quiver c\nfield Q\nvertices 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n").unwrap();
    assert_eq!(run_args(["validate".to_string(), cyclic.display().to_string()]).code, 2);

    assert_eq!(run_args(args(&["presheaf", "@square", "--open", "1,2,4"])).code, 1);
    assert_eq!(run_args(args(&["sheaf", "@square", "--open", "1,9"])).code, 2);
    assert_eq!(run_args(args(&["frobnicate", "@square"])).code, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn support_of_a_complex_file() {
    let dir = std::env::temp_dir().join(format!("quiver-tt-support-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    // S_4 -> P_2 in degrees 0, 1 for the square; the inclusion is the socle of P_2.
    std::fs::write(
        &path,
        r#"{"start": 0,
            "terms": [{"dims": {"4": 1}}, {"dims": {"2": 1, "4": 1}, "maps": {"b": [["1"]]}}],
            "differentials": [{"4": [[1]]}]}"#,
    )
    .unwrap();
    let out = run_args(args(&["support", "@square", "--complex", &path.display().to_string()]));
    assert_eq!(out.code, 0, "{}", out.render());
    assert_eq!(out.report["support"], serde_json::json!(["2"]));
    assert_eq!(out.report["in_primes"], serde_json::json!(["1", "3", "4"]));
    assert_eq!(out.report["cohomology"]["2"], serde_json::json!({"1": 1}));
    assert_eq!(out.report["closed_set_agrees"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn compare_points_on_kronecker_quivers() {
    let out = run_args(args(&["compare-points", "@kronecker1", "@kronecker2", "@kronecker3", "@kronecker4"]));
    assert_eq!(out.report["homeomorphic"], true);
    assert_eq!(out.report["presheaves_isomorphic"], true);
    let mixed = run_args(args(&["compare-points", "@kronecker2", "@a4"]));
    assert_eq!(mixed.report["homeomorphic"], false);
}
