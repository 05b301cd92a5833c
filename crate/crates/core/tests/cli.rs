use std::process::Command;

use mobi::cli::{format_float, listing, run, Listing, LIST_SCHEMA};
use serde_json::Value;

fn mobi(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mobi").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mobi"))
}

#[test]
fn list_is_sorted_and_complete() {
    let (code, text, _) = mobi(&["list"]);
    assert_eq!(code, 0);
    assert!(text.contains("canonical"));
    assert!(text.contains("slerp-s2-pole"));

    let (_, json, _) = mobi(&["list", "--format", "json"]);
    let parsed: Listing = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, listing());
    let names: Vec<_> = parsed.spaces.iter().map(|s| s.name.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for name in ["canonical-rn", "sq-pair", "projectile", "slerp-s1", "hyperbolic-hn", "negative-cos2"] {
        assert!(names.iter().any(|n| n == name), "{name}");
    }
}

/// Checks every object in the listing against the `required` and
/// `properties` of the matching schema node.
fn conforms(value: &Value, schema: &Value) -> bool {
    match (value, schema.get("type").and_then(Value::as_str)) {
        (Value::Object(map), Some("object")) => {
            let props = schema["properties"].as_object().unwrap();
            let required = schema["required"].as_array().unwrap();
            required.iter().all(|k| map.contains_key(k.as_str().unwrap()))
                && map.iter().all(|(k, v)| props.get(k).is_some_and(|s| conforms(v, s)))
        }
        (Value::Array(items), Some("array")) => items.iter().all(|v| conforms(v, &schema["items"])),
        (Value::String(_), Some("string")) => true,
        (Value::Number(_), Some("number")) => true,
        (Value::Bool(_), Some("boolean")) => true,
        (Value::String(s), None) if schema.get("enum").is_some() => {
            schema["enum"].as_array().unwrap().iter().any(|e| e == s)
        }
        (_, None) => schema.get("enum").is_none(),
        _ => false,
    }
}

#[test]
fn list_json_matches_the_published_schema() {
    let schema: Value = serde_json::from_str(LIST_SCHEMA).unwrap();
    let (_, printed, _) = mobi(&["list", "--schema"]);
    assert_eq!(serde_json::from_str::<Value>(&printed).unwrap(), schema);
    let (_, json, _) = mobi(&["list", "--format", "json"]);
    let value: Value = serde_json::from_str(&json).unwrap();
    assert!(conforms(&value, &schema));
    let mut broken = value.clone();
    broken["spaces"][0]["extra"] = Value::Bool(true);
    assert!(!conforms(&broken, &schema));
}

#[test]
fn verify_exit_codes() {
    let (code, text, _) = mobi(&["verify", "--target", "space", "--name", "slerp-s2-pole", "--samples", "300"]);
    assert_eq!(code, 0, "{text}");
    let (code, json, _) = mobi(&[
        "verify", "--target", "space", "--name", "negative-cos2", "--samples", "300", "--format", "json",
    ]);
    assert_eq!(code, 1);
    let doc: Value = serde_json::from_str(&json).unwrap();
    let x5 = doc["reports"].as_array().unwrap().iter().find(|r| r["axiom_id"] == "X5").unwrap();
    assert_eq!(x5["passed"], false);
    assert!(x5["failures"][0]["inputs"].is_array());

    let (code, _, _) = mobi(&["verify", "--target", "algebra", "--name", "lozenge", "--samples", "300"]);
    assert_eq!(code, 0);
    let (code, _, err) = mobi(&["verify", "--target", "space", "--name", "nowhere"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown space"));
    let (code, _, _) = mobi(&["verify", "--target", "space", "--name", "projectile", "--param", "g=9.8"]);
    assert_eq!(code, 2);
    let (code, _, _) = mobi(&["verify", "--target", "space", "--name", "sq-pair", "--samples", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = mobi(&["verify", "--name", "sq-pair"]);
    assert_eq!(code, 2);
}

#[test]
fn affine_verdicts() {
    for (name, extra, affine) in [
        ("sq-pair", vec![], false),
        ("canonical-rn", vec!["--param", "n=2"], true),
        ("damping-over", vec!["--param", "alpha=1", "--param", "beta=2"], false),
    ] {
        let mut args = vec!["affine", "--name", name, "--samples", "500"];
        args.extend(extra);
        let (code, json, _) = mobi(&args);
        let doc: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["affine"], affine, "{name}");
        assert_eq!(code, if affine { 0 } else { 1 });
        assert_eq!(doc["witness"].is_object(), !affine);
    }
}

#[test]
fn sample_rows() {
    let (code, csv, _) = mobi(&["sample", "--name", "slerp-s2", "--from", "[1,0,0]", "--to", "[0,1,0]", "--steps", "3"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(csv.lines().next(), Some("t,c0,c1,c2"));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let want = [[0.0, 1.0, 0.0, 0.0], [0.5, h, h, 0.0], [1.0, 0.0, 1.0, 0.0]];
    for (row, w) in rows.iter().zip(want) {
        assert!(row.iter().zip(w).all(|(a, b)| (a - b).abs() < 1e-15), "{row:?}");
    }

    let (_, csv, _) = mobi(&["sample", "--name", "canonical-rn", "--from", "[0]", "--to", "[1]", "--steps", "5"]);
    for line in csv.lines().skip(1) {
        let (t, v) = line.split_once(',').unwrap();
        assert_eq!(t, v);
    }

    let (_, csv, _) = mobi(&["sample", "--name", "projectile", "--param", "k=1", "--from", "[0,0]", "--to", "[0,1]", "--steps", "3"]);
    assert_eq!(csv.lines().nth(2), Some("0.5,0.25,0.5"));

    let (_, json, _) = mobi(&["sample", "--name", "harmonic", "--from", "[1]", "--to", "[3]", "--steps", "3", "--format", "json"]);
    let doc: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc[1]["t"], 0.5);
    assert_eq!(doc[1]["point"][0], 1.5);
}

#[test]
fn sample_errors_leave_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("path.csv");
    let out_s = out.to_str().unwrap();
    for args in [
        vec!["sample", "--name", "harmonic", "--from", "[-1]", "--to", "[3]", "--out", out_s],
        vec!["sample", "--name", "harmonic", "--from", "[1,2]", "--to", "[3]", "--out", out_s],
        vec!["sample", "--name", "harmonic", "--from", "one", "--to", "[3]", "--out", out_s],
        vec!["sample", "--name", "harmonic", "--from", "[1]", "--to", "[3]", "--steps", "1", "--out", out_s],
        vec!["sample", "--name", "slerp-s2", "--from", "[1,0,0]", "--to", "[0,2,0]", "--out", out_s],
    ] {
        let (code, _, err) = mobi(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.starts_with("error:"));
        assert!(!out.exists());
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0, "no temporary files left");
}

#[test]
fn binary_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<_> = (0..2).map(|i| dir.path().join(format!("run{i}.csv"))).collect();
    for f in &files {
        let status = bin()
            .args(["sample", "--name", "slerp-s2-equator", "--from", "[0,0,1]", "--to", "[0,0,-1]", "--steps", "17"])
            .arg("--out")
            .arg(f)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(std::fs::read(&files[0]).unwrap(), std::fs::read(&files[1]).unwrap());

    let verify = |seed: &str| {
        bin()
            .args(["verify", "--target", "space", "--name", "sq-pair", "--samples", "200", "--format", "json"])
            .env("MOBI_SEED", seed)
            .output()
            .unwrap()
    };
    let (a, b, c) = (verify("7"), verify("7"), verify("8"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["seed"], 7);
}

#[test]
fn csv_numbers_round_trip() {
    for x in [0.1, 2.0 / 3.0, -1e-12, 12345.678, f64::MIN_POSITIVE] {
        assert_eq!(format_float(x).parse::<f64>().unwrap(), x);
    }
}
