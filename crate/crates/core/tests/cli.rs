//! End-to-end tests of the gembed binary: output formats, exit codes,
//! determinism, and JSON output validated against the shipped schemas.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gembed"))
}

fn write_input(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

const THETA: &str = "vertex u: a+ b+ c+\nvertex w: c- b- a-\n";
const NEG_LOOP: &str = "vertex u: a+ a-\nsignature a: -1\n";
const LOOP_LINK: &str = "vertex u: a+ a- b+\nvertex w: b-\n";

/// Minimal JSON-Schema checker covering the subset the shipped schemas
/// use: type, required, properties, additionalProperties, items, enum,
/// minimum, min/max items and properties, definitions and local $ref.
fn validate(schema: &Value, root: &Value, value: &Value) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let target = reference
            .strip_prefix("#/")
            .ok_or("only local refs supported")?
            .split('/')
            .try_fold(root, |acc, part| acc.get(part))
            .ok_or_else(|| format!("dangling ref {reference}"))?;
        return validate(target, root, value);
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{value} not in enum {options:?}"));
        }
    }
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("unknown type {other}")),
        };
        if !ok {
            return Err(format!("expected {ty}, got {value}"));
        }
    }
    if let Some(minimum) = schema.get("minimum").and_then(Value::as_i64) {
        if let Some(n) = value.as_i64() {
            if n < minimum {
                return Err(format!("{n} below minimum {minimum}"));
            }
        }
    }
    if let Some(object) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().unwrap();
                if !object.contains_key(key) {
                    return Err(format!("missing required key {key}"));
                }
            }
        }
        let properties = schema.get("properties").and_then(Value::as_object);
        for (key, item) in object {
            if let Some(prop_schema) = properties.and_then(|p| p.get(key)) {
                validate(prop_schema, root, item).map_err(|e| format!("{key}: {e}"))?;
            } else if let Some(extra) = schema.get("additionalProperties") {
                match extra {
                    Value::Bool(false) => return Err(format!("unexpected key {key}")),
                    Value::Bool(true) => {}
                    other => validate(other, root, item).map_err(|e| format!("{key}: {e}"))?,
                }
            }
        }
        if let Some(min) = schema.get("minProperties").and_then(Value::as_u64) {
            if (object.len() as u64) < min {
                return Err("too few properties".into());
            }
        }
        if let Some(max) = schema.get("maxProperties").and_then(Value::as_u64) {
            if (object.len() as u64) > max {
                return Err("too many properties".into());
            }
        }
    }
    if let Some(array) = value.as_array() {
        if let Some(item_schema) = schema.get("items") {
            for (i, item) in array.iter().enumerate() {
                validate(item_schema, root, item).map_err(|e| format!("[{i}]: {e}"))?;
            }
        }
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (array.len() as u64) < min {
                return Err("too few items".into());
            }
        }
        if let Some(max) = schema.get("maxItems").and_then(Value::as_u64) {
            if (array.len() as u64) > max {
                return Err("too many items".into());
            }
        }
    }
    Ok(())
}

fn assert_schema(name: &str, text: &str) {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(&schema_path).unwrap()).unwrap();
    let value: Value = serde_json::from_str(text)
        .unwrap_or_else(|e| panic!("output is not JSON for {name}: {e}\n{text}"));
    validate(&schema, &schema, &value)
        .unwrap_or_else(|e| panic!("schema {name} violated: {e}\n{text}"));
}

#[test]
fn summary_line_matches_expected_format() {
    let dir = tempdir();
    let input = write_input(&dir, "theta.rot", THETA);
    let out = run(&["summary", input.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "V=2 E=3 F=3 χ=2 orientable genus=0\n");

    let json = run(&["summary", "--json", input.to_str().unwrap()]);
    assert_schema("summary.schema.json", &stdout(&json));
}

#[test]
fn dual_json_round_trips_and_has_expected_counts() {
    let dir = tempdir();
    let input = write_input(&dir, "theta.rot", THETA);
    let out = run(&["dual", "--edges", "a", "--json", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_schema("gem.schema.json", &text);
    // feed it back through summary
    let dual_path = write_input(&dir, "dual.json", &text);
    let summary = run(&["summary", dual_path.to_str().unwrap()]);
    assert_eq!(stdout(&summary), "V=1 E=3 F=2 χ=0 orientable genus=2\n");
}

#[test]
fn validate_exit_codes() {
    let dir = tempdir();
    let good = write_input(&dir, "theta.rot", THETA);
    assert_eq!(run(&["validate", good.to_str().unwrap()]).status.code(), Some(0));

    let bad = write_input(&dir, "bad.rot", "vertex u: a+\n");
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("edge a has 1 dart"));

    let json = run(&["validate", "--json", bad.to_str().unwrap()]);
    assert_schema("validation.schema.json", &stdout(&json));

    // usage errors exit 1
    let usage = run(&["summary", "/nonexistent-path.rot"]);
    assert_eq!(usage.status.code(), Some(1));
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn check_c2c_and_obstructions_json() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let out = run(&["check-c2c", "--json", theta.to_str().unwrap()]);
    assert_schema("checkc2c.schema.json", &stdout(&out));
    assert!(stdout(&out).contains("\"yes\""));

    let loop_link = write_input(&dir, "ll.rot", LOOP_LINK);
    let out = run(&["check-c2c", "--json", loop_link.to_str().unwrap()]);
    assert_schema("checkc2c.schema.json", &stdout(&out));
    assert!(stdout(&out).contains("\"no\""));

    let out = run(&["obstructions", "--json", loop_link.to_str().unwrap()]);
    assert_schema("obstructions.schema.json", &stdout(&out));
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["blocks_all_partial_duals"], Value::Bool(true));
}

#[test]
fn trace_and_conditions_json() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let out = run(&["trace", "--edges", "a", theta.to_str().unwrap()]);
    assert_schema("trace.schema.json", &stdout(&out));

    let out = run(&["conditions", "--edges", "a", "--json", theta.to_str().unwrap()]);
    assert_schema("conditions.schema.json", &stdout(&out));
    assert!(stdout(&out).contains("\"no\""));

    let explain = run(&["conditions", "--edges", "a", "--explain", theta.to_str().unwrap()]);
    assert!(stdout(&explain).contains("walk 0"));
}

#[test]
fn search_report_schema_and_exit_codes() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let report_path = dir.join("report.json");
    let csv_path = dir.join("rows.csv");
    let out = run(&[
        "search",
        "--mode",
        "cross-check",
        "--out",
        report_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
        theta.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = std::fs::read_to_string(&report_path).unwrap();
    assert_schema("search.schema.json", &report);
    let value: Value = serde_json::from_str(&report).unwrap();
    assert_eq!(value["disagreements"], serde_json::json!([]));
    assert_eq!(value["total_subsets"], serde_json::json!(8));

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("bitmask,verdict,failing_condition\n"));
    assert_eq!(csv.lines().count(), 9);
    assert!(csv.contains("0,yes,"));
    assert!(csv.contains("7,yes,"));
    assert!(csv.contains("1,no,mc"));

    // cap violations are usage errors
    let capped = run(&["search", "--cap", "2", theta.to_str().unwrap()]);
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn convert_round_trip_is_stable() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let json_path = dir.join("theta.json");
    let out = run(&[
        "convert",
        "--to",
        "json",
        "--out",
        json_path.to_str().unwrap(),
        theta.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_schema("gem.schema.json", &std::fs::read_to_string(&json_path).unwrap());

    let back = run(&["convert", "--to", "rot", json_path.to_str().unwrap()]);
    let text1 = stdout(&back);
    // one full pass is stable: convert the canonical text again
    let rot_path = write_input(&dir, "canon.rot", &text1);
    let json2_path = dir.join("theta2.json");
    run(&[
        "convert",
        "--to",
        "json",
        "--out",
        json2_path.to_str().unwrap(),
        rot_path.to_str().unwrap(),
    ]);
    let back2 = run(&["convert", "--to", "rot", json2_path.to_str().unwrap()]);
    assert_eq!(stdout(&back2), text1);
}

#[test]
fn export_dot_targets() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let gem_dot = stdout(&run(&["export-dot", theta.to_str().unwrap()]));
    assert_eq!(gem_dot.matches(" -- ").count(), 18);
    let jewel_dot = stdout(&run(&[
        "export-dot",
        "--what",
        "jewel",
        theta.to_str().unwrap(),
    ]));
    assert_eq!(jewel_dot.matches("color=green").count(), 6);
    let lambda_dot = stdout(&run(&[
        "export-dot",
        "--what",
        "lambda",
        "--edges",
        "a",
        theta.to_str().unwrap(),
    ]));
    assert_eq!(lambda_dot.matches(" -- ").count(), 4);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    for args in [
        vec!["summary", "--json"],
        vec!["dual", "--edges", "a,b", "--json"],
        vec!["trace", "--mask", "0x3"],
        vec!["conditions", "--edges", "a", "--json"],
        vec!["search", "--json"],
        vec!["export-dot"],
    ] {
        let mut full = args.clone();
        let path = theta.to_str().unwrap();
        full.push(path);
        let a = stdout(&run(&full));
        let b = stdout(&run(&full));
        assert_eq!(a, b, "output differs for {args:?}");
        assert!(!a.is_empty());
    }
}

#[test]
fn twist_matches_dual_and_petrie_is_involution() {
    let dir = tempdir();
    let theta = write_input(&dir, "theta.rot", THETA);
    let path = theta.to_str().unwrap();
    let via_twist = stdout(&run(&["twist", "--spec", "a:rb", "--json", path]));
    let via_dual = stdout(&run(&["dual", "--edges", "a", "--json", path]));
    assert_eq!(via_twist, via_dual);

    let petrie = stdout(&run(&["petrie", "--edges", "a,b,c", "--json", path]));
    assert_schema("gem.schema.json", &petrie);
    let petrie_path = write_input(&dir, "petrie.json", &petrie);
    // the Petrie dual of planar theta lives on the torus
    let summary = stdout(&run(&["summary", petrie_path.to_str().unwrap()]));
    assert_eq!(summary, "V=2 E=3 F=1 χ=0 orientable genus=2\n");
    let back = stdout(&run(&[
        "petrie",
        "--edges",
        "a,b,c",
        "--json",
        petrie_path.to_str().unwrap(),
    ]));
    let original = stdout(&run(&["convert", "--to", "json", path]));
    assert_eq!(back, original);
}

#[test]
fn negative_loop_summary() {
    let dir = tempdir();
    let input = write_input(&dir, "loop.rot", NEG_LOOP);
    let out = run(&["summary", input.to_str().unwrap()]);
    assert_eq!(stdout(&out), "V=1 E=1 F=1 χ=1 nonorientable genus=1\n");
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "gembed-cli-test-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
