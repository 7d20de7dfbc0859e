//! End-to-end tests of the binary: flag handling, exit codes, output in
//! both formats, and validity of every JSON document against the schema
//! files shipped in `schemas/`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by exit, not signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Parse stdout as JSON and validate it against a shipped schema.
fn validated(out: &Output, schema_name: &str) -> Value {
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{schema_name}.schema.json"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    let schema: Value = serde_json::from_str(&text).expect("schema file is JSON");
    if let Err(msg) = schema::validate(&schema, &doc) {
        panic!("{schema_name} schema violation: {msg}\ndocument: {doc:#}");
    }
    doc
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|x| x.as_i64().expect("small integer"))
        .collect()
}

#[test]
fn betti_of_the_triangle_in_both_formats() {
    let graph = fixture("triangle.graph");
    let text = run(&["betti", "--graph", graph.to_str().unwrap(), "--parity", "even"]);
    assert_eq!(code(&text), 0, "stderr: {}", stderr(&text));
    let body = stdout(&text);
    assert!(body.contains("parity even"), "{body}");
    assert!(body.contains("weight  rank  torsion"), "{body}");

    let json = run(&[
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--format",
        "json",
    ]);
    assert_eq!(code(&json), 0);
    let doc = validated(&json, "betti");
    assert_eq!(ints(&doc["ranks"]), vec![1, 3, 2, 0]);
    assert_eq!(ints(&doc["weights"]), vec![0, 1, 2, 3]);
    assert!(doc["torsion"].as_array().unwrap().iter().all(|t| t.as_array().unwrap().is_empty()));
}

#[test]
fn betti_reports_true_degrees_when_r_is_given() {
    let graph = fixture("triangle.graph");
    let out = run(&[
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--r",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "betti");
    assert_eq!(doc["parity"], "even");
    assert_eq!(doc["r"], 4);
    assert_eq!(ints(&doc["degrees"]), vec![0, 3, 6, 9]);
}

#[test]
fn betti_honours_the_weight_window() {
    let graph = fixture("triangle.graph");
    let out = run(&[
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "odd",
        "--weights",
        "1..2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "betti");
    assert_eq!(ints(&doc["weights"]), vec![1, 2]);
    assert_eq!(ints(&doc["ranks"]), vec![3, 2]);
}

#[test]
fn regime_flags_are_validated() {
    let graph = fixture("triangle.graph");
    let missing = run(&["betti", "--graph", graph.to_str().unwrap()]);
    assert_eq!(code(&missing), 2);
    assert!(stderr(&missing).contains("parity"), "{}", stderr(&missing));

    let too_small = run(&["betti", "--graph", graph.to_str().unwrap(), "--r", "1"]);
    assert_eq!(code(&too_small), 2);

    let both = run(&[
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--r",
        "2",
    ]);
    assert_eq!(code(&both), 2);
}

#[test]
fn poincare_of_a_loop_is_the_zero_polynomial() {
    let graph = fixture("loop.graph");
    let text = run(&["poincare", "--graph", graph.to_str().unwrap()]);
    assert_eq!(code(&text), 0);
    assert_eq!(stdout(&text), "P(q) = 0\n");

    let json = run(&[
        "poincare",
        "--graph",
        graph.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let doc = validated(&json, "poincare");
    assert_eq!(ints(&doc["polynomial"]["coeffs"]), vec![0]);
}

#[test]
fn poincare_chromatic_crosscheck_passes_on_k4() {
    let graph = fixture("k4.graph");
    let out = run(&[
        "poincare",
        "--graph",
        graph.to_str().unwrap(),
        "--r",
        "3",
        "--chromatic",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc = validated(&out, "poincare");
    assert_eq!(doc["chromatic"]["matches"], true);
    assert_eq!(ints(&doc["polynomial"]["coeffs"]), vec![1, 6, 11, 6]);
    assert_eq!(ints(&doc["chromatic"]["ranks"]), vec![1, 6, 11, 6, 0]);
}

#[test]
fn chromatic_crosscheck_refuses_multigraphs() {
    let graph = fixture("pair.graph");
    let out = run(&["poincare", "--graph", graph.to_str().unwrap(), "--chromatic"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("simple"), "{}", stderr(&out));
}

#[test]
fn basis_respects_the_order_flag() {
    let graph = fixture("triangle.graph");
    let out = run(&[
        "basis",
        "--graph",
        graph.to_str().unwrap(),
        "--order",
        "e2,e1,e0",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "basis");
    assert_eq!(ints(&doc["order"]), vec![2, 1, 0]);
    assert_eq!(doc["total"], 6);
    let weights = doc["weights"].as_array().unwrap();
    // Least edge of the only circuit is now e2, so the broken circuit is
    // {e0, e1} and weight 2 keeps the monomials containing e2.
    assert_eq!(weights[2]["monomials"], serde_json::json!(["e0e2", "e1e2"]));
    assert_eq!(weights[3]["monomials"], serde_json::json!([]));

    let bad_order = run(&[
        "basis",
        "--graph",
        graph.to_str().unwrap(),
        "--order",
        "e2,e1",
    ]);
    assert_eq!(code(&bad_order), 2);
}

#[test]
fn reduce_rewrites_into_the_nbc_basis() {
    let graph = fixture("triangle.graph");
    // e1e2 = -e0e1 + e0e2 modulo the even Arnold relation of the triangle.
    let out = run(&[
        "reduce",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--element",
        "+1*e1e2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc = validated(&out, "reduce");
    assert_eq!(doc["weight"], 2);
    assert_eq!(doc["basis"], serde_json::json!(["e0e1", "e0e2"]));
    assert_eq!(ints(&doc["coordinates"]), vec![-1, 1]);
    assert_eq!(doc["normal_form"], "-1·e0e1 +1·e0e2");

    // The Arnold class itself reduces to zero.
    let zero = run(&[
        "reduce",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--element",
        "+1*e1e2 -1*e0e2 +1*e0e1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&zero), 0);
    let doc = validated(&zero, "reduce");
    assert_eq!(ints(&doc["coordinates"]), vec![0, 0]);
    assert_eq!(doc["normal_form"], "0");
}

#[test]
fn reduce_rejects_inhomogeneous_and_foreign_input() {
    let graph = fixture("triangle.graph");
    let mixed = run(&[
        "reduce",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--element",
        "+1*e0 +1*e0e1",
    ]);
    assert_eq!(code(&mixed), 2);
    assert!(stderr(&mixed).contains("homogeneous"), "{}", stderr(&mixed));

    let foreign = run(&[
        "reduce",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--element",
        "+1*e9",
    ]);
    assert_eq!(code(&foreign), 2);
}

#[test]
fn arnold_lists_one_class_per_circuit() {
    let graph = fixture("diamond.graph");
    let out = run(&[
        "arnold",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "odd",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "arnold");
    let classes = doc["classes"].as_array().unwrap();
    // Two triangles through the chord and the outer four-cycle.
    assert_eq!(classes.len(), 3);
    let mut sizes: Vec<usize> = classes
        .iter()
        .map(|c| c["edges"].as_array().unwrap().len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![3, 3, 4]);
}

#[test]
fn check_all_passes_on_k4() {
    let graph = fixture("k4.graph");
    let out = run(&[
        "check",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--all",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc = validated(&out, "check");
    assert_eq!(doc["checks"].as_array().unwrap().len(), 5);
    let reports = doc["reports"].as_array().unwrap();
    // 5 kinds x 6 edges x weights 0..=6.
    assert_eq!(reports.len(), 5 * 6 * 7);
    assert!(reports.iter().all(|r| r["pass"] == true));
}

#[test]
fn check_subset_and_weight_window() {
    let graph = fixture("triangle.graph");
    let out = run(&[
        "check",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "odd",
        "--checks",
        "ses,gsurj",
        "--weights",
        "1..2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "check");
    assert_eq!(doc["checks"], serde_json::json!(["ses", "gsurj"]));
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2 * 3 * 2);
    assert!(reports.iter().all(|r| {
        let w = r["weight"].as_i64().unwrap();
        (1..=2).contains(&w)
    }));

    let typo = run(&[
        "check",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "odd",
        "--checks",
        "sse",
    ]);
    assert_eq!(code(&typo), 2);
}

#[test]
fn check_json_is_byte_identical_across_runs() {
    let graph = fixture("k4.graph");
    let args = [
        "check",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let betti_args = [
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "odd",
        "--format",
        "json",
    ];
    assert_eq!(run(&betti_args).stdout, run(&betti_args).stdout);
}

#[test]
fn delcon_tree_reports_polynomial_and_cache() {
    let graph = fixture("k4.graph");
    let out = run(&[
        "delcon-tree",
        "--graph",
        graph.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = validated(&out, "delcon-tree");
    assert_eq!(ints(&doc["polynomial"]["coeffs"]), vec![1, 6, 11, 6]);
    assert!(doc["cache_misses"].as_i64().unwrap() > 0);
    assert_eq!(doc["root"]["kind"], "split");
}

#[test]
fn unreadable_and_malformed_graphs_exit_2() {
    let missing = run(&["betti", "--graph", "/no/such/file", "--parity", "even"]);
    assert_eq!(code(&missing), 2);

    let graph = fixture("malformed.graph");
    let malformed = run(&["betti", "--graph", graph.to_str().unwrap(), "--parity", "even"]);
    assert_eq!(code(&malformed), 2);
    assert!(stderr(&malformed).contains("line 1"), "{}", stderr(&malformed));
}

#[test]
fn text_and_json_report_the_same_numbers() {
    let graph = fixture("k4.graph");
    let text = run(&["betti", "--graph", graph.to_str().unwrap(), "--parity", "even"]);
    let json = run(&[
        "betti",
        "--graph",
        graph.to_str().unwrap(),
        "--parity",
        "even",
        "--format",
        "json",
    ]);
    let doc = validated(&json, "betti");
    let body = stdout(&text);
    for (k, rank) in ints(&doc["ranks"]).iter().enumerate() {
        let key = k.to_string();
        let ranks_in_text: Vec<String> = body
            .lines()
            .filter_map(|l| {
                let mut cols = l.split_whitespace();
                (cols.next() == Some(key.as_str()))
                    .then(|| cols.next().expect("rank column").to_string())
            })
            .collect();
        assert_eq!(ranks_in_text, vec![rank.to_string()], "weight {k} in:\n{body}");
    }
}

/// A small structural validator for the draft-07 subset the shipped
/// schemas use: type, enum, required, properties, additionalProperties,
/// items, oneOf, and local $ref into definitions. Integer means a number
/// whose literal has no decimal point or exponent, so arbitrary-precision
/// values stay valid.
mod schema {
    use serde_json::Value;

    pub fn validate(schema: &Value, doc: &Value) -> Result<(), String> {
        check(schema, doc, schema, "$".to_string())
    }

    fn check(s: &Value, v: &Value, root: &Value, path: String) -> Result<(), String> {
        if let Some(r) = s.get("$ref").and_then(Value::as_str) {
            let target = resolve(root, r).ok_or_else(|| format!("{path}: dangling $ref {r}"))?;
            return check(target, v, root, path);
        }
        if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
            let hits = alts
                .iter()
                .filter(|alt| check(alt, v, root, path.clone()).is_ok())
                .count();
            if hits != 1 {
                return Err(format!(
                    "{path}: {hits} of {} oneOf branches matched",
                    alts.len()
                ));
            }
            return Ok(());
        }
        if let Some(t) = s.get("type") {
            let names: Vec<&str> = match t {
                Value::String(one) => vec![one.as_str()],
                Value::Array(many) => many.iter().filter_map(Value::as_str).collect(),
                _ => return Err(format!("{path}: malformed type keyword")),
            };
            if !names.iter().any(|n| type_matches(n, v)) {
                return Err(format!(
                    "{path}: expected {}, got {}",
                    names.join("|"),
                    kind_of(v)
                ));
            }
        }
        if let Some(allowed) = s.get("enum").and_then(Value::as_array) {
            if !allowed.contains(v) {
                return Err(format!("{path}: {v} is not among the allowed values"));
            }
        }
        if let Some(obj) = v.as_object() {
            if let Some(required) = s.get("required").and_then(Value::as_array) {
                for key in required.iter().filter_map(Value::as_str) {
                    if !obj.contains_key(key) {
                        return Err(format!("{path}: missing required key {key:?}"));
                    }
                }
            }
            let props = s.get("properties").and_then(Value::as_object);
            if let Some(props) = props {
                for (key, sub) in props {
                    if let Some(child) = obj.get(key) {
                        check(sub, child, root, format!("{path}.{key}"))?;
                    }
                }
            }
            if s.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in obj.keys() {
                    if props.is_none_or(|p| !p.contains_key(key)) {
                        return Err(format!("{path}: unexpected key {key:?}"));
                    }
                }
            }
        }
        if let (Some(items), Some(elems)) = (s.get("items"), v.as_array()) {
            for (i, elem) in elems.iter().enumerate() {
                check(items, elem, root, format!("{path}[{i}]"))?;
            }
        }
        Ok(())
    }

    fn resolve<'a>(root: &'a Value, pointer: &str) -> Option<&'a Value> {
        let rest = pointer.strip_prefix("#/")?;
        rest.split('/').try_fold(root, |v, key| v.get(key))
    }

    fn type_matches(name: &str, v: &Value) -> bool {
        match name {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            "number" => v.is_number(),
            "integer" => match v {
                Value::Number(n) => {
                    let lit = n.to_string();
                    !lit.contains(['.', 'e', 'E'])
                }
                _ => false,
            },
            _ => false,
        }
    }

    fn kind_of(v: &Value) -> &'static str {
        match v {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        }
    }

    #[cfg(test)]
    mod tests {
        use super::validate;
        use serde_json::json;

        #[test]
        fn the_validator_actually_rejects() {
            let schema = json!({
                "type": "object",
                "required": ["a"],
                "additionalProperties": false,
                "properties": {
                    "a": {"type": "integer"},
                    "b": {"type": ["integer", "null"]}
                }
            });
            assert!(validate(&schema, &json!({"a": 1})).is_ok());
            assert!(validate(&schema, &json!({"a": 1, "b": null})).is_ok());
            assert!(validate(&schema, &json!({"a": 1.5})).is_err());
            assert!(validate(&schema, &json!({"b": 2})).is_err());
            assert!(validate(&schema, &json!({"a": 1, "c": 0})).is_err());
        }

        #[test]
        fn refs_and_one_of_recurse() {
            let schema = json!({
                "oneOf": [
                    {"type": "null"},
                    {"$ref": "#/definitions/pair"}
                ],
                "definitions": {
                    "pair": {
                        "type": "array",
                        "items": {"type": "integer"}
                    }
                }
            });
            assert!(validate(&schema, &json!(null)).is_ok());
            assert!(validate(&schema, &json!([1, 2])).is_ok());
            assert!(validate(&schema, &json!("no")).is_err());
        }
    }
}
