use std::process::{Command, Output};

use proptest::prelude::*;
use qheis::algebra::{BasisWord, Element};
use qheis::coeff::RatFun;
use qheis_cli::json::OUTPUT_SCHEMA;
use qheis_cli::{eval_ast, parse};
use serde_json::Value;

mod common;
use common::COMMANDS;

fn qheis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qheis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(OUTPUT_SCHEMA).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

#[test]
fn every_command_emits_schema_valid_json() {
    let v = validator();
    for args in COMMANDS {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let out = qheis(&full);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn schema_rejects_mismatched_results() {
    let v = validator();
    let good = serde_json::json!({
        "format_version": 1,
        "command": {"name": "is-lie", "argv": []},
        "result": {"value": true},
    });
    assert!(v.is_valid(&good));
    let mut bad = good.clone();
    bad["command"]["name"] = "bracket".into();
    assert!(!v.is_valid(&bad));
    let mut bad = good;
    bad["result"]["value"] = 1.into();
    assert!(!v.is_valid(&bad));
}

#[test]
fn text_mode_prints_normal_forms() {
    let out = qheis(&["normalize", "C - C^2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(1)*C + (-1)*C^2");
    let out = qheis(&["normalize", "[A,B]"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(1)*C");
}

#[test]
fn identity_json_matches_documented_shape() {
    let out = qheis(&["--json", "normalize", "I"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["result"].to_string(),
        r#"{"terms":[{"b":0,"k":0,"a":0,"coeff":{"num":[1],"den":[1]}}]}"#
    );
}

#[test]
fn exit_codes_separate_syntax_and_domain_errors() {
    let cases: &[(&[&str], i32)] = &[
        (&["normalize", "A * * B"], 2),
        (&["normalize", "qB"], 2),
        (&["normalize", "A/B"], 1),
        (&["normalize", "A/(1 - 1)"], 1),
        (&["norm", "A", "--q", "3/2", "--dim", "10"], 1),
        (&["norm", "A", "--q", "half", "--dim", "10"], 2),
        (&["surrogate", "--side", "A", "--l", "1", "--n", "0", "--k", "1"], 1),
        (
            &[
                "surrogate",
                "--side",
                "A",
                "--l",
                "2",
                "--n",
                "0",
                "--k",
                "1",
                "--coeff",
                "A",
            ],
            1,
        ),
        (&["spectrum", "--op", "C", "--k", "0"], 1),
        (&["radius", "--q", "1/2", "--kmax", "10", "--dim", "10"], 1),
        (&["coherent", "--c", "x", "--q", "1/2", "--dim", "10"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let out = qheis(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn syntax_errors_name_the_column() {
    let out = qheis(&["normalize", "[A, B"]);
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("column 6"), "{msg}");
    assert!(msg.contains("end of input"), "{msg}");
}

#[test]
fn ambiguity_words_parse_and_normalize() {
    for w in ["B*A*B", "A*B*A", "B*A*C", "C*B*A", "A*C*B"] {
        let x = eval_ast(&parse(w).unwrap()).unwrap();
        assert!(!x.is_zero(), "{w}");
        let out = qheis(&["normalize", w, "--rules", "printed"]);
        assert_eq!(out.status.code(), Some(0), "{w}");
    }
}

fn coeff() -> impl Strategy<Value = RatFun> {
    (-5i64..=5, 0u32..=2, 0i64..=3).prop_map(|(n, shape, e)| {
        let base = RatFun::from_int(if n == 0 { 7 } else { n }) * RatFun::q_pow(e);
        match shape {
            0 => base,
            1 => base.checked_div(&RatFun::one_minus_q()).unwrap(),
            _ => base.checked_div(&RatFun::qbracket(3)).unwrap(),
        }
    })
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((coeff(), prop::sample::select(BasisWord::all_up_to(3))), 0..=5)
        .prop_map(|terms| terms.into_iter().map(|(c, w)| (w, c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_form_round_trips(x in element()) {
        let text = x.to_string();
        let back = eval_ast(&parse(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), text);
    }
}
