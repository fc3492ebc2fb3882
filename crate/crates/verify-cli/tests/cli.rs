use std::process::{Command, Output};

use verify_cli::{emit_table, run_suite, SuiteConfig, Table, TableKind, TableParams};

fn ff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ff")).args(args).env_remove("FF_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(tsv: &str) -> Vec<Vec<String>> {
    tsv.lines().skip(1).map(|l| l.split('\t').map(String::from).collect()).collect()
}

#[test]
fn exit_codes() {
    let ok = ff(&["check", "R3.23"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains(r#""suite_id":"R3.23""#));

    // P3.5 fails over F₂ on non-regular partitions of length ≥ 3
    let fail = ff(&["check", "P3.5", "--max-deg", "3", "--max-dim", "2"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("λ=1,1,1 k=2"));

    let unknown = ff(&["check", "X9.9"]);
    assert_eq!(unknown.status.code(), Some(2));
    let err = String::from_utf8(unknown.stderr).unwrap();
    assert!(err.contains("X9.9") && err.contains("L3.2a"), "{err}");

    assert_eq!(ff(&["check", "GLGEN", "--max-dim", "0"]).status.code(), Some(2));
    assert_eq!(ff(&["table", "dims", "--functor", "Q[", "--dim", "2"]).status.code(), Some(2));
    assert_eq!(ff(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let run = |seed: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ff"));
        c.args(args).env_remove("FF_SEED");
        if let Some(s) = seed {
            c.env("FF_SEED", s);
        }
        stdout(&c.output().unwrap())
    };
    let args = ["table", "constituents", "--functor", "Lam[2,1]", "--dim", "3"];
    let by_env = run(Some("7"), &args);
    assert!(by_env.lines().nth(1).unwrap().ends_with("\t7"), "{by_env}");
    let mut flagged = args.to_vec();
    flagged.extend(["--seed", "7"]);
    assert_eq!(run(None, &flagged), by_env);
}

#[test]
fn weyl_dimensions() {
    let o = ff(&["dims", "--functor", "W[2,1]", "--upto", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let got: Vec<String> = rows(&stdout(&o)).into_iter().map(|r| r[2].clone()).collect();
    assert_eq!(got, ["0", "0", "2", "8", "20"]);
}

#[test]
fn constituent_table() {
    let o = ff(&["table", "constituents", "--functor", "Lam[2,1]", "--dim", "3"]);
    let got: Vec<(String, String, String)> = rows(&stdout(&o)).into_iter().map(|r| (r[2].clone(), r[3].clone(), r[4].clone())).collect();
    assert_eq!(got.len(), 2);
    assert!(got.contains(&("2,1".into(), "8".into(), "1".into())));
    assert!(got.contains(&("3".into(), "1".into(), "1".into())));
}

#[test]
fn branching_table() {
    let o = ff(&["table", "branching", "--functor", "3,1", "--dim", "3"]);
    let got: Vec<(String, String)> = rows(&stdout(&o)).into_iter().map(|r| (r[3].clone(), r[4].clone())).collect();
    // W_(2,1)(F₂³) and W_(3)(F₂³)
    assert_eq!(got, [("2,1".to_string(), "8".to_string()), ("3".to_string(), "1".to_string())]);
}

#[test]
fn tables_round_trip_byte_exactly() {
    let cases = [
        (TableKind::Dims, "S3", 4),
        (TableKind::Constituents, "T2", 3),
        (TableKind::Branching, "[3,1]", 4),
        (TableKind::Schur, "3,2", 5),
    ];
    for (kind, literal, k) in cases {
        let t = emit_table(kind, &TableParams { literal: literal.into(), k, max_degree: None, seed: 1 }).unwrap();
        let tsv = t.to_tsv();
        assert_eq!(Table::from_tsv(kind, &tsv).unwrap().to_tsv(), tsv);
        let js = t.to_json();
        assert_eq!(Table::from_json(&js).unwrap().to_json(), js);
        assert_eq!(Table::from_json(&js).unwrap(), t);
    }
    assert!(Table::from_tsv(TableKind::Dims, "functor\tk\n").is_err());
}

#[test]
fn json_and_tsv_match_the_library() {
    let o = ff(&["table", "schur", "--functor", "3,2", "--dim", "5", "--format", "json"]);
    let t = Table::from_json(&stdout(&o)).unwrap();
    assert_eq!(t.rows, [["3,2", "5", "75", "1", "74"]]);
}

#[test]
fn report_to_file() {
    let path = std::env::temp_dir().join(format!("ff-report-{}.tsv", std::process::id()));
    let o = ff(&["check", "GLGEN", "--format", "tsv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("suite\tstatus\tcases_run\tfailures\tstatement\nGLGEN\tpass\t3\t0\t"), "{text}");
}

#[test]
fn small_suites_through_the_library() {
    let cfg = SuiteConfig::default();
    let r = run_suite("R3.23", &cfg).unwrap();
    assert!(r.passed());
    assert_eq!(r.cases_run, 5);
    let g = run_suite("GLGEN", &cfg).unwrap();
    assert!(g.passed(), "{:?}", g.failures);
    assert!(run_suite("nope", &cfg).is_err());
}

#[test]
fn gl_generator_closure_sizes() {
    for (k, order) in [(2, 6u128), (3, 168), (4, 20160)] {
        let gens = functors::gl::gl_generators_dense(k).unwrap();
        assert_eq!(functors::gl::closure_size(k, &gens) as u128, order);
        assert_eq!(functors::gl::gl_order(k), order);
    }
}
