use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::{Registry, Validator};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with_threads(args, None)
}

fn run_with_threads(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hesslucas"));
    cmd.args(args).env_remove("HESSLUCAS_THREADS");
    if let Some(t) = threads {
        cmd.env("HESSLUCAS_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn validator(name: &str) -> Validator {
    let poly = schema("polynomial.schema.json");
    let id = poly["$id"].as_str().unwrap().to_string();
    let registry = Registry::new().add(id, poly).unwrap().prepare().unwrap();
    jsonschema::options()
        .with_registry(&registry)
        .build(&schema(name))
        .unwrap()
}

fn assert_valid(v: &Validator, instance: &Value) {
    let errors: Vec<String> = v.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:#?}\n{instance}");
}

#[test]
fn gen_examples() {
    assert_eq!(
        ok(&["gen", "--family", "G", "--k", "5", "--n", "6"]),
        "t1^6 + 6*t1^4*t2 + 6*t1^3*t3 + 9*t1^2*t2^2 + 6*t1^2*t4 + 12*t1*t2*t3 + 2*t2^3 + 6*t1*t5 + 6*t2*t4 + 3*t3^2\n"
    );
    assert_eq!(ok(&["gen", "--family", "lucas", "--n", "0"]), "2\n");
    assert_eq!(
        ok(&[
            "gen",
            "--family",
            "G",
            "--k",
            "2",
            "--n",
            "4",
            "--set",
            "t1=1,t2=1"
        ]),
        "7\n"
    );
    assert_eq!(ok(&["gen", "--family", "perrin", "--n", "9"]), "12\n");
    assert_eq!(
        ok(&["gen", "--family", "miles", "--k", "3", "--n", "7"]),
        "13\n"
    );
    assert_eq!(
        ok(&["gen", "--family", "er", "--k", "3", "--branch", "2", "--n", "-1"]),
        "1\n"
    );
    assert_eq!(
        ok(&["gen", "--family", "R", "--k", "4", "--n", "4"]),
        "2*t2^2 + 4*t4\n"
    );
}

#[test]
fn gen_json_value_validates() {
    let v = validator("polynomial.schema.json");
    let out: Value = serde_json::from_str(&ok(&[
        "gen", "--family", "F", "--k", "4", "--n", "5", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(out["family"], "F");
    assert_eq!(out["k"], 4);
    assert_valid(&v, &out["value"]);
    assert_eq!(
        out["value"]["terms"][0],
        serde_json::json!({"re": "1", "im": "0", "exp": {"1": 4}})
    );
}

#[test]
fn matrix_examples() {
    let latex = ok(&[
        "matrix", "--family", "B", "--k", "4", "--n", "5", "--format", "latex",
    ]);
    assert_eq!(
        latex,
        "\\begin{bmatrix}\n\
t_{1} & -t_{2} & 0 & 0 & 0 \\\\\n\
2 & t_{1} & -t_{2} & 0 & 0 \\\\\n\
3\\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1} & -t_{2} & 0 \\\\\n\
4\\frac{t_{4}}{t_{2}^{3}} & \\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1} & -t_{2} \\\\\n\
0 & \\frac{t_{4}}{t_{2}^{3}} & \\frac{t_{3}}{t_{2}^{2}} & 1 & t_{1}\n\
\\end{bmatrix}\n"
    );
    assert_eq!(
        ok(&["matrix", "--family", "C", "--k", "2", "--n", "1"]),
        "[[t1]]\n"
    );

    let m: Value = serde_json::from_str(&ok(&[
        "matrix", "--family", "H", "--k", "4", "--n", "3", "--format", "json",
    ]))
    .unwrap();
    assert_valid(&validator("matrix.schema.json"), &m);
    assert_eq!(m["n"], 3);
    // h_31 = 3 * i^2 * t3 * t2^-2
    assert_eq!(
        m["entries"][2][0],
        serde_json::json!({"terms": [{"re": "-3", "im": "0", "exp": {"2": -2, "3": 1}}]})
    );
}

#[test]
fn matrix_with_assignment() {
    assert_eq!(
        ok(&[
            "matrix",
            "--family",
            "L",
            "--k",
            "2",
            "--n",
            "2",
            "--set",
            "t1=1,t2=1"
        ]),
        "[[1, 1],\n [2, 1]]\n"
    );
    let o = run(&[
        "matrix", "--family", "L", "--k", "2", "--n", "2", "--set", "t3=1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples_pass_and_validate() {
    let v = validator("report.schema.json");
    for args in [
        &[
            "verify",
            "--identity",
            "per-H",
            "--k",
            "2..5",
            "--n-max",
            "10",
        ][..],
        &[
            "verify",
            "--identity",
            "detper-flip",
            "--trials",
            "200",
            "--n-max",
            "7",
            "--seed",
            "42",
        ],
        &["verify", "--identity", "remark-vi", "--n-max", "10"],
        &[
            "verify",
            "--identity",
            "machenry",
            "--k",
            "2..5",
            "--n-max",
            "12",
        ],
        &[
            "verify",
            "--identity",
            "corollary-5",
            "--k",
            "4",
            "--n-max",
            "8",
        ],
        &["verify", "--identity", "er-miles", "--n-max", "10"],
        &[
            "verify",
            "--identity",
            "oracle",
            "--n-max",
            "5",
            "--trials",
            "20",
        ],
    ] {
        let report: Value = serde_json::from_str(&ok(args)).unwrap();
        assert_valid(&v, &report);
        assert_eq!(report["passed"], true, "{args:?}");
        assert_eq!(report["counterexample"], Value::Null);
    }
}

#[test]
fn every_identity_name_runs() {
    let names = [
        "det-C",
        "det-B",
        "per-H",
        "per-L",
        "detper-flip",
        "remark-i",
        "remark-ii",
        "remark-iii",
        "remark-iv",
        "remark-v",
        "remark-vi",
        "er-miles",
        "machenry",
        "corollary-1",
        "corollary-2",
        "corollary-3",
        "corollary-4",
        "corollary-5",
        "corollary-6",
        "reality",
        "oracle",
    ];
    for name in names {
        let o = run(&[
            "verify",
            "--identity",
            name,
            "--n-max",
            "4",
            "--trials",
            "10",
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn counterexample_exits_one() {
    let o = run(&[
        "verify",
        "--identity",
        "det-C",
        "--k",
        "2..3",
        "--n-min",
        "0",
        "--n-max",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&validator("report.schema.json"), &report);
    assert_eq!(report["passed"], false);
    assert_eq!(
        report["counterexample"],
        serde_json::json!({"k": 2, "n": 0, "expected": "2", "actual": "1"})
    );
    let failing: Vec<&Value> = report["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert_eq!(failing.len(), 2);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = [
        "verify",
        "--identity",
        "detper-flip",
        "--trials",
        "100",
        "--n-max",
        "7",
        "--seed",
        "7",
    ];
    let one = run_with_threads(&args, Some("1"));
    let four = run_with_threads(&args, Some("4"));
    let again = run_with_threads(&args, Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);

    let other_seed = run(&[
        "verify",
        "--identity",
        "detper-flip",
        "--trials",
        "100",
        "--n-max",
        "7",
        "--seed",
        "8",
    ]);
    assert_ne!(one.stdout, other_seed.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain: Value =
        serde_json::from_str(&ok(&["verify", "--identity", "remark-v", "--n-max", "3"])).unwrap();
    assert!(plain.get("wall_time_ms").is_none());
    let timed: Value = serde_json::from_str(&ok(&[
        "verify",
        "--identity",
        "remark-v",
        "--n-max",
        "3",
        "--timing",
    ]))
    .unwrap();
    assert!(timed["wall_time_ms"].as_f64().unwrap() >= 0.0);
    assert_valid(&validator("report.schema.json"), &timed);
}

#[test]
fn bench_counts() {
    let csv = ok(&[
        "bench", "--k", "3", "--n", "4,6,8", "--ring", "int", "--format", "csv",
    ]);
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let ops = |n: &str, method: &str| -> String {
        rows.iter()
            .find(|r| r[3] == n && r[4] == method)
            .map(|r| r[5].to_string())
            .unwrap()
    };
    assert_eq!(ops("8", "brute_per"), "40320");
    assert_eq!(ops("8", "brute_det"), "40320");
    // structured counts grow linearly: equal increments between n = 4, 6, 8
    let h: Vec<i64> = ["4", "6", "8"]
        .iter()
        .map(|n| ops(n, "hess_det").parse().unwrap())
        .collect();
    assert_eq!(h[2] - h[1], h[1] - h[0]);
    assert!(h[2] as usize <= 3 * 8 * 4);

    let skipped = ok(&["bench", "--k", "4", "--n", "12", "--ring", "poly"]);
    assert_eq!(skipped.matches("skipped").count(), 2);
    assert!(skipped.contains("hess_per"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--family", "G", "--k", "1", "--n", "3"][..],
        &["gen", "--family", "nope", "--n", "3"],
        &["gen", "--family", "G", "--k", "3", "--n", "-1"],
        &["gen", "--family", "R", "--k", "2", "--n", "3"],
        &[
            "gen", "--family", "G", "--k", "3", "--n", "2", "--set", "t9=1",
        ],
        &[
            "gen", "--family", "G", "--k", "3", "--n", "2", "--set", "t1",
        ],
        &[
            "gen", "--family", "G", "--k", "3", "--n", "2", "--set", "t1=1/2",
        ],
        &[
            "gen", "--family", "pell", "--k", "3", "--n", "2", "--branch", "4",
        ],
        &[
            "gen", "--family", "G", "--k", "3", "--n", "2", "--branch", "1",
        ],
        &["gen", "--family", "G", "--k", "3"],
        &["matrix", "--family", "X", "--k", "3", "--n", "2"],
        &["matrix", "--family", "C", "--k", "1", "--n", "2"],
        &[
            "matrix", "--family", "C", "--k", "3", "--n", "2", "--format", "pdf",
        ],
        &["verify", "--identity", "bogus"],
        &["verify", "--identity", "remark-v", "--k", "3"],
        &["verify", "--identity", "per-H", "--k", "5..2"],
        &["verify", "--identity", "oracle", "--n-max", "9"],
        &["verify", "--identity", "machenry", "--n-min", "0"],
        &["bench", "--n", "4,x"],
        &["bench", "--n", "0"],
        &["bench", "--family", "H"],
        &["frobnicate"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote to stdout");
        assert!(!o.stderr.is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    for bad in ["0", "-3", "many"] {
        let o = run_with_threads(&["gen", "--family", "lucas", "--n", "3"], Some(bad));
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
