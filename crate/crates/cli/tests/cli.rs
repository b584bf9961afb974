use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_packcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report on stdout")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_cycle_is_five_lines() {
    let out = run(&["gen", "cycle", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0 1\n0 4\n1 2\n2 3\n3 4\n"
    );
}

#[test]
fn gen_families() {
    let out = run(&["gen", "gpg", "5", "2", "--format", "g6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "IheA@GUAo\n");
    let out = run(&["gen", "gpg", "5", "2"]);
    assert_eq!(out.stdout.iter().filter(|&&b| b == b'\n').count(), 15);
    let out = run(&["gen", "complete", "4", "--format", "g6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C~\n");

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("prism.el");
    let out = run(&["gen", "prism", "5", "--sigma", "1,3,5,2,4", "-o", path_str(&p)]);
    assert_eq!(code(&out), 0);
    let g = packcolor_cli::parse_edge_list(&fs::read_to_string(&p).unwrap()).unwrap();
    assert!(g.is_petersen());

    for args in [
        &["gen", "tripartite", "2"][..],
        &["gen", "tree", "30", "--seed", "4"],
        &["gen", "two-factor", "--z", "3,5", "--seed", "1"],
        &["gen", "two-factor", "--z", "4,4", "--matching", "7,6,5,4,3,2,1,0"],
        &["gen", "cycle", "6", "--subdivide", "2"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert!(packcolor_cli::parse_edge_list(std::str::from_utf8(&out.stdout).unwrap()).is_ok());
    }
    assert_eq!(
        run(&["gen", "tree", "30", "--seed", "4"]).stdout,
        run(&["gen", "tree", "30", "--seed", "4"]).stdout
    );
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&run(&["gen", "cycle", "2"])), 2);
    assert_eq!(code(&run(&["gen", "cycle"])), 2);
    assert_eq!(code(&run(&["gen", "prism", "4", "--sigma", "1,1,2,3"])), 2);
    assert_eq!(code(&run(&["gen", "two-factor"])), 2);
    assert_eq!(code(&run(&["gen", "moebius", "4"])), 2);
}

#[test]
fn solve_examples() {
    let out = run(&["solve", path_str(&fixture("petersen.g6")), "--S", "1,1,2,2"]);
    assert_eq!(code(&out), 3);
    assert_eq!(report(&out)["result"]["decision"], "not-colorable");

    let out = run(&["solve", path_str(&fixture("s1k4.el")), "--chi-rho"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["result"]["k"], 5);
    assert_eq!(r["graph"]["n"], 10);
    assert_eq!(r["graph"]["m"], 12);

    let out = run(&["solve", path_str(&fixture("k1.el")), "--chi-rho"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["k"], 1);

    let out = run(&[
        "solve",
        path_str(&fixture("five_prism.el")),
        "--S",
        "1,1,2,2",
        "--jobs",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["decision"], "colorable");
}

#[test]
fn solve_out_of_budget_is_indeterminate() {
    // S_2(K_6) needs minutes to settle
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("s2k6.el");
    assert_eq!(
        code(&run(&[
            "gen",
            "complete",
            "6",
            "--subdivide",
            "2",
            "-o",
            path_str(&g)
        ])),
        0
    );
    let out = run(&["solve", path_str(&g), "--chi-rho", "--time-budget", "0.5"]);
    assert_eq!(code(&out), 4);
    let r = report(&out);
    assert_eq!(r["result"]["decision"], "indeterminate");
    assert!(r["result"]["lower"].as_u64() <= Some(10) && r["result"]["upper"].as_u64() >= Some(10));
}

#[test]
fn solve_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    let out = run(&["solve", path_str(&bad), "--chi-rho"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&run(&["solve", "/nonexistent.el", "--chi-rho"])), 2);
    // exactly one of --S / --chi-rho
    assert_eq!(code(&run(&["solve", path_str(&fixture("k1.el"))])), 2);
    assert_eq!(
        code(&run(&["solve", path_str(&fixture("k1.el")), "--S", "0,1"])),
        2
    );
}

#[test]
fn deterministic_reports_are_byte_identical() {
    for args in [
        &[
            "solve",
            path_str(&fixture("s1k4.el")),
            "--chi-rho",
            "--deterministic",
        ][..],
        &["construct", "prism-1122", "9", "--seed", "5", "--deterministic"],
        &[
            "verify",
            path_str(&fixture("five_prism.el")),
            path_str(&fixture("five_prism.col")),
            "--deterministic",
        ],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(report(&a)["timing_ms"], 0);
    }
}

#[test]
fn construct_recipes() {
    let out = run(&["construct", "gpg-1122", "7", "2"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["case_trace"]["fallback_used"], false);
    assert_eq!(r["result"]["verified"], true);

    assert_eq!(code(&run(&["construct", "gpg-1122", "10", "2"])), 5);

    let out = run(&["construct", "petersen-witness"]);
    assert_eq!(code(&out), 0);
    let classes = report(&out)["result"]["classes"].clone();
    let mut class_of = vec![0; 25];
    for (i, members) in classes.as_array().unwrap().iter().enumerate() {
        for v in members.as_array().unwrap() {
            class_of[v.as_u64().unwrap() as usize] = i + 1;
        }
    }
    assert_eq!(class_of, packcolor::constructive::PETERSEN_SUBDIVISION_CLASSES);

    let out = run(&["construct", "prism-1122", "5", "--sigma", "1,3,5,2,4"]);
    assert_eq!(code(&out), 3);
    assert_eq!(report(&out)["result"]["petersen_detected"], true);

    let out = run(&[
        "construct",
        "two-factor-1122",
        "--z",
        "3,3",
        "--matching",
        "3,0,5,2,4,1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["case_trace"]["fallback_used"], false);

    let out = run(&["construct", "si-complete", "6", "3"]);
    assert_eq!(report(&out)["result"]["classes_used"], 3);
}

#[test]
fn construct_from_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.el");
    assert_eq!(
        code(&run(&["gen", "tree", "25", "--seed", "2", "-o", path_str(&tree)])),
        0
    );
    let g_out = dir.path().join("s3.g6");
    let c_out = dir.path().join("s3.col");
    let out = run(&[
        "construct",
        "si-tree",
        path_str(&tree),
        "3",
        "--graph-out",
        path_str(&g_out),
        "--coloring-out",
        path_str(&c_out),
    ]);
    assert_eq!(code(&out), 0);
    // the written files check out independently
    let out = run(&["verify", path_str(&g_out), path_str(&c_out)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));

    assert_eq!(
        code(&run(&[
            "construct",
            "si-tree",
            path_str(&fixture("five_prism.el")),
            "2"
        ])),
        5
    );
    assert_eq!(
        code(&run(&[
            "construct",
            "bipartite-sub",
            path_str(&fixture("petersen.g6"))
        ])),
        5
    );
    let out = run(&["construct", "si-graph", path_str(&fixture("petersen.g6")), "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["graph"]["n"], 55);
    assert_eq!(
        code(&run(&[
            "construct",
            "si-graph",
            path_str(&fixture("petersen.g6")),
            "2"
        ])),
        2
    );
}

#[test]
fn verify_fixture_and_corruption() {
    let graph = fixture("five_prism.el");
    let out = run(&[
        "verify",
        path_str(&graph),
        path_str(&fixture("five_prism.col")),
        "--S",
        "1,1,2,2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["ok"], true);

    // move vertex 1 into class 1 next to its neighbor 0
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.col");
    fs::write(&bad, "0 1 3 5 8\n4 6 9\n2\n7\n").unwrap();
    let out = run(&["verify", path_str(&graph), path_str(&bad), "--S", "1,1,2,2"]);
    assert_eq!(code(&out), 3);
    let v = &report(&out)["result"]["violations"];
    assert_eq!(v[0]["class"], 1);
    assert_eq!(v[0]["u"], 0);
    assert_eq!(v[0]["v"], 1);
    assert_eq!(v[0]["distance"], 1);

    // default S is (1, 2, 3, 4) for a four-line file
    let out = run(&["verify", path_str(&graph), path_str(&fixture("five_prism.col"))]);
    assert_eq!(report(&out)["result"]["S"], serde_json::json!([1, 2, 3, 4]));

    let short = dir.path().join("short.col");
    fs::write(&short, "0 3 5 8\n1 4 6 9\n2\n").unwrap();
    assert_eq!(code(&run(&["verify", path_str(&graph), path_str(&short)])), 2);
    fs::write(&short, "0 3 5 8\n1 4 6 9\n2\n7\n7\n").unwrap();
    assert_eq!(code(&run(&["verify", path_str(&graph), path_str(&short)])), 2);
}

#[test]
fn acceptance_verb() {
    let out = run(&["acceptance", "petersen-witness"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["suites"][0]["id"], "petersen-witness");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("PASS"));

    let out = run(&["acceptance", "prism-sweep-n6"]);
    assert_eq!(code(&out), 0);

    assert_eq!(code(&run(&["acceptance", "no-such-suite"])), 2);
}
