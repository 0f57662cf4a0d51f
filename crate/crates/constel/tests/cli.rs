use std::path::{Path, PathBuf};
use std::process::Command;

use constel::report::{Cause, RunReport, Verdict};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Out {
    let out = Command::new(env!("CARGO_BIN_EXE_constel"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs");
    Out {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn save(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let path = dir.join(name);
    std::fs::write(&path, out.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn zigzag_sequence_prints() {
    let out = run(&["seq", "zigzag", "--n", "5"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1,2,3,2,3,4,3,2,3,4,3,4,5\n");
}

#[test]
fn zigzag_graph_checks_out() {
    let dir = tempfile::tempdir().unwrap();
    let f = save(dir.path(), "z8.json", &["gen", "zigzag-graph", "--n", "8"]);
    let out = run(&["check", "zigzagged", "--q", "1", "--order", "natural", s(&f)]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.starts_with("PASS "));
    assert_eq!(run(&["check", "constellation", s(&f)]).code, 0);
    assert_eq!(run(&["check", "ample", s(&f)]).code, 0);
    // the zigzag path goes back and forth, so it is not aligned
    let out = run(&["check", "aligned", s(&f)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("FAIL "));
    assert_eq!(
        run(&["check", "mixed", "--q-minus", "0", "--q", "1", "--q-plus", "0", s(&f)]).code,
        0
    );
    assert_eq!(
        run(&["check", "zigzagged", "--q", "1", "--order", "7,6,5,4,3,2,1,0", s(&f)]).code,
        0
    );
    assert_eq!(
        run(&["check", "zigzagged", "--q", "1", "--order", "0,1", s(&f)]).code,
        64
    );
}

#[test]
fn occultation_carries_its_order() {
    let dir = tempfile::tempdir().unwrap();
    let f = save(
        dir.path(),
        "o.json",
        &["gen", "occultation", "--s", "4", "--c", "2", "--ample"],
    );
    assert!(std::fs::read_to_string(&f).unwrap().contains("\"order\""));
    assert_eq!(run(&["check", "interrupted", s(&f)]).code, 0);
    assert_eq!(run(&["check", "interrupted", "--order", "search", s(&f)]).code, 0);
    assert_eq!(run(&["check", "ample", "--d", "2", s(&f)]).code, 0);
    assert_eq!(run(&["check", "ample", "--d", "3", s(&f)]).code, 1);
}

#[test]
fn suites_from_the_command_line() {
    for args in [
        &["verify", "lemma-align", "--max-n", "12"][..],
        &["verify", "dsw-random", "--count", "200", "--seed", "7"],
        &["verify", "widths", "--max-s", "3", "--max-l", "3"],
        &["verify", "split", "--c", "1", "--q", "1"],
        &["verify", "zigzag-family"],
        &["verify", "deathstar"],
        &["verify", "star-obstruction", "--q", "1"],
    ] {
        let out = run(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stdout);
    }
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["verify", "dsw-random", "--count", "50", "--seed", "11", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let report = RunReport::from_json(&a.stdout).unwrap();
    report.validate().unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(report.command, args.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    assert_eq!(report.wall_clock_ms, None);
    assert_eq!(report.to_json(), a.stdout);
    let other = run(&["verify", "dsw-random", "--count", "50", "--seed", "12", "--json"]);
    assert_ne!(other.stdout, a.stdout);
    let timed = RunReport::from_json(&run(&["seq", "zigzag", "--n", "4", "--json", "--timing"]).stdout).unwrap();
    assert!(timed.wall_clock_ms.is_some());
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let out = run(&["verify", "lemma-align", "--budget", "10", "--json"]);
    assert_eq!(out.code, 2);
    let r = RunReport::from_json(&out.stdout).unwrap();
    assert_eq!(
        (r.verdict, r.cause),
        (Verdict::Inconclusive, Some(Cause::BudgetExceeded))
    );
    assert_eq!(r.budget_spent, 10);
    assert_eq!(
        run(&["verify", "lemma-align", "--budget", "10", "--allow-inconclusive"]).code,
        0
    );
    let out = run(&["verify", "lemma-align", "--budget", "10"]);
    assert!(out.stdout.starts_with("INCONCLUSIVE "));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&[]).code, 64);
    assert_eq!(run(&["gen", "nothing"]).code, 64);
    assert_eq!(run(&["seq", "zigzag"]).code, 64);
    assert_eq!(run(&["seq", "zigzag", "--n", "1"]).code, 64);
    let out = run(&["check", "ample", "/no/such/file.json"]);
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains("/no/such/file.json"));
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["verify", "split", "--help"]).code, 0);
}

#[test]
fn every_verb_is_wired() {
    let groups: [(&str, &[&str]); 8] = [
        (
            "gen",
            &[
                "bipartite",
                "complete",
                "tree",
                "wall",
                "zigzag-graph",
                "occultation",
                "aligned",
            ],
        ),
        (
            "check",
            &[
                "constellation",
                "ample",
                "interrupted",
                "zigzagged",
                "mixed",
                "aligned",
                "sits-in",
            ],
        ),
        ("seq", &["zigzag", "smooth", "max-alignment", "symmetry"]),
        ("hyper", &["params", "dsw", "ramsey"]),
        ("model", &["verify", "linear", "contract", "ample", "find"]),
        ("width", &["tw", "pw", "certify"]),
        ("analyze", &["aux", "contract", "bandwidth"]),
        (
            "verify",
            &[
                "lemma-align",
                "zigzag-family",
                "deathstar",
                "split",
                "star-obstruction",
                "dsw-random",
                "widths",
            ],
        ),
    ];
    for (group, verbs) in groups {
        for verb in verbs {
            let out = run(&[group, verb, "--help"]);
            assert_eq!(out.code, 0, "{group} {verb}");
        }
    }
}

#[test]
fn generated_graphs_are_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let w = save(dir.path(), "w.json", &["gen", "wall", "--r", "2"]);
    let text = std::fs::read_to_string(&w).unwrap();
    let g = constel::io::parse_graph(&text).unwrap();
    assert_eq!(constel::io::write_graph(&g), text);
    assert_eq!(
        run(&["gen", "complete", "--n", "3"]).stdout,
        "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n"
    );
    let tree = run(&["gen", "tree", "--r", "1"]).stdout;
    assert_eq!(tree, "{\"n\":3,\"edges\":[[0,1],[0,2]]}\n");
}

#[test]
fn widths_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = save(dir.path(), "k33.json", &["gen", "bipartite", "--s", "3", "--t", "3"]);
    let cert = save(dir.path(), "cert.json", &["width", "tw", s(&k33)]);
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["value"], 3);
    assert_eq!(c["width"], "treewidth");
    assert_eq!(run(&["width", "certify", s(&k33), s(&cert)]).code, 0);
    let forged = dir.path().join("forged.json");
    std::fs::write(
        &forged,
        std::fs::read_to_string(&cert)
            .unwrap()
            .replace("\"value\":3", "\"value\":2"),
    )
    .unwrap();
    assert_eq!(run(&["width", "certify", s(&k33), s(&forged)]).code, 1);
    let pw = save(dir.path(), "pw.json", &["width", "pw", s(&k33)]);
    assert_eq!(run(&["width", "certify", s(&k33), s(&pw)]).code, 0);

    let cycle = dir.path().join("c5.txt");
    std::fs::write(&cycle, "# a five-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = run(&["width", "tw", "--json", s(&cycle)]);
    let r = RunReport::from_json(&out.stdout).unwrap();
    assert_eq!(r.witnesses["certificate"]["value"], 2);
}

#[test]
fn models_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = save(dir.path(), "k33.json", &["gen", "bipartite", "--s", "3", "--t", "3"]);
    let m = save(
        dir.path(),
        "m.json",
        &["model", "find", "--s", "2", "--t", "2", s(&k33)],
    );
    assert_eq!(run(&["model", "verify", s(&m)]).code, 0);
    assert_eq!(run(&["model", "linear", s(&m)]).code, 0);
    let c = save(dir.path(), "c.json", &["model", "contract", s(&m)]);
    assert_eq!(run(&["check", "constellation", s(&c)]).code, 0);
    assert_eq!(run(&["model", "find", "--s", "4", "--t", "4", s(&k33)]).code, 1);

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"n\":2,\"edges\":[],\"a_sets\":[[0]],\"b_sets\":[[1]]}").unwrap();
    let out = run(&["model", "verify", "--json", s(&broken)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("MissingCrossEdge"));
}

#[test]
fn hypergraphs_and_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    std::fs::write(&h, "{\"n\":3,\"edges\":[[0,1],[1,2],[0,2]]}").unwrap();
    let out = run(&["hyper", "params", "--json", s(&h)]);
    assert_eq!(out.code, 0);
    let r = RunReport::from_json(&out.stdout).unwrap();
    assert_eq!(r.witnesses["nu"]["size"], 1);
    assert_eq!(r.witnesses["tau"]["size"], 2);
    assert_eq!(r.witnesses["lambda"]["size"], 3);
    assert_eq!(run(&["hyper", "dsw", s(&h)]).code, 0);
    let ramsey = [
        "hyper", "ramsey", "--u", "10", "--m", "2", "--n", "3", "--seed", "4", "--json",
    ];
    let a = run(&ramsey);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, run(&ramsey).stdout);

    assert_eq!(run(&["seq", "smooth", "[1,2,3,2]"]).code, 0);
    assert_eq!(run(&["seq", "smooth", "[1,3]"]).code, 1);
    assert_eq!(run(&["seq", "smooth", "[]"]).code, 64);
    assert_eq!(run(&["seq", "symmetry", "--n", "9"]).code, 0);
    assert_eq!(run(&["seq", "max-alignment", "--zigzag", "4", "--k", "3"]).code, 0);
    assert_eq!(run(&["seq", "max-alignment", "--zigzag", "9", "--k", "4"]).code, 1);
    let seq = dir.path().join("z.json");
    std::fs::write(&seq, "[1,2,3,2,3,4]").unwrap();
    assert_eq!(run(&["seq", "max-alignment", "--k", "3", s(&seq)]).code, 0);
}

#[test]
fn analysis_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let z = save(dir.path(), "z.json", &["gen", "zigzag-graph", "--n", "6"]);
    let out = run(&["analyze", "aux", "--json", s(&z)]);
    assert_eq!(out.code, 0);
    let r = RunReport::from_json(&out.stdout).unwrap();
    assert_eq!(
        r.witnesses["edges"],
        serde_json::json!([[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]])
    );
    assert_eq!(run(&["analyze", "bandwidth", s(&z)]).code, 0);
    assert_eq!(run(&["analyze", "bandwidth", "--order", "0,2,1,3,4,5", s(&z)]).code, 1);
    // the whole zigzag graph has long cycles, so contraction is refused
    assert_eq!(run(&["analyze", "contract", s(&z)]).code, 64);
    let small = save(dir.path(), "z3.json", &["gen", "zigzag-graph", "--n", "3"]);
    assert_eq!(run(&["analyze", "contract", s(&small)]).code, 0);
}

#[test]
fn sits_in_reads_a_selection() {
    let dir = tempfile::tempdir().unwrap();
    let z = save(dir.path(), "z.json", &["gen", "zigzag-graph", "--n", "3", "--l", "2"]);
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&z).unwrap()).unwrap();
    let paths = c["paths"].as_array().unwrap();
    let sub = dir.path().join("sub.json");
    std::fs::write(
        &sub,
        serde_json::json!({"apex": [0, 1, 2], "paths": [paths[1]]}).to_string(),
    )
    .unwrap();
    assert_eq!(run(&["check", "sits-in", s(&sub), s(&z)]).code, 0);
    std::fs::write(
        &sub,
        serde_json::json!({"apex": [0, 1, 2], "paths": [paths[0], paths[0]]}).to_string(),
    )
    .unwrap();
    assert_eq!(run(&["check", "sits-in", s(&sub), s(&z)]).code, 1);
}
