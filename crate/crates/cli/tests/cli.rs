use std::io::Write;
use std::process::{Command, Output, Stdio};

const P1: &str = "p -> q.\nq & not r -> p.\n";
const P2: &str = "p -> q.\n((q -> r) -> r) -> p.\n";
const P3: &str = "(p -> q) & (((q -> p) -> p) -> p)\n";

fn posdep(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_posdep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn posdep");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn line<'a>(text: &'a str, prefix: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(prefix))
        .unwrap_or_else(|| panic!("no `{prefix}` line in:\n{text}"))
}

#[test]
fn models_of_p1() {
    let o = posdep(&["models"], P1);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(line(&out, "stable: "), "∅");
    assert_eq!(line(&out, "supported: "), "∅, {p q}");
    assert_eq!(line(&out, "pointwise stable: "), "∅, {p q}");
    assert!(out.contains("  q <-> p\n"), "{out}");
    assert!(out.contains("  r <-> bot\n"), "{out}");
}

#[test]
fn models_reads_files() {
    let dir = std::env::temp_dir().join(format!("posdep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.lp"), dir.join("b.lp"));
    // No trailing separator: the next file must not run into this one.
    std::fs::write(&a, "p -> q").unwrap();
    std::fs::write(&b, "q & not r -> p").unwrap();
    let o = posdep(&["models", a.to_str().unwrap(), b.to_str().unwrap()], "");
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), stdout(&posdep(&["models"], P1)));
}

#[test]
fn models_of_empty_input() {
    let o = posdep(&["models"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(line(&stdout(&o), "stable: "), "∅");
}

#[test]
fn disjunctive_theory_has_no_supported_models() {
    let o = posdep(&["models"], "p | q.");
    let out = stdout(&o);
    assert_eq!(line(&out, "stable: "), "{p}, {q}");
    assert!(line(&out, "supported: ").starts_with("n/a"));
    assert!(!out.contains("completion"));
}

#[test]
fn models_json() {
    let o = posdep(&["--json", "models"], P1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stable"], serde_json::json!([[]]));
    assert_eq!(v["supported"], serde_json::json!([[], ["p", "q"]]));
    assert_eq!(v["universe"], serde_json::json!(["p", "q", "r"]));
    assert!(v["completion"].is_array());
    let o = posdep(&["--json", "models"], "p | q.");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("supported").is_none());
}

#[test]
fn parse_error_exits_1() {
    let o = posdep(&["models"], "p & (q");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn cap_exceeded_exits_2() {
    let atoms: Vec<String> = (0..25).map(|i| format!("a{i}")).collect();
    let o = posdep(&["models"], &atoms.join(". "));
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("cap"), "{}", stderr(&o));

    let o = posdep(&["--cap", "3", "models"], P1);
    assert_eq!(code(&o), 0);
    let o = posdep(&["--cap", "2", "models"], P1);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&posdep(&["--graph", "xyz", "models"], "")), 1);
    assert_eq!(code(&posdep(&["frobnicate"], "")), 1);
    assert_eq!(code(&posdep(&["--cap", "99", "models"], "p.")), 1);
    assert_eq!(code(&posdep(&["models", "/nonexistent/file.lp"], "")), 1);
    assert_eq!(code(&posdep(&["--help"], "")), 0);
}

#[test]
fn graph_edges() {
    let o = posdep(&["--graph", "sp", "graph", "--format", "edges"], P2);
    assert_eq!(stdout(&o), "q p\np r\n");
    let o = posdep(&["--graph", "pnn", "graph", "--format", "edges"], P2);
    assert!(stdout(&o).lines().any(|l| l == "p q"));
    let o = posdep(
        &["--graph", "sp", "graph", "--format", "edges"],
        "((p -> q) -> r) -> s.",
    );
    assert_eq!(stdout(&o), "s r\n");
    let o = posdep(&["graph", "--format", "edges"], "((p -> q) -> r) -> s.");
    assert_eq!(stdout(&o), "s p\ns r\n");
}

#[test]
fn graph_dot() {
    let o = posdep(&["--graph", "sp", "graph"], P1);
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    assert!(out.contains("  q -> p;\n"));
    assert!(out.contains("  p -> q;\n"));
    let g = posdep::DepGraph::from_dot(&out).unwrap();
    let t = posdep::parse_theory(P1).unwrap();
    assert_eq!(g, posdep::depgraph::g_sp(&t));
}

#[test]
fn tight_exit_codes() {
    let o = posdep(&["--graph", "sp", "tight"], P2);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(line(&out, "acyclic: "), "yes");
    assert_eq!(line(&out, "supported = stable: "), "verified (∅, {p q})");

    let o = posdep(&["--graph", "pnn", "tight"], P2);
    assert_eq!(code(&o), 3);
    assert_eq!(line(&stdout(&o), "acyclic: "), "no");

    let o = posdep(&["--graph", "sp", "tight"], P1);
    assert_eq!(code(&o), 3);
    assert_eq!(line(&stdout(&o), "cyclic component: "), "{p q}");
}

#[test]
fn loops_sp_accepts_unstable_model() {
    let o = posdep(&["--graph", "sp", "loops", "--interp", "p,q"], P3);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let loops: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("loop "))
        .collect();
    assert_eq!(loops, ["{p}", "{q}"]);
    assert_eq!(out.matches("  satisfied: yes").count(), 2);
    assert_eq!(
        line(&out, "verdict: "),
        "accepted by sp-loop oracle (UNSOUND)"
    );
}

#[test]
fn loops_pnn_rejects() {
    let o = posdep(&["--graph", "pnn", "loops", "--interp", "p,q"], P3);
    let out = stdout(&o);
    assert!(out.contains("loop {p q}\n"), "{out}");
    assert_eq!(line(&out, "verdict: "), "rejected by pnn-loop oracle");
}

#[test]
fn loops_single_atom() {
    let o = posdep(&["loops", "--interp", "p"], "p");
    let out = stdout(&o);
    assert!(out.contains("loop {p}\n"));
    assert_eq!(line(&out, "  nes: "), "bot");
    assert_eq!(line(&out, "verdict: "), "accepted by pnn-loop oracle");
}

#[test]
fn loops_rejects_foreign_atoms() {
    let o = posdep(&["loops", "--interp", "z"], "p");
    assert_eq!(code(&o), 1);
}

#[test]
fn nes_command() {
    let o = posdep(&["nes", "--set", "p"], "p");
    assert_eq!(stdout(&o), "nes: bot\nloop formula: p -> not bot\n");
    let o = posdep(&["nes", "--set", ""], "p");
    assert_eq!(stdout(&o), "nes: p\n");
}

#[test]
fn split_exit_codes() {
    let f = "p -> q";
    let g = "((q -> p) -> p) -> p";
    let o = posdep(&["--graph", "sp", "split", f, g, "--p", "q"], "");
    assert_eq!(code(&o), 4, "{}", stdout(&o));
    assert_eq!(line(&stdout(&o), "equivalence: "), "fails");

    let o = posdep(&["--graph", "pnn", "split", f, g, "--p", "q"], "");
    assert_eq!(code(&o), 3);
    assert!(line(&stdout(&o), "condition (iii): ").starts_with("fails, {p q}"));

    let o = posdep(&["--graph", "pnn", "split", "p", "p -> q", "--p", "p"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(line(&stdout(&o), "stable for F & G: "), "{p q}");
}

#[test]
fn split_rejects_atoms_outside() {
    let o = posdep(&["split", "p", "q", "--p", "p,z"], "");
    assert_eq!(code(&o), 1);
}

#[test]
fn fuzz_exit_codes() {
    let o = posdep(&["fuzz", "--property", "theorem1", "--count", "100"], "");
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(line(&stdout(&o), "violations: "), "0");

    let o = posdep(
        &["fuzz", "--property", "loop-oracle-sp", "--count", "300"],
        "",
    );
    assert_eq!(code(&o), 5);
    assert!(stdout(&o).contains("posdep loops --graph sp"));

    let o = posdep(&["fuzz", "--property", "theorem9"], "");
    assert_eq!(code(&o), 1);
    let o = posdep(&["fuzz", "--max-atoms", "5"], "");
    assert_eq!(code(&o), 1);
}

/// The reproduction line of the control's first violation, replayed.
#[test]
fn fuzz_reproduction_replays() {
    let o = posdep(
        &[
            "--json",
            "fuzz",
            "--property",
            "loop-oracle-sp",
            "--count",
            "300",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let input = v["first_violation"]["input"].as_str().unwrap();
    let cmd = v["first_violation"]["reproduce"].as_str().unwrap();
    let interp = cmd
        .split("--interp '")
        .nth(1)
        .and_then(|rest| rest.split('\'').next())
        .unwrap();
    let o = posdep(&["--graph", "sp", "loops", "--interp", interp], input);
    assert_eq!(
        line(&stdout(&o), "verdict: "),
        "accepted by sp-loop oracle (UNSOUND)"
    );
}

#[test]
fn sequential_flag_gives_same_output() {
    for args in [
        &["models"][..],
        &["fuzz", "--property", "chain", "--count", "50"][..],
    ] {
        let par = posdep(args, P1);
        let mut seq_args = vec!["--sequential"];
        seq_args.extend_from_slice(args);
        let seq = posdep(&seq_args, P1);
        assert_eq!(par.stdout, seq.stdout);
    }
}
