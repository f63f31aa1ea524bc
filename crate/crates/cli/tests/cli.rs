use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quadlabel::book::check_book;
use quadlabel::format::{parse_book, parse_labeling, parse_planegraph};
use quadlabel::rules::{is_valid, Flavor};

const C4: &str = "planegraph v1
n 4
rot s0: a b
rot a: s1 s0
rot s1: b a
rot b: s0 s1
outer: s0 b
special: s0 s1
";

const C4_LABELING: &str = "labeling v1
ang s0: 0 0
ang a: 1 0
ang s1: 1 1
ang b: 0 1
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quadlabel"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn strong_label_c4_is_the_unique_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.pg", C4);
    let o = run(&["strong-label", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), C4_LABELING);
    let again = run(&["strong-label", s(&g)]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn validate_reports_rule_and_location() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.pg", C4);
    let good = write(dir.path(), "good.lab", C4_LABELING);
    assert_eq!(run(&["validate", "strong", s(&g), s(&good)]).status.code(), Some(0));
    let bad = write(dir.path(), "bad.lab", &C4_LABELING.replace("ang a: 1 0", "ang a: 0 0"));
    let o = run(&["validate", "strong", s(&g), s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("invalid\n"));
    assert!(out.contains("G1 at vertex a"));
    let o = run(&["--json", "validate", "weak", s(&g), s(&bad)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(!v["report"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn adjacent_specials_fail_condition_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "adj.pg", "planegraph v1\nrot s0: s1\nrot s1: s0\nouter: s0 s1\nspecial: s0 s1\n");
    let o = run(&["recognize", "generalized", s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NO: condition (1)"));
    let o = run(&["generalized-label", s(&g)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "nonsense", "a", "b"]).status.code(), Some(2));
    assert_eq!(run(&["strong-label", "/nonexistent/file.pg"]).status.code(), Some(1));
}

#[test]
fn orientation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.pg", C4);
    let l = write(dir.path(), "c4.lab", C4_LABELING);
    for flag in [None, Some("--sepdec")] {
        let mut args = vec!["to-orientation", s(&g), s(&l)];
        args.extend(flag);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        let x = write(dir.path(), "x.or", &stdout(&o));
        let mut back = vec!["from-orientation", s(&g), s(&x)];
        back.extend(flag);
        assert_eq!(stdout(&run(&back)), C4_LABELING);
    }
}

#[test]
fn corpus_books_pass_the_checker_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("quads");
    assert_eq!(run(&["gen", "quad", "--n", "8", "--out-dir", s(&corpus)]).status.code(), Some(0));
    let mut files: Vec<_> = fs::read_dir(&corpus).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), quadlabel::oracle::gen_quadrangulations(8).unwrap().len());
    for (i, f) in files.iter().enumerate().step_by(5) {
        let o = run(&["strong-label", s(f)]);
        assert_eq!(o.status.code(), Some(0));
        let lab = write(dir.path(), &format!("{i}.lab"), &stdout(&o));
        let o = run(&["book-embed", s(f), s(&lab)]);
        assert_eq!(o.status.code(), Some(0));
        let g = parse_planegraph(&fs::read_to_string(f).unwrap()).unwrap();
        let b = parse_book(&g, &stdout(&o)).unwrap();
        assert!(check_book(&g, &b).is_valid());
        let book = write(dir.path(), &format!("{i}.book"), &stdout(&o));
        for (kind, input) in [("labeling", &lab), ("book", &book)] {
            let svg = dir.path().join(format!("{i}-{kind}.svg"));
            assert_eq!(run(&["render", kind, s(f), s(input), "--svg", s(&svg)]).status.code(), Some(0));
            let text = fs::read_to_string(&svg).unwrap();
            let doc = roxmltree::Document::parse(&text).unwrap();
            assert_eq!(doc.root_element().tag_name().name(), "svg");
        }
    }
}

#[test]
fn laman_label_validates() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("laman");
    assert_eq!(run(&["gen", "laman", "--n", "6", "--out-dir", s(&corpus)]).status.code(), Some(0));
    for f in fs::read_dir(&corpus).unwrap().map(|e| e.unwrap().path()).take(12) {
        let out_graph = dir.path().join("with-specials.pg");
        let o = run(&["laman-label", s(&f), "--graph-out", s(&out_graph)]);
        assert_eq!(o.status.code(), Some(0));
        let lab = write(dir.path(), "l.lab", &stdout(&o));
        assert_eq!(run(&["validate", "extended-weak", s(&out_graph), s(&lab)]).status.code(), Some(0));
        let g = parse_planegraph(&fs::read_to_string(&out_graph).unwrap()).unwrap();
        assert!(is_valid(&g, &parse_labeling(&g, &stdout(&o)).unwrap(), Flavor::ExtendedWeak));
    }
}

#[test]
fn flips_and_orientation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.pg", C4);
    let o = run(&["--json", "flips", "enumerate", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orientations"], 1);
    assert_eq!(v["minima"], 1);
    let o = bin().args(["flips", "enumerate", s(&g)]).env("QUADLABEL_ORACLE_MAX_EDGES", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["flips", "min", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("orient v1\n"));
    let alpha = write(dir.path(), "a.alpha", "alpha v1\nout s0: 0\nout s1: 0\nout a: 2\nout b: 2\n");
    let o = run(&["orient", s(&g), "--alpha", s(&alpha)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&run(&["orient", s(&g), "--alpha", "two"])));
    let infeasible = write(dir.path(), "b.alpha", "alpha v1\nout s0: 2\nout s1: 0\nout a: 2\nout b: 0\n");
    assert_eq!(run(&["orient", s(&g), "--alpha", s(&infeasible)]).status.code(), Some(1));
}

#[test]
fn recognize_weak() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.pg", C4);
    let o = run(&["recognize", "weak", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let lab = write(dir.path(), "w.lab", &stdout(&o));
    assert_eq!(run(&["validate", "weak", s(&g), s(&lab)]).status.code(), Some(0));
    let p = write(dir.path(), "p.pg", "planegraph v1\nrot s0: x\nrot x: s0 s1\nrot s1: x\nouter: s0 x\nspecial: s0 s1\n");
    let o = run(&["recognize", "weak", s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    let lab = write(dir.path(), "p.lab", &stdout(&o));
    assert_eq!(run(&["validate", "weak", s(&p), s(&lab)]).status.code(), Some(0));
    let star = write(dir.path(), "star.pg", "planegraph v1\nrot s0: x\nrot x: s0 y s1\nrot y: x\nrot s1: x\nouter: s0 x\nspecial: s0 s1\n");
    let o = run(&["recognize", "weak", s(&star)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NO:"));
}
