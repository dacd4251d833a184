use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use tournament_core::construct::{double, y2};
use tournament_core::format::{classifier_from_json, parse_trn, to_trn};
use tournament_core::grouptour::dyadic::{dyadic_restriction, EpsilonWord};
use tournament_core::iso::{find_isomorphism, find_isomorphism_capped, is_isomorphism};
use tournament_core::Tournament;

fn tourn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tourn")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, t: &Tournament) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, to_trn(t)).unwrap();
    p
}

fn gen(args: &[&str]) -> Tournament {
    let o = tourn(&[&["gen"], args].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    parse_trn(&stdout(&o)).unwrap()
}

#[test]
fn gen_examples() {
    assert_eq!(gen(&["y2"]), y2());
    let dir = TempDir::new().unwrap();
    let c3 = write(dir.path(), "C3.trn", &Tournament::cycle3());
    let d = gen(&["double", "--in", c3.to_str().unwrap()]);
    assert_eq!(d.order(), 7);
    assert_eq!(d, double(&Tournament::cycle3()));
    let dy = gen(&["dyadic", "--depth", "4", "--epsilon", "00"]);
    assert_eq!(dy, dyadic_restriction(4, &EpsilonWord::zero()).unwrap());
    assert_eq!(dy.order(), 16);
}

#[test]
fn every_generator_runs() {
    let cases: &[(&[&str], usize)] = &[
        (&["rdouble", "--in", "C3"], 6),
        (&["lex", "--base", "C3", "--fiber", "T2"], 6),
        (&["lex", "--base", "T2", "--fiber", "C3", "--fiber", "1"], 4),
        (&["attach", "--x", "C3", "--y", "T2", "--parts", "0;1", "--e-sides", "0;1,2"], 5),
        (&["n1", "--from", "3", "--to", "9"], 7),
        (&["2n0", "--n", "4"], 8),
        (&["2n0", "--n", "4", "--infinity"], 9),
        (&["2n1", "--from", "1", "--to", "3", "--infinity"], 7),
        (&["cyclic", "--order", "7", "--game", "1,2,4"], 7),
        (&["triadic", "--depth", "2"], 9),
        (&["pjk", "--j", "1", "--k", "2", "--depth", "4"], 32),
        (&["tower", "--spec", "theta=101; Y0=C3; Y1=Z5[1,2]"], 75),
        (&["tower", "--spec", "base=C3; fibers=C3", "--depth", "3"], 27),
    ];
    for (args, n) in cases {
        assert_eq!(gen(args).order(), *n, "{args:?}");
    }
    // deterministic
    let a = tourn(&["gen", "tower", "--spec", "base=Y2; fibers=C3"]);
    let b = tourn(&["gen", "tower", "--spec", "base=Y2; fibers=C3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_reports_and_exit_status() {
    let dir = TempDir::new().unwrap();
    let y = write(dir.path(), "y2.trn", &y2());
    let o = tourn(&["analyze", y.to_str().unwrap(), "--props", "prime,arccyclic"]);
    let out = stdout(&o);
    assert!(out.contains("prime=true"), "{out}");
    assert!(out.contains("arccyclic=false"), "{out}");
    assert_eq!(code(&o), 1);

    let c3 = write(dir.path(), "c3.trn", &Tournament::cycle3());
    let o = tourn(&["analyze", c3.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("prime=true") && stdout(&o).contains("regular=true"));

    for code4 in [0u64, 7, 21, 63] {
        let t = Tournament::from_code(4, code4).unwrap();
        let f = write(dir.path(), "order4.trn", &t);
        let o = tourn(&["analyze", f.to_str().unwrap(), "--props", "prime"]);
        assert_eq!(stdout(&o).trim_end().lines().last(), Some("prime=false"));
        assert_eq!(code(&o), 1);
    }

    let o = tourn(&["analyze", c3.to_str().unwrap(), "--json", "--props", "regular,components,terminal"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regular"], true);
    assert_eq!(v["components"], serde_json::json!([[0, 1, 2]]));
    assert!(v["terminal"].is_null());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("bad.trn");
    std::fs::write(&f, "TRN 1\nn=3\n# fine\n1x\n1\n").unwrap();
    let o = tourn(&["analyze", f.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":4:"), "{err}");
    assert_eq!(code(&tourn(&["analyze", "/nonexistent.trn"])), 2);
    assert_eq!(code(&tourn(&["census"])), 2);
    assert_eq!(code(&tourn(&["gen", "cyclic", "--order", "5", "--game", "1,4"])), 2);
    assert_eq!(code(&tourn(&["analyze", "-", "--props", "bogus"])), 2);
}

#[test]
fn caps_exit_with_three() {
    assert_eq!(code(&tourn(&["census", "--order", "9"])), 3);
    assert_eq!(code(&tourn(&["gen", "n1", "--from", "0", "--to", "100000"])), 3);
    assert_eq!(code(&tourn(&["gen", "n1", "--from", "0", "--to", "9", "--cap", "5"])), 3);
    assert_eq!(code(&tourn(&["gen", "dyadic", "--depth", "30"])), 3);
    let dir = TempDir::new().unwrap();
    let big = write(dir.path(), "big.trn", &Tournament::transitive(14));
    assert_eq!(code(&tourn(&["iso", big.to_str().unwrap(), big.to_str().unwrap(), "--cap", "10"])), 3);
}

#[test]
fn census_examples() {
    let o = tourn(&["census", "--order", "4", "--predicate", "prime"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("prime: 0 of 64"), "{}", stdout(&o));
    let o = tourn(&["census", "--order", "4", "--predicate", "strongly-connected", "--jobs", "2"]);
    assert!(stdout(&o).contains("strongly-connected: 24 of 64"));
    let o = tourn(&["census", "--order", "5", "--unlabeled", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 12);
    assert_eq!(v["kind"], "unlabeled");
    assert_eq!(code(&tourn(&["census", "--order", "3", "--predicate", "nope"])), 2);
}

#[test]
fn iso_status_and_mapping() {
    let dir = TempDir::new().unwrap();
    let z5 = tourn(&["gen", "cyclic", "--order", "5", "--game", "1,2"]);
    let z5p = dir.path().join("z5.trn");
    std::fs::write(&z5p, &z5.stdout).unwrap();
    let da = write(dir.path(), "doublearc.trn", &double(&Tournament::arc_tournament()));
    let o = tourn(&["iso", z5p.to_str().unwrap(), da.to_str().unwrap(), "--mapping"]);
    assert_eq!(code(&o), 0);
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    let m: Vec<usize> = line.split(' ').map(|p| p.split_once("->").unwrap().1.parse().unwrap()).collect();
    let (a, b) = (parse_trn(&String::from_utf8(z5.stdout).unwrap()).unwrap(), double(&Tournament::arc_tournament()));
    assert!(is_isomorphism(&a, &b, &m));

    let y = write(dir.path(), "y2.trn", &y2());
    let o = tourn(&["iso", z5p.to_str().unwrap(), y.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(find_isomorphism(&a, &y2()).unwrap().is_none());
}

#[test]
fn classify_emits_a_rebuildable_tree() {
    let dir = TempDir::new().unwrap();
    let t = gen(&["lex", "--base", "C3", "--fiber", "Y2"]);
    let f = write(dir.path(), "lex.trn", &t);
    let o = tourn(&["classify", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "prime");
    let tree = classifier_from_json(&v).unwrap();
    assert!(find_isomorphism_capped(&tree.reassemble().unwrap(), &t, 15).unwrap().is_some());

    let relabeled = write(dir.path(), "r.trn", &t.relabel(&(0..15).rev().collect::<Vec<_>>()));
    let c1 = tourn(&["classify", "--certificate", f.to_str().unwrap()]);
    let c2 = tourn(&["classify", "--certificate", relabeled.to_str().unwrap()]);
    assert_eq!(code(&c1), 0);
    assert_eq!(c1.stdout, c2.stdout);
    assert!(stdout(&c1).starts_with("01"));
}

#[test]
fn export_formats() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "c3.trn", &Tournament::cycle3());
    let o = tourn(&["export", f.to_str().unwrap()]);
    let dot = stdout(&o);
    for arc in ["v0 -> v1", "v1 -> v2", "v2 -> v0"] {
        assert!(dot.contains(arc), "{dot}");
    }
    assert_eq!(dot.matches("->").count(), 3);
    let labels = dir.path().join("labels.txt");
    std::fs::write(&labels, "a\nb\nc\n").unwrap();
    let o = tourn(&["export", f.to_str().unwrap(), "--labels", labels.to_str().unwrap()]);
    assert!(stdout(&o).contains("\"a\" -> \"b\"") || stdout(&o).contains("a -> b"), "{}", stdout(&o));
    std::fs::write(&labels, "a\nb\n").unwrap();
    assert_eq!(code(&tourn(&["export", f.to_str().unwrap(), "--labels", labels.to_str().unwrap()])), 2);
    let o = tourn(&["export", f.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 3);
}

#[test]
fn reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_tourn"))
        .args(["gen", "double", "--in", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"TRN 1\r\nn=2\r\n# arc\r\n1\r\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(parse_trn(&stdout(&o)).unwrap(), double(&Tournament::arc_tournament()));
}
