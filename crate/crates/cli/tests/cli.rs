use std::path::Path;
use std::process::{Command, Output};

fn starcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starcoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel).to_string_lossy().into_owned()
}

#[test]
fn compose_example_matches_golden() {
    let o = starcoh(&["demo", "compose-example"]);
    assert!(o.status.success());
    let golden = std::fs::read_to_string(fixture("golden/compose_example.txt")).unwrap();
    assert_eq!(stdout(&o), golden);
    assert!(golden.contains(r#"P * R = {"source":3,"target":1,"pairs":[["s0","t0"],["s1","s2"]]}"#));
}

#[test]
fn parse_prints_canonical_text() {
    let o = starcoh(&["parse", "-f", "p & q | r"]);
    let once = stdout(&o);
    let again = stdout(&starcoh(&["parse", "-f", once.trim()]));
    assert_eq!(once, again);
    let t = stdout(&starcoh(&["parse", "-t", "sym_conj(p,q) . id(p & q)"]));
    assert_eq!(stdout(&starcoh(&["parse", "-t", t.trim()])), t);
}

#[test]
fn graph_formats() {
    let o = starcoh(&["graph", "-t", "id(p & q)"]);
    assert_eq!(stdout(&o), "{\"source\":2,\"target\":2,\"pairs\":[[\"s0\",\"t0\"],[\"s1\",\"t1\"]]}\n");
    let d = stdout(&starcoh(&["graph", "-t", "sym_conj(p, q)", "--format", "dot"]));
    assert!(d.starts_with("graph brauer {") && d.contains("s0 -- t1;"));
    let a = stdout(&starcoh(&["graph", "-t", "delta_conj(p | q, (q | ~r) | q)", "--format", "ascii"]));
    assert_eq!(a.lines().filter(|l| l.contains('+')).count(), 2);
}

#[test]
fn type_of_term() {
    let o = starcoh(&["type", "-t", "dist(p, q, r)"]);
    assert_eq!(stdout(&o), "p & (q | r) |- p & q | r\n");
}

#[test]
fn exit_codes() {
    assert_eq!(starcoh(&["eq", "-t", "sym_conj(q, p) . sym_conj(p, q)", "-t", "id(p & q)"]).status.code(), Some(0));
    assert_eq!(starcoh(&["eq", "-t", "sym_conj(p, p)", "-t", "id(p & p)"]).status.code(), Some(1));
    assert_eq!(starcoh(&["eq", "-t", "id((top | p) & q)", "-t", "id((top | p) & q)"]).status.code(), Some(2));
    assert_eq!(starcoh(&["type", "-t", "sym_conj(p, q) . id(p)"]).status.code(), Some(3));
    assert_eq!(starcoh(&["parse", "-f", "p &"]).status.code(), Some(4));
}

#[test]
fn eq_respects_system() {
    let o = starcoh(&["eq", "--system", "ds", "-t", "delta_conj(p, q)", "-t", "delta_conj(p, q)"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn eq_from_file_keeps_input_order() {
    let o = starcoh(&["eq", "--from-file", &fixture("corpus/pairs.txt")]);
    assert_eq!(stdout(&o), "2: equal\n3: unequal\n5: graph-equal-only\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gentzenize_and_eliminate() {
    let o = starcoh(&["gentzenize", "-t", "sym_conj(q, p) . sym_conj(p, q)", "--denote"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let net = text.lines().next().unwrap();
    assert!(net.contains("cut"));
    assert!(text.lines().nth(1).unwrap().starts_with("= "));
    let c = starcoh(&["cutelim", "-n", net, "--trace", "--checked"]);
    assert!(c.status.success());
    let out = stdout(&c);
    assert!(!out.lines().last().unwrap().contains("cut"));
    assert!(out.lines().any(|l| l.contains("->")));
}
