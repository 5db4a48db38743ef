use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use atomwidth::{expr, formats, report};
use atomwidth_core::{build_atom_expr, colouring, generators, hardness, Graph};
use serde_json::Value;

struct Run {
    code: i32,
    json: Value,
    stderr: String,
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &Path)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_atomwidth"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        json: serde_json::from_str(&text).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn graph_text(g: &Graph) -> String {
    formats::write_json(g)
}

#[test]
fn chi_on_f3_agrees_across_methods() {
    let f3 = graph_text(&generators::f3());
    let a = run(&["chi"], Some(&f3), &[]);
    let b = run(&["chi", "--method", "bruteforce"], Some(&f3), &[]);
    assert_eq!(a.code, 0);
    assert_eq!(a.json["chi"], b.json["chi"]);
    assert_eq!(a.json["chi"], colouring::chromatic_bruteforce(&generators::f3()).unwrap().0);
}

#[test]
fn build_expr_on_k7() {
    let r = run(&["build-expr"], Some(&graph_text(&Graph::complete(7))), &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["case"], "chordal-clique");
    assert_eq!(r.json["width"], 2);
}

#[test]
fn build_expr_matches_the_library() {
    let g = generators::petersen();
    let r = run(&["build-expr"], Some(&graph_text(&g)), &[]);
    assert_eq!(r.json, report::build_outcome(&build_atom_expr(&g).unwrap()));
}

#[test]
fn eval_expr_on_p4() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p4.txt");
    std::fs::write(&p, "η3,2(3(3) ⊕ ρ3→2(ρ2→1(η3,2(3(2) ⊕ η2,1(2(1) ⊕ 1(0))))))\n").unwrap();
    let r = run(&["eval-expr", p.to_str().unwrap()], None, &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["width"], 3);
    let g = formats::GraphJson { n: 4, edges: vec![(0, 1), (1, 2), (2, 3)] };
    assert_eq!(r.json["graph"], serde_json::to_value(g).unwrap());
}

#[test]
fn chi_by_expression_file() {
    let g = generators::f3();
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.json");
    std::fs::write(&p, expr::to_json(&build_atom_expr(&g).unwrap().expr).to_string()).unwrap();
    let path = p.to_str().unwrap();
    let r = run(&["chi", "--method", "cwx", "--expr", path], None, &[]);
    assert_eq!(r.json["chi"], 4);
    let capped = run(&["chi", "--method", "cwx", "--expr", path, "--k-max", "3"], None, &[]);
    assert_eq!(capped.code, 1);
    assert_eq!(capped.json["exceeds"], 3);
}

#[test]
fn check_free_exit_codes() {
    let c4 = graph_text(&Graph::cycle(4));
    let r = run(&["check-free"], Some(&c4), &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["certificate"]["pattern"], "C4");
    let ok = run(&["check-free", "--patterns", "p6,3p3"], Some(&c4), &[]);
    assert_eq!(ok.code, 0);
    assert_eq!(ok.json["free"], true);
    let bad = run(&["check-free"], Some("p edge 2 1\ne 1 5\n"), &[]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("out of range"));
}

#[test]
fn atoms_of_two_triangles_sharing_a_vertex() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let r = run(&["atoms", "--format", "edgelist"], Some(&formats::write_edge_list(&g)), &[]);
    assert_eq!(r.json["atoms"], serde_json::json!([[0, 1, 2], [2, 3, 4]]));
}

#[test]
fn reduce_and_verify() {
    let inst = r#"{"graph": {"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3]]}, "lists": {"0": [1,2], "1": [2,3], "2": [1,3], "3": [3]}}"#;
    let r = run(&["reduce"], Some(inst), &[]);
    assert_eq!(r.code, 0);
    let g = generators::complete_split(2, 2);
    let lists = hardness::ListAssignment::new(vec![vec![1, 2], vec![2, 3], vec![1, 3], vec![3]]).unwrap();
    assert_eq!(r.json, report::reduction(&hardness::reduce(&g, &lists).unwrap()));
    let v = run(&["verify-reduction"], Some(&r.json.to_string()), &[]);
    assert_eq!(v.code, 0);
    assert_eq!(v.json["equivalence"]["holds"], true);
    assert_eq!(v.json["freeness"]["free"], true);
}

#[test]
fn verify_reduction_rejects_a_mutated_gadget() {
    let g = generators::complete_split(1, 2);
    let lists = hardness::ListAssignment::new(vec![vec![1, 2], vec![2, 3], vec![1]]).unwrap();
    let rd = hardness::reduce(&g, &lists).unwrap();
    let mut v = report::reduction(&rd);
    v["gadget"] = report::graph(&rd.gadget.with_edge_toggled(0, rd.x(1)));
    let r = run(&["verify-reduction"], Some(&v.to_string()), &[]);
    assert_eq!(r.code, 1);
    assert_ne!(r.json["audit"], "ok");
}

#[test]
fn reduce_rejects_non_split_input() {
    let inst = r#"{"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3]]}, "lists": [[1],[1],[1],[1]]}"#;
    assert_eq!(run(&["reduce"], Some(inst), &[]).code, 2);
}

#[test]
fn gen_families() {
    let w = run(&["gen", "wall", "--height", "2"], None, &[]);
    assert_eq!(w.json["n"], 16);
    let a = run(&["gen", "atom", "--n", "12", "--seed", "4"], None, &[]);
    assert_eq!(a.json["seed"], 4);
    let ga: formats::GraphJson = serde_json::from_value(a.json).unwrap();
    assert_eq!(ga.to_graph().unwrap(), generators::random_c4p6free_atom(12, 4).unwrap());
    assert_eq!(run(&["gen", "nonsense"], None, &[]).code, 2);
    assert_eq!(run(&["gen", "path"], None, &[]).code, 2);
}

#[test]
fn gen_corpus_uses_the_environment_directory() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["gen-corpus", "--count", "6", "--n-max", "10", "--jobs", "3"], None, &[("ATOMWIDTH_CORPUS_DIR", dir.path())]);
    assert_eq!(r.code, 0);
    let (m, graphs) = atomwidth::corpus::load(dir.path()).unwrap();
    assert_eq!(m.entries.len(), 6);
    assert!(graphs.iter().all(|g| g.n() <= 10));
}

#[test]
fn pretty_output_is_the_same_json() {
    let k3 = graph_text(&Graph::complete(3));
    let a = run(&["chi", "--pretty"], Some(&k3), &[]);
    let b = run(&["chi"], Some(&k3), &[]);
    assert_eq!(a.json, b.json);
}
