use std::fs;
use std::path::{Path, PathBuf};

use kfactor::cli::{run, EXIT_CERTIFIED, EXIT_HYPOTHESIS, EXIT_OK, EXIT_USAGE};
use kfactor::engine::{DegreeDemand, ViolatorCertificate};
use kfactor::graph::{complete_bipartite_minus_matching, parse_graph, BipartiteGraph, Factor};
use kfactor::structure::StarWitness;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn kfactor(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kfactor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_graph(dir: &TempDir, name: &str, g: &BipartiteGraph) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, g.to_text()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn k13_minus_pm() -> BipartiteGraph {
    let pm: Vec<_> = (0..13).map(|i| (i, i)).collect();
    complete_bipartite_minus_matching(13, &pm).unwrap()
}

#[test]
fn factor_writes_a_parseable_factor() {
    let dir = TempDir::new().unwrap();
    let g = BipartiteGraph::complete(3, 3);
    let path = write_graph(&dir, "k33.graph", &g);
    let r = kfactor(&["factor", s(&path), "--k", "2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.starts_with("FACTOR 2 6 "));
    let f = Factor::parse(&fs::read_to_string(path.with_extension("factor")).unwrap(), &g).unwrap();
    assert_eq!(f.regularity(), Some(2));
    assert!(f.is_subgraph_of(&g));
}

#[test]
fn factor_certifies_infeasibility() {
    let dir = TempDir::new().unwrap();
    let g = BipartiteGraph::path(4);
    let path = write_graph(&dir, "p4.graph", &g);
    let out = dir.path().join("p4.cert");
    let r = kfactor(&["factor", s(&path), "--k", "2", "--out", s(&out)]);
    assert_eq!(r.code, EXIT_CERTIFIED);
    assert!(r.out.starts_with("VIOLATOR 1 "));
    let cert =
        ViolatorCertificate::parse(&fs::read_to_string(&out).unwrap(), &g, &DegreeDemand::uniform(&g, 2)).unwrap();
    assert_eq!(cert.set, vec![0]);
    assert!(cert.lhs > cert.rhs);
}

#[test]
fn missing_file_is_a_usage_error() {
    let r = kfactor(&["factor", "/nonexistent/graph.txt", "--k", "1"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("cannot read"));
}

#[test]
fn malformed_graph_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.graph");
    fs::write(&path, "bipartite 2 2 1\n0 5\n").unwrap();
    assert_eq!(kfactor(&["factor", s(&path), "--k", "1"]).code, EXIT_USAGE);
}

#[test]
fn connect_k13_minus_matching() {
    let dir = TempDir::new().unwrap();
    let g = k13_minus_pm();
    let path = write_graph(&dir, "k13.graph", &g);
    let r = kfactor(&["connect", s(&path), "--k", "2", "--l", "3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let text = fs::read_to_string(path.with_extension("factor")).unwrap();
    assert!(text.lines().any(|line| line.starts_with("cycle X0 ")));
    let f = Factor::parse(&text, &g).unwrap();
    assert_eq!(f.component_count(), 1);
}

#[test]
fn connect_rejects_low_degree_and_unbalanced() {
    let dir = TempDir::new().unwrap();
    let low = write_graph(&dir, "k33.graph", &BipartiteGraph::complete(3, 3));
    let r = kfactor(&["connect", s(&low), "--k", "2", "--l", "3"]);
    assert_eq!(r.code, EXIT_HYPOTHESIS);
    assert!(r.err.contains("min_degree"));

    let lopsided = write_graph(&dir, "k34.graph", &BipartiteGraph::complete(3, 4));
    let r = kfactor(&["connect", s(&lopsided), "--k", "2", "--l", "3"]);
    assert_eq!(r.code, EXIT_HYPOTHESIS);
    assert!(r.err.contains("balance"));
}

#[test]
fn connect_rejects_parameter_order() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "k13.graph", &k13_minus_pm());
    assert_eq!(kfactor(&["connect", s(&path), "--k", "3", "--l", "2"]).code, EXIT_USAGE);
}

#[test]
fn threshold_values() {
    assert_eq!(kfactor(&["threshold", "2", "3"]).out, "12\n");
    assert_eq!(kfactor(&["threshold", "--k", "3", "--l", "3"]).out, "18\n");
    assert_eq!(kfactor(&["threshold", "3", "3", "2"]).out, "18\n");
    assert_eq!(kfactor(&["threshold", "1", "3"]).code, EXIT_USAGE);
    let raw = kfactor(&["threshold", "1", "3", "--raw"]);
    assert_eq!(raw.code, EXIT_OK);
    assert_eq!(raw.out, "9\n");
}

#[test]
fn detect_reports_star_or_free() {
    let dir = TempDir::new().unwrap();
    let star = write_graph(&dir, "s23.graph", &BipartiteGraph::two_star(2, 3));
    let out = dir.path().join("s23.witness");
    let r = kfactor(&["detect", s(&star), "--k", "2", "--l", "3", "--out", s(&out)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("star 2 3\n"));
    let w = StarWitness::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((w.k, w.l), (2, 3));

    let cube = write_graph(&dir, "k33.graph", &BipartiteGraph::complete(3, 3));
    let r = kfactor(&["detect", s(&cube), "--k", "1", "--l", "2"]);
    assert_eq!(r.out, "FREE\n");
}

#[test]
fn classify_outputs() {
    let dir = TempDir::new().unwrap();
    let cycle = write_graph(&dir, "c8.graph", &BipartiteGraph::cycle(8).unwrap());
    assert!(kfactor(&["classify", s(&cycle)]).out.starts_with("EVEN-CYCLE "));
    let path = write_graph(&dir, "p5.graph", &BipartiteGraph::path(5));
    assert!(kfactor(&["classify", s(&path)]).out.starts_with("PATH "));
    let star = write_graph(&dir, "s12.graph", &BipartiteGraph::two_star(1, 2));
    assert!(kfactor(&["classify", s(&star)]).out.starts_with("NOT-S12-FREE"));

    let split = write_graph(
        &dir,
        "split.graph",
        &BipartiteGraph::path(2).disjoint_union(&BipartiteGraph::path(2)),
    );
    assert_eq!(kfactor(&["classify", s(&split)]).code, EXIT_HYPOTHESIS);
}

#[test]
fn generate_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.graph");
    let args = |p: &Path| {
        kfactor(&[
            "generate",
            "--model",
            "k-regular-union",
            "--n",
            "8",
            "--k",
            "3",
            "--seed",
            "5",
            "--out",
            s(p),
        ])
    };
    let r = args(&a);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.starts_with("GRAPH 8 8 24 "));
    let b = dir.path().join("b.graph");
    args(&b);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let stdout = kfactor(&["generate", "--model", "double-cycle", "--m", "3"]);
    let g = parse_graph(&stdout.out).unwrap();
    assert_eq!((g.nx(), g.edge_count()), (6, 24));

    assert_eq!(kfactor(&["generate", "--model", "cube", "--n", "3"]).code, EXIT_USAGE);
    assert_eq!(kfactor(&["generate", "--model", "double-cycle"]).code, EXIT_USAGE);
}

#[test]
fn hamilton_on_double_cycle() {
    let dir = TempDir::new().unwrap();
    let g = parse_graph(&kfactor(&["generate", "--model", "double-cycle", "--m", "4"]).out).unwrap();
    let path = write_graph(&dir, "dc.graph", &g);
    let r = kfactor(&["hamilton", s(&path)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.starts_with("HAMILTON 16 "));
}

#[test]
fn verify_cor4() {
    let r = kfactor(&["verify", "cor4", "--trials", "25", "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.ends_with("SUITE cor4 25/25\n"), "{}", r.out);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("TRIAL ")).count(), 25);
}

#[test]
fn verify_rejects_unknown_suite() {
    assert_eq!(kfactor(&["verify", "cor9"]).code, EXIT_USAGE);
    assert_eq!(kfactor(&["verify", "cor4", "--trials", "0"]).code, EXIT_USAGE);
}
