//! Named verification suites. Seeded suites derive trial `i` from
//! `seed + i`; exhaustive suites walk every small graph and ignore the seed.

use std::fmt;
use std::str::FromStr;

use crate::connector::{
    connected_k_factor, hamilton_from_stuck, hamilton_s13, threshold_c_prime, ConnectError, HamiltonCycle,
};
use crate::engine::{audit_certificate, find_f_factor, regular_decompose, DegreeDemand, FactorOutcome};
use crate::graph::{double_graph, BipartiteGraph, Factor};
use crate::oracle::validate::{validate_connected_k_factor, validate_hamilton_cycle, validate_k_factor};
use crate::oracle::{brute_force_f_factor, enumerate_small_bipartite, generate, GenModel, GenSpec, SplitMix64};
use crate::structure::{classify_s12_free, find_induced_star, is_skl_free, StructureClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Cor4,
    Cor5,
    Thm3,
    OracleEq,
    PropS12,
    SharpS13,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Cor4,
        SuiteName::Cor5,
        SuiteName::Thm3,
        SuiteName::OracleEq,
        SuiteName::PropS12,
        SuiteName::SharpS13,
    ];

    pub fn default_trials(self) -> usize {
        match self {
            SuiteName::Cor4 => 25,
            SuiteName::Cor5 | SuiteName::Thm3 => 10,
            SuiteName::SharpS13 => 5,
            SuiteName::OracleEq | SuiteName::PropS12 => 0,
        }
    }

    /// Exhaustive suites print only failing cases.
    pub fn is_exhaustive(self) -> bool {
        matches!(self, SuiteName::OracleEq | SuiteName::PropS12)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteName::Cor4 => "cor4",
            SuiteName::Cor5 => "cor5",
            SuiteName::Thm3 => "thm3",
            SuiteName::OracleEq => "oracle-eq",
            SuiteName::PropS12 => "prop-s12",
            SuiteName::SharpS13 => "sharp-s13",
        })
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySuite {
    pub name: SuiteName,
    pub trials: usize,
    pub seed: u64,
    /// Class-size bound for the exhaustive suites.
    pub max_n: usize,
}

impl VerifySuite {
    pub fn new(name: SuiteName, seed: u64) -> Self {
        VerifySuite {
            name,
            trials: name.default_trials(),
            seed,
            max_n: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: SuiteName,
    pub trials: Vec<Trial>,
    /// Some trial ended stuck although every hypothesis held.
    pub contradiction: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        !self.contradiction && self.trials.iter().all(|t| t.pass)
    }

    /// `TRIAL` lines (failures only for exhaustive suites), then
    /// `SUITE <name> <pass>/<trials>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.trials {
            if t.pass && self.name.is_exhaustive() {
                continue;
            }
            let status = if t.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("TRIAL {} {status} {}\n", t.index, t.detail));
        }
        out.push_str(&format!(
            "SUITE {} {}/{}\n",
            self.name,
            self.passed(),
            self.trials.len()
        ));
        out
    }
}

pub fn run_suite(suite: &VerifySuite) -> SuiteReport {
    let mut report = SuiteReport {
        name: suite.name,
        trials: Vec::new(),
        contradiction: false,
    };
    match suite.name {
        SuiteName::Cor4 => seeded(suite, &mut report, |rng, seed| {
            let n = 13 + rng.below(8) as usize;
            connected_trial(n, 2, 3, seed)
        }),
        SuiteName::Cor5 => seeded(suite, &mut report, |rng, seed| {
            let n = 19 + rng.below(6) as usize;
            let (outcome, detail) = connected_trial(n, 3, 3, seed);
            if !outcome.is_pass() {
                return (outcome, detail);
            }
            match two_factor_trial(n, seed) {
                Ok(()) => (outcome, format!("{detail} two-factor=ok")),
                Err(e) => (Outcome::Fail, format!("{detail} two-factor: {e}")),
            }
        }),
        SuiteName::Thm3 => {
            for (index, m) in (3..=10).enumerate() {
                let g = double_graph(&BipartiteGraph::cycle(2 * m).expect("m >= 3"));
                let (mut outcome, mut detail) = hamilton_trial(&g, 4 * m);
                if outcome.is_pass() {
                    let (o, d) = weave_trial(&g, m);
                    outcome = o;
                    detail = format!("{detail} {d}");
                }
                push(&mut report, index, outcome, format!("double-cycle m={m} {detail}"));
            }
            let offset = report.trials.len();
            seeded(suite, &mut report, |rng, seed| {
                let n = 5 + rng.below(8) as usize;
                let removed = rng.below(n as u64 + 1) as usize;
                let g =
                    generate(&GenSpec::new(GenModel::KMinusMatching { n, removed }, seed)).expect("valid parameters");
                let (outcome, detail) = hamilton_trial(&g, 2 * n);
                (outcome, format!("k-minus-matching n={n} removed={removed} {detail}"))
            });
            for t in &mut report.trials[offset..] {
                t.index += offset;
            }
        }
        SuiteName::SharpS13 => seeded(suite, &mut report, |rng, seed| {
            let n = 4 + rng.below(7) as usize;
            let g = match generate(&GenSpec::new(GenModel::KRegularUnion { n, k: 3 }, seed)) {
                Ok(g) => g,
                Err(e) => return (Outcome::Fail, format!("n={n}: {e}")),
            };
            let regular = g.vertices().all(|v| g.degree(v) == 3);
            let free = is_skl_free(&g, 1, 3);
            let gated = matches!(hamilton_s13(&g), Err(ConnectError::HypothesisViolated(_)));
            let pass = regular && free && gated;
            (
                Outcome::from(pass),
                format!("n={n} 3-regular={regular} s13-free={free} gated={gated}"),
            )
        }),
        SuiteName::OracleEq => oracle_eq(suite, &mut report),
        SuiteName::PropS12 => prop_s12(suite, &mut report),
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    Contradiction,
}

impl Outcome {
    fn is_pass(self) -> bool {
        self == Outcome::Pass
    }
}

impl From<bool> for Outcome {
    fn from(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn push(report: &mut SuiteReport, index: usize, outcome: Outcome, detail: String) {
    report.contradiction |= outcome == Outcome::Contradiction;
    report.trials.push(Trial {
        index,
        pass: outcome.is_pass(),
        detail,
    });
}

/// Runs `trial(rng, seed + i)` for each trial, where `rng` is seeded with
/// the trial seed and used for size draws before generation.
fn seeded(
    suite: &VerifySuite,
    report: &mut SuiteReport,
    mut trial: impl FnMut(&mut SplitMix64, u64) -> (Outcome, String),
) {
    for i in 0..suite.trials {
        let seed = suite.seed.wrapping_add(i as u64);
        let mut rng = SplitMix64::new(seed);
        let (outcome, detail) = trial(&mut rng, seed);
        push(report, i, outcome, format!("seed={seed} {detail}"));
    }
}

/// `K_{n,n}` minus a seeded perfect matching through the connected
/// `k`-factor pipeline, checked by the independent validators.
fn connected_trial(n: usize, k: usize, l: usize, seed: u64) -> (Outcome, String) {
    let g = generate(&GenSpec::new(GenModel::KMinusMatching { n, removed: n }, seed)).expect("valid parameters");
    let head = format!("n={n}");
    if let Some(w) = find_induced_star(&g, k, l) {
        return (
            Outcome::Fail,
            format!("{head} not S_{k},{l}-free at {} {}", w.center_u, w.center_v),
        );
    }
    match connected_k_factor(&g, k, l) {
        Ok(f) => {
            if let Err(e) = validate_connected_k_factor(&g, f.edges(), k) {
                return (Outcome::Fail, format!("{head} invalid factor: {e}"));
            }
            if k == 2 {
                let cycle = match HamiltonCycle::from_factor(f) {
                    Ok(c) => c,
                    Err(e) => return (Outcome::Fail, format!("{head} {e}")),
                };
                if let Err(e) = validate_hamilton_cycle(&g, &cycle.rotation) {
                    return (Outcome::Fail, format!("{head} invalid cycle: {e}"));
                }
                (Outcome::Pass, format!("{head} hamilton-cycle length={}", cycle.len()))
            } else {
                (Outcome::Pass, format!("{head} connected {k}-factor"))
            }
        }
        Err(ConnectError::TheoremContradiction(r)) => (
            Outcome::Contradiction,
            format!("{head} stuck with {} components", r.factor.component_count()),
        ),
        Err(e) => (Outcome::Fail, format!("{head} {e}")),
    }
}

/// An `m`-factor through a `t`-factor, `t = max{k,l,m}`, for `(k,l,m) = (3,3,2)`.
fn two_factor_trial(n: usize, seed: u64) -> Result<(), String> {
    let g = generate(&GenSpec::new(GenModel::KMinusMatching { n, removed: n }, seed)).map_err(|e| e.to_string())?;
    let t = 3;
    let required = threshold_c_prime(3, 3, 2);
    if (g.min_degree().map_err(|e| e.to_string())? as i64) < required {
        return Err(format!("min degree below {required}"));
    }
    let big = match find_f_factor(&g, &DegreeDemand::uniform(&g, t)).map_err(|e| e.to_string())? {
        FactorOutcome::Factor(f) => f,
        FactorOutcome::Violator(_) => return Err(format!("no {t}-factor")),
    };
    let two = regular_decompose(&big, 2).map_err(|e| e.to_string())?;
    validate_k_factor(&g, two.edges(), 2)
}

fn hamilton_trial(g: &BipartiteGraph, expected_len: usize) -> (Outcome, String) {
    match hamilton_s13(g) {
        Ok(h) => match validate_hamilton_cycle(g, &h.rotation) {
            Ok(()) => (Outcome::from(h.len() == expected_len), format!("length={}", h.len())),
            Err(e) => (Outcome::Fail, format!("length={} {e}", h.len())),
        },
        Err(e @ ConnectError::StructureUnrecognized(_)) => (Outcome::Contradiction, e.to_string()),
        Err(e) => (Outcome::Fail, e.to_string()),
    }
}

/// The double graph of `C_{2m}` with its `m` blocks `X{i, i+m} ∪ Y{i, i+m}`
/// as a stuck 2-factor: the weave must be a Hamilton cycle.
fn weave_trial(g: &BipartiteGraph, m: usize) -> (Outcome, String) {
    let blocks = (0..m).flat_map(|i| [(i, i), (i, i + m), (i + m, i), (i + m, i + m)]);
    let outcome = Factor::new(g, blocks)
        .map_err(|e| e.to_string())
        .and_then(|f| hamilton_from_stuck(g, &f).map_err(|e| e.to_string()))
        .and_then(|h| validate_hamilton_cycle(g, &h.rotation));
    match outcome {
        Ok(()) => (Outcome::Pass, "weave=ok".to_string()),
        Err(e) => (Outcome::Fail, format!("weave: {e}")),
    }
}

fn oracle_eq(suite: &VerifySuite, report: &mut SuiteReport) {
    let graphs = enumerate_small_bipartite(suite.max_n).expect("class bound checked by caller");
    let mut index = 0;
    for g in graphs.filter(BipartiteGraph::is_balanced) {
        for k in 1..=3 {
            let f = DegreeDemand::uniform(&g, k);
            let outcome = (|| -> Result<(), String> {
                let engine = find_f_factor(&g, &f).map_err(|e| e.to_string())?;
                let oracle = brute_force_f_factor(&g, &f).map_err(|e| e.to_string())?;
                if engine.exists() != oracle.exists {
                    return Err(format!("engine {} oracle {}", engine.exists(), oracle.exists));
                }
                match engine {
                    FactorOutcome::Factor(factor) => validate_k_factor(&g, factor.edges(), k),
                    FactorOutcome::Violator(cert) => {
                        let audit = audit_certificate(&g, &f, &cert);
                        if audit.is_valid() {
                            Ok(())
                        } else {
                            Err(format!("certificate audit: {}", audit.mismatches.join("; ")))
                        }
                    }
                }
            })();
            let (o, detail) = match outcome {
                Ok(()) => (Outcome::Pass, String::new()),
                Err(e) => (Outcome::Fail, e),
            };
            push(report, index, o, format!("k={k} {} {detail}", edge_summary(&g)));
            index += 1;
        }
    }
}

fn prop_s12(suite: &VerifySuite, report: &mut SuiteReport) {
    let graphs = enumerate_small_bipartite(suite.max_n).expect("class bound checked by caller");
    for (index, g) in graphs.enumerate() {
        let detector = find_induced_star(&g, 1, 2);
        let outcome = match classify_s12_free(&g) {
            Ok(StructureClass::NotS12Free { witness }) => {
                if detector.is_some() && witness.is_valid_in(&g) {
                    Ok(())
                } else {
                    Err("classified NOT-S12-FREE without a valid witness".to_string())
                }
            }
            Ok(class) => {
                if detector.is_some() {
                    Err(format!("classified {} but a witness exists", class.tag()))
                } else {
                    reconstruction_matches(&g, &class)
                }
            }
            Err(e) => Err(e.to_string()),
        };
        let (o, detail) = match outcome {
            Ok(()) => (Outcome::Pass, String::new()),
            Err(e) => (Outcome::Fail, e),
        };
        push(report, index, o, format!("{} {detail}", edge_summary(&g)));
    }
}

fn reconstruction_matches(g: &BipartiteGraph, class: &StructureClass) -> Result<(), String> {
    let h = class.reconstruct().ok_or("free class without reconstruction")?;
    let degrees = |g: &BipartiteGraph| {
        let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(&h) {
        return Err(format!("{} degree multiset differs", class.tag()));
    }
    if g.non_edges() != h.non_edges() {
        return Err(format!("{} non-edge set differs", class.tag()));
    }
    Ok(())
}

fn edge_summary(g: &BipartiteGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(x, y)| format!("{x}-{y}")).collect();
    format!("{}x{} [{}]", g.nx(), g.ny(), edges.join(" "))
}
