use std::collections::BTreeMap;

use super::{DegreeDemand, FactorError};
use crate::graph::BipartiteGraph;

/// A set `A ⊆ X` on which the Ore-Ryser inequality
/// `Σ_{x∈A} f(x) ≤ Σ_{y∈N(A)} min{f(y), d_A(y)}` fails strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolatorCertificate {
    /// Sorted X-indices.
    pub set: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
    /// `y -> min{f(y), d_A(y)}` for every `y ∈ N(A)`.
    pub per_vertex_rhs: BTreeMap<usize, u64>,
}

impl ViolatorCertificate {
    /// Evaluates both sides of the inequality for `set`. Indices must be in range.
    pub fn evaluate(g: &BipartiteGraph, f: &DegreeDemand, set: &[usize]) -> Self {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        let lhs = set.iter().map(|&x| f.x(x) as u64).sum();
        let mut d_a: BTreeMap<usize, u64> = BTreeMap::new();
        for &x in &set {
            for &y in g.neighbors_x(x) {
                *d_a.entry(y).or_default() += 1;
            }
        }
        let per_vertex_rhs: BTreeMap<usize, u64> = d_a.into_iter().map(|(y, d)| (y, d.min(f.y(y) as u64))).collect();
        let rhs = per_vertex_rhs.values().sum();
        ViolatorCertificate {
            set,
            lhs,
            rhs,
            per_vertex_rhs,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.lhs > self.rhs
    }

    /// ```text
    /// violator <|A|>
    /// <x>            (one sorted index per line)
    /// lhs <v>
    /// rhs <v>
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("violator {}\n", self.set.len());
        for x in &self.set {
            out.push_str(&format!("{x}\n"));
        }
        out.push_str(&format!("lhs {}\nrhs {}\n", self.lhs, self.rhs));
        out
    }

    /// Reads a certificate file against `g` and `f`; the per-vertex terms
    /// are recomputed since the file does not carry them.
    pub fn parse(text: &str, g: &BipartiteGraph, f: &DegreeDemand) -> Result<Self, FactorError> {
        let bad = |line: usize, what: &str| FactorError::MalformedCertificate {
            line,
            reason: what.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let count: usize = header
            .strip_prefix("violator ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| bad(no, "expected `violator <count>`"))?;
        let mut set = Vec::with_capacity(count);
        for _ in 0..count {
            let (no, line) = lines.next().ok_or_else(|| bad(no, "missing index line"))?;
            let x: usize = line.parse().map_err(|_| bad(no, "expected an X-index"))?;
            if x >= g.nx() {
                return Err(bad(no, "X-index out of range"));
            }
            set.push(x);
        }
        let mut side = |key: &str| -> Result<u64, FactorError> {
            let (no, line) = lines.next().ok_or_else(|| bad(0, "missing lhs/rhs"))?;
            line.strip_prefix(key)
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| bad(no, &format!("expected `{}<value>`", key)))
        };
        let lhs = side("lhs ")?;
        let rhs = side("rhs ")?;
        let mut cert = ViolatorCertificate::evaluate(g, f, &set);
        cert.set = set;
        cert.lhs = lhs;
        cert.rhs = rhs;
        Ok(cert)
    }
}

/// Outcome of re-deriving a certificate from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateAudit {
    /// Field-level differences between the stored and recomputed values.
    pub mismatches: Vec<String>,
    pub recomputed: Option<ViolatorCertificate>,
}

impl CertificateAudit {
    /// Stored fields match and the recomputed inequality fails strictly.
    pub fn is_valid(&self) -> bool {
        self.mismatches.is_empty() && self.recomputed.as_ref().is_some_and(ViolatorCertificate::is_strict)
    }
}

/// Recomputes `lhs`, `rhs` and the per-vertex terms of `cert` and compares
/// them with the stored values.
pub fn audit_certificate(g: &BipartiteGraph, f: &DegreeDemand, cert: &ViolatorCertificate) -> CertificateAudit {
    let mut mismatches = Vec::new();
    if cert.set.is_empty() {
        mismatches.push("set: empty".to_string());
    }
    if let Some(x) = cert.set.iter().find(|&&x| x >= g.nx()) {
        mismatches.push(format!("set: index {x} is not an X-vertex"));
        return CertificateAudit {
            mismatches,
            recomputed: None,
        };
    }
    if !cert.set.windows(2).all(|w| w[0] < w[1]) {
        mismatches.push("set: not sorted and duplicate-free".to_string());
    }
    let fresh = ViolatorCertificate::evaluate(g, f, &cert.set);
    if fresh.lhs != cert.lhs {
        mismatches.push(format!("lhs: stored {} recomputed {}", cert.lhs, fresh.lhs));
    }
    if fresh.rhs != cert.rhs {
        mismatches.push(format!("rhs: stored {} recomputed {}", cert.rhs, fresh.rhs));
    }
    if fresh.per_vertex_rhs != cert.per_vertex_rhs {
        mismatches.push("perVertexRhs: differs from min{f(y), d_A(y)} over N(A)".to_string());
    }
    if !fresh.is_strict() {
        mismatches.push(format!(
            "strictness: lhs {} is not greater than rhs {}",
            fresh.lhs, fresh.rhs
        ));
    }
    CertificateAudit {
        mismatches,
        recomputed: Some(fresh),
    }
}

/// Removes vertices one at a time, in index order, while the inequality
/// still fails strictly, and repeats until no single removal succeeds.
///
/// The result is inclusion-minimal, not necessarily of minimum cardinality.
pub fn shrink_violator(
    g: &BipartiteGraph,
    f: &DegreeDemand,
    cert: &ViolatorCertificate,
) -> Result<ViolatorCertificate, FactorError> {
    let audit = audit_certificate(g, f, cert);
    if !audit.is_valid() {
        return Err(FactorError::FakeCertificate(audit.mismatches));
    }
    let mut current = audit.recomputed.expect("valid audits carry a recomputation");
    loop {
        let mut shrunk = false;
        let mut i = 0;
        while i < current.set.len() {
            let mut smaller = current.set.clone();
            smaller.remove(i);
            let candidate = ViolatorCertificate::evaluate(g, f, &smaller);
            if !smaller.is_empty() && candidate.is_strict() {
                current = candidate;
                shrunk = true;
            } else {
                i += 1;
            }
        }
        if !shrunk {
            return Ok(current);
        }
    }
}
