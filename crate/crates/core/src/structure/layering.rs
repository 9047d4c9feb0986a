//! Distance layers around a seed set `A ⊆ X`, split three ways by how each
//! vertex attaches to the previous layer, and a diagnostic report over the
//! counting inequalities that hold on those layers when the seed is a
//! minimum Ore-Ryser violator of an `S_{k,l}`-free graph with large minimum
//! degree.
//!
//! For `i ≥ 1` a vertex `v` of layer `i` is
//! - *thin* when it has fewer than `k` neighbours in layer `i - 1`,
//! - *anchored* when it is not thin and all its layer `i - 1` neighbours are thin,
//! - *rest* otherwise.
//!
//! Layer 0 is the seed and counts as entirely thin.

use std::fmt;

use super::StructureError;
use crate::graph::{BipartiteGraph, VertexRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Thin,
    Anchored,
    Rest,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LayerParts {
    pub thin: Vec<VertexRef>,
    pub anchored: Vec<VertexRef>,
    pub rest: Vec<VertexRef>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub seed: Vec<usize>,
    pub k: usize,
    /// `layers[i]`: vertices at distance exactly `i` from the seed, sorted.
    pub layers: Vec<Vec<VertexRef>>,
    pub parts: Vec<LayerParts>,
    /// Vertices outside the seed's component.
    pub uncovered: Vec<VertexRef>,
    place: Vec<Option<(usize, Part)>>,
}

impl Layering {
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Layer index and part of `v`, or `None` when `v` is uncovered.
    pub fn place_of(&self, g: &BipartiteGraph, v: VertexRef) -> Option<(usize, Part)> {
        self.place[g.vertex_id(v)]
    }

    fn parts_at(&self, i: usize) -> Option<&LayerParts> {
        self.parts.get(i)
    }

    fn count(&self, i: usize, part: Part) -> usize {
        self.parts_at(i).map_or(0, |p| match part {
            Part::Thin => p.thin.len(),
            Part::Anchored => p.anchored.len(),
            Part::Rest => p.rest.len(),
        })
    }

    fn members(&self, i: usize, part: Part) -> &[VertexRef] {
        match (self.parts_at(i), part) {
            (Some(p), Part::Thin) => &p.thin,
            (Some(p), Part::Anchored) => &p.anchored,
            (Some(p), Part::Rest) => &p.rest,
            (None, _) => &[],
        }
    }
}

/// Breadth-first layers from `seed` with the thin/anchored/rest split.
pub fn build_layering(g: &BipartiteGraph, seed: &[usize], k: usize) -> Result<Layering, StructureError> {
    if seed.is_empty() {
        return Err(StructureError::EmptySeed);
    }
    if let Some(&x) = seed.iter().find(|&&x| x >= g.nx()) {
        return Err(StructureError::SeedOutOfRange(x));
    }
    let mut seed: Vec<usize> = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();

    let sources: Vec<VertexRef> = seed.iter().map(|&x| VertexRef::x(x)).collect();
    let dist = g.distances_from(&sources);
    let depth = dist.iter().flatten().max().map_or(0, |d| d + 1);
    let mut layers = vec![Vec::new(); depth];
    let mut uncovered = Vec::new();
    for v in g.vertices() {
        match dist[g.vertex_id(v)] {
            Some(d) => layers[d].push(v),
            None => uncovered.push(v),
        }
    }
    for layer in &mut layers {
        layer.sort();
    }

    let mut place: Vec<Option<(usize, Part)>> = vec![None; g.vertex_count()];
    let mut parts = Vec::with_capacity(depth);
    for (i, layer) in layers.iter().enumerate() {
        let mut lp = LayerParts::default();
        for &v in layer {
            let part = if i == 0 {
                Part::Thin
            } else {
                let back: Vec<VertexRef> = g
                    .neighbors(v)
                    .filter(|&w| dist[g.vertex_id(w)] == Some(i - 1))
                    .collect();
                if back.len() < k {
                    Part::Thin
                } else if back
                    .iter()
                    .all(|&w| matches!(place[g.vertex_id(w)], Some((_, Part::Thin))))
                {
                    Part::Anchored
                } else {
                    Part::Rest
                }
            };
            place[g.vertex_id(v)] = Some((i, part));
            match part {
                Part::Thin => lp.thin.push(v),
                Part::Anchored => lp.anchored.push(v),
                Part::Rest => lp.rest.push(v),
            }
        }
        parts.push(lp);
    }

    Ok(Layering {
        seed,
        k,
        layers,
        parts,
        uncovered,
        place,
    })
}

/// One evaluated inequality at one layer. For per-vertex bounds, `vertices`
/// lists the vertices where the bound fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub claim: &'static str,
    pub layer: usize,
    pub holds: bool,
    pub vertices: Vec<VertexRef>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn entry(&self, claim: &str, layer: usize) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.claim == claim && e.layer == layer)
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }
}

impl fmt::Display for AuditReport {
    /// `CLAIM <name> <layer> HOLDS|FAILS [vertex...]`, one line per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(
                f,
                "CLAIM {} {} {}",
                e.claim,
                e.layer,
                if e.holds { "HOLDS" } else { "FAILS" }
            )?;
            for v in &e.vertices {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Names of the inequalities in an [`AuditReport`].
pub mod claims {
    /// `|thin_0| > |anchored_1|`.
    pub const ROOT_EXCESS: &str = "root-excess";
    /// `|thin_i| ≥ |anchored_{i+1}|` for `i ≥ 1`.
    pub const THIN_COVERS_ANCHORED: &str = "thin-covers-anchored";
    /// `|rest_i| ≥ |thin_{i-1}| + |rest_{i+1}|` for `i ≥ 2`.
    pub const REST_DOMINATES: &str = "rest-dominates";
    /// Thin or anchored vertices of layer `i ≥ 1` have no neighbour among
    /// the anchored or rest vertices of layer `i - 1`.
    pub const NO_HEAVY_BACK_EDGES: &str = "no-heavy-back-edges";
    /// Seed vertices have at most `k - 1` thin neighbours in layer 1.
    pub const ROOT_THIN_DEGREE: &str = "root-thin-degree";
    /// Thin vertices of layer `i ≥ 1` have at most `k - 1` thin or anchored
    /// neighbours in layer `i + 1`.
    pub const THIN_FORWARD_DEGREE: &str = "thin-forward-degree";
    /// Rest vertices of layer 2: thin neighbours in layer 1 plus neighbours
    /// in layer 3 number at most `k(k-1) + l - 1`.
    pub const SECOND_REST_DEGREE: &str = "second-rest-degree";
    /// Rest vertices of layer `i ≥ 3`: thin or anchored neighbours in layer
    /// `i - 1` plus neighbours in layer `i + 1` number at most `k(k-1) + l`.
    pub const REST_DEGREE: &str = "rest-degree";
    /// Thin vertices of layer `i - 1` (`i ≥ 2`) have at least `k(k-1) + l`
    /// rest neighbours in layer `i`.
    pub const THIN_TO_REST_DEGREE: &str = "thin-to-rest-degree";
    /// Rest vertices of layer `i + 1` (`i ≥ 2`) have at least `k(k-1) + l`
    /// rest neighbours in layer `i`.
    pub const REST_BACK_DEGREE: &str = "rest-back-degree";
}

/// Evaluates every counting and degree inequality on every relevant layer.
/// Failures are recorded, never raised.
pub fn audit_layer_inequalities(g: &BipartiteGraph, layering: &Layering, k: usize, l: usize) -> AuditReport {
    use claims::*;
    let top = layering.layer_count();
    let kk = k * k.saturating_sub(1);
    let mut entries = Vec::new();

    let degree_into = |v: VertexRef, layer: usize, parts: &[Part]| -> usize {
        g.neighbors(v)
            .filter(|&w| {
                layering
                    .place_of(g, w)
                    .is_some_and(|(i, p)| i == layer && parts.contains(&p))
            })
            .count()
    };
    const ALL: &[Part] = &[Part::Thin, Part::Anchored, Part::Rest];
    const THIN: &[Part] = &[Part::Thin];
    const LIGHT: &[Part] = &[Part::Thin, Part::Anchored];
    const HEAVY: &[Part] = &[Part::Anchored, Part::Rest];
    const REST: &[Part] = &[Part::Rest];

    let mut per_vertex = |claim: &'static str, layer: usize, pool: Vec<VertexRef>, ok: &dyn Fn(VertexRef) -> bool| {
        let vertices: Vec<VertexRef> = pool.into_iter().filter(|&v| !ok(v)).collect();
        entries.push(AuditEntry {
            claim,
            layer,
            holds: vertices.is_empty(),
            vertices,
        });
    };
    let pick = |i: usize, parts: &[Part]| -> Vec<VertexRef> {
        parts
            .iter()
            .flat_map(|&p| layering.members(i, p).iter().copied())
            .collect()
    };

    per_vertex(ROOT_THIN_DEGREE, 0, pick(0, ALL), &|v| {
        degree_into(v, 1, THIN) < k.max(1)
    });
    for i in 1..top {
        per_vertex(NO_HEAVY_BACK_EDGES, i, pick(i, LIGHT), &|v| {
            degree_into(v, i - 1, HEAVY) == 0
        });
        per_vertex(THIN_FORWARD_DEGREE, i, pick(i, THIN), &|v| {
            degree_into(v, i + 1, LIGHT) < k.max(1)
        });
    }
    if top > 2 {
        per_vertex(SECOND_REST_DEGREE, 2, pick(2, REST), &|v| {
            degree_into(v, 1, THIN) + degree_into(v, 3, ALL) < kk + l
        });
    }
    for i in 3..top {
        per_vertex(REST_DEGREE, i, pick(i, REST), &|v| {
            degree_into(v, i - 1, LIGHT) + degree_into(v, i + 1, ALL) <= kk + l
        });
    }
    for i in 2..top {
        per_vertex(THIN_TO_REST_DEGREE, i, pick(i - 1, THIN), &|v| {
            degree_into(v, i, REST) >= kk + l
        });
        per_vertex(REST_BACK_DEGREE, i, pick(i + 1, REST), &|v| {
            degree_into(v, i, REST) >= kk + l
        });
    }

    let count = |i: usize, p: Part| layering.count(i, p);
    let mut counting = |claim: &'static str, layer: usize, holds: bool| {
        entries.push(AuditEntry {
            claim,
            layer,
            holds,
            vertices: Vec::new(),
        });
    };
    counting(ROOT_EXCESS, 0, count(0, Part::Thin) > count(1, Part::Anchored));
    for i in 1..=top {
        counting(
            THIN_COVERS_ANCHORED,
            i,
            count(i, Part::Thin) >= count(i + 1, Part::Anchored),
        );
    }
    for i in 2..=top {
        counting(
            REST_DOMINATES,
            i,
            count(i, Part::Rest) >= count(i - 1, Part::Thin) + count(i + 1, Part::Rest),
        );
    }

    AuditReport { entries }
}
