use super::StructureError;
use crate::graph::{BipartiteGraph, Side, VertexRef};

/// An induced copy of the two-star `S_{k,l}`: adjacent centres `u` and `v`,
/// `k` leaves on `u` and `l` leaves on `v`, with no edge between the two
/// leaf sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness {
    pub k: usize,
    pub l: usize,
    pub center_u: VertexRef,
    pub center_v: VertexRef,
    pub leaves_u: Vec<VertexRef>,
    pub leaves_v: Vec<VertexRef>,
}

impl StarWitness {
    pub fn vertices(&self) -> Vec<VertexRef> {
        let mut all = vec![self.center_u, self.center_v];
        all.extend(&self.leaves_u);
        all.extend(&self.leaves_v);
        all
    }

    /// Re-checks the witness against `g` by counting the edges induced on
    /// its `k + l + 2` vertices.
    pub fn is_valid_in(&self, g: &BipartiteGraph) -> bool {
        let all = self.vertices();
        if self.leaves_u.len() != self.k || self.leaves_v.len() != self.l {
            return false;
        }
        if !all.iter().all(|&v| g.contains(v)) {
            return false;
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != all.len() {
            return false;
        }
        if !g.adjacent(self.center_u, self.center_v)
            || !self.leaves_u.iter().all(|&w| g.adjacent(self.center_u, w))
            || !self.leaves_v.iter().all(|&w| g.adjacent(self.center_v, w))
        {
            return false;
        }
        let induced = all
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| all[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| g.adjacent(a, b))
            .count();
        induced == self.k + self.l + 1
    }

    /// ```text
    /// star <k> <l>
    /// centerU <side> <i>
    /// centerV <side> <i>
    /// leafU <side> <i>     (k lines)
    /// leafV <side> <i>     (l lines)
    /// ```
    pub fn to_text(&self) -> String {
        let line = |tag: &str, v: &VertexRef| format!("{tag} {} {}\n", v.side, v.index);
        let mut out = format!("star {} {}\n", self.k, self.l);
        out.push_str(&line("centerU", &self.center_u));
        out.push_str(&line("centerV", &self.center_v));
        for v in &self.leaves_u {
            out.push_str(&line("leafU", v));
        }
        for v in &self.leaves_v {
            out.push_str(&line("leafV", v));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, StructureError> {
        let bad = |line: usize| StructureError::MalformedWitness { line };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines.next().ok_or(bad(1))?;
        let dims: Vec<usize> = header
            .strip_prefix("star ")
            .ok_or(bad(no))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(no)))
            .collect::<Result<_, _>>()?;
        let [k, l] = dims[..] else {
            return Err(bad(no));
        };
        let mut vertex = |tag: &str| -> Result<VertexRef, StructureError> {
            let (no, line) = lines.next().ok_or(bad(0))?;
            let mut fields = line.split_whitespace();
            if fields.next() != Some(tag) {
                return Err(bad(no));
            }
            let side: Side = fields.next().ok_or(bad(no))?.parse().map_err(|_| bad(no))?;
            let index: usize = fields.next().ok_or(bad(no))?.parse().map_err(|_| bad(no))?;
            if fields.next().is_some() {
                return Err(bad(no));
            }
            Ok(VertexRef { side, index })
        };
        let center_u = vertex("centerU")?;
        let center_v = vertex("centerV")?;
        let leaves_u = (0..k).map(|_| vertex("leafU")).collect::<Result<_, _>>()?;
        let leaves_v = (0..l).map(|_| vertex("leafV")).collect::<Result<_, _>>()?;
        Ok(StarWitness {
            k,
            l,
            center_u,
            center_v,
            leaves_u,
            leaves_v,
        })
    }
}

/// Searches for an induced `S_{k,l}`.
///
/// Edges are scanned in `(x, y)` order; for each edge the X endpoint is tried
/// as the `k`-centre first, then the Y endpoint. In a bipartite graph the
/// only non-adjacencies that are not automatic are between the two leaf
/// sets, so the search picks `k` leaves of `u` in lexicographic order while
/// tracking which neighbours of `v` stay non-adjacent to all of them, and
/// gives up on a partial choice once fewer than `l` remain.
pub fn find_induced_star(g: &BipartiteGraph, k: usize, l: usize) -> Option<StarWitness> {
    g.edges().iter().find_map(|&(x, y)| {
        let (vx, vy) = (VertexRef::x(x), VertexRef::y(y));
        star_on_edge(g, vx, vy, k, l).or_else(|| star_on_edge(g, vy, vx, k, l))
    })
}

/// `true` iff `g` has no induced `S_{k,l}`.
pub fn is_skl_free(g: &BipartiteGraph, k: usize, l: usize) -> bool {
    find_induced_star(g, k, l).is_none()
}

fn star_on_edge(g: &BipartiteGraph, u: VertexRef, v: VertexRef, k: usize, l: usize) -> Option<StarWitness> {
    let cand_u: Vec<VertexRef> = g.neighbors(u).filter(|&w| w != v).collect();
    let cand_v: Vec<VertexRef> = g.neighbors(v).filter(|&w| w != u).collect();
    if cand_u.len() < k || cand_v.len() < l {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    let alive = choose_leaves(g, &cand_u, 0, k, l, &mut chosen, cand_v)?;
    Some(StarWitness {
        k,
        l,
        center_u: u,
        center_v: v,
        leaves_u: chosen,
        leaves_v: alive[..l].to_vec(),
    })
}

fn choose_leaves(
    g: &BipartiteGraph,
    cand_u: &[VertexRef],
    start: usize,
    k: usize,
    l: usize,
    chosen: &mut Vec<VertexRef>,
    alive: Vec<VertexRef>,
) -> Option<Vec<VertexRef>> {
    if chosen.len() == k {
        return Some(alive);
    }
    let needed = k - chosen.len();
    for i in start..=cand_u.len() - needed {
        let w = cand_u[i];
        let next: Vec<VertexRef> = alive.iter().copied().filter(|&z| !g.adjacent(w, z)).collect();
        if next.len() < l {
            continue;
        }
        chosen.push(w);
        if let Some(found) = choose_leaves(g, cand_u, i + 1, k, l, chosen, next) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite_minus_matching, double_graph};

    #[test]
    fn two_star_contains_itself() {
        let g = BipartiteGraph::two_star(2, 3);
        let w = find_induced_star(&g, 2, 3).expect("S_{2,3} contains S_{2,3}");
        assert!(w.is_valid_in(&g));
        let mut all = w.vertices();
        all.sort();
        let mut expected: Vec<VertexRef> = g.vertices().collect();
        expected.sort();
        assert_eq!(all, expected);
    }

    #[test]
    fn complete_graphs_are_free() {
        let g = BipartiteGraph::complete(3, 3);
        for k in 1..=3 {
            for l in 1..=3 {
                assert!(is_skl_free(&g, k, l), "({k},{l})");
            }
        }
    }

    #[test]
    fn c8_has_induced_p4() {
        let g = BipartiteGraph::cycle(8).unwrap();
        let w = find_induced_star(&g, 1, 1).unwrap();
        assert!(w.is_valid_in(&g));
    }

    #[test]
    fn three_regular_is_s13_free() {
        let g = complete_bipartite_minus_matching(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        assert!(is_skl_free(&g, 1, 3));
        assert!(is_skl_free(&g, 2, 3));
    }

    #[test]
    fn double_c6_is_s13_free() {
        let g = double_graph(&BipartiteGraph::cycle(6).unwrap());
        assert!(is_skl_free(&g, 1, 3));
        // The double of C_6 does contain S_{1,2}.
        assert!(!is_skl_free(&g, 1, 2));
    }

    #[test]
    fn asymmetric_orientation() {
        // S_{1,3} with its 3-centre on X: only the Y-first orientation of
        // the centre edge finds it as (k, l) = (1, 3).
        let g = BipartiteGraph::two_star(3, 1);
        let w = find_induced_star(&g, 1, 3).unwrap();
        assert!(w.is_valid_in(&g));
        assert_eq!(w.center_u, VertexRef::y(0));
    }

    #[test]
    fn tampered_witness_is_invalid() {
        let g = BipartiteGraph::two_star(2, 3);
        let mut w = find_induced_star(&g, 2, 3).unwrap();
        w.leaves_v[0] = w.leaves_v[1];
        assert!(!w.is_valid_in(&g));
        let k33 = BipartiteGraph::complete(3, 3);
        let fake = StarWitness {
            k: 1,
            l: 1,
            center_u: VertexRef::x(0),
            center_v: VertexRef::y(0),
            leaves_u: vec![VertexRef::y(1)],
            leaves_v: vec![VertexRef::x(1)],
        };
        assert!(!fake.is_valid_in(&k33));
    }

    #[test]
    fn text_round_trip() {
        let g = BipartiteGraph::two_star(2, 3);
        let w = find_induced_star(&g, 2, 3).unwrap();
        let text = w.to_text();
        assert!(text.starts_with("star 2 3\ncenterU X 0\ncenterV Y 0\nleafU Y 1\n"));
        assert_eq!(StarWitness::parse(&text).unwrap(), w);
        assert!(StarWitness::parse("star 1\n").is_err());
    }

    #[test]
    fn deterministic() {
        let g = double_graph(&BipartiteGraph::cycle(8).unwrap());
        assert_eq!(find_induced_star(&g, 1, 2), find_induced_star(&g, 1, 2));
    }
}
