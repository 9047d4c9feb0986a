use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::rng::SplitMix64;
use super::OracleError;
use crate::graph::{complete_bipartite_minus_matching, double_graph, BipartiteGraph};

/// Attempts allowed when drawing a simple union of permutation matchings.
pub const RETRY_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub enum GenModel {
    /// `K_{n,n}` minus `removed` disjoint pairs chosen by the seed.
    KMinusMatching { n: usize, removed: usize },
    /// The double graph of the cycle `C_{2m}`.
    DoubleCycle { m: usize },
    /// Union of `k` permutation matchings on `n + n` vertices, redrawn until simple.
    KRegularUnion { n: usize, k: usize },
    /// A simple union of `delta` permutation matchings plus every other
    /// cross pair independently with probability `p`.
    MinDegreeRandom { n: usize, delta: usize, p: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: GenModel,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: GenModel, seed: u64) -> Self {
        GenSpec { model, seed }
    }
}

/// Model names as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelName {
    KMinusMatching,
    DoubleCycle,
    KRegularUnion,
    MinDegreeRandom,
}

impl FromStr for ModelName {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k-minus-matching" => Ok(ModelName::KMinusMatching),
            "double-cycle" => Ok(ModelName::DoubleCycle),
            "k-regular-union" => Ok(ModelName::KRegularUnion),
            "min-degree-random" => Ok(ModelName::MinDegreeRandom),
            other => Err(OracleError::ParamInvalid(format!("unknown model {other:?}"))),
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelName::KMinusMatching => "k-minus-matching",
            ModelName::DoubleCycle => "double-cycle",
            ModelName::KRegularUnion => "k-regular-union",
            ModelName::MinDegreeRandom => "min-degree-random",
        })
    }
}

/// Builds the graph described by `spec`; the same spec always yields the
/// same graph.
pub fn generate(spec: &GenSpec) -> Result<BipartiteGraph, OracleError> {
    let invalid = |msg: String| Err(OracleError::ParamInvalid(msg));
    match spec.model {
        GenModel::KMinusMatching { n, removed } => {
            if n == 0 || removed > n {
                return invalid(format!(
                    "k-minus-matching needs 1 <= n and removed <= n, got n={n}, removed={removed}"
                ));
            }
            let mut rng = SplitMix64::new(spec.seed);
            let xs = rng.permutation(n);
            let ys = rng.permutation(n);
            let mut pairs: Vec<(usize, usize)> = xs.into_iter().zip(ys).take(removed).collect();
            pairs.sort_unstable();
            Ok(complete_bipartite_minus_matching(n, &pairs)?)
        }
        GenModel::DoubleCycle { m } => {
            if m < 2 {
                return invalid(format!("double-cycle needs m >= 2, got {m}"));
            }
            Ok(double_graph(&BipartiteGraph::cycle(2 * m)?))
        }
        GenModel::KRegularUnion { n, k } => {
            if n == 0 || k > n {
                return invalid(format!("k-regular-union needs 1 <= n and k <= n, got n={n}, k={k}"));
            }
            let edges = permutation_union(n, k, spec.seed)?;
            Ok(BipartiteGraph::new(n, n, edges)?)
        }
        GenModel::MinDegreeRandom { n, delta, p } => {
            if n == 0 || delta > n || !(0.0..=1.0).contains(&p) {
                return invalid(format!(
                    "min-degree-random needs 1 <= n, delta <= n, 0 <= p <= 1, got n={n}, delta={delta}, p={p}"
                ));
            }
            let mut edges = permutation_union(n, delta, spec.seed)?;
            let mut rng = SplitMix64::new(spec.seed ^ 0xD1B5_4A32_D192_ED03);
            for x in 0..n {
                for y in 0..n {
                    if !edges.contains(&(x, y)) && rng.bernoulli(p) {
                        edges.insert((x, y));
                    }
                }
            }
            Ok(BipartiteGraph::new(n, n, edges)?)
        }
    }
}

/// Attempt `a` draws `k` permutations from `SplitMix64(seed + a)`; the first
/// attempt without a repeated pair wins.
fn permutation_union(n: usize, k: usize, seed: u64) -> Result<BTreeSet<(usize, usize)>, OracleError> {
    'attempt: for a in 0..RETRY_BUDGET {
        let mut rng = SplitMix64::new(seed.wrapping_add(a));
        let mut edges = BTreeSet::new();
        for _ in 0..k {
            let perm = rng.permutation(n);
            for (x, &y) in perm.iter().enumerate() {
                if !edges.insert((x, y)) {
                    continue 'attempt;
                }
            }
        }
        return Ok(edges);
    }
    Err(OracleError::RetryExhausted { attempts: RETRY_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexRef;
    use proptest::prelude::*;

    #[test]
    fn double_cycle_m3() {
        let g = generate(&GenSpec::new(GenModel::DoubleCycle { m: 3 }, 0)).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert_eq!(g, double_graph(&BipartiteGraph::cycle(6).unwrap()));
    }

    #[test]
    fn k4_minus_full_matching() {
        let g = generate(&GenSpec::new(GenModel::KMinusMatching { n: 4, removed: 4 }, 11)).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn k_regular_union_seed_42() {
        let g = generate(&GenSpec::new(GenModel::KRegularUnion { n: 6, k: 3 }, 42)).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 18);
    }

    #[test]
    fn invalid_params() {
        for model in [
            GenModel::KRegularUnion { n: 3, k: 4 },
            GenModel::DoubleCycle { m: 1 },
            GenModel::KMinusMatching { n: 3, removed: 4 },
            GenModel::MinDegreeRandom { n: 3, delta: 1, p: 1.5 },
        ] {
            assert!(matches!(
                generate(&GenSpec::new(model, 0)),
                Err(OracleError::ParamInvalid(_))
            ));
        }
    }

    #[test]
    fn model_names_round_trip() {
        for name in [
            "k-minus-matching",
            "double-cycle",
            "k-regular-union",
            "min-degree-random",
        ] {
            assert_eq!(name.parse::<ModelName>().unwrap().to_string(), name);
        }
        assert!("cube".parse::<ModelName>().is_err());
    }

    proptest! {
        #[test]
        fn deterministic(seed in any::<u64>(), n in 2usize..8) {
            let spec = GenSpec::new(GenModel::MinDegreeRandom { n, delta: 2.min(n), p: 0.3 }, seed);
            prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }

        #[test]
        fn union_is_regular(seed in any::<u64>(), n in 3usize..9, k in 1usize..4) {
            prop_assume!(k <= n);
            let g = generate(&GenSpec::new(GenModel::KRegularUnion { n, k }, seed)).unwrap();
            for v in g.vertices() {
                prop_assert_eq!(g.degree(v), k);
            }
        }

        #[test]
        fn min_degree_floor(seed in any::<u64>(), n in 2usize..9, delta in 1usize..4, p in 0.0f64..1.0) {
            prop_assume!(delta <= n);
            let g = generate(&GenSpec::new(GenModel::MinDegreeRandom { n, delta, p }, seed)).unwrap();
            prop_assert!(g.min_degree().unwrap() >= delta);
            prop_assert!(g.degree(VertexRef::x(0)) <= n);
        }
    }
}
