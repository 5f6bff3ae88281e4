//! Seeded random corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use suntrap_core::Graph;

pub const DEFAULT_RANDOM_CAP: usize = 40;
pub const RANDOM_CAP_ENV: &str = "SUNTRAP_RANDOM_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomError {
    #[error("n = {n} exceeds the random-mode cap {cap} (raise it with {RANDOM_CAP_ENV})")]
    CapExceeded { n: usize, cap: usize },
    #[error("empty order range {0}..={1}")]
    EmptyRange(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum RandomModel {
    /// Random non-edges closing no triangle, added until saturation.
    TriangleFree,
    /// Each pair independently with probability `p`.
    Gnp { p: f64 },
}

pub fn random_cap() -> usize {
    std::env::var(RANDOM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_RANDOM_CAP)
}

/// One run of the triangle-free process, stopping after `budget` edges if given.
pub fn triangle_free_process(n: usize, budget: Option<usize>, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    pairs.shuffle(rng);
    let mut adj = vec![suntrap_core::VertexSet::new(); n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if budget.is_some_and(|b| edges.len() >= b) {
            break;
        }
        if adj[u].is_disjoint(&adj[v]) {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(n, &edges).expect("pairs are in range");
    assert!(suntrap_core::coloring::is_triangle_free(&g));
    g
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// `count` graphs with orders drawn uniformly from `n_min..=n_max`, reproducible from `seed`.
pub fn random_graphs(
    model: RandomModel,
    n_min: usize,
    n_max: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Graph>, RandomError> {
    if n_min > n_max {
        return Err(RandomError::EmptyRange(n_min, n_max));
    }
    let cap = random_cap();
    if n_max > cap {
        return Err(RandomError::CapExceeded { n: n_max, cap });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            match model {
                RandomModel::TriangleFree => triangle_free_process(n, None, &mut rng),
                RandomModel::Gnp { p } => gnp(n, p, &mut rng),
            }
        })
        .collect())
}

pub fn random_triangle_free(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>, RandomError> {
    random_graphs(RandomModel::TriangleFree, n, n, count, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use suntrap_core::coloring::is_triangle_free;

    #[test]
    fn reproducible() {
        assert_eq!(
            random_triangle_free(5, 10, 7).unwrap(),
            random_triangle_free(5, 10, 7).unwrap()
        );
        let a = random_graphs(RandomModel::Gnp { p: 0.4 }, 4, 12, 20, 3).unwrap();
        assert_eq!(
            a,
            random_graphs(RandomModel::Gnp { p: 0.4 }, 4, 12, 20, 3).unwrap()
        );
        assert_ne!(
            a,
            random_graphs(RandomModel::Gnp { p: 0.4 }, 4, 12, 20, 4).unwrap()
        );
    }

    #[test]
    fn triangle_free_and_saturated() {
        for g in random_triangle_free(20, 30, 1).unwrap() {
            assert!(is_triangle_free(&g));
            for (u, v) in (0..20).flat_map(|j| (0..j).map(move |i| (i, j))) {
                if !g.has_edge(u, v) {
                    assert!(
                        !g.neighbors(u).is_disjoint(&g.neighbors(v)),
                        "{u}{v} could still be added"
                    );
                }
            }
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(
            random_triangle_free(1000, 1, 0),
            Err(RandomError::CapExceeded { .. })
        ));
    }
}
