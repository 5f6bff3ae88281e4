//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! A child `G + v` of a parent `G` is kept when `v` lies in the same orbit as
//! the canonical deletion vertex of the child: the non-cut vertex with the
//! largest canonical label. Isomorphic children of one parent are removed by
//! their canonical keys. Predicates must be hereditary (closed under induced
//! subgraphs), so every graph passing them has a parent passing them.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use suntrap_core::coloring::is_triangle_free;
use suntrap_core::structures::{find_4_sunspot, holes_within};
use suntrap_core::{Graph, VertexSet};

use crate::canon::{canonical_form, marked_form};

pub const DEFAULT_ENUMERATION_CAP: usize = 9;
pub const CAP_ENV: &str = "SUNTRAP_ENUMERATION_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n_max = {n_max} exceeds the enumeration cap {cap} (raise it with {CAP_ENV})")]
    CapExceeded { n_max: usize, cap: usize },
}

/// Hereditary graph properties the enumerator can filter by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    All,
    TriangleFree,
    /// Triangle-free and 4-sunspot-free.
    TriangleFreeSunspotFree,
    /// Triangle-free with no 6-hole.
    TriangleFreeNoSixHole,
}

impl Predicate {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Predicate::All => true,
            Predicate::TriangleFree => is_triangle_free(g),
            Predicate::TriangleFreeSunspotFree => {
                is_triangle_free(g) && find_4_sunspot(g).is_none()
            }
            Predicate::TriangleFreeNoSixHole => {
                is_triangle_free(g)
                    && holes_within(g, g.vertices(), 6, 6)
                        .expect("valid window")
                        .next()
                        .is_none()
            }
        }
    }

    /// Cheap necessary condition on the new vertex's neighbourhood, given a parent that passes.
    fn admits_neighborhood(self, parent: &Graph, nbrs: VertexSet) -> bool {
        match self {
            Predicate::All => true,
            _ => parent.is_stable(nbrs),
        }
    }

    fn holds_for_child(self, child: &Graph) -> bool {
        match self {
            Predicate::All | Predicate::TriangleFree => true,
            _ => self.holds(child),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::All => "all",
            Predicate::TriangleFree => "triangle-free",
            Predicate::TriangleFreeSunspotFree => "triangle-free-sunspot-free",
            Predicate::TriangleFreeNoSixHole => "triangle-free-no-6-hole",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Predicate::All,
            Predicate::TriangleFree,
            Predicate::TriangleFreeSunspotFree,
            Predicate::TriangleFreeNoSixHole,
        ]
        .into_iter()
        .find(|p| p.name() == s)
        .ok_or_else(|| format!("unknown predicate `{s}`"))
    }
}

pub fn enumeration_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn graph_from_rows(rows: Vec<VertexSet>) -> Graph {
    Graph::from_rows(rows).expect("augmentation keeps rows symmetric")
}

fn add_vertex(g: &Graph, nbrs: VertexSet) -> Graph {
    let n = g.n();
    let mut rows: Vec<VertexSet> = (0..n)
        .map(|v| {
            if nbrs.contains(v) {
                g.neighbors(v).with(n)
            } else {
                g.neighbors(v)
            }
        })
        .collect();
    rows.push(nbrs);
    graph_from_rows(rows)
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    g.n() > 1 && !g.is_connected_within(g.vertices().without(v))
}

/// Whether the last vertex of `child` is its canonical deletion vertex, up to automorphism.
fn is_canonical_child(child: &Graph, keys: &crate::canon::Canonical) -> bool {
    let new = child.n() - 1;
    if is_cut_vertex(child, new) {
        return false;
    }
    let pos = keys.positions();
    let m = (0..child.n())
        .filter(|&v| !is_cut_vertex(child, v))
        .max_by_key(|&v| pos[v])
        .expect("a connected graph has a non-cut vertex");
    m == new
        || (child.degree(m) == child.degree(new)
            && marked_form(child, m) == marked_form(child, new))
}

/// Canonical children of a connected parent, in the order of the new vertex's neighbourhood bitmask.
pub fn children(parent: &Graph, predicate: Predicate) -> Vec<Graph> {
    let n = parent.n();
    assert!(n < 63);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let nbrs: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !predicate.admits_neighborhood(parent, nbrs) {
            continue;
        }
        let child = add_vertex(parent, nbrs);
        if !predicate.holds_for_child(&child) {
            continue;
        }
        let canon = canonical_form(&child);
        if is_canonical_child(&child, &canon) && seen.insert(canon.key.clone()) {
            out.push(canon.graph(&child));
        }
    }
    out
}

/// Every connected graph on `1..=n_max` vertices satisfying `predicate`, once
/// per isomorphism class, grouped by order and canonically labelled.
pub fn enumerate_graphs(
    n_max: usize,
    predicate: Predicate,
) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    let cap = enumeration_cap();
    if n_max > cap {
        return Err(EnumerateError::CapExceeded { n_max, cap });
    }
    Ok(enumerate_uncapped(n_max, predicate))
}

/// [`enumerate_graphs`] without the cap check.
pub fn enumerate_uncapped(n_max: usize, predicate: Predicate) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if n_max == 0 {
        return levels;
    }
    let k1 = Graph::empty(1).expect("one vertex");
    levels.push(if predicate.holds(&k1) {
        vec![k1]
    } else {
        Vec::new()
    });
    for _ in 2..=n_max {
        let next: Vec<Graph> = levels
            .last()
            .expect("level 1 exists")
            .par_iter()
            .flat_map_iter(|p| children(p, predicate))
            .collect();
        levels.push(next);
    }
    levels
}

/// All levels flattened, smallest order first.
pub fn enumerate_flat(n_max: usize, predicate: Predicate) -> Result<Vec<Graph>, EnumerateError> {
    Ok(enumerate_graphs(n_max, predicate)?
        .into_iter()
        .flatten()
        .collect())
}
