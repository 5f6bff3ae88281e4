//! Sectors of a hole relative to an outside vertex, flaps, and flaplessness.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::paths::{Hole, InducedPath, PathError};
use crate::structures::holes::holes_within;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectorError {
    #[error("vertex {0} lies on the hole")]
    OnHole(usize),
    #[error("invalid hole: {0}")]
    InvalidHole(#[from] PathError),
}

/// All `x`-sectors of `hole`, in cycle order starting from the first neighbour of `x`.
/// When `x` has exactly two neighbours on the hole and they are adjacent, the
/// long sector's ends are adjacent in `G`; it is still a path of the hole.
pub fn x_sectors(g: &Graph, hole: &Hole, x: usize) -> Result<Vec<InducedPath>, SectorError> {
    if hole.contains(x) {
        return Err(SectorError::OnHole(x));
    }
    let l = hole.length();
    let hits: Vec<usize> = (0..l)
        .filter(|&i| g.has_edge(x, hole.vertices()[i]))
        .collect();
    if hits.len() <= 1 {
        return Ok(Vec::new());
    }
    let sectors = (0..hits.len())
        .map(|j| {
            let start = hits[j];
            let end = hits[(j + 1) % hits.len()];
            let span = (end + l - start) % l;
            InducedPath::hole_arc(hole, start, span)
        })
        .collect();
    Ok(sectors)
}

/// A 4-hole `quad[0] - quad[1] - quad[2] - quad[3] - quad[0]` sharing at least one edge with a reference hole.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlapWitness {
    /// `[x1, h1, h2, x2]` with `h1 h2` an edge of the reference hole.
    pub quad: [usize; 4],
    /// Edges of the quad that are edges of the reference hole, as `(min, max)`.
    pub shared: Vec<(usize, usize)>,
}

impl FlapWitness {
    pub fn verify(&self, g: &Graph, hole: &Hole) -> bool {
        let q = self.quad.to_vec();
        if Hole::new(g, q).is_err() {
            return false;
        }
        let shared = shared_edges(&self.quad, hole);
        !shared.is_empty() && shared == self.shared
    }
}

fn shared_edges(quad: &[usize; 4], hole: &Hole) -> Vec<(usize, usize)> {
    (0..4)
        .map(|i| (quad[i], quad[(i + 1) % 4]))
        .filter(|&(a, b)| hole.has_edge(a, b))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// An `H`-flap inside `G[allowed]`.
pub fn find_flap_within(
    g: &Graph,
    allowed: VertexSet,
    hole: &Hole,
) -> Result<Option<FlapWitness>, SectorError> {
    hole.validate(g)?;
    let l = hole.length() as isize;
    for i in 0..l {
        for (h1, h2) in [(hole.at(i), hole.at(i + 1)), (hole.at(i + 1), hole.at(i))] {
            let n1 = g.neighbors_in(h1, allowed);
            let n2 = g.neighbors_in(h2, allowed);
            let xs1 = n1 - n2 - VertexSet::singleton(h2);
            let xs2 = n2 - n1 - VertexSet::singleton(h1);
            for x1 in xs1 {
                if let Some(x2) = (g.neighbors(x1) & xs2).first() {
                    let quad = [x1, h1, h2, x2];
                    let w = FlapWitness {
                        shared: shared_edges(&quad, hole),
                        quad,
                    };
                    debug_assert!(w.verify(g, hole));
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Every `H`-flap of `G[allowed]`, once per orientation `[x1, h1, h2, x2]` of each shared hole edge.
pub fn all_flaps_within(g: &Graph, allowed: VertexSet, hole: &Hole) -> Vec<FlapWitness> {
    let l = hole.length() as isize;
    let mut out = Vec::new();
    for i in 0..l {
        for (h1, h2) in [(hole.at(i), hole.at(i + 1)), (hole.at(i + 1), hole.at(i))] {
            let n1 = g.neighbors_in(h1, allowed);
            let n2 = g.neighbors_in(h2, allowed);
            let xs2 = n2 - n1 - VertexSet::singleton(h1);
            for x1 in n1 - n2 - VertexSet::singleton(h2) {
                for x2 in g.neighbors(x1) & xs2 {
                    let quad = [x1, h1, h2, x2];
                    out.push(FlapWitness {
                        shared: shared_edges(&quad, hole),
                        quad,
                    });
                }
            }
        }
    }
    out
}

pub fn find_flap(g: &Graph, hole: &Hole) -> Result<Option<FlapWitness>, SectorError> {
    find_flap_within(g, g.vertices(), hole)
}

/// Adjacency of the "lies on a 4-hole" relation among edges of `G[allowed]`.
fn edges_on_four_holes(g: &Graph, allowed: VertexSet) -> Vec<VertexSet> {
    let mut rows = vec![VertexSet::new(); g.n()];
    for quad in holes_within(g, allowed, 4, 4).expect("valid window") {
        let c = quad.vertices();
        for i in 0..4 {
            let (a, b) = (c[i], c[(i + 1) % 4]);
            rows[a].insert(b);
            rows[b].insert(a);
        }
    }
    rows
}

/// A hole of length at least 6 in `G[allowed]` together with one of its flaps, if any.
pub fn flap_violation_within(g: &Graph, allowed: VertexSet) -> Option<(Hole, FlapWitness)> {
    let allowed = allowed & g.vertices();
    let flap_edges = edges_on_four_holes(g, allowed);
    if flap_edges.iter().all(VertexSet::is_empty) {
        return None;
    }
    let hole = holes_within(g, allowed, 6, allowed.len().max(6))
        .expect("valid window")
        .find(|h| {
            h.edge_pairs()
                .iter()
                .any(|&(a, b)| flap_edges[a].contains(b))
        })?;
    let flap = find_flap_within(g, allowed, &hole)
        .expect("enumerated hole is valid")
        .expect("hole uses an edge of a 4-hole");
    Some((hole, flap))
}

pub fn is_flapless_within(g: &Graph, allowed: VertexSet) -> bool {
    flap_violation_within(g, allowed).is_none()
}

pub fn is_flapless(g: &Graph) -> bool {
    is_flapless_within(g, g.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// C6 on 0..5 plus vertex 6 adjacent to the listed hole vertices.
    fn c6_plus(nbrs: &[usize]) -> (Graph, Hole) {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend(nbrs.iter().map(|&h| (6, h)));
        let g = Graph::from_edges(7, &edges).unwrap();
        let h = Hole::new(&g, (0..6).collect()).unwrap();
        (g, h)
    }

    #[test]
    fn sector_lengths() {
        let lengths = |nbrs: &[usize]| {
            let (g, h) = c6_plus(nbrs);
            let mut ls: Vec<usize> = x_sectors(&g, &h, 6)
                .unwrap()
                .iter()
                .map(|p| p.length())
                .collect();
            ls.sort();
            ls
        };
        assert_eq!(lengths(&[0, 3]), vec![3, 3]);
        assert_eq!(lengths(&[0]), Vec::<usize>::new());
        assert_eq!(lengths(&[0, 1, 3]), vec![1, 2, 3]);
        let (g, h) = c6_plus(&[0, 3]);
        assert_eq!(x_sectors(&g, &h, 2), Err(SectorError::OnHole(2)));
    }

    #[test]
    fn flapless_examples() {
        assert!(is_flapless(&cycle(7)));
        let mut petersen = Vec::new();
        for i in 0..5 {
            petersen.push((i, (i + 1) % 5));
            petersen.push((i, i + 5));
            petersen.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(is_flapless(&Graph::from_edges(10, &petersen).unwrap()));
    }

    #[test]
    fn cube_has_flap() {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let q3 = Graph::from_edges(8, &edges).unwrap();
        let (hole, flap) = flap_violation_within(&q3, q3.vertices()).unwrap();
        assert_eq!(hole.length(), 6);
        assert!(flap.verify(&q3, &hole));
        assert_eq!(find_flap(&q3, &hole).unwrap().as_ref(), Some(&flap));
    }
}
