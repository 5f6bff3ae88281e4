//! Induced-cycle enumeration.
//!
//! Each hole is grown as an induced path from its least vertex (the anchor)
//! through larger vertices only, and closed back to the anchor. A cycle is
//! emitted only when its second vertex is smaller than its last, so every hole
//! appears exactly once, already in canonical rotation/reflection.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::paths::Hole;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoleError {
    #[error("minimum hole length must be at least 4, got {0}")]
    MinLengthTooSmall(usize),
    #[error("empty length window {min}..={max}")]
    EmptyWindow { min: usize, max: usize },
}

/// Lazy stream of the holes of `G[allowed]` with length in `min..=max`.
pub struct Holes<'a> {
    g: &'a Graph,
    allowed: VertexSet,
    min: usize,
    max: usize,
    anchors: VertexSet,
    anchor: usize,
    upper: VertexSet,
    path: Vec<usize>,
    candidates: Vec<VertexSet>,
    blocked: Vec<VertexSet>,
}

impl<'a> Holes<'a> {
    fn new(g: &'a Graph, allowed: VertexSet, min: usize, max: usize) -> Self {
        let allowed = allowed & g.vertices();
        Holes {
            g,
            allowed,
            min,
            max,
            anchors: allowed,
            anchor: 0,
            upper: VertexSet::new(),
            path: Vec::new(),
            candidates: Vec::new(),
            blocked: Vec::new(),
        }
    }

    fn start_anchor(&mut self) -> bool {
        let Some(a) = self.anchors.first() else {
            return false;
        };
        self.anchors.remove(a);
        self.anchor = a;
        self.upper = self.allowed - VertexSet::range(a + 1);
        self.path.clear();
        self.path.push(a);
        self.candidates.clear();
        self.blocked.clear();
        self.candidates.push(self.g.neighbors_in(a, self.upper));
        self.blocked.push(VertexSet::singleton(a));
        true
    }
}

impl Iterator for Holes<'_> {
    type Item = Hole;

    fn next(&mut self) -> Option<Hole> {
        let g = self.g;
        loop {
            if self.candidates.is_empty() && !self.start_anchor() {
                return None;
            }
            let depth = self.candidates.len() - 1;
            let Some(w) = self.candidates[depth].first() else {
                self.candidates.pop();
                self.blocked.pop();
                self.path.pop();
                continue;
            };
            self.candidates[depth].remove(w);
            let a = self.anchor;
            // path = [a, p1, ..., p_k] with k = depth; w extends p_k.
            let k = depth;
            if k >= 2 && g.has_edge(w, a) {
                let len = k + 2;
                if len >= self.min && self.path[1] < w {
                    let mut cyc = self.path.clone();
                    cyc.push(w);
                    return Some(Hole::new(g, cyc).expect("enumerated cycle is a hole"));
                }
                continue;
            }
            // A closure after w gives length at least k + 3.
            if k + 3 > self.max {
                continue;
            }
            let blocked = if k == 0 {
                self.blocked[0].with(w)
            } else {
                self.blocked[depth] | g.neighbors(self.path[k]) | VertexSet::singleton(w)
            };
            let mut next = g.neighbors_in(w, self.upper) - blocked;
            if k == 0 {
                // p2 adjacent to the anchor would close a triangle.
                next = next - g.neighbors(a);
            }
            self.path.push(w);
            self.candidates.push(next);
            self.blocked.push(blocked);
        }
    }
}

fn check_window(min: usize, max: usize) -> Result<(), HoleError> {
    if min < 4 {
        return Err(HoleError::MinLengthTooSmall(min));
    }
    if max < min {
        return Err(HoleError::EmptyWindow { min, max });
    }
    Ok(())
}

/// Every hole of `G[allowed]` with length in `min..=max`, each exactly once in canonical form.
pub fn holes_within(
    g: &Graph,
    allowed: VertexSet,
    min: usize,
    max: usize,
) -> Result<Holes<'_>, HoleError> {
    check_window(min, max)?;
    Ok(Holes::new(g, allowed, min, max))
}

pub fn enumerate_holes(g: &Graph, min: usize, max: usize) -> Result<Vec<Hole>, HoleError> {
    Ok(holes_within(g, g.vertices(), min, max)?.collect())
}

/// A shortest hole of `G[allowed]` among those of length at least `min`.
pub fn find_hole_min_length_within(
    g: &Graph,
    allowed: VertexSet,
    min: usize,
) -> Result<Option<Hole>, HoleError> {
    check_window(min, min)?;
    let n = (allowed & g.vertices()).len();
    for len in min..=n {
        if let Some(h) = holes_within(g, allowed, len, len)?.next() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

pub fn find_hole_min_length(g: &Graph, min: usize) -> Result<Option<Hole>, HoleError> {
    find_hole_min_length_within(g, g.vertices(), min)
}

/// Length of the longest hole of `G[allowed]`, if it has any.
pub fn longest_hole_length_within(g: &Graph, allowed: VertexSet) -> Option<usize> {
    let n = (allowed & g.vertices()).len();
    (4..=n)
        .rev()
        .find(|&len| Holes::new(g, allowed, len, len).next().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_cycle() {
        let holes = enumerate_holes(&cycle(6), 4, 10).unwrap();
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].vertices(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(
            find_hole_min_length(&cycle(9), 6)
                .unwrap()
                .unwrap()
                .length(),
            9
        );
    }

    #[test]
    fn chordal_and_acyclic() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(enumerate_holes(&k4, 4, 4).unwrap().is_empty());
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(find_hole_min_length(&tree, 4).unwrap().is_none());
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(
            find_hole_min_length(&cycle(5), 3).unwrap_err(),
            HoleError::MinLengthTooSmall(3)
        );
        assert!(enumerate_holes(&cycle(5), 6, 5).is_err());
    }

    #[test]
    fn window_filters_lengths() {
        // Two 4-cycles glued along the edge 0-3; the outer 6-cycle has chord 0-3.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 0)])
            .unwrap();
        assert_eq!(enumerate_holes(&g, 4, 4).unwrap().len(), 2);
        assert!(enumerate_holes(&g, 5, 6).unwrap().is_empty());
        assert_eq!(longest_hole_length_within(&g, g.vertices()), Some(4));
        let without_chord = g.vertices().without(3);
        assert_eq!(longest_hole_length_within(&g, without_chord), None);
    }
}
