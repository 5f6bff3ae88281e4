//! Induced paths and holes, validated against a host graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
    #[error("chord between {0} and {1}")]
    Chord(usize, usize),
    #[error("a hole needs at least 4 vertices, got {0}")]
    TooShort(usize),
    #[error("a path needs at least one vertex")]
    Empty,
}

fn check_distinct(g: &Graph, seq: &[usize]) -> Result<(), PathError> {
    let mut seen = VertexSet::new();
    for &v in seq {
        if v >= g.n() {
            return Err(PathError::OutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if seen.contains(v) {
            return Err(PathError::Repeated(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// An induced path `p_1 - ... - p_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InducedPath {
    seq: Vec<usize>,
}

impl InducedPath {
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self, PathError> {
        if seq.is_empty() {
            return Err(PathError::Empty);
        }
        check_distinct(g, &seq)?;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                let adjacent = g.has_edge(seq[i], seq[j]);
                if j == i + 1 && !adjacent {
                    return Err(PathError::MissingEdge(seq[i], seq[j]));
                }
                if j > i + 1 && adjacent {
                    return Err(PathError::Chord(seq[i], seq[j]));
                }
            }
        }
        Ok(InducedPath { seq })
    }

    /// A proper arc of a hole. Induced in the hole; in `G` only the two ends
    /// of an arc of length `|H| - 1` can be adjacent.
    pub(crate) fn hole_arc(hole: &Hole, start: usize, span: usize) -> Self {
        let l = hole.length();
        assert!(span >= 1 && span < l);
        let seq = (0..=span)
            .map(|s| hole.vertices()[(start + s) % l])
            .collect();
        InducedPath { seq }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.seq
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.seq[0], self.seq[self.seq.len() - 1])
    }

    pub fn interior(&self) -> VertexSet {
        if self.seq.len() <= 2 {
            return VertexSet::new();
        }
        self.seq[1..self.seq.len() - 1].iter().copied().collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.seq.iter().copied().collect()
    }

    /// Edges as ordered pairs `(min, max)`.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.seq
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }
}

/// An induced cycle `h_1 - ... - h_l - h_1` with `l >= 4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole {
    cyc: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, cyc: Vec<usize>) -> Result<Self, PathError> {
        let l = cyc.len();
        if l < 4 {
            return Err(PathError::TooShort(l));
        }
        check_distinct(g, &cyc)?;
        for i in 0..l {
            for j in i + 1..l {
                let consecutive = j == i + 1 || (i == 0 && j == l - 1);
                let adjacent = g.has_edge(cyc[i], cyc[j]);
                if consecutive && !adjacent {
                    return Err(PathError::MissingEdge(cyc[i], cyc[j]));
                }
                if !consecutive && adjacent {
                    return Err(PathError::Chord(cyc[i], cyc[j]));
                }
            }
        }
        Ok(Hole { cyc })
    }

    /// Re-checks the hole against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), PathError> {
        Hole::new(g, self.cyc.clone()).map(|_| ())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cyc
    }

    pub fn length(&self) -> usize {
        self.cyc.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cyc.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.cyc.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.cyc.iter().position(|&x| x == v)
    }

    /// Vertex at cyclic position `i` (taken modulo the length).
    pub fn at(&self, i: isize) -> usize {
        let l = self.cyc.len() as isize;
        self.cyc[i.rem_euclid(l) as usize]
    }

    /// Distance along the cycle between positions `i` and `j`.
    pub fn cycle_distance(&self, i: usize, j: usize) -> usize {
        let l = self.cyc.len();
        let d = i.abs_diff(j) % l;
        d.min(l - d)
    }

    /// Edges as `(min, max)` pairs, in cycle order starting at `h_1 h_2`.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let l = self.cyc.len();
        (0..l)
            .map(|i| {
                let (a, b) = (self.cyc[i], self.cyc[(i + 1) % l]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(i), Some(j)) => self.cycle_distance(i, j) == 1,
            _ => false,
        }
    }

    /// Rotation/reflection that puts the least vertex first and its smaller
    /// cycle-neighbour second.
    pub fn canonical(mut self) -> Self {
        let l = self.cyc.len();
        let (start, _) = self
            .cyc
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .expect("nonempty");
        self.cyc.rotate_left(start);
        if self.cyc[l - 1] < self.cyc[1] {
            self.cyc[1..].reverse();
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn hole_validation() {
        let c6 = cycle(6);
        assert!(Hole::new(&c6, vec![0, 1, 2, 3, 4, 5]).is_ok());
        assert_eq!(Hole::new(&c6, vec![0, 1, 2]), Err(PathError::TooShort(3)));
        assert!(matches!(
            Hole::new(&c6, vec![0, 1, 2, 4]),
            Err(PathError::MissingEdge(0, 4))
        ));
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let chorded = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(
            Hole::new(&chorded, vec![0, 1, 2, 3, 4, 5]),
            Err(PathError::Chord(0, 3))
        );
    }

    #[test]
    fn path_parts() {
        let c6 = cycle(6);
        let p = InducedPath::new(&c6, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(p.length(), 3);
        assert_eq!(p.ends(), (1, 4));
        assert_eq!(p.interior().to_vec(), vec![2, 3]);
        assert!(InducedPath::new(&c6, vec![0, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn canonical_rotation() {
        let c6 = cycle(6);
        let h = Hole::new(&c6, vec![3, 2, 1, 0, 5, 4]).unwrap().canonical();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(h.cycle_distance(0, 5), 1);
        assert_eq!(h.cycle_distance(1, 4), 3);
    }
}
