//! Immutable simple graphs over dense vertex labels `0..n` with bitset rows.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

const WORDS: usize = 4;

/// Hard storage limit for a single graph.
pub const MAX_VERTICES: usize = WORDS * 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at ({vertex}, {vertex})")]
    SelfLoop { vertex: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
}

/// A set of vertices, stored as a fixed-width bitset. Serializes as an ascending list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = Self::new();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.words[i] &= rhs.words[i];
        }
        self
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.words[i] |= rhs.words[i];
        }
        self
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.words[i] &= !rhs.words[i];
        }
        self
    }
}

/// Complement within the full storage range; intersect with a vertex range before use.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(mut self) -> VertexSet {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Vec<usize> {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = GraphError;
    fn try_from(v: Vec<usize>) -> Result<VertexSet, GraphError> {
        match v.iter().find(|&&x| x >= MAX_VERTICES) {
            Some(&vertex) => Err(GraphError::VertexOutOfRange {
                vertex,
                n: MAX_VERTICES,
            }),
            None => Ok(v.into_iter().collect()),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over a [`VertexSet`].
pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = self.words[self.index];
            if w != 0 {
                self.words[self.index] = w & (w - 1);
                return Some(self.index * 64 + w.trailing_zeros() as usize);
            }
            self.index += 1;
        }
        None
    }
}

/// Graph distance from a BFS root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the vertex of the parent graph that became vertex `i`.
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn original_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.labels[v]).collect()
    }

    pub fn original_vec(&self, seq: &[usize]) -> Vec<usize> {
        seq.iter().map(|&v| self.labels[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::new(); n],
        })
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds from adjacency rows; rows are symmetrized and diagonal bits cleared.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::range(n);
        for (u, row) in rows.iter().enumerate() {
            if let Some(bad) = (*row - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            for v in row.without(u) {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// `N_G(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    /// `N_Y(x)`: neighbours of `x` inside `within`.
    #[inline]
    pub fn neighbors_in(&self, x: usize, within: VertexSet) -> VertexSet {
        self.rows[x] & within
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Union of `N(v)` over `v` in `set`.
    pub fn neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::new(), |acc, v| acc | self.rows[v])
    }

    /// Vertices at distance exactly two from `v`.
    pub fn second_neighborhood(&self, v: usize) -> VertexSet {
        let first = self.rows[v];
        self.neighborhood_of_set(first) - first - VertexSet::singleton(v)
    }

    /// True iff `x` and `y` are disjoint and no edge joins them.
    pub fn is_anticomplete(&self, x: VertexSet, y: VertexSet) -> bool {
        x.is_disjoint(&y) && !self.neighborhood_of_set(x).intersects(&y)
    }

    /// True iff `set` is a stable set.
    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.rows[v].intersects(&set))
    }

    pub fn induced_subgraph(&self, set: VertexSet) -> InducedSubgraph {
        let labels: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let rows = labels
            .iter()
            .map(|&v| (self.rows[v] & set).iter().map(|u| index[u]).collect())
            .collect();
        InducedSubgraph {
            graph: Graph {
                n: labels.len(),
                rows,
            },
            labels,
        }
    }

    /// BFS distances from `root` over the whole graph.
    pub fn bfs_levels(&self, root: usize) -> Vec<Distance> {
        self.bfs_within(root, self.vertices())
    }

    /// BFS distances from `root` in the subgraph induced on `allowed`
    /// (which must contain `root`). Vertices outside `allowed` are unreachable.
    pub fn bfs_within(&self, root: usize, allowed: VertexSet) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.n];
        if !allowed.contains(root) {
            return dist;
        }
        dist[root] = Distance::Finite(0);
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let next = (self.neighborhood_of_set(frontier) & allowed) - seen;
            for v in next {
                dist[v] = Distance::Finite(depth);
            }
            seen = seen | next;
            frontier = next;
        }
        dist
    }

    /// BFS layers from `root` inside `allowed`; layer `i` holds the vertices at distance `i`.
    pub fn bfs_layers_within(&self, root: usize, allowed: VertexSet) -> Vec<VertexSet> {
        let mut layers = Vec::new();
        if !allowed.contains(root) {
            return layers;
        }
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        while !frontier.is_empty() {
            layers.push(frontier);
            let next = (self.neighborhood_of_set(frontier) & allowed) - seen;
            seen = seen | next;
            frontier = next;
        }
        layers
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced on `set`, ordered by least vertex.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut remaining = set & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let reached = self.reach_within(v, remaining);
            remaining = remaining - reached;
            out.push(reached);
        }
        out
    }

    fn reach_within(&self, root: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighborhood_of_set(frontier) & allowed) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertices()).len() == self.n
    }

    /// True iff the subgraph induced on `set` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.reach_within(v, set) == set,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let edges: Vec<(usize, usize)> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_edges(self.n + other.n, &edges)
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut inverse = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            inverse[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| self.rows[v].iter().map(|u| inverse[u]).collect())
            .collect();
        Graph { n: self.n, rows }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn builds_triangle_and_singleton() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    }

    #[test]
    fn rejects_loops_and_range_errors() {
        assert_eq!(
            Graph::from_edges(5, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn neighbor_queries() {
        let c5 = cycle(5);
        assert_eq!(c5.neighbors_in(0, c5.vertices()).to_vec(), vec![1, 4]);
        assert!(c5.neighbors_in(0, VertexSet::new()).is_empty());
        let p = petersen();
        assert_eq!(p.neighbors(0).len(), 3);
    }

    #[test]
    fn second_neighborhoods() {
        assert_eq!(cycle(6).second_neighborhood(0).to_vec(), vec![2, 4]);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.second_neighborhood(0).is_empty());
        let p = petersen();
        for v in 0..10 {
            assert_eq!(p.second_neighborhood(v).len(), 6);
        }
    }

    #[test]
    fn anticompleteness() {
        let c6 = cycle(6);
        let s = VertexSet::singleton;
        assert!(c6.is_anticomplete(s(0), s(3)));
        assert!(!c6.is_anticomplete(s(0), s(0)));
        assert!(!c6.is_anticomplete(s(0), s(1)));
        assert!(c6.is_anticomplete(s(0), VertexSet::new()));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sub = k4.induced_subgraph([1, 2, 3].into_iter().collect());
        assert_eq!(sub.graph.edge_count(), 3);
        assert_eq!(sub.labels, vec![1, 2, 3]);
        let c6 = cycle(6);
        let sub = c6.induced_subgraph([0, 2, 4].into_iter().collect());
        assert_eq!(sub.graph.edge_count(), 0);
        let empty = c6.induced_subgraph(VertexSet::new());
        assert_eq!(empty.graph.n(), 0);
        let whole = c6.induced_subgraph(c6.vertices());
        assert_eq!(whole.graph, c6);
    }

    #[test]
    fn bfs_distances() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let d: Vec<_> = p3.bfs_levels(0);
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Finite(2)
            ]
        );
        let pair = Graph::empty(2).unwrap();
        assert_eq!(pair.bfs_levels(0)[1], Distance::Unreachable);
        let p = petersen();
        for v in 0..10 {
            let ecc = p.bfs_levels(v).iter().filter_map(|d| d.finite()).max();
            assert_eq!(ecc, Some(2));
        }
    }

    #[test]
    fn component_split() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let comps: Vec<usize> = g.components().iter().map(VertexSet::len).collect();
        assert_eq!(comps, vec![3, 2]);
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(e4.components().len(), 4);
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [3, 70, 200].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(200));
        assert_eq!(s.to_vec(), vec![3, 70, 200]);
        assert_eq!(VertexSet::range(130).len(), 130);
        assert!(VertexSet::range(64).contains(63));
        assert!(!VertexSet::range(64).contains(64));
    }
}
