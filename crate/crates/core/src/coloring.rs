//! Exact colouring, cliques, and vertex-critical extraction.
//!
//! Every routine has a `_within` form that works on the subgraph induced by a
//! vertex set without relabelling, which is how the leveling and witness
//! pipelines use them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("chromatic number {chi} does not exceed the threshold {threshold}")]
    NotAboveThreshold { chi: usize, threshold: usize },
    #[error("critical subgraph {set:?} failed re-verification: {reason}")]
    CriticalCheckFailed { set: VertexSet, reason: String },
}

/// A proper colouring with colours `1..=k`; `color[v] == 0` marks vertices
/// outside the coloured set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// True iff every vertex of `set` has a colour in `1..=k` and no edge inside `set` is monochromatic.
    pub fn is_proper_within(&self, g: &Graph, set: VertexSet) -> bool {
        set.iter().all(|v| {
            let c = self.color[v];
            c >= 1 && c <= self.k && g.neighbors_in(v, set).iter().all(|u| self.color[u] != c)
        })
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color.len() == g.n() && self.is_proper_within(g, g.vertices())
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        (1..=self.k)
            .map(|c| {
                self.color
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x == c)
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect()
    }
}

/// Vertex set `S` with `chi(G[S]) = threshold + 1` whose every single-vertex deletion is `threshold`-colourable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCertificate {
    pub set: VertexSet,
    pub threshold: usize,
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<VertexSet>,
    color: Vec<usize>,
    uncolored: VertexSet,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize) -> Vec<bool> {
        let nbrs = self.g.neighbors(v);
        self.classes.iter().map(|c| c.intersects(&nbrs)).collect()
    }

    fn saturation(&self, v: usize) -> usize {
        let nbrs = self.g.neighbors(v);
        self.classes.iter().filter(|c| c.intersects(&nbrs)).count()
    }

    /// Highest saturation, then most uncoloured neighbours, then least label.
    fn pick(&self) -> Option<usize> {
        self.uncolored.iter().max_by(|&a, &b| {
            let key = |v: usize| {
                (
                    self.saturation(v),
                    self.g.neighbors_in(v, self.uncolored).len(),
                )
            };
            key(a).cmp(&key(b)).then(b.cmp(&a))
        })
    }

    fn search(&mut self) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let forbidden = self.forbidden(v);
        let used = self.classes.len();
        // A fresh colour is only ever the next unused index.
        let options = (used + 1).min(self.k);
        for c in 0..options {
            if c < used && forbidden[c] {
                continue;
            }
            if c == used {
                self.classes.push(VertexSet::new());
            }
            self.classes[c].insert(v);
            self.color[v] = c + 1;
            self.uncolored.remove(v);
            if self.search() {
                return true;
            }
            self.uncolored.insert(v);
            self.color[v] = 0;
            self.classes[c].remove(v);
            if c == used {
                self.classes.pop();
            }
        }
        false
    }
}

/// A proper `k`-colouring of `G[set]`, if one exists.
pub fn is_k_colorable_within(g: &Graph, set: VertexSet, k: usize) -> Option<Coloring> {
    let set = set & g.vertices();
    if set.is_empty() {
        return Some(Coloring {
            color: vec![0; g.n()],
            k,
        });
    }
    if k == 0 {
        return None;
    }
    let mut search = Dsatur {
        g,
        k,
        classes: Vec::new(),
        color: vec![0; g.n()],
        uncolored: set,
    };
    if !search.search() {
        return None;
    }
    let coloring = Coloring {
        color: search.color,
        k,
    };
    assert!(
        coloring.is_proper_within(g, set),
        "search returned an improper colouring"
    );
    Some(coloring)
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    is_k_colorable_within(g, g.vertices(), k)
}

/// Greedy DSATUR colouring of `G[set]`, an upper bound on chi.
fn greedy_coloring(g: &Graph, set: VertexSet) -> Coloring {
    let mut color = vec![0; g.n()];
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = set;
    while !uncolored.is_empty() {
        let v = uncolored
            .iter()
            .max_by_key(|&v| {
                let nbrs = g.neighbors(v);
                let sat = classes.iter().filter(|c| c.intersects(&nbrs)).count();
                (sat, g.neighbors_in(v, uncolored).len(), usize::MAX - v)
            })
            .expect("nonempty");
        let nbrs = g.neighbors(v);
        let c = match classes.iter().position(|c| !c.intersects(&nbrs)) {
            Some(c) => c,
            None => {
                classes.push(VertexSet::new());
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        color[v] = c + 1;
        uncolored.remove(v);
    }
    Coloring {
        color,
        k: classes.len(),
    }
}

/// Largest clique found greedily from each start vertex; a lower bound on omega.
fn greedy_clique(g: &Graph, set: VertexSet) -> usize {
    set.iter()
        .map(|start| {
            let mut size = 1;
            let mut cand = g.neighbors_in(start, set);
            while let Some(v) = cand
                .iter()
                .max_by_key(|&v| (g.neighbors_in(v, cand).len(), usize::MAX - v))
            {
                size += 1;
                cand = g.neighbors_in(v, cand);
            }
            size
        })
        .max()
        .unwrap_or(0)
}

/// Chromatic number of `G[set]` with a witnessing colouring.
pub fn chromatic_number_within(g: &Graph, set: VertexSet) -> (usize, Coloring) {
    let set = set & g.vertices();
    if set.is_empty() {
        return (
            0,
            Coloring {
                color: vec![0; g.n()],
                k: 0,
            },
        );
    }
    let upper = greedy_coloring(g, set);
    let lower = greedy_clique(g, set);
    for k in lower..upper.k {
        if let Some(c) = is_k_colorable_within(g, set, k) {
            return (k, c);
        }
    }
    (upper.k, upper)
}

pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    chromatic_number_within(g, g.vertices())
}

pub fn chi_within(g: &Graph, set: VertexSet) -> usize {
    chromatic_number_within(g, set).0
}

pub fn chi(g: &Graph) -> usize {
    chromatic_number(g).0
}

fn max_clique_rec(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = cand.first() {
        if size + cand.len() <= *best {
            return;
        }
        max_clique_rec(g, size + 1, g.neighbors_in(v, cand), best);
        cand.remove(v);
    }
}

pub fn clique_number_within(g: &Graph, set: VertexSet) -> usize {
    let set = set & g.vertices();
    let mut best = greedy_clique(g, set);
    max_clique_rec(g, 0, set, &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_within(g, g.vertices())
}

/// Lexicographically least triangle `(a, b, c)` with `a < b < c`, if any.
pub fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    g.edges().find_map(|(u, v)| {
        (g.neighbors(u) & g.neighbors(v))
            .iter()
            .find(|&w| w > v)
            .map(|w| (u, v, w))
    })
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// A vertex of `G[set]` whose degree is below `chi(G[set]) - 1`.
pub fn non_degeneracy_violation_within(g: &Graph, set: VertexSet) -> Option<usize> {
    let chi = chi_within(g, set);
    set.iter().find(|&v| g.neighbors_in(v, set).len() + 1 < chi)
}

pub fn is_non_degenerate(g: &Graph) -> bool {
    non_degeneracy_violation_within(g, g.vertices()).is_none()
}

/// A distinct non-adjacent pair `(x, y)` of `G[set]`, `x < y`, where one
/// neighbourhood contains the other.
pub fn liberality_violation_within(g: &Graph, set: VertexSet) -> Option<(usize, usize)> {
    for x in set.iter() {
        let nx = g.neighbors_in(x, set);
        for y in (set - nx).iter().filter(|&y| y > x) {
            let ny = g.neighbors_in(y, set);
            if nx.is_subset(&ny) || ny.is_subset(&nx) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_liberal_within(g: &Graph, set: VertexSet) -> bool {
    liberality_violation_within(g, set).is_none()
}

pub fn is_liberal(g: &Graph) -> bool {
    is_liberal_within(g, g.vertices())
}

/// Deletes vertices of `set` in ascending order, restarting after each
/// successful deletion, while chi stays above `threshold`. The survivor is
/// then re-verified: chi equal to `threshold + 1`, every single deletion
/// `threshold`-colourable, non-degenerate, liberal.
pub fn extract_critical_within(
    g: &Graph,
    set: VertexSet,
    threshold: usize,
) -> Result<CriticalCertificate, ColoringError> {
    let mut current = set & g.vertices();
    if is_k_colorable_within(g, current, threshold).is_some() {
        return Err(ColoringError::NotAboveThreshold {
            chi: chi_within(g, current),
            threshold,
        });
    }
    'scan: loop {
        for v in current.iter() {
            let smaller = current.without(v);
            if is_k_colorable_within(g, smaller, threshold).is_none() {
                current = smaller;
                continue 'scan;
            }
        }
        break;
    }
    let cert = CriticalCertificate {
        set: current,
        threshold,
    };
    verify_critical(g, &cert)?;
    Ok(cert)
}

pub fn extract_critical(g: &Graph, threshold: usize) -> Result<CriticalCertificate, ColoringError> {
    extract_critical_within(g, g.vertices(), threshold)
}

/// Full re-check of a critical certificate, including non-degeneracy and liberality.
pub fn verify_critical(g: &Graph, cert: &CriticalCertificate) -> Result<(), ColoringError> {
    let fail = |reason: String| {
        Err(ColoringError::CriticalCheckFailed {
            set: cert.set,
            reason,
        })
    };
    let chi = chi_within(g, cert.set);
    if chi != cert.threshold + 1 {
        return fail(format!("chi is {chi}, expected {}", cert.threshold + 1));
    }
    if let Some(v) = cert
        .set
        .iter()
        .find(|&v| is_k_colorable_within(g, cert.set.without(v), cert.threshold).is_none())
    {
        return fail(format!("deleting {v} keeps chi above the threshold"));
    }
    if let Some(v) = non_degeneracy_violation_within(g, cert.set) {
        return fail(format!("vertex {v} has degree below chi - 1"));
    }
    if let Some((x, y)) = liberality_violation_within(g, cert.set) {
        return fail(format!("pair ({x}, {y}) is dominated"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn odd_cycle_colorability() {
        let c5 = cycle(5);
        assert!(is_k_colorable(&c5, 2).is_none());
        let col = is_k_colorable(&c5, 3).unwrap();
        assert!(col.is_proper(&c5));
        assert_eq!(chi(&c5), 3);
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chi(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chi(&Graph::empty(3).unwrap()), 1);
        assert_eq!(chi(&complete(4)), 4);
        assert_eq!(chi(&cycle(6)), 2);
    }

    #[test]
    fn cliques_and_triangles() {
        assert_eq!(clique_number(&complete(4)), 4);
        assert_eq!(find_triangle(&complete(4)), Some((0, 1, 2)));
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert!(is_triangle_free(&cycle(5)));
    }

    #[test]
    fn critical_extraction() {
        let c5 = cycle(5);
        let cert = extract_critical(&c5, 2).unwrap();
        assert_eq!(cert.set, c5.vertices());

        let k4_k3 = complete(4).disjoint_union(&complete(3)).unwrap();
        let cert = extract_critical(&k4_k3, 2).unwrap();
        assert_eq!(cert.set.len(), 3);
        assert_eq!(clique_number_within(&k4_k3, cert.set), 3);

        assert_eq!(
            extract_critical(&c5, 3),
            Err(ColoringError::NotAboveThreshold {
                chi: 3,
                threshold: 3
            })
        );
    }

    #[test]
    fn degeneracy_and_liberality() {
        let c5 = cycle(5);
        assert!(is_non_degenerate(&c5));
        assert!(is_liberal(&c5));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            liberality_violation_within(&claw, claw.vertices()),
            Some((1, 2))
        );
        let k3_plus = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            non_degeneracy_violation_within(&k3_plus, k3_plus.vertices()),
            Some(3)
        );
    }
}
