//! Suns, sunspots, nets and bulls.
//!
//! All four are a cycle with private pendant vertices on some of its vertices.
//! Detection enumerates the cycles (holes, or triangles for nets and bulls)
//! and assigns pendants by backtracking: a pendant candidate for cycle vertex
//! `c_i` lies off the cycle and sees `c_i` and no other cycle vertex; chosen
//! pendants must be distinct and pairwise non-adjacent.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::structures::holes::holes_within;

/// Checks that `vertices` are distinct and induce exactly `edges`.
fn induces_exactly(g: &Graph, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    let set: VertexSet = vertices.iter().copied().collect();
    if set.len() != vertices.len() || vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let expected = |u: usize, v: usize| {
        edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| g.has_edge(u, v) == expected(u, v))
    })
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let l = cycle.len();
    (0..l).map(|i| (cycle[i], cycle[(i + 1) % l])).collect()
}

/// A `t`-sun: `cycle[i]` carries the pendant `pendants[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SunWitness {
    pub cycle: Vec<usize>,
    pub pendants: Vec<usize>,
}

impl SunWitness {
    pub fn t(&self) -> usize {
        self.cycle.len()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.cycle.iter().chain(&self.pendants).copied().collect()
    }

    /// Re-checks the sun pattern from raw adjacency.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.cycle.len() < 4 || self.pendants.len() != self.cycle.len() {
            return false;
        }
        let mut edges = cycle_edges(&self.cycle);
        edges.extend(
            self.cycle
                .iter()
                .copied()
                .zip(self.pendants.iter().copied()),
        );
        induces_exactly(g, &self.vertices(), &edges)
    }
}

/// A 4-sunspot `(x1, x2, x3, x4; y1, y2, y3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SunspotWitness {
    pub x: [usize; 4],
    pub y: [usize; 3],
}

impl SunspotWitness {
    pub fn vertices(&self) -> Vec<usize> {
        self.x.iter().chain(&self.y).copied().collect()
    }

    /// Induced edge set must be exactly `x1x2, x2x3, x3x4, x4x1, x1y1, x2y2, x3y3`.
    pub fn verify(&self, g: &Graph) -> bool {
        let [x1, x2, x3, x4] = self.x;
        let [y1, y2, y3] = self.y;
        let edges = [
            (x1, x2),
            (x2, x3),
            (x3, x4),
            (x4, x1),
            (x1, y1),
            (x2, y2),
            (x3, y3),
        ];
        induces_exactly(g, &self.vertices(), &edges)
    }
}

/// A triangle with a private pendant on each corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetWitness {
    pub triangle: [usize; 3],
    pub pendants: [usize; 3],
}

impl NetWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.triangle;
        let mut edges = vec![(a, b), (b, c), (c, a)];
        edges.extend(self.triangle.iter().copied().zip(self.pendants));
        let vs: Vec<usize> = self
            .triangle
            .iter()
            .chain(&self.pendants)
            .copied()
            .collect();
        induces_exactly(g, &vs, &edges)
    }
}

/// A triangle with private pendants on `triangle[0]` and `triangle[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BullWitness {
    pub triangle: [usize; 3],
    pub pendants: [usize; 2],
}

impl BullWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.triangle;
        let mut edges = vec![(a, b), (b, c), (c, a)];
        edges.extend(self.triangle[..2].iter().copied().zip(self.pendants));
        let vs: Vec<usize> = self
            .triangle
            .iter()
            .chain(&self.pendants)
            .copied()
            .collect();
        induces_exactly(g, &vs, &edges)
    }
}

/// Pendant assignment for the cycle positions in `wanted`; `None` if impossible.
fn assign_pendants(
    g: &Graph,
    allowed: VertexSet,
    cycle: &[usize],
    wanted: &[usize],
) -> Option<Vec<usize>> {
    let cyc: VertexSet = cycle.iter().copied().collect();
    let outside = allowed - cyc;
    let mut slots: Vec<(usize, Vec<usize>)> = Vec::with_capacity(wanted.len());
    for &i in wanted {
        let others = g.neighborhood_of_set(cyc.without(cycle[i]));
        let mut cand: Vec<usize> = (g.neighbors_in(cycle[i], outside) - others).to_vec();
        if cand.is_empty() {
            return None;
        }
        // Low-degree candidates first: forced choices prune fastest.
        cand.sort_by_key(|&v| (g.neighbors_in(v, allowed).len(), v));
        slots.push((i, cand));
    }
    slots.sort_by_key(|(i, cand)| (cand.len(), *i));

    fn rec(
        g: &Graph,
        slots: &[(usize, Vec<usize>)],
        chosen: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let Some((_, cand)) = slots.get(chosen.len()) else {
            return true;
        };
        for &v in cand {
            if used.contains(v) || g.neighbors(v).intersects(&used) {
                continue;
            }
            chosen.push(v);
            if rec(g, slots, chosen, used.with(v)) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(slots.len());
    if !rec(g, &slots, &mut chosen, VertexSet::new()) {
        return None;
    }
    let mut out = vec![usize::MAX; cycle.len()];
    for ((i, _), v) in slots.iter().zip(chosen) {
        out[*i] = v;
    }
    Some(wanted.iter().map(|&i| out[i]).collect())
}

/// A `t`-sun in `G[allowed]` with `t_min <= t <= t_max`, smallest `t` first.
pub fn find_sun_within(
    g: &Graph,
    allowed: VertexSet,
    t_min: usize,
    t_max: usize,
) -> Option<SunWitness> {
    let allowed = allowed & g.vertices();
    let t_min = t_min.max(4);
    let t_max = t_max.min(allowed.len() / 2);
    let all: Vec<usize> = (0..t_max).collect();
    for t in t_min..=t_max {
        let holes = holes_within(g, allowed, t, t).expect("t >= 4");
        for hole in holes {
            if let Some(pendants) = assign_pendants(g, allowed, hole.vertices(), &all[..t]) {
                let w = SunWitness {
                    cycle: hole.vertices().to_vec(),
                    pendants,
                };
                debug_assert!(w.verify(g));
                return Some(w);
            }
        }
    }
    None
}

/// Some `t`-sun with `t >= min_t`.
pub fn find_t_sun(g: &Graph, min_t: usize) -> Option<SunWitness> {
    find_sun_within(g, g.vertices(), min_t, g.n())
}

pub fn find_4_sunspot_within(g: &Graph, allowed: VertexSet) -> Option<SunspotWitness> {
    let allowed = allowed & g.vertices();
    for hole in holes_within(g, allowed, 4, 4).expect("valid window") {
        let c = hole.vertices();
        // The pendant-free vertex x4 sits at position r + 3.
        for r in 0..4 {
            let mut x = [c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]];
            if x[0] > x[2] {
                x.swap(0, 2);
            }
            if let Some(p) = assign_pendants(g, allowed, &x, &[0, 1, 2]) {
                let w = SunspotWitness {
                    x,
                    y: [p[0], p[1], p[2]],
                };
                debug_assert!(w.verify(g));
                return Some(w);
            }
        }
    }
    None
}

pub fn find_4_sunspot(g: &Graph) -> Option<SunspotWitness> {
    find_4_sunspot_within(g, g.vertices())
}

fn triangles(g: &Graph) -> impl Iterator<Item = [usize; 3]> + '_ {
    g.edges().flat_map(move |(u, v)| {
        (g.neighbors(u) & g.neighbors(v))
            .iter()
            .filter(move |&w| w > v)
            .map(move |w| [u, v, w])
    })
}

pub fn find_net(g: &Graph) -> Option<NetWitness> {
    let all = g.vertices();
    triangles(g).find_map(|t| {
        assign_pendants(g, all, &t, &[0, 1, 2]).map(|p| NetWitness {
            triangle: t,
            pendants: [p[0], p[1], p[2]],
        })
    })
}

pub fn find_bull(g: &Graph) -> Option<BullWitness> {
    let all = g.vertices();
    triangles(g).find_map(|[a, b, c]| {
        [[a, b, c], [a, c, b], [b, c, a]].into_iter().find_map(|t| {
            assign_pendants(g, all, &t, &[0, 1]).map(|p| BullWitness {
                triangle: t,
                pendants: [p[0], p[1]],
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sun(t: usize) -> Graph {
        let mut edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
        edges.extend((0..t).map(|i| (i, t + i)));
        Graph::from_edges(2 * t, &edges).unwrap()
    }

    #[test]
    fn finds_generated_sun() {
        let g = sun(8);
        let w = find_t_sun(&g, 5).unwrap();
        assert_eq!(w.t(), 8);
        assert!(w.verify(&g));
        assert_eq!(w.cycle, (0..8).collect::<Vec<_>>());
        assert_eq!(w.pendants, (8..16).collect::<Vec<_>>());
        assert!(find_t_sun(&g, 9).is_none());
    }

    #[test]
    fn plain_cycle_has_no_sun() {
        let edges: Vec<_> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let c10 = Graph::from_edges(10, &edges).unwrap();
        assert!(find_t_sun(&c10, 4).is_none());
    }

    #[test]
    fn sunspot_tuple() {
        // x1..x4 = 0..3, y1..y3 = 4..6
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6)])
            .unwrap();
        let w = find_4_sunspot(&g).unwrap();
        assert_eq!(
            w,
            SunspotWitness {
                x: [0, 1, 2, 3],
                y: [4, 5, 6]
            }
        );
        assert!(find_4_sunspot(&sun(4)).is_some());
        let edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        assert!(find_4_sunspot(&Graph::from_edges(7, &edges).unwrap()).is_none());
    }

    #[test]
    fn net_and_bull() {
        let net = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let w = find_net(&net).unwrap();
        assert!(w.verify(&net));
        assert!(find_bull(&net).unwrap().verify(&net));
        let bull = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        assert!(find_net(&bull).is_none());
        assert_eq!(
            find_bull(&bull).unwrap(),
            BullWitness {
                triangle: [0, 1, 2],
                pendants: [3, 4]
            }
        );
        assert!(find_bull(&sun(5)).is_none());
    }

    #[test]
    fn verify_rejects_extra_edges() {
        let mut g_edges = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (1, 5),
            (2, 6),
            (4, 5),
        ];
        let g = Graph::from_edges(7, &g_edges).unwrap();
        let w = SunspotWitness {
            x: [0, 1, 2, 3],
            y: [4, 5, 6],
        };
        assert!(!w.verify(&g));
        g_edges.pop();
        assert!(w.verify(&Graph::from_edges(7, &g_edges).unwrap()));
    }
}
