//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is pruned two ways: interchangeable twins in a target cell
//! are explored once, and at the root children in the same orbit of the
//! automorphisms found so far are skipped.

use suntrap_core::{Graph, VertexSet};

/// Largest order [`canonical_form`] accepts; keys pack each row into a `u64`.
pub const MAX_CANON_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// `order[i]` is the vertex that receives canonical label `i`.
    pub order: Vec<usize>,
    /// Row `i` of the relabelled adjacency matrix.
    pub key: Vec<u64>,
}

impl Canonical {
    /// Canonical label of every vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.order)
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors_in(v, splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                let mut prev = None;
                for (k, v) in keyed {
                    if prev == Some(k) {
                        next.last_mut().expect("group started").push(v);
                    } else {
                        next.push(vec![v]);
                        prev = Some(k);
                    }
                }
                changed |= next.len() - before > 1;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn leaf_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |row, u| row | 1 << pos[u]))
        .collect()
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Canonical>,
    /// Automorphisms as vertex maps, discovered from equal leaves.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn same_root_orbit(&self, a: usize, b: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for perm in &self.autos {
            for (v, &w) in perm.iter().enumerate() {
                let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                parent[rv] = rw;
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn visit(&mut self, mut cells: Cells, depth: usize) {
        refine(self.g, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let key = leaf_key(self.g, &order);
            match &self.best {
                Some(b) if key == b.key => {
                    let mut perm = vec![0; order.len()];
                    for (i, &v) in b.order.iter().enumerate() {
                        perm[v] = order[i];
                    }
                    self.autos.push(perm);
                }
                Some(b) if key > b.key => {}
                _ => self.best = Some(Canonical { order, key }),
            }
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| cells[i].len())
            .expect("some cell is not a singleton");
        let mut members = cells[target].clone();
        members.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in members {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            if depth == 0 && tried.iter().any(|&u| self.same_root_orbit(u, v)) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            self.visit(child, depth + 1);
            tried.push(v);
        }
    }
}

/// Canonical form relative to an ordered initial partition of the vertices.
/// Two coloured graphs get equal keys iff an isomorphism maps cell `i` onto cell `i`.
pub fn canonical_form_with_partition(g: &Graph, cells: Vec<Vec<usize>>) -> Canonical {
    assert!(
        g.n() <= MAX_CANON_N,
        "canonical labelling supports at most {MAX_CANON_N} vertices"
    );
    debug_assert_eq!(cells.iter().map(Vec::len).sum::<usize>(), g.n());
    if g.n() == 0 {
        return Canonical {
            order: Vec::new(),
            key: Vec::new(),
        };
    }
    let cells: Cells = cells.into_iter().filter(|c| !c.is_empty()).collect();
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    search.visit(cells, 0);
    search.best.expect("the search reaches at least one leaf")
}

pub fn canonical_form(g: &Graph) -> Canonical {
    canonical_form_with_partition(g, vec![(0..g.n()).collect()])
}

/// Canonical form of `g` with vertex `v` singled out.
pub fn marked_form(g: &Graph, v: usize) -> Vec<u64> {
    let rest = (0..g.n()).filter(|&u| u != v).collect();
    canonical_form_with_partition(g, vec![vec![v], rest]).key
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).key == canonical_form(b).key
}

#[cfg(test)]
mod tests {
    use super::*;
    use suntrap_core::witness::generators::{complete, complete_bipartite, cycle, petersen};

    fn shuffled(g: &Graph, seed: usize) -> Graph {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, (seed * 31 + i * 17) % (i + 1));
        }
        g.permuted(&order)
    }

    #[test]
    fn relabellings_agree() {
        for g in [
            cycle(7).unwrap(),
            petersen(),
            complete_bipartite(3, 4).unwrap(),
            complete(6).unwrap(),
        ] {
            let k = canonical_form(&g).key;
            for s in 0..5 {
                assert_eq!(canonical_form(&shuffled(&g, s)).key, k);
            }
            let c = canonical_form(&g);
            assert_eq!(canonical_form(&c.graph(&g)).key, k);
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        let c6 = cycle(6).unwrap();
        let two_c3 = cycle(3)
            .unwrap()
            .disjoint_union(&cycle(3).unwrap())
            .unwrap();
        assert!(!is_isomorphic(&c6, &two_c3));
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p, &star));
    }

    #[test]
    fn marked_vertices() {
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(marked_form(&p, 0), marked_form(&p, 3));
        assert_ne!(marked_form(&p, 0), marked_form(&p, 1));
        let pet = petersen();
        assert!((1..10).all(|v| marked_form(&pet, v) == marked_form(&pet, 0)));
    }
}
