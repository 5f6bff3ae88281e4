//! Brute-force reference implementations. Deliberately naive: bitmask
//! subset scans over plain adjacency matrices, no shared code with the library.
#![allow(dead_code)]

use suntrap_core::Graph;

pub struct Adj {
    pub n: usize,
    m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let mut m = vec![vec![false; n]; n];
        for u in 0..n {
            for v in 0..n {
                m[u][v] = g.has_edge(u, v);
            }
        }
        Adj { n, m }
    }

    pub fn e(&self, u: usize, v: usize) -> bool {
        self.m[u][v]
    }

    fn members(mask: u64) -> Vec<usize> {
        (0..64).filter(|&i| mask >> i & 1 == 1).collect()
    }

    fn deg_in(&self, v: usize, vs: &[usize]) -> usize {
        vs.iter().filter(|&&u| self.e(u, v)).count()
    }

    /// `vs` induces a single cycle through all of them.
    pub fn is_induced_cycle(&self, vs: &[usize]) -> bool {
        if vs.len() < 3 || vs.iter().any(|&v| self.deg_in(v, vs) != 2) {
            return false;
        }
        // connected?
        let mut seen = vec![vs[0]];
        let mut i = 0;
        while i < seen.len() {
            let v = seen[i];
            for &u in vs {
                if self.e(u, v) && !seen.contains(&u) {
                    seen.push(u);
                }
            }
            i += 1;
        }
        seen.len() == vs.len()
    }

    /// `vs` induces a `k`-cycle with `p` pendants on distinct cycle vertices.
    pub fn is_cycle_with_pendants(&self, vs: &[usize], k: usize, p: usize) -> bool {
        if vs.len() != k + p {
            return false;
        }
        let core: Vec<usize> = vs
            .iter()
            .copied()
            .filter(|&v| self.deg_in(v, vs) >= 2)
            .collect();
        let leaves: Vec<usize> = vs
            .iter()
            .copied()
            .filter(|&v| self.deg_in(v, vs) == 1)
            .collect();
        if core.len() != k || leaves.len() != p || !self.is_induced_cycle(&core) {
            return false;
        }
        let mut anchors: Vec<usize> = leaves
            .iter()
            .map(|&x| *core.iter().find(|&&c| self.e(c, x)).unwrap_or(&usize::MAX))
            .collect();
        anchors.sort();
        anchors.dedup();
        anchors.len() == p && !anchors.contains(&usize::MAX)
    }

    fn any_subset(&self, size: usize, f: impl Fn(&[usize]) -> bool) -> bool {
        assert!(self.n <= 24);
        (0u64..1 << self.n)
            .filter(|m| m.count_ones() as usize == size)
            .any(|m| f(&Self::members(m)))
    }

    pub fn has_sun(&self, min_t: usize) -> bool {
        (min_t.max(3)..=self.n / 2)
            .any(|t| self.any_subset(2 * t, |vs| self.is_cycle_with_pendants(vs, t, t)))
    }

    pub fn has_4_sunspot(&self) -> bool {
        self.any_subset(7, |vs| self.is_cycle_with_pendants(vs, 4, 3))
    }

    pub fn has_net(&self) -> bool {
        self.any_subset(6, |vs| self.is_cycle_with_pendants(vs, 3, 3))
    }

    pub fn has_bull(&self) -> bool {
        self.any_subset(5, |vs| self.is_cycle_with_pendants(vs, 3, 2))
    }

    /// Vertex sets of all holes, as sorted vectors.
    pub fn hole_sets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u64..1 << self.n)
            .filter(|m| m.count_ones() >= 4)
            .map(Self::members)
            .filter(|vs| self.is_induced_cycle(vs))
            .collect();
        out.sort();
        out
    }

    fn is_stable_mask(&self, mask: u64) -> bool {
        let vs = Self::members(mask);
        vs.iter().all(|&u| vs.iter().all(|&v| !self.e(u, v)))
    }

    /// Minimum number of stable sets covering `mask`, by subset DP.
    pub fn chi_of(&self, mask: u64) -> usize {
        let full = mask as usize;
        let mut stable = vec![false; full + 1];
        let mut best = vec![usize::MAX; full + 1];
        best[0] = 0;
        let mut sub = full;
        loop {
            stable[sub] = self.is_stable_mask(sub as u64);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
        // iterate submasks of `full` in increasing order
        let mut subs: Vec<usize> = Vec::new();
        let mut s = full;
        loop {
            subs.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & full;
        }
        subs.reverse();
        for &s in &subs[1..] {
            let low = s & s.wrapping_neg();
            let mut t = s;
            while t > 0 {
                if t & low != 0 && stable[t] && best[s ^ t] != usize::MAX {
                    best[s] = best[s].min(best[s ^ t] + 1);
                }
                t = (t - 1) & s;
            }
        }
        best[full]
    }

    pub fn chi(&self) -> usize {
        self.chi_of((1u64 << self.n) - 1)
    }

    pub fn omega(&self) -> usize {
        (0u64..1 << self.n)
            .filter(|&m| {
                let vs = Self::members(m);
                vs.iter()
                    .enumerate()
                    .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.e(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_liberal(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                x == y || self.e(x, y) || (0..self.n).any(|z| self.e(x, z) && !self.e(y, z))
            })
        })
    }

    pub fn is_non_degenerate(&self) -> bool {
        let chi = self.chi();
        (0..self.n).all(|v| self.deg_in(v, &(0..self.n).collect::<Vec<_>>()) + 1 >= chi)
    }

    pub fn has_triangle(&self) -> bool {
        self.any_subset(3, |vs| {
            self.e(vs[0], vs[1]) && self.e(vs[1], vs[2]) && self.e(vs[0], vs[2])
        })
    }
}

/// Lexicographically least upper-triangle adjacency string over all relabelings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let a = Adj::of(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |p| {
        let s: Vec<bool> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| a.e(p[i], p[j]))
            .collect();
        if best.as_ref().map_or(true, |b| s < *b) {
            best = Some(s);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Every graph on `n` vertices as an edge mask over the upper triangle.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
