//! Named graphs with documented labelings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("{kind}: parameter {value} out of range ({expected})")]
    OutOfRange {
        kind: &'static str,
        value: usize,
        expected: &'static str,
    },
    #[error("unknown graph kind `{0}`")]
    UnknownKind(String),
    #[error("{0}")]
    BadParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    /// `0 - 1 - ... - (n-1) - 0`.
    Cycle(usize),
    /// `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// Cycle `0..t`, pendant `t + i` on cycle vertex `i`.
    Sun(usize),
    /// The sun with the pendant of cycle vertex `t - 1` removed; pendant `t + i` on `i < t - 1`.
    Sunspot(usize),
    /// Triangle `0, 1, 2` with pendants `3, 4, 5`.
    Net,
    /// Triangle `0, 1, 2` with pendants `3` on `0` and `4` on `1`.
    Bull,
    Complete(usize),
    /// Sides `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Outer cycle `0..5`, spokes `i - (i+5)`, inner pentagram `5+i - 5+(i+2)%5`.
    Petersen,
    /// The Mycielskian of `Cycle(5)`.
    Groetzsch,
    /// See [`mycielskian`].
    Mycielskian(Box<GraphKind>),
    /// Pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order; `(i, j) ~ (j, k)`.
    Shift(usize),
    /// Root `0`, spokes `1..=k`, hole `k+1..=3k`, tail `3k+1` on the root and an
    /// extra vertex `3k+2`; see [`spoked_hole`].
    SpokedHole(usize),
    /// See [`quartic_girth_five`].
    QuarticGirthFive,
    /// `d`-cube on bit strings `0..2^d`, adjacent when differing in one bit.
    Hypercube(usize),
}

fn at_least(
    kind: &'static str,
    value: usize,
    min: usize,
    expected: &'static str,
) -> Result<(), GenerateError> {
    if value < min {
        return Err(GenerateError::OutOfRange {
            kind,
            value,
            expected,
        });
    }
    Ok(())
}

impl GraphKind {
    pub fn build(&self) -> Result<Graph, GenerateError> {
        match self {
            GraphKind::Cycle(n) => cycle(*n),
            GraphKind::Path(n) => path(*n),
            GraphKind::Sun(t) => sun(*t),
            GraphKind::Sunspot(t) => sunspot(*t),
            GraphKind::Net => Ok(net()),
            GraphKind::Bull => Ok(bull()),
            GraphKind::Complete(n) => complete(*n),
            GraphKind::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            GraphKind::Petersen => Ok(petersen()),
            GraphKind::Groetzsch => Ok(groetzsch()),
            GraphKind::Mycielskian(base) => Ok(mycielskian(&base.build()?)?),
            GraphKind::Shift(n) => shift_graph(*n),
            GraphKind::Hypercube(d) => hypercube(*d),
            GraphKind::SpokedHole(k) => spoked_hole(*k),
            GraphKind::QuarticGirthFive => Ok(quartic_girth_five()),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Cycle(n) => write!(f, "cycle {n}"),
            GraphKind::Path(n) => write!(f, "path {n}"),
            GraphKind::Sun(t) => write!(f, "t-sun {t}"),
            GraphKind::Sunspot(t) => write!(f, "t-sunspot {t}"),
            GraphKind::Net => write!(f, "net"),
            GraphKind::Bull => write!(f, "bull"),
            GraphKind::Complete(n) => write!(f, "complete {n}"),
            GraphKind::CompleteBipartite(a, b) => write!(f, "complete-bipartite {a} {b}"),
            GraphKind::Petersen => write!(f, "petersen"),
            GraphKind::Groetzsch => write!(f, "groetzsch"),
            GraphKind::Mycielskian(base) => write!(f, "mycielskian {base}"),
            GraphKind::Shift(n) => write!(f, "shift {n}"),
            GraphKind::Hypercube(d) => write!(f, "hypercube {d}"),
            GraphKind::SpokedHole(k) => write!(f, "spoked-hole {k}"),
            GraphKind::QuarticGirthFive => write!(f, "quartic-girth5"),
        }
    }
}

/// Parses the whitespace-separated form printed by `Display`, e.g. `t-sun 6` or `mycielskian groetzsch`.
impl FromStr for GraphKind {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let words: Vec<&str> = s.split_whitespace().collect();
        parse_words(&words)
    }
}

pub fn parse_words(words: &[&str]) -> Result<GraphKind, GenerateError> {
    let (&name, rest) = words
        .split_first()
        .ok_or_else(|| GenerateError::BadParams("missing graph kind".into()))?;
    let nums = |count: usize| -> Result<Vec<usize>, GenerateError> {
        if rest.len() != count {
            return Err(GenerateError::BadParams(format!(
                "{name} takes {count} integer parameter(s), got {}",
                rest.len()
            )));
        }
        rest.iter()
            .map(|w| {
                w.parse::<usize>().map_err(|_| {
                    GenerateError::BadParams(format!("{name}: `{w}` is not an integer"))
                })
            })
            .collect()
    };
    let kind = match name {
        "cycle" => GraphKind::Cycle(nums(1)?[0]),
        "path" => GraphKind::Path(nums(1)?[0]),
        "t-sun" | "sun" => GraphKind::Sun(nums(1)?[0]),
        "t-sunspot" | "sunspot" => GraphKind::Sunspot(nums(1)?[0]),
        "net" => {
            nums(0)?;
            GraphKind::Net
        }
        "bull" => {
            nums(0)?;
            GraphKind::Bull
        }
        "complete" => GraphKind::Complete(nums(1)?[0]),
        "complete-bipartite" => {
            let v = nums(2)?;
            GraphKind::CompleteBipartite(v[0], v[1])
        }
        "petersen" => {
            nums(0)?;
            GraphKind::Petersen
        }
        "groetzsch" | "grotzsch" => {
            nums(0)?;
            GraphKind::Groetzsch
        }
        "mycielskian" => GraphKind::Mycielskian(Box::new(parse_words(rest)?)),
        "shift" | "shift-graph" => GraphKind::Shift(nums(1)?[0]),
        "hypercube" => GraphKind::Hypercube(nums(1)?[0]),
        "spoked-hole" => GraphKind::SpokedHole(nums(1)?[0]),
        "quartic-girth5" => {
            nums(0)?;
            GraphKind::QuarticGirthFive
        }
        other => return Err(GenerateError::UnknownKind(other.to_string())),
    };
    Ok(kind)
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    at_least("cycle", n, 3, "n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn path(n: usize) -> Result<Graph, GenerateError> {
    at_least("path", n, 1, "n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn sun(t: usize) -> Result<Graph, GenerateError> {
    at_least("t-sun", t, 4, "t >= 4")?;
    let mut edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    edges.extend((0..t).map(|i| (i, t + i)));
    Ok(Graph::from_edges(2 * t, &edges)?)
}

pub fn sunspot(t: usize) -> Result<Graph, GenerateError> {
    at_least("t-sunspot", t, 4, "t >= 4")?;
    let mut edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    edges.extend((0..t - 1).map(|i| (i, t + i)));
    Ok(Graph::from_edges(2 * t - 1, &edges)?)
}

pub fn net() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).expect("static")
}

pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).expect("static")
}

pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_edges(a + b, &edges)?)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static")
}

/// Vertices `0..n` keep their edges; `n + i` is the shadow of `i`, adjacent to
/// the neighbours of `i`; `2n` is the apex adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_edges(2 * n + 1, &edges)
}

pub fn groetzsch() -> Graph {
    mycielskian(&cycle(5).expect("static")).expect("static")
}

/// Vertex index of the pair `(i, j)` (1-based, `i < j`) in the shift graph on `n`.
pub fn shift_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // Pairs starting with a < i come first: sum over a of (n - a).
    (1..i).map(|a| n - a).sum::<usize>() + (j - i - 1)
}

/// The pairs `(i, j)` labelling the shift graph's vertices, in vertex order.
pub fn shift_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

pub fn shift_graph(n: usize) -> Result<Graph, GenerateError> {
    at_least("shift", n, 2, "n >= 2")?;
    let pairs = shift_pairs(n);
    let mut edges = Vec::new();
    for &(i, j) in &pairs {
        for k in j + 1..=n {
            edges.push((shift_index(n, i, j), shift_index(n, j, k)));
        }
    }
    Ok(Graph::from_edges(pairs.len(), &edges)?)
}

pub fn hypercube(d: usize) -> Result<Graph, GenerateError> {
    if d > 8 {
        return Err(GenerateError::OutOfRange {
            kind: "hypercube",
            value: d,
            expected: "d <= 8",
        });
    }
    let n = 1 << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u: usize| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|(u, v)| u < v)
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// A `2k`-hole `h_i = k + 1 + i` whose vertices all sit at distance 2 from the
/// root `0`: spoke `j + 1` is adjacent to the root, `h_j` and `h_{j+k}`. Vertex
/// `3k + 1` hangs off the root, so BFS from it puts the hole in level 3, and
/// vertex `3k + 2` joins spoke `k` to `h_1` and `h_{k+2}` inside that level.
/// Girth 5, hence triangle-free and 4-sunspot-free.
pub fn spoked_hole(k: usize) -> Result<Graph, GenerateError> {
    at_least("spoked-hole", k, 5, "k >= 5")?;
    let h = |i: usize| k + 1 + i % (2 * k);
    let mut edges: Vec<_> = (1..=k).map(|s| (0, s)).collect();
    edges.extend((0..2 * k).map(|i| (h(i), h(i + 1))));
    for j in 0..k {
        edges.push((j + 1, h(j)));
        edges.push((j + 1, h(j + k)));
    }
    let (tail, extra) = (3 * k + 1, 3 * k + 2);
    edges.extend([(0, tail), (k, extra), (h(1), extra), (h(k + 2), extra)]);
    Ok(Graph::from_edges(3 * k + 3, &edges)?)
}

/// A 4-regular 4-chromatic graph of girth 5 on 21 vertices with a `Z_7`
/// symmetry: `a_i = i`, `b_i = 7 + i`, `c_i = 14 + i`, edges `a_i a_{i+1}`,
/// `b_i b_{i+2}`, `a_i c_i`, `a_i c_{i+3}`, `b_i c_i`, `b_i c_{i+1}`.
pub fn quartic_girth_five() -> Graph {
    let (a, b, c) = (
        |i: usize| i % 7,
        |i: usize| 7 + i % 7,
        |i: usize| 14 + i % 7,
    );
    let edges: Vec<_> = (0..7)
        .flat_map(|i| {
            [
                (a(i), a(i + 1)),
                (b(i), b(i + 2)),
                (a(i), c(i)),
                (a(i), c(i + 3)),
                (b(i), c(i)),
                (b(i), c(i + 1)),
            ]
        })
        .collect();
    Graph::from_edges(21, &edges).expect("static")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{chi, is_triangle_free};
    use crate::structures::{find_4_sunspot, SunspotWitness};

    #[test]
    fn sizes() {
        let s4 = sun(4).unwrap();
        assert_eq!((s4.n(), s4.edge_count()), (8, 8));
        let sp = sunspot(4).unwrap();
        assert_eq!((sp.n(), sp.edge_count()), (7, 7));
        assert_eq!(
            find_4_sunspot(&sp),
            Some(SunspotWitness {
                x: [0, 1, 2, 3],
                y: [4, 5, 6]
            })
        );
        assert_eq!(groetzsch().n(), 11);
        assert_eq!(groetzsch().edge_count(), 20);
        assert_eq!(shift_graph(4).unwrap().n(), 6);
        assert_eq!(hypercube(3).unwrap().edge_count(), 12);
    }

    #[test]
    fn shift_labels() {
        let n = 6;
        for (idx, (i, j)) in shift_pairs(n).into_iter().enumerate() {
            assert_eq!(shift_index(n, i, j), idx);
        }
        let g = shift_graph(8).unwrap();
        assert!(is_triangle_free(&g));
        assert_eq!(chi(&g), 3);
    }

    #[test]
    fn groetzsch_is_four_chromatic() {
        let g = groetzsch();
        assert!(is_triangle_free(&g));
        assert_eq!(chi(&g), 4);
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "t-sun 6",
            "mycielskian groetzsch",
            "complete-bipartite 2 3",
            "shift 5",
            "net",
            "spoked-hole 5",
        ] {
            let kind: GraphKind = text.parse().unwrap();
            assert_eq!(kind.to_string(), text);
        }
        assert!(matches!(
            "cycle".parse::<GraphKind>(),
            Err(GenerateError::BadParams(_))
        ));
        assert!(matches!(
            "blob 3".parse::<GraphKind>(),
            Err(GenerateError::UnknownKind(_))
        ));
        assert!(matches!(
            "t-sun 3".parse::<GraphKind>().unwrap().build(),
            Err(GenerateError::OutOfRange { .. })
        ));
    }

    #[test]
    fn spoked_hole_levels() {
        for k in 5..=8 {
            let g = spoked_hole(k).unwrap();
            assert!(is_triangle_free(&g));
            assert_eq!(find_4_sunspot(&g), None);
            let dist = g.bfs_levels(3 * k + 1);
            let third: Vec<usize> = (0..g.n())
                .filter(|&v| dist[v].finite() == Some(3))
                .collect();
            let mut expected: Vec<usize> = (k + 1..=3 * k).collect();
            expected.push(3 * k + 2);
            assert_eq!(third, expected);
        }
        assert!(spoked_hole(4).is_err());
    }

    #[test]
    fn quartic_girth_five_shape() {
        let g = quartic_girth_five();
        assert_eq!(g.edge_count(), 42);
        assert!((0..21).all(|v| g.degree(v) == 4));
        assert!(is_triangle_free(&g));
        // No 4-cycle: adjacent or not, two vertices share at most one neighbour.
        assert!((0..21).all(|u| (u + 1..21).all(|v| (g.neighbors(u) & g.neighbors(v)).len() <= 1)));
        assert_eq!(chi(&g), 4);
    }
}
