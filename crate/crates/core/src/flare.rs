//! Flares on a hole: partial assignments of one outside neighbour per hole
//! vertex, their safety predicate, the common-neighbour bound checker, and the
//! greedy construction of a full safe flare.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{find_triangle, liberality_violation_within};
use crate::format::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::paths::Hole;
use crate::structures::{find_4_sunspot_within, flap_violation_within};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlareError {
    #[error("assignment has {got} entries for a hole of length {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("{x} assigned to hole vertex {h} is not an outside neighbour of it")]
    NotOutsideNeighbor { h: usize, x: usize },
    #[error("hole of length {0} is shorter than 6")]
    HoleTooShort(usize),
    #[error("invalid hole: {0}")]
    InvalidHole(String),
    #[error("radius d must be at least 1")]
    ZeroRadius,
    #[error("no eligible neighbour for hole vertex {}", .0.h)]
    Stuck(Box<FlareFailure>),
}

/// `assign[i]` is the vertex `x_h` for `h = hole[i]`, or `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FlareRepr", try_from = "FlareRepr")]
pub struct Flare {
    pub hole: Hole,
    pub assign: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct FlareRepr {
    hole: Hole,
    assign: BTreeMap<usize, Option<usize>>,
}

impl From<Flare> for FlareRepr {
    fn from(f: Flare) -> Self {
        let assign = f.hole.vertices().iter().copied().zip(f.assign).collect();
        FlareRepr {
            hole: f.hole,
            assign,
        }
    }
}

impl TryFrom<FlareRepr> for Flare {
    type Error = String;

    fn try_from(r: FlareRepr) -> Result<Self, String> {
        if r.assign.len() != r.hole.length() {
            return Err("assignment keys must be exactly the hole vertices".into());
        }
        let assign = r
            .hole
            .vertices()
            .iter()
            .map(|h| {
                r.assign
                    .get(h)
                    .copied()
                    .ok_or(format!("hole vertex {h} missing"))
            })
            .collect::<Result<_, _>>()?;
        Ok(Flare {
            hole: r.hole,
            assign,
        })
    }
}

impl Flare {
    pub fn empty(hole: Hole) -> Flare {
        let assign = vec![None; hole.length()];
        Flare { hole, assign }
    }

    pub fn new(g: &Graph, hole: Hole, assign: Vec<Option<usize>>) -> Result<Flare, FlareError> {
        let f = Flare { hole, assign };
        f.validate(g)?;
        Ok(f)
    }

    /// Each assigned vertex is a neighbour of its hole vertex off the hole.
    pub fn validate(&self, g: &Graph) -> Result<(), FlareError> {
        if self.assign.len() != self.hole.length() {
            return Err(FlareError::WrongLength {
                expected: self.hole.length(),
                got: self.assign.len(),
            });
        }
        for (i, x) in self.assign.iter().enumerate() {
            if let Some(x) = *x {
                let h = self.hole.vertices()[i];
                if x >= g.n() || !g.has_edge(h, x) || self.hole.contains(x) {
                    return Err(FlareError::NotOutsideNeighbor { h, x });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.assign.iter().filter(|x| x.is_some()).count()
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.hole.length()
    }

    /// `Phi(h_i)`.
    pub fn image(&self, i: usize) -> VertexSet {
        self.assign[i].map(VertexSet::singleton).unwrap_or_default()
    }

    /// `Phi[h_i] = Phi(h_i) + h_i`.
    pub fn closed_image(&self, i: usize) -> VertexSet {
        self.image(i).with(self.hole.vertices()[i])
    }

    /// The assigned vertices, by hole position (panics unless full).
    pub fn pendants(&self) -> Vec<usize> {
        self.assign
            .iter()
            .map(|x| x.expect("flare is full"))
            .collect()
    }
}

/// First pair `(h, h')` of distinct hole vertices within cycle distance `d`
/// for which `Phi(h)` and `Phi[h']` are not anticomplete.
pub fn d_safety_violation(g: &Graph, flare: &Flare, d: usize) -> Option<(usize, usize)> {
    let l = flare.hole.length();
    let hv = flare.hole.vertices();
    for i in 0..l {
        let image = flare.image(i);
        if image.is_empty() {
            continue;
        }
        for j in (0..l).filter(|&j| j != i && flare.hole.cycle_distance(i, j) <= d) {
            if !g.is_anticomplete(image, flare.closed_image(j)) {
                return Some((hv[i], hv[j]));
            }
        }
    }
    None
}

pub fn is_d_safe(g: &Graph, flare: &Flare, d: usize) -> bool {
    d_safety_violation(g, flare, d).is_none()
}

/// Distinct `h, h'` with `x_h` not anticomplete to `{h', x_h'}`, for a full flare.
pub fn pendant_anticompleteness_violation(g: &Graph, flare: &Flare) -> Option<(usize, usize)> {
    d_safety_violation(g, flare, flare.hole.length())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonNeighborViolation {
    pub h: usize,
    pub h_prime: usize,
    pub x: usize,
    pub common: VertexSet,
}

/// Hypotheses under which common-neighbour bounds and the greedy construction are guaranteed.
pub fn flare_hypotheses_within(g: &Graph, allowed: VertexSet, hole: &Hole) -> Result<(), String> {
    let sub = g.induced_subgraph(allowed);
    if find_triangle(&sub.graph).is_some() {
        return Err("graph has a triangle".into());
    }
    if hole.length() < 6 {
        return Err("hole shorter than 6".into());
    }
    if !hole.vertex_set().is_subset(&allowed) || hole.validate(g).is_err() {
        return Err("not a hole of the graph".into());
    }
    if find_4_sunspot_within(g, allowed).is_some() {
        return Err("graph has a 4-sunspot".into());
    }
    if liberality_violation_within(g, allowed).is_some() {
        return Err("graph is not liberal".into());
    }
    if flap_violation_within(g, allowed).is_some() {
        return Err("graph is not flapless".into());
    }
    Ok(())
}

/// Checks, for all distinct `h, h'` and `x` in `Phi[h]`: adjacent `h, h'`
/// give `x, h'` no common neighbour off the hole; non-adjacent give at most one.
/// `hypotheses` is the outcome of [`flare_hypotheses_within`] for the graph.
pub fn common_neighbor_bounds(
    g: &Graph,
    flare: &Flare,
    hypotheses: &Result<(), String>,
) -> Verdict<CommonNeighborViolation> {
    if let Err(reason) = hypotheses {
        return Verdict::NotApplicable(reason.clone());
    }
    if flare.validate(g).is_err() {
        return Verdict::not_applicable("not a flare");
    }
    let hole = &flare.hole;
    let off_hole = g.vertices() - hole.vertex_set();
    let hv = hole.vertices();
    for i in 0..hv.len() {
        for x in flare.closed_image(i) {
            for (j, &hp) in hv.iter().enumerate().filter(|&(j, _)| j != i) {
                let common = g.neighbors(x) & g.neighbors(hp) & off_hole;
                let limit = if hole.cycle_distance(i, j) == 1 { 0 } else { 1 };
                if common.len() > limit {
                    return Verdict::Violated(CommonNeighborViolation {
                        h: hv[i],
                        h_prime: hp,
                        x,
                        common,
                    });
                }
            }
        }
    }
    Verdict::Holds
}

/// The bounds for every `x` that any flare could put in `Phi[h]`, i.e. `h`
/// itself and each neighbour of `h` off the hole. Returns the number of
/// `(h, h', x)` triples checked alongside the verdict.
pub fn common_neighbor_bounds_all_flares(
    g: &Graph,
    hole: &Hole,
    hypotheses: &Result<(), String>,
) -> (usize, Verdict<CommonNeighborViolation>) {
    if let Err(reason) = hypotheses {
        return (0, Verdict::NotApplicable(reason.clone()));
    }
    let off_hole = g.vertices() - hole.vertex_set();
    let hv = hole.vertices();
    let mut checked = 0;
    for (i, &h) in hv.iter().enumerate() {
        for x in (g.neighbors(h) & off_hole).with(h) {
            for (j, &hp) in hv.iter().enumerate().filter(|&(j, _)| j != i) {
                checked += 1;
                let common = g.neighbors(x) & g.neighbors(hp) & off_hole;
                let limit = if hole.cycle_distance(i, j) == 1 { 0 } else { 1 };
                if common.len() > limit {
                    return (
                        checked,
                        Verdict::Violated(CommonNeighborViolation {
                            h,
                            h_prime: hp,
                            x,
                            common,
                        }),
                    );
                }
            }
        }
    }
    (checked, Verdict::Holds)
}

pub fn check_common_neighbor_bounds(
    g: &Graph,
    hole: &Hole,
    flare: &Flare,
) -> Verdict<CommonNeighborViolation> {
    let hyp = flare_hypotheses_within(g, g.vertices(), hole);
    common_neighbor_bounds(g, flare, &hyp)
}

/// One augmentation step: hole vertex `h`, its `d`-ball `D` on the hole, `U = union of Phi[u]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    pub h: usize,
    pub ball: VertexSet,
    pub blocking: VertexSet,
    pub chosen: usize,
    pub order_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlareConstruction {
    pub flare: Flare,
    pub steps: Vec<GreedyStep>,
}

/// Where the greedy got stuck, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlareFailure {
    pub graph6: String,
    pub allowed: VertexSet,
    pub h: usize,
    pub blocking: VertexSet,
    pub partial: Flare,
    /// `Ok` when every hypothesis of the existence theorem held, making this a theorem violation.
    pub hypotheses: Result<(), String>,
}

/// Minimum-degree hypothesis `4d - 1` together with [`flare_hypotheses_within`].
pub fn full_flare_hypotheses_within(
    g: &Graph,
    allowed: VertexSet,
    hole: &Hole,
    d: usize,
) -> Result<(), String> {
    let need = (4 * d).saturating_sub(1);
    if let Some(v) = allowed
        .iter()
        .find(|&v| g.neighbors_in(v, allowed).len() < need)
    {
        return Err(format!("vertex {v} has degree below 4d - 1 = {need}"));
    }
    flare_hypotheses_within(g, allowed, hole)
}

/// Greedy full `d`-safe flare on `hole` inside `G[allowed]`: hole vertices in
/// cycle order from `h_1`, each given the least-labelled neighbour off the
/// hole that is anticomplete to `U`.
pub fn construct_full_flare_within(
    g: &Graph,
    allowed: VertexSet,
    hole: &Hole,
    d: usize,
) -> Result<FlareConstruction, FlareError> {
    if d == 0 {
        return Err(FlareError::ZeroRadius);
    }
    if hole.length() < 6 {
        return Err(FlareError::HoleTooShort(hole.length()));
    }
    hole.validate(g)
        .map_err(|e| FlareError::InvalidHole(e.to_string()))?;
    if !hole.vertex_set().is_subset(&allowed) {
        return Err(FlareError::InvalidHole(
            "hole leaves the allowed set".into(),
        ));
    }
    let l = hole.length();
    let hv = hole.vertices();
    let off_hole = allowed - hole.vertex_set();
    let mut flare = Flare::empty(hole.clone());
    let mut steps = Vec::with_capacity(l);
    for i in 0..l {
        let ball: VertexSet = (0..l)
            .filter(|&j| j != i && hole.cycle_distance(i, j) <= d)
            .map(|j| hv[j])
            .collect();
        let blocking = (0..l)
            .filter(|&j| j != i && hole.cycle_distance(i, j) <= d)
            .fold(VertexSet::new(), |acc, j| acc | flare.closed_image(j));
        debug_assert!(ball.len() <= 2 * d && blocking.len() <= 4 * d);
        let eligible = (g.neighbors(hv[i]) & off_hole) - blocking - g.neighborhood_of_set(blocking);
        let Some(x) = eligible.first() else {
            return Err(FlareError::Stuck(Box::new(FlareFailure {
                graph6: to_graph6(g),
                allowed,
                h: hv[i],
                blocking,
                partial: flare,
                hypotheses: full_flare_hypotheses_within(g, allowed, hole, d),
            })));
        };
        flare.assign[i] = Some(x);
        steps.push(GreedyStep {
            h: hv[i],
            ball,
            blocking,
            chosen: x,
            order_after: flare.order(),
        });
    }
    flare.validate(g)?;
    assert!(flare.is_full(), "greedy leaves no vertex unassigned");
    assert!(
        is_d_safe(g, &flare, d),
        "greedy output failed d-safety re-verification"
    );
    Ok(FlareConstruction { flare, steps })
}

pub fn construct_full_flare(
    g: &Graph,
    hole: &Hole,
    d: usize,
) -> Result<FlareConstruction, FlareError> {
    construct_full_flare_within(g, g.vertices(), hole, d)
}
