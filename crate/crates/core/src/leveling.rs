//! Levelings, the deep-leveling construction, the flap-theorem pipeline, and
//! checkers for the sector and flap-endpoint lemmas.
//!
//! A leveling `(L_0, ..., L_r)` is a tuple of disjoint non-empty vertex sets
//! where every vertex of `L_i` (`i >= 1`) has a neighbour in `L_{i-1}` and
//! every edge between distinct levels joins consecutive ones. Edges inside a
//! single level are allowed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{
    chi_within, extract_critical_within, find_triangle, is_k_colorable, is_k_colorable_within,
    is_liberal_within, liberality_violation_within, non_degeneracy_violation_within,
    verify_critical, ColoringError, CriticalCertificate,
};
use crate::format::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::paths::Hole;
use crate::structures::{
    all_flaps_within, find_4_sunspot, flap_violation_within, x_sectors, FlapWitness, SunspotWitness,
};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leveling {
    pub levels: Vec<VertexSet>,
}

/// The first leveling axiom a candidate breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
pub enum LevelingViolation {
    #[error("no levels")]
    NoLevels,
    #[error("level {0} is empty")]
    EmptyLevel(usize),
    #[error("vertex {vertex} lies in levels {first} and {second}")]
    Overlap {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("vertex {vertex} outside the graph")]
    OutOfRange { vertex: usize },
    #[error("vertex {vertex} of level {level} has no neighbour in level {}", level - 1)]
    NoBackNeighbor { level: usize, vertex: usize },
    #[error("edge {u}-{v} joins levels {i} and {j}")]
    SkipEdge {
        i: usize,
        j: usize,
        u: usize,
        v: usize,
    },
}

impl Leveling {
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn top(&self) -> VertexSet {
        *self
            .levels
            .last()
            .expect("a leveling has at least one level")
    }

    pub fn level(&self, i: usize) -> VertexSet {
        self.levels[i]
    }

    pub fn union(&self) -> VertexSet {
        self.levels.iter().fold(VertexSet::new(), |a, &b| a | b)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), LevelingViolation> {
        validate_leveling(g, &self.levels)
    }
}

pub fn validate_leveling(g: &Graph, levels: &[VertexSet]) -> Result<(), LevelingViolation> {
    if levels.is_empty() {
        return Err(LevelingViolation::NoLevels);
    }
    let mut seen = VertexSet::new();
    let mut owner = vec![usize::MAX; g.n()];
    for (i, level) in levels.iter().enumerate() {
        if level.is_empty() {
            return Err(LevelingViolation::EmptyLevel(i));
        }
        if let Some(vertex) = (*level - g.vertices()).first() {
            return Err(LevelingViolation::OutOfRange { vertex });
        }
        if let Some(vertex) = (*level & seen).first() {
            return Err(LevelingViolation::Overlap {
                vertex,
                first: owner[vertex],
                second: i,
            });
        }
        for v in level.iter() {
            owner[v] = i;
        }
        seen = seen | *level;
    }
    for i in 1..levels.len() {
        if let Some(vertex) = levels[i]
            .iter()
            .find(|&v| !g.neighbors(v).intersects(&levels[i - 1]))
        {
            return Err(LevelingViolation::NoBackNeighbor { level: i, vertex });
        }
    }
    for (i, level) in levels.iter().enumerate() {
        for u in level.iter() {
            for v in g.neighbors(u) & seen {
                let j = owner[v];
                if j > i + 1 {
                    return Err(LevelingViolation::SkipEdge { i, j, u, v });
                }
            }
        }
    }
    Ok(())
}

/// BFS layers from `root` as a leveling, truncated to depth `r` when given.
pub fn bfs_leveling(g: &Graph, root: usize, r: Option<usize>) -> Leveling {
    let mut levels = g.bfs_layers_within(root, g.vertices());
    if let Some(r) = r {
        levels.truncate(r + 1);
    }
    Leveling { levels }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevelingError {
    #[error("graph has a triangle {0:?}")]
    Triangle((usize, usize, usize)),
    #[error("graph has a 4-sunspot {0:?}")]
    Sunspot(SunspotWitness),
    #[error("chromatic number {chi} does not exceed 2c + 1 = {bound}")]
    ChiTooSmall { chi: usize, bound: usize },
    #[error("threshold c must be at least 1")]
    ZeroThreshold,
    #[error("construction failed its own postcondition: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("flaplessness failed on the constructed subgraph")]
    TheoremViolation(Box<FlapDiagnostic>),
}

/// Output of the deep-leveling construction, with the choices it made.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeepLeveling {
    pub leveling: Leveling,
    pub critical: CriticalCertificate,
    pub component: VertexSet,
    pub x0: usize,
    pub x1: usize,
    /// The piece of `K - N[x0]` the BFS runs in.
    pub piece: VertexSet,
    pub r1: usize,
}

/// Component of `G[set]` with maximum chromatic number; ties go to the least minimum label.
fn max_chi_component(g: &Graph, set: VertexSet) -> Option<(VertexSet, usize)> {
    let mut best: Option<(VertexSet, usize)> = None;
    for comp in g.components_within(set) {
        let chi = chi_within(g, comp);
        if best.map_or(true, |(_, b)| chi > b) {
            best = Some((comp, chi));
        }
    }
    best
}

fn check_chi_above(g: &Graph, c: usize) -> Result<(), LevelingError> {
    if c == 0 {
        return Err(LevelingError::ZeroThreshold);
    }
    let bound = 2 * c + 1;
    if is_k_colorable(g, bound).is_some() {
        return Err(LevelingError::ChiTooSmall {
            chi: chi_within(g, g.vertices()),
            bound,
        });
    }
    Ok(())
}

/// An `r`-leveling with `r >= 3` whose top level is a critical set of
/// chromatic number `c + 1`, for a triangle-free `G` with `chi(G) > 2c + 1`.
pub fn build_deep_leveling(g: &Graph, c: usize) -> Result<DeepLeveling, LevelingError> {
    if let Some(t) = find_triangle(g) {
        return Err(LevelingError::Triangle(t));
    }
    check_chi_above(g, c)?;
    let post = |m: &str| LevelingError::Postcondition(m.to_string());

    let (component, _) = max_chi_component(g, g.vertices()).ok_or_else(|| post("empty graph"))?;
    let x0 = component.first().expect("components are nonempty");
    let nbrs = g.neighbors_in(x0, component);
    let rest = component - nbrs - VertexSet::singleton(x0);
    let (piece, piece_chi) =
        max_chi_component(g, rest).ok_or_else(|| post("K - N[x0] is empty"))?;
    if piece_chi <= 2 * c {
        return Err(post("the piece K1 has chromatic number at most 2c"));
    }
    let x1 = nbrs
        .iter()
        .find(|&v| g.neighbors(v).intersects(&piece))
        .ok_or_else(|| post("no neighbour of x0 attaches to K1"))?;

    // layers[0] = {x1}; layers[r] = M_r.
    let layers = g.bfs_layers_within(x1, piece.with(x1));
    let r1 = (2..layers.len())
        .find(|&r| is_k_colorable_within(g, layers[r], c).is_none())
        .ok_or_else(|| post("no BFS layer of K1 has chromatic number above c"))?;
    let critical = extract_critical_within(g, layers[r1], c)?;

    let mut levels = vec![VertexSet::singleton(x0), VertexSet::singleton(x1)];
    levels.extend(layers[1..r1].iter().copied());
    levels.push(critical.set);
    let leveling = Leveling { levels };

    leveling
        .validate(g)
        .map_err(|e| post(&format!("leveling axiom: {e}")))?;
    if leveling.depth() < 3 {
        return Err(post("depth below 3"));
    }
    verify_critical(g, &critical)?;
    Ok(DeepLeveling {
        leveling,
        critical,
        component,
        x0,
        x1,
        piece,
        r1,
    })
}

/// A flaplessness failure on the pipeline output: the graph, the leveling, and the offending hole and flap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlapDiagnostic {
    pub graph6: String,
    pub levels: Vec<VertexSet>,
    pub hole: Hole,
    pub flap: FlapWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlapPipelineOutput {
    /// The non-degenerate, liberal, flapless set with chromatic number `c + 1`.
    pub set: VertexSet,
    pub deep: DeepLeveling,
}

/// Induced subgraph with chromatic number `c + 1` that is non-degenerate,
/// liberal and flapless, for a triangle-free 4-sunspot-free `G` with
/// `chi(G) > 2c + 1`. Every postcondition is re-verified.
pub fn flap_theorem_pipeline(g: &Graph, c: usize) -> Result<FlapPipelineOutput, LevelingError> {
    if let Some(t) = find_triangle(g) {
        return Err(LevelingError::Triangle(t));
    }
    if let Some(s) = find_4_sunspot(g) {
        return Err(LevelingError::Sunspot(s));
    }
    check_chi_above(g, c)?;
    let deep = build_deep_leveling(g, c)?;
    let set = deep.leveling.top();
    verify_flap_output(g, set, c).map_err(|e| match e {
        LevelingError::TheoremViolation(mut d) => {
            d.levels = deep.leveling.levels.clone();
            LevelingError::TheoremViolation(d)
        }
        other => other,
    })?;
    Ok(FlapPipelineOutput { set, deep })
}

/// Checks chi = c + 1, non-degeneracy, liberality and flaplessness of `G[set]`.
pub fn verify_flap_output(g: &Graph, set: VertexSet, c: usize) -> Result<(), LevelingError> {
    let chi = chi_within(g, set);
    if chi != c + 1 {
        return Err(LevelingError::Postcondition(format!(
            "chi is {chi}, expected {}",
            c + 1
        )));
    }
    if let Some(v) = non_degeneracy_violation_within(g, set) {
        return Err(LevelingError::Postcondition(format!(
            "vertex {v} has degree below chi - 1"
        )));
    }
    if let Some((x, y)) = liberality_violation_within(g, set) {
        return Err(LevelingError::Postcondition(format!(
            "pair ({x}, {y}) is dominated"
        )));
    }
    if let Some((hole, flap)) = flap_violation_within(g, set) {
        return Err(LevelingError::TheoremViolation(Box::new(FlapDiagnostic {
            graph6: to_graph6(g),
            levels: Vec::new(),
            hole,
            flap,
        })));
    }
    Ok(())
}

/// Full configuration of a sector-lemma counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorViolation {
    pub levels: Vec<VertexSet>,
    pub hole: Hole,
    pub x: usize,
    /// The short sector's vertices.
    pub sector: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlapEndpointViolation {
    pub levels: Vec<VertexSet>,
    pub hole: Hole,
    pub flap: FlapWitness,
}

/// Which sector lemma an instance falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectorLemma {
    /// `x` in the level below the top, `r >= 2`.
    FromBelow,
    /// `x` in the top level off the hole, `r >= 3`, top level liberal.
    WithinTop,
}

/// Hypotheses shared by the lemma checkers, evaluated once per (graph, leveling).
pub struct LemmaContext<'a> {
    pub g: &'a Graph,
    pub leveling: &'a Leveling,
    base: Result<(), String>,
    top_liberal: bool,
}

impl<'a> LemmaContext<'a> {
    pub fn new(g: &'a Graph, leveling: &'a Leveling) -> Self {
        let base = if let Err(e) = leveling.validate(g) {
            Err(format!("not a leveling: {e}"))
        } else if find_triangle(g).is_some() {
            Err("graph has a triangle".into())
        } else if find_4_sunspot(g).is_some() {
            Err("graph has a 4-sunspot".into())
        } else {
            Ok(())
        };
        let top_liberal = base.is_ok() && is_liberal_within(g, leveling.top());
        LemmaContext {
            g,
            leveling,
            base,
            top_liberal,
        }
    }

    /// Builds a context whose triangle-free and 4-sunspot-free hypotheses are
    /// already known to hold for `g`.
    pub fn with_known_graph(g: &'a Graph, leveling: &'a Leveling) -> Self {
        let base = leveling
            .validate(g)
            .map_err(|e| format!("not a leveling: {e}"));
        let top_liberal = base.is_ok() && is_liberal_within(g, leveling.top());
        LemmaContext {
            g,
            leveling,
            base,
            top_liberal,
        }
    }

    fn hole_ok(&self, hole: &Hole) -> Result<(), String> {
        self.base.clone()?;
        if hole.length() < 6 {
            return Err("hole shorter than 6".into());
        }
        if hole.validate(self.g).is_err() {
            return Err("not a hole".into());
        }
        if !hole.vertex_set().is_subset(&self.leveling.top()) {
            return Err("hole not inside the top level".into());
        }
        Ok(())
    }

    /// No `x`-sector of length at most 2, for `x` below the top (`r >= 2`) or
    /// in the top off the hole (`r >= 3`, liberal top).
    pub fn check_sector_lemma(
        &self,
        hole: &Hole,
        x: usize,
    ) -> (Option<SectorLemma>, Verdict<SectorViolation>) {
        if let Err(reason) = self.hole_ok(hole) {
            return (None, Verdict::NotApplicable(reason));
        }
        let r = self.leveling.depth();
        let lemma = if r >= 2 && self.leveling.level(r - 1).contains(x) {
            SectorLemma::FromBelow
        } else if r >= 3 && self.top_liberal && self.leveling.top().contains(x) && !hole.contains(x)
        {
            SectorLemma::WithinTop
        } else {
            return (None, Verdict::not_applicable("x outside the lemma's range"));
        };
        let sectors = x_sectors(self.g, hole, x).expect("x is off the hole");
        let verdict = match sectors.iter().find(|p| p.length() <= 2) {
            None => Verdict::Holds,
            Some(p) => Verdict::Violated(SectorViolation {
                levels: self.leveling.levels.clone(),
                hole: hole.clone(),
                x,
                sector: p.vertices().to_vec(),
            }),
        };
        (Some(lemma), verdict)
    }

    /// Both non-hole flap vertices lie in the top level off the hole.
    pub fn check_flap_endpoint_lemma(
        &self,
        hole: &Hole,
        flap: &FlapWitness,
    ) -> Verdict<FlapEndpointViolation> {
        if let Err(reason) = self.hole_ok(hole) {
            return Verdict::NotApplicable(reason);
        }
        let r = self.leveling.depth();
        if r < 3 || !self.top_liberal {
            return Verdict::not_applicable("needs r >= 3 and a liberal top level");
        }
        let [x1, h1, h2, x2] = flap.quad;
        if !hole.has_edge(h1, h2) || !flap.verify(self.g, hole) {
            return Verdict::not_applicable("not an H-flap over a hole edge");
        }
        let band = self.leveling.level(r - 1) | self.leveling.top();
        if !band.contains(x1) || !band.contains(x2) {
            return Verdict::not_applicable("flap ends outside the top two levels");
        }
        let top = self.leveling.top();
        if [x1, x2]
            .iter()
            .all(|&x| top.contains(x) && !hole.contains(x))
        {
            Verdict::Holds
        } else {
            Verdict::Violated(FlapEndpointViolation {
                levels: self.leveling.levels.clone(),
                hole: hole.clone(),
                flap: flap.clone(),
            })
        }
    }

    /// Every flap of `hole` (within the whole graph) checked against the endpoint lemma.
    pub fn check_all_flaps(&self, hole: &Hole) -> Vec<Verdict<FlapEndpointViolation>> {
        all_flaps_within(self.g, self.g.vertices(), hole)
            .iter()
            .map(|f| self.check_flap_endpoint_lemma(hole, f))
            .collect()
    }
}

pub fn check_sector_lemmas(
    g: &Graph,
    levels: &[VertexSet],
    hole: &Hole,
    x: usize,
) -> Verdict<SectorViolation> {
    let leveling = Leveling {
        levels: levels.to_vec(),
    };
    LemmaContext::new(g, &leveling)
        .check_sector_lemma(hole, x)
        .1
}

pub fn check_flap_endpoint_lemma(
    g: &Graph,
    levels: &[VertexSet],
    hole: &Hole,
    flap: &FlapWitness,
) -> Verdict<FlapEndpointViolation> {
    let leveling = Leveling {
        levels: levels.to_vec(),
    };
    LemmaContext::new(g, &leveling).check_flap_endpoint_lemma(hole, flap)
}
