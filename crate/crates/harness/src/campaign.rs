//! Per-graph checkers for every verification campaign.
//!
//! Each checker walks the instances a graph offers (thresholds, levelings,
//! holes, flares, vertices), stops at the first violation, and otherwise
//! reports how many instances were checked and how many were vacuous.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use suntrap_core::coloring::{
    chi, chi_within, extract_critical, find_triangle, is_liberal_within,
    non_degeneracy_violation_within, verify_critical,
};
use suntrap_core::flare::{
    common_neighbor_bounds_all_flares, construct_full_flare, flare_hypotheses_within,
    full_flare_hypotheses_within, pendant_anticompleteness_violation, CommonNeighborViolation,
    Flare, FlareError, FlareFailure,
};
use suntrap_core::format::to_graph6;
use suntrap_core::leveling::{
    bfs_leveling, build_deep_leveling, check_flap_endpoint_lemma, check_sector_lemmas,
    flap_theorem_pipeline, FlapDiagnostic, FlapEndpointViolation, LemmaContext, Leveling,
    LevelingError, SectorViolation,
};
use suntrap_core::structures::{
    find_4_sunspot, find_sun_within, holes_within, longest_hole_length_within, SunWitness,
};
use suntrap_core::{Graph, Hole, Verdict, VertexSet};

use crate::enumerate::Predicate;

/// Campaign identifiers accepted by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "obs-2.2")]
    CriticalSubgraph,
    #[serde(rename = "lem-2.3")]
    DeepLeveling,
    #[serde(rename = "lem-2.4")]
    SectorsFromBelow,
    #[serde(rename = "lem-2.5")]
    SectorsWithinTop,
    #[serde(rename = "lem-2.6")]
    FlapEndpoints,
    #[serde(rename = "thm-2.1")]
    FlapTheorem,
    #[serde(rename = "lem-3.2")]
    CommonNeighbors,
    #[serde(rename = "thm-3.1")]
    FullFlare,
    #[serde(rename = "thm-4.2")]
    SecondNeighborhood,
    #[serde(rename = "thm-4.3")]
    LongHoleBound,
    #[serde(rename = "claim-4.1")]
    PendantAnticomplete,
    #[serde(rename = "implication-sunspot-sun")]
    SunContainsSunspot,
}

impl LemmaId {
    pub const ALL: [LemmaId; 12] = [
        LemmaId::CriticalSubgraph,
        LemmaId::DeepLeveling,
        LemmaId::SectorsFromBelow,
        LemmaId::SectorsWithinTop,
        LemmaId::FlapEndpoints,
        LemmaId::FlapTheorem,
        LemmaId::CommonNeighbors,
        LemmaId::FullFlare,
        LemmaId::SecondNeighborhood,
        LemmaId::LongHoleBound,
        LemmaId::PendantAnticomplete,
        LemmaId::SunContainsSunspot,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LemmaId::CriticalSubgraph => "obs-2.2",
            LemmaId::DeepLeveling => "lem-2.3",
            LemmaId::SectorsFromBelow => "lem-2.4",
            LemmaId::SectorsWithinTop => "lem-2.5",
            LemmaId::FlapEndpoints => "lem-2.6",
            LemmaId::FlapTheorem => "thm-2.1",
            LemmaId::CommonNeighbors => "lem-3.2",
            LemmaId::FullFlare => "thm-3.1",
            LemmaId::SecondNeighborhood => "thm-4.2",
            LemmaId::LongHoleBound => "thm-4.3",
            LemmaId::PendantAnticomplete => "claim-4.1",
            LemmaId::SunContainsSunspot => "implication-sunspot-sun",
        }
    }

    /// The corpus filter matching the statement's hypotheses.
    pub fn default_predicate(self) -> Predicate {
        match self {
            LemmaId::CriticalSubgraph | LemmaId::LongHoleBound | LemmaId::SunContainsSunspot => {
                Predicate::All
            }
            LemmaId::DeepLeveling => Predicate::TriangleFree,
            LemmaId::SecondNeighborhood => Predicate::TriangleFreeNoSixHole,
            _ => Predicate::TriangleFreeSunspotFree,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = LemmaId::ALL.iter().map(|l| l.id()).collect();
                format!("unknown lemma id `{s}` (known: {})", known.join(", "))
            })
    }
}

/// Everything needed to re-check a violation from the graph alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Critical {
        threshold: usize,
        reason: String,
    },
    DeepLeveling {
        threshold: usize,
        reason: String,
    },
    Sector(SectorViolation),
    FlapEndpoint(FlapEndpointViolation),
    FlapPipeline {
        threshold: usize,
        reason: String,
        diagnostic: Option<FlapDiagnostic>,
    },
    CommonNeighbor {
        hole: Hole,
        violation: CommonNeighborViolation,
    },
    FlareStuck {
        d: usize,
        failure: FlareFailure,
    },
    SecondNeighborhood {
        v: usize,
        second: VertexSet,
        chi: usize,
    },
    LongHoleBound {
        chi: usize,
        ell: usize,
        kappa: usize,
    },
    Pendant {
        hole: Hole,
        flare: Flare,
        h: usize,
        h_prime: usize,
    },
    SunWithoutSunspot {
        sun: SunWitness,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GraphVerdict {
    Holds,
    Violated { witness: Witness },
    NotApplicable { reason: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOutcome {
    #[serde(flatten)]
    pub verdict: GraphVerdict,
    pub instances_checked: usize,
    pub instances_not_applicable: usize,
}

/// Cooperative per-graph time limit, polled between instances.
#[derive(Debug, Clone, Copy)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Deadline {
        Deadline(None)
    }

    pub fn after(limit: Option<Duration>) -> Deadline {
        Deadline(limit.map(|d| Instant::now() + d))
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}

/// Accumulates instance verdicts for one graph.
struct Tally {
    checked: usize,
    vacuous: usize,
    first_reason: Option<String>,
    violation: Option<Witness>,
    skipped: bool,
    deadline: Deadline,
}

impl Tally {
    fn new(deadline: Deadline) -> Tally {
        Tally {
            checked: 0,
            vacuous: 0,
            first_reason: None,
            violation: None,
            skipped: false,
            deadline,
        }
    }

    /// Whether to stop walking instances.
    fn done(&mut self) -> bool {
        if self.violation.is_some() || self.skipped {
            return true;
        }
        if self.deadline.expired() {
            self.skipped = true;
        }
        self.skipped
    }

    fn holds(&mut self) {
        self.checked += 1;
    }

    fn vacuous(&mut self, reason: impl Into<String>) {
        self.vacuous += 1;
        if self.first_reason.is_none() {
            self.first_reason = Some(reason.into());
        }
    }

    fn violated(&mut self, w: Witness) {
        self.checked += 1;
        self.violation = Some(w);
    }

    fn record<V>(&mut self, v: Verdict<V>, wrap: impl FnOnce(V) -> Witness) {
        match v {
            Verdict::Holds => self.holds(),
            Verdict::Violated(x) => self.violated(wrap(x)),
            Verdict::NotApplicable(r) => self.vacuous(r),
        }
    }

    fn finish(self) -> GraphOutcome {
        let verdict = if let Some(witness) = self.violation {
            GraphVerdict::Violated { witness }
        } else if self.skipped {
            GraphVerdict::Skipped {
                reason: "per-graph timeout".into(),
            }
        } else if self.checked > 0 {
            GraphVerdict::Holds
        } else {
            GraphVerdict::NotApplicable {
                reason: self.first_reason.unwrap_or_else(|| "no instances".into()),
            }
        };
        GraphOutcome {
            verdict,
            instances_checked: self.checked,
            instances_not_applicable: self.vacuous,
        }
    }
}

fn not_applicable(reason: impl Into<String>) -> GraphOutcome {
    GraphOutcome {
        verdict: GraphVerdict::NotApplicable {
            reason: reason.into(),
        },
        instances_checked: 0,
        instances_not_applicable: 0,
    }
}

fn sunspot_free_triangle_free(g: &Graph) -> Result<(), String> {
    if find_triangle(g).is_some() {
        return Err("graph has a triangle".into());
    }
    if find_4_sunspot(g).is_some() {
        return Err("graph has a 4-sunspot".into());
    }
    Ok(())
}

fn long_holes(g: &Graph, within: VertexSet) -> Vec<Hole> {
    let n = within.len();
    if n < 6 {
        return Vec::new();
    }
    holes_within(g, within, 6, n)
        .expect("valid window")
        .collect()
}

/// BFS levelings from every root truncated at every depth `r >= 2`, with the
/// full layer as top and, for each long hole inside that layer, the hole alone as top.
pub fn bfs_derived_levelings(g: &Graph) -> Vec<Leveling> {
    let mut out = Vec::new();
    for root in 0..g.n() {
        let layers = bfs_leveling(g, root, None).levels;
        for r in 2..layers.len() {
            let mut levels = layers[..=r].to_vec();
            out.push(Leveling {
                levels: levels.clone(),
            });
            for hole in long_holes(g, layers[r]) {
                if hole.vertex_set() != layers[r] {
                    levels[r] = hole.vertex_set();
                    out.push(Leveling {
                        levels: levels.clone(),
                    });
                }
            }
        }
    }
    out
}

pub fn check_graph(lemma: LemmaId, g: &Graph, deadline: Deadline) -> GraphOutcome {
    match lemma {
        LemmaId::CriticalSubgraph => critical_subgraph(g, deadline),
        LemmaId::DeepLeveling => deep_leveling(g, deadline),
        LemmaId::SectorsFromBelow | LemmaId::SectorsWithinTop => sectors(g, lemma, deadline),
        LemmaId::FlapEndpoints => flap_endpoints(g, deadline),
        LemmaId::FlapTheorem => flap_theorem(g, deadline),
        LemmaId::CommonNeighbors => common_neighbors(g, deadline),
        LemmaId::FullFlare => full_flare(g, deadline),
        LemmaId::SecondNeighborhood => second_neighborhood(g, deadline),
        LemmaId::LongHoleBound => long_hole_bound(g),
        LemmaId::PendantAnticomplete => pendant_anticomplete(g, deadline),
        LemmaId::SunContainsSunspot => sun_contains_sunspot(g, deadline),
    }
}

fn critical_subgraph(g: &Graph, deadline: Deadline) -> GraphOutcome {
    let k = chi(g);
    let mut t = Tally::new(deadline);
    for c in 1..k {
        if t.done() {
            break;
        }
        let outcome = extract_critical(g, c).and_then(|cert| verify_critical(g, &cert));
        match outcome {
            Ok(()) => t.holds(),
            Err(e) => t.violated(Witness::Critical {
                threshold: c,
                reason: e.to_string(),
            }),
        }
    }
    if k < 2 {
        t.vacuous("chromatic number below 2");
    }
    t.finish()
}

fn deep_leveling(g: &Graph, deadline: Deadline) -> GraphOutcome {
    if find_triangle(g).is_some() {
        return not_applicable("graph has a triangle");
    }
    let k = chi(g);
    let mut t = Tally::new(deadline);
    for c in (1..).take_while(|&c| k > 2 * c + 1) {
        if t.done() {
            break;
        }
        let failure = match build_deep_leveling(g, c) {
            Err(e) => Some(e.to_string()),
            Ok(deep) => {
                let lv = &deep.leveling;
                let top = lv.top();
                if let Err(e) = lv.validate(g) {
                    Some(format!("leveling axiom: {e}"))
                } else if lv.depth() < 3 {
                    Some("depth below 3".into())
                } else if chi_within(g, top) != c + 1 {
                    Some("top level has the wrong chromatic number".into())
                } else if non_degeneracy_violation_within(g, top).is_some() {
                    Some("top level is degenerate".into())
                } else if !is_liberal_within(g, top) {
                    Some("top level is not liberal".into())
                } else {
                    None
                }
            }
        };
        match failure {
            None => t.holds(),
            Some(reason) => t.violated(Witness::DeepLeveling {
                threshold: c,
                reason,
            }),
        }
    }
    if t.checked == 0 && !t.skipped {
        t.vacuous(format!(
            "chromatic number {k} leaves no threshold c with chi > 2c + 1"
        ));
    }
    t.finish()
}

fn sectors(g: &Graph, lemma: LemmaId, deadline: Deadline) -> GraphOutcome {
    if let Err(r) = sunspot_free_triangle_free(g) {
        return not_applicable(r);
    }
    let mut t = Tally::new(deadline);
    for lv in bfs_derived_levelings(g) {
        let ctx = LemmaContext::with_known_graph(g, &lv);
        let r = lv.depth();
        let top = lv.top();
        for hole in long_holes(g, top) {
            let xs = match lemma {
                LemmaId::SectorsFromBelow => lv.level(r - 1),
                _ => top - hole.vertex_set(),
            };
            for x in xs {
                if t.done() {
                    return t.finish();
                }
                let (_, verdict) = ctx.check_sector_lemma(&hole, x);
                t.record(verdict, Witness::Sector);
            }
        }
    }
    t.finish()
}

fn flap_endpoints(g: &Graph, deadline: Deadline) -> GraphOutcome {
    if let Err(r) = sunspot_free_triangle_free(g) {
        return not_applicable(r);
    }
    let mut t = Tally::new(deadline);
    for lv in bfs_derived_levelings(g) {
        let ctx = LemmaContext::with_known_graph(g, &lv);
        for hole in long_holes(g, lv.top()) {
            if t.done() {
                return t.finish();
            }
            for v in ctx.check_all_flaps(&hole) {
                t.record(v, Witness::FlapEndpoint);
                if t.violation.is_some() {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

fn flap_theorem(g: &Graph, deadline: Deadline) -> GraphOutcome {
    if let Err(r) = sunspot_free_triangle_free(g) {
        return not_applicable(r);
    }
    let k = chi(g);
    let mut t = Tally::new(deadline);
    for c in (1..).take_while(|&c| k > 2 * c + 1) {
        if t.done() {
            break;
        }
        match flap_theorem_pipeline(g, c) {
            Ok(_) => t.holds(),
            Err(LevelingError::TheoremViolation(d)) => t.violated(Witness::FlapPipeline {
                threshold: c,
                reason: "output has a flap".into(),
                diagnostic: Some(*d),
            }),
            Err(e) => t.violated(Witness::FlapPipeline {
                threshold: c,
                reason: e.to_string(),
                diagnostic: None,
            }),
        }
    }
    if t.checked == 0 && !t.skipped {
        t.vacuous(format!(
            "chromatic number {k} leaves no threshold c with chi > 2c + 1"
        ));
    }
    t.finish()
}

fn common_neighbors(g: &Graph, deadline: Deadline) -> GraphOutcome {
    let holes = long_holes(g, g.vertices());
    let Some(first) = holes.first() else {
        return not_applicable("no hole of length at least 6");
    };
    let hyp = flare_hypotheses_within(g, g.vertices(), first);
    if let Err(r) = hyp {
        return not_applicable(r);
    }
    let mut t = Tally::new(deadline);
    for hole in holes {
        if t.done() {
            break;
        }
        let (n, verdict) = common_neighbor_bounds_all_flares(g, &hole, &Ok(()));
        t.checked += n.saturating_sub(1);
        t.record(verdict, |violation| Witness::CommonNeighbor {
            hole: hole.clone(),
            violation,
        });
    }
    t.finish()
}

fn full_flare(g: &Graph, deadline: Deadline) -> GraphOutcome {
    let holes = long_holes(g, g.vertices());
    let Some(first) = holes.first() else {
        return not_applicable("no hole of length at least 6");
    };
    if let Err(r) = flare_hypotheses_within(g, g.vertices(), first) {
        return not_applicable(r);
    }
    let mut t = Tally::new(deadline);
    for hole in holes {
        for d in 1..=hole.length() / 2 {
            if t.done() {
                return t.finish();
            }
            let hyp = full_flare_hypotheses_within(g, g.vertices(), &hole, d);
            match construct_full_flare(g, &hole, d) {
                Ok(_) if hyp.is_ok() => t.holds(),
                Ok(_) => t.vacuous(hyp.unwrap_err()),
                Err(FlareError::Stuck(f)) if f.hypotheses.is_ok() => {
                    t.violated(Witness::FlareStuck { d, failure: *f })
                }
                Err(FlareError::Stuck(f)) => t.vacuous(f.hypotheses.unwrap_err()),
                Err(e) => t.vacuous(e.to_string()),
            }
        }
    }
    t.finish()
}

fn second_neighborhood(g: &Graph, deadline: Deadline) -> GraphOutcome {
    if find_triangle(g).is_some() {
        return not_applicable("graph has a triangle");
    }
    if holes_within(g, g.vertices(), 6, 6)
        .expect("valid window")
        .next()
        .is_some()
    {
        return not_applicable("graph has a 6-hole");
    }
    let mut t = Tally::new(deadline);
    for v in 0..g.n() {
        if t.done() {
            break;
        }
        let second = g.second_neighborhood(v);
        let k = chi_within(g, second);
        if k <= 2 {
            t.holds();
        } else {
            t.violated(Witness::SecondNeighborhood { v, second, chi: k });
        }
    }
    t.finish()
}

/// `(chi, ell, kappa)` for the long-hole bound, with `ell >= 4` and `kappa >= 1`.
pub fn long_hole_parameters(g: &Graph) -> (usize, usize, usize) {
    let ell = longest_hole_length_within(g, g.vertices())
        .unwrap_or(4)
        .max(4);
    let kappa = (0..g.n())
        .map(|v| chi_within(g, g.neighbors(v)).max(chi_within(g, g.second_neighborhood(v))))
        .max()
        .unwrap_or(0)
        .max(1);
    (chi(g), ell, kappa)
}

fn long_hole_bound(g: &Graph) -> GraphOutcome {
    let mut t = Tally::new(Deadline::none());
    let (k, ell, kappa) = long_hole_parameters(g);
    if k <= (2 * ell - 2) * kappa {
        t.holds();
    } else {
        t.violated(Witness::LongHoleBound { chi: k, ell, kappa });
    }
    t.finish()
}

const MAX_FLARES_PER_HOLE: usize = 2000;

/// Every full `d`-safe flare on `hole`, up to `limit` of them.
pub fn full_safe_flares(g: &Graph, hole: &Hole, d: usize, limit: usize) -> Vec<Flare> {
    fn go(
        g: &Graph,
        hole: &Hole,
        d: usize,
        i: usize,
        assign: &mut Vec<Option<usize>>,
        out: &mut Vec<Flare>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let hv = hole.vertices();
        if i == hv.len() {
            out.push(Flare {
                hole: hole.clone(),
                assign: assign.clone(),
            });
            return;
        }
        for x in g.neighbors(hv[i]) - hole.vertex_set() {
            let ok = (0..i).filter(|&j| hole.cycle_distance(i, j) <= d).all(|j| {
                let y = assign[j].expect("earlier positions are assigned");
                x != y && !g.has_edge(x, y) && !g.has_edge(x, hv[j]) && !g.has_edge(y, hv[i])
            });
            if ok {
                assign[i] = Some(x);
                go(g, hole, d, i + 1, assign, out, limit);
                assign[i] = None;
            }
        }
    }
    let mut out = Vec::new();
    let mut assign = vec![None; hole.length()];
    go(g, hole, d, 0, &mut assign, &mut out, limit);
    out
}

fn pendant_anticomplete(g: &Graph, deadline: Deadline) -> GraphOutcome {
    if find_triangle(g).is_some() {
        return not_applicable("graph has a triangle");
    }
    let mut t = Tally::new(deadline);
    for ell in 6..=g.n() {
        let Some(shortest) = (ell..=g.n()).find(|&len| {
            holes_within(g, g.vertices(), len, len)
                .expect("valid window")
                .next()
                .is_some()
        }) else {
            break;
        };
        for hole in holes_within(g, g.vertices(), shortest, shortest).expect("valid window") {
            let flares = full_safe_flares(g, &hole, ell, MAX_FLARES_PER_HOLE);
            if flares.is_empty() {
                t.vacuous(format!("no full {ell}-safe flare on a shortest hole"));
            }
            for flare in flares {
                if t.done() {
                    return t.finish();
                }
                match pendant_anticompleteness_violation(g, &flare) {
                    None => t.holds(),
                    Some((h, h_prime)) => t.violated(Witness::Pendant {
                        hole: hole.clone(),
                        flare,
                        h,
                        h_prime,
                    }),
                }
            }
        }
    }
    if t.checked == 0 && t.vacuous == 0 && !t.skipped {
        t.vacuous("no hole of length at least 6");
    }
    t.finish()
}

/// The sun minus the pendant of its last cycle vertex induces a sunspot.
pub fn sun_minus_pendant_is_sunspot(g: &Graph, sun: &SunWitness) -> bool {
    let t = sun.t();
    let cycle = &sun.cycle;
    let pendants = &sun.pendants[..t - 1];
    let vs: Vec<usize> = cycle.iter().chain(pendants).copied().collect();
    let expected = |u: usize, v: usize| {
        let on_cycle = |a: usize, b: usize| {
            let (i, j) = (
                cycle.iter().position(|&c| c == a),
                cycle.iter().position(|&c| c == b),
            );
            matches!((i, j), (Some(i), Some(j)) if (i + 1) % t == j || (j + 1) % t == i)
        };
        let pendant = |a: usize, b: usize| {
            pendants
                .iter()
                .position(|&p| p == b)
                .is_some_and(|i| cycle[i] == a)
        };
        on_cycle(u, v) || pendant(u, v) || pendant(v, u)
    };
    vs.iter().enumerate().all(|(i, &u)| {
        vs[i + 1..]
            .iter()
            .all(|&v| g.has_edge(u, v) == expected(u, v))
    })
}

fn sun_contains_sunspot(g: &Graph, deadline: Deadline) -> GraphOutcome {
    let mut t = Tally::new(deadline);
    for size in 4..=g.n() / 2 {
        if t.done() {
            break;
        }
        let Some(sun) = find_sun_within(g, g.vertices(), size, size) else {
            continue;
        };
        let ok =
            sun_minus_pendant_is_sunspot(g, &sun) && (size != 4 || find_4_sunspot(g).is_some());
        if ok {
            t.holds();
        } else {
            t.violated(Witness::SunWithoutSunspot { sun });
        }
    }
    if t.checked == 0 && !t.skipped {
        t.vacuous("graph contains no sun");
    }
    t.finish()
}

impl Witness {
    /// Re-checks the violation against `g` directly where the witness allows,
    /// otherwise by re-running the campaign's checker.
    pub fn reverify(&self, lemma: LemmaId, g: &Graph) -> bool {
        match self {
            Witness::Sector(v) => check_sector_lemmas(g, &v.levels, &v.hole, v.x).is_violated(),
            Witness::FlapEndpoint(v) => {
                check_flap_endpoint_lemma(g, &v.levels, &v.hole, &v.flap).is_violated()
            }
            Witness::SecondNeighborhood { v, .. } => {
                *v < g.n() && chi_within(g, g.second_neighborhood(*v)) > 2
            }
            Witness::LongHoleBound { .. } => {
                let (k, ell, kappa) = long_hole_parameters(g);
                k > (2 * ell - 2) * kappa
            }
            Witness::CommonNeighbor { hole, violation } => {
                let Some(i) = hole.position(violation.h) else {
                    return false;
                };
                let Some(j) = hole.position(violation.h_prime) else {
                    return false;
                };
                let off = g.vertices() - hole.vertex_set();
                let common = g.neighbors(violation.x) & g.neighbors(violation.h_prime) & off;
                let limit = if hole.cycle_distance(i, j) == 1 { 0 } else { 1 };
                common.len() > limit
            }
            Witness::Pendant { flare, .. } => {
                flare.validate(g).is_ok() && pendant_anticompleteness_violation(g, flare).is_some()
            }
            Witness::SunWithoutSunspot { sun } => {
                sun.verify(g)
                    && (!sun_minus_pendant_is_sunspot(g, sun)
                        || (sun.t() == 4 && find_4_sunspot(g).is_none()))
            }
            _ => matches!(
                check_graph(lemma, g, Deadline::none()).verdict,
                GraphVerdict::Violated { .. }
            ),
        }
    }
}

/// Graph6 of `g`, for embedding next to a witness.
pub fn encode(g: &Graph) -> String {
    to_graph6(g)
}
