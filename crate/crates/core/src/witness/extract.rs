//! The constructive chain from a triangle-free graph of large chromatic
//! number to a long induced sun or a 4-sunspot.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::find_triangle;
use crate::flare::{
    construct_full_flare_within, pendant_anticompleteness_violation, Flare, FlareError,
    FlareFailure,
};
use crate::format::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::leveling::{flap_theorem_pipeline, FlapDiagnostic, LevelingError};
use crate::paths::Hole;
use crate::structures::{
    find_4_sunspot, find_4_sunspot_within, find_hole_min_length_within, SunWitness, SunspotWitness,
};
use crate::witness::constants::{theorem_constant, ConstantError, TheoremConstants};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExtractedWitness {
    Sun(SunWitness),
    Sunspot(SunspotWitness),
}

impl ExtractedWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ExtractedWitness::Sun(s) => s.verify(g),
            ExtractedWitness::Sunspot(s) => s.verify(g),
        }
    }
}

/// What each stage produced, in original labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionTrace {
    pub graph6: String,
    pub ell: usize,
    pub constants: Option<TheoremConstants>,
    pub levels: Option<Vec<VertexSet>>,
    pub subgraph: Option<VertexSet>,
    pub subgraph_graph6: Option<String>,
    pub hole: Option<Hole>,
    pub flare: Option<Flare>,
    pub witness_graph6: Option<String>,
    /// Stages that finished, 1 through 5.
    pub completed: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionResult {
    pub witness: ExtractedWitness,
    pub trace: ExtractionTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("graph has a triangle {0:?}")]
    Triangle((usize, usize, usize)),
    #[error(transparent)]
    Constants(#[from] ConstantError),
    #[error("no witness found at stage {stage}: {reason}")]
    NoWitness {
        stage: u8,
        reason: String,
        trace: Box<ExtractionTrace>,
    },
    /// A step the theory guarantees went wrong under its hypotheses.
    #[error("stage {stage} contradicted its guarantee: {reason}")]
    Diagnostic {
        stage: u8,
        reason: String,
        trace: Box<ExtractionTrace>,
        flap: Option<Box<FlapDiagnostic>>,
        flare: Option<Box<FlareFailure>>,
    },
}

impl ExtractError {
    pub fn stage(&self) -> Option<u8> {
        match self {
            ExtractError::NoWitness { stage, .. } | ExtractError::Diagnostic { stage, .. } => {
                Some(*stage)
            }
            _ => None,
        }
    }
}

fn no_witness(stage: u8, reason: impl Into<String>, trace: &ExtractionTrace) -> ExtractError {
    ExtractError::NoWitness {
        stage,
        reason: reason.into(),
        trace: Box::new(trace.clone()),
    }
}

/// Runs the whole chain: triangle and 4-sunspot checks, the flap pipeline at
/// `max(tau, 4 ell - 1)`, then [`extract_from_subgraph`] on its output.
pub fn extract_witness(
    g: &Graph,
    ell: usize,
    tau: Option<usize>,
) -> Result<ExtractionResult, ExtractError> {
    if let Some(t) = find_triangle(g) {
        return Err(ExtractError::Triangle(t));
    }
    let constants = theorem_constant(ell, tau)?;
    let mut trace = ExtractionTrace {
        graph6: to_graph6(g),
        ell,
        constants: Some(constants),
        ..Default::default()
    };
    if let Some(s) = find_4_sunspot(g) {
        return Ok(sunspot_result(g, s, trace));
    }
    let out = match flap_theorem_pipeline(g, constants.pipeline_threshold()) {
        Ok(out) => out,
        Err(LevelingError::Sunspot(s)) => return Ok(sunspot_result(g, s, trace)),
        Err(LevelingError::TheoremViolation(d)) => {
            return Err(ExtractError::Diagnostic {
                stage: 1,
                reason: "pipeline output has a flap".into(),
                trace: Box::new(trace),
                flap: Some(d),
                flare: None,
            })
        }
        Err(e) => return Err(no_witness(1, e.to_string(), &trace)),
    };
    trace.levels = Some(out.deep.leveling.levels.clone());
    trace.completed.push(1);
    extract_with_trace(g, out.set, ell, trace)
}

/// Stages 2 to 5 on `G[set]`: shortest hole of length at least `ell`, a full
/// `ell`-safe flare on it, pairwise anticompleteness of the pendants, and the sun.
pub fn extract_from_subgraph(
    g: &Graph,
    set: VertexSet,
    ell: usize,
) -> Result<ExtractionResult, ExtractError> {
    let trace = ExtractionTrace {
        graph6: to_graph6(g),
        ell,
        ..Default::default()
    };
    extract_with_trace(g, set, ell, trace)
}

fn sunspot_result(g: &Graph, s: SunspotWitness, mut trace: ExtractionTrace) -> ExtractionResult {
    assert!(s.verify(g), "sunspot witness failed re-verification");
    let set: VertexSet = s.vertices().into_iter().collect();
    trace.witness_graph6 = Some(to_graph6(&g.induced_subgraph(set).graph));
    ExtractionResult {
        witness: ExtractedWitness::Sunspot(s),
        trace,
    }
}

fn extract_with_trace(
    g: &Graph,
    set: VertexSet,
    ell: usize,
    mut trace: ExtractionTrace,
) -> Result<ExtractionResult, ExtractError> {
    let set = set & g.vertices();
    trace.subgraph = Some(set);
    trace.subgraph_graph6 = Some(to_graph6(&g.induced_subgraph(set).graph));
    if let Some(s) = find_4_sunspot_within(g, set) {
        return Ok(sunspot_result(g, s, trace));
    }

    let hole = find_hole_min_length_within(g, set, ell.max(4))
        .expect("window is valid")
        .ok_or_else(|| no_witness(2, format!("no hole of length at least {ell}"), &trace))?;
    trace.hole = Some(hole.clone());
    trace.completed.push(2);

    let flare = match construct_full_flare_within(g, set, &hole, ell) {
        Ok(built) => built.flare,
        Err(FlareError::Stuck(f)) if f.hypotheses.is_ok() => {
            return Err(ExtractError::Diagnostic {
                stage: 3,
                reason: format!(
                    "greedy flare stuck at {} although every hypothesis held",
                    f.h
                ),
                trace: Box::new(trace),
                flap: None,
                flare: Some(f),
            })
        }
        Err(FlareError::Stuck(f)) => {
            let why = f.hypotheses.clone().unwrap_err();
            return Err(no_witness(
                3,
                format!("greedy flare stuck at {}: {why}", f.h),
                &trace,
            ));
        }
        Err(e) => return Err(no_witness(3, e.to_string(), &trace)),
    };
    trace.flare = Some(flare.clone());
    trace.completed.push(3);

    if let Some((h, hp)) = pendant_anticompleteness_violation(g, &flare) {
        return Err(ExtractError::Diagnostic {
            stage: 4,
            reason: format!("pendant of {h} is not anticomplete to {hp} and its pendant"),
            trace: Box::new(trace),
            flap: None,
            flare: None,
        });
    }
    trace.completed.push(4);

    let sun = SunWitness {
        cycle: hole.vertices().to_vec(),
        pendants: flare.pendants(),
    };
    if !sun.verify(g) {
        return Err(ExtractError::Diagnostic {
            stage: 5,
            reason: "assembled sun failed re-verification".into(),
            trace: Box::new(trace),
            flap: None,
            flare: None,
        });
    }
    let sun_set: VertexSet = sun.vertices().into_iter().collect();
    trace.witness_graph6 = Some(to_graph6(&g.induced_subgraph(sun_set).graph));
    trace.completed.push(5);
    Ok(ExtractionResult {
        witness: ExtractedWitness::Sun(sun),
        trace,
    })
}
