use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Long-hole constant known for the smallest threshold.
pub const TAU_FOR_SIX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstantError {
    #[error("the threshold ell must be at least 6, got {0}")]
    EllTooSmall(usize),
    #[error("constant unavailable: no explicit tau is known for ell = {0}; pass one")]
    TauUnavailable(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremConstants {
    pub ell: usize,
    pub tau: usize,
    pub c: usize,
}

impl TheoremConstants {
    /// `max(tau, 4 ell - 1)`, the threshold handed to the flap pipeline.
    pub fn pipeline_threshold(&self) -> usize {
        self.tau.max(4 * self.ell - 1)
    }
}

pub fn theorem_constant(ell: usize, tau: Option<usize>) -> Result<TheoremConstants, ConstantError> {
    if ell < 6 {
        return Err(ConstantError::EllTooSmall(ell));
    }
    let tau = match (ell, tau) {
        (_, Some(t)) => t,
        (6, None) => TAU_FOR_SIX,
        (_, None) => return Err(ConstantError::TauUnavailable(ell)),
    };
    let c = 2 * tau.max(4 * ell - 1) + 1;
    Ok(TheoremConstants { ell, tau, c })
}
