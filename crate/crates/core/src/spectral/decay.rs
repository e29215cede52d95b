use alloc::vec::Vec;

use super::numeric::apply_numeric;
use super::{NumericQ, SpectralError};
use crate::algebra::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecayVerdict {
    /// The tail of `||x Phi_n||` has collapsed below `1e-6` of its peak.
    ConsistentWithCompact,
    /// The tail stays above `1e-2` of the peak: `x Phi_n` does not tend to
    /// zero along an orthonormal sequence, so `x` is not compact.
    NonCompactWitness,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecayReport {
    /// `t_n = ||x Phi_n||` for `n < dim`, computed without truncation.
    pub norms: Vec<f64>,
    pub verdict: DecayVerdict,
}

/// Numeric hint about compactness; the exact answer is
/// [`is_compact`](crate::lie::is_compact).
pub fn compact_decay_report(x: &Element, q: &NumericQ, dim: usize) -> Result<DecayReport, SpectralError> {
    if dim < 4 {
        return Err(SpectralError::DimensionTooSmall { got: dim, need: 4 });
    }
    let norms = (0..dim as u64)
        .map(|n| apply_numeric(x, n, q).map(|v| v.norm()))
        .collect::<Result<Vec<_>, _>>()?;
    let peak = norms.iter().fold(0.0f64, |m, &t| m.max(t));
    let tail = &norms[dim - dim / 4..];
    let tail_max = tail.iter().fold(0.0f64, |m, &t| m.max(t));
    let tail_min = tail.iter().fold(f64::INFINITY, |m, &t| m.min(t));
    let verdict = if tail_max <= 1e-6 * peak || peak == 0.0 {
        DecayVerdict::ConsistentWithCompact
    } else if tail_min >= 1e-2 * peak {
        DecayVerdict::NonCompactWitness
    } else {
        DecayVerdict::Inconclusive
    };
    Ok(DecayReport { norms, verdict })
}
