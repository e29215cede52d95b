//! Floating-point realization of `A`, `B`, `C` on `l2(N)`.
//!
//! `B` is the unilateral weighted shift `Phi_n -> alpha_n Phi_(n+1)` with
//! `alpha_n = sqrt({n+1}_q)`, `A` is its adjoint and `C = AB - BA` is the
//! diagonal operator `q^n`. Everything is computed in the infinite model
//! first (exact rationals, one rounding per entry) and only then projected
//! onto the first `N` basis vectors.

mod coherent;
mod decay;
mod estimators;
mod facts;
mod matrix;
mod norm;
mod numeric;
mod weights;

pub use coherent::{coherent_vector, CoherentWitness};
pub use decay::{compact_decay_report, DecayReport, DecayVerdict};
pub use estimators::{lower_index_est, spectral_radius_est};
pub use facts::{
    spectrum_facts, ApproxPointSpectrum, CompressionSpectrum, OperatorTag, PointSpectrum, Spectrum, SpectrumFacts,
};
pub use matrix::{matrix, TruncatedMatrix};
pub use norm::{op_norm, power_iteration_norm, PowerIterationConfig};
pub use numeric::{apply_numeric, SparseVec};
pub use weights::{weights, WeightSequence};

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::coeff::CoeffError;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("q must lie strictly between 0 and 1")]
    InvalidQ,
    #[error("{0}")]
    Coeff(#[from] CoeffError),
    #[error("dimension {got} too small, need at least {need}")]
    DimensionTooSmall { got: usize, need: usize },
    #[error("power iteration did not converge after {iterations} iterations (estimate {estimate}, last relative change {last_change:e})")]
    NonConvergence {
        iterations: usize,
        estimate: f64,
        last_change: f64,
    },
}

/// An exact deformation parameter in the open interval `(0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericQ(BigRational);

impl NumericQ {
    pub fn new(value: BigRational) -> Result<Self, SpectralError> {
        if value <= BigRational::zero() || value >= BigRational::one() {
            return Err(SpectralError::InvalidQ);
        }
        Ok(NumericQ(value))
    }

    /// `num / den`.
    pub fn ratio(num: i64, den: i64) -> Result<Self, SpectralError> {
        if den == 0 {
            return Err(SpectralError::InvalidQ);
        }
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("q is a finite rational")
    }

    /// `(1 - q)^(-1/2)`, the spectral radius of `A` and `B`.
    pub fn shift_radius(&self) -> f64 {
        let one_minus = (BigRational::one() - &self.0).to_f64().expect("finite");
        1.0 / libm::sqrt(one_minus)
    }

    /// `{m}_q` evaluated exactly.
    pub fn qbracket(&self, m: u64) -> BigRational {
        let qm = num_traits::pow(self.0.clone(), m as usize);
        (BigRational::one() - qm) / (BigRational::one() - &self.0)
    }
}

impl fmt::Debug for NumericQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericQ({})", self.0)
    }
}

impl fmt::Display for NumericQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
