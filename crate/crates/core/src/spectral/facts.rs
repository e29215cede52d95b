use alloc::vec::Vec;

use super::NumericQ;
use crate::coeff::RatFun;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorTag {
    A,
    B,
    /// `C^k`, `k >= 1`
    CPower(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointSpectrum {
    Empty,
    /// `|c| < r`
    OpenDisk,
    /// `{q^(kn) : n >= 0}`
    Eigenvalues,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApproxPointSpectrum {
    /// `|c| = r`
    Circle,
    /// `|c| <= r`
    ClosedDisk,
    /// `{0} u {q^(kn)}`
    ClosureOfEigenvalues,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompressionSpectrum {
    OpenDisk,
    Empty,
    /// For a self-adjoint operator the compression spectrum is the
    /// eigenvalue set.
    Eigenvalues,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spectrum {
    ClosedDisk,
    EigenvaluesWithZero,
}

/// Closed-form spectral data of `A`, `B` and `C^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumFacts {
    pub tag: OperatorTag,
    /// Square of the spectral radius: `1/(1-q)` for `A`, `B`; `1` for `C^k`.
    pub radius_sq: RatFun,
    pub spectrum: Spectrum,
    pub point_spectrum: PointSpectrum,
    pub approx_point_spectrum: ApproxPointSpectrum,
    pub compression_spectrum: CompressionSpectrum,
    /// Numeric radius when a `q` was supplied.
    pub radius: Option<f64>,
    pub q: Option<NumericQ>,
}

impl SpectrumFacts {
    /// The `n`-th eigenvalue `q^(kn)` of `C^k`; `None` for `A` and `B`.
    pub fn eigenvalue(&self, n: u32) -> Option<RatFun> {
        match self.tag {
            OperatorTag::CPower(k) => Some(RatFun::q_pow(k as i64 * n as i64)),
            _ => None,
        }
    }

    /// The first `count` eigenvalues of `C^k` at the supplied `q`.
    pub fn eigenvalues_at(&self, count: u32) -> Option<Vec<f64>> {
        let q = self.q.as_ref()?.to_f64();
        match self.tag {
            OperatorTag::CPower(k) => Some((0..count).map(|n| libm::pow(q, (k * n) as f64)).collect()),
            _ => None,
        }
    }
}

pub fn spectrum_facts(tag: OperatorTag, q: Option<NumericQ>) -> SpectrumFacts {
    let shift_radius_sq = RatFun::one_minus_q().recip().expect("1 - q is nonzero");
    let (radius_sq, spectrum, point, approx, compression, radius) = match tag {
        OperatorTag::B => (
            shift_radius_sq,
            Spectrum::ClosedDisk,
            PointSpectrum::Empty,
            ApproxPointSpectrum::Circle,
            CompressionSpectrum::OpenDisk,
            q.as_ref().map(NumericQ::shift_radius),
        ),
        OperatorTag::A => (
            shift_radius_sq,
            Spectrum::ClosedDisk,
            PointSpectrum::OpenDisk,
            ApproxPointSpectrum::ClosedDisk,
            CompressionSpectrum::Empty,
            q.as_ref().map(NumericQ::shift_radius),
        ),
        OperatorTag::CPower(_) => (
            RatFun::one(),
            Spectrum::EigenvaluesWithZero,
            PointSpectrum::Eigenvalues,
            ApproxPointSpectrum::ClosureOfEigenvalues,
            CompressionSpectrum::Eigenvalues,
            q.as_ref().map(|_| 1.0),
        ),
    };
    SpectrumFacts {
        tag,
        radius_sq,
        spectrum,
        point_spectrum: point,
        approx_point_spectrum: approx,
        compression_spectrum: compression,
        radius,
        q,
    }
}
