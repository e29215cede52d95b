use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::matrix;
use super::weights::weights;
use super::{NumericQ, SpectralError};
use crate::algebra::Element;

/// A truncated eigenvector candidate of `A` for the eigenvalue `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherentWitness {
    pub c: Complex64,
    /// `v_0 = 1`, `v_(n+1) = c v_n / alpha_n`, for `n < dim`.
    pub coefficients: Vec<Complex64>,
    /// `||A v - c v|| / ||v||` on the truncation.
    pub residual: f64,
    /// Set when `|c| >= (1-q)^(-1/2)`: the truncated residual is then not
    /// expected to vanish.
    pub outside_open_disk: bool,
}

pub fn coherent_vector(c: Complex64, q: &NumericQ, dim: usize) -> Result<CoherentWitness, SpectralError> {
    if dim < 2 {
        return Err(SpectralError::DimensionTooSmall { got: dim, need: 2 });
    }
    let alpha = weights(q, dim)?.values;
    let mut v = Vec::with_capacity(dim);
    v.push(Complex64::new(1.0, 0.0));
    for n in 0..dim - 1 {
        let next = v[n] * c / alpha[n];
        v.push(next);
    }
    // residual through the truncated matrix of A
    let a = matrix(&Element::a(), q, dim)?;
    let re: Vec<f64> = v.iter().map(|z| z.re).collect();
    let im: Vec<f64> = v.iter().map(|z| z.im).collect();
    let (are, aim) = (a.apply(&re), a.apply(&im));
    let mut res2 = 0.0;
    let mut norm2 = 0.0;
    for i in 0..dim {
        let av = Complex64::new(are[i], aim[i]);
        res2 += (av - c * v[i]).norm_sqr();
        norm2 += v[i].norm_sqr();
    }
    Ok(CoherentWitness {
        c,
        residual: libm::sqrt(res2) / libm::sqrt(norm2),
        outside_open_disk: c.norm() >= q.shift_radius(),
        coefficients: v,
    })
}
