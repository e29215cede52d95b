//! Windowed geometric means of the shift weights.
//!
//! For window length `k` the mean over `alpha_n ... alpha_(n+k-1)` is
//! `(1-q)^(-1/2) b_n(k)` with `b_n(k) = prod_i (1 - q^(n+i+1))^(1/(2k))`.
//! The supremum over `n` (spectral radius) converges as fast as the tail
//! window approaches the limit. The infimum (lower index) is always attained
//! at `n = 0`, where it equals `(1-q)^(-1/2) c_k` with
//! `c_k = exp(sum_{i<k} ln(1 - q^(i+1)) / (2k))`; since the sum converges,
//! `|ln c_k|` decays only like `1/k`.

use alloc::vec::Vec;

use super::weights::weights;
use super::{NumericQ, SpectralError};

fn window_means(q: &NumericQ, kmax: usize, dim: usize) -> Result<Vec<Vec<f64>>, SpectralError> {
    if kmax < 1 {
        return Err(SpectralError::DimensionTooSmall { got: kmax, need: 1 });
    }
    if dim <= kmax {
        return Err(SpectralError::DimensionTooSmall {
            got: dim,
            need: kmax + 1,
        });
    }
    let logs = weights(q, dim)?.logs();
    let mut prefix = Vec::with_capacity(dim + 1);
    prefix.push(0.0);
    for l in &logs {
        prefix.push(prefix.last().unwrap() + l);
    }
    Ok((1..=kmax)
        .map(|k| {
            (0..dim - k)
                .map(|n| libm::exp((prefix[n + k] - prefix[n]) / k as f64))
                .collect()
        })
        .collect())
}

/// Entry `k - 1` is `sup_{n < dim - k} (prod_{i<k} alpha_(n+i))^(1/k)`; the last
/// entry estimates `r(B)`.
pub fn spectral_radius_est(q: &NumericQ, kmax: usize, dim: usize) -> Result<Vec<f64>, SpectralError> {
    Ok(window_means(q, kmax, dim)?
        .into_iter()
        .map(|means| means.into_iter().fold(f64::NEG_INFINITY, f64::max))
        .collect())
}

/// Entry `k - 1` is the infimum of the same windowed means; estimates `i(B)`.
pub fn lower_index_est(q: &NumericQ, kmax: usize, dim: usize) -> Result<Vec<f64>, SpectralError> {
    Ok(window_means(q, kmax, dim)?
        .into_iter()
        .map(|means| means.into_iter().fold(f64::INFINITY, f64::min))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_index_at_k_two() {
        let q = NumericQ::ratio(1, 2).unwrap();
        let est = lower_index_est(&q, 2, 10).unwrap();
        let expect = core::f64::consts::SQRT_2 * libm::pow(0.375, 0.25);
        assert!((est[1] - expect).abs() < 1e-14);
        assert!((est[1] - 1.1066).abs() < 1e-4);
    }

    #[test]
    fn rejects_small_dimensions() {
        let q = NumericQ::ratio(1, 2).unwrap();
        assert!(spectral_radius_est(&q, 5, 5).is_err());
        assert!(spectral_radius_est(&q, 0, 5).is_err());
    }
}
