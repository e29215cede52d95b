//! Largest singular value of a truncated matrix.
//!
//! Plain power iteration on `M^T M` stalls on the shift operators: the top
//! squared singular values of a truncated `B^l` are `prod {n+i}_q`, which
//! crowd against their supremum with gaps of order `q^n`. The Rayleigh
//! quotient then creeps up like `1/t` and misses `1e-9` accuracy at any
//! practical iteration count. [`op_norm`] therefore runs a Lanczos
//! tridiagonalization of `M^T M` with full reorthogonalization (all-ones
//! start vector, deterministic restarts on breakdown) and takes the top
//! eigenvalue of the tridiagonal matrix by Sturm bisection.
//! [`power_iteration_norm`] is kept as the plain estimator.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{matrix, TruncatedMatrix};
use super::{NumericQ, SpectralError};
use crate::algebra::Element;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm2(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

fn sym_apply(g: &[f64], n: usize, v: &[f64]) -> Vec<f64> {
    g.chunks(n).map(|row| dot(row, v)).collect()
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly less
/// than `x`.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for i in 0..diag.len() {
        let b2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        d = diag[i] - x - if i == 0 { 0.0 } else { b2 / d };
        if d == 0.0 {
            d = -f64::EPSILON * (x.abs() + 1.0);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

fn largest_tridiagonal_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    let m = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..m {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < m { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) == m {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Largest eigenvalue of the symmetric positive semidefinite `g` (`n x n`,
/// row-major) by Lanczos with full reorthogonalization.
fn lanczos_top_eigenvalue(g: &[f64], n: usize) -> f64 {
    let scale = g.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n);
    let start = 1.0 / libm::sqrt(n as f64);
    let mut v = vec![start; n];
    let mut next_unit = 0;
    while basis.len() < n {
        let mut w = sym_apply(g, n, &v);
        diag.push(dot(&w, &v));
        basis.push(v);
        // full reorthogonalization, twice for stability
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        if basis.len() == n {
            break;
        }
        let beta = norm2(&w);
        if beta > 1e-12 * scale {
            off.push(beta);
            v = w.iter().map(|x| x / beta).collect();
            continue;
        }
        // invariant subspace exhausted: restart from the next unit vector
        // with a usable component outside the current basis
        off.push(0.0);
        let mut restarted = None;
        while next_unit < n {
            let mut e = vec![0.0; n];
            e[next_unit] = 1.0;
            next_unit += 1;
            for _ in 0..2 {
                for b in &basis {
                    let c = dot(&e, b);
                    for (ei, bi) in e.iter_mut().zip(b) {
                        *ei -= c * bi;
                    }
                }
            }
            let r = norm2(&e);
            if r > 0.5 {
                restarted = Some(e.iter().map(|x| x / r).collect());
                break;
            }
        }
        match restarted {
            Some(e) => v = e,
            None => {
                off.pop();
                break;
            }
        }
    }
    largest_tridiagonal_eigenvalue(&diag, &off[..diag.len() - 1])
}

/// Operator norm of the compression of `x` to the first `dim` basis vectors.
pub fn op_norm(x: &Element, q: &NumericQ, dim: usize) -> Result<f64, SpectralError> {
    if dim < 2 {
        return Err(SpectralError::DimensionTooSmall { got: dim, need: 2 });
    }
    Ok(matrix_norm(&matrix(x, q, dim)?))
}

/// Largest singular value of a truncated matrix.
pub fn matrix_norm(m: &TruncatedMatrix) -> f64 {
    let top = lanczos_top_eigenvalue(&m.gram(), m.dim());
    libm::sqrt(top.max(0.0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerIterationConfig {
    /// Stop once the relative change of the estimate drops below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerIterationConfig {
    fn default() -> Self {
        PowerIterationConfig {
            tolerance: 1e-12,
            max_iterations: 10_000,
        }
    }
}

/// Power iteration on `M^T M` from the all-ones vector; returns
/// `sqrt` of the Rayleigh quotient once it settles.
pub fn power_iteration_norm(m: &TruncatedMatrix, cfg: PowerIterationConfig) -> Result<f64, SpectralError> {
    let n = m.dim();
    let mut v = vec![1.0 / libm::sqrt(n as f64); n];
    let mut estimate = 0.0f64;
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_iterations {
        let w = m.apply_transpose(&m.apply(&v));
        let lambda = dot(&w, &v);
        let len = norm2(&w);
        if len == 0.0 {
            return Ok(0.0);
        }
        let sigma = libm::sqrt(lambda.max(0.0));
        change = (sigma - estimate).abs() / sigma.max(f64::MIN_POSITIVE);
        estimate = sigma;
        if change < cfg.tolerance {
            return Ok(estimate);
        }
        v = w.iter().map(|x| x / len).collect();
    }
    Err(SpectralError::NonConvergence {
        iterations: cfg.max_iterations,
        estimate,
        last_change: change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_top_eigenvalue() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let top = largest_tridiagonal_eigenvalue(&[2.0, 2.0], &[1.0]);
        assert!((top - 3.0).abs() < 1e-14);
    }

    #[test]
    fn lanczos_handles_identity_breakdown() {
        let n = 5;
        let mut g = vec![0.0; n * n];
        for i in 0..n {
            g[i * n + i] = (i + 1) as f64;
        }
        // all-ones start has components on every eigenvector; also try a
        // matrix with a single nonzero entry far from the start direction
        assert!((lanczos_top_eigenvalue(&g, n) - 5.0).abs() < 1e-12);
        let mut h = vec![0.0; n * n];
        h[3 * n + 3] = 7.0;
        assert!((lanczos_top_eigenvalue(&h, n) - 7.0).abs() < 1e-12);
    }

    #[test]
    fn norm_of_c_power() {
        let q = NumericQ::ratio(1, 2).unwrap();
        let x = Element::monomial(0, 3, 0);
        assert!((op_norm(&x, &q, 50).unwrap() - 1.0).abs() < 1e-12);
        let m = matrix(&x, &q, 50).unwrap();
        let p = power_iteration_norm(&m, PowerIterationConfig::default()).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
    }
}
