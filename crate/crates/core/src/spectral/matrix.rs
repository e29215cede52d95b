use alloc::vec;
use alloc::vec::Vec;

use super::numeric::apply_numeric;
use super::{NumericQ, SpectralError};
use crate::algebra::Element;

/// The compression of an element to `span{Phi_0, ..., Phi_(N-1)}`. Column `j`
/// is `x Phi_j` computed in the infinite model with rows `>= N` dropped, so
/// powers of shifts have no boundary artifacts.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedMatrix {
    dim: usize,
    /// Row-major.
    data: Vec<f64>,
    pub source: Element,
    pub q: NumericQ,
}

pub fn matrix(x: &Element, q: &NumericQ, dim: usize) -> Result<TruncatedMatrix, SpectralError> {
    if dim < 1 {
        return Err(SpectralError::DimensionTooSmall { got: dim, need: 1 });
    }
    let mut data = vec![0.0; dim * dim];
    for j in 0..dim {
        for (i, v) in apply_numeric(x, j as u64, q)?.entries() {
            if (i as usize) < dim {
                data[i as usize * dim + j] = v;
            }
        }
    }
    Ok(TruncatedMatrix {
        dim,
        data,
        source: x.clone(),
        q: q.clone(),
    })
}

impl TruncatedMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.dim)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest entrywise difference from `other`, which must have the same
    /// dimension.
    pub fn max_abs_diff(&self, other: &TruncatedMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn transpose(&self) -> TruncatedMatrix {
        let n = self.dim;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        TruncatedMatrix {
            dim: n,
            data,
            source: crate::algebra::adjoint(&self.source),
            q: self.q.clone(),
        }
    }

    /// `M v`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `M^T v`.
    pub fn apply_transpose(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (row, &vi) in self.rows().zip(v) {
            if vi == 0.0 {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o += a * vi;
            }
        }
        out
    }

    /// The Gram matrix `M^T M`, row-major.
    pub fn gram(&self) -> Vec<f64> {
        let n = self.dim;
        let mut g = vec![0.0; n * n];
        for row in self.rows() {
            for (i, &ri) in row.iter().enumerate() {
                if ri == 0.0 {
                    continue;
                }
                for (j, &rj) in row.iter().enumerate() {
                    g[i * n + j] += ri * rj;
                }
            }
        }
        g
    }
}
