use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{NumericQ, SpectralError};

/// Weights `alpha_n = sqrt({n+1}_q)` of the shift `B`, for `n < len`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSequence {
    pub q: NumericQ,
    pub values: Vec<f64>,
}

impl WeightSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `ln alpha_n`.
    pub fn logs(&self) -> Vec<f64> {
        self.values.iter().map(|&a| libm::log(a)).collect()
    }
}

pub fn weights(q: &NumericQ, len: usize) -> Result<WeightSequence, SpectralError> {
    if len < 1 {
        return Err(SpectralError::DimensionTooSmall { got: len, need: 1 });
    }
    // {n+1} = {n} + q^n, accumulated exactly
    let mut bracket = BigRational::one();
    let mut qn = BigRational::one();
    let mut values = Vec::with_capacity(len);
    for _ in 0..len {
        values.push(libm::sqrt(bracket.to_f64().expect("finite")));
        qn *= q.value();
        bracket += &qn;
    }
    Ok(WeightSequence { q: q.clone(), values })
}
