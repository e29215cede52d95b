use alloc::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{NumericQ, SpectralError};
use crate::algebra::{Element, Letter};

/// A finitely supported vector in `l2(N)`. Entries below `1e-300` in
/// magnitude are not stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseVec {
    entries: BTreeMap<u64, f64>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add(&mut self, index: u64, v: f64) {
        let e = self.entries.entry(index).or_insert(0.0);
        *e += v;
        if e.abs() < 1e-300 {
            self.entries.remove(&index);
        }
    }

    pub fn get(&self, index: u64) -> f64 {
        self.entries.get(&index).copied().unwrap_or(0.0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.entries.values().map(|v| v * v).sum())
    }
}

/// `x Phi_n` at `q0`. Each basis word is applied letter by letter to
/// `Phi_n` (rightmost letter first) with exact rational bookkeeping of the
/// diagonal factor and of the product under the square root; the square root
/// and the conversion to `f64` happen once per term.
pub fn apply_numeric(x: &Element, n: u64, q: &NumericQ) -> Result<SparseVec, SpectralError> {
    let mut out = SparseVec::zero();
    'terms: for (w, c) in x.terms() {
        let mut index = n;
        let mut coeff = c.eval(q.value())?;
        let mut radicand = BigRational::one();
        for &letter in w.to_word().letters().iter().rev() {
            match letter {
                Letter::A => {
                    if index == 0 {
                        continue 'terms;
                    }
                    radicand *= q.qbracket(index);
                    index -= 1;
                }
                Letter::B => {
                    radicand *= q.qbracket(index + 1);
                    index += 1;
                }
                Letter::C => coeff *= num_traits::pow(q.value().clone(), index as usize),
            }
        }
        let value = coeff.to_f64().expect("finite") * libm::sqrt(radicand.to_f64().expect("finite"));
        out.add(index, value);
    }
    Ok(out)
}
