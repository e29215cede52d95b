use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::Element;
use crate::coeff::{CoeffError, RatFun};

/// A square-free product of q-brackets `{m}_q` under a square root, stored as
/// the sorted list of distinct indices `m >= 2` (`{1}_q = 1` is dropped).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Radicand(Vec<u32>);

impl Radicand {
    /// Canonicalizes a multiset of bracket indices. Paired indices leave the
    /// root and are returned as the rational factor `prod {m}_q`.
    pub fn from_indices(mut idx: Vec<u32>) -> (Radicand, RatFun) {
        idx.retain(|&m| m != 1);
        idx.sort_unstable();
        let mut kept = Vec::new();
        let mut outside = RatFun::one();
        let mut i = 0;
        while i < idx.len() {
            if i + 1 < idx.len() && idx[i] == idx[i + 1] {
                outside = &outside * &RatFun::qbracket(idx[i]);
                i += 2;
            } else {
                kept.push(idx[i]);
                i += 1;
            }
        }
        (Radicand(kept), outside)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// `prod {m}_q` as a rational function.
    pub fn expand(&self) -> RatFun {
        self.0.iter().fold(RatFun::one(), |acc, &m| &acc * &RatFun::qbracket(m))
    }

    /// Exact value of the product under the root at `q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        self.0
            .iter()
            .try_fold(BigRational::one(), |acc, &m| Ok(acc * RatFun::qbracket(m).eval(q0)?))
    }
}

impl fmt::Debug for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `coeff * sqrt(prod_{m in radicand} {m}_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtScalar {
    pub coeff: RatFun,
    pub radicand: Radicand,
}

impl SqrtScalar {
    /// Numeric value at `q0`, from exact rationals with one square root.
    pub fn to_f64(&self, q0: &BigRational) -> Result<f64, CoeffError> {
        use num_traits::ToPrimitive;
        let c = self.coeff.eval(q0)?.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.eval(q0)?.to_f64().unwrap_or(f64::NAN);
        Ok(c * libm::sqrt(r))
    }
}

impl fmt::Display for SqrtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        if !self.radicand.is_trivial() {
            f.write_str("*sqrt(")?;
            for (i, m) in self.radicand.0.iter().enumerate() {
                if i > 0 {
                    f.write_str("*")?;
                }
                write!(f, "{{{m}}}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The image `x Phi_n` as a combination of basis vectors whose coefficients
/// are sums of [`SqrtScalar`]s, grouped by radicand.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct KetImage {
    entries: BTreeMap<u64, BTreeMap<Radicand, RatFun>>,
}

impl KetImage {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Zero iff every radicand group has a vanishing coefficient.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, target: u64, c: RatFun, radicand: Radicand) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(target).or_default();
        let sum = match slot.remove(&radicand) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            slot.insert(radicand, sum);
        }
        if slot.is_empty() {
            self.entries.remove(&target);
        }
    }

    /// `(target, scalars)` pairs in increasing target order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, Vec<SqrtScalar>)> + '_ {
        self.entries.iter().map(|(t, group)| {
            let v = group
                .iter()
                .map(|(r, c)| SqrtScalar {
                    coeff: c.clone(),
                    radicand: r.clone(),
                })
                .collect();
            (*t, v)
        })
    }

    /// Numeric coefficients at `q0`, one per target.
    pub fn to_f64(&self, q0: &BigRational) -> Result<BTreeMap<u64, f64>, CoeffError> {
        let mut out = BTreeMap::new();
        for (t, scalars) in self.entries() {
            let mut s = 0.0;
            for sc in &scalars {
                s += sc.to_f64(q0)?;
            }
            out.insert(t, s);
        }
        Ok(out)
    }
}

impl fmt::Debug for KetImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KetImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, scalars)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str("(")?;
            for (j, s) in scalars.iter().enumerate() {
                if j > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")*Phi_{t}")?;
        }
        Ok(())
    }
}

/// `x Phi_n` computed symbolically. `B^b C^k A^a` sends `Phi_n` to zero when
/// `n < a`, otherwise to
/// `q^(k(n-a)) sqrt(prod_{i<a} {n-i} prod_{j=1..b} {n-a+j}) Phi_(n-a+b)`.
pub fn apply_symbolic(x: &Element, n: u64) -> KetImage {
    let mut out = KetImage::zero();
    for (w, c) in x.terms() {
        let (b, k, a) = (w.b() as u64, w.k() as u64, w.a() as u64);
        if n < a {
            continue;
        }
        let base = n - a;
        let mut idx: Vec<u32> = (0..a).map(|i| (n - i) as u32).collect();
        idx.extend((1..=b).map(|j| (base + j) as u32));
        let (radicand, outside) = Radicand::from_indices(idx);
        let diag = RatFun::q_pow((k * base) as i64);
        out.add(base + b, &(c * &diag) * &outside, radicand);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_power_is_diagonal() {
        let img = apply_symbolic(&Element::monomial(0, 2, 0), 3);
        let entries: Vec<_> = img.entries().collect();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].0, 3);
        assert_eq!(entries[0].1[0].coeff, RatFun::q_pow(6));
        assert!(entries[0].1[0].radicand.is_trivial());
    }

    #[test]
    fn a_kills_vacuum() {
        assert!(apply_symbolic(&Element::a(), 0).is_zero());
    }

    #[test]
    fn b_squared_on_phi_1() {
        let img = apply_symbolic(&Element::monomial(2, 0, 0), 1);
        let entries: Vec<_> = img.entries().collect();
        assert_eq!(entries[0].0, 3);
        assert_eq!(entries[0].1[0].radicand.indices(), &[2, 3]);
        assert!(entries[0].1[0].coeff.is_one());
    }

    #[test]
    fn paired_brackets_leave_the_root() {
        // A B Phi_n = {n+1} Phi_n
        let x = crate::algebra::multiply(&Element::a(), &Element::b());
        let img = apply_symbolic(&x, 2);
        let entries: Vec<_> = img.entries().collect();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].1.len(), 1);
        assert_eq!(entries[0].1[0].coeff, RatFun::qbracket(3));
    }
}
