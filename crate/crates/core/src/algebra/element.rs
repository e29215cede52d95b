use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::word::{BasisWord, WordPoly};
use crate::coeff::RatFun;

/// A member of H(q) in normal form: a finite linear combination of basis
/// words with rational-function coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<BasisWord, RatFun>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::basis(BasisWord::IDENTITY)
    }

    pub fn a() -> Self {
        Self::basis(BasisWord::new(0, 0, 1).unwrap())
    }

    pub fn b() -> Self {
        Self::basis(BasisWord::new(1, 0, 0).unwrap())
    }

    pub fn c() -> Self {
        Self::basis(BasisWord::new(0, 1, 0).unwrap())
    }

    /// `B^b C^k A^a`; panics if both `b` and `a` are positive.
    pub fn monomial(b: u32, k: u32, a: u32) -> Self {
        Self::basis(BasisWord::new(b, k, a).expect("b * a must be zero"))
    }

    pub fn basis(w: BasisWord) -> Self {
        Self::term(RatFun::one(), w)
    }

    pub fn scalar(c: RatFun) -> Self {
        Self::term(c, BasisWord::IDENTITY)
    }

    pub fn term(c: RatFun, w: BasisWord) -> Self {
        let mut e = Self::zero();
        e.add_term(c, w);
        e
    }

    pub fn add_term(&mut self, c: RatFun, w: BasisWord) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(b, k, a)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &RatFun)> {
        self.terms.iter()
    }

    /// Terms in graded order (total degree, then `(b, k, a)`).
    pub fn graded_terms(&self) -> Vec<(&BasisWord, &RatFun)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(w, _)| w.graded_key());
        v
    }

    pub fn coeff(&self, w: &BasisWord) -> RatFun {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFun) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, x)| (*w, x * c)).collect(),
        }
    }

    /// Keeps only the terms whose basis word satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&BasisWord) -> bool) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    pub fn to_word_poly(&self) -> WordPoly {
        let mut p = WordPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(c.clone(), w.to_word());
        }
        p
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form `(c1)*W1 + (c2)*W2 + ...` in graded order; `0` for zero.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.graded_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(c.clone(), *w);
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(-c, *w);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Algebra product, computed by the rewriting engine with the completed rules.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        super::reduce::multiply(self, rhs)
    }
}

impl Mul<&RatFun> for &Element {
    type Output = Element;
    fn mul(self, rhs: &RatFun) -> Element {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl FromIterator<(BasisWord, RatFun)> for Element {
    fn from_iter<T: IntoIterator<Item = (BasisWord, RatFun)>>(iter: T) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(c, w);
        }
        e
    }
}
