use crate::algebra::{BasisWord, Element};
use crate::coeff::RatFun;

/// Splits an element along `Span{A, B} + L0^(2) + E`, where `L0^(2)` is
/// spanned by the basis words containing `C` and `E` by `I` and the pure
/// powers `A^l`, `B^l` with `l >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Coefficients of `A` and `B`.
    pub linear_ab: (RatFun, RatFun),
    /// Terms with `k >= 1`.
    pub derived: Element,
    /// `I` and pure powers of degree at least two.
    pub e_part: Element,
}

impl Decomposition {
    /// Reassembles the original element.
    pub fn recombine(&self) -> Element {
        let mut x = &self.derived + &self.e_part;
        x.add_term(self.linear_ab.0.clone(), BasisWord::new(0, 0, 1).unwrap());
        x.add_term(self.linear_ab.1.clone(), BasisWord::new(1, 0, 0).unwrap());
        x
    }

    /// The `L0(q)` component, `linear_ab` plus `derived`.
    pub fn lie_part(&self) -> Element {
        &self.recombine() - &self.e_part
    }
}

fn is_linear(w: &BasisWord) -> bool {
    w.k() == 0 && w.degree() == 1
}

pub fn decompose(x: &Element) -> Decomposition {
    Decomposition {
        linear_ab: (
            x.coeff(&BasisWord::new(0, 0, 1).unwrap()),
            x.coeff(&BasisWord::new(1, 0, 0).unwrap()),
        ),
        derived: x.filter(|w| w.k() >= 1),
        e_part: x.filter(|w| w.k() == 0 && !is_linear(w)),
    }
}

/// Membership in the Lie subalgebra generated by `A` and `B`, which is the
/// span of `A`, `B` and the words containing `C`.
pub fn is_lie_polynomial(x: &Element) -> bool {
    decompose(x).e_part.is_zero()
}

/// Compact elements are exactly those supported on words containing `C`.
pub fn is_compact(x: &Element) -> bool {
    x.terms().all(|(w, _)| w.k() >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{multiply, Element};

    #[test]
    fn sorts_terms_by_shape() {
        let x = &(&Element::a() + &Element::scalar(RatFun::from_int(2))) + &Element::monomial(0, 2, 3);
        let d = decompose(&x);
        assert_eq!(d.linear_ab, (RatFun::one(), RatFun::zero()));
        assert_eq!(d.derived, Element::monomial(0, 2, 3));
        assert_eq!(d.e_part, Element::scalar(RatFun::from_int(2)));
        assert_eq!(d.recombine(), x);
    }

    #[test]
    fn pure_power_is_e_part() {
        let d = decompose(&Element::monomial(2, 0, 0));
        assert_eq!(d.linear_ab, (RatFun::zero(), RatFun::zero()));
        assert!(d.derived.is_zero());
        assert_eq!(d.e_part, Element::monomial(2, 0, 0));
    }

    #[test]
    fn ab_splits_into_scalar_and_c() {
        let d = decompose(&multiply(&Element::a(), &Element::b()));
        let inv = RatFun::one_minus_q().recip().unwrap();
        assert_eq!(d.derived, Element::c().scale(&-(&RatFun::q() * &inv)));
        assert_eq!(d.e_part, Element::scalar(inv));
    }

    #[test]
    fn lie_and_compact_membership() {
        assert!(is_lie_polynomial(&Element::monomial(0, 3, 2)));
        assert!(!is_lie_polynomial(&Element::identity()));
        assert!(is_compact(&Element::monomial(0, 3, 0)));
        assert!(!is_compact(&Element::b()));
        let noncompact = &Element::b() + &Element::monomial(4, 0, 0).scale(&RatFun::ratio(1, 2));
        assert!(!is_compact(&noncompact));
    }
}
