use super::element::Element;
use super::reduce::multiply;
use super::word::BasisWord;

/// The commutator `[x, y] = xy - yx`.
pub fn bracket(x: &Element, y: &Element) -> Element {
    &multiply(x, y) - &multiply(y, x)
}

/// `(ad x)^m (y)`; `m = 0` returns `y`.
pub fn ad_power(x: &Element, m: u32, y: &Element) -> Element {
    (0..m).fold(y.clone(), |acc, _| bracket(x, &acc))
}

/// The involution fixing coefficients with `A <-> B`, `C -> C`, reversing
/// products: `(B^b C^k A^a)* = B^a C^k A^b`.
pub fn adjoint(x: &Element) -> Element {
    x.terms()
        .map(|(w, c)| {
            let flipped = BasisWord::new(w.a(), w.k(), w.b()).expect("b * a = 0 is symmetric");
            (flipped, c.clone())
        })
        .collect()
}

/// `x^m`, with `x^0 = I`.
pub fn element_power(x: &Element, m: u32) -> Element {
    (0..m).fold(Element::identity(), |acc, _| multiply(&acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatFun;

    fn q_minus_1() -> RatFun {
        RatFun::q() - RatFun::one()
    }

    #[test]
    fn bracket_of_generators() {
        assert_eq!(bracket(&Element::a(), &Element::b()), Element::c());
        assert_eq!(
            bracket(&Element::a(), &Element::c()),
            Element::monomial(0, 1, 1).scale(&q_minus_1())
        );
        assert_eq!(
            bracket(&Element::c(), &Element::b()),
            Element::monomial(1, 1, 0).scale(&q_minus_1())
        );
    }

    #[test]
    fn ad_powers() {
        let (a, b) = (Element::a(), Element::b());
        assert_eq!(ad_power(&a, 0, &b), b);
        assert_eq!(ad_power(&a, 1, &b), Element::c());
        assert_eq!(ad_power(&a, 2, &b), Element::monomial(0, 1, 1).scale(&q_minus_1()));
    }

    #[test]
    fn adjoint_swaps_a_and_b() {
        assert_eq!(adjoint(&Element::a()), Element::b());
        assert_eq!(adjoint(&Element::monomial(0, 3, 0)), Element::monomial(0, 3, 0));
        assert_eq!(adjoint(&Element::monomial(0, 1, 1)), Element::monomial(1, 1, 0));
    }

    #[test]
    fn powers() {
        assert_eq!(element_power(&Element::c(), 3), Element::monomial(0, 3, 0));
        assert_eq!(element_power(&(&Element::a() + &Element::b()), 0), Element::identity());
        // A^2 B = (A - q^2 CA)/(1 - q)
        let a2b = multiply(&element_power(&Element::a(), 2), &Element::b());
        let inv = RatFun::one_minus_q().recip().unwrap();
        let expect = (&Element::a() - &Element::monomial(0, 1, 1).scale(&RatFun::q_pow(2))).scale(&inv);
        assert_eq!(a2b, expect);
    }
}
