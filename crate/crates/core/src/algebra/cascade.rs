//! Multiplication without the rewriting engine.
//!
//! Left multiplication by one generator sends a basis word to a closed-form
//! combination of basis words. Folding the letters of the left factor onto
//! the right factor, last letter first, gives the product.

use super::element::Element;
use super::word::{BasisWord, Letter};
use crate::coeff::RatFun;

fn bw(b: u32, k: u32, a: u32) -> BasisWord {
    BasisWord::new(b, k, a).expect("closed forms stay on basis words")
}

/// `letter * B^b C^k A^a` in normal form.
pub fn left_mul_generator(letter: Letter, w: BasisWord) -> Element {
    let (b, k, a) = (w.b(), w.k(), w.a());
    let inv = RatFun::one_minus_q().recip().expect("1 - q is nonzero");
    match letter {
        // C B^b = q^b B^b C
        Letter::C => Element::term(RatFun::q_pow(b as i64), bw(b, k + 1, a)),
        Letter::B if a == 0 => Element::basis(bw(b + 1, k, 0)),
        // B C^k A = q^-k (C^k - C^(k+1))/(1 - q), here with b = 0
        Letter::B => {
            let c = &RatFun::q_pow(-(k as i64)) * &inv;
            let mut e = Element::term(c.clone(), bw(0, k, a - 1));
            e.add_term(-c, bw(0, k + 1, a - 1));
            e
        }
        // A C^k = q^k C^k A
        Letter::A if b == 0 => Element::term(RatFun::q_pow(k as i64), bw(0, k, a + 1)),
        // A B^b C^k = (B^(b-1) C^k - q^b B^(b-1) C^(k+1))/(1 - q), here a = 0
        Letter::A => {
            let mut e = Element::term(inv.clone(), bw(b - 1, k, 0));
            e.add_term(-(&RatFun::q_pow(b as i64) * &inv), bw(b - 1, k + 1, 0));
            e
        }
    }
}

/// `letter * y`.
pub fn left_mul_letter(letter: Letter, y: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in y.terms() {
        for (w2, c2) in left_mul_generator(letter, *w).terms() {
            out.add_term(c * c2, *w2);
        }
    }
    out
}

/// The product `x y`, computed by generator actions alone.
pub fn multiply_cascade(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (wx, cx) in x.terms() {
        let mut acc = y.scale(cx);
        for &l in wx.to_word().letters().iter().rev() {
            acc = left_mul_letter(l, &acc);
        }
        out = &out + &acc;
    }
    out
}
