#![allow(dead_code)]

use proptest::prelude::*;
use qheis::algebra::{BasisWord, Element};
use qheis::coeff::RatFun;

/// Small integers, optionally divided by `1 - q`.
pub fn coeff() -> impl Strategy<Value = RatFun> {
    (-3i64..=3, 0u32..=1).prop_map(|(n, pole)| {
        let c = RatFun::from_int(if n == 0 { 1 } else { n });
        if pole == 1 {
            c.checked_div(&RatFun::one_minus_q()).unwrap()
        } else {
            c
        }
    })
}

/// Basis words with every exponent at most 3.
pub fn basis_word() -> impl Strategy<Value = BasisWord> {
    prop::sample::select(BasisWord::all_up_to(3))
}

/// Elements with up to four terms.
pub fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((coeff(), basis_word()), 0..=4)
        .prop_map(|terms| terms.into_iter().map(|(c, w)| (w, c)).collect())
}

/// Like [`element`] but with total degree at most 3, for products of three.
pub fn small_element() -> impl Strategy<Value = Element> {
    let words: Vec<BasisWord> = BasisWord::all_up_to(3)
        .into_iter()
        .filter(|w| w.degree() <= 3)
        .collect();
    prop::collection::vec((coeff(), prop::sample::select(words)), 0..=3)
        .prop_map(|terms| terms.into_iter().map(|(c, w)| (w, c)).collect())
}
