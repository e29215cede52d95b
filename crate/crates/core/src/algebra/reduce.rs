use super::element::Element;
use super::rules::{apply_redex, RuleSet};
use super::word::{NonBasisWord, Word, WordPoly};

/// Rewrites `w` until no left side of `rules` occurs, always firing the
/// leftmost redex. The result may hold non-basis words when `rules` is the
/// printed set.
pub fn reduce(w: &Word, rules: &RuleSet) -> WordPoly {
    reduce_poly(&WordPoly::word(w.clone()), rules)
}

/// [`reduce`] extended linearly.
pub fn reduce_poly(p: &WordPoly, rules: &RuleSet) -> WordPoly {
    let mut pending = p.clone();
    let mut done = WordPoly::zero();
    while let Some((w, c)) = pending.pop_last() {
        match rules.find_redex(w.letters()) {
            None => done.add_term(c, w),
            Some(r) => pending.add_poly(&apply_redex(&w, r), &c),
        }
    }
    done
}

/// Normal form under the completed rules.
pub fn normalize(p: &WordPoly) -> Element {
    reduce_poly(p, &RuleSet::completed())
        .to_element()
        .expect("completed rules only leave basis words")
}

/// Normal form of a single word.
pub fn normalize_word(w: &Word) -> Element {
    normalize(&WordPoly::word(w.clone()))
}

/// The product `x y` in normal form.
pub fn multiply(x: &Element, y: &Element) -> Element {
    normalize(&concat_products(x, y))
}

/// The product `x y` reduced with an arbitrary rule set. With the printed
/// rules the result can get stuck on a non-basis word, which is reported.
pub fn multiply_with(x: &Element, y: &Element, rules: &RuleSet) -> Result<Element, NonBasisWord> {
    reduce_poly(&concat_products(x, y), rules).to_element()
}

fn concat_products(x: &Element, y: &Element) -> WordPoly {
    let mut p = WordPoly::zero();
    for (wx, cx) in x.terms() {
        let wx = wx.to_word();
        for (wy, cy) in y.terms() {
            p.add_term(cx * cy, wx.concat(&wy.to_word()));
        }
    }
    p
}
