//! Exact checks of commutator identities in H(q). Each check yields a report
//! carrying both sides and their exact difference instead of failing, so an
//! identity that does not hold is documented rather than hidden.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{ad_power, bracket, multiply, Element};
use crate::coeff::RatFun;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `C^(k+1) A^l = -((-ad C)^k (-ad A)^(l+1))(B) / ((1-q)^l (q^l-1)^k)`
    CPowerAPowerViaAd,
    /// `B^l C^(k+1) = ((ad B)^(l-1) (ad C)^k)([C,B]) / ((q-1)^(k+1) (1-q^(k+1))^(l-1))`
    BPowerCPowerViaAd,
    /// gamma(k) against `q^-k (q-1)^(k+1) {k+1} C^(k+2) - q^(1-k) (q-1)^(k+1) {k} C^(k+1)`
    GammaClosedForm,
    /// `C^(k+2)` against `q^k/{k+1} sum_{i<=k} (q-1)^-(i+1) gamma(i)`
    CPowerFromGammaSum,
    /// `B (1-q) A = I - C`
    FredholmBLeft,
    /// `(1-q) A B = I - q C`
    FredholmALeft,
    /// `B (1-q) A = I - q C`, a deliberately false control
    FredholmPerturbed,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::CPowerAPowerViaAd => "c_power_a_power_via_ad",
            IdentityId::BPowerCPowerViaAd => "b_power_c_power_via_ad",
            IdentityId::GammaClosedForm => "gamma_closed_form",
            IdentityId::CPowerFromGammaSum => "c_power_from_gamma_sum",
            IdentityId::FredholmBLeft => "fredholm_b_left",
            IdentityId::FredholmALeft => "fredholm_a_left",
            IdentityId::FredholmPerturbed => "fredholm_perturbed",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub lhs: Element,
    pub rhs: Element,
    /// `lhs - rhs`
    pub difference: Element,
    /// True iff `difference` is zero.
    pub verdict: bool,
}

impl IdentityReport {
    pub fn new(identity: IdentityId, k: Option<u32>, l: Option<u32>, lhs: Element, rhs: Element) -> Self {
        let difference = &lhs - &rhs;
        IdentityReport {
            identity,
            k,
            l,
            verdict: difference.is_zero(),
            lhs,
            rhs,
            difference,
        }
    }
}

fn q_minus_one() -> RatFun {
    RatFun::q() - RatFun::one()
}

fn pow(x: &RatFun, e: i64) -> RatFun {
    x.pow(e).expect("nonzero base")
}

/// `gamma(k) = ((ad B) (-ad C)^k)([C, A])`, evaluated literally.
pub fn gamma(k: u32) -> Element {
    let c = Element::c();
    let inner = ad_power(&-&c, k, &bracket(&c, &Element::a()));
    bracket(&Element::b(), &inner)
}

/// The closed form claimed for `gamma(k)`.
pub fn gamma_closed_form(k: u32) -> Element {
    let qm1 = pow(&q_minus_one(), k as i64 + 1);
    let hi = &(&RatFun::q_pow(-(k as i64)) * &qm1) * &RatFun::qbracket(k + 1);
    let lo = &(&RatFun::q_pow(1 - k as i64) * &qm1) * &RatFun::qbracket(k);
    &Element::monomial(0, k + 2, 0).scale(&hi) - &Element::monomial(0, k + 1, 0).scale(&lo)
}

/// `q^k/{k+1} sum_{i<=k} (q-1)^-(i+1) gamma(i)` with `gamma` from the
/// definition.
pub fn c_power_from_gamma_sum(k: u32) -> Element {
    let mut sum = Element::zero();
    for i in 0..=k {
        sum = &sum + &gamma(i).scale(&pow(&q_minus_one(), -(i as i64 + 1)));
    }
    let front = RatFun::q_pow(k as i64)
        .checked_div(&RatFun::qbracket(k + 1))
        .expect("{k+1} is nonzero");
    sum.scale(&front)
}

/// `-((-ad C)^k (-ad A)^(l+1))(B) / ((1-q)^l (q^l-1)^k)`, which should equal
/// `C^(k+1) A^l`.
pub fn build_ckal_via_ad(k: u32, l: u32) -> Element {
    let inner = ad_power(&-Element::a(), l + 1, &Element::b());
    let nested = ad_power(&-Element::c(), k, &inner);
    let ql_minus_1 = RatFun::q_pow(l as i64) - RatFun::one();
    let den = pow(&RatFun::one_minus_q(), l as i64) * pow(&ql_minus_1, k as i64);
    nested.scale(&-den.recip().expect("nonzero for l >= 1"))
}

/// `((ad B)^(l-1) (ad C)^k)([C, B]) / ((q-1)^(k+1) (1-q^(k+1))^(l-1))`, which
/// should equal `B^l C^(k+1)`.
pub fn build_blck_via_ad(k: u32, l: u32) -> Element {
    let c = Element::c();
    let inner = ad_power(&c, k, &bracket(&c, &Element::b()));
    let nested = ad_power(&Element::b(), l.saturating_sub(1), &inner);
    let one_minus_qk1 = RatFun::one() - RatFun::q_pow(k as i64 + 1);
    let den = pow(&q_minus_one(), k as i64 + 1) * pow(&one_minus_qk1, l.saturating_sub(1) as i64);
    nested.scale(&den.recip().expect("nonzero"))
}

/// The two Fredholm relations, followed by the perturbed negative control.
pub fn verify_fredholm_relations() -> [IdentityReport; 3] {
    let omq = RatFun::one_minus_q();
    let (a, b, c, i) = (Element::a(), Element::b(), Element::c(), Element::identity());
    let b_left = multiply(&b, &a.scale(&omq));
    let a_left = multiply(&a.scale(&omq), &b);
    [
        IdentityReport::new(IdentityId::FredholmBLeft, None, None, b_left.clone(), &i - &c),
        IdentityReport::new(
            IdentityId::FredholmALeft,
            None,
            None,
            a_left,
            &i - &c.scale(&RatFun::q()),
        ),
        IdentityReport::new(
            IdentityId::FredholmPerturbed,
            None,
            None,
            b_left,
            &i - &c.scale(&RatFun::q()),
        ),
    ]
}

/// Reports for every `k <= kmax`, `1 <= l <= lmax` of the two ad-constructions,
/// and for every `k <= kmax` of the two gamma relations. Sorted by identity,
/// then `k`, then `l`.
pub fn verify_identity_suite(kmax: u32, lmax: u32) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for k in 0..=kmax {
        for l in 1..=lmax {
            out.push(IdentityReport::new(
                IdentityId::CPowerAPowerViaAd,
                Some(k),
                Some(l),
                Element::monomial(0, k + 1, l),
                build_ckal_via_ad(k, l),
            ));
            out.push(IdentityReport::new(
                IdentityId::BPowerCPowerViaAd,
                Some(k),
                Some(l),
                Element::monomial(l, k + 1, 0),
                build_blck_via_ad(k, l),
            ));
        }
        out.push(IdentityReport::new(
            IdentityId::GammaClosedForm,
            Some(k),
            None,
            gamma(k),
            gamma_closed_form(k),
        ));
        out.push(IdentityReport::new(
            IdentityId::CPowerFromGammaSum,
            Some(k),
            None,
            Element::monomial(0, k + 2, 0),
            c_power_from_gamma_sum(k),
        ));
    }
    out.sort_by_key(|r| (r.identity, r.k, r.l));
    out
}
