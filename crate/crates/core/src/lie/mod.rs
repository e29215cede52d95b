//! Lie structure of H(q): the `L0 + E` splitting, compactness, Calkin
//! images, commutator identities and basis-vector surrogates.

mod calkin;
mod decompose;
mod identities;
mod ket;
mod surrogate;

pub use calkin::{calkin_image, LaurentPoly};
pub use decompose::{decompose, is_compact, is_lie_polynomial, Decomposition};
pub use identities::{
    build_blck_via_ad, build_ckal_via_ad, c_power_from_gamma_sum, gamma, gamma_closed_form, verify_fredholm_relations,
    verify_identity_suite, IdentityId, IdentityReport,
};
pub use ket::{apply_symbolic, KetImage, Radicand, SqrtScalar};
pub use surrogate::{lie_surrogate, surrogate_residual, PowerSide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
