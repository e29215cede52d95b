//! Words, normal forms and products in H(q).

mod cascade;
mod confluence;
mod element;
mod ops;
mod reduce;
mod rules;
mod word;

pub use cascade::{left_mul_generator, left_mul_letter, multiply_cascade};
pub use confluence::{check_confluence, list_ambiguities, AmbiguityKind, AmbiguityReport, ConfluenceSummary};
pub use element::Element;
pub use ops::{ad_power, adjoint, bracket, element_power};
pub use reduce::{multiply, multiply_with, normalize, normalize_word, reduce, reduce_poly};
pub use rules::{apply_redex, Redex, Rule, RuleSet, RuleSetKind};
pub use word::{BadLetter, BasisWord, Letter, NonBasisWord, Word, WordPoly};
