//! The reduction system for H(q) over the alphabet `{A, B, C}`.
//!
//! | rule | left side          | right side                                  |
//! |------|--------------------|---------------------------------------------|
//! | R1   | `BA`               | `(I - C)/(1 - q)`                           |
//! | R2   | `AB`               | `(I - qC)/(1 - q)`                          |
//! | R3   | `AC`               | `q CA`                                      |
//! | R4   | `CB`               | `q BC`                                      |
//! | R5   | `B C^j A`, `j >= 1`| `q^-j (C^j - C^(j+1))/(1 - q)`              |
//!
//! R1..R4 alone leave `B C^j A` irreducible even though it lies in the span
//! of the basis, so normal forms under them are not unique. R5 closes that
//! gap; with it the irreducible words are exactly `B^b C^k A^a`, `b a = 0`.
//!
//! Termination: R1, R2 and R5 strictly lower the number of `A`/`B` letters.
//! R3 and R4 keep the letter counts and strictly lower the number of
//! inversions (an `A` before a `C`, or a `C` before a `B`). The pair
//! (A/B letter count, inversion count) ordered lexicographically is
//! well-founded and decreases with every step.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::word::{Letter, Word, WordPoly};
use crate::coeff::RatFun;

use Letter::{A, B, C};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `BA -> (I - C)/(1 - q)`
    R1,
    /// `AB -> (I - qC)/(1 - q)`
    R2,
    /// `AC -> q CA`
    R3,
    /// `CB -> q BC`
    R4,
    /// `B C^j A -> q^-j (C^j - C^(j+1))/(1 - q)` for `j >= 1`
    R5,
}

impl Rule {
    /// Length of the match if the left side occurs at the start of `s`.
    pub fn match_len(self, s: &[Letter]) -> Option<usize> {
        let pair = |x, y| (s.len() >= 2 && s[0] == x && s[1] == y).then_some(2);
        match self {
            Rule::R1 => pair(B, A),
            Rule::R2 => pair(A, B),
            Rule::R3 => pair(A, C),
            Rule::R4 => pair(C, B),
            Rule::R5 => {
                if s.first() != Some(&B) {
                    return None;
                }
                let j = s[1..].iter().take_while(|&&l| l == C).count();
                (j >= 1 && s.get(1 + j) == Some(&A)).then_some(j + 2)
            }
        }
    }

    /// Right side for a matched left-side instance.
    pub fn rhs(self, lhs: &[Letter]) -> WordPoly {
        let inv = RatFun::one_minus_q().recip().expect("1 - q is nonzero");
        let w = |v: Vec<Letter>| Word::new(v);
        let mut p = WordPoly::zero();
        match self {
            Rule::R1 => {
                p.add_term(inv.clone(), Word::empty());
                p.add_term(-&inv, w(vec![C]));
            }
            Rule::R2 => {
                p.add_term(inv.clone(), Word::empty());
                p.add_term(-(&RatFun::q() * &inv), w(vec![C]));
            }
            Rule::R3 => p.add_term(RatFun::q(), w(vec![C, A])),
            Rule::R4 => p.add_term(RatFun::q(), w(vec![B, C])),
            Rule::R5 => {
                let j = lhs.len() - 2;
                let c = &RatFun::q_pow(-(j as i64)) * &inv;
                p.add_term(c.clone(), w(vec![C; j]));
                p.add_term(-c, w(vec![C; j + 1]));
            }
        }
        p
    }

    /// Every left-side instance of length at most `max_len`.
    pub fn lhs_instances(self, max_len: usize) -> Vec<Word> {
        let fixed = |v: Vec<Letter>| {
            if v.len() <= max_len {
                vec![Word::new(v)]
            } else {
                Vec::new()
            }
        };
        match self {
            Rule::R1 => fixed(vec![B, A]),
            Rule::R2 => fixed(vec![A, B]),
            Rule::R3 => fixed(vec![A, C]),
            Rule::R4 => fixed(vec![C, B]),
            Rule::R5 => (1..=max_len.saturating_sub(2))
                .map(|j| {
                    let mut v = vec![B];
                    v.extend(core::iter::repeat_n(C, j));
                    v.push(A);
                    Word::new(v)
                })
                .collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSetKind {
    /// R1..R4 only.
    Printed,
    /// R1..R5; the default everywhere outside the confluence demonstration.
    Completed,
}

impl fmt::Display for RuleSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSetKind::Printed => "printed",
            RuleSetKind::Completed => "completed",
        })
    }
}

/// An ordered rule list. At each position rules are tried in list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    kind: RuleSetKind,
    rules: Vec<Rule>,
}

/// A located rule application inside a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub pos: usize,
    pub len: usize,
    pub rule: Rule,
}

impl RuleSet {
    pub fn printed() -> Self {
        RuleSet {
            kind: RuleSetKind::Printed,
            rules: vec![Rule::R1, Rule::R2, Rule::R3, Rule::R4],
        }
    }

    /// Longest pattern first.
    pub fn completed() -> Self {
        RuleSet {
            kind: RuleSetKind::Completed,
            rules: vec![Rule::R5, Rule::R1, Rule::R2, Rule::R3, Rule::R4],
        }
    }

    pub fn of(kind: RuleSetKind) -> Self {
        match kind {
            RuleSetKind::Printed => Self::printed(),
            RuleSetKind::Completed => Self::completed(),
        }
    }

    pub fn kind(&self) -> RuleSetKind {
        self.kind
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The leftmost redex, ties at one position broken by rule order.
    pub fn find_redex(&self, w: &[Letter]) -> Option<Redex> {
        (0..w.len()).find_map(|pos| {
            self.rules
                .iter()
                .find_map(|&rule| rule.match_len(&w[pos..]).map(|len| Redex { pos, len, rule }))
        })
    }

    /// Every redex in the word, in position then rule order.
    pub fn all_redexes(&self, w: &[Letter]) -> Vec<Redex> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &rule in &self.rules {
                if let Some(len) = rule.match_len(&w[pos..]) {
                    out.push(Redex { pos, len, rule });
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w.letters()).is_none()
    }
}

/// Replaces the redex inside `w` by the rule's right side.
pub fn apply_redex(w: &Word, r: Redex) -> WordPoly {
    let letters = w.letters();
    let prefix = Word::new(letters[..r.pos].to_vec());
    let suffix = Word::new(letters[r.pos + r.len..].to_vec());
    let mut out = WordPoly::zero();
    for (mid, c) in r.rule.rhs(&letters[r.pos..r.pos + r.len]).terms() {
        out.add_term(c.clone(), prefix.concat(mid).concat(&suffix));
    }
    out
}
