//! Overlap and inclusion ambiguities of a rule set, and their resolution.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::reduce::reduce_poly;
use super::rules::{Rule, RuleSet, RuleSetKind};
use super::word::{Word, WordPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AmbiguityKind {
    /// `W = V1 V2 V3` with `V1 V2` and `V2 V3` both left sides.
    Overlap,
    /// `W` is a left side containing another left side as a proper subword.
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityReport {
    pub word: Word,
    pub kind: AmbiguityKind,
    /// The two rules whose left sides compete, in word order.
    pub rules: (Rule, Rule),
    /// Distinct irreducible results reached from the competing rewrites.
    pub outcomes: Vec<WordPoly>,
    pub resolvable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceSummary {
    pub rules: RuleSetKind,
    pub max_len: usize,
    pub reports: Vec<AmbiguityReport>,
}

impl ConfluenceSummary {
    pub fn unresolvable(&self) -> impl Iterator<Item = &AmbiguityReport> {
        self.reports.iter().filter(|r| !r.resolvable)
    }

    pub fn is_confluent(&self) -> bool {
        self.unresolvable().next().is_none()
    }
}

fn resolve(
    word: Word,
    kind: AmbiguityKind,
    rules: (Rule, Rule),
    routes: [WordPoly; 2],
    rs: &RuleSet,
) -> AmbiguityReport {
    let mut outcomes: Vec<WordPoly> = Vec::new();
    for route in &routes {
        let nf = reduce_poly(route, rs);
        if !outcomes.contains(&nf) {
            outcomes.push(nf);
        }
    }
    AmbiguityReport {
        word,
        kind,
        rules,
        resolvable: outcomes.len() == 1,
        outcomes,
    }
}

fn splice(prefix: &[super::word::Letter], mid: &WordPoly, suffix: &[super::word::Letter]) -> WordPoly {
    let (pre, suf) = (Word::new(prefix.to_vec()), Word::new(suffix.to_vec()));
    let mut out = WordPoly::zero();
    for (w, c) in mid.terms() {
        out.add_term(c.clone(), pre.concat(w).concat(&suf));
    }
    out
}

/// All overlap and inclusion ambiguities among left-side instances whose
/// combined word has length at most `max_len`, each resolved by fully
/// reducing both one-step rewrites. Reports are sorted by word.
pub fn list_ambiguities(rs: &RuleSet, max_len: usize) -> Vec<AmbiguityReport> {
    let instances: Vec<(Rule, Word)> = rs
        .rules()
        .iter()
        .flat_map(|&r| r.lhs_instances(max_len).into_iter().map(move |w| (r, w)))
        .collect();
    let mut found: BTreeMap<(Word, AmbiguityKind), AmbiguityReport> = BTreeMap::new();

    for (ri, wi) in &instances {
        let li = wi.letters();
        for (rj, wj) in &instances {
            let lj = wj.letters();
            // overlaps: a proper suffix of wi equals a proper prefix of wj
            for o in 1..li.len().min(lj.len()) {
                if li.len() + lj.len() - o > max_len || li[li.len() - o..] != lj[..o] {
                    continue;
                }
                let word = Word::new(li.iter().chain(&lj[o..]).copied().collect());
                let v1 = &li[..li.len() - o];
                let v3 = &lj[o..];
                let left = splice(&[], &ri.rhs(li), v3);
                let right = splice(v1, &rj.rhs(lj), &[]);
                found
                    .entry((word.clone(), AmbiguityKind::Overlap))
                    .or_insert_with(|| resolve(word, AmbiguityKind::Overlap, (*ri, *rj), [left, right], rs));
            }
            // inclusions: wi sits strictly inside the distinct left side wj
            if wi == wj || li.len() > lj.len() {
                continue;
            }
            for pos in 0..=lj.len() - li.len() {
                if lj[pos..pos + li.len()] != *li {
                    continue;
                }
                let inner = splice(&lj[..pos], &ri.rhs(li), &lj[pos + li.len()..]);
                let whole = rj.rhs(lj);
                found
                    .entry((wj.clone(), AmbiguityKind::Inclusion))
                    .or_insert_with(|| resolve(wj.clone(), AmbiguityKind::Inclusion, (*ri, *rj), [inner, whole], rs));
            }
        }
    }
    found.into_values().collect()
}

/// Aggregates [`list_ambiguities`].
pub fn check_confluence(rs: &RuleSet, max_len: usize) -> ConfluenceSummary {
    ConfluenceSummary {
        rules: rs.kind(),
        max_len,
        reports: list_ambiguities(rs, max_len),
    }
}
