use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::coeff::RatFun;

/// A generator letter. `C` stands for the commutator `AB - BA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
        }
    }
}

/// A free word over `{A, B, C}`; the empty word is the identity `I`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reads the word as `B^b C^k A^a` if it has that shape.
    pub fn as_basis(&self) -> Option<BasisWord> {
        let count = |from: usize, l: Letter| self.0[from..].iter().take_while(|&&x| x == l).count();
        let b = count(0, Letter::B);
        let k = count(b, Letter::C);
        let a = count(b + k, Letter::A);
        if b + k + a != self.len() {
            return None;
        }
        BasisWord::new(b as u32, k as u32, a as u32)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid letter {0:?} in word")]
pub struct BadLetter(pub char);

/// Parses plain letter strings such as `"BCA"`; `"I"` and `""` are the
/// empty word.
impl FromStr for Word {
    type Err = BadLetter;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "I" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'A' => Ok(Letter::A),
                'B' => Ok(Letter::B),
                'C' => Ok(Letter::C),
                other => Err(BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// The monomial `B^b C^k A^a` with `b * a == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisWord {
    b: u32,
    k: u32,
    a: u32,
}

impl BasisWord {
    pub const IDENTITY: BasisWord = BasisWord { b: 0, k: 0, a: 0 };

    /// `None` when both `b` and `a` are positive.
    pub fn new(b: u32, k: u32, a: u32) -> Option<Self> {
        (b == 0 || a == 0).then_some(BasisWord { b, k, a })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn degree(&self) -> u32 {
        self.b + self.k + self.a
    }

    pub fn to_word(&self) -> Word {
        let mut v = Vec::with_capacity(self.degree() as usize);
        v.extend(core::iter::repeat_n(Letter::B, self.b as usize));
        v.extend(core::iter::repeat_n(Letter::C, self.k as usize));
        v.extend(core::iter::repeat_n(Letter::A, self.a as usize));
        Word(v)
    }

    /// All basis words with every exponent at most `max`.
    pub fn all_up_to(max: u32) -> Vec<BasisWord> {
        let mut out = Vec::new();
        for k in 0..=max {
            out.push(BasisWord { b: 0, k, a: 0 });
            for e in 1..=max {
                out.push(BasisWord { b: e, k, a: 0 });
                out.push(BasisWord { b: 0, k, a: e });
            }
        }
        out.sort();
        out
    }

    /// Sort key for printing: total degree first, then `(b, k, a)`.
    pub fn graded_key(&self) -> (u32, u32, u32, u32) {
        (self.degree(), self.b, self.k, self.a)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, first: &mut bool, sym: char, e: u32) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{sym}")
    } else {
        write!(f, "{sym}^{e}")
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("I");
        }
        let mut first = true;
        write_power(f, &mut first, 'B', self.b)?;
        write_power(f, &mut first, 'C', self.k)?;
        write_power(f, &mut first, 'A', self.a)
    }
}

/// A linear combination of arbitrary words, the working representation of
/// the rewriting engine.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordPoly {
    terms: BTreeMap<Word, RatFun>,
}

impl WordPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFun::one(), w)
    }

    pub fn term(c: RatFun, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(c, w);
        p
    }

    pub fn add_term(&mut self, c: RatFun, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_poly(&mut self, other: &WordPoly, scale: &RatFun) {
        for (w, c) in &other.terms {
            self.add_term(c * scale, w.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFun)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn pop_last(&mut self) -> Option<(Word, RatFun)> {
        self.terms.pop_last()
    }

    /// Words in the support that are not of the form `B^b C^k A^a`, `b a = 0`.
    pub fn non_basis_words(&self) -> Vec<Word> {
        self.terms.keys().filter(|w| w.as_basis().is_none()).cloned().collect()
    }

    /// Converts to an [`Element`](super::Element) when every word is a basis
    /// word, otherwise reports the first offending word.
    pub fn to_element(&self) -> Result<super::Element, NonBasisWord> {
        let mut out = super::Element::zero();
        for (w, c) in &self.terms {
            let bw = w.as_basis().ok_or_else(|| NonBasisWord(w.clone()))?;
            out.add_term(c.clone(), bw);
        }
        Ok(out)
    }
}

impl fmt::Debug for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*")?;
            if w.is_empty() {
                f.write_str("I")?;
            } else {
                for (j, l) in w.letters().iter().enumerate() {
                    if j > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{}", l.as_char())?;
                }
            }
        }
        Ok(())
    }
}

/// An irreducible word that is not a basis monomial; only the printed rule
/// set produces these.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("irreducible word {0} is not a basis monomial")]
pub struct NonBasisWord(pub Word);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_shape_detection() {
        let w: Word = "BBCA".parse().unwrap();
        assert_eq!(w.as_basis(), None);
        let w: Word = "BBCC".parse().unwrap();
        assert_eq!(w.as_basis(), BasisWord::new(2, 2, 0));
        let w: Word = "CAC".parse().unwrap();
        assert_eq!(w.as_basis(), None);
        assert_eq!(Word::empty().as_basis(), Some(BasisWord::IDENTITY));
    }

    #[test]
    fn basis_word_rejects_mixed_powers() {
        assert!(BasisWord::new(1, 0, 1).is_none());
        assert!(BasisWord::new(1, 3, 0).is_some());
    }

    #[test]
    fn basis_enumeration_count() {
        // 4 values of k times {I, B, B^2, B^3, A, A^2, A^3}
        assert_eq!(BasisWord::all_up_to(3).len(), 28);
    }

    #[test]
    fn display_forms() {
        assert_eq!(BasisWord::new(2, 1, 0).unwrap().to_string(), "B^2*C");
        assert_eq!(BasisWord::new(0, 0, 3).unwrap().to_string(), "A^3");
        assert_eq!(BasisWord::IDENTITY.to_string(), "I");
        assert_eq!("BCA".parse::<Word>().unwrap().to_string(), "BCA");
        assert!("BXA".parse::<Word>().is_err());
    }
}
