use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::alphabet::AssocWord;

/// Exact coefficient field.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A Lie polynomial in the regular-monomial basis.
///
/// Each regular word stands for its standard bracketing. Terms are kept in
/// weighted deg-lex order, so the carrier is the last key. No stored
/// coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<AssocWord, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis monomial for a regular word.
    pub fn basis(word: AssocWord) -> Self {
        Self::term(word, Rational::one())
    }

    pub fn term(word: AssocWord, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        LieElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&AssocWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &AssocWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The greatest word present, or `None` for zero.
    pub fn carrier(&self) -> Option<&AssocWord> {
        self.terms.keys().next_back()
    }

    pub fn leading(&self) -> Option<(&AssocWord, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Scales so that the carrier coefficient is 1.
    pub fn monic(&self) -> Option<LieElement> {
        let (_, lc) = self.leading()?;
        let inv = lc.recip();
        Some(self.scaled(&inv))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(AssocWord::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of the carrier.
    pub fn degree(&self) -> Option<u32> {
        self.carrier().map(AssocWord::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(AssocWord::degree)
    }

    pub fn add_term(&mut self, w: &AssocWord, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &LieElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        LieElement { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn neg(&self) -> LieElement {
        self.scaled(&-Rational::one())
    }

    pub(crate) fn remove_term(&mut self, w: &AssocWord) -> Option<Rational> {
        self.terms.remove(w)
    }

    /// Keeps only the terms of degree at most `d`.
    pub fn truncated(&self, d: u32) -> LieElement {
        LieElement {
            terms: self.terms.iter().filter(|(w, _)| w.degree() <= d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }
}

impl FromIterator<(AssocWord, Rational)> for LieElement {
    fn from_iter<I: IntoIterator<Item = (AssocWord, Rational)>>(iter: I) -> Self {
        let mut out = LieElement::zero();
        for (w, c) in iter {
            out.add_term(&w, &c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::alphabet::Alphabet;

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = Alphabet::free(2);
        let w = a.parse_word("x1 x2").unwrap();
        let mut e = LieElement::basis(w.clone());
        e.add_term(&w, &rat(-1));
        assert!(e.is_zero());
        assert_eq!(e.carrier(), None);
        assert!(LieElement::term(w, rat(0)).is_zero());
    }

    #[test]
    fn carrier_and_monic() {
        let a = Alphabet::free(2);
        let x1x2 = a.parse_word("x1 x2").unwrap();
        let x2 = a.parse_word("x2").unwrap();
        let mut f = LieElement::term(x1x2.clone(), rat(3));
        f.add_term(&x2, &rat(5));
        assert_eq!(f.carrier(), Some(&x1x2));
        assert!(!f.is_monic());
        assert!(!f.is_homogeneous());
        let m = f.monic().unwrap();
        assert!(m.is_monic());
        assert_eq!(m.coeff(&x2), ratio(5, 3));
    }
}
