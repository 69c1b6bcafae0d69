use std::cmp::Ordering;
use std::sync::Arc;

use super::alphabet::{cmp_lex, Alphabet, AssocWord, Rank};
use super::words::{is_regular_letters, is_regular_word, standard_split};
use crate::error::{Error, Result};

/// A non-associative word: a letter or a bracket of two non-associative words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Letter(Rank),
    Bracket(Arc<LieMonomial>, Arc<LieMonomial>),
}

/// Bracketed word with its associative word (brackets removed) cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieMonomial {
    word: AssocWord,
    shape: Shape,
}

impl LieMonomial {
    pub fn letter(alphabet: &Alphabet, rank: Rank) -> Self {
        LieMonomial { word: alphabet.letter_word(rank), shape: Shape::Letter(rank) }
    }

    pub fn bracket(left: Arc<LieMonomial>, right: Arc<LieMonomial>) -> Self {
        LieMonomial { word: left.word.concat(&right.word), shape: Shape::Bracket(left, right) }
    }

    pub fn word(&self) -> &AssocWord {
        &self.word
    }

    pub fn degree(&self) -> u32 {
        self.word.degree()
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Prints the bracketing in the canonical grammar, e.g. `[x1,[x1,x2]]`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        self.render_into(alphabet, &mut s);
        s
    }

    fn render_into(&self, alphabet: &Alphabet, out: &mut String) {
        match &self.shape {
            Shape::Letter(r) => out.push_str(&alphabet.letter(*r).name),
            Shape::Bracket(l, r) => {
                out.push('[');
                l.render_into(alphabet, out);
                out.push(',');
                r.render_into(alphabet, out);
                out.push(']');
            }
        }
    }
}

/// The unique regular bracketing of a regular word, by standard factorization.
pub fn standard_bracketing(alphabet: &Alphabet, w: &AssocWord) -> Result<LieMonomial> {
    if !is_regular_word(w) {
        return Err(Error::NotRegular(alphabet.format_word(w)));
    }
    Ok(bracket_regular(alphabet, w.letters()))
}

fn bracket_regular(alphabet: &Alphabet, w: &[Rank]) -> LieMonomial {
    match standard_split(w) {
        None => LieMonomial::letter(alphabet, w[0]),
        Some(k) => LieMonomial::bracket(
            Arc::new(bracket_regular(alphabet, &w[..k])),
            Arc::new(bracket_regular(alphabet, &w[k..])),
        ),
    }
}

/// Checks the two bracketing conditions for a non-associative regular word:
/// both halves are regular monomials, and for `[[u1][u2]][v]` we have `u2 <= v`.
pub fn is_regular_monomial(m: &LieMonomial) -> bool {
    if !is_regular_letters(m.word.letters()) {
        return false;
    }
    match &m.shape {
        Shape::Letter(_) => true,
        Shape::Bracket(u, v) => {
            if !is_regular_monomial(u) || !is_regular_monomial(v) {
                return false;
            }
            match &u.shape {
                Shape::Letter(_) => true,
                Shape::Bracket(_, u2) => cmp_lex(u2.word.letters(), v.word.letters()) != Ordering::Greater,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::words::enumerate_regular_words;

    /// Every bracketing of `w`.
    fn all_bracketings(alphabet: &Alphabet, w: &[Rank]) -> Vec<LieMonomial> {
        if w.len() == 1 {
            return vec![LieMonomial::letter(alphabet, w[0])];
        }
        let mut out = Vec::new();
        for k in 1..w.len() {
            for l in all_bracketings(alphabet, &w[..k]) {
                for r in all_bracketings(alphabet, &w[k..]) {
                    out.push(LieMonomial::bracket(Arc::new(l.clone()), Arc::new(r)));
                }
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        let a = Alphabet::free(2);
        let m = standard_bracketing(&a, &a.parse_word("x1 x2").unwrap()).unwrap();
        assert_eq!(m.render(&a), "[x1,x2]");
        let m = standard_bracketing(&a, &a.parse_word("x1 x1 x2").unwrap()).unwrap();
        assert_eq!(m.render(&a), "[x1,[x1,x2]]");
        let m = standard_bracketing(&a, &a.parse_word("x1 x2 x2").unwrap()).unwrap();
        assert_eq!(m.render(&a), "[[x1,x2],x2]");
        let bad = standard_bracketing(&a, &a.parse_word("x2 x1").unwrap());
        assert!(matches!(bad, Err(Error::NotRegular(_))));
    }

    #[test]
    fn standard_bracketing_is_the_unique_regular_one() {
        for alphabet in [Alphabet::free(2), Alphabet::free(3), Alphabet::new([("b", 2), ("c", 1), ("d", 1)]).unwrap()] {
            for w in enumerate_regular_words(&alphabet, 6) {
                let regular: Vec<_> =
                    all_bracketings(&alphabet, w.letters()).into_iter().filter(is_regular_monomial).collect();
                assert_eq!(regular.len(), 1, "{}", alphabet.format_word(&w));
                assert_eq!(regular[0], standard_bracketing(&alphabet, &w).unwrap());
            }
        }
    }
}
