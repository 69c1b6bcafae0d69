use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Letter identifier: the position in the alphabet's order, rank 0 being the
/// greatest letter.
pub type Rank = u8;

pub(crate) type Letters = SmallVec<[Rank; 12]>;

/// A generator symbol with a positive weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    pub weight: u32,
    pub rank: Rank,
}

/// A strictly ordered, weighted set of generators.
///
/// Letters are listed greatest first: `letters[0] > letters[1] > ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
    by_name: HashMap<String, Rank>,
}

impl Alphabet {
    /// Builds an alphabet from `(name, weight)` pairs, greatest letter first.
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let mut out = Vec::new();
        let mut by_name = HashMap::new();
        for (i, (name, weight)) in letters.into_iter().enumerate() {
            let name = name.into();
            if weight == 0 {
                return Err(Error::InvalidArgument(format!("letter `{name}` has weight 0")));
            }
            if i > usize::from(Rank::MAX) {
                return Err(Error::InvalidArgument("alphabet too large".into()));
            }
            if !valid_letter_name(&name) {
                return Err(Error::InvalidArgument(format!("bad letter name `{name}`")));
            }
            let rank = i as Rank;
            if by_name.insert(name.clone(), rank).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate letter `{name}`")));
            }
            out.push(Letter { name, weight, rank });
        }
        Ok(Alphabet { letters: out, by_name })
    }

    /// Unit-weight alphabet `x1 > x2 > ... > xn`.
    pub fn free(rank: usize) -> Self {
        Alphabet::new((1..=rank).map(|i| (format!("x{i}"), 1))).expect("valid free alphabet")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, rank: Rank) -> &Letter {
        &self.letters[usize::from(rank)]
    }

    pub fn weight(&self, rank: Rank) -> u32 {
        self.letters[usize::from(rank)].weight
    }

    pub fn max_weight(&self) -> u32 {
        self.letters.iter().map(|l| l.weight).max().unwrap_or(1)
    }

    pub fn rank_of(&self, name: &str) -> Result<Rank> {
        self.by_name.get(name).copied().ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Word from letter ranks; degree is computed from the weights.
    pub fn word(&self, ranks: &[Rank]) -> AssocWord {
        assert!(!ranks.is_empty(), "words are nonempty");
        let degree = ranks.iter().map(|&r| self.weight(r)).sum();
        AssocWord { degree, letters: ranks.iter().copied().collect() }
    }

    pub fn letter_word(&self, rank: Rank) -> AssocWord {
        self.word(&[rank])
    }

    /// Parses a space separated list of letter names.
    pub fn parse_word(&self, text: &str) -> Result<AssocWord> {
        let ranks = text.split_whitespace().map(|t| self.rank_of(t)).collect::<Result<Vec<_>>>()?;
        if ranks.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "empty word".into() });
        }
        Ok(self.word(&ranks))
    }

    pub fn format_word(&self, w: &AssocWord) -> String {
        w.letters().iter().map(|&r| self.letter(r).name.as_str()).collect::<Vec<_>>().join(" ")
    }
}

fn valid_letter_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '.')
}

/// A nonempty associative word with its cached weighted degree.
///
/// `Ord` is the weighted deg-lex order: first by degree, then lexicographically
/// with lower rank meaning greater letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssocWord {
    degree: u32,
    letters: Letters,
}

impl AssocWord {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> &[Rank] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &AssocWord) -> AssocWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        AssocWord { degree: self.degree + other.degree, letters }
    }

    /// Subword `letters[start..end]`, with degree taken from the alphabet.
    pub fn subword(&self, alphabet: &Alphabet, start: usize, end: usize) -> AssocWord {
        alphabet.word(&self.letters[start..end])
    }

    /// First position at which `needle` occurs as a subword.
    pub fn find(&self, needle: &[Rank]) -> Option<usize> {
        if needle.len() > self.letters.len() {
            return None;
        }
        self.letters.windows(needle.len()).position(|w| w == needle)
    }

    pub fn contains(&self, needle: &[Rank]) -> bool {
        self.find(needle).is_some()
    }
}

impl Ord for AssocWord {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lower rank is the greater letter and a proper prefix is greater, which is
        // exactly the reverse of slice ordering on ranks.
        self.degree.cmp(&other.degree).then_with(|| other.letters.cmp(&self.letters))
    }
}

impl PartialOrd for AssocWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AssocWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "#{r}")?;
        }
        Ok(())
    }
}

/// Weighted deg-lex comparison.
pub fn cmp_weighted_deglex(u: &AssocWord, v: &AssocWord) -> Ordering {
    u.cmp(v)
}

/// Pure lexicographic comparison: lower rank is greater, and a proper prefix is
/// greater than any of its extensions.
pub fn cmp_lex(u: &[Rank], v: &[Rank]) -> Ordering {
    v.cmp(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi3() -> Alphabet {
        Alphabet::new([("b1.2", 2), ("a1", 1), ("a2", 1)]).unwrap()
    }

    #[test]
    fn deglex_examples() {
        let a = chi3();
        let a1 = a.parse_word("a1").unwrap();
        assert_eq!(cmp_weighted_deglex(&a1, &a1), Ordering::Equal);
        let b = a.parse_word("b1.2").unwrap();
        let a1a1 = a.parse_word("a1 a1").unwrap();
        assert_eq!(cmp_weighted_deglex(&b, &a1a1), Ordering::Greater);
        let a1a2 = a.parse_word("a1 a2").unwrap();
        assert_eq!(cmp_weighted_deglex(&a1, &a1a2), Ordering::Less);
    }

    #[test]
    fn prefix_is_greater() {
        assert_eq!(cmp_lex(&[0], &[0, 1]), Ordering::Greater);
        assert_eq!(cmp_lex(&[1], &[0, 1]), Ordering::Less);
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::new([("x1", 0)]).is_err());
        assert!(Alphabet::new([("x1", 1), ("x1", 1)]).is_err());
        assert!(Alphabet::new([("1x", 1)]).is_err());
        assert!(matches!(chi3().rank_of("a9"), Err(Error::UnknownLetter(_))));
    }

    #[test]
    fn degree_is_sum_of_weights() {
        let a = chi3();
        let w = a.parse_word("b1.2 a1 a2 b1.2").unwrap();
        assert_eq!(w.degree(), 6);
        assert_eq!(a.format_word(&w), "b1.2 a1 a2 b1.2");
    }
}
