//! Special bracketings: bracketings of a regular word `u` that contain the
//! regular bracketing of a regular subword `v` as a literal subterm and still
//! have `u` as their carrier.

use std::sync::Arc;

use super::super::lie::monomial::{LieMonomial, Shape};
use crate::error::{Error, Result};
use crate::lie::words::{is_regular_letters, regular_factorization};
use crate::lie::{AssocWord, FreeLie, LieElement, Rank, Rational};

/// A bracketing with one marked slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Template {
    Slot,
    Letter(Rank),
    Bracket(Box<Template>, Box<Template>),
}

impl Template {
    fn from_monomial(m: &LieMonomial) -> Template {
        match m.shape() {
            Shape::Letter(r) => Template::Letter(*r),
            Shape::Bracket(l, r) => {
                Template::Bracket(Box::new(Template::from_monomial(l)), Box::new(Template::from_monomial(r)))
            }
        }
    }

    fn bracket(l: Template, r: Template) -> Template {
        Template::Bracket(Box::new(l), Box::new(r))
    }

    /// Substitutes `filler` for the slot and evaluates in the regular basis.
    pub fn substitute(&self, lie: &FreeLie, filler: &LieElement) -> LieElement {
        match self {
            Template::Slot => filler.clone(),
            Template::Letter(r) => lie.letter(*r),
            Template::Bracket(l, r) => {
                let l = l.substitute(lie, filler);
                if l.is_zero() {
                    return l;
                }
                let r = r.substitute(lie, filler);
                lie.bracket(&l, &r)
            }
        }
    }

    pub fn render(&self, lie: &FreeLie) -> String {
        match self {
            Template::Slot => "<>".to_string(),
            Template::Letter(r) => lie.alphabet().letter(*r).name.clone(),
            Template::Bracket(l, r) => format!("[{},{}]", l.render(lie), r.render(lie)),
        }
    }
}

/// A special bracketing of `word` around the subword at `start..start + len`.
///
/// `lead` is the coefficient of `word` in the template filled with the regular
/// bracketing of the subword; it is always nonzero.
#[derive(Debug, Clone)]
pub struct SpecialBracketing {
    pub word: AssocWord,
    pub start: usize,
    pub len: usize,
    pub template: Template,
    pub lead: Rational,
}

impl SpecialBracketing {
    /// Fills the slot with `h` and rescales by `1/lead`, so a monic `h` with
    /// carrier equal to the subword yields a monic element with carrier `word`.
    pub fn apply(&self, lie: &FreeLie, h: &LieElement) -> LieElement {
        self.template.substitute(lie, h).scaled(&self.lead.recip())
    }
}

/// Builds a special bracketing of the regular word `u` around its regular
/// subword at `start..start + len`.
pub fn special_bracketing(lie: &FreeLie, u: &AssocWord, start: usize, len: usize) -> Result<SpecialBracketing> {
    let alphabet = lie.alphabet();
    let end = start + len;
    if len == 0 || end > u.len() {
        return Err(Error::InvalidOccurrence(format!("range {start}..{end} outside word of length {}", u.len())));
    }
    if !is_regular_letters(u.letters()) {
        return Err(Error::NotRegular(alphabet.format_word(u)));
    }
    let v = u.subword(alphabet, start, end);
    if !is_regular_letters(v.letters()) {
        return Err(Error::InvalidOccurrence(format!("subword `{}` is not regular", alphabet.format_word(&v))));
    }
    let filler = LieElement::basis(v);
    let standard = lie.monomial(u)?;
    let candidate = around_occurrence(lie, &standard, 0, start, end);
    if let Some(sb) = accept(lie, u, start, len, candidate, &filler) {
        return Ok(sb);
    }
    // Exhaustive search over bracketings with the subword as one leaf; only
    // reached if the factorization-based construction does not apply.
    for template in slot_bracketings(u.letters(), start, end) {
        if let Some(sb) = accept(lie, u, start, len, template, &filler) {
            return Ok(sb);
        }
    }
    Err(Error::InvalidOccurrence("no special bracketing found".into()))
}

fn accept(
    lie: &FreeLie,
    u: &AssocWord,
    start: usize,
    len: usize,
    template: Template,
    filler: &LieElement,
) -> Option<SpecialBracketing> {
    let value = template.substitute(lie, filler);
    match value.leading() {
        Some((w, c)) if w == u => Some(SpecialBracketing { word: u.clone(), start, len, lead: c.clone(), template }),
        _ => None,
    }
}

/// Rebuilds the standard bracketing of `m` (which spans `offset..`), replacing
/// the minimal subterm that covers `start..end`. If that subterm begins at
/// `start`, its word is `v c`; it becomes `[[[<v>, c_1], c_2], ..., c_k]` with
/// `c = c_1 ... c_k` the regular factorization.
fn around_occurrence(lie: &FreeLie, m: &Arc<LieMonomial>, offset: usize, start: usize, end: usize) -> Template {
    if let Shape::Bracket(l, r) = m.shape() {
        let mid = offset + l.word().len();
        if end <= mid {
            return Template::bracket(around_occurrence(lie, l, offset, start, end), Template::from_monomial(r));
        }
        if start >= mid {
            return Template::bracket(Template::from_monomial(l), around_occurrence(lie, r, mid, start, end));
        }
    }
    let letters = m.word().letters();
    if offset != start {
        // leave it to the exhaustive search
        return Template::from_monomial(m);
    }
    let tail = &letters[end - offset..];
    let mut t = Template::Slot;
    for (s, e) in regular_factorization(tail) {
        let w = lie.alphabet().word(&tail[s..e]);
        let factor = lie.monomial(&w).expect("factors are regular");
        t = Template::bracket(t, Template::from_monomial(&factor));
    }
    t
}

/// All bracketings of `letters` in which `start..end` is a single slot leaf.
fn slot_bracketings(letters: &[Rank], start: usize, end: usize) -> Vec<Template> {
    let mut leaves: Vec<Template> = letters[..start].iter().map(|&r| Template::Letter(r)).collect();
    leaves.push(Template::Slot);
    leaves.extend(letters[end..].iter().map(|&r| Template::Letter(r)));
    all_trees(&leaves)
}

fn all_trees(leaves: &[Template]) -> Vec<Template> {
    if leaves.len() == 1 {
        return vec![leaves[0].clone()];
    }
    let mut out = Vec::new();
    for k in 1..leaves.len() {
        let lefts = all_trees(&leaves[..k]);
        let rights = all_trees(&leaves[k..]);
        for l in &lefts {
            for r in &rights {
                out.push(Template::bracket(l.clone(), r.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::words::enumerate_regular_words;
    use crate::lie::{rat, Alphabet};

    #[test]
    fn whole_word_is_just_the_slot() {
        let lie = FreeLie::new(Alphabet::free(2));
        let u = lie.alphabet().parse_word("x1 x1 x2").unwrap();
        let sb = special_bracketing(&lie, &u, 0, 3).unwrap();
        assert_eq!(sb.template, Template::Slot);
        assert_eq!(sb.lead, rat(1));
    }

    #[test]
    fn inner_occurrence() {
        let lie = FreeLie::new(Alphabet::free(2));
        let u = lie.alphabet().parse_word("x1 x1 x2").unwrap();
        let sb = special_bracketing(&lie, &u, 1, 2).unwrap();
        assert_eq!(sb.template.render(&lie), "[x1,<>]");
        let v = lie.alphabet().parse_word("x1 x2").unwrap();
        let filled = sb.apply(&lie, &LieElement::basis(v));
        assert_eq!(filled.carrier(), Some(&u));
    }

    #[test]
    fn rejects_bad_occurrences() {
        let lie = FreeLie::new(Alphabet::free(2));
        let u = lie.alphabet().parse_word("x1 x1 x2").unwrap();
        assert!(matches!(special_bracketing(&lie, &u, 0, 2), Err(Error::InvalidOccurrence(_))));
        assert!(matches!(special_bracketing(&lie, &u, 2, 2), Err(Error::InvalidOccurrence(_))));
        let w = lie.alphabet().parse_word("x2 x1").unwrap();
        assert!(matches!(special_bracketing(&lie, &w, 0, 1), Err(Error::NotRegular(_))));
    }

    /// Every regular subword occurrence of every regular word gets a template
    /// whose carrier is the whole word, and the direct construction suffices.
    #[test]
    fn all_occurrences_have_special_bracketings() {
        for alphabet in
            [Alphabet::free(2), Alphabet::free(3), Alphabet::new([("b", 2), ("c", 2), ("d", 1), ("e", 1)]).unwrap()]
        {
            let lie = FreeLie::new(alphabet);
            for u in enumerate_regular_words(lie.alphabet(), 7) {
                for s in 0..u.len() {
                    for e in s + 1..=u.len() {
                        if !is_regular_letters(&u.letters()[s..e]) {
                            continue;
                        }
                        let sb = special_bracketing(&lie, &u, s, e - s).unwrap();
                        let direct = around_occurrence(&lie, &lie.monomial(&u).unwrap(), 0, s, e);
                        assert_eq!(sb.template, direct, "fallback used");
                        assert!(sb.lead == rat(1) || sb.lead == rat(-1));
                    }
                }
            }
        }
    }
}
