use std::sync::Arc;

use super::model::GWord;
use super::relators::{canonicalize_in, Family, Relator};
use crate::error::{Error, Result};
use crate::lie::{Alphabet, FreeLie, LieElement};

/// The two-copy presentation on `x1 > ... > xm > xp1 > ... > xpm`.
#[derive(Debug, Clone)]
pub struct DirectPresentation {
    pub lie: Arc<FreeLie>,
    pub relators: Vec<Relator>,
}

pub fn direct_alphabet(m: usize) -> Alphabet {
    let xs = (1..=m).map(|i| (format!("x{i}"), 1));
    let ps = (1..=m).map(|i| (format!("xp{i}"), 1));
    Alphabet::new(xs.chain(ps)).expect("valid alphabet")
}

/// Right-normed bracket of `u` in the first (`psi = false`) or second copy.
pub fn copy_bracket(lie: &FreeLie, u: &GWord, psi: bool) -> LieElement {
    let prefix = if psi { "xp" } else { "x" };
    let entries: Vec<_> =
        u.0.iter().map(|i| lie.letter_named(&format!("{prefix}{i}")).expect("index in range")).collect();
    lie.right_normed(&entries)
}

/// Relators `[u, v^psi] - [u^psi, v]` of degree at most `max_degree`, plus the
/// length `c+1` brackets in each copy when a class is given.
pub fn chi_direct_presentation(m: usize, class: Option<u32>, max_degree: u32) -> Result<DirectPresentation> {
    if m == 0 || max_degree < 2 {
        return Err(Error::InvalidArgument("need m >= 1 and a degree bound of at least 2".into()));
    }
    let lie = Arc::new(FreeLie::new(direct_alphabet(m)));
    let words: Vec<Vec<GWord>> = (0..max_degree as usize).map(|n| GWord::all(m, n)).collect();
    let mut all = Vec::new();
    for lu in 1..max_degree as usize {
        for lv in 1..=max_degree as usize - lu {
            for u in &words[lu] {
                for v in &words[lv] {
                    let lhs = lie.bracket(&copy_bracket(&lie, u, false), &copy_bracket(&lie, v, true));
                    let rhs = lie.bracket(&copy_bracket(&lie, u, true), &copy_bracket(&lie, v, false));
                    all.push(Relator { family: Family::PsiSwap, element: lhs.sub(&rhs) });
                }
            }
        }
    }
    if let Some(c) = class {
        if c == 0 {
            return Err(Error::InvalidArgument("nilpotency class must be at least 1".into()));
        }
        if c < max_degree {
            for u in GWord::all(m, c as usize + 1) {
                for psi in [false, true] {
                    all.push(Relator { family: Family::CopyNilpotent, element: copy_bracket(&lie, &u, psi) });
                }
            }
        }
    }
    let relators = canonicalize_in(&lie, all);
    Ok(DirectPresentation { lie, relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::format_element;

    #[test]
    fn degree_two_relators_rank_two() {
        let p = chi_direct_presentation(2, None, 2).unwrap();
        let shown: Vec<_> = p.relators.iter().map(|r| format_element(&p.lie, &r.element)).collect();
        assert_eq!(shown.len(), 3);
        for expected in ["[x1,xp1]", "[x2,xp2]"] {
            assert!(shown.iter().any(|s| s == expected), "{shown:?}");
        }
        let mixed = crate::lie::parse_element(&p.lie, "[x1,xp2] - [xp1,x2]").unwrap().monic().unwrap();
        assert!(p.relators.iter().any(|r| r.element == mixed));
    }

    #[test]
    fn all_relators_homogeneous() {
        let p = chi_direct_presentation(2, Some(2), 4).unwrap();
        assert!(p.relators.iter().all(|r| r.element.is_homogeneous()));
        assert!(p.relators.iter().any(|r| r.family == Family::CopyNilpotent));
    }
}
