use std::collections::HashSet;

use serde::Serialize;

use super::model::{BRef, ChiModel, GWord};
use crate::error::{Error, Result};
use crate::lie::{format_element, LieElement};

/// Which relator family an element came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `[a_i,a_j,b_kl] - [a_i,b_jk,a_l] - [a_i,a_k,b_jl]`.
    ThreeTerm,
    /// Two `b` entries of an odd bracket replaced by `[a,a]`.
    DoubleB,
    /// A `b` entry replaced by `[a,a]` and the tail `a_p, a_q` by `b_pq`.
    BTail,
    /// Images under `mu` of long brackets.
    Nilpotent,
    /// `[u, v^psi] - [u^psi, v]` in the two-copy presentation.
    PsiSwap,
    /// Long brackets within one copy in the two-copy presentation.
    CopyNilpotent,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::ThreeTerm => "three-term",
            Family::DoubleB => "double-b",
            Family::BTail => "b-tail",
            Family::Nilpotent => "nilpotent",
            Family::PsiSwap => "psi-swap",
            Family::CopyNilpotent => "copy-nilpotent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub family: Family,
    pub element: LieElement,
}

/// How the final `a_{n-1}, a_n` entries of the tail family are indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailReading {
    /// Arbitrary generator indices `p, q`.
    #[default]
    Generic,
    /// Indices equal to the bracket positions `n-1, n`.
    Positional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Presentation of the ideal on `a_i`, `b_{i,j}`.
    L,
    /// Two copies `x_i`, `xp_i` of the generators.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationSpec {
    pub m: usize,
    pub variant: Variant,
    pub nilpotency_class: Option<u32>,
    pub degree_bound: u32,
    pub tail_reading: TailReading,
}

impl PresentationSpec {
    pub fn l(m: usize, nilpotency_class: Option<u32>, degree_bound: u32) -> Self {
        PresentationSpec { m, variant: Variant::L, nilpotency_class, degree_bound, tail_reading: TailReading::Generic }
    }

    pub fn direct(m: usize, nilpotency_class: Option<u32>, degree_bound: u32) -> Self {
        PresentationSpec { variant: Variant::Direct, ..Self::l(m, nilpotency_class, degree_bound) }
    }
}

/// An entry of an odd bracket: `a_i` or `b_{i,j}` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entry {
    A(usize),
    B(usize, usize),
}

impl Entry {
    fn weight(self) -> u32 {
        match self {
            Entry::A(_) => 1,
            Entry::B(..) => 2,
        }
    }
}

fn entries(m: usize) -> Vec<Entry> {
    let mut out: Vec<Entry> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| Entry::B(i, j))).collect();
    out.extend((1..=m).map(Entry::A));
    out
}

/// All entry lists of length `n` with total weight at most `budget`.
fn entry_lists(m: usize, n: usize, budget: u32) -> Vec<Vec<Entry>> {
    let all = entries(m);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(all: &[Entry], n: usize, budget: u32, cur: &mut Vec<Entry>, out: &mut Vec<Vec<Entry>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let rest = (n - cur.len() - 1) as u32;
        for &e in all {
            if e.weight() + rest <= budget {
                cur.push(e);
                go(all, n, budget - e.weight(), cur, out);
                cur.pop();
            }
        }
    }
    go(&all, n, budget, &mut cur, &mut out);
    out
}

fn weight(list: &[Entry]) -> u32 {
    list.iter().map(|e| e.weight()).sum()
}

/// `[a_i, a_j, b_{k,l}] - [a_i, b_{j,k}, a_l] - [a_i, a_k, b_{j,l}]`.
pub fn rel1(model: &ChiModel, i: usize, j: usize, k: usize, l: usize) -> LieElement {
    let (a, b) = (|t| model.a(t), |s, t| model.b(BRef::new(s, t)));
    model
        .right_normed(&[a(i), a(j), b(k, l)])
        .sub(&model.right_normed(&[a(i), b(j, k), a(l)]))
        .sub(&model.right_normed(&[a(i), a(k), b(j, l)]))
}

fn entry_element(model: &ChiModel, e: Entry, expand: bool) -> LieElement {
    match e {
        Entry::A(i) => model.a(i),
        Entry::B(i, j) if expand => model.bracket(&model.a(i), &model.a(j)),
        Entry::B(i, j) => model.b(BRef::new(i, j)),
    }
}

/// Bracket-family relators of degree at most `max_degree`, tagged.
pub fn rel2_families_with(model: &ChiModel, max_degree: u32, reading: TailReading) -> Vec<Relator> {
    let m = model.m();
    let mut out = Vec::new();
    let mut n = 3;
    while n as u32 <= max_degree {
        for list in entry_lists(m, n, max_degree) {
            for p in 0..n {
                for q in p + 1..n {
                    if !matches!((list[p], list[q]), (Entry::B(..), Entry::B(..))) {
                        continue;
                    }
                    let left: Vec<_> = list.iter().map(|&e| entry_element(model, e, false)).collect();
                    let right: Vec<_> =
                        list.iter().enumerate().map(|(t, &e)| entry_element(model, e, t == p || t == q)).collect();
                    out.push(Relator {
                        family: Family::DoubleB,
                        element: model.right_normed(&left).sub(&model.right_normed(&right)),
                    });
                }
            }
        }
        // the tail family: n-2 leading entries followed by a_p, a_q
        for head in entry_lists(m, n - 2, max_degree.saturating_sub(2)) {
            let tails: Vec<(usize, usize)> = match reading {
                TailReading::Generic => (1..=m).flat_map(|p| (1..=m).map(move |q| (p, q))).collect(),
                TailReading::Positional if n <= m => vec![(n - 1, n)],
                TailReading::Positional => Vec::new(),
            };
            debug_assert!(weight(&head) + 2 <= max_degree);
            for (p, q) in tails {
                for d in 0..head.len() {
                    if !matches!(head[d], Entry::B(..)) {
                        continue;
                    }
                    let mut left: Vec<_> = head.iter().map(|&e| entry_element(model, e, false)).collect();
                    left.push(model.a(p));
                    left.push(model.a(q));
                    let mut right: Vec<_> =
                        head.iter().enumerate().map(|(t, &e)| entry_element(model, e, t == d)).collect();
                    right.push(model.b(BRef::new(p, q)));
                    out.push(Relator {
                        family: Family::BTail,
                        element: model.right_normed(&left).sub(&model.right_normed(&right)),
                    });
                }
            }
        }
        n += 2;
    }
    out
}

/// Bracket-family relators with the generic tail reading, untagged.
pub fn rel2_families(model: &ChiModel, max_degree: u32) -> Vec<LieElement> {
    rel2_families_with(model, max_degree, TailReading::Generic).into_iter().map(|r| r.element).collect()
}

/// `mu(u)` for every bracket `u` of length `c+1 ..= max_degree`.
pub fn nilpotent_quotient_relators(model: &ChiModel, c: u32, max_degree: u32) -> Vec<LieElement> {
    let mut out = Vec::new();
    for n in c + 1..=max_degree {
        for u in GWord::all(model.m(), n as usize) {
            out.push(model.mu(&u).expect("nonempty"));
        }
    }
    canonicalize(model, out.into_iter().map(|element| Relator { family: Family::Nilpotent, element }))
        .into_iter()
        .map(|r| r.element)
        .collect()
}

/// Drops zeros, makes monic, removes duplicates (keeping the first family
/// seen) and sorts by carrier, then by printed form.
pub(crate) fn canonicalize_in(lie: &crate::lie::FreeLie, relators: impl IntoIterator<Item = Relator>) -> Vec<Relator> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let Some(element) = r.element.monic() else { continue };
        if seen.insert(element.clone()) {
            out.push(Relator { family: r.family, element });
        }
    }
    let mut keyed: Vec<_> =
        out.into_iter().map(|r| ((r.element.carrier().cloned(), format_element(lie, &r.element)), r)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, r)| r).collect()
}

fn canonicalize(model: &ChiModel, relators: impl IntoIterator<Item = Relator>) -> Vec<Relator> {
    canonicalize_in(model.lie(), relators)
}

/// The relator set of the presentation of the ideal, up to the degree bound.
pub fn enumerate_relators(model: &ChiModel, spec: &PresentationSpec) -> Result<Vec<Relator>> {
    if spec.variant != Variant::L {
        return Err(Error::InvalidArgument("use the direct presentation builder".into()));
    }
    if spec.m != model.m() {
        return Err(Error::InvalidArgument(format!("spec rank {} differs from model rank {}", spec.m, model.m())));
    }
    let m = model.m();
    let bound = spec.degree_bound;
    let mut all = Vec::new();
    if bound >= 4 {
        for i in 1..=m {
            for j in 1..=m {
                for k in 1..=m {
                    for l in 1..=m {
                        all.push(Relator { family: Family::ThreeTerm, element: rel1(model, i, j, k, l) });
                    }
                }
            }
        }
    }
    all.extend(rel2_families_with(model, bound, spec.tail_reading));
    if let Some(c) = spec.nilpotency_class {
        if c == 0 {
            return Err(Error::InvalidArgument("nilpotency class must be at least 1".into()));
        }
        for n in c + 1..=bound {
            for u in GWord::all(m, n as usize) {
                all.push(Relator { family: Family::Nilpotent, element: model.mu(&u)? });
            }
        }
    }
    Ok(canonicalize(model, all))
}

/// True if some term of `f` uses exactly one `b_{1,2}` and otherwise only
/// `a_2`, or only `a_2` apart from exactly one `a_3`.
pub fn has_forbidden_monomial(model: &ChiModel, f: &LieElement) -> bool {
    let (b12, a2, a3) = (model.b_rank(1, 2), model.a_rank(2), model.a_rank(3));
    f.terms().any(|(w, _)| {
        let letters = w.letters();
        let count = |r| letters.iter().filter(|&&x| x == r).count();
        let others_a2 = |r| letters.iter().all(|&x| x == r || x == a2);
        (count(b12) == 1 && others_a2(b12)) || (count(a3) == 1 && others_a2(a3))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel1_examples() {
        let c = ChiModel::new(3).unwrap();
        assert!(rel1(&c, 1, 2, 2, 3).is_zero());
        let r = rel1(&c, 1, 2, 3, 1);
        assert!(!r.is_zero());
        assert!(r.is_homogeneous());
        assert_eq!(r.degree(), Some(4));
    }

    #[test]
    fn rank_one_has_no_relators() {
        let c = ChiModel::new(1).unwrap();
        assert!(enumerate_relators(&c, &PresentationSpec::l(1, None, 7)).unwrap().is_empty());
    }

    #[test]
    fn families_are_homogeneous() {
        let c = ChiModel::new(3).unwrap();
        for reading in [TailReading::Generic, TailReading::Positional] {
            for r in rel2_families_with(&c, 6, reading) {
                assert!(r.element.is_homogeneous(), "{}", c.format(&r.element));
                assert!(r.element.degree().is_none_or(|d| d <= 6));
            }
        }
    }

    #[test]
    fn smallest_double_b_instance() {
        let c = ChiModel::new(3).unwrap();
        let expected = c.parse("[b1.2,[b1.3,a1]] - [[a1,a2],[[a1,a3],a1]]").unwrap().monic().unwrap();
        let rels = enumerate_relators(&c, &PresentationSpec::l(3, None, 5)).unwrap();
        assert!(rels.iter().any(|r| r.element == expected));
    }

    #[test]
    fn degree_four_is_three_term_only() {
        let c = ChiModel::new(3).unwrap();
        let rels = enumerate_relators(&c, &PresentationSpec::l(3, None, 4)).unwrap();
        assert!(!rels.is_empty());
        assert!(rels.iter().all(|r| r.family == Family::ThreeTerm || r.family == Family::BTail));
        let three: HashSet<_> = (1..=3)
            .flat_map(|i| (1..=3).flat_map(move |j| (1..=3).flat_map(move |k| (1..=3).map(move |l| (i, j, k, l)))))
            .filter_map(|(i, j, k, l)| rel1(&c, i, j, k, l).monic())
            .collect();
        assert!(rels.iter().filter(|r| r.family == Family::ThreeTerm).all(|r| three.contains(&r.element)));
    }

    #[test]
    fn relators_die_under_rho() {
        for m in [2, 3] {
            let c = ChiModel::new(m).unwrap();
            for r in enumerate_relators(&c, &PresentationSpec::l(m, None, 6)).unwrap() {
                let (p, q) = c.rho_l(&r.element);
                assert!(p.is_zero() && q.is_zero(), "{}", c.format(&r.element));
            }
        }
    }

    #[test]
    fn nilpotent_relators_have_bracket_length_degree() {
        let c = ChiModel::new(2).unwrap();
        let rels = nilpotent_quotient_relators(&c, 2, 4);
        assert!(rels.iter().all(|r| matches!(r.degree(), Some(3 | 4))));
        let abc = c.parse("[a1,[a2,a1]]").unwrap().monic().unwrap();
        assert!(rels.contains(&abc));
        let aab = c.parse("[a1,[a2,b1.2]]").unwrap().monic().unwrap();
        assert!(rels.contains(&aab));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let c = ChiModel::new(3).unwrap();
        let spec = PresentationSpec::l(3, None, 5);
        let a = enumerate_relators(&c, &spec).unwrap();
        let b = enumerate_relators(&ChiModel::new(3).unwrap(), &spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn forbidden_monomials_absent_from_relators() {
        let c = ChiModel::new(3).unwrap();
        for bound in [5, 6] {
            for r in enumerate_relators(&c, &PresentationSpec::l(3, None, bound)).unwrap() {
                assert!(!has_forbidden_monomial(&c, &r.element), "{}", c.format(&r.element));
            }
        }
        assert!(!has_forbidden_monomial(&c, &c.f_n(2).unwrap()));
        assert!(has_forbidden_monomial(&c, &c.parse("[b1.2,[a2,a2]] + [b1.2,a2]").unwrap()));
        assert!(has_forbidden_monomial(&c, &c.parse("[a2,[a2,a3]]").unwrap()));
        assert!(!has_forbidden_monomial(&c, &c.parse("[[a2,a3],a3]").unwrap()));
    }

    #[test]
    fn carriers_have_odd_length() {
        let c = ChiModel::new(3).unwrap();
        for r in enumerate_relators(&c, &PresentationSpec::l(3, None, 7)).unwrap() {
            assert_eq!(r.element.carrier().unwrap().len() % 2, 1, "{}", c.format(&r.element));
        }
    }
}
