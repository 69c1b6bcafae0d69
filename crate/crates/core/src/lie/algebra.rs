use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::alphabet::{Alphabet, AssocWord, Rank};
use super::element::{LieElement, Rational};
use super::monomial::{standard_bracketing, LieMonomial, Shape};
use super::words::{is_regular_word, standard_split};
use crate::error::Result;

/// Integer-coefficient associative polynomial, sorted by weighted deg-lex.
pub type IntPoly = Vec<(AssocWord, i64)>;

type Pair = (AssocWord, AssocWord);

/// Free Lie algebra over an alphabet, with memoized basis arithmetic.
///
/// All caches are behind locks, so a `FreeLie` can be shared across threads.
#[derive(Debug)]
pub struct FreeLie {
    alphabet: Alphabet,
    expansions: RwLock<HashMap<AssocWord, Arc<IntPoly>>>,
    products: RwLock<HashMap<Pair, Arc<IntPoly>>>,
    monomials: RwLock<HashMap<AssocWord, Arc<LieMonomial>>>,
}

impl FreeLie {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeLie { alphabet, expansions: RwLock::default(), products: RwLock::default(), monomials: RwLock::default() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The generator with the given rank as an element.
    pub fn letter(&self, rank: Rank) -> LieElement {
        LieElement::basis(self.alphabet.letter_word(rank))
    }

    pub fn letter_named(&self, name: &str) -> Result<LieElement> {
        Ok(self.letter(self.alphabet.rank_of(name)?))
    }

    /// Cached standard bracketing of a regular word.
    pub fn monomial(&self, w: &AssocWord) -> Result<Arc<LieMonomial>> {
        if let Some(m) = self.monomials.read().unwrap().get(w) {
            return Ok(m.clone());
        }
        let m = Arc::new(standard_bracketing(&self.alphabet, w)?);
        self.monomials.write().unwrap().insert(w.clone(), m.clone());
        Ok(m)
    }

    /// Associative expansion of the standard bracketing of a regular word.
    pub(crate) fn expansion(&self, w: &AssocWord) -> Arc<IntPoly> {
        if let Some(e) = self.expansions.read().unwrap().get(w) {
            return e.clone();
        }
        let e = match standard_split(w.letters()) {
            None => vec![(w.clone(), 1)],
            Some(k) => {
                let left = self.expansion(&w.subword(&self.alphabet, 0, k));
                let right = self.expansion(&w.subword(&self.alphabet, k, w.len()));
                commutator(&left, &right)
            }
        };
        let e = Arc::new(e);
        self.expansions.write().unwrap().insert(w.clone(), e.clone());
        e
    }

    /// Full associative expansion of an arbitrary bracketing (`[u,v] -> uv - vu`).
    pub fn expand_assoc(&self, m: &LieMonomial) -> BTreeMap<AssocWord, Rational> {
        to_rational(&expand_tree(m))
    }

    /// Associative expansion of a Lie element.
    pub fn expand_element(&self, f: &LieElement) -> BTreeMap<AssocWord, Rational> {
        let mut out: BTreeMap<AssocWord, Rational> = BTreeMap::new();
        for (w, c) in f.terms() {
            for (x, e) in self.expansion(w).iter() {
                let v = out.entry(x.clone()).or_insert_with(Rational::zero);
                *v += c * Rational::from_integer(BigInt::from(*e));
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Bracket of two basis monomials in the basis, `u > v` not required.
    pub(crate) fn basis_bracket(&self, u: &AssocWord, v: &AssocWord) -> (Arc<IntPoly>, i64) {
        use std::cmp::Ordering::*;
        let (key, sign) = match u.cmp(v) {
            Equal => return (Arc::new(Vec::new()), 1),
            Greater => ((u.clone(), v.clone()), 1),
            Less => ((v.clone(), u.clone()), -1),
        };
        if let Some(p) = self.products.read().unwrap().get(&key) {
            return (p.clone(), sign);
        }
        let p = Arc::new(self.triangular_bracket(&key.0, &key.1));
        self.products.write().unwrap().insert(key, p.clone());
        (p, sign)
    }

    /// Expands `[(u),(v)]` associatively, then peels off leading regular words.
    fn triangular_bracket(&self, u: &AssocWord, v: &AssocWord) -> IntPoly {
        let eu = self.expansion(u);
        let ev = self.expansion(v);
        let mut poly: BTreeMap<AssocWord, i64> = commutator(&eu, &ev).into_iter().collect();
        let mut out = Vec::new();
        while let Some((w, c)) = poly.pop_last() {
            debug_assert!(is_regular_word(&w), "leading word of a Lie element is regular");
            for (x, e) in self.expansion(&w).iter().rev().skip(1) {
                let slot = poly.entry(x.clone()).or_insert(0);
                *slot -= c * e;
                if *slot == 0 {
                    poly.remove(x);
                }
            }
            out.push((w, c));
        }
        out.reverse();
        out
    }

    /// The Lie product in the regular-monomial basis.
    pub fn bracket(&self, f: &LieElement, g: &LieElement) -> LieElement {
        let mut acc: HashMap<AssocWord, Rational> = HashMap::new();
        for (u, cu) in f.terms() {
            for (v, cv) in g.terms() {
                let (prod, sign) = self.basis_bracket(u, v);
                if prod.is_empty() {
                    continue;
                }
                let c = cu * cv;
                for (w, e) in prod.iter() {
                    let k = Rational::from_integer(BigInt::from(sign * e));
                    *acc.entry(w.clone()).or_insert_with(Rational::zero) += &c * k;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `[m_1, [m_2, ... [m_{n-1}, m_n]]]`.
    pub fn right_normed(&self, ms: &[LieElement]) -> LieElement {
        let (last, rest) = ms.split_last().expect("right_normed needs at least one entry");
        rest.iter().rev().fold(last.clone(), |acc, m| self.bracket(m, &acc))
    }

    /// Evaluates an arbitrary bracketing in the basis.
    pub fn eval_monomial(&self, m: &LieMonomial) -> LieElement {
        match m.shape() {
            Shape::Letter(r) => self.letter(*r),
            Shape::Bracket(l, r) => self.bracket(&self.eval_monomial(l), &self.eval_monomial(r)),
        }
    }

    /// Image of `f` under the homomorphism into `target` sending letter `r` to
    /// `images[r]`.
    pub fn map_homomorphism(&self, f: &LieElement, target: &FreeLie, images: &[LieElement]) -> LieElement {
        let mut memo = HashMap::new();
        let mut out = LieElement::zero();
        for (w, c) in f.terms() {
            let m = self.monomial(w).expect("basis words are regular");
            out.add_scaled(&map_tree(&m, target, images, &mut memo), c);
        }
        out
    }

    /// Image of `f` under the derivation sending letter `r` to `images[r]`,
    /// extended by the Leibniz rule. `memo` caches values on basis words.
    pub fn apply_derivation(
        &self,
        f: &LieElement,
        images: &[LieElement],
        memo: &mut HashMap<AssocWord, LieElement>,
    ) -> LieElement {
        let mut out = LieElement::zero();
        for (w, c) in f.terms() {
            let d = self.derive_word(w, images, memo);
            out.add_scaled(&d, c);
        }
        out
    }

    fn derive_word(
        &self,
        w: &AssocWord,
        images: &[LieElement],
        memo: &mut HashMap<AssocWord, LieElement>,
    ) -> LieElement {
        if let Some(d) = memo.get(w) {
            return d.clone();
        }
        let m = self.monomial(w).expect("basis words are regular");
        let d = match m.shape() {
            Shape::Letter(r) => images[usize::from(*r)].clone(),
            Shape::Bracket(l, r) => {
                let (lw, rw) = (l.word(), r.word());
                let dl = self.derive_word(lw, images, memo);
                let dr = self.derive_word(rw, images, memo);
                self.bracket(&dl, &LieElement::basis(rw.clone()))
                    .add(&self.bracket(&LieElement::basis(lw.clone()), &dr))
            }
        };
        memo.insert(w.clone(), d.clone());
        d
    }

    /// Renders the bracketing of a regular word.
    pub fn render_word(&self, w: &AssocWord) -> String {
        self.monomial(w).map(|m| m.render(&self.alphabet)).unwrap_or_else(|_| self.alphabet.format_word(w))
    }
}

fn commutator(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut acc: BTreeMap<AssocWord, i64> = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            *acc.entry(x.concat(y)).or_insert(0) += cx * cy;
            *acc.entry(y.concat(x)).or_insert(0) -= cx * cy;
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn expand_tree(m: &LieMonomial) -> IntPoly {
    match m.shape() {
        Shape::Letter(_) => vec![(m.word().clone(), 1)],
        Shape::Bracket(l, r) => commutator(&expand_tree(l), &expand_tree(r)),
    }
}

fn map_tree(
    m: &LieMonomial,
    target: &FreeLie,
    images: &[LieElement],
    memo: &mut HashMap<AssocWord, LieElement>,
) -> LieElement {
    if let Some(v) = memo.get(m.word()) {
        return v.clone();
    }
    let v = match m.shape() {
        Shape::Letter(r) => images[usize::from(*r)].clone(),
        Shape::Bracket(l, r) => {
            let l = map_tree(l, target, images, memo);
            if l.is_zero() {
                l
            } else {
                target.bracket(&l, &map_tree(r, target, images, memo))
            }
        }
    };
    memo.insert(m.word().clone(), v.clone());
    v
}

fn to_rational(p: &IntPoly) -> BTreeMap<AssocWord, Rational> {
    p.iter().map(|(w, c)| (w.clone(), Rational::from_integer(BigInt::from(*c)))).collect()
}
