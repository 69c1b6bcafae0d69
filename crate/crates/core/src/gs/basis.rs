use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use super::bracketing::{special_bracketing, SpecialBracketing};
use crate::error::{Error, Result};
use crate::lie::words::enumerate_regular_words;
use crate::lie::{format_element, AssocWord, FreeLie, LieElement};

/// A monic element used as the rewriting rule `carrier -> carrier - element`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    element: LieElement,
    carrier: AssocWord,
}

impl RewriteRule {
    /// Wraps a nonzero element, scaling it to be monic.
    pub fn new(element: &LieElement) -> Option<Self> {
        let element = element.monic()?;
        let carrier = element.carrier()?.clone();
        Some(RewriteRule { element, carrier })
    }

    pub fn element(&self) -> &LieElement {
        &self.element
    }

    pub fn carrier(&self) -> &AssocWord {
        &self.carrier
    }

    pub fn degree(&self) -> u32 {
        self.carrier.degree()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AmbiguityKind {
    /// `left = ab`, `right = bc`, `word = abc` with `a`, `b`, `c` nonempty.
    Overlap,
    /// `right` is a proper subword of `left = word`.
    Inclusion,
}

/// A pair of rule carriers that can be composed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub left: AssocWord,
    pub right: AssocWord,
    pub word: AssocWord,
    /// Position of `right` inside `word`.
    pub offset: usize,
}

impl Ambiguity {
    pub fn degree(&self) -> u32 {
        self.word.degree()
    }
}

/// All overlap and inclusion ambiguities with `f` on the left and `g` on the right.
pub fn ambiguities(lie: &FreeLie, f: &AssocWord, g: &AssocWord) -> Vec<Ambiguity> {
    let (p, q) = (f.letters(), g.letters());
    let mut out = Vec::new();
    for k in 1..p.len().min(q.len()) {
        if p[p.len() - k..] == q[..k] {
            out.push(Ambiguity {
                kind: AmbiguityKind::Overlap,
                left: f.clone(),
                right: g.clone(),
                word: f.concat(&g.subword(lie.alphabet(), k, q.len())),
                offset: p.len() - k,
            });
        }
    }
    if q.len() < p.len() {
        let mut start = 0;
        while let Some(i) = f.letters()[start..].windows(q.len()).position(|w| w == q) {
            out.push(Ambiguity {
                kind: AmbiguityKind::Inclusion,
                left: f.clone(),
                right: g.clone(),
                word: f.clone(),
                offset: start + i,
            });
            start += i + 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Pending {
    Input(u64),
    Overlap(Ambiguity),
}

/// A reduced rule set, complete for all ambiguities up to `complete_to`.
#[derive(Debug)]
pub struct GSBasis {
    lie: Arc<FreeLie>,
    rules: BTreeMap<AssocWord, RewriteRule>,
    max_rule_len: usize,
    truncation_degree: u32,
    complete_to: u32,
    templates: RwLock<HashMap<(AssocWord, usize, usize), Arc<SpecialBracketing>>>,
    reducers: RwLock<HashMap<AssocWord, Arc<LieElement>>>,
}

impl GSBasis {
    pub fn empty(lie: Arc<FreeLie>) -> Self {
        GSBasis {
            lie,
            rules: BTreeMap::new(),
            max_rule_len: 0,
            truncation_degree: 0,
            complete_to: 0,
            templates: RwLock::default(),
            reducers: RwLock::default(),
        }
    }

    pub fn lie(&self) -> &Arc<FreeLie> {
        &self.lie
    }

    /// Rules in ascending order of carrier.
    pub fn rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.values()
    }

    pub fn rule(&self, carrier: &AssocWord) -> Option<&RewriteRule> {
        self.rules.get(carrier)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn complete_to(&self) -> u32 {
        self.complete_to
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    /// Cached special bracketing of `u` around `start..start + len`.
    pub fn special(&self, u: &AssocWord, start: usize, len: usize) -> Result<Arc<SpecialBracketing>> {
        let key = (u.clone(), start, len);
        if let Some(sb) = self.templates.read().unwrap().get(&key) {
            return Ok(sb.clone());
        }
        let sb = Arc::new(special_bracketing(&self.lie, u, start, len)?);
        self.templates.write().unwrap().insert(key, sb.clone());
        Ok(sb)
    }

    /// First occurrence (leftmost, then shortest) of a rule carrier inside `w`.
    pub fn find_reducer(&self, w: &AssocWord) -> Option<(usize, &RewriteRule)> {
        let letters = w.letters();
        let alphabet = self.lie.alphabet();
        for start in 0..letters.len() {
            for len in 1..=self.max_rule_len.min(letters.len() - start) {
                let sub = alphabet.word(&letters[start..start + len]);
                if let Some(rule) = self.rules.get(&sub) {
                    return Some((start, rule));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &AssocWord) -> bool {
        self.find_reducer(w).is_some()
    }

    /// A monic ideal element with carrier `w`, if `w` contains a rule carrier.
    fn reducer(&self, w: &AssocWord) -> Option<Arc<LieElement>> {
        if let Some(r) = self.reducers.read().unwrap().get(w) {
            return Some(r.clone());
        }
        let (start, rule) = self.find_reducer(w)?;
        let sb = self.special(w, start, rule.carrier.len()).expect("rule carriers are regular subwords");
        let r = Arc::new(sb.apply(&self.lie, &rule.element));
        debug_assert_eq!(r.carrier(), Some(w));
        debug_assert!(r.is_monic());
        self.reducers.write().unwrap().insert(w.clone(), r.clone());
        Some(r)
    }

    /// Rewrites every reducible term until none is left.
    pub fn normal_form(&self, f: &LieElement) -> LieElement {
        let mut f = f.clone();
        let mut out = LieElement::zero();
        while let Some((w, c)) = f.leading() {
            let (w, c) = (w.clone(), c.clone());
            match self.reducer(&w) {
                Some(r) => f.add_scaled(&r, &-c),
                None => {
                    f.remove_term(&w);
                    out.add_term(&w, &c);
                }
            }
        }
        out
    }

    /// First-order composition `u_1 - u_2` of an overlap ambiguity.
    pub fn compose_first(&self, f: &RewriteRule, g: &RewriteRule, amb: &Ambiguity) -> Result<LieElement> {
        if amb.kind != AmbiguityKind::Overlap || amb.left != f.carrier || amb.right != g.carrier {
            return Err(Error::InvalidOccurrence("ambiguity does not match the rules".into()));
        }
        let s1 = self.special(&amb.word, 0, f.carrier.len())?;
        let s2 = self.special(&amb.word, amb.offset, g.carrier.len())?;
        Ok(s1.apply(&self.lie, &f.element).sub(&s2.apply(&self.lie, &g.element)))
    }

    /// Second-order composition `f - f_*` of an inclusion ambiguity.
    pub fn compose_second(&self, f: &RewriteRule, g: &RewriteRule, amb: &Ambiguity) -> Result<LieElement> {
        if amb.kind != AmbiguityKind::Inclusion || amb.left != f.carrier || amb.right != g.carrier {
            return Err(Error::InvalidOccurrence("ambiguity does not match the rules".into()));
        }
        let s = self.special(&f.carrier, amb.offset, g.carrier.len())?;
        Ok(f.element.sub(&s.apply(&self.lie, &g.element)))
    }

    fn insert_rule(&mut self, rule: RewriteRule) {
        self.max_rule_len = self.max_rule_len.max(rule.carrier.len());
        self.rules.insert(rule.carrier.clone(), rule);
    }

    /// Resolves every ambiguity of degree at most `max_degree`, processing them
    /// in ascending order of (degree, ambiguity word).
    pub fn complete_bounded(&mut self, max_degree: u32) {
        self.complete_bounded_with(max_degree, &mut |_| {});
    }

    /// As [`GSBasis::complete_bounded`], calling `observer` on every rule added.
    pub fn complete_bounded_with(&mut self, max_degree: u32, observer: &mut dyn FnMut(&RewriteRule)) {
        if max_degree <= self.complete_to {
            return;
        }
        let done = self.complete_to;
        let above: Vec<AssocWord> = self.rules.keys().filter(|w| w.degree() > done).cloned().collect();
        let pulled: Vec<RewriteRule> = above.iter().filter_map(|w| self.rules.remove(w)).collect();
        // cached reducers above `done` may be built from the pulled rules
        self.reducers.write().unwrap().retain(|w, _| w.degree() <= done);
        self.max_rule_len = self.rules.keys().map(AssocWord::len).max().unwrap_or(0);
        let mut queue: BTreeMap<(AssocWord, Pending), Option<LieElement>> = BTreeMap::new();
        let carriers: Vec<AssocWord> = self.rules.keys().cloned().collect();
        for f in &carriers {
            for g in &carriers {
                for amb in ambiguities(&self.lie, f, g) {
                    if amb.kind == AmbiguityKind::Overlap && amb.degree() > done && amb.degree() <= max_degree {
                        queue.insert((amb.word.clone(), Pending::Overlap(amb)), None);
                    }
                }
            }
        }
        for (i, rule) in pulled.into_iter().enumerate() {
            queue.insert((rule.carrier.clone(), Pending::Input(i as u64)), Some(rule.element));
        }
        self.run_queue(queue, max_degree, observer);
        self.complete_to = max_degree;
        self.truncation_degree = max_degree;
    }

    fn run_queue(
        &mut self,
        mut queue: BTreeMap<(AssocWord, Pending), Option<LieElement>>,
        max_degree: u32,
        observer: &mut dyn FnMut(&RewriteRule),
    ) {
        while let Some(((word, pending), input)) = queue.pop_first() {
            let candidate = match pending {
                Pending::Input(_) => input.expect("inputs carry their element"),
                Pending::Overlap(amb) => {
                    if word.degree() > max_degree {
                        continue;
                    }
                    let f = &self.rules[&amb.left];
                    let g = &self.rules[&amb.right];
                    self.compose_first(f, g, &amb).expect("queued ambiguities match their rules")
                }
            };
            let reduced = self.normal_form(&candidate);
            let Some(rule) = RewriteRule::new(&reduced) else { continue };
            let degree = rule.degree();
            observer(&rule);
            let new = rule.carrier.clone();
            self.insert_rule(rule);
            if degree > max_degree {
                continue;
            }
            for other in self.rules.keys() {
                for (f, g) in [(&new, other), (other, &new)] {
                    for amb in ambiguities(&self.lie, f, g) {
                        if amb.kind == AmbiguityKind::Overlap && amb.degree() <= max_degree {
                            queue.insert((amb.word.clone(), Pending::Overlap(amb)), None);
                        }
                    }
                    if f == g {
                        break;
                    }
                }
            }
        }
    }

    /// Regular words of each degree `1..=max_degree` avoiding every rule
    /// carrier; a basis of the quotient in those degrees.
    pub fn irreducible_monomials(&self, max_degree: u32) -> Result<BTreeMap<u32, Vec<AssocWord>>> {
        if max_degree > self.complete_to {
            return Err(Error::IncompleteBasis { complete_to: self.complete_to, requested: max_degree });
        }
        let mut out: BTreeMap<u32, Vec<AssocWord>> = (1..=max_degree).map(|d| (d, Vec::new())).collect();
        for w in enumerate_regular_words(self.lie.alphabet(), max_degree) {
            if !self.is_reducible(&w) {
                out.get_mut(&w.degree()).expect("degree in range").push(w);
            }
        }
        Ok(out)
    }

    /// Deterministic text dump: a `deg=<k> carrier=<word>` line, then the rule.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for rule in self.rules.values() {
            let _ = writeln!(
                out,
                "deg={} carrier={}\n{}",
                rule.degree(),
                self.lie.alphabet().format_word(&rule.carrier),
                format_element(&self.lie, &rule.element)
            );
        }
        out
    }
}

fn check_homogeneous(f: &LieElement) -> Result<()> {
    if f.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::NonHomogeneousInput(format!("element with {} terms spans several degrees", f.len())))
    }
}

/// Makes every element monic and interreduces, without resolving ambiguities.
pub fn reduce_set(lie: Arc<FreeLie>, elements: &[LieElement]) -> Result<GSBasis> {
    for f in elements {
        if f.is_zero() {
            return Err(Error::ZeroElementInInput);
        }
        check_homogeneous(f)?;
    }
    let mut basis = GSBasis::empty(lie);
    let mut queue = BTreeMap::new();
    for (i, f) in elements.iter().enumerate() {
        let carrier = f.carrier().expect("nonzero").clone();
        queue.insert((carrier, Pending::Input(i as u64)), Some(f.clone()));
    }
    basis.run_queue(queue, 0, &mut |_| {});
    Ok(basis)
}

/// Completes `basis` up to `max_degree`.
pub fn complete_bounded(mut basis: GSBasis, max_degree: u32) -> GSBasis {
    basis.complete_bounded(max_degree);
    basis
}

/// Normal form of `f` with respect to `basis`.
pub fn normal_form(f: &LieElement, basis: &GSBasis) -> LieElement {
    basis.normal_form(f)
}

/// Decides whether the homogeneous `f` lies in the ideal generated by the
/// homogeneous set `relators`.
pub fn is_member(lie: Arc<FreeLie>, f: &LieElement, relators: &[LieElement]) -> Result<bool> {
    check_homogeneous(f)?;
    let Some(d) = f.degree() else { return Ok(true) };
    let gens: Vec<LieElement> = relators
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| check_homogeneous(r).map(|_| r))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|r| r.degree().is_some_and(|e| e <= d))
        .cloned()
        .collect();
    let mut basis = reduce_set(lie, &gens)?;
    basis.complete_bounded(d);
    Ok(basis.normal_form(f).is_zero())
}
