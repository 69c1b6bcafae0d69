use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::findim::{FinDimLie, Vector};
use crate::chi::{chi_direct_presentation, enumerate_relators, ChiModel, PresentationSpec, Variant};
use crate::error::{Error, Result};
use crate::gs::{reduce_set, GSBasis};
use crate::lie::words::enumerate_regular_words;
use crate::lie::{format_element, AssocWord, FreeLie, LieElement, Rational};

/// A finite-dimensional quotient of a free algebra by a homogeneous ideal,
/// with the irreducible monomials as basis.
#[derive(Debug)]
pub struct QuotientAlgebra {
    basis: GSBasis,
    words: Vec<AssocWord>,
    index: HashMap<AssocWord, usize>,
    algebra: FinDimLie,
    bound: u32,
}

impl QuotientAlgebra {
    /// Completes the relators up to `bound` and reads off the quotient. The
    /// top `max_weight` degrees must vanish, so that the quotient is zero in
    /// every higher degree as well.
    pub fn from_relators(lie: Arc<FreeLie>, relators: &[LieElement], bound: u32) -> Result<Self> {
        let mut basis = reduce_set(lie.clone(), relators)?;
        basis.complete_bounded(bound);
        let per_degree = basis.irreducible_monomials(bound)?;
        let w = lie.alphabet().max_weight();
        if let Some((&degree, _)) = per_degree.iter().find(|(&d, ws)| d + w > bound && !ws.is_empty()) {
            return Err(Error::NotNilpotentWithinBound { degree, bound });
        }
        let words: Vec<AssocWord> = per_degree.into_values().flatten().collect();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut q =
            QuotientAlgebra { basis, words, index, algebra: FinDimLie::new(Vec::new(), Vec::new(), Vec::new()), bound };
        let n = q.words.len();
        let mut products = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                if q.words[i].degree() + q.words[j].degree() > bound {
                    continue;
                }
                let f = lie.bracket(&LieElement::basis(q.words[i].clone()), &LieElement::basis(q.words[j].clone()));
                let v = q.coords(&f);
                products[j][i] = v.iter().map(|x| -x).collect();
                products[i][j] = v;
            }
        }
        let labels = q.words.iter().map(|w| lie.render_word(w)).collect();
        let degrees = q.words.iter().map(AssocWord::degree).collect();
        q.algebra = FinDimLie::new(labels, degrees, products);
        Ok(q)
    }

    pub fn lie(&self) -> &Arc<FreeLie> {
        self.basis.lie()
    }

    pub fn gs_basis(&self) -> &GSBasis {
        &self.basis
    }

    pub fn words(&self) -> &[AssocWord] {
        &self.words
    }

    pub fn algebra(&self) -> &FinDimLie {
        &self.algebra
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &AssocWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of the image of `f`; terms above the bound vanish.
    pub fn coords(&self, f: &LieElement) -> Vector {
        let nf = self.basis.normal_form(&f.truncated(self.bound));
        let mut v = vec![Rational::zero(); self.words.len()];
        for (w, c) in nf.terms() {
            let i = self.index[w];
            v[i] = c.clone();
        }
        v
    }

    pub fn element(&self, v: &[Rational]) -> LieElement {
        let mut f = LieElement::zero();
        for (w, c) in self.words.iter().zip(v) {
            f.add_term(w, c);
        }
        f
    }

    pub fn format(&self, v: &[Rational]) -> String {
        format_element(self.lie(), &self.element(v))
    }

    /// Quotient dimensions in degrees `1..=bound`.
    pub fn dims_per_degree(&self) -> Vec<usize> {
        (1..=self.bound).map(|d| self.words.iter().filter(|w| w.degree() == d).count()).collect()
    }

    /// Quotient dimensions by number of letters.
    pub fn dims_per_length(&self) -> Vec<usize> {
        let top = self.words.iter().map(AssocWord::len).max().unwrap_or(0);
        (1..=top).map(|l| self.words.iter().filter(|w| w.len() == l).count()).collect()
    }
}

/// The quotient described by `spec`, built on the given model for the
/// presentation of the ideal.
pub fn quotient_structure_with(model: &ChiModel, spec: &PresentationSpec) -> Result<QuotientAlgebra> {
    match spec.variant {
        Variant::L => {
            let rels: Vec<_> = enumerate_relators(model, spec)?.into_iter().map(|r| r.element).collect();
            QuotientAlgebra::from_relators(model.lie().clone(), &rels, spec.degree_bound)
        }
        Variant::Direct => quotient_structure(spec),
    }
}

pub fn quotient_structure(spec: &PresentationSpec) -> Result<QuotientAlgebra> {
    match spec.variant {
        Variant::L => quotient_structure_with(&ChiModel::new(spec.m)?, spec),
        Variant::Direct => {
            let p = chi_direct_presentation(spec.m, spec.nilpotency_class, spec.degree_bound)?;
            let rels: Vec<_> = p.relators.into_iter().map(|r| r.element).collect();
            QuotientAlgebra::from_relators(p.lie, &rels, spec.degree_bound)
        }
    }
}

/// Free nilpotent algebra of rank `m` and class `c` on the regular words.
pub fn free_nilpotent(lie: &FreeLie, c: u32) -> (Vec<AssocWord>, FinDimLie) {
    let words = enumerate_regular_words(lie.alphabet(), c);
    let index: HashMap<_, _> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let n = words.len();
    let mut products = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            if words[i].degree() + words[j].degree() > c {
                continue;
            }
            let f = lie.bracket(&LieElement::basis(words[i].clone()), &LieElement::basis(words[j].clone()));
            for (w, x) in f.terms() {
                products[i][j][index[w]] = x.clone();
            }
        }
    }
    let labels = words.iter().map(|w| lie.render_word(w)).collect();
    let degrees = words.iter().map(AssocWord::degree).collect();
    (words, FinDimLie::new(labels, degrees, products))
}

type Matrix = Vec<Vector>;

fn apply(a: &Matrix, v: &[Rational]) -> Vector {
    let n = v.len();
    let mut out = vec![Rational::zero(); n];
    for (col, x) in a.iter().zip(v) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(col) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ca, cb)| {
            let ab = apply(a, cb);
            let ba = apply(b, ca);
            ab.iter().zip(&ba).map(|(x, y)| x - y).collect()
        })
        .collect()
}

fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|c| c.iter().all(Zero::is_zero))
}

/// The semidirect product of a quotient of the ideal's presentation with the
/// free nilpotent algebra of class `c`, acting through the derivations.
#[derive(Debug)]
pub struct SemidirectChi {
    algebra: FinDimLie,
    l_dim: usize,
    g_words: Vec<AssocWord>,
    g: Arc<FreeLie>,
}

impl SemidirectChi {
    pub fn algebra(&self) -> &FinDimLie {
        &self.algebra
    }

    pub fn l_dim(&self) -> usize {
        self.l_dim
    }

    pub fn g_dim(&self) -> usize {
        self.g_words.len()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Embeds coordinates of the ideal quotient.
    pub fn from_l(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        out.resize(self.dim(), Rational::zero());
        out
    }

    /// The generator `x_i` of the acting algebra.
    pub fn x(&self, i: usize) -> Vector {
        let w = self.g.alphabet().parse_word(&format!("x{i}")).expect("index in range");
        let k = self.g_words.iter().position(|u| *u == w).expect("letters are basis words");
        self.algebra.basis_vector(self.l_dim + k)
    }
}

pub fn semidirect_chi(model: &ChiModel, l: &QuotientAlgebra, c: u32) -> Result<SemidirectChi> {
    let n = l.dim();
    let bound = l.bound();
    let complete_to = l.gs_basis().complete_to();
    for rule in l.gs_basis().rules() {
        if rule.degree() + 1 > complete_to {
            continue;
        }
        for s in 1..=model.m() {
            let image = model.derive_action(s, rule.element());
            if !l.gs_basis().normal_form(&image).is_zero() {
                return Err(Error::ActionNotWellDefined(format!(
                    "x{s} maps the relator {} outside the ideal",
                    format_element(model.lie(), rule.element())
                )));
            }
        }
    }
    let letters: Vec<Matrix> = (1..=model.m())
        .map(|s| {
            l.words()
                .iter()
                .map(|w| {
                    if w.degree() + 1 > bound {
                        vec![Rational::zero(); n]
                    } else {
                        l.coords(&model.derive_action(s, &LieElement::basis(w.clone())))
                    }
                })
                .collect()
        })
        .collect();
    let g = model.g().clone();
    let mut memo: HashMap<AssocWord, Matrix> = HashMap::new();
    fn action(g: &FreeLie, w: &AssocWord, letters: &[Matrix], memo: &mut HashMap<AssocWord, Matrix>) -> Matrix {
        if let Some(a) = memo.get(w) {
            return a.clone();
        }
        let m = g.monomial(w).expect("regular");
        let a = match m.shape() {
            crate::lie::Shape::Letter(r) => letters[usize::from(*r)].clone(),
            crate::lie::Shape::Bracket(u, v) => {
                let au = action(g, u.word(), letters, memo);
                let av = action(g, v.word(), letters, memo);
                commutator(&au, &av)
            }
        };
        memo.insert(w.clone(), a.clone());
        a
    }
    let (g_words, g_alg) = free_nilpotent(&g, c);
    for w in crate::lie::regular_words_of_degree(g.alphabet(), c + 1) {
        if !is_zero_matrix(&action(&g, &w, &letters, &mut memo)) {
            return Err(Error::ActionNotWellDefined(format!(
                "{} acts nontrivially but vanishes in the acting algebra",
                g.render_word(&w)
            )));
        }
    }
    let actions: Vec<Matrix> = g_words.iter().map(|w| action(&g, w, &letters, &mut memo)).collect();
    let total = n + g_words.len();
    let zero = vec![Rational::zero(); total];
    let mut products = vec![vec![zero.clone(); total]; total];
    for i in 0..n {
        for j in 0..n {
            let mut v = l.algebra().product(i, j);
            v.resize(total, Rational::zero());
            products[i][j] = v;
        }
    }
    for (p, a) in actions.iter().enumerate() {
        for k in 0..n {
            let mut v = a[k].clone();
            v.resize(total, Rational::zero());
            products[k][n + p] = v.iter().map(|x| -x).collect();
            products[n + p][k] = v;
        }
    }
    for p in 0..g_words.len() {
        for q in 0..g_words.len() {
            let mut v = vec![Rational::zero(); n];
            v.extend(g_alg.product(p, q));
            products[n + p][n + q] = v;
        }
    }
    let mut labels: Vec<String> = l.algebra().labels().to_vec();
    labels.extend(g_alg.labels().iter().cloned());
    let mut degrees = l.algebra().degrees().to_vec();
    degrees.extend(g_alg.degrees());
    let algebra = FinDimLie::new(labels, degrees, products);
    algebra.check_antisymmetry().map_err(Error::ActionNotWellDefined)?;
    algebra.check_jacobi().map_err(Error::ActionNotWellDefined)?;
    Ok(SemidirectChi { algebra, l_dim: n, g_words, g })
}
