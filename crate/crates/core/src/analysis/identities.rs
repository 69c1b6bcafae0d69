//! Bracket identities checked against completed presentations.

use num_traits::Zero;

use super::dims::ChiComputation;
use super::findim::Vector;
use crate::chi::{copy_bracket, BRef, ChiModel, GWord};
use crate::gs::GSBasis;
use crate::lie::{ratio, LieElement};

/// Normal form of `[u-u', v-v', w-w'] - ([u,v,w] - [u,v,w]')` in the two-copy
/// presentation, where `'` is the second copy.
pub fn difference_bracket_defect(basis: &GSBasis, u: &GWord, v: &GWord, w: &GWord) -> LieElement {
    let lie = basis.lie();
    let diff = |g: &GWord| copy_bracket(lie, g, false).sub(&copy_bracket(lie, g, true));
    let lhs = lie.right_normed(&[diff(u), diff(v), diff(w)]);
    let plain =
        lie.right_normed(&[copy_bracket(lie, u, false), copy_bracket(lie, v, false), copy_bracket(lie, w, false)]);
    let psi = lie.right_normed(&[copy_bracket(lie, u, true), copy_bracket(lie, v, true), copy_bracket(lie, w, true)]);
    basis.normal_form(&lhs.sub(&plain.sub(&psi)))
}

/// Normal form of `u . gen + 1/2([gen, a_{i_1}, ..., a_{i_n}] + [gen, a_{i_1}, ..., b_{i_{n-1}, i_n}])`
/// for a bracket `u` of length at least 2.
pub fn action_formula_defect(model: &ChiModel, basis: &GSBasis, u: &GWord, gen: &LieElement) -> LieElement {
    let n = u.len();
    assert!(n >= 2, "brackets of length at least 2");
    let mut all_a: Vec<LieElement> = vec![gen.clone()];
    all_a.extend(u.0.iter().map(|&i| model.a(i)));
    let mut tail_b: Vec<LieElement> = vec![gen.clone()];
    tail_b.extend(u.0[..n - 2].iter().map(|&i| model.a(i)));
    tail_b.push(model.b(BRef::new(u.0[n - 2], u.0[n - 1])));
    let rhs = model.right_normed(&all_a).add(&model.right_normed(&tail_b));
    basis.normal_form(&model.act(u, gen).add(&rhs.scaled(&ratio(1, 2))))
}

/// `[x_{i_1} - a_{i_1}, ..., x_{i_n} - a_{i_n}] - ([x_{i_1}, ..., x_{i_n}] - mu(u))`
/// in the semidirect model.
pub fn difference_generator_defect(comp: &ChiComputation, u: &GWord) -> Vector {
    let chi = &comp.chi;
    let alg = chi.algebra();
    let a = |i: usize| chi.from_l(&comp.l.coords(&comp.model.a(i)));
    let diffs: Vec<Vector> = u.0.iter().map(|&i| sub(&chi.x(i), &a(i))).collect();
    let xs: Vec<Vector> = u.0.iter().map(|&i| chi.x(i)).collect();
    let mu = chi.from_l(&comp.l.coords(&comp.model.mu(u).expect("nonempty")));
    sub(&alg.right_normed(&diffs), &sub(&alg.right_normed(&xs), &mu))
}

fn sub(a: &[crate::lie::Rational], b: &[crate::lie::Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vector(v: &[crate::lie::Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
