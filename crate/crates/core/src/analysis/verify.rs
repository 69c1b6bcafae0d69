//! The named verification suite behind `verify`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::dims::{class_upper_bound, dim_r, r_polynomial, ChiComputation, DimReport};
use super::findim::FinDimLie;
use super::identities::{
    action_formula_defect, difference_bracket_defect, difference_generator_defect, is_zero_vector,
};
use super::quotient::quotient_structure;
use crate::chi::{
    chi_direct_presentation, enumerate_relators, has_forbidden_monomial, ChiModel, GWord, PresentationSpec, TailReading,
};
use crate::error::Result;
use crate::gs::{reduce_set, GSBasis};
use crate::lie::words::{regular_words_of_degree, witt_dim};
use crate::lie::{rat, Alphabet, AssocWord, FreeLie, LieElement, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_m: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub reports: Vec<DimReport>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, name: &str, params: impl Into<String>, passed: bool, value: impl Into<String>) {
        self.checks.push(Check { name: name.into(), params: params.into(), passed, value: value.into() });
    }

    fn error(&mut self, name: &str, params: impl Into<String>, err: crate::Error) {
        self.push(name, params, false, format!("error: {err}"));
    }
}

fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Runs every check whose rank parameter is at most `max_m`.
pub fn run_verifications(max_m: usize) -> VerificationReport {
    let mut s = Suite { checks: Vec::new() };
    witt_table(&mut s);
    match free_arithmetic_trials(1, 500) {
        Ok(n) => s.push("free-arithmetic", "trials=500,seed=1", true, format!("{n} identities")),
        Err(e) => s.push("free-arithmetic", "trials=500,seed=1", false, e),
    }

    let mut comps: BTreeMap<(usize, u32), ChiComputation> = BTreeMap::new();
    for (m, c) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
        if m > max_m {
            continue;
        }
        match ChiComputation::new(m, c) {
            Ok(comp) => {
                comps.insert((m, c), comp);
            }
            Err(e) => s.error("semidirect-model", format!("m={m},c={c}"), e),
        }
    }
    let mut reports = Vec::new();
    for comp in comps.values() {
        match comp.report() {
            Ok(r) => reports.push(r),
            Err(e) => s.error("dimension-report", format!("m={},c={}", comp.m, comp.c), e),
        }
    }
    let report = |m: usize, c: u32| reports.iter().find(|r| r.m == m && r.c == c);

    for comp in comps.values() {
        let alg = comp.chi.algebra();
        let ok = alg.check_antisymmetry().and(alg.check_jacobi()).and(alg.check_grading());
        s.push(
            "structure-constants",
            format!("m={},c={}", comp.m, comp.c),
            ok.is_ok(),
            ok.err().unwrap_or_else(|| format!("dim {}", alg.dim())),
        );
    }

    for m in [2, 3] {
        let Some(r) = report(m, 2) else { continue };
        let k = (m + m * (m - 1) / 2) as u64;
        let expected = vec![k as usize, binom2(k) as usize];
        s.push(
            "ideal-free-nilpotent-class-2",
            format!("m={m}"),
            r.dims_l_per_length == expected,
            format!("{:?}", r.dims_l_per_length),
        );
        s.push("chi-dim-class-2", format!("m={m}"), r.dim_chi == 2 * k + binom2(k), r.dim_chi.to_string());
    }

    for (m, dim_l, dim_chi) in [(2, 11, 16), (3, 47, 61)] {
        let Some(r) = report(m, 3) else { continue };
        s.push(
            "dims-class-3",
            format!("m={m}"),
            r.dim_l == dim_l && r.dim_chi == dim_chi,
            format!("L={},chi={}", r.dim_l, r.dim_chi),
        );
        let comp = &comps[&(m, 3)];
        central_extension(&mut s, m, comp);
    }

    for ((m, c), class) in [((2, 2), 3), ((3, 2), 4), ((2, 3), 4), ((3, 3), 4)] {
        let Some(r) = report(m, c) else { continue };
        s.push("chi-class", format!("m={m},c={c}"), r.class_chi == class, r.class_chi.to_string());
        let bound = class_upper_bound(m, c);
        s.push("chi-class-bound", format!("m={m},c={c}"), r.class_chi <= bound, format!("{} <= {bound}", r.class_chi));
    }

    for ((m, c), expected) in [((2, 2), 0), ((3, 2), 4), ((2, 3), 0), ((3, 3), 4)] {
        let Some(r) = report(m, c) else { continue };
        s.push("r-dim", format!("m={m},c={c}"), r.dim_r == expected, r.dim_r.to_string());
    }
    for m in 1..=3usize {
        let Some(r) = report(m, 2) else { continue };
        let p = r_polynomial(m as i64);
        let ok = dim_r(m as u64, 2, r.dim_chi).is_ok_and(|d| d == p);
        s.push("r-polynomial", format!("m={m}"), ok, format!("{} vs {p}", r.dim_r));
    }
    for m in [2, 3] {
        if let (Some(a), Some(b)) = (report(m, 2), report(m, 3)) {
            s.push(
                "r-equal-across-classes",
                format!("m={m}"),
                a.dim_r == b.dim_r,
                format!("{} and {}", a.dim_r, b.dim_r),
            );
        }
    }

    if let Some(r) = report(2, 2) {
        match quotient_structure(&PresentationSpec::direct(2, Some(2), 4)) {
            Ok(q) => s.push(
                "direct-presentation-dim",
                "m=2,c=2",
                q.dim() as u64 == r.dim_chi && q.dim() == 9,
                q.dim().to_string(),
            ),
            Err(e) => s.error("direct-presentation-dim", "m=2,c=2", e),
        }
    }
    free_semidirect_dims(&mut s, max_m);

    if max_m >= 3 {
        f_n_checks(&mut s);
    }
    identity_checks(&mut s, max_m, &comps);

    let passed = s.checks.iter().all(|c| c.passed);
    VerificationReport { suite: "paper".into(), max_m, passed, checks: s.checks, reports }
}

fn witt_table(s: &mut Suite) {
    let w2: Vec<u64> = (1..=6).map(|k| witt_dim(2, k)).collect();
    let w3: Vec<u64> = (1..=5).map(|k| witt_dim(3, k)).collect();
    let count = |n: usize, k: u32| regular_words_of_degree(&Alphabet::free(n), k).len() as u64;
    let e2: Vec<u64> = (1..=6).map(|k| count(2, k)).collect();
    let e3: Vec<u64> = (1..=5).map(|k| count(3, k)).collect();
    s.push("witt-table", "n=2", w2 == [2, 1, 2, 3, 6, 9] && w2 == e2, format!("{w2:?}"));
    s.push("witt-table", "n=3", w3 == [3, 3, 8, 18, 48] && w3 == e3, format!("{w3:?}"));
}

fn random_element(lie: &FreeLie, rng: &mut ChaCha8Rng, degree: u32) -> LieElement {
    let words = regular_words_of_degree(lie.alphabet(), degree);
    let mut f = LieElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = &words[rng.gen_range(0..words.len())];
        f.add_term(w, &rat(rng.gen_range(-4..=4)));
    }
    f
}

type AssocPoly = BTreeMap<AssocWord, Rational>;

fn assoc_commutator(p: &AssocPoly, q: &AssocPoly) -> AssocPoly {
    let mut out = AssocPoly::new();
    for (u, a) in p {
        for (v, b) in q {
            *out.entry(u.concat(v)).or_insert_with(Rational::zero) += a * b;
            *out.entry(v.concat(u)).or_insert_with(Rational::zero) -= a * b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Randomized Jacobi, antisymmetry and associative-expansion checks on free
/// algebras of rank 2 and 3 in degrees at most 6. Returns the number of
/// identities checked.
pub fn free_arithmetic_trials(seed: u64, trials: usize) -> std::result::Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = [FreeLie::new(Alphabet::free(2)), FreeLie::new(Alphabet::free(3))];
    for t in 0..trials {
        let lie = &algebras[t % 2];
        let df = rng.gen_range(1..=4);
        let dg = rng.gen_range(1..=5 - df);
        let dh = rng.gen_range(1..=6 - df - dg);
        let (f, g, h) =
            (random_element(lie, &mut rng, df), random_element(lie, &mut rng, dg), random_element(lie, &mut rng, dh));
        if !lie.bracket(&f, &f).is_zero() {
            return Err(format!("trial {t}: [f,f] != 0"));
        }
        if lie.bracket(&f, &g) != lie.bracket(&g, &f).neg() {
            return Err(format!("trial {t}: antisymmetry"));
        }
        let jacobi = lie
            .bracket(&f, &lie.bracket(&g, &h))
            .add(&lie.bracket(&g, &lie.bracket(&h, &f)))
            .add(&lie.bracket(&h, &lie.bracket(&f, &g)));
        if !jacobi.is_zero() {
            return Err(format!("trial {t}: Jacobi"));
        }
        let lhs = lie.expand_element(&lie.bracket(&f, &g));
        let rhs = assoc_commutator(&lie.expand_element(&f), &lie.expand_element(&g));
        if lhs != rhs {
            return Err(format!("trial {t}: expansion"));
        }
    }
    Ok(4 * trials)
}

fn central_extension(s: &mut Suite, m: usize, comp: &ChiComputation) {
    let alg = comp.l.algebra();
    let center = alg.center();
    let degree_of = |v: &Vec<Rational>| v.iter().position(|x| !x.is_zero()).map(|i| alg.degrees()[i]);
    let central3: Vec<_> = center.iter().filter(|v| degree_of(v) == Some(3)).cloned().collect();
    let pairs = (m * (m - 1) / 2) as u64;
    let want = m as u64 * pairs;
    let dim3 = FinDimLie::span_dim(&central3) as u64;
    // a-part: free nilpotent class 4 on the a's; b-part: class 2 on the b's
    let mut expected = vec![0u64; 4];
    for k in 1..=4u64 {
        expected[k as usize - 1] += witt_dim(m as u64, k);
    }
    expected[1] += pairs;
    expected[3] += witt_dim(pairs, 2);
    let mut quotient: Vec<u64> = comp.l.dims_per_degree().iter().take(4).map(|&d| d as u64).collect();
    quotient[2] = quotient[2].saturating_sub(want);
    s.push(
        "class-3-central-extension",
        format!("m={m}"),
        dim3 >= want && quotient == expected,
        format!("central degree-3 dim {dim3}, quotient dims {quotient:?}"),
    );
}

/// The free ideal and the two-copy presentation of the free algebra agree
/// degree by degree once the acting algebra is added back.
fn free_semidirect_dims(s: &mut Suite, max_m: usize) {
    for (m, bound) in [(2usize, 6u32), (3, 5)] {
        if m > max_m {
            continue;
        }
        let result = (|| -> Result<(Vec<u64>, Vec<u64>)> {
            let model = ChiModel::new(m)?;
            let rels: Vec<_> = enumerate_relators(&model, &PresentationSpec::l(m, None, bound))?
                .into_iter()
                .map(|r| r.element)
                .collect();
            let l = complete(model.lie().clone(), &rels, bound)?;
            let direct = chi_direct_presentation(m, None, bound)?;
            let rels: Vec<_> = direct.relators.into_iter().map(|r| r.element).collect();
            let chi = complete(direct.lie, &rels, bound)?;
            let count = |b: &GSBasis| -> Result<Vec<u64>> {
                Ok(b.irreducible_monomials(bound)?.values().map(|v| v.len() as u64).collect())
            };
            let semidirect: Vec<u64> = count(&l)?.iter().zip(1..).map(|(d, k)| d + witt_dim(m as u64, k)).collect();
            Ok((semidirect, count(&chi)?))
        })();
        match result {
            Ok((a, b)) => {
                s.push("free-semidirect-dims", format!("m={m},degree<={bound}"), a == b, format!("{a:?} vs {b:?}"))
            }
            Err(e) => s.error("free-semidirect-dims", format!("m={m}"), e),
        }
    }
}

fn complete(lie: std::sync::Arc<FreeLie>, rels: &[LieElement], bound: u32) -> Result<GSBasis> {
    let mut b = reduce_set(lie, rels)?;
    b.complete_bounded(bound);
    Ok(b)
}

/// Completes the relators of degree at most `n + 3` and tests that `f_n`
/// survives with its carrier, watching every inserted rule for monomials
/// with a single `b_{1,2}` or a single `a_3` among `a_2`'s.
pub fn f_n_survives(model: &ChiModel, n: u32, reading: TailReading) -> Result<(bool, bool, bool)> {
    let f = model.f_n(n)?;
    let bound = n + 3;
    let mut spec = PresentationSpec::l(model.m(), None, bound);
    spec.tail_reading = reading;
    let rels: Vec<_> = enumerate_relators(model, &spec)?.into_iter().map(|r| r.element).collect();
    let mut clean = rels.iter().all(|r| !has_forbidden_monomial(model, r));
    let mut b = reduce_set(model.lie().clone(), &rels)?;
    b.complete_bounded_with(bound, &mut |rule| {
        if has_forbidden_monomial(model, rule.element()) {
            clean = false;
        }
    });
    let nf = b.normal_form(&f);
    Ok((!nf.is_zero(), nf.carrier() == f.carrier() && !b.is_reducible(f.carrier().expect("nonzero")), clean))
}

fn f_n_checks(s: &mut Suite) {
    let model = match ChiModel::new(3) {
        Ok(m) => m,
        Err(e) => return s.error("f-nontrivial", "n=2", e),
    };
    for (reading, tag) in [(TailReading::Generic, "generic"), (TailReading::Positional, "positional")] {
        match f_n_survives(&model, 2, reading) {
            Ok((nonzero, carrier, clean)) => {
                s.push("f-nontrivial", format!("n=2,tail={tag}"), nonzero, nonzero.to_string());
                s.push("f-carrier-irreducible", format!("n=2,tail={tag}"), carrier, carrier.to_string());
                s.push("forbidden-monomials-absent", format!("n=2,tail={tag}"), clean, clean.to_string());
            }
            Err(e) => s.error("f-nontrivial", format!("n=2,tail={tag}"), e),
        }
    }
    for n in [2, 4, 6] {
        let ok = model.f_n(n).map(|f| {
            let (p, q) = model.rho_l(&f);
            p.is_zero() && q.is_zero()
        });
        match ok {
            Ok(ok) => s.push("f-in-kernel-of-rho", format!("n={n}"), ok, ok.to_string()),
            Err(e) => s.error("f-in-kernel-of-rho", format!("n={n}"), e),
        }
    }
}

fn identity_checks(s: &mut Suite, max_m: usize, comps: &BTreeMap<(usize, u32), ChiComputation>) {
    if max_m >= 2 {
        match difference_bracket_trials(2, 6, 7, 100) {
            Ok((ok, total)) => {
                s.push("difference-bracket-identity", "m=2,degree<=6,samples=100", ok == total, format!("{ok}/{total}"))
            }
            Err(e) => s.error("difference-bracket-identity", "m=2", e),
        }
    }
    for m in 2..=max_m.min(3) {
        let result = (|| -> Result<(usize, usize, usize, usize)> {
            let model = ChiModel::new(m)?;
            let rels: Vec<_> =
                enumerate_relators(&model, &PresentationSpec::l(m, None, 6))?.into_iter().map(|r| r.element).collect();
            let basis = complete(model.lie().clone(), &rels, 6)?;
            let (mut ok4, mut n4) = (0, 0);
            for r in rels.iter().filter(|r| r.degree().is_some_and(|d| d <= 4)) {
                for t in 1..=m {
                    n4 += 1;
                    if basis.normal_form(&model.derive_action(t, r)).is_zero() {
                        ok4 += 1;
                    }
                }
            }
            let (mut ok5, mut n5) = (0, 0);
            let gens: Vec<LieElement> =
                (0..model.lie().alphabet().len()).map(|r| model.lie().letter(r as u8)).collect();
            for len in 2..=3 {
                for u in GWord::all(m, len) {
                    for g in &gens {
                        n5 += 1;
                        if action_formula_defect(&model, &basis, &u, g).is_zero() {
                            ok5 += 1;
                        }
                    }
                }
            }
            Ok((ok4, n4, ok5, n5))
        })();
        match result {
            Ok((ok4, n4, ok5, n5)) => {
                s.push("derivations-preserve-relators", format!("m={m},degree<=4"), ok4 == n4, format!("{ok4}/{n4}"));
                s.push("generator-action-formula", format!("m={m},length<=3"), ok5 == n5, format!("{ok5}/{n5}"));
            }
            Err(e) => s.error("derivations-preserve-relators", format!("m={m}"), e),
        }
    }
    for comp in comps.values().filter(|c| c.m >= 2) {
        let (mut ok, mut total) = (0, 0);
        for n in 1..=4 {
            for u in GWord::all(comp.m, n) {
                total += 1;
                if is_zero_vector(&difference_generator_defect(comp, &u)) {
                    ok += 1;
                }
            }
        }
        s.push(
            "difference-generator-identity",
            format!("m={},c={},length<=4", comp.m, comp.c),
            ok == total,
            format!("{ok}/{total}"),
        );
    }
}

/// Samples `samples` triples of brackets with total length at most `bound`
/// and checks the difference-bracket identity against the completed two-copy
/// presentation of the free algebra of rank `m`.
pub fn difference_bracket_trials(m: usize, bound: u32, seed: u64, samples: usize) -> Result<(usize, usize)> {
    let p = chi_direct_presentation(m, None, bound)?;
    let rels: Vec<_> = p.relators.into_iter().map(|r| r.element).collect();
    let basis = complete(p.lie, &rels, bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    let word = |rng: &mut ChaCha8Rng, len: usize| GWord((0..len).map(|_| rng.gen_range(1..=m)).collect());
    for _ in 0..samples {
        let total = rng.gen_range(3..=bound as usize);
        let a = rng.gen_range(1..=total - 2);
        let b = rng.gen_range(1..=total - a - 1);
        let c = total - a - b;
        let (u, v, w) = (word(&mut rng, a), word(&mut rng, b), word(&mut rng, c));
        if difference_bracket_defect(&basis, &u, &v, &w).is_zero() {
            ok += 1;
        }
    }
    Ok((ok, samples))
}
