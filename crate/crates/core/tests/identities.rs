use chi_lie::analysis::identities::{
    action_formula_defect, difference_bracket_defect, difference_generator_defect, is_zero_vector,
};
use chi_lie::analysis::ChiComputation;
use chi_lie::chi::{chi_direct_presentation, enumerate_relators, ChiModel, GWord, PresentationSpec};
use chi_lie::gs::{ambiguities, reduce_set, AmbiguityKind, GSBasis};
use chi_lie::lie::LieElement;

fn completed_l(model: &ChiModel, bound: u32) -> (Vec<LieElement>, GSBasis) {
    let rels: Vec<LieElement> = enumerate_relators(model, &PresentationSpec::l(model.m(), None, bound))
        .unwrap()
        .into_iter()
        .map(|r| r.element)
        .collect();
    let mut basis = reduce_set(model.lie().clone(), &rels).unwrap();
    basis.complete_bounded(bound);
    (rels, basis)
}

#[test]
fn special_bracketings_of_overlaps_keep_the_carrier() {
    let model = ChiModel::new(3).unwrap();
    let (_, basis) = completed_l(&model, 5);
    let lie = basis.lie().clone();
    let rules: Vec<_> = basis.rules().cloned().collect();
    let mut seen = 0;
    for f in &rules {
        for g in &rules {
            for amb in ambiguities(&lie, f.carrier(), g.carrier()) {
                assert_eq!(amb.kind, AmbiguityKind::Overlap, "carriers of a reduced basis never contain each other");
                let left = basis.special(&amb.word, 0, f.carrier().len()).unwrap();
                let right = basis.special(&amb.word, amb.offset, g.carrier().len()).unwrap();
                assert_eq!(left.apply(&lie, f.element()).carrier(), Some(&amb.word));
                assert_eq!(right.apply(&lie, g.element()).carrier(), Some(&amb.word));
                let composition = basis.compose_first(f, g, &amb).unwrap();
                assert!(composition.carrier().is_none_or(|c| c < &amb.word));
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn derivations_preserve_the_relator_ideal() {
    for m in [2, 3] {
        let model = ChiModel::new(m).unwrap();
        let (rels, basis) = completed_l(&model, 5);
        for r in rels.iter().filter(|r| r.degree().unwrap() <= 4) {
            for s in 1..=m {
                assert!(basis.normal_form(&model.derive_action(s, r)).is_zero(), "m={m}, s={s}");
            }
        }
    }
}

#[test]
fn action_of_brackets_on_generators() {
    for m in [2, 3] {
        let model = ChiModel::new(m).unwrap();
        let (_, basis) = completed_l(&model, 6);
        let lie = model.lie();
        let gens: Vec<LieElement> = (0..lie.alphabet().len()).map(|r| lie.letter(r as u8)).collect();
        for len in 2..=3 {
            for u in GWord::all(m, len) {
                for g in &gens {
                    assert!(action_formula_defect(&model, &basis, &u, g).is_zero(), "m={m}, u={u:?}");
                }
            }
        }
    }
}

#[test]
fn brackets_of_differences_in_the_two_copy_presentation() {
    let p = chi_direct_presentation(2, None, 6).unwrap();
    let rels: Vec<LieElement> = p.relators.into_iter().map(|r| r.element).collect();
    let mut basis = reduce_set(p.lie, &rels).unwrap();
    basis.complete_bounded(6);
    for (u, v, w) in [
        (vec![1], vec![2], vec![1]),
        (vec![1, 2], vec![1], vec![2]),
        (vec![2, 1], vec![1, 2], vec![1]),
        (vec![1], vec![1, 2, 2], vec![2, 1]),
    ] {
        let defect = difference_bracket_defect(&basis, &GWord(u), &GWord(v), &GWord(w));
        assert!(defect.is_zero());
    }
}

#[test]
fn differences_of_generator_brackets_in_the_semidirect_model() {
    let comp = ChiComputation::new(2, 3).unwrap();
    for n in 1..=5 {
        for u in GWord::all(2, n) {
            assert!(is_zero_vector(&difference_generator_defect(&comp, &u)), "{u:?}");
        }
    }
}
