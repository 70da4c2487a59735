use std::collections::BTreeSet;

use proptest::prelude::*;

use dualfol::dual::{dual, dualize_formula, dualize_proof, flip_sorts, DualityMap};
use dualfol::kernel::{check_proof_in, generate_proof, mutate_step, parse_proof_in, print_proof, Mutation};
use dualfol::syntax::{all_var_names, desugar, is_core, rename_bound, term_vars, Connective};
use dualfol::{
    alpha_equiv, elaborate_sorts, free_vars, parse_formula, print_formula, substitute, Formula, Language, Quantifier,
    Sort, Term, Var,
};

const NAMES: [&str; 5] = ["x", "y", "z", "X", "Y"];

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(&NAMES[..]).prop_map(str::to_string)
}

fn sort() -> impl Strategy<Value = Sort> {
    prop::sample::select(&Sort::ALL[..])
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => name().prop_map(Term::var),
        1 => prop::sample::select(&["V", "emptyset"][..]).prop_map(Term::constant),
    ];
    leaf.prop_recursive(2, 4, 1, |t| t.prop_map(|a| Term::app("comp", vec![a])))
}

fn atom() -> impl Strategy<Value = Formula> {
    prop_oneof![
        (prop::sample::select(&["mem", "dmem", "subset", "subsed"][..]), term(), term())
            .prop_map(|(r, a, b)| Formula::atom(r, vec![a, b])),
        (prop::sample::select(&["isSet", "isSed"][..]), term()).prop_map(|(r, a)| Formula::atom(r, vec![a])),
        (term(), term()).prop_map(|(a, b)| Formula::eq(a, b)),
    ]
}

/// Random formulas, passed once through the printer and parser so that bound
/// occurrences carry their binder's sort.
fn formula() -> impl Strategy<Value = Formula> {
    atom()
        .prop_recursive(6, 48, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (prop::sample::select(&Connective::ALL[..]), inner.clone(), inner.clone())
                    .prop_map(|(c, a, b)| Formula::binary(c, a, b)),
                (prop::sample::select(&Quantifier::ALL[..]), name(), sort(), inner)
                    .prop_map(|(q, x, s, body)| Formula::quant(q, Var::new(x, s), body)),
            ]
        })
        .prop_map(|f| parse_formula(&print_formula(&f)).expect("printed formulas parse"))
}

fn names(vars: BTreeSet<Var>) -> BTreeSet<String> {
    vars.into_iter().map(|v| v.name).collect()
}

fn is_free(name: &str, f: &Formula) -> bool {
    free_vars(f).iter().any(|v| v.name == name)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(f in formula()) {
        let text = print_formula(&f);
        prop_assert_eq!(parse_formula(&text).unwrap(), f.clone());
        prop_assert_eq!(f.to_string(), text);
    }

    #[test]
    fn substitution_updates_free_variables(f in formula(), x in name(), t in term()) {
        let Ok(g) = substitute(&f, &Var::class(x.clone()), &t) else { return Ok(()) };
        let mut want = names(free_vars(&f));
        if want.remove(&x) {
            want.extend(names(term_vars(&t)));
        }
        prop_assert_eq!(names(free_vars(&g)), want);
    }

    #[test]
    fn substituting_a_bound_name_changes_nothing(f in formula(), x in name(), t in term()) {
        prop_assume!(!is_free(&x, &f));
        prop_assert_eq!(substitute(&f, &Var::class(x), &t).unwrap(), f);
    }

    #[test]
    fn substituting_a_variable_for_itself_changes_nothing(f in formula(), x in name()) {
        prop_assert_eq!(substitute(&f, &Var::class(x.clone()), &Term::var(x)).unwrap(), f);
    }

    #[test]
    fn alpha_equivalence_is_an_equivalence(f in formula()) {
        let mut avoid = all_var_names(&f);
        let g = rename_bound(&f, &mut avoid);
        let h = rename_bound(&g, &mut avoid);
        prop_assert!(alpha_equiv(&f, &f));
        prop_assert!(alpha_equiv(&f, &g));
        prop_assert!(alpha_equiv(&g, &f));
        prop_assert!(alpha_equiv(&g, &h));
        prop_assert!(alpha_equiv(&f, &h));
        prop_assert_eq!(names(free_vars(&f)), names(free_vars(&g)));
    }

    #[test]
    fn alpha_equivalence_sees_changed_atoms(f in formula()) {
        let g = Formula::and(f.clone(), parse_formula("(mem x y)").unwrap());
        prop_assert!(!alpha_equiv(&f, &g));
        prop_assert!(!alpha_equiv(&f, &Formula::not(f.clone())));
    }

    #[test]
    fn sort_elaboration_is_idempotent(f in formula()) {
        let e = elaborate_sorts(&f);
        prop_assert!(e.binder_sorts().iter().all(|s| *s == Sort::Class));
        prop_assert_eq!(elaborate_sorts(&e), e.clone());
        prop_assert_eq!(names(free_vars(&e)), names(free_vars(&f)));
    }

    #[test]
    fn macro_expansion_is_confluent(f in formula(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..64)) {
        let lang = Language::default();
        let full = lang.expand_macros(&f).unwrap();
        let mut g = f.clone();
        let mut picks = picks.into_iter();
        loop {
            let left = lang.macros.occurrences(&g, &lang.signature);
            if left == 0 {
                break;
            }
            let i = picks.next().map_or(0, |p| p.index(left));
            g = lang.macros.expand_step(&g, &lang.signature, i).unwrap();
        }
        prop_assert!(alpha_equiv(&g, &full), "{} vs {}", g, full);
        prop_assert_eq!(names(free_vars(&full)), names(free_vars(&f)));
    }

    #[test]
    fn normal_forms_are_core(f in formula()) {
        let n = Language::default().normalize(&f).unwrap();
        prop_assert!(is_core(&n));
        prop_assert_eq!(desugar(&n), n);
    }

    #[test]
    fn dual_is_an_involution_of_equal_size(f in formula()) {
        let d = DualityMap::corpus();
        let g = dual(&f, &d);
        prop_assert_eq!(dual(&g, &d), f.clone());
        prop_assert_eq!(dualize_formula(&dualize_formula(&f, &d), &d), f.clone());
        prop_assert_eq!(flip_sorts(&flip_sorts(&f, &d), &d), f.clone());
        prop_assert_eq!(g.size(), f.size());
        prop_assert_eq!(names(free_vars(&g)), names(free_vars(&f)));
    }

    #[test]
    fn dual_commutes_with_normalization(f in formula()) {
        let lang = Language::default();
        let d = DualityMap::corpus();
        prop_assert_eq!(lang.normalize(&dual(&f, &d)).unwrap(), dual(&lang.normalize(&f).unwrap(), &d));
    }

    #[test]
    fn generated_proofs_check_and_mutations_fail_in_place(seed in any::<u64>(), depth in 1usize..=6, pick in any::<prop::sample::Index>(), formula_mutation in any::<bool>()) {
        let lang = Language::default();
        let theory = vec![parse_formula("(forall (u sed) (dmem u V))").unwrap()];
        let proof = generate_proof(seed, depth, &theory).unwrap();
        prop_assert!(check_proof_in(&lang, &proof).is_accepted());
        prop_assert_eq!(parse_proof_in(&lang, &print_proof(&proof)).unwrap(), proof.clone());
        let moved = dualize_proof(&proof, &DualityMap::corpus());
        prop_assert!(check_proof_in(&lang, &moved).is_accepted());
        let step = proof.steps[pick.index(proof.steps.len())].index;
        let mutation = if formula_mutation { Mutation::Formula } else { Mutation::Justification };
        let bad = mutate_step(&proof, step, mutation);
        prop_assert_eq!(check_proof_in(&lang, &bad).rejected_step(), Some(step));
    }
}
