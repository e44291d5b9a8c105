//! Cross-module consistency: the term-language checker and the hand-coded
//! algebra predicates are independent evaluation routes for the same laws,
//! so they must agree on every enumerated algebra. Also the implications
//! between predicates that the theory promises.

use std::sync::Arc;

use womlat::algebra::UnaryAlgebra;
use womlat::search::{enumerate_lattices, enumerate_unary, PropertyConstraints};
use womlat::term::{holds, parse_formula, EvalContext, Formula};

fn all_algebras_up_to(max_n: usize) -> Vec<UnaryAlgebra> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for l in enumerate_lattices(n).unwrap() {
            let l = Arc::new(l);
            out.extend(enumerate_unary(&l, &PropertyConstraints::default()).unwrap());
        }
    }
    out
}

fn formula(text: &str) -> Formula {
    parse_formula(text).unwrap()
}

#[test]
fn term_engine_agrees_with_predicates_up_to_n5() {
    let wom = formula("(x /\\ y) \\/ (x /\\ (x /\\ y)') = x");
    let wom_conditional = formula("x <= y => y = x \\/ (y /\\ x')");
    let dwom = formula("(x \\/ y) /\\ (x \\/ (x \\/ y)') = x");
    let dwom_conditional = formula("x <= y => x = y /\\ (x \\/ y')");
    let dnl = formula("(x')' = x");
    let wdnl = formula("((x')')' = x'");
    let antitone = formula("x <= y => y' <= x'");
    let comp_join = formula("x \\/ x' = 1");
    let comp_meet = formula("x /\\ x' = 0");
    let dm_join = formula("(x \\/ y)' = x' /\\ y'");
    let dm_meet = formula("(x /\\ y)' = x' \\/ y'");

    for a in all_algebras_up_to(5) {
        let ctx = EvalContext::for_algebra(&a);
        let via_terms = |f: &Formula| holds(f, &ctx).unwrap().holds;

        assert_eq!(via_terms(&wom), a.is_weakly_orthomodular().holds);
        assert_eq!(via_terms(&wom_conditional), a.is_weakly_orthomodular().holds);
        assert_eq!(via_terms(&dwom), a.is_dually_weakly_orthomodular().holds);
        assert_eq!(via_terms(&dwom_conditional), a.is_dually_weakly_orthomodular().holds);
        assert_eq!(via_terms(&dnl), a.satisfies_double_negation().holds);
        assert_eq!(via_terms(&wdnl), a.satisfies_weak_double_negation().holds);
        assert_eq!(via_terms(&antitone), a.is_antitone().holds);
        assert_eq!(
            via_terms(&comp_join) && via_terms(&comp_meet),
            a.is_complementation().unwrap().holds
        );
        assert_eq!(via_terms(&dm_join) && via_terms(&dm_meet), a.satisfies_de_morgan().holds);
    }
}

#[test]
fn term_engine_witness_matches_predicate_witness() {
    let dwom = formula("(x \\/ y) /\\ (x \\/ (x \\/ y)') = x");
    for a in all_algebras_up_to(4) {
        let ctx = EvalContext::for_algebra(&a);
        let via_terms = holds(&dwom, &ctx).unwrap();
        let via_predicate = a.is_dually_weakly_orthomodular();
        assert_eq!(via_terms.holds, via_predicate.holds);
        assert_eq!(via_terms.witness, via_predicate.witness);
    }
}

#[test]
fn orthomodular_implies_wom_and_dwom() {
    for a in all_algebras_up_to(5) {
        if a.is_orthomodular().unwrap().holds {
            assert!(a.is_weakly_orthomodular().holds);
            assert!(a.is_dually_weakly_orthomodular().holds);
        }
    }
}

#[test]
fn wom_implies_lemma_bounds() {
    for a in all_algebras_up_to(5) {
        if a.is_weakly_orthomodular().holds || a.is_dually_weakly_orthomodular().holds {
            let r = a.check_lemma_bounds();
            assert!(r.holds, "{:?}: {}", a.comp_table(), r.detail);
        }
    }
}

#[test]
fn de_morgan_and_complementation_imply_antitone() {
    for a in all_algebras_up_to(5) {
        if a.satisfies_de_morgan().holds && a.is_complementation().unwrap().holds {
            assert!(a.is_antitone().holds, "{:?}", a.comp_table());
        }
    }
}
