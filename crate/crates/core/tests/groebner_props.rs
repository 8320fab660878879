use std::time::Duration;

use hankel_core::chains::{c_decompose, enumerate_chains, tableau_polynomial, Tableau};
use hankel_core::groebner::{
    buchberger, is_groebner_exhaustive, is_groebner_pruned, normal_form, standard_representation, BuchbergerConfig,
    Budget, GbVerdict,
};
use hankel_core::hankel::HankelConfig;
use hankel_core::polyring::{coeff, parse_polynomial, Monomial, Polynomial, TermOrder};
use proptest::prelude::*;

const N: usize = 3;

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let mono = prop::collection::vec(0u16..3, N).prop_map(Monomial::new);
    prop::collection::vec((-3i64..=3, mono), 1..4).prop_map(|terms| {
        let raw = terms.into_iter().map(|(c, m)| (coeff(c), m)).collect();
        Polynomial::from_terms(N, TermOrder::DegLex, raw)
    })
}

fn generators() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(polynomial(), 1..4).prop_filter("nonzero", |g| g.iter().any(|p| !p.is_zero()))
}

fn cfg() -> BuchbergerConfig {
    BuchbergerConfig {
        budget: Budget { wall: Duration::from_secs(20), ..Budget::default() },
        ..BuchbergerConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_is_groebner_and_generates(gens in generators()) {
        let gb = buchberger(&gens, TermOrder::DegLex, &cfg()).unwrap();
        for g in &gens {
            prop_assert!(normal_form(g, &gb.elements).is_zero(), "{} not reduced to 0", g);
        }
        let (_, failures) = is_groebner_exhaustive(&gb.elements, TermOrder::DegLex).unwrap();
        prop_assert!(failures.is_empty());
        // reduced: no term of an element is divisible by another leading monomial
        let leads = gb.leading_monomials();
        for (i, g) in gb.elements.iter().enumerate() {
            prop_assert!(g.leading_coeff().unwrap() == &coeff(1));
            for t in g.terms() {
                for (j, l) in leads.iter().enumerate() {
                    prop_assert!(i == j || !l.divides(&t.monomial));
                }
            }
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in generators()) {
        let a = buchberger(&gens, TermOrder::DegLex, &cfg()).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let b = buchberger(&rev, TermOrder::DegLex, &cfg()).unwrap();
        prop_assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn pruned_test_agrees_with_exhaustive(gens in generators()) {
        let (_, failures) = is_groebner_exhaustive(&gens, TermOrder::DegLex).unwrap();
        let pruned = is_groebner_pruned(&gens, TermOrder::DegLex, &Budget::default()).unwrap();
        prop_assert_eq!(failures.is_empty(), matches!(pruned, GbVerdict::IsBasis(_)));
    }

    #[test]
    fn standard_representation_reconstructs(
        (n, c) in (5usize..=8, 1usize..=2),
        picks in prop::collection::vec((1usize..=3, any::<prop::sample::Index>()), 1..=2),
    ) {
        let hc = HankelConfig::new(n, c).unwrap();
        let rows: Vec<_> = picks
            .iter()
            .filter_map(|(len, ix)| {
                let all = enumerate_chains(n, c, (*len).min(hc.m()));
                (!all.is_empty()).then(|| ix.get(&all).clone())
            })
            .collect();
        prop_assume!(!rows.is_empty());
        let t = Tableau::sorted(rows);
        let terms = standard_representation(&hc, &t, &Budget::default()).unwrap();
        let mut sum = Polynomial::zero(n);
        for term in &terms {
            let mono = term.tableau.monomial(n).unwrap();
            // each basis element is the standard monomial of its own leading chains
            prop_assert_eq!(&term.tableau, &Tableau::new(c_decompose(&mono, c)));
            sum = &sum + &tableau_polynomial(&hc, &term.tableau).unwrap().scale(&term.coeff);
        }
        prop_assert_eq!(sum, tableau_polynomial(&hc, &t).unwrap());
    }
}

#[test]
fn twisted_cubic_basis() {
    let p = |s: &str| parse_polynomial(s, Some(4)).unwrap();
    let gens = vec![p("x1*x3 - x2^2"), p("x2*x4 - x3^2"), p("x1*x4 - x2*x3")];
    let gb = buchberger(&gens, TermOrder::DegLex, &BuchbergerConfig::default()).unwrap();
    let leads: Vec<String> = gb.leading_monomials().iter().map(|m| m.to_string()).collect();
    assert_eq!(leads, vec!["x1*x3", "x1*x4", "x2*x4"]);
    assert!(gb.contains(&p("x1*x3^2 - x2^2*x3")));
    assert!(!gb.contains(&p("x1")));
}

#[test]
fn elimination_projects_the_parabola() {
    // eliminating x1 from x2 = x1^2, x3 = x2 leaves only the linear relation
    let p = |s: &str| parse_polynomial(s, Some(3)).unwrap();
    let order = TermOrder::Elimination { split: 1 };
    let gens: Vec<Polynomial> = vec![p("x2 - x1^2"), p("x3 - x2")].into_iter().map(|g| g.with_order(order)).collect();
    let gb = buchberger(&gens, order, &BuchbergerConfig::default()).unwrap();
    let kept: Vec<String> = gb
        .elements
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.monomial.exponent(1) == 0))
        .map(|g| g.with_order(TermOrder::DegLex).to_string())
        .collect();
    assert_eq!(kept, vec!["x2 - x3"]);
}
