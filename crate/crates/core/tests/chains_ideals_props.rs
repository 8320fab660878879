use hankel_core::chains::{c_decompose, chain_cmp, gamma_t, gamma_tc, is_cchain, shape_of, CChain, Tableau};
use hankel_core::hankel::HankelConfig;
use hankel_core::ideals::{enumerate_ar, jt_generators, order_in_prime, symbolic_membership, CGraph, MonomialIdeal};
use hankel_core::polyring::{monomials_up_to, Monomial};
use proptest::prelude::*;
use std::cmp::Ordering;

fn monomial(n: usize, max_deg: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(1..=n, 0..=max_deg).prop_map(move |idx| Monomial::from_indices(n, &idx).unwrap())
}

fn nc() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=10, 1usize..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decomposition_factors_the_monomial(((n, c), seed) in nc().prop_flat_map(|(n, c)| ((Just((n, c))), monomial(n, 8)))) {
        let delta = seed;
        let chains = c_decompose(&delta, c);
        let mut product = Monomial::one(n);
        for ch in &chains {
            prop_assert!(is_cchain(ch.indices(), c));
            product = product.mul(&ch.monomial(n).unwrap());
        }
        prop_assert_eq!(&product, &delta);
        // factors come in weakly decreasing chain order
        for w in chains.windows(2) {
            prop_assert_ne!(chain_cmp(w[0].indices(), w[1].indices()), Ordering::Less);
        }
        let shape = shape_of(&delta, c);
        prop_assert!(shape.is_weakly_decreasing());
        prop_assert_eq!(shape.total() as u32, delta.degree());
    }

    #[test]
    fn gamma_matches_facet_prime_orders(((n, c), delta) in (4usize..=8, 1usize..=2).prop_flat_map(|(n, c)| (Just((n, c)), monomial(n, 6)))) {
        let cfg = HankelConfig::new(n, c).unwrap();
        for t in 1..=cfg.m() {
            let primes = enumerate_ar(n, c, t - 1);
            let min_order = primes.iter().map(|p| order_in_prime(&delta, p)).min().unwrap();
            prop_assert_eq!(min_order, gamma_tc(&delta, t, c), "t = {}", t);
            let cert = symbolic_membership(&cfg, &delta, t, min_order.max(1), true).unwrap();
            prop_assert_eq!(cert.oracle_agrees, Some(true));
        }
    }

    #[test]
    fn gamma_is_the_shape_formula(parts in prop::collection::vec(1usize..6, 1..5), t in 1usize..6) {
        let mut shape = parts;
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let direct: usize = shape.iter().map(|&k| (k + 1).saturating_sub(t)).sum();
        prop_assert_eq!(gamma_t(&shape, t), direct);
    }

    #[test]
    fn tableau_text_roundtrip(((n, c), delta) in nc().prop_flat_map(|(n, c)| (Just((n, c)), monomial(n, 8)))) {
        prop_assume!(!delta.is_one());
        let t = Tableau::new(c_decompose(&delta, c));
        let back = Tableau::parse(&t.to_string(), c).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.monomial(n).unwrap(), delta);
    }

    #[test]
    fn ideal_operations_agree_with_membership(
        a in prop::collection::vec(monomial(4, 3), 1..4),
        b in prop::collection::vec(monomial(4, 3), 1..4),
        x in monomial(4, 5),
    ) {
        let i = MonomialIdeal::new(4, a);
        let j = MonomialIdeal::new(4, b);
        prop_assert_eq!(i.intersection(&j).contains(&x), i.contains(&x) && j.contains(&x));
        prop_assert_eq!(i.sum(&j).contains(&x), i.contains(&x) || j.contains(&x));
        prop_assert!(i.product(&j).contains_ideal(&i.product(&j)));
        prop_assert!(i.contains_ideal(&i.product(&j)));
        for m in monomials_up_to(4, 2) {
            prop_assert_eq!(i.colon(&m).contains(&x), i.contains(&x.mul(&m)));
        }
    }
}

#[test]
fn secant_generators_are_the_chain_ideals() {
    // minimal non-r-colourable sets of G(n, c) are the (r+1)-chains
    for n in 1..=11 {
        for c in 1..=3 {
            let m = (n + c) / (c + 1);
            let g = CGraph::new(n, c);
            for r in 1..=m {
                assert_eq!(g.edge_secant_generators(r), jt_generators(n, c, r + 1), "n={n} c={c} r={r}");
            }
        }
    }
}

#[test]
fn chains_are_cliques() {
    let g = CGraph::new(12, 3);
    for len in 1..=3 {
        for ch in hankel_core::chains::enumerate_chains(12, 3, len) {
            let v = ch.indices();
            assert_eq!(g.brute_chromatic_and_clique(v).unwrap(), (len, len));
        }
    }
    assert!(CChain::new(vec![1, 4], 3).is_err());
}
