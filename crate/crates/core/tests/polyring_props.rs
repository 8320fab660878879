use hankel_core::polyring::{
    coeff, deglex_compare, determinant_bareiss, determinant_cofactor, parse_polynomial, Monomial, Polynomial, TermOrder,
};
use proptest::prelude::*;
use std::cmp::Ordering;

const N: usize = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..4, N).prop_map(Monomial::new)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, monomial()), 0..5).prop_map(|terms| {
        let raw = terms.into_iter().map(|(c, m)| (coeff(c), m)).collect();
        Polynomial::from_terms(N, TermOrder::DegLex, raw)
    })
}

fn small_matrix(k: usize) -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
    prop::collection::vec(prop::collection::vec(polynomial(), k), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deglex_is_a_monomial_order(a in monomial(), b in monomial(), m in monomial()) {
        let cmp = |x: &Monomial, y: &Monomial| deglex_compare(x, y).unwrap();
        prop_assert_ne!(cmp(&m, &Monomial::one(N)), Ordering::Less);
        let o = cmp(&a, &b);
        prop_assert_eq!(cmp(&a.mul(&m), &b.mul(&m)), o);
        prop_assert_eq!(cmp(&b, &a), o.reverse());
        prop_assert_eq!(o == Ordering::Equal, a == b);
    }

    #[test]
    fn elimination_order_respects_blocks(a in monomial(), b in monomial(), m in monomial()) {
        let order = TermOrder::Elimination { split: 2 };
        let o = order.compare(&a, &b);
        prop_assert_eq!(order.compare(&a.mul(&m), &b.mul(&m)), o);
        let first = |x: &Monomial| x.exponents()[..2].iter().map(|&e| e as u32).sum::<u32>();
        if first(&a) > first(&b) {
            prop_assert_eq!(o, Ordering::Greater);
        }
    }

    #[test]
    fn gcd_lcm_divisibility(a in monomial(), b in monomial()) {
        let g = a.gcd(&b);
        let l = a.lcm(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(g.mul(&l), a.mul(&b));
        prop_assert_eq!(a.divides(&b), a.quotient_of(&b).is_some());
        prop_assert_eq!(a.quotient_of(&l).map(|q| q.mul(&a)), Some(l.clone()));
    }

    #[test]
    fn leading_monomial_is_multiplicative(f in polynomial(), g in polynomial()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(
            fg.leading_monomial().unwrap(),
            &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap())
        );
        prop_assert_eq!(
            fg.leading_coeff().unwrap(),
            &(f.leading_coeff().unwrap() * g.leading_coeff().unwrap())
        );
    }

    #[test]
    fn ring_axioms(f in polynomial(), g in polynomial(), h in polynomial()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn display_parses_back(f in polynomial()) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, Some(N)).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_product(f in polynomial(), g in polynomial()) {
        prop_assume!(!g.is_zero());
        let fg = &f * &g;
        prop_assert_eq!(fg.div_exact(&g).unwrap(), f);
    }

    #[test]
    fn determinant_is_alternating(m in small_matrix(3), i in 0usize..3, j in 0usize..3) {
        let d = determinant_bareiss(&m).unwrap();
        prop_assert_eq!(&d, &determinant_cofactor(&m).unwrap());
        if i != j {
            let mut swapped = m.clone();
            swapped.swap(i, j);
            prop_assert_eq!(determinant_bareiss(&swapped).unwrap(), -&d);
            let mut repeated = m.clone();
            repeated[i] = repeated[j].clone();
            prop_assert!(determinant_bareiss(&repeated).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_is_multilinear_in_a_row(m in small_matrix(2), p in polynomial()) {
        let mut scaled = m.clone();
        scaled[0] = scaled[0].iter().map(|e| e * &p).collect();
        prop_assert_eq!(determinant_bareiss(&scaled).unwrap(), &determinant_bareiss(&m).unwrap() * &p);
    }
}

#[test]
fn vandermonde_oracle() {
    // det [[1, a, a^2], [1, b, b^2], [1, c, c^2]] = (b - a)(c - a)(c - b)
    let p = |s: &str| parse_polynomial(s, Some(3)).unwrap();
    let m = vec![vec![p("1"), p("x1"), p("x1^2")], vec![p("1"), p("x2"), p("x2^2")], vec![p("1"), p("x3"), p("x3^2")]];
    let expected = &(&p("x2 - x1") * &p("x3 - x1")) * &p("x3 - x2");
    assert_eq!(determinant_bareiss(&m).unwrap(), expected);
    assert_eq!(determinant_cofactor(&m).unwrap(), expected);
}
