//! Desk-scale checks of the Gröbner, symbolic-power and primary-decomposition
//! statements for the minors of the extended Hankel arrangement.

use std::time::Instant;

use serde_json::json;

use crate::chains::{enumerate_chains, gamma_t, gamma_tc, CChain};
use crate::error::{Error, Result};
use crate::hankel::{maximal_minor, HankelConfig};
use crate::ideals::{
    enumerate_ar, gamma_oracle, in_prime_power_intersection, j_product, jt_generators, prime_power_oracle,
    shape_prime_oracle, CGraph, MonomialIdeal,
};
use crate::polyring::{monomials_of_degree, Monomial, Polynomial, TermOrder};
use crate::report::Report;

use super::buchberger::{buchberger, is_groebner_exhaustive, is_groebner_pruned, BuchbergerConfig, Budget, GbVerdict};
use super::join::{contained_in, secant, IdealPresentation};

/// The t-minors of `X_t`, one per chain of length `t`.
pub fn it_generators(cfg: &HankelConfig, t: usize) -> Result<Vec<Polynomial>> {
    enumerate_chains(cfg.n(), cfg.c(), t).iter().map(|a| maximal_minor(cfg, a)).collect()
}

fn check_t(cfg: &HankelConfig, t: usize, low: usize) -> Result<()> {
    if t < low || t > cfg.m() {
        return Err(Error::Range(format!("t = {t} outside {low}..={}", cfg.m())));
    }
    Ok(())
}

fn lead_ideal(n: usize, polys: &[Polynomial]) -> MonomialIdeal {
    MonomialIdeal::new(n, polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect())
}

/// All S-pairs of the t-minors reduce to zero and their leading monomials
/// generate `J_t`.
pub fn verify_minors_gb(cfg: &HankelConfig, t: usize) -> Result<Report> {
    check_t(cfg, t, 2)?;
    let start = Instant::now();
    let mut rep = Report::new("gb", json!({"n": cfg.n(), "c": cfg.c(), "t": t}));
    let gens = it_generators(cfg, t)?;
    let (pairs, failures) = is_groebner_exhaustive(&gens, TermOrder::DegLex)?;
    rep.detail("generators", gens.len());
    rep.detail("pairs_checked", pairs);
    rep.require(failures.is_empty(), || format!("{} S-pairs with nonzero remainder", failures.len()));
    let initial = lead_ideal(cfg.n(), &gens);
    let jt = jt_generators(cfg.n(), cfg.c(), t);
    rep.require(initial == jt, || format!("initial ideal {initial} differs from {jt}"));
    rep.detail("initial_ideal", initial.to_string());
    Ok(rep.finish(start))
}

/// Multisets of chains of the given lengths, one per factor; equal lengths
/// use non-decreasing positions so each product appears once.
pub fn chain_tuples(n: usize, c: usize, tau: &[usize]) -> Vec<Vec<CChain>> {
    let lists: Vec<Vec<CChain>> = tau.iter().map(|&t| enumerate_chains(n, c, t)).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        tau: &[usize],
        lists: &[Vec<CChain>],
        min: usize,
        cur: &mut Vec<CChain>,
        idx: &mut Vec<usize>,
        out: &mut Vec<Vec<CChain>>,
    ) {
        if k == tau.len() {
            out.push(cur.clone());
            return;
        }
        let start = if k > 0 && tau[k] == tau[k - 1] { min } else { 0 };
        for i in start..lists[k].len() {
            cur.push(lists[k][i].clone());
            idx.push(i);
            rec(k + 1, tau, lists, i, cur, idx, out);
            idx.pop();
            cur.pop();
        }
    }
    rec(0, tau, &lists, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Products of maximal minors of shape `τ`.
pub fn products_of_shape(cfg: &HankelConfig, tau: &[usize]) -> Result<Vec<Polynomial>> {
    let mut cache = std::collections::HashMap::new();
    let mut out = Vec::new();
    for tuple in chain_tuples(cfg.n(), cfg.c(), tau) {
        let mut p = Polynomial::one(cfg.n());
        for ch in &tuple {
            if !cache.contains_key(ch) {
                cache.insert(ch.clone(), maximal_minor(cfg, ch)?);
            }
            p = &p * &cache[ch];
        }
        out.push(p);
    }
    Ok(out)
}

/// Exponent vectors `(a_t, ..., a_m)` with `Σ (i - t + 1) a_i = s`.
pub fn symbolic_power_exponents(t: usize, m: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(pos: usize, t: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos > m {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = pos - t + 1;
        for a in (0..=left / w).rev() {
            cur.push(a);
            rec(pos + 1, t, m, left - a * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, t, m, s, &mut Vec::new(), &mut out);
    out
}

/// Generators of `Σ I_t^{a_t} ... I_m^{a_m}`.
pub fn symbolic_power_generators(cfg: &HankelConfig, t: usize, s: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for a in symbolic_power_exponents(t, cfg.m(), s) {
        let tau: Vec<usize> = a.iter().enumerate().rev().flat_map(|(i, &e)| std::iter::repeat_n(t + i, e)).collect();
        out.extend(products_of_shape(cfg, &tau)?);
    }
    Ok(out)
}

/// Leading monomials of a Gröbner basis of the ideal, valid through degree
/// `bound`. When the generators already form a basis this is their leading
/// monomials; otherwise a degree-truncated Buchberger run supplies them.
pub fn initial_ideal_up_to(
    n: usize,
    gens: &[Polynomial],
    bound: u32,
    budget: &Budget,
) -> Result<(MonomialIdeal, bool)> {
    match is_groebner_pruned(gens, TermOrder::DegLex, budget)? {
        GbVerdict::IsBasis(_) => Ok((lead_ideal(n, gens).truncate(bound), true)),
        GbVerdict::NotBasis { .. } => {
            let cfg = BuchbergerConfig { budget: budget.clone(), truncate: Some(bound), verify_only: false };
            let gb = buchberger(gens, TermOrder::DegLex, &cfg)?;
            Ok((lead_ideal(n, &gb.elements).truncate(bound), false))
        }
    }
}

/// `I_t^{(s)} = Σ I_t^{a_t} ... I_m^{a_m}` checked at the initial level up to
/// `bound` against both monomial oracles.
pub fn verify_symbolic_power(cfg: &HankelConfig, t: usize, s: usize, bound: u32, budget: &Budget) -> Result<Report> {
    check_t(cfg, t, 1)?;
    if s == 0 {
        return Err(Error::Range("s must be positive".into()));
    }
    let start = Instant::now();
    let (n, c) = (cfg.n(), cfg.c());
    let mut rep = Report::new("sympow", json!({"n": n, "c": c, "t": t, "s": s, "bound": bound}));
    let gens = symbolic_power_generators(cfg, t, s)?;
    let (initial, gens_were_basis) = initial_ideal_up_to(n, &gens, bound, budget)?;
    let primes = prime_power_oracle(n, c, t, s, bound);
    let gamma = gamma_oracle(n, c, t, s, bound);
    rep.detail("generators", gens.len());
    rep.detail("generators_form_basis", gens_were_basis);
    rep.require(primes == gamma, || format!("prime oracle {primes} differs from gamma oracle {gamma}"));
    rep.require(initial == gamma, || format!("initial ideal {initial} differs from gamma oracle {gamma}"));
    // each leading monomial certifies its own membership
    if let Some(bad) = initial.generators().iter().find(|m| gamma_tc(m, t, c) < s) {
        rep.fail(format!("leading monomial {bad} has gamma below {s}"));
    }
    Ok(rep.finish(start))
}

type Member<'a> = Box<dyn Fn(&Monomial) -> bool + 'a>;

/// Monomials of degree `<= bound` in all listed ideals except `skip`, and not
/// in `skip`.
fn drop_witness(n: usize, bound: u32, members: &[Member<'_>], skip: usize) -> Option<Monomial> {
    (0..=bound).find_map(|d| {
        monomials_of_degree(n, d)
            .into_iter()
            .find(|m| !members[skip](m) && members.iter().enumerate().all(|(i, f)| i == skip || f(m)))
    })
}

/// The three checks for a product of determinantal ideals of shape `τ`.
pub fn verify_primary_decomposition(cfg: &HankelConfig, tau: &[usize], bound: u32, budget: &Budget) -> Result<Report> {
    let (n, c) = (cfg.n(), cfg.c());
    if tau.is_empty() || tau.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("shape {tau:?} is not weakly decreasing")));
    }
    check_t(cfg, tau[0], 1)?;
    check_t(cfg, *tau.last().unwrap(), 1)?;
    let start = Instant::now();
    let mut rep = Report::new("primdec", json!({"n": n, "c": c, "tau": tau, "bound": bound}));

    // (1) the products of minors of shape τ form a Gröbner basis
    let gens = products_of_shape(cfg, tau)?;
    rep.detail("generators", gens.len());
    match is_groebner_pruned(&gens, TermOrder::DegLex, budget)? {
        GbVerdict::IsBasis(stats) => rep.detail("pairs_reduced", stats.pairs_processed),
        GbVerdict::NotBasis { pair, remainder } => {
            rep.fail(format!("S-pair {pair:?} leaves remainder {remainder}"));
            return Ok(rep.finish(start));
        }
    }

    // (2) in(product) = product of J's = intersection of prime powers
    let initial = lead_ideal(n, &gens);
    let jprod = j_product(n, c, tau);
    let primes = shape_prime_oracle(n, c, tau, bound);
    rep.require(initial == jprod, || format!("initial ideal {initial} differs from J-product {jprod}"));
    rep.require(jprod.truncate(bound) == primes, || format!("J-product differs from prime intersection {primes}"));

    // (3) irredundancy for τ = (t, ..., t)
    let t = tau[0];
    if tau.len() > 1 && tau.iter().all(|&x| x == t) {
        let k = tau.len();
        let m = cfg.m();
        let u = 1.max(m.saturating_sub(k * (m - t)));
        let comps: Vec<(usize, Vec<_>, usize)> =
            (u..=t).map(|j| (j, enumerate_ar(n, c, j - 1), k * (t + 1 - j))).collect();
        let members: Vec<Member> = comps
            .iter()
            .map(|(_, primes, e)| {
                let e = *e;
                Box::new(move |m: &Monomial| in_prime_power_intersection(m, primes, e)) as Member
            })
            .collect();
        let inter = MonomialIdeal::from_predicate(n, bound, |m| members.iter().all(|f| f(m)));
        rep.require(inter == jprod.truncate(bound), || format!("component intersection {inter} differs from J_t^k"));
        let mut witnesses = Vec::new();
        for (i, (j, _, e)) in comps.iter().enumerate() {
            match drop_witness(n, bound + 2, &members, i) {
                Some(w) => witnesses.push(format!("drop I_{j}^({e}): {w}")),
                None => rep.fail(format!("component I_{j}^({e}) looks redundant up to degree {}", bound + 2)),
            }
        }
        rep.detail("components", comps.iter().map(|(j, _, e)| format!("I_{j}^({e})")).collect::<Vec<_>>());
        rep.detail("witnesses", witnesses);
    }
    Ok(rep.finish(start))
}

/// The r-fold secant of `I_2`, computed by elimination, equals `I_{r+1}`, and
/// its initial ideal is the colorability secant of `in(I_2)`.
pub fn verify_secant(cfg: &HankelConfig, r: usize, budget: &Budget) -> Result<Report> {
    let (n, c) = (cfg.n(), cfg.c());
    if r < 1 || r + 1 > cfg.m() {
        return Err(Error::Range(format!("secant order {r} needs 2 <= r + 1 <= m = {}", cfg.m())));
    }
    let start = Instant::now();
    let mut rep = Report::new("secant", json!({"n": n, "c": c, "r": r}));
    let i2 = IdealPresentation::new(n, it_generators(cfg, 2)?)?;
    let bcfg = BuchbergerConfig { budget: budget.clone(), truncate: None, verify_only: false };
    let sec = secant(&i2, r, &bcfg)?;
    let target = it_generators(cfg, r + 1)?;
    rep.detail("secant_generators", sec.generators.len());
    rep.require(contained_in(&target, &sec.generators), || format!("some {}-minor is not in the secant", r + 1));
    rep.require(contained_in(&sec.generators, &target), || format!("the secant is not inside I_{}", r + 1));
    let initial = sec.initial_ideal();
    let colour = CGraph::new(n, c).edge_secant_generators(r);
    rep.require(initial == colour, || format!("in(secant) = {initial} differs from colorability secant {colour}"));
    rep.detail("initial_ideal", initial.to_string());
    Ok(rep.finish(start))
}

/// γ-values of a shape for `t = 1..=t1`.
pub fn gamma_profile(shape: &[usize], t1: usize) -> Vec<usize> {
    (1..=t1).map(|j| gamma_t(shape, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, c: usize) -> HankelConfig {
        HankelConfig::new(n, c).unwrap()
    }

    #[test]
    fn minors_gb_examples() {
        let r = verify_minors_gb(&cfg(5, 2), 2).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.details["initial_ideal"], "<x1*x4, x1*x5, x2*x5>");
        assert!(verify_minors_gb(&cfg(7, 2), 3).unwrap().passed());
        assert!(verify_minors_gb(&cfg(4, 1), 2).unwrap().passed());
        assert!(matches!(verify_minors_gb(&cfg(5, 2), 3), Err(Error::Range(_))));
    }

    #[test]
    fn secant_small() {
        let r = verify_secant(&cfg(5, 1), 2, &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(verify_secant(&cfg(5, 2), 2, &Budget::default()).is_err());
    }

    #[test]
    fn exponent_sequences() {
        // m = 3, t = 2, s = 2: a_2 = 2, or a_3 = 1
        assert_eq!(symbolic_power_exponents(2, 3, 2), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(symbolic_power_exponents(2, 2, 3), vec![vec![3]]);
    }

    #[test]
    fn shape_tuples() {
        assert_eq!(chain_tuples(5, 2, &[2, 2]).len(), 6);
        assert_eq!(chain_tuples(7, 2, &[3, 2]).len(), 10);
    }

    #[test]
    fn symbolic_power_small() {
        let r = verify_symbolic_power(&cfg(7, 2), 2, 2, 6, &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        let r = verify_symbolic_power(&cfg(6, 1), 2, 1, 4, &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn primary_decomposition_small() {
        let r = verify_primary_decomposition(&cfg(7, 2), &[2, 2], 6, &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        let r = verify_primary_decomposition(&cfg(8, 2), &[3, 2], 7, &Budget::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }
}
