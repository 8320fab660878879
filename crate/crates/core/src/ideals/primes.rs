//! Facet primes `P_j`, the chain ideals `J_t` and the symbolic-power oracles.

use serde::Serialize;

use crate::chains::{c_decompose, enumerate_chains, gamma_tc, socle, CChain};
use crate::error::{Error, Result};
use crate::hankel::HankelConfig;
use crate::polyring::Monomial;

use super::monomial_ideal::MonomialIdeal;

/// `J_t`: squarefree monomials on c-chains of length `t`.
pub fn jt_generators(n: usize, c: usize, t: usize) -> MonomialIdeal {
    let gens = enumerate_chains(n, c, t).iter().map(|ch| ch.monomial(n).unwrap()).collect();
    MonomialIdeal::new(n, gens)
}

/// `J_{t_1} ... J_{t_k}`.
pub fn j_product(n: usize, c: usize, tau: &[usize]) -> MonomialIdeal {
    tau.iter().fold(MonomialIdeal::unit(n), |acc, &t| acc.product(&jt_generators(n, c, t)))
}

/// The prime generated by the variables outside `F_j = ∪ [j_i, j_i + c]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FacetPrime {
    pub chain: CChain,
    pub facet: Vec<usize>,
    pub complement: Vec<usize>,
}

impl FacetPrime {
    pub fn new(n: usize, c: usize, chain: CChain) -> Self {
        let facet: Vec<usize> = chain.indices().iter().flat_map(|&j| j..=j + c).collect();
        let complement = (1..=n).filter(|i| !facet.contains(i)).collect();
        FacetPrime { chain, facet, complement }
    }

    pub fn order(&self, delta: &Monomial) -> usize {
        order_in_prime(delta, self)
    }

    /// `|{socle indices} ∩ F_j|`.
    pub fn overlap(&self, chain: &CChain) -> usize {
        chain.indices().iter().filter(|i| self.facet.contains(i)).count()
    }
}

/// `A_r`: c-chains of length `r` ending at or before `n - c`. For `r = 0` this
/// is the empty chain, whose prime is the maximal ideal.
pub fn enumerate_ar(n: usize, c: usize, r: usize) -> Vec<FacetPrime> {
    if n <= c {
        return if r == 0 { vec![FacetPrime::new(n, c, CChain::empty())] } else { Vec::new() };
    }
    enumerate_chains(n - c, c, r).into_iter().map(|ch| FacetPrime::new(n, c, ch)).collect()
}

/// `max { k : δ ∈ P^k }`, the exponent sum over the complement.
pub fn order_in_prime(delta: &Monomial, p: &FacetPrime) -> usize {
    delta.degree_in(&p.complement) as usize
}

/// Membership of `δ` in every `P_j^s`, `j ∈ A_{t-1}`.
pub fn in_prime_power_intersection(delta: &Monomial, primes: &[FacetPrime], s: usize) -> bool {
    primes.iter().all(|p| order_in_prime(delta, p) >= s)
}

/// `∩_{j ∈ A_{t-1}} P_j^s` up to degree `bound`.
pub fn prime_power_oracle(n: usize, c: usize, t: usize, s: usize, bound: u32) -> MonomialIdeal {
    let primes = enumerate_ar(n, c, t - 1);
    MonomialIdeal::from_predicate(n, bound, |m| in_prime_power_intersection(m, &primes, s))
}

/// `⟨δ : γ_{t,c}(δ) ≥ s⟩` up to degree `bound`.
pub fn gamma_oracle(n: usize, c: usize, t: usize, s: usize, bound: u32) -> MonomialIdeal {
    MonomialIdeal::from_predicate(n, bound, |m| gamma_tc(m, t, c) >= s)
}

/// `∩_j ∩_{z ∈ A_{j-1}} P_z^{γ_j(τ)}` up to degree `bound`.
pub fn shape_prime_oracle(n: usize, c: usize, tau: &[usize], bound: u32) -> MonomialIdeal {
    let t1 = tau.iter().copied().max().unwrap_or(0);
    let layers: Vec<(Vec<FacetPrime>, usize)> =
        (1..=t1).map(|j| (enumerate_ar(n, c, j - 1), crate::chains::gamma_t(tau, j))).collect();
    MonomialIdeal::from_predicate(n, bound, |m| {
        layers.iter().all(|(primes, g)| in_prime_power_intersection(m, primes, *g))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    pub chain: Vec<usize>,
    pub order: usize,
}

/// Certificate for `δ ∈ I_t^{(s)}` at the initial level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub verdict: bool,
    pub gamma: usize,
    pub decomposition: Vec<Vec<usize>>,
    /// A prime of minimal order, when the prime oracle was consulted.
    pub witnesses: Vec<PrimeWitness>,
    pub oracle_agrees: Option<bool>,
}

/// Decides `γ_{t,c}(δ) ≥ s`. With `verify`, also evaluates the prime oracle
/// `min_{j ∈ A_{t-1}} O_{P_j}(δ) ≥ s` and records whether the two agree.
pub fn symbolic_membership(
    cfg: &HankelConfig,
    delta: &Monomial,
    t: usize,
    s: usize,
    verify: bool,
) -> Result<MembershipCertificate> {
    if t == 0 || t > cfg.m() {
        return Err(Error::Range(format!("t = {t} outside 1..={}", cfg.m())));
    }
    let c = cfg.c();
    let gamma = gamma_tc(delta, t, c);
    let verdict = gamma >= s;
    let decomposition = c_decompose(delta, c).iter().map(|ch| ch.indices().to_vec()).collect();
    let (witnesses, oracle_agrees) = if verify {
        let primes = enumerate_ar(cfg.n(), c, t - 1);
        let best = primes.iter().min_by_key(|p| order_in_prime(delta, p));
        match best {
            Some(p) => {
                let order = order_in_prime(delta, p);
                let w = PrimeWitness { chain: p.chain.indices().to_vec(), order };
                (vec![w], Some((order >= s) == verdict))
            }
            None => (Vec::new(), None),
        }
    } else {
        (Vec::new(), None)
    };
    Ok(MembershipCertificate { verdict, gamma, decomposition, witnesses, oracle_agrees })
}

/// `O_{P_j}(δ) + r_{Soc(δ)}(j) ≥ s + r` for `j ∈ A_r`.
pub fn socle_inequality_holds(delta: &Monomial, p: &FacetPrime, c: usize, s: usize) -> bool {
    let r = p.chain.len();
    let overlap = socle(delta, c).map(|soc| p.overlap(&soc)).unwrap_or(0);
    order_in_prime(delta, p) + overlap >= s + r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_monomial;

    fn mono(s: &str, n: usize) -> Monomial {
        parse_monomial(s, Some(n)).unwrap()
    }

    #[test]
    fn chain_ideals() {
        assert_eq!(jt_generators(5, 2, 2).to_string(), "<x1*x4, x1*x5, x2*x5>");
        assert!(jt_generators(5, 2, 3).is_zero());
        assert_eq!(jt_generators(4, 3, 1).len(), 4);
    }

    #[test]
    fn facets() {
        let a = enumerate_ar(7, 2, 2);
        let chains: Vec<Vec<usize>> = a.iter().map(|p| p.chain.indices().to_vec()).collect();
        assert_eq!(chains, vec![vec![1, 4], vec![1, 5], vec![2, 5]]);
        let comps: Vec<Vec<usize>> = a.iter().map(|p| p.complement.clone()).collect();
        assert_eq!(comps, vec![vec![7], vec![4], vec![1]]);
        assert!(enumerate_ar(4, 2, 2).is_empty());
        let a1 = enumerate_ar(7, 2, 1);
        assert_eq!(a1.len(), 5);
        assert_eq!(a1[4].facet, vec![5, 6, 7]);
        assert!(a.iter().all(|p| p.facet.len() == 2 * 3));
    }

    #[test]
    fn orders() {
        let a = enumerate_ar(7, 2, 2);
        assert_eq!(order_in_prime(&mono("x1*x7^2", 7), &a[0]), 2);
        assert_eq!(order_in_prime(&mono("x1*x2*x4*x7", 7), &a[2]), 1);
        assert_eq!(order_in_prime(&mono("x2*x3*x5", 7), &a[2]), 0);
    }

    #[test]
    fn membership() {
        let cfg = HankelConfig::new(10, 2).unwrap();
        let mu = mono("x1^2*x2*x4*x7*x8*x10", 10);
        let a = symbolic_membership(&cfg, &mu, 2, 4, true).unwrap();
        assert!(a.verdict && a.oracle_agrees == Some(true));
        assert_eq!(a.gamma, 4);
        let b = symbolic_membership(&cfg, &mu, 3, 2, true).unwrap();
        assert!(b.verdict && b.oracle_agrees == Some(true));
        let d = symbolic_membership(&cfg, &mono("x1*x2*x4", 10), 2, 2, true).unwrap();
        assert!(!d.verdict && d.oracle_agrees == Some(true));
        let one = symbolic_membership(&cfg, &Monomial::one(10), 2, 1, true).unwrap();
        assert!(!one.verdict);
        assert!(matches!(symbolic_membership(&cfg, &mu, 5, 1, false), Err(Error::Range(_))));
    }

    #[test]
    fn graded_pieces_of_prime_intersections() {
        let j2 = jt_generators(7, 2, 2);
        let first = prime_power_oracle(7, 2, 2, 1, 4);
        assert_eq!(first, j2);
        let squared = prime_power_oracle(7, 2, 2, 2, 4);
        assert!(squared.graded_piece(2).is_empty());
        assert!(squared.graded_piece(1).is_empty());
    }
}
