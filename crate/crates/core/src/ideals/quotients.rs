//! The generator set Ω of a chain-ideal product, the σ order, and linear
//! quotients.

use std::cmp::Ordering;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use crate::chains::{c_decompose, chain_cmp, gamma_t, gamma_tc};
use crate::error::{Error, Result};
use crate::polyring::{monomials_of_degree, Monomial};
use crate::report::Report;

use super::monomial_ideal::MonomialIdeal;

fn check_tau(tau: &[usize]) -> Result<()> {
    if tau.is_empty() || tau.contains(&0) {
        return Err(Error::Range(format!("shape {tau:?} needs positive parts")));
    }
    if tau.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("shape {tau:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Monomials of degree `Στ` with `γ_{i,c}(μ) ≥ γ_i(τ)` for `i = 1..t_1`.
pub fn omega_generators(n: usize, c: usize, tau: &[usize]) -> Result<MonomialIdeal> {
    check_tau(tau)?;
    let m = (n + c) / (c + 1);
    if tau[0] > m {
        return Err(Error::Range(format!("t_1 = {} exceeds m = {m}", tau[0])));
    }
    let d: usize = tau.iter().sum();
    let bounds: Vec<usize> = (1..=tau[0]).map(|i| gamma_t(tau, i)).collect();
    let gens = monomials_of_degree(n, d as u32)
        .into_iter()
        .filter(|mu| bounds.iter().enumerate().all(|(i, &g)| gamma_tc(mu, i + 1, c) >= g))
        .collect();
    Ok(MonomialIdeal::new(n, gens))
}

/// Compares c-decompositions factor by factor in deglex; a present factor
/// beats a missing one.
pub fn sigma_compare(mu: &Monomial, eta: &Monomial, c: usize) -> Ordering {
    let a = c_decompose(mu, c);
    let b = c_decompose(eta, c);
    for i in 0..a.len().max(b.len()) {
        let o = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => chain_cmp(x.indices(), y.indices()),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => Ordering::Equal,
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearQuotientStep {
    pub generator: String,
    /// Variables generating `⟨μ_1..μ_{k-1}⟩ : μ_k`.
    pub colon_variables: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearQuotientCertificate {
    pub tau: Vec<usize>,
    pub gamma: Vec<usize>,
    pub steps: Vec<LinearQuotientStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearQuotientFailure {
    pub position: usize,
    pub generator: String,
    pub colon_generator: String,
}

/// Orders Ω by σ descending and checks that every successive colon ideal is
/// generated by variables.
pub fn linear_quotients_certify(
    n: usize,
    c: usize,
    tau: &[usize],
) -> Result<std::result::Result<LinearQuotientCertificate, LinearQuotientFailure>> {
    let omega = omega_generators(n, c, tau)?;
    let mut gens: Vec<Monomial> = omega.generators().to_vec();
    gens.sort_by(|a, b| sigma_compare(b, a, c));
    Ok(certify_order(&gens).map(|steps| LinearQuotientCertificate {
        tau: tau.to_vec(),
        gamma: (1..=tau[0]).map(|i| gamma_t(tau, i)).collect(),
        steps,
    }))
}

/// Checks linear quotients for a fixed generator order.
pub fn certify_order(gens: &[Monomial]) -> std::result::Result<Vec<LinearQuotientStep>, LinearQuotientFailure> {
    let mut steps = Vec::with_capacity(gens.len());
    for (k, mu) in gens.iter().enumerate() {
        let quotients: Vec<Monomial> = gens[..k].iter().map(|g| g.gcd(mu).quotient_of(g).unwrap()).collect();
        let mut vars: Vec<usize> = quotients.iter().filter(|q| q.degree() == 1).map(|q| q.support()[0]).collect();
        vars.sort_unstable();
        vars.dedup();
        // every quotient must be a multiple of one of the linear ones
        if let Some(bad) = quotients.iter().find(|q| !q.support().iter().any(|v| vars.binary_search(v).is_ok())) {
            let minimal = quotients.iter().filter(|q| q.divides(bad)).min_by_key(|q| q.degree()).unwrap_or(bad);
            return Err(LinearQuotientFailure {
                position: k,
                generator: mu.to_string(),
                colon_generator: minimal.to_string(),
            });
        }
        steps.push(LinearQuotientStep { generator: mu.to_string(), colon_variables: vars });
    }
    Ok(steps)
}

pub fn verify_linear_quotients(n: usize, c: usize, tau: &[usize]) -> Result<Report> {
    let start = Instant::now();
    let mut rep = Report::new("linquot", json!({"n": n, "c": c, "tau": tau}));
    match linear_quotients_certify(n, c, tau)? {
        Ok(cert) => {
            rep.detail("generators", cert.steps.len());
            rep.detail("gamma", &cert.gamma);
            let widest = cert.steps.iter().map(|s| s.colon_variables.len()).max().unwrap_or(0);
            rep.detail("max_colon_variables", widest);
        }
        Err(f) => rep.fail(format!(
            "generator {} at position {}: colon generator {} is not a variable",
            f.generator, f.position, f.colon_generator
        )),
    }
    Ok(rep.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::primes::{j_product, jt_generators};
    use crate::polyring::parse_monomial;

    fn mono(s: &str, n: usize) -> Monomial {
        parse_monomial(s, Some(n)).unwrap()
    }

    #[test]
    fn omega_matches_products() {
        assert_eq!(omega_generators(5, 2, &[2]).unwrap(), jt_generators(5, 2, 2));
        assert_eq!(omega_generators(5, 2, &[2, 2]).unwrap(), j_product(5, 2, &[2, 2]));
        assert_eq!(omega_generators(7, 2, &[3, 2]).unwrap(), j_product(7, 2, &[3, 2]));
        assert!(omega_generators(5, 2, &[3]).is_err());
        assert!(omega_generators(7, 2, &[2, 3]).is_err());
    }

    #[test]
    fn sigma_examples() {
        let a = mono("x1*x4*x7", 8);
        let b = mono("x1*x4*x8", 8);
        assert_eq!(sigma_compare(&a, &b, 2), Ordering::Greater);
        assert_eq!(sigma_compare(&a, &a, 2), Ordering::Equal);
        let longer = mono("x1*x4*x2", 8);
        assert_eq!(sigma_compare(&longer, &mono("x1*x4", 8), 2), Ordering::Greater);
    }

    #[test]
    fn quotients_for_small_shapes() {
        let cert = linear_quotients_certify(5, 2, &[2]).unwrap().unwrap();
        let order: Vec<&str> = cert.steps.iter().map(|s| s.generator.as_str()).collect();
        assert_eq!(order, vec!["x1*x4", "x1*x5", "x2*x5"]);
        let colons: Vec<Vec<usize>> = cert.steps.iter().map(|s| s.colon_variables.clone()).collect();
        assert_eq!(colons, vec![vec![], vec![4], vec![1]]);
        assert!(linear_quotients_certify(5, 1, &[1]).unwrap().is_ok());
        assert!(linear_quotients_certify(7, 2, &[2, 2]).unwrap().is_ok());
        let rep = verify_linear_quotients(7, 2, &[3, 2]).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }

    #[test]
    fn failure_is_reported() {
        let gens = vec![mono("x1*x2", 4), mono("x3*x4", 4)];
        let f = certify_order(&gens).unwrap_err();
        assert_eq!(f.position, 1);
        assert_eq!(f.colon_generator, "x1*x2");
    }
}
