//! Standard-monomial manipulations: shape reduction of products of minors and
//! the greedy standard representation.

use std::time::Instant;

use serde_json::json;

use crate::chains::{chain_exchange, gamma_t, tableau_polynomial, CChain, Phi, Tableau};
use crate::error::{BudgetLog, Error, Result};
use crate::hankel::HankelConfig;
use crate::polyring::Monomial;
use crate::report::Report;

use super::buchberger::Budget;

/// Given a product of maximal minors `μ` with `γ_j(μ) ≥ γ_j(τ)` for all
/// `j ≤ t_1`, builds a product of shape `τ` whose leading monomial divides
/// `in(μ)`.
pub fn factor_to_shape(mu: &Tableau, tau: &[usize], c: usize) -> Result<Tableau> {
    if tau.is_empty() || tau.contains(&0) || tau.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("{tau:?} is not a shape")));
    }
    let sizes = mu.lengths();
    if let Some(j) = (1..=tau[0]).find(|&j| gamma_t(&sizes, j) < gamma_t(tau, j)) {
        return Err(Error::Precondition(format!(
            "gamma_{j} of {mu} is {} but the shape needs {}",
            gamma_t(&sizes, j),
            gamma_t(tau, j)
        )));
    }
    let mut factors: Vec<CChain> = mu.rows.clone();
    let mut out = Vec::with_capacity(tau.len());
    for &t1 in tau {
        loop {
            if let Some(pos) = factors.iter().position(|f| f.len() == t1) {
                out.push(factors.remove(pos));
                break;
            }
            // the largest factor below t1 (or the empty chain) and the smallest above
            let below =
                factors.iter().enumerate().filter(|(_, f)| f.len() < t1).max_by_key(|(_, f)| f.len()).map(|(i, _)| i);
            let above = factors
                .iter()
                .enumerate()
                .filter(|(_, f)| f.len() > t1)
                .min_by_key(|(_, f)| f.len())
                .map(|(i, _)| i)
                .expect("the gamma hypothesis guarantees a longer factor");
            let small = below.map(|i| factors[i].clone()).unwrap_or_else(CChain::empty);
            let (shorter, longer) = chain_exchange(&factors[above], &small, c)?;
            let mut next: Vec<CChain> = factors
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != above && Some(*i) != below)
                .map(|(_, f)| f.clone())
                .collect();
            next.push(shorter);
            next.push(longer);
            factors = next;
        }
    }
    Ok(Tableau::new(out))
}

/// One term of a standard representation.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardTerm {
    pub coeff: crate::polyring::Coeff,
    pub tableau: Tableau,
}

/// Writes the product of minors of `delta` in the standard-monomial basis by
/// repeatedly subtracting `lc · Φ(lm)`.
pub fn standard_representation(cfg: &HankelConfig, delta: &Tableau, budget: &Budget) -> Result<Vec<StandardTerm>> {
    let start = Instant::now();
    let mut p = tableau_polynomial(cfg, delta)?;
    let mut terms = Vec::new();
    let mut last: Option<Monomial> = None;
    while let Some((lead, _)) = p.split_lead() {
        if start.elapsed() > budget.wall {
            return Err(Error::Budget(Box::new(BudgetLog {
                limit: format!("wall clock {:?}", budget.wall),
                basis_size: terms.len(),
                pairs_processed: 0,
                pairs_pending: p.len(),
                max_degree_seen: lead.monomial.degree(),
                elapsed: start.elapsed(),
            })));
        }
        // each step strictly lowers the leading monomial
        if let Some(prev) = &last {
            assert!(lead.monomial < *prev, "standard rewrite did not decrease");
        }
        let tab = Phi(&lead.monomial, cfg.c());
        let std = tableau_polynomial(cfg, &tab)?;
        p = p.sub_scaled(&lead.coeff, &Monomial::one(cfg.n()), &std);
        last = Some(lead.monomial);
        terms.push(StandardTerm { coeff: lead.coeff, tableau: tab });
    }
    Ok(terms)
}

/// Every standard monomial in the representation of `delta` has
/// `γ_t ≥ γ_t(delta)` for all `t ≤ m`.
pub fn standard_rep_gamma_check(cfg: &HankelConfig, delta: &Tableau, budget: &Budget) -> Result<Report> {
    let start = Instant::now();
    let mut rep = Report::new("standard_rep", json!({"n": cfg.n(), "c": cfg.c(), "tableau": delta.to_string()}));
    let terms = standard_representation(cfg, delta, budget)?;
    let own: Vec<usize> = (1..=cfg.m()).map(|t| gamma_t(&delta.lengths(), t)).collect();
    for term in &terms {
        let lengths = term.tableau.lengths();
        if let Some(t) = (1..=cfg.m()).find(|&t| gamma_t(&lengths, t) < own[t - 1]) {
            rep.fail(format!("term {} has gamma_{t} below {}", term.tableau, own[t - 1]));
        }
    }
    rep.detail("representation", terms.iter().map(|t| format!("{} [{}]", t.coeff, t.tableau)).collect::<Vec<_>>());
    Ok(rep.finish(start))
}
