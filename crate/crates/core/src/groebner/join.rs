//! Joins and secants by elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::polyring::{coeff, Monomial, Polynomial, TermOrder};

use super::buchberger::{buchberger, normal_form, BuchbergerConfig};

/// An ideal given by generators in `x_1..x_n`, deglex.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPresentation {
    pub nvars: usize,
    pub generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Dimension(format!("generator {g} is not in {nvars} variables")));
        }
        let generators =
            generators.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_order(TermOrder::DegLex)).collect();
        Ok(IdealPresentation { nvars, generators })
    }

    /// `⟨x_1, ..., x_n⟩^d`.
    pub fn maximal_power(nvars: usize, d: u32) -> Self {
        let generators =
            crate::polyring::monomials_of_degree(nvars, d).into_iter().map(Polynomial::from_monomial).collect();
        IdealPresentation { nvars, generators }
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.generators.iter().map(|g| g.leading_monomial().unwrap().clone()).collect())
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|p| p.to_string()).collect();
        write!(f, "<{}>", g.join(", "))
    }
}

/// `(I_1(y_1) + ... + I_r(y_r) + ⟨y_{1i} + ... + y_{ri} - x_i⟩) ∩ K[x]`.
///
/// The y-blocks come first in a block order, so the x-only elements of the
/// reduced basis form a deglex Gröbner basis of the contraction.
pub fn join_many(ideals: &[&IdealPresentation], cfg: &BuchbergerConfig) -> Result<IdealPresentation> {
    let Some(first) = ideals.first() else {
        return Err(Error::Precondition("join of no ideals".into()));
    };
    let n = first.nvars;
    if ideals.iter().any(|i| i.nvars != n) {
        return Err(Error::Dimension("joined ideals live in different rings".into()));
    }
    let r = ideals.len();
    let total = (r + 1) * n;
    let order = TermOrder::Elimination { split: r * n };
    let mut gens = Vec::new();
    for (b, ideal) in ideals.iter().enumerate() {
        gens.extend(ideal.generators.iter().map(|g| g.embed(total, b * n, order)));
    }
    for i in 0..n {
        let mut raw: Vec<_> = (0..r).map(|b| (coeff(1), Monomial::var(total, b * n + i + 1).unwrap())).collect();
        raw.push((coeff(-1), Monomial::var(total, r * n + i + 1).unwrap()));
        gens.push(Polynomial::from_terms(total, order, raw));
    }
    let gb = buchberger(&gens, order, cfg)?;
    let generators = gb
        .elements
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.monomial.exponents()[..r * n].iter().all(|&e| e == 0)))
        .map(|g| g.restrict(r * n, n, TermOrder::DegLex))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealPresentation { nvars: n, generators })
}

pub fn join_ideal(i: &IdealPresentation, j: &IdealPresentation, cfg: &BuchbergerConfig) -> Result<IdealPresentation> {
    join_many(&[i, j], cfg)
}

/// The r-fold join of `I` with itself; `secant(I, 1)` is `I` itself.
pub fn secant(i: &IdealPresentation, r: usize, cfg: &BuchbergerConfig) -> Result<IdealPresentation> {
    if r == 0 {
        return Err(Error::Range("secant order must be positive".into()));
    }
    if r == 1 {
        return Ok(i.clone());
    }
    let copies: Vec<&IdealPresentation> = std::iter::repeat_n(i, r).collect();
    join_many(&copies, cfg)
}

/// `I ⋆ ⟨x⟩^r`, the join with a power of the maximal ideal.
pub fn symbolic_power_by_join(i: &IdealPresentation, r: u32, cfg: &BuchbergerConfig) -> Result<IdealPresentation> {
    join_ideal(i, &IdealPresentation::maximal_power(i.nvars, r), cfg)
}

/// Every generator of `a` reduces to zero modulo the Gröbner basis `basis`.
pub fn contained_in(a: &[Polynomial], basis: &[Polynomial]) -> bool {
    a.iter().all(|g| normal_form(&g.with_order(TermOrder::DegLex), basis).is_zero())
}
