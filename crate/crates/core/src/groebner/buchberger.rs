use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{BudgetLog, Error, Result};
use crate::polyring::{Monomial, Polynomial, TermOrder};

/// Hard resource limits for one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_basis: usize,
    /// Pairs whose lcm exceeds this degree abort the run.
    pub max_degree: u32,
    pub wall: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_basis: 50_000, max_degree: 64, wall: Duration::from_secs(600) }
    }
}

#[derive(Clone, Debug, Default)]
pub struct BuchbergerConfig {
    pub budget: Budget,
    /// Skip pairs of lcm degree above this bound. Only for homogeneous input;
    /// the result is then a basis up to that degree and says so.
    pub truncate: Option<u32>,
    /// Stop at the first S-pair with a nonzero remainder (GB test mode).
    pub verify_only: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub pairs_skipped_by_truncation: usize,
    pub max_degree_seen: u32,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub nvars: usize,
    pub order: TermOrder,
    /// Reduced, monic, sorted by decreasing leading monomial.
    pub elements: Vec<Polynomial>,
    /// `Some(d)` when the run was truncated at degree `d`.
    pub truncated_at: Option<u32>,
    pub stats: RunStats,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.elements)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(&p.with_order(self.order)).is_zero()
    }
}

/// Outcome of the GB test mode.
#[derive(Clone, Debug)]
pub enum GbVerdict {
    IsBasis(RunStats),
    NotBasis { pair: (usize, usize), remainder: Polynomial },
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    // lex on exponents, ascending, gives ascending deglex within a degree
    exps: Vec<u16>,
    i: usize,
    j: usize,
}

fn pair_key(lcm: &Monomial, i: usize, j: usize) -> PairKey {
    PairKey { degree: lcm.degree(), exps: lcm.exponents().to_vec(), i, j }
}

struct State<'a> {
    cfg: &'a BuchbergerConfig,
    start: Instant,
    basis: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    pairs: BTreeSet<PairKey>,
    stats: RunStats,
}

impl State<'_> {
    fn budget_error(&self, limit: String) -> Error {
        Error::Budget(Box::new(BudgetLog {
            limit,
            basis_size: self.basis.len(),
            pairs_processed: self.stats.pairs_processed,
            pairs_pending: self.pairs.len(),
            max_degree_seen: self.stats.max_degree_seen,
            elapsed: self.start.elapsed(),
        }))
    }

    fn check_budget(&self) -> Result<()> {
        if self.start.elapsed() > self.cfg.budget.wall {
            return Err(self.budget_error(format!("wall clock {:?}", self.cfg.budget.wall)));
        }
        if self.basis.len() > self.cfg.budget.max_basis {
            return Err(self.budget_error(format!("basis size {}", self.cfg.budget.max_basis)));
        }
        Ok(())
    }

    /// Gebauer-Möller update after appending basis element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lms[h].clone();
        let cands: Vec<(usize, Monomial)> =
            (0..h).filter(|&g| self.active[g]).map(|g| (g, self.lms[g].lcm(&lh))).collect();
        let coprime: Vec<bool> = cands.iter().map(|(g, _)| self.lms[*g].is_coprime(&lh)).collect();
        // pairs (g, h) still waiting in C, then the accepted ones in D
        let mut waiting = vec![true; cands.len()];
        let mut accepted = vec![false; cands.len()];
        for a in 0..cands.len() {
            waiting[a] = false;
            let la = &cands[a].1;
            let dominated = (0..cands.len()).any(|b| (waiting[b] || accepted[b]) && cands[b].1.divides(la));
            if coprime[a] || !dominated {
                accepted[a] = true;
            }
        }
        let fresh: Vec<PairKey> = (0..cands.len())
            .filter(|&a| accepted[a] && !coprime[a])
            .map(|a| pair_key(&cands[a].1, cands[a].0, h))
            .collect();
        // old pairs made redundant by h
        let lms = &self.lms;
        self.pairs.retain(|p| {
            let l = Monomial::new(p.exps.clone());
            if !lh.divides(&l) {
                return true;
            }
            lms[p.i].lcm(&lh) == l || lms[p.j].lcm(&lh) == l
        });
        self.pairs.extend(fresh);
        for g in 0..h {
            if self.active[g] && lh.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
    }

    fn insert(&mut self, p: Polynomial) -> usize {
        let lm = p.leading_monomial().unwrap().clone();
        self.stats.max_degree_seen = self.stats.max_degree_seen.max(lm.degree());
        self.basis.push(p);
        self.lms.push(lm);
        self.active.push(true);
        let h = self.basis.len() - 1;
        self.update(h);
        h
    }

    fn reducers(&self) -> Vec<&Polynomial> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_term().unwrap();
    let lg = g.leading_term().unwrap();
    let l = lf.monomial.lcm(&lg.monomial);
    let a = lf.monomial.quotient_of(&l).unwrap();
    let b = lg.monomial.quotient_of(&l).unwrap();
    let fa = f.mul_term(&lg.coeff, &a);
    fa.sub_scaled(&lf.coeff, &b, g)
}

fn find_reducer<'a>(m: &Monomial, reducers: &[&'a Polynomial]) -> Option<&'a Polynomial> {
    reducers.iter().find(|g| g.leading_monomial().unwrap().divides(m)).copied()
}

/// Reduces until the leading monomial is not divisible by any reducer.
pub fn top_reduce(p: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let mut p = p.clone();
    while let Ok(t) = p.leading_term() {
        let Some(g) = find_reducer(&t.monomial, reducers) else { break };
        let lt = g.leading_term().unwrap();
        let q = lt.monomial.quotient_of(&t.monomial).unwrap();
        let c = &t.coeff / &lt.coeff;
        p = p.sub_scaled(&c, &q, g);
    }
    p
}

/// Full normal form modulo `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let reducers: Vec<&Polynomial> = basis.iter().collect();
    normal_form_refs(p, &reducers)
}

fn normal_form_refs(p: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    let mut done = Vec::new();
    loop {
        rest = top_reduce(&rest, reducers);
        let Some((t, tail)) = rest.split_lead() else { break };
        done.push((t.coeff, t.monomial));
        rest = tail;
    }
    Polynomial::from_terms(p.nvars(), p.order(), done)
}

fn prepare(gens: &[Polynomial], order: TermOrder) -> Result<Vec<Polynomial>> {
    let nvars = gens.first().ok_or_else(|| Error::Precondition("no generators".into()))?.nvars();
    if gens.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::Dimension("generators over different rings".into()));
    }
    let mut out: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order).monic()).collect();
    if out.is_empty() {
        return Err(Error::Precondition("all generators are zero".into()));
    }
    // smaller leading monomials first keeps early reductions cheap
    out.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(out)
}

fn run<'a>(gens: &[Polynomial], order: TermOrder, cfg: &'a BuchbergerConfig) -> Result<(State<'a>, Option<GbVerdict>)> {
    if cfg.truncate.is_some() && gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Precondition("degree truncation needs homogeneous generators".into()));
    }
    let input = prepare(gens, order)?;
    let mut st = State {
        cfg,
        start: Instant::now(),
        basis: Vec::new(),
        lms: Vec::new(),
        active: Vec::new(),
        pairs: BTreeSet::new(),
        stats: RunStats::default(),
    };
    for g in input {
        if cfg.verify_only {
            st.insert(g);
        } else {
            let r = top_reduce(&g, &st.reducers());
            if !r.is_zero() {
                st.insert(r.monic());
            }
        }
    }
    while let Some(key) = st.pairs.pop_first() {
        st.check_budget()?;
        if let Some(d) = cfg.truncate {
            if key.degree > d {
                st.stats.pairs_skipped_by_truncation += 1 + st.pairs.len();
                st.pairs.clear();
                break;
            }
        }
        if key.degree > cfg.budget.max_degree {
            return Err(st.budget_error(format!("pair degree {} over {}", key.degree, cfg.budget.max_degree)));
        }
        st.stats.pairs_processed += 1;
        st.stats.max_degree_seen = st.stats.max_degree_seen.max(key.degree);
        let s = s_polynomial(&st.basis[key.i], &st.basis[key.j]);
        let r = top_reduce(&s, &st.reducers());
        if r.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        if cfg.verify_only {
            return Ok((st, Some(GbVerdict::NotBasis { pair: (key.i, key.j), remainder: r })));
        }
        let reducers = st.reducers();
        let r = normal_form_refs(&r, &reducers).monic();
        st.insert(r);
    }
    Ok((st, None))
}

/// Interreduces to the reduced basis: minimal leading monomials, tails in
/// normal form, monic.
pub fn interreduce(elements: Vec<Polynomial>, order: TermOrder) -> Vec<Polynomial> {
    let mut els: Vec<Polynomial> = elements.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    els.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in els {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
        let (lt, tail) = minimal[i].split_lead().unwrap();
        let tail = normal_form_refs(&tail, &others);
        let head = Polynomial::from_terms(tail.nvars(), order, vec![(lt.coeff, lt.monomial)]);
        out.push(&head + &tail);
    }
    out.sort_by(|a, b| order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

/// Reduced Gröbner basis with the normal selection strategy and the
/// Gebauer-Möller criteria.
pub fn buchberger(gens: &[Polynomial], order: TermOrder, cfg: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let cfg = BuchbergerConfig { verify_only: false, ..cfg.clone() };
    let (st, _) = run(gens, order, &cfg)?;
    let mut stats = st.stats.clone();
    stats.elapsed_ms = st.start.elapsed().as_millis();
    let nvars = st.basis[0].nvars();
    let kept: Vec<Polynomial> = st.basis.into_iter().zip(st.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    Ok(GroebnerBasis { nvars, order, elements: interreduce(kept, order), truncated_at: cfg.truncate, stats })
}

/// Decides whether `gens` is already a Gröbner basis, processing only the
/// S-pairs that survive the Gebauer-Möller criteria.
pub fn is_groebner_pruned(gens: &[Polynomial], order: TermOrder, budget: &Budget) -> Result<GbVerdict> {
    let cfg = BuchbergerConfig { budget: budget.clone(), truncate: None, verify_only: true };
    let (st, verdict) = run(gens, order, &cfg)?;
    Ok(match verdict {
        Some(v) => v,
        None => {
            let mut stats = st.stats.clone();
            stats.elapsed_ms = st.start.elapsed().as_millis();
            GbVerdict::IsBasis(stats)
        }
    })
}

/// Reduces every S-pair of `gens` modulo `gens`, without any criterion.
/// Returns the number of pairs checked and the failing pairs.
pub fn is_groebner_exhaustive(gens: &[Polynomial], order: TermOrder) -> Result<(usize, Vec<(usize, usize)>)> {
    use rayon::prelude::*;
    let g = prepare(gens, order)?;
    let refs: Vec<&Polynomial> = g.iter().collect();
    let pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|i| (i + 1..g.len()).map(move |j| (i, j))).collect();
    let failures: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter(|&&(i, j)| !top_reduce(&s_polynomial(&g[i], &g[j]), &refs).is_zero())
        .copied()
        .collect();
    Ok((pairs.len(), failures))
}
