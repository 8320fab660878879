//! c-chains, greedy c-decomposition, shapes and the γ functions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hankel::{maximal_minor, HankelConfig};
use crate::polyring::{Monomial, Polynomial};

/// True iff consecutive entries differ by more than `c`.
pub fn is_cchain(seq: &[usize], c: usize) -> bool {
    seq.windows(2).all(|w| w[0] + c < w[1])
}

/// A strictly increasing index sequence with gaps larger than `c`. The step
/// parameter is not stored; constructors validate against it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct CChain(Vec<usize>);

impl CChain {
    pub fn new(indices: Vec<usize>, c: usize) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::Chain("indices start at 1".into()));
        }
        if !is_cchain(&indices, c) {
            return Err(Error::Chain(format!("{indices:?} with c = {c}")));
        }
        Ok(CChain(indices))
    }

    /// Wraps indices already known to form a chain.
    pub(crate) fn from_vec(indices: Vec<usize>) -> Self {
        CChain(indices)
    }

    pub fn empty() -> Self {
        CChain(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The squarefree monomial `x_{a_1}...x_{a_s}`.
    pub fn monomial(&self, n: usize) -> Result<Monomial> {
        Monomial::from_indices(n, &self.0)
    }

    pub fn parse(text: &str, c: usize) -> Result<Self> {
        let indices = text
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad index `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        CChain::new(indices, c)
    }
}

impl fmt::Display for CChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Deglex comparison of the chain monomials: a longer chain is larger, and for
/// equal lengths the lexicographically smaller tuple is larger.
pub fn chain_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| b.cmp(a))
}

/// Greedy c-decomposition of a sorted index multiset.
pub fn c_decompose_indices(indices: &[usize], c: usize) -> Vec<CChain> {
    let mut rest: Vec<usize> = indices.to_vec();
    rest.sort_unstable();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let mut chain = Vec::new();
        let mut left = Vec::with_capacity(rest.len());
        for &x in &rest {
            match chain.last() {
                Some(&last) if x <= last + c => left.push(x),
                _ => chain.push(x),
            }
        }
        out.push(CChain(chain));
        rest = left;
    }
    out
}

/// Factors `δ` into deglex-maximal c-chains, consuming repeated variables one
/// copy at a time. The monomial 1 has the empty decomposition.
pub fn c_decompose(delta: &Monomial, c: usize) -> Vec<CChain> {
    c_decompose_indices(&delta.indices(), c)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape(pub Vec<usize>);

impl Shape {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Parses `3,2` or `3 2`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse(format!("bad part `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Parse("empty shape".into()));
        }
        Ok(Shape(parts))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn shape_of(delta: &Monomial, c: usize) -> Shape {
    Shape(c_decompose(delta, c).iter().map(CChain::len).collect())
}

/// `Σ max(k_i + 1 - t, 0)` over the parts.
pub fn gamma_t(shape: &[usize], t: usize) -> usize {
    shape.iter().map(|&k| (k + 1).saturating_sub(t)).sum()
}

pub fn gamma_tc(delta: &Monomial, t: usize, c: usize) -> usize {
    gamma_t(shape_of(delta, c).parts(), t)
}

pub fn socle(delta: &Monomial, c: usize) -> Result<CChain> {
    c_decompose(delta, c).into_iter().next().ok_or_else(|| Error::Precondition("the monomial 1 has no socle".into()))
}

/// Rows of c-chains; standard monomials and quasi-sorted forms live here.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<CChain>,
}

impl Tableau {
    pub fn new(rows: Vec<CChain>) -> Self {
        Tableau { rows }
    }

    /// Rows ordered by decreasing monomial; equal rows keep their order.
    pub fn sorted(rows: Vec<CChain>) -> Self {
        let mut t = Tableau { rows };
        t.sort_rows();
        t
    }

    pub fn sort_rows(&mut self) {
        self.rows.sort_by(|a, b| chain_cmp(b.indices(), a.indices()));
    }

    pub fn is_row_ordered(&self) -> bool {
        self.rows.windows(2).all(|w| chain_cmp(w[0].indices(), w[1].indices()) != Ordering::Less)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.rows.iter().map(CChain::len).collect()
    }

    /// All indices, sorted.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().flat_map(|r| r.indices().iter().copied()).collect();
        v.sort_unstable();
        v
    }

    pub fn monomial(&self, n: usize) -> Result<Monomial> {
        Monomial::from_indices(n, &self.multiset())
    }

    pub fn max_index(&self) -> usize {
        self.rows.iter().filter_map(CChain::last).max().unwrap_or(0)
    }

    /// Parses `1 4 7 10 / 1 8 / 2`; each row must be a c-chain.
    pub fn parse(text: &str, c: usize) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty tableau".into()));
        }
        let rows = text
            .split('/')
            .map(|r| if r.trim().is_empty() { Err(Error::Parse("empty row".into())) } else { CChain::parse(r, c) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The maximal minor with diagonal `chain`.
pub fn phi(cfg: &HankelConfig, chain: &CChain) -> Result<Polynomial> {
    maximal_minor(cfg, chain)
}

/// The tableau of c-decomposition factors of `δ`.
#[allow(non_snake_case)]
pub fn Phi(delta: &Monomial, c: usize) -> Tableau {
    Tableau::new(c_decompose(delta, c))
}

/// Product of the maximal minors of the rows.
pub fn tableau_polynomial(cfg: &HankelConfig, t: &Tableau) -> Result<Polynomial> {
    let mut acc = Polynomial::one(cfg.n());
    for row in &t.rows {
        acc = &acc * &maximal_minor(cfg, row)?;
    }
    Ok(acc)
}

/// The standard monomial `Φ(δ)` expanded as a polynomial.
pub fn standard_monomial(cfg: &HankelConfig, delta: &Monomial) -> Result<Polynomial> {
    tableau_polynomial(cfg, &Phi(delta, cfg.c()))
}

/// Trades one entry between a chain of length `s` and one of length `r < s - 1`,
/// returning chains of lengths `s - 1` and `r + 1` on the same index multiset.
pub fn chain_exchange(a: &CChain, b: &CChain, c: usize) -> Result<(CChain, CChain)> {
    let (s, r) = (a.len(), b.len());
    if s <= r + 1 {
        return Err(Error::Precondition(format!("lengths {s} and {r} need s > r + 1")));
    }
    if !is_cchain(a.indices(), c) || !is_cchain(b.indices(), c) {
        return Err(Error::Chain(format!("{a:?} / {b:?}")));
    }
    let mut i: Vec<usize> = a.indices().to_vec();
    let mut j: Vec<usize> = b.indices().to_vec();
    for h in 0..r {
        if i[h] > j[h] {
            std::mem::swap(&mut i[h], &mut j[h]);
        }
    }
    let (n3, n4) = match (0..r).find(|&k| i[k] + c < j[k]) {
        Some(k) => {
            let n3: Vec<usize> = j[..k].iter().chain(&i[k + 1..]).copied().collect();
            let n4: Vec<usize> = i[..=k].iter().chain(&j[k..]).copied().collect();
            (n3, n4)
        }
        None => {
            let n3 = i[..s - 1].to_vec();
            let mut n4 = j.clone();
            n4.push(i[s - 1]);
            (n3, n4)
        }
    };
    debug_assert!(is_cchain(&n3, c) && is_cchain(&n4, c));
    Ok((CChain(n3), CChain(n4)))
}

/// Shape of the product of two chain monomials.
pub fn cc_merge_shape(a: &CChain, b: &CChain, c: usize) -> Shape {
    let mut all: Vec<usize> = a.indices().iter().chain(b.indices()).copied().collect();
    all.sort_unstable();
    let shape = Shape(c_decompose_indices(&all, c).iter().map(CChain::len).collect());
    debug_assert!(shape.0.len() <= 2);
    debug_assert!(shape.0.first().copied().unwrap_or(0) >= a.len().max(b.len()));
    shape
}

/// All c-chains of length `len` with entries in `[1, max]`, lexicographic.
pub fn enumerate_chains(max: usize, c: usize, len: usize) -> Vec<CChain> {
    fn rec(start: usize, max: usize, c: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<CChain>) {
        if left == 0 {
            out.push(CChain(cur.clone()));
            return;
        }
        // leave room for the remaining entries
        let need = (left - 1) * (c + 1);
        let mut i = start;
        while i + need <= max {
            cur.push(i);
            rec(i + c + 1, max, c, left - 1, cur, out);
            cur.pop();
            i += 1;
        }
    }
    let mut out = Vec::new();
    rec(1, max, c, len, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing shapes with total at most `max_total` and parts at most
/// `max_part`, in lexicographic order.
pub fn shapes_up_to(max_total: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in 1..=cap.min(left) {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_total, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}
