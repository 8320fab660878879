//! Sorted and quasi-sorted pairs of rows, the two marked moves, and reduction
//! to quasi-sorted form.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::chains::{chain_cmp, is_cchain, CChain, Tableau};
use crate::error::{BudgetLog, Error, Result};

/// `L(a) = ∪_{i ≥ 2} [a_i - c, a_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSet {
    pub source: CChain,
    pub intervals: Vec<(usize, usize)>,
}

impl LSet {
    pub fn new(a: &CChain, c: usize) -> Self {
        let intervals = a.indices().iter().skip(1).map(|&x| (x.saturating_sub(c), x)).collect();
        LSet { source: a.clone(), intervals }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo <= x && x <= hi)
    }

    /// 0-based position `p ≥ 1` of the interval `[a_p - c, a_p]` holding `x`.
    fn interval_of(&self, x: usize) -> Option<usize> {
        self.intervals.iter().position(|&(lo, hi)| lo <= x && x <= hi).map(|p| p + 1)
    }
}

fn check_order(a: &[usize], b: &[usize]) -> Result<()> {
    if chain_cmp(a, b) == Ordering::Less {
        return Err(Error::Ordering(format!("row {a:?} is below {b:?}")));
    }
    Ok(())
}

/// `a_i ≤ b_i ≤ a_{i+1}` wherever defined.
pub fn is_sorted_pair(a: &CChain, b: &CChain) -> Result<bool> {
    let (a, b) = (a.indices(), b.indices());
    check_order(a, b)?;
    Ok(sorted_unchecked(a, b))
}

fn sorted_unchecked(a: &[usize], b: &[usize]) -> bool {
    b.iter().enumerate().all(|(i, &bi)| a[i] <= bi && a.get(i + 1).is_none_or(|&next| bi <= next))
}

/// Sorted, or `a ≤ b` componentwise and from the first `k` with
/// `b_k > a_{k+1}` on, every `b_j` lies in `L(a)`.
pub fn is_quasi_sorted_pair(a: &CChain, b: &CChain, c: usize) -> Result<bool> {
    check_order(a.indices(), b.indices())?;
    Ok(quasi_sorted_unchecked(a, b, c))
}

fn quasi_sorted_unchecked(a: &CChain, b: &CChain, c: usize) -> bool {
    let (ai, bi) = (a.indices(), b.indices());
    if bi.iter().zip(ai).any(|(b, a)| a > b) {
        return false;
    }
    match (0..bi.len()).find(|&k| ai.get(k + 1).is_some_and(|&next| bi[k] > next)) {
        None => true,
        Some(k) => {
            let l = LSet::new(a, c);
            bi[k..].iter().all(|&x| l.contains(x))
        }
    }
}

/// Rows must be in decreasing order; every pair `i < j` is quasi-sorted.
pub fn is_quasi_sorted_tableau(t: &Tableau, c: usize) -> bool {
    let rows = &t.rows;
    let qs = (0..rows.len()).all(|i| {
        (i + 1..rows.len()).all(|j| {
            chain_cmp(rows[i].indices(), rows[j].indices()) != Ordering::Less
                && quasi_sorted_unchecked(&rows[i], &rows[j], c)
        })
    });
    if qs {
        let lengths = t.lengths();
        let spread = lengths.iter().max().unwrap_or(&0) - lengths.iter().min().unwrap_or(&0);
        if spread <= 1 {
            // near-equal lengths force the zigzag
            assert!(
                (0..rows.len())
                    .all(|i| (i + 1..rows.len()).all(|j| sorted_unchecked(rows[i].indices(), rows[j].indices()))),
                "quasi-sorted tableau {t} with near-equal rows is not sorted"
            );
        }
    }
    qs
}

/// Puts the larger row first.
pub fn order_pair(a: CChain, b: CChain) -> (CChain, CChain) {
    if chain_cmp(a.indices(), b.indices()) == Ordering::Less {
        (b, a)
    } else {
        (a, b)
    }
}

/// Componentwise min and max on the first `|b|` places; the tail of `a`
/// stays on the lower row.
pub fn plucker_step(a: &CChain, b: &CChain, c: usize) -> Result<(CChain, CChain)> {
    let (ai, bi) = (a.indices(), b.indices());
    let r = bi.len();
    if r > ai.len() || (0..r).all(|i| ai[i] <= bi[i]) {
        return Err(Error::NotApplicable);
    }
    let lo: Vec<usize> = (0..r).map(|i| ai[i].min(bi[i])).chain(ai[r..].iter().copied()).collect();
    let hi: Vec<usize> = (0..r).map(|i| ai[i].max(bi[i])).collect();
    debug_assert!(is_cchain(&lo, c) && is_cchain(&hi, c));
    Ok((CChain::from_vec(lo), CChain::from_vec(hi)))
}

/// Where a New-type move applies: `h` is the first place with
/// `b_h > a_{h+1}`, `k ≥ h` the first place with `b_k ∉ L(a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NewTypeSite {
    pub h: usize,
    pub k: usize,
}

pub fn newtype_site(a: &CChain, b: &CChain, c: usize) -> Option<NewTypeSite> {
    let (ai, bi) = (a.indices(), b.indices());
    if bi.len() > ai.len() || bi.iter().zip(ai).any(|(b, a)| a > b) {
        return None;
    }
    let h = (0..bi.len()).find(|&i| ai.get(i + 1).is_some_and(|&next| bi[i] > next))?;
    let l = LSet::new(a, c);
    let k = (h..bi.len()).find(|&i| !l.contains(bi[i]))?;
    Some(NewTypeSite { h, k })
}

/// The exchange at a violation site: if `b_k` sits right after the interval
/// of `b_{k-1}` (or `k = h`) it trades places with `a_{t_k}`; otherwise the
/// maximal run of `b` ending at `k` whose intervals are consecutive is
/// swapped with the matching run of `a`.
pub fn newtype_step(a: &CChain, b: &CChain, site: NewTypeSite, c: usize) -> Result<(CChain, CChain)> {
    if newtype_site(a, b, c) != Some(site) {
        return Err(Error::NotApplicable);
    }
    let NewTypeSite { h, k } = site;
    let l = LSet::new(a, c);
    let mut ai = a.indices().to_vec();
    let mut bi = b.indices().to_vec();
    let t: Vec<usize> = (h..k).map(|i| l.interval_of(bi[i]).unwrap()).collect();
    // b_k lies in a gap (a_p, a_{p+1} - c), with a_{s+1} = ∞
    let tk = (0..ai.len())
        .find(|&p| ai[p] < bi[k] && ai.get(p + 1).is_none_or(|&next| bi[k] + c < next))
        .ok_or(Error::NotApplicable)?;
    let t_at = |i: usize| if i == k { tk } else { t[i - h] };
    if k == h || t_at(k - 1) < tk {
        std::mem::swap(&mut ai[tk], &mut bi[k]);
    } else {
        let mut q = k - 1;
        while q > h && t_at(q - 1) + 1 == t_at(q) {
            q -= 1;
        }
        let lo = t_at(q) - 1;
        let hi = t_at(k - 1);
        debug_assert_eq!(hi + 1 - lo, k + 1 - q);
        for (x, y) in (lo..=hi).zip(q..=k) {
            std::mem::swap(&mut ai[x], &mut bi[y]);
        }
    }
    if !is_cchain(&ai, c) || !is_cchain(&bi, c) {
        return Err(Error::Chain(format!("exchange left {ai:?} / {bi:?}")));
    }
    Ok((CChain::from_vec(ai), CChain::from_vec(bi)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    Plucker,
    NewType,
}

/// One reduction step on an ordered pair, or `None` when it is quasi-sorted.
pub fn step_pair(a: &CChain, b: &CChain, c: usize) -> Option<(MoveKind, CChain, CChain)> {
    let (a, b) = order_pair(a.clone(), b.clone());
    if let Ok((x, y)) = plucker_step(&a, &b, c) {
        let (x, y) = order_pair(x, y);
        return Some((MoveKind::Plucker, x, y));
    }
    let site = newtype_site(&a, &b, c)?;
    let (x, y) = newtype_step(&a, &b, site, c).ok()?;
    let (x, y) = order_pair(x, y);
    Some((MoveKind::NewType, x, y))
}

/// Steps allowed before a reduction is declared runaway.
pub const STEP_CAP: usize = 100_000;

fn cap_error(steps: usize) -> Error {
    Error::Budget(Box::new(BudgetLog {
        limit: format!("step cap {STEP_CAP}"),
        basis_size: 0,
        pairs_processed: steps,
        pairs_pending: 0,
        max_degree_seen: 0,
        elapsed: std::time::Duration::ZERO,
    }))
}

/// Reduces a pair to its quasi-sorted form.
pub fn reduce_pair(a: &CChain, b: &CChain, c: usize) -> Result<(CChain, CChain)> {
    let (mut a, mut b) = order_pair(a.clone(), b.clone());
    for _ in 0..STEP_CAP {
        match step_pair(&a, &b, c) {
            None => {
                debug_assert!(quasi_sorted_unchecked(&a, &b, c));
                return Ok((a, b));
            }
            Some((_, x, y)) => (a, b) = (x, y),
        }
    }
    Err(cap_error(STEP_CAP))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The lexicographically first offending pair of rows.
    Leftmost,
    /// A uniformly random offending pair.
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: MoveKind,
    pub rows: (usize, usize),
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub tableau: Tableau,
    pub trace: Vec<TraceStep>,
}

/// Rewrites row pairs until the tableau is quasi-sorted, re-sorting rows after
/// every step.
pub fn reduce_tableau<R: Rng>(t: &Tableau, c: usize, strategy: Strategy, rng: &mut R) -> Result<Reduction> {
    let mut cur = Tableau::sorted(t.rows.clone());
    let mut trace = Vec::new();
    for _ in 0..STEP_CAP {
        let rows = &cur.rows;
        let offending: Vec<(usize, usize)> = (0..rows.len())
            .flat_map(|i| (i + 1..rows.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !quasi_sorted_unchecked(&rows[i], &rows[j], c))
            .collect();
        let Some(&(i, j)) = (match strategy {
            Strategy::Leftmost => offending.first(),
            Strategy::Random => offending.choose(rng),
        }) else {
            return Ok(Reduction { tableau: cur, trace });
        };
        let (kind, x, y) = step_pair(&cur.rows[i], &cur.rows[j], c)
            .ok_or_else(|| Error::Chain(format!("no move applies to rows {i}, {j} of {cur}")))?;
        cur.rows[i] = x;
        cur.rows[j] = y;
        cur.sort_rows();
        trace.push(TraceStep { kind, rows: (i, j), result: cur.to_string() });
    }
    Err(cap_error(STEP_CAP))
}
