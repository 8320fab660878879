//! The extended Hankel arrangement, its minors and maximal minors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chains::{chain_cmp, is_cchain, CChain};
use crate::error::{Error, Result};
use crate::polyring::{determinant, Coeff, Polynomial};

/// Entry `(i, j)` of the arrangement is `x_{j + (i-1)c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HankelConfig {
    n: usize,
    c: usize,
}

impl HankelConfig {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if n == 0 || c == 0 {
            return Err(Error::Range(format!("need n >= 1 and c >= 1, got n = {n}, c = {c}")));
        }
        Ok(HankelConfig { n, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Largest row index, `⌊(n-1)/c⌋`.
    pub fn k(&self) -> usize {
        (self.n - 1) / self.c
    }

    /// Size of the largest minor, `⌊(n+c)/(c+1)⌋`.
    pub fn m(&self) -> usize {
        (self.n + self.c) / (self.c + 1)
    }

    /// Number of columns of `X_t`.
    pub fn columns(&self, t: usize) -> usize {
        self.n.saturating_sub((t.saturating_sub(1)) * self.c)
    }

    pub fn entry(&self, row: usize, col: usize) -> Result<usize> {
        if row == 0 || col == 0 {
            return Err(Error::Bounds("rows and columns start at 1".into()));
        }
        let idx = col + (row - 1) * self.c;
        if idx > self.n {
            return Err(Error::Bounds(format!("entry ({row}, {col}) is x{idx}, beyond x{}", self.n)));
        }
        Ok(idx)
    }

    fn var(&self, row: usize, col: usize) -> Result<Polynomial> {
        Polynomial::var(self.n, self.entry(row, col)?)
    }
}

/// Row and column lists of a minor, `[1,2|3,4]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.first().is_none_or(|&x| x > 0) && v.windows(2).all(|w| w[0] < w[1])
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::Dimension(format!("{} rows and {} columns", rows.len(), cols.len())));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::Bounds(format!("{rows:?}|{cols:?} not strictly increasing")));
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn validate(&self, cfg: &HankelConfig) -> Result<()> {
        cfg.entry(*self.rows.last().unwrap(), *self.cols.last().unwrap()).map(|_| ())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad minor `{text}`, expected [1,2|3,4]"));
        let inner = text.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
        let (r, c) = inner.split_once('|').ok_or_else(bad)?;
        let list =
            |s: &str| s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>();
        MinorSpec::new(list(r)?, list(c)?)
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", j(&self.rows), j(&self.cols))
    }
}

/// Determinant on arbitrary row/column lists; repeats give zero.
fn raw_minor(cfg: &HankelConfig, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
    let grid = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| cfg.var(i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    determinant(&grid)
}

pub fn minor(cfg: &HankelConfig, spec: &MinorSpec) -> Result<Polynomial> {
    spec.validate(cfg)?;
    raw_minor(cfg, &spec.rows, &spec.cols)
}

/// Columns of the maximal minor with diagonal `a`: `b_i = a_i - (i-1)c`.
pub fn maximal_minor_spec(cfg: &HankelConfig, diag: &CChain) -> Result<MinorSpec> {
    let a = diag.indices();
    if a.is_empty() {
        return Err(Error::Chain("empty diagonal".into()));
    }
    if !is_cchain(a, cfg.c) || a[0] == 0 {
        return Err(Error::Chain(format!("{a:?} with c = {}", cfg.c)));
    }
    if *a.last().unwrap() > cfg.n {
        return Err(Error::Bounds(format!("x{} beyond x{}", a.last().unwrap(), cfg.n)));
    }
    let cols = a.iter().enumerate().map(|(i, &ai)| ai - i * cfg.c).collect();
    MinorSpec::new((1..=a.len()).collect(), cols)
}

pub fn maximal_minor(cfg: &HankelConfig, diag: &CChain) -> Result<Polynomial> {
    minor(cfg, &maximal_minor_spec(cfg, diag)?)
}

/// Parses `M(1,4,7,10)`.
pub fn parse_diagonal(text: &str, c: usize) -> Result<CChain> {
    let inner = text
        .trim()
        .strip_prefix("M(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad diagonal `{text}`, expected M(1,4,7)")))?;
    CChain::parse(inner, c)
}

pub fn format_diagonal(diag: &CChain) -> String {
    let v: Vec<String> = diag.indices().iter().map(|x| x.to_string()).collect();
    format!("M({})", v.join(","))
}

fn subsets(t: usize, kk: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, t: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..t {
            if t - i < left {
                break;
            }
            cur.push(i);
            rec(i + 1, t, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, t, kk, &mut Vec::new(), &mut out);
    out
}

fn bump(v: &[usize], positions: &[usize], by: usize) -> Vec<usize> {
    let mut out = v.to_vec();
    for &p in positions {
        out[p] += by;
    }
    out
}

/// Symbolic check of `Σ_{|H|=kk} [α+e(H)|β] = Σ_{|G|=kk} [α|β+c·e(G)]`.
pub fn row_column_shift_identity(cfg: &HankelConfig, alpha: &[usize], beta: &[usize], kk: usize) -> Result<bool> {
    let t = alpha.len();
    if t != beta.len() || t == 0 {
        return Err(Error::Dimension(format!("{} rows and {} columns", t, beta.len())));
    }
    if kk == 0 || kk > t {
        return Err(Error::Range(format!("k = {kk} outside 1..={t}")));
    }
    let mut lhs = Polynomial::zero(cfg.n);
    let mut rhs = Polynomial::zero(cfg.n);
    for h in subsets(t, kk) {
        lhs = &lhs + &raw_minor(cfg, &bump(alpha, &h, 1), beta)?;
        rhs = &rhs + &raw_minor(cfg, alpha, &bump(beta, &h, cfg.c))?;
    }
    Ok(lhs == rhs)
}

/// Sorts `v` in place and returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(v: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Writes a minor as a rational combination of maximal minors. The first entry
/// carries the leading monomial of the minor with coefficient 1; the others
/// follow in decreasing order of leading monomial. The result is checked by
/// re-expansion.
pub fn rewrite_to_maximal(cfg: &HankelConfig, spec: &MinorSpec) -> Result<Vec<(Coeff, CChain)>> {
    spec.validate(cfg)?;
    let c = cfg.c;
    let t = spec.size();
    let top: Vec<usize> = (1..=t).collect();
    let mut work: BTreeMap<(Vec<usize>, Vec<usize>), Coeff> = BTreeMap::new();
    let mut done: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
    work.insert((spec.rows.clone(), spec.cols.clone()), Coeff::one());

    let push = |work: &mut BTreeMap<(Vec<usize>, Vec<usize>), Coeff>,
                mut rows: Vec<usize>,
                mut cols: Vec<usize>,
                coef: Coeff| {
        let (Some(sr), Some(sc)) = (sort_with_sign(&mut rows), sort_with_sign(&mut cols)) else {
            return;
        };
        let coef = if sr != sc { -coef } else { coef };
        let e = work.entry((rows, cols)).or_insert_with(Coeff::zero);
        *e += coef;
    };

    while let Some(((rows, cols), coef)) = work.pop_last() {
        if coef.is_zero() {
            continue;
        }
        if rows == top {
            let diag: Vec<usize> = cols.iter().enumerate().map(|(i, &b)| b + i * c).collect();
            *done.entry(diag).or_insert_with(Coeff::zero) += coef;
            continue;
        }
        if rows[0] > 1 {
            let r = rows.iter().map(|x| x - 1).collect();
            let s = cols.iter().map(|x| x + c).collect();
            push(&mut work, r, s, coef);
            continue;
        }
        let j = rows[t - 1];
        // rows h..t form the consecutive block ending at j
        let h = (0..t).find(|&i| rows[i] + t == j + i + 1).unwrap();
        let mut alpha = rows.clone();
        for a in alpha.iter_mut().skip(h) {
            *a -= 1;
        }
        let kk = t - h;
        let block: Vec<usize> = (h..t).collect();
        for g in subsets(t, kk) {
            push(&mut work, alpha.clone(), bump(&cols, &g, c), coef.clone());
        }
        for hs in subsets(t, kk) {
            if hs == block {
                continue;
            }
            push(&mut work, bump(&alpha, &hs, 1), cols.clone(), -coef.clone());
        }
    }

    let mut out: Vec<(Coeff, CChain)> =
        done.into_iter().filter(|(_, k)| !k.is_zero()).map(|(d, k)| (k, CChain::from_vec(d))).collect();
    out.sort_by(|a, b| chain_cmp(b.1.indices(), a.1.indices()));

    let target = minor(cfg, spec)?;
    let mut check = Polynomial::zero(cfg.n);
    for (k, d) in &out {
        check = &check + &maximal_minor(cfg, d)?.scale(k);
    }
    assert_eq!(check, target, "rewrite of {spec} does not re-expand");
    let lead: Vec<usize> = target.leading_monomial()?.indices();
    assert!(
        out.first().is_some_and(|(k, d)| k.is_one() && d.indices() == lead.as_slice()),
        "rewrite of {spec} does not start with its leading term"
    );
    Ok(out)
}
