//! Quadratic relations of the multi-Rees algebra of the chain ideals and the
//! degree-two standard-monomial check.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use crate::chains::{chain_cmp, enumerate_chains, CChain};
use crate::error::{Error, Result};
use crate::report::Report;

use super::pairs::{is_quasi_sorted_pair, order_pair, reduce_pair, step_pair, MoveKind};

/// A variable of the presentation: `x_t`, or `Y_(p,a)` with `a` a chain of
/// length `t_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReesVar {
    X(usize),
    Y { label: usize, chain: CChain },
}

impl ReesVar {
    fn indices(&self) -> Vec<usize> {
        match self {
            ReesVar::X(t) => vec![*t],
            ReesVar::Y { chain, .. } => chain.indices().to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RelationKind {
    Plucker,
    NewType,
    /// `x_t Y_a -> x_{a_h} Y_b`.
    ReesVariable,
    /// Two equal-length factors with different labels trade chains.
    TypeSwap,
}

/// Image of a monomial under `x_i -> x_i`, `Y_(p,a) -> x_a T_p`: the sorted
/// index multiset and the sorted label multiset.
pub type PsiImage = (Vec<usize>, Vec<usize>);

pub fn psi(vars: &[ReesVar]) -> PsiImage {
    let mut idx: Vec<usize> = vars.iter().flat_map(ReesVar::indices).collect();
    let mut labels: Vec<usize> = vars
        .iter()
        .filter_map(|v| match v {
            ReesVar::Y { label, .. } => Some(*label),
            ReesVar::X(_) => None,
        })
        .collect();
    idx.sort_unstable();
    labels.sort_unstable();
    (idx, labels)
}

/// A marked binomial `lhs - rhs` with `Ψ(lhs) = Ψ(rhs)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteRelation {
    pub kind: RelationKind,
    pub lhs: Vec<ReesVar>,
    pub rhs: Vec<ReesVar>,
}

impl RewriteRelation {
    pub fn new(kind: RelationKind, lhs: Vec<ReesVar>, rhs: Vec<ReesVar>) -> Result<Self> {
        if psi(&lhs) != psi(&rhs) {
            return Err(Error::Precondition(format!("relation is not in the kernel: {lhs:?} -> {rhs:?}")));
        }
        Ok(RewriteRelation { kind, lhs, rhs })
    }

    pub fn kernel_check(&self) -> bool {
        psi(&self.lhs) == psi(&self.rhs)
    }
}

struct VarDisplay<'a>(&'a ReesVar, bool);

impl fmt::Display for VarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ReesVar::X(t) => write!(f, "x{t}"),
            ReesVar::Y { label, chain } if self.1 => write!(f, "Y{label}[{chain}]"),
            ReesVar::Y { chain, .. } => write!(f, "Y[{chain}]"),
        }
    }
}

impl RewriteRelation {
    /// `Y[1 8]*x4 -> Y[1 4]*x8`; labels are printed only when `labelled`.
    pub fn dump(&self, labelled: bool) -> String {
        let side = |vs: &[ReesVar]| {
            let mut ys: Vec<String> = vs
                .iter()
                .filter(|v| matches!(v, ReesVar::Y { .. }))
                .map(|v| VarDisplay(v, labelled).to_string())
                .collect();
            ys.extend(vs.iter().filter(|v| matches!(v, ReesVar::X(_))).map(|v| VarDisplay(v, labelled).to_string()));
            ys.join("*")
        };
        format!("{} -> {}", side(&self.lhs), side(&self.rhs))
    }
}

impl fmt::Display for RewriteRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump(false))
    }
}

/// `x_t Y_a` is reducible iff `a_{h-1} + c < t < a_h` for some `h`, with
/// `a_0 = -∞`; returns the `h` (0-based).
pub fn rees_variable_site(t: usize, a: &CChain, c: usize) -> Option<usize> {
    let ai = a.indices();
    (0..ai.len()).find(|&h| t < ai[h] && (h == 0 || ai[h - 1] + c < t))
}

fn y(label: usize, chain: CChain) -> ReesVar {
    ReesVar::Y { label, chain }
}

/// Normal form of `Y_(s,a) Y_(r,b)`: the quasi-sorted pair, with the smaller
/// label on the larger chain when the lengths agree.
pub fn normal_pair(s: usize, a: &CChain, r: usize, b: &CChain, c: usize) -> Result<[ReesVar; 2]> {
    let (x, z) = reduce_pair(a, b, c)?;
    // labels follow lengths; equal lengths take labels in increasing order
    let (ls, lr) = if a.len() == b.len() {
        (s.min(r), s.max(r))
    } else if x.len() == a.len() {
        (s, r)
    } else {
        (r, s)
    };
    Ok([y(ls, x), y(lr, z)])
}

fn canonical_vars(mut v: Vec<ReesVar>) -> Vec<ReesVar> {
    v.sort();
    v
}

/// Degree-two monomials `Y_(s,a) Y_(r,b)` as sorted variable pairs.
fn y_variables(n: usize, c: usize, tau: &[usize]) -> Vec<ReesVar> {
    tau.iter().enumerate().flat_map(|(p, &t)| enumerate_chains(n, c, t).into_iter().map(move |a| y(p + 1, a))).collect()
}

fn check_tau(n: usize, c: usize, tau: &[usize]) -> Result<()> {
    let m = (n + c) / (c + 1);
    if tau.is_empty() || tau.iter().any(|&t| t == 0 || t > m) {
        return Err(Error::Range(format!("every part of {tau:?} must lie in 1..={m}")));
    }
    Ok(())
}

fn split(v: &ReesVar) -> (usize, &CChain) {
    match v {
        ReesVar::Y { label, chain } => (*label, chain),
        ReesVar::X(_) => unreachable!("x variables are not paired here"),
    }
}

/// Whether the degree-two monomial is already in normal form.
pub fn is_quasi_sorted_monomial(u: &ReesVar, v: &ReesVar, c: usize) -> bool {
    let (s, a) = split(u);
    let (r, b) = split(v);
    let ((s, a), (r, b)) =
        if chain_cmp(a.indices(), b.indices()).is_lt() { ((r, b), (s, a)) } else { ((s, a), (r, b)) };
    let labels_ok = a.len() != b.len() || a == b || s <= r;
    labels_ok && is_quasi_sorted_pair(a, b, c).unwrap_or(false)
}

/// All relations of both types for the labelled chain ideals of `τ`.
pub fn rees_quadrics(n: usize, c: usize, tau: &[usize]) -> Result<Vec<RewriteRelation>> {
    check_tau(n, c, tau)?;
    let vars = y_variables(n, c, tau);
    let mut out = Vec::new();
    for i in 0..vars.len() {
        for j in i..vars.len() {
            let (s, a) = split(&vars[i]);
            let (r, b) = split(&vars[j]);
            let lhs = canonical_vars(vec![vars[i].clone(), vars[j].clone()]);
            let rhs = canonical_vars(normal_pair(s, a, r, b, c)?.to_vec());
            if lhs == rhs {
                continue;
            }
            let (oa, ob) = order_pair(a.clone(), b.clone());
            let kind = match step_pair(&oa, &ob, c) {
                Some((MoveKind::Plucker, ..)) => RelationKind::Plucker,
                Some((MoveKind::NewType, ..)) => RelationKind::NewType,
                None => RelationKind::TypeSwap,
            };
            out.push(RewriteRelation::new(kind, lhs, rhs)?);
        }
    }
    for v in &vars {
        let (p, a) = split(v);
        for t in 1..=n {
            if let Some(h) = rees_variable_site(t, a, c) {
                let mut b = a.indices().to_vec();
                let ah = b[h];
                b[h] = t;
                let rhs = vec![y(p, CChain::from_vec(b)), ReesVar::X(ah)];
                out.push(RewriteRelation::new(RelationKind::ReesVariable, vec![v.clone(), ReesVar::X(t)], rhs)?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StandardMonomialStats {
    pub relations: BTreeMap<String, usize>,
    pub quadratic_monomials: usize,
    pub standard: usize,
    pub mixed_monomials: usize,
    pub mixed_standard: usize,
}

/// At degree two: the monomials not marked by any relation are exactly the
/// quasi-sorted ones, and Ψ separates them; the same for `x_t Y_a`.
pub fn verify_standard_monomials(n: usize, c: usize, tau: &[usize]) -> Result<Report> {
    check_tau(n, c, tau)?;
    let start = Instant::now();
    let mut rep = Report::new("rees", json!({"n": n, "c": c, "tau": tau}));
    let relations = rees_quadrics(n, c, tau)?;
    let mut stats = StandardMonomialStats::default();
    for r in &relations {
        *stats.relations.entry(format!("{:?}", r.kind)).or_default() += 1;
        if !r.kernel_check() {
            rep.fail(format!("relation {} leaves the kernel", r.dump(tau.len() > 1)));
        }
    }
    let marked: HashSet<Vec<ReesVar>> = relations.iter().map(|r| r.lhs.clone()).collect();
    let mut images: HashMap<PsiImage, Vec<ReesVar>> = HashMap::new();
    let vars = y_variables(n, c, tau);
    for i in 0..vars.len() {
        for j in i..vars.len() {
            stats.quadratic_monomials += 1;
            let mono = canonical_vars(vec![vars[i].clone(), vars[j].clone()]);
            let irreducible = !marked.contains(&mono);
            let qs = is_quasi_sorted_monomial(&vars[i], &vars[j], c);
            if irreducible != qs {
                rep.fail(format!("{mono:?}: irreducible {irreducible}, quasi-sorted {qs}"));
            }
            if qs {
                stats.standard += 1;
                if let Some(prev) = images.insert(psi(&mono), mono.clone()) {
                    rep.fail(format!("{prev:?} and {mono:?} share a Psi-image"));
                }
            }
        }
    }
    // every quadratic monomial has a standard representative in its fibre
    for i in 0..vars.len() {
        for j in i..vars.len() {
            let mono = [vars[i].clone(), vars[j].clone()];
            if !images.contains_key(&psi(&mono)) {
                rep.fail(format!("no standard monomial with the image of {mono:?}"));
            }
        }
    }
    let mut mixed: HashMap<PsiImage, usize> = HashMap::new();
    for v in &vars {
        let (_, a) = split(v);
        for t in 1..=n {
            stats.mixed_monomials += 1;
            let image = psi(&[v.clone(), ReesVar::X(t)]);
            let count = mixed.entry(image).or_default();
            if rees_variable_site(t, a, c).is_none() {
                stats.mixed_standard += 1;
                *count += 1;
            }
        }
    }
    if let Some((image, k)) = mixed.iter().find(|(_, &k)| k != 1) {
        rep.fail(format!("x*Y fibre {image:?} has {k} irreducible members"));
    }
    rep.detail("stats", &stats);
    Ok(rep.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(v: &[usize]) -> CChain {
        CChain::from_vec(v.to_vec())
    }

    #[test]
    fn variable_relation_example() {
        let rels = rees_quadrics(9, 2, &[2]).unwrap();
        let dumps: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
        assert!(dumps.contains(&"Y[1 8]*x4 -> Y[1 4]*x8".to_string()), "{dumps:?}");
        assert!(rees_variable_site(4, &ch(&[1, 8]), 2) == Some(1));
        assert!(rees_variable_site(2, &ch(&[1, 8]), 2).is_none());
    }

    #[test]
    fn pair_relation_example() {
        let rels = rees_quadrics(7, 2, &[2]).unwrap();
        let dumps: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
        assert!(dumps.contains(&"Y[1 7]*Y[2 5] -> Y[1 5]*Y[2 7]".to_string()), "{dumps:?}");
        // sorted pairs are never marked
        assert!(!dumps.iter().any(|d| d.starts_with("Y[1 5]*Y[2 7]")));
    }

    #[test]
    fn kernel_check_rejects_mismatch() {
        let r = RewriteRelation::new(RelationKind::TypeSwap, vec![y(1, ch(&[1, 4]))], vec![y(1, ch(&[1, 5]))]);
        assert!(r.is_err());
    }

    #[test]
    fn standard_monomials_small() {
        for tau in [&[2][..], &[3, 2], &[2, 2]] {
            let r = verify_standard_monomials(9, 2, tau).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        assert!(verify_standard_monomials(5, 2, &[3]).is_err());
    }
}
