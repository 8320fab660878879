//! Seeded random tableaux and the straightening invariants checked on them.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::chains::{enumerate_chains, CChain, Tableau};
use crate::error::Result;
use crate::report::Report;

use super::pairs::{is_quasi_sorted_tableau, reduce_tableau, Strategy};
use super::pf::canonical_placement;

/// Bounds for random tableaux.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableauBounds {
    pub max_n: usize,
    pub max_c: usize,
    pub max_rows: usize,
    pub max_len: usize,
}

impl Default for TableauBounds {
    fn default() -> Self {
        TableauBounds { max_n: 12, max_c: 3, max_rows: 4, max_len: 4 }
    }
}

/// A random tableau and the `c` it is built for.
pub fn random_tableau<R: Rng>(rng: &mut R, bounds: &TableauBounds) -> (Tableau, usize, usize) {
    loop {
        let n = rng.gen_range(2..=bounds.max_n);
        let c = rng.gen_range(1..=bounds.max_c);
        let k = rng.gen_range(1..=bounds.max_rows);
        let rows: Vec<CChain> = (0..k)
            .filter_map(|_| {
                let len = rng.gen_range(1..=bounds.max_len);
                let all = enumerate_chains(n, c, len);
                (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())].clone())
            })
            .collect();
        if !rows.is_empty() {
            return (Tableau::new(rows), n, c);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceFailure {
    pub seed: u64,
    pub input: String,
    pub c: usize,
    pub reason: String,
}

/// Checks one tableau; `Err` carries the first violated invariant.
pub fn check_tableau(t: &Tableau, c: usize, seed: u64) -> std::result::Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left = reduce_tableau(t, c, Strategy::Leftmost, &mut rng).map_err(|e| format!("leftmost: {e}"))?;
    let random = reduce_tableau(t, c, Strategy::Random, &mut rng).map_err(|e| format!("random: {e}"))?;
    let out = &left.tableau;
    if !is_quasi_sorted_tableau(out, c) {
        return Err(format!("output {out} is not quasi-sorted"));
    }
    if out.multiset() != t.multiset() {
        return Err(format!("index multiset changed: {t} -> {out}"));
    }
    let mut before = t.lengths();
    before.sort_unstable();
    let mut after = out.lengths();
    after.sort_unstable();
    if before != after {
        return Err(format!("row lengths changed: {t} -> {out}"));
    }
    if random.tableau != *out {
        return Err(format!("strategies disagree: {out} vs {}", random.tableau));
    }
    let placed = canonical_placement(&t.multiset(), &out.lengths(), c).map_err(|e| format!("placement: {e}"))?;
    if placed != *out {
        return Err(format!("canonical placement {placed} differs from {out}"));
    }
    Ok(left.trace.len().max(random.trace.len()))
}

/// Runs `count` random tableaux per seed; each tableau gets its own derived
/// seed so failures replay individually.
pub fn confluence_harness(seeds: &[u64], count: usize, bounds: &TableauBounds) -> Result<Report> {
    let start = Instant::now();
    let mut rep = Report::new("confluence", json!({"seeds": seeds, "count": count, "bounds": bounds}));
    let cases: Vec<(u64, u64)> = seeds
        .iter()
        .flat_map(|&s| (0..count as u64).map(move |i| (s, s.wrapping_mul(1_000_003).wrapping_add(i))))
        .collect();
    let results: Vec<(u64, Tableau, usize, std::result::Result<usize, String>)> = cases
        .par_iter()
        .map(|&(_, case_seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
            let (t, _, c) = random_tableau(&mut rng, bounds);
            let r = check_tableau(&t, c, case_seed);
            (case_seed, t, c, r)
        })
        .collect();
    let mut failures = Vec::new();
    let mut max_steps = 0;
    for (seed, t, c, r) in results {
        match r {
            Ok(steps) => max_steps = max_steps.max(steps),
            Err(reason) => failures.push(ConfluenceFailure { seed, input: t.to_string(), c, reason }),
        }
    }
    if let Some(f) = failures.first() {
        rep.fail(format!("seed {}: {} (c = {}): {}", f.seed, f.input, f.c, f.reason));
        rep.seed = Some(f.seed);
    }
    rep.detail("tableaux", cases.len());
    rep.detail("failures", failures.len());
    rep.detail("max_steps", max_steps);
    Ok(rep.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harness_is_deterministic() {
        let a = confluence_harness(&[7], 40, &TableauBounds::default()).unwrap();
        let b = confluence_harness(&[7], 40, &TableauBounds::default()).unwrap();
        assert!(a.passed(), "{}", a.summary());
        assert_eq!(a.details, b.details);
    }

    #[test]
    fn single_row_is_fixed() {
        let t = Tableau::new(vec![CChain::new(vec![1, 5, 9], 2).unwrap()]);
        assert_eq!(check_tableau(&t, 2, 0), Ok(0));
    }
}
