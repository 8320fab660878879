//! Instances of the verification checks, their desk-scale envelopes, and a
//! parallel runner that merges reports by instance key.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use hankel_core::chains::shapes_up_to;
use hankel_core::groebner::{
    verify_minors_gb, verify_primary_decomposition, verify_secant, verify_symbolic_power, Budget,
};
use hankel_core::hankel::HankelConfig;
use hankel_core::ideals::{verify_linear_quotients, verify_perfect_graph};
use hankel_core::report::{Report, Verdict};
use hankel_core::straighten::{confluence_harness, verify_standard_monomials, TableauBounds};
use hankel_core::Error;
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gb,
    Sympow,
    Primdec,
    Secant,
    Linquot,
    Rees,
    Confluence,
    Perfectgraph,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Gb => "gb",
            Check::Sympow => "sympow",
            Check::Primdec => "primdec",
            Check::Secant => "secant",
            Check::Linquot => "linquot",
            Check::Rees => "rees",
            Check::Confluence => "confluence",
            Check::Perfectgraph => "perfectgraph",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// n ≤ 9, c ≤ 3, Στ ≤ 6, narrowed per check to what finishes on a desk.
    Desk,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Gb { n: usize, c: usize, t: usize },
    Sympow { n: usize, c: usize, t: usize, s: usize, bound: u32 },
    Primdec { n: usize, c: usize, tau: Vec<usize>, bound: u32 },
    Secant { n: usize, c: usize, r: usize },
    Linquot { n: usize, c: usize, tau: Vec<usize> },
    Rees { n: usize, c: usize, tau: Vec<usize> },
    Confluence { seeds: Vec<u64>, count: usize },
    PerfectGraph { n: usize, c: usize },
}

/// Parameters as given on the command line; `None` means sweep.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub c: Option<usize>,
    pub t: Option<usize>,
    pub tau: Option<Vec<usize>>,
    pub s: Option<usize>,
    pub r: Option<usize>,
    pub bound: Option<u32>,
    pub seeds: Option<u64>,
    pub seed: u64,
    pub preset: Option<Preset>,
}

fn m_of(n: usize, c: usize) -> usize {
    (n + c) / (c + 1)
}

fn range_or(given: Option<usize>, lo: usize, hi: usize) -> Vec<usize> {
    match given {
        Some(v) => vec![v],
        None => (lo..=hi).collect(),
    }
}

impl Params {
    /// `(n, c)` pairs: explicit values, or the preset envelope.
    fn grid(&self, check: Check, max_n: usize, max_c: usize) -> Result<Vec<(usize, usize)>, String> {
        if self.preset.is_none() && (self.n.is_none() || self.c.is_none()) {
            return Err(format!("verify {} needs -n and -c, or --preset desk", check.name()));
        }
        let ns = range_or(self.n, 1, max_n);
        let cs = range_or(self.c, 1, max_c);
        Ok(ns.iter().flat_map(|&n| cs.iter().map(move |&c| (n, c))).collect())
    }

    fn shapes(&self, m: usize, fixed: &[&[usize]]) -> Vec<Vec<usize>> {
        match &self.tau {
            Some(tau) => vec![tau.clone()],
            None if fixed.is_empty() => shapes_up_to(6, m),
            None => fixed.iter().filter(|t| t[0] <= m).map(|t| t.to_vec()).collect(),
        }
    }
}

/// Expands the parameters into instances. Explicit values that are out of
/// range are kept so the verifier rejects them with its own message.
pub fn instances(check: Check, p: &Params) -> Result<Vec<Instance>, String> {
    let mut out = Vec::new();
    match check {
        Check::Gb => {
            for (n, c) in p.grid(check, 9, 3)? {
                let m = m_of(n, c);
                out.extend(range_or(p.t, 2, m).into_iter().map(|t| Instance::Gb { n, c, t }));
            }
        }
        Check::Sympow => {
            for (n, c) in p.grid(check, 8, 2)? {
                let m = m_of(n, c);
                for t in range_or(p.t, 2, m) {
                    for s in range_or(p.s, 1, 3) {
                        let bound = p.bound.unwrap_or((s * t + 2) as u32);
                        out.push(Instance::Sympow { n, c, t, s, bound });
                    }
                }
            }
        }
        Check::Primdec => {
            for (n, c) in p.grid(check, 8, 2)? {
                for tau in p.shapes(m_of(n, c), &[]) {
                    let bound = p.bound.unwrap_or(tau.iter().sum::<usize>() as u32 + 2);
                    out.push(Instance::Primdec { n, c, tau, bound });
                }
            }
        }
        Check::Secant => {
            for (n, c) in p.grid(check, 7, 2)? {
                let m = m_of(n, c);
                // r = 3 at n = 7, c = 1 already runs past ten minutes
                match p.r {
                    Some(r) => out.push(Instance::Secant { n, c, r }),
                    None if p.preset.is_some() && m < 3 => {}
                    None => out.push(Instance::Secant { n, c, r: 2 }),
                }
            }
        }
        Check::Linquot => {
            for (n, c) in p.grid(check, 8, 2)? {
                out.extend(p.shapes(m_of(n, c), &[]).into_iter().map(|tau| Instance::Linquot { n, c, tau }));
            }
        }
        Check::Rees => {
            for (n, c) in p.grid(check, 9, 2)? {
                let fixed: [&[usize]; 4] = [&[2], &[3], &[2, 2], &[3, 2]];
                out.extend(p.shapes(m_of(n, c), &fixed).into_iter().map(|tau| Instance::Rees { n, c, tau }));
            }
        }
        Check::Confluence => {
            let k = p.seeds.unwrap_or(500);
            // each case derives its own seed from the base seed, and reports it on failure
            out.push(Instance::Confluence { seeds: vec![p.seed], count: k as usize });
        }
        Check::Perfectgraph => {
            for (n, c) in p.grid(check, 12, 3)? {
                out.push(Instance::PerfectGraph { n, c });
            }
        }
    }
    Ok(out)
}

impl Instance {
    pub fn check(&self) -> Check {
        match self {
            Instance::Gb { .. } => Check::Gb,
            Instance::Sympow { .. } => Check::Sympow,
            Instance::Primdec { .. } => Check::Primdec,
            Instance::Secant { .. } => Check::Secant,
            Instance::Linquot { .. } => Check::Linquot,
            Instance::Rees { .. } => Check::Rees,
            Instance::Confluence { .. } => Check::Confluence,
            Instance::PerfectGraph { .. } => Check::Perfectgraph,
        }
    }

    /// The instance object as the verifier would record it.
    fn describe(&self) -> serde_json::Value {
        match self {
            Instance::Gb { n, c, t } => json!({"n": n, "c": c, "t": t}),
            Instance::Sympow { n, c, t, s, bound } => json!({"n": n, "c": c, "t": t, "s": s, "bound": bound}),
            Instance::Primdec { n, c, tau, bound } => json!({"n": n, "c": c, "tau": tau, "bound": bound}),
            Instance::Secant { n, c, r } => json!({"n": n, "c": c, "r": r}),
            Instance::Linquot { n, c, tau } | Instance::Rees { n, c, tau } => json!({"n": n, "c": c, "tau": tau}),
            Instance::Confluence { seeds, count } => json!({"seeds": seeds, "count": count}),
            Instance::PerfectGraph { n, c } => json!({"n": n, "c": c}),
        }
    }

    pub fn run(&self, budget: &Budget) -> hankel_core::Result<Report> {
        let cfg = |n: usize, c: usize| HankelConfig::new(n, c);
        match self {
            Instance::Gb { n, c, t } => verify_minors_gb(&cfg(*n, *c)?, *t),
            Instance::Sympow { n, c, t, s, bound } => verify_symbolic_power(&cfg(*n, *c)?, *t, *s, *bound, budget),
            Instance::Primdec { n, c, tau, bound } => verify_primary_decomposition(&cfg(*n, *c)?, tau, *bound, budget),
            Instance::Secant { n, c, r } => verify_secant(&cfg(*n, *c)?, *r, budget),
            Instance::Linquot { n, c, tau } => verify_linear_quotients(*n, *c, tau),
            Instance::Rees { n, c, tau } => verify_standard_monomials(*n, *c, tau),
            Instance::Confluence { seeds, count } => confluence_harness(seeds, *count, &TableauBounds::default()),
            Instance::PerfectGraph { n, c } => verify_perfect_graph(*n, *c),
        }
    }

    fn budget_report(&self, why: String) -> Report {
        let mut rep = Report::new(self.check().name(), self.describe());
        rep.verdict = Verdict::Budget;
        rep.detail("budget", why);
        rep
    }
}

/// Instances in a sweep are independent; a usage error in any of them aborts
/// the whole run, budget exhaustion only marks that instance.
pub fn run_all(instances: &[Instance], wall: Duration) -> hankel_core::Result<Vec<Report>> {
    let deadline = Instant::now() + wall;
    let budget = Budget { wall, ..Budget::default() };
    let results: Vec<hankel_core::Result<Report>> = instances
        .par_iter()
        .map(|inst| {
            let now = Instant::now();
            if now >= deadline {
                return Ok(inst.budget_report(format!("not started: sweep budget of {}s spent", wall.as_secs())));
            }
            let local = Budget { wall: deadline - now, ..budget.clone() };
            match inst.run(&local) {
                Err(Error::Budget(log)) => Ok(inst.budget_report(log.to_string()).finish(now)),
                other => other,
            }
        })
        .collect();
    let mut reports = results.into_iter().collect::<hankel_core::Result<Vec<_>>>()?;
    reports.sort_by_cached_key(Report::instance_key);
    Ok(reports)
}

pub fn overall(reports: &[Report]) -> Verdict {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if reports.iter().any(|r| r.verdict == Verdict::Budget) {
        Verdict::Budget
    } else {
        Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_instance() {
        let p = Params { n: Some(7), c: Some(2), t: Some(3), ..Params::default() };
        assert_eq!(instances(Check::Gb, &p).unwrap(), vec![Instance::Gb { n: 7, c: 2, t: 3 }]);
    }

    #[test]
    fn sweeps_fill_missing_parameters() {
        let p = Params { n: Some(7), c: Some(2), ..Params::default() };
        assert_eq!(instances(Check::Gb, &p).unwrap().len(), 2);
        assert_eq!(instances(Check::Secant, &p).unwrap(), vec![Instance::Secant { n: 7, c: 2, r: 2 }]);
        // m = 3 here, so (3, 2) and (2, 2) and (3) and (2) all fit
        assert_eq!(instances(Check::Rees, &p).unwrap().len(), 4);
        assert!(instances(Check::Gb, &Params::default()).is_err());
    }

    #[test]
    fn desk_preset_envelopes() {
        let p = Params { preset: Some(Preset::Desk), ..Params::default() };
        let gb = instances(Check::Gb, &p).unwrap();
        assert!(gb.iter().all(|i| matches!(i, Instance::Gb { n, c, t } if *n <= 9 && *c <= 3 && *t >= 2)));
        assert!(gb.contains(&Instance::Gb { n: 9, c: 1, t: 5 }));
        let lq = instances(Check::Linquot, &p).unwrap();
        assert!(lq.contains(&Instance::Linquot { n: 8, c: 1, tau: vec![1, 1, 1, 1, 1, 1] }));
    }

    #[test]
    fn confluence_seeds() {
        let p = Params { seeds: Some(3), seed: 10, ..Params::default() };
        assert_eq!(instances(Check::Confluence, &p).unwrap(), vec![Instance::Confluence { seeds: vec![10], count: 3 }]);
    }

    #[test]
    fn merge_is_sorted_and_verdict_aggregates() {
        let inst = vec![Instance::Gb { n: 6, c: 1, t: 3 }, Instance::Gb { n: 5, c: 1, t: 2 }];
        let reports = run_all(&inst, Duration::from_secs(60)).unwrap();
        assert!(reports[0].instance_key() < reports[1].instance_key());
        assert_eq!(overall(&reports), Verdict::Pass);
        let late = inst[0].budget_report("spent".into());
        assert_eq!(overall(&[reports[0].clone(), late]), Verdict::Budget);
    }
}
