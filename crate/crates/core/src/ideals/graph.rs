//! The graph on `[n]` with an edge `{i, j}` whenever `|i - j| > c`.

use std::time::Instant;

use serde_json::json;

use crate::chains::c_decompose_indices;
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::report::Report;

use super::monomial_ideal::MonomialIdeal;

/// Largest vertex count accepted by the exhaustive colouring routines.
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CGraph {
    pub n: usize,
    pub c: usize,
}

impl CGraph {
    pub fn new(n: usize, c: usize) -> Self {
        CGraph { n, c }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) > self.c
    }

    /// Length of the greedy c-chain in `v`; equals both χ and ω of `G_v`.
    pub fn greedy_chain_length(&self, v: &[usize]) -> usize {
        c_decompose_indices(v, self.c).first().map_or(0, |ch| ch.len())
    }

    /// `(χ, ω)` of the induced subgraph on `v` via the chain formula.
    pub fn chromatic_and_clique(&self, v: &[usize]) -> (usize, usize) {
        let k = self.greedy_chain_length(v);
        (k, k)
    }

    /// `(χ, ω)` of the induced subgraph by exhaustive search.
    pub fn brute_chromatic_and_clique(&self, v: &[usize]) -> Result<(usize, usize)> {
        let mut v = v.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.len() > BRUTE_FORCE_LIMIT {
            return Err(Error::Range(format!("{} vertices, limit {BRUTE_FORCE_LIMIT}", v.len())));
        }
        let t = SubgraphTables::build(self, &v);
        let full = (1usize << v.len()) - 1;
        Ok((t.chi[full] as usize, t.omega[full] as usize))
    }

    /// Minimal vertex sets that are not `r`-colourable, as squarefree monomials.
    pub fn edge_secant_generators(&self, r: usize) -> MonomialIdeal {
        let gens = if self.n <= BRUTE_FORCE_LIMIT {
            let vertices: Vec<usize> = (1..=self.n).collect();
            let t = SubgraphTables::build(self, &vertices);
            minimal_sets(self.n, |mask| t.chi[mask] as usize > r)
        } else {
            minimal_sets(self.n, |mask| self.greedy_chain_length(&mask_to_vertices(mask)) > r)
        };
        MonomialIdeal::new(
            self.n,
            gens.into_iter().map(|mask| Monomial::from_indices(self.n, &mask_to_vertices(mask)).unwrap()).collect(),
        )
    }
}

fn mask_to_vertices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Masks `S` with `bad(S)` but `!bad(S \ {v})` for every `v ∈ S`.
fn minimal_sets(n: usize, bad: impl Fn(usize) -> bool) -> Vec<usize> {
    assert!(n < 24, "subset sweep over {n} vertices");
    (0..1usize << n).filter(|&mask| bad(mask) && (0..n).all(|b| mask >> b & 1 == 0 || !bad(mask & !(1 << b)))).collect()
}

/// χ and ω of every induced subgraph of a vertex list, indexed by bitmask.
pub struct SubgraphTables {
    pub vertices: Vec<usize>,
    pub chi: Vec<u8>,
    pub omega: Vec<u8>,
}

impl SubgraphTables {
    pub fn build(g: &CGraph, vertices: &[usize]) -> Self {
        let k = vertices.len();
        assert!(k <= 16, "exhaustive tables over {k} vertices");
        let size = 1usize << k;
        let mut nbr = vec![0usize; k];
        for a in 0..k {
            for b in 0..k {
                if a != b && g.adjacent(vertices[a], vertices[b]) {
                    nbr[a] |= 1 << b;
                }
            }
        }
        let mut independent = vec![false; size];
        independent[0] = true;
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            independent[mask] = independent[rest] && nbr[low] & rest == 0;
        }
        let mut omega = vec![0u8; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            omega[mask] = omega[rest].max(1 + omega[rest & nbr[low]]);
        }
        let mut chi = vec![0u8; size];
        for mask in 1..size {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            // colour classes containing the lowest vertex
            let mut best = u8::MAX;
            let mut sub = rest;
            loop {
                let class = sub | low;
                if independent[class] {
                    best = best.min(1 + chi[mask ^ class]);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            chi[mask] = best;
        }
        SubgraphTables { vertices: vertices.to_vec(), chi, omega }
    }
}

/// χ = ω = greedy chain length on every induced subgraph of `G(n, c)`, and
/// every minimal non-`r`-colourable set has `r + 1` vertices.
pub fn verify_perfect_graph(n: usize, c: usize) -> Result<Report> {
    let start = Instant::now();
    if n == 0 || c == 0 {
        return Err(Error::Range(format!("n = {n}, c = {c} must be positive")));
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Range(format!("n = {n}, limit {BRUTE_FORCE_LIMIT}")));
    }
    let mut rep = Report::new("perfectgraph", json!({"n": n, "c": c}));
    let g = CGraph::new(n, c);
    let vertices: Vec<usize> = (1..=n).collect();
    let t = SubgraphTables::build(&g, &vertices);
    for mask in 1..1usize << n {
        let v = mask_to_vertices(mask);
        let (chi, omega) = (t.chi[mask] as usize, t.omega[mask] as usize);
        let greedy = g.greedy_chain_length(&v);
        if chi != omega || chi != greedy {
            rep.fail(format!("V = {v:?}: χ = {chi}, ω = {omega}, chain = {greedy}"));
            break;
        }
    }
    let m = (n + c) / (c + 1);
    let mut counts = Vec::new();
    for r in 1..=m {
        let gens = g.edge_secant_generators(r);
        if let Some(bad) = gens.generators().iter().find(|x| x.degree() as usize != r + 1) {
            rep.fail(format!("r = {r}: minimal generator {bad} has degree {}", bad.degree()));
        }
        counts.push(gens.len());
    }
    rep.detail("subsets", (1usize << n) - 1);
    rep.detail("secant_generator_counts", counts);
    Ok(rep.finish(start))
}
