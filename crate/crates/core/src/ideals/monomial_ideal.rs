use std::collections::HashSet;
use std::fmt;

use crate::polyring::{monomials_of_degree, Monomial};

/// A monomial ideal stored by its minimal generators, deglex-descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The ideal generated by the monomials of degree `<= max_degree` satisfying
    /// `member`, which must describe an ideal (closed under multiplication).
    pub fn from_predicate(nvars: usize, max_degree: u32, member: impl Fn(&Monomial) -> bool) -> Self {
        let mut gens = Vec::new();
        for d in 0..=max_degree {
            for m in monomials_of_degree(nvars, d) {
                if !member(&m) {
                    continue;
                }
                let minimal = m.support().into_iter().all(|v| {
                    let x = Monomial::var(nvars, v).unwrap();
                    !member(&x.quotient_of(&m).unwrap())
                });
                if minimal {
                    gens.push(m);
                }
            }
        }
        MonomialIdeal::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut set = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                set.insert(a.mul(b));
            }
        }
        MonomialIdeal::new(self.nvars, set.into_iter().collect())
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut set = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                set.insert(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, set.into_iter().collect())
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.gcd(m).quotient_of(g).unwrap()).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// All monomials of degree `d` in the ideal, deglex-descending.
    pub fn graded_piece(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d).into_iter().filter(|m| self.contains(m)).collect()
    }

    /// The ideal generated by the minimal generators of degree `<= d`.
    pub fn truncate(&self, d: u32) -> MonomialIdeal {
        MonomialIdeal { nvars: self.nvars, gens: self.gens.iter().filter(|g| g.degree() <= d).cloned().collect() }
    }

    /// Equality of all graded pieces up to degree `d`.
    pub fn equal_up_to(&self, other: &MonomialIdeal, d: u32) -> bool {
        self.truncate(d) == other.truncate(d)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|m| m.to_string()).collect();
        write!(f, "<{}>", g.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_monomial;

    fn id(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| parse_monomial(g, Some(n)).unwrap()).collect())
    }

    #[test]
    fn minimal_generators() {
        let i = id(4, &["x1*x2", "x1", "x3^2", "x3^2*x4"]);
        assert_eq!(i.to_string(), "<x3^2, x1>");
    }

    #[test]
    fn algebra() {
        let j2 = id(5, &["x1*x4", "x1*x5", "x2*x5"]);
        assert_eq!(j2.intersection(&j2), j2);
        let x25 = parse_monomial("x2*x5", Some(5)).unwrap();
        assert_eq!(id(5, &["x1*x4"]).colon(&x25), id(5, &["x1*x4"]));
        assert_eq!(j2.colon(&parse_monomial("x1", Some(5)).unwrap()), id(5, &["x4", "x5"]));
        let p = id(3, &["x1"]).product(&id(3, &["x2", "x3"]));
        assert_eq!(p, id(3, &["x1*x2", "x1*x3"]));
        assert_eq!(id(2, &["x1", "x2"]).power(2).len(), 3);
        assert_eq!(id(3, &["x1", "x2"]).intersection(&id(3, &["x2", "x3"])), id(3, &["x2", "x1*x3"]));
    }

    #[test]
    fn predicates_and_pieces() {
        let j2 = id(5, &["x1*x4", "x1*x5", "x2*x5"]);
        let rebuilt = MonomialIdeal::from_predicate(5, 4, |m| j2.contains(m));
        assert_eq!(rebuilt, j2);
        assert_eq!(j2.graded_piece(2).len(), 3);
        assert!(j2.graded_piece(1).is_empty());
        assert!(j2.equal_up_to(&j2.sum(&id(5, &["x3^3"])), 2));
        assert!(!j2.equal_up_to(&j2.sum(&id(5, &["x3^3"])), 3));
    }
}
