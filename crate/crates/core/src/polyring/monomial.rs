use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector over `x1..xn`. Position `i` holds the exponent of `x_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
    // support bits of the first 64 variables, used to reject divisibility fast
    mask: u64,
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter().take(64).enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1u64 << i))
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        let mask = support_mask(&exps);
        Monomial { exps, degree, mask }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The variable `x_index` (1-based).
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::Bounds(format!("variable x{index} in a ring of {nvars} variables")));
        }
        let mut exps = vec![0; nvars];
        exps[index - 1] = 1;
        Ok(Monomial::new(exps))
    }

    /// Product of the variables listed (1-based, repetitions allowed).
    pub fn from_indices(nvars: usize, indices: &[usize]) -> Result<Self> {
        let mut exps = vec![0u16; nvars];
        for &i in indices {
            if i == 0 || i > nvars {
                return Err(Error::Bounds(format!("variable x{i} in a ring of {nvars} variables")));
            }
            exps[i - 1] += 1;
        }
        Ok(Monomial::new(exps))
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// The sorted multiset of variable indices (1-based), e.g. `x1^2*x4 -> [1, 1, 4]`.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, e as usize));
        }
        out
    }

    /// Variable indices in the support (1-based).
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree, mask: self.mask | other.mask }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.nvars() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Pad or relocate exponents into a ring of `nvars` variables, starting at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial::new(exps)
    }

    /// Restrict to the variable window `[start, start + len)`.
    pub fn window(&self, start: usize, len: usize) -> Monomial {
        Monomial::new(self.exps[start..start + len].to_vec())
    }

    /// Sum of exponents over the listed variables (1-based).
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v - 1] as u32).sum()
    }
}

/// Lexicographic comparison with `x1 > x2 > ...`: the larger exponent at the
/// first differing position wins.
fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn deglex_unchecked(a: &[u16], da: u32, b: &[u16], db: u32) -> Ordering {
    da.cmp(&db).then_with(|| lex(a, b))
}

/// Degree-lexicographic comparison, `x1 > x2 > ... > xn`.
pub fn deglex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension(format!("comparing monomials in {} and {} variables", a.nvars(), b.nvars())));
    }
    Ok(deglex_unchecked(&a.exps, a.degree, &b.exps, b.degree))
}

/// Term orders used by the library. `Elimination` is the block order where the
/// variables `[0, split)` form a block greater than `[split, n)`, deglex inside
/// each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum TermOrder {
    #[default]
    DegLex,
    Elimination {
        split: usize,
    },
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            TermOrder::DegLex => deglex_unchecked(&a.exps, a.degree, &b.exps, b.degree),
            TermOrder::Elimination { split } => {
                let (ah, at) = a.exps.split_at(split);
                let (bh, bt) = b.exps.split_at(split);
                let dah: u32 = ah.iter().map(|&e| e as u32).sum();
                let dbh: u32 = bh.iter().map(|&e| e as u32).sum();
                deglex_unchecked(ah, dah, bh, dbh)
                    .then_with(|| deglex_unchecked(at, a.degree - dah, bt, b.degree - dbh))
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deglex. Monomials over different variable counts are ordered by count first,
/// which only matters for use as map keys.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars()
            .cmp(&other.nvars())
            .then_with(|| deglex_unchecked(&self.exps, self.degree, &other.exps, other.degree))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of exactly `degree` in `nvars` variables, deglex-descending.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = left as u16;
            out.push(Monomial::new(exps.clone()));
            exps[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e as u16;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, degree, &mut exps, &mut out);
    out
}

/// All monomials of degree at most `max_degree`.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, idx: &[usize]) -> Monomial {
        Monomial::from_indices(n, idx).unwrap()
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(deglex_compare(&m(5, &[1, 4]), &m(5, &[2, 3])).unwrap(), Ordering::Greater);
        let x = m(5, &[2]);
        assert_eq!(deglex_compare(&x, &x).unwrap(), Ordering::Equal);
        assert_eq!(deglex_compare(&m(5, &[3, 3]), &m(5, &[1, 5])).unwrap(), Ordering::Less);
    }

    #[test]
    fn mismatched_variable_counts() {
        assert!(matches!(deglex_compare(&m(3, &[1]), &m(4, &[1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn elimination_order_prefers_first_block() {
        let ord = TermOrder::Elimination { split: 2 };
        // x2 (first block) beats x3^5 (second block)
        assert_eq!(ord.compare(&m(4, &[2]), &m(4, &[3, 3, 3, 3, 3])), Ordering::Greater);
        assert_eq!(ord.compare(&m(4, &[1, 3]), &m(4, &[1, 4])), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n + d - 1, d)
        assert_eq!(monomials_of_degree(8, 6).len(), 1716);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        let v = monomials_of_degree(4, 3);
        assert!(v.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn display() {
        assert_eq!(m(10, &[1, 1, 2, 10]).to_string(), "x1^2*x2*x10");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
