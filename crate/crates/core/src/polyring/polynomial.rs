use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, TermOrder};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

/// Sparse polynomial over the rationals. Terms are kept strictly decreasing in
/// `order` with nonzero coefficients, so `terms[0]` is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: TermOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self::zero_in(nvars, TermOrder::DegLex)
    }

    pub fn zero_in(nvars: usize, order: TermOrder) -> Self {
        Polynomial { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::from_terms(nvars, TermOrder::DegLex, vec![(c, Monomial::one(nvars))])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    /// The variable `x_index` (1-based).
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        Ok(Self::from_monomial(Monomial::var(nvars, index)?))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial { nvars, order: TermOrder::DegLex, terms: vec![Term { coeff: Coeff::one(), monomial: m }] }
    }

    /// Builds the canonical form: sorted, like terms merged, zeros dropped.
    pub fn from_terms(nvars: usize, order: TermOrder, raw: Vec<(Coeff, Monomial)>) -> Self {
        let mut raw = raw;
        raw.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            debug_assert_eq!(m.nvars(), nvars);
            match terms.last_mut() {
                Some(last) if last.monomial == m => last.coeff += c,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(Term { coeff: c, monomial: m });
                }
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::EmptyPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.monomial)
    }

    pub fn leading_coeff(&self) -> Result<&Coeff> {
        Ok(&self.leading_term()?.coeff)
    }

    /// The leading term and the remaining tail.
    pub fn split_lead(&self) -> Option<(Term, Polynomial)> {
        let (first, rest) = self.terms.split_first()?;
        let tail = Polynomial { nvars: self.nvars, order: self.order, terms: rest.to_vec() };
        Some((first.clone(), tail))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|u| u.monomial.degree() == d)
            }
        }
    }

    /// Re-sorts the terms under another term order.
    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial { nvars: self.nvars, order, terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero_in(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.clone() }).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.recip()),
        }
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero_in(self.nvars, self.order);
        }
        // multiplication by a monomial preserves the order of the terms
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.mul(m) }).collect(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials over {} and {} variables", self.nvars, other.nvars);
        debug_assert_eq!(self.order, other.order);
    }

    /// `self - c * m * g` by merging sorted term lists.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.check_compatible(g);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Term| Term { coeff: -(&t.coeff * c), monomial: t.monomial.mul(m) };
        let mut pending: Option<Term> = g.terms.first().map(shifted);
        while i < self.terms.len() || pending.is_some() {
            match (self.terms.get(i), pending.as_ref()) {
                (Some(a), Some(b)) => match order.compare(&a.monomial, &b.monomial) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = g.terms.get(j).map(shifted);
                    }
                    Ordering::Equal => {
                        let s = &a.coeff + &b.coeff;
                        if !s.is_zero() {
                            out.push(Term { coeff: s, monomial: a.monomial.clone() });
                        }
                        i += 1;
                        j += 1;
                        pending = g.terms.get(j).map(shifted);
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = g.terms.get(j).map(shifted);
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial { nvars: self.nvars, order, terms: out }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars).with_order(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(d);
        let lead = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.terms.first() {
            let Some(q) = lead.monomial.quotient_of(&t.monomial) else {
                return Err(Error::Precondition(format!("{d} does not divide {self}")));
            };
            let c = &t.coeff / &lead.coeff;
            rem = rem.sub_scaled(&c, &q, d);
            quot.push((c, q));
        }
        Ok(Polynomial::from_terms(self.nvars, self.order, quot))
    }

    /// Places the polynomial in a ring of `nvars` variables, shifting variable
    /// `x_i` to `x_{i+offset}`.
    pub fn embed(&self, nvars: usize, offset: usize, order: TermOrder) -> Polynomial {
        let raw = self.terms.iter().map(|t| (t.coeff.clone(), t.monomial.embed(nvars, offset))).collect();
        Polynomial::from_terms(nvars, order, raw)
    }

    /// Keeps only the variables in `[start, start + len)`; every term must be
    /// supported there.
    pub fn restrict(&self, start: usize, len: usize, order: TermOrder) -> Result<Polynomial> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let e = t.monomial.exponents();
            if e[..start].iter().chain(&e[start + len..]).any(|&x| x > 0) {
                return Err(Error::Precondition(format!("term {} uses variables outside the window", t.monomial)));
            }
            raw.push((t.coeff.clone(), t.monomial.window(start, len)));
        }
        Ok(Polynomial::from_terms(len, order, raw))
    }

    /// Clears denominators and content so the leading coefficient is a
    /// positive integer with coprime coefficients.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for t in &self.terms {
            lcm = lcm.lcm(t.coeff.denom());
        }
        let ints: Vec<BigInt> =
            self.terms.iter().map(|t| (&t.coeff * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for i in &ints {
            g = g.gcd(i);
        }
        if self.terms[0].coeff.is_negative() {
            g = -g;
        }
        let scale = BigRational::new(lcm, g);
        self.scale(&scale)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.sub_scaled(&coeff(-1), &Monomial::one(self.nvars), rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_scaled(&Coeff::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&coeff(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                raw.push((&a.coeff * &b.coeff, a.monomial.mul(&b.monomial)));
            }
        }
        Polynomial::from_terms(self.nvars, self.order, raw)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

fn write_coeff_and_monomial(f: &mut fmt::Formatter<'_>, c: &Coeff, m: &Monomial) -> fmt::Result {
    if m.is_one() {
        return write!(f, "{c}");
    }
    if !c.is_one() {
        write!(f, "{c}*")?;
    }
    write!(f, "{m}")
}

/// Golden-file format: `x1*x4 - x2*x3`, `-3*x2*x5^2 + 1/2*x1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_coeff_and_monomial(f, &abs, &t.monomial)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a).map_err(|_| bad())?;
            let b = BigInt::from_str(b).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Parses one product such as `3*x2*x5^2`; returns the coefficient and the
/// variable multiset.
fn parse_product(s: &str) -> Result<(Coeff, Vec<usize>)> {
    let mut c = Coeff::one();
    let mut vars = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{s}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            let exp: usize = exp.parse().map_err(|_| Error::Parse(format!("bad exponent `{factor}`")))?;
            if idx == 0 {
                return Err(Error::Parse("variables are numbered from x1".into()));
            }
            vars.extend(std::iter::repeat_n(idx, exp));
        } else {
            c *= parse_rational(factor)?;
        }
    }
    Ok((c, vars))
}

/// Parses the textual format. Without an explicit `nvars` the ring size is the
/// largest variable index that occurs.
pub fn parse_polynomial(text: &str, nvars: Option<usize>) -> Result<Polynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(current.ends_with('^')) {
            if i != 0 {
                if current.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{text}`")));
                }
                pieces.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{text}`")));
    }
    pieces.push((negative, current));
    let mut parsed = Vec::with_capacity(pieces.len());
    let mut max_var = 0;
    for (neg, body) in pieces {
        let (c, vars) = parse_product(&body)?;
        max_var = max_var.max(vars.iter().copied().max().unwrap_or(0));
        parsed.push((if neg { -c } else { c }, vars));
    }
    let n = match nvars {
        Some(n) if n < max_var => return Err(Error::Bounds(format!("x{max_var} in a ring of {n} variables"))),
        Some(n) => n,
        None => max_var,
    };
    let raw = parsed.into_iter().map(|(c, v)| Ok((c, Monomial::from_indices(n, &v)?))).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_terms(n, TermOrder::DegLex, raw))
}

/// Parses a single monomial such as `x1^2*x2*x4`.
pub fn parse_monomial(text: &str, nvars: Option<usize>) -> Result<Monomial> {
    let p = parse_polynomial(text, nvars)?;
    match p.terms() {
        [t] if t.coeff.is_one() => Ok(t.monomial.clone()),
        _ => Err(Error::Parse(format!("`{text}` is not a monomial"))),
    }
}
