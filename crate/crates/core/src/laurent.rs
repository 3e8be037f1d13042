//! Bivariate Laurent polynomials in `u`, `v` over arbitrary-precision integers.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `u < v`: total degree first, then the exponent of
//! `v`. Iteration order is therefore the canonical print order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HodgeError, Result};

/// The monomial `u^a v^b`, exponents may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: i64,
    pub b: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Monomial { a, b }
    }

    pub fn degree(self) -> i64 {
        self.a + self.b
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.a + other.a, self.b + other.b)
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial::new(self.a - other.a, self.b - other.b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.b.cmp(&other.b))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Substitutions understood by [`LaurentPoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `u -> t, v -> t`; the result is a polynomial in `t`, stored in `u`.
    Diagonal,
    /// `u -> -u^2, v -> -v^2`.
    NegSquare,
    /// `u -> 1/u, v -> 1/v`.
    Invert,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(c, 0, 0)
    }

    /// `c * u^a * v^b`
    pub fn term(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(a, b), c);
        }
        LaurentPoly { terms }
    }

    pub fn u() -> Self {
        LaurentPoly::term(1, 1, 0)
    }

    pub fn v() -> Self {
        LaurentPoly::term(1, 0, 1)
    }

    /// `(uv)^k`
    pub fn uv_pow(k: i64) -> Self {
        LaurentPoly::term(1, k, k)
    }

    /// Builds from `(a, b, c)` triples; repeated monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (a, b, c) in terms {
            p.add_term(Monomial::new(a, b), c.into());
        }
        p
    }

    /// A polynomial in `uv` from its coefficients, lowest power first.
    pub fn in_uv(coeffs: &[i64]) -> Self {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (k as i64, k as i64, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms
            .get(&Monomial::new(a, b))
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn trailing(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Monomial of the single term, if there is exactly one and its coefficient is 1.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(*m),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.a >= 0 && m.b >= 0)
    }

    /// `(min a, max a, min b, max b)` over the support.
    pub fn exponent_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut bx = (first.a, first.a, first.b, first.b);
        for m in it {
            bx.0 = bx.0.min(m.a);
            bx.1 = bx.1.max(m.a);
            bx.2 = bx.2.min(m.b);
            bx.3 = bx.3.max(m.b);
        }
        Some(bx)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_scaled_shift(&mut self, other: &LaurentPoly, c: &BigInt, shift: Monomial) {
        for (m, oc) in &other.terms {
            self.add_term(m.mul(shift), -(oc * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `u^a v^b`.
    pub fn shift(&self, a: i64, b: i64) -> LaurentPoly {
        let s = Monomial::new(a, b);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(s), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `(1 + m)^k` expanded by the binomial theorem, for a single monomial `m`.
    pub fn one_plus_monomial_pow(m: Monomial, k: u32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        let mut binom = BigInt::one();
        for i in 0..=k as i64 {
            p.add_term(Monomial::new(m.a * i, m.b * i), binom.clone());
            binom = binom * BigInt::from(k as i64 - i) / BigInt::from(i + 1);
        }
        p
    }

    pub fn substitute(&self, mode: Substitution) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            match mode {
                Substitution::Diagonal => out.add_term(Monomial::new(m.a + m.b, 0), c.clone()),
                Substitution::NegSquare => {
                    let sign = if (m.a + m.b).rem_euclid(2) == 0 {
                        c.clone()
                    } else {
                        -c
                    };
                    out.add_term(Monomial::new(2 * m.a, 2 * m.b), sign)
                }
                Substitution::Invert => out.add_term(Monomial::new(-m.a, -m.b), c.clone()),
            }
        }
        out
    }

    /// Exact value at `u = u0, v = v0`.
    pub fn eval(&self, u0: &BigRational, v0: &BigRational) -> Result<BigRational> {
        let needs_inverse = self.terms.keys().any(|m| m.a < 0 || m.b < 0);
        if needs_inverse && (u0.is_zero() || v0.is_zero()) {
            return Err(HodgeError::DivisionByZero);
        }
        let pow = |x: &BigRational, e: i64| -> BigRational {
            if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            }
        };
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * pow(u0, m.a) * pow(v0, m.b);
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at `u = v = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Divides out the largest monomial dividing every term, returning it with the rest.
    pub fn monomial_content(&self) -> (Monomial, LaurentPoly) {
        match self.exponent_box() {
            None => (Monomial::ONE, self.clone()),
            Some((amin, _, bmin, _)) => (Monomial::new(amin, bmin), self.shift(-amin, -bmin)),
        }
    }

    /// Exact quotient `self / den`, by long division under the graded order.
    ///
    /// Any quotient term must lie in the exponent box forced by the Newton
    /// polytopes of `self` and `den`; leaving it means the division is inexact.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (lead_m, lead_c) = den.leading().ok_or(HodgeError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some(m) = den.as_monomial() {
            return Ok(self.shift(-m.a, -m.b));
        }
        let (na0, na1, nb0, nb1) = self.exponent_box().unwrap();
        let (da0, da1, db0, db1) = den.exponent_box().unwrap();
        let (qa0, qa1, qb0, qb1) = (na0 - da0, na1 - da1, nb0 - db0, nb1 - db1);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lead_m);
            let inside = qa0 <= qm.a && qm.a <= qa1 && qb0 <= qm.b && qm.b <= qb1;
            if !inside || !(rc % lead_c).is_zero() {
                return Err(HodgeError::NonDivisible { remainder: rem });
            }
            let qc = rc / lead_c;
            rem.sub_scaled_shift(den, &qc, qm);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Divides every coefficient by `d`, failing if any is not a multiple.
    pub fn div_integer(&self, d: &BigInt) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if !(c % d).is_zero() {
                return Err(HodgeError::NonIntegral);
            }
            out.terms.insert(*m, c / d);
        }
        Ok(out)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `e(u,v) = e(v,u)`
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&Monomial::new(m.b, m.a)) == Some(c))
    }

    /// `a_{p,q} = a_{D-p,D-q}`, i.e. `e(u,v) = (uv)^D e(1/u,1/v)`.
    pub fn is_dual(&self, dim: i64) -> bool {
        self.substitute(Substitution::Invert).shift(dim, dim) == *self
    }

    /// Coefficients as `[a, b, "c"]` triples in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| serde_json::json!([m.a, m.b, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LaurentPoly> {
        let bad = |what: &str| HodgeError::Parse(format!("json polynomial: {what}"));
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = LaurentPoly::zero();
        for t in arr {
            let t = t.as_array().ok_or_else(|| bad("expected [a, b, \"c\"]"))?;
            if t.len() != 3 {
                return Err(bad("expected [a, b, \"c\"]"));
            }
            let a = t[0].as_i64().ok_or_else(|| bad("exponent a"))?;
            let b = t[1].as_i64().ok_or_else(|| bad("exponent b"))?;
            let c: BigInt = match &t[2] {
                serde_json::Value::String(s) => s.parse().map_err(|_| bad("coefficient"))?,
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficient"))?,
                _ => return Err(bad("coefficient")),
            };
            p.add_term(Monomial::new(a, b), c);
        }
        Ok(p)
    }

    /// LaTeX rendering in canonical order, e.g. `1 + uv + u^{2}v^{2}`.
    pub fn to_latex(&self) -> String {
        self.render(
            |m| {
                let mut s = String::new();
                for (var, e) in [("u", m.a), ("v", m.b)] {
                    match e {
                        0 => {}
                        1 => s.push_str(var),
                        _ => s.push_str(&format!("{var}^{{{e}}}")),
                    }
                }
                s
            },
            "",
        )
    }

    fn render(&self, monomial: impl Fn(Monomial) -> String, times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial(*m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&abs.to_string());
                out.push_str(times);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |m| {
                let mut parts = Vec::new();
                for (var, e) in [("u", m.a), ("v", m.b)] {
                    match e {
                        0 => {}
                        1 => parts.push(var.to_string()),
                        _ => parts.push(format!("{var}^{e}")),
                    }
                }
                parts.join("*")
            },
            "*",
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = HodgeError;

    /// Parses sums of `c*u^a*v^b` terms; `c`, `u`, `v` and the exponents are optional.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: String| HodgeError::Parse(msg);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        // Split into signed terms, keeping a '-' that follows '^' as part of an exponent.
        let bytes = compact.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let first = start;
        for i in first..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^' {
                terms.push((negative, &compact[start..i]));
                negative = bytes[i] == b'-';
                start = i + 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut p = LaurentPoly::zero();
        for (neg, body) in terms {
            if body.is_empty() {
                return Err(err(format!("dangling sign in {s:?}")));
            }
            let mut coeff = BigInt::one();
            let (mut a, mut b) = (0i64, 0i64);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((base, e)) => {
                        let e: i64 = e
                            .parse()
                            .map_err(|_| err(format!("bad exponent in {factor:?}")))?;
                        (base, e)
                    }
                    None => (factor, 1),
                };
                match base {
                    "u" => a += exp,
                    "v" => b += exp,
                    digits => {
                        if factor.contains('^') {
                            return Err(err(format!("exponent on a constant in {factor:?}")));
                        }
                        let c: BigInt = digits
                            .parse()
                            .map_err(|_| err(format!("unexpected factor {factor:?}")))?;
                        coeff *= c;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(Monomial::new(a, b), coeff);
        }
        Ok(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

const DENSE_LIMIT: i64 = 1 << 22;

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let (m, c) = single.terms.iter().next().unwrap();
            let mut out = other.shift(m.a, m.b);
            if !c.is_one() {
                out.terms.values_mut().for_each(|x| *x *= c);
            }
            return out;
        }
        let (pa0, pa1, pb0, pb1) = self.exponent_box().unwrap();
        let (qa0, qa1, qb0, qb1) = rhs.exponent_box().unwrap();
        let (a0, b0) = (pa0 + qa0, pb0 + qb0);
        let width = pa1 + qa1 - a0 + 1;
        let height = pb1 + qb1 - b0 + 1;
        if width * height > DENSE_LIMIT {
            let mut out = LaurentPoly::zero();
            for (m1, c1) in &self.terms {
                for (m2, c2) in &rhs.terms {
                    out.add_term(m1.mul(*m2), c1 * c2);
                }
            }
            return out;
        }
        let mut grid = vec![BigInt::zero(); (width * height) as usize];
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let idx = (m1.b + m2.b - b0) * width + (m1.a + m2.a - a0);
                grid[idx as usize] += c1 * c2;
            }
        }
        let mut terms = BTreeMap::new();
        for (idx, c) in grid.into_iter().enumerate() {
            if !c.is_zero() {
                let idx = idx as i64;
                terms.insert(Monomial::new(idx % width + a0, idx / width + b0), c);
            }
        }
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let q = p("3 - u*v^2 + 7*u^-1");
        assert_eq!(&LaurentPoly::one() * &q, q);
        assert_eq!(p("1 - u*v") * p("1 + u*v"), p("1 - u^2*v^2"));
        assert_eq!(p("1 + u") * p("1 + v"), p("1 + u + v + u*v"));
    }

    #[test]
    fn powers() {
        assert_eq!(p("1 + u").pow(0), LaurentPoly::one());
        assert_eq!(p("1 + u").pow(2), p("1 + 2*u + u^2"));
        assert_eq!(LaurentPoly::uv_pow(-1).pow(2), p("u^-2*v^-2"));
        assert_eq!(
            LaurentPoly::one_plus_monomial_pow(Monomial::new(2, 1), 5),
            p("1 + u^2*v").pow(5)
        );
    }

    #[test]
    fn substitutions() {
        let q = p("1 + u") * p("1 + v");
        assert_eq!(q.substitute(Substitution::Diagonal), p("1 + 2*u + u^2"));
        assert_eq!(p("u*v").substitute(Substitution::NegSquare), p("u^2*v^2"));
        assert_eq!(p("u").substitute(Substitution::NegSquare), p("-u^2"));
        assert_eq!(
            p("u^2*v + 3").substitute(Substitution::Invert),
            p("u^-2*v^-1 + 3")
        );
        let one = BigRational::one();
        assert_eq!(
            p("1 + 2*u + u*v").eval(&one, &one).unwrap(),
            BigRational::from_integer(4.into())
        );
        let zero = BigRational::zero();
        assert!(matches!(
            p("u^-1").eval(&zero, &one),
            Err(HodgeError::DivisionByZero)
        ));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            p("1 - u^3*v^3").exact_div(&p("1 - u*v")).unwrap(),
            p("1 + u*v + u^2*v^2")
        );
        assert_eq!(
            p("1 - u^2*v^2").exact_div(&p("1 + u*v")).unwrap(),
            p("1 - u*v")
        );
        match p("1 + u").exact_div(&p("1 - u*v")) {
            Err(HodgeError::NonDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected NonDivisible, got {other:?}"),
        }
        // Laurent numerators divide too.
        let num = p("u^-2*v^-2 - u*v");
        assert_eq!(num.exact_div(&p("1 - u*v")).unwrap() * p("1 - u*v"), num);
    }

    #[test]
    fn inexact_integer_division_is_rejected() {
        assert!(p("1 + u").exact_div(&p("2 + 2*u")).is_err());
    }

    #[test]
    fn printing_is_canonical() {
        let q = p("5*u*v + 2*v + 1 + 2*u");
        assert_eq!(q.to_string(), "1 + 2*u + 2*v + 5*u*v");
        assert_eq!(p("u^2*v^2 + 1 + u*v").to_string(), "1 + u*v + u^2*v^2");
        assert_eq!(p("-u - 1").to_string(), "-1 - u");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("u^-2*v^-1").to_string(), "u^-2*v^-1");
        assert_eq!(p("1 + u*v + u^2*v^2").to_latex(), "1 + uv + u^{2}v^{2}");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1 +", "w", "2^3", "u^x"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_triples() {
        let q = p("1 - 3*u^-1*v + 12345678901234567890123*u^4*v^4");
        let j = q.to_json();
        assert_eq!(j[0], serde_json::json!([0, 0, "1"]));
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), q);
    }

    #[test]
    fn duality_and_symmetry() {
        let p1 = p("1 + u*v");
        assert!(p1.is_dual(1));
        assert!(!p1.is_dual(2));
        assert!(p("u + v").is_symmetric());
        assert!(!p("u + 2*v").is_symmetric());
    }

    #[test]
    fn content() {
        let (m, rest) = p("u^2*v + u^3*v^4").monomial_content();
        assert_eq!(m, Monomial::new(2, 1));
        assert_eq!(rest, p("1 + u*v^3"));
    }
}
