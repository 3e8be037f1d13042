//! Truncated power series in an auxiliary variable `x` with [`FractionUV`] coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{HodgeError, Result};
use crate::fraction::FractionUV;
use crate::laurent::LaurentPoly;

/// `Σ_{k=0}^{order} c_k x^k`, exact up to and including `x^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<FractionUV>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![FractionUV::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = XSeries::zero(order);
        s.coeffs[0] = FractionUV::one();
        s
    }

    /// The polynomial `Σ c_k x^k`, truncated at `order`.
    pub fn from_polys(order: usize, coeffs: impl IntoIterator<Item = LaurentPoly>) -> Self {
        let mut s = XSeries::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = FractionUV::from_poly(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `1 / (1 - m x)`
    pub fn geometric(m: &LaurentPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = LaurentPoly::one();
        for _ in 0..=order {
            coeffs.push(FractionUV::from_poly(power.clone()));
            power = &power * m;
        }
        XSeries { coeffs }
    }

    /// `(1 + u x)^g (1 + v x)^g`, by binomial convolution.
    pub fn binomial_numerator(g: u32, order: usize) -> Self {
        let top = order.min(2 * g as usize);
        let binoms: Vec<BigInt> = (0..=g)
            .map(|i| binomial(BigInt::from(g), BigInt::from(i)))
            .collect();
        let coeffs = (0..=top).map(|j| {
            let lo = j.saturating_sub(g as usize);
            let hi = j.min(g as usize);
            LaurentPoly::from_terms(
                (lo..=hi).map(|i| (i as i64, (j - i) as i64, &binoms[i] * &binoms[j - i])),
            )
        });
        XSeries::from_polys(order, coeffs)
    }

    /// `(1 + u x)^g (1 + v x)^g / ((1 - x)(1 - uv x))`; its `x^k` coefficient is `e(Sym^k X)`.
    pub fn sym_generating(g: u32, order: usize) -> Self {
        XSeries::binomial_numerator(g, order)
            .div_one_minus(&LaurentPoly::one())
            .div_one_minus(&LaurentPoly::uv_pow(1))
    }

    /// Multiplies by `1 / (1 - m x)` using `b_k = a_k + m b_{k-1}`.
    pub fn div_one_minus(&self, m: &LaurentPoly) -> Self {
        let mut coeffs: Vec<FractionUV> = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            let next = if k == 0 {
                a.clone()
            } else {
                a + &coeffs[k - 1].mul_poly(m)
            };
            coeffs.push(next);
        }
        XSeries { coeffs }
    }

    /// Multiplies by `x^s`, dropping terms beyond the order.
    pub fn shift(&self, s: usize) -> Self {
        let mut out = XSeries::zero(self.order());
        for k in s..=self.order() {
            out.coeffs[k] = self.coeffs[k - s].clone();
        }
        out
    }

    /// Multiplies by a polynomial in `x` with Laurent coefficients.
    pub fn mul_x_poly(&self, p: &[LaurentPoly]) -> Self {
        self.mul(&XSeries::from_polys(self.order(), p.iter().cloned()))
    }

    /// Truncated product; the result has the smaller of the two orders.
    pub fn mul(&self, other: &XSeries) -> Self {
        let order = self.order().min(other.order());
        let mut out = XSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    pub fn add(&self, other: &XSeries) -> Self {
        let order = self.order().min(other.order());
        XSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &XSeries) -> Self {
        let order = self.order().min(other.order());
        XSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: &FractionUV) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn coeff(&self, k: i64) -> Result<FractionUV> {
        if k < 0 {
            return Err(HodgeError::InvalidInput(format!("negative x-exponent {k}")));
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .ok_or(HodgeError::OrderTooLow {
                k,
                order: self.order(),
            })
    }

    /// The `x^k` coefficient as a Laurent polynomial.
    pub fn coeff_poly(&self, k: i64) -> Result<LaurentPoly> {
        self.coeff(k)?.into_poly()
    }
}

/// The `x^k` coefficient of `A(x) · N(x) / Π (1 - m_i x)`, where `A(x)` is
/// [`XSeries::sym_generating`], `N(x)` has coefficients `numerator` (empty means 1)
/// and `m_i` runs over `poles`. Zero when `k < 0`.
pub fn sym_coeff(
    g: u32,
    k: i64,
    poles: &[LaurentPoly],
    numerator: &[LaurentPoly],
) -> Result<LaurentPoly> {
    if k < 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut s = XSeries::sym_generating(g, k as usize);
    for m in poles {
        s = s.div_one_minus(m);
    }
    if !numerator.is_empty() {
        s = s.mul_x_poly(numerator);
    }
    s.coeff_poly(k)
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "[{c}]*x^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn jacobian_factor(a: &LaurentPoly, g: u32) -> LaurentPoly {
    let au = a + &LaurentPoly::u();
    let av = a + &LaurentPoly::v();
    (&au * &av).pow(g)
}

/// `Σ_i f(a_i) / Π_{j≠i} (a_i - a_j)` with `f(z) = (z+u)^g (z+v)^g`.
fn divided_difference(g: u32, points: &[&LaurentPoly]) -> Result<FractionUV> {
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a == b {
                return Err(HodgeError::DegeneratePoles);
            }
        }
    }
    let mut total = FractionUV::zero();
    for (i, a) in points.iter().enumerate() {
        let den: LaurentPoly = points
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, b)| *a - *b)
            .product();
        total = &total + &FractionUV::new(jacobian_factor(a, g), den)?;
    }
    Ok(total.normalize())
}

/// The three-term residue sum
/// `(a+u)^g(a+v)^g/((a-b)(a-c)) + (b+u)^g(b+v)^g/((b-a)(b-c)) + (c+u)^g(c+v)^g/((c-a)(c-b))`.
pub fn residue_f1(g: u32, a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<FractionUV> {
    divided_difference(g, &[a, b, c])
}

/// The four-term analogue of [`residue_f1`], with denominators `Π_{j≠i} (a_i - a_j)`.
pub fn residue_f2(
    g: u32,
    a: &LaurentPoly,
    b: &LaurentPoly,
    c: &LaurentPoly,
    d: &LaurentPoly,
) -> Result<FractionUV> {
    divided_difference(g, &[a, b, c, d])
}

/// Series route for residue sums: the `x^{2g+1-r}` coefficient of
/// `(1+ux)^g(1+vx)^g / Π (1 - a_i x)` over `r` monomials `a_i`.
pub fn residue_by_series(g: u32, points: &[LaurentPoly]) -> Result<FractionUV> {
    let k = 2 * g as i64 + 1 - points.len() as i64;
    if k < 0 {
        return Ok(FractionUV::zero());
    }
    let order = k as usize;
    let mut s = XSeries::binomial_numerator(g, order);
    for m in points {
        s = s.div_one_minus(m);
    }
    s.coeff(k)
}
