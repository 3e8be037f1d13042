//! Hodge polynomials of the basic building blocks: projective spaces, Jacobians,
//! symmetric products of the curve, Grassmannians, affine spaces and `Z_2`-quotients.

use num_bigint::BigInt;
use num_rational::Rational64;

use crate::error::Result;
use crate::laurent::{LaurentPoly, Substitution};
use crate::xseries::XSeries;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub smooth_projective: bool,
    pub empty: bool,
}

/// Where a σ-dependent result was evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    /// 1-based position among the chambers of the parameter range.
    pub index: Option<usize>,
    pub sigma: Rational64,
    pub lower: Rational64,
    pub upper: Option<Rational64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeResult {
    pub poly: LaurentPoly,
    pub dim: i64,
    pub flags: Flags,
    pub chamber: Option<Chamber>,
}

/// A failed invariant of a [`HodgeResult`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotPolynomial,
    Asymmetric,
    NegativeCoefficient,
    WrongDegree { expected: i64, found: Option<i64> },
    NotDual { dim: i64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotPolynomial => f.write_str("negative exponent present"),
            Violation::Asymmetric => f.write_str("e(u,v) != e(v,u)"),
            Violation::NegativeCoefficient => f.write_str("negative coefficient"),
            Violation::WrongDegree { expected, found } => {
                write!(f, "total degree {found:?}, expected {expected}")
            }
            Violation::NotDual { dim } => write!(f, "Poincaré duality fails for D={dim}"),
        }
    }
}

impl HodgeResult {
    pub fn new(poly: LaurentPoly, dim: i64, smooth_projective: bool) -> Self {
        let empty = poly.is_zero();
        HodgeResult {
            poly,
            dim,
            flags: Flags {
                smooth_projective: smooth_projective && !empty,
                empty,
            },
            chamber: None,
        }
    }

    pub fn empty(dim: i64) -> Self {
        HodgeResult::new(LaurentPoly::zero(), dim, false)
    }

    pub fn with_chamber(mut self, chamber: Chamber) -> Self {
        self.chamber = Some(chamber);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.flags.empty
    }

    /// The invariants of a smooth projective variety of dimension `dim`:
    /// symmetry, nonnegativity, total degree `2 dim` and Poincaré duality.
    pub fn projective_violations(&self) -> Vec<Violation> {
        let p = &self.poly;
        let mut out = Vec::new();
        if p.is_zero() {
            return out;
        }
        if !p.is_polynomial() {
            out.push(Violation::NotPolynomial);
        }
        if !p.is_symmetric() {
            out.push(Violation::Asymmetric);
        }
        if !p.has_nonnegative_coefficients() {
            out.push(Violation::NegativeCoefficient);
        }
        if p.total_degree() != Some(2 * self.dim) {
            out.push(Violation::WrongDegree {
                expected: 2 * self.dim,
                found: p.total_degree(),
            });
        }
        if !p.is_dual(self.dim) {
            out.push(Violation::NotDual { dim: self.dim });
        }
        out
    }

    /// Coefficients of `e(t,t)`, lowest degree first.
    pub fn diagonal_coefficients(&self) -> Vec<BigInt> {
        diagonal_coefficients(&self.poly)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "poly": self.poly.to_json(),
            "dim": self.dim,
            "smooth_projective": self.flags.smooth_projective,
            "empty": self.flags.empty,
        });
        if let Some(c) = &self.chamber {
            v["chamber"] = serde_json::json!({
                "index": c.index,
                "sigma": c.sigma.to_string(),
                "lower": c.lower.to_string(),
                "upper": c.upper.map(|x| x.to_string()),
            });
        }
        v
    }
}

/// Coefficients of the univariate polynomial `p(t,t)`, from `t^0` to the top degree.
pub fn diagonal_coefficients(p: &LaurentPoly) -> Vec<BigInt> {
    let diag = p.substitute(Substitution::Diagonal);
    let top = diag.total_degree().unwrap_or(-1).max(-1);
    (0..=top).map(|k| diag.coeff(k, 0)).collect()
}

/// `1 + uv + ... + (uv)^{n-1}`, the Hodge polynomial of `P^{n-1}`; zero when `n <= 0`.
pub fn projective_poly(n: i64) -> LaurentPoly {
    if n <= 0 {
        return LaurentPoly::zero();
    }
    let num = &LaurentPoly::one() - &LaurentPoly::uv_pow(n);
    let den = &LaurentPoly::one() - &LaurentPoly::uv_pow(1);
    num.exact_div(&den)
        .expect("1 - (uv)^n is divisible by 1 - uv")
}

/// `e(P^{n-1})`. `n <= 0` gives the empty space.
pub fn e_projective(n: i64) -> HodgeResult {
    HodgeResult::new(projective_poly(n), (n - 1).max(0), true)
}

pub fn jacobian_poly(g: u32) -> LaurentPoly {
    &LaurentPoly::one_plus_monomial_pow(crate::Monomial::new(1, 0), g)
        * &LaurentPoly::one_plus_monomial_pow(crate::Monomial::new(0, 1), g)
}

/// `(1+u)^g (1+v)^g`
pub fn e_jacobian(g: u32) -> HodgeResult {
    HodgeResult::new(jacobian_poly(g), g as i64, true)
}

pub fn sym_poly(k: i64, g: u32) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    XSeries::sym_generating(g, k as usize)
        .coeff_poly(k)
        .expect("series sized to k")
}

/// `e(Sym^k X)` for a curve of genus `g`; empty for `k < 0`.
pub fn e_sym(k: i64, g: u32) -> HodgeResult {
    HodgeResult::new(sym_poly(k, g), k.max(0), true)
}

pub fn grassmannian_poly(k: i64, n: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let one = LaurentPoly::one();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=k {
        num = &num * &(&one - &LaurentPoly::uv_pow(n - k + i));
        den = &den * &(&one - &LaurentPoly::uv_pow(i));
    }
    num.exact_div(&den)
        .expect("Gaussian binomials are polynomials")
}

/// `e(Gr(k, N))` as a Gaussian binomial in `uv`; empty unless `0 <= k <= N`.
pub fn e_grassmannian(k: i64, n: i64) -> HodgeResult {
    HodgeResult::new(grassmannian_poly(k, n), (k * (n - k)).max(0), true)
}

pub fn sym2_poly(e: &LaurentPoly) -> Result<LaurentPoly> {
    let sum = &(e * e) + &e.substitute(Substitution::NegSquare);
    sum.div_integer(&BigInt::from(2))
}

/// `e((M × M)/Z_2) = ½ (e(M)(u,v)^2 + e(M)(-u^2,-v^2))`.
pub fn e_sym2_quotient(e_m: &HodgeResult) -> Result<HodgeResult> {
    Ok(HodgeResult::new(sym2_poly(&e_m.poly)?, 2 * e_m.dim, false))
}

/// `e(C^n) = (uv)^n`
pub fn e_affine(n: i64) -> HodgeResult {
    HodgeResult::new(LaurentPoly::uv_pow(n), n, false)
}

pub fn e_product(a: &HodgeResult, b: &HodgeResult) -> HodgeResult {
    HodgeResult::new(
        &a.poly * &b.poly,
        a.dim + b.dim,
        a.flags.smooth_projective && b.flags.smooth_projective,
    )
}

/// `e(A - B)` for a closed subvariety `B ⊂ A`.
pub fn e_difference(a: &HodgeResult, b: &HodgeResult) -> HodgeResult {
    HodgeResult::new(&a.poly - &b.poly, a.dim, false)
}
