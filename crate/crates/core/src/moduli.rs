//! Hodge polynomials of the moduli spaces `N_σ(3,1,d1,d2)` of triples and of
//! the moduli space `M(3,d)` of stable rank-3 bundles.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::Rational64;

use crate::error::{HodgeError, Result};
use crate::flips::{c_n, q1, q2};
use crate::fraction::FractionUV;
use crate::laurent::{LaurentPoly, Monomial};
use crate::rank2::{one_minus_w, twisted_jacobian_poly, w};
use crate::triple::{SigmaPosition, TripleType};
use crate::xseries::{sym_coeff, XSeries};
use crate::zoo::{diagonal_coefficients, jacobian_poly, projective_poly, HodgeResult};

/// `7g - 6 + d1 - 3 d2`
pub fn n31_dim(t: &TripleType) -> i64 {
    7 * t.g - 6 + t.d1 - 3 * t.d2
}

/// The first critical index strictly above σ: `floor((σ + d1 + d2)/2) + 1`.
pub fn n0(t: &TripleType, sigma: Rational64) -> i64 {
    ((sigma + Rational64::from_integer(t.d1 + t.d2)) / Rational64::from_integer(2))
        .floor()
        .to_integer()
        + 1
}

/// The first even index `>= n0`: `2 floor((n0 + 1)/2)`.
pub fn n0_bar(n0: i64) -> i64 {
    2 * (n0 + 1).div_euclid(2)
}

/// Validates σ for a `(3,1)` triple. `Ok(None)` means the moduli space is empty.
fn check_sigma31(t: &TripleType, sigma: Rational64) -> Result<Option<usize>> {
    t.require_ranks(3, 1)?;
    match t.locate(sigma) {
        SigmaPosition::BelowRange | SigmaPosition::AboveRange => Ok(None),
        SigmaPosition::AtMinimum => Err(HodgeError::OutOfRange(format!(
            "sigma must exceed sigma_m={} for {t}",
            t.sigma_range().sigma_m
        ))),
        SigmaPosition::Critical => Err(t.critical_error(sigma)),
        SigmaPosition::Chamber(k) => Ok(Some(k)),
    }
}

fn finish31(t: &TripleType, sigma: Rational64, poly: LaurentPoly) -> HodgeResult {
    let result = HodgeResult::new(poly, n31_dim(t), true);
    match t.chamber_of(sigma) {
        Some(c) => result.with_chamber(c),
        None => result,
    }
}

/// `e(N_σ(3,1,d1,d2))` from the closed generating-function formula.
pub fn e_n31_closed(t: &TripleType, sigma: Rational64) -> Result<HodgeResult> {
    if check_sigma31(t, sigma)?.is_none() {
        return Ok(HodgeResult::empty(n31_dim(t)));
    }
    let g = t.genus();
    let (d1, d2, gi) = (t.d1, t.d2, t.g);
    let n0 = n0(t, sigma);
    let nb = n0_bar(n0);
    let k = d1 - d2 - n0;
    let kb = d1 - d2 - nb;
    let one = LaurentPoly::one();

    let ta = &(&w(2 * d1 - 2 * d2 - 2 * n0) * &sym_coeff(g, k, &[w(-2)], &[])?)
        - &(&w(2 * gi - 2 - 2 * d1 + 3 * n0) * &sym_coeff(g, k, &[w(3)], &[])?);
    let tb = &(&(&w(2 * d1 - 2 * d2 - 2 * nb + 1) * &sym_coeff(g, kb, &[w(-2), w(-1)], &[])?)
        + &(&w(2 * gi - 2 - 2 * d1 + 3 * nb) * &sym_coeff(g, kb, &[w(3), w(2)], &[])?))
        - &(&(&(&one + &w(1)) * &w(gi - 1 - d2 + nb / 2))
            * &sym_coeff(g, kb, &[w(2), w(-1)], &[])?);

    let jac = jacobian_poly(g);
    let total = &q1(g).mul_poly(&ta) + &q2(g).mul_poly(&tb);
    let poly = total.mul_poly(&(&jac * &jac)).into_poly()?;
    Ok(finish31(t, sigma, poly))
}

/// `e(N_σ(3,1,d1,d2))` as `-Σ C_n` over the critical indices `n >= n0`.
pub fn e_n31_flipsum(t: &TripleType, sigma: Rational64) -> Result<HodgeResult> {
    if check_sigma31(t, sigma)?.is_none() {
        return Ok(HodgeResult::empty(n31_dim(t)));
    }
    let n0 = n0(t, sigma);
    let mut sum = FractionUV::zero();
    for (n, _) in t.criticals_31().into_iter().filter(|&(n, _)| n >= n0) {
        sum = &sum - &c_n(t, n)?.cn;
    }
    Ok(finish31(t, sigma, sum.normalize().into_poly()?))
}

pub fn e_n31_closed_chamber(t: &TripleType, k: usize) -> Result<HodgeResult> {
    t.require_ranks(3, 1)?;
    e_n31_closed(t, t.chamber_sigma(k)?)
}

pub fn e_n31_flipsum_chamber(t: &TripleType, k: usize) -> Result<HodgeResult> {
    t.require_ranks(3, 1)?;
    e_n31_flipsum(t, t.chamber_sigma(k)?)
}

/// `e(Z)(t,t)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub coeffs: Vec<BigInt>,
    /// Whether the coefficients are Betti numbers (smooth projective input).
    pub is_poincare: bool,
}

pub fn poincare(h: &HodgeResult) -> Specialization {
    Specialization {
        coeffs: h.diagonal_coefficients(),
        is_poincare: h.flags.smooth_projective,
    }
}

/// Polynomials in a single variable `t` are stored in the exponent of `u`.
fn t_pow(k: i64) -> LaurentPoly {
    LaurentPoly::term(1, k, 0)
}

fn one_plus_t_pow(e: i64, k: u32) -> LaurentPoly {
    LaurentPoly::one_plus_monomial_pow(Monomial::new(e, 0), k)
}

fn one_minus_t(k: i64) -> LaurentPoly {
    &LaurentPoly::one() - &t_pow(k)
}

/// `x^k` coefficient of `(1+tx)^{2g} / ((1-x)(1-t^2x)) / Π (1 - t^{e_i} x)`.
fn poincare_sym_coeff(g: u32, k: i64, poles: &[i64]) -> Result<LaurentPoly> {
    if k < 0 {
        return Ok(LaurentPoly::zero());
    }
    let order = k as usize;
    let n = BigInt::from(2 * g);
    let numerator =
        (0..=2 * g as i64).map(|j| LaurentPoly::term(binomial(n.clone(), BigInt::from(j)), j, 0));
    let mut s = XSeries::from_polys(order, numerator)
        .div_one_minus(&LaurentPoly::one())
        .div_one_minus(&t_pow(2));
    for &e in poles {
        s = s.div_one_minus(&t_pow(e));
    }
    s.coeff_poly(k)
}

/// The Poincaré polynomial of `N_σ(3,1,d1,d2)` from its own closed formula in `t`,
/// as coefficients of `t^0, t^1, ...`.
pub fn poincare_n31_display(t: &TripleType, sigma: Rational64) -> Result<Vec<BigInt>> {
    if check_sigma31(t, sigma)?.is_none() {
        return Ok(Vec::new());
    }
    let g = t.genus();
    let (d1, d2, gi) = (t.d1, t.d2, t.g);
    let n0 = n0(t, sigma);
    let nb = n0_bar(n0);
    let k = d1 - d2 - n0;
    let kb = d1 - d2 - nb;

    let ta = &(&t_pow(4 * d1 - 4 * d2 - 4 * n0) * &poincare_sym_coeff(g, k, &[-4])?)
        - &(&t_pow(4 * gi - 4 - 4 * d1 + 6 * n0) * &poincare_sym_coeff(g, k, &[6])?);
    let tb = &(&(&t_pow(4 * d1 - 4 * d2 - 4 * nb + 2) * &poincare_sym_coeff(g, kb, &[-4, -2])?)
        + &(&t_pow(4 * gi - 4 - 4 * d1 + 6 * nb) * &poincare_sym_coeff(g, kb, &[6, 4])?))
        - &(&(&one_plus_t_pow(2, 1) * &t_pow(2 * gi - 2 - 2 * d2 + nb))
            * &poincare_sym_coeff(g, kb, &[4, -2])?);

    let q1 = FractionUV::new(
        &one_plus_t_pow(3, 2 * g) - &(&t_pow(2 * gi) * &one_plus_t_pow(1, 2 * g)),
        &(&one_minus_t(2) * &one_minus_t(2)) * &one_minus_t(4),
    )?;
    let q2 = FractionUV::new(
        &t_pow(2 * gi - 2) * &one_plus_t_pow(1, 2 * g),
        &(&one_minus_t(2) * &one_minus_t(2)) * &one_plus_t_pow(2, 1),
    )?;
    let total = &q1.mul_poly(&ta) + &q2.mul_poly(&tb);
    let poly = total.mul_poly(&one_plus_t_pow(1, 4 * g)).into_poly()?;
    Ok(univariate_coeffs(&poly))
}

fn univariate_coeffs(p: &LaurentPoly) -> Vec<BigInt> {
    let top = p.total_degree().unwrap_or(-1);
    (0..=top).map(|k| p.coeff(k, 0)).collect()
}

/// `9g - 8`
pub fn m3_dim(g: u32) -> i64 {
    9 * g as i64 - 8
}

/// `e(M(3,d))` for `d` prime to 3.
pub fn e_m3(g: u32) -> Result<HodgeResult> {
    if g < 2 {
        return Err(HodgeError::InvalidInput(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    let gi = g as i64;
    let jac = jacobian_poly(g);
    let twisted = twisted_jacobian_poly(g);
    let one_plus_w = &LaurentPoly::one() + &w(1);
    let t1 = &(&(&jac * &(&one_plus_w * &one_plus_w)) * &w(2 * gi - 1)) * &twisted;
    let t2 = &(&(&jac * &jac) * &w(3 * gi - 1)) * &LaurentPoly::in_uv(&[1, 1, 1]);
    let t3 = &(&LaurentPoly::one_plus_monomial_pow(Monomial::new(2, 3), g)
        * &LaurentPoly::one_plus_monomial_pow(Monomial::new(3, 2), g))
        * &twisted;
    let num = &jac * &(&(&t3 - &t1) + &t2);
    let den = &(&(&one_minus_w(1) * &one_minus_w(2)) * &one_minus_w(2)) * &one_minus_w(3);
    Ok(HodgeResult::new(num.exact_div(&den)?, m3_dim(g), true))
}

/// `e(M(3,d))`, rejecting degrees divisible by 3.
pub fn e_m3_for_degree(g: u32, d: i64) -> Result<HodgeResult> {
    if d.rem_euclid(3) == 0 {
        return Err(HodgeError::InvalidInput(format!(
            "d={d} is divisible by 3; only d prime to 3 gives a smooth projective M(3,d)"
        )));
    }
    e_m3(g)
}

/// The Poincaré polynomial of `M(3,d)` from its own closed formula in `t`.
pub fn poincare_m3_display(g: u32) -> Result<Vec<BigInt>> {
    let gi = g as i64;
    let one_plus_t = one_plus_t_pow(1, 2 * g);
    let one_plus_t3 = one_plus_t_pow(3, 2 * g);
    let one_plus_t2 = one_plus_t_pow(2, 1);
    let a = &one_plus_t_pow(5, 2 * g) * &one_plus_t3;
    let b = &(&(&(&one_plus_t * &one_plus_t2) * &one_plus_t2) * &t_pow(4 * gi - 2)) * &one_plus_t3;
    let c = &(&(&one_plus_t * &one_plus_t) * &t_pow(6 * gi - 2))
        * &LaurentPoly::from_terms([(0, 0, 1), (2, 0, 1), (4, 0, 1)]);
    let num = &one_plus_t * &(&(&a - &b) + &c);
    let den = &(&(&one_minus_t(2) * &one_minus_t(4)) * &one_minus_t(4)) * &one_minus_t(6);
    Ok(univariate_coeffs(&num.exact_div(&den)?))
}

/// `n2 d1 - n1 d2 - n1 n2 (g-1) - 1`, the fibre dimension of `N_{σ_m^+}` over
/// `M(n1,d1) × M(n2,d2)`.
pub fn sigma_min_fiber_dim(t: &TripleType) -> i64 {
    t.n2 * t.d1 - t.n1 * t.d2 - t.n1 * t.n2 * (t.g - 1) - 1
}

/// `e(M(3,d))` recovered from the lowest chamber of `N_σ(3,1,6g-5,0)`, which is
/// a `P^{3g-3}`-bundle over `M(3,6g-5) × Jac X`.
pub fn e_m3_via_pipeline(g: u32) -> Result<HodgeResult> {
    let gi = g as i64;
    let t = TripleType::rank31(gi, 6 * gi - 5, 0)?;
    let sigma = t.chamber_sigma(1)?;
    let first = n0(&t, sigma);
    debug_assert_eq!((first, n0_bar(first)), (4 * gi - 3, 4 * gi - 2));
    let total = e_n31_closed(&t, sigma)?;
    let fibre = projective_poly(sigma_min_fiber_dim(&t) + 1);
    let poly = total.poly.exact_div(&(&jacobian_poly(g) * &fibre))?;
    Ok(HodgeResult::new(poly, m3_dim(g), true))
}

/// Betti numbers of a Hodge polynomial's diagonal, lowest degree first.
pub fn betti_numbers(p: &LaurentPoly) -> Vec<BigInt> {
    diagonal_coefficients(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn t(g: i64, d1: i64, d2: i64) -> TripleType {
        TripleType::rank31(g, d1, d2).unwrap()
    }

    #[test]
    fn n0_arithmetic() {
        let tt = t(2, 5, 0);
        assert_eq!(n0(&tt, r(7, 2)), 5);
        assert_eq!(n0_bar(5), 6);
        assert_eq!(n0(&tt, r(7, 3)), 4);
        assert_eq!(n0_bar(4), 4);
    }

    #[test]
    fn closed_form_example() {
        let tt = t(2, 5, 0);
        let e = e_n31_closed(&tt, r(7, 2)).unwrap();
        assert_eq!(e.dim, 13);
        assert_eq!(e.poly.total_degree(), Some(26));
        assert!(e.projective_violations().is_empty());
        assert_eq!(e.chamber.as_ref().unwrap().index, Some(2));
        assert_eq!(e, e_n31_flipsum(&tt, r(7, 2)).unwrap());
    }

    #[test]
    fn outside_the_range() {
        let tt = t(2, 5, 0);
        assert!(e_n31_closed(&tt, r(11, 2)).unwrap().is_empty());
        assert!(e_n31_flipsum(&tt, r(11, 2)).unwrap().is_empty());
        assert!(e_n31_closed(&tt, r(1, 1)).unwrap().is_empty());
        assert!(matches!(
            e_n31_closed(&tt, r(3, 1)),
            Err(HodgeError::CriticalSigma { .. })
        ));
        assert!(matches!(
            e_n31_closed(&tt, r(5, 3)),
            Err(HodgeError::OutOfRange(_))
        ));
    }

    #[test]
    fn chambers_agree_and_are_dual() {
        for (g, d1, d2) in [(2, 4, 0), (2, 6, 0), (2, 7, 1), (3, 5, 0)] {
            let tt = t(g, d1, d2);
            for k in 1..=tt.chambers().len() {
                let closed = e_n31_closed_chamber(&tt, k).unwrap();
                assert!(
                    closed.projective_violations().is_empty(),
                    "{tt} chamber {k}"
                );
                assert_eq!(
                    closed,
                    e_n31_flipsum_chamber(&tt, k).unwrap(),
                    "{tt} chamber {k}"
                );
                let display = poincare_n31_display(&tt, tt.chamber_sigma(k).unwrap()).unwrap();
                assert_eq!(display, poincare(&closed).coeffs);
            }
        }
    }

    #[test]
    fn m3_routes_agree() {
        for g in 2..=3 {
            let m = e_m3(g).unwrap();
            assert!(m.projective_violations().is_empty());
            assert_eq!(m, e_m3_via_pipeline(g).unwrap());
            assert_eq!(poincare_m3_display(g).unwrap(), poincare(&m).coeffs);
        }
        let betti: Vec<i64> = poincare(&e_m3(2).unwrap())
            .coeffs
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(
            betti,
            [1, 4, 7, 12, 26, 48, 76, 112, 157, 208, 234, 208, 157, 112, 76, 48, 26, 12, 7, 4, 1]
        );
    }

    #[test]
    fn m3_degree_validation() {
        assert!(e_m3_for_degree(2, 3).is_err());
        assert!(e_m3_for_degree(2, -6).is_err());
        assert!(e_m3_for_degree(2, 1).is_ok());
        assert!(e_m3_for_degree(2, -1).is_ok());
    }

    #[test]
    fn pipeline_fibre_dimension() {
        for g in 2..6 {
            assert_eq!(sigma_min_fiber_dim(&t(g, 6 * g - 5, 0)), 3 * g - 3);
        }
    }

    #[test]
    fn m3_with_wrong_prefactor_and_signs_is_not_a_polynomial() {
        // Prefactor (1+u)^{2g}(1+v)^{2g} and bracket T1 - T2 + T3 do not give a polynomial.
        let g = 2;
        let jac = jacobian_poly(g);
        let twisted = twisted_jacobian_poly(g);
        let one_plus_w = &LaurentPoly::one() + &w(1);
        let t1 = &(&(&jac * &(&one_plus_w * &one_plus_w)) * &w(3)) * &twisted;
        let t2 = &(&(&jac * &jac) * &w(5)) * &LaurentPoly::in_uv(&[1, 1, 1]);
        let t3 = &(&LaurentPoly::one_plus_monomial_pow(Monomial::new(2, 3), g)
            * &LaurentPoly::one_plus_monomial_pow(Monomial::new(3, 2), g))
            * &twisted;
        let num = &(&jac * &jac) * &(&(&t1 - &t2) + &t3);
        let den = &(&(&one_minus_w(1) * &one_minus_w(2)) * &one_minus_w(2)) * &one_minus_w(3);
        assert!(matches!(
            num.exact_div(&den),
            Err(HodgeError::NonDivisible { .. })
        ));
    }
}
