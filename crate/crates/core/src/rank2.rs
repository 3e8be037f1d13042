//! Rank-2 results: bundles of rank 2 and triples of type `(2,1,d1,d2)`.

use num_bigint::BigInt;
use num_rational::Rational64;
#[cfg(test)]
use num_traits::Zero;

use crate::error::{HodgeError, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::triple::{SigmaPosition, TripleType};
use crate::xseries::sym_coeff;
use crate::zoo::{jacobian_poly, projective_poly, sym_poly, HodgeResult};

pub(crate) fn w(k: i64) -> LaurentPoly {
    LaurentPoly::uv_pow(k)
}

pub(crate) fn one_minus_w(k: i64) -> LaurentPoly {
    &LaurentPoly::one() - &w(k)
}

/// `(1+u^2v)^g (1+uv^2)^g`
pub(crate) fn twisted_jacobian_poly(g: u32) -> LaurentPoly {
    &LaurentPoly::one_plus_monomial_pow(Monomial::new(2, 1), g)
        * &LaurentPoly::one_plus_monomial_pow(Monomial::new(1, 2), g)
}

pub fn m2_odd_poly(g: u32) -> Result<LaurentPoly> {
    let jac = jacobian_poly(g);
    let num = &(&jac * &twisted_jacobian_poly(g)) - &(&w(g as i64) * &(&jac * &jac));
    num.exact_div(&(&one_minus_w(1) * &one_minus_w(2)))
}

/// `e(M(2,d))` for odd `d`.
pub fn e_m2_odd(g: u32) -> Result<HodgeResult> {
    require_genus(g)?;
    Ok(HodgeResult::new(m2_odd_poly(g)?, 4 * g as i64 - 3, true))
}

pub fn m2s_even_poly(g: u32) -> Result<LaurentPoly> {
    let jac = jacobian_poly(g);
    let wg1 = w(g as i64 + 1);
    let mid = &(&LaurentPoly::one() + &wg1.scale(&BigInt::from(2))) - &w(2);
    let signed = (&LaurentPoly::one() - &LaurentPoly::term(1, 2, 0)).pow(g)
        * (&LaurentPoly::one() - &LaurentPoly::term(1, 0, 2)).pow(g);
    let one_minus = one_minus_w(1);
    let num = &(&(&jac * &twisted_jacobian_poly(g)).scale(&BigInt::from(2))
        - &(&(&jac * &jac) * &mid))
        - &(&signed * &(&one_minus * &one_minus));
    num.exact_div(&(&one_minus * &one_minus_w(2)))?
        .div_integer(&BigInt::from(2))
}

/// `e(M^s(2,d))` for even `d`, the stable locus. Smooth but not compact.
pub fn e_m2s_even(g: u32) -> Result<HodgeResult> {
    require_genus(g)?;
    Ok(HodgeResult::new(m2s_even_poly(g)?, 4 * g as i64 - 3, false))
}

fn require_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(HodgeError::InvalidInput(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    Ok(())
}

pub fn triples21_dim(t: &TripleType) -> i64 {
    3 * t.g - 2 + t.d1 - 2 * t.d2
}

/// `e(N_σ(2,1,d1,d2))` for a non-critical σ.
///
/// σ below the range or above `σ_M` gives the empty result; σ equal to `σ_m`
/// or to a critical value is rejected.
pub fn e_triples21(t: &TripleType, sigma: Rational64) -> Result<HodgeResult> {
    t.require_ranks(2, 1)?;
    let dim = triples21_dim(t);
    match t.locate(sigma) {
        SigmaPosition::BelowRange | SigmaPosition::AboveRange => {
            return Ok(HodgeResult::empty(dim))
        }
        SigmaPosition::AtMinimum => {
            return Err(HodgeError::OutOfRange(format!(
                "sigma must exceed sigma_m={} for {t}",
                t.sigma_range().sigma_m
            )))
        }
        SigmaPosition::Critical => return Err(t.critical_error(sigma)),
        SigmaPosition::Chamber(_) => {}
    }
    let g = t.genus();
    let d0 = ((sigma + Rational64::from_integer(t.d1 + t.d2)) / Rational64::from_integer(3))
        .floor()
        .to_integer()
        + 1;
    let k = t.d1 - t.d2 - d0;
    let jac = jacobian_poly(g);
    let first = &w(k) * &sym_coeff(g, k, &[w(-1)], &[])?;
    let second = &w(-t.d1 + t.g - 1 + 2 * d0) * &sym_coeff(g, k, &[w(2)], &[])?;
    let poly = (&(&jac * &jac) * &(&first - &second)).exact_div(&one_minus_w(1))?;
    let result = HodgeResult::new(poly, dim, true);
    Ok(match t.chamber_of(sigma) {
        Some(c) => result.with_chamber(c),
        None => result,
    })
}

/// `e(N_σ(2,1,d1,d2))` in the 1-based chamber `k`, evaluated at its midpoint.
pub fn e_triples21_chamber(t: &TripleType, k: usize) -> Result<HodgeResult> {
    t.require_ranks(2, 1)?;
    e_triples21(t, t.chamber_sigma(k)?)
}

fn require_critical21(t: &TripleType, dm: i64) -> Result<()> {
    t.require_ranks(2, 1)?;
    if !t.criticals_21().iter().any(|&(m, _)| m == dm) {
        return Err(HodgeError::NotCritical(format!(
            "sigma=3*{dm}-{}-{} for {t}",
            t.d1, t.d2
        )));
    }
    Ok(())
}

/// Hodge polynomial of the σ_c-stable locus at the critical value `σ_c = 3 d_M - d1 - d2`.
pub fn e_triples21_critical_stable(t: &TripleType, dm: i64) -> Result<HodgeResult> {
    require_critical21(t, dm)?;
    let g = t.genus();
    let k = t.d1 - t.d2 - dm;
    let jac = jacobian_poly(g);
    let first = &w(k) * &sym_coeff(g, k, &[w(-1)], &[])?;
    let x = [LaurentPoly::zero(), LaurentPoly::one()];
    let second = &w(-t.d1 + t.g + 1 + 2 * dm) * &sym_coeff(g, k, &[w(2)], &x)?;
    let third = sym_coeff(g, k, &[], &[])?;
    let bracket = &(&first - &second) - &third;
    let poly = (&(&jac * &jac) * &bracket).exact_div(&one_minus_w(1))?;
    Ok(HodgeResult::new(poly, triples21_dim(t), false))
}

/// `e(S_{σ_c^-})`: the triples stable just below `σ_c` and unstable above, a
/// `P^{2d_M - d1 + g - 2}`-bundle over `Jac × Jac × Sym^{d1-d2-d_M} X`.
pub fn flip_locus21_below(t: &TripleType, dm: i64) -> Result<LaurentPoly> {
    require_critical21(t, dm)?;
    let g = t.genus();
    let jac = jacobian_poly(g);
    Ok(&(&(&jac * &jac) * &sym_poly(t.d1 - t.d2 - dm, g))
        * &projective_poly(2 * dm - t.d1 + t.g - 1))
}

/// `e(S_{σ_c^+})`: the triples stable just above `σ_c` and unstable below, a
/// `P^{d1-d2-d_M-1}`-bundle over the same base.
pub fn flip_locus21_above(t: &TripleType, dm: i64) -> Result<LaurentPoly> {
    require_critical21(t, dm)?;
    let g = t.genus();
    let jac = jacobian_poly(g);
    let k = t.d1 - t.d2 - dm;
    Ok(&(&(&jac * &jac) * &sym_poly(k, g)) * &projective_poly(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::e_jacobian;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn m2_odd_invariants() {
        for g in 2..=4 {
            let m = e_m2_odd(g).unwrap();
            assert!(m.projective_violations().is_empty(), "g={g}");
            assert_eq!(m.poly.coeff(0, 0), BigInt::from(1));
            assert!(m
                .diagonal_coefficients()
                .iter()
                .all(|b| *b >= BigInt::zero()));
        }
        assert_eq!(m2_odd_poly(2).unwrap().total_degree(), Some(10));
    }

    #[test]
    fn m2_even_stable_locus() {
        for g in 2..=4 {
            let m = e_m2s_even(g).unwrap();
            let top = 4 * g as i64 - 3;
            assert_eq!(m.poly.coeff(top, top), BigInt::from(1));
            assert_eq!(m.poly.total_degree(), Some(2 * top));
            assert!(m.poly.coeff(0, 0).is_zero());
            assert!(!m.flags.smooth_projective);
            assert!(m.poly.is_symmetric());
        }
    }

    #[test]
    fn triples21_chambers_are_dual() {
        for d1 in 3..=6 {
            let t = TripleType::rank21(2, d1, 0).unwrap();
            for k in 1..=t.chambers().len() {
                let e = e_triples21_chamber(&t, k).unwrap();
                assert!(!e.is_empty(), "d1={d1} chamber {k}");
                assert!(e.projective_violations().is_empty(), "d1={d1} chamber {k}");
            }
        }
    }

    #[test]
    fn triples21_top_chamber_example() {
        let t = TripleType::rank21(2, 5, 0).unwrap();
        let e = e_triples21(&t, r(19, 2)).unwrap();
        assert_eq!(e.poly.total_degree(), Some(18));
        assert!(e.projective_violations().is_empty());
        assert!(e_triples21(&t, r(11, 1)).unwrap().is_empty());
        assert!(e_triples21(&t, r(1, 1)).unwrap().is_empty());
        assert!(matches!(
            e_triples21(&t, r(10, 1)),
            Err(HodgeError::CriticalSigma { .. })
        ));
        assert!(matches!(
            e_triples21(&t, r(5, 2)),
            Err(HodgeError::OutOfRange(_))
        ));
    }

    #[test]
    fn constant_within_chambers() {
        let t = TripleType::rank21(3, 6, 0).unwrap();
        for (lo, hi) in t.chambers() {
            let a = e_triples21(&t, lo + (hi - lo) * r(1, 5)).unwrap();
            let b = e_triples21(&t, lo + (hi - lo) * r(4, 5)).unwrap();
            assert_eq!(a.poly, b.poly);
        }
    }

    #[test]
    fn wall_crossing_difference() {
        for g in 2..=3 {
            for d1 in 3..=7 {
                for d2 in 0..=1 {
                    let t = TripleType::rank21(g, d1, d2).unwrap();
                    let chambers = t.chambers();
                    for (i, &(dm, sigma_c)) in t.criticals_21().iter().enumerate() {
                        let below = e_triples21(&t, (chambers[i].0 + chambers[i].1) / 2).unwrap();
                        let above = match chambers.get(i + 1) {
                            Some(&(lo, hi)) => e_triples21(&t, (lo + hi) / 2).unwrap(),
                            None => e_triples21(&t, r(sigma_c + 1, 1)).unwrap(),
                        };
                        let expected = &flip_locus21_above(&t, dm).unwrap()
                            - &flip_locus21_below(&t, dm).unwrap();
                        assert_eq!(&above.poly - &below.poly, expected, "g={g} t={t} dM={dm}");

                        let stable = e_triples21_critical_stable(&t, dm).unwrap();
                        assert_eq!(
                            &below.poly - &flip_locus21_below(&t, dm).unwrap(),
                            stable.poly,
                            "g={g} t={t} dM={dm}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn critical_stable_rejects_non_criticals() {
        let t = TripleType::rank21(2, 5, 0).unwrap();
        assert!(matches!(
            e_triples21_critical_stable(&t, 2),
            Err(HodgeError::NotCritical(_))
        ));
        assert!(matches!(
            e_triples21_critical_stable(&t, 6),
            Err(HodgeError::NotCritical(_))
        ));
        assert!(e_triples21_critical_stable(&t, 3).is_ok());
    }

    #[test]
    fn lowest_chamber_odd_degree_is_a_projective_bundle() {
        // Just above σ_m the moduli space fibres over M(2,d1) × Jac with projective fibres.
        for g in 2..=3u32 {
            let d1 = 4 * g as i64 - 1;
            let t = TripleType::rank21(g as i64, d1, 0).unwrap();
            let e = e_triples21_chamber(&t, 1).unwrap();
            let fibre = projective_poly(d1 - 2 * (g as i64 - 1));
            let expected = &(&m2_odd_poly(g).unwrap() * &e_jacobian(g).poly) * &fibre;
            assert_eq!(e.poly, expected);
        }
    }
}
