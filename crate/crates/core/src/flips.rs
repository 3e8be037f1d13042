//! Wall-crossing terms `C_n` for triples of type `(3,1,d1,d2)`.
//!
//! At the critical value `σ_n = 2n - d1 - d2` the moduli space changes by
//! `C_n = e(S_{σ_n^+}) - e(S_{σ_n^-})`. For odd `n` only one kind of
//! Jordan–Hölder splitting occurs; for even `n` the flip loci break into six
//! strata whose contributions are rebuilt independently here.

use num_rational::Rational64;

use crate::error::{HodgeError, Result};
use crate::fraction::FractionUV;
use crate::laurent::LaurentPoly;
use crate::rank2::e_triples21_critical_stable;
use crate::rank2::{m2_odd_poly, m2s_even_poly, one_minus_w, twisted_jacobian_poly, w};
use crate::triple::{chi_triples, TripleType};
use crate::xseries::sym_coeff;
use crate::zoo::{grassmannian_poly, jacobian_poly, projective_poly, sym2_poly, sym_poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipContribution {
    pub n: i64,
    pub n1: i64,
    pub n2: Rational64,
    pub cn: FractionUV,
    /// The six stratum differences, for even `n`.
    pub strata: Option<Vec<FractionUV>>,
}

/// `N_1 = d1 - d2 - n`
pub fn big_n1(t: &TripleType, n: i64) -> i64 {
    t.d1 - t.d2 - n
}

/// `2 N_2 = 2g - 2 - 2 d1 + 3n`
pub fn two_big_n2(t: &TripleType, n: i64) -> i64 {
    2 * (t.g - 1 - t.d1) + 3 * n
}

/// `N_2 = g - 1 - d1 + 3n/2`, an integer exactly when `n` is even.
pub fn big_n2(t: &TripleType, n: i64) -> Rational64 {
    Rational64::new(two_big_n2(t, n), 2)
}

fn require_critical31(t: &TripleType, n: i64) -> Result<()> {
    t.require_ranks(3, 1)?;
    if !t.criticals_31().iter().any(|&(m, _)| m == n) {
        return Err(HodgeError::NotCritical(format!(
            "sigma=2*{n}-{}-{} for {t}",
            t.d1, t.d2
        )));
    }
    Ok(())
}

/// `((1+u^2v)^g(1+uv^2)^g - (uv)^g(1+u)^g(1+v)^g) / ((1-uv)^2 (1-(uv)^2))`
pub(crate) fn q1(g: u32) -> FractionUV {
    let num = &twisted_jacobian_poly(g) - &(&w(g as i64) * &jacobian_poly(g));
    let den = &(&one_minus_w(1) * &one_minus_w(1)) * &one_minus_w(2);
    FractionUV::new(num, den).expect("nonzero denominator")
}

/// `(uv)^{g-1}(1+u)^g(1+v)^g / ((1-uv)^2 (1+uv))`
pub(crate) fn q2(g: u32) -> FractionUV {
    let num = &w(g as i64 - 1) * &jacobian_poly(g);
    let den = &(&one_minus_w(1) * &one_minus_w(1)) * &(&LaurentPoly::one() + &w(1));
    FractionUV::new(num, den).expect("nonzero denominator")
}

/// `C_n` for odd `n`, from its generating-function expression.
pub fn c_n_odd(t: &TripleType, n: i64) -> Result<FractionUV> {
    require_critical31(t, n)?;
    if n % 2 == 0 {
        return Err(HodgeError::ParityError(format!("n={n} is even")));
    }
    let g = t.genus();
    let n1 = big_n1(t, n);
    let jac = jacobian_poly(g);
    let shift = &w(two_big_n2(t, n)) - &w(2 * n1);
    let poly = &(&(&jac * &jac) * &sym_coeff(g, n1, &[], &[])?) * &shift;
    Ok(q1(g).mul_poly(&poly).normalize())
}

/// `C_n` for odd `n`, rebuilt as `(e(P^{2N_1-1}) - e(P^{2N_2-1})) e(Jac) e(Sym^{N_1} X) e(M(2,n))`.
pub fn c_n_odd_structural(t: &TripleType, n: i64) -> Result<LaurentPoly> {
    require_critical31(t, n)?;
    if n % 2 == 0 {
        return Err(HodgeError::ParityError(format!("n={n} is even")));
    }
    let g = t.genus();
    let n1 = big_n1(t, n);
    let fibres = &projective_poly(2 * n1) - &projective_poly(two_big_n2(t, n));
    Ok(&(&(&fibres * &jacobian_poly(g)) * &sym_poly(n1, g)) * &m2_odd_poly(g)?)
}

/// `C_n` for even `n`, from its generating-function expression.
pub fn c_n_even_closed(t: &TripleType, n: i64) -> Result<FractionUV> {
    require_critical31(t, n)?;
    if n % 2 != 0 {
        return Err(HodgeError::ParityError(format!("n={n} is odd")));
    }
    let g = t.genus();
    let n1 = big_n1(t, n);
    let n2 = two_big_n2(t, n) / 2;
    let jac = jacobian_poly(g);
    let one = LaurentPoly::one();
    let x = |c: LaurentPoly| [one.clone(), c];

    let first = &(&w(2 * n2) - &w(2 * n1)) * &sym_coeff(g, n1, &[], &[])?;
    let a = &w(2 * n1 + 1) * &sym_coeff(g, n1, &[w(-1)], &x(w(-2)))?;
    let b = &w(2 * n2) * &sym_coeff(g, n1, &[w(2)], &x(w(3)))?;
    let quad = [one.clone(), LaurentPoly::zero(), -&w(1)];
    let c = &(&w(n1 + n2) * &(&one + &w(1))) * &sym_coeff(g, n1, &[w(-1), w(2)], &quad)?;
    let second = &(&a + &b) - &c;

    let total = &q1(g).mul_poly(&first) - &q2(g).mul_poly(&second);
    Ok(total.mul_poly(&(&jac * &jac)).normalize())
}

/// `e(P^{N-1})` restricted to positive `N`, times `(uv)^{N-1}`: the affine-bundle strata.
fn affine_over_projective(n: i64) -> LaurentPoly {
    if n <= 0 {
        LaurentPoly::zero()
    } else {
        &w(n - 1) * &projective_poly(n)
    }
}

/// The six stratum differences `e(X_i^+) - e(X_i^-)` for even `n`.
pub fn c_n_even_strata(t: &TripleType, n: i64) -> Result<Vec<LaurentPoly>> {
    require_critical31(t, n)?;
    if n % 2 != 0 {
        return Err(HodgeError::ParityError(format!("n={n} is odd")));
    }
    let g = t.genus();
    let gi = t.g;
    let n1 = big_n1(t, n);
    let n2 = two_big_n2(t, n) / 2;
    let p = projective_poly;
    let jac = jacobian_poly(g);
    let jac_sym = &jac * &sym_poly(n1, g);

    // (1): a σ_n-stable (2,1) triple plus a line bundle.
    let sub = TripleType::rank21(gi, t.d1 - n / 2, t.d2)?;
    let stable21 = e_triples21_critical_stable(&sub, n / 2)?.poly;
    let x1 = &(&(&p(gi - 1 + n1) - &p(gi - 1 + n2)) * &stable21) * &jac;

    // (2): a stable rank-2 bundle plus a (1,1) triple.
    let x2 = &(&(&p(2 * n1) - &p(2 * n2)) * &jac_sym) * &m2s_even_poly(g)?;

    // (3): two distinct line bundles of the same degree.
    let off_diagonal = &(&jac * &jac) - &jac;
    let fib3 = &(&(&p(2 * n1) - &p(n1)) - &p(2 * n2)) + &p(n2);
    let x3 = &(&(&fib3 * &jac_sym) * &off_diagonal) * &p(gi - 1);

    // (4): a non-split extension of a line bundle by itself.
    let fib4 = &affine_over_projective(n1) - &affine_over_projective(n2);
    let x4 = &(&(&fib4 * &jac_sym) * &jac) * &p(gi);

    // (5): a line bundle twice, split, with symmetric-square fibres.
    let x5_at = |m: i64| -> Result<LaurentPoly> {
        let pm = p(m);
        let inner = &sym2_poly(&(&pm * &jac))? - &(&jac * &sym2_poly(&pm)?);
        Ok(&jac_sym * &inner)
    };
    let x5 = &x5_at(n1)? - &x5_at(n2)?;

    // (6): a line bundle twice with Grassmannian fibres.
    let x6 = &(&jac_sym * &jac) * &(&grassmannian_poly(2, n1) - &grassmannian_poly(2, n2));

    Ok(vec![x1, x2, x3, x4, x5, x6])
}

/// `C_n` for even `n`: the closed value together with its six strata, checked to agree.
pub fn c_n_even(t: &TripleType, n: i64) -> Result<FlipContribution> {
    let cn = c_n_even_closed(t, n)?;
    let strata = c_n_even_strata(t, n)?;
    let sum: LaurentPoly = strata.iter().cloned().sum();
    if cn != FractionUV::from_poly(sum) {
        return Err(HodgeError::StrataMismatch { n });
    }
    Ok(FlipContribution {
        n,
        n1: big_n1(t, n),
        n2: big_n2(t, n),
        cn,
        strata: Some(strata.into_iter().map(FractionUV::from_poly).collect()),
    })
}

/// `C_n` for any critical `n`; strata are filled for even `n`.
pub fn c_n(t: &TripleType, n: i64) -> Result<FlipContribution> {
    if n % 2 == 0 {
        c_n_even(t, n)
    } else {
        Ok(FlipContribution {
            n,
            n1: big_n1(t, n),
            n2: big_n2(t, n),
            cn: c_n_odd(t, n)?,
            strata: None,
        })
    }
}

/// One fibre-rank identity: `value` is `-χ(T'', T')` (plus one where the
/// fibre is a projectivised space of dimension `-χ`), `expected` the rank used
/// in the strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiCheck {
    pub label: &'static str,
    pub quotient: TripleType,
    pub sub: TripleType,
    pub value: i64,
    pub expected: i64,
}

impl ChiCheck {
    pub fn holds(&self) -> bool {
        self.value == self.expected
    }
}

/// The `χ` identities behind the fibre dimensions of the flip loci at `n`.
pub fn chi_fiber_checks(t: &TripleType, n: i64) -> Result<Vec<ChiCheck>> {
    require_critical31(t, n)?;
    let g = t.g;
    let n1 = big_n1(t, n);
    let two_n2 = two_big_n2(t, n);
    let ty = |a, b, c, d| TripleType::new(a, b, c, d, g);
    let check =
        |label, quotient: TripleType, sub: TripleType, shift: i64, expected| -> Result<ChiCheck> {
            Ok(ChiCheck {
                label,
                quotient,
                sub,
                value: -chi_triples(&quotient, &sub)? + shift,
                expected,
            })
        };
    let line11 = ty(1, 1, t.d1 - n, t.d2)?;
    let rank2 = ty(2, 0, n, 0)?;
    let mut out = vec![
        check("2N1: (1,1) over rank 2", line11, rank2, 0, 2 * n1)?,
        check("2N2: rank 2 over (1,1)", rank2, line11, 0, two_n2)?,
    ];
    if n % 2 == 0 {
        let n2 = two_n2 / 2;
        let line = ty(1, 0, n / 2, 0)?;
        let rank21 = ty(2, 1, t.d1 - n / 2, t.d2)?;
        out.extend([
            check("g-1+N1: (2,1) over line", rank21, line, 0, g - 1 + n1)?,
            check("g-1+N2: line over (2,1)", line, rank21, 0, g - 1 + n2)?,
            check("N1: (1,1) over line", line11, line, 0, n1)?,
            check("N2: line over (1,1)", line, line11, 0, n2)?,
            check("g-1: line over line", line, line, 0, g - 1)?,
            check("g: self-extensions of a line", line, line, 1, g)?,
        ]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(g: i64, d1: i64, d2: i64) -> TripleType {
        TripleType::rank31(g, d1, d2).unwrap()
    }

    #[test]
    fn odd_routes_agree() {
        for (g, d1, d2) in [(2, 5, 0), (2, 7, 0), (3, 6, 1), (3, 9, 0)] {
            let tt = t(g, d1, d2);
            for (n, _) in tt.criticals_31() {
                if n % 2 == 1 {
                    let closed = c_n_odd(&tt, n).unwrap();
                    assert!(closed.has_unit_den());
                    assert_eq!(
                        closed.num(),
                        &c_n_odd_structural(&tt, n).unwrap(),
                        "{tt} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn top_critical_odd_vanishing() {
        // n = d1 - d2 gives N1 = 0, so only the 2N2 term survives.
        let tt = t(2, 5, 0);
        let cn = c_n_odd(&tt, 5).unwrap();
        assert!(!cn.is_zero());
        let expected = &(&(-&projective_poly(two_big_n2(&tt, 5))) * &jacobian_poly(2))
            * &m2_odd_poly(2).unwrap();
        assert_eq!(cn.num(), &expected);
    }

    #[test]
    fn even_strata_match_closed_form() {
        let tt = t(2, 5, 0);
        let flip = c_n_even(&tt, 4).unwrap();
        assert_eq!(flip.n1, 1);
        assert_eq!(flip.n2, Rational64::from_integer(2));
        let strata = flip.strata.unwrap();
        assert_eq!(strata.len(), 6);
        let jac = jacobian_poly(2);
        let x6 = &(&(&jac * &jac) * &sym_poly(1, 2))
            * &(&grassmannian_poly(2, 1) - &grassmannian_poly(2, 2));
        assert_eq!(strata[5], FractionUV::from_poly(x6));
    }

    #[test]
    fn parity_and_criticality_errors() {
        let tt = t(2, 5, 0);
        assert!(matches!(c_n_odd(&tt, 4), Err(HodgeError::ParityError(_))));
        assert!(matches!(c_n_even(&tt, 5), Err(HodgeError::ParityError(_))));
        assert!(matches!(c_n_odd(&tt, 3), Err(HodgeError::NotCritical(_))));
        assert!(matches!(c_n(&tt, 6), Err(HodgeError::NotCritical(_))));
        let wrong = TripleType::rank21(2, 5, 0).unwrap();
        assert!(matches!(c_n(&wrong, 4), Err(HodgeError::InvalidInput(_))));
    }

    #[test]
    fn chi_checks_hold() {
        for (g, d1, d2) in [(2, 5, 0), (3, 8, 1), (4, 9, 0)] {
            let tt = t(g, d1, d2);
            for (n, _) in tt.criticals_31() {
                let checks = chi_fiber_checks(&tt, n).unwrap();
                assert_eq!(checks.len(), if n % 2 == 0 { 8 } else { 2 });
                for c in checks {
                    assert!(
                        c.holds(),
                        "{tt} n={n} {}: {} vs {}",
                        c.label,
                        c.value,
                        c.expected
                    );
                }
            }
        }
    }
}
