//! Types of holomorphic triples and the arithmetic of their stability parameter σ.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{HodgeError, Result};
use crate::zoo::Chamber;

/// The type `(n1, n2, d1, d2)` of a triple over a curve of genus `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleType {
    pub n1: i64,
    pub n2: i64,
    pub d1: i64,
    pub d2: i64,
    pub g: i64,
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n1, self.n2, self.d1, self.d2)
    }
}

/// The admissible σ-interval `[σ_m, σ_M]` and the critical values inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRange {
    pub sigma_m: Rational64,
    /// `None` stands for `+∞` (equal ranks).
    pub sigma_max: Option<Rational64>,
    pub criticals: Vec<Rational64>,
}

impl SigmaRange {
    pub fn is_empty(&self) -> bool {
        self.sigma_max.is_some_and(|m| m < self.sigma_m)
    }

    pub fn contains(&self, sigma: Rational64) -> bool {
        sigma >= self.sigma_m && self.sigma_max.is_none_or(|m| sigma <= m)
    }
}

/// Where a σ sits relative to the range and its critical values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaPosition {
    BelowRange,
    AtMinimum,
    AboveRange,
    Critical,
    /// Inside the open chamber with this 1-based index.
    Chamber(usize),
}

impl TripleType {
    pub fn new(n1: i64, n2: i64, d1: i64, d2: i64, g: i64) -> Result<Self> {
        if g < 2 {
            return Err(HodgeError::InvalidInput(format!(
                "genus must be at least 2, got {g}"
            )));
        }
        if n1 < 0 || n2 < 0 || n1 + n2 == 0 {
            return Err(HodgeError::InvalidInput(format!(
                "ranks must be nonnegative and not both zero, got ({n1},{n2})"
            )));
        }
        Ok(TripleType { n1, n2, d1, d2, g })
    }

    pub fn rank31(g: i64, d1: i64, d2: i64) -> Result<Self> {
        TripleType::new(3, 1, d1, d2, g)
    }

    pub fn rank21(g: i64, d1: i64, d2: i64) -> Result<Self> {
        TripleType::new(2, 1, d1, d2, g)
    }

    pub fn genus(&self) -> u32 {
        self.g as u32
    }

    fn ranks(&self) -> (i64, i64) {
        (self.n1, self.n2)
    }

    pub fn require_ranks(&self, n1: i64, n2: i64) -> Result<()> {
        if self.ranks() != (n1, n2) {
            return Err(HodgeError::InvalidInput(format!(
                "expected a triple of ranks ({n1},{n2}), got {self}"
            )));
        }
        Ok(())
    }

    /// `μ_σ = (d1 + d2)/(n1 + n2) + σ n2/(n1 + n2)`
    pub fn sigma_slope(&self, sigma: Rational64) -> Rational64 {
        let n = self.n1 + self.n2;
        Rational64::new(self.d1 + self.d2, n) + sigma * Rational64::new(self.n2, n)
    }

    pub fn sigma_range(&self) -> SigmaRange {
        let mu = |d: i64, n: i64| {
            if n == 0 {
                Rational64::zero()
            } else {
                Rational64::new(d, n)
            }
        };
        let sigma_m = mu(self.d1, self.n1) - mu(self.d2, self.n2);
        let sigma_max = if self.n1 == self.n2 {
            None
        } else {
            let factor =
                Rational64::one() + Rational64::new(self.n1 + self.n2, (self.n1 - self.n2).abs());
            Some(factor * sigma_m)
        };
        let criticals = match self.ranks() {
            (3, 1) => self
                .criticals_31()
                .into_iter()
                .map(|(_, s)| s.into())
                .collect(),
            (2, 1) => self
                .criticals_21()
                .into_iter()
                .map(|(_, s)| s.into())
                .collect(),
            _ => Vec::new(),
        };
        SigmaRange {
            sigma_m,
            sigma_max,
            criticals,
        }
    }

    /// Pairs `(n, σ_n = 2n - d1 - d2)` with `2d1/3 < n <= d1 - d2`.
    pub fn criticals_31(&self) -> Vec<(i64, i64)> {
        let lo = (2 * self.d1).div_euclid(3) + 1;
        (lo..=self.d1 - self.d2)
            .map(|n| (n, 2 * n - self.d1 - self.d2))
            .collect()
    }

    /// Pairs `(d_M, σ_c = 3 d_M - d1 - d2)` with `d1/2 < d_M <= d1 - d2`.
    pub fn criticals_21(&self) -> Vec<(i64, i64)> {
        let lo = self.d1.div_euclid(2) + 1;
        (lo..=self.d1 - self.d2)
            .map(|dm| (dm, 3 * dm - self.d1 - self.d2))
            .collect()
    }

    /// Open chambers `(lower, upper)`: from `σ_m` to the first critical, then between
    /// consecutive criticals.
    pub fn chambers(&self) -> Vec<(Rational64, Rational64)> {
        let range = self.sigma_range();
        let mut lower = range.sigma_m;
        let mut out = Vec::new();
        for &c in &range.criticals {
            out.push((lower, c));
            lower = c;
        }
        out
    }

    /// The midpoint of the 1-based chamber `k`.
    pub fn chamber_sigma(&self, k: usize) -> Result<Rational64> {
        let chambers = self.chambers();
        if k == 0 || k > chambers.len() {
            return Err(HodgeError::OutOfRange(format!(
                "chamber {k} does not exist for {self}; valid chambers are 1..={}",
                chambers.len()
            )));
        }
        let (lo, hi) = chambers[k - 1];
        Ok((lo + hi) / Rational64::from_integer(2))
    }

    pub fn locate(&self, sigma: Rational64) -> SigmaPosition {
        let range = self.sigma_range();
        if sigma < range.sigma_m {
            return SigmaPosition::BelowRange;
        }
        if sigma == range.sigma_m {
            return SigmaPosition::AtMinimum;
        }
        if range.criticals.contains(&sigma) {
            return SigmaPosition::Critical;
        }
        match range.criticals.iter().position(|&c| sigma < c) {
            Some(i) => SigmaPosition::Chamber(i + 1),
            None => SigmaPosition::AboveRange,
        }
    }

    /// Chamber metadata for a σ that lies inside a chamber.
    pub fn chamber_of(&self, sigma: Rational64) -> Option<Chamber> {
        let SigmaPosition::Chamber(index) = self.locate(sigma) else {
            return None;
        };
        let (lower, upper) = self.chambers()[index - 1];
        Some(Chamber {
            index: Some(index),
            sigma,
            lower,
            upper: Some(upper),
        })
    }

    pub fn critical_error(&self, sigma: Rational64) -> HodgeError {
        let list: Vec<String> = self
            .sigma_range()
            .criticals
            .iter()
            .map(|c| c.to_string())
            .collect();
        HodgeError::CriticalSigma {
            sigma,
            triple: self.to_string(),
            criticals: list.join(","),
        }
    }
}

/// `χ(T'', T')` for triples `T''` (here `tq`) and `T'` (here `ts`) over the same curve.
pub fn chi_triples(tq: &TripleType, ts: &TripleType) -> Result<i64> {
    if tq.g != ts.g {
        return Err(HodgeError::InvalidInput(format!(
            "triples over different genera: {} and {}",
            tq.g, ts.g
        )));
    }
    let (a1, a2, e1, e2) = (tq.n1, tq.n2, tq.d1, tq.d2);
    let (b1, b2, f1, f2) = (ts.n1, ts.n2, ts.d1, ts.d2);
    Ok(
        (1 - tq.g) * (a1 * b1 + a2 * b2 - a2 * b1) + a1 * f1 - b1 * e1 + a2 * f2
            - b2 * e2
            - a2 * f1
            + b1 * e2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn ranges() {
        let t = TripleType::rank31(2, 5, 0).unwrap();
        let range = t.sigma_range();
        assert_eq!(range.sigma_m, r(5, 3));
        assert_eq!(range.sigma_max, Some(r(5, 1)));
        assert!(TripleType::rank31(2, 2, 1)
            .unwrap()
            .sigma_range()
            .is_empty());
        let t = TripleType::rank21(3, 7, 1).unwrap();
        let range = t.sigma_range();
        assert_eq!(range.sigma_m, r(7, 2) - r(1, 1));
        assert_eq!(range.sigma_max, Some(r(14 - 4, 1)));
        assert_eq!(
            TripleType::new(1, 1, 3, 1, 2)
                .unwrap()
                .sigma_range()
                .sigma_max,
            None
        );
    }

    #[test]
    fn invalid_types() {
        assert!(TripleType::new(3, 1, 5, 0, 1).is_err());
        assert!(TripleType::new(0, 0, 5, 0, 2).is_err());
    }

    #[test]
    fn criticals() {
        let crit = |d1, d2| TripleType::rank31(2, d1, d2).unwrap().criticals_31();
        assert_eq!(crit(5, 0), vec![(4, 3), (5, 5)]);
        assert_eq!(crit(6, 0), vec![(5, 4), (6, 6)]);
        assert_eq!(crit(3, 1), vec![]);
        for d1 in 1..12 {
            for d2 in -2..3 {
                let t = TripleType::rank31(2, d1, d2).unwrap();
                let range = t.sigma_range();
                for c in &range.criticals {
                    assert!(*c > range.sigma_m && Some(*c) <= range.sigma_max);
                }
                if d1 > 3 * d2 {
                    assert_eq!(range.criticals.last().copied(), range.sigma_max);
                }
                let t = TripleType::rank21(2, d1, d2).unwrap();
                let range = t.sigma_range();
                for c in &range.criticals {
                    assert!(*c > range.sigma_m && Some(*c) <= range.sigma_max);
                }
            }
        }
    }

    #[test]
    fn chamber_lookup() {
        let t = TripleType::rank31(2, 5, 0).unwrap();
        assert_eq!(t.chambers(), vec![(r(5, 3), r(3, 1)), (r(3, 1), r(5, 1))]);
        assert_eq!(t.chamber_sigma(1).unwrap(), r(7, 3));
        assert_eq!(t.chamber_sigma(2).unwrap(), r(4, 1));
        assert!(t.chamber_sigma(0).is_err());
        assert!(t.chamber_sigma(3).is_err());
        assert_eq!(t.locate(r(7, 2)), SigmaPosition::Chamber(2));
        assert_eq!(t.locate(r(3, 1)), SigmaPosition::Critical);
        assert_eq!(t.locate(r(5, 3)), SigmaPosition::AtMinimum);
        assert_eq!(t.locate(r(1, 1)), SigmaPosition::BelowRange);
        assert_eq!(t.locate(r(6, 1)), SigmaPosition::AboveRange);
        let msg = t.critical_error(r(3, 1)).to_string();
        assert_eq!(
            msg,
            "sigma=3 is critical for (3,1,5,0); criticals are {3,5}; pass a chamber or a non-critical rational"
        );
    }

    #[test]
    fn chi_values_for_flip_types() {
        for g in 2..5 {
            for d1 in 4..10 {
                for d2 in 0..2 {
                    let t = TripleType::rank31(g, d1, d2).unwrap();
                    for (n, _) in t.criticals_31() {
                        let n1 = d1 - d2 - n;
                        let two_n2 = 2 * (g - 1 - d1) + 3 * n;
                        let a = TripleType::new(1, 1, d1 - n, d2, g).unwrap();
                        let b = TripleType::new(2, 0, n, 0, g).unwrap();
                        assert_eq!(-chi_triples(&a, &b).unwrap(), 2 * n1);
                        assert_eq!(-chi_triples(&b, &a).unwrap(), two_n2);
                    }
                }
            }
        }
        let l = TripleType::new(1, 0, 3, 0, 4).unwrap();
        assert_eq!(chi_triples(&l, &l).unwrap(), 1 - 4);
        let other = TripleType::new(1, 0, 3, 0, 3).unwrap();
        assert!(chi_triples(&l, &other).is_err());
    }
}
