//! Quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{HodgeError, Result};
use crate::laurent::LaurentPoly;

/// `num / den` with `den != 0`. Equality is by cross-multiplication.
#[derive(Clone)]
pub struct FractionUV {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FractionUV {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(HodgeError::DivisionByZero);
        }
        Ok(FractionUV { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FractionUV {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        FractionUV::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        FractionUV::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn has_unit_den(&self) -> bool {
        self.den.is_one()
    }

    /// Moves monomial content of both parts into the numerator, fixes the sign of
    /// the denominator, and collapses the denominator when it divides exactly.
    pub fn normalize(&self) -> FractionUV {
        if self.num.is_zero() {
            return FractionUV::zero();
        }
        let (mn, num) = self.num.monomial_content();
        let (md, den) = self.den.monomial_content();
        let mut num = num.shift(mn.a - md.a, mn.b - md.b);
        let mut den = den;
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        match num.exact_div(&den) {
            Ok(q) => FractionUV::from_poly(q),
            Err(_) => FractionUV { num, den },
        }
    }

    /// The value as a Laurent polynomial, failing if the denominator does not divide.
    pub fn into_poly(self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            return Ok(self.num);
        }
        self.num.exact_div(&self.den)
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.clone().into_poly()
    }

    pub fn scale(&self, c: &BigInt) -> FractionUV {
        FractionUV {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> FractionUV {
        FractionUV {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn div_poly(&self, p: &LaurentPoly) -> Result<FractionUV> {
        if p.is_zero() {
            return Err(HodgeError::DivisionByZero);
        }
        Ok(FractionUV {
            num: self.num.clone(),
            den: &self.den * p,
        })
    }

    pub fn recip(&self) -> Result<FractionUV> {
        FractionUV::new(self.den.clone(), self.num.clone())
    }
}

impl From<LaurentPoly> for FractionUV {
    fn from(p: LaurentPoly) -> Self {
        FractionUV::from_poly(p)
    }
}

impl PartialEq for FractionUV {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FractionUV {}

impl fmt::Display for FractionUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FractionUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FractionUV({self})")
    }
}

impl Neg for &FractionUV {
    type Output = FractionUV;
    fn neg(self) -> FractionUV {
        FractionUV {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

fn combine(a: &FractionUV, b: &FractionUV, negate_b: bool) -> FractionUV {
    let sign = |p: LaurentPoly| if negate_b { -p } else { p };
    if a.den == b.den {
        let num = if negate_b {
            &a.num - &b.num
        } else {
            &a.num + &b.num
        };
        return FractionUV {
            num,
            den: a.den.clone(),
        };
    }
    if b.den.is_one() {
        return FractionUV {
            num: &a.num + &sign(&b.num * &a.den),
            den: a.den.clone(),
        };
    }
    if a.den.is_one() {
        return FractionUV {
            num: &(&a.num * &b.den) + &sign(b.num.clone()),
            den: b.den.clone(),
        };
    }
    FractionUV {
        num: &(&a.num * &b.den) + &sign(&b.num * &a.den),
        den: &a.den * &b.den,
    }
}

impl Add for &FractionUV {
    type Output = FractionUV;
    fn add(self, rhs: &FractionUV) -> FractionUV {
        combine(self, rhs, false)
    }
}

impl Sub for &FractionUV {
    type Output = FractionUV;
    fn sub(self, rhs: &FractionUV) -> FractionUV {
        combine(self, rhs, true)
    }
}

impl Mul for &FractionUV {
    type Output = FractionUV;
    fn mul(self, rhs: &FractionUV) -> FractionUV {
        let den = if self.den.is_one() {
            rhs.den.clone()
        } else if rhs.den.is_one() {
            self.den.clone()
        } else {
            &self.den * &rhs.den
        };
        FractionUV {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for FractionUV {
            type Output = FractionUV;
            fn $method(self, rhs: FractionUV) -> FractionUV {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FractionUV> for FractionUV {
            type Output = FractionUV;
            fn $method(self, rhs: &FractionUV) -> FractionUV {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FractionUV {
    type Output = FractionUV;
    fn neg(self) -> FractionUV {
        -&self
    }
}

impl std::iter::Sum for FractionUV {
    fn sum<I: Iterator<Item = FractionUV>>(iter: I) -> FractionUV {
        iter.fold(FractionUV::zero(), |acc, f| &acc + &f)
    }
}
