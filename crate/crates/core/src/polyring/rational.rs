use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use super::Polynomial;
use crate::error::{Error, Result};

/// A quotient of integer polynomials kept in canonical form: coprime over
/// the rationals, joint content 1, and a denominator whose highest-degree
/// coefficient is positive. Zero is `0/1`. Two equal functions therefore
/// have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Polynomial::gcd(&num, &den)?;
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Ok(Self {
            num: Polynomial::new(num.into_coeffs().into_iter().map(|a| a / &c).collect()),
            den: Polynomial::new(den.into_coeffs().into_iter().map(|a| a / &c).collect()),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(Polynomial::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn combine(&self, rhs: &Self, op: RfOp) -> Result<Self> {
        match op {
            RfOp::Add => Ok(self + rhs),
            RfOp::Sub => Ok(self - rhs),
            RfOp::Mul => Ok(self * rhs),
            RfOp::Div => self.checked_div(rhs),
        }
    }

    pub fn pow(&self, r: u32) -> Self {
        Self {
            num: self.num.pow(r),
            den: self.den.pow(r),
        }
        .renormalized()
    }

    /// Value at `t = 0`, as an exact fraction (numerator, denominator).
    pub fn value_at_zero(&self) -> Option<(BigInt, BigInt)> {
        let d = self.den.coeff(0);
        (!d.is_zero()).then(|| (self.num.coeff(0), d))
    }

    fn renormalized(self) -> Self {
        Self::new(self.num, self.den).expect("denominator stays nonzero")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one()).expect("unit denominator")
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: Polynomial,
            den: Polynomial,
        }
        let raw = Raw::deserialize(deserializer)?;
        Self::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
        .renormalized()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .renormalized()
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normal_form() {
        let f = rf(&[2, 0, -2], &[2, -2]);
        assert_eq!(f.num(), &p(&[1, 1]));
        assert_eq!(f.den(), &p(&[1]));
        // the numerator absorbs the sign
        let g = rf(&[1, 1], &[1, -1]);
        assert_eq!(g.num(), &p(&[-1, -1]));
        assert_eq!(g.den(), &p(&[-1, 1]));
        assert_eq!(rf(&[0], &[5, 1]), RationalFunction::zero());
        assert_eq!(rf(&[6], &[4]), rf(&[3], &[2]));
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn arithmetic() {
        let inv_one_minus = rf(&[1], &[1, -1]);
        let f = &inv_one_minus * &RationalFunction::from(p(&[1, 1]));
        assert_eq!(f, rf(&[1, 1], &[1, -1]));
        assert!((&f - &f).is_zero());
        assert_eq!(&inv_one_minus + &rf(&[1], &[1, 1]), rf(&[2], &[1, 0, -1]));
        assert_eq!(
            f.combine(&RationalFunction::zero(), RfOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(f.combine(&f, RfOp::Div).unwrap(), RationalFunction::one());
    }

    #[test]
    fn json_form() {
        let f = rf(&[1, 1], &[1, -1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["-1","-1"],"den":["-1","1"]}"#);
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["1"],"den":[]}"#).is_err());
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-6i64..=6, 0..4),
            prop::collection::vec(-6i64..=6, 1..4),
        )
            .prop_filter_map("nonzero den", |(n, d)| {
                RationalFunction::new(Polynomial::from_i64s(&n), Polynomial::from_i64s(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn canonical_across_routes(a in small_rf(), b in small_rf(), c in small_rf()) {
            // a*(b+c) and a*b + a*c reach the same stored pair
            let left = &a * &(&b + &c);
            let right = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(left.num(), right.num());
            prop_assert_eq!(left.den(), right.den());
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }
    }
}
