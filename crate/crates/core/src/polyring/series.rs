use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// Taylor coefficients `a_0 .. a_N` of a rational function at `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    terms: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn new(terms: Vec<BigInt>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.terms.get(n)
    }

    /// `N`, the highest index held.
    pub fn order(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.terms.clone())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.iter().all(|c| !c.is_negative())
    }
}

impl Serialize for SeriesPrefix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for SeriesPrefix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Exact rational Taylor coefficients `a_0 .. a_N` from the recurrence
/// `q_0 a_n = p_n - sum_{k>=1} q_k a_{n-k}`.
pub fn series_expand_rational(f: &RationalFunction, n: usize) -> Result<Vec<BigRational>> {
    let q0 = f.den().coeff(0);
    if q0.is_zero() {
        return Err(Error::VanishingConstantTerm);
    }
    let q0 = BigRational::from_integer(q0);
    let den: Vec<BigRational> = f
        .den()
        .coeffs()
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = BigRational::from_integer(f.num().coeff(i));
        for (k, qk) in den.iter().enumerate().skip(1).take_while(|(k, _)| *k <= i) {
            if !qk.is_zero() {
                acc -= qk * &out[i - k];
            }
        }
        out.push(acc / &q0);
    }
    Ok(out)
}

/// Integer Taylor coefficients `a_0 .. a_N`; fails if any coefficient is
/// not an integer.
pub fn series_expand(f: &RationalFunction, n: usize) -> Result<SeriesPrefix> {
    let q0 = f.den().coeff(0);
    if q0.is_zero() {
        return Err(Error::VanishingConstantTerm);
    }
    // Integer fast path; a nonzero remainder means some a_n is fractional,
    // which the rational route then reports at the right index.
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = f.num().coeff(i);
        for (k, qk) in f.den().coeffs().iter().enumerate().skip(1) {
            if k > i {
                break;
            }
            if !qk.is_zero() {
                acc -= qk * &out[i - k];
            }
        }
        let (a, r) = acc.div_rem(&q0);
        if !r.is_zero() {
            return integral_or_error(series_expand_rational(f, n)?);
        }
        out.push(a);
    }
    Ok(SeriesPrefix::new(out))
}

fn integral_or_error(terms: Vec<BigRational>) -> Result<SeriesPrefix> {
    terms
        .into_iter()
        .enumerate()
        .map(|(index, a)| {
            if a.is_integer() {
                Ok(a.to_integer())
            } else {
                Err(Error::NonIntegerCoefficient {
                    index,
                    value: a.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(SeriesPrefix::new)
}
