//! Named growth polynomials and the three assemblies of the growth function
//! of `<x, y, z | x^p = y^q = z>`: the closed two-term formula, the
//! amalgamated-product combination (both exponents odd), and the sums over
//! classes of minimal normal words (at least one exponent even).

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RationalFunction};

/// The exponent pair `(p, q)`, both at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusParams {
    p: u32,
    q: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityCase {
    OddOdd,
    EvenOdd,
    OddEven,
    EvenEven,
}

impl TorusParams {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidParams { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn swapped(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    pub fn parity(&self) -> ParityCase {
        match (self.p.is_multiple_of(2), self.q.is_multiple_of(2)) {
            (false, false) => ParityCase::OddOdd,
            (true, false) => ParityCase::EvenOdd,
            (false, true) => ParityCase::OddEven,
            (true, true) => ParityCase::EvenEven,
        }
    }

    fn cp(&self) -> Polynomial {
        cyclic_growth_poly(self.p).expect("validated order")
    }

    fn cq(&self) -> Polynomial {
        cyclic_growth_poly(self.q).expect("validated order")
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Growth polynomial of the cyclic group of order `n` on one generator:
/// `1 + 2t + ... + 2t^((n-1)/2)` for odd `n`, and
/// `1 + 2t + ... + 2t^(n/2-1) + t^(n/2)` for even `n`.
pub fn cyclic_growth_poly(n: u32) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let half = (n / 2) as usize;
    let mut coeffs = vec![BigInt::from(2); half + 1];
    coeffs[0] = BigInt::from(1);
    if n.is_multiple_of(2) {
        coeffs[half] = BigInt::from(1);
    }
    Ok(Polynomial::new(coeffs))
}

/// `(1 + t) / (1 - t)`, the growth series of the integers.
pub fn infinite_cyclic_growth() -> RationalFunction {
    RationalFunction::new(
        Polynomial::from_i64s(&[1, 1]),
        Polynomial::from_i64s(&[1, -1]),
    )
    .expect("nonzero denominator")
}

/// `t^(r/2)` for even `r`, zero for odd `r`.
pub fn half_power(r: u32) -> Polynomial {
    if r.is_multiple_of(2) {
        Polynomial::monomial(1, (r / 2) as usize)
    } else {
        Polynomial::zero()
    }
}

/// `g(t) = (C_p - 1)(C_q - 1) - 1`. Its negation is the common denominator
/// `C_p + C_q - C_p C_q` of every assembly below.
pub fn denominator_g(params: TorusParams) -> Polynomial {
    let one = Polynomial::one();
    &(&(params.cp() - &one) * &(params.cq() - &one)) - &one
}

/// `C_p + C_q - C_p C_q`, the same polynomial as `-g` computed without `g`.
fn amalgam_denominator(cp: &Polynomial, cq: &Polynomial) -> Polynomial {
    &(cp + cq) - &(cp * cq)
}

/// The closed growth function
///
/// ```text
/// A = C_inf C_p C_q / S + (m_q C_p^2 + m_p C_q^2) / S^2,   S = C_p + C_q - C_p C_q
/// ```
///
/// where `m_r` is [`half_power`].
pub fn main_growth_function(params: TorusParams) -> RationalFunction {
    let (cp, cq) = (params.cp(), params.cq());
    let s = amalgam_denominator(&cp, &cq);
    let first =
        &infinite_cyclic_growth() * &RationalFunction::new(&cp * &cq, s.clone()).expect("S(0) = 1");
    let second_num = &(&half_power(params.q) * &cp.pow(2)) + &(&half_power(params.p) * &cq.pow(2));
    let second = RationalFunction::new(second_num, s.pow(2)).expect("S(0) = 1");
    &first + &second
}

/// Growth function `A` of `H *_L K` from those of `H`, `K`, `L`:
/// `1/A = 1/B + 1/C - 1/D`.
pub fn fpa_combine(
    b: &RationalFunction,
    c: &RationalFunction,
    d: &RationalFunction,
) -> Result<RationalFunction> {
    if b.is_zero() || c.is_zero() || d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let inv = &(&b.recip()? + &c.recip()?) - &d.recip()?;
    if inv.is_zero() {
        return Err(Error::DegenerateCombination);
    }
    inv.recip()
}

/// Both exponents odd: `X_p *_<z> Y_q` with `B = C_inf C_p`,
/// `C = C_inf C_q`, `D = C_inf`.
pub fn growth_odd_odd(params: TorusParams) -> Result<RationalFunction> {
    if params.parity() != ParityCase::OddOdd {
        return Err(Error::ParityViolation {
            p: params.p,
            q: params.q,
            expected: "odd-odd",
        });
    }
    let cinf = infinite_cyclic_growth();
    let b = &cinf * &RationalFunction::from(params.cp());
    let c = &cinf * &RationalFunction::from(params.cq());
    fpa_combine(&b, &c, &cinf)
}

/// For `p = 2n`: `D_p = 2t + ... + 2t^(n-1)` (zero when `n = 1`) and
/// `E_p = t^n`, so that `D_p + E_p = C_p - 1`.
pub fn de_polys(p: u32) -> Result<(Polynomial, Polynomial)> {
    if p < 2 {
        return Err(Error::InvalidOrder(p));
    }
    if !p.is_multiple_of(2) {
        return Err(Error::OddExponent(p));
    }
    let n = (p / 2) as usize;
    let mut d = vec![BigInt::from(2); n];
    d[0] = BigInt::from(0);
    Ok((Polynomial::new(d), Polynomial::monomial(1, n)))
}

/// `F^(r) = sum_{k=0}^r (k+1) C(r,k) D_p^(r-k) E_p^k`, term by term.
pub fn f_direct(p: u32, r: u32) -> Result<Polynomial> {
    let (d, e) = de_polys(p)?;
    let mut acc = Polynomial::zero();
    for k in 0..=r {
        let weight = BigInt::from(k + 1) * binomial(BigInt::from(r), BigInt::from(k));
        let term = &d.pow(r - k) * &e.pow(k);
        acc = &acc + &term.scale(&weight);
    }
    Ok(acc)
}

/// `F^(r) = (C_p - 1)^r + r E_p (C_p - 1)^(r-1)`, with `F^(0) = 1`.
pub fn f_closed(p: u32, r: u32) -> Result<Polynomial> {
    let (_, e) = de_polys(p)?;
    if r == 0 {
        return Ok(Polynomial::one());
    }
    let cm1 = cyclic_growth_poly(p)? - Polynomial::one();
    let tail = &(&e * &cm1.pow(r - 1)).scale(&BigInt::from(r));
    Ok(&cm1.pow(r) + tail)
}

/// Class-wise growth functions for `p` even, `q` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOddComponents {
    /// Words `z^i u` with `i > 0`.
    pub a1: RationalFunction,
    /// Words with `i < 0`; equal to `a1`.
    pub a2: RationalFunction,
    /// `i = 0`, first syllable nontrivial.
    pub a3: RationalFunction,
    /// `i = 0`, first syllable trivial.
    pub a4: RationalFunction,
}

impl EvenOddComponents {
    pub fn sum(&self) -> RationalFunction {
        &(&(&self.a1 + &self.a2) + &self.a3) + &self.a4
    }
}

/// Class-wise growth functions for `p`, `q` both even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenEvenComponents {
    pub a1: RationalFunction,
    pub a2: RationalFunction,
    pub alpha: RationalFunction,
    pub beta: RationalFunction,
    /// The overlap of the `alpha` and `beta` classes.
    pub gamma: RationalFunction,
}

impl EvenEvenComponents {
    /// `A_1 + A_2 + A_alpha + A_beta - A_gamma`.
    pub fn assemble(&self) -> RationalFunction {
        &(&(&(&self.a1 + &self.a2) + &self.alpha) + &self.beta) - &self.gamma
    }
}

struct Shared {
    cp: Polynomial,
    cq: Polynomial,
    s: Polynomial,
    s2: Polynomial,
    positive_z: RationalFunction,
}

fn shared(params: TorusParams) -> Shared {
    let (cp, cq) = (params.cp(), params.cq());
    // 1 - (C_p - 1)(C_q - 1)
    let s = -denominator_g(params);
    let s2 = s.pow(2);
    // t / (1 - t) * C_p C_q / S
    let positive_z = RationalFunction::new(
        &Polynomial::t() * &(&cp * &cq),
        &Polynomial::from_i64s(&[1, -1]) * &s,
    )
    .expect("nonzero");
    Shared {
        cp,
        cq,
        s,
        s2,
        positive_z,
    }
}

fn frac(num: Polynomial, den: &Polynomial) -> RationalFunction {
    RationalFunction::new(num, den.clone()).expect("S(0) = 1")
}

pub fn components_even_odd(params: TorusParams) -> Result<EvenOddComponents> {
    if params.parity() != ParityCase::EvenOdd {
        return Err(Error::ParityViolation {
            p: params.p,
            q: params.q,
            expected: "even-odd",
        });
    }
    let Shared {
        cp,
        cq,
        s,
        s2,
        positive_z,
    } = shared(params);
    let (_, ep) = de_polys(params.p)?;
    let one = Polynomial::one();
    let a3 = frac(&(&cp - &one) * &cq, &s) + frac(&ep * &cq, &s2);
    let a4 = frac(cq.clone(), &s) + frac(&(&ep * &cq) * &(&cq - &one), &s2);
    Ok(EvenOddComponents {
        a1: positive_z.clone(),
        a2: positive_z,
        a3,
        a4,
    })
}

pub fn components_even_even(params: TorusParams) -> Result<EvenEvenComponents> {
    if params.parity() != ParityCase::EvenEven {
        return Err(Error::ParityViolation {
            p: params.p,
            q: params.q,
            expected: "even-even",
        });
    }
    let Shared {
        cp,
        cq,
        s,
        s2,
        positive_z,
    } = shared(params);
    let (_, ep) = de_polys(params.p)?;
    let (_, eq) = de_polys(params.q)?;
    let gamma = frac(&cp * &cq, &s);
    let alpha = &gamma + &frac(&ep * &cq.pow(2), &s2);
    let beta = &gamma + &frac(&eq * &cp.pow(2), &s2);
    Ok(EvenEvenComponents {
        a1: positive_z.clone(),
        a2: positive_z,
        alpha,
        beta,
        gamma,
    })
}

/// The parity-appropriate assembly, independent of [`main_growth_function`].
/// Odd-even pairs go through the even-odd components of the swapped pair,
/// since the group is symmetric in `x` and `y`.
pub fn parity_assembly(params: TorusParams) -> (&'static str, RationalFunction) {
    match params.parity() {
        ParityCase::OddOdd => (
            "odd-odd amalgam",
            growth_odd_odd(params).expect("parity checked"),
        ),
        ParityCase::EvenOdd => (
            "even-odd components",
            components_even_odd(params).expect("parity checked").sum(),
        ),
        ParityCase::OddEven => (
            "even-odd components (swapped)",
            components_even_odd(params.swapped())
                .expect("parity checked")
                .sum(),
        ),
        ParityCase::EvenEven => (
            "even-even components",
            components_even_even(params)
                .expect("parity checked")
                .assemble(),
        ),
    }
}

/// Growth function of `<x_1, ..., x_r, z | x_1^p_1 = ... = x_r^p_r = z>`
/// for odd orders, by folding the amalgam combination over the factors.
pub fn growth_generalized_odd(orders: &[u32]) -> Result<RationalFunction> {
    if orders.is_empty() || orders.iter().any(|&p| p < 3 || p % 2 == 0) {
        return Err(Error::InvalidOddList(orders.to_vec()));
    }
    let cinf = infinite_cyclic_growth();
    let factor = |p: u32| &cinf * &RationalFunction::from(cyclic_growth_poly(p).expect("p >= 3"));
    orders[1..].iter().try_fold(factor(orders[0]), |acc, &p| {
        fpa_combine(&acc, &factor(p), &cinf)
    })
}
