//! Growth rate and root dominance for `g(t) = (C_p - 1)(C_q - 1) - 1`.
//!
//! The radius of convergence of the growth series is the smallest positive
//! zero `r0` of `g`, and the growth rate is `omega = 1 / r0`. The dominance
//! check compares `omega` with the other zeros of `g*`, the reciprocal
//! polynomial of `-g`; it does not extract the minimal polynomial of
//! `omega`, so it certifies dominance over the zeros of `g*` only.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formulas::{denominator_g, TorusParams};
use crate::group::SphereCounts;
use crate::polyring::Polynomial;

/// Every certified radius returned by [`all_roots`] is below this.
pub const ROOT_RADIUS: f64 = 1e-9;
/// Default separation between `omega` and the other zeros of `g*`.
pub const DEFAULT_MARGIN: f64 = 1e-7;

const MAX_ITERATIONS: usize = 500;

/// A complex root approximation; the true root lies within `radius` of
/// `re + i im`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEstimate {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
}

impl RootEstimate {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PERRON_DOMINANT")]
    PerronDominant,
    #[serde(rename = "EQUAL_MODULUS_DETECTED")]
    EqualModulusDetected,
    #[serde(rename = "NOT_APPLICABLE_2_2")]
    NotApplicable22,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::PerronDominant => "PERRON_DOMINANT",
            Verdict::EqualModulusDetected => "EQUAL_MODULUS_DETECTED",
            Verdict::NotApplicable22 => "NOT_APPLICABLE_2_2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerronReport {
    pub p: u32,
    pub q: u32,
    #[serde(serialize_with = "twelve_digits")]
    pub r0: f64,
    #[serde(serialize_with = "twelve_digits")]
    pub omega: f64,
    pub lemma_gcd: u64,
    /// `omega` minus the largest modulus among the other zeros of `g*`.
    #[serde(serialize_with = "twelve_digits")]
    pub dominance_margin: f64,
    pub verdict: Verdict,
}

/// Rounds to 12 significant digits.
pub fn round_significant(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn twelve_digits<S: Serializer>(x: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_f64(round_significant(*x))
}

/// Gcd of the degrees `k >= 1` with a nonzero coefficient.
pub fn support_gcd(a: &Polynomial) -> Result<u64> {
    a.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, _)| k as u64)
        .reduce(|acc, k| acc.gcd(&k))
        .ok_or(Error::NoPositiveDegreeTerms)
}

/// The zero of `g` in `(0, 1)` by bisection, for `g(0) < 0 < g(1)` and `g`
/// increasing on `(0, 1)`.
pub fn smallest_positive_root(g: &Polynomial, tol: f64) -> Result<f64> {
    let at_zero = g.coeff(0);
    let at_one = g.eval(&BigInt::from(1));
    if !at_zero.is_negative() || !at_one.is_positive() {
        return Err(Error::RootNotBracketed {
            at_zero: at_zero.to_f64().unwrap_or(f64::NAN),
            at_one: at_one.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g.eval_f64(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `omega = 1 / r0`, and exactly 1 for `(2, 2)` where `g(1) = 0`.
pub fn growth_rate(params: TorusParams, tol: f64) -> f64 {
    if (params.p(), params.q()) == (2, 2) {
        return 1.0;
    }
    let r0 = smallest_positive_root(&denominator_g(params), tol)
        .expect("g(0) = -1 and g(1) > 0 away from (2, 2)");
    1.0 / r0
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

/// A bound on the rounding error of evaluating `a(z)` by Horner's rule.
fn horner_error(coeffs: &[f64], z: Complex64) -> f64 {
    let n = coeffs.len() as f64;
    let gamma = 4.0 * n * f64::EPSILON;
    let r = z.norm();
    let abs_sum = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs());
    gamma * abs_sum
}

/// Inclusion radii `deg * (|a(z_i)| + err) / (|lc| prod_{j != i} |z_i - z_j|)`.
/// The union of these discs contains every root, and an isolated disc
/// contains exactly one.
fn inclusion_radii(coeffs: &[f64], z: &[Complex64]) -> Vec<f64> {
    let n = z.len() as f64;
    let lead = coeffs.last().copied().unwrap_or(1.0).abs();
    z.iter()
        .enumerate()
        .map(|(i, &zi)| {
            let (value, _) = horner(coeffs, zi);
            let denom: f64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| (zi - zj).norm())
                .product();
            n * (value.norm() + horner_error(coeffs, zi)) / (lead * denom)
        })
        .collect()
}

/// Roots of a square-free polynomial by Aberth-Ehrlich iteration, each
/// with its inclusion radius.
fn simple_roots(a: &Polynomial) -> Result<Vec<RootEstimate>> {
    let degree = a.degree().unwrap_or(0);
    let coeffs = a.to_f64s();
    let lead = coeffs[degree];
    // Cauchy bound on root moduli
    let bound = 1.0
        + coeffs[..degree]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / degree as f64 + 0.4;
            Complex64::from_polar(0.5 * bound, angle)
        })
        .collect();
    let mut worst = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        for i in 0..degree {
            let (value, deriv) = horner(&coeffs, z[i]);
            if value.norm() == 0.0 {
                continue;
            }
            let newton = value / deriv;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.is_finite() {
                z[i] -= step;
            }
        }
        let radii = inclusion_radii(&coeffs, &z);
        worst = radii.iter().copied().fold(0.0, f64::max);
        if worst < ROOT_RADIUS {
            return Ok(z
                .iter()
                .zip(radii)
                .map(|(zi, radius)| RootEstimate {
                    re: zi.re,
                    im: zi.im,
                    radius,
                })
                .collect());
        }
    }
    Err(Error::RootsNotCertified {
        iterations: MAX_ITERATIONS,
        worst_radius: worst,
    })
}

/// All complex roots, repeated by multiplicity, each certified within a
/// radius below [`ROOT_RADIUS`]. Repeated roots are split off exactly by a
/// square-free decomposition, so the iteration only meets simple roots.
pub fn all_roots(a: &Polynomial) -> Result<Vec<RootEstimate>> {
    let degree = a.degree().unwrap_or(0);
    if degree < 1 {
        return Err(Error::ConstantPolynomial(degree));
    }
    let mut roots = Vec::with_capacity(degree);
    for (i, factor) in a.square_free_factors()?.iter().enumerate() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for root in simple_roots(factor)? {
            roots.extend(std::iter::repeat_n(root, i + 1));
        }
    }
    debug_assert_eq!(roots.len(), degree);
    Ok(roots)
}

/// The reciprocal of `-g`, which is monic since `g(0) = -1`.
pub fn reciprocal_g(params: TorusParams) -> Polynomial {
    (-denominator_g(params)).reciprocal().expect("g is nonzero")
}

/// Computes `r0`, `omega`, the support gcd of `g`, and compares `omega`
/// with the other zeros of `g*`.
pub fn perron_check(params: TorusParams, margin: f64) -> Result<PerronReport> {
    let g = denominator_g(params);
    let lemma_gcd = support_gcd(&g)?;
    let degenerate = (params.p(), params.q()) == (2, 2);
    let (r0, omega) = if degenerate {
        (1.0, 1.0)
    } else {
        let r0 = smallest_positive_root(&g, 1e-15)?;
        (r0, 1.0 / r0)
    };
    let roots = all_roots(&reciprocal_g(params))?;
    let nearest = roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (a.value() - omega)
                .norm()
                .total_cmp(&(b.value() - omega).norm())
        })
        .map(|(i, _)| i)
        .expect("degree >= 2");
    // largest modulus among the others, pushed outward by its radius
    let others_max = roots
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != nearest)
        .map(|(_, r)| r.modulus() + r.radius)
        .fold(0.0, f64::max);
    let dominance_margin = omega - others_max;
    let verdict = if degenerate {
        Verdict::NotApplicable22
    } else if dominance_margin > margin {
        Verdict::PerronDominant
    } else {
        Verdict::EqualModulusDetected
    };
    Ok(PerronReport {
        p: params.p(),
        q: params.q(),
        r0,
        omega,
        lemma_gcd,
        dominance_margin,
        verdict,
    })
}

/// Reports for every `2 <= p <= q <= max_pq`, computed in parallel and
/// returned sorted by `(p, q)`.
pub fn perron_scan(max_pq: u32, margin: f64) -> Result<Vec<PerronReport>> {
    let pairs: Vec<TorusParams> = (2..=max_pq)
        .flat_map(|p| (p..=max_pq).map(move |q| (p, q)))
        .map(|(p, q)| TorusParams::new(p, q))
        .collect::<Result<_>>()?;
    let mut reports = pairs
        .into_par_iter()
        .map(|params| perron_check(params, margin))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| (r.p, r.q));
    Ok(reports)
}

/// `a_N^(1/N)`, a convergence diagnostic for the growth rate. `None` for
/// `N < 4`.
pub fn empirical_rate(counts: &SphereCounts) -> Option<f64> {
    let n = counts.order();
    if n < 4 {
        return None;
    }
    Some((counts.counts[n] as f64).powf(1.0 / n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::sphere_counts_bfs;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn tp(p: u32, q: u32) -> TorusParams {
        TorusParams::new(p, q).unwrap()
    }

    fn sorted_real_parts(roots: &[RootEstimate]) -> Vec<f64> {
        let mut v: Vec<f64> = roots.iter().map(|r| r.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn support_gcd_examples() {
        assert_eq!(support_gcd(&p(&[-1, 0, 2])), Ok(2));
        assert_eq!(support_gcd(&p(&[-1, 0, 2, 1])), Ok(1));
        assert_eq!(support_gcd(&p(&[-1, 0, 1])), Ok(2));
        assert_eq!(support_gcd(&p(&[-1])), Err(Error::NoPositiveDegreeTerms));
    }

    #[test]
    fn bisection_examples() {
        let r = smallest_positive_root(&p(&[-1, 0, 2]), 1e-12).unwrap();
        assert!((r - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        let r = smallest_positive_root(&p(&[-1, 0, 4]), 1e-12).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        assert!(matches!(
            smallest_positive_root(&p(&[-1, 0, 1]), 1e-12),
            Err(Error::RootNotBracketed { .. })
        ));
    }

    #[test]
    fn growth_rate_examples() {
        assert_eq!(growth_rate(tp(2, 2), 1e-12), 1.0);
        assert!((growth_rate(tp(2, 3), 1e-13) - 2f64.sqrt()).abs() < 1e-9);
        assert!((growth_rate(tp(3, 3), 1e-13) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rates_grow_with_exponents() {
        let omega = |a, b| growth_rate(tp(a, b), 1e-13);
        for a in 2..=12 {
            for b in 2..=12 {
                if (a, b) != (2, 2) {
                    let g = denominator_g(tp(a, b));
                    let r0 = smallest_positive_root(&g, 1e-12).unwrap();
                    assert!(g.eval_f64(r0).abs() < 1e-9);
                    assert!(omega(a, b) > 1.0);
                }
                if a < 12 {
                    assert!(omega(a + 1, b) >= omega(a, b) - 1e-12);
                }
                if b < 12 {
                    assert!(omega(a, b + 1) >= omega(a, b) - 1e-12);
                }
            }
        }
    }

    #[test]
    fn roots_examples() {
        let s = 2f64.sqrt();
        let roots = all_roots(&p(&[-2, 0, 1])).unwrap();
        let re = sorted_real_parts(&roots);
        assert!((re[0] + s).abs() < 1e-9 && (re[1] - s).abs() < 1e-9);
        let roots = all_roots(&p(&[-2, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re - 2.0).abs() < 1e-9);
        let re = sorted_real_parts(&all_roots(&p(&[-1, 0, 4])).unwrap());
        assert!((re[0] + 0.5).abs() < 1e-9 && (re[1] - 0.5).abs() < 1e-9);
        assert_eq!(all_roots(&p(&[3])), Err(Error::ConstantPolynomial(0)));
        for r in all_roots(&p(&[-1, 3, 0, 2, -5, 1])).unwrap() {
            assert!(r.radius < ROOT_RADIUS);
        }
        // g* for (4, 4): t^4 - 4t^2 - 4t - 1 = (t + 1)^2 (t^2 - 2t - 1)
        let roots = all_roots(&p(&[-1, -4, -4, 0, 1])).unwrap();
        assert_eq!(roots.len(), 4);
        let re = sorted_real_parts(&roots);
        let want = [-1.0, -1.0, 1.0 - 2f64.sqrt(), 1.0 + 2f64.sqrt()];
        for (got, want) in re.iter().zip(want) {
            assert!((got - want).abs() < 1e-9, "{re:?}");
        }
    }

    #[test]
    fn reciprocal_roots_are_inverse_roots() {
        for (a, b) in [(2, 4), (3, 5), (4, 7), (6, 6), (5, 12)] {
            let g = denominator_g(tp(a, b));
            let mut inv: Vec<Complex64> = all_roots(&g)
                .unwrap()
                .iter()
                .map(|r| r.value().inv())
                .collect();
            let star = all_roots(&reciprocal_g(tp(a, b))).unwrap();
            assert_eq!(inv.len(), star.len());
            for s in &star {
                let (k, d) = inv
                    .iter()
                    .enumerate()
                    .map(|(k, z)| (k, (z - s.value()).norm()))
                    .min_by(|x, y| x.1.total_cmp(&y.1))
                    .unwrap();
                assert!(d < 1e-8, "({a}, {b}) root {s:?} off by {d}");
                inv.swap_remove(k);
            }
        }
    }

    #[test]
    fn reciprocal_of_g_is_monic() {
        for (a, b) in [(2, 3), (4, 4), (7, 9)] {
            assert_eq!(reciprocal_g(tp(a, b)).leading(), Some(&BigInt::from(1)));
        }
        assert_eq!(reciprocal_g(tp(2, 3)), p(&[-2, 0, 1]));
    }

    #[test]
    fn perron_examples() {
        let r = perron_check(tp(2, 4), DEFAULT_MARGIN).unwrap();
        assert_eq!(r.verdict, Verdict::PerronDominant);
        assert_eq!(r.lemma_gcd, 1);
        assert!((r.omega * r.r0 - 1.0).abs() < 1e-9);

        let r = perron_check(tp(2, 3), DEFAULT_MARGIN).unwrap();
        assert_eq!(r.verdict, Verdict::EqualModulusDetected);
        assert_eq!(r.lemma_gcd, 2);

        let r = perron_check(tp(2, 2), DEFAULT_MARGIN).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable22);
        assert_eq!(r.omega, 1.0);
    }

    #[test]
    fn lemma_gcd_boundary() {
        for report in perron_scan(12, DEFAULT_MARGIN).unwrap() {
            let exceptional = matches!((report.p, report.q), (2, 2) | (2, 3) | (3, 3));
            assert_eq!(report.lemma_gcd == 1, !exceptional, "{report:?}");
            if report.lemma_gcd == 1 {
                assert_eq!(report.verdict, Verdict::PerronDominant, "{report:?}");
            }
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = perron_check(tp(2, 3), DEFAULT_MARGIN).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(
            r#"{"p":2,"q":3,"r0":0.707106781187,"omega":1.41421356237,"lemma_gcd":2,"#
        ));
        assert!(s.ends_with(r#""verdict":"EQUAL_MODULUS_DETECTED"}"#));
        let back: PerronReport = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn empirical_rate_examples() {
        let c = sphere_counts_bfs(tp(2, 2), 12).unwrap();
        assert_eq!(c.counts[12], 72);
        let rate = empirical_rate(&c).unwrap();
        assert!((rate - 72f64.powf(1.0 / 12.0)).abs() < 1e-12);
        // The double pole at r0 makes a_n grow like n * omega^n, so the
        // diagnostic approaches sqrt(2) from above, and slowly.
        let c = sphere_counts_bfs(tp(2, 3), 16).unwrap();
        let rate = |n: usize| {
            empirical_rate(&SphereCounts {
                counts: c.counts[..=n].to_vec(),
                ..c.clone()
            })
            .unwrap()
        };
        assert_eq!(c.counts[12], 1524);
        assert!((rate(12) - 1524f64.powf(1.0 / 12.0)).abs() < 1e-12);
        for n in 4..16 {
            assert!(rate(n).is_finite() && rate(n) > rate(n + 1));
            assert!(rate(n + 1) > 2f64.sqrt());
        }
        assert_eq!(
            empirical_rate(&sphere_counts_bfs(tp(2, 3), 3).unwrap()),
            None
        );
    }
}
