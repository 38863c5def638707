//! Univariate polynomials with exact rational coefficients, evaluated and
//! root-isolated in floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute width at which bisection stops.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Coefficients stored leading term first.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// From coefficients, leading term first. Leading zeros are stripped.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        let mut coeffs = coeffs[first..].to_vec();
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients as integers, if every one is integral.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn f64_coefficients(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.f64_coefficients(), x)
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let d = self.degree();
        if d == 0 {
            return Polynomial::from_integers(&[0]);
        }
        Polynomial::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(d - i)))
                .collect(),
        )
    }

    /// Cauchy bound: every real root lies in `[-b, b]`.
    pub fn root_bound(&self) -> f64 {
        let c = self.f64_coefficients();
        let lead = c[0].abs();
        1.0 + c[1..].iter().map(|a| a.abs() / lead).fold(0.0, f64::max)
    }

    /// All distinct real roots in ascending order. Roots of `p'` split the
    /// line into monotone pieces; each piece with a sign change holds one
    /// root, found by bisection. Critical points where `p` vanishes are
    /// reported as multiple roots.
    pub fn real_roots(&self) -> Vec<f64> {
        let c = self.f64_coefficients();
        if self.degree() == 0 {
            return Vec::new();
        }
        if self.degree() == 1 {
            return vec![-c[1] / c[0]];
        }
        let bound = self.root_bound();
        let mut marks = vec![-bound];
        let mut touching = Vec::new();
        for x in self.derivative().real_roots() {
            if x > -bound && x < bound {
                marks.push(x);
                if horner(&c, x).abs() <= 1e-12 * magnitude(&c, x) {
                    touching.push(x);
                }
            }
        }
        marks.push(bound);

        let mut roots = Vec::new();
        for w in marks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (fa, fb) = (horner(&c, a), horner(&c, b));
            if fa == 0.0 {
                roots.push(a);
            } else if fa.signum() != fb.signum() && fb != 0.0 {
                roots.push(bisect(&c, a, b));
            }
        }
        if horner(&c, bound) == 0.0 {
            roots.push(bound);
        }
        roots.extend(touching);
        roots.sort_by(f64::total_cmp);
        roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        roots
    }

    /// Largest real root within `bracket` (default: the Cauchy bound).
    pub fn largest_real_root(&self, bracket: Option<(f64, f64)>) -> Result<f64> {
        let (lo, hi) = bracket.unwrap_or_else(|| {
            let b = self.root_bound();
            (-b, b)
        });
        self.real_roots()
            .into_iter()
            .rev()
            .find(|&x| x >= lo - ROOT_TOLERANCE && x <= hi + ROOT_TOLERANCE)
            .ok_or(Error::NoRealRoot { lo, hi })
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &a| acc * x + a)
}

fn magnitude(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &a| acc * x.abs() + a.abs()).max(1.0)
}

fn bisect(c: &[f64], mut a: f64, mut b: f64) -> f64 {
    let sa = horner(c, a).signum();
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if b - a <= ROOT_TOLERANCE * 0.1 || mid == a || mid == b {
            break;
        }
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            let power = d - i;
            if c.is_zero() && d != 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Serialize for Polynomial {
    /// Serialized as the list of coefficients, leading first, each as a
    /// rational string such as `"-7"` or `"3/2"`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
