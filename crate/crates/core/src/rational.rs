//! Arbitrary-precision rationals with `p/q` formatting and
//! continued-fraction reconstruction of floating-point optima.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_ratio(num: u64, den: u64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_signed_ratio(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as i32))
    }

    /// Nearest-convergent rational with denominator at most `den_cap`,
    /// via the continued-fraction expansion of `x`. Returns `None` for
    /// non-finite input.
    pub fn reconstruct(x: f64, den_cap: u64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        let negative = x < 0.0;
        let mut frac = if negative { -x } else { x };
        // Convergents p/q of the continued fraction of |x|.
        let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
        let (mut p1, mut q1) = (BigInt::from(frac.floor() as i64), BigInt::from(1));
        frac -= frac.floor();
        let cap = BigInt::from(den_cap);
        for _ in 0..64 {
            if frac.abs() < 1e-15 {
                break;
            }
            frac = 1.0 / frac;
            let a = frac.floor();
            if a >= 9e15 {
                break;
            }
            frac -= a;
            let a = BigInt::from(a as i64);
            let p2 = &a * &p1 + &p0;
            let q2 = &a * &q1 + &q0;
            if q2 > cap {
                break;
            }
            p0 = core::mem::replace(&mut p1, p2);
            q0 = core::mem::replace(&mut q1, q2);
        }
        let mut value = BigRational::new(p1, q1);
        if negative {
            value = -value;
        }
        Some(Rational(value))
    }

    /// Denominator as u64 when it fits.
    pub fn denominator_u64(&self) -> Option<u64> {
        self.0.denom().to_u64()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parses `p`, `p/q`, or a plain decimal such as `0.08`.
impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let p: BigInt = num.trim().parse().map_err(|_| String::from("bad numerator"))?;
            let q: BigInt = den.trim().parse().map_err(|_| String::from("bad denominator"))?;
            if q.is_zero() {
                return Err(String::from("zero denominator"));
            }
            return Ok(Rational(BigRational::new(p, q)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let digits = frac_part.len() as u32;
            let joined: String = [int_part, frac_part].concat();
            let p: BigInt = joined.parse().map_err(|_| String::from("bad decimal"))?;
            let q = BigInt::from(10u32).pow(digits);
            return Ok(Rational(BigRational::new(p, q)));
        }
        let p: BigInt = s.parse().map_err(|_| String::from("bad integer"))?;
        Ok(Rational(BigRational::from_integer(p)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s: String = serde::Deserialize::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact value of the edge-monomial polynomial at rational weights.
pub fn exact_poly(edges: &[Vec<u16>], weights: &[Rational]) -> Rational {
    let mut acc = BigRational::zero();
    for e in edges {
        let mut term = BigRational::one();
        for &v in e {
            term *= weights[v as usize - 1].inner();
        }
        acc += term;
    }
    Rational(acc)
}
