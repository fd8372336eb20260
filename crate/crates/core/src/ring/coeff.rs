//! Exact rational coefficients.
//!
//! Values that fit in a pair of `i64` stay in the small representation and
//! fall back to arbitrary precision only when an operation would overflow.
//! The representation is canonical: a `Big` value never holds something that
//! fits in `Small`, so structural equality is numeric equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

type Small = Ratio<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(Small),
    Big(BigRational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(Small::zero())
    }

    pub fn one() -> Self {
        Coeff::Small(Small::one())
    }

    pub fn from_int(v: i64) -> Self {
        Coeff::Small(Small::from_integer(v))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Coeff::Small(Small::new(num, den))
    }

    fn from_big(v: BigRational) -> Self {
        match (v.numer().to_i64(), v.denom().to_i64()) {
            // i64::MIN cannot be negated safely inside Ratio<i64>
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Coeff::Small(Small::new_raw(n, d))
            }
            _ => Coeff::Big(v),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Coeff::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_zero(),
            Coeff::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_one(),
            Coeff::Big(_) => false,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_negative(),
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        Coeff::one() / self
    }

    fn binop(
        a: &Coeff,
        b: &Coeff,
        small: impl Fn(&Small, &Small) -> Option<Small>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Coeff {
        if let (Coeff::Small(x), Coeff::Small(y)) = (a, b) {
            if let Some(r) = small(x, y) {
                if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                    return Coeff::Small(r);
                }
            }
        }
        Coeff::from_big(big(a.to_big(), b.to_big()))
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_int(v)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff::binop(self, rhs, |x, y| x.checked_add(y), |x, y| x + y)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff::binop(self, rhs, |x, y| x.checked_sub(y), |x, y| x - y)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        Coeff::binop(self, rhs, |x, y| x.checked_mul(y), |x, y| x * y)
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero");
        Coeff::binop(self, rhs, |x, y| x.checked_div(y), |x, y| x / y)
    }
}

impl Div<&Coeff> for Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        &self / rhs
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(r) => Coeff::Small(-r),
            Coeff::Big(b) => Coeff::from_big(-b),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(r) => write!(f, "{r}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
