//! Arbitrary-precision rational with an allocation-free fast path.
//!
//! Values whose reduced numerator and denominator both fit in `i64` are stored
//! inline; anything larger is promoted to a boxed [`BigRational`]. The
//! representation is canonical (reduced, positive denominator, inline whenever
//! possible), so derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    pub const fn from_integer(v: i64) -> Rational {
        Rational(Repr::Small { num: v, den: 1 })
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(Box::new(BigRational::new(
                num.into(),
                den.into(),
            )))),
        }
    }

    pub fn from_big(value: BigRational) -> Rational {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(Box::new(value))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// Whether the value is held inline.
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small { .. })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    fn small(&self) -> Option<(i128, i128)> {
        match self.0 {
            Repr::Small { num, den } => Some((num as i128, den as i128)),
            Repr::Big(_) => None,
        }
    }

    fn big_op(
        &self,
        rhs: &Rational,
        op: impl FnOnce(BigRational, BigRational) -> BigRational,
    ) -> Rational {
        Rational::from_big(op(self.to_big(), rhs.to_big()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.small(), other.small()) {
            // |num·den| < 2^126, no overflow
            (Some((a, b)), Some((c, d))) => (a * d).cmp(&(c * b)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        match (self.small(), rhs.small()) {
            (Some((a, 1)), Some((c, 1))) => Rational::from_i128(a + c, 1),
            (Some((a, b)), Some((c, d))) if b == d => Rational::from_i128(a + c, b),
            (Some((a, b)), Some((c, d))) => Rational::from_i128(a * d + c * b, b * d),
            _ => self.big_op(&rhs, |x, y| x + y),
        }
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(self, rhs: Rational) -> Rational {
        match (self.small(), rhs.small()) {
            (Some((a, 1)), Some((c, 1))) => Rational::from_i128(a - c, 1),
            (Some((a, b)), Some((c, d))) if b == d => Rational::from_i128(a - c, b),
            (Some((a, b)), Some((c, d))) => Rational::from_i128(a * d - c * b, b * d),
            _ => self.big_op(&rhs, |x, y| x - y),
        }
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        match (self.small(), rhs.small()) {
            (Some((a, 1)), Some((c, 1))) => Rational::from_i128(a * c, 1),
            (Some((a, b)), Some((c, d))) => Rational::from_i128(a * c, b * d),
            _ => self.big_op(&rhs, |x, y| x * y),
        }
    }
}

impl Div for Rational {
    type Output = Rational;

    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        match (self.small(), rhs.small()) {
            (Some((a, b)), Some((c, d))) => Rational::from_i128(a * d, b * c),
            _ => self.big_op(&rhs, |x, y| x / y),
        }
    }
}

impl Rem for Rational {
    type Output = Rational;

    fn rem(self, rhs: Rational) -> Rational {
        self.big_op(&rhs, |x, y| x % y)
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        match self.small() {
            Some((a, b)) => Rational::from_i128(-a, b),
            None => Rational::from_big(-self.to_big()),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::from_integer(0)
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::from_integer(1)
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }
}

impl Num for Rational {
    type FromStrRadixErr = <BigRational as Num>::FromStrRadixErr;

    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Rational::from_big)
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Rational::zero()
        } else {
            self.clone() - other.clone()
        }
    }

    fn signum(&self) -> Self {
        match self.cmp(&Rational::zero()) {
            Ordering::Less => -Rational::one(),
            Ordering::Equal => Rational::zero(),
            Ordering::Greater => Rational::one(),
        }
    }

    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

impl Scalar for Rational {
    fn parse_exact(text: &str) -> Result<Self> {
        BigRational::parse_exact(text).map(Rational::from_big)
    }

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(value)
    }

    fn approx_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big(b) => b.approx_f64(),
        }
    }
}

/// Integer conversions truncate toward zero.
impl ToPrimitive for Rational {
    fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small { num, den } => Some(num / den),
            Repr::Big(b) => b.to_integer().to_i64(),
        }
    }

    fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small { num, den } => u64::try_from(num / den).ok(),
            Repr::Big(b) => b.to_integer().to_u64(),
        }
    }

    fn to_f64(&self) -> Option<f64> {
        Some(self.approx_f64())
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational::from_big(v)
    }
}
