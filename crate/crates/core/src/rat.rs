//! Arbitrary-precision exact rational arithmetic and the combinatorial
//! scalars (binomials, multinomials, reciprocal factorials) that every
//! class formula consumes.
//!
//! All arithmetic is exact; rationals are kept in lowest terms with a
//! positive denominator after every operation. Decimal output exists for
//! display only and never feeds back into a computation.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, stored in lowest terms with positive denominator.
///
/// Backed by `num_rational::BigRational`, which normalizes eagerly on every
/// operation, so equality and ordering are canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// `n`/`d` in lowest terms. Panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn big_frac(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        Rat(BigRational::new(n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The underlying integer when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn neg(&self) -> Rat {
        Rat(-&self.0)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Rat {
        Rat(self.0.pow(exp))
    }

    /// Decimal expansion to `places` digits after the point, rounded half
    /// away from zero. Display only; exact values never round.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        let scale = BigInt::from(10u32).pow(places);
        // round(|n|*10^p / d)
        let scaled = &num * &scale;
        let (q, r) = (scaled.clone() / &den, scaled % &den);
        let q = if &r * 2 >= den { q + 1u32 } else { q };
        let digits = q.to_string();
        let places = places as usize;
        if places == 0 {
            return format!("{sign}{digits}");
        }
        if digits.len() <= places {
            let pad = "0".repeat(places - digits.len());
            format!("{sign}0.{pad}{digits}")
        } else {
            let (int_part, frac_part) = digits.split_at(digits.len() - places);
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl fmt::Display for Rat {
    /// Canonical serialization: `p/q` in lowest terms, `p` alone when `q == 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>()
                .map_err(|e| Error::out_of_range("Rat::from_str", format!("{t:?}: {e}")))
        };
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::out_of_range("Rat::from_str", "zero denominator"));
                }
                Ok(Rat(BigRational::new(parse_int(n)?, d)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_bigint(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / &rhs.0)
    }
}

impl Div<Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, r| acc + r)
    }
}

/// `m!` for `m >= 0`. Panics on negative input; use [`inv_factorial`] where
/// out-of-range arguments are expected to vanish.
pub fn factorial(m: i64) -> BigInt {
    assert!(m >= 0, "factorial of negative integer");
    let mut acc = BigInt::one();
    for s in 2..=m {
        acc *= s;
    }
    acc
}

/// `1/m!` for `m >= 0`, and exactly 0 for `m < 0`.
///
/// The zero convention is what makes the alpha-sums with ranges exceeding
/// `[j/2]` well-defined: out-of-range summands vanish through the factorial
/// reciprocals rather than through explicit range clamping.
pub fn inv_factorial(m: i64) -> Rat {
    if m < 0 {
        Rat::zero()
    } else {
        Rat::big_frac(BigInt::one(), factorial(m))
    }
}

/// Binomial coefficient `C(n, k)` for arbitrary integers.
///
/// Conventions: 0 for `k < 0`; 0 for `k > n >= 0`; the standard value for
/// `n >= 0`; the generalized falling-factorial value for `n < 0` (e.g.
/// `C(-1, 1) = -1`, used by series expansions of negative powers).
pub fn binom(n: i64, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    if n >= 0 && k > n {
        return Rat::zero();
    }
    // falling factorial n(n-1)...(n-k+1) / k!
    let mut num = BigInt::one();
    for s in 0..k {
        num *= n - s;
    }
    Rat::big_frac(num, factorial(k))
}

/// Multinomial coefficient `n! / prod(parts!)`.
///
/// Rejects negative parts and parts that do not sum to `n`.
pub fn multinom(n: i64, parts: &[i64]) -> Result<Rat> {
    if parts.iter().any(|&p| p < 0) {
        return Err(Error::BadMultinomial(format!("negative part in {parts:?}")));
    }
    let total: i64 = parts.iter().sum();
    if total != n {
        return Err(Error::BadMultinomial(format!(
            "parts {parts:?} sum to {total}, expected {n}"
        )));
    }
    let mut den = BigInt::one();
    for &p in parts {
        den *= factorial(p);
    }
    Ok(Rat::big_frac(factorial(n), den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_known_values() {
        assert_eq!(binom(4, 0), Rat::one());
        assert_eq!(binom(8, 2), Rat::from_int(28));
        assert_eq!(binom(5, 7), Rat::zero());
        assert_eq!(binom(-1, 1), Rat::from_int(-1));
        assert_eq!(binom(-2, 0), Rat::one());
    }

    #[test]
    fn binom_pascal_recurrence_exhaustive() {
        for n in 1..=64i64 {
            for k in 0..=n {
                let lhs = binom(n, k);
                let rhs = binom(n - 1, k - 1) + binom(n - 1, k);
                assert_eq!(lhs, rhs, "pascal failed at ({n},{k})");
            }
        }
    }

    #[test]
    fn inv_factorial_known_values() {
        assert_eq!(inv_factorial(3), Rat::frac(1, 6));
        assert_eq!(inv_factorial(0), Rat::one());
        assert_eq!(inv_factorial(-2), Rat::zero());
    }

    #[test]
    fn inv_factorial_inverts_factorial() {
        for m in 0..=30i64 {
            assert_eq!(
                inv_factorial(m) * Rat::from_bigint(factorial(m)),
                Rat::one()
            );
        }
    }

    #[test]
    fn multinom_known_values() {
        assert_eq!(multinom(7, &[4, 1, 2]).unwrap(), Rat::from_int(105));
        assert_eq!(multinom(13, &[7, 3, 3]).unwrap(), Rat::from_int(34320));
        assert_eq!(multinom(5, &[5]).unwrap(), Rat::one());
        assert!(multinom(5, &[4, 2]).is_err());
        assert!(multinom(5, &[6, -1]).is_err());
    }

    #[test]
    fn display_roundtrip_canonical() {
        let r = Rat::frac(-6, 4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("-3/2".parse::<Rat>().unwrap(), r);
        assert_eq!(Rat::frac(8, 4).to_string(), "2");
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::from_int(7));
    }

    #[test]
    fn decimal_display() {
        assert_eq!(Rat::frac(407, 61).to_decimal_string(4), "6.6721");
        assert_eq!(Rat::frac(1665, 256).to_decimal_string(6), "6.503906");
        assert_eq!(Rat::frac(-1, 3).to_decimal_string(3), "-0.333");
        assert_eq!(Rat::frac(1, 2).to_decimal_string(0), "1");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1000i64..1000, 1i64..60).prop_map(|(n, d)| Rat::frac(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            // associativity
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // commutativity
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // inverses
            prop_assert_eq!(&a - &a, Rat::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), Rat::one());
            }
        }

        #[test]
        fn string_roundtrip_bit_exact(a in arb_rat()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Rat>().unwrap(), a.clone());
            let js = serde_json::to_string(&a).unwrap();
            let back: Rat = serde_json::from_str(&js).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
