//! Exact arithmetic: rationals, truncated graded classes, weighted
//! polynomials and linear elimination. Nothing in this crate uses floats.

mod graded;
mod linear;
mod poly;

pub use graded::{GradedClass, Mod2Class};
pub use linear::{LinearSystem, PivotExpr, Relation, Solution};
pub use poly::{rational_roots, Monomial, Poly, PolyRing};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on a zero denominator.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

/// Integer value of `q` if it is an integer that fits in an `i64`.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// `q mod 2` for an integral rational.
pub fn parity(q: &Rational) -> Option<u8> {
    if !q.is_integer() {
        return None;
    }
    let two = BigInt::from(2);
    Some(if q.to_integer().mod_floor(&two).is_zero() {
        0
    } else {
        1
    })
}

/// Whether the integer `q` is divisible by `d` (`d != 0`).
pub fn divisible_by(q: &Rational, d: i64) -> bool {
    q.is_integer() && (q.to_integer() % BigInt::from(d)).is_zero()
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let r: Rational = s.parse().ok()?;
    Some(r)
}

/// Absolute value helper kept here so callers need not import `Signed`.
pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_display_reduced() {
        assert_eq!(frac(6, 4).to_string(), "3/2");
        assert_eq!(frac(-6, 3).to_string(), "-2");
        assert_eq!(parse_rational("-10/4"), Some(frac(-5, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn parity_and_divisibility() {
        assert_eq!(parity(&int(-3)), Some(1));
        assert_eq!(parity(&int(4)), Some(0));
        assert_eq!(parity(&frac(1, 2)), None);
        assert!(!divisible_by(&int(-258), 5));
        assert!(divisible_by(&int(18), 3));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(factorial(6), int(720));
    }
}
