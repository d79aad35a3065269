//! Integer scalar abstraction and small helpers for exact rational arithmetic.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{NumAssign, One, Signed, ToPrimitive, Zero};
use std::hash::Hash;

/// Integer scalar backing all exact arithmetic in this crate.
///
/// Satisfied by `BigInt` (the default, see [`crate::Int`]) and by the
/// primitive signed integers, which are handy for small fixed-size tests.
pub trait Scalar:
    Integer
    + Signed
    + NumAssign
    + ToPrimitive
    + Clone
    + Hash
    + std::fmt::Debug
    + std::fmt::Display
    + std::str::FromStr
    + From<i32>
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + NumAssign
        + ToPrimitive
        + Clone
        + Hash
        + std::fmt::Debug
        + std::fmt::Display
        + std::str::FromStr
        + From<i32>
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for building an integer scalar from a machine integer.
pub fn int<I: Scalar>(n: i32) -> I {
    I::from(n)
}

/// Shorthand for the exact rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat<I: Scalar>(n: i32, d: i32) -> Ratio<I> {
    Ratio::new(I::from(n), I::from(d))
}

/// Exact integer power of a rational. Negative exponents require `base != 0`.
pub fn pow_rat<I: Scalar>(base: &Ratio<I>, exp: i64) -> Ratio<I> {
    if exp == 0 {
        return Ratio::one();
    }
    let mut b = if exp < 0 {
        assert!(!base.is_zero(), "zero base with negative exponent");
        base.recip()
    } else {
        base.clone()
    };
    let mut e = exp.unsigned_abs();
    let mut acc: Ratio<I> = Ratio::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Exact integer power of a rational with a scalar exponent.
///
/// Panics if the exponent does not fit in an `i64`; exponents at desk scale
/// always do.
pub fn pow_rat_scalar<I: Scalar>(base: &Ratio<I>, exp: &I) -> Ratio<I> {
    pow_rat(base, exp.to_i64().expect("exponent out of range"))
}

/// Nearest integer to `q`, ties rounded away from zero.
pub fn round_to_int<I: Scalar>(q: &Ratio<I>) -> I {
    q.round().to_integer()
}

/// Largest integer `<= q`.
pub fn floor_int<I: Scalar>(q: &Ratio<I>) -> I {
    q.floor().to_integer()
}

/// Smallest integer `>= q`.
pub fn ceil_int<I: Scalar>(q: &Ratio<I>) -> I {
    q.ceil().to_integer()
}

/// Parses `"p"` or `"p/q"` (optional leading sign) into an exact rational.
pub fn parse_rat<I: Scalar>(s: &str) -> Option<Ratio<I>> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: I = num.parse().ok()?;
    let d: I = match den {
        Some(d) => d.parse().ok()?,
        None => I::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Ratio::new(n, d))
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn fmt_rat<I: Scalar>(q: &Ratio<I>) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    #[test]
    fn pow_handles_negative_exponents() {
        let q: Ratio<Int> = rat(2, 3);
        assert_eq!(pow_rat(&q, -2), rat(9, 4));
        assert_eq!(pow_rat(&q, 0), Ratio::one());
        assert_eq!(pow_rat(&q, 3), rat(8, 27));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "2/3", "-9/4"] {
            let q: Ratio<Int> = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&q), s);
        }
        assert_eq!(parse_rat::<Int>("4/6").map(|q| fmt_rat(&q)).unwrap(), "2/3");
        assert!(parse_rat::<Int>("1/0").is_none());
        assert!(parse_rat::<Int>("x").is_none());
    }

    #[test]
    fn rounding_is_ties_away_from_zero() {
        assert_eq!(round_to_int::<Int>(&rat(5, 2)), int(3));
        assert_eq!(round_to_int::<Int>(&rat(-5, 2)), int(-3));
        assert_eq!(floor_int::<Int>(&rat(-1, 2)), int(-1));
        assert_eq!(ceil_int::<Int>(&rat(-1, 2)), int(0));
    }
}
