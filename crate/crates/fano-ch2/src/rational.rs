//! Exact rational scalars.
//!
//! Every coefficient in the crate is a `Rat` (arbitrary-precision rational,
//! always in lowest terms with positive denominator). There is no floating
//! point anywhere; equality tests are exact.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact quotient `n/d`. Panics on `d == 0`; use [`parse_rat`] for user input.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = |msg: &str| Error::Parameter(format!("malformed rational `{s}`: {msg}"));
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().ok_or_else(|| bad("empty"))?.trim();
    let num: BigInt = num_str.parse().map_err(|_| bad("bad numerator"))?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(den_str) => {
            let den: BigInt = den_str.trim().parse().map_err(|_| bad("bad denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Render as `p` or `p/q` (lowest terms, sign on the numerator).
pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// k! as a rational.
pub fn factorial(k: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// lcm of the denominators of a slice of rationals (at least 1).
pub fn denominator_lcm(rs: &[Rat]) -> BigInt {
    let mut acc = BigInt::one();
    for r in rs {
        acc = num::integer::lcm(acc, r.denom().abs());
    }
    acc
}

/// Largest integer `s` with `s*s <= n` (exact, no floating point).
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0);
    let mut s = 0i64;
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

/// Smallest integer `s >= 0` with `s*s >= n`.
pub fn isqrt_ceil(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let f = isqrt(n);
    if f * f == n {
        f
    } else {
        f + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = ratio(4, -6);
        assert_eq!(render_rat(&r), "-2/3");
        assert_eq!(r, ratio(-2, 3));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-5", "7/2", "-9/4", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(render_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn integer_sqrt() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt_ceil(0), 0);
        assert_eq!(isqrt_ceil(3), 2);
        assert_eq!(isqrt_ceil(4), 2);
        assert_eq!(isqrt_ceil(5), 3);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
    }
}
