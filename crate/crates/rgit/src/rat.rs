//! Exact rational scalars.
//!
//! Every coordinate in this crate is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the computational core; serialization uses
//! the string forms `"p/q"` and `"p"`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Exact decimal expansion with `digits` places after the point, truncated
/// toward zero. Used for byte-stable SVG coordinates; never round-trips back
/// into computations.
pub fn rat_to_decimal(x: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (x * Rat::from_integer(scale.clone())).trunc();
    let v = scaled.numer().clone();
    let neg = v.is_negative();
    let abs = v.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    let mut s = String::new();
    if neg && (!int_part.is_zero() || !frac_part.is_zero()) {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        s.push('.');
        for _ in frac.len()..digits as usize {
            s.push('0');
        }
        s.push_str(&frac);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(rat_to_string(&rat_from_str("3/6").unwrap()), "1/2");
        assert_eq!(rat_to_string(&rat_from_str("-4/2").unwrap()), "-2");
        assert_eq!(rat_to_string(&rat_from_str("7").unwrap()), "7");
        assert_eq!(rat_to_string(&rat_from_str(" 5 / -10 ").unwrap()), "-1/2");
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn reduced_invariant() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn decimal_expansion() {
        assert_eq!(rat_to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(rat_to_decimal(&ratio(-1, 2), 2), "-0.50");
        assert_eq!(rat_to_decimal(&rat(12), 1), "12.0");
        assert_eq!(rat_to_decimal(&ratio(-1, 1000), 2), "0.00");
    }
}
