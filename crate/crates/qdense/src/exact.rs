//! Arbitrary-precision integer and rational scalars plus decimal rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact integer used for all counts.
pub type ExactInt = BigInt;

/// Exact rational in lowest terms with positive denominator.
pub type ExactRational = BigRational;

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(int(n), int(d))
}

pub fn rat_int(v: &ExactInt) -> ExactRational {
    ExactRational::from_integer(v.clone())
}

/// q^e as an exact integer.
pub fn ipow(q: u64, e: u64) -> ExactInt {
    ExactInt::from(q).pow(e.try_into().expect("exponent fits u32"))
}

/// q^e for a signed exponent, as an exact rational.
pub fn qpow(q: u64, e: i64) -> ExactRational {
    if e >= 0 {
        rat_int(&ipow(q, e as u64))
    } else {
        ExactRational::new(ExactInt::one(), ipow(q, (-e) as u64))
    }
}

pub fn ceil_rat(r: &ExactRational) -> ExactInt {
    r.ceil().to_integer()
}

pub fn floor_rat(r: &ExactRational) -> ExactInt {
    r.floor().to_integer()
}

/// Fixed-point decimal rendering with round-half-even at `places` digits.
pub fn to_decimal(r: &ExactRational, places: usize) -> String {
    let scale = ExactInt::from(10u32).pow(places as u32);
    let num = r.numer().abs() * &scale;
    let den = r.denom().clone();
    let (mut quot, rem) = num.div_rem(&den);
    // round-half-even on the discarded remainder
    let twice = &rem * 2;
    if twice > den || (twice == den && quot.is_odd()) {
        quot += 1;
    }
    let (ipart, fpart) = quot.div_rem(&scale);
    let mut s = String::new();
    if r.is_negative() && !quot.is_zero() {
        s.push('-');
    }
    s.push_str(&ipart.to_string());
    if places > 0 {
        let frac = fpart.to_string();
        s.push('.');
        for _ in frac.len()..places {
            s.push('0');
        }
        s.push_str(&frac);
    }
    s
}

/// Parses "n", "n/d", plain decimals, and scientific notation ("1e-9").
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(ExactRational::new(num, den));
    }
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let mut num = BigInt::zero();
    for c in int_part.chars().chain(frac_part.chars()) {
        let d = c.to_digit(10)?;
        num = num * 10 + d;
    }
    num *= sign;
    let shift = exp10 - frac_part.len() as i64;
    let rat = if shift >= 0 {
        ExactRational::from_integer(num * ExactInt::from(10u32).pow(shift as u32))
    } else {
        ExactRational::new(num, ExactInt::from(10u32).pow((-shift) as u32))
    };
    Some(rat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_rounds_half_to_even() {
        assert_eq!(to_decimal(&rat(1, 8), 2), "0.12"); // 0.125 -> even neighbor
        assert_eq!(to_decimal(&rat(3, 8), 2), "0.38"); // 0.375 -> even neighbor
        assert_eq!(to_decimal(&rat(-1, 8), 2), "-0.12");
        assert_eq!(to_decimal(&rat(1, 3), 6), "0.333333");
        assert_eq!(to_decimal(&rat(2, 1), 0), "2");
        assert_eq!(to_decimal(&rat(1, 2000), 3), "0.000");
    }

    #[test]
    fn parses_fractions_decimals_and_exponents() {
        assert_eq!(parse_rational("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rational("-7"), Some(rat(-7, 1)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("1e-3"), Some(rat(1, 1000)));
        assert_eq!(parse_rational("2.5e2"), Some(rat(250, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn qpow_handles_negative_exponents() {
        assert_eq!(qpow(2, 3), rat(8, 1));
        assert_eq!(qpow(2, -3), rat(1, 8));
        assert_eq!(qpow(5, 0), rat(1, 1));
    }
}
