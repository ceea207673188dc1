//! Exact decimal parsing and fixed-precision rendering of rationals.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Parses `[-]digits[.digits]` exactly.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::with_capacity(int.len() + frac.len() + 1);
    digits.push('0');
    digits.push_str(int);
    digits.push_str(frac);
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let r = BigRational::new(numer, denom);
    Some(if neg { -r } else { r })
}

/// Renders `r` with `sig` significant digits, rounding half away from zero.
/// Zero renders as `0.` followed by `sig` zeros.
pub fn render(r: &BigRational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        let mut s = String::from("0.");
        s.extend(core::iter::repeat_n('0', sig));
        return s;
    }
    let neg = r.is_negative();
    let x = r.abs();
    let ten = BigInt::from(10u32);

    // exponent e with 10^e <= x < 10^(e+1)
    let mut e: i64 = x.numer().to_string_len() as i64 - x.denom().to_string_len() as i64;
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            BigRational::new(BigInt::from(1u32), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while x < pow(e) {
        e -= 1;
    }
    while x >= pow(e + 1) {
        e += 1;
    }

    let scaled = &x * pow(sig as i64 - 1 - e);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = if rem * 2 >= *scaled.denom() { q + 1 } else { q };
    if m == num_traits::pow(ten.clone(), sig) {
        m /= &ten;
        e += 1;
    }
    let digits: Vec<u8> = m.to_str_radix(10).into_bytes();
    debug_assert_eq!(digits.len(), sig);

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e < 0 {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.extend(digits.iter().map(|&d| d as char));
    } else {
        let int_len = e as usize + 1;
        if int_len >= sig {
            out.extend(digits.iter().map(|&d| d as char));
            for _ in sig..int_len {
                out.push('0');
            }
        } else {
            out.extend(digits[..int_len].iter().map(|&d| d as char));
            out.push('.');
            out.extend(digits[int_len..].iter().map(|&d| d as char));
        }
    }
    out
}

/// Twelve significant digits, the precision used for every printed
/// probability.
pub fn render12(r: &BigRational) -> String {
    render(r, 12)
}

trait DecimalLen {
    fn to_string_len(&self) -> usize;
}

impl DecimalLen for BigInt {
    fn to_string_len(&self) -> usize {
        match self.sign() {
            Sign::NoSign => 1,
            _ => self.magnitude().to_str_radix(10).len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn parses() {
        assert_eq!(parse_decimal("0.3"), Some(ratio(3, 10)));
        assert_eq!(parse_decimal("1"), Some(ratio(1, 1)));
        assert_eq!(parse_decimal(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_decimal("-0.25"), Some(ratio(-1, 4)));
        assert_eq!(parse_decimal("0.1.2"), None);
        assert_eq!(parse_decimal("x"), None);
        assert_eq!(parse_decimal("."), None);
    }

    #[test]
    fn renders() {
        assert_eq!(render12(&ratio(1, 4)), "0.250000000000");
        assert_eq!(render12(&ratio(1, 1)), "1.00000000000");
        assert_eq!(render12(&ratio(0, 1)), "0.000000000000");
        assert_eq!(render12(&ratio(2, 3)), "0.666666666667");
        assert_eq!(render12(&ratio(1, 800)), "0.00125000000000");
        assert_eq!(render12(&ratio(-5, 8)), "-0.625000000000");
        assert_eq!(render(&ratio(9999, 10000), 3), "1.00");
        assert_eq!(render(&ratio(12345, 1), 3), "12300");
    }
}
