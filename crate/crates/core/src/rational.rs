//! Arbitrary-precision rationals and their textual form.
//!
//! `Ratio<BigInt>` already keeps itself in lowest terms with a positive
//! denominator, so zero is always `0/1`.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n / d` in lowest terms for a positive `d`. The gcd is taken against
/// `n mod d`, which is much shorter than `n` for long numerators.
pub(crate) fn over(n: BigInt, d: &BigInt) -> Rational {
    if d.is_one() {
        return Rational::from_integer(n);
    }
    let g = (&n % d).gcd(d);
    if g.is_one() {
        Rational::new_raw(n, d.clone())
    } else {
        Rational::new_raw(n / &g, d / &g)
    }
}

/// `a * b`, with the cheap reduction of [`over`].
pub(crate) fn mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        return Rational::from_integer(a.numer() * b.numer());
    }
    over(a.numer() * b.numer(), &(a.denom() * b.denom()))
}

/// `*a += b`, with the cheap reduction of [`over`].
pub(crate) fn add_assign(a: &mut Rational, b: Rational) {
    if a.denom() == b.denom() {
        *a = over(a.numer() + b.numer(), a.denom());
    } else {
        let n = a.numer() * b.denom() + b.numer() * a.denom();
        *a = over(n, &(a.denom() * b.denom()));
    }
}

/// Renders `p` or `p/q`.
pub fn to_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses an optionally signed `p` or `p/q`. Returns `None` on malformed
/// input or a zero denominator.
pub fn from_text(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = parse_signed(num)?;
    let den: BigInt = parse_signed(den)?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    Some(if s.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

pub(crate) fn abs(r: &Rational) -> Rational {
    r.abs()
}
