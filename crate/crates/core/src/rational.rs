//! Exact rational scalars and their canonical text form.
//!
//! Rationals are rendered as `"p/q"` in lowest terms, or `"p"` when the
//! denominator is one. Parsing accepts both forms.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds a rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders `p/q` in lowest terms, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `"p"` or `"p/q"`. Returns `None` on malformed input or zero
/// denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((num, den)) => {
            let num = num.trim().parse::<BigInt>().ok()?;
            let den = den.trim().parse::<BigInt>().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rat::new(num, den))
            }
        }
    }
}

/// Floor of a rational as a big integer.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Extracts an `i64` from an integral rational, if it fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    num_traits::ToPrimitive::to_i64(r.numer())
}
