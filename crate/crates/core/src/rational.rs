//! Rational scalars and their text forms.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/2"` or `" 4 / 6 "` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let t = text.trim().replace('−', "-");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma separated rational vector such as `1,-1/2`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

/// Always `num/den`, the JSON wire form.
pub fn to_fraction_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Writes `c·body` as one term of a signed sum: the first term carries a
/// leading `−` when negative, later terms are joined with ` + ` / ` − `.
pub(crate) fn write_term(out: &mut String, first: bool, c: &Rational, body: &str) {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => out.push('−'),
        (true, false) => {}
        (false, true) => out.push_str(" − "),
        (false, false) => out.push_str(" + "),
    }
    let abs = c.abs();
    if body.is_empty() {
        let _ = write!(out, "{abs}");
    } else {
        let _ = write!(out, "{abs}·{body}");
    }
}
