//! Scalar type and `"p/q"` string conversions shared by the whole crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar used everywhere: an arbitrary-precision rational number.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the `"p/q"` (or plain `"p"`) form used in all JSON documents.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational in the canonical `"p/q"` form (`"p"` when the
/// denominator is one). Output is stable across runs.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the rational fits an `i128` fraction; used by fast paths.
pub fn to_i128_pair(r: &Rat) -> Option<(i128, i128)> {
    let n: i128 = r.numer().try_into().ok()?;
    let d: i128 = r.denom().try_into().ok()?;
    Some((n, d))
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}
