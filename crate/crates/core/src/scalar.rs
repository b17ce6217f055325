//! Exact scalar plumbing.
//!
//! Everything in this crate is computed over `Ratio<I>` for some integer
//! backing `I`. Arbitrary precision (`BigInt`) is the default; the fixed
//! width backings exist for fast randomized sweeps where inputs are small.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer backing for exact rationals.
pub trait ExactInt:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Lift a machine integer.
pub fn int<I: ExactInt>(n: i64) -> I {
    I::from_i64(n).expect("integer does not fit the backing type")
}

/// Lift a machine integer into a rational.
pub fn rat<I: ExactInt>(n: i64) -> Ratio<I> {
    Ratio::from_integer(int(n))
}

/// `p/q` as a rational. Panics when `q == 0`.
pub fn frac<I: ExactInt>(p: i64, q: i64) -> Ratio<I> {
    Ratio::new(int(p), int(q))
}

/// Convert between backings through the decimal representation.
pub fn convert<I: ExactInt, J: ExactInt>(x: &Ratio<I>) -> Ratio<J> {
    let parse = |v: &I| -> J {
        v.to_string()
            .parse::<J>()
            .unwrap_or_else(|_| panic!("{v} does not fit the target backing"))
    };
    Ratio::new(parse(x.numer()), parse(x.denom()))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_ratio<I: ExactInt>(x: &Ratio<I>) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Why a rational literal was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatioParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parse the strict wire form `[-]digits[/digits]`.
///
/// No whitespace, no sign on the denominator, no decimal points.
pub fn parse_ratio<I: ExactInt>(s: &str) -> Result<Ratio<I>, RatioParseError> {
    if s.is_empty() {
        return Err(RatioParseError::Empty);
    }
    let bad = || RatioParseError::Malformed(s.to_string());
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return Err(bad());
    }
    let n: I = num.parse().map_err(|_| bad())?;
    let d: I = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => I::one(),
    };
    if d.is_zero() {
        return Err(RatioParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Ratio::new(n, d))
}

/// Floor of a rational as an `i64`.
pub fn floor_i64<I: ExactInt>(x: &Ratio<I>) -> i64 {
    x.floor().to_integer().to_i64().expect("floor does not fit in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    #[test]
    fn parses_wire_forms() {
        assert_eq!(parse_ratio::<BigInt>("3").unwrap(), Q::from_integer(3.into()));
        assert_eq!(parse_ratio::<BigInt>("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_ratio::<i64>("0/7").unwrap(), Ratio::from_integer(0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/", "/2", "1.5", " 1", "1/-2", "+1", "a", "1/2/3", "--1"] {
            assert!(parse_ratio::<BigInt>(s).is_err(), "{s:?} accepted");
        }
        assert_eq!(
            parse_ratio::<BigInt>("1/0"),
            Err(RatioParseError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn formatting_round_trips() {
        for s in ["0", "-1", "12/7", "-5/12"] {
            let q: Q = parse_ratio(s).unwrap();
            assert_eq!(fmt_ratio(&q), s);
        }
    }

    #[test]
    fn converts_between_backings() {
        let q: Ratio<i64> = frac(-9, 4);
        let b: Q = convert(&q);
        assert_eq!(fmt_ratio(&b), "-9/4");
        assert_eq!(floor_i64(&b), -3);
    }
}
