//! Exact rational scalars and points.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a`, `a/b` or `-a/b` with decimal integers.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |msg: &str| Error::Syntax {
        pos: 0,
        msg: format!("{msg} in rational literal `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(unsigned) {
        return Err(bad("bad numerator"));
    }
    let n = BigInt::from_str(num).map_err(|_| bad("bad numerator"))?;
    let d = match den {
        Some(d) if digits(d) => BigInt::from_str(d).map_err(|_| bad("bad denominator"))?,
        Some(_) => return Err(bad("bad denominator")),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Renders as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A point of affine space with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn origin(n: usize) -> Self {
        Point(vec![Rational::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Parses comma-separated rational coordinates, e.g. `"1/2,-3"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Syntax {
                pos: 0,
                msg: "empty point".into(),
            });
        }
        text.split(',')
            .map(parse_rational)
            .collect::<Result<_>>()
            .map(Point)
    }

    /// Comma-separated form accepted by [`Point::parse`].
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-0/7").unwrap(), rat(0));
        assert_eq!(parse_rational(" -2 ").unwrap(), rat(-2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn canonical_form() {
        let q = ratio(4, -6);
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(format_rational(&q), "-2/3");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn point_round_trip() {
        let p = Point::parse("1/2, -3,0").unwrap();
        assert_eq!(p.to_csv(), "1/2,-3,0");
        assert_eq!(p.to_string(), "(1/2, -3, 0)");
        assert_eq!(Point::parse(&p.to_csv()).unwrap(), p);
        assert!(Point::parse("").is_err());
        assert!(Point::parse("1,,2").is_err());
    }
}
