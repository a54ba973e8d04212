//! Exact rational exponents and their textual form (`7`, `5/2`, `5/2+`).

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exponents and thresholds are exact rationals in lowest terms.
pub type Rational = Ratio<i64>;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Ratio::new(numer, denom)
}

pub fn rational_int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

/// Parses `N`, `p/q`, with an optional trailing `+` meaning "strictly above".
pub fn parse_exponent(text: &str) -> Result<(Rational, bool)> {
    let (body, plus) = match text.strip_suffix('+') {
        Some(body) => (body, true),
        None => (text, false),
    };
    let err = || Error::ExponentParse(text.to_string());
    let value = match body.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            if q <= 0 {
                return Err(err());
            }
            Ratio::new(p, q)
        }
        None => Ratio::from_integer(body.trim().parse().map_err(|_| err())?),
    };
    Ok((value, plus))
}

/// `7`, or `5/2` when the denominator is not 1.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_exponent(r: Rational, strict_plus: bool) -> String {
    let mut s = format_rational(r);
    if strict_plus {
        s.push('+');
    }
    s
}
