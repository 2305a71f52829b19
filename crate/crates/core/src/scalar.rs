//! Exact scalar fields.
//!
//! Everything in this crate is computed over the rationals or the Gaussian
//! rationals. Matrices of every family are stored over [`Gaussian`]; the real
//! families simply never carry an imaginary part, which is checked whenever a
//! matrix enters an algebra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Gaussian rational `re + im·i`.
pub type Gaussian = num_complex::Complex<Rational>;

/// The scalar operations needed by the dense linear algebra routines.
pub trait Field:
    Clone + PartialEq + fmt::Debug + Num + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_rational(q: Rational) -> Self;
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
}

impl Field for Gaussian {
    fn from_rational(q: Rational) -> Self {
        Gaussian::new(q, Rational::zero())
    }
}

/// Which exact field an algebra's matrices live over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Rational,
    Gaussian,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn re(q: Rational) -> Gaussian {
    Gaussian::new(q, Rational::zero())
}

pub fn gauss(re: Rational, im: Rational) -> Gaussian {
    Gaussian::new(re, im)
}

pub fn gi(re: i64, im: i64) -> Gaussian {
    Gaussian::new(int(re), int(im))
}

pub fn imag_unit() -> Gaussian {
    Gaussian::new(Rational::zero(), Rational::one())
}

/// Formats a rational as `num/den`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Parses a Gaussian rational written as `a`, `a/b`, `bi`, `a+bi`, `a/b-c/di`.
pub fn parse_gaussian(s: &str) -> Result<Gaussian, Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !t.ends_with('i') {
        return Ok(re(parse_rational(&t)?));
    }
    let body = &t[..t.len() - 1];
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    let imag = |s: &str| -> Result<Rational, Error> {
        match s {
            "" | "+" => Ok(Rational::one()),
            "-" => Ok(-Rational::one()),
            _ => parse_rational(s.trim_start_matches('+')),
        }
    };
    match split {
        Some(i) => Ok(gauss(parse_rational(&body[..i])?, imag(&body[i..])?)),
        None => Ok(gauss(Rational::zero(), imag(body)?)),
    }
}

pub fn format_gaussian(z: &Gaussian) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let im = if z.im.is_negative() {
        format!("-{}", format_rational(&-z.im.clone()))
    } else {
        format!("+{}", format_rational(&z.im))
    };
    if z.re.is_zero() {
        format!("{}i", im.trim_start_matches('+'))
    } else {
        format!("{}{}i", format_rational(&z.re), im)
    }
}

/// Exact sign of a rational: -1, 0 or 1.
pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = frac(6, -4);
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q);
        assert_eq!(parse_rational(" 4 ").unwrap(), int(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn gaussian_parsing() {
        assert_eq!(parse_gaussian("1+i").unwrap(), gi(1, 1));
        assert_eq!(parse_gaussian("-i").unwrap(), gi(0, -1));
        assert_eq!(
            parse_gaussian("1/2-3/4i").unwrap(),
            gauss(frac(1, 2), frac(-3, 4))
        );
        assert_eq!(parse_gaussian("-2").unwrap(), gi(-2, 0));
        assert_eq!(parse_gaussian("-2-2i").unwrap(), gi(-2, -2));
        for z in [
            gi(0, 1),
            gi(3, -2),
            gauss(frac(1, 3), frac(5, 2)),
            gi(-4, 0),
        ] {
            assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
        }
    }
}
