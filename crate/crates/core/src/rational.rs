//! Exact rational scalars and their `"p/q"` string encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Accepts `"p/q"` strings as well as bare JSON integers.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalRepr {
    Int(i64),
    Str(String),
}

impl RationalRepr {
    pub(crate) fn into_rational(self) -> Result<Rational> {
        match self {
            RationalRepr::Int(n) => Ok(rat(n)),
            RationalRepr::Str(s) => parse(&s),
        }
    }
}
