use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{self, rat, Rational};

/// Scalar Laurent polynomial with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn from_coeffs(pairs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in pairs {
            let slot: &mut Rational = coeffs.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        coeffs.retain(|_, c: &mut Rational| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn one() -> Self {
        Self::from_coeffs([(0, Rational::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().map(|(&e, c)| c * pow(t, e)).sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => rational::to_string(c),
                _ => format!("{}*t^{e}", rational::to_string(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `t^e` for any integer `e`; `t` must be nonzero when `e < 0`.
pub fn pow(t: &Rational, e: i64) -> Rational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Nonzero sample points `1, -1, 2, -2, …`.
pub fn sample_points() -> impl Iterator<Item = Rational> {
    (1i64..).flat_map(|k| [rat(k), rat(-k)])
}

/// Monomial coefficients of the unique polynomial of degree `< points.len()`
/// through `(points[i], values[i])`, via Newton divided differences.
pub fn interpolate(points: &[Rational], values: &[Rational]) -> Vec<Rational> {
    let n = points.len();
    let mut c = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&points[i] - &points[i - k]);
        }
    }
    let mut poly = vec![Rational::zero(); n];
    if n == 0 {
        return poly;
    }
    poly[0] = c[n - 1].clone();
    for (deg, k) in (0..n - 1).rev().enumerate() {
        // poly ← poly·(t − x_k) + c_k
        for i in (0..=deg).rev() {
            let v = poly[i].clone();
            poly[i + 1] += &v;
            poly[i] = -&v * &points[k];
        }
        poly[0] += &c[k];
    }
    poly
}
