use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{interpolate, pow, sample_points, LaurentPoly};
use crate::error::{Error, Result};
use crate::exactlinalg::{RationalMatrix, TwistedCase};
use crate::rational::Rational;

/// Square matrix of Laurent polynomials, stored as `exponent → coefficient`
/// with zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    m: usize,
    coeffs: BTreeMap<i64, RationalMatrix>,
}

impl LaurentMatrix {
    pub fn zero(m: usize) -> Self {
        LaurentMatrix {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::constant(RationalMatrix::identity(m))
    }

    pub fn constant(c: RationalMatrix) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^e`
    pub fn monomial(c: RationalMatrix, e: i64) -> Self {
        let m = c.rows();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentMatrix { m, coeffs }
    }

    pub fn from_coeffs(m: usize, pairs: impl IntoIterator<Item = (i64, RationalMatrix)>) -> Result<Self> {
        let mut g = Self::zero(m);
        for (e, c) in pairs {
            c.require_square(m)?;
            g.add_term(e, &c);
        }
        Ok(g)
    }

    /// `I + x t⁻¹ + y t⁻²`
    pub fn unipotent(x: &RationalMatrix, y: &RationalMatrix) -> Result<Self> {
        let m = x.rows();
        Self::from_coeffs(m, [(0, RationalMatrix::identity(m)), (-1, x.clone()), (-2, y.clone())])
    }

    fn add_term(&mut self, e: i64, c: &RationalMatrix) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, sum);
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn highest(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `t^e`, zero if absent.
    pub fn coeff(&self, e: i64) -> RationalMatrix {
        self.coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.m, self.m))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RationalMatrix)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(RationalMatrix::is_identity)
    }

    pub fn try_mul(&self, other: &LaurentMatrix) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m.to_string(),
                got: other.m.to_string(),
            });
        }
        let mut out = Self::zero(self.m);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Self {
        self.try_mul(other).expect("matching sizes")
    }

    pub fn add(&self, other: &LaurentMatrix) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| -c)
    }

    fn map(&self, mut f: impl FnMut(i64, &RationalMatrix) -> RationalMatrix) -> Self {
        let mut out = Self::zero(self.m);
        for (e, c) in &self.coeffs {
            out.add_term(*e, &f(*e, c));
        }
        out
    }

    /// `g(−t)`
    pub fn flip(&self) -> Self {
        self.map(|e, c| if e.rem_euclid(2) == 1 { -c } else { c.clone() })
    }

    pub fn transpose(&self) -> Self {
        self.map(|_, c| c.transpose())
    }

    pub fn left_mul(&self, a: &RationalMatrix) -> Self {
        self.map(|_, c| a * c)
    }

    pub fn right_mul(&self, a: &RationalMatrix) -> Self {
        self.map(|_, c| c * a)
    }

    /// `k g k⁻¹`, with the inverse supplied.
    pub fn conjugate(&self, k: &RationalMatrix, kinv: &RationalMatrix) -> Self {
        self.map(|_, c| &(k * c) * kinv)
    }

    pub fn eval(&self, t: &Rational) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.m, self.m);
        for (e, c) in &self.coeffs {
            acc = &acc + &c.scale(&pow(t, *e));
        }
        acc
    }

    fn span(&self) -> (i64, i64) {
        (self.lowest().unwrap_or(0), self.highest().unwrap_or(0))
    }

    pub fn det(&self) -> LaurentPoly {
        let m = self.m as i64;
        if self.m == 0 {
            return LaurentPoly::one();
        }
        let (lo, hi) = self.span();
        let (dlo, dhi) = (m * lo, m * hi);
        let points: Vec<Rational> = sample_points().take((dhi - dlo + 1) as usize).collect();
        let values: Vec<Rational> = points
            .iter()
            .map(|t| self.eval(t).det().expect("square") * pow(t, -dlo))
            .collect();
        let c = interpolate(&points, &values);
        LaurentPoly::from_coeffs(c.into_iter().enumerate().map(|(i, v)| (dlo + i as i64, v)))
    }

    /// Exact adjugate, interpolated from `det(g(t))·g(t)⁻¹` at points where
    /// `g(t)` is invertible.
    pub fn adjugate(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let m = self.m;
        if m == 1 {
            return Ok(Self::identity(1));
        }
        let (lo, hi) = self.span();
        let k = (m - 1) as i64;
        let (alo, ahi) = (k * lo, k * hi);
        let need = (ahi - alo + 1) as usize;
        let mut points = Vec::with_capacity(need);
        let mut samples = Vec::with_capacity(need);
        for t in sample_points() {
            if points.len() == need {
                break;
            }
            let d = det.eval(&t);
            if d.is_zero() {
                continue;
            }
            let inv = self.eval(&t).inverse().expect("nonzero determinant");
            samples.push(inv.scale(&(d * pow(&t, -alo))));
            points.push(t);
        }
        let mut out = Self::zero(m);
        let mut coeff_mats = vec![RationalMatrix::zeros(m, m); need];
        for i in 0..m {
            for j in 0..m {
                let vals: Vec<Rational> = samples.iter().map(|s| s.get(i, j).clone()).collect();
                for (d, c) in interpolate(&points, &vals).into_iter().enumerate() {
                    coeff_mats[d].set(i, j, c);
                }
            }
        }
        for (d, c) in coeff_mats.into_iter().enumerate() {
            out.add_term(alo + d as i64, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.coeffs {
            writeln!(f, "t^{e}:")?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn det1_check(g: &LaurentMatrix) -> bool {
    g.det().is_one()
}

/// `ι(g)(t) = g(−t)⁻¹`, computed as the adjugate of `g(−t)`.
pub fn iota(g: &LaurentMatrix) -> Result<LaurentMatrix> {
    if !det1_check(g) {
        return Err(Error::NotInSl);
    }
    g.flip().adjugate()
}

/// The `t⁻¹` coefficient of a representative `I + x t⁻¹ + …` with no positive
/// powers.
pub fn pi(g: &LaurentMatrix) -> Result<RationalMatrix> {
    if g.highest().is_none_or(|h| h > 0) {
        return Err(Error::NotNormalized("positive powers of t present".into()));
    }
    if !g.coeff(0).is_identity() {
        return Err(Error::NotNormalized("constant coefficient is not the identity".into()));
    }
    Ok(g.coeff(-1))
}

fn require_size(case: TwistedCase, g: &LaurentMatrix) -> Result<()> {
    if g.m() != case.m() {
        return Err(Error::DimensionMismatch {
            expected: format!("{} for {case}", case.m()),
            got: g.m().to_string(),
        });
    }
    Ok(())
}

/// Whether `σ(g) = g`. Elements outside `SL` (or `SO(J)` for D) are errors
/// rather than `false`.
pub fn sigma_fixed(case: TwistedCase, g: &LaurentMatrix) -> Result<bool> {
    require_size(case, g)?;
    let j = LaurentMatrix::constant(case.form());
    let fixed = match case {
        TwistedCase::D(_) => {
            if g.mul(&j).mul(&g.transpose()) != j {
                return Err(if det1_check(g) { Error::NotInSo } else { Error::NotInSl });
            }
            g.flip().map(|_, c| case.conj_w(c)) == *g
        }
        _ => g.flip().transpose().mul(&j).mul(g) == j,
    };
    // Once the form identity holds, det g is a unit c·t^k with c² = 1 and
    // k = 0, so its value at t = 1 decides it.
    let det_one = if fixed || matches!(case, TwistedCase::D(_)) {
        g.eval(&Rational::from_integer(1.into())).det().is_ok_and(|d| d.is_one())
    } else {
        det1_check(g)
    };
    if !det_one {
        return Err(Error::NotInSl);
    }
    Ok(fixed)
}

/// `σ(g)`: `J ι(g)ᵀ J⁻¹` for the A cases and `w g(−t) w` for D.
pub fn sigma(case: TwistedCase, g: &LaurentMatrix) -> Result<LaurentMatrix> {
    require_size(case, g)?;
    match case {
        TwistedCase::D(_) => Ok(g.flip().map(|_, c| case.conj_w(c))),
        _ => Ok(iota(g)?
            .transpose()
            .left_mul(&case.form())
            .right_mul(&case.form_inverse())),
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    m: usize,
    coeffs: BTreeMap<String, RationalMatrix>,
}

impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr {
            m: self.m,
            coeffs: self.coeffs.iter().map(|(e, c)| (e.to_string(), c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = LaurentRepr::deserialize(d)?;
        let mut pairs = Vec::new();
        for (k, c) in r.coeffs {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent key {k:?}")))?;
            pairs.push((e, c));
        }
        LaurentMatrix::from_coeffs(r.m, pairs).map_err(D::Error::custom)
    }
}
