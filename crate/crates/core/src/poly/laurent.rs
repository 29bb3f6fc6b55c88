//! Bivariate Laurent polynomials in `v` and `z` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial `Σ c · v^a z^b`, keyed by `(a, b)`.
///
/// No zero coefficient is ever stored, so structural equality is
/// polynomial equality and the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentVZ {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentVZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, v: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((v, z), coeff.into());
        p
    }

    /// `v^a`
    pub fn v_pow(a: i32) -> Self {
        Self::monomial(1, a, 0)
    }

    /// `z^b`
    pub fn z_pow(b: i32) -> Self {
        Self::monomial(1, 0, b)
    }

    /// `(1 - v²) / z`, the value of a single unknotted strand.
    pub fn delta() -> Self {
        Self::from_terms([(1, 0, -1), (-1, 2, -1)])
    }

    /// `1 - v²`
    pub fn one_minus_v2() -> Self {
        Self::from_terms([(1, 0, 0), (-1, 2, 0)])
    }

    /// Builds a polynomial from `(coeff, v_exp, z_exp)` triples, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, a, b) in terms {
            p.add_term((a, b), c.into());
        }
        p
    }

    fn add_term(&mut self, key: (i32, i32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `((v_exp, z_exp), coeff)` in `(v, z)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, v: i32, z: i32) -> BigInt {
        self.terms.get(&(v, z)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `v^a z^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(v, z), c)| ((v + a, z + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn min_v_degree(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(v, _)| v)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_v_degree(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(v, _)| v)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn min_z_degree(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(_, z)| z)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_z_degree(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|&(_, z)| z)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of `z^b`, as a polynomial in `v` alone.
    pub fn z_coefficient(&self, b: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, z), _)| *z == b)
                .map(|(&(v, _), c)| ((v, 0), c.clone()))
                .collect(),
        }
    }

    /// Keeps the `v^0` terms: the value at `v = 0` of a polynomial in `v`.
    pub fn eval_v0(&self) -> Result<Self> {
        if let Ok(m) = self.min_v_degree() {
            if m < 0 {
                return Err(Error::NegativeVDegree(m));
            }
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|((v, _), _)| *v == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// Substitutes `v = 1`, leaving a Laurent polynomial in `z`.
    pub fn eval_v1(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, z), c) in &self.terms {
            out.add_term((0, z), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in `Z[v^±1, z^±1]`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // The Newton polygon of the quotient is pinned by those of self and d,
        // so every quotient exponent lies in this box.
        let v_lo = self.min_v_degree()? - d.min_v_degree()?;
        let v_hi = self.max_v_degree()? - d.max_v_degree()?;
        let z_lo = self.min_z_degree()? - d.min_z_degree()?;
        let z_hi = self.max_z_degree()? - d.max_z_degree()?;

        let (&(dv, dz), dc) = d.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(rv, rz), rc)) = rem.terms.iter().next_back() {
            let (qv, qz) = (rv - dv, rz - dz);
            if qv < v_lo || qv > v_hi || qz < z_lo || qz > z_hi {
                return Err(Error::NotDivisible);
            }
            if !(rc % dc).is_zero() {
                return Err(Error::NotDivisible);
            }
            let qc = rc / dc;
            rem -= &d.shift(qv, qz).scale(&qc);
            quot.add_term((qv, qz), qc);
        }
        Ok(quot)
    }

    /// Terms in canonical print order: ascending `z`, then descending `v`.
    pub fn sorted_terms(&self) -> Vec<(BigInt, i32, i32)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(v, z), c)| (c.clone(), v, z))
            .collect();
        out.sort_by(|a, b| a.2.cmp(&b.2).then(b.1.cmp(&a.1)));
        out
    }
}

/// Serializes as sorted `[coeff, v_exp, z_exp]` triples; coefficients outside
/// the `i64` range are written as decimal strings.
impl serde::Serialize for LaurentVZ {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        use serde::ser::SerializeSeq;
        let terms = self.sorted_terms();
        let mut seq = ser.serialize_seq(Some(terms.len()))?;
        for (c, v, z) in terms {
            match c.to_i64() {
                Some(c) => seq.serialize_element(&(c, v, z))?,
                None => seq.serialize_element(&(c.to_string(), v, z))?,
            }
        }
        seq.end()
    }
}

impl fmt::Display for LaurentVZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (c, v, z)) in self.sorted_terms().into_iter().enumerate() {
            if k == 0 {
                write!(f, "{c}*v^{v}*z^{z}")?;
            } else if c.is_negative() {
                write!(f, " - {}*v^{v}*z^{z}", c.abs())?;
            } else {
                write!(f, " + {c}*v^{v}*z^{z}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentVZ> for LaurentVZ {
    fn add_assign(&mut self, rhs: &LaurentVZ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentVZ> for LaurentVZ {
    fn sub_assign(&mut self, rhs: &LaurentVZ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentVZ {
    type Output = LaurentVZ;
    fn add(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentVZ {
    type Output = LaurentVZ;
    fn sub(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentVZ {
    type Output = LaurentVZ;
    fn neg(self) -> LaurentVZ {
        LaurentVZ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentVZ {
    type Output = LaurentVZ;
    fn mul(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = LaurentVZ::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentVZ {
            type Output = LaurentVZ;
            fn $m(self, rhs: LaurentVZ) -> LaurentVZ {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for LaurentVZ {
    type Output = LaurentVZ;
    fn neg(self) -> LaurentVZ {
        -&self
    }
}

impl Zero for LaurentVZ {
    fn zero() -> Self {
        LaurentVZ::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentVZ {
    fn one() -> Self {
        LaurentVZ::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentVZ {
        LaurentVZ::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 0, 0), (-1, 2, 0)]);
        let b = p(&[(1, 0, 0), (1, 2, 0)]);
        assert_eq!(&a * &b, p(&[(1, 0, 0), (-1, 4, 0)]));
    }

    #[test]
    fn delta_squared() {
        let d2 = LaurentVZ::delta().pow(2).unwrap();
        assert_eq!(d2, p(&[(1, 0, -2), (-2, 2, -2), (1, 4, -2)]));
        assert!(LaurentVZ::delta().pow(-1).is_err());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let a = p(&[(3, -1, 2), (-7, 4, 0)]);
        let s = &a + &(-&a);
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn exact_division_examples() {
        let q = LaurentVZ::one_minus_v2();
        let sq = &q * &q;
        assert_eq!(sq.exact_div(&q).unwrap(), q);

        let num = p(&[(1, 2, -1), (-1, 4, -1)]);
        assert_eq!(num.exact_div(&LaurentVZ::delta()).unwrap(), p(&[(1, 2, 0)]));

        let bad = p(&[(1, 0, 0), (1, 1, 0)]);
        assert_eq!(bad.exact_div(&q), Err(Error::NotDivisible));
        assert_eq!(q.exact_div(&LaurentVZ::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn coefficient_divisibility_is_checked() {
        let a = p(&[(3, 0, 0)]);
        assert_eq!(a.exact_div(&p(&[(2, 0, 0)])), Err(Error::NotDivisible));
    }

    #[test]
    fn v_degree_and_v0() {
        assert_eq!(LaurentVZ::delta().min_v_degree().unwrap(), 0);
        assert_eq!(p(&[(1, 2, -1), (-1, 4, -1)]).min_v_degree().unwrap(), 2);
        assert_eq!(p(&[(1, -1, 0), (-1, 1, 0)]).min_v_degree().unwrap(), -1);
        assert_eq!(LaurentVZ::zero().min_v_degree(), Err(Error::ZeroPolynomial));

        assert_eq!(LaurentVZ::delta().eval_v0().unwrap(), p(&[(1, 0, -1)]));
        assert!(p(&[(1, 2, -1), (-1, 4, -1)]).eval_v0().unwrap().is_zero());
        assert!(p(&[(1, -2, 0)]).eval_v0().is_err());
    }

    #[test]
    fn canonical_text_form() {
        let h = p(&[(2, 2, 0), (-1, 4, 0), (1, 2, 2)]);
        assert_eq!(h.to_string(), "-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2");
        assert_eq!(LaurentVZ::zero().to_string(), "0");
    }
}
