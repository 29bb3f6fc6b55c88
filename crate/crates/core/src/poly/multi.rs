//! Multivariable integer polynomials and the support-width (Alexander) norm.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial in `t_1, …, t_r` keyed by exponent vectors.
///
/// Exponents may be negative, which lets Alexander polynomials be entered
/// in symmetrized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], BigInt::one());
        p
    }

    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, Vec<i32>)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a polynomial in {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Width of the support in direction `class`: `max C·e − min C·e`.
    pub fn alexander_norm(&self, class: &[i64]) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if class.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "class of length {} for a polynomial in {} variables",
                class.len(),
                self.nvars
            )));
        }
        let pairing =
            |e: &Vec<i32>| -> i64 { e.iter().zip(class).map(|(&a, &c)| a as i64 * c).sum() };
        let (lo, hi) = self
            .terms
            .keys()
            .map(pairing)
            .fold((i64::MAX, i64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
        Ok(hi - lo)
    }

    /// Parses the line format `<coeff> <e1> … <er>`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<(BigInt, Vec<i32>)> = Vec::new();
        let mut nvars: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::PolyFormat {
                line: lineno + 1,
                msg,
            };
            let mut fields = line.split_whitespace();
            let c_text = fields.next().expect("non-empty line");
            let c: BigInt = c_text
                .parse()
                .map_err(|_| bad(format!("bad coefficient `{c_text}`")))?;
            let e = fields
                .map(|f| {
                    f.parse::<i32>()
                        .map_err(|_| bad(format!("bad exponent `{f}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            match nvars {
                None => nvars = Some(e.len()),
                Some(r) if r != e.len() => {
                    return Err(bad(format!("expected {r} exponents, found {}", e.len())))
                }
                _ => {}
            }
            rows.push((c, e));
        }
        let nvars = nvars.ok_or(Error::PolyFormat {
            line: 0,
            msg: "no terms".into(),
        })?;
        Self::from_terms(nvars, rows)
    }

    /// Writes one term per line in exponent order, the inverse of [`MultiPoly::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.terms {
            out.push_str(&c.to_string());
            for x in e {
                out.push(' ');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, x) in e.iter().enumerate() {
                if *x != 0 {
                    write!(f, "*t{}^{}", i + 1, x)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("matching variable counts")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("matching variable counts")
    }
}
