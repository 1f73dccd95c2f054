//! Sparse Laurent polynomials in `x_1..x_m` (integer exponents) and
//! `y_1..y_n` (nonnegative exponents) with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LaurentMonomial {
    pub x: Vec<i32>,
    pub y: Vec<u32>,
}

impl LaurentMonomial {
    pub fn one(nx: usize, ny: usize) -> Self {
        LaurentMonomial {
            x: vec![0; nx],
            y: vec![0; ny],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x.len(), self.y.len())
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().all(|&e| e == 0) && self.y.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dims() != other.dims() {
            return Err(Error::VariableMismatch(self.dims(), other.dims()));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        LaurentMonomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let factors = self
            .x
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| ("x", i + 1, e as i64))
            .chain(
                self.y
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| ("y", i + 1, e as i64)),
            );
        let mut first = true;
        for (var, idx, exp) in factors {
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{var}{idx}")?;
            } else {
                write!(f, "{var}{idx}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Invariant: no stored coefficient is zero. Terms iterate in the
/// lexicographic order of `(x, y)` exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nx: usize,
    ny: usize,
    terms: BTreeMap<LaurentMonomial, BigInt>,
}

#[derive(Serialize)]
struct JsonTerm {
    coeff: String,
    x: Vec<i32>,
    y: Vec<u32>,
}

impl LaurentPoly {
    pub fn zero(nx: usize, ny: usize) -> Self {
        LaurentPoly {
            nx,
            ny,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::monomial(LaurentMonomial::one(nx, ny))
    }

    pub fn monomial(m: LaurentMonomial) -> Self {
        let (nx, ny) = m.dims();
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        LaurentPoly { nx, ny, terms }
    }

    /// Sums monomials with multiplicity.
    pub fn from_monomials<I: IntoIterator<Item = LaurentMonomial>>(nx: usize, ny: usize, monos: I) -> Result<Self> {
        let mut p = Self::zero(nx, ny);
        for m in monos {
            p.add_term(m, BigInt::one())?;
        }
        Ok(p)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &LaurentMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, m: LaurentMonomial, c: BigInt) -> Result<()> {
        if m.dims() != self.dims() {
            return Err(Error::VariableMismatch(self.dims(), m.dims()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::VariableMismatch(self.dims(), other.dims()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nx, self.ny);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul_unchecked(mb), ca * cb)?;
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nx, self.ny);
        }
        LaurentPoly {
            nx: self.nx,
            ny: self.ny,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Exact equality; errors when the variable sets differ.
    pub fn checked_eq(&self, other: &Self) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.terms == other.terms)
    }

    /// Smallest monomial (in canonical order) whose coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<(LaurentMonomial, BigInt, BigInt)> {
        let mut keys: Vec<&LaurentMonomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coeff(m), other.coeff(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                x: m.x.clone(),
                y: m.y.clone(),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("matching variable sets")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("matching variable sets")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}·{m}")?;
            }
        }
        Ok(())
    }
}
