//! Letting the variables commute, and the `1^n` specialization.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{serde_rational, write_signed_terms};
use super::{Basis, NCExpr, Rational};
use crate::error::{Error, Result};
use crate::partition::IntegerPartition;

/// A commutative symmetric function in the `m_λ`, `p_λ` or `e_λ` basis.
#[derive(Clone, PartialEq, Eq)]
pub struct CExpr {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<IntegerPartition, Rational>,
}

impl CExpr {
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IntegerPartition, Rational)>,
    {
        let mut out = CExpr {
            degree,
            basis,
            terms: BTreeMap::new(),
        };
        for (shape, c) in terms {
            if shape.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: shape.size(),
                });
            }
            out.add_term(shape, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, shape: IntegerPartition, c: Rational) {
        let slot = self.terms.entry(shape.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&shape);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<IntegerPartition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, shape: &IntegerPartition) -> Rational {
        self.terms.get(shape).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("CExpr serializes")
    }
}

impl fmt::Display for CExpr {
    /// `e(2,1) + 3·e(3)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        write_signed_terms(f, self.terms.iter().map(|(l, c)| (c, format!("{sym}{l}"))))
    }
}

impl fmt::Debug for CExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CExpr({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct CTermJson {
    shape: IntegerPartition,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct CExprJson {
    degree: usize,
    basis: Basis,
    terms: Vec<CTermJson>,
}

impl Serialize for CExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CExprJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(shape, coeff)| CTermJson {
                    shape: shape.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CExprJson::deserialize(d)?;
        CExpr::from_terms(
            raw.basis,
            raw.degree,
            raw.terms.into_iter().map(|t| (t.shape, t.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// `m_π ↦ |π| m_λ(π)`, `p_π ↦ p_λ(π)`, `e_π ↦ π! e_λ(π)`.
pub fn commutative_image(x: &NCExpr) -> CExpr {
    let mut out = CExpr {
        degree: x.degree(),
        basis: x.basis(),
        terms: BTreeMap::new(),
    };
    for (pi, c) in x.terms() {
        let mult = match x.basis() {
            Basis::M => pi.aut_constant(),
            Basis::P => 1.into(),
            Basis::E => pi.factorial_constant(),
        };
        out.add_term(pi.shape(), c * Rational::from_integer(mult));
    }
    out
}

/// A polynomial in `n` with rational coefficients; `coeffs[i]` multiplies
/// `n^i`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `n^k`
    pub fn power(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        UniPoly { coeffs }
    }

    /// `n(n-1)...(n-k+1)`
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, j| {
            acc.mul(&Self::from_coeffs(vec![
                -Rational::from_integer(j.into()),
                Rational::one(),
            ]))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient `a_i` of `n^i`.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&Rational::from_integer(n.into()))
    }
}

impl fmt::Display for UniPoly {
    /// `n^3 - 2n^2 + n`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{i}"),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else if abs.is_integer() {
                write!(f, "{abs}{var}")?;
            } else {
                write!(f, "{abs}·{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Sets `x_1 = ... = x_n = 1` and every other variable to zero:
/// `m_π ↦ (n)_k`, `p_π ↦ n^k` with `k` blocks, `e_π ↦ ∏_B (n)_{|B|}`.
pub fn specialize_ones(x: &NCExpr) -> UniPoly {
    let mut total = UniPoly::zero();
    for (pi, c) in x.terms() {
        let poly = match x.basis() {
            Basis::M => UniPoly::falling_factorial(pi.num_blocks()),
            Basis::P => UniPoly::power(pi.num_blocks()),
            Basis::E => pi
                .block_sizes()
                .into_iter()
                .fold(UniPoly::constant(Rational::one()), |acc, s| {
                    acc.mul(&UniPoly::falling_factorial(s))
                }),
        };
        total = total.add(&poly.scale(c));
    }
    total
}
