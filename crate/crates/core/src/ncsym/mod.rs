//! Noncommutative symmetric functions indexed by set partitions.
//!
//! An [`NCExpr`] is a finite exact-rational combination of one homogeneous
//! degree in one of the three bases `m_π`, `p_π`, `e_π`.

mod classes;
mod commutative;
mod convert;
mod induce;
mod rational;
mod words;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Perm, SetPartition};

pub use classes::{amalgamate, ClassKey, EClassExpr};
pub use commutative::{commutative_image, specialize_ones, CExpr, UniPoly};
pub use convert::{e_to_m_direct, m_to_e_direct, to_basis};
pub use induce::{induce, induce_at, induce_e_changeup, induce_e_via_p};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use words::{expand_words, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "e")]
    E,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::M, Basis::P, Basis::E];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "monomial" => Ok(Basis::M),
            "p" | "power" | "powersum" => Ok(Basis::P),
            "e" | "elementary" => Ok(Basis::E),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// A homogeneous linear combination of basis elements.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality within one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct NCExpr {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<SetPartition, Rational>,
}

impl NCExpr {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        NCExpr {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, pi: SetPartition) -> Self {
        let degree = pi.degree();
        let mut terms = BTreeMap::new();
        terms.insert(pi, Rational::from_integer(1.into()));
        NCExpr {
            degree,
            basis,
            terms,
        }
    }

    /// Sums repeated keys and drops zeros.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SetPartition, Rational)>,
    {
        let mut acc = Accumulator::new(basis, degree);
        for (pi, c) in terms {
            if pi.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: pi.degree(),
                });
            }
            acc.add(pi, c);
        }
        Ok(acc.finish())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, pi: &SetPartition) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`NCExpr::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The index partitions carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &SetPartition> {
        self.terms.keys()
    }

    fn check_compatible(&self, other: &NCExpr) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &NCExpr) -> Result<NCExpr> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.add_term(pi.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCExpr) -> Result<NCExpr> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> NCExpr {
        if c.is_zero() {
            return NCExpr::zero(self.basis, self.degree);
        }
        NCExpr {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, pi: SetPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pi) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Position action `δ ∘ x`: relabels every index partition.
    pub fn act(&self, perm: &Perm) -> Result<NCExpr> {
        if perm.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: perm.degree(),
                right: self.degree,
            });
        }
        let mut acc = Accumulator::new(self.basis, self.degree);
        for (pi, c) in &self.terms {
            acc.add(pi.apply_perm(perm)?, c.clone());
        }
        Ok(acc.finish())
    }

    /// Concatenation product in the `p` or `e` basis: each pair of terms
    /// becomes the shift-union of the two index partitions.
    pub fn disjoint_product(&self, other: &NCExpr) -> Result<NCExpr> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        if self.basis == Basis::M {
            return Err(Error::WrongBasis {
                op: "disjoint_product",
                basis: Basis::M,
            });
        }
        let mut acc = Accumulator::new(self.basis, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                acc.add(a.shifted_union(b), x * y);
            }
        }
        Ok(acc.finish())
    }

    pub fn to_basis(&self, target: Basis) -> NCExpr {
        to_basis(self, target)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("NCExpr serializes")
    }
}

impl std::ops::Neg for NCExpr {
    type Output = NCExpr;

    fn neg(self) -> NCExpr {
        self.scale(&-Rational::from_integer(1.into()))
    }
}

impl fmt::Display for NCExpr {
    /// `1/2·e{12/3} - 1/2·e{13/2} + ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        rational::write_signed_terms(
            f,
            self.terms.iter().map(|(p, c)| (c, format!("{sym}{{{p}}}"))),
        )
    }
}

impl fmt::Debug for NCExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCExpr[d={}]({self})", self.degree)
    }
}

/// Hash-map accumulation for bulk rewrites, finished into an [`NCExpr`].
pub(crate) struct Accumulator {
    basis: Basis,
    degree: usize,
    terms: HashMap<SetPartition, Rational>,
}

impl Accumulator {
    pub(crate) fn new(basis: Basis, degree: usize) -> Self {
        Accumulator {
            basis,
            degree,
            terms: HashMap::new(),
        }
    }

    pub(crate) fn add(&mut self, pi: SetPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(pi).or_insert_with(Rational::zero) += c;
    }

    pub(crate) fn finish(self) -> NCExpr {
        NCExpr {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: SetPartition,
    #[serde(with = "rational::serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct NCExprJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for NCExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NCExprJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NCExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = NCExprJson::deserialize(d)?;
        NCExpr::from_terms(
            raw.basis,
            raw.degree,
            raw.terms.into_iter().map(|t| (t.partition, t.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}
