//! Amalgamation of e-expansions into congruence classes.
//!
//! `e_σ ≡_i e_τ` when `σ` and `τ` have the same shape and the blocks
//! containing `i` have the same size.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{serde_rational, write_signed_terms};
use super::{Basis, NCExpr, Rational};
use crate::error::{Error, Result};
use crate::partition::{IntegerPartition, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub shape: IntegerPartition,
    /// Size of the block holding the marked index.
    pub marked_block: usize,
}

impl ClassKey {
    pub fn new(shape: IntegerPartition, marked_block: usize) -> Self {
        ClassKey {
            shape,
            marked_block,
        }
    }

    pub fn of(pi: &SetPartition, i: usize) -> Self {
        ClassKey {
            shape: pi.shape(),
            marked_block: pi.block_size_of(i),
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.shape, self.marked_block)
    }
}

/// Class coefficients `c_(τ)` of an e-expansion modulo a marked index.
#[derive(Clone, PartialEq, Eq)]
pub struct EClassExpr {
    degree: usize,
    marked: usize,
    terms: BTreeMap<ClassKey, Rational>,
}

impl EClassExpr {
    pub fn zero(degree: usize, marked: usize) -> Self {
        EClassExpr {
            degree,
            marked,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, marked: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ClassKey, Rational)>,
    {
        if marked == 0 || marked > degree {
            return Err(Error::IndexOutOfRange {
                index: marked,
                range: format!("1..={degree}"),
            });
        }
        let mut out = Self::zero(degree, marked);
        for (key, c) in terms {
            if key.shape.size() != degree || !key.shape.contains_part(key.marked_block) {
                return Err(Error::InvalidArgument(format!(
                    "class {key} is not a class of degree {degree}"
                )));
            }
            out.add_term(key, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, key: ClassKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The index `i` of `≡_i`.
    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn terms(&self) -> &BTreeMap<ClassKey, Rational> {
        &self.terms
    }

    pub fn coeff(&self, key: &ClassKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_class_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn negative_classes(&self) -> impl Iterator<Item = (&ClassKey, &Rational)> {
        self.terms.iter().filter(|(_, c)| c.is_negative())
    }

    pub fn sub(&self, other: &EClassExpr) -> Result<EClassExpr> {
        if self.degree != other.degree || self.marked != other.marked {
            return Err(Error::InvalidArgument(format!(
                "class expressions differ in degree or marked index ({}/{} vs {}/{})",
                self.degree, self.marked, other.degree, other.marked
            )));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("EClassExpr serializes")
    }
}

impl fmt::Display for EClassExpr {
    /// `1/2·e((2,1);1) + 1/2·e((3);3)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter().map(|(k, c)| (c, format!("e({k})"))))
    }
}

impl fmt::Debug for EClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EClassExpr(mod {}: {self})", self.marked)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    shape: IntegerPartition,
    marked_block: usize,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct EClassJson {
    degree: usize,
    marked_index: usize,
    classes: Vec<ClassJson>,
}

impl Serialize for EClassExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EClassJson {
            degree: self.degree,
            marked_index: self.marked,
            classes: self
                .terms
                .iter()
                .map(|(k, c)| ClassJson {
                    shape: k.shape.clone(),
                    marked_block: k.marked_block,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EClassExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = EClassJson::deserialize(d)?;
        EClassExpr::from_terms(
            raw.degree,
            raw.marked_index,
            raw.classes
                .into_iter()
                .map(|c| (ClassKey::new(c.shape, c.marked_block), c.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Sums the coefficients of an e-expansion over the classes of `≡_i`.
pub fn amalgamate(x: &NCExpr, i: usize) -> Result<EClassExpr> {
    if x.basis() != Basis::E {
        return Err(Error::WrongBasis {
            op: "amalgamate",
            basis: x.basis(),
        });
    }
    if i == 0 || i > x.degree() {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("1..={}", x.degree()),
        });
    }
    let mut out = EClassExpr::zero(x.degree(), i);
    for (pi, c) in x.terms() {
        out.add_term(ClassKey::of(pi, i), c.clone());
    }
    Ok(out)
}
