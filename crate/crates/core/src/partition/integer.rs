use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Sorts the parts; zero parts are dropped.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `[r_1, ..., r_d]`, where `r_i` counts the parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for &p in &self.parts {
            r[p - 1] += 1;
        }
        r
    }

    /// Replaces one part equal to `from` by `to` (dropping it when `to == 0`).
    pub fn replace_part(&self, from: usize, to: usize) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == from)?;
        let mut parts = self.parts.clone();
        parts[pos] = to;
        Some(Self::from_parts(parts))
    }

    pub fn with_part(&self, part: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.push(part);
        Self::from_parts(parts)
    }

    pub fn contains_part(&self, part: usize) -> bool {
        self.parts.contains(&part)
    }
}

impl TryFrom<Vec<usize>> for IntegerPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("integer partition parts must be positive".into()));
        }
        Ok(Self::from_parts(parts))
    }
}

impl From<IntegerPartition> for Vec<usize> {
    fn from(p: IntegerPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An ordered list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Prefix sums `α̃_i`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// All `2^(n-1)` compositions of `n >= 1`.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return Vec::new();
        }
        (0u64..1 << (n - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition { parts }
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
