use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..d}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[i] = δ(i+1) - 1
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm {
            images: (0..d).collect(),
        }
    }

    /// From 1-based images `[δ(1), ..., δ(d)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Perm { images }
    }

    /// The transposition `(i j)` in `S_d`; `i == j` gives the identity.
    pub fn transposition(d: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x == 0 || x > d {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    range: format!("1..={d}"),
                });
            }
        }
        let mut p = Self::identity(d);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The cycle `(c_0 c_1 ... c_k)`, i.e. `c_0 ↦ c_1 ↦ ... ↦ c_k ↦ c_0`.
    pub fn cycle(d: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=d).collect();
        for (pos, &c) in cycle.iter().enumerate() {
            if c == 0 || c > d {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    range: format!("1..={d}"),
                });
            }
            images[c - 1] = cycle[(pos + 1) % cycle.len()];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `δ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All of `S_d` in lexicographic order of image lists.
    pub fn all(d: usize) -> impl Iterator<Item = Perm> {
        use itertools::Itertools;
        (0..d).permutations(d).map(Perm::from_zero_based)
    }
}

impl fmt::Display for Perm {
    /// One-line notation `[2 1 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
