use crate::error::{Error, Result};

/// Enumeration ceilings. Exceeding any of them is reported as
/// [`Error::GuardExceeded`]; nothing is ever silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `d` for which all of `Π_d` may be walked (Bell(12) ≈ 4.2M).
    pub degree: usize,
    /// Largest edge count for subset sums, broken circuits and orientations.
    pub edge_subsets: usize,
    /// Largest `n_vars^degree` for truncated word expansions.
    pub words: u128,
    /// Largest `n^d` for brute-force coloring counts.
    pub colorings: u128,
    /// Largest vertex count for permutation-search isomorphism.
    pub isomorphism: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree: 12,
            edge_subsets: 20,
            words: 1_000_000,
            colorings: 10_000_000,
            isomorphism: 8,
        }
    }
}

impl Limits {
    pub fn check_degree(&self, d: usize) -> Result<()> {
        check("degree", d as u128, self.degree as u128)
    }

    pub fn check_edges(&self, m: usize) -> Result<()> {
        check("edge count", m as u128, self.edge_subsets as u128)
    }

    pub fn check_words(&self, n_vars: usize, degree: usize) -> Result<()> {
        check("word count", saturating_pow(n_vars, degree), self.words)
    }

    pub fn check_colorings(&self, n: usize, d: usize) -> Result<()> {
        check("coloring count", saturating_pow(n, d), self.colorings)
    }

    pub fn check_isomorphism(&self, d: usize) -> Result<()> {
        check("isomorphism vertex count", d as u128, self.isomorphism as u128)
    }
}

fn check(what: &'static str, requested: u128, limit: u128) -> Result<()> {
    if requested > limit {
        Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}

fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
