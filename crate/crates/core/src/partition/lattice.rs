//! Enumeration of `Π_d`, its intervals, and the Möbius function.

use num_bigint::BigInt;

use super::{factorial, Composition, SetPartition};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Restricted growth strings of length `n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct RgsIter {
    current: Vec<u8>,
    // prefix_max[i] = max(current[..=i])
    prefix_max: Vec<u8>,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize) -> Self {
        RgsIter {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let n = self.current.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.current[i] <= self.prefix_max[i - 1] {
                self.current[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.current[i]);
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for RgsIter {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// Every element of `Π_d` exactly once, in canonical form.
pub fn enumerate_partitions(
    d: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = SetPartition>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    limits.check_degree(d)?;
    Ok(RgsIter::new(d).map(SetPartition::from_rgs_unchecked))
}

pub(crate) fn all_partitions(d: usize) -> impl Iterator<Item = SetPartition> {
    RgsIter::new(d).map(SetPartition::from_rgs_unchecked)
}

/// `μ` of an interval isomorphic to `Π_n`: `(-1)^(n-1) (n-1)!`.
pub(crate) fn mobius_full(n: usize) -> BigInt {
    let f = factorial(n - 1);
    if n.is_multiple_of(2) {
        -f
    } else {
        f
    }
}

/// `μ(σ, τ)` via the block-product formula over blocks of `τ`.
pub fn mobius(sigma: &SetPartition, tau: &SetPartition) -> Result<BigInt> {
    if !sigma.leq(tau)? {
        return Err(Error::NotComparable(format!("{sigma} is not below {tau}")));
    }
    let mut counts = vec![0usize; tau.num_blocks()];
    let mut seen = vec![false; sigma.num_blocks()];
    for (a, b) in sigma.rgs().iter().zip(tau.rgs()) {
        if !seen[*a as usize] {
            seen[*a as usize] = true;
            counts[*b as usize] += 1;
        }
    }
    Ok(counts.into_iter().map(mobius_full).product())
}

/// `μ(0̂, σ)`.
pub fn mobius_from_bottom(sigma: &SetPartition) -> BigInt {
    sigma.block_sizes().into_iter().map(mobius_full).product()
}

/// The upper interval `[π, 1̂]` paired with `μ(π, σ)`.
pub fn coarsenings(pi: &SetPartition) -> Vec<(SetPartition, BigInt)> {
    let k = pi.num_blocks();
    RgsIter::new(k)
        .map(|merge| {
            let rgs: Vec<u8> = pi.rgs().iter().map(|&b| merge[b as usize]).collect();
            let mut counts = vec![0usize; merge.iter().map(|&x| x as usize + 1).max().unwrap_or(0)];
            for &m in &merge {
                counts[m as usize] += 1;
            }
            let mu = counts.into_iter().map(mobius_full).product();
            (SetPartition::from_rgs_unchecked(rgs), mu)
        })
        .collect()
}

/// The lower interval `[0̂, π]` paired with `μ(σ, π)`.
pub fn refinements(pi: &SetPartition) -> Vec<(SetPartition, BigInt)> {
    let blocks = pi.blocks();
    let mut out = Vec::new();
    let mut labels = vec![(0u8, 0u8); pi.degree()];
    refine_rec(&blocks, 0, &mut labels, BigInt::from(1), &mut out);
    out
}

fn refine_rec(
    blocks: &[Vec<usize>],
    bi: usize,
    labels: &mut Vec<(u8, u8)>,
    mu: BigInt,
    out: &mut Vec<(SetPartition, BigInt)>,
) {
    if bi == blocks.len() {
        out.push((SetPartition::from_labels(labels), mu));
        return;
    }
    let block = &blocks[bi];
    for sub in RgsIter::new(block.len()) {
        for (&x, &s) in block.iter().zip(&sub) {
            labels[x - 1] = (bi as u8, s);
        }
        let parts = sub.iter().map(|&s| s as usize + 1).max().unwrap_or(0);
        refine_rec(blocks, bi + 1, labels, &mu * mobius_full(parts), out);
    }
}

/// Which element of `[d+1]` must sit in the first block of a `P(α)` member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marked {
    /// `d + 1 ∈ B_1`.
    Last,
    /// `d ∈ B_1`.
    Penultimate,
}

/// `P(α)`: partitions `τ = B_1/.../B_l ≤ π + (d+1)` with `|B_i| = α_i` and
/// the marked element in `B_1`.
pub fn enumerate_palpha(
    pi: &SetPartition,
    alpha: &Composition,
    marked: Marked,
) -> Result<Vec<SetPartition>> {
    let d = pi.degree();
    if alpha.size() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "composition {alpha} does not sum to {}",
            d + 1
        )));
    }
    let marked_elem = match marked {
        Marked::Last => d + 1,
        Marked::Penultimate => d,
    };
    let mut rest: Vec<usize> = alpha.parts()[1..].to_vec();
    rest.sort_unstable();
    let top = pi.insert_into_block_of_last();
    Ok(refinements(&top)
        .into_iter()
        .map(|(tau, _)| tau)
        .filter(|tau| {
            if tau.num_blocks() != alpha.parts().len()
                || tau.block_size_of(marked_elem) != alpha.parts()[0]
            {
                return false;
            }
            let mb = tau.block_index_of(marked_elem);
            let mut sizes: Vec<usize> = tau
                .block_sizes()
                .into_iter()
                .enumerate()
                .filter(|&(i, _)| i != mb)
                .map(|(_, s)| s)
                .collect();
            sizes.sort_unstable();
            sizes == rest
        })
        .collect())
}
