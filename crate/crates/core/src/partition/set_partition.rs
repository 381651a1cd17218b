use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{IntegerPartition, Perm};
use crate::error::{Error, Result};

/// A set partition of `{1..d}`.
///
/// Stored as a restricted growth string: `rgs[i]` is the index of the block
/// holding element `i + 1`, blocks numbered in order of their minimum
/// element. Equal partitions therefore have identical representations, and
/// the derived ordering is a total order usable as a map key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// Builds a partition from arbitrary block labels (one label per element);
    /// elements sharing a label share a block.
    pub fn from_labels<T: PartialEq + Copy>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(p) => p as u8,
                None => {
                    seen.push(*l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { rgs }
    }

    /// Trusts that `rgs` is already a restricted growth string.
    pub(crate) fn from_rgs_unchecked(rgs: Vec<u8>) -> Self {
        debug_assert!(is_rgs(&rgs));
        SetPartition { rgs }
    }

    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        if rgs.is_empty() || !is_rgs(&rgs) {
            return Err(Error::Parse(format!("{rgs:?} is not a restricted growth string")));
        }
        Ok(SetPartition { rgs })
    }

    /// Builds a partition from 1-based blocks. The blocks must be nonempty,
    /// pairwise disjoint, and cover `{1..d}` where `d` is the total size.
    pub fn from_blocks<B: AsRef<[usize]>>(blocks: &[B]) -> Result<Self> {
        let d: usize = blocks.iter().map(|b| b.as_ref().len()).sum();
        if d == 0 {
            return Err(Error::Parse("empty partition".into()));
        }
        if d > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!("degree {d} too large")));
        }
        let mut labels = vec![usize::MAX; d];
        for (bi, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > d {
                    return Err(Error::Parse(format!("element {x} outside 1..{d}")));
                }
                if labels[x - 1] != usize::MAX {
                    return Err(Error::Parse(format!("element {x} appears twice")));
                }
                labels[x - 1] = bi;
            }
        }
        Ok(Self::from_labels(&labels))
    }

    /// `1/2/.../d`, the bottom element `0̂`.
    pub fn finest(d: usize) -> Self {
        SetPartition {
            rgs: (0..d).map(|i| i as u8).collect(),
        }
    }

    /// `12...d`, the top element `1̂`.
    pub fn coarsest(d: usize) -> Self {
        SetPartition { rgs: vec![0; d] }
    }

    pub fn degree(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Blocks as sorted 1-based element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i + 1);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.rgs {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// Index (in min-order) of the block containing element `i` (1-based).
    pub fn block_index_of(&self, i: usize) -> usize {
        self.rgs[i - 1] as usize
    }

    /// The block containing element `i` (1-based).
    pub fn block_of(&self, i: usize) -> Vec<usize> {
        let b = self.rgs[i - 1];
        (1..=self.degree()).filter(|&j| self.rgs[j - 1] == b).collect()
    }

    /// `|B_{π,i}|`.
    pub fn block_size_of(&self, i: usize) -> usize {
        let b = self.rgs[i - 1];
        self.rgs.iter().filter(|&&x| x == b).count()
    }

    /// `|B_π|`, the size of the block containing the last element.
    pub fn last_block_size(&self) -> usize {
        self.block_size_of(self.degree())
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rgs[i - 1] == self.rgs[j - 1]
    }

    pub fn is_finest(&self) -> bool {
        self.num_blocks() == self.degree()
    }

    pub fn is_coarsest(&self) -> bool {
        self.rgs.iter().all(|&b| b == 0)
    }

    fn check_degree(&self, other: &SetPartition) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// Refinement order: every block of `self` sits inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self.refines(other))
    }

    pub(crate) fn refines(&self, other: &SetPartition) -> bool {
        let mut image = vec![u8::MAX; self.num_blocks()];
        for (a, b) in self.rgs.iter().zip(&other.rgs) {
            let slot = &mut image[*a as usize];
            if *slot == u8::MAX {
                *slot = *b;
            } else if *slot != *b {
                return false;
            }
        }
        true
    }

    /// Greatest lower bound: the nonempty pairwise intersections of blocks.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_degree(other)?;
        let pairs: Vec<(u8, u8)> = self.rgs.iter().copied().zip(other.rgs.iter().copied()).collect();
        Ok(Self::from_labels(&pairs))
    }

    /// `λ(π)`: the block sizes, weakly decreasing.
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.block_sizes())
    }

    /// `|π| = r_1! r_2! ... r_d!` where `r_i` counts blocks of size `i`.
    pub fn aut_constant(&self) -> num_bigint::BigInt {
        self.shape()
            .multiplicities()
            .iter()
            .map(|&r| super::factorial(r))
            .product()
    }

    /// `π! = ∏ |B|!` over the blocks.
    pub fn factorial_constant(&self) -> num_bigint::BigInt {
        self.block_sizes().into_iter().map(super::factorial).product()
    }

    /// `π + (d+1)`: the new element `d+1` joins the block containing `d`.
    pub fn insert_into_block_of_last(&self) -> SetPartition {
        let mut rgs = self.rgs.clone();
        rgs.push(*self.rgs.last().expect("degree >= 1"));
        SetPartition { rgs }
    }

    /// `π / d+1`: appends the singleton block `{d+1}`.
    pub fn new_singleton(&self) -> SetPartition {
        let mut rgs = self.rgs.clone();
        rgs.push(self.num_blocks() as u8);
        SetPartition { rgs }
    }

    /// `π + i`: appends `d+1, ..., d+i` to the block containing `d`.
    pub fn add_elements(&self, i: usize) -> SetPartition {
        let mut rgs = self.rgs.clone();
        let last = *self.rgs.last().expect("degree >= 1");
        rgs.extend(std::iter::repeat_n(last, i));
        SetPartition { rgs }
    }

    /// Appends `count` new elements as one fresh block (no-op when zero).
    pub fn add_block(&self, count: usize) -> SetPartition {
        let mut rgs = self.rgs.clone();
        let fresh = self.num_blocks() as u8;
        rgs.extend(std::iter::repeat_n(fresh, count));
        SetPartition { rgs }
    }

    /// Shift-union: `self` followed by `other` with its elements raised by
    /// `self.degree()`.
    pub fn shifted_union(&self, other: &SetPartition) -> SetPartition {
        let offset = self.num_blocks() as u8;
        let mut rgs = self.rgs.clone();
        rgs.extend(other.rgs.iter().map(|b| b + offset));
        SetPartition { rgs }
    }

    /// Element-wise relabelling `δ(π)`.
    pub fn apply_perm(&self, perm: &Perm) -> Result<SetPartition> {
        if perm.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: perm.degree(),
                right: self.degree(),
            });
        }
        let mut labels = vec![0u8; self.degree()];
        for (i, &b) in self.rgs.iter().enumerate() {
            labels[perm.apply(i + 1) - 1] = b;
        }
        Ok(Self::from_labels(&labels))
    }

    /// Repeats position `k` at position `l` (`k < l <= d+1`): elements at or
    /// above `l` move up by one and `l` joins the block of `k`.
    pub fn duplicate_position(&self, k: usize, l: usize) -> SetPartition {
        debug_assert!(1 <= k && k < l && l <= self.degree() + 1);
        let mut labels: Vec<u8> = Vec::with_capacity(self.degree() + 1);
        labels.extend_from_slice(&self.rgs[..l - 1]);
        labels.push(self.rgs[k - 1]);
        labels.extend_from_slice(&self.rgs[l - 1..]);
        Self::from_labels(&labels)
    }

    /// Restriction to the first `n` elements.
    pub fn restrict_to(&self, n: usize) -> SetPartition {
        Self::from_labels(&self.rgs[..n])
    }
}

fn is_rgs(rgs: &[u8]) -> bool {
    let mut next = 0u8;
    for &b in rgs {
        if b > next {
            return false;
        }
        if b == next {
            next = match next.checked_add(1) {
                Some(n) => n,
                None => return false,
            };
        }
    }
    true
}

impl fmt::Display for SetPartition {
    /// Slash notation: `13/2`. Above degree 9 elements inside a block are
    /// comma separated (`1,10/2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.degree() > 9;
        let blocks = self.blocks();
        for (bi, block) in blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str("/")?;
            }
            for (ei, x) in block.iter().enumerate() {
                if wide && ei > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let blocks = s
            .split('/')
            .map(|block| {
                let block = block.trim();
                if block.is_empty() {
                    return Err(Error::Parse(format!("empty block in {s:?}")));
                }
                if block.contains(',') {
                    block
                        .split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad element {x:?} in {s:?}")))
                        })
                        .collect()
                } else {
                    block
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|v| v as usize)
                                .ok_or_else(|| Error::Parse(format!("bad element {c:?} in {s:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        SetPartition::from_blocks(&blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    /// Accepts either the slash string or a list of 1-based blocks.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Slash(String),
            Blocks(Vec<Vec<usize>>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Slash(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Blocks(b) => SetPartition::from_blocks(&b).map_err(serde::de::Error::custom),
        }
    }
}

/// `#[serde(with = "as_blocks")]` for the list-of-lists JSON form.
pub mod as_blocks {
    use super::SetPartition;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(p: &SetPartition, s: S) -> Result<S::Ok, S::Error> {
        p.blocks().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SetPartition, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        SetPartition::from_blocks(&blocks).map_err(serde::de::Error::custom)
    }
}
