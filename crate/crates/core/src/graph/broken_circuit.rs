//! Circuits and the broken-circuit complex under the edge-list order.

use std::fmt;

use super::LabeledMultigraph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A set of edges, stored as a bitmask over positions in the edge list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    pub fn from_positions(positions: &[usize]) -> Self {
        EdgeSubset(positions.iter().fold(0, |acc, &p| acc | 1 << p))
    }

    /// All of the first `m` edges.
    pub fn full(m: usize) -> Self {
        EdgeSubset(if m >= 64 { u64::MAX } else { (1u64 << m) - 1 })
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: EdgeSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }

    /// Highest position, i.e. the largest edge in the total order.
    pub fn max_position(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// The stable edge ids of the members, in list order.
    pub fn ids(self, g: &LabeledMultigraph) -> Vec<usize> {
        self.positions().map(|p| g.edges()[p].id).collect()
    }

    pub fn from_ids(g: &LabeledMultigraph, ids: &[usize]) -> Result<Self> {
        let mut bits = 0;
        for &id in ids {
            let pos = g
                .edges()
                .iter()
                .position(|e| e.id == id)
                .ok_or(Error::InvalidEdge(id))?;
            bits |= 1 << pos;
        }
        Ok(EdgeSubset(bits))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.positions()).finish()
    }
}

pub fn all_edge_subsets(g: &LabeledMultigraph, limits: &Limits) -> Result<impl Iterator<Item = EdgeSubset>> {
    let m = g.num_edges();
    limits.check_edges(m)?;
    if m >= 64 {
        return Err(Error::GuardExceeded {
            what: "edge count",
            requested: m as u128,
            limit: 63,
        });
    }
    Ok((0..1u64 << m).map(EdgeSubset))
}

fn is_circuit(g: &LabeledMultigraph, s: EdgeSubset) -> bool {
    let edges = g.edges();
    let mut members = s.positions();
    let Some(first) = members.next() else {
        return false;
    };
    if edges[first].is_loop() {
        return s.len() == 1;
    }
    let mut degree = [0u8; 64];
    let mut touched = 0u64;
    for p in s.positions() {
        let e = edges[p];
        if e.is_loop() {
            return false;
        }
        degree[e.u - 1] += 1;
        degree[e.v - 1] += 1;
        touched |= 1 << (e.u - 1) | 1 << (e.v - 1);
    }
    let mut t = touched;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        if degree[v] != 2 {
            return false;
        }
    }
    // 2-regular, so a single cycle iff connected.
    let mut seen = 1u64 << (edges[first].u - 1);
    loop {
        let before = seen;
        for p in s.positions() {
            let e = edges[p];
            let (a, b) = (1u64 << (e.u - 1), 1u64 << (e.v - 1));
            if seen & (a | b) != 0 {
                seen |= a | b;
            }
        }
        if seen == before {
            break;
        }
    }
    seen == touched
}

/// Every circuit: loops, parallel pairs, and cycles through distinct
/// vertices.
pub fn circuits(g: &LabeledMultigraph, limits: &Limits) -> Result<Vec<EdgeSubset>> {
    Ok(all_edge_subsets(g, limits)?.filter(|&s| is_circuit(g, s)).collect())
}

/// Each circuit with its largest edge removed, deduplicated and sorted.
pub fn broken_circuits(g: &LabeledMultigraph, limits: &Limits) -> Result<Vec<EdgeSubset>> {
    let mut out: Vec<EdgeSubset> = circuits(g, limits)?
        .into_iter()
        .map(|c| EdgeSubset(c.0 & !(1 << c.max_position().expect("nonempty"))))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The sets `S ⊆ E` containing no broken circuit. A loop contributes the
/// empty broken circuit, so the complex is then empty.
pub fn broken_circuit_complex(g: &LabeledMultigraph, limits: &Limits) -> Result<Vec<EdgeSubset>> {
    let all = broken_circuits(g, limits)?;
    let minimal: Vec<EdgeSubset> = all
        .iter()
        .copied()
        .filter(|b| !all.iter().any(|c| c != b && c.is_subset_of(*b)))
        .collect();
    Ok(all_edge_subsets(g, limits)?
        .filter(|s| !minimal.iter().any(|b| b.is_subset_of(*s)))
        .collect())
}
