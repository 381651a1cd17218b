//! Acyclic orientations and their sinks, by exhaustive enumeration.

use std::collections::BTreeMap;

use super::LabeledMultigraph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Directions for the non-loop edges, in edge-list order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    d: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn num_vertices(&self) -> usize {
        self.d
    }

    /// `(tail, head)` pairs.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// Vertices with every incident edge pointing in.
pub fn sinks(o: &Orientation) -> Vec<usize> {
    let mut has_out = vec![false; o.d];
    for &(t, _) in &o.arcs {
        has_out[t - 1] = true;
    }
    (1..=o.d).filter(|&v| !has_out[v - 1]).collect()
}

fn is_acyclic(out: &[u64]) -> bool {
    let mut alive: u64 = if out.len() == 64 { u64::MAX } else { (1 << out.len()) - 1 };
    loop {
        let mut removed = false;
        let mut a = alive;
        while a != 0 {
            let v = a.trailing_zeros() as usize;
            a &= a - 1;
            if out[v] & alive == 0 {
                alive &= !(1 << v);
                removed = true;
            }
        }
        if alive == 0 {
            return true;
        }
        if !removed {
            return false;
        }
    }
}

/// Calls `f` with the out-neighbor masks of every acyclic orientation.
fn for_each_acyclic(
    g: &LabeledMultigraph,
    limits: &Limits,
    mut f: impl FnMut(&[u64], u64),
) -> Result<()> {
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (e.u - 1, e.v - 1))
        .collect();
    limits.check_edges(pairs.len())?;
    if g.has_loop() {
        return Ok(());
    }
    let d = g.num_vertices();
    let mut out = vec![0u64; d];
    for mask in 0..1u64 << pairs.len() {
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 0 {
                out[a] |= 1 << b;
            } else {
                out[b] |= 1 << a;
            }
        }
        if is_acyclic(&out) {
            f(&out, mask);
        }
    }
    Ok(())
}

/// All acyclic orientations; none if `G` has a loop.
pub fn acyclic_orientations(g: &LabeledMultigraph, limits: &Limits) -> Result<Vec<Orientation>> {
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (e.u, e.v))
        .collect();
    let mut result = Vec::new();
    for_each_acyclic(g, limits, |_, mask| {
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        result.push(Orientation {
            d: g.num_vertices(),
            arcs,
        });
    })?;
    Ok(result)
}

/// Acyclic orientations whose only sink is `v0`.
pub fn count_unique_sink(g: &LabeledMultigraph, v0: usize, limits: &Limits) -> Result<u64> {
    if v0 == 0 || v0 > g.num_vertices() {
        return Err(Error::IndexOutOfRange {
            index: v0,
            range: format!("1..={}", g.num_vertices()),
        });
    }
    let target = 1u64 << (v0 - 1);
    let mut count = 0;
    for_each_acyclic(g, limits, |out, _| {
        let sinks = out
            .iter()
            .enumerate()
            .fold(0u64, |acc, (v, &o)| if o == 0 { acc | 1 << v } else { acc });
        if sinks == target {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Number of acyclic orientations with exactly `j` sinks, for each `j`.
pub fn sink_distribution(g: &LabeledMultigraph, limits: &Limits) -> Result<BTreeMap<usize, u64>> {
    let mut dist = BTreeMap::new();
    for_each_acyclic(g, limits, |out, _| {
        let j = out.iter().filter(|&&o| o == 0).count();
        *dist.entry(j).or_insert(0) += 1;
    })?;
    Ok(dist)
}
