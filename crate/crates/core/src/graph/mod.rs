//! Labeled multigraphs with loops, and the enumerations built on them.

mod broken_circuit;
mod coloring;
mod families;
mod io;
mod orientation;
mod trees;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Perm;

pub use broken_circuit::{all_edge_subsets, broken_circuit_complex, broken_circuits, circuits, EdgeSubset};
pub use coloring::{components_partition, proper_coloring_count, stable_partitions};
pub use families::{
    add_isolated_vertex, attach_complete, attach_diamond, complement, complete,
    complete_minus_edge, cycle, diamond, disjoint_union, empty, indifference, k_alpha_chain,
    parse_usize_list, path, Family,
};
pub use io::parse_graph;
pub use orientation::{
    acyclic_orientations, count_unique_sink, sink_distribution, sinks, Orientation,
};
pub use trees::{enumerate_trees, is_isomorphic};

/// Vertices are stored as `u64` bitmasks in several places.
pub const MAX_VERTICES: usize = 64;

/// One edge instance. Endpoints are 1-based with `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    fn new(id: usize, a: usize, b: usize) -> Self {
        Edge {
            id,
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// A graph on `v_1..v_d` whose edge list order is the total order used for
/// broken circuits. Edge ids survive deletion, contraction and relabeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledMultigraph {
    d: usize,
    edges: Vec<Edge>,
}

/// Memo key: vertex count plus the sorted edge multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphKey {
    d: usize,
    edges: Vec<(u8, u8)>,
}

impl LabeledMultigraph {
    pub fn empty(d: usize) -> Result<Self> {
        if d > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VERTICES} vertices are supported, got {d}"
            )));
        }
        Ok(LabeledMultigraph {
            d,
            edges: Vec::new(),
        })
    }

    /// Edges get ids `0, 1, ...` in list order.
    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(d)?;
        for &(a, b) in edges {
            g.push_edge(a, b)?;
        }
        Ok(g)
    }

    /// Appends an edge with a fresh id and returns that id.
    pub fn push_edge(&mut self, a: usize, b: usize) -> Result<usize> {
        for x in [a, b] {
            if x == 0 || x > self.d {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    range: format!("1..={}", self.d),
                });
            }
        }
        let id = self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        self.edges.push(Edge::new(id, a, b));
        Ok(id)
    }

    pub fn num_vertices(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(Edge::endpoints).collect()
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or(Error::InvalidEdge(id))
    }

    fn position(&self, id: usize) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or(Error::InvalidEdge(id))
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert(e.endpoints()))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.iter().any(|e| e.u == a && e.v == b)
    }

    /// Neighbor bitmask per vertex (bit `j-1` for `v_j`), loops included.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.d];
        for e in &self.edges {
            adj[e.u - 1] |= 1 << (e.v - 1);
            adj[e.v - 1] |= 1 << (e.u - 1);
        }
        adj
    }

    /// Edge multiplicities, `mult[i][j]` for 0-based vertices.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; self.d]; self.d];
        for e in &self.edges {
            m[e.u - 1][e.v - 1] += 1;
            if !e.is_loop() {
                m[e.v - 1][e.u - 1] += 1;
            }
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        if self.d == 0 {
            return true;
        }
        let adj = self.adjacency_masks();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen.count_ones() as usize == self.d
    }

    /// `G \ e`.
    pub fn delete_edge(&self, id: usize) -> Result<Self> {
        let pos = self.position(id)?;
        let mut g = self.clone();
        g.edges.remove(pos);
        Ok(g)
    }

    /// `G / e`. For `e = v_k v_l` with `k < l`, `v_l` merges into `v_k` and
    /// higher labels drop by one. Other copies of `e` become loops;
    /// contracting a loop deletes it.
    pub fn contract_edge(&self, id: usize) -> Result<Self> {
        let pos = self.position(id)?;
        let Edge { u: k, v: l, .. } = self.edges[pos];
        if k == l {
            return self.delete_edge(id);
        }
        let relabel = |x: usize| match x.cmp(&l) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => k,
            std::cmp::Ordering::Greater => x - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, e)| Edge::new(e.id, relabel(e.u), relabel(e.v)))
            .collect();
        Ok(LabeledMultigraph {
            d: self.d - 1,
            edges,
        })
    }

    /// `δ(G)`: edge `v_i v_j` becomes `v_δ(i) v_δ(j)`; order and ids kept.
    pub fn relabel(&self, perm: &Perm) -> Result<Self> {
        if perm.degree() != self.d {
            return Err(Error::DegreeMismatch {
                left: perm.degree(),
                right: self.d,
            });
        }
        Ok(LabeledMultigraph {
            d: self.d,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.id, perm.apply(e.u), perm.apply(e.v)))
                .collect(),
        })
    }

    /// Same edges listed in a new order; `order[p]` is the old position of
    /// the edge placed at position `p`.
    pub fn reorder_edges(&self, order: &[usize]) -> Result<Self> {
        let m = self.edges.len();
        let mut seen = vec![false; m];
        if order.len() != m || order.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not an ordering of {m} edges"
            )));
        }
        Ok(LabeledMultigraph {
            d: self.d,
            edges: order.iter().map(|&p| self.edges[p]).collect(),
        })
    }

    /// Drops ids and order: two graphs with equal keys have the same `Y_G`.
    pub fn key(&self) -> GraphKey {
        let mut edges: Vec<(u8, u8)> = self
            .edges
            .iter()
            .map(|e| (e.u as u8, e.v as u8))
            .collect();
        edges.sort_unstable();
        GraphKey { d: self.d, edges }
    }

    /// Equality as labeled multigraphs, ignoring edge ids and order.
    pub fn same_graph(&self, other: &Self) -> bool {
        self.key() == other.key()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serializes")
    }

    /// Line format: `d <n>` then one `e <i> <j>` per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("d {}\n", self.d);
        for e in &self.edges {
            s.push_str(&format!("e {} {}\n", e.u, e.v));
        }
        s
    }
}

impl fmt::Display for LabeledMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} [", self.d)?;
        for (n, e) in self.edges.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for LabeledMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    d: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for LabeledMultigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            d: self.d,
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledMultigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = raw.edges.iter().map(|[a, b]| (*a, *b)).collect();
        LabeledMultigraph::from_edges(raw.d, &pairs).map_err(serde::de::Error::custom)
    }
}
