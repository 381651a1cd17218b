use super::{EdgeSubset, LabeledMultigraph};
use crate::error::Result;
use crate::limits::Limits;
use crate::partition::SetPartition;

/// Every partition of the vertices with no edge inside a block; empty if
/// `G` has a loop. Output is in restricted-growth order.
pub fn stable_partitions(g: &LabeledMultigraph) -> Vec<SetPartition> {
    let d = g.num_vertices();
    let mut out = Vec::new();
    if g.has_loop() {
        return out;
    }
    let adj = g.adjacency_masks();
    let mut rgs = vec![0u8; d];
    let mut block_masks: Vec<u64> = Vec::with_capacity(d);
    fn rec(
        v: usize,
        adj: &[u64],
        rgs: &mut Vec<u8>,
        blocks: &mut Vec<u64>,
        out: &mut Vec<SetPartition>,
    ) {
        if v == adj.len() {
            out.push(SetPartition::from_rgs_unchecked(rgs.clone()));
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b] & adj[v] == 0 {
                rgs[v] = b as u8;
                blocks[b] |= 1 << v;
                rec(v + 1, adj, rgs, blocks, out);
                blocks[b] &= !(1 << v);
            }
        }
        rgs[v] = blocks.len() as u8;
        blocks.push(1 << v);
        rec(v + 1, adj, rgs, blocks, out);
        blocks.pop();
    }
    if d == 0 {
        return out;
    }
    rec(0, &adj, &mut rgs, &mut block_masks, &mut out);
    out
}

/// Number of proper colorings `V -> {1..n}`, by trying all `n^d` maps.
pub fn proper_coloring_count(g: &LabeledMultigraph, n: usize, limits: &Limits) -> Result<u128> {
    let d = g.num_vertices();
    limits.check_colorings(n, d)?;
    if g.has_loop() || (n == 0 && d > 0) {
        return Ok(0);
    }
    let edges = g.edge_pairs();
    let mut colors = vec![0usize; d];
    let mut count = 0u128;
    loop {
        if edges.iter().all(|&(a, b)| colors[a - 1] != colors[b - 1]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return Ok(count);
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Connected components of the spanning subgraph with edge set `s`.
pub fn components_partition(g: &LabeledMultigraph, s: EdgeSubset) -> SetPartition {
    let d = g.num_vertices();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (pos, e) in g.edges().iter().enumerate() {
        if s.contains(pos) {
            let (a, b) = (find(&mut parent, e.u - 1), find(&mut parent, e.v - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..d).map(|x| find(&mut parent, x)).collect();
    SetPartition::from_labels(&roots)
}
