//! Trees up to isomorphism, and a brute-force isomorphism test.

use super::LabeledMultigraph;
use crate::error::Result;
use crate::limits::Limits;

fn degrees(m: &[Vec<usize>]) -> Vec<(usize, usize)> {
    // (degree, loops)
    m.iter()
        .enumerate()
        .map(|(i, row)| (row.iter().sum::<usize>() + row[i], row[i]))
        .collect()
}

/// Exact isomorphism of multigraphs by permutation search, pruned by
/// degree and loop counts.
pub fn is_isomorphic(g: &LabeledMultigraph, h: &LabeledMultigraph, limits: &Limits) -> Result<bool> {
    let d = g.num_vertices();
    if d != h.num_vertices() || g.num_edges() != h.num_edges() {
        return Ok(false);
    }
    limits.check_isomorphism(d)?;
    let (mg, mh) = (g.multiplicity_matrix(), h.multiplicity_matrix());
    let (dg, dh) = (degrees(&mg), degrees(&mh));
    let (mut sg, mut sh) = (dg.clone(), dh.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }
    fn extend(
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        dg: &[(usize, usize)],
        dh: &[(usize, usize)],
    ) -> bool {
        if i == mg.len() {
            return true;
        }
        for j in 0..mh.len() {
            if used[j] || dg[i] != dh[j] {
                continue;
            }
            if (0..i).any(|k| mg[i][k] != mh[j][map[k]]) {
                continue;
            }
            map.push(j);
            used[j] = true;
            if extend(i + 1, map, used, mg, mh, dg, dh) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    Ok(extend(
        0,
        &mut Vec::with_capacity(d),
        &mut vec![false; d],
        &mg,
        &mh,
        &dg,
        &dh,
    ))
}

/// One tree per isomorphism class on `d` vertices, each built by hanging
/// the leaf `v_d` on a smaller tree.
pub fn enumerate_trees(d: usize, limits: &Limits) -> Result<Vec<LabeledMultigraph>> {
    limits.check_isomorphism(d)?;
    if d <= 1 {
        return Ok(vec![LabeledMultigraph::empty(d)?]);
    }
    let mut found: Vec<(Vec<(usize, usize)>, LabeledMultigraph)> = Vec::new();
    for small in enumerate_trees(d - 1, limits)? {
        for v in 1..d {
            let mut t = super::add_isolated_vertex(&small)?;
            t.push_edge(v, d)?;
            let mut sig = degrees(&t.multiplicity_matrix());
            sig.sort_unstable();
            let mut duplicate = false;
            for (s, other) in &found {
                if *s == sig && is_isomorphic(&t, other, limits)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                found.push((sig, t));
            }
        }
    }
    Ok(found.into_iter().map(|(_, t)| t).collect())
}
