//! Recovering a simple graph from `Y_G`, and the tree experiment.

use std::collections::HashMap;

use serde::Serialize;

use super::ChromaticEngine;
use crate::error::{Error, Result};
use crate::graph::{complement, enumerate_trees, stable_partitions, LabeledMultigraph};
use crate::ncsym::{to_basis, Basis, CExpr, EClassExpr, NCExpr};

/// `v_i v_j` is a non-edge exactly when `i` and `j` share a block in some
/// support partition of the `m`-expansion; the graph is the complement of
/// that relation. The answer is re-expanded and checked against `y`.
pub fn reconstruct_from_y(y: &NCExpr, d: usize) -> Result<LabeledMultigraph> {
    if y.degree() != d {
        return Err(Error::DegreeMismatch {
            left: d,
            right: y.degree(),
        });
    }
    let y = to_basis(y, Basis::M);
    let mut together = vec![vec![false; d + 1]; d + 1];
    for pi in y.support() {
        for block in pi.blocks() {
            for (a, &i) in block.iter().enumerate() {
                for &j in &block[a + 1..] {
                    together[i][j] = true;
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .filter(|&(i, j)| together[i][j])
        .collect();
    let g = complement(&LabeledMultigraph::from_edges(d, &pairs)?);
    let check = NCExpr::from_terms(
        Basis::M,
        d,
        stable_partitions(&g)
            .into_iter()
            .map(|p| (p, crate::ncsym::int(1))),
    )?;
    if check != y {
        return Err(Error::Inconsistent(
            "expansion is not Y_G of any simple graph".into(),
        ));
    }
    Ok(g)
}

/// Results of [`tree_experiment`].
#[derive(Debug, Clone, Serialize)]
pub struct TreeReport {
    pub d: usize,
    pub trees: Vec<LabeledMultigraph>,
    /// Index pairs of trees with equal `X_T`.
    pub x_collisions: Vec<(usize, usize)>,
    /// Index pairs of trees with equal `Y_T`.
    pub y_collisions: Vec<(usize, usize)>,
    /// Whether every tree came back from [`reconstruct_from_y`].
    pub reconstruction_ok: bool,
    /// Index pairs whose class expansions mod `d` coincide, in the
    /// labelings produced by the enumeration.
    pub class_collisions: Vec<(usize, usize)>,
    pub x: Vec<CExpr>,
}

impl TreeReport {
    pub fn x_distinct(&self) -> bool {
        self.x_collisions.is_empty()
    }

    pub fn y_distinct(&self) -> bool {
        self.y_collisions.is_empty()
    }
}

fn collisions<T: std::hash::Hash + Eq>(items: &[T]) -> Vec<(usize, usize)> {
    let mut first: HashMap<&T, Vec<usize>> = HashMap::new();
    for (i, x) in items.iter().enumerate() {
        first.entry(x).or_default().push(i);
    }
    let mut out: Vec<(usize, usize)> = first
        .values()
        .flat_map(|idx| {
            idx.iter()
                .enumerate()
                .flat_map(move |(a, &i)| idx[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Computes `X_T`, `Y_T` and the class expansion of every tree on `d`
/// vertices (one per isomorphism class) and reports which coincide.
pub fn tree_experiment(eng: &ChromaticEngine, d: usize) -> Result<TreeReport> {
    let trees = enumerate_trees(d, eng.limits())?;
    let mut ys = Vec::with_capacity(trees.len());
    let mut xs = Vec::with_capacity(trees.len());
    let mut classes: Vec<EClassExpr> = Vec::with_capacity(trees.len());
    let mut reconstruction_ok = true;
    for t in &trees {
        let y = eng.y_stable(t)?;
        reconstruction_ok &= reconstruct_from_y(&y, d).is_ok_and(|g| g.same_graph(t));
        xs.push(crate::ncsym::commutative_image(&y));
        classes.push(crate::ncsym::amalgamate(&to_basis(&y, Basis::E), d)?);
        ys.push(y);
    }
    let key = |v: &[String]| collisions(v);
    Ok(TreeReport {
        d,
        x_collisions: key(&xs.iter().map(|x| serde_json::to_string(x).expect("json")).collect::<Vec<_>>()),
        y_collisions: key(&ys.iter().map(|y| serde_json::to_string(y).expect("json")).collect::<Vec<_>>()),
        class_collisions: key(
            &classes
                .iter()
                .map(|c| serde_json::to_string(c).expect("json"))
                .collect::<Vec<_>>(),
        ),
        reconstruction_ok,
        trees,
        x: xs,
    })
}
