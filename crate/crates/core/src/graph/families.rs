//! Named graph families, all with fixed labelings.

use std::fmt;
use std::str::FromStr;

use super::LabeledMultigraph;
use crate::error::{Error, Result};

fn build(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<LabeledMultigraph> {
    let edges: Vec<_> = edges.into_iter().collect();
    LabeledMultigraph::from_edges(d, &edges)
}

fn positive(name: &str, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument(format!("{name} needs d >= 1")));
    }
    Ok(())
}

/// `v_1 v_2, v_2 v_3, ..., v_{d-1} v_d`.
pub fn path(d: usize) -> Result<LabeledMultigraph> {
    positive("path", d)?;
    build(d, (1..d).map(|i| (i, i + 1)))
}

/// The path plus `v_d v_1`; `C_1` is a loop and `C_2` a double edge.
pub fn cycle(d: usize) -> Result<LabeledMultigraph> {
    positive("cycle", d)?;
    build(d, (1..d).map(|i| (i, i + 1)).chain([(1, d)]))
}

/// Edges in lexicographic order.
pub fn complete(d: usize) -> Result<LabeledMultigraph> {
    positive("complete", d)?;
    build(d, (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))))
}

/// `K_d` without the edge `v_{d-1} v_d`.
pub fn complete_minus_edge(d: usize) -> Result<LabeledMultigraph> {
    if d < 2 {
        return Err(Error::InvalidArgument("K_d - e needs d >= 2".into()));
    }
    build(
        d,
        (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
            .filter(|&e| e != (d - 1, d)),
    )
}

pub fn empty(d: usize) -> Result<LabeledMultigraph> {
    LabeledMultigraph::empty(d)
}

/// Simple complement; loops and multiplicities of `g` are ignored.
pub fn complement(g: &LabeledMultigraph) -> LabeledMultigraph {
    let d = g.num_vertices();
    let edges: Vec<_> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.adjacent(i, j))
        .collect();
    LabeledMultigraph::from_edges(d, &edges).expect("endpoints in range")
}

/// `G ⊎ H` with `H`'s vertices numbered after `G`'s.
pub fn disjoint_union(g: &LabeledMultigraph, h: &LabeledMultigraph) -> Result<LabeledMultigraph> {
    let shift = g.num_vertices();
    build(
        shift + h.num_vertices(),
        g.edge_pairs()
            .into_iter()
            .chain(h.edge_pairs().into_iter().map(|(a, b)| (a + shift, b + shift))),
    )
}

/// `G ⊎ {v_{d+1}}`.
pub fn add_isolated_vertex(g: &LabeledMultigraph) -> Result<LabeledMultigraph> {
    build(g.num_vertices() + 1, g.edge_pairs())
}

/// The indifference graph on `[d]`: `v_i v_j` is an edge when `i` and `j`
/// lie in a common interval `[k, l]`.
pub fn indifference(d: usize, intervals: &[(usize, usize)]) -> Result<LabeledMultigraph> {
    for &(k, l) in intervals {
        if k == 0 || k > l || l > d {
            return Err(Error::InvalidArgument(format!(
                "interval [{k},{l}] is not inside [1,{d}]"
            )));
        }
    }
    build(
        d,
        (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
            .filter(|&(i, j)| intervals.iter().any(|&(k, l)| k <= i && j <= l)),
    )
}

/// `G + K_m`: a new `K_m` whose first vertex is `v_d`, adding
/// `v_{d+1}, ..., v_{d+m-1}`.
pub fn attach_complete(g: &LabeledMultigraph, m: usize) -> Result<LabeledMultigraph> {
    if m == 0 {
        return Err(Error::InvalidArgument("attach_complete needs m >= 1".into()));
    }
    let d = g.num_vertices();
    if d == 0 {
        return complete(m);
    }
    let top = d + m - 1;
    build(
        top,
        g.edge_pairs()
            .into_iter()
            .chain((d..=top).flat_map(|i| (i + 1..=top).map(move |j| (i, j)))),
    )
}

/// `K_{α_1} + K_{α_2} + ...`, cliques of sizes `α_i` glued in a row at
/// single vertices. `(2,2)` is `P_3`.
pub fn k_alpha_chain(alpha: &[usize]) -> Result<LabeledMultigraph> {
    let (&first, rest) = alpha
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty composition".into()))?;
    if alpha.contains(&0) {
        return Err(Error::InvalidArgument(format!("{alpha:?} has a zero part")));
    }
    rest.iter()
        .try_fold(complete(first)?, |g, &m| attach_complete(&g, m))
}

/// Two triangles sharing the edge `v_2 v_3`.
pub fn diamond() -> LabeledMultigraph {
    indifference(4, &[(1, 3), (2, 4)]).expect("valid intervals")
}

/// `G + D`: a diamond whose vertex `1` is `v_d`.
pub fn attach_diamond(g: &LabeledMultigraph) -> Result<LabeledMultigraph> {
    let d = g.num_vertices();
    if d == 0 {
        return Ok(diamond());
    }
    let shift = d - 1;
    build(
        d + 3,
        g.edge_pairs().into_iter().chain(
            diamond()
                .edge_pairs()
                .into_iter()
                .map(|(a, b)| (a + shift, b + shift)),
        ),
    )
}

/// A family addressed by name and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMinusEdge(usize),
    Empty(usize),
    Diamond,
    Chain(Vec<usize>),
    Indifference(usize, Vec<(usize, usize)>),
}

impl Family {
    pub const NAMES: [&'static str; 8] = [
        "path",
        "cycle",
        "complete",
        "complete-minus-edge",
        "empty",
        "diamond",
        "chain",
        "indifference",
    ];

    /// `d` is required by the sized families, `alpha` by `chain`, and
    /// `d` plus `intervals` by `indifference`.
    pub fn from_parts(
        name: &str,
        d: Option<usize>,
        alpha: Option<&[usize]>,
        intervals: Option<&[(usize, usize)]>,
    ) -> Result<Family> {
        let need_d = || d.ok_or_else(|| Error::InvalidArgument(format!("family {name} needs d")));
        let fam = match name.to_ascii_lowercase().as_str() {
            "path" => Family::Path(need_d()?),
            "cycle" => Family::Cycle(need_d()?),
            "complete" => Family::Complete(need_d()?),
            "complete-minus-edge" | "kd-minus-e" | "kminuse" => {
                Family::CompleteMinusEdge(need_d()?)
            }
            "empty" | "edgeless" => Family::Empty(need_d()?),
            "diamond" => Family::Diamond,
            "chain" => Family::Chain(
                alpha
                    .ok_or_else(|| Error::InvalidArgument("family chain needs alpha".into()))?
                    .to_vec(),
            ),
            "indifference" => Family::Indifference(
                need_d()?,
                intervals
                    .ok_or_else(|| {
                        Error::InvalidArgument("family indifference needs intervals".into())
                    })?
                    .to_vec(),
            ),
            other => {
                return Err(Error::Parse(format!(
                    "unknown family {other:?} (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        Ok(fam)
    }

    pub fn build(&self) -> Result<LabeledMultigraph> {
        match self {
            Family::Path(d) => path(*d),
            Family::Cycle(d) => cycle(*d),
            Family::Complete(d) => complete(*d),
            Family::CompleteMinusEdge(d) => complete_minus_edge(*d),
            Family::Empty(d) => empty(*d),
            Family::Diamond => Ok(diamond()),
            Family::Chain(alpha) => k_alpha_chain(alpha),
            Family::Indifference(d, intervals) => indifference(*d, intervals),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Family::Path(d) => write!(f, "path d={d}"),
            Family::Cycle(d) => write!(f, "cycle d={d}"),
            Family::Complete(d) => write!(f, "complete d={d}"),
            Family::CompleteMinusEdge(d) => write!(f, "complete-minus-edge d={d}"),
            Family::Empty(d) => write!(f, "empty d={d}"),
            Family::Diamond => f.write_str("diamond"),
            Family::Chain(a) => write!(f, "chain alpha={}", join(a)),
            Family::Indifference(d, iv) => {
                let iv: Vec<String> = iv.iter().map(|(k, l)| format!("{k}-{l}")).collect();
                write!(f, "indifference d={d} intervals={}", iv.join(","))
            }
        }
    }
}

/// Parses `3,2,2` as a composition.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            usize::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect()
}
