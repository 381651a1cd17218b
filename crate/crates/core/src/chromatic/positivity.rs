//! Class expansions: positivity search, closed forms for families, and
//! the attachment identities for `G + K_m` and `G + D`.

use num_bigint::BigInt;
use serde::Serialize;

use super::ChromaticEngine;
use crate::error::{Error, Result};
use crate::graph::{attach_complete, attach_diamond, cycle, path, LabeledMultigraph};
use crate::ncsym::{amalgamate, induce_at, to_basis, Basis, CExpr, ClassKey, EClassExpr, NCExpr, Rational};
use crate::partition::{factorial, IntegerPartition, Perm};

/// Outcome of [`ChromaticEngine::search_positive_labeling`].
#[derive(Debug, Clone, Serialize)]
pub struct PositivitySearch {
    /// Relabeling (as 1-based images) and marked index of the first
    /// nonnegative class expansion found.
    pub witness: Option<(Vec<usize>, usize)>,
    #[serde(skip)]
    pub witness_perm: Option<Perm>,
    pub classes: Option<EClassExpr>,
    pub relabelings_tried: usize,
    /// True when every relabeling was tried.
    pub exhaustive: bool,
}

pub(super) fn search(
    eng: &ChromaticEngine,
    g: &LabeledMultigraph,
    budget: Option<usize>,
) -> Result<PositivitySearch> {
    let d = g.num_vertices();
    let y = eng.y_e(g)?;
    let total: u128 = (1..=d as u128).product();
    let budget = budget.unwrap_or(if d <= 7 { total as usize } else { 5040 });
    let mut tried = 0;
    for perm in Perm::all(d).take(budget) {
        tried += 1;
        let yd = y.act(&perm)?;
        for i in (1..=d).rev() {
            let classes = amalgamate(&yd, i)?;
            if classes.is_class_nonneg() {
                return Ok(PositivitySearch {
                    witness: Some((perm.images(), i)),
                    witness_perm: Some(perm),
                    classes: Some(classes),
                    relabelings_tried: tried,
                    exhaustive: tried as u128 == total,
                });
            }
        }
    }
    Ok(PositivitySearch {
        witness: None,
        witness_perm: None,
        classes: None,
        relabelings_tried: tried,
        exhaustive: tried as u128 == total,
    })
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `K_d - e ≡_d (d-2)/(d-1) e_([d]) + 1/(d-1) e_([d-1]/d)`.
pub fn closed_form_kd_minus_e(d: usize) -> Result<EClassExpr> {
    if d < 2 {
        return Err(Error::InvalidArgument("K_d - e needs d >= 2".into()));
    }
    let di = d as i64;
    EClassExpr::from_terms(
        d,
        d,
        [
            (ClassKey::new(IntegerPartition::from_parts(vec![d]), d), ratio(di - 2, di - 1)),
            (
                ClassKey::new(IntegerPartition::from_parts(vec![d - 1, 1]), 1),
                ratio(1, di - 1),
            ),
        ],
    )
}

/// `X_{K_d - e} = d(d-2)(d-2)! e_(d) + (d-2)! e_(d-1,1)`.
pub fn closed_form_x_kd_minus_e(d: usize) -> Result<CExpr> {
    if d < 2 {
        return Err(Error::InvalidArgument("K_d - e needs d >= 2".into()));
    }
    let f = factorial(d - 2);
    let top = BigInt::from(d) * BigInt::from(d - 2) * &f;
    CExpr::from_terms(
        Basis::E,
        d,
        [
            (IntegerPartition::from_parts(vec![d]), Rational::from_integer(top)),
            (IntegerPartition::from_parts(vec![d - 1, 1]), Rational::from_integer(f)),
        ],
    )
}

/// Moves each class `(λ, b)` of `Y_{P_d}` mod `d` to `(λ with b → b+1, b+1)`
/// mod `d+1`, the predicted classes of `Y_{C_{d+1}}`.
pub fn cycle_prediction_from_path(path_classes: &EClassExpr) -> Result<EClassExpr> {
    let d = path_classes.degree();
    let terms = path_classes
        .terms()
        .iter()
        .map(|(k, c)| {
            let shape = k
                .shape
                .replace_part(k.marked_block, k.marked_block + 1)
                .ok_or_else(|| Error::InvalidArgument(format!("malformed class {k}")))?;
            Ok((ClassKey::new(shape, k.marked_block + 1), c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    EClassExpr::from_terms(d + 1, d + 1, terms)
}

/// Computes `Y_{P_d}` and `Y_{C_{d+1}}` by deletion-contraction and compares
/// the cycle's classes with the prediction from the path's.
pub fn path_cycle_relation_check(eng: &ChromaticEngine, d: usize) -> Result<bool> {
    let classes = |g: &LabeledMultigraph, i: usize| -> Result<EClassExpr> {
        amalgamate(&to_basis(&eng.y_delcon(g)?, Basis::E), i)
    };
    let predicted = cycle_prediction_from_path(&classes(&path(d)?, d)?)?;
    Ok(predicted == classes(&cycle(d + 1)?, d + 1)?)
}

fn falling(x: usize, i: usize) -> BigInt {
    (0..i).map(|j| BigInt::from(x as i64 - j as i64)).product()
}

fn rising(x: usize, i: usize) -> BigInt {
    (0..i).map(|j| BigInt::from(x + j)).product()
}

fn require_marked_last(classes: &EClassExpr) -> Result<()> {
    if classes.marked() != classes.degree() {
        return Err(Error::InvalidArgument(format!(
            "expected classes modulo {} (the degree), got modulo {}",
            classes.degree(),
            classes.marked()
        )));
    }
    Ok(())
}

fn grown(shape: &IntegerPartition, b: usize, by: usize, extra: usize) -> Result<IntegerPartition> {
    let s = shape
        .replace_part(b, b + by)
        .ok_or_else(|| Error::InvalidArgument(format!("shape {shape} has no part {b}")))?;
    Ok(if extra > 0 { s.with_part(extra) } else { s })
}

/// Classes of `Y_{G+K_m}` mod `d+m-1` from the classes of `Y_G` mod `d`:
///
/// `Σ_(π) Σ_{i<m-1} c_(π) ⟨m-2⟩_i / (b)_{i+1} [(b-m+1+i) e_(π̂) + (i+1) e_(π̄)]`
///
/// with `b = |B_π|`; `π̂` grows `B_π` by `i` and adds a marked block of size
/// `m-1-i`, `π̄` grows the marked `B_π` by `i+1` and adds a block of size
/// `m-2-i`.
pub fn attach_km_closed_form(classes: &EClassExpr, m: usize) -> Result<EClassExpr> {
    if m < 2 {
        return Err(Error::InvalidArgument("attach_km_closed_form needs m >= 2".into()));
    }
    require_marked_last(classes)?;
    let k = m - 1;
    let top = classes.degree() + k;
    let mut out = EClassExpr::zero(top, top);
    for (key, c) in classes.terms() {
        let b = key.marked_block;
        for i in 0..k {
            let w = c * Rational::new(falling(k - 1, i), rising(b, i + 1));
            let hat = ClassKey::new(grown(&key.shape, b, i, k - i)?, k - i);
            out.add_term(hat, &w * Rational::from_integer(BigInt::from(b as i64 - k as i64 + i as i64)));
            let bar = ClassKey::new(grown(&key.shape, b, i + 1, k - 1 - i)?, b + i + 1);
            out.add_term(bar, &w * Rational::from_integer(BigInt::from(i + 1)));
        }
    }
    Ok(out)
}

/// Classes of `Y_{G+K_m}↑_d^{d+m}` mod `d+m` from the classes of `Y_G`
/// mod `d`:
///
/// `Σ_(π) Σ_{i<m} c_(π) ⟨m-1⟩_i / (b)_{i+1} [e_(π+i / d+i+1..d+m) - e_(π+i+(d+m) / d+i+1..d+m-1)]`
pub fn induce_power_closed_form(classes: &EClassExpr, m: usize) -> Result<EClassExpr> {
    if m < 1 {
        return Err(Error::InvalidArgument("induce_power_closed_form needs m >= 1".into()));
    }
    require_marked_last(classes)?;
    let top = classes.degree() + m;
    let mut out = EClassExpr::zero(top, top);
    for (key, c) in classes.terms() {
        let b = key.marked_block;
        for i in 0..m {
            let w = c * Rational::new(falling(m - 1, i), rising(b, i + 1));
            let apart = ClassKey::new(grown(&key.shape, b, i, m - i)?, m - i);
            out.add_term(apart, w.clone());
            let joined = ClassKey::new(grown(&key.shape, b, i + 1, m - 1 - i)?, b + i + 1);
            out.add_term(joined, -w);
        }
    }
    Ok(out)
}

fn e_classes_of(x: &NCExpr, i: usize) -> Result<EClassExpr> {
    amalgamate(&to_basis(x, Basis::E), i)
}

/// Scratch `Y_{G+K_m}↑_d^{d+m}` mod `d+m` against the closed form.
pub fn induce_power_check(eng: &ChromaticEngine, g: &LabeledMultigraph, m: usize) -> Result<bool> {
    let d = g.num_vertices();
    let h = attach_complete(g, m)?;
    let scratch = e_classes_of(&induce_at(&eng.y_delcon(&h)?, d, d + m)?, d + m)?;
    let formula = induce_power_closed_form(&eng.e_class_expansion(g, d)?, m)?;
    Ok(scratch == formula)
}

/// `Y_{G+K_m}↑_d^{d+j} ≡_d Y_{G+K_m}↑_d^{d+k}`.
pub fn jk_equivalence_check(
    eng: &ChromaticEngine,
    g: &LabeledMultigraph,
    m: usize,
    j: usize,
    k: usize,
) -> Result<bool> {
    if !(1 <= j && j < k && k <= m) {
        return Err(Error::InvalidArgument(format!("need 1 <= j < k <= m, got j={j} k={k} m={m}")));
    }
    let d = g.num_vertices();
    let y = eng.y_stable(&attach_complete(g, m)?)?;
    let left = e_classes_of(&induce_at(&y, d, d + j)?, d)?;
    let right = e_classes_of(&induce_at(&y, d, d + k)?, d)?;
    Ok(left == right)
}

/// `Y_G↑_i^{d+1} ≡_{d+1} Y_{(i,j)(G)}↑_j^{d+1}`, the right side computed
/// from the relabeled graph.
pub fn combine_check(eng: &ChromaticEngine, g: &LabeledMultigraph, i: usize, j: usize) -> Result<bool> {
    let d = g.num_vertices();
    let swapped = g.relabel(&Perm::transposition(d, i, j)?)?;
    let left = e_classes_of(&induce_at(&eng.y_stable(g)?, i, d + 1)?, d + 1)?;
    let right = e_classes_of(&induce_at(&eng.y_stable(&swapped)?, j, d + 1)?, d + 1)?;
    Ok(left == right)
}

/// Scratch class expansion of `G + K_m` against [`attach_km_closed_form`].
pub fn attach_km_check(eng: &ChromaticEngine, g: &LabeledMultigraph, m: usize) -> Result<bool> {
    let d = g.num_vertices();
    let formula = attach_km_closed_form(&eng.e_class_expansion(g, d)?, m)?;
    let scratch = eng.e_class_expansion(&attach_complete(g, m)?, d + m - 1)?;
    Ok(formula == scratch)
}

/// Result of [`attach_diamond_positivity_check`].
#[derive(Debug, Clone, Serialize)]
pub struct DiamondReport {
    /// Whether `Y_G` is class-nonnegative modulo `d`, the vertex the
    /// diamond is glued to.
    pub g_positive: bool,
    /// A marked index at which `Y_{G+D}` is class-nonnegative, trying the
    /// last index first.
    pub attached_positive_at: Option<usize>,
    pub attached_classes: Option<EClassExpr>,
}

impl DiamondReport {
    /// The implication "G positive mod d ⇒ G + D positive".
    pub fn holds(&self) -> bool {
        !self.g_positive || self.attached_positive_at.is_some()
    }
}

fn first_positive_index(y_e: &NCExpr) -> Result<Option<(usize, EClassExpr)>> {
    for i in (1..=y_e.degree()).rev() {
        let c = amalgamate(y_e, i)?;
        if c.is_class_nonneg() {
            return Ok(Some((i, c)));
        }
    }
    Ok(None)
}

/// Computes `Y_{G+D}` from scratch and, when `Y_G` is nonnegative modulo
/// `d`, looks for a marked index with a nonnegative class expansion (both
/// in their given labelings).
///
/// Positivity of `G` at some other index is not enough: a path `1-3-2`
/// is positive modulo 1, yet gluing a diamond at its middle vertex creates
/// an induced claw and no labeling of the result is positive.
pub fn attach_diamond_positivity_check(eng: &ChromaticEngine, g: &LabeledMultigraph) -> Result<DiamondReport> {
    let d = g.num_vertices();
    let g_positive = d == 0 || eng.is_e_class_positive(g, d)?;
    let gd = attach_diamond(g)?;
    let gd_pos = first_positive_index(&eng.y_e(&gd)?)?;
    Ok(DiamondReport {
        g_positive,
        attached_positive_at: gd_pos.as_ref().map(|(i, _)| *i),
        attached_classes: gd_pos.map(|(_, c)| c),
    })
}
