//! The degree-raising operators `↑` and `↑_k^l`.

use super::{to_basis, Accumulator, Basis, NCExpr, Rational};
use crate::error::{Error, Result};
use crate::partition::{mobius_from_bottom, refinements};

/// `x↑`: repeats the last variable. Degree `d` in, `d + 1` out.
///
/// Acts term-wise through `π ↦ π + (d+1)` in the `m` and `p` bases; the `e`
/// basis goes through `p`.
pub fn induce(x: &NCExpr) -> NCExpr {
    match x.basis() {
        Basis::M | Basis::P => {
            let mut acc = Accumulator::new(x.basis(), x.degree() + 1);
            for (pi, c) in x.terms() {
                acc.add(pi.insert_into_block_of_last(), c.clone());
            }
            acc.finish()
        }
        Basis::E => induce_e_via_p(x),
    }
}

pub fn induce_e_via_p(x: &NCExpr) -> NCExpr {
    let up = induce(&to_basis(x, Basis::P));
    to_basis(&up, x.basis())
}

/// `e_π↑ = Σ_{σ≤π} μ(0̂,σ)/μ(0̂,σ+(d+1)) Σ_{τ≤σ+(d+1)} μ(τ,σ+(d+1)) e_τ`
pub fn induce_e_changeup(x: &NCExpr) -> Result<NCExpr> {
    if x.basis() != Basis::E {
        return Err(Error::WrongBasis {
            op: "induce_e_changeup",
            basis: x.basis(),
        });
    }
    let mut acc = Accumulator::new(Basis::E, x.degree() + 1);
    for (pi, c) in x.terms() {
        for (sigma, _) in refinements(pi) {
            let raised = sigma.insert_into_block_of_last();
            let ratio = Rational::new(mobius_from_bottom(&sigma), mobius_from_bottom(&raised));
            let outer = c * ratio;
            for (tau, mu) in refinements(&raised) {
                acc.add(tau, &outer * Rational::from_integer(mu));
            }
        }
    }
    Ok(acc.finish())
}

/// `x↑_k^l`: repeats the variable in position `k` again in position `l`
/// (`1 <= k < l <= d + 1`).
pub fn induce_at(x: &NCExpr, k: usize, l: usize) -> Result<NCExpr> {
    let d = x.degree();
    if k == 0 || k >= l || l > d + 1 {
        return Err(Error::IndexOutOfRange {
            index: if k == 0 || k > d { k } else { l },
            range: format!("1 <= k < l <= {}", d + 1),
        });
    }
    Ok(match x.basis() {
        Basis::M | Basis::P => {
            let mut acc = Accumulator::new(x.basis(), d + 1);
            for (pi, c) in x.terms() {
                acc.add(pi.duplicate_position(k, l), c.clone());
            }
            acc.finish()
        }
        Basis::E => to_basis(&induce_at(&to_basis(x, Basis::P), k, l)?, Basis::E),
    })
}
