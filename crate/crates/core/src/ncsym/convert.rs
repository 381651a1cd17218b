//! Change of basis between `m`, `p` and `e`.
//!
//! Routes: `m ↔ p` and `e ↔ p` directly; `e ↔ m` through `p`. The direct
//! `m → e` and `e → m` formulas are exposed separately for cross-checks.

use super::{Accumulator, Basis, NCExpr, Rational};
use crate::partition::{all_partitions, coarsenings, mobius_from_bottom, refinements};

pub fn to_basis(x: &NCExpr, target: Basis) -> NCExpr {
    use Basis::*;
    match (x.basis(), target) {
        (a, b) if a == b => x.clone(),
        (M, P) => m_to_p(x),
        (P, M) => p_to_m(x),
        (E, P) => e_to_p(x),
        (P, E) => p_to_e(x),
        (M, E) => p_to_e(&m_to_p(x)),
        (E, M) => p_to_m(&e_to_p(x)),
        _ => unreachable!(),
    }
}

/// `m_π = Σ_{σ≥π} μ(π,σ) p_σ`
fn m_to_p(x: &NCExpr) -> NCExpr {
    let mut acc = Accumulator::new(Basis::P, x.degree());
    for (pi, c) in x.terms() {
        for (sigma, mu) in coarsenings(pi) {
            acc.add(sigma, c * Rational::from_integer(mu));
        }
    }
    acc.finish()
}

/// `p_π = Σ_{σ≥π} m_σ`
fn p_to_m(x: &NCExpr) -> NCExpr {
    let mut acc = Accumulator::new(Basis::M, x.degree());
    for (pi, c) in x.terms() {
        for (sigma, _) in coarsenings(pi) {
            acc.add(sigma, c.clone());
        }
    }
    acc.finish()
}

/// `e_π = Σ_{σ≤π} μ(0̂,σ) p_σ`
fn e_to_p(x: &NCExpr) -> NCExpr {
    let mut acc = Accumulator::new(Basis::P, x.degree());
    for (pi, c) in x.terms() {
        for (sigma, _) in refinements(pi) {
            let mu = mobius_from_bottom(&sigma);
            acc.add(sigma, c * Rational::from_integer(mu));
        }
    }
    acc.finish()
}

/// `p_π = (1/μ(0̂,π)) Σ_{σ≤π} μ(σ,π) e_σ`
fn p_to_e(x: &NCExpr) -> NCExpr {
    let mut acc = Accumulator::new(Basis::E, x.degree());
    for (pi, c) in x.terms() {
        let scale = c / Rational::from_integer(mobius_from_bottom(pi));
        for (sigma, mu) in refinements(pi) {
            acc.add(sigma, &scale * Rational::from_integer(mu));
        }
    }
    acc.finish()
}

/// `m_π = Σ_{τ≥π} μ(π,τ)/μ(0̂,τ) Σ_{σ≤τ} μ(σ,τ) e_σ`, without the `p`
/// intermediate.
pub fn m_to_e_direct(x: &NCExpr) -> NCExpr {
    assert_eq!(x.basis(), Basis::M, "m_to_e_direct expects the m basis");
    let mut acc = Accumulator::new(Basis::E, x.degree());
    for (pi, c) in x.terms() {
        for (tau, mu_up) in coarsenings(pi) {
            let outer = c * Rational::new(mu_up, mobius_from_bottom(&tau));
            for (sigma, mu_down) in refinements(&tau) {
                acc.add(sigma, &outer * Rational::from_integer(mu_down));
            }
        }
    }
    acc.finish()
}

/// `e_π = Σ_{σ ∧ π = 0̂} m_σ`, straight from the definition.
pub fn e_to_m_direct(x: &NCExpr) -> NCExpr {
    assert_eq!(x.basis(), Basis::E, "e_to_m_direct expects the e basis");
    let d = x.degree();
    let mut acc = Accumulator::new(Basis::M, d);
    let all: Vec<_> = all_partitions(d).collect();
    for (pi, c) in x.terms() {
        for sigma in &all {
            if sigma.meet(pi).expect("same degree").is_finest() {
                acc.add(sigma.clone(), c.clone());
            }
        }
    }
    acc.finish()
}
