//! `Y_G` by four independent routes, and what follows from it.

mod positivity;
mod reconstruct;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    broken_circuit_complex, components_partition, stable_partitions, GraphKey, LabeledMultigraph,
};
use crate::limits::Limits;
use crate::ncsym::{
    amalgamate, commutative_image, induce, induce_at, specialize_ones, to_basis, Basis, CExpr,
    EClassExpr, NCExpr, Rational, UniPoly,
};
use crate::partition::{factorial, Perm, SetPartition};

pub use positivity::{
    attach_diamond_positivity_check, attach_km_check, attach_km_closed_form, closed_form_kd_minus_e,
    closed_form_x_kd_minus_e, combine_check, cycle_prediction_from_path, induce_power_check,
    induce_power_closed_form, jk_equivalence_check, path_cycle_relation_check, DiamondReport,
    PositivitySearch,
};
pub use reconstruct::{reconstruct_from_y, tree_experiment, TreeReport};

/// Which formula produced a `Y_G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Stable,
    Delcon,
    Subsets,
    BrokenCircuit,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Stable, Route::Delcon, Route::Subsets, Route::BrokenCircuit];

    pub fn name(self) -> &'static str {
        match self {
            Route::Stable => "stable",
            Route::Delcon => "delcon",
            Route::Subsets => "subsets",
            Route::BrokenCircuit => "broken-circuit",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "stable" => Ok(Route::Stable),
            "delcon" | "deletion-contraction" => Ok(Route::Delcon),
            "subsets" => Ok(Route::Subsets),
            "broken" | "broken-circuit" | "nbc" => Ok(Route::BrokenCircuit),
            other => Err(Error::Parse(format!(
                "unknown route {other:?} (expected stable, delcon, subsets or broken)"
            ))),
        }
    }
}

/// `Y_G` in some basis together with the route that computed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YResult {
    pub graph: LabeledMultigraph,
    #[serde(flatten)]
    pub expr: NCExpr,
    pub provenance: Route,
}

/// Entry point for every `Y_G` computation. Holds the enumeration limits
/// and a cache of deletion-contraction results.
pub struct ChromaticEngine {
    limits: Limits,
    memo: Mutex<HashMap<(GraphKey, Basis), NCExpr>>,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        Self::new(Limits::default())
    }
}

impl ChromaticEngine {
    pub fn new(limits: Limits) -> Self {
        ChromaticEngine {
            limits,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn clear_memo(&self) {
        self.memo.lock().expect("memo lock").clear();
    }

    /// `Σ m_π(P)` over stable partitions `P`.
    pub fn y_stable(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        let d = g.num_vertices();
        self.limits.check_degree(d)?;
        NCExpr::from_terms(
            Basis::M,
            d,
            stable_partitions(g).into_iter().map(|p| (p, Rational::one())),
        )
    }

    /// Deletion-contraction `Y_G = Y_{G\e} - Y_{G/e}↑_k^l` on the last
    /// non-loop edge `e = v_k v_l`, computed in the `p` basis.
    pub fn y_delcon(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        self.y_delcon_in(g, Basis::P)
    }

    /// Deletion-contraction carried out in the `m` or `p` basis.
    pub fn y_delcon_in(&self, g: &LabeledMultigraph, basis: Basis) -> Result<NCExpr> {
        if basis == Basis::E {
            return Err(Error::WrongBasis {
                op: "y_delcon_in",
                basis,
            });
        }
        self.limits.check_degree(g.num_vertices())?;
        self.delcon(g, basis)
    }

    fn delcon(&self, g: &LabeledMultigraph, basis: Basis) -> Result<NCExpr> {
        let d = g.num_vertices();
        if g.has_loop() {
            return Ok(NCExpr::zero(basis, d));
        }
        let key = (g.key(), basis);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let y = match g.edges().last().copied() {
            None => edgeless(d, basis),
            Some(e) => {
                let deleted = self.delcon(&g.delete_edge(e.id)?, basis)?;
                let contracted = self.delcon(&g.contract_edge(e.id)?, basis)?;
                deleted.sub(&induce_at(&contracted, e.u, e.v)?)?
            }
        };
        self.memo.lock().expect("memo lock").insert(key, y.clone());
        Ok(y)
    }

    /// Deletion-contraction that first relabels so the pivot edge is
    /// `v_{d-1} v_d`, applies `↑`, and relabels back. Uncached; `p` basis.
    pub fn y_delcon_relabel(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        let d = g.num_vertices();
        self.limits.check_degree(d)?;
        if g.has_loop() {
            return Ok(NCExpr::zero(Basis::P, d));
        }
        let Some(e) = g.edges().last().copied() else {
            return Ok(edgeless(d, Basis::P));
        };
        let delta = pivot_to_end(d, e.u, e.v);
        let h = g.relabel(&delta)?;
        let deleted = self.y_delcon_relabel(&h.delete_edge(e.id)?)?;
        let contracted = self.y_delcon_relabel(&h.contract_edge(e.id)?)?;
        deleted.sub(&induce(&contracted))?.act(&delta.inverse())
    }

    /// `Σ_{S⊆E} (-1)^|S| p_π(S)`.
    pub fn y_subsets_p(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        let d = g.num_vertices();
        self.limits.check_degree(d)?;
        let subsets = crate::graph::all_edge_subsets(g, &self.limits)?;
        NCExpr::from_terms(
            Basis::P,
            d,
            subsets.map(|s| (components_partition(g, s), sign(s.len()))),
        )
    }

    /// The same signed sum restricted to the broken-circuit complex.
    pub fn y_broken_circuit_p(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        let d = g.num_vertices();
        self.limits.check_degree(d)?;
        NCExpr::from_terms(
            Basis::P,
            d,
            broken_circuit_complex(g, &self.limits)?
                .into_iter()
                .map(|s| (components_partition(g, s), sign(s.len()))),
        )
    }

    pub fn y_route(&self, g: &LabeledMultigraph, route: Route) -> Result<NCExpr> {
        match route {
            Route::Stable => self.y_stable(g),
            Route::Delcon => self.y_delcon(g),
            Route::Subsets => self.y_subsets_p(g),
            Route::BrokenCircuit => self.y_broken_circuit_p(g),
        }
    }

    pub fn y(&self, g: &LabeledMultigraph, route: Route, basis: Basis) -> Result<YResult> {
        let expr = self.y_route(g, route)?;
        Ok(YResult {
            graph: g.clone(),
            expr: to_basis(&expr, basis),
            provenance: route,
        })
    }

    /// Computes `Y_G` by every route; the routes whose `m`-expansion
    /// differs from the stable one are returned.
    pub fn disagreeing_routes(&self, g: &LabeledMultigraph) -> Result<Vec<Route>> {
        let reference = self.y_stable(g)?;
        let mut bad = Vec::new();
        for route in [Route::Delcon, Route::Subsets, Route::BrokenCircuit] {
            if to_basis(&self.y_route(g, route)?, Basis::M) != reference {
                bad.push(route);
            }
        }
        Ok(bad)
    }

    /// `Y_G` in the `e` basis.
    pub fn y_e(&self, g: &LabeledMultigraph) -> Result<NCExpr> {
        Ok(to_basis(&self.y_stable(g)?, Basis::E))
    }

    /// `X_G`, the commutative image of `Y_G`, in the requested basis.
    pub fn x_commutative(&self, g: &LabeledMultigraph, basis: Basis) -> Result<CExpr> {
        Ok(commutative_image(&to_basis(&self.y_stable(g)?, basis)))
    }

    pub fn chromatic_polynomial(&self, g: &LabeledMultigraph) -> Result<UniPoly> {
        Ok(specialize_ones(&self.y_stable(g)?))
    }

    /// `(d-1)! c_[d]`, with `c_[d]` the coefficient of `e_{12...d}`.
    pub fn unique_sink_count_via_e(&self, g: &LabeledMultigraph) -> Result<Rational> {
        let d = g.num_vertices();
        if d == 0 {
            return Ok(Rational::zero());
        }
        let c = self.y_e(g)?.coeff(&SetPartition::coarsest(d));
        Ok(c * Rational::from_integer(factorial(d - 1)))
    }

    /// `j ↦ Σ_{ℓ(λ)=j} c_λ` for `X_G = Σ c_λ e_λ`; zero entries omitted.
    pub fn sink_distribution_via_e(&self, g: &LabeledMultigraph) -> Result<BTreeMap<usize, Rational>> {
        let x = self.x_commutative(g, Basis::E)?;
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (shape, c) in x.terms() {
            *out.entry(shape.len()).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn e_class_expansion(&self, g: &LabeledMultigraph, i: usize) -> Result<EClassExpr> {
        amalgamate(&self.y_e(g)?, i)
    }

    pub fn is_e_class_positive(&self, g: &LabeledMultigraph, i: usize) -> Result<bool> {
        Ok(self.e_class_expansion(g, i)?.is_class_nonneg())
    }

    /// Tries relabelings in lexicographic order, each with every marked
    /// index (`d` first), until a class-nonnegative one turns up or
    /// `budget` relabelings have been tried. `None` means all `d!` when
    /// `d <= 7` and 5040 otherwise.
    pub fn search_positive_labeling(
        &self,
        g: &LabeledMultigraph,
        budget: Option<usize>,
    ) -> Result<PositivitySearch> {
        positivity::search(self, g, budget)
    }
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Y` of the edgeless graph: `p_{1/2/.../d}`.
fn edgeless(d: usize, basis: Basis) -> NCExpr {
    to_basis(&NCExpr::basis_element(Basis::P, SetPartition::finest(d)), basis)
}

/// A permutation sending `k ↦ d-1`, `l ↦ d`, and the rest in order onto
/// `1..d-2`.
fn pivot_to_end(d: usize, k: usize, l: usize) -> Perm {
    let mut images = vec![0; d];
    let mut next = 1;
    for (v, slot) in images.iter_mut().enumerate().map(|(i, s)| (i + 1, s)) {
        *slot = if v == k {
            d - 1
        } else if v == l {
            d
        } else {
            next += 1;
            next - 1
        };
    }
    Perm::from_images(images).expect("valid permutation")
}
