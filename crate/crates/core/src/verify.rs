//! Named invariant suites, run at a scale suitable for routine checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chromatic::{
    attach_diamond_positivity_check, attach_km_check, closed_form_kd_minus_e,
    closed_form_x_kd_minus_e, combine_check, induce_power_check, jk_equivalence_check,
    path_cycle_relation_check, reconstruct_from_y, tree_experiment, ChromaticEngine,
};
use crate::error::{Error, Result};
use crate::graph::{
    broken_circuit_complex, complete, complete_minus_edge, count_unique_sink, cycle,
    disjoint_union, diamond, enumerate_trees, k_alpha_chain, path, proper_coloring_count,
    sink_distribution, LabeledMultigraph,
};
use crate::ncsym::{
    amalgamate, expand_words, induce, induce_e_changeup, specialize_ones, to_basis, Basis,
    ClassKey, NCExpr, Rational,
};
use crate::partition::{
    all_partitions, enumerate_palpha, Composition, Marked, Perm, SetPartition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Bases,
    Delcon,
    Sinks,
    Positivity,
    Families,
    Reconstruction,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bases,
        Suite::Delcon,
        Suite::Sinks,
        Suite::Positivity,
        Suite::Families,
        Suite::Reconstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bases => "bases",
            Suite::Delcon => "delcon",
            Suite::Sinks => "sinks",
            Suite::Positivity => "positivity",
            Suite::Families => "families",
            Suite::Reconstruction => "reconstruction",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite {s:?} (expected all, bases, delcon, sinks, positivity, families or reconstruction)"
                ))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{} {}/{} ({} cases)",
                if c.passed { "PASS" } else { "FAIL" },
                self.suite,
                c.name,
                c.cases
            )?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs `f` over `cases`, stopping at the first failure or error.
struct Checks {
    out: Vec<CheckOutcome>,
}

impl Checks {
    fn new() -> Self {
        Checks { out: Vec::new() }
    }

    fn run<T: fmt::Debug>(
        &mut self,
        name: &str,
        cases: impl IntoIterator<Item = T>,
        mut f: impl FnMut(&T) -> Result<bool>,
    ) -> Result<()> {
        let mut n = 0;
        for case in cases {
            n += 1;
            match f(&case) {
                Ok(true) => {}
                Ok(false) => return self.push(name, false, n, format!("fails on {case:?}")),
                Err(e) if e.is_guard() => return Err(e),
                Err(e) => return self.push(name, false, n, format!("error on {case:?}: {e}")),
            }
        }
        self.push(name, true, n, String::new())
    }

    fn push(&mut self, name: &str, passed: bool, cases: usize, detail: String) -> Result<()> {
        self.out.push(CheckOutcome {
            name: name.to_string(),
            passed,
            cases,
            detail,
        });
        Ok(())
    }
}

/// Every loopless simple graph on `[d]`, edges in lexicographic order.
pub fn simple_graphs(d: usize) -> Vec<LabeledMultigraph> {
    let pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let chosen: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            LabeledMultigraph::from_edges(d, &chosen).expect("valid edges")
        })
        .collect()
}

/// Every multigraph on `[d]` (loops allowed) with at most `max_edges`
/// edges, as sorted edge multisets.
pub fn multigraphs(d: usize, max_edges: usize) -> Vec<LabeledMultigraph> {
    let slots: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i..=d).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        d: usize,
        slots: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<LabeledMultigraph>,
    ) {
        out.push(LabeledMultigraph::from_edges(d, cur).expect("valid edges"));
        if left == 0 {
            return;
        }
        for s in start..slots.len() {
            cur.push(slots[s]);
            rec(d, slots, s, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(d, &slots, 0, max_edges, &mut Vec::new(), &mut out);
    out
}

/// A random multigraph with up to `max_edges` edges; loops only when
/// `loops` is set.
pub fn random_multigraph<R: Rng>(rng: &mut R, d: usize, max_edges: usize, loops: bool) -> LabeledMultigraph {
    let m = if d < 2 && !loops { 0 } else { rng.gen_range(0..=max_edges) };
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| loop {
            let (a, b) = (rng.gen_range(1..=d), rng.gen_range(1..=d));
            if loops || a != b {
                break (a, b);
            }
        })
        .collect();
    LabeledMultigraph::from_edges(d, &edges).expect("valid edges")
}

/// The same graph with its edge list shuffled.
pub fn shuffled_edges<R: Rng>(rng: &mut R, g: &LabeledMultigraph) -> LabeledMultigraph {
    let mut order: Vec<usize> = (0..g.num_edges()).collect();
    order.shuffle(rng);
    g.reorder_edges(&order).expect("permutation of positions")
}

pub fn random_perm<R: Rng>(rng: &mut R, d: usize) -> Perm {
    let mut images: Vec<usize> = (1..=d).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffled identity")
}

/// For `e_π↑ = Σ c_τ e_τ`: `c_τ = 0` off `[0̂, π+(d+1)]`, and the sums over
/// `P(α)` (either marked element) are `1/b`, `-1/b` or `0`.
pub fn main_amalgamation_holds(pi: &SetPartition) -> Result<bool> {
    let d = pi.degree();
    let up = induce(&NCExpr::basis_element(Basis::E, pi.clone()));
    let top = pi.insert_into_block_of_last();
    if up.support().any(|tau| !tau.leq(&top).unwrap_or(false)) {
        return Ok(false);
    }
    let b = Rational::new(1.into(), (pi.last_block_size() as i64).into());
    let relabel_last = {
        // π̃: d replaced by d+1.
        let mut images: Vec<usize> = (1..=d + 1).collect();
        images.swap(d - 1, d);
        Perm::from_images(images)?
    };
    let pi_tilde = pi.new_singleton().apply_perm(&relabel_last)?;
    for alpha in Composition::all(d + 1) {
        for marked in [Marked::Last, Marked::Penultimate] {
            let set = enumerate_palpha(pi, &alpha, marked)?;
            let sum: Rational = set.iter().map(|t| up.coeff(t)).sum();
            let (single, joined) = match marked {
                Marked::Last => (pi.new_singleton(), top.clone()),
                Marked::Penultimate => (pi_tilde.clone(), top.clone()),
            };
            let expected = if set == [single] {
                b.clone()
            } else if set == [joined] {
                -b.clone()
            } else {
                Rational::zero()
            };
            if sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `e_π↑ ≡ (1/b) e_(π/d+1) - (1/b) e_(π+(d+1))` modulo `d+1`, and the
/// matching statement modulo `d`.
pub fn induced_classes_hold(pi: &SetPartition) -> Result<bool> {
    let d = pi.degree();
    let up = induce(&NCExpr::basis_element(Basis::E, pi.clone()));
    let b = pi.last_block_size();
    let w = Rational::new(1.into(), (b as i64).into());
    let shape = pi.shape();
    let single = ClassKey::new(shape.with_part(1), 1);
    let joined = ClassKey::new(shape.replace_part(b, b + 1).expect("b is a part"), b + 1);
    for i in [d + 1, d] {
        let expected = crate::ncsym::EClassExpr::from_terms(
            d + 1,
            i,
            [(single.clone(), w.clone()), (joined.clone(), -w.clone())],
        )?;
        if amalgamate(&up, i)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bases(eng: &ChromaticEngine) -> Result<Vec<CheckOutcome>> {
    let lim = eng.limits();
    let mut c = Checks::new();
    let cases: Vec<(usize, SetPartition)> = (1..=5)
        .flat_map(|d| all_partitions(d).map(move |p| (d, p)))
        .collect();
    c.run("round-trip", &cases, |(_, p)| {
        Ok(Basis::ALL.iter().all(|&a| {
            let x = NCExpr::basis_element(a, p.clone());
            Basis::ALL.iter().all(|&b| to_basis(&to_basis(&x, b), a) == x)
        }))
    })?;
    c.run(
        "word-oracle",
        cases.iter().filter(|(d, _)| *d <= 4),
        |(d, p)| {
            let n = if *d <= 3 { 4 } else { 3 };
            for a in Basis::ALL {
                let x = NCExpr::basis_element(a, p.clone());
                let w = expand_words(&x, n, lim)?;
                for b in Basis::ALL {
                    if expand_words(&to_basis(&x, b), n, lim)? != w {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
    )?;
    c.run("changeup", cases.iter().filter(|(d, _)| *d <= 4), |(_, p)| {
        let e = NCExpr::basis_element(Basis::E, p.clone());
        Ok(induce_e_changeup(&e)? == induce(&e))
    })?;
    c.run("main-amalgamation", cases.iter().filter(|(d, _)| *d <= 4), |(_, p)| {
        main_amalgamation_holds(p)
    })?;
    c.run("induced-classes", cases.iter().filter(|(d, _)| *d <= 4), |(_, p)| {
        induced_classes_hold(p)
    })?;
    c.run("specialization", cases.iter().filter(|(d, _)| *d <= 4), |(_, p)| {
        Ok(Basis::ALL.iter().all(|&a| {
            let x = NCExpr::basis_element(a, p.clone());
            let s = specialize_ones(&x);
            Basis::ALL.iter().all(|&b| specialize_ones(&to_basis(&x, b)) == s)
        }))
    })?;
    Ok(c.out)
}

/// Y_G by every route, plus two more broken-circuit edge orders.
pub fn four_routes_agree<R: Rng>(eng: &ChromaticEngine, g: &LabeledMultigraph, rng: &mut R) -> Result<bool> {
    if !eng.disagreeing_routes(g)?.is_empty() {
        return Ok(false);
    }
    let reference = eng.y_subsets_p(g)?;
    for _ in 0..2 {
        if eng.y_broken_circuit_p(&shuffled_edges(rng, g))? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `e` the first non-loop edge: `{S ∈ B_G : e ∉ S} = B_{G\e}` and
/// `{S - e : S ∈ B_G, e ∈ S} = B_{G/e}`, compared as sets of edge ids.
pub fn blass_sagan_holds(g: &LabeledMultigraph, eng: &ChromaticEngine) -> Result<bool> {
    let Some(e) = g.edges().iter().find(|e| !e.is_loop()).copied() else {
        return Ok(true);
    };
    let lim = eng.limits();
    let ids = |h: &LabeledMultigraph, v: Vec<crate::graph::EdgeSubset>| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = v.into_iter().map(|s| {
            let mut x = s.ids(h);
            x.sort_unstable();
            x
        }).collect();
        out.sort();
        out
    };
    let whole = ids(g, broken_circuit_complex(g, lim)?);
    let (mut without, mut with): (Vec<Vec<usize>>, Vec<Vec<usize>>) =
        whole.into_iter().partition(|s| !s.contains(&e.id));
    for s in &mut with {
        s.retain(|&x| x != e.id);
    }
    with.sort();
    without.sort();
    let deleted = g.delete_edge(e.id)?;
    let contracted = g.contract_edge(e.id)?;
    Ok(without == ids(&deleted, broken_circuit_complex(&deleted, lim)?)
        && with == ids(&contracted, broken_circuit_complex(&contracted, lim)?))
}

fn delcon(eng: &ChromaticEngine, seed: u64) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checks::new();
    let mut corpus: Vec<LabeledMultigraph> = (1..=3).flat_map(|d| multigraphs(d, 4)).collect();
    for _ in 0..40 {
        let d = rng.gen_range(4..=6);
        let loops = rng.gen_bool(0.1);
        corpus.push(random_multigraph(&mut rng, d, 9, loops));
    }
    c.run("four-routes", &corpus, |g| four_routes_agree(eng, g, &mut rng))?;
    c.run("relabel-route", corpus.iter().filter(|g| g.num_edges() <= 7), |g| {
        Ok(eng.y_delcon_relabel(g)? == eng.y_delcon(g)?)
    })?;
    c.run("relabeling", corpus.iter().filter(|g| g.num_vertices() <= 5), |g| {
        let delta = random_perm(&mut rng, g.num_vertices());
        Ok(eng.y_stable(g)?.act(&delta)? == eng.y_stable(&g.relabel(&delta)?)?)
    })?;
    c.run("disjoint-union", corpus.iter().filter(|g| g.num_vertices() <= 3).take(60), |g| {
        let dh = rng.gen_range(1..=3);
        let h = random_multigraph(&mut rng, dh, 3, false);
        let union = to_basis(&eng.y_stable(&disjoint_union(g, &h)?)?, Basis::P);
        let product = to_basis(&eng.y_stable(g)?, Basis::P).disjoint_product(&to_basis(&eng.y_stable(&h)?, Basis::P))?;
        Ok(union == product)
    })?;
    c.run("blass-sagan", &corpus, |g| blass_sagan_holds(g, eng))?;
    c.run("edge-counts", &corpus, |g| {
        Ok(g.edges().iter().all(|e| {
            g.delete_edge(e.id).map(|h| h.num_edges()).ok() == Some(g.num_edges() - 1)
                && g.contract_edge(e.id).map(|h| h.num_edges()).ok() == Some(g.num_edges() - 1)
        }))
    })?;
    Ok(c.out)
}

/// Sink-theorem identities for one connected loopless graph.
pub fn sink_identities_hold(eng: &ChromaticEngine, g: &LabeledMultigraph) -> Result<bool> {
    let lim = eng.limits();
    let d = g.num_vertices();
    let via_e = eng.unique_sink_count_via_e(g)?;
    for v in 1..=d {
        if Rational::from_integer(count_unique_sink(g, v, lim)?.into()) != via_e {
            return Ok(false);
        }
    }
    let enumerated: BTreeMap<usize, Rational> = sink_distribution(g, lim)?
        .into_iter()
        .map(|(j, n)| (j, Rational::from_integer(n.into())))
        .collect();
    if eng.sink_distribution_via_e(g)? != enumerated {
        return Ok(false);
    }
    let poly = eng.chromatic_polynomial(g)?;
    Ok(num_traits::Signed::abs(&poly.coeff(1)) == via_e)
}

fn sinks(eng: &ChromaticEngine) -> Result<Vec<CheckOutcome>> {
    let lim = eng.limits();
    let mut c = Checks::new();
    let connected: Vec<LabeledMultigraph> = (1..=4)
        .flat_map(simple_graphs)
        .filter(|g| g.is_connected())
        .chain([cycle(5)?, complete(5)?, complete_minus_edge(5)?, diamond()])
        .chain([LabeledMultigraph::from_edges(3, &[(1, 2), (1, 2), (2, 3)])?])
        .collect();
    c.run("unique-sink-distribution-linear-coefficient", &connected, |g| {
        sink_identities_hold(eng, g)
    })?;
    c.run("sink-bijection", &connected, |g| {
        for e in g.edges() {
            for v0 in [e.u, e.v] {
                let deleted = g.delete_edge(e.id)?;
                let contracted = g.contract_edge(e.id)?;
                let w = if v0 > e.v { v0 - 1 } else if v0 == e.v { e.u } else { v0 };
                let lhs = count_unique_sink(g, v0, lim)?;
                let rhs = count_unique_sink(&deleted, v0, lim)? + count_unique_sink(&contracted, w, lim)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })?;
    c.run("at-least-one-sink", &connected, |g| {
        Ok(!sink_distribution(g, lim)?.contains_key(&0))
    })?;
    Ok(c.out)
}

fn positivity(eng: &ChromaticEngine) -> Result<Vec<CheckOutcome>> {
    let mut c = Checks::new();
    c.run("paths", 1..=7usize, |&d| eng.is_e_class_positive(&path(d)?, d))?;
    c.run("cycles", 1..=7usize, |&d| eng.is_e_class_positive(&cycle(d)?, d))?;
    c.run("path-cycle", 1..=5usize, |&d| path_cycle_relation_check(eng, d))?;
    let chains: Vec<Vec<usize>> = (1..=7)
        .flat_map(Composition::all)
        .map(|a| a.parts().to_vec())
        .filter(|a| a.iter().sum::<usize>() + 1 - a.len() <= 6)
        .collect();
    c.run("chains", &chains, |a| {
        let g = k_alpha_chain(a)?;
        eng.is_e_class_positive(&g, g.num_vertices())
    })?;
    let bases: Vec<LabeledMultigraph> = (1..=3).flat_map(simple_graphs).collect();
    let km: Vec<(usize, usize)> = (0..bases.len()).flat_map(|g| (2..=3).map(move |m| (g, m))).collect();
    c.run("attach-km", km.clone(), |&(g, m)| attach_km_check(eng, &bases[g], m))?;
    c.run("induce-power", km, |&(g, m)| induce_power_check(eng, &bases[g], m - 1))?;
    c.run("jk", &bases, |g| jk_equivalence_check(eng, g, 3, 1, 2))?;
    c.run("combine", bases.iter().filter(|g| g.num_vertices() >= 2), |g| {
        combine_check(eng, g, 1, g.num_vertices())
    })?;
    c.run("diamond", [complete(1)?, complete(2)?, path(3)?], |g| {
        Ok(attach_diamond_positivity_check(eng, g)?.holds())
    })?;
    Ok(c.out)
}

fn families(eng: &ChromaticEngine) -> Result<Vec<CheckOutcome>> {
    let lim = eng.limits();
    let mut c = Checks::new();
    c.run("kd-minus-e-classes", 2..=6usize, |&d| {
        Ok(eng.e_class_expansion(&complete_minus_edge(d)?, d)? == closed_form_kd_minus_e(d)?)
    })?;
    c.run("kd-minus-e-x", 2..=6usize, |&d| {
        Ok(eng.x_commutative(&complete_minus_edge(d)?, Basis::E)? == closed_form_x_kd_minus_e(d)?)
    })?;
    c.run("complete-is-e-top", 1..=6usize, |&d| {
        Ok(eng.y_e(&complete(d)?)? == NCExpr::basis_element(Basis::E, SetPartition::coarsest(d)))
    })?;
    let graphs: Vec<LabeledMultigraph> = (1..=4)
        .flat_map(|d| multigraphs(d, 3))
        .chain([cycle(5)?, path(6)?, complete(5)?, diamond()])
        .collect();
    c.run("chromatic-polynomial", &graphs, |g| {
        let poly = eng.chromatic_polynomial(g)?;
        for n in 0..=g.num_vertices() + 1 {
            let count = proper_coloring_count(g, n, lim)?;
            if poly.eval_int(n as i64) != Rational::from_integer(count.into()) {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(c.out)
}

fn reconstruction(eng: &ChromaticEngine, seed: u64) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checks::new();
    let mut graphs: Vec<LabeledMultigraph> = (1..=4).flat_map(simple_graphs).collect();
    let five = simple_graphs(5);
    graphs.extend(five.choose_multiple(&mut rng, 64).cloned());
    c.run("inverts-y", &graphs, |g| {
        Ok(reconstruct_from_y(&eng.y_stable(g)?, g.num_vertices())?.same_graph(g))
    })?;
    c.run("tree-counts", 1..=7usize, |&d| {
        let known = [1, 1, 1, 2, 3, 6, 11];
        Ok(enumerate_trees(d, eng.limits())?.len() == known[d - 1])
    })?;
    c.run("trees-distinct", 1..=6usize, |&d| {
        let r = tree_experiment(eng, d)?;
        Ok(r.x_distinct() && r.y_distinct() && r.reconstruction_ok)
    })?;
    Ok(c.out)
}

pub fn run_suite(suite: Suite, eng: &ChromaticEngine, seed: u64) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Bases => bases(eng)?,
        Suite::Delcon => delcon(eng, seed)?,
        Suite::Sinks => sinks(eng)?,
        Suite::Positivity => positivity(eng)?,
        Suite::Families => families(eng)?,
        Suite::Reconstruction => reconstruction(eng, seed)?,
    };
    Ok(SuiteReport { suite, checks })
}
