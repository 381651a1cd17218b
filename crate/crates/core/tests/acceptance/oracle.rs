//! Brute-force reference computations. Nothing here calls into the library's
//! algebra; partitions are plain restricted growth strings.

use std::collections::{BTreeMap, BTreeSet};

use ncsym::ncsym::{Basis, NCExpr, Rational};
use ncsym::partition::SetPartition;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

pub type Rgs = Vec<u8>;
pub type Terms = BTreeMap<Rgs, Rational>;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// All restricted growth strings of length `d`.
pub fn partitions(d: usize) -> Vec<Rgs> {
    // `k` is the number of blocks used so far.
    fn rec(cur: &mut Rgs, k: u8, d: usize, out: &mut Vec<Rgs>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for b in 0..=k {
            cur.push(b);
            rec(cur, k.max(b + 1), d, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 0, d, &mut out);
    out
}

/// Relabels blocks in order of first appearance.
pub fn normalize(labels: &[usize]) -> Rgs {
    let mut seen: Vec<usize> = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(i) => i as u8,
            None => {
                seen.push(*l);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

pub fn leq(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
}

/// `a ∧ b = 0̂`: no two positions share a block in both.
pub fn meet_is_bottom(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i] != a[j] || b[i] != b[j]))
}

pub fn block_sizes(a: &[u8]) -> Vec<usize> {
    let k = a.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
    let mut s = vec![0; k];
    for &x in a {
        s[x as usize] += 1;
    }
    s
}

pub fn shape(a: &[u8]) -> Vec<usize> {
    let mut s = block_sizes(a);
    s.sort_unstable_by(|x, y| y.cmp(x));
    s
}

pub fn is_stable(edges: &[(usize, usize)], a: &[u8]) -> bool {
    edges.iter().all(|&(u, v)| a[u - 1] != a[v - 1])
}

/// `Y_G` in the `m` basis: one term per stable partition.
pub fn y_m(d: usize, edges: &[(usize, usize)]) -> Terms {
    partitions(d)
        .into_iter()
        .filter(|a| is_stable(edges, a))
        .map(|a| (a, Rational::one()))
        .collect()
}

pub fn terms(x: &NCExpr) -> Terms {
    x.terms()
        .iter()
        .map(|(p, c)| (p.rgs().to_vec(), c.clone()))
        .collect()
}

pub fn to_library(basis: Basis, d: usize, t: &Terms) -> NCExpr {
    NCExpr::from_terms(
        basis,
        d,
        t.iter()
            .map(|(a, c)| (SetPartition::from_rgs(a.clone()).expect("rgs"), c.clone())),
    )
    .expect("valid terms")
}

fn add(t: &mut Terms, k: Rgs, c: &Rational) {
    let e = t.entry(k).or_insert_with(Rational::zero);
    *e += c;
}

fn prune(mut t: Terms) -> Terms {
    t.retain(|_, c| !c.is_zero());
    t
}

/// `p_π = Σ_{σ ≥ π} m_σ` and `e_π = Σ_{σ ∧ π = 0̂} m_σ`, term by term.
pub fn to_m(x: &NCExpr) -> Terms {
    let d = x.degree();
    let all = partitions(d);
    let mut out = Terms::new();
    for (pi, c) in x.terms() {
        let pi = pi.rgs();
        match x.basis() {
            Basis::M => add(&mut out, pi.to_vec(), c),
            Basis::P => all.iter().filter(|s| leq(pi, s)).for_each(|s| add(&mut out, s.clone(), c)),
            Basis::E => all
                .iter()
                .filter(|s| meet_is_bottom(pi, s))
                .for_each(|s| add(&mut out, s.clone(), c)),
        }
    }
    prune(out)
}

/// Evaluates an `e`-expansion on one word with kernel `sigma`.
pub fn e_at_word(x: &NCExpr, sigma: &[u8]) -> Rational {
    x.terms()
        .iter()
        .filter(|(tau, _)| meet_is_bottom(tau.rgs(), sigma))
        .map(|(_, c)| c.clone())
        .sum()
}

/// Checks a claimed `e`-expansion of `Y_G` against words: `Y_G` is 1 on a
/// word exactly when the word is a proper coloring. Exhaustive over kernels
/// when `samples` is `None`.
pub fn certify_y_e<R: Rng>(
    d: usize,
    edges: &[(usize, usize)],
    y_e: &NCExpr,
    samples: Option<usize>,
    rng: &mut R,
) -> bool {
    assert_eq!(y_e.basis(), Basis::E);
    let all = partitions(d);
    let check = |s: &Rgs| e_at_word(y_e, s) == if is_stable(edges, s) { z(1) } else { z(0) };
    match samples {
        None => all.iter().all(check),
        Some(k) => (0..k).all(|_| check(&all[rng.gen_range(0..all.len())])),
    }
}

/// Amalgamated classes: `(shape, size of the block holding i) ↦ Σ c`.
pub fn classes(x: &NCExpr, i: usize) -> BTreeMap<(Vec<usize>, usize), Rational> {
    let mut out: BTreeMap<(Vec<usize>, usize), Rational> = BTreeMap::new();
    for (p, c) in x.terms() {
        let a = p.rgs();
        let key = (shape(a), block_sizes(a)[a[i - 1] as usize]);
        *out.entry(key).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn class_nonneg(c: &BTreeMap<(Vec<usize>, usize), Rational>) -> bool {
    c.values().all(|v| *v >= Rational::zero())
}

/// Proper colorings with `n` colors, by odometer.
pub fn coloring_count(d: usize, edges: &[(usize, usize)], n: usize) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    let mut col = vec![0usize; d];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| col[u - 1] != col[v - 1]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            col[i] += 1;
            if col[i] < n {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}

/// Coefficients of the degree-`d` polynomial through `(n, vals[n])`,
/// `n = 0..=d`, by Newton's forward differences.
pub fn interpolate(vals: &[Rational]) -> Vec<Rational> {
    let d = vals.len() - 1;
    let mut diffs = vec![vals.to_vec()];
    for k in 1..=d {
        let prev = &diffs[k - 1];
        diffs.push((0..prev.len() - 1).map(|i| &prev[i + 1] - &prev[i]).collect());
    }
    // Σ Δ^k f(0) · C(n, k), expanded into the monomial basis.
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (k, row) in diffs.iter().enumerate() {
        let mut binom = vec![Rational::one()];
        for j in 0..k {
            let mut next = vec![Rational::zero(); binom.len() + 1];
            for (a, c) in binom.iter().enumerate() {
                next[a + 1] += c;
                next[a] -= c * z(j as i64);
            }
            binom = next;
        }
        let fact: Rational = (1..=k as i64).map(z).product();
        for (a, c) in binom.iter().enumerate() {
            coeffs[a] += &row[0] * c / &fact;
        }
    }
    coeffs
}

/// `(number of acyclic orientations by sink count, unique-sink count at each vertex)`.
pub fn orientation_census(d: usize, edges: &[(usize, usize)]) -> (BTreeMap<usize, u64>, Vec<u64>) {
    let mut by_sinks = BTreeMap::new();
    let mut unique = vec![0u64; d + 1];
    if edges.iter().any(|&(u, v)| u == v) {
        return (by_sinks, unique);
    }
    for mask in 0u64..1 << edges.len() {
        let mut out = vec![Vec::new(); d + 1];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                out[u].push(v);
            } else {
                out[v].push(u);
            }
        }
        if !acyclic(d, &out) {
            continue;
        }
        let sinks: Vec<usize> = (1..=d).filter(|&v| out[v].is_empty()).collect();
        *by_sinks.entry(sinks.len()).or_insert(0) += 1;
        if let [v] = sinks[..] {
            unique[v] += 1;
        }
    }
    (by_sinks, unique)
}

fn acyclic(d: usize, out: &[Vec<usize>]) -> bool {
    let mut indeg = vec![0; d + 1];
    for list in out {
        for &w in list {
            indeg[w] += 1;
        }
    }
    let mut stack: Vec<usize> = (1..=d).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == d
}

pub fn is_connected(d: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; d + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Simple graphs on `[d]` as edge lists.
pub fn simple_graphs(d: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))).collect();
    (0..1u64 << pairs.len())
        .map(|m| pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e).collect())
        .collect()
}

/// Edge multisets on `[d]`, loops allowed, at most `max` edges.
pub fn multigraphs(d: usize, max: usize) -> Vec<Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (1..=d).flat_map(|i| (i..=d).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(slots: &[(usize, usize)], from: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for s in from..slots.len() {
            cur.push(slots[s]);
            rec(slots, s, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(&slots, 0, max, &mut cur, &mut out);
    out
}

pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Canonical string of a tree (center-rooted AHU encoding).
pub fn tree_code(d: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); d + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Peel leaves to find the center(s).
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (1..=d).filter(|&v| deg[v] <= 1).collect();
    let mut left = d;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn enc(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| enc(w, v, adj)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| enc(c, 0, &adj)).min().unwrap_or_default()
}

pub fn is_tree(d: usize, edges: &[(usize, usize)]) -> bool {
    edges.len() + 1 == d && is_connected(d, edges)
}

/// `X_G` in the monomial basis, keyed by shape.
pub fn x_m(d: usize, edges: &[(usize, usize)]) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    for a in partitions(d).into_iter().filter(|a| is_stable(edges, a)) {
        *out.entry(shape(&a)).or_insert(0) += 1;
    }
    out
}

pub fn edge_set(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}
