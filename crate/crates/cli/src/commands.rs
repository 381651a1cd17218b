//! One function per subcommand. Each prints its report and returns whether
//! the run counts as a success for the exit code.

use serde_json::{json, Value};

use ncsym::chromatic::{reconstruct_from_y, tree_experiment, ChromaticEngine, Route};
use ncsym::graph::{acyclic_orientations, count_unique_sink, sink_distribution, LabeledMultigraph};
use ncsym::ncsym::{format_rational, int, Basis, EClassExpr, NCExpr};
use ncsym::verify::{run_suite, Suite};

use crate::{Failure, RunConfig};

type Outcome = Result<bool, Failure>;

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json output"));
}

fn class_table(classes: &EClassExpr) -> String {
    let rows: Vec<(String, String)> = classes
        .terms()
        .iter()
        .map(|(k, c)| (k.to_string(), format_rational(c)))
        .collect();
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(5);
    let mut out = format!("{:<width$}  coeff\n", "class");
    for (k, c) in rows {
        out.push_str(&format!("{k:<width$}  {c}\n"));
    }
    out
}

pub fn expand(
    cfg: &RunConfig,
    eng: &ChromaticEngine,
    g: &LabeledMultigraph,
    basis: Basis,
    route: Route,
    check_all: bool,
) -> Outcome {
    let res = eng.y(g, route, basis)?;
    let disagree = if check_all {
        Some(eng.disagreeing_routes(g)?)
    } else {
        None
    };
    if cfg.json() {
        let mut v = serde_json::to_value(&res).expect("result serializes");
        if let Some(bad) = &disagree {
            v["routes_agree"] = json!(bad.is_empty());
            v["disagreeing_routes"] = json!(bad);
        }
        emit(&v);
    } else {
        println!("{}", res.expr);
        if let Some(bad) = &disagree {
            if bad.is_empty() {
                println!("routes agree");
            } else {
                let names: Vec<&str> = bad.iter().map(|r| r.name()).collect();
                println!("routes disagree: {}", names.join(", "));
            }
        }
    }
    Ok(disagree.is_none_or(|b| b.is_empty()))
}

pub fn positivity(
    cfg: &RunConfig,
    eng: &ChromaticEngine,
    g: &LabeledMultigraph,
    mod_index: Option<usize>,
    budget: Option<usize>,
) -> Outcome {
    if let Some(i) = mod_index {
        let classes = eng.e_class_expansion(g, i)?;
        let positive = classes.is_class_nonneg();
        if cfg.json() {
            emit(&json!({
                "graph": g,
                "marked_index": i,
                "classes": classes,
                "positive": positive,
            }));
        } else {
            println!("graph: {g}");
            println!("marked index: {i}");
            print!("{}", class_table(&classes));
            println!("{}", if positive { "positive" } else { "not positive" });
        }
        return Ok(positive);
    }
    let search = eng.search_positive_labeling(g, budget)?;
    let found = search.witness.is_some();
    if cfg.json() {
        let mut v = serde_json::to_value(&search).expect("search serializes");
        v["graph"] = json!(g);
        v["positive"] = json!(found);
        emit(&v);
    } else {
        println!("graph: {g}");
        match (&search.witness_perm, &search.witness, &search.classes) {
            (Some(perm), Some((_, i)), Some(classes)) => {
                println!("relabeling: {perm}");
                println!("marked index: {i}");
                print!("{}", class_table(classes));
                println!("positive");
            }
            _ => {
                let scope = if search.exhaustive { "all" } else { "the first" };
                println!(
                    "no nonnegative class expansion among {scope} {} relabelings",
                    search.relabelings_tried
                );
            }
        }
    }
    Ok(found)
}

fn rational_map<K: ToString, V: ToString>(m: impl IntoIterator<Item = (K, V)>) -> Value {
    Value::Object(m.into_iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect())
}

pub fn orientations(cfg: &RunConfig, eng: &ChromaticEngine, g: &LabeledMultigraph, vertex: usize) -> Outcome {
    let limits = eng.limits();
    let acyclic = acyclic_orientations(g, limits)?.len();
    let unique = count_unique_sink(g, vertex, limits)?;
    let via_e = eng.unique_sink_count_via_e(g)?;
    let dist = sink_distribution(g, limits)?;
    let dist_e = eng.sink_distribution_via_e(g)?;
    let dist_matches = dist.len() == dist_e.len()
        && dist
            .iter()
            .all(|(j, n)| dist_e.get(j).is_some_and(|c| *c == int(*n as i64)));
    let ok = via_e == int(unique as i64) && dist_matches;
    if cfg.json() {
        emit(&json!({
            "graph": g,
            "vertex": vertex,
            "acyclic": acyclic,
            "unique_sink": unique,
            "unique_sink_via_e": format_rational(&via_e),
            "sinks": rational_map(dist.iter()),
            "sinks_via_e": rational_map(dist_e.iter().map(|(j, c)| (j, format_rational(c)))),
            "consistent": ok,
        }));
    } else {
        println!(
            "acyclic: {acyclic}; unique-sink@v{vertex}: {unique}; via-e: {}",
            format_rational(&via_e)
        );
        let show = |it: Vec<String>| it.join(", ");
        println!(
            "sinks: {}; via-e: {}",
            show(dist.iter().map(|(j, n)| format!("{j}:{n}")).collect()),
            show(dist_e.iter().map(|(j, c)| format!("{j}:{}", format_rational(c))).collect())
        );
        if !ok {
            println!("enumeration and e-expansion disagree");
        }
    }
    Ok(ok)
}

pub fn chromatic(cfg: &RunConfig, eng: &ChromaticEngine, g: &LabeledMultigraph) -> Outcome {
    let poly = eng.chromatic_polynomial(g)?;
    let coeffs: Vec<String> = poly.coeffs().iter().map(format_rational).collect();
    if cfg.json() {
        emit(&json!({
            "graph": g,
            "polynomial": poly.to_string(),
            "coefficients": coeffs,
        }));
    } else {
        println!("{poly}");
        let listed: Vec<String> = coeffs.iter().enumerate().map(|(i, c)| format!("a_{i} = {c}")).collect();
        println!("{}", listed.join(", "));
    }
    Ok(true)
}

pub fn reconstruct(cfg: &RunConfig, input: &str) -> Outcome {
    let y: NCExpr = serde_json::from_str(input)
        .map_err(|e| Failure::Usage(format!("expansion JSON: {e}")))?;
    let g = reconstruct_from_y(&y, y.degree())?;
    if cfg.json() {
        emit(&json!(g));
    } else {
        print!("{}", g.to_text());
    }
    Ok(true)
}

pub fn trees(cfg: &RunConfig, eng: &ChromaticEngine, d: usize) -> Outcome {
    let report = tree_experiment(eng, d)?;
    let ok = report.x_distinct() && report.y_distinct() && report.reconstruction_ok;
    if cfg.json() {
        emit(&serde_json::to_value(&report).expect("report serializes"));
    } else {
        for (n, (t, x)) in report.trees.iter().zip(&report.x).enumerate() {
            println!("T{n}: {t}  X = {x}");
        }
        println!("trees: {}", report.trees.len());
        println!("X collisions: {}", report.x_collisions.len());
        println!("Y collisions: {}", report.y_collisions.len());
        println!("class collisions mod {d}: {}", report.class_collisions.len());
        println!("reconstruction: {}", if report.reconstruction_ok { "ok" } else { "failed" });
    }
    Ok(ok)
}

pub fn verify(cfg: &RunConfig, eng: &ChromaticEngine, which: &str) -> Outcome {
    let suites = Suite::parse_list(which)?;
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, eng, cfg.seed)?);
    }
    let ok = reports.iter().all(|r| r.passed());
    if cfg.json() {
        emit(&json!({ "passed": ok, "suites": reports }));
    } else {
        for r in &reports {
            print!("{r}");
        }
        let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
        let failed: usize = reports
            .iter()
            .map(|r| r.checks.iter().filter(|c| !c.passed).count())
            .sum();
        println!("{} of {checks} checks passed", checks - failed);
    }
    Ok(ok)
}
