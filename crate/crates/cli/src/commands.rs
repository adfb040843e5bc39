use std::collections::BTreeSet;
use std::fmt::Write;

use posdep::depgraph::{edges_in_rule_order, g_sp, DepGraph};
use posdep::formula::parse_atom_list;
use posdep::fuzz::{self, FuzzConfig, Property};
use posdep::loopformulas::{loop_formula, loop_table, nes as nes_of};
use posdep::semantics::{completion, is_stable};
use posdep::splitting::{check_split_with, Condition};
use posdep::{parse_formula, Atom, Enumerator, Error, Formula, Interpretation, Theory};
use serde_json::{json, Value};

use crate::{Global, GraphFormat, Outcome};

type Result<T> = std::result::Result<T, Error>;

fn enumerator(g: &Global) -> Result<Enumerator> {
    Ok(Enumerator::new().with_cap(g.cap)?.with_exec(g.exec()))
}

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn to_value<T: serde::Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn list(models: &[Interpretation]) -> String {
    if models.is_empty() {
        return "none".into();
    }
    models
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn set_text(atoms: &BTreeSet<Atom>) -> String {
    Interpretation::new(atoms.clone()).to_string()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `A <-> B` for a completion member, which parses back to the same tree.
fn equivalence_text(f: &Formula) -> String {
    if let Formula::And(l, r) = f {
        if let (Formula::Implies(a, b), Formula::Implies(b2, a2)) = (&**l, &**r) {
            if a == a2 && b == b2 {
                return format!("{a} <-> {b}");
            }
        }
    }
    f.to_string()
}

pub fn models(g: &Global, t: &Theory) -> Result<Outcome> {
    let report = enumerator(g)?.report(t)?;
    let completion = if t.is_nondisjunctive() {
        Some(completion(t)?)
    } else {
        None
    };
    let completion_lines: Option<Vec<String>> =
        completion.map(|c| c.iter().map(equivalence_text).collect());

    if g.json {
        let mut value = to_value(&report);
        if let (Some(lines), Value::Object(map)) = (&completion_lines, &mut value) {
            map.insert("completion".into(), to_value(lines));
        }
        return Ok(Outcome::ok(json_text(&value)));
    }

    let mut out = String::new();
    let universe: BTreeSet<Atom> = report.universe.iter().cloned().collect();
    writeln!(out, "universe: {}", set_text(&universe)).unwrap();
    writeln!(out, "classical: {}", list(&report.classical)).unwrap();
    writeln!(out, "stable: {}", list(&report.stable)).unwrap();
    match &report.supported {
        Some(s) => writeln!(out, "supported: {}", list(s)).unwrap(),
        None => writeln!(out, "supported: n/a (not a set of nondisjunctive rules)").unwrap(),
    }
    writeln!(out, "pointwise stable: {}", list(&report.pointwise_stable)).unwrap();
    if let Some(lines) = completion_lines {
        writeln!(out, "completion:").unwrap();
        for line in lines {
            writeln!(out, "  {line}").unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn edge_pairs(graph: &DepGraph) -> Vec<[&str; 2]> {
    graph
        .edges()
        .iter()
        .map(|(h, b)| [h.name(), b.name()])
        .collect()
}

pub fn graph(g: &Global, t: &Theory, format: GraphFormat) -> Result<Outcome> {
    let kind = g.kind();
    let graph = DepGraph::build(t, kind);
    if g.json {
        return Ok(Outcome::ok(json_text(&json!({
            "graph": kind,
            "vertices": graph.vertices(),
            "edges": edge_pairs(&graph),
            "acyclic": !graph.has_cycle(),
        }))));
    }
    let text = match format {
        GraphFormat::Dot => graph.to_dot(&format!("G_{kind}")),
        GraphFormat::Edges => edges_in_rule_order(t, kind)
            .iter()
            .map(|(h, b)| format!("{h} {b}\n"))
            .collect(),
    };
    Ok(Outcome::ok(text))
}

/// Components that carry a cycle: several atoms, or one atom on a self-loop.
fn cyclic_components(graph: &DepGraph) -> Vec<BTreeSet<Atom>> {
    graph
        .sccs()
        .into_iter()
        .filter(|c| c.len() > 1 || c.iter().next().is_some_and(|a| graph.has_edge(a, a)))
        .collect()
}

struct Check {
    name: &'static str,
    left: Vec<Interpretation>,
    right: Vec<Interpretation>,
}

pub fn tight(g: &Global, t: &Theory) -> Result<Outcome> {
    let kind = g.kind();
    let graph = DepGraph::build(t, kind);
    let acyclic = !graph.has_cycle();
    let cycles = cyclic_components(&graph);
    let sp_acyclic = !g_sp(t).has_cycle();

    // Tightness of the SP graph collapses the semantics; confirm it by
    // enumeration when the theory is small enough.
    let en = enumerator(g)?;
    let within_cap = t.atoms().len() <= en.cap();
    let mut checks = Vec::new();
    if sp_acyclic && within_cap {
        let stable = en.stable_models(t)?;
        if t.is_nondisjunctive() {
            checks.push(Check {
                name: "supported = stable",
                left: en.supported_models(t)?,
                right: stable.clone(),
            });
        }
        checks.push(Check {
            name: "pointwise stable = stable",
            left: en.pointwise_stable_models(t)?,
            right: stable,
        });
    }
    let code = if acyclic { 0 } else { 3 };

    if g.json {
        let checks: Vec<Value> = checks
            .iter()
            .map(|c| {
                json!({
                    "claim": c.name,
                    "holds": c.left == c.right,
                    "left": c.left,
                    "right": c.right,
                })
            })
            .collect();
        let value = json!({
            "graph": kind,
            "acyclic": acyclic,
            "cyclic_components": cycles,
            "sp_acyclic": sp_acyclic,
            "verified": checks,
        });
        return Ok(Outcome {
            text: json_text(&value),
            code,
        });
    }

    let mut out = String::new();
    writeln!(out, "graph: {kind}").unwrap();
    writeln!(out, "acyclic: {}", yes_no(acyclic)).unwrap();
    for c in &cycles {
        writeln!(out, "cyclic component: {}", set_text(c)).unwrap();
    }
    if sp_acyclic {
        if !within_cap {
            writeln!(
                out,
                "sp graph acyclic; enumeration skipped (above cap {})",
                en.cap()
            )
            .unwrap();
        }
        for c in &checks {
            if c.left == c.right {
                writeln!(out, "{}: verified ({})", c.name, list(&c.right)).unwrap();
            } else {
                writeln!(
                    out,
                    "{}: MISMATCH ({} vs {})",
                    c.name,
                    list(&c.left),
                    list(&c.right)
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome { text: out, code })
}

pub fn loops(g: &Global, t: &Theory, interp: Option<&str>) -> Result<Outcome> {
    let kind = g.kind();
    let f = t.conjunction();
    let interp = interp
        .map(|text| parse_atom_list(text).map(Interpretation::new))
        .transpose()?;
    if let Some(i) = &interp {
        let outside: Vec<&str> = i
            .iter()
            .filter(|a| !f.atoms().contains(*a))
            .map(Atom::name)
            .collect();
        if !outside.is_empty() {
            return Err(Error::AtomsOutsideFormula {
                atoms: format!("{{{}}}", outside.join(", ")),
            });
        }
    }
    let table = loop_table(&f, kind, interp.as_ref())?;

    let verdict = interp.as_ref().map(|i| {
        let model = f.eval(&|a: &Atom| i.contains(a));
        let accepted = model && table.iter().all(|e| e.satisfied == Some(true));
        let stable = is_stable(i, &Theory::from(f.clone()));
        let text = match (accepted, accepted == stable) {
            (true, true) => format!("accepted by {kind}-loop oracle"),
            (true, false) => format!("accepted by {kind}-loop oracle (UNSOUND)"),
            (false, true) => format!("rejected by {kind}-loop oracle"),
            (false, false) => format!("rejected by {kind}-loop oracle (INCOMPLETE)"),
        };
        (i, model, accepted, stable, text)
    });

    if g.json {
        let mut value = json!({
            "graph": kind,
            "formula": f.to_string(),
            "loops": table.iter().map(|e| json!({
                "set": e.set,
                "nes": e.nes.to_string(),
                "loop_formula": e.loop_formula.to_string(),
                "satisfied": e.satisfied,
            })).collect::<Vec<_>>(),
        });
        if let (Some((i, model, accepted, stable, text)), Value::Object(map)) =
            (&verdict, &mut value)
        {
            map.insert("interpretation".into(), to_value(i));
            map.insert("model".into(), json!(model));
            map.insert("accepted".into(), json!(accepted));
            map.insert("stable".into(), json!(stable));
            map.insert("verdict".into(), json!(text));
        }
        return Ok(Outcome::ok(json_text(&value)));
    }

    let mut out = String::new();
    writeln!(out, "graph: {kind}").unwrap();
    writeln!(out, "formula: {f}").unwrap();
    if table.is_empty() {
        writeln!(out, "loops: none").unwrap();
    }
    for e in &table {
        writeln!(out, "loop {}", set_text(&e.set)).unwrap();
        writeln!(out, "  nes: {}", e.nes).unwrap();
        writeln!(out, "  loop formula: {}", e.loop_formula).unwrap();
        if let Some(sat) = e.satisfied {
            writeln!(out, "  satisfied: {}", yes_no(sat)).unwrap();
        }
    }
    if let Some((i, model, _, stable, text)) = verdict {
        writeln!(out, "interpretation: {i}").unwrap();
        writeln!(out, "model: {}", yes_no(model)).unwrap();
        writeln!(out, "stable: {}", yes_no(stable)).unwrap();
        writeln!(out, "verdict: {text}").unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn nes(g: &Global, t: &Theory, set: &str) -> Result<Outcome> {
    let f = t.conjunction();
    let y = parse_atom_list(set)?;
    let nes = nes_of(&f, &y)?;
    let lf = if y.is_empty() {
        None
    } else {
        Some(loop_formula(&f, &y)?)
    };
    if g.json {
        return Ok(Outcome::ok(json_text(&json!({
            "formula": f.to_string(),
            "set": y,
            "nes": nes.to_string(),
            "loop_formula": lf.as_ref().map(ToString::to_string),
        }))));
    }
    let mut out = String::new();
    writeln!(out, "nes: {nes}").unwrap();
    if let Some(lf) = lf {
        writeln!(out, "loop formula: {lf}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn condition_text(c: &Condition, what: &str) -> String {
    if c.holds {
        "holds".into()
    } else {
        format!("fails, {} {what}", set_text(&c.offending))
    }
}

pub fn split(g: &Global, f_text: &str, g_text: &str, p_text: &str) -> Result<Outcome> {
    let kind = g.kind();
    let f = parse_formula(f_text)?;
    let gf = parse_formula(g_text)?;
    let p = parse_atom_list(p_text)?;
    let universe = Formula::and(f.clone(), gf.clone()).atoms();
    let q: BTreeSet<Atom> = universe.difference(&p).cloned().collect();
    let report = check_split_with(&enumerator(g)?, &f, &gf, &p, &q, kind)?;
    let code = match (report.conditions_hold(), report.equivalence_holds) {
        (false, _) => 3,
        (true, false) => 4,
        (true, true) => 0,
    };

    if g.json {
        let mut value = to_value(&report);
        if let Value::Object(map) = &mut value {
            map.insert("p".into(), to_value(&p));
            map.insert("q".into(), to_value(&q));
        }
        return Ok(Outcome {
            text: json_text(&value),
            code,
        });
    }

    let mut out = String::new();
    writeln!(out, "graph: {kind}").unwrap();
    writeln!(out, "P: {}", set_text(&p)).unwrap();
    writeln!(out, "Q: {}", set_text(&q)).unwrap();
    let cond_i = condition_text(&report.cond_i, "strictly positive in F but not in P");
    let cond_ii = condition_text(&report.cond_ii, "strictly positive in G but not in Q");
    let cond_iii = condition_text(&report.cond_iii, "is a component meeting both P and Q");
    writeln!(out, "condition (i): {cond_i}").unwrap();
    writeln!(out, "condition (ii): {cond_ii}").unwrap();
    writeln!(out, "condition (iii): {cond_iii}").unwrap();
    writeln!(out, "stable for F & G: {}", list(&report.stable_whole)).unwrap();
    writeln!(
        out,
        "stable for augmented F: {}",
        list(&report.stable_part_f)
    )
    .unwrap();
    writeln!(
        out,
        "stable for augmented G: {}",
        list(&report.stable_part_g)
    )
    .unwrap();
    writeln!(
        out,
        "stable for both parts: {}",
        list(&report.stable_both_parts)
    )
    .unwrap();
    writeln!(
        out,
        "equivalence: {}",
        if report.equivalence_holds {
            "holds"
        } else {
            "fails"
        }
    )
    .unwrap();
    Ok(Outcome { text: out, code })
}

pub fn fuzz(
    g: &Global,
    property: Property,
    count: usize,
    max_atoms: usize,
    max_depth: usize,
) -> Result<Outcome> {
    let config = FuzzConfig {
        seed: g.seed,
        count,
        max_atoms,
        max_depth,
        exec: g.exec(),
    };
    let summary = fuzz::run(property, &config)?;
    let code = if summary.passed() { 0 } else { 5 };
    let text = if g.json {
        json_text(&to_value(&summary))
    } else {
        summary.to_string()
    };
    Ok(Outcome { text, code })
}
