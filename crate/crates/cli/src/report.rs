use std::io::Write;

use serde_json::{json, Map, Value};
use tournament_core::census::{Census, Predicate};
use tournament_core::classifier::{certificate_capped, classifier};
use tournament_core::format::classifier_to_json;
use tournament_core::iso::find_isomorphism_capped;
use tournament_core::modular::maximal_invariant_sets;
use tournament_core::{Tournament, VertexSet};

use crate::input::CliError;

const STRUCTURE: [&str; 4] = ["components", "terminal", "initial", "modules"];

pub fn parse_predicates(names: &[String]) -> Result<Vec<Predicate>, CliError> {
    if names.is_empty() {
        return Ok(Predicate::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| Predicate::parse(n).ok_or_else(|| CliError::Usage(format!("unknown predicate {n:?}"))))
        .collect()
}

fn sets(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| json!(s.to_vec())).collect())
}

fn structure(t: &Tournament, name: &str) -> Result<Value, CliError> {
    Ok(match name {
        "components" => sets(&t.strong_components()),
        "terminal" => json!(t.terminal_point()),
        "initial" => json!(t.initial_point()),
        _ => sets(&maximal_invariant_sets(t)?),
    })
}

fn text(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// Exits 1 when only yes/no properties were asked for and one of them fails.
pub fn analyze(t: &Tournament, props: &[String], as_json: bool, out: &mut impl Write) -> Result<u8, CliError> {
    let requested: Vec<(String, String)> = if props.is_empty() {
        let mut all: Vec<String> = Predicate::ALL.iter().map(|p| p.name().to_string()).collect();
        all.extend(STRUCTURE.iter().map(|s| s.to_string()));
        all.into_iter().map(|n| (n.clone(), n)).collect()
    } else {
        props.iter().map(|p| (p.trim().to_string(), p.trim().to_ascii_lowercase())).collect()
    };
    let mut report = vec![("order".to_string(), json!(t.order()))];
    let mut all_boolean = true;
    let mut all_true = true;
    for (label, key) in &requested {
        let value = if let Some(p) = Predicate::parse(key) {
            let b = p.eval(t);
            all_true &= b;
            json!(b)
        } else if STRUCTURE.contains(&key.as_str()) {
            all_boolean = false;
            structure(t, key)?
        } else {
            return Err(CliError::Usage(format!("unknown property {label:?}")));
        };
        report.push((label.clone(), value));
    }
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(report.into_iter().collect()))?)?;
    } else {
        for (k, v) in &report {
            writeln!(out, "{k}={}", text(v))?;
        }
    }
    Ok(if !props.is_empty() && all_boolean && !all_true { 1 } else { 0 })
}

pub fn classify(t: &Tournament, cert: bool, cap: usize, out: &mut impl Write) -> Result<u8, CliError> {
    if cert {
        let bytes = certificate_capped(t, cap)?;
        let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
        writeln!(out, "{hex}")?;
    } else {
        let tree = classifier(t);
        writeln!(out, "{}", serde_json::to_string_pretty(&classifier_to_json(&tree))?)?;
    }
    Ok(0)
}

pub fn iso(a: &Tournament, b: &Tournament, mapping: bool, cap: usize, out: &mut impl Write) -> Result<u8, CliError> {
    match find_isomorphism_capped(a, b, cap)? {
        Some(m) => {
            writeln!(out, "isomorphic")?;
            if mapping {
                let pairs: Vec<String> = m.iter().enumerate().map(|(i, j)| format!("{i}->{j}")).collect();
                writeln!(out, "{}", pairs.join(" "))?;
            }
            Ok(0)
        }
        None => {
            writeln!(out, "not isomorphic")?;
            Ok(1)
        }
    }
}

pub fn census(c: &Census, as_json: bool, out: &mut impl Write) -> Result<u8, CliError> {
    let kind = if c.labeled { "labeled" } else { "unlabeled" };
    if as_json {
        let counts: Map<String, Value> = c.counts.iter().map(|(p, n)| (p.name().to_string(), json!(n))).collect();
        let v = json!({"order": c.order, "kind": kind, "total": c.total, "counts": counts});
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "order {} ({kind}): {} total", c.order, c.total)?;
        for (p, n) in &c.counts {
            writeln!(out, "{}: {n} of {}", p.name(), c.total)?;
        }
    }
    Ok(0)
}
