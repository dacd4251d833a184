//! Text encodings: the `TRN 1` upper-triangle format, decomposition trees as
//! JSON, Graphviz DOT and a plain JSON arc list.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::classifier::ClassifierTree;
use crate::error::{Error, Result};
use crate::modular::BaseKind;
use crate::tournament::Tournament;

pub const TRN_HEADER: &str = "TRN 1";

/// Canonical TRN text: header, `n=<N>`, then row `i` holding one character per
/// column `j > i`, `1` when `i -> j`.
pub fn to_trn(t: &Tournament) -> String {
    let n = t.order();
    let mut out = format!("{TRN_HEADER}\nn={n}\n");
    for i in 0..n.saturating_sub(1) {
        out.extend((i + 1..n).map(|j| if t.arc(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Parses TRN text. `#` lines after the header and blank lines are ignored;
/// CRLF line endings are accepted.
pub fn parse_trn(text: &str) -> Result<Tournament> {
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    match lines.next() {
        Some((_, l)) if l.trim() == TRN_HEADER => {}
        Some((no, _)) => return Err(err(no, "expected header `TRN 1`")),
        None => return Err(err(1, "empty input")),
    }
    let mut body = lines.filter(|(_, l)| {
        let l = l.trim();
        !l.is_empty() && !l.starts_with('#')
    });
    let (no, size_line) = body.next().ok_or_else(|| err(2, "missing `n=<N>` line"))?;
    let n: usize = size_line
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| err(no, "expected `n=<N>`"))?;
    if n == 0 {
        return Err(err(no, "a tournament needs at least one vertex"));
    }
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(n - 1);
    let mut last_line = no;
    for i in 0..n - 1 {
        let (no, row) = body
            .next()
            .ok_or_else(|| err(last_line + 1, &format!("missing row {i}")))?;
        last_line = no;
        let row = row.trim();
        if row.len() != n - 1 - i {
            return Err(err(no, &format!("row {i} must have {} characters, found {}", n - 1 - i, row.len())));
        }
        rows.push(
            row.chars()
                .map(|c| match c {
                    '1' => Ok(true),
                    '0' => Ok(false),
                    _ => Err(err(no, &format!("unexpected character {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if let Some((no, _)) = body.next() {
        return Err(err(no, "unexpected data after the last row"));
    }
    Tournament::from_fn(n, |i, j| rows[i][j - i - 1])
}

/// JSON value for a decomposition tree; bases are embedded as TRN strings.
pub fn classifier_to_json(tree: &ClassifierTree) -> Value {
    let children: Vec<Value> = tree
        .children
        .iter()
        .map(|(v, c)| json!({"vertex": v, "tree": classifier_to_json(c)}))
        .collect();
    json!({
        "kind": tree.kind.name(),
        "base": to_trn(&tree.base),
        "children": children,
    })
}

pub fn classifier_from_json(value: &Value) -> Result<ClassifierTree> {
    let bad = |m: &str| Error::MalformedTree(m.to_string());
    let obj = value.as_object().ok_or_else(|| bad("node is not an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .and_then(BaseKind::from_name)
        .ok_or_else(|| bad("missing or unknown `kind`"))?;
    let base = obj
        .get("base")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing `base`"))
        .and_then(|s| parse_trn(s).map_err(|e| Error::MalformedTree(format!("base: {e}"))))?;
    let mut children = BTreeMap::new();
    let list = match obj.get("children") {
        None => Vec::new(),
        Some(v) => v.as_array().ok_or_else(|| bad("`children` is not an array"))?.clone(),
    };
    let mut previous: Option<usize> = None;
    for entry in &list {
        let vertex = entry
            .get("vertex")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("child without numeric `vertex`"))? as usize;
        if previous.is_some_and(|p| p >= vertex) {
            return Err(bad("children must be sorted by vertex without repeats"));
        }
        previous = Some(vertex);
        let tree = entry.get("tree").ok_or_else(|| bad("child without `tree`"))?;
        children.insert(vertex, classifier_from_json(tree)?);
    }
    ClassifierTree::from_parts(kind, base, children)
}

/// Graphviz digraph listing every arc; `labels` replaces the default `v<i>` names.
pub fn to_dot(t: &Tournament, labels: Option<&[String]>) -> Result<String> {
    let n = t.order();
    if let Some(l) = labels {
        if l.len() != n {
            return Err(Error::Precondition(format!("{} labels for {n} vertices", l.len())));
        }
    }
    let name = |v: usize| match labels {
        Some(l) => format!("\"{}\"", l[v].replace('\\', "\\\\").replace('"', "\\\"")),
        None => format!("v{v}"),
    };
    let mut out = String::from("digraph tournament {\n");
    for v in 0..n {
        out.push_str(&format!("  {};\n", name(v)));
    }
    for (i, j) in t.arcs() {
        out.push_str(&format!("  {} -> {};\n", name(i), name(j)));
    }
    out.push_str("}\n");
    Ok(out)
}

/// `{"n": N, "arcs": [[i, j], …]}`.
pub fn to_json(t: &Tournament) -> Value {
    let arcs: Vec<[usize; 2]> = t.arcs().map(|(i, j)| [i, j]).collect();
    json!({"n": t.order(), "arcs": arcs})
}
