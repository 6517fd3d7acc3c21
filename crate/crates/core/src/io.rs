//! JSON input specs and JSON/DOT export.
//!
//! Elements are written 1-based, either as integers or as single lowercase
//! letters (`"a"` is element 1). Exports always use integers.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::antimatroid::{Antimatroid, SetFamily};
use crate::error::{Error, Result};
use crate::external::ExternalOrder;
use crate::jd::JDLattice;
use crate::lattice::LatticePresentation;
use crate::matroid::Matroid;
use crate::subset::{Element, GroundOrder, Subset};

#[derive(Clone, Debug)]
pub enum Spec {
    Matroid(Matroid),
    Antimatroid(Antimatroid),
    Lattice(LatticePresentation),
}

/// A parsed spec and the ground order it declared, if any.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub spec: Spec,
    pub order: Option<GroundOrder>,
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn field<'a>(obj: &'a Value, path: &str, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(path, format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn element(v: &Value, path: &str) -> Result<Element> {
    match v {
        Value::Number(_) => match as_usize(v, path)? {
            0 => Err(schema(path, "elements are numbered from 1")),
            x => Ok(x - 1),
        },
        Value::String(s) => match s.as_bytes() {
            [c @ b'a'..=b'z'] => Ok((c - b'a') as usize),
            _ => Err(schema(path, format!("{s:?} is not a single lowercase letter"))),
        },
        _ => Err(schema(path, "expected an element (integer or letter)")),
    }
}

fn set(v: &Value, path: &str, n: usize) -> Result<Subset> {
    let mut out = Subset::EMPTY;
    for (k, x) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let e = element(x, &p)?;
        if e >= n {
            return Err(schema(&p, format!("element {} exceeds the ground size {n}", e + 1)));
        }
        if out.contains(e) {
            return Err(schema(&p, format!("element {} repeated", e + 1)));
        }
        out = out.with(e);
    }
    Ok(out)
}

fn sets(obj: &Value, key: &str, n: usize) -> Result<Vec<Subset>> {
    let path = format!("$.{key}");
    as_array(field(obj, "$", key)?, &path)?
        .iter()
        .enumerate()
        .map(|(k, v)| set(v, &format!("{path}[{k}]"), n))
        .collect()
}

fn ground_size(obj: &Value) -> Result<usize> {
    let n = as_usize(field(obj, "$", "ground")?, "$.ground")?;
    if n > crate::subset::MAX_ELEMENTS {
        return Err(Error::TooManyElements(n));
    }
    Ok(n)
}

fn order(obj: &Value, n: usize) -> Result<Option<GroundOrder>> {
    let Some(v) = obj.get("order") else {
        return Ok(None);
    };
    let seq = as_array(v, "$.order")?
        .iter()
        .enumerate()
        .map(|(k, x)| element(x, &format!("$.order[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    if seq.len() != n {
        return Err(schema("$.order", format!("expected {n} elements, found {}", seq.len())));
    }
    GroundOrder::from_sequence(seq)
        .map(Some)
        .map_err(|e| schema("$.order", e.to_string()))
}

/// Parses and validates a spec. Axiom violations are reported by the
/// constructors; malformed input as [`Error::Schema`].
pub fn parse_spec(text: &str) -> Result<Parsed> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
    if !v.is_object() {
        return Err(schema("$", "expected an object"));
    }
    let kind = field(&v, "$", "kind")?
        .as_str()
        .ok_or_else(|| schema("$.kind", "expected a string"))?;
    let (spec, n) = match kind {
        "linear" => {
            let p = as_usize(field(&v, "$", "field")?, "$.field")?;
            let p = u8::try_from(p).map_err(|_| schema("$.field", "field order too large"))?;
            let rows = as_array(field(&v, "$", "matrix")?, "$.matrix")?;
            let mut matrix = Vec::with_capacity(rows.len());
            for (r, row) in rows.iter().enumerate() {
                let path = format!("$.matrix[{r}]");
                let entries = as_array(row, &path)?
                    .iter()
                    .enumerate()
                    .map(|(c, x)| {
                        x.as_i64()
                            .ok_or_else(|| schema(&format!("{path}[{c}]"), "expected an integer"))
                    })
                    .collect::<Result<Vec<i64>>>()?;
                if r > 0 && entries.len() != matrix.first().map_or(0, Vec::len) {
                    return Err(schema(&path, "rows have unequal length"));
                }
                matrix.push(entries);
            }
            let m = Matroid::linear(p, &matrix)?;
            let n = m.universe();
            (Spec::Matroid(m), n)
        }
        "graphic" => {
            let edges = as_array(field(&v, "$", "edges")?, "$.edges")?
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    let path = format!("$.edges[{k}]");
                    match as_array(e, &path)?.as_slice() {
                        [a, b] => Ok((as_usize(a, &format!("{path}[0]"))?, as_usize(b, &format!("{path}[1]"))?)),
                        _ => Err(schema(&path, "an edge has two endpoints")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Matroid::graphic(&edges)?;
            let n = m.universe();
            (Spec::Matroid(m), n)
        }
        "uniform" => {
            let r = as_usize(field(&v, "$", "r")?, "$.r")?;
            let n = as_usize(field(&v, "$", "n")?, "$.n")?;
            (Spec::Matroid(Matroid::uniform(r, n)?), n)
        }
        "bases" => {
            let n = ground_size(&v)?;
            (Spec::Matroid(Matroid::from_bases(n, &sets(&v, "bases", n)?)?), n)
        }
        "circuits" => {
            let n = ground_size(&v)?;
            (Spec::Matroid(Matroid::from_circuits(n, &sets(&v, "circuits", n)?)?), n)
        }
        "antimatroid" => {
            let n = ground_size(&v)?;
            let family = SetFamily::new(Subset::full(n), sets(&v, "feasible", n)?)?;
            (Spec::Antimatroid(Antimatroid::new(family)?), n)
        }
        "lattice" => {
            let size = as_usize(field(&v, "$", "size")?, "$.size")?;
            let node = |x: &Value, path: &str| -> Result<usize> {
                match as_usize(x, path)? {
                    k if (1..=size).contains(&k) => Ok(k - 1),
                    _ => Err(schema(path, format!("node out of range 1..={size}"))),
                }
            };
            let covers = as_array(field(&v, "$", "covers")?, "$.covers")?
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    let path = format!("$.covers[{k}]");
                    match as_array(e, &path)?.as_slice() {
                        [a, b] => Ok((node(a, &format!("{path}[0]"))?, node(b, &format!("{path}[1]"))?)),
                        _ => Err(schema(&path, "a cover is a pair [lower, upper]")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let mut p = LatticePresentation::new(size, covers)?;
            if let Some(irr) = v.get("meet_irreducibles") {
                let irr = as_array(irr, "$.meet_irreducibles")?
                    .iter()
                    .enumerate()
                    .map(|(k, x)| node(x, &format!("$.meet_irreducibles[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                p = p.with_irreducible_order(irr);
            }
            if v.get("order").is_some() {
                return Err(schema("$.order", "lattices take no ground order"));
            }
            return Ok(Parsed {
                spec: Spec::Lattice(p),
                order: None,
            });
        }
        other => return Err(schema("$.kind", format!("unknown kind {other:?}"))),
    };
    let ord = order(&v, n)?;
    let spec = match (spec, &ord) {
        (Spec::Matroid(m), Some(o)) => Spec::Matroid(m.with_order(o.clone())?),
        (s, _) => s,
    };
    Ok(Parsed { spec, order: ord })
}

pub fn set_value(s: Subset) -> Value {
    Value::Array(s.iter().map(|x| json!(x + 1)).collect())
}

fn sets_value<'a>(sets: impl IntoIterator<Item = &'a Subset>) -> Value {
    Value::Array(sets.into_iter().map(|&s| set_value(s)).collect())
}

fn universe(ground: Subset) -> usize {
    ground.last().map_or(0, |x| x + 1)
}

/// The members of `f` in canonical order (size, then bits), e.g. `[[]]`.
pub fn family_json(f: &SetFamily) -> String {
    sets_value(f.members()).to_string()
}

pub fn antimatroid_value(a: &Antimatroid) -> Value {
    json!({
        "kind": "antimatroid",
        "ground": universe(a.ground()),
        "feasible": sets_value(a.feasible_sets()),
    })
}

/// Canonical antimatroid spec; parses back to an equal antimatroid when the
/// ground set is `1..=n`.
pub fn antimatroid_json(a: &Antimatroid) -> String {
    antimatroid_value(a).to_string()
}

/// A matroid as a bases spec carrying its order.
pub fn matroid_json(m: &Matroid) -> String {
    let order: Vec<usize> = m.order().sequence().iter().map(|x| x + 1).collect();
    json!({
        "kind": "bases",
        "ground": m.universe(),
        "bases": sets_value(m.bases()),
        "order": order,
    })
    .to_string()
}

pub fn lattice_json(p: &LatticePresentation) -> String {
    let covers: Vec<[usize; 2]> = p.covers().iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    let mut v = json!({"kind": "lattice", "size": p.size(), "covers": covers});
    if let Some(irr) = p.irreducible_order() {
        v["meet_irreducibles"] = json!(irr.iter().map(|x| x + 1).collect::<Vec<_>>());
    }
    v.to_string()
}

/// The external order as nodes (independent and passive sets) and labelled
/// cover edges between 1-based node ids.
pub fn external_order_value(eo: &ExternalOrder) -> Value {
    let l = eo.lattice();
    let nodes: Vec<Value> = (0..l.len())
        .map(|x| {
            json!({
                "id": x + 1,
                "independent": set_value(eo.independent(x)),
                "passive": set_value(l.element(x)),
            })
        })
        .collect();
    let edges: Vec<[usize; 3]> = l
        .edges()
        .iter()
        .map(|e| [e.lower + 1, e.upper + 1, e.label + 1])
        .collect();
    json!({
        "order": eo.matroid().order().sequence().iter().map(|x| x + 1).collect::<Vec<_>>(),
        "nodes": nodes,
        "edges": edges,
        "minimum": set_value(eo.minimum()),
        "maximum": set_value(eo.maximum()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NodeLabels {
    /// `I(x)`, the labels of upward covers.
    #[default]
    Independent,
    /// The feasible set itself.
    Feasible,
}

fn word(s: Subset) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
    if s.iter().all(|x| x < 9) {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// Hasse diagram in DOT, bottom to top, nodes in canonical order and edges
/// labelled by their natural labels.
pub fn export_dot(l: &JDLattice, labels: NodeLabels) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..l.len() {
        let s = match labels {
            NodeLabels::Independent => l.element_sets(x).i,
            NodeLabels::Feasible => l.element(x),
        };
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", word(s));
    }
    for e in l.edges() {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.lower, e.upper, e.label + 1);
    }
    out.push_str("}\n");
    out
}
