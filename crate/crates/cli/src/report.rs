//! Report tree shared by every command, printable as indented text or as
//! JSON in which every number is tagged `exact` or `float`.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Deserializer, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactNum {
    pub exact: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FloatNum {
    pub float: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Node {
    Bool(bool),
    Exact(ExactNum),
    Float(FloatNum),
    Text(String),
    List(Vec<Node>),
    Map(IndexMap<String, Node>),
}

impl Node {
    pub fn exact(v: impl ToString) -> Node {
        Node::Exact(ExactNum { exact: v.to_string() })
    }

    /// Non-finite values have no JSON number, so they become text.
    pub fn float(v: f64) -> Node {
        if v.is_finite() {
            Node::Float(FloatNum { float: if v == 0.0 { 0.0 } else { v } })
        } else {
            Node::Text(v.to_string())
        }
    }

    pub fn text(v: impl ToString) -> Node {
        Node::Text(v.to_string())
    }

    pub fn floats(vs: &[f64]) -> Node {
        Node::List(vs.iter().map(|v| Node::float(*v)).collect())
    }

    pub fn texts<T: ToString>(vs: impl IntoIterator<Item = T>) -> Node {
        Node::List(vs.into_iter().map(Node::text).collect())
    }

    fn is_scalar(&self) -> bool {
        !matches!(self, Node::List(_) | Node::Map(_))
    }

    /// Numbers, booleans and lists of them print on one line.
    fn is_inline(&self) -> bool {
        match self {
            Node::Bool(_) | Node::Exact(_) | Node::Float(_) => true,
            Node::List(items) => items.iter().all(Node::is_inline),
            _ => false,
        }
    }
}

impl TryFrom<serde_json::Value> for Node {
    type Error = String;

    /// Objects with the single key `exact` (a string) or `float` (a number)
    /// are numbers; bare JSON numbers are rejected.
    fn try_from(v: serde_json::Value) -> Result<Self, String> {
        use serde_json::Value;
        Ok(match v {
            Value::Null => return Err("null is not a report value".into()),
            Value::Bool(b) => Node::Bool(b),
            Value::Number(n) => return Err(format!("untagged number {n}")),
            Value::String(s) => Node::Text(s),
            Value::Array(a) => Node::List(a.into_iter().map(Node::try_from).collect::<Result<_, _>>()?),
            Value::Object(m) => {
                if m.len() == 1 {
                    match m.iter().next() {
                        Some((k, Value::String(s))) if k == "exact" => return Ok(Node::exact(s)),
                        Some((k, Value::Number(n))) if k == "float" => {
                            return n.as_f64().map(Node::float).ok_or_else(|| format!("bad float {n}"));
                        }
                        _ => {}
                    }
                }
                Node::Map(m.into_iter().map(|(k, v)| Ok((k, Node::try_from(v)?))).collect::<Result<_, String>>()?)
            }
        })
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Node::try_from(v).map_err(serde::de::Error::custom)
    }
}

/// Ordered map builder.
#[derive(Clone, Debug, Default)]
pub struct Obj(IndexMap<String, Node>);

impl Obj {
    pub fn new() -> Self {
        Obj::default()
    }

    pub fn with(mut self, k: &str, v: Node) -> Self {
        self.0.insert(k.to_string(), v);
        self
    }

    pub fn push(&mut self, k: &str, v: Node) {
        self.0.insert(k.to_string(), v);
    }

    pub fn node(self) -> Node {
        Node::Map(self.0)
    }
}

/// Shortest decimal that is stable across runs, with rounding residue below
/// 1e-12 shown as 0.
pub fn fmt_float(v: f64) -> String {
    if v.abs() < 1e-12 {
        return "0".into();
    }
    let s = format!("{v:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn scalar_text(n: &Node) -> String {
    match n {
        Node::Bool(b) => b.to_string(),
        Node::Exact(e) => e.exact.clone(),
        Node::Float(f) => fmt_float(f.float),
        Node::Text(t) => t.clone(),
        _ => unreachable!(),
    }
}

fn inline_text(n: &Node) -> String {
    match n {
        Node::List(items) => format!("[{}]", items.iter().map(inline_text).collect::<Vec<_>>().join(", ")),
        other => scalar_text(other),
    }
}

fn render(n: &Node, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match n {
        Node::Map(m) => {
            for (k, v) in m {
                match v {
                    Node::List(items) if items.is_empty() => {
                        let _ = writeln!(out, "{pad}{k}: []");
                    }
                    v if v.is_inline() => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline_text(v));
                    }
                    v if v.is_scalar() => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(v));
                    }
                    v => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(v, indent + 1, out);
                    }
                }
            }
        }
        Node::List(items) => {
            for item in items {
                if item.is_inline() || item.is_scalar() {
                    let _ = writeln!(out, "{pad}- {}", inline_text(item));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(item, indent + 1, out);
                }
            }
        }
        scalar => {
            let _ = writeln!(out, "{pad}{}", scalar_text(scalar));
        }
    }
}

pub fn to_text(n: &Node) -> String {
    let mut s = String::new();
    render(n, 0, &mut s);
    s
}

pub fn to_json(n: &Node) -> String {
    let mut s = serde_json::to_string_pretty(n).expect("report trees always serialize");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> serde_json::Result<Node> {
    serde_json::from_str(s)
}
