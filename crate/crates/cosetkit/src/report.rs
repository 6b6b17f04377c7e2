//! Deterministic report payloads shared by the CLI and bindings: stable
//! JSON serialization of cosets, paths and cycles, an input digest, and a
//! plain-text renderer.

use crate::acyclicity::CosetCycle;
use crate::cosets::{Cayley, CosetId};
use crate::mask::Mask;
use crate::paths::CosetPath;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// FNV-1a, 64-bit: tiny stable digest for echoing which input produced a
/// report.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    /// FNV-1a digest of the input file(s), hex.
    pub input_digest: Option<String>,
    /// One of: verified, refuted, unverified-guard, budget-exceeded.
    pub status: String,
    pub results: Value,
    /// Wall-clock milliseconds; excluded from determinism guarantees.
    pub timing_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering: one line per scalar, indented for nesting.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input digest: {}\n", d));
        }
        out.push_str(&format!("status: {}\n", self.status));
        render_value(&self.results, 0, &mut out);
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        render_value(val, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|x| x.is_object()) => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        for item in a {
                            render_value(item, indent + 1, out);
                        }
                    }
                    _ => out.push_str(&format!("{}{}: {}\n", pad, k, compact(val))),
                }
            }
        }
        _ => out.push_str(&format!("{}{}\n", pad, compact(v))),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn mask_labels(g: &Cayley, m: Mask) -> Vec<String> {
    m.iter().map(|e| g.group.labels()[e].clone()).collect()
}

pub fn vertex_word(g: &Cayley, v: u32) -> String {
    g.group.vertex_name(v)
}

/// Coset as { "mask": [labels], "members": [indices] }.
pub fn coset_json(g: &Cayley, c: CosetId) -> Value {
    json!({
        "mask": mask_labels(g, c.mask),
        "members": g.coset_members(c),
    })
}

/// Path as the alternating array [word, [labels], word, ..., word].
pub fn path_json(g: &Cayley, p: &CosetPath) -> Value {
    let mut items: Vec<Value> = Vec::with_capacity(2 * p.len() + 1);
    items.push(json!(vertex_word(g, p.vertices[0])));
    for i in 1..=p.len() {
        items.push(json!(mask_labels(g, p.label(i))));
        items.push(json!(vertex_word(g, p.vertices[i])));
    }
    Value::Array(items)
}

/// Cycle as the array of [word, [labels]] links.
pub fn cycle_json(g: &Cayley, c: &CosetCycle) -> Value {
    Value::Array(
        c.links
            .iter()
            .map(|&(v, a)| json!([vertex_word(g, v), mask_labels(g, a)]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::Group;

    #[test]
    fn digest_is_stable() {
        assert_eq!(fnv1a64(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64(b"a"), 0xaf63_dc4c_8601_ec8c);
        assert_ne!(fnv1a64(b"ab"), fnv1a64(b"ba"));
    }

    #[test]
    fn serializations_match_shapes() {
        let g = Cayley::new(
            Group::build(&catalog::make("elementary_abelian", &[2]).unwrap()).unwrap(),
        );
        let c = g.coset(0, Mask::single(0));
        assert_eq!(coset_json(&g, c), json!({"mask": ["a"], "members": [0, 1]}));
        let p = CosetPath { vertices: vec![0, 1], labels: vec![Mask::single(0)] };
        assert_eq!(path_json(&g, &p), json!(["", ["a"], "a"]));
    }
}
