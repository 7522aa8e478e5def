//! The JSON envelope shared by every command, and its CSV flattening.

use hn_codes::check::CheckReport;
use hn_codes::code::{LinearCode, SupportSet};
use hn_codes::hn::CanonicalPolygon;
use hn_codes::Rational;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "hn-codes/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Rationals are always written as `"num/den"`, integers included.
pub fn rational(r: Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(|&r| rational(r)).collect())
}

pub fn check(r: &CheckReport) -> Value {
    json!({
        "name": r.name,
        "cases": r.cases,
        "failures": r.failures,
        "passed": r.passed(),
        "violations": r.violations,
    })
}

pub fn set(s: SupportSet) -> Value {
    json!({ "bitmask": s.bits(), "elements": s.one_based() })
}

pub fn polygon(p: &CanonicalPolygon) -> Value {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|&(x, y)| json!({ "rank": x, "degree": rational(y) }))
        .collect();
    json!({
        "vertices": vertices,
        "slopes": rationals(&p.slopes()),
        "sides": p.sides(),
    })
}

pub fn code_info(code: &LinearCode) -> Value {
    let f = code.field();
    json!({
        "n": code.n(),
        "k": code.k(),
        "q": f.q(),
        "p": f.p(),
        "m": f.m(),
        "modulus": f.modulus(),
        "rate": rational(code.rate()),
    })
}

/// One input file: the path as given on the command line and its digest.
#[derive(Debug, Clone)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: Vec<Input>,
    pub results: Value,
    /// Wall-clock milliseconds, emitted only on request.
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("version".into(), json!(VERSION));
        m.insert("command".into(), json!({ "name": self.command, "args": self.args }));
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|i| json!({ "path": i.path, "sha256": i.sha256 }))
            .collect();
        m.insert("inputs".into(), Value::Array(inputs));
        let compact = serde_json::to_string(&self.results).expect("results serialize");
        m.insert("results_sha256".into(), json!(sha256_hex(compact.as_bytes())));
        m.insert("results".into(), self.results.clone());
        if let Some(ms) = self.elapsed_ms {
            m.insert("timing".into(), json!({ "elapsed_ms": ms }));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    /// Two columns: a dotted key path and the scalar found there.
    pub fn to_csv(&self) -> String {
        let mut rows = Vec::new();
        flatten(&self.to_value(), String::new(), &mut rows);
        let mut out = String::from("key,value\n");
        for (k, v) in rows {
            out.push_str(&csv_field(&k));
            out.push(',');
            out.push_str(&csv_field(&v));
            out.push('\n');
        }
        out
    }
}

fn flatten(v: &Value, prefix: String, out: &mut Vec<(String, String)>) {
    let join = |key: &str| if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(x, join(k), out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&i.to_string()), out);
            }
        }
        Value::Array(_) => out.push((prefix, String::new())),
        Value::String(s) => out.push((prefix, s.clone())),
        Value::Null => out.push((prefix, String::new())),
        other => out.push((prefix, other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_always_carry_a_denominator() {
        assert_eq!(rational(Rational::from_integer(-2)), json!("-2/1"));
        assert_eq!(rational(Rational::new(8, 10)), json!("4/5"));
    }

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn csv_flattening() {
        let r = Report {
            command: "x".into(),
            args: vec![],
            inputs: vec![],
            results: json!({ "a": [1, 2], "b": { "c": "p,q" }, "e": [] }),
            elapsed_ms: None,
        };
        let csv = r.to_csv();
        assert!(csv.contains("results.a.1,2\n"));
        assert!(csv.contains("results.b.c,\"p,q\"\n"));
        assert!(csv.contains("results.e,\n"));
        assert!(csv.starts_with("key,value\nschema,hn-codes/1\n"));
    }
}
