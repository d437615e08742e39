//! Output in two formats: an aligned table for people and a single JSON
//! object (keys `geometry`, `input`, `output`, `diagnostics`, in that order).

use serde_json::{json, Map, Value};

use ellfm_core::rational::{render, Rational};
use ellfm_core::{ChernCharacter, DivisorClass, SubsheafCandidate, SurfaceGeometry};

use crate::args::Format;

struct Field {
    key: &'static str,
    text: String,
    json: Value,
}

pub struct Report {
    geometry: SurfaceGeometry,
    input: Vec<Field>,
    output: Vec<Field>,
    diagnostics: Vec<String>,
}

impl Report {
    pub fn new(geometry: SurfaceGeometry) -> Self {
        Self { geometry, input: Vec::new(), output: Vec::new(), diagnostics: Vec::new() }
    }

    pub fn input(&mut self, key: &'static str, text: impl Into<String>, json: Value) -> &mut Self {
        self.input.push(Field { key, text: text.into(), json });
        self
    }

    pub fn output(&mut self, key: &'static str, text: impl Into<String>, json: Value) -> &mut Self {
        self.output.push(Field { key, text: text.into(), json });
        self
    }

    pub fn rational_out(&mut self, key: &'static str, x: &Rational) -> &mut Self {
        self.output(key, render(x), json!(render(x)))
    }

    pub fn chern_in(&mut self, key: &'static str, ch: &ChernCharacter) -> &mut Self {
        self.input(key, chern_text(ch), chern_json(ch))
    }

    pub fn chern_out(&mut self, key: &'static str, ch: &ChernCharacter) -> &mut Self {
        self.output(key, chern_text(ch), chern_json(ch))
    }

    pub fn diagnostic(&mut self, msg: impl Into<String>) -> &mut Self {
        self.diagnostics.push(msg.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Machine => self.machine(),
        }
    }

    fn table(&self) -> String {
        let width = self.input.iter().chain(&self.output).map(|f| f.key.len()).max().unwrap_or(0).max(8);
        let mut out = format!("{:width$}  g={} e={}\n", "geometry", self.geometry.genus, self.geometry.e);
        for f in self.input.iter().chain(&self.output) {
            out.push_str(&format!("{:width$}  {}\n", f.key, f.text));
        }
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        out
    }

    fn machine(&self) -> String {
        let section = |fields: &[Field]| {
            Value::Object(fields.iter().map(|f| (f.key.to_owned(), f.json.clone())).collect::<Map<_, _>>())
        };
        let doc = json!({
            "geometry": { "genus": self.geometry.genus, "e": self.geometry.e },
            "input": section(&self.input),
            "output": section(&self.output),
            "diagnostics": self.diagnostics,
        });
        let mut s = serde_json::to_string(&doc).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub fn chern_text(ch: &ChernCharacter) -> String {
    format!("{ch} on {}", ch.side)
}

pub fn divisor_json(d: &DivisorClass) -> Value {
    json!({ "side": d.side.to_string(), "section": render(&d.section), "fibre": render(&d.fibre) })
}

pub fn chern_json(ch: &ChernCharacter) -> Value {
    json!({
        "side": ch.side.to_string(),
        "rank": render(&ch.rank),
        "c1": divisor_json(&ch.c1),
        "ch2": render(&ch.ch2),
    })
}

pub fn candidate_json(c: &SubsheafCandidate) -> Value {
    json!({ "n_prime": c.n_prime, "c_prime": c.c_prime, "d_prime": c.d_prime })
}
