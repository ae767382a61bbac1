//! Command reports, rendered as plain text or as one JSON object.

use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Default)]
pub struct Report {
    pub command: Vec<String>,
    pub input_digest: Option<String>,
    pub sizes: Vec<(String, usize)>,
    pub classes: Vec<(String, usize)>,
    pub timings: Vec<(String, f64)>,
    pub verdicts: Vec<(String, bool)>,
    /// Command-specific JSON fields, appended after the fixed ones.
    pub extra: Vec<(String, Value)>,
    /// The plain-text rendering, one entry per line.
    pub lines: Vec<String>,
    measure: bool,
}

impl Report {
    pub fn new(command: Vec<String>, measure: bool) -> Self {
        Self {
            command,
            measure,
            ..Self::default()
        }
    }

    /// Runs `f`, recording its wall-clock time under `phase` when timings
    /// are enabled and 0 otherwise.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = if self.measure {
            start.elapsed().as_secs_f64() * 1000.0
        } else {
            0.0
        };
        self.timings.push((phase.to_string(), ms));
        out
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn verdict(&mut self, name: impl Into<String>, pass: bool) {
        let name = name.into();
        self.lines.push(format!("{}  {name}", verdict_word(pass)));
        self.verdicts.push((name, pass));
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|(_, pass)| *pass)
    }

    pub fn to_json(&self) -> Value {
        fn object<T: Clone + Into<Value>>(entries: &[(String, T)]) -> Value {
            Value::Object(
                entries
                    .iter()
                    .map(|(k, v)| (k.clone(), v.clone().into()))
                    .collect(),
            )
        }
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        map.insert("input_digest".into(), json!(self.input_digest));
        map.insert("sizes".into(), object(&self.sizes));
        map.insert("classes".into(), object(&self.classes));
        map.insert("timings".into(), object(&self.timings));
        let verdicts: Vec<(String, &str)> = self
            .verdicts
            .iter()
            .map(|(k, pass)| (k.clone(), verdict_word(*pass)))
            .collect();
        map.insert("verdicts".into(), object(&verdicts));
        for (k, v) in &self.extra {
            map.insert(k.clone(), v.clone());
        }
        Value::Object(map)
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut text = serde_json::to_string_pretty(&self.to_json()).unwrap();
            text.push('\n');
            return text;
        }
        let mut text = String::new();
        for line in &self.lines {
            text.push_str(line);
            text.push('\n');
        }
        if self.measure {
            for (phase, ms) in &self.timings {
                text.push_str(&format!("time {phase}: {ms:.3} ms\n"));
            }
        }
        text
    }
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// Hex SHA-256 over the inputs, each prefixed by its length.
pub fn digest<'a>(inputs: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut hasher = Sha256::new();
    for bytes in inputs {
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(bytes);
    }
    hex::encode(hasher.finalize())
}
