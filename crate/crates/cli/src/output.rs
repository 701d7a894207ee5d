//! Text and JSON rendering. JSON documents carry `schema: 1` and the run
//! configuration; suites keep their checks sorted by name.

use std::io::{self, Write};

use clap::ValueEnum;
use qdouble::hopf::{Algebra, HopfPresentation};
use qdouble::qgroups::QuantumGroup;
use qdouble::report::Suite;
use serde_json::{json, Map, Value};

use crate::battery::Settings;
use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Output {
    format: Format,
    timings: bool,
    config: Value,
    text: Vec<String>,
    extra: Map<String, Value>,
    suites: Vec<Suite>,
}

impl Output {
    pub fn new(format: Format, group: &str, cfg: Settings, timings: bool) -> Self {
        let config = json!({
            "group": group,
            "degree": cfg.degree,
            "seed": cfg.seed,
            "fast_rank": cfg.fast_rank,
        });
        Output { format, timings, config, text: Vec::new(), extra: Map::new(), suites: Vec::new() }
    }

    pub fn value(&mut self, command: &str, input: &str, result: &str) {
        self.text.push(result.to_string());
        self.extra.insert("command".into(), json!(command));
        self.extra.insert("input".into(), json!(input));
        self.extra.insert("result".into(), json!(result));
    }

    pub fn cross_relations(&mut self, lines: &[String]) {
        self.text.extend(lines.iter().cloned());
        self.extra.insert("relations".into(), json!(lines));
    }

    pub fn presentation(&mut self, g: &QuantumGroup) {
        let mut algs = Vec::new();
        for alg in [&g.a, &g.u] {
            let (text, value) = describe(alg);
            self.text.extend(text);
            algs.push(value);
        }
        self.extra.insert("algebras".into(), Value::Array(algs));
    }

    pub fn suite(&mut self, mut s: Suite) {
        if !self.timings {
            s.elapsed_ms = None;
        }
        self.suites.push(s);
    }

    pub fn finish(self) -> Result<(), Failure> {
        let passed = self.suites.iter().all(Suite::passed);
        // A closed pipe (e.g. `| head`) is not an error worth reporting.
        let _ = self.write(&mut io::stdout().lock());
        if passed {
            Ok(())
        } else {
            Err(Failure::Checks)
        }
    }

    fn write(self, o: &mut impl Write) -> io::Result<()> {
        match self.format {
            Format::Text => {
                for line in &self.text {
                    writeln!(o, "{}", line)?;
                }
                for s in &self.suites {
                    write!(o, "{}", s.to_text())?;
                    if let Some(ms) = s.elapsed_ms {
                        writeln!(o, "     {}: {} ms", s.name, ms)?;
                    }
                }
                if !self.suites.is_empty() {
                    let checks: usize = self.suites.iter().map(|s| s.checks.len()).sum();
                    let failed: usize = self.suites.iter().map(|s| s.failures().count()).sum();
                    writeln!(o, "{} suites, {} checks, {} failed", self.suites.len(), checks, failed)?;
                }
            }
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("schema".into(), json!(1));
                doc.insert("config".into(), self.config);
                doc.extend(self.extra);
                if !self.suites.is_empty() || !doc.contains_key("result") {
                    doc.insert("suites".into(), serde_json::to_value(&self.suites).expect("suites serialize"));
                }
                writeln!(o, "{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("json"))?;
            }
        }
        Ok(())
    }
}

/// Generators, relations as lhs/rhs, and the Δ, ε, S tables of a one-factor algebra.
fn describe(alg: &Algebra) -> (Vec<String>, Value) {
    let p: &HopfPresentation = alg.factor(0);
    let sq = alg.square();
    let mut text = vec![format!("{}", alg.name()), format!("  generators: {}", p.names.join(", "))];
    let mut rels = Vec::new();
    text.push("  relations:".into());
    for r in &p.relations {
        let (l, rh) = (alg.format(&r.lhs), alg.format(&r.rhs));
        text.push(format!("    {} = {}", l, rh));
        rels.push(json!({"lhs": l, "rhs": rh}));
    }
    let mut delta = Map::new();
    let mut eps = Map::new();
    let mut s = Map::new();
    text.push("  structure maps (generator: coproduct | counit | antipode):".into());
    for (i, name) in p.names.iter().enumerate() {
        let d = sq.format(&p.coproduct[i]);
        let e = p.counit[i].to_string();
        let a = alg.format(&p.antipode[i]);
        text.push(format!("    {}: {} | {} | {}", name, d, e, a));
        delta.insert(name.clone(), json!(d));
        eps.insert(name.clone(), json!(e));
        s.insert(name.clone(), json!(a));
    }
    let value = json!({
        "name": alg.name(),
        "generators": p.names,
        "relations": rels,
        "coproduct": delta,
        "counit": eps,
        "antipode": s,
    });
    (text, value)
}
