//! JSON and CSV rendering of verification records.
//!
//! Every number is written as a decimal string. Bound certificates that are
//! too large to write out become `{base, exp, factorial, times}` objects.

use serde_json::{json, Map, Value};

use super::verify::{Check, Outcome, VerificationRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn opt(v: Option<impl ToString>) -> Value {
    v.map_or(Value::Null, s)
}

fn checks(list: &[Check]) -> Value {
    Value::Array(
        list.iter()
            .map(|c| json!({"name": c.name, "status": c.status.as_str(), "detail": c.detail}))
            .collect(),
    )
}

impl Report {
    /// 0 when every record behaved as expected, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().all(VerificationRecord::ok) {
            0
        } else {
            1
        }
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.records.iter().filter(|r| r.outcome == outcome).count()
    }

    pub fn record_json(r: &VerificationRecord, timing: bool) -> Value {
        let h = &r.hypotheses;
        let mut invariants = Map::new();
        invariants.insert("order".into(), s(r.order));
        invariants.insert("phi_order".into(), s(r.phi_order));
        invariants.insert("m".into(), s(r.m));
        invariants.insert("d".into(), s(r.d));
        if let Some(i) = &r.invariants {
            invariants.insert("soluble".into(), Value::Bool(i.soluble));
            invariants.insert("radical_order".into(), s(i.radical_order));
            invariants.insert("h_radical".into(), s(i.h_radical));
            invariants.insert("h_centraliser".into(), opt(i.h_centraliser));
            invariants.insert("centraliser_order".into(), s(i.centraliser_order));
            invariants.insert("quotient_order".into(), s(i.quotient_order));
        }
        let bounds = r.bounds.as_ref().map_or(Value::Null, |b| {
            json!({
                "B1(d,h(C))": opt(b.b1_d_hc),
                "B1(d,m)": s(b.b1_d_m),
                "B2(d,m)": b.b2_d_m.to_json(),
                "corollary": opt(r.corollary_bound.as_ref()),
            })
        });
        let mut out = json!({
            "label": r.label,
            "group": r.group,
            "identity": r.identity,
            "outcome": r.outcome.as_str(),
            "ok": r.ok(),
            "reasons": r.reasons,
            "hypotheses": {
                "primitive": h.primitive,
                "content": s(&h.content),
                "coprime": h.coprime,
                "identity_satisfied": h.identity_satisfied,
                "witness": opt(h.witness.as_ref()),
            },
            "invariants": Value::Object(invariants),
            "bounds": bounds,
            "verdicts": checks(&r.verdicts),
            "addenda": checks(&r.addenda),
            "expectation_failures": r.expectation_failures,
        });
        if timing {
            out["elapsed_ms"] = s(r.elapsed_ms);
        }
        out
    }

    pub fn to_json(&self, timing: bool) -> String {
        let summary = json!({
            "entries": s(self.records.len()),
            "pass": s(self.count(Outcome::Pass)),
            "hypothesis_failure": s(self.count(Outcome::HypothesisFailure)),
            "violation": s(self.count(Outcome::Violation)),
            "unexpected": s(self.records.iter().filter(|r| !r.ok()).count()),
        });
        let records: Vec<Value> = self.records.iter().map(|r| Self::record_json(r, timing)).collect();
        let mut text = serde_json::to_string_pretty(&json!({"summary": summary, "records": records}))
            .expect("report values serialise");
        text.push('\n');
        text
    }

    pub fn to_csv(&self, timing: bool) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "label", "group", "identity", "outcome", "ok", "order", "phi_order", "m", "d",
            "primitive", "coprime", "identity_satisfied", "radical_order", "h_radical",
            "h_centraliser", "quotient_order", "B1(d,h(C))", "B1(d,m)", "B2(d,m)", "corollary",
            "checks", "reasons",
        ];
        if timing {
            header.push("elapsed_ms");
        }
        w.write_record(&header).expect("in-memory write");
        for r in &self.records {
            let inv = r.invariants.as_ref();
            let b = r.bounds.as_ref();
            let or_empty = |v: Option<String>| v.unwrap_or_default();
            let checks: Vec<String> = r
                .verdicts
                .iter()
                .chain(&r.addenda)
                .map(|c| format!("{}={}", c.name, c.status.as_str()))
                .collect();
            let mut row = vec![
                r.label.clone(),
                r.group.clone(),
                r.identity.clone(),
                r.outcome.as_str().to_string(),
                r.ok().to_string(),
                r.order.to_string(),
                r.phi_order.to_string(),
                r.m.to_string(),
                r.d.to_string(),
                r.hypotheses.primitive.to_string(),
                r.hypotheses.coprime.to_string(),
                r.hypotheses.identity_satisfied.to_string(),
                or_empty(inv.map(|i| i.radical_order.to_string())),
                or_empty(inv.map(|i| i.h_radical.to_string())),
                or_empty(inv.and_then(|i| i.h_centraliser).map(|h| h.to_string())),
                or_empty(inv.map(|i| i.quotient_order.to_string())),
                or_empty(b.and_then(|b| b.b1_d_hc).map(|v| v.to_string())),
                or_empty(b.map(|b| b.b1_d_m.to_string())),
                or_empty(b.map(|b| b.b2_d_m.summary())),
                or_empty(r.corollary_bound.as_ref().map(|v| v.to_string())),
                checks.join("; "),
                r.reasons.join("; "),
            ];
            if timing {
                row.push(r.elapsed_ms.to_string());
            }
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn render(&self, format: Format, timing: bool) -> String {
        match format {
            Format::Json => self.to_json(timing),
            Format::Csv => self.to_csv(timing),
        }
    }

    /// One line per record, for terminals.
    pub fn summary_lines(&self) -> Vec<String> {
        self.records
            .iter()
            .map(|r| {
                let mark = if r.ok() { "ok  " } else { "FAIL" };
                let mut line = format!("{mark} {:<28} {:<18}", r.label, r.outcome.as_str());
                if let Some(i) = &r.invariants {
                    line.push_str(&format!(
                        " |G|={} m={} d={} |R|={} h(R)={}",
                        r.order, i.m, i.d, i.radical_order, i.h_radical
                    ));
                } else if let Some(reason) = r.reasons.first() {
                    line.push_str(&format!(" {reason}"));
                }
                for f in &r.expectation_failures {
                    line.push_str(&format!(" [{f}]"));
                }
                line
            })
            .collect()
    }
}
