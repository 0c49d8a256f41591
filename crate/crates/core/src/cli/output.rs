use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use super::Format;
use crate::error::Error;
use crate::reference::{self, Outcome, Status};

#[derive(Debug, Serialize)]
pub struct Record {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Value>,
}

impl Record {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Record { command, inputs, result, diagnostics: None }
    }

    pub fn with_diagnostics(mut self, d: Value) -> Self {
        self.diagnostics = Some(d);
        self
    }
}

pub struct Emitter<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("cannot write output: {e}"))
}

impl<'a> Emitter<'a> {
    pub fn new(out: &'a mut dyn Write, format: Format) -> Self {
        Emitter { out, format }
    }

    /// One JSON line, or `text` followed by a newline.
    pub fn record(&mut self, record: &Record, text: &str) -> Result<(), Error> {
        match self.format {
            Format::Json => {
                let line = serde_json::to_string(record).expect("records serialize");
                writeln!(self.out, "{line}").map_err(io)
            }
            Format::Text => writeln!(self.out, "{text}").map_err(io),
        }
    }
}

pub fn power_text(a: u32) -> String {
    match a {
        0 => "1".into(),
        1 => "L".into(),
        _ => format!("L^{a}"),
    }
}

pub fn reproduction(out: &mut dyn Write, format: Format, outcomes: &[Outcome]) -> Result<(), Error> {
    if format == Format::Json {
        for o in outcomes {
            let record = Record::new(
                "reproduce-paper",
                serde_json::json!({ "table": o.entry.table, "quantity": o.entry.quantity }),
                serde_json::json!({
                    "status": o.status,
                    "expected": reference::expected(&o.entry),
                    "printed": o.entry.printed,
                    "computed": o.computed,
                    "note": o.entry.note,
                }),
            );
            Emitter::new(out, format).record(&record, "")?;
        }
        return Ok(());
    }
    let rows: Vec<[String; 4]> = outcomes
        .iter()
        .map(|o| [o.entry.table.to_string(), o.entry.quantity.to_string(), o.entry.printed.to_string(), o.computed.clone()])
        .collect();
    let width = |i: usize| rows.iter().map(|r| r[i].len()).max().unwrap_or(0);
    let (w0, w1, w2, w3) = (width(0), width(1), width(2), width(3));
    writeln!(out, "{:<6} {:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  note", "status", "table", "quantity", "printed", "computed")
        .map_err(io)?;
    for (o, r) in outcomes.iter().zip(&rows) {
        let note = o.entry.note.unwrap_or("");
        let line = format!("{:<6} {:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {note}", o.status, r[0], r[1], r[2], r[3]);
        writeln!(out, "{}", line.trim_end()).map_err(io)?;
    }
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    writeln!(
        out,
        "{} values: {} PASS, {} FAIL, {} SKIP",
        outcomes.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    )
    .map_err(io)
}
