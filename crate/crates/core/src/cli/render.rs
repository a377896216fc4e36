//! Line-oriented report rendering.
//!
//! Every report line carries the same fields in the same order, so JSON
//! lines and CSV rows are interchangeable. Big integers (and indices) are
//! rendered as decimal strings.

use std::io::{self, Write};

use crate::congruence::CongruenceReport;
use crate::error::Error;
use crate::qpoly::IntPoly;

pub const REPORT_FIELDS: [&str; 17] = [
    "A",
    "B",
    "n",
    "w",
    "modulus",
    "lhs",
    "rhs",
    "holds",
    "trivial",
    "degenerate",
    "kind",
    "p",
    "rank",
    "out_of_hypothesis",
    "applicable",
    "note",
    "certificate",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Null,
    Bool(bool),
    Str(String),
    List(Vec<String>),
    /// Rendered as a bare JSON number; only used for summary counts.
    Count(u64),
}

impl Field {
    fn of<T: ToString>(value: Option<&T>) -> Self {
        value.map_or(Field::Null, |v| Field::Str(v.to_string()))
    }

    fn json(&self) -> String {
        match self {
            Field::Null => "null".to_owned(),
            Field::Bool(b) => b.to_string(),
            Field::Count(c) => c.to_string(),
            Field::Str(s) => serde_json::to_string(s).expect("string serializes"),
            Field::List(items) => serde_json::to_string(items).expect("list serializes"),
        }
    }

    fn csv(&self) -> String {
        match self {
            Field::Null => String::new(),
            Field::Bool(b) => b.to_string(),
            Field::Count(c) => c.to_string(),
            Field::Str(s) => s.clone(),
            Field::List(items) => items.join(" "),
        }
    }
}

/// An ordered list of named fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(&'static str, Field)>,
}

impl Record {
    pub fn new(fields: Vec<(&'static str, Field)>) -> Self {
        Self { fields }
    }

    pub fn get(&self, name: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.fields.iter().map(|(k, _)| *k).collect()
    }

    pub fn to_json_line(&self) -> String {
        let body: Vec<String> = self
            .fields
            .iter()
            .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).expect("key"), v.json()))
            .collect();
        format!("{{{}}}", body.join(","))
    }

    fn csv_cells(&self) -> Vec<String> {
        self.fields.iter().map(|(_, v)| v.csv()).collect()
    }
}

pub fn report_record(report: &CongruenceReport) -> Record {
    Record::new(vec![
        ("A", Field::of(report.a.as_ref())),
        ("B", Field::of(report.b.as_ref())),
        ("n", Field::Str(report.n.to_string())),
        ("w", Field::of(report.w.as_ref())),
        ("modulus", Field::of(report.modulus.as_ref())),
        ("lhs", Field::of(report.lhs_residue.as_ref())),
        ("rhs", Field::of(report.rhs_residue.as_ref())),
        ("holds", Field::Bool(report.holds)),
        ("trivial", Field::Bool(report.trivial)),
        ("degenerate", Field::Bool(report.degenerate)),
        ("kind", Field::Str(report.kind.as_str().to_owned())),
        ("p", Field::of(report.p.as_ref())),
        ("rank", Field::of(report.rank_used.as_ref())),
        ("out_of_hypothesis", Field::Bool(report.out_of_hypothesis)),
        ("applicable", Field::Bool(report.applicable)),
        ("note", Field::of(report.note.as_ref())),
        ("certificate", Field::Null),
    ])
}

/// A q-certificate outcome on the report schema. The certificate `G(q)` is an
/// ascending coefficient list.
pub fn q_record(n: u64, outcome: &Result<IntPoly, Error>) -> Record {
    let (holds, note, certificate) = match outcome {
        Ok(g) => (
            true,
            Field::Null,
            Field::List(g.coeffs().iter().map(ToString::to_string).collect()),
        ),
        Err(e) => (false, Field::Str(e.to_string()), Field::Null),
    };
    Record::new(vec![
        ("A", Field::Null),
        ("B", Field::Null),
        ("n", Field::Str(n.to_string())),
        ("w", Field::Null),
        ("modulus", Field::Null),
        ("lhs", Field::Null),
        ("rhs", Field::Null),
        ("holds", Field::Bool(holds)),
        ("trivial", Field::Bool(false)),
        ("degenerate", Field::Bool(false)),
        ("kind", Field::Str("q".to_owned())),
        ("p", Field::Null),
        ("rank", Field::Null),
        ("out_of_hypothesis", Field::Bool(false)),
        ("applicable", Field::Bool(true)),
        ("note", note),
        ("certificate", certificate),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
}

/// Writes records one per line. In CSV mode the header comes from the first
/// record written.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Self {
            out,
            format,
            header_written: false,
        }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::JsonLines => writeln!(self.out, "{}", record.to_json_line()),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                if !self.header_written {
                    w.write_record(record.names())?;
                    self.header_written = true;
                }
                w.write_record(record.csv_cells())?;
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                self.out.write_all(&bytes)
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::verify_theorem;
    use crate::lucas::LucasParams;

    #[test]
    fn report_fields_are_fixed() {
        let rec = report_record(&verify_theorem(&LucasParams::fibonacci(), 7));
        assert_eq!(rec.names(), REPORT_FIELDS.to_vec());
        let q = q_record(2, &Ok(IntPoly::from_i64s(&[9, -3])));
        assert_eq!(q.names(), REPORT_FIELDS.to_vec());
    }

    #[test]
    fn json_line_shape() {
        let rec = report_record(&verify_theorem(&LucasParams::fibonacci(), 7));
        assert_eq!(
            rec.to_json_line(),
            r#"{"A":"1","B":"-1","n":"7","w":"13","modulus":"169","lhs":"117","rhs":"117","holds":true,"trivial":false,"degenerate":false,"kind":"theorem","p":null,"rank":null,"out_of_hypothesis":false,"applicable":true,"note":null,"certificate":null}"#
        );
        let q = q_record(2, &Ok(IntPoly::from_i64s(&[9, -3])));
        assert!(q.to_json_line().contains(r#""certificate":["9","-3"]"#));
    }

    #[test]
    fn csv_rows_share_header() {
        let mut buf = Vec::new();
        {
            let mut em = Emitter::new(&mut buf, Format::Csv);
            em.emit(&report_record(&verify_theorem(
                &LucasParams::fibonacci(),
                7,
            )))
            .unwrap();
            em.emit(&report_record(&verify_theorem(
                &LucasParams::fibonacci(),
                6,
            )))
            .unwrap();
        }
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], REPORT_FIELDS.join(","));
        assert!(lines[1].starts_with("1,-1,7,13,169,117,117,true,false,false,theorem"));
    }
}
