//! Rendering of classification output as JSON, CSV or Markdown.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::classify::{
    classify_phi, del_pezzo_embeddings, intermediate_table_f, lemma_vanishing_search, section4_table, theorem_b,
    ulrich_beta_f, upper_bound_elimination, ClassificationRow, EmbeddingCandidate, LemmaWindow, Surface, TheoremB,
    UpperBoundRow,
};
use crate::json::to_pretty;
use crate::variety::Variety;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Svg,
    Ascii,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "svg" => Ok(Format::Svg),
            "ascii" => Ok(Format::Ascii),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "markdown",
            Format::Svg => "svg",
            Format::Ascii => "ascii",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("format `{0}` is not available for tables")]
    UnsupportedFormat(Format),
    #[error("unknown table `{0}`; expected one of {1}")]
    UnknownTable(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    Section4,
    IntermediateF,
    IntermediatePhi,
    UlrichF,
    Embeddings,
    TheoremBF,
    TheoremBPhi,
    Phi,
    UpperBound,
    Lemma,
}

impl TableName {
    pub const ALL: [TableName; 10] = [
        TableName::Section4,
        TableName::IntermediateF,
        TableName::IntermediatePhi,
        TableName::UlrichF,
        TableName::Embeddings,
        TableName::TheoremBF,
        TableName::TheoremBPhi,
        TableName::Phi,
        TableName::UpperBound,
        TableName::Lemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableName::Section4 => "section4",
            TableName::IntermediateF => "intermediateF",
            TableName::IntermediatePhi => "intermediatePhi",
            TableName::UlrichF => "ulrichF",
            TableName::Embeddings => "embeddings",
            TableName::TheoremBF => "theoremB-F",
            TableName::TheoremBPhi => "theoremB-Phi",
            TableName::Phi => "phi",
            TableName::UpperBound => "upperBound",
            TableName::Lemma => "lemma",
        }
    }
}

impl FromStr for TableName {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableName::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = TableName::ALL.iter().map(|t| t.name()).collect();
            ReportError::UnknownTable(s.to_string(), names.join(", "))
        })
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rectangular table of strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = format!(
            "| {} |\n",
            self.headers.iter().map(|h| esc(h)).collect::<Vec<_>>().join(" | ")
        );
        out += &format!("|{}\n", "---|".repeat(self.headers.len()));
        for r in &self.rows {
            out += &format!("| {} |\n", r.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | "));
        }
        out
    }
}

fn pair(p: (i64, i64)) -> String {
    format!("({},{})", p.0, p.1)
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn classification_table(rows: &[ClassificationRow]) -> Table {
    let mut t = Table::new(&[
        "case", "variety", "alpha", "delta", "e", "hc2", "c1c2", "c2", "[E]", "deg", "p_a", "status",
    ]);
    for r in rows {
        t.rows.push(vec![
            r.case.clone().unwrap_or_default(),
            r.variety.to_string(),
            pair(r.alpha),
            opt(r.delta.map(pair)),
            r.e.to_string(),
            r.hc2.to_string(),
            opt(r.c1c2),
            r.c2.to_string(),
            r.e_class.as_ref().map_or("-".into(), |c| c.to_string()),
            r.zero_locus.degree.to_string(),
            opt(r.zero_locus.arithmetic_genus.clone()),
            r.status.summary(),
        ]);
    }
    t
}

fn embeddings_table(cands: &[EmbeddingCandidate]) -> Table {
    let mut t = Table::new(&["surface", "a", "b", "mu", "h0", "restricted beta", "status"]);
    for c in cands {
        t.rows.push(vec![
            c.surface.to_string(),
            pair(c.a),
            pair(c.b),
            format!("({},{},{})", c.mu.0, c.mu.1, c.mu.2),
            format!("({},{})", opt(c.h0.0), opt(c.h0.1)),
            pair(c.restricted_beta),
            c.status.summary(),
        ]);
    }
    t
}

fn theorem_table(report: &TheoremB) -> Table {
    let mut t = Table::new(&["variety", "c1", "c2", "deg", "p_a", "zero locus", "ulrich", "chi"]);
    for e in &report.entries {
        let c2: Vec<String> = e.c2.iter().map(|c| c.to_string()).collect();
        t.rows.push(vec![
            report.variety.to_string(),
            pair(e.alpha),
            c2.join(" "),
            e.zero_locus.degree.to_string(),
            opt(e.zero_locus.arithmetic_genus.clone()),
            e.description.clone(),
            e.ulrich.to_string(),
            opt(e.chi.clone()),
        ]);
    }
    t
}

fn upper_table(rows: &[UpperBoundRow]) -> Table {
    let mut t = Table::new(&["alpha", "hc2", "c1c2", "betas", "chi(E^v(h))", "outcome"]);
    for r in rows {
        let betas: Vec<String> = r.betas.iter().map(|&b| pair(b)).collect();
        t.rows.push(vec![
            pair(r.alpha),
            r.hc2.to_string(),
            r.c1c2.to_string(),
            if betas.is_empty() { "-".into() } else { betas.join(" ") },
            r.chi_dual_twist_h.to_string(),
            r.elimination.as_ref().map_or("passes".into(), |s| s.summary()),
        ]);
    }
    t
}

fn lemma_table(tuples: &[(i64, i64, i64, i64)]) -> Table {
    let mut t = Table::new(&["a2", "b1", "b2", "t"]);
    for &(a, b1, b2, s) in tuples {
        t.rows
            .push(vec![a.to_string(), b1.to_string(), b2.to_string(), s.to_string()]);
    }
    t
}

enum Payload {
    Rows(Vec<ClassificationRow>),
    Embeddings(Vec<EmbeddingCandidate>),
    Theorem(TheoremB),
    Upper(Vec<UpperBoundRow>),
    Lemma(LemmaWindow, Vec<(i64, i64, i64, i64)>),
}

fn payload(name: TableName) -> Payload {
    match name {
        TableName::Section4 => Payload::Rows(section4_table()),
        TableName::IntermediateF => Payload::Rows(intermediate_table_f()),
        TableName::IntermediatePhi => Payload::Rows(classify_phi().into_iter().filter(|r| r.case.is_some()).collect()),
        TableName::UlrichF => Payload::Rows(ulrich_beta_f()),
        TableName::Embeddings => Payload::Embeddings(Surface::ALL.into_iter().flat_map(del_pezzo_embeddings).collect()),
        TableName::TheoremBF => Payload::Theorem(theorem_b(Variety::F)),
        TableName::TheoremBPhi => Payload::Theorem(theorem_b(Variety::Phi)),
        TableName::Phi => Payload::Rows(classify_phi()),
        TableName::UpperBound => Payload::Upper(upper_bound_elimination()),
        TableName::Lemma => {
            let w = LemmaWindow::default();
            Payload::Lemma(w, lemma_vanishing_search(w).into_iter().collect())
        }
    }
}

fn json_of<T: Serialize>(name: TableName, rows: &T) -> String {
    to_pretty(&json!({ "table": name.name(), "rows": rows }))
}

/// Renders table `name` in `format`. JSON output carries the full typed
/// records, CSV and Markdown a flattened view.
pub fn render_table(name: TableName, format: Format) -> Result<String, ReportError> {
    let p = payload(name);
    let table = match format {
        Format::Json => {
            return Ok(match &p {
                Payload::Rows(r) => json_of(name, r),
                Payload::Embeddings(r) => json_of(name, r),
                Payload::Theorem(r) => json_of(name, r),
                Payload::Upper(r) => json_of(name, r),
                Payload::Lemma(w, r) => to_pretty(&json!({ "table": name.name(), "window": w, "rows": r })),
            })
        }
        Format::Csv | Format::Markdown => match &p {
            Payload::Rows(r) => classification_table(r),
            Payload::Embeddings(r) => embeddings_table(r),
            Payload::Theorem(r) => theorem_table(r),
            Payload::Upper(r) => upper_table(r),
            Payload::Lemma(_, r) => lemma_table(r),
        },
        other => return Err(ReportError::UnsupportedFormat(other)),
    };
    Ok(match format {
        Format::Csv => table.to_csv(),
        _ => table.to_markdown(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in TableName::ALL {
            assert_eq!(t.name().parse::<TableName>().unwrap(), t);
        }
        assert!(matches!(
            "nope".parse::<TableName>(),
            Err(ReportError::UnknownTable(..))
        ));
    }

    #[test]
    fn markdown_section4_has_nine_rows() {
        let md = render_table(TableName::Section4, Format::Markdown).unwrap();
        assert_eq!(md.lines().count(), 11);
        assert!(md.contains("koszul-global-generation"));
    }

    #[test]
    fn csv_has_header_and_quotes() {
        let csv = render_table(TableName::TheoremBF, Format::Csv).unwrap();
        let mut r = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(r.records().count(), 4);
    }

    #[test]
    fn json_is_valid_and_stable() {
        for t in TableName::ALL {
            let a = render_table(t, Format::Json).unwrap();
            let v: serde_json::Value = serde_json::from_str(&a).unwrap();
            assert_eq!(v["table"], t.name());
            assert_eq!(a, render_table(t, Format::Json).unwrap());
        }
    }

    #[test]
    fn svg_is_rejected_for_tables() {
        assert_eq!(
            render_table(TableName::Lemma, Format::Svg),
            Err(ReportError::UnsupportedFormat(Format::Svg))
        );
    }
}
