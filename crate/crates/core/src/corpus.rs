//! Paper-level citation records: ingestion, validation and filtering.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Column order of the CSV exchange format.
pub const CSV_COLUMNS: [&str; 6] = ["paper_id", "institution_id", "field_id", "year", "doc_type", "citations"];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaperRecord {
    pub paper_id: String,
    pub institution_id: String,
    pub field_id: String,
    pub year: i32,
    pub doc_type: String,
    pub citations: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(InputFormat::Csv),
            "jsonl" | "ndjson" => Ok(InputFormat::Jsonl),
            other => Err(Error::InvalidConfig(format!("unknown input format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Corpus {
    pub records: Vec<PaperRecord>,
    /// Descriptions of the filters applied so far, oldest first.
    pub provenance: Vec<String>,
    pub schema_label: String,
}

impl Corpus {
    pub fn new(records: Vec<PaperRecord>) -> Result<Self> {
        check_unique(&records)?;
        Ok(Corpus { records, provenance: Vec::new(), schema_label: String::new() })
    }

    pub fn with_schema_label(mut self, label: impl Into<String>) -> Self {
        self.schema_label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Distinct institution ids, sorted.
    pub fn institutions(&self) -> BTreeSet<&str> {
        self.records.iter().map(|r| r.institution_id.as_str()).collect()
    }

    pub fn fields(&self) -> BTreeSet<&str> {
        self.records.iter().map(|r| r.field_id.as_str()).collect()
    }

    /// Writes the records in the CSV exchange format, with a header row.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(CSV_COLUMNS)?;
        for r in &self.records {
            w.write_record([
                r.paper_id.as_str(),
                r.institution_id.as_str(),
                r.field_id.as_str(),
                &r.year.to_string(),
                r.doc_type.as_str(),
                &r.citations.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// One JSON object per line, keys in CSV column order.
    pub fn write_jsonl<W: Write>(&self, mut writer: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut writer, r)?;
            writer.write_all(b"\n")?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn write(&self, format: InputFormat, writer: impl Write) -> Result<()> {
        match format {
            InputFormat::Csv => self.write_csv(writer),
            InputFormat::Jsonl => self.write_jsonl(writer),
        }
    }

    /// Writes the sidecar provenance block that accompanies [`Corpus::write_csv`].
    pub fn write_provenance<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(writer, "schema: {}", self.schema_label)?;
        writeln!(writer, "records: {}", self.records.len())?;
        for (i, p) in self.provenance.iter().enumerate() {
            writeln!(writer, "filter {}: {}", i + 1, p)?;
        }
        Ok(())
    }
}

fn check_unique(records: &[PaperRecord]) -> Result<()> {
    let mut seen: HashSet<(&str, &str)> = HashSet::with_capacity(records.len());
    for r in records {
        if !seen.insert((r.paper_id.as_str(), r.institution_id.as_str())) {
            return Err(Error::DuplicateRecord {
                paper_id: r.paper_id.clone(),
                institution_id: r.institution_id.clone(),
            });
        }
    }
    Ok(())
}

/// Parses one CSV row or JSONL object into a validated record.
///
/// Line numbers in errors are reported as 1.
pub fn parse_record(line: &str, format: InputFormat) -> Result<PaperRecord> {
    match format {
        InputFormat::Csv => {
            let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(line.as_bytes());
            let rec = rdr.records().next().ok_or_else(|| Error::malformed(1, CSV_COLUMNS[0], "empty row"))??;
            let fields: Vec<&str> = rec.iter().collect();
            record_from_fields(&fields, 1)
        }
        InputFormat::Jsonl => record_from_json(line, 1),
    }
}

fn record_from_fields(fields: &[&str], line: usize) -> Result<PaperRecord> {
    if fields.len() < CSV_COLUMNS.len() {
        return Err(Error::malformed(line, CSV_COLUMNS[fields.len()], "missing column"));
    }
    if fields.len() > CSV_COLUMNS.len() {
        return Err(Error::malformed(line, CSV_COLUMNS[5], format!("expected 6 columns, found {}", fields.len())));
    }
    Ok(PaperRecord {
        paper_id: token(fields[0], "paper_id", line)?,
        institution_id: token(fields[1], "institution_id", line)?,
        field_id: token(fields[2], "field_id", line)?,
        year: parse_year(fields[3].trim(), line)?,
        doc_type: fields[4].trim().to_string(),
        citations: parse_citations(fields[5].trim(), line)?,
    })
}

fn token(raw: &str, key: &str, line: usize) -> Result<String> {
    let t = raw.trim();
    if t.is_empty() {
        return Err(Error::malformed(line, key, "empty value"));
    }
    Ok(t.to_string())
}

fn parse_year(s: &str, line: usize) -> Result<i32> {
    s.parse().map_err(|_| Error::malformed(line, "year", format!("`{s}` is not an integer year")))
}

fn parse_citations(s: &str, line: usize) -> Result<u64> {
    if let Some(rest) = s.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::malformed(line, "citations", "negative citation count"));
        }
    }
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::malformed(line, "citations", format!("`{s}` is not a base-10 integer")));
    }
    s.parse().map_err(|_| Error::malformed(line, "citations", format!("`{s}` is not a base-10 integer")))
}

fn record_from_json(line: &str, line_no: usize) -> Result<PaperRecord> {
    let value: Value = serde_json::from_str(line).map_err(|e| Error::malformed(line_no, "<object>", e.to_string()))?;
    let obj = value.as_object().ok_or_else(|| Error::malformed(line_no, "<object>", "not a JSON object"))?;
    let get = |key: &str| obj.get(key).ok_or_else(|| Error::malformed(line_no, key, "missing key"));
    let text = |key: &str| -> Result<String> {
        match get(key)? {
            Value::String(s) => token(s, key, line_no),
            Value::Number(n) => Ok(n.to_string()),
            other => Err(Error::malformed(line_no, key, format!("expected a string, got {other}"))),
        }
    };
    let year = match get("year")? {
        Value::Number(n) => n
            .as_i64()
            .and_then(|y| i32::try_from(y).ok())
            .ok_or_else(|| Error::malformed(line_no, "year", format!("`{n}` is not an integer year")))?,
        Value::String(s) => parse_year(s.trim(), line_no)?,
        other => return Err(Error::malformed(line_no, "year", format!("unexpected {other}"))),
    };
    let citations = match get("citations")? {
        Value::Number(n) => {
            if let Some(c) = n.as_u64() {
                c
            } else if n.as_i64().is_some_and(|c| c < 0) {
                return Err(Error::malformed(line_no, "citations", "negative citation count"));
            } else {
                return Err(Error::malformed(line_no, "citations", format!("`{n}` is not a base-10 integer")));
            }
        }
        Value::String(s) => parse_citations(s.trim(), line_no)?,
        other => return Err(Error::malformed(line_no, "citations", format!("unexpected {other}"))),
    };
    Ok(PaperRecord {
        paper_id: text("paper_id")?,
        institution_id: text("institution_id")?,
        field_id: text("field_id")?,
        year,
        doc_type: text("doc_type")?,
        citations,
    })
}

/// Reads a whole corpus. CSV input may start with a header row, recognised
/// by a non-numeric final column.
pub fn load_corpus<R: Read>(source: R, format: InputFormat) -> Result<Corpus> {
    let records = match format {
        InputFormat::Csv => load_csv(source)?,
        InputFormat::Jsonl => load_jsonl(source)?,
    };
    Corpus::new(records)
}

fn load_csv<R: Read>(source: R) -> Result<Vec<PaperRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(source);
    let mut out = Vec::new();
    let mut rec = csv::StringRecord::new();
    let mut first = true;
    while rdr.read_record(&mut rec)? {
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if first {
            first = false;
            let last = rec.get(rec.len().saturating_sub(1)).unwrap_or("").trim();
            let numeric = last.trim_start_matches('-').bytes().all(|b| b.is_ascii_digit()) && !last.is_empty();
            if !numeric && rec.len() == CSV_COLUMNS.len() {
                continue;
            }
        }
        let fields: Vec<&str> = rec.iter().collect();
        out.push(record_from_fields(&fields, line)?);
    }
    Ok(out)
}

fn load_jsonl<R: Read>(source: R) -> Result<Vec<PaperRecord>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(record_from_json(&line, i + 1)?);
    }
    Ok(out)
}

/// Selection of records by document type, year, field and institution.
///
/// `None` means "all". `top_n_by_output` is applied after every other
/// predicate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSpec {
    pub doc_types: Option<Vec<String>>,
    pub year_range: Option<(i32, i32)>,
    pub fields: Option<Vec<String>>,
    pub institutions: Option<Vec<String>>,
    pub top_n_by_output: Option<usize>,
}

impl FilterSpec {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some((lo, hi)) = self.year_range {
            if lo > hi {
                return Err(Error::InvalidConfig(format!("year range {lo}..{hi} is empty")));
            }
        }
        if self.top_n_by_output == Some(0) {
            return Err(Error::InvalidConfig("top-n must be at least 1".into()));
        }
        Ok(())
    }

    /// The population-level part of the filter (document type, year and
    /// field), without institution selection. Used for baseline corpora.
    pub fn population_part(&self) -> FilterSpec {
        FilterSpec {
            doc_types: self.doc_types.clone(),
            year_range: self.year_range,
            fields: self.fields.clone(),
            institutions: None,
            top_n_by_output: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == FilterSpec::default()
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(v: &Option<Vec<String>>) -> String {
            v.as_ref().map_or_else(|| "ALL".to_string(), |v| format!("[{}]", v.join(",")))
        }
        write!(f, "doc_types={}; years=", list(&self.doc_types))?;
        match self.year_range {
            Some((lo, hi)) => write!(f, "[{lo},{hi}]")?,
            None => write!(f, "ALL")?,
        }
        write!(f, "; fields={}; institutions={}; top_n=", list(&self.fields), list(&self.institutions))?;
        match self.top_n_by_output {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "ALL"),
        }
    }
}

/// Returns a new corpus holding the records that satisfy `spec`, in their
/// original order. The provenance of the result records the spec and the
/// number of records kept.
pub fn apply_filters(corpus: &Corpus, spec: &FilterSpec) -> Result<Corpus> {
    spec.validate()?;
    let doc_types: Option<HashSet<String>> =
        spec.doc_types.as_ref().map(|v| v.iter().map(|d| d.trim().to_lowercase()).collect());
    let fields: Option<HashSet<&str>> = spec.fields.as_ref().map(|v| v.iter().map(String::as_str).collect());
    let insts: Option<HashSet<&str>> = spec.institutions.as_ref().map(|v| v.iter().map(String::as_str).collect());

    let mut kept: Vec<&PaperRecord> = corpus
        .records
        .iter()
        .filter(|r| {
            doc_types.as_ref().is_none_or(|d| d.contains(&r.doc_type.to_lowercase()))
                && spec.year_range.is_none_or(|(lo, hi)| (lo..=hi).contains(&r.year))
                && fields.as_ref().is_none_or(|f| f.contains(r.field_id.as_str()))
                && insts.as_ref().is_none_or(|i| i.contains(r.institution_id.as_str()))
        })
        .collect();

    if let Some(n) = spec.top_n_by_output {
        let top = top_institutions(&kept, n);
        kept.retain(|r| top.contains(r.institution_id.as_str()));
    }

    let mut provenance = corpus.provenance.clone();
    provenance.push(format!("{spec} -> kept {} of {} records", kept.len(), corpus.len()));
    Ok(Corpus { records: kept.into_iter().cloned().collect(), provenance, schema_label: corpus.schema_label.clone() })
}

/// The `n` institutions with the most records; ties go to the smaller id.
fn top_institutions<'a>(records: &[&'a PaperRecord], n: usize) -> HashSet<&'a str> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for r in records {
        *counts.entry(r.institution_id.as_str()).or_default() += 1;
    }
    let mut ranked: Vec<(&str, usize)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked.into_iter().take(n).map(|(id, _)| id).collect()
}
