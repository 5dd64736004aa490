//! CSV ingestion for the two tweet-export layouts.
//!
//! Header names are matched case-insensitively. Rows whose text cell is
//! empty, whitespace or the literal `nan` are dropped and counted.

use std::collections::HashSet;
use std::fs::File;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use chrono::{DateTime, NaiveDate, NaiveDateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentiment::SentimentLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schema {
    Covid,
    Mpox,
}

impl FromStr for Schema {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "covid" => Ok(Schema::Covid),
            "mpox" | "monkeypox" => Ok(Schema::Mpox),
            other => Err(Error::Validation(format!("unknown schema `{other}`"))),
        }
    }
}

/// Pre-computed lexicon scores shipped with the export.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scores {
    pub compound: f64,
    pub neg: f64,
    pub neu: f64,
    pub pos: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawRecord {
    pub id: String,
    pub created_at: Option<DateTime<Utc>>,
    pub text: String,
    pub place: Option<String>,
    pub provided_sentiment: Option<SentimentLabel>,
    pub scores: Option<Scores>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusMeta {
    pub name: String,
    pub record_count: usize,
    pub dropped_missing: usize,
    pub date_range: Option<(DateTime<Utc>, DateTime<Utc>)>,
}

/// True when scores are absent, or every component is in range and
/// `neg + neu + pos` lies in `[0.99, 1.01]`. `compound` is signed, so it is
/// checked against `[-1, 1]`.
pub fn validate_scores(record: &RawRecord) -> bool {
    match &record.scores {
        None => true,
        Some(s) => {
            let unit = |v: f64| (0.0..=1.0).contains(&v);
            let sum = s.neg + s.neu + s.pos;
            (-1.0..=1.0).contains(&s.compound)
                && unit(s.neg)
                && unit(s.neu)
                && unit(s.pos)
                && (0.99..=1.01).contains(&sum)
        }
    }
}

struct Columns {
    id: usize,
    created_at: usize,
    text: usize,
    place: Option<usize>,
    sentiment: usize,
    scores: Option<[usize; 4]>,
}

impl Columns {
    fn resolve(headers: &csv::StringRecord, schema: Schema) -> Result<Self> {
        let names: Vec<String> = headers
            .iter()
            .map(|h| h.trim().trim_start_matches('\u{feff}').to_ascii_lowercase())
            .collect();
        let find = |name: &str| names.iter().position(|n| n == name);
        let require = |name: &str| {
            find(name).ok_or_else(|| Error::MissingColumn {
                column: name.to_string(),
            })
        };
        let (date_col, text_cols, place_required) = match schema {
            Schema::Covid => ("date", ["original_text", "clean_tweet"], true),
            Schema::Mpox => ("created_at", ["tweet", "text"], false),
        };
        let id = require("id")?;
        let created_at = require(date_col)?;
        let text = find(text_cols[0])
            .or_else(|| find(text_cols[1]))
            .ok_or_else(|| Error::MissingColumn {
                column: text_cols.join("/"),
            })?;
        let place = if place_required {
            Some(require("place")?)
        } else {
            find("place")
        };
        let sentiment = require("sentiment")?;
        let scores = match (find("compound"), find("neg"), find("neu"), find("pos")) {
            (Some(c), Some(n), Some(u), Some(p)) => Some([c, n, u, p]),
            _ => None,
        };
        Ok(Columns {
            id,
            created_at,
            text,
            place,
            sentiment,
            scores,
        })
    }
}

fn is_missing(cell: &str) -> bool {
    let cell = cell.trim();
    cell.is_empty() || cell.eq_ignore_ascii_case("nan")
}

/// Accepts RFC 3339 and the common `YYYY-MM-DD HH:MM:SS` export forms.
pub fn parse_timestamp(raw: &str) -> Option<DateTime<Utc>> {
    let raw = raw.trim();
    if let Ok(t) = DateTime::parse_from_rfc3339(raw) {
        return Some(t.with_timezone(&Utc));
    }
    for fmt in ["%Y-%m-%d %H:%M:%S%:z", "%Y-%m-%d %H:%M:%S%z"] {
        if let Ok(t) = DateTime::parse_from_str(raw, fmt) {
            return Some(t.with_timezone(&Utc));
        }
    }
    for fmt in ["%Y-%m-%d %H:%M:%S", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d %H:%M"] {
        if let Ok(t) = NaiveDateTime::parse_from_str(raw, fmt) {
            return Some(t.and_utc());
        }
    }
    NaiveDate::parse_from_str(raw, "%Y-%m-%d")
        .ok()
        .and_then(|d| d.and_hms_opt(0, 0, 0))
        .map(|t| t.and_utc())
}

fn parse_scores(row: &csv::StringRecord, cols: [usize; 4]) -> Option<Scores> {
    let mut vals = [0.0; 4];
    for (slot, col) in vals.iter_mut().zip(cols) {
        let cell = row.get(col)?;
        if is_missing(cell) {
            return None;
        }
        *slot = cell.trim().parse::<f64>().ok().filter(|v| v.is_finite())?;
    }
    Some(Scores {
        compound: vals[0],
        neg: vals[1],
        neu: vals[2],
        pos: vals[3],
    })
}

/// Parses an export from any reader. `name` ends up in the returned meta.
pub fn parse_corpus<R: Read>(reader: R, schema: Schema, name: &str) -> Result<(Vec<RawRecord>, CorpusMeta)> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .has_headers(true)
        .from_reader(reader);
    let cols = Columns::resolve(rdr.headers()?, schema)?;

    let mut records = Vec::new();
    let mut seen = HashSet::new();
    let mut dropped = 0usize;

    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let cell = |idx: usize| row.get(idx).unwrap_or("");
        let text = cell(cols.text);
        if is_missing(text) {
            dropped += 1;
            continue;
        }
        let id = cell(cols.id).trim().to_string();
        if id.is_empty() {
            return Err(Error::Validation(format!("data row {}: empty id", i + 1)));
        }
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateId(id));
        }
        let provided_sentiment = match cell(cols.sentiment) {
            s if is_missing(s) => None,
            s => Some(
                s.parse::<SentimentLabel>()
                    .map_err(|_| Error::Validation(format!("record `{id}`: unknown sentiment `{}`", s.trim())))?,
            ),
        };
        let place = cols
            .place
            .map(cell)
            .filter(|p| !is_missing(p))
            .map(|p| p.trim().to_string());
        let mut record = RawRecord {
            created_at: parse_timestamp(cell(cols.created_at)),
            text: text.to_string(),
            place,
            provided_sentiment,
            scores: cols.scores.and_then(|c| parse_scores(&row, c)),
            id,
        };
        if !validate_scores(&record) {
            log::warn!("record `{}`: score quadruple out of range, discarded", record.id);
            record.scores = None;
        }
        records.push(record);
    }

    let date_range =
        records
            .iter()
            .filter_map(|r| r.created_at)
            .fold(None, |acc: Option<(DateTime<Utc>, DateTime<Utc>)>, t| match acc {
                None => Some((t, t)),
                Some((lo, hi)) => Some((lo.min(t), hi.max(t))),
            });
    let meta = CorpusMeta {
        name: name.to_string(),
        record_count: records.len(),
        dropped_missing: dropped,
        date_range,
    };
    Ok((records, meta))
}

pub fn load_corpus(path: &Path, schema: Schema) -> Result<(Vec<RawRecord>, CorpusMeta)> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_corpus(file, schema, &name)
}
