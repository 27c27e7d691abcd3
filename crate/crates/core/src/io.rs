//! Score-file ingestion and serialization.
//!
//! Two wire formats are supported:
//!
//! * CSV with columns `id,score,label` (header row optional, UTF-8, `.`
//!   decimal separator);
//! * a JSON array of `{"id": str, "score": number, "label": str}` objects.
//!
//! Label tokens are mapped onto the genuine/attack classes through an
//! explicit [`LabelMap`]; nothing is inferred from the data.

use std::io::{Read, Write};

use serde::Deserialize;

use crate::dataset::{ClassPartition, LabeledDataset, Polarity, ScoreRecord};
use crate::error::{Error, Result};
use crate::score::ClassScores;

/// Supported input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Json,
}

impl InputFormat {
    /// Pick a format from a file extension, defaulting to CSV.
    pub fn from_path(path: &str) -> Self {
        if path
            .rsplit('.')
            .next()
            .is_some_and(|e| e.eq_ignore_ascii_case("json"))
        {
            InputFormat::Json
        } else {
            InputFormat::Csv
        }
    }
}

/// Maps label tokens onto semantic classes and records the axis orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelMap {
    pub live: String,
    pub fake: String,
    pub polarity: Polarity,
}

impl Default for LabelMap {
    fn default() -> Self {
        Self {
            live: "live".into(),
            fake: "fake".into(),
            polarity: Polarity::GenuineLow,
        }
    }
}

impl LabelMap {
    fn classify(&self, token: &str, line: u64) -> Result<bool> {
        if token == self.live {
            Ok(true)
        } else if token == self.fake {
            Ok(false)
        } else {
            Err(Error::UnknownLabel {
                line,
                token: token.to_string(),
                live: self.live.clone(),
                fake: self.fake.clone(),
            })
        }
    }
}

#[derive(Debug, Deserialize)]
struct RawJsonRecord {
    id: String,
    score: f64,
    label: String,
}

/// Parse a score stream into validated records. Row order is preserved.
pub fn read_records(
    reader: impl Read,
    format: InputFormat,
    labels: &LabelMap,
) -> Result<Vec<ScoreRecord>> {
    match format {
        InputFormat::Csv => read_csv_records(reader, labels),
        InputFormat::Json => read_json_records(reader, labels),
    }
}

fn read_csv_records(reader: impl Read, labels: &LabelMap) -> Result<Vec<ScoreRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);

    let mut records = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = row.position().map_or(i as u64 + 1, |p| p.line());
        if row.len() == 1 && row[0].is_empty() {
            continue; // blank line
        }
        if row.len() != 3 {
            return Err(Error::MalformedRow {
                line,
                reason: format!("expected 3 columns (id,score,label), found {}", row.len()),
            });
        }
        // An optional header row is recognized only by its exact column names.
        if i == 0
            && row[0].eq_ignore_ascii_case("id")
            && row[1].eq_ignore_ascii_case("score")
            && row[2].eq_ignore_ascii_case("label")
        {
            continue;
        }
        let score: f64 = row[1].parse().map_err(|_| Error::MalformedRow {
            line,
            reason: format!("cannot parse score {:?}", &row[1]),
        })?;
        if !score.is_finite() {
            return Err(Error::NonFiniteScore { line });
        }
        let genuine = labels.classify(&row[2], line)?;
        records.push(ScoreRecord {
            id: row[0].to_string(),
            score,
            genuine,
        });
    }
    Ok(records)
}

fn read_json_records(reader: impl Read, labels: &LabelMap) -> Result<Vec<ScoreRecord>> {
    let raw: Vec<RawJsonRecord> = serde_json::from_reader(reader)?;
    let mut records = Vec::with_capacity(raw.len());
    for (i, r) in raw.into_iter().enumerate() {
        let line = i as u64 + 1; // record index, 1-based
        if !r.score.is_finite() {
            return Err(Error::NonFiniteScore { line });
        }
        let genuine = labels.classify(&r.label, line)?;
        records.push(ScoreRecord {
            id: r.id,
            score: r.score,
            genuine,
        });
    }
    Ok(records)
}

/// Partition records by class without requiring both classes to be present.
pub fn partition_records(records: &[ScoreRecord], polarity: Polarity) -> ClassPartition {
    let mut genuine = Vec::new();
    let mut attack = Vec::new();
    for r in records {
        if r.genuine {
            genuine.push(r.score);
        } else {
            attack.push(r.score);
        }
    }
    ClassPartition {
        genuine: ClassScores::new(genuine).ok(),
        attack: ClassScores::new(attack).ok(),
        polarity,
    }
}

/// Ingest a stream into a validated two-class dataset.
///
/// Errors if the stream is malformed, contains a non-finite score or an
/// unmapped label token, or if either class ends up with zero samples.
pub fn ingest(reader: impl Read, format: InputFormat, labels: &LabelMap) -> Result<LabeledDataset> {
    let records = read_records(reader, format, labels)?;
    let partition = partition_records(&records, labels.polarity);
    let live_name = labels.live.clone();
    let fake_name = labels.fake.clone();
    partition.into_dataset().map_err(|e| match e {
        Error::EmptyClass { class } => Error::EmptyClass {
            class: if class == "genuine" {
                live_name
            } else {
                fake_name
            },
        },
        other => other,
    })
}

/// Relaxed ingest for rendering: at least one class must be present.
pub fn ingest_partition(
    reader: impl Read,
    format: InputFormat,
    labels: &LabelMap,
) -> Result<ClassPartition> {
    let records = read_records(reader, format, labels)?;
    let partition = partition_records(&records, labels.polarity);
    if partition.genuine.is_none() && partition.attack.is_none() {
        return Err(Error::EmptyClass {
            class: labels.live.clone(),
        });
    }
    Ok(partition)
}

/// Serialize a dataset back to CSV with synthetic row ids.
///
/// `ingest(write_csv(ds))` reproduces `ds` exactly: scores are printed with
/// the shortest round-tripping decimal representation.
pub fn write_csv(dataset: &LabeledDataset, labels: &LabelMap, mut out: impl Write) -> Result<()> {
    writeln!(out, "id,score,label")?;
    let mut idx = 0usize;
    let mut emit = |scores: &ClassScores, token: &str, out: &mut dyn Write| -> Result<()> {
        for &s in scores.iter() {
            idx += 1;
            writeln!(out, "r{idx:06},{s},{token}")?;
        }
        Ok(())
    };
    emit(dataset.genuine(), &labels.live, &mut out)?;
    emit(dataset.attack(), &labels.fake, &mut out)?;
    Ok(())
}

/// Serialize a dataset as a JSON record array (same shape `ingest` accepts).
pub fn write_json(dataset: &LabeledDataset, labels: &LabelMap, mut out: impl Write) -> Result<()> {
    let mut rows = Vec::with_capacity(dataset.len());
    let mut idx = 0usize;
    for (scores, token) in [
        (dataset.genuine(), &labels.live),
        (dataset.attack(), &labels.fake),
    ] {
        for &s in scores.iter() {
            idx += 1;
            rows.push(serde_json::json!({
                "id": format!("r{idx:06}"),
                "score": s,
                "label": token,
            }));
        }
    }
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)?;
    Ok(())
}
