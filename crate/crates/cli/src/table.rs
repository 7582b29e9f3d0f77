//! Comma-separated point tables with a header naming at least `r` and `theta`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use circlust::PolarPoint;

use crate::error::{CliError, Result};

/// Column appended to clustered tables.
pub const CLUSTER_COLUMN: &str = "cluster";

#[derive(Debug, Clone)]
pub struct PointTable {
    pub headers: Vec<String>,
    /// Raw cell text, kept so output tables echo the input verbatim.
    pub rows: Vec<Vec<String>>,
    pub points: Vec<PolarPoint>,
}

impl PointTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    /// Integer labels from the first of `names` present in the header.
    pub fn labels(&self, names: &[&str]) -> Result<Option<Vec<i64>>> {
        let Some(col) = names.iter().find_map(|n| self.column(n)) else {
            return Ok(None);
        };
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row[col].trim().parse::<i64>().map_err(|_| {
                    CliError::validation(format!(
                        "row {}: '{}' is not an integer label",
                        i + 2,
                        row[col]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    if e.is_io_error() {
        CliError::io(path, e)
    } else {
        CliError::validation(format!("{}: {e}", path.display()))
    }
}

pub fn read_table(path: &Path, degrees: bool) -> Result<PointTable> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| csv_error(path, e))?
        .iter()
        .map(str::to_string)
        .collect();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CliError::validation(format!("{}: missing '{name}' column", path.display())))
    };
    let (r_col, theta_col) = (find("r")?, find("theta")?);

    let mut rows = Vec::new();
    let mut points = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = i + 2;
        let num = |col: usize| {
            record[col].parse::<f64>().map_err(|_| {
                CliError::validation(format!(
                    "{}: line {line}: '{}' is not a number",
                    path.display(),
                    &record[col]
                ))
            })
        };
        let (r, theta) = (num(r_col)?, num(theta_col)?);
        let point = if degrees {
            PolarPoint::from_degrees(r, theta)
        } else {
            PolarPoint::new(r, theta)
        }
        .map_err(|e| CliError::validation(format!("{}: line {line}: {e}", path.display())))?;
        points.push(point);
        rows.push(record.iter().map(str::to_string).collect());
    }
    if points.is_empty() {
        return Err(CliError::validation(format!("{}: no data rows", path.display())));
    }
    Ok(PointTable {
        headers,
        rows,
        points,
    })
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    let mut out = create(path)?;
    out.write_all(contents.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::io(path, e))
}

/// Writes the input columns followed by a `cluster` column. An existing
/// `cluster` column is replaced.
pub fn write_labeled(path: &Path, table: &PointTable, labels: &[i64]) -> Result<()> {
    let existing = table.column(CLUSTER_COLUMN);
    let mut writer = csv::Writer::from_writer(create(path)?);
    let mut header: Vec<&str> = table
        .headers
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != existing)
        .map(|(_, h)| h.as_str())
        .collect();
    header.push(CLUSTER_COLUMN);
    writer.write_record(&header).map_err(|e| csv_error(path, e))?;
    for (row, label) in table.rows.iter().zip(labels) {
        let label = label.to_string();
        let mut out: Vec<&str> = row
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != existing)
            .map(|(_, v)| v.as_str())
            .collect();
        out.push(&label);
        writer.write_record(&out).map_err(|e| csv_error(path, e))?;
    }
    writer.flush().map_err(|e| CliError::io(path, e))
}

/// Writes `r,theta,label` rows.
pub fn write_points(path: &Path, points: &[PolarPoint], labels: &[i64]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(create(path)?);
    writer
        .write_record(["r", "theta", "label"])
        .map_err(|e| csv_error(path, e))?;
    for (p, l) in points.iter().zip(labels) {
        writer
            .write_record([p.r().to_string(), p.theta().to_string(), l.to_string()])
            .map_err(|e| csv_error(path, e))?;
    }
    writer.flush().map_err(|e| CliError::io(path, e))
}

/// Reads a headerless `node_a,node_b,height` merge list.
pub fn read_merges(path: &Path) -> Result<Vec<(usize, usize, f64)>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let bad = |line: usize| {
        CliError::validation(format!(
            "{}: line {line}: expected 'node_a,node_b,height'",
            path.display()
        ))
    };
    let mut merges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [a, b, h] = fields[..] else {
            return Err(bad(i + 1));
        };
        let a = a.parse().map_err(|_| bad(i + 1))?;
        let b = b.parse().map_err(|_| bad(i + 1))?;
        let h = h.parse().map_err(|_| bad(i + 1))?;
        merges.push((a, b, h));
    }
    Ok(merges)
}

pub fn merge_list(d: &circlust::Dendrogram) -> String {
    d.merges()
        .iter()
        .map(|m| format!("{},{},{}\n", m.node_a, m.node_b, m.height))
        .collect()
}
