//! FASTA ingestion and the dinucleotide polar profile of a DNA sequence.
//!
//! The profile places the 16 ordered base pairs at fixed, evenly spaced
//! angles (`AA` at 0, `AC` at 2π/16, ..., `TT` at 30π/16) and gives each the
//! radius `count / (L - 1)`, where `count` is the number of overlapping
//! windows `(i, i + 1)` holding that pair. The sequence thus becomes 16
//! polar points whose tree (via [`crate::search::circular_hierarchical`]) can
//! be compared across sequences, since every tree has the same leaves.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::cluster::{Dendrogram, Linkage};
use crate::error::{Error, Result};
use crate::geometry::{PolarPoint, ReconstructionParams};
use crate::search::circular_hierarchical;

pub const BASES: [char; 4] = ['A', 'C', 'G', 'T'];

/// A named DNA sequence over `ACGT`, stored uppercase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleotideSequence {
    id: String,
    bases: String,
}

impl NucleotideSequence {
    pub fn new(id: impl Into<String>, bases: &str) -> Result<Self> {
        let bases = bases.to_ascii_uppercase();
        if let Some((pos, ch)) = bases.char_indices().find(|(_, c)| !BASES.contains(c)) {
            return Err(Error::InvalidParameter(format!(
                "invalid base '{ch}' at position {}",
                pos + 1
            )));
        }
        if bases.len() < 2 {
            return Err(Error::InvalidParameter(
                "a sequence needs at least two bases".into(),
            ));
        }
        Ok(Self {
            id: id.into(),
            bases,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn bases(&self) -> &str {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

fn fasta_err(line: usize, message: impl Into<String>) -> Error {
    Error::Fasta {
        line,
        message: message.into(),
    }
}

/// Parses FASTA records from a reader. Blank lines and `;` comment lines are
/// skipped; bases may be upper or lower case.
pub fn parse_fasta<R: BufRead>(reader: R) -> Result<Vec<NucleotideSequence>> {
    let mut records = Vec::new();
    // (id, header line, bases)
    let mut current: Option<(String, usize, String)> = None;

    let finish = |rec: (String, usize, String)| -> Result<NucleotideSequence> {
        let (id, line, bases) = rec;
        if bases.is_empty() {
            return Err(fasta_err(line, format!("record '{id}' has no bases")));
        }
        NucleotideSequence::new(id, &bases).map_err(|e| fasta_err(line, e.to_string()))
    };

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| fasta_err(lineno, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with(';') {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            if let Some(rec) = current.take() {
                records.push(finish(rec)?);
            }
            let id = header.split_whitespace().next().unwrap_or("").to_string();
            current = Some((id, lineno, String::new()));
            continue;
        }
        let Some((_, _, bases)) = current.as_mut() else {
            return Err(fasta_err(lineno, "sequence data before the first '>' header"));
        };
        for ch in line.chars().filter(|c| !c.is_whitespace()) {
            let up = ch.to_ascii_uppercase();
            if !BASES.contains(&up) {
                return Err(fasta_err(lineno, format!("invalid base '{ch}'")));
            }
            bases.push(up);
        }
    }
    if let Some(rec) = current.take() {
        records.push(finish(rec)?);
    }
    Ok(records)
}

pub fn parse_fasta_str(text: &str) -> Result<Vec<NucleotideSequence>> {
    parse_fasta(text.as_bytes())
}

/// Names of the 16 ordered pairs in lexicographic order.
pub fn dinucleotide_names() -> Vec<String> {
    BASES
        .iter()
        .flat_map(|a| BASES.iter().map(move |b| format!("{a}{b}")))
        .collect()
}

fn base_index(c: u8) -> usize {
    match c {
        b'A' => 0,
        b'C' => 1,
        b'G' => 2,
        b'T' => 3,
        _ => unreachable!("sequence bases are validated"),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DinucleotideEntry {
    pub pair: String,
    pub count: usize,
    pub polar: PolarPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DinucleotideProfile {
    pub id: String,
    pub windows: usize,
    pub entries: Vec<DinucleotideEntry>,
}

impl DinucleotideProfile {
    pub fn points(&self) -> Vec<PolarPoint> {
        self.entries.iter().map(|e| e.polar).collect()
    }

    /// Delimited table with header `pair,count,r,theta`.
    pub fn to_table(&self) -> String {
        let mut out = String::from("pair,count,r,theta\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{},{}", e.pair, e.count, e.polar.r(), e.polar.theta());
        }
        out
    }
}

pub fn dna_to_polar(seq: &NucleotideSequence) -> DinucleotideProfile {
    let bytes = seq.bases.as_bytes();
    let mut counts = [0usize; 16];
    for w in bytes.windows(2) {
        counts[4 * base_index(w[0]) + base_index(w[1])] += 1;
    }
    let windows = bytes.len() - 1;
    let entries = dinucleotide_names()
        .into_iter()
        .zip(counts)
        .enumerate()
        .map(|(k, (pair, count))| DinucleotideEntry {
            pair,
            count,
            polar: PolarPoint::new(count as f64 / windows as f64, k as f64 * TAU / 16.0)
                .expect("radius in [0, 1] and finite angle"),
        })
        .collect();
    DinucleotideProfile {
        id: seq.id.clone(),
        windows,
        entries,
    }
}

/// Circular hierarchical tree over a sequence's 16 profile points.
pub fn sequence_dendrogram(
    seq: &NucleotideSequence,
    params: &ReconstructionParams,
    linkage: Linkage,
) -> Result<Dendrogram> {
    circular_hierarchical(&dna_to_polar(seq).points(), params, linkage)
}
