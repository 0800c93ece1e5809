//! JSON coloring and sequence files. Vertex indices are 0-based.
//!
//! Serialization is compact JSON plus a trailing newline, so a file written by
//! this module reads back and re-serializes to the same bytes.

use std::fs;
use std::path::Path;

use recolor_core::{Coloring, RecoloringSequence, Step};
use serde::{Deserialize, Serialize};

use crate::dimacs::{self, ParsedGraph};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub k: usize,
    pub colors: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepEntry {
    pub v: usize,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub steps: Vec<StepEntry>,
}

impl From<&Coloring> for ColoringFile {
    fn from(c: &Coloring) -> Self {
        ColoringFile {
            k: c.k(),
            colors: c.colors().to_vec(),
        }
    }
}

impl TryFrom<ColoringFile> for Coloring {
    type Error = recolor_core::Error;

    fn try_from(f: ColoringFile) -> Result<Self, Self::Error> {
        Coloring::new(f.k, f.colors)
    }
}

impl From<&RecoloringSequence> for SequenceFile {
    fn from(s: &RecoloringSequence) -> Self {
        SequenceFile {
            steps: s
                .iter()
                .map(|st| StepEntry {
                    v: st.vertex,
                    color: st.color,
                })
                .collect(),
        }
    }
}

impl From<SequenceFile> for RecoloringSequence {
    fn from(f: SequenceFile) -> Self {
        f.steps.into_iter().map(|e| Step::new(e.v, e.color)).collect()
    }
}

pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("file types serialize");
    s.push('\n');
    s
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn parse_sequence(text: &str) -> Result<SequenceFile, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<ParsedGraph, CliError> {
    let text = read_text(path)?;
    dimacs::parse_graph(&text).map_err(|e| match e {
        CliError::Parse { line, msg, .. } => CliError::Parse {
            path: Some(path.to_owned()),
            line,
            msg,
        },
        other => other,
    })
}

pub fn read_coloring(path: &Path) -> Result<Coloring, CliError> {
    let file = parse_coloring(&read_text(path)?).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })?;
    Ok(Coloring::try_from(file)?)
}

pub fn read_sequence(path: &Path) -> Result<RecoloringSequence, CliError> {
    let file = parse_sequence(&read_text(path)?).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })?;
    Ok(file.into())
}
