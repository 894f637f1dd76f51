//! JSON descriptions of dataflow networks.
//!
//! A network file lists pipes and nodes by name:
//!
//! ```json
//! {
//!   "pipes": [
//!     { "name": "src", "capacity": 10, "seed": [1, 2, 3] },
//!     { "name": "dst", "capacity": 10 }
//!   ],
//!   "nodes": [
//!     { "name": "double", "kind": "times", "multiplier": 2,
//!       "in": ["src"], "out": ["dst"] }
//!   ]
//! }
//! ```
//!
//! `kind` is one of `times`, `merge`, `split`, `probe`; `multiplier` is
//! required for `times` nodes and rejected elsewhere. Arities are fixed
//! per kind (`times`/`probe` 1 in 1 out, `merge` 2 in 1 out, `split`
//! 1 in 2 out) and every pipe endpoint must be exclusive; violations are
//! reported with the offending node or pipe name.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use super::network::{Network, NetworkBuilder, NetworkError, PipeId};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileNetwork {
    #[serde(default)]
    pipes: Vec<FilePipe>,
    #[serde(default)]
    nodes: Vec<FileNode>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FilePipe {
    name: String,
    capacity: usize,
    #[serde(default)]
    seed: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileNode {
    name: String,
    kind: FileKind,
    #[serde(default)]
    multiplier: Option<i64>,
    #[serde(rename = "in")]
    inputs: Vec<String>,
    #[serde(rename = "out")]
    outputs: Vec<String>,
}

#[derive(Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
enum FileKind {
    Times,
    Merge,
    Split,
    Probe,
}

impl FileKind {
    fn arity(self) -> (usize, usize) {
        match self {
            FileKind::Times | FileKind::Probe => (1, 1),
            FileKind::Merge => (2, 1),
            FileKind::Split => (1, 2),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FileKind::Times => "times",
            FileKind::Merge => "merge",
            FileKind::Split => "split",
            FileKind::Probe => "probe",
        }
    }
}

#[derive(Debug)]
pub enum NetFileError {
    Io(std::io::Error),
    Json(serde_json::Error),
    UnknownPipe {
        node: String,
        pipe: String,
    },
    WrongArity {
        node: String,
        kind: &'static str,
        want_in: usize,
        want_out: usize,
        got_in: usize,
        got_out: usize,
    },
    MissingMultiplier {
        node: String,
    },
    UnexpectedMultiplier {
        node: String,
    },
    Invalid(NetworkError),
}

impl fmt::Display for NetFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetFileError::Io(e) => write!(f, "cannot read network file: {e}"),
            NetFileError::Json(e) => write!(f, "network file is not valid JSON: {e}"),
            NetFileError::UnknownPipe { node, pipe } => {
                write!(f, "node '{node}' references unknown pipe '{pipe}'")
            }
            NetFileError::WrongArity { node, kind, want_in, want_out, got_in, got_out } => write!(
                f,
                "node '{node}' of kind '{kind}' needs {want_in} in / {want_out} out pipes, got {got_in} in / {got_out} out"
            ),
            NetFileError::MissingMultiplier { node } => {
                write!(f, "times node '{node}' needs a 'multiplier'")
            }
            NetFileError::UnexpectedMultiplier { node } => {
                write!(f, "node '{node}' is not a times node and cannot have a 'multiplier'")
            }
            NetFileError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for NetFileError {}

impl From<NetworkError> for NetFileError {
    fn from(e: NetworkError) -> Self {
        NetFileError::Invalid(e)
    }
}

/// Parses a JSON network description and validates the wiring.
pub fn parse_network(text: &str) -> Result<Network, NetFileError> {
    let file: FileNetwork = serde_json::from_str(text).map_err(NetFileError::Json)?;
    let mut builder = NetworkBuilder::new();
    let mut ids: Vec<(String, PipeId)> = Vec::with_capacity(file.pipes.len());
    for p in &file.pipes {
        let id = builder.seeded_pipe(&p.name, p.capacity, p.seed.iter().copied());
        ids.push((p.name.clone(), id));
    }
    let resolve = |node: &str, pipe: &str| -> Result<PipeId, NetFileError> {
        ids.iter()
            .find(|(name, _)| name == pipe)
            .map(|&(_, id)| id)
            .ok_or_else(|| NetFileError::UnknownPipe {
                node: node.to_owned(),
                pipe: pipe.to_owned(),
            })
    };
    for n in &file.nodes {
        let (want_in, want_out) = n.kind.arity();
        if n.inputs.len() != want_in || n.outputs.len() != want_out {
            return Err(NetFileError::WrongArity {
                node: n.name.clone(),
                kind: n.kind.name(),
                want_in,
                want_out,
                got_in: n.inputs.len(),
                got_out: n.outputs.len(),
            });
        }
        if n.kind == FileKind::Times && n.multiplier.is_none() {
            return Err(NetFileError::MissingMultiplier {
                node: n.name.clone(),
            });
        }
        if n.kind != FileKind::Times && n.multiplier.is_some() {
            return Err(NetFileError::UnexpectedMultiplier {
                node: n.name.clone(),
            });
        }
        let input = |k: usize| resolve(&n.name, &n.inputs[k]);
        let output = |k: usize| resolve(&n.name, &n.outputs[k]);
        match n.kind {
            FileKind::Times => {
                let (i, o) = (input(0)?, output(0)?);
                builder.times(&n.name, n.multiplier.unwrap(), i, o);
            }
            FileKind::Merge => {
                let (l, r, o) = (input(0)?, input(1)?, output(0)?);
                builder.merge(&n.name, l, r, o);
            }
            FileKind::Split => {
                let (i, a, bz) = (input(0)?, output(0)?, output(1)?);
                builder.split(&n.name, i, a, bz);
            }
            FileKind::Probe => {
                let (i, o) = (input(0)?, output(0)?);
                builder.probe(&n.name, i, o);
            }
        }
    }
    Ok(builder.build()?)
}

/// Reads and parses a network description file.
pub fn load_network(path: &Path) -> Result<Network, NetFileError> {
    let text = fs::read_to_string(path).map_err(NetFileError::Io)?;
    parse_network(&text)
}
