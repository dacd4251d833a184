use std::fmt;
use std::io::Read;
use std::path::Path;

use tournament_core::format::parse_trn;
use tournament_core::{Error, Tournament};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Reads a TRN file; parse errors name the file and line.
pub fn load(path: &Path) -> Result<Tournament, CliError> {
    parse_trn(&read_text(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => CliError::Usage(format!("{}:{line}: {msg}", path.display())),
        other => other.into(),
    })
}

pub fn read_labels(path: &Path) -> Result<Vec<String>, CliError> {
    Ok(read_text(path)?.lines().map(|l| l.trim_end_matches('\r').to_string()).collect())
}

/// `1,2,3` as numbers.
pub fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| CliError::Usage(format!("not a number: {p:?}"))))
        .collect()
}

/// `0,1;2,3` as a list of vertex sets over `universe`.
pub fn parse_sets(s: &str, universe: usize) -> Result<Vec<tournament_core::VertexSet>, CliError> {
    s.split(';')
        .map(|part| {
            let members = parse_list(part)?;
            if let Some(&v) = members.iter().find(|&&v| v >= universe) {
                return Err(CliError::Core(Error::VertexOutOfRange { vertex: v, n: universe }));
            }
            Ok(tournament_core::VertexSet::from_indices(universe, members))
        })
        .collect()
}
