use std::fmt;

use serde::Serialize;

/// Failure classes mapped onto process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, unsupported range: exit 2.
    Usage(String),
    /// A verification did not hold: exit 1.
    Checkpoint(String),
}

impl CliError {
    pub fn usage(e: impl fmt::Display) -> Self {
        Self::Usage(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Checkpoint(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error: {m}"),
            Self::Checkpoint(m) => write!(f, "checkpoint failed: {m}"),
        }
    }
}

/// A command's result, renderable in every output format.
pub trait Report {
    fn json(&self) -> String;
    fn text(&self) -> String;
    /// One or more CSV tables separated by blank lines.
    fn csv(&self) -> String;
    fn passed(&self) -> bool;
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Render a header and rows as CSV.
pub fn csv_table<R, S>(header: &[&str], rows: R) -> String
where
    R: IntoIterator<Item = Vec<S>>,
    S: AsRef<str>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(AsRef::as_ref)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_with_commas() {
        let t = csv_table(&["a", "b"], [vec!["1", "x, y"]]);
        assert_eq!(t, "a,b\n1,\"x, y\"\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::usage("bad").exit_code(), 2);
        assert_eq!(CliError::Checkpoint("x".into()).exit_code(), 1);
    }
}
