//! Argument-to-data resolution shared by the subcommands.
//!
//! A GRAPH argument is one of
//!   - a literal graph6 record (`Bw`),
//!   - `@PATH`, the first non-empty line of the named file,
//!   - `-`, the first non-empty line of standard input.
//!
//! The bare string `@` is the graph6 record of the one-vertex graph, never a
//! file reference: only `@` followed by at least one character names a path.

use std::fs;
use std::io::Read;

use cospec::graph::{parse_graph6, Graph};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin} holds no graph6 record")]
    EmptyInput { origin: String },
    #[error("invalid graph6 record from {origin}")]
    Graph6 {
        origin: String,
        #[source]
        source: cospec::graph::Graph6Error,
    },
}

fn read_to_string(path: &str) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io { path: path.to_string(), source })
}

fn read_stdin() -> Result<String, InputError> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|source| InputError::Io { path: "<stdin>".to_string(), source })?;
    Ok(text)
}

/// Resolves a GRAPH argument to `(record, parsed graph)`. The record is
/// returned so reports can echo exactly what was analyzed.
pub fn resolve_graph(arg: &str) -> Result<(String, Graph), InputError> {
    let (origin, text) = match arg {
        "-" => ("standard input".to_string(), read_stdin()?),
        a if a.len() > 1 && a.starts_with('@') => {
            let path = &a[1..];
            (format!("file {path}"), read_to_string(path)?)
        }
        a => ("argument".to_string(), a.to_string()),
    };
    let record = text
        .lines()
        .map(str::trim_end)
        .find(|l| !l.is_empty())
        .ok_or_else(|| InputError::EmptyInput { origin: origin.clone() })?;
    let graph =
        parse_graph6(record).map_err(|source| InputError::Graph6 { origin, source })?;
    Ok((record.to_string(), graph))
}

/// Resolves a formula argument: literal text, or `@PATH` for file contents.
pub fn resolve_text(arg: &str) -> Result<String, InputError> {
    if let Some(path) = arg.strip_prefix('@') {
        if !path.is_empty() {
            return Ok(read_to_string(path)?.trim_end().to_string());
        }
    }
    Ok(arg.to_string())
}

/// Reads a graph6 corpus file: one record per line, blank lines skipped.
/// Records are kept as strings so callers can stream-parse them on demand.
pub fn read_corpus_records(path: &str) -> Result<Vec<String>, InputError> {
    let text = read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_at_sign_is_the_single_vertex_graph() {
        let (record, g) = resolve_graph("@").unwrap();
        assert_eq!(record, "@");
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn at_prefix_reads_the_first_record_of_a_file() {
        let dir = std::env::temp_dir().join("cospec-input-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("two.g6");
        std::fs::write(&path, "\nBw\nEhEG\n").unwrap();
        let arg = format!("@{}", path.display());
        let (record, g) = resolve_graph(&arg).unwrap();
        assert_eq!(record, "Bw");
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn missing_files_report_the_path() {
        let err = resolve_graph("@/nonexistent/x.g6").unwrap_err();
        assert!(err.to_string().contains("/nonexistent/x.g6"));
    }

    #[test]
    fn literal_text_passes_through_and_files_are_trimmed() {
        assert_eq!(resolve_text("E(x,y)").unwrap(), "E(x,y)");
        let dir = std::env::temp_dir().join("cospec-input-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("formula.txt");
        std::fs::write(&path, "E(x,y)\n").unwrap();
        assert_eq!(resolve_text(&format!("@{}", path.display())).unwrap(), "E(x,y)");
    }

    #[test]
    fn corpus_reader_skips_blank_lines() {
        let dir = std::env::temp_dir().join("cospec-input-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("corpus.g6");
        std::fs::write(&path, "Bw\n\n@\n\n").unwrap();
        let records = read_corpus_records(path.to_str().unwrap()).unwrap();
        assert_eq!(records, vec!["Bw".to_string(), "@".to_string()]);
    }
}
