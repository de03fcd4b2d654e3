//! Result tables and their CSV, JSON and DOT renderings.

use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::args::Format;
use crate::config::{Failure, Outcome};

/// Reals with 17 significant digits, which round-trip every `f64`.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// What a command produced.
#[derive(Debug, Clone, Default)]
pub struct Report {
    /// Header lines, emitted as `# ...` comments.
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra fields for the JSON rendering.
    pub summary: Map<String, Value>,
    /// Graph description, when the command has one.
    pub dot: Option<String>,
    /// Verbatim text replacing the CSV table (move sequences).
    pub text: Option<String>,
    /// Rendering used when no format is requested.
    pub default_format: Option<Format>,
    /// Exit status determined by the result itself.
    pub code: i32,
}

impl Report {
    pub fn table(columns: &[&str]) -> Report {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn comment(mut self, line: impl Into<String>) -> Report {
        self.comments.push(line.into());
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(&format!("# {c}\n"));
        }
        if let Some(text) = &self.text {
            out.push_str(text);
            return out;
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| quote(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|c| json!(c)))
                        .collect(),
                )
            })
            .collect();
        let mut doc = self.summary.clone();
        doc.insert("notes".into(), json!(self.comments));
        if !self.columns.is_empty() {
            doc.insert("rows".into(), Value::Array(rows));
        }
        if let Some(text) = &self.text {
            doc.insert("text".into(), json!(text));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> Outcome<String> {
        match format {
            Format::Csv => Ok(self.csv()),
            Format::Json => Ok(self.json()),
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| Failure::Parse("this command has no graph output".into())),
        }
    }
}

fn quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Outcome<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| Failure::Domain(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip() {
        for x in [
            0.1,
            1.0 / 3.0,
            2f64.sqrt() * 1e-300,
            6.02214076e23,
            f64::MIN_POSITIVE,
        ] {
            assert_eq!(real(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn cells_with_separators_are_quoted() {
        assert_eq!(quote("plain"), "plain");
        assert_eq!(quote("a,b"), "\"a,b\"");
        assert_eq!(quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.csv");
        write_atomic(&p, "one\n").unwrap();
        write_atomic(&p, "two\n").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two\n");
    }
}
