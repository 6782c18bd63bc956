//! Rendering of command results in the three supported output formats.
//!
//! Every verb produces a [`Doc`]: a JSON payload plus a tabular projection
//! (column headers, string rows, and optional free-form preamble lines used
//! only by the aligned-table format). Rendering is deterministic: JSON
//! objects serialise with sorted keys, and rows are emitted in the order the
//! command built them.

use serde_json::Value;

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A rendered command result.
#[derive(Debug, Clone)]
pub struct Doc {
    /// Full structured payload, emitted verbatim for `--format json`.
    pub json: Value,
    /// Free-form lines printed before the table in `table` format.
    pub preamble: Vec<String>,
    /// Column headers for the tabular projection (may be empty).
    pub columns: Vec<&'static str>,
    /// Table rows; each row has one cell per column.
    pub rows: Vec<Vec<String>>,
}

impl Doc {
    /// A document with only a JSON payload and a key/value tabular view.
    pub fn new(json: Value) -> Self {
        Doc {
            json,
            preamble: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Adds a preamble line (table format only).
    pub fn line(&mut self, text: impl Into<String>) {
        self.preamble.push(text.into());
    }

    /// Sets the tabular projection.
    pub fn table(&mut self, columns: Vec<&'static str>, rows: Vec<Vec<String>>) {
        self.columns = columns;
        self.rows = rows;
    }

    /// Renders the document in the requested format, with trailing newline.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .expect("JSON payloads are always serialisable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if self.columns.is_empty() {
            // No tabular projection: fall back to key/value pairs drawn from
            // the top level of the JSON payload so CSV output is never empty.
            out.push_str("key,value\n");
            if let Value::Object(map) = &self.json {
                for (k, v) in map {
                    out.push_str(&csv_cell(k));
                    out.push(',');
                    out.push_str(&csv_cell(&scalar_text(v)));
                    out.push('\n');
                }
            }
            return out;
        }
        let header: Vec<String> = self.columns.iter().map(|c| csv_cell(c)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for line in &self.preamble {
            out.push_str(line);
            out.push('\n');
        }
        if self.columns.is_empty() {
            if self.preamble.is_empty() {
                // Degenerate case: show the JSON payload rather than nothing.
                out = serde_json::to_string_pretty(&self.json)
                    .expect("JSON payloads are always serialisable");
                out.push('\n');
            }
            return out;
        }
        if !self.preamble.is_empty() {
            out.push('\n');
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i < widths.len() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
        }
        let mut emit = |cells: Vec<&str>| {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                // Pad every column but the last to its width.
                if i + 1 < widths.len() {
                    for _ in cell.len()..widths[i] {
                        line.push(' ');
                    }
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        emit(self.columns.to_vec());
        let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        emit(dashes.iter().map(String::as_str).collect());
        let rows = self.rows.clone();
        for row in &rows {
            emit(row.iter().map(String::as_str).collect());
        }
        out
    }
}

/// Quotes a CSV cell when it contains a delimiter, quote, or newline.
fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Compact one-line text for a JSON value in key/value CSV fallback.
fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
