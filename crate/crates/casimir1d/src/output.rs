//! Machine-readable curve output.
//!
//! Both writers are byte-deterministic: floats are printed with 17
//! significant digits in lowercase scientific notation, lines end with LF,
//! and the meta/column order is the insertion order.

use crate::error::{Error, Result};

/// One named series of a curve set.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
}

impl Column {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Self {
        Column {
            name: name.into(),
            values,
        }
    }
}

/// A header of key=value pairs plus equally long named series; the first
/// column is the abscissa and must be strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSet {
    meta: Vec<(String, String)>,
    columns: Vec<Column>,
}

impl CurveSet {
    pub fn new(meta: Vec<(String, String)>, columns: Vec<Column>) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::InvalidConfig("curve set needs columns".into()));
        };
        let len = first.values.len();
        if len == 0 {
            return Err(Error::InvalidConfig("curve set needs rows".into()));
        }
        for col in &columns {
            if col.values.len() != len {
                return Err(Error::InvalidConfig(format!(
                    "column {} has {} rows, expected {len}",
                    col.name,
                    col.values.len()
                )));
            }
            if !col.values.iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "column {} contains non-finite values",
                    col.name
                )));
            }
        }
        for pair in first.values.windows(2) {
            if !(pair[1] > pair[0]) {
                return Err(Error::InvalidConfig(
                    "abscissa must be strictly increasing".into(),
                ));
            }
        }
        Ok(CurveSet { meta, columns })
    }

    pub fn meta(&self) -> &[(String, String)] {
        &self.meta
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn rows(&self) -> usize {
        self.columns[0].values.len()
    }

    /// `# key=value ...` header line, column-name line, then one comma-
    /// separated row per abscissa point. No trailing delimiter.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push('#');
        for (k, v) in &self.meta {
            out.push(' ');
            out.push_str(k);
            out.push('=');
            out.push_str(v);
        }
        out.push('\n');
        let names: Vec<&str> = self.columns.iter().map(|c| c.name.as_str()).collect();
        out.push_str(&names.join(","));
        out.push('\n');
        for row in 0..self.rows() {
            let mut first = true;
            for col in &self.columns {
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&format_float(col.values[row]));
            }
            out.push('\n');
        }
        out
    }

    /// JSON object with a `meta` string map and a `columns` array of
    /// {name, values} objects; see docs/curveset.schema.json.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n  \"meta\": {\n");
        for (i, (k, v)) in self.meta.iter().enumerate() {
            out.push_str("    ");
            out.push_str(&json_string(k));
            out.push_str(": ");
            out.push_str(&json_string(v));
            out.push_str(if i + 1 < self.meta.len() { ",\n" } else { "\n" });
        }
        out.push_str("  },\n  \"columns\": [\n");
        for (i, col) in self.columns.iter().enumerate() {
            out.push_str("    {\"name\": ");
            out.push_str(&json_string(&col.name));
            out.push_str(", \"values\": [");
            for (j, v) in col.values.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&format_float(*v));
            }
            out.push_str("]}");
            out.push_str(if i + 1 < self.columns.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// Output encodings understood by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn render(self, curves: &CurveSet) -> String {
        match self {
            OutputFormat::Csv => curves.to_csv(),
            OutputFormat::Json => curves.to_json(),
        }
    }
}

/// 17 significant digits, lowercase scientific, '.' decimal separator.
/// Negative zero is normalized so equal values always print identically.
pub fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
