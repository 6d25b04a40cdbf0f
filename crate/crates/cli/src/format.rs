//! Output formats and the small text helpers shared by every command.

use std::fmt;
use std::str::FromStr;

use bellbasis::qcore::{bitstring, StateVector};
use serde::{Deserialize, Serialize};

/// Amplitudes below this are not printed as terms.
const TERM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Markdown,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
            Self::Markdown => "markdown",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(format!("unknown format {other:?} (json, csv, markdown)")),
        }
    }
}

/// Six significant digits with trailing zeros trimmed: `1`, `0.866025`,
/// `0.0656589`. Magnitudes below `1e-12` print as `0`.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < 1e-12 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

pub fn sig6_or_na(x: Option<f64>) -> String {
    x.map_or_else(|| "NA".into(), sig6)
}

/// Pipes inside a markdown cell.
pub fn escape_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn ket(index: usize, n: usize) -> String {
    format!("|{}⟩", bitstring(index, n))
}

/// Signed term list. Unnormalized output drops the common magnitude and
/// prints `|a⟩ + |b⟩ - |c⟩`; normalized output prefixes each ket with its
/// amplitude.
pub fn term_string(state: &StateVector, normalized: bool) -> String {
    let n = state.n_qubits();
    let mut out = String::new();
    for (i, a) in state.amplitudes().iter().enumerate() {
        if a.norm() <= TERM_TOL {
            continue;
        }
        let real = a.im.abs() <= TERM_TOL;
        let negative = real && a.re < 0.0;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if normalized {
            if real {
                out.push_str(&sig6(a.re.abs()));
            } else {
                out.push_str(&format!("({}{:+}i)", sig6(a.re), sig6(a.im)));
            }
            out.push(' ');
        } else if !real {
            out.push_str(&format!("({}{:+}i)", sig6(a.re), sig6(a.im)));
        }
        out.push_str(&ket(i, n));
    }
    out
}

/// A markdown table from a header and rows; cells are escaped.
pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
    let mut out = line(header.iter().map(|h| escape_cell(h)).collect());
    out.push_str(&line(header.iter().map(|_| "---".to_string()).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(|c| escape_cell(c)).collect()));
    }
    out
}

pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(0.8660254037844386), "0.866025");
        assert_eq!(sig6(0.065658912), "0.0656589");
        assert_eq!(sig6(1.4), "1.4");
        assert_eq!(sig6(1.2473712), "1.24737");
        assert_eq!(sig6(-0.25), "-0.25");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(-3e-17), "0");
        assert_eq!(sig6_or_na(None), "NA");
    }

    #[test]
    fn unnormalized_terms() {
        let s = StateVector::from_real(2, &[0.5, -0.5, 0.5, -0.5]).unwrap();
        assert_eq!(term_string(&s, false), "|00⟩ - |01⟩ + |10⟩ - |11⟩");
        assert_eq!(term_string(&s, true), "0.5 |00⟩ - 0.5 |01⟩ + 0.5 |10⟩ - 0.5 |11⟩");
        let neg = StateVector::from_real(1, &[-1.0, 0.0]).unwrap();
        assert_eq!(term_string(&neg, false), "-|0⟩");
    }

    #[test]
    fn markdown_escapes_pipes() {
        let t = markdown_table(&["a"], &[vec!["|0⟩".into()]]);
        assert_eq!(t, "| a |\n| --- |\n| \\|0⟩ |\n");
    }
}
