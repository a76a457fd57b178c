//! Parsing of spectra files, descriptors and small numeric flag values.

use std::path::Path;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use thiserror::Error;

use crate::zeros::{Extent, ZeroSequence, ZeroSequenceError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{origin}, line {line}: cannot parse {content:?} as a real number")]
    BadNumber {
        origin: String,
        line: usize,
        content: String,
    },
    #[error("{origin}, line {line}: unknown directive {content:?}")]
    BadDirective {
        origin: String,
        line: usize,
        content: String,
    },
    #[error("{origin}: invalid JSON: {source}")]
    Json {
        origin: String,
        source: serde_json::Error,
    },
    #[error("{origin}: {source}")]
    Sequence {
        origin: String,
        source: ZeroSequenceError,
    },
    #[error("cannot parse {0:?} as a complex number (use `re,im`, `re` or `i`)")]
    BadComplex(String),
    #[error("cannot parse {0:?} as an interval `a,b` with a < b")]
    BadInterval(String),
}

/// How the extent of a spectrum file is decided when the file itself does not
/// say.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtentChoice {
    Finite,
    Truncated,
    /// Files with fewer than `n_min` points are complete spectra, longer ones
    /// are windows of infinite spectra.
    Auto,
}

/// A parsed spectrum together with where its extent came from.
#[derive(Clone, Debug)]
pub struct SpectrumInput {
    pub sequence: ZeroSequence,
    pub extent_source: &'static str,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonSpectrum {
    x: Vec<f64>,
    extent: Option<Extent>,
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a spectrum given as JSON `{"x": [...], "extent": ...}` or as CSV
/// with one value per line. CSV lines starting with `#` are comments, except
/// the directives `# finite` and `# truncated`.
pub fn parse_spectrum(
    text: &str,
    origin: &str,
    choice: ExtentChoice,
    n_min: usize,
) -> Result<SpectrumInput, InputError> {
    let (values, declared) = if text.trim_start().starts_with('{') {
        let raw: JsonSpectrum = serde_json::from_str(text).map_err(|source| InputError::Json {
            origin: origin.to_string(),
            source,
        })?;
        (raw.x, raw.extent)
    } else {
        parse_csv(text, origin)?
    };
    let (extent, extent_source) = match (declared, choice) {
        (Some(e), _) => (e, "file"),
        (None, ExtentChoice::Finite) => (Extent::Finite, "flag"),
        (None, ExtentChoice::Truncated) => (Extent::Truncated, "flag"),
        (None, ExtentChoice::Auto) if values.len() < n_min => (Extent::Finite, "auto"),
        (None, ExtentChoice::Auto) => (Extent::Truncated, "auto"),
    };
    let sequence = ZeroSequence::from_unsorted(values, extent).map_err(|source| InputError::Sequence {
        origin: origin.to_string(),
        source,
    })?;
    Ok(SpectrumInput {
        sequence,
        extent_source,
    })
}

fn parse_csv(text: &str, origin: &str) -> Result<(Vec<f64>, Option<Extent>), InputError> {
    let mut values = Vec::new();
    let mut extent = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            match comment {
                "finite" => extent = Some(Extent::Finite),
                "truncated" => extent = Some(Extent::Truncated),
                c if c.starts_with("extent") => {
                    return Err(InputError::BadDirective {
                        origin: origin.to_string(),
                        line: i + 1,
                        content: raw.to_string(),
                    })
                }
                _ => {}
            }
            continue;
        }
        // tolerate a trailing separator left by spreadsheet exports
        let field = line.strip_suffix(',').unwrap_or(line).trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            _ => {
                return Err(InputError::BadNumber {
                    origin: origin.to_string(),
                    line: i + 1,
                    content: raw.to_string(),
                })
            }
        }
    }
    Ok((values, extent))
}

/// A JSON descriptor given inline or as a path to a file.
pub fn load_descriptor<T: DeserializeOwned>(arg: &str) -> Result<T, InputError> {
    let (text, origin) = if arg.trim_start().starts_with('{') {
        (arg.to_string(), "inline descriptor".to_string())
    } else {
        (read_text(Path::new(arg))?, arg.to_string())
    };
    serde_json::from_str(&text).map_err(|source| InputError::Json { origin, source })
}

/// `re,im`, a bare real, `i` or `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64, InputError> {
    let bad = || InputError::BadComplex(s.to_string());
    let t = s.trim();
    match t {
        "i" | "+i" => return Ok(Complex64::new(0.0, 1.0)),
        "-i" => return Ok(Complex64::new(0.0, -1.0)),
        _ => {}
    }
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(bad()),
    }
}

pub fn parse_interval(s: &str) -> Result<(f64, f64), InputError> {
    let bad = || InputError::BadInterval(s.to_string());
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [a, b] if a.is_finite() && b.is_finite() && a < b => Ok((*a, *b)),
        _ => Err(bad()),
    }
}

/// A boundary parameter: a real number or `inf`.
pub fn parse_tau(s: &str) -> Result<Option<f64>, String> {
    match s.trim() {
        "inf" | "infinity" | "∞" => Ok(None),
        t => t
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Some)
            .ok_or_else(|| format!("cannot parse {s:?} as a real number or `inf`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_with_comments_and_directive() {
        let s = parse_spectrum("# spectrum\n1.5\n\n-0.5\n# finite\n", "t", ExtentChoice::Truncated, 16).unwrap();
        assert_eq!(s.sequence.values(), &[-0.5, 1.5]);
        assert_eq!(s.sequence.extent(), Extent::Finite);
        assert_eq!(s.extent_source, "file");
    }

    #[test]
    fn auto_extent() {
        let s = parse_spectrum("0\n", "t", ExtentChoice::Auto, 16).unwrap();
        assert_eq!(s.sequence.extent(), Extent::Finite);
        let long: String = (1..=20).map(|k| format!("{k}\n")).collect();
        let s = parse_spectrum(&long, "t", ExtentChoice::Auto, 16).unwrap();
        assert_eq!(s.sequence.extent(), Extent::Truncated);
    }

    #[test]
    fn json_spectrum() {
        let s = parse_spectrum(r#"{"x": [1, -1], "extent": "finite"}"#, "t", ExtentChoice::Truncated, 16).unwrap();
        assert_eq!(s.sequence.values(), &[-1.0, 1.0]);
        assert!(parse_spectrum(r#"{"x": [1, 1]}"#, "t", ExtentChoice::Auto, 16).is_err());
    }

    #[test]
    fn malformed_csv() {
        let e = parse_spectrum("1.0\nabc\n", "f.csv", ExtentChoice::Auto, 16).unwrap_err();
        assert!(matches!(e, InputError::BadNumber { line: 2, .. }));
        assert!(parse_spectrum("1.0\nnan\n", "f.csv", ExtentChoice::Auto, 16).is_err());
    }

    #[test]
    fn small_values() {
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("0.5, -2").unwrap(), Complex64::new(0.5, -2.0));
        assert_eq!(parse_complex("3").unwrap(), Complex64::new(3.0, 0.0));
        assert!(parse_complex("1,2,3").is_err());
        assert_eq!(parse_interval("-1,2").unwrap(), (-1.0, 2.0));
        assert!(parse_interval("2,1").is_err());
        assert_eq!(parse_tau("inf").unwrap(), None);
        assert_eq!(parse_tau("0.5").unwrap(), Some(0.5));
    }
}
