//! Band files.
//!
//! ```text
//! # nucleus: 162Dy
//! # note: ground band, adopted levels
//! 2   80.66
//! 4   265.66
//! 6   548.52
//! ```
//!
//! The `# nucleus:` header is required; `# note:` lines are kept as
//! provenance; any other `#` line or blank line is ignored. Data lines hold a
//! decimal spin (integer or `.5`) and a level energy in keV.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use qrotor_core::{BandData, Level, Spin};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct BandFile {
    pub path: Option<PathBuf>,
    pub band: BandData,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("band file is not valid UTF-8")]
    NotUtf8,
    #[error("missing `# nucleus: <name>` header")]
    MissingHeader,
    #[error("second `# nucleus:` header at line {line}")]
    DuplicateHeader { line: usize },
    #[error("empty nucleus name at line {line}")]
    EmptyName { line: usize },
    #[error("expected `<spin> <energy_keV>` at line {line}")]
    MalformedLine { line: usize },
    #[error("invalid spin `{text}` at line {line}")]
    InvalidSpin { line: usize, text: String },
    #[error("non-numeric energy `{text}` at line {line}")]
    NonNumericEnergy { line: usize, text: String },
    #[error("non-monotone spin at line {line}")]
    NonMonotoneSpin { line: usize },
    #[error("duplicate spin at line {line}")]
    DuplicateSpin { line: usize },
    #[error("inconsistent spin step at line {line}: expected {expected}, found {found}")]
    InconsistentStep {
        line: usize,
        expected: Spin,
        found: Spin,
    },
    #[error("energy does not increase with spin at line {line}")]
    NonIncreasingEnergy { line: usize },
    #[error("negative band-head energy at line {line}")]
    NegativeBandHead { line: usize },
    #[error("band has {count} levels; at least 3 are required")]
    TooFewLevels { count: usize },
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
}

/// Parses and validates a band file.
pub fn parse_band(bytes: &[u8]) -> Result<BandData, ParseError> {
    parse_band_file(bytes).map(|f| f.band)
}

pub fn parse_band_file(bytes: &[u8]) -> Result<BandFile, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotUtf8)?;
    let mut name: Option<String> = None;
    let mut notes = Vec::new();
    let mut levels = Vec::new();
    let mut lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(value) = comment.strip_prefix("nucleus:") {
                if name.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let value = value.trim();
                if value.is_empty() {
                    return Err(ParseError::EmptyName { line });
                }
                name = Some(value.to_owned());
            } else if let Some(value) = comment.strip_prefix("note:") {
                notes.push(value.trim().to_owned());
            }
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(spin), Some(energy), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(ParseError::MalformedLine { line });
        };
        let spin: Spin = spin.parse().map_err(|_| ParseError::InvalidSpin {
            line,
            text: spin.to_owned(),
        })?;
        let energy_kev = energy
            .parse::<f64>()
            .ok()
            .filter(|e| e.is_finite())
            .ok_or_else(|| ParseError::NonNumericEnergy {
                line,
                text: energy.to_owned(),
            })?;
        levels.push(Level::new(spin, energy_kev));
        lines.push(line);
    }

    let name = name.ok_or(ParseError::MissingHeader)?;
    let band = BandData::new(name, levels).map_err(|e| locate(e, &lines))?;
    Ok(BandFile {
        path: None,
        band,
        notes,
    })
}

fn locate(err: qrotor_core::Error, lines: &[usize]) -> ParseError {
    use qrotor_core::Error as E;
    let at = |index: usize| lines[index];
    match err {
        E::NonMonotoneSpin { index } => ParseError::NonMonotoneSpin { line: at(index) },
        E::DuplicateSpin { index } => ParseError::DuplicateSpin { line: at(index) },
        E::InconsistentStep {
            index,
            expected,
            found,
        } => ParseError::InconsistentStep {
            line: at(index),
            expected,
            found,
        },
        E::NonIncreasingEnergy { index } => ParseError::NonIncreasingEnergy { line: at(index) },
        E::NegativeBandHead(_) => ParseError::NegativeBandHead { line: at(0) },
        E::NonFiniteEnergy { index } => ParseError::NonNumericEnergy {
            line: at(index),
            text: String::from("non-finite"),
        },
        E::TooFewLevels(count) => ParseError::TooFewLevels { count },
        other => unreachable!("band validation produced {other:?}"),
    }
}

pub fn read_band_file(path: &Path) -> Result<BandFile, IngestError> {
    let bytes = std::fs::read(path).map_err(|source| IngestError::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut file = parse_band_file(&bytes).map_err(|source| IngestError::Parse {
        path: path.to_owned(),
        source,
    })?;
    file.path = Some(path.to_owned());
    Ok(file)
}

/// Canonical text of a band file. Parsing the output gives back the same
/// band and notes.
pub fn write_band_file(file: &BandFile) -> String {
    let mut out = String::new();
    writeln!(out, "# nucleus: {}", file.band.name()).unwrap();
    for note in &file.notes {
        writeln!(out, "# note: {note}").unwrap();
    }
    for level in file.band.levels() {
        writeln!(out, "{} {}", level.spin, level.energy_kev).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_file() {
        let band = parse_band(b"# nucleus: X\n2 80\n4 260\n6 540\n").unwrap();
        assert_eq!(band.name(), "X");
        assert_eq!(band.step(), Spin::integer(2));
        assert_eq!(band.len(), 3);
    }

    #[test]
    fn half_integer_spins() {
        let band = parse_band(b"# nucleus: 130La\n7.5 0\n9.5 300\n11.5 700\n").unwrap();
        let twice: Vec<u32> = band.levels().iter().map(|l| l.spin.twice()).collect();
        assert_eq!(twice, [15, 19, 23]);
        assert_eq!(band.step(), Spin::integer(2));
    }

    #[test]
    fn comments_notes_and_blank_lines() {
        let text = "# a comment\n\n#nucleus:  Dy162 \n# note: first\n# note:second\n2 80 \n\n  4\t260\n6 540\n";
        let file = parse_band_file(text.as_bytes()).unwrap();
        assert_eq!(file.band.name(), "Dy162");
        assert_eq!(file.notes, ["first", "second"]);
    }

    #[test]
    fn line_numbered_errors() {
        let cases: &[(&str, ParseError)] = &[
            (
                "# nucleus: X\n2 80\n4 260\n8 540\n",
                ParseError::InconsistentStep {
                    line: 4,
                    expected: Spin::integer(2),
                    found: Spin::integer(4),
                },
            ),
            (
                "# nucleus: X\n2 80\n6 260\n4 540\n",
                ParseError::NonMonotoneSpin { line: 4 },
            ),
            (
                "# nucleus: X\n2 80\n\n2 260\n4 540\n",
                ParseError::DuplicateSpin { line: 4 },
            ),
            (
                "# nucleus: X\n2 80\n4 abc\n6 540\n",
                ParseError::NonNumericEnergy {
                    line: 3,
                    text: "abc".into(),
                },
            ),
            (
                "# nucleus: X\n2 80\n4 260\n",
                ParseError::TooFewLevels { count: 2 },
            ),
            ("2 80\n4 260\n6 540\n", ParseError::MissingHeader),
            (
                "# nucleus: X\n2 80 1\n",
                ParseError::MalformedLine { line: 2 },
            ),
            (
                "# nucleus: X\n2.25 80\n",
                ParseError::InvalidSpin {
                    line: 2,
                    text: "2.25".into(),
                },
            ),
            (
                "# nucleus: X\n2 80\n4 70\n6 540\n",
                ParseError::NonIncreasingEnergy { line: 3 },
            ),
            (
                "# nucleus: X\n2 -5\n4 70\n6 540\n",
                ParseError::NegativeBandHead { line: 2 },
            ),
            (
                "# nucleus: X\n# nucleus: Y\n",
                ParseError::DuplicateHeader { line: 2 },
            ),
            (
                "# nucleus: X\n2 inf\n",
                ParseError::NonNumericEnergy {
                    line: 2,
                    text: "inf".into(),
                },
            ),
        ];
        for (text, expected) in cases {
            assert_eq!(
                &parse_band(text.as_bytes()).unwrap_err(),
                expected,
                "{text:?}"
            );
        }
    }

    #[test]
    fn step_error_message_names_line() {
        let err = parse_band(b"# nucleus: X\n2 80\n4 260\n8 540\n").unwrap_err();
        assert!(err
            .to_string()
            .starts_with("inconsistent spin step at line 4"));
    }

    #[test]
    fn rejects_invalid_utf8() {
        assert_eq!(
            parse_band(b"# nucleus: \xff\n").unwrap_err(),
            ParseError::NotUtf8
        );
    }

    #[test]
    fn canonical_form() {
        let text = "#nucleus:Yb174\n# junk\n 2  76.47\n4 253.12\n6 526.0\n";
        let canon = write_band_file(&parse_band_file(text.as_bytes()).unwrap());
        assert_eq!(canon, "# nucleus: Yb174\n2 76.47\n4 253.12\n6 526\n");
        assert_eq!(
            write_band_file(&parse_band_file(canon.as_bytes()).unwrap()),
            canon
        );
    }

    #[test]
    fn read_missing_file() {
        let err = read_band_file(Path::new("/nonexistent/missing.band")).unwrap_err();
        assert!(matches!(err, IngestError::Io { .. }));
        assert!(err.to_string().contains("missing.band"));
    }

    proptest! {
        #[test]
        fn round_trip(
            twice_lo in 0u32..40,
            step in 1u32..5,
            gaps in proptest::collection::vec(0.001f64..5000.0, 2..20),
            head in 0.0f64..3000.0,
            notes in proptest::collection::vec("[a-zA-Z0-9 ,.()]{0,30}", 0..3),
        ) {
            let mut e = head;
            let levels = std::iter::once(head)
                .chain(gaps.iter().map(|g| { e += g; e }))
                .enumerate()
                .map(|(i, en)| Level::new(Spin::from_twice(twice_lo + i as u32 * step), en))
                .collect();
            let band = BandData::new("Nd136-1", levels).unwrap();
            let notes: Vec<String> = notes.iter().map(|n| n.trim().to_owned()).collect();
            let file = BandFile { path: None, band, notes };
            let text = write_band_file(&file);
            let parsed = parse_band_file(text.as_bytes()).unwrap();
            prop_assert_eq!(&parsed, &file);
            prop_assert_eq!(write_band_file(&parsed), text);
        }
    }
}
