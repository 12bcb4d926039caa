//! Palette spec documents:
//!
//! ```text
//! # comment
//! method linear
//! point 0 0 0 0
//! point 255 255 255 255
//! ```

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::numbered_lines;
use crate::color::Rgb8;
use crate::interp::{ControlPoint, Method, PaletteSpec, SpecError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecFileErrorKind {
    MissingMethod,
    DuplicateMethod,
    UnknownMethod(String),
    UnknownDirective(String),
    WrongArity { expected: usize, got: usize },
    NotAnInteger(String),
    IndexOutOfRange(i64),
    ChannelOutOfRange(i64),
    NotAscending { index: u8, previous: u8 },
    Invalid(SpecError),
}

impl fmt::Display for SpecFileErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SpecFileErrorKind::*;
        match self {
            MissingMethod => f.write_str("missing 'method linear' or 'method lagrange' line"),
            DuplicateMethod => f.write_str("method given more than once"),
            UnknownMethod(m) => write!(f, "unknown method '{m}'"),
            UnknownDirective(d) => write!(f, "unknown directive '{d}'"),
            WrongArity { expected, got } => {
                write!(f, "expected {expected} values after the keyword, got {got}")
            }
            NotAnInteger(t) => write!(f, "'{t}' is not an integer"),
            IndexOutOfRange(i) => write!(f, "index {i} outside [0, 255]"),
            ChannelOutOfRange(c) => write!(f, "channel value {c} outside [0, 255]"),
            NotAscending { index, previous } => {
                write!(
                    f,
                    "index {index} does not follow {previous} in ascending order"
                )
            }
            Invalid(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct SpecFileError {
    pub line: usize,
    pub kind: SpecFileErrorKind,
}

fn err(line: usize, kind: SpecFileErrorKind) -> SpecFileError {
    SpecFileError { line, kind }
}

fn parse_int(tok: &str, line: usize) -> Result<i64, SpecFileError> {
    tok.parse::<i64>()
        .map_err(|_| err(line, SpecFileErrorKind::NotAnInteger(tok.to_owned())))
}

fn parse_byte(
    tok: &str,
    line: usize,
    out_of_range: fn(i64) -> SpecFileErrorKind,
) -> Result<u8, SpecFileError> {
    let v = parse_int(tok, line)?;
    u8::try_from(v).map_err(|_| err(line, out_of_range(v)))
}

pub fn read_spec(text: &str) -> Result<PaletteSpec, SpecFileError> {
    let mut method: Option<Method> = None;
    let mut points: Vec<ControlPoint> = Vec::new();
    let mut point_lines: Vec<usize> = Vec::new();
    let mut method_line = 0;
    let mut last_line = 1;

    for (line, raw) in numbered_lines(text) {
        last_line = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut toks = body.split_whitespace();
        let keyword = toks.next().unwrap_or_default();
        let args: Vec<&str> = toks.collect();
        match keyword {
            "method" => {
                if method.is_some() {
                    return Err(err(line, SpecFileErrorKind::DuplicateMethod));
                }
                if args.len() != 1 {
                    return Err(err(
                        line,
                        SpecFileErrorKind::WrongArity {
                            expected: 1,
                            got: args.len(),
                        },
                    ));
                }
                method = Some(match args[0] {
                    "linear" => Method::Linear,
                    "lagrange" => Method::Lagrange,
                    other => {
                        return Err(err(
                            line,
                            SpecFileErrorKind::UnknownMethod(other.to_owned()),
                        ))
                    }
                });
                method_line = line;
            }
            "point" => {
                if method.is_none() {
                    return Err(err(line, SpecFileErrorKind::MissingMethod));
                }
                if args.len() != 4 {
                    return Err(err(
                        line,
                        SpecFileErrorKind::WrongArity {
                            expected: 4,
                            got: args.len(),
                        },
                    ));
                }
                let index = parse_byte(args[0], line, SpecFileErrorKind::IndexOutOfRange)?;
                let mut ch = [0u8; 3];
                for (c, tok) in ch.iter_mut().zip(&args[1..]) {
                    *c = parse_byte(tok, line, SpecFileErrorKind::ChannelOutOfRange)?;
                }
                if let Some(prev) = points.last() {
                    if index <= prev.index {
                        return Err(err(
                            line,
                            SpecFileErrorKind::NotAscending {
                                index,
                                previous: prev.index,
                            },
                        ));
                    }
                }
                points.push(ControlPoint::new(index, Rgb8::from(ch)));
                point_lines.push(line);
            }
            other => {
                return Err(err(
                    line,
                    SpecFileErrorKind::UnknownDirective(other.to_owned()),
                ))
            }
        }
    }

    let Some(method) = method else {
        return Err(err(last_line, SpecFileErrorKind::MissingMethod));
    };
    PaletteSpec::new(method, points).map_err(|e| {
        let line = match e {
            SpecError::MissingStart(_) => point_lines.first().copied(),
            _ => point_lines.last().copied(),
        }
        .unwrap_or(method_line);
        err(line, SpecFileErrorKind::Invalid(e))
    })
}

pub fn write_spec(spec: &PaletteSpec) -> String {
    let mut out = format!("method {}\n", spec.method());
    for p in spec.points() {
        let Rgb8 { r, g, b } = p.color;
        writeln!(out, "point {} {r} {g} {b}", p.index).expect("writing to a String");
    }
    out
}
