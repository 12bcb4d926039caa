//! Comma-separated tables: materialized palettes, palette curves and scalar
//! fields.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::numbered_lines;
use crate::color::{Curves, Palette256, Rgb8, PALETTE_LEN};
use crate::imaging::ScalarField;

pub const PALETTE_HEADER: &str = "i,R,G,B";
pub const CURVES_HEADER: &str = "i,R,G,B,L,Lnorm,hue";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableErrorKind {
    Empty,
    BadHeader(String),
    WrongFieldCount { expected: usize, got: usize },
    NotAnInteger(String),
    NotANumber(String),
    OutOfRange(i64),
    OutOfOrder { expected: usize, got: i64 },
    WrongRowCount(usize),
    Ragged { expected: usize, got: usize },
}

impl fmt::Display for TableErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TableErrorKind::*;
        match self {
            Empty => f.write_str("no data"),
            BadHeader(h) => write!(f, "expected header '{PALETTE_HEADER}', found '{h}'"),
            WrongFieldCount { expected, got } => {
                write!(f, "expected {expected} fields, got {got}")
            }
            NotAnInteger(t) => write!(f, "'{t}' is not an integer"),
            NotANumber(t) => write!(f, "'{t}' is not a finite decimal number"),
            OutOfRange(v) => write!(f, "value {v} outside [0, 255]"),
            OutOfOrder { expected, got } => write!(f, "expected index {expected}, found {got}"),
            WrongRowCount(n) => write!(f, "expected 256 entries, got {n}"),
            Ragged { expected, got } => {
                write!(f, "row has {got} columns, previous rows have {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct TableError {
    pub line: usize,
    pub kind: TableErrorKind,
}

fn err(line: usize, kind: TableErrorKind) -> TableError {
    TableError { line, kind }
}

/// Non-blank lines with their 1-based numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    numbered_lines(text).filter(|(_, l)| !l.trim().is_empty())
}

pub fn write_palette_csv(p: &Palette256) -> String {
    let mut out = String::with_capacity(16 * PALETTE_LEN);
    out.push_str(PALETTE_HEADER);
    out.push('\n');
    for (i, Rgb8 { r, g, b }) in p.iter().enumerate() {
        writeln!(out, "{i},{r},{g},{b}").expect("writing to a String");
    }
    out
}

pub fn read_palette_csv(text: &str) -> Result<Palette256, TableError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or(err(1, TableErrorKind::Empty))?;
    if header.trim() != PALETTE_HEADER {
        return Err(err(
            hline,
            TableErrorKind::BadHeader(header.trim().to_owned()),
        ));
    }

    let mut entries = Vec::with_capacity(PALETTE_LEN);
    let mut last_line = hline;
    for (line, row) in lines {
        last_line = line;
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(err(
                line,
                TableErrorKind::WrongFieldCount {
                    expected: 4,
                    got: fields.len(),
                },
            ));
        }
        let mut vals = [0i64; 4];
        for (v, f) in vals.iter_mut().zip(&fields) {
            *v = f
                .parse()
                .map_err(|_| err(line, TableErrorKind::NotAnInteger((*f).to_owned())))?;
        }
        if vals[0] != entries.len() as i64 {
            return Err(err(
                line,
                TableErrorKind::OutOfOrder {
                    expected: entries.len(),
                    got: vals[0],
                },
            ));
        }
        let mut ch = [0u8; 3];
        for (c, &v) in ch.iter_mut().zip(&vals[1..]) {
            *c = u8::try_from(v).map_err(|_| err(line, TableErrorKind::OutOfRange(v)))?;
        }
        entries.push(Rgb8::from(ch));
        if entries.len() > PALETTE_LEN {
            return Err(err(line, TableErrorKind::WrongRowCount(entries.len())));
        }
    }
    let n = entries.len();
    Palette256::try_from(entries).map_err(|_| err(last_line, TableErrorKind::WrongRowCount(n)))
}

/// Curves as CSV. Luminances carry three decimals; the hue cell is empty
/// for achromatic entries.
pub fn write_curves_csv(c: &Curves) -> String {
    let mut out = String::with_capacity(40 * c.records.len());
    out.push_str(CURVES_HEADER);
    out.push('\n');
    for rec in &c.records {
        let Rgb8 { r, g, b } = rec.color;
        write!(
            out,
            "{},{r},{g},{b},{:.3},{:.3},",
            rec.index, rec.luminance, rec.normalized_luminance
        )
        .expect("writing to a String");
        if let Some(h) = rec.hue {
            write!(out, "{h:.3}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

/// Rectangular grid of comma-separated decimal numbers, one row per line.
pub fn read_field_csv(text: &str) -> Result<ScalarField, TableError> {
    let mut values = Vec::new();
    let mut width: Option<usize> = None;
    let mut height = 0;
    for (line, row) in data_lines(text) {
        let start = values.len();
        for cell in row.split(',').map(str::trim) {
            let v: f64 = cell
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| err(line, TableErrorKind::NotANumber(cell.to_owned())))?;
            values.push(v);
        }
        let got = values.len() - start;
        match width {
            None => width = Some(got),
            Some(expected) if expected != got => {
                return Err(err(line, TableErrorKind::Ragged { expected, got }))
            }
            Some(_) => {}
        }
        height += 1;
    }
    let width = width.ok_or(err(1, TableErrorKind::Empty))?;
    Ok(ScalarField::new(width, height, values).expect("shape checked while parsing"))
}
