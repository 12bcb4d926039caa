//! Text and binary codecs. Everything here works on in-memory strings and
//! byte slices; opening files is the caller's business.

pub mod pnm;
pub mod spec_file;
pub mod tables;

pub use pnm::{read_pgm, read_ppm, write_pgm, write_ppm, PnmError};
pub use spec_file::{read_spec, write_spec, SpecFileError, SpecFileErrorKind};
pub use tables::{
    read_field_csv, read_palette_csv, write_curves_csv, write_palette_csv, TableError,
    TableErrorKind,
};

/// Lines of `text` numbered from 1, with a trailing `\r` removed.
pub(crate) fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)))
}
