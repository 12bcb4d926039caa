//! Netpbm grayscale (PGM) and color (PPM) rasters with 8-bit samples.
//!
//! Readers take the plain (`P2`/`P3`) and raw (`P5`/`P6`) variants; writers
//! always produce the raw variant.

use thiserror::Error;

use crate::color::Rgb8;
use crate::imaging::{ColorImage, GrayImage, ImageError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PnmError {
    #[error("unsupported magic number {0:?}, expected {1}")]
    UnsupportedMagic(String, &'static str),
    #[error("unsupported maxval {0}, only 255 is accepted")]
    UnsupportedMaxval(u64),
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("image dimensions {0}x{1} are too large")]
    DimensionOverflow(u64, u64),
    #[error("truncated pixel data: expected {expected} samples, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("bad sample '{0}'")]
    BadSample(String),
    #[error(transparent)]
    Image(#[from] ImageError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Encoding {
    Plain,
    Raw,
}

struct Header {
    encoding: Encoding,
    width: usize,
    height: usize,
    /// Offset of the first byte after the header.
    data_start: usize,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    /// Skip whitespace and `#` comments running to end of line.
    fn skip_blank(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.pos < self.bytes.len() && !matches!(self.bytes[self.pos], b'\n' | b'\r')
                {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_blank();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && !self.bytes[self.pos].is_ascii_whitespace()
            && self.bytes[self.pos] != b'#'
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<u64, PnmError> {
        let tok = self
            .token()
            .ok_or_else(|| PnmError::BadHeader(format!("missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                PnmError::BadHeader(format!(
                    "{what} '{}' is not a number",
                    String::from_utf8_lossy(tok)
                ))
            })
    }
}

fn parse_header(
    bytes: &[u8],
    plain: &'static str,
    raw: &'static str,
    channels: usize,
) -> Result<Header, PnmError> {
    let expected = if channels == 1 {
        "P2 or P5"
    } else {
        "P3 or P6"
    };
    let magic = bytes.get(..2).unwrap_or(bytes);
    let encoding = if magic == plain.as_bytes() {
        Encoding::Plain
    } else if magic == raw.as_bytes() {
        Encoding::Raw
    } else {
        return Err(PnmError::UnsupportedMagic(
            String::from_utf8_lossy(magic).into_owned(),
            expected,
        ));
    };
    let mut cur = Cursor { bytes, pos: 2 };
    if !cur
        .bytes
        .get(2)
        .is_some_and(|b| b.is_ascii_whitespace() || *b == b'#')
    {
        return Err(PnmError::BadHeader(
            "no whitespace after magic number".into(),
        ));
    }
    let w = cur.number("width")?;
    let h = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(PnmError::UnsupportedMaxval(maxval));
    }
    let (width, height) = match (usize::try_from(w), usize::try_from(h)) {
        (Ok(w), Ok(h)) => (w, h),
        _ => return Err(PnmError::DimensionOverflow(w, h)),
    };
    if width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(channels))
        .is_none()
    {
        return Err(PnmError::DimensionOverflow(w, h));
    }
    if width == 0 || height == 0 {
        return Err(ImageError::EmptyDimensions { width, height }.into());
    }
    // raw data begins after exactly one whitespace byte
    let data_start = match encoding {
        Encoding::Raw => {
            if !cur.bytes.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
                return Err(PnmError::BadHeader("no whitespace after maxval".into()));
            }
            cur.pos + 1
        }
        Encoding::Plain => cur.pos,
    };
    Ok(Header {
        encoding,
        width,
        height,
        data_start,
    })
}

fn read_samples(bytes: &[u8], header: &Header, channels: usize) -> Result<Vec<u8>, PnmError> {
    let expected = header.width * header.height * channels;
    match header.encoding {
        Encoding::Raw => {
            let data = &bytes[header.data_start..];
            if data.len() < expected {
                return Err(PnmError::Truncated {
                    expected,
                    found: data.len(),
                });
            }
            Ok(data[..expected].to_vec())
        }
        Encoding::Plain => {
            let mut cur = Cursor {
                bytes,
                pos: header.data_start,
            };
            let mut out = Vec::with_capacity(expected);
            while out.len() < expected {
                let Some(tok) = cur.token() else {
                    return Err(PnmError::Truncated {
                        expected,
                        found: out.len(),
                    });
                };
                let v = std::str::from_utf8(tok)
                    .ok()
                    .and_then(|s| s.parse::<u8>().ok())
                    .ok_or_else(|| {
                        PnmError::BadSample(String::from_utf8_lossy(tok).into_owned())
                    })?;
                out.push(v);
            }
            Ok(out)
        }
    }
}

pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, PnmError> {
    let header = parse_header(bytes, "P2", "P5", 1)?;
    let samples = read_samples(bytes, &header, 1)?;
    Ok(GrayImage::new(header.width, header.height, samples)?)
}

pub fn read_ppm(bytes: &[u8]) -> Result<ColorImage, PnmError> {
    let header = parse_header(bytes, "P3", "P6", 3)?;
    let samples = read_samples(bytes, &header, 3)?;
    let pixels = samples
        .chunks_exact(3)
        .map(|c| Rgb8::new(c[0], c[1], c[2]))
        .collect();
    Ok(ColorImage::new(header.width, header.height, pixels)?)
}

/// Raw PGM: `P5\n<w> <h>\n255\n` followed by one byte per sample.
pub fn write_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.samples());
    out
}

/// Raw PPM: `P6\n<w> <h>\n255\n` followed by RGB triples.
pub fn write_ppm(img: &ColorImage) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.reserve(img.pixels().len() * 3);
    for px in img.pixels() {
        out.extend_from_slice(&px.to_array());
    }
    out
}
