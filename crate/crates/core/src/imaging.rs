//! Rasters and scalar fields, and the operations that move between them
//! through a palette.

use thiserror::Error;

use crate::color::{luminance, Palette256, Rgb8};
use crate::interp::quantize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageError {
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyDimensions { width: usize, height: usize },
    #[error("{width}x{height} overflows the addressable pixel count")]
    Overflow { width: usize, height: usize },
    #[error("expected {expected} samples for the given dimensions, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("field value at position {0} is not finite")]
    NonFinite(usize),
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<(), ImageError> {
    if width == 0 || height == 0 {
        return Err(ImageError::EmptyDimensions { width, height });
    }
    let expected = width
        .checked_mul(height)
        .ok_or(ImageError::Overflow { width, height })?;
    if expected != len {
        return Err(ImageError::LengthMismatch { expected, got: len });
    }
    Ok(())
}

/// 8-bit single-channel raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self, ImageError> {
        check_dims(width, height, samples.len())?;
        Ok(GrayImage {
            width,
            height,
            samples,
        })
    }

    /// A `256 x 1` image holding every level once, 0 on the left.
    pub fn ramp() -> Self {
        GrayImage {
            width: 256,
            height: 1,
            samples: (0..=255).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }
}

/// 8-bit RGB raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorImage {
    width: usize,
    height: usize,
    pixels: Vec<Rgb8>,
}

impl ColorImage {
    pub fn new(width: usize, height: usize, pixels: Vec<Rgb8>) -> Result<Self, ImageError> {
        check_dims(width, height, pixels.len())?;
        Ok(ColorImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[Rgb8] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> Rgb8 {
        self.pixels[y * self.width + x]
    }
}

/// Real-valued grid of finite numbers, row-major. Values may be negative.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl ScalarField {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self, ImageError> {
        check_dims(width, height, values.len())?;
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(ImageError::NonFinite(k));
        }
        Ok(ScalarField {
            width,
            height,
            values,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Look every sample up in the palette.
pub fn apply_palette(g: &GrayImage, p: &Palette256) -> ColorImage {
    ColorImage {
        width: g.width,
        height: g.height,
        pixels: g.samples.iter().map(|&s| p.get(s)).collect(),
    }
}

/// BT.601 luminance of each pixel, rounded half-up.
pub fn to_grayscale(c: &ColorImage) -> GrayImage {
    GrayImage {
        width: c.width,
        height: c.height,
        samples: c.pixels.iter().map(|px| quantize(luminance(px))).collect(),
    }
}

/// Map the field's `[min, max]` onto `[0, 255]`. A constant field maps to 127.
pub fn normalize_field(f: &ScalarField) -> GrayImage {
    let (min, max) = f
        .values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let span = max - min;
    let samples = if span > 0.0 {
        f.values
            .iter()
            .map(|&v| quantize(255.0 * (v - min) / span))
            .collect()
    } else {
        vec![127; f.values.len()]
    };
    GrayImage {
        width: f.width,
        height: f.height,
        samples,
    }
}

/// Palette index for a signed value given the field's peak magnitude:
/// `floor(127.5 * (1 + v / peak))`, so `-peak`, `0` and `+peak` land on 0,
/// 127 and 255.
pub fn signed_index(v: f64, peak: f64) -> u8 {
    if peak <= 0.0 {
        return 127;
    }
    (127.5 * (1.0 + v / peak)).floor().clamp(0.0, 255.0) as u8
}

/// Encode a signed field symmetrically around the palette's middle entry.
pub fn apply_signed(f: &ScalarField, p: &Palette256) -> ColorImage {
    let peak = f.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    ColorImage {
        width: f.width,
        height: f.height,
        pixels: f
            .values
            .iter()
            .map(|&v| p.get(signed_index(v, peak)))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareMetrics {
    pub max_abs_diff: u8,
    pub rmse: f64,
}

/// Per-pixel difference statistics of two equally sized grayscale images.
pub fn compare(a: &GrayImage, b: &GrayImage) -> Result<CompareMetrics, ImageError> {
    if (a.width, a.height) != (b.width, b.height) {
        return Err(ImageError::DimensionMismatch(
            a.width, a.height, b.width, b.height,
        ));
    }
    let mut max_abs_diff = 0u8;
    let mut sq = 0.0f64;
    for (&x, &y) in a.samples.iter().zip(&b.samples) {
        let d = x.abs_diff(y);
        max_abs_diff = max_abs_diff.max(d);
        sq += f64::from(d) * f64::from(d);
    }
    Ok(CompareMetrics {
        max_abs_diff,
        rmse: (sq / a.samples.len() as f64).sqrt(),
    })
}
