//! Color quantities: BT.601 luminance, HSV value and hue, normalized
//! luminance, and palette-wide metrics (dynamic range, hue range, curves).

use std::fmt;

use thiserror::Error;

/// BT.601 luma weights for red, green and blue.
pub const LUMA_WEIGHTS: [f64; 3] = [0.299, 0.587, 0.114];

/// Number of entries in a materialized palette.
pub const PALETTE_LEN: usize = 256;

/// An 8-bit RGB triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rgb8 {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl Rgb8 {
    pub const BLACK: Rgb8 = Rgb8::new(0, 0, 0);
    pub const WHITE: Rgb8 = Rgb8::new(255, 255, 255);

    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        Rgb8 { r, g, b }
    }

    pub const fn gray(v: u8) -> Self {
        Rgb8 { r: v, g: v, b: v }
    }

    pub fn to_array(self) -> [u8; 3] {
        [self.r, self.g, self.b]
    }
}

impl From<[u8; 3]> for Rgb8 {
    fn from([r, g, b]: [u8; 3]) -> Self {
        Rgb8 { r, g, b }
    }
}

impl fmt::Display for Rgb8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.g, self.b)
    }
}

/// A real-valued RGB triple, as produced by interpolation before clamping
/// and quantization.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RgbF {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl RgbF {
    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        RgbF { r, g, b }
    }

    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        RgbF::new(f(self.r), f(self.g), f(self.b))
    }
}

impl From<Rgb8> for RgbF {
    fn from(c: Rgb8) -> Self {
        RgbF::new(c.r.into(), c.g.into(), c.b.into())
    }
}

/// Anything that can be viewed as three real channel values.
pub trait Channels {
    fn channels(&self) -> [f64; 3];
}

impl Channels for Rgb8 {
    fn channels(&self) -> [f64; 3] {
        [self.r.into(), self.g.into(), self.b.into()]
    }
}

impl Channels for RgbF {
    fn channels(&self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }
}

/// BT.601 luminance `0.299 R + 0.587 G + 0.114 B`, unrounded.
pub fn luminance<C: Channels>(c: &C) -> f64 {
    let [r, g, b] = c.channels();
    LUMA_WEIGHTS[0] * r + LUMA_WEIGHTS[1] * g + LUMA_WEIGHTS[2] * b
}

/// HSV value: the largest channel.
pub fn value<C: Channels>(c: &C) -> f64 {
    let [r, g, b] = c.channels();
    r.max(g).max(b)
}

/// Luminance scaled by `value / 255`. Dips in this quantity show up as dark
/// bands even when plain luminance is monotone.
pub fn normalized_luminance<C: Channels>(c: &C) -> f64 {
    luminance(c) * value(c) / 255.0
}

/// Hexcone hue in degrees, `None` for achromatic colors.
pub fn hue<C: Channels>(c: &C) -> Option<f64> {
    let [r, g, b] = c.channels();
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let chroma = max - min;
    if chroma <= 0.0 {
        return None;
    }
    let sector = if max == r {
        ((g - b) / chroma).rem_euclid(6.0)
    } else if max == g {
        (b - r) / chroma + 2.0
    } else {
        (r - g) / chroma + 4.0
    };
    let h = 60.0 * sector;
    // rem_euclid may round up to exactly 6.0 for tiny negative inputs
    Some(if h >= 360.0 { h - 360.0 } else { h })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaletteError {
    #[error("expected 256 entries, got {0}")]
    WrongLength(usize),
}

/// A fully materialized 256-entry color table, addressed by color index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Palette256 {
    entries: [Rgb8; PALETTE_LEN],
}

impl Palette256 {
    pub fn from_fn(f: impl FnMut(usize) -> Rgb8) -> Self {
        Palette256 {
            entries: std::array::from_fn(f),
        }
    }

    /// `(i, i, i)` for every index.
    pub fn grayscale() -> Self {
        Self::from_fn(|i| Rgb8::gray(i as u8))
    }

    pub fn constant(c: Rgb8) -> Self {
        Palette256 {
            entries: [c; PALETTE_LEN],
        }
    }

    pub fn entries(&self) -> &[Rgb8; PALETTE_LEN] {
        &self.entries
    }

    pub fn get(&self, index: u8) -> Rgb8 {
        self.entries[usize::from(index)]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rgb8> {
        self.entries.iter()
    }

    /// The same colors in opposite index order.
    pub fn reversed(&self) -> Self {
        Self::from_fn(|i| self.entries[PALETTE_LEN - 1 - i])
    }

    pub fn luminances(&self) -> [f64; PALETTE_LEN] {
        std::array::from_fn(|i| luminance(&self.entries[i]))
    }

    pub fn normalized_luminances(&self) -> [f64; PALETTE_LEN] {
        std::array::from_fn(|i| normalized_luminance(&self.entries[i]))
    }
}

impl TryFrom<Vec<Rgb8>> for Palette256 {
    type Error = PaletteError;

    fn try_from(v: Vec<Rgb8>) -> Result<Self, Self::Error> {
        let len = v.len();
        let entries: [Rgb8; PALETTE_LEN] =
            v.try_into().map_err(|_| PaletteError::WrongLength(len))?;
        Ok(Palette256 { entries })
    }
}

impl fmt::Debug for Palette256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Palette256")
            .field("first", &self.entries[0])
            .field("last", &self.entries[PALETTE_LEN - 1])
            .finish_non_exhaustive()
    }
}

impl<'a> IntoIterator for &'a Palette256 {
    type Item = &'a Rgb8;
    type IntoIter = std::slice::Iter<'a, Rgb8>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// `(L_max - L_min) / 255` over all entries.
pub fn dynamic_range(p: &Palette256) -> f64 {
    let (min, max) = p
        .iter()
        .map(luminance)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), l| {
            (lo.min(l), hi.max(l))
        });
    (max - min) / 255.0
}

/// Span of the unwrapped hue sequence, in degrees.
///
/// Achromatic entries are skipped. Consecutive defined hues are joined by the
/// shortest angular step, so a sweep through the 0°/360° seam accumulates
/// instead of folding back.
pub fn hue_range(p: &Palette256) -> f64 {
    unwrapped_span(p.iter().filter_map(hue))
}

/// Span (max - min) of a hue sequence after unwrapping with minimal steps.
pub fn unwrapped_span(hues: impl IntoIterator<Item = f64>) -> f64 {
    let mut hues = hues.into_iter();
    let Some(first) = hues.next() else {
        return 0.0;
    };
    let (mut prev, mut acc) = (first, first);
    let (mut lo, mut hi) = (first, first);
    for h in hues {
        let step = (h - prev + 180.0).rem_euclid(360.0) - 180.0;
        acc += step;
        prev = h;
        lo = lo.min(acc);
        hi = hi.max(acc);
    }
    hi - lo
}

/// One row of palette curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRecord {
    pub index: u8,
    pub color: Rgb8,
    pub luminance: f64,
    pub normalized_luminance: f64,
    pub hue: Option<f64>,
}

/// Per-index luminance, normalized luminance and hue of a palette.
#[derive(Debug, Clone, PartialEq)]
pub struct Curves {
    pub records: Vec<CurveRecord>,
}

pub fn curves_for(p: &Palette256) -> Curves {
    let records = p
        .iter()
        .enumerate()
        .map(|(i, c)| CurveRecord {
            index: i as u8,
            color: *c,
            luminance: luminance(c),
            normalized_luminance: normalized_luminance(c),
            hue: hue(c),
        })
        .collect();
    Curves { records }
}
