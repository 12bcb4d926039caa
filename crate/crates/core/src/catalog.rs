//! Built-in palette specifications and the table of basic colors.

use thiserror::Error;

use crate::color::{luminance, Rgb8};
use crate::interp::{quantize, ControlPoint, PaletteSpec};

/// One of the eight colors whose channels are all 0 or 255.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasicColor {
    pub name: &'static str,
    pub color: Rgb8,
    pub luminance: f64,
}

pub const BLACK: Rgb8 = Rgb8::new(0, 0, 0);
pub const BLUE: Rgb8 = Rgb8::new(0, 0, 255);
pub const RED: Rgb8 = Rgb8::new(255, 0, 0);
pub const MAGENTA: Rgb8 = Rgb8::new(255, 0, 255);
pub const GREEN: Rgb8 = Rgb8::new(0, 255, 0);
pub const CYAN: Rgb8 = Rgb8::new(0, 255, 255);
pub const YELLOW: Rgb8 = Rgb8::new(255, 255, 0);
pub const WHITE: Rgb8 = Rgb8::new(255, 255, 255);

/// The basic colors in order of increasing luminance.
pub fn basic_colors() -> [BasicColor; 8] {
    [
        ("black", BLACK),
        ("blue", BLUE),
        ("red", RED),
        ("magenta", MAGENTA),
        ("green", GREEN),
        ("cyan", CYAN),
        ("yellow", YELLOW),
        ("white", WHITE),
    ]
    .map(|(name, color)| BasicColor {
        name,
        color,
        luminance: luminance(&color),
    })
}

/// Black, red, magenta, cyan, yellow and white joined by straight lines,
/// each placed at the index equal to its rounded luminance. Green and blue
/// are left out: green would break the ordering against magenta and blue
/// would open a dark band.
pub fn six_point_linear() -> PaletteSpec {
    let points = [BLACK, RED, MAGENTA, CYAN, YELLOW, WHITE]
        .map(|c| ControlPoint::new(quantize(luminance(&c)), c))
        .to_vec();
    PaletteSpec::linear(points).expect("basic colors have distinct rounded luminances")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown palette '{0}' (known: {known})", known = NAMES.join(", "))]
    UnknownName(String),
}

/// Stable names accepted by [`builtin`].
pub const NAMES: [&str; 6] = [
    "gray",
    "six-linear",
    "diverging-by",
    "four-point-demo",
    "rainbow-ref",
    "demo-dark",
];

fn pts(list: &[(u8, Rgb8)]) -> Vec<ControlPoint> {
    list.iter().map(|&(i, c)| ControlPoint::new(i, c)).collect()
}

/// Look up a built-in spec by name.
///
/// `rainbow-ref` and `demo-dark` are deliberately bad: the first has
/// non-monotone luminance, the second has monotone luminance but a dip in
/// normalized luminance next to its light gray point.
pub fn builtin(name: &str) -> Result<PaletteSpec, CatalogError> {
    let spec = match name {
        "gray" => PaletteSpec::linear(pts(&[(0, BLACK), (255, WHITE)])),
        "six-linear" => Ok(six_point_linear()),
        "diverging-by" => {
            PaletteSpec::lagrange(pts(&[(0, BLUE), (127, Rgb8::gray(127)), (255, YELLOW)]))
        }
        "four-point-demo" => PaletteSpec::lagrange(pts(&[
            (0, BLACK),
            (85, BLUE),
            (170, Rgb8::new(255, 0, 128)),
            (255, WHITE),
        ])),
        "rainbow-ref" => PaletteSpec::linear(pts(&[
            (0, BLUE),
            (64, CYAN),
            (128, GREEN),
            (191, YELLOW),
            (255, RED),
        ])),
        // gray sits close to yellow so the dip is one clean minimum rather
        // than several quantization wiggles
        "demo-dark" => PaletteSpec::linear(pts(&[
            (0, BLACK),
            (100, Rgb8::new(200, 60, 0)),
            (226, YELLOW),
            (231, Rgb8::gray(230)),
            (255, WHITE),
        ])),
        other => return Err(CatalogError::UnknownName(other.to_owned())),
    };
    Ok(spec.expect("catalog specs are well-formed"))
}
