//! Construction, validation and application of false-color palettes whose
//! luminance varies monotonically with the color index, so that data encoded
//! with them survives conversion to grayscale.
//!
//! The crate is organised bottom-up:
//!
//! - [`color`]: luminance, normalized luminance, hue and palette-wide metrics.
//! - [`interp`]: line-function and Lagrange interpolation of control points
//!   into a 256-entry table.
//! - [`validate`]: monotonicity checks, dark-area detection and reports.
//! - [`catalog`]: built-in palette specifications.
//! - [`imaging`]: applying palettes to rasters and scalar fields.
//! - [`io`]: PNM, palette spec, palette CSV, curves CSV and field CSV codecs.

pub mod catalog;
pub mod color;
pub mod imaging;
pub mod interp;
pub mod io;
pub mod validate;

pub use catalog::{basic_colors, builtin, six_point_linear, BasicColor, CatalogError};
pub use color::{
    curves_for, dynamic_range, hue, hue_range, luminance, normalized_luminance, value, Channels,
    CurveRecord, Curves, Palette256, PaletteError, Rgb8, RgbF,
};
pub use imaging::{
    apply_palette, apply_signed, compare, normalize_field, to_grayscale, ColorImage,
    CompareMetrics, GrayImage, ImageError, ScalarField,
};
pub use interp::{build_palette, ControlPoint, Method, PaletteSpec, SpecError, SpecWarning};
pub use validate::{validate, Direction, IndexRange, ValidationReport, Violation, ViolationKind};
