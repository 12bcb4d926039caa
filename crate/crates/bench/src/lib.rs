//! Fixtures shared by the benchmarks.

use lumapal_core::GrayImage;

/// Diagonal gradient covering every gray level.
pub fn gradient(width: usize, height: usize) -> GrayImage {
    let samples = (0..height)
        .flat_map(|y| (0..width).map(move |x| ((x + y) * 255 / (width + height - 2).max(1)) as u8))
        .collect();
    GrayImage::new(width, height, samples).expect("non-empty dimensions")
}
