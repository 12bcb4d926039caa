//! Turning a handful of control colors into a 256-entry palette.
//!
//! Every channel is interpolated independently, either piecewise-linearly
//! or with a single Lagrange polynomial through all control points. The
//! real-valued result is clamped to `[0, 255]` and then rounded half-up.
//!
//! Lagrange specs whose nodes sit at `{0, 85, 170, 255}` or `{0, m, 255}`
//! are evaluated with the closed-form polynomials ([`lagrange4`],
//! [`lagrange3`], [`lagrange3_mid`]); any other node layout goes through the
//! generic basis.

use std::fmt;

use thiserror::Error;

use crate::color::{Palette256, Rgb8, RgbF, PALETTE_LEN};

/// Four-point Lagrange polynomial with nodes at 0, 85, 170 and 255.
pub fn lagrange4(c0: f64, c85: f64, c170: f64, c255: f64, i: f64) -> f64 {
    -(i - 85.0) * (i - 170.0) * (i - 255.0) / 3_684_750.0 * c0
        + i * (i - 170.0) * (i - 255.0) / 1_228_250.0 * c85
        - i * (i - 85.0) * (i - 255.0) / 1_228_250.0 * c170
        + i * (i - 85.0) * (i - 170.0) / 3_684_750.0 * c255
}

/// Three-point Lagrange polynomial with nodes at 0, `m` and 255.
pub fn lagrange3(c0: f64, cm: f64, c255: f64, m: i64, i: f64) -> Result<f64, SpecError> {
    if m <= 0 || m >= 255 {
        return Err(SpecError::MiddleOutOfRange(m));
    }
    let m = m as f64;
    Ok((i - m) * (i - 255.0) / (255.0 * m) * c0
        + i * (i - 255.0) / (m * (m - 255.0)) * cm
        + i * (i - m) / (255.0 * (255.0 - m)) * c255)
}

/// [`lagrange3`] with the middle node fixed at 127.
pub fn lagrange3_mid(c0: f64, c127: f64, c255: f64, i: f64) -> f64 {
    (i - 127.0) * (i - 255.0) / 32_385.0 * c0 - i * (i - 255.0) / 16_256.0 * c127
        + i * (i - 127.0) / 32_640.0 * c255
}

/// Lagrange polynomial through arbitrary `(x, y)` nodes, evaluated at `x`.
/// Node abscissae must be distinct.
pub fn lagrange_generic(nodes: &[(f64, f64)], x: f64) -> f64 {
    nodes
        .iter()
        .enumerate()
        .map(|(k, &(xk, yk))| {
            let basis: f64 = nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &(xj, _))| (x - xj) / (xk - xj))
                .product();
            basis * yk
        })
        .sum()
}

/// Piecewise-linear interpolation through `(index, value)` nodes sorted by
/// index. `i` outside the node span is clamped to the end segments.
pub fn linear_interp(nodes: &[(f64, f64)], i: f64) -> f64 {
    match nodes {
        [] => f64::NAN,
        [(_, y)] => *y,
        _ => {
            let seg = nodes
                .windows(2)
                .position(|w| i <= w[1].0)
                .unwrap_or(nodes.len() - 2);
            let (x0, y0) = nodes[seg];
            let (x1, y1) = nodes[seg + 1];
            if i == x0 {
                y0
            } else if i == x1 {
                y1
            } else {
                y0 + (i - x0) / (x1 - x0) * (y1 - y0)
            }
        }
    }
}

/// Limit a channel value to `[0, 255]`.
pub fn clamp(x: f64) -> f64 {
    x.clamp(0.0, 255.0)
}

/// Round half-up to the nearest integer channel value. Input is clamped
/// first, so the result is always a valid channel.
pub fn quantize(x: f64) -> u8 {
    (clamp(x) + 0.5).floor() as u8
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Linear,
    Lagrange,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Linear => "linear",
            Method::Lagrange => "lagrange",
        }
    }

    fn min_points(self) -> usize {
        match self {
            Method::Linear => 2,
            Method::Lagrange => 3,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ControlPoint {
    pub index: u8,
    pub color: Rgb8,
}

impl ControlPoint {
    pub const fn new(index: u8, color: Rgb8) -> Self {
        ControlPoint { index, color }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{method} interpolation needs at least {min} control points, got {got}")]
    TooFewPoints {
        method: Method,
        min: usize,
        got: usize,
    },
    #[error("control point {position} has index {index}, not above the previous index {previous}")]
    NotIncreasing {
        position: usize,
        index: u8,
        previous: u8,
    },
    #[error("first control point must be at index 0, found {0}")]
    MissingStart(u8),
    #[error("last control point must be at index 255, found {0}")]
    MissingEnd(u8),
    #[error("middle node {0} must lie strictly between 0 and 255")]
    MiddleOutOfRange(i64),
}

/// Non-fatal remarks about a spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecWarning {
    /// High-order Lagrange polynomials tend to wiggle between nodes.
    HighOrderLagrange { points: usize },
}

impl fmt::Display for SpecWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecWarning::HighOrderLagrange { points } => write!(
                f,
                "lagrange interpolation through {points} points is a degree-{} polynomial; \
                 expect overshoot and local minima between nodes",
                points - 1
            ),
        }
    }
}

/// Interpolation method plus ordered control points, spanning indices 0..=255.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaletteSpec {
    method: Method,
    points: Vec<ControlPoint>,
}

impl PaletteSpec {
    pub fn new(method: Method, points: Vec<ControlPoint>) -> Result<Self, SpecError> {
        let min = method.min_points();
        if points.len() < min {
            return Err(SpecError::TooFewPoints {
                method,
                min,
                got: points.len(),
            });
        }
        for (position, w) in points.windows(2).enumerate() {
            if w[1].index <= w[0].index {
                return Err(SpecError::NotIncreasing {
                    position: position + 1,
                    index: w[1].index,
                    previous: w[0].index,
                });
            }
        }
        let (first, last) = (points[0].index, points[points.len() - 1].index);
        if first != 0 {
            return Err(SpecError::MissingStart(first));
        }
        if last != 255 {
            return Err(SpecError::MissingEnd(last));
        }
        Ok(PaletteSpec { method, points })
    }

    pub fn linear(points: Vec<ControlPoint>) -> Result<Self, SpecError> {
        Self::new(Method::Linear, points)
    }

    pub fn lagrange(points: Vec<ControlPoint>) -> Result<Self, SpecError> {
        Self::new(Method::Lagrange, points)
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn points(&self) -> &[ControlPoint] {
        &self.points
    }

    pub fn warnings(&self) -> Vec<SpecWarning> {
        let mut out = Vec::new();
        if self.method == Method::Lagrange && self.points.len() > 4 {
            out.push(SpecWarning::HighOrderLagrange {
                points: self.points.len(),
            });
        }
        out
    }

    fn kernel(&self) -> Kernel {
        let idx: Vec<u8> = self.points.iter().map(|p| p.index).collect();
        match (self.method, idx.as_slice()) {
            (Method::Linear, _) => Kernel::Linear,
            (Method::Lagrange, [0, 85, 170, 255]) => Kernel::Four,
            (Method::Lagrange, [0, 127, 255]) => Kernel::ThreeMid,
            (Method::Lagrange, [0, m, 255]) => Kernel::Three(i64::from(*m)),
            (Method::Lagrange, _) => Kernel::Generic,
        }
    }

    /// Per-channel real-valued interpolant at every index, before clamping.
    pub fn interpolate(&self) -> [RgbF; PALETTE_LEN] {
        let kernel = self.kernel();
        let nodes: [Vec<(f64, f64)>; 3] = std::array::from_fn(|ch| {
            self.points
                .iter()
                .map(|p| (f64::from(p.index), f64::from(p.color.to_array()[ch])))
                .collect()
        });
        let eval = |ch: usize, i: f64| -> f64 {
            let n = &nodes[ch];
            match kernel {
                Kernel::Linear => linear_interp(n, i),
                Kernel::Four => lagrange4(n[0].1, n[1].1, n[2].1, n[3].1, i),
                Kernel::ThreeMid => lagrange3_mid(n[0].1, n[1].1, n[2].1, i),
                Kernel::Three(m) => lagrange3(n[0].1, n[1].1, n[2].1, m, i)
                    .expect("middle index validated by PaletteSpec::new"),
                Kernel::Generic => lagrange_generic(n, i),
            }
        };
        std::array::from_fn(|i| {
            let x = i as f64;
            RgbF::new(eval(0, x), eval(1, x), eval(2, x))
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Kernel {
    Linear,
    Four,
    ThreeMid,
    Three(i64),
    Generic,
}

/// Interpolate, clamp and quantize every channel of every index.
pub fn build_palette(spec: &PaletteSpec) -> Palette256 {
    let real = spec.interpolate();
    Palette256::from_fn(|i| {
        let c = real[i];
        Rgb8::new(quantize(c.r), quantize(c.g), quantize(c.b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    // Neville's scheme; independent of the basis-product form.
    fn neville(nodes: &[(f64, f64)], x: f64) -> f64 {
        let mut p: Vec<f64> = nodes.iter().map(|n| n.1).collect();
        let n = nodes.len();
        for k in 1..n {
            for i in 0..n - k {
                let (xi, xik) = (nodes[i].0, nodes[i + k].0);
                p[i] = ((x - xik) * p[i] + (xi - x) * p[i + 1]) / (xi - xik);
            }
        }
        p[0]
    }

    #[test]
    fn lagrange4_examples() {
        assert_eq!(lagrange4(17.0, 40.0, 120.0, 255.0, 0.0), 17.0);
        for i in 0..=255 {
            assert!((lagrange4(9.0, 9.0, 9.0, 9.0, i as f64) - 9.0).abs() < TOL);
        }
        // frozen from neville over {0, 85, 170, 255}
        let v = lagrange4(0.0, 40.0, 120.0, 255.0, 42.0);
        assert!((v - 15.706444127824136).abs() < TOL);
        assert!((v - 15.7065).abs() < 1e-4);
    }

    #[test]
    fn lagrange3_examples() {
        assert!((lagrange3(3.0, 77.0, 9.0, 85, 85.0).unwrap() - 77.0).abs() < TOL);
        for m in [1i64, 60, 127, 200, 254] {
            for i in 0..=255 {
                let v = lagrange3(0.0, m as f64, 255.0, m, i as f64).unwrap();
                assert!((v - i as f64).abs() < 1e-9 * 255.0, "m={m} i={i}");
            }
        }
        // frozen from neville over {0, 85, 255}
        let v = lagrange3(0.0, 200.0, 100.0, 85, 170.0).unwrap();
        assert!((v - 233.33333333333331).abs() < TOL);
    }

    #[test]
    fn lagrange3_rejects_degenerate_middle() {
        assert_eq!(
            lagrange3(0.0, 1.0, 2.0, 0, 5.0),
            Err(SpecError::MiddleOutOfRange(0))
        );
        assert!(lagrange3(0.0, 1.0, 2.0, 255, 5.0).is_err());
        assert!(lagrange3(0.0, 1.0, 2.0, -3, 5.0).is_err());
    }

    #[test]
    fn lagrange3_mid_examples() {
        assert!((lagrange3_mid(5.0, 99.0, 7.0, 127.0) - 99.0).abs() < TOL);
        assert!((lagrange3_mid(0.0, 127.0, 255.0, 60.0) - 60.0).abs() < TOL);
        for i in 0..=255 {
            let x = i as f64;
            let a = lagrange3_mid(12.0, 200.0, 31.0, x);
            let b = lagrange3(12.0, 200.0, 31.0, 127, x).unwrap();
            assert!((a - b).abs() < TOL);
        }
    }

    #[test]
    fn linear_examples() {
        let id = [(0.0, 0.0), (255.0, 255.0)];
        assert_eq!(linear_interp(&id, 51.0), 51.0);
        let seg = [(76.0, 0.0), (105.0, 255.0)];
        assert!((linear_interp(&seg, 90.0) - 255.0 * 14.0 / 29.0).abs() < TOL);
        // independent two-point line: y = slope * (x - x0)
        let slope = 255.0 / (105.0 - 76.0);
        assert!((linear_interp(&seg, 90.0) - slope * 14.0).abs() < TOL);

        let nodes = [(0.0, 10.0), (76.0, 200.0), (105.0, 3.0), (255.0, 255.0)];
        for (x, y) in nodes {
            assert_eq!(linear_interp(&nodes, x), y);
        }
    }

    #[test]
    fn clamp_and_quantize() {
        assert_eq!(clamp(-5.0), 0.0);
        assert_eq!(clamp(260.0), 255.0);
        assert_eq!(clamp(123.4), 123.4);
        assert_eq!(quantize(37.29), 37);
        assert_eq!(quantize(123.5), 124);
        assert_eq!(quantize(255.0), 255);
        assert_eq!(quantize(0.49999), 0);
        assert_eq!(quantize(-40.0), 0);
        assert_eq!(quantize(1e6), 255);
    }

    #[test]
    fn spec_validation() {
        let p = |i, v| ControlPoint::new(i, Rgb8::gray(v));
        assert!(PaletteSpec::linear(vec![p(0, 0), p(255, 255)]).is_ok());
        assert_eq!(
            PaletteSpec::lagrange(vec![p(0, 0), p(255, 255)]),
            Err(SpecError::TooFewPoints {
                method: Method::Lagrange,
                min: 3,
                got: 2
            })
        );
        assert_eq!(
            PaletteSpec::linear(vec![p(0, 0), p(50, 1), p(50, 2), p(255, 3)]),
            Err(SpecError::NotIncreasing {
                position: 2,
                index: 50,
                previous: 50
            })
        );
        assert_eq!(
            PaletteSpec::linear(vec![p(1, 0), p(255, 3)]),
            Err(SpecError::MissingStart(1))
        );
        assert_eq!(
            PaletteSpec::linear(vec![p(0, 0), p(254, 3)]),
            Err(SpecError::MissingEnd(254))
        );
    }

    #[test]
    fn high_order_lagrange_warns() {
        let pts = [0u8, 60, 120, 180, 255]
            .map(|i| ControlPoint::new(i, Rgb8::gray(i)))
            .to_vec();
        let spec = PaletteSpec::lagrange(pts.clone()).unwrap();
        assert_eq!(
            spec.warnings(),
            vec![SpecWarning::HighOrderLagrange { points: 5 }]
        );
        assert!(PaletteSpec::linear(pts).unwrap().warnings().is_empty());
    }

    #[test]
    fn gray_linear_build() {
        let spec = PaletteSpec::linear(vec![
            ControlPoint::new(0, Rgb8::BLACK),
            ControlPoint::new(255, Rgb8::WHITE),
        ])
        .unwrap();
        assert_eq!(build_palette(&spec), Palette256::grayscale());
    }

    #[test]
    fn four_point_build_matches_oracle() {
        let colors = [
            Rgb8::new(0, 0, 0),
            Rgb8::new(30, 0, 255),
            Rgb8::new(255, 20, 128),
            Rgb8::new(250, 255, 255),
        ];
        let idx = [0u8, 85, 170, 255];
        let spec = PaletteSpec::lagrange(
            idx.iter()
                .zip(colors)
                .map(|(&i, c)| ControlPoint::new(i, c))
                .collect(),
        )
        .unwrap();
        let pal = build_palette(&spec);
        for i in 0..256 {
            let got = pal.entries()[i].to_array();
            for (ch, &g) in got.iter().enumerate() {
                let nodes: Vec<(f64, f64)> = idx
                    .iter()
                    .zip(colors)
                    .map(|(&x, c)| (x as f64, c.to_array()[ch] as f64))
                    .collect();
                let want = neville(&nodes, i as f64).clamp(0.0, 255.0);
                assert_eq!(g, (want + 0.5).floor() as u8, "i={i} ch={ch}");
            }
        }
    }

    #[test]
    fn generic_path_matches_neville() {
        let idx = [0u8, 40, 100, 170, 220, 255];
        let pts: Vec<ControlPoint> = idx
            .iter()
            .map(|&i| ControlPoint::new(i, Rgb8::new(i, 255 - i, i / 2)))
            .collect();
        let spec = PaletteSpec::lagrange(pts).unwrap();
        let real = spec.interpolate();
        for (i, c) in real.iter().enumerate() {
            let nodes: Vec<(f64, f64)> =
                idx.iter().map(|&x| (x as f64, (255 - x) as f64)).collect();
            assert!((c.g - neville(&nodes, i as f64)).abs() < 1e-6);
        }
    }

    fn arb_spec() -> impl Strategy<Value = PaletteSpec> {
        (
            prop_oneof![Just(Method::Linear), Just(Method::Lagrange)],
            proptest::collection::btree_set(1u8..255, 1..5),
            proptest::collection::vec(any::<[u8; 3]>(), 7),
        )
            .prop_map(|(method, inner, colors)| {
                let mut idx = vec![0u8];
                idx.extend(inner);
                idx.push(255);
                let pts = idx
                    .iter()
                    .zip(colors)
                    .map(|(&i, c)| ControlPoint::new(i, Rgb8::from(c)))
                    .collect();
                PaletteSpec::new(method, pts).unwrap()
            })
    }

    proptest! {
        #[test]
        fn nodes_reproduced_exactly(spec in arb_spec()) {
            let pal = build_palette(&spec);
            let real = spec.interpolate();
            for p in spec.points() {
                let i = usize::from(p.index);
                prop_assert_eq!(pal.entries()[i], p.color);
                let c = crate::color::RgbF::from(p.color);
                prop_assert!((real[i].r - c.r).abs() < TOL);
                prop_assert!((real[i].g - c.g).abs() < TOL);
                prop_assert!((real[i].b - c.b).abs() < TOL);
            }
        }

        #[test]
        fn clamp_idempotent_and_monotone(a in -1e4f64..1e4, b in -1e4f64..1e4) {
            prop_assert_eq!(clamp(clamp(a)), clamp(a));
            if a <= b {
                prop_assert!(clamp(a) <= clamp(b));
            }
        }

        #[test]
        fn quantize_within_half(x in 0.0f64..=255.0) {
            prop_assert!((f64::from(quantize(x)) - x).abs() <= 0.5);
        }

        #[test]
        fn linear_preserves_channel_monotonicity(
            mut ys in proptest::collection::vec(0.0f64..255.0, 2..6),
            i in 0u8..255,
        ) {
            ys.sort_by(f64::total_cmp);
            let n = ys.len();
            let nodes: Vec<(f64, f64)> = ys
                .iter()
                .enumerate()
                .map(|(k, &y)| (255.0 * k as f64 / (n - 1) as f64, y))
                .collect();
            let a = linear_interp(&nodes, f64::from(i));
            let b = linear_interp(&nodes, f64::from(i) + 1.0);
            prop_assert!(a <= b + 1e-9);
        }
    }
}
