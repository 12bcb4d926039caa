//! Grayscale-safety checks for a materialized palette.
//!
//! A palette reproduces well in grayscale when its luminance moves in one
//! direction along the index axis. Normalized luminance should do the same;
//! each local minimum of it reads as a dark band.

use std::fmt;

use crate::color::{dynamic_range, hue_range, Palette256};

/// Default tolerance for quantized palettes. Rounding channels to integers
/// moves luminance by at most 0.5, so genuine reversals stay below 1.
pub const DEFAULT_EPSILON: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
    Neither,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
            Direction::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    LuminanceDecrease,
    NormalizedLuminanceDecrease,
    DarkArea,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::LuminanceDecrease => "luminance_decrease",
            ViolationKind::NormalizedLuminanceDecrease => "normalized_luminance_decrease",
            ViolationKind::DarkArea => "dark_area",
        })
    }
}

/// A single defect. For decreases `index` is the left entry of the offending
/// pair `(index, index + 1)`; for dark areas it is the first index of the
/// minimum run. `magnitude` is always positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
    pub magnitude: f64,
}

/// Inclusive range of palette indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..={}", self.start, self.end)
        }
    }
}

/// Endpoint-based direction; ties count as increasing.
fn dominant_direction(seq: &[f64]) -> Direction {
    if seq[seq.len() - 1] >= seq[0] {
        Direction::Increasing
    } else {
        Direction::Decreasing
    }
}

fn against_direction(seq: &[f64], epsilon: f64, kind: ViolationKind) -> Vec<Violation> {
    let sign = match dominant_direction(seq) {
        Direction::Decreasing => -1.0,
        _ => 1.0,
    };
    seq.windows(2)
        .enumerate()
        .filter_map(|(index, w)| {
            let back = sign * (w[0] - w[1]);
            (back > epsilon).then_some(Violation {
                index,
                kind,
                magnitude: back,
            })
        })
        .collect()
}

/// Adjacent pairs whose luminance steps against the palette's overall
/// direction by more than `epsilon`.
pub fn check_monotone_luminance(p: &Palette256, epsilon: f64) -> Vec<Violation> {
    against_direction(&p.luminances(), epsilon, ViolationKind::LuminanceDecrease)
}

/// As [`check_monotone_luminance`], over normalized luminance.
pub fn check_monotone_normalized_luminance(p: &Palette256, epsilon: f64) -> Vec<Violation> {
    against_direction(
        &p.normalized_luminances(),
        epsilon,
        ViolationKind::NormalizedLuminanceDecrease,
    )
}

/// Strict interior local minima of `seq`. A run of equal values lower than
/// both neighboring runs is one minimum. Returns the run and its depth (the
/// smaller of the two rises out of it).
fn local_minima(seq: &[f64]) -> Vec<(IndexRange, f64)> {
    let mut runs: Vec<(IndexRange, f64)> = Vec::new();
    for (i, &v) in seq.iter().enumerate() {
        match runs.last_mut() {
            Some((r, last)) if *last == v => r.end = i,
            _ => runs.push((IndexRange { start: i, end: i }, v)),
        }
    }
    runs.windows(3)
        .filter_map(|w| {
            let (left, (range, mid), right) = (w[0].1, w[1], w[2].1);
            (mid < left && mid < right).then(|| (range, (left - mid).min(right - mid)))
        })
        .collect()
}

/// Index ranges where normalized luminance has a local minimum.
pub fn find_dark_areas(p: &Palette256) -> Vec<IndexRange> {
    local_minima(&p.normalized_luminances())
        .into_iter()
        .map(|(r, _)| r)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// The luminance direction when luminance is monotone, otherwise `Neither`.
    pub direction: Direction,
    pub luminance_monotone: bool,
    pub normalized_luminance_monotone: bool,
    pub violations: Vec<Violation>,
    pub dynamic_range: f64,
    pub hue_range: f64,
    pub dark_areas: Vec<IndexRange>,
    pub epsilon: f64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.luminance_monotone && self.normalized_luminance_monotone
    }

    pub fn violations_of(&self, kind: ViolationKind) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.kind == kind)
    }
}

/// Run every check and collect the summary metrics.
///
/// Dark areas are listed regardless of depth; they do not affect the
/// monotone verdicts.
pub fn validate(p: &Palette256, epsilon: f64) -> ValidationReport {
    let lum = check_monotone_luminance(p, epsilon);
    let norm = check_monotone_normalized_luminance(p, epsilon);
    let minima = local_minima(&p.normalized_luminances());

    let luminance_monotone = lum.is_empty();
    let direction = if luminance_monotone {
        dominant_direction(&p.luminances())
    } else {
        Direction::Neither
    };

    let dark: Vec<Violation> = minima
        .iter()
        .map(|&(r, depth)| Violation {
            index: r.start,
            kind: ViolationKind::DarkArea,
            magnitude: depth,
        })
        .collect();

    ValidationReport {
        direction,
        luminance_monotone,
        normalized_luminance_monotone: norm.is_empty(),
        violations: lum.into_iter().chain(norm).chain(dark).collect(),
        dynamic_range: dynamic_range(p),
        hue_range: hue_range(p),
        dark_areas: minima.into_iter().map(|(r, _)| r).collect(),
        epsilon,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Rgb8;
    use proptest::prelude::*;

    #[test]
    fn grayscale_is_clean() {
        let g = Palette256::grayscale();
        assert!(check_monotone_luminance(&g, 0.0).is_empty());
        assert!(check_monotone_normalized_luminance(&g, 0.0).is_empty());
        assert!(find_dark_areas(&g).is_empty());
        let r = validate(&g, 0.0);
        assert!(r.is_valid());
        assert_eq!(r.direction, Direction::Increasing);
        assert!((r.dynamic_range - 1.0).abs() < 1e-12);
        assert_eq!(r.hue_range, 0.0);
    }

    #[test]
    fn constant_palette_has_no_steps() {
        let k = Palette256::constant(Rgb8::new(40, 90, 10));
        assert!(check_monotone_normalized_luminance(&k, 0.0).is_empty());
        assert!(find_dark_areas(&k).is_empty());
        assert_eq!(validate(&k, 0.0).direction, Direction::Increasing);
    }

    #[test]
    fn reversed_grayscale_is_decreasing() {
        let r = validate(&Palette256::grayscale().reversed(), 0.0);
        assert!(r.is_valid());
        assert_eq!(r.direction, Direction::Decreasing);
    }

    #[test]
    fn v_shape_has_one_minimum_at_black() {
        let v = Palette256::from_fn(|i| Rgb8::gray((i as i32 - 128).unsigned_abs().min(255) as u8));
        assert_eq!(
            find_dark_areas(&v),
            vec![IndexRange {
                start: 128,
                end: 128
            }]
        );
        let r = validate(&v, 1.0);
        assert!(!r.luminance_monotone);
        assert_eq!(r.direction, Direction::Neither);
    }

    #[test]
    fn plateau_minimum_counts_once() {
        let seq = [5.0, 3.0, 1.0, 1.0, 1.0, 2.0, 0.5, 0.5, 4.0, 4.0];
        let mins = local_minima(&seq);
        assert_eq!(
            mins,
            vec![
                (IndexRange { start: 2, end: 4 }, 1.0),
                (IndexRange { start: 6, end: 7 }, 1.5)
            ]
        );
        // a plateau touching the ends is not interior
        assert!(local_minima(&[1.0, 1.0, 2.0]).is_empty());
        assert!(local_minima(&[2.0, 1.0, 1.0]).is_empty());
    }

    #[test]
    fn epsilon_filters_small_steps() {
        // blue-to-red swap: luminance drops by 0.299 - 0.114
        let q = Palette256::from_fn(|i| match i {
            100 => Rgb8::new(100, 100, 99),
            101 => Rgb8::new(99, 100, 100),
            _ => Rgb8::gray(i as u8),
        });
        let v = check_monotone_luminance(&q, 0.0);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].index, 100);
        assert!((v[0].magnitude - (0.299 - 0.114)).abs() < 1e-9);
        assert!(check_monotone_luminance(&q, 1.0).is_empty());
    }

    fn palette() -> impl Strategy<Value = Palette256> {
        proptest::collection::vec(any::<[u8; 3]>(), 256).prop_map(|v| {
            Palette256::try_from(v.into_iter().map(Rgb8::from).collect::<Vec<_>>()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn reversal_mirrors_violations(p in palette(), eps in 0.0f64..3.0) {
            let fwd = check_monotone_luminance(&p, eps);
            let rev = check_monotone_luminance(&p.reversed(), eps);
            // a tie at the endpoints counts as increasing both ways, which
            // flips the reference direction; skip that corner
            let l = p.luminances();
            prop_assume!(l[0] != l[255]);
            prop_assert_eq!(fwd.len(), rev.len());
            for (a, b) in fwd.iter().zip(rev.iter().rev()) {
                prop_assert_eq!(a.index, 254 - b.index);
                prop_assert!((a.magnitude - b.magnitude).abs() < 1e-9);
            }
            let (rf, rr) = (validate(&p, eps), validate(&p.reversed(), eps));
            prop_assert_eq!(rf.luminance_monotone, rr.luminance_monotone);
            if rf.luminance_monotone {
                prop_assert_ne!(rf.direction, rr.direction);
            }
        }

        #[test]
        fn violations_are_positive(p in palette(), eps in 0.0f64..2.0) {
            let r = validate(&p, eps);
            prop_assert!(r.violations.iter().all(|v| v.magnitude > 0.0));
            prop_assert!((0.0..=1.0).contains(&r.dynamic_range));
            prop_assert_eq!(r.luminance_monotone, r.violations_of(ViolationKind::LuminanceDecrease).next().is_none());
            for v in r.violations_of(ViolationKind::DarkArea) {
                prop_assert!((1..=254).contains(&v.index));
            }
        }

        #[test]
        fn monotone_normalized_means_no_dark_areas(mut vals in proptest::collection::vec(any::<u8>(), 256)) {
            vals.sort_unstable();
            let p = Palette256::from_fn(|i| Rgb8::gray(vals[i]));
            prop_assert!(check_monotone_normalized_luminance(&p, 0.0).is_empty());
            prop_assert!(find_dark_areas(&p).is_empty());
        }
    }
}
