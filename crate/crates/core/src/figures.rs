//! Curve data for the projection figures.
//!
//! Every row carrying lifted components is re-checked for `â² = 1` before it
//! is returned.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stereo::{self, PlanePoint};

/// Tolerance of the `â² = 1` post-check on emitted rows.
pub const ROW_CHECK_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureKind {
    /// Great-circle cross-section of the sphere lift, along e1.
    StereoSphere,
    /// Hyperbola cross-section of the hyperboloid lift, along γ1.
    StereoHyper,
    /// Arc orthogonal to the unit circle and its lifted geodesic.
    PoincareGeodesic,
}

impl FigureKind {
    pub const ALL: [FigureKind; 3] = [
        FigureKind::StereoSphere,
        FigureKind::StereoHyper,
        FigureKind::PoincareGeodesic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::StereoSphere => "stereo-sphere",
            FigureKind::StereoHyper => "stereo-hyper",
            FigureKind::PoincareGeodesic => "poincare-geodesic",
        }
    }

    /// Sign of the â² check: +1 on the sphere, the Minkowski norm otherwise.
    fn metric(self) -> [f64; 4] {
        match self {
            FigureKind::StereoSphere => [1.0, 1.0, 1.0, 1.0],
            _ => [1.0, -1.0, -1.0, -1.0],
        }
    }
}

impl fmt::Display for FigureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::DomainViolation(format!("unknown figure `{s}`")))
    }
}

/// Sphere cross-section parameter range.
pub const SPHERE_SPAN: f64 = 3.0;
/// Hyperboloid cross-section stays strictly inside the unit ball.
pub const HYPER_SPAN: f64 = 0.95;
/// Center and radius of the sample geodesic arc; `c² = 1 + r²` makes it
/// meet the unit circle at right angles.
pub const GEODESIC_CENTER: f64 = 1.25;
pub const GEODESIC_RADIUS: f64 = 0.75;
/// Largest hyperbolic arc-length parameter used for interior geodesic rows.
pub const GEODESIC_SPAN: f64 = 4.0;

#[derive(Clone, Debug, PartialEq)]
pub struct FigureData {
    pub kind: FigureKind,
    pub columns: Vec<&'static str>,
    /// `None` marks a cell with no value, e.g. the lift of a boundary point.
    pub rows: Vec<Vec<Option<f64>>>,
}

impl FigureData {
    fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Largest `|â² − 1|` over rows that carry lifted components.
    pub fn max_unit_residual(&self) -> f64 {
        let idx: Vec<usize> = ["a0", "a1", "a2", "a3"]
            .iter()
            .map(|c| self.column(c).expect("lift columns present"))
            .collect();
        let metric = self.kind.metric();
        self.rows
            .iter()
            .filter_map(|row| {
                let a: Option<Vec<f64>> = idx.iter().map(|&i| row[i]).collect();
                a.map(|a| {
                    let sq: f64 = a.iter().zip(metric).map(|(v, g)| g * v * v).sum();
                    (sq - 1.0).abs()
                })
            })
            .fold(0.0, f64::max)
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |k| if k + 1 == n { hi } else { lo + step * k as f64 })
}

/// Samples the named figure at `samples ≥ 2` parameter values.
pub fn generate(kind: FigureKind, samples: usize) -> Result<FigureData> {
    if samples < 2 {
        return Err(Error::DomainViolation(format!(
            "figure needs at least 2 samples, got {samples}"
        )));
    }
    let data = match kind {
        FigureKind::StereoSphere => {
            let rows = linspace(-SPHERE_SPAN, SPHERE_SPAN, samples)
                .map(|t| {
                    let x = PlanePoint::new([t, 0.0, 0.0]);
                    let a = stereo::lift_sphere(&x).components();
                    let theta = stereo::sphere_rotor(&x).theta;
                    let mut row = vec![Some(t), Some(t), Some(0.0), Some(0.0)];
                    row.extend(a.iter().map(|v| Some(*v)));
                    row.push(Some(theta));
                    row
                })
                .collect();
            FigureData {
                kind,
                columns: vec!["t", "x1", "x2", "x3", "a0", "a1", "a2", "a3", "theta"],
                rows,
            }
        }
        FigureKind::StereoHyper => {
            let mut rows = Vec::with_capacity(samples);
            for t in linspace(-HYPER_SPAN, HYPER_SPAN, samples) {
                let x = PlanePoint::new([t, 0.0, 0.0]);
                let a = stereo::lift_hyper(&x)?.components();
                let phi = stereo::hyper_boost(&x)?.phi;
                let mut row = vec![Some(t), Some(t), Some(0.0), Some(0.0)];
                row.extend(a.iter().map(|v| Some(*v)));
                row.push(Some(phi));
                rows.push(row);
            }
            FigureData {
                kind,
                columns: vec!["t", "x1", "x2", "x3", "a0", "a1", "a2", "a3", "phi"],
                rows,
            }
        }
        FigureKind::PoincareGeodesic => {
            // Interior rows are spaced evenly in hyperbolic arc length s along
            // â(s) = cosh s · â_mid + sinh s · γ2, where â_mid lifts the arc's
            // innermost point (c - r, 0). Bounding |s| keeps â small enough for
            // the unit check to be meaningful in double precision.
            let mid = stereo::lift_hyper(&PlanePoint::new([GEODESIC_CENTER - GEODESIC_RADIUS, 0.0, 0.0]))?
                .components();
            let mut rows = Vec::with_capacity(samples);
            for k in 0..samples {
                let (x1, x2) = if k == 0 || k + 1 == samples {
                    let sign = if k == 0 { 1.0 } else { -1.0 };
                    (1.0 / GEODESIC_CENTER, sign * GEODESIC_RADIUS / GEODESIC_CENTER)
                } else {
                    let interior = samples - 2;
                    let s = if interior == 1 {
                        0.0
                    } else {
                        GEODESIC_SPAN * (1.0 - 2.0 * (k - 1) as f64 / (interior - 1) as f64)
                    };
                    let (ch, sh) = (s.cosh(), s.sinh());
                    let a = [mid[0] * ch, mid[1] * ch, sh];
                    (a[1] / (1.0 + a[0]), a[2] / (1.0 + a[0]))
                };
                let psi = x2.atan2(x1 - GEODESIC_CENTER).rem_euclid(std::f64::consts::TAU);
                let x = PlanePoint::new([x1, x2, 0.0]);
                let mut row = vec![Some(psi), Some(x1), Some(x2), Some(0.0)];
                match stereo::lift_hyper(&x) {
                    Ok(a) => row.extend(a.components().iter().map(|v| Some(*v))),
                    Err(_) => row.extend([None; 4]),
                }
                rows.push(row);
            }
            FigureData {
                kind,
                columns: vec!["psi", "x1", "x2", "x3", "a0", "a1", "a2", "a3"],
                rows,
            }
        }
    };
    let residual = data.max_unit_residual();
    if residual > ROW_CHECK_TOL {
        return Err(Error::DomainViolation(format!(
            "{kind} rows fail the unit check: max |â²-1| = {residual:e}"
        )));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_middle_row_is_the_pole() {
        let d = generate(FigureKind::StereoSphere, 3).unwrap();
        let mid = &d.rows[1];
        assert_eq!(mid[0], Some(0.0));
        assert_eq!(&mid[4..8], &[Some(1.0), Some(0.0), Some(0.0), Some(0.0)]);
    }

    #[test]
    fn geodesic_endpoints_on_unit_circle() {
        let d = generate(FigureKind::PoincareGeodesic, 11).unwrap();
        for row in [&d.rows[0], &d.rows[10]] {
            let (x1, x2) = (row[1].unwrap(), row[2].unwrap());
            assert!((x1 * x1 + x2 * x2 - 1.0).abs() < 1e-10);
            assert!(row[4].is_none());
        }
        assert!(d.rows[5][4].is_some());
    }

    #[test]
    fn rejects_single_sample() {
        assert!(generate(FigureKind::StereoHyper, 1).is_err());
    }
}
