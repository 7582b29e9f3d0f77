//! Polar, Cartesian and unrolled-cylinder coordinates.
//!
//! A polar sample `(r, θ)` is placed on the lateral surface of a cylinder of
//! base radius `R` at height `r`. Cutting the cylinder along `θ = 0` and
//! flattening it gives a rectangle of width `2πR` in which the point sits at
//! `(x', y') = (Rθ, r)`. Distances measured in that rectangle are geodesics on
//! the cylinder, except across the cut, which is what period replication
//! (see [`replicate`]) compensates for.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Tolerance used when comparing normalized angles.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

/// Base radius for data on or near the unit circle, giving comparable weight
/// to radial and angular differences.
pub const BALANCED_RADIUS: f64 = 1.0;

/// A base radius large enough that angular differences dominate for
/// unit-scale radii.
pub const ANGLE_DRIVEN_RADIUS: f64 = 10.0;

/// Maps any finite angle onto `[0, 2π)` using a floored modulo.
pub fn normalize_angle(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::NonFinite(theta));
    }
    let mut t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if t >= TAU {
        t = 0.0;
    }
    Ok(t)
}

/// Shortest angular separation between two angles, in `[0, π]`.
pub fn angular_separation(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    d.min(TAU - d)
}

/// A sample in polar coordinates. `theta` is always stored in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    r: f64,
    theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::NonFinite(r));
        }
        if r < 0.0 {
            return Err(Error::NegativeRadius(r));
        }
        Ok(Self {
            r,
            theta: normalize_angle(theta)?,
        })
    }

    /// Builds a point from an angle given in degrees.
    pub fn from_degrees(r: f64, degrees: f64) -> Result<Self> {
        Self::new(r, degrees.to_radians())
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Same radius, angle advanced by `offset` radians.
    pub fn rotated(&self, offset: f64) -> Result<Self> {
        Self::new(self.r, self.theta + offset)
    }

    pub fn to_cartesian(&self) -> CartesianPoint {
        polar_to_cartesian(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

impl CartesianPoint {
    pub fn to_array(self) -> [f64; 2] {
        [self.x, self.y]
    }
}

/// A point on the unrolled cylinder surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    /// Arc-length coordinate, `Rθ` plus any period offset.
    pub x_prime: f64,
    /// Height on the cylinder, equal to the polar radius.
    pub y_prime: f64,
}

impl PlanePoint {
    pub fn to_array(self) -> [f64; 2] {
        [self.x_prime, self.y_prime]
    }
}

/// Base radius and number of additional period copies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionParams {
    radius: f64,
    repetitions: usize,
}

impl ReconstructionParams {
    pub fn new(radius: f64, repetitions: usize) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidBaseRadius(radius));
        }
        Ok(Self {
            radius,
            repetitions,
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Number of additional copies `c`; the plane holds `c + 1` periods.
    pub fn repetitions(&self) -> usize {
        self.repetitions
    }

    pub fn periods(&self) -> usize {
        self.repetitions + 1
    }

    /// Width of one period on the unrolled plane, `2πR`.
    pub fn period_width(&self) -> f64 {
        TAU * self.radius
    }

    pub fn with_repetitions(&self, repetitions: usize) -> Self {
        Self {
            radius: self.radius,
            repetitions,
        }
    }
}

impl Default for ReconstructionParams {
    fn default() -> Self {
        Self {
            radius: BALANCED_RADIUS,
            repetitions: 2,
        }
    }
}

pub fn polar_to_cartesian(p: &PolarPoint) -> CartesianPoint {
    let (s, c) = p.theta.sin_cos();
    CartesianPoint {
        x: p.r * c,
        y: p.r * s,
    }
}

/// Places a polar point on the base period of the unrolled plane.
pub fn reconstruct(p: &PolarPoint, params: &ReconstructionParams) -> PlanePoint {
    PlanePoint {
        x_prime: params.radius * p.theta,
        y_prime: p.r,
    }
}

/// Inverse of [`reconstruct`] for a point in any period.
pub fn unreconstruct(q: &PlanePoint, params: &ReconstructionParams) -> Result<PolarPoint> {
    PolarPoint::new(q.y_prime, q.x_prime / params.radius)
}

/// One copy of an original point on the replicated plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplicatedPoint {
    pub point: PlanePoint,
    /// Index of the original point.
    pub origin: usize,
    /// Which period the copy lives in, `0..=c`.
    pub period: usize,
}

/// Tiles the base period `c` more times to the right.
///
/// Copies are laid out period-major: copy `k` of point `i` sits at index
/// `k * n + i`, so `index % n` recovers the origin.
pub fn replicate(points: &[PlanePoint], params: &ReconstructionParams) -> Vec<ReplicatedPoint> {
    let width = params.period_width();
    (0..params.periods())
        .flat_map(|k| {
            let offset = k as f64 * width;
            points.iter().enumerate().map(move |(i, p)| ReplicatedPoint {
                point: PlanePoint {
                    x_prime: p.x_prime + offset,
                    y_prime: p.y_prime,
                },
                origin: i,
                period: k,
            })
        })
        .collect()
}

/// Reconstructs and replicates in one step.
pub fn replicate_polar(points: &[PolarPoint], params: &ReconstructionParams) -> Vec<ReplicatedPoint> {
    let base: Vec<PlanePoint> = points.iter().map(|p| reconstruct(p, params)).collect();
    replicate(&base, params)
}
