use std::f64::consts::TAU;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::cluster::Labeling;
use crate::error::{Error, Result};
use crate::geometry::PolarPoint;

/// Parameters for seeded class-structured polar data.
///
/// Each class draws its angles from a wrapped normal around its center and
/// its radii from a normal around `base_radius` (clamped at zero).
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n_points: usize,
    pub n_classes: usize,
    pub class_centers: Vec<f64>,
    pub angular_spread: f64,
    pub radial_spread: f64,
    pub base_radius: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    /// Classes spread evenly around the circle starting at angle zero.
    pub fn evenly_spaced(n_points: usize, n_classes: usize, angular_spread: f64, seed: u64) -> Self {
        Self {
            n_points,
            n_classes,
            class_centers: evenly_spaced_centers(n_classes, 0.0),
            angular_spread,
            radial_spread: 0.0,
            base_radius: 1.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_points == 0 || self.n_classes == 0 {
            return Err(Error::InvalidParameter(
                "n_points and n_classes must be positive".into(),
            ));
        }
        if self.n_classes > self.n_points {
            return Err(Error::InvalidParameter(format!(
                "{} classes cannot be filled by {} points",
                self.n_classes, self.n_points
            )));
        }
        if self.class_centers.len() != self.n_classes {
            return Err(Error::InvalidParameter(format!(
                "expected {} class centers, got {}",
                self.n_classes,
                self.class_centers.len()
            )));
        }
        if let Some(c) = self.class_centers.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(*c));
        }
        let spreads_ok = [self.angular_spread, self.radial_spread]
            .iter()
            .all(|s| s.is_finite() && *s >= 0.0);
        if !spreads_ok {
            return Err(Error::InvalidParameter("spreads must be finite and non-negative".into()));
        }
        if !(self.base_radius.is_finite() && self.base_radius > 0.0) {
            return Err(Error::InvalidBaseRadius(self.base_radius));
        }
        Ok(())
    }

    /// Class sizes: the first `n % k` classes get one extra point.
    pub fn class_sizes(&self) -> Vec<usize> {
        let base = self.n_points / self.n_classes;
        let extra = self.n_points % self.n_classes;
        (0..self.n_classes).map(|c| base + usize::from(c < extra)).collect()
    }
}

pub fn evenly_spaced_centers(k: usize, offset: f64) -> Vec<f64> {
    (0..k)
        .map(|i| (offset + i as f64 * TAU / k as f64).rem_euclid(TAU))
        .collect()
}

/// Draws points class by class; the ground truth labels follow the class
/// order of `class_centers`.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<(Vec<PolarPoint>, Labeling)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut points = Vec::with_capacity(spec.n_points);
    let mut labels = Vec::with_capacity(spec.n_points);
    for (class, (&center, size)) in spec.class_centers.iter().zip(spec.class_sizes()).enumerate() {
        for _ in 0..size {
            let za: f64 = StandardNormal.sample(&mut rng);
            let zr: f64 = StandardNormal.sample(&mut rng);
            let r = (spec.base_radius + spec.radial_spread * zr).max(0.0);
            points.push(PolarPoint::new(r, center + spec.angular_spread * za)?);
            labels.push(class as i64);
        }
    }
    Ok((points, Labeling::new(labels)?))
}
