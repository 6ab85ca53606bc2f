//! Points and finite subsets of the torus T^d = (S^1)^d.
//!
//! Canonical storage is the angle representation: a point of T^d is a vector
//! of d angles, each normalized to the half-open interval (−π, π]. The
//! unit-complex view exp(iθ) is derived on demand. The torus metric is
//!
//! ```text
//! d(z, w) = min over θ ∈ (2πZ)^d of ‖arg(z) − arg(w) + θ‖
//! ```
//!
//! which reduces per component to the shorter of the two arcs, so evaluation
//! is closed-form. Hausdorff distance between finite sets is exact O(|A|·|B|).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

pub const TAU: f64 = 2.0 * PI;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point set must be nonempty")]
    EmptySet,
    #[error("angle vector must have dimension >= 1")]
    ZeroDimension,
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),
}

/// Normalize an angle to (−π, π]. The tie x ≡ −π (mod 2π) maps to +π.
pub fn normalize_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU); // [0, 2π)
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// A vector of d angles, each in (−π, π].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleVector(Vec<f64>);

impl AngleVector {
    /// Builds an angle vector, normalizing every component into (−π, π].
    pub fn new(angles: Vec<f64>) -> Result<Self, GeomError> {
        if angles.is_empty() {
            return Err(GeomError::ZeroDimension);
        }
        if let Some(&bad) = angles.iter().find(|a| !a.is_finite()) {
            return Err(GeomError::NonFiniteAngle(bad));
        }
        Ok(Self(angles.into_iter().map(normalize_angle).collect()))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// A point of T^d, stored by its argument vector in (−π, π]^d.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    angles: AngleVector,
}

impl TorusPoint {
    pub fn from_angles(angles: Vec<f64>) -> Result<Self, GeomError> {
        Ok(Self {
            angles: AngleVector::new(angles)?,
        })
    }

    /// One-dimensional convenience constructor.
    pub fn circle(theta: f64) -> Self {
        Self::from_angles(vec![theta]).expect("single finite angle")
    }

    /// The identity element (1, …, 1) of T^d.
    pub fn identity(d: usize) -> Self {
        Self::from_angles(vec![0.0; d]).expect("d >= 1")
    }

    /// Builds a point from its unit-complex components.
    pub fn from_complex(z: &[Complex64]) -> Result<Self, GeomError> {
        Self::from_angles(z.iter().map(|c| c.arg()).collect())
    }

    pub fn dim(&self) -> usize {
        self.angles.dim()
    }

    /// The componentwise argument in (−π, π]^d; exact, not tolerance-based.
    pub fn principal_arg(&self) -> &AngleVector {
        &self.angles
    }

    pub fn angles(&self) -> &[f64] {
        self.angles.as_slice()
    }

    /// The unit-complex view (exp(iθ_1), …, exp(iθ_d)).
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.angles
            .as_slice()
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect()
    }

    /// Componentwise product a · b = (a_1 b_1, …, a_d b_d).
    pub fn mul(&self, other: &TorusPoint) -> Result<TorusPoint, GeomError> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch(self.dim(), other.dim()));
        }
        TorusPoint::from_angles(
            self.angles()
                .iter()
                .zip(other.angles())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise inverse (a_1^{-1}, …, a_d^{-1}).
    pub fn inv(&self) -> TorusPoint {
        TorusPoint::from_angles(self.angles().iter().map(|a| -a).collect()).expect("same dim")
    }

    /// Torus distance: per component the minimizing 2πZ shift is in
    /// {−2π, 0, 2π}, so the metric is the Euclidean norm of the
    /// componentwise shorter-arc lengths.
    pub fn dist(&self, other: &TorusPoint) -> Result<f64, GeomError> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch(self.dim(), other.dim()));
        }
        let sum: f64 = self
            .angles()
            .iter()
            .zip(other.angles())
            .map(|(a, b)| {
                let delta = (a - b).abs();
                let arc = delta.min(TAU - delta);
                arc * arc
            })
            .sum();
        Ok(sum.sqrt())
    }
}

/// Shorter-arc distance between two angles on one circle.
pub fn circle_dist(a: f64, b: f64) -> f64 {
    let delta = (normalize_angle(a) - normalize_angle(b)).abs();
    delta.min(TAU - delta)
}

/// A nonempty finite subset of T^d.
#[derive(Debug, Clone, PartialEq)]
pub struct FinitePointSet {
    points: Vec<TorusPoint>,
    dim: usize,
}

impl FinitePointSet {
    pub fn new(points: Vec<TorusPoint>) -> Result<Self, GeomError> {
        let dim = points.first().ok_or(GeomError::EmptySet)?.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(GeomError::DimensionMismatch(dim, p.dim()));
        }
        Ok(Self { points, dim })
    }

    pub fn from_angle_rows(rows: Vec<Vec<f64>>) -> Result<Self, GeomError> {
        Self::new(
            rows.into_iter()
                .map(TorusPoint::from_angles)
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn points(&self) -> &[TorusPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &TorusPoint {
        &self.points[i]
    }

    /// The translated set a · E.
    pub fn rotate(&self, a: &TorusPoint) -> Result<FinitePointSet, GeomError> {
        Ok(FinitePointSet {
            points: self
                .points
                .iter()
                .map(|p| a.mul(p))
                .collect::<Result<_, _>>()?,
            dim: self.dim,
        })
    }

    /// Distance from a single point to this set.
    pub fn dist_to(&self, z: &TorusPoint) -> Result<f64, GeomError> {
        let mut best = f64::INFINITY;
        for p in &self.points {
            best = best.min(z.dist(p)?);
        }
        Ok(best)
    }
}

/// Hausdorff distance between finite subsets of T^d: the larger of the two
/// directed distances, exact for finite sets.
pub fn hausdorff(a: &FinitePointSet, b: &FinitePointSet) -> Result<f64, GeomError> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}

fn directed_hausdorff(a: &FinitePointSet, b: &FinitePointSet) -> Result<f64, GeomError> {
    let mut worst: f64 = 0.0;
    for p in a.points() {
        worst = worst.max(b.dist_to(p)?);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn normalize_half_open_convention() {
        // −π maps to +π, never to −π.
        assert_eq!(normalize_angle(-PI), PI);
        assert_eq!(normalize_angle(PI), PI);
        assert_eq!(normalize_angle(0.0), 0.0);
        assert!((normalize_angle(3.0 * PI / 2.0) - (-PI / 2.0)).abs() < EPS);
        assert!((normalize_angle(-3.0 * PI) - PI).abs() < EPS);
    }

    #[test]
    fn principal_arg_identity_and_antipode() {
        let one = TorusPoint::from_complex(&[Complex64::new(1.0, 0.0)]).unwrap();
        assert_eq!(one.angles(), &[0.0]);
        let minus_one = TorusPoint::from_complex(&[Complex64::new(-1.0, 0.0)]).unwrap();
        assert_eq!(minus_one.angles(), &[PI]);
    }

    #[test]
    fn arg_reduces_mod_two_pi() {
        let z = TorusPoint::from_angles(vec![3.0 * PI / 2.0]).unwrap();
        assert!((z.angles()[0] + PI / 2.0).abs() < EPS);
    }

    #[test]
    fn complex_view_round_trips() {
        let p = TorusPoint::from_angles(vec![2.9, -1.3, PI]).unwrap();
        let z = p.to_complex();
        for c in &z {
            assert!((c.norm() - 1.0).abs() < EPS);
        }
        let back = TorusPoint::from_complex(&z).unwrap();
        assert!(p.dist(&back).unwrap() < EPS);
    }

    #[test]
    fn mul_and_inv() {
        let i = TorusPoint::circle(PI / 2.0);
        let minus_i = TorusPoint::circle(-PI / 2.0);
        let prod = i.mul(&minus_i).unwrap();
        assert!((prod.angles()[0]).abs() < EPS);

        let p = TorusPoint::from_angles(vec![PI / 3.0, -PI / 4.0]).unwrap();
        let q = p.inv();
        assert!((q.angles()[0] + PI / 3.0).abs() < EPS);
        assert!((q.angles()[1] - PI / 4.0).abs() < EPS);
        let e = p.mul(&p.inv()).unwrap();
        assert!(e.dist(&TorusPoint::identity(2)).unwrap() < EPS);
    }

    #[test]
    fn mul_wraps_through_cut() {
        // 3π/4 + π/2 = 5π/4 ≡ −3π/4
        let a = TorusPoint::circle(3.0 * PI / 4.0);
        let b = TorusPoint::circle(PI / 2.0);
        let c = a.mul(&b).unwrap();
        assert!((c.angles()[0] + 3.0 * PI / 4.0).abs() < EPS);
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = TorusPoint::circle(0.3);
        let b = TorusPoint::from_angles(vec![0.1, 0.2]).unwrap();
        assert_eq!(a.mul(&b), Err(GeomError::DimensionMismatch(1, 2)));
    }

    #[test]
    fn dist_antipodal_and_wrap() {
        let one = TorusPoint::circle(0.0);
        let minus_one = TorusPoint::circle(PI);
        assert!((one.dist(&minus_one).unwrap() - PI).abs() < EPS);

        // T^2: angles (3.0, 0) vs (−3.0, 0): shorter arc is 2π − 6.0.
        let z = TorusPoint::from_angles(vec![3.0, 0.0]).unwrap();
        let w = TorusPoint::from_angles(vec![-3.0, 0.0]).unwrap();
        assert!((z.dist(&w).unwrap() - (TAU - 6.0)).abs() < EPS);
    }

    #[test]
    fn dist_bounded_by_pi_sqrt_d() {
        let z = TorusPoint::from_angles(vec![PI, PI, PI]).unwrap();
        let w = TorusPoint::from_angles(vec![0.0, 0.0, 0.0]).unwrap();
        let bound = PI * 3f64.sqrt();
        assert!(z.dist(&w).unwrap() <= bound + EPS);
    }

    #[test]
    fn hausdorff_directed_asymmetry() {
        // A = {1}, B = {1, i}: directed distances are 0 and π/2.
        let a = FinitePointSet::from_angle_rows(vec![vec![0.0]]).unwrap();
        let b = FinitePointSet::from_angle_rows(vec![vec![0.0], vec![PI / 2.0]]).unwrap();
        assert!((hausdorff(&a, &b).unwrap() - PI / 2.0).abs() < EPS);
        assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn hausdorff_rejects_dimension_mismatch() {
        let a = FinitePointSet::from_angle_rows(vec![vec![0.0]]).unwrap();
        let b = FinitePointSet::from_angle_rows(vec![vec![0.0, 0.0]]).unwrap();
        assert!(hausdorff(&a, &b).is_err());
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(
            FinitePointSet::new(vec![]).unwrap_err(),
            GeomError::EmptySet
        );
    }
}
