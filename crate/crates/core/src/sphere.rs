//! Geometry of the closed nonnegative half-sphere with the angle metric.
//!
//! Every point handled here is a unit vector with nonnegative coordinates,
//! i.e. a point of the spherical simplex spanned by the basis vertices
//! `w_i = e_i`. All pairwise distances are therefore at most `π/2`, which is
//! what makes the monotonicity arguments used by the walk synthesis valid.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::error::{domain, Result};

/// Tolerance on the unit norm of a [`SpherePoint`].
pub const NORM_TOLERANCE: f64 = 1e-12;
/// Coordinates in `[-CLAMP_TOLERANCE, 0)` are clamped to zero.
pub const CLAMP_TOLERANCE: f64 = 1e-12;
/// Two sphere points closer than this are considered equal.
pub const EQ_TOLERANCE: f64 = 1e-9;

/// An angle in `[0, π]`, measured in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const RIGHT: Angle = Angle(FRAC_PI_2);

    /// Clamps into `[0, π]`. NaN maps to zero.
    pub fn from_radians(radians: f64) -> Self {
        if radians.is_nan() {
            return Angle(0.0);
        }
        Angle(radians.clamp(0.0, std::f64::consts::PI))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rad", self.0)
    }
}

/// A unit vector with nonnegative coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint(Vec<f64>);

impl SpherePoint {
    /// Validates an already-normalized coordinate vector.
    pub fn new(mut coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return domain("sphere point needs at least one coordinate");
        }
        for c in coords.iter_mut() {
            if !c.is_finite() {
                return domain("sphere point has a non-finite coordinate");
            }
            if *c < 0.0 {
                if *c < -CLAMP_TOLERANCE {
                    return domain(format!("sphere point has negative coordinate {c}"));
                }
                *c = 0.0;
            }
        }
        let norm = norm(&coords);
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return domain(format!("sphere point has norm {norm}, expected 1"));
        }
        Ok(SpherePoint(coords))
    }

    /// The vertex `w_axis = e_axis` of the spherical simplex.
    pub fn vertex(dim: usize, axis: usize) -> Self {
        assert!(axis < dim, "vertex axis {axis} out of range for dimension {dim}");
        let mut coords = vec![0.0; dim];
        coords[axis] = 1.0;
        SpherePoint(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        dot(&self.0, &other.0)
    }

    /// Equality up to [`EQ_TOLERANCE`] in the angle metric.
    pub fn approx_eq(&self, other: &SpherePoint) -> bool {
        angle_between(self, other).radians() <= EQ_TOLERANCE
    }

    /// Builds a point from raw coordinates that are known to be close to a
    /// valid sphere point: negatives are clamped and the result renormalized.
    pub(crate) fn from_raw(mut coords: Vec<f64>) -> Self {
        for c in coords.iter_mut() {
            if *c < 0.0 {
                *c = 0.0;
            }
        }
        let n = norm(&coords);
        debug_assert!(n > 0.0);
        for c in coords.iter_mut() {
            *c /= n;
        }
        SpherePoint(coords)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Radial projection `x ↦ x/‖x‖` onto the half-sphere.
pub fn radial_project(x: &[f64]) -> Result<SpherePoint> {
    if x.is_empty() {
        return domain("cannot project an empty vector");
    }
    if x.iter().any(|c| !c.is_finite()) {
        return domain("cannot project a vector with non-finite coordinates");
    }
    if let Some(c) = x.iter().find(|&&c| c < 0.0) {
        return domain(format!("cannot project a vector with negative coordinate {c}"));
    }
    let n = norm(x);
    if n == 0.0 {
        return domain("cannot project the zero vector");
    }
    Ok(SpherePoint(x.iter().map(|c| c / n).collect()))
}

/// The angle at the origin between two sphere points.
pub fn angle_between(a: &SpherePoint, b: &SpherePoint) -> Angle {
    let d = a.dot(b);
    if d > 0.9 {
        // acos loses precision near 1; use the chord instead
        let chord = a.0.iter().zip(&b.0).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
        Angle::from_radians(2.0 * (chord / 2.0).min(1.0).asin())
    } else {
        angle_of_dot(d)
    }
}

pub(crate) fn angle_of_dot(d: f64) -> Angle {
    Angle(d.clamp(-1.0, 1.0).acos())
}

/// Point on the great-circle arc from `a` to `b` at fraction `t` of its length.
pub fn slerp(a: &SpherePoint, b: &SpherePoint, t: f64) -> SpherePoint {
    let t = t.clamp(0.0, 1.0);
    let theta = angle_between(a, b).radians();
    if theta <= 1e-15 {
        return a.clone();
    }
    let s = theta.sin();
    let wa = ((1.0 - t) * theta).sin() / s;
    let wb = (t * theta).sin() / s;
    let coords = a.0.iter().zip(&b.0).map(|(x, y)| wa * x + wb * y).collect();
    SpherePoint::from_raw(coords)
}

/// Side opposite the vertex angle `c` in a spherical triangle whose two
/// other sides, meeting at that vertex, are `aw` and `bw`.
pub fn third_side(aw: Angle, bw: Angle, c: Angle) -> Angle {
    let (a, b, c) = (aw.radians(), bw.radians(), c.radians());
    angle_of_dot(a.cos() * b.cos() + a.sin() * b.sin() * c.cos())
}

/// Upper bound `asin(1/‖x‖)` on the angle swept by the projection of a unit
/// lattice step taken from `x`.
pub fn chord_step_bound(x: &[f64]) -> Result<Angle> {
    let n = norm(x);
    if !(n >= 1.0) {
        return domain(format!("step bound needs a vector of norm >= 1, got {n}"));
    }
    Ok(Angle((1.0 / n).min(1.0).asin()))
}

/// Radius beyond which every unit step moves the projection by at most `angle`.
pub fn csc_radius(angle: f64) -> f64 {
    1.0 / angle.min(FRAC_PI_2).sin()
}

/// Extends the geodesic from the vertex `e_axis` through `q` until it meets the
/// opposite face. Equivalent to zeroing coordinate `axis` and renormalizing.
pub fn psi_collapse(q: &SpherePoint, axis: usize) -> Result<SpherePoint> {
    if axis >= q.dim() {
        return domain(format!("collapse axis {axis} out of range"));
    }
    let mut coords = q.0.clone();
    coords[axis] = 0.0;
    let n = norm(&coords);
    if n <= CLAMP_TOLERANCE {
        return domain("collapse is undefined at its own vertex");
    }
    for c in coords.iter_mut() {
        *c /= n;
    }
    Ok(SpherePoint(coords))
}

/// Outcome of [`monotone_approach_holds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The configuration does not satisfy the hypotheses.
    Inapplicable,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

/// Checks `d(b, a') < d(b, a)` for `a'` on the geodesic from `a` to `w` and
/// `b` strictly closer to `w` than `a'` is.
pub fn monotone_approach_holds(
    a: &SpherePoint,
    a_prime: &SpherePoint,
    w: &SpherePoint,
    b: &SpherePoint,
) -> Verdict {
    let d = |x: &SpherePoint, y: &SpherePoint| angle_between(x, y).radians();
    let (aw, apw, aap) = (d(a, w), d(a_prime, w), d(a, a_prime));
    let on_segment = (aap + apw - aw).abs() <= EQ_TOLERANCE;
    let limit = FRAC_PI_2 + 1e-12;
    let pts = [a, a_prime, w, b];
    let small = pts
        .iter()
        .enumerate()
        .all(|(i, x)| pts[i + 1..].iter().all(|y| d(x, y) <= limit));
    if !on_segment || !small || d(b, w) >= apw {
        return Verdict::Inapplicable;
    }
    if d(b, a_prime) < d(b, a) {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// Angle between `x/‖x‖` and the vertex `e_axis`, computed without forming the
/// projection: `atan2(‖x without axis‖, x_axis)`.
pub(crate) fn angle_to_axis(x: &[f64], axis: usize) -> f64 {
    let perp = x
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != axis)
        .map(|(_, v)| v * v)
        .sum::<f64>()
        .sqrt();
    perp.atan2(x[axis])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, SQRT_2};

    fn sp(c: &[f64]) -> SpherePoint {
        radial_project(c).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert_eq!(sp(&[3.0, 4.0]).coords(), &[0.6, 0.8]);
        assert_eq!(sp(&[0.0, 0.0, 5.0]).coords(), &[0.0, 0.0, 1.0]);
        let h = SQRT_2 / 2.0;
        let p = sp(&[1.0, 1.0]);
        assert!((p.coords()[0] - h).abs() < 1e-15 && (p.coords()[1] - h).abs() < 1e-15);
        assert!(sp(&[7.0, 7.0]).approx_eq(&p));
        assert!(radial_project(&[0.0, 0.0]).is_err());
        assert!(radial_project(&[1.0, -1.0]).is_err());
    }

    #[test]
    fn construction_clamps_tiny_negatives() {
        let p = SpherePoint::new(vec![-1e-13, 1.0]).unwrap();
        assert_eq!(p.coords()[0], 0.0);
        assert!(SpherePoint::new(vec![-1e-6, 1.0]).is_err());
        assert!(SpherePoint::new(vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn angle_examples() {
        let e1 = SpherePoint::vertex(2, 0);
        let e2 = SpherePoint::vertex(2, 1);
        assert!((angle_between(&e1, &e2).radians() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angle_between(&e1, &e1).radians(), 0.0);
        let diag = sp(&[1.0, 1.0]);
        assert!((angle_between(&e1, &diag).radians() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn slerp_examples() {
        let e1 = SpherePoint::vertex(2, 0);
        let e2 = SpherePoint::vertex(2, 1);
        assert!(slerp(&e1, &e2, 0.0).approx_eq(&e1));
        assert!(slerp(&e1, &e2, 0.5).approx_eq(&sp(&[1.0, 1.0])));
        let third = slerp(&e1, &e2, 1.0 / 3.0);
        assert!((angle_between(&e1, &third).radians() - FRAC_PI_6).abs() < 1e-12);
        assert_eq!(slerp(&e1, &e1, 0.7), e1);
    }

    #[test]
    fn third_side_examples() {
        let c = Angle::from_radians(0.7);
        assert!((third_side(Angle::RIGHT, Angle::RIGHT, c).radians() - 0.7).abs() < 1e-12);
        let (a, b) = (Angle::from_radians(1.1), Angle::from_radians(0.4));
        assert!((third_side(a, b, Angle::ZERO).radians() - 0.7).abs() < 1e-12);

        // Embed w = e3, a and b at the given distances with a right angle at w.
        let (aw, bw) = (FRAC_PI_4, std::f64::consts::FRAC_PI_3);
        let a = SpherePoint::new(vec![aw.sin(), 0.0, aw.cos()]).unwrap();
        let b = SpherePoint::new(vec![0.0, bw.sin(), bw.cos()]).unwrap();
        let embedded = angle_between(&a, &b).radians();
        let side = third_side(
            Angle::from_radians(aw),
            Angle::from_radians(bw),
            Angle::from_radians(FRAC_PI_2),
        );
        assert!((side.radians() - embedded).abs() < 1e-12);
        assert!((side.radians() - 1.209).abs() < 1e-3);
    }

    #[test]
    fn chord_bound_examples() {
        assert!((chord_step_bound(&[1.0, 0.0]).unwrap().radians() - FRAC_PI_2).abs() < 1e-15);
        assert!((chord_step_bound(&[2.0, 0.0]).unwrap().radians() - FRAC_PI_6).abs() < 1e-15);
        let actual = angle_between(&sp(&[10.0, 0.0]), &sp(&[10.0, 1.0])).radians();
        let bound = chord_step_bound(&[10.0, 0.0]).unwrap().radians();
        assert!((actual - 0.1f64.atan()).abs() < 1e-15);
        assert!((bound - 0.1f64.asin()).abs() < 1e-15);
        assert!(actual <= bound);
        assert!(chord_step_bound(&[0.5, 0.0]).is_err());
    }

    #[test]
    fn psi_examples() {
        let q = sp(&[1.0, 1.0]);
        assert!(psi_collapse(&q, 1).unwrap().approx_eq(&SpherePoint::vertex(2, 0)));
        let on_face = sp(&[0.3, 0.0, 0.8]);
        assert!(psi_collapse(&on_face, 1).unwrap().approx_eq(&on_face));
        assert!(psi_collapse(&SpherePoint::vertex(3, 2), 2).is_err());
        let r = psi_collapse(&sp(&[0.2, 0.5, 0.9]), 2).unwrap();
        let v = SpherePoint::vertex(3, 2);
        assert!((angle_between(&r, &v).radians() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn monotone_examples() {
        let e1 = SpherePoint::vertex(2, 0);
        let e2 = SpherePoint::vertex(2, 1);
        assert_eq!(monotone_approach_holds(&e1, &e1, &e2, &e2), Verdict::Fails);
        let mid = slerp(&e1, &e2, 0.5);
        assert_eq!(monotone_approach_holds(&e1, &mid, &e2, &e2), Verdict::Holds);
        // b farther from w than a' is
        assert_eq!(monotone_approach_holds(&mid, &mid, &e2, &e1), Verdict::Inapplicable);
    }
}
