//! Walks that never leave a small ball around their starting direction.
//!
//! With two active axes the projection moves along an arc, and a greedy
//! choice of step keeps it within one step length of the start. With more
//! axes one axis `v` is set aside: a stationary walk on the remaining axes
//! fixes the collapsed direction, and copies of `e_v` are inserted whenever
//! the distance to the vertex `e_v` drifts by more than a third of the budget.

use crate::error::{domain, Error, Result};
use crate::sphere::{angle_to_axis, csc_radius};

use super::lattice::{copies_toward, LatticePoint, LatticeWalk};

/// Norm beyond which a stationary walk with tolerance `eps` exists in
/// dimension `dim`. Two axes: every step must move the projection by at most
/// `eps/2`. More axes: twice the larger of the sub-walk radius for `eps/3` and
/// the radius making a single step shorter than `eps/3`.
pub fn stationary_radius(eps: f64, dim: usize) -> f64 {
    match dim {
        0 | 1 => 1.0,
        2 => csc_radius(eps / 2.0),
        _ => 2.0 * stationary_radius(eps / 3.0, dim - 1).max(csc_radius(eps / 3.0)),
    }
}

fn restricted_norm(pos: &[f64], axes: &[usize]) -> f64 {
    axes.iter().map(|&i| pos[i] * pos[i]).sum::<f64>().sqrt()
}

/// Lazily generated stationary walk; every call to [`StationaryWalker::step`]
/// advances the position by one unit step.
#[derive(Debug, Clone)]
pub struct StationaryWalker {
    axes: Vec<usize>,
    eps: f64,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    /// Only one axis left; nothing else can be done.
    Single,
    /// Two axes: hold the angle `atan2(x_b, x_a)` near its start value.
    Arc { start_angle: f64 },
    Nested {
        apex: usize,
        start_dist: f64,
        pending: u128,
        child: Box<StationaryWalker>,
    },
}

impl StationaryWalker {
    /// Stationary walk from `start` over all axes with tolerance `eps`.
    pub fn new(start: &LatticePoint, eps: f64) -> Result<Self> {
        if !(eps > 0.0) {
            return domain("stationary tolerance must be positive");
        }
        if !start.is_nonnegative() {
            return domain("stationary walk needs nonnegative coordinates");
        }
        let dim = start.dim();
        let norm = start.norm();
        let radius = stationary_radius(eps, dim);
        if !(norm > radius) {
            return domain(format!(
                "start norm {norm} is below the stationary radius {radius} for tolerance {eps}"
            ));
        }
        Self::build(&start.to_f64(), (0..dim).collect(), eps)
    }

    fn build(pos: &[f64], axes: Vec<usize>, eps: f64) -> Result<Self> {
        let kind = match axes.len() {
            0 => return Err(Error::Internal("stationary walk without axes".into())),
            1 => Kind::Single,
            2 => Kind::Arc { start_angle: pos[axes[1]].atan2(pos[axes[0]]) },
            _ => {
                // set aside the smallest coordinate (last one on ties)
                let apex = *axes
                    .iter()
                    .rev()
                    .min_by(|&&a, &&b| pos[a].partial_cmp(&pos[b]).unwrap())
                    .expect("nonempty");
                let rest: Vec<usize> = axes.iter().copied().filter(|&i| i != apex).collect();
                let needed = stationary_radius(eps / 3.0, rest.len());
                let have = restricted_norm(pos, &rest);
                if !(have > needed) {
                    return Err(Error::Internal(format!(
                        "collapsed norm {have} below sub-walk radius {needed}"
                    )));
                }
                let child = Box::new(Self::build(pos, rest, eps / 3.0)?);
                let sub = Self::sub_point(pos, &axes);
                Kind::Nested { apex, start_dist: angle_to_axis(&sub, apex), pending: 0, child }
            }
        };
        Ok(StationaryWalker { axes, eps, kind })
    }

    /// Coordinates restricted to `axes` (other entries zeroed).
    fn sub_point(pos: &[f64], axes: &[usize]) -> Vec<f64> {
        let mut v = vec![0.0; pos.len()];
        for &i in axes {
            v[i] = pos[i];
        }
        v
    }

    pub fn tolerance(&self) -> f64 {
        self.eps
    }

    /// Takes one step from `pos`, updating it, and returns the axis used.
    pub fn step(&mut self, pos: &mut LatticePoint) -> Result<usize> {
        let axes = &self.axes;
        match &mut self.kind {
            Kind::Single => {
                let a = axes[0];
                pos.advance(a, 1)?;
                Ok(a)
            }
            Kind::Arc { start_angle } => {
                let (a, b) = (axes[0], axes[1]);
                let c = pos.coords();
                let angle = (c[b] as f64).atan2(c[a] as f64);
                let axis = if angle > *start_angle { a } else { b };
                pos.advance(axis, 1)?;
                Ok(axis)
            }
            Kind::Nested { apex, start_dist, pending, child } => {
                if *pending > 0 {
                    *pending -= 1;
                    pos.advance(*apex, 1)?;
                    return Ok(*apex);
                }
                let axis = child.step(pos)?;
                let sub = Self::sub_point(&pos.to_f64(), axes);
                let d = angle_to_axis(&sub, *apex);
                if d - *start_dist > self.eps / 3.0 {
                    *pending = min_apex_copies(&sub, *apex, *start_dist);
                }
                Ok(axis)
            }
        }
    }
}

/// Smallest `m` with `angle(x + m e_apex, e_apex) <= target`.
fn min_apex_copies(x: &[f64], apex: usize, target: f64) -> u128 {
    copies_toward(x, apex, target, false)
}

/// The first `min_steps` steps of a stationary walk from `start`.
pub fn stationary_walk(start: &LatticePoint, eps: f64, min_steps: u128) -> Result<LatticeWalk> {
    let mut walk = LatticeWalk::new(start.clone());
    if min_steps == 0 {
        return Ok(walk);
    }
    let mut walker = StationaryWalker::new(start, eps)?;
    let mut pos = start.clone();
    for _ in 0..min_steps {
        let axis = walker.step(&mut pos)?;
        walk.push(axis, 1)?;
    }
    Ok(walk)
}
