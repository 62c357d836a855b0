//! Lattice walks whose projections shadow a vertex-directed path.
//!
//! For each aimed segment toward `w_i` ending at `T_k`, copies of `e_i` are
//! appended:
//!
//! 1. `T_k` is the vertex itself: until the projection is within `ε₁/2` of it;
//! 2. the projection is already closer to `w_i` than `T_k`: none;
//! 3. otherwise: the fewest copies making it closer to `w_i` than `T_k`.
//!
//! Once the norm exceeds `csc(ε₁/(4N))` every unit step moves the projection
//! by at most `δ = ε₁/(4N)`, and the distance to the current terminal point
//! grows by at most `δ` per segment. A second, finer pass then steers the end
//! to within `ε₂` of the path's endpoint.

use crate::error::{domain, Error, Result};
use crate::simplex::{line_approx_sphere, DirectedPath, StepKind};
use crate::sphere::{angle_between, csc_radius, SpherePoint, EQ_TOLERANCE};

use super::lattice::{copies_toward, LatticePoint, LatticeWalk, Run};
use super::stationary::{stationary_radius, StationaryWalker};

/// Tolerances and length requirements for [`shadow_walk`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowParams {
    /// Hausdorff budget between the projected walk and the path.
    pub eps1: f64,
    /// Required closeness of the final projection to the path's endpoint.
    pub eps2: f64,
    /// Minimum number of unit steps.
    pub min_len: u128,
    /// The walk is extended until its end has norm strictly above this.
    pub min_norm: f64,
}

impl ShadowParams {
    pub fn new(eps1: f64, eps2: f64) -> Self {
        ShadowParams { eps1, eps2, min_len: 0, min_norm: 0.0 }
    }

    pub fn min_len(mut self, min_len: u128) -> Self {
        self.min_len = min_len;
        self
    }

    pub fn min_norm(mut self, min_norm: f64) -> Self {
        self.min_norm = min_norm;
        self
    }

    /// The endpoint tolerance actually used; never above `ε₁/4`.
    fn end_tolerance(&self) -> f64 {
        self.eps2.min(self.eps1 / 4.0)
    }
}

/// Which rule fixed the number of copies for one segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShadowCase {
    Constant,
    Vertex,
    AlreadyCloser,
    Minimal,
}

/// Per-segment record of the drift bound.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditEntry {
    pub segment: usize,
    pub case: ShadowCase,
    pub copies: u128,
    /// `d(ρ(Σ_k), T_k)` after the segment.
    pub distance: f64,
    /// `max(ε₁/2, previous distance + δ)`.
    pub bound: f64,
}

#[derive(Debug, Clone)]
pub struct ShadowOutcome {
    pub walk: LatticeWalk,
    /// Audit of the main pass over the given path.
    pub audit: Vec<AuditEntry>,
    /// Audit of the finishing pass toward the endpoint.
    pub tail_audit: Vec<AuditEntry>,
    /// Distance between the final projection and the path's endpoint.
    pub end_distance: f64,
}

/// Norm a start point needs for [`shadow_walk`] over `segments` segments:
/// `csc(ε₁/(4N))`, so a single unit step moves the projection by at most
/// `ε₁/(4N)`.
pub fn shadow_radius(segments: usize, eps1: f64) -> f64 {
    csc_radius(eps1 / (4.0 * segments.max(1) as f64))
}

const AUDIT_SLACK: f64 = 1e-9;

/// Smallest `m >= 0` with `angle(x + m e_axis, e_axis) < target`.
fn copies_until_closer(x: &LatticePoint, axis: usize, target: f64) -> u128 {
    copies_toward(&x.to_f64(), axis, target, true)
}

/// One pass of the three-case rule over `path`, appending to `walk`.
fn main_pass(
    path: &DirectedPath<SpherePoint>,
    walk: &mut LatticeWalk,
    eps1: f64,
) -> Result<Vec<AuditEntry>> {
    let dim = walk.dim();
    let segments = path.len().max(1);
    let delta = eps1 / (4.0 * segments as f64);
    let mut terminal = path.start.clone();
    let mut prev = angle_between(&walk.end().project()?, &terminal).radians();
    let mut audit = Vec::with_capacity(path.len());
    for (k, step) in path.steps.iter().enumerate() {
        let (case, copies) = match step.kind {
            StepKind::Constant => (ShadowCase::Constant, 0),
            StepKind::Aimed(axis) => {
                let vertex = SpherePoint::vertex(dim, axis);
                let t_dist = angle_between(&step.end, &vertex).radians();
                let here = walk.end().angle_to_vertex(axis);
                if t_dist <= EQ_TOLERANCE {
                    (ShadowCase::Vertex, copies_until_closer(walk.end(), axis, eps1 / 2.0))
                } else if t_dist > here {
                    (ShadowCase::AlreadyCloser, 0)
                } else {
                    (ShadowCase::Minimal, copies_until_closer(walk.end(), axis, t_dist))
                }
            }
        };
        if let StepKind::Aimed(axis) = step.kind {
            walk.push(axis, copies)?;
        }
        terminal = step.end.clone();
        let distance = angle_between(&walk.end().project()?, &terminal).radians();
        let bound = (eps1 / 2.0).max(prev + delta);
        let entry = AuditEntry { segment: k, case, copies, distance, bound };
        if distance > bound + AUDIT_SLACK {
            return Err(Error::Internal(format!(
                "drift bound exceeded: {entry:?}; audit so far: {audit:?}"
            )));
        }
        audit.push(entry);
        prev = distance;
    }
    Ok(audit)
}

/// Walk from `p` to `2p` in `chunks` rounds; each round advances every
/// coordinate by its share of `p`. Returns the runs and the largest angle
/// between a run endpoint and `anchor`.
fn doubling_runs(p: &LatticePoint, chunks: u32, anchor: &SpherePoint) -> Result<(Vec<Run>, f64)> {
    let m = i128::from(chunks);
    let mut cur = p.clone();
    let mut runs = Vec::new();
    let mut drift = 0.0f64;
    for j in 1..=m {
        for (axis, &c) in p.coords().iter().enumerate() {
            let goal = c
                + c.checked_mul(j).ok_or_else(|| Error::Overflow("doubling".into()))? / m;
            let count = (goal - cur.coords()[axis]) as u128;
            if count > 0 {
                cur.advance(axis, count)?;
                runs.push(Run { axis, count });
                drift = drift.max(angle_between(&cur.project()?, anchor).radians());
            }
        }
    }
    Ok((runs, drift))
}

const MAX_CHUNKS: u32 = 1 << 20;

/// Raises the end norm above `norm` by repeated doubling, which returns the
/// projection to exactly where it started. Along the way the projection stays
/// within `budget` of the start; the number of rounds per doubling is raised
/// until it does.
fn grow(walk: &mut LatticeWalk, norm: f64, budget: f64) -> Result<()> {
    if walk.end().norm() > norm {
        return Ok(());
    }
    let anchor = walk.end().project()?;
    let mut chunks = 1;
    while walk.end().norm() <= norm {
        let p = walk.end().clone();
        loop {
            let (runs, drift) = doubling_runs(&p, chunks, &anchor)?;
            if drift <= budget {
                for r in runs {
                    walk.push(r.axis, r.count)?;
                }
                break;
            }
            chunks *= 2;
            if chunks > MAX_CHUNKS {
                return Err(Error::Internal(format!(
                    "cannot grow the norm from {} within drift {budget}",
                    p.norm()
                )));
            }
        }
    }
    Ok(())
}

/// Extends `walk` until it has at least `min_len` steps and its end norm
/// exceeds `min_norm`. Norm is gained by doubling (drift at most `budget`),
/// length by stationary steps with tolerance `eps`.
fn pad(walk: &mut LatticeWalk, eps: f64, min_len: u128, min_norm: f64, budget: f64) -> Result<()> {
    grow(walk, min_norm, budget)?;
    if walk.len() >= min_len {
        return Ok(());
    }
    grow(walk, stationary_radius(eps, walk.dim()), budget)?;
    let mut pos = walk.end().clone();
    let mut walker = StationaryWalker::new(&pos, eps)?;
    while walk.len() < min_len {
        let axis = walker.step(&mut pos)?;
        walk.push(axis, 1)?;
    }
    Ok(())
}

/// Finite walk from `start` whose projection stays within `ε₁` (Hausdorff) of
/// `path` and ends within `ε₂` of its endpoint.
///
/// Requires `‖start‖ >= shadow_radius(..)` and the projection of `start` to be
/// within `ε₁/2` of the path's start.
pub fn shadow_walk(
    path: &DirectedPath<SpherePoint>,
    start: &LatticePoint,
    params: ShadowParams,
) -> Result<ShadowOutcome> {
    let dim = start.dim();
    let ShadowParams { eps1, eps2, .. } = params;
    if !(eps1 > 0.0 && eps2 > 0.0) {
        return domain("shadow tolerances must be positive");
    }
    if path.start.dim() != dim {
        return domain("path and start point differ in dimension");
    }
    if !start.is_nonnegative() {
        return domain("shadow walk needs a nonnegative start");
    }
    let radius = shadow_radius(path.len(), eps1);
    let norm = start.norm();
    if norm < radius {
        return domain(format!("start norm {norm} is below the required radius {radius}"));
    }
    let offset = angle_between(&start.project()?, &path.start).radians();
    if !(offset < eps1 / 2.0) {
        return domain(format!("start projection is {offset} from the path, needs < {}", eps1 / 2.0));
    }

    let mut walk = LatticeWalk::new(start.clone());
    let audit = main_pass(path, &mut walk, eps1)?;

    // Finish: approximate the arc to the endpoint by a finer directed path,
    // grow the norm in place, and shadow that path with a quarter of the end
    // tolerance.
    let end_tol = params.end_tolerance();
    let goal = path.end().clone();
    let here = walk.end().project()?;
    let d_now = angle_between(&here, &goal).radians();
    let mut tail_audit = Vec::new();
    let fine = end_tol / 4.0;
    let mut finish = line_approx_sphere(&here, &goal, fine)?;
    if !finish.is_empty() {
        let fine_radius = csc_radius(fine / (4.0 * finish.len().max(1) as f64));
        grow(&mut walk, fine_radius, (eps1 - d_now) / 2.0)?;
        finish.start = walk.end().project()?;
        tail_audit = main_pass(&finish, &mut walk, fine)?;
    }
    let d_now = angle_between(&walk.end().project()?, &goal).radians();
    pad(&mut walk, end_tol / 8.0, params.min_len, params.min_norm, (eps1 - d_now) / 2.0)?;
    let end_distance = angle_between(&walk.end().project()?, &goal).radians();
    if !(end_distance < eps2) {
        return Err(Error::Internal(format!(
            "shadow walk ended {end_distance} from the endpoint, budget {eps2}"
        )));
    }
    Ok(ShadowOutcome { walk, audit, tail_audit, end_distance })
}
