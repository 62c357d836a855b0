//! Per-phase loops, tolerances and radius thresholds.

use crate::error::Result;
use crate::simplex::{direct_approx_sphere, DirectedPath, Polyline};
use crate::sphere::SpherePoint;
use crate::target::TargetSet;

use super::shadow::shadow_radius;

/// Everything the synthesis needs for one phase `k >= 1`.
#[derive(Debug, Clone)]
pub struct PhaseSpec {
    pub phase: usize,
    /// Shadowing budget `2^-k`.
    pub eps: f64,
    /// Endpoint budget `2^-(k+2)`.
    pub eps2: f64,
    /// Closed tour of the skeleton from the basepoint.
    pub loop_path: Polyline<SpherePoint>,
    /// A `1/k`-net of the target; every point lies on the loop.
    pub net: Vec<SpherePoint>,
    /// Directed approximation of the loop, chained to the previous phase.
    pub directed: DirectedPath<SpherePoint>,
    /// Norm a walk must exceed before this phase starts.
    pub radius: f64,
}

impl PhaseSpec {
    pub fn segments(&self) -> usize {
        self.directed.len().max(1)
    }
}

/// Builds phases one at a time; each directed path starts where the previous
/// one ended.
#[derive(Debug, Clone)]
pub struct PhasePlanner {
    target: TargetSet,
    tour: Polyline<SpherePoint>,
    next: usize,
    last_end: SpherePoint,
    last_radius: f64,
}

impl PhasePlanner {
    pub fn new(target: TargetSet) -> Result<Self> {
        let verts = target.tour().into_iter().map(|i| target.vertices()[i].clone()).collect();
        let tour = Polyline::new(verts)?;
        let last_end = target.basepoint().clone();
        Ok(PhasePlanner { target, tour, next: 1, last_end, last_radius: 0.0 })
    }

    pub fn target(&self) -> &TargetSet {
        &self.target
    }

    /// Index of the phase the next call to [`PhasePlanner::next_phase`] builds.
    pub fn upcoming(&self) -> usize {
        self.next
    }

    pub fn next_phase(&mut self) -> Result<PhaseSpec> {
        let k = self.next;
        let eps = 0.5f64.powi(k as i32);
        let eps2 = eps / 4.0;
        let directed = direct_approx_sphere(&self.tour, &self.last_end, eps)?;
        let radius = shadow_radius(directed.len(), eps).max(self.last_radius);
        let spec = PhaseSpec {
            phase: k,
            eps,
            eps2,
            loop_path: self.tour.clone(),
            net: self.target.net(1.0 / k as f64),
            directed,
            radius,
        };
        self.next += 1;
        self.last_end = spec.directed.end().clone();
        self.last_radius = radius;
        Ok(spec)
    }
}

/// The first `phases` phases for `target`.
#[derive(Debug, Clone)]
pub struct PhasePlan {
    pub phases: Vec<PhaseSpec>,
}

pub fn plan_phases(target: &TargetSet, phases: usize) -> Result<PhasePlan> {
    let mut planner = PhasePlanner::new(target.clone())?;
    let phases = (0..phases).map(|_| planner.next_phase()).collect::<Result<_>>()?;
    Ok(PhasePlan { phases })
}
