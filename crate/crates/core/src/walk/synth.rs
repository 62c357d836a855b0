//! The phased walk whose boundary limit is a given target set.
//!
//! A ramp leaves the origin along a lattice line toward the basepoint until
//! the norm passes the first radius threshold. Phase `k` then shadows the
//! directed approximation of the `k`-th loop with budget `2^-k` and pads
//! until the norm passes the threshold of phase `k + 1`.

use crate::error::{Error, Result};
use crate::sphere::{angle_between, SpherePoint};
use crate::target::TargetSet;

use super::lattice::{LatticePoint, LatticeWalk};
use super::plan::{PhasePlanner, PhaseSpec};
use super::shadow::{shadow_walk, AuditEntry, ShadowParams};

/// One contiguous piece of the synthesized walk.
#[derive(Debug, Clone)]
pub struct PhaseBlock {
    /// 0 for the ramp, `k >= 1` for phase `k`.
    pub phase: usize,
    pub walk: LatticeWalk,
    /// Absent for the ramp.
    pub spec: Option<PhaseSpec>,
    pub audit: Vec<AuditEntry>,
    pub tail_audit: Vec<AuditEntry>,
    /// Distance of the block's final projection from its directed path's end.
    pub end_distance: Option<f64>,
}

/// Lazily produces the blocks of the walk, in order, forever.
#[derive(Debug, Clone)]
pub struct Synthesizer {
    planner: PhasePlanner,
    pending: Option<PhaseSpec>,
    position: LatticePoint,
    steps: u128,
    started: bool,
    failed: bool,
}

impl Synthesizer {
    pub fn new(target: TargetSet) -> Result<Self> {
        let dim = target.dim();
        let planner = PhasePlanner::new(target)?;
        Ok(Synthesizer {
            planner,
            pending: None,
            position: LatticePoint::origin(dim),
            steps: 0,
            started: false,
            failed: false,
        })
    }

    pub fn target(&self) -> &TargetSet {
        self.planner.target()
    }

    /// Current end position of the emitted walk.
    pub fn position(&self) -> &LatticePoint {
        &self.position
    }

    /// Number of steps emitted so far.
    pub fn steps(&self) -> u128 {
        self.steps
    }

    fn take_spec(&mut self) -> Result<PhaseSpec> {
        match self.pending.take() {
            Some(s) => Ok(s),
            None => self.planner.next_phase(),
        }
    }

    pub fn next_block(&mut self) -> Result<PhaseBlock> {
        if self.failed {
            return Err(Error::Internal("synthesis already failed".into()));
        }
        let r = self.advance();
        if r.is_err() {
            self.failed = true;
        }
        r
    }

    fn advance(&mut self) -> Result<PhaseBlock> {
        let block = if !self.started {
            let first = self.take_spec()?;
            let walk = ramp(first.directed.start.clone(), first.radius, first.eps / 2.0)?;
            self.pending = Some(first);
            self.started = true;
            PhaseBlock {
                phase: 0,
                walk,
                spec: None,
                audit: Vec::new(),
                tail_audit: Vec::new(),
                end_distance: None,
            }
        } else {
            let spec = self.take_spec()?;
            let next = self.planner.next_phase()?;
            let params = ShadowParams::new(spec.eps, spec.eps2).min_norm(next.radius);
            let out = shadow_walk(&spec.directed, &self.position, params)?;
            self.pending = Some(next);
            PhaseBlock {
                phase: spec.phase,
                walk: out.walk,
                spec: Some(spec),
                audit: out.audit,
                tail_audit: out.tail_audit,
                end_distance: Some(out.end_distance),
            }
        };
        self.position = block.walk.end().clone();
        self.steps = self
            .steps
            .checked_add(block.walk.len())
            .ok_or_else(|| Error::Overflow("step count overflowed".into()))?;
        Ok(block)
    }
}

impl Iterator for Synthesizer {
    type Item = Result<PhaseBlock>;

    /// Never ends on its own; yields `None` only after an error was returned.
    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            None
        } else {
            Some(self.next_block())
        }
    }
}

pub fn synthesize(target: &TargetSet) -> Result<Synthesizer> {
    Synthesizer::new(target.clone())
}

/// The synthesized walk as a flat stream of 0-based step axes.
#[derive(Debug, Clone)]
pub struct IndexStream {
    blocks: Synthesizer,
    runs: std::collections::VecDeque<super::lattice::Run>,
}

impl IndexStream {
    pub fn new(target: &TargetSet) -> Result<Self> {
        Ok(IndexStream { blocks: synthesize(target)?, runs: Default::default() })
    }
}

impl Iterator for IndexStream {
    type Item = Result<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(run) = self.runs.front_mut() {
                let axis = run.axis;
                run.count -= 1;
                if run.count == 0 {
                    self.runs.pop_front();
                }
                return Some(Ok(axis));
            }
            match self.blocks.next()? {
                Ok(b) => self.runs.extend(b.walk.runs().iter().copied()),
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

/// A lattice point with positive coordinates whose norm exceeds `radius` and
/// whose projection is within `tol` of `q`.
fn ramp_target(q: &SpherePoint, radius: f64, tol: f64) -> Result<LatticePoint> {
    let mut scale = radius.max(1.0);
    loop {
        let coords: Vec<i128> = q
            .coords()
            .iter()
            .map(|&c| ((scale * c).round() as i128).max(1))
            .collect();
        let v = LatticePoint::new(coords);
        if v.norm() > radius && angle_between(&v.project()?, q).radians() < tol {
            return Ok(v);
        }
        scale *= 2.0;
        if !scale.is_finite() || scale > 1e30 {
            return Err(Error::Overflow("no ramp target within range".into()));
        }
    }
}

/// Walk from the origin to the ramp target, staying close to the segment
/// between them: each step goes along the axis that lags most.
fn ramp(q: SpherePoint, radius: f64, tol: f64) -> Result<LatticeWalk> {
    let v = ramp_target(&q, radius, tol)?;
    let goal = v.coords().to_vec();
    let dim = goal.len();
    let mut walk = LatticeWalk::new(LatticePoint::origin(dim));
    let mut cur = vec![0i128; dim];
    let total: i128 = goal.iter().sum();
    for _ in 0..total {
        // smallest (c_i + 1) / g_i among unfinished axes
        let axis = (0..dim)
            .filter(|&i| cur[i] < goal[i])
            .min_by(|&a, &b| ((cur[a] + 1) * goal[b]).cmp(&((cur[b] + 1) * goal[a])))
            .expect("unfinished axis");
        cur[axis] += 1;
        walk.push(axis, 1)?;
    }
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramp_reaches_target_cone() {
        let q = SpherePoint::vertex(3, 0);
        let w = ramp(q.clone(), 500.0, 0.05).unwrap();
        assert!(w.end().norm() > 500.0);
        assert!(angle_between(&w.end().project().unwrap(), &q).radians() < 0.05);
        assert!(w.end().coords().iter().all(|&c| c > 0));
    }

    #[test]
    fn vertex_target_phases() {
        let z = TargetSet::point(SpherePoint::vertex(2, 0)).unwrap();
        let mut s = synthesize(&z).unwrap();
        let ramp = s.next_block().unwrap();
        assert_eq!(ramp.phase, 0);
        let mut prev_norm = ramp.walk.end().norm();
        for k in 1..=3 {
            let b = s.next_block().unwrap();
            assert_eq!(b.phase, k);
            assert_eq!(b.walk.start().norm(), prev_norm);
            prev_norm = b.walk.end().norm();
            let eps2 = b.spec.as_ref().unwrap().eps2;
            assert!(b.end_distance.unwrap() < eps2);
        }
    }

    #[test]
    fn deterministic_blocks() {
        let z = TargetSet::arc(SpherePoint::vertex(3, 0), SpherePoint::vertex(3, 1)).unwrap();
        let a: Vec<_> = synthesize(&z).unwrap().take(3).map(|b| b.unwrap().walk).collect();
        let b: Vec<_> = synthesize(&z).unwrap().take(3).map(|b| b.unwrap().walk).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn index_stream_matches_blocks() {
        let z = TargetSet::point(SpherePoint::vertex(2, 1)).unwrap();
        let mut s = synthesize(&z).unwrap();
        let mut expected: Vec<usize> = s.next_block().unwrap().walk.indices().collect();
        expected.extend(s.next_block().unwrap().walk.indices());
        let got: Vec<usize> =
            IndexStream::new(&z).unwrap().take(expected.len()).map(|r| r.unwrap()).collect();
        assert_eq!(got, expected);
    }
}
