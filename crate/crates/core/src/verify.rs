//! Measuring how close the projected walk comes to its target.
//!
//! Everything here is recomputed from exact lattice positions. Tail clouds can
//! be taken exactly (every position) or sampled: inside a run of equal steps
//! the projection moves monotonically along one great circle, so positions can
//! be skipped as long as consecutive kept points stay within the resolution.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::sphere::{angle_between, Angle, SpherePoint};
use crate::target::TargetSet;
use crate::walk::{LatticePoint, LatticeWalk, PhaseBlock};

/// Hausdorff distance under the angle metric, with early termination of the
/// inner scans.
pub fn hausdorff(a: &[SpherePoint], b: &[SpherePoint]) -> Result<Angle> {
    if a.is_empty() || b.is_empty() {
        return domain("hausdorff distance of an empty set");
    }
    let ab = directed(a, b, 0.0);
    let ba = directed(b, a, ab);
    Ok(Angle::from_radians(ab.max(ba)))
}

/// `max(floor, sup_{p in a} inf_{q in b} d(p, q))`.
fn directed(a: &[SpherePoint], b: &[SpherePoint], floor: f64) -> f64 {
    let mut worst = floor;
    // start each scan where the previous point found its nearest neighbour
    let mut hint = 0;
    for p in a {
        let mut best = f64::INFINITY;
        let start = hint;
        for off in 0..b.len() {
            let j = (start + off) % b.len();
            let d = angle_between(p, &b[j]).radians();
            if d < best {
                best = d;
                hint = j;
                if best <= worst {
                    break;
                }
            }
        }
        worst = worst.max(best);
    }
    worst
}

/// Reference `O(|A||B|)` Hausdorff distance.
pub fn hausdorff_brute(a: &[SpherePoint], b: &[SpherePoint]) -> Result<Angle> {
    if a.is_empty() || b.is_empty() {
        return domain("hausdorff distance of an empty set");
    }
    let one = |x: &[SpherePoint], y: &[SpherePoint]| {
        x.iter()
            .map(|p| y.iter().map(|q| angle_between(p, q).radians()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    Ok(Angle::from_radians(one(a, b).max(one(b, a))))
}

/// Projected positions of a walk over a step range.
#[derive(Debug, Clone, PartialEq)]
pub struct TailCloud {
    points: Vec<SpherePoint>,
    range: (u128, u128),
}

impl TailCloud {
    pub fn new(points: Vec<SpherePoint>, range: (u128, u128)) -> Result<Self> {
        if points.is_empty() {
            return domain("tail cloud must be nonempty");
        }
        Ok(TailCloud { points, range })
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    /// Step indices `(from, to)` of the first and last positions covered,
    /// relative to the walk's start.
    pub fn range(&self) -> (u128, u128) {
        self.range
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Projections of every position `c(k)` with `k >= from_step`.
pub fn tail_cloud(walk: &LatticeWalk, from_step: u128) -> Result<TailCloud> {
    if from_step > walk.len() {
        return domain(format!("step {from_step} is beyond the walk's {} steps", walk.len()));
    }
    let points = walk
        .positions()
        .skip(from_step as usize)
        .map(|p| p.project())
        .collect::<Result<_>>()?;
    TailCloud::new(points, (from_step, walk.len()))
}

/// Like [`tail_cloud`], but keeps only enough positions that consecutive kept
/// projections are at most `resolution` apart. Every skipped projection lies
/// within `resolution/2` of a kept one.
pub fn sampled_tail_cloud(walk: &LatticeWalk, from_step: u128, resolution: f64) -> Result<TailCloud> {
    if from_step > walk.len() {
        return domain(format!("step {from_step} is beyond the walk's {} steps", walk.len()));
    }
    if !(resolution > 0.0) {
        return domain("sampling resolution must be positive");
    }
    let mut points = Vec::new();
    let mut step = 0u128;
    let mut first = true;
    for (origin, run) in walk.runs_with_origin() {
        let run_end = step + run.count;
        if run_end < from_step {
            step = run_end;
            continue;
        }
        let skip = from_step.saturating_sub(step);
        let mut pos = origin;
        pos.advance(run.axis, skip)?;
        if first {
            points.push(pos.project()?);
            first = false;
        }
        sample_run(&pos, run.axis, run.count - skip, resolution, &mut points)?;
        step = run_end;
    }
    if first {
        points.push(walk.end().project()?);
    }
    TailCloud::new(points, (from_step, walk.len()))
}

/// Appends projections of `x + j e_axis` for a subset of `j in 1..=count`
/// that always includes `count`.
fn sample_run(
    x: &LatticePoint,
    axis: usize,
    count: u128,
    res: f64,
    out: &mut Vec<SpherePoint>,
) -> Result<()> {
    let base = x.to_f64();
    let perp = base
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != axis)
        .map(|(_, v)| v * v)
        .sum::<f64>()
        .sqrt();
    let phi = |j: u128| perp.atan2(base[axis] + j as f64);
    let at = |j: u128| -> Result<SpherePoint> {
        let mut p = x.clone();
        p.advance(axis, j)?;
        p.project()
    };
    let mut j = 0u128;
    while j < count {
        let limit = phi(j) - res;
        let next = if limit <= 0.0 || perp == 0.0 {
            count
        } else {
            // largest m in (j, count] with phi(m) >= limit, or j + 1
            let (mut lo, mut hi) = (j + 1, count);
            if phi(lo) < limit || phi(hi) >= limit {
                if phi(hi) >= limit {
                    hi
                } else {
                    lo
                }
            } else {
                // phi(lo) >= limit > phi(hi)
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    if phi(mid) >= limit {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                lo
            }
        };
        out.push(at(next)?);
        j = next;
    }
    Ok(())
}

/// Sampling resolution used for phase `k`.
pub fn resolution(phase: usize) -> f64 {
    (1.0 / (10.0 * phase as f64)).min(1e-3)
}

/// Tolerance `2^-k + 1/k + resolution/2`.
pub fn tolerance(phase: usize) -> f64 {
    let (budget, net, slack) = tolerance_parts(phase);
    budget + net + slack
}

fn tolerance_parts(phase: usize) -> (f64, f64, f64) {
    (0.5f64.powi(phase as i32), 1.0 / phase as f64, resolution(phase) / 2.0)
}

/// Measured and allowed distance for one phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseReport {
    pub phase: usize,
    /// Total steps of the walk through the end of this phase.
    pub prefix_length: u128,
    pub d_h: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub resolution: f64,
    pub budget: f64,
    pub net_scale: f64,
    pub slack: f64,
}

/// Per-phase results in increasing phase order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConvergenceReport {
    pub phases: Vec<PhaseReport>,
}

impl ConvergenceReport {
    pub fn pass(&self) -> bool {
        self.phases.iter().all(|p| p.pass)
    }
}

impl fmt::Display for ConvergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.phases {
            writeln!(
                f,
                "phase={} prefix_length={} d_H={:.17e} tolerance={:.17e} pass={} resolution={:.17e} budget={:.17e} net_scale={:.17e} slack={:.17e}",
                p.phase, p.prefix_length, p.d_h, p.tolerance, p.pass, p.resolution, p.budget, p.net_scale, p.slack
            )?;
        }
        writeln!(f, "overall_pass={}", self.pass())
    }
}

/// Compares the projected positions of one phase block with a dense sample
/// of the target. `prefix_length` is the walk length through the block's end.
pub fn verify_phase(
    block: &PhaseBlock,
    target: &TargetSet,
    prefix_length: u128,
    tolerance_override: Option<f64>,
) -> Result<PhaseReport> {
    let k = block.phase;
    if k == 0 {
        return domain("the ramp is not a phase");
    }
    let res = resolution(k);
    let cloud = sampled_tail_cloud(&block.walk, 0, res)?;
    let z = target.sample(res);
    let d_h = hausdorff(cloud.points(), &z)?.radians();
    let (budget, net_scale, slack) = tolerance_parts(k);
    let tolerance = tolerance_override.unwrap_or(budget + net_scale + slack);
    Ok(PhaseReport {
        phase: k,
        prefix_length,
        d_h,
        tolerance,
        pass: d_h <= tolerance,
        resolution: res,
        budget,
        net_scale,
        slack,
    })
}

/// Consumes blocks through phase `phases` and verifies each phase.
pub fn convergence_report<I>(blocks: I, target: &TargetSet, phases: usize) -> Result<ConvergenceReport>
where
    I: IntoIterator<Item = Result<PhaseBlock>>,
{
    if phases == 0 {
        return domain("at least one phase is required");
    }
    let mut report = ConvergenceReport::default();
    let mut prefix = 0u128;
    for block in blocks {
        let block = block?;
        prefix += block.walk.len();
        if block.phase == 0 {
            continue;
        }
        report.phases.push(verify_phase(&block, target, prefix, None)?);
        if block.phase == phases {
            return Ok(report);
        }
    }
    Err(Error::Internal(format!("stream ended before phase {phases}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::radial_project;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn e(n: usize, i: usize) -> SpherePoint {
        SpherePoint::vertex(n, i)
    }

    #[test]
    fn hausdorff_examples() {
        let a = vec![e(2, 0), e(2, 1)];
        assert_eq!(hausdorff(&a, &a).unwrap().radians(), 0.0);
        let d = hausdorff(&[e(2, 0)], &a).unwrap().radians();
        assert!((d - FRAC_PI_2).abs() < 1e-15);
        assert!(hausdorff(&[], &a).is_err());
    }

    #[test]
    fn constant_walk_cloud_is_a_vertex() {
        let w = LatticeWalk::from_indices(LatticePoint::new(vec![1, 0]), &[0; 50]).unwrap();
        for from in [0, 17, 50] {
            let c = tail_cloud(&w, from).unwrap();
            assert!(c.points().iter().all(|p| p.approx_eq(&e(2, 0))));
        }
        assert_eq!(tail_cloud(&w, 50).unwrap().len(), 1);
        assert!(tail_cloud(&w, 51).is_err());
    }

    #[test]
    fn alternating_cloud_hugs_diagonal() {
        let idx: Vec<usize> = (0..10_000).map(|k| k % 2).collect();
        let w = LatticeWalk::from_indices(LatticePoint::origin(2), &idx).unwrap();
        let c = tail_cloud(&w, 100).unwrap();
        let diag = radial_project(&[1.0, 1.0]).unwrap();
        // at step 100 the position is (50, 50); one step moves at most asin(1/50)
        let band = (1.0f64 / 50.0).asin();
        for p in c.points() {
            assert!(angle_between(p, &diag).radians() <= band);
        }
        assert!(c.points().iter().any(|p| angle_between(p, &diag).radians() > 0.0));
        let _ = FRAC_PI_4;
    }

    #[test]
    fn sampled_cloud_is_close_to_exact() {
        let mut w = LatticeWalk::new(LatticePoint::new(vec![3, 5, 1]));
        w.push(0, 400).unwrap();
        w.push(2, 37).unwrap();
        w.push(1, 1000).unwrap();
        for (from, res) in [(0, 0.01), (250, 0.003), (700, 0.05)] {
            let exact = tail_cloud(&w, from).unwrap();
            let sampled = sampled_tail_cloud(&w, from, res).unwrap();
            assert!(sampled.len() <= exact.len());
            let d = hausdorff_brute(exact.points(), sampled.points()).unwrap().radians();
            assert!(d <= res / 2.0 + 1e-12, "{d} > {res}/2");
            assert_eq!(sampled.points().last(), exact.points().last());
            assert_eq!(sampled.points().first(), exact.points().first());
        }
    }

    #[test]
    fn tolerance_schedule() {
        assert!((tolerance(1) - (0.5 + 1.0 + 5e-4)).abs() < 1e-15);
        assert_eq!(resolution(2000), 1.0 / 20000.0);
        for k in 2..20 {
            assert!(tolerance(k + 1) < tolerance(k));
        }
    }
}
