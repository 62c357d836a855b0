mod common;

use boundwalk::cat0::{walk_from_word, word_from_indices};
use boundwalk::simplex::direct_approx;
use boundwalk::sphere::chord_step_bound;
use boundwalk::verify::{convergence_report, tail_cloud, tolerance};
use boundwalk::walk::{plan_phases, stationary_walk, IndexStream, PhaseBlock, Synthesizer};
use boundwalk::{LatticePoint, LatticeWalk, Polyline, SimplexPoint, SpherePoint, TargetSet};
use common::{angle, brute_hausdorff, euclid, lattice_angle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_4;

fn unit(v: &[f64]) -> Vec<f64> {
    let n = euclid(v, &vec![0.0; v.len()]);
    v.iter().map(|c| c / n).collect()
}

/// Points every `res` radians along the great-circle arc from `a` to `b`.
fn arc(a: &[f64], b: &[f64], res: f64) -> Vec<Vec<f64>> {
    let (a, b) = (unit(a), unit(b));
    let th = angle(&a, &b);
    let m = (th / res).ceil().max(1.0) as usize;
    (0..=m)
        .map(|j| {
            let t = j as f64 / m as f64;
            if th < 1e-12 {
                return a.clone();
            }
            let (u, w) = (((1.0 - t) * th).sin() / th.sin(), (t * th).sin() / th.sin());
            a.iter().zip(&b).map(|(x, y)| u * x + w * y).collect()
        })
        .collect()
}

fn skeleton(z: &TargetSet, res: f64) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for &(i, j) in z.edges() {
        out.extend(arc(z.vertices()[i].coords(), z.vertices()[j].coords(), res));
    }
    if z.edges().is_empty() {
        out.push(z.basepoint().coords().to_vec());
    }
    out
}

/// Projection of a block's walk: each run traces the arc between the
/// projections of its endpoints.
fn block_trace(block: &PhaseBlock, res: f64) -> Vec<Vec<f64>> {
    let f = |p: &LatticePoint| p.coords().iter().map(|&c| c as f64).collect::<Vec<_>>();
    let mut cur = f(block.walk.start());
    let mut out = vec![unit(&cur)];
    for r in block.walk.runs() {
        let mut next = cur.clone();
        next[r.axis] += r.count as f64;
        out.extend(arc(&cur, &next, res));
        cur = next;
    }
    out
}

fn phase_distances(z: &TargetSet, phases: usize) -> Vec<(f64, f64)> {
    let mut s = Synthesizer::new(z.clone()).unwrap();
    let mut out = Vec::new();
    while out.len() < phases {
        let b = s.next_block().unwrap();
        if b.phase == 0 {
            continue;
        }
        let res = 1e-3;
        let d = brute_hausdorff(&block_trace(&b, res), &skeleton(z, res), |a, b| angle(a, b));
        out.push((d, tolerance(b.phase)));
    }
    out
}

#[test]
fn nets_cover_their_targets() {
    let e = |i| SpherePoint::vertex(4, i);
    let targets = [
        TargetSet::arc(SpherePoint::vertex(3, 0), SpherePoint::vertex(3, 1)).unwrap(),
        TargetSet::cycle(vec![e(0), e(1), e(2)]).unwrap(),
    ];
    for z in &targets {
        let plan = plan_phases(z, 6).unwrap();
        let dense = skeleton(z, 1e-3);
        for p in &plan.phases {
            let r = 1.0 / p.phase as f64;
            let net: Vec<Vec<f64>> = p.net.iter().map(|s| s.coords().to_vec()).collect();
            for x in &dense {
                let d = net.iter().map(|s| angle(x, s)).fold(f64::INFINITY, f64::min);
                assert!(d <= r + 1e-9, "phase {} net misses a point by {d}", p.phase);
            }
            let verts = p.loop_path.vertices();
            for s in &p.net {
                let on = verts.windows(2).any(|w| {
                    let (a, b, s) = (w[0].coords(), w[1].coords(), s.coords());
                    (angle(a, s) + angle(s, b) - angle(a, b)).abs() < 1e-9
                });
                assert!(on, "net point off the loop in phase {}", p.phase);
            }
        }
    }
}

#[test]
fn full_arc_clouds_tighten() {
    let z = TargetSet::arc(SpherePoint::vertex(2, 0), SpherePoint::vertex(2, 1)).unwrap();
    let ds = phase_distances(&z, 4);
    for (k, (d, tau)) in ds.iter().enumerate() {
        assert!(d <= tau, "phase {} d_H {d} above {tau}", k + 1);
    }
    let report = convergence_report(Synthesizer::new(z.clone()).unwrap(), &z, 4).unwrap();
    for (p, (d, _)) in report.phases.iter().zip(&ds) {
        assert!((p.d_h - d).abs() < 2e-3, "report {} vs oracle {d}", p.d_h);
    }
}

#[test]
fn edge_target_meets_schedule() {
    let z = TargetSet::arc(SpherePoint::vertex(3, 0), SpherePoint::vertex(3, 1)).unwrap();
    let ds = phase_distances(&z, 4);
    for (k, (d, tau)) in ds.iter().enumerate() {
        assert!(d < tau, "phase {} d_H {d} above {tau}", k + 1);
    }
    assert!(ds[3].0 <= 0.1);
}

#[test]
fn stationary_example() {
    let start = LatticePoint::new(vec![100, 100]);
    let walk = stationary_walk(&start, 0.05, 10_000).unwrap();
    assert_eq!(walk.len(), 10_000);
    for p in walk.positions() {
        assert!(lattice_angle(p.coords(), &[1.0, 1.0]) <= 0.05);
    }
}

#[test]
fn alternating_walk_hugs_the_diagonal() {
    let idx: Vec<usize> = (0..10_000).map(|k| k % 2).collect();
    let walk = LatticeWalk::from_indices(LatticePoint::origin(2), &idx).unwrap();
    let cloud = tail_cloud(&walk, 100).unwrap();
    let band = chord_step_bound(&[50.0, 50.0]).unwrap().radians();
    let diag = [FRAC_PI_4.cos(), FRAC_PI_4.sin()];
    assert_eq!(cloud.len(), 10_000 - 100 + 1);
    for p in cloud.points() {
        assert!(angle(p.coords(), &diag) <= band);
    }
}

#[test]
fn words_round_trip_to_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let z = TargetSet::arc(SpherePoint::vertex(3, 0), SpherePoint::vertex(3, 2)).unwrap();
    let mut streams: Vec<Vec<usize>> =
        vec![IndexStream::new(&z).unwrap().take(1000).collect::<Result<_, _>>().unwrap()];
    for _ in 0..20 {
        streams.push((0..1000).map(|_| rng.gen_range(0..3)).collect());
    }
    for idx in streams {
        let one_based: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        let half = walk_from_word(&word_from_indices(&one_based), 3).unwrap();
        let walk = LatticeWalk::from_indices(LatticePoint::origin(3), &idx).unwrap();
        assert_eq!(half.len(), 1001);
        for (k, (h, p)) in half.iter().zip(walk.positions()).enumerate() {
            assert_eq!(h[0], k as i64);
            let v: Vec<i128> = h[1..].iter().map(|&c| c as i128).collect();
            assert_eq!(v.as_slice(), p.coords());
        }
    }
}

#[test]
fn triangle_loop_is_approximated() {
    let b = 1.0 / 3.0;
    let corners = [[0.5, 0.25, 0.25], [0.25, 0.5, 0.25], [0.25, 0.25, 0.5], [0.5, 0.25, 0.25]];
    let verts: Vec<SimplexPoint> = corners.iter().map(|c| SimplexPoint::new(c.to_vec()).unwrap()).collect();
    let around = verts.iter().all(|v| euclid(v.coords(), &[b; 3]) > 0.1);
    assert!(around);
    let path = Polyline::new(verts).unwrap();
    let eps = 0.1;
    let out = direct_approx(&path, path.first(), eps).unwrap();
    out.validate().unwrap();
    let mut gamma = Vec::new();
    for w in path.vertices().windows(2) {
        let (a, c) = (w[0].coords(), w[1].coords());
        let m = (euclid(a, c) / 1e-3).ceil() as usize;
        gamma.extend((0..=m).map(|j| {
            let t = j as f64 / m as f64;
            a.iter().zip(c).map(|(x, y)| x + t * (y - x)).collect::<Vec<_>>()
        }));
    }
    let ours = out.sample(1e-3);
    let d = brute_hausdorff(&ours, &gamma, |a, b| euclid(a, b));
    assert!(d <= eps, "d_H = {d}");
}
