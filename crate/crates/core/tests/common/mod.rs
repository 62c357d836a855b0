#![allow(dead_code)]

use boundwalk::sphere::radial_project;
use boundwalk::SpherePoint;
use rand::Rng;

/// Angle between two nonzero vectors from the cross and dot products.
pub fn angle(a: &[f64], b: &[f64]) -> f64 {
    let mut cross = 0.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let c = a[i] * b[j] - a[j] * b[i];
            cross += c * c;
        }
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    cross.sqrt().atan2(dot)
}

pub fn sangle(a: &SpherePoint, b: &SpherePoint) -> f64 {
    angle(a.coords(), b.coords())
}

pub fn lattice_angle(p: &[i128], q: &[f64]) -> f64 {
    let p: Vec<f64> = p.iter().map(|&c| c as f64).collect();
    angle(&p, q)
}

/// Point with every coordinate in `[lo, 1]` before normalizing.
pub fn interior<R: Rng>(rng: &mut R, n: usize, lo: f64) -> SpherePoint {
    let c: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..=1.0)).collect();
    radial_project(&c).unwrap()
}

/// Largest distance from a point of `a` to its nearest point of `b`, both ways.
pub fn brute_hausdorff<T>(a: &[T], b: &[T], d: impl Fn(&T, &T) -> f64) -> f64 {
    let one = |x: &[T], y: &[T]| {
        x.iter()
            .map(|p| y.iter().map(|q| d(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one(a, b).max(one(b, a))
}

pub fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}
