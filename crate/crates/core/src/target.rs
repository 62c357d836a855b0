//! Target sets: connected piecewise-geodesic skeletons in the spherical simplex.

use std::collections::VecDeque;

use crate::error::{domain, Result};
use crate::sphere::{self, angle_between, SpherePoint};

/// A compact connected subset of the spherical simplex, given as a graph
/// whose vertices are sphere points and whose edges are great-circle arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetSet {
    dim: usize,
    vertices: Vec<SpherePoint>,
    edges: Vec<(usize, usize)>,
    basepoint: usize,
}

impl TargetSet {
    pub fn new(
        dim: usize,
        vertices: Vec<SpherePoint>,
        edges: Vec<(usize, usize)>,
        basepoint: usize,
    ) -> Result<Self> {
        if dim < 2 {
            return domain(format!("dimension must be at least 2, got {dim}"));
        }
        if vertices.is_empty() {
            return domain("target needs at least one vertex");
        }
        if let Some(v) = vertices.iter().position(|v| v.dim() != dim) {
            return domain(format!("vertex {v} has dimension {}, expected {dim}", vertices[v].dim()));
        }
        if basepoint >= vertices.len() {
            return domain(format!("basepoint {basepoint} is not a vertex index"));
        }
        for &(a, b) in &edges {
            if a >= vertices.len() || b >= vertices.len() {
                return domain(format!("edge ({a}, {b}) references a missing vertex"));
            }
        }
        let target = TargetSet { dim, vertices, edges, basepoint };
        if !target.is_connected() {
            return domain("target skeleton is disconnected");
        }
        Ok(target)
    }

    /// The single point `p`.
    pub fn point(p: SpherePoint) -> Result<Self> {
        TargetSet::new(p.dim(), vec![p], Vec::new(), 0)
    }

    /// The arc from `a` to `b`, based at `a`.
    pub fn arc(a: SpherePoint, b: SpherePoint) -> Result<Self> {
        TargetSet::new(a.dim(), vec![a, b], vec![(0, 1)], 0)
    }

    /// Closed loop through `points` in order, based at the first one.
    pub fn cycle(points: Vec<SpherePoint>) -> Result<Self> {
        let n = points.len();
        let dim = points.first().map_or(0, |p| p.dim());
        let edges = (0..n).map(|i| (i, (i + 1) % n)).filter(|(a, b)| a != b).collect();
        TargetSet::new(dim, points, edges, 0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[SpherePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn basepoint(&self) -> &SpherePoint {
        &self.vertices[self.basepoint]
    }

    pub fn basepoint_index(&self) -> usize {
        self.basepoint
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push(e);
            if a != b {
                adj[b].push(e);
            }
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([self.basepoint]);
        seen[self.basepoint] = true;
        while let Some(u) = queue.pop_front() {
            for &e in &adj[u] {
                let (a, b) = self.edges[e];
                let w = if a == u { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Closed tour from the basepoint traversing every edge in both
    /// directions, as a sequence of skeleton vertex indices.
    pub fn tour(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut used = vec![false; self.edges.len()];
        let mut visited = vec![false; self.vertices.len()];
        let mut out = vec![self.basepoint];
        self.tour_from(self.basepoint, &adj, &mut used, &mut visited, &mut out);
        out
    }

    fn tour_from(
        &self,
        u: usize,
        adj: &[Vec<usize>],
        used: &mut [bool],
        visited: &mut [bool],
        out: &mut Vec<usize>,
    ) {
        visited[u] = true;
        for &e in &adj[u] {
            if used[e] {
                continue;
            }
            used[e] = true;
            let (a, b) = self.edges[e];
            let w = if a == u { b } else { a };
            if w == u {
                continue;
            }
            out.push(w);
            if !visited[w] {
                self.tour_from(w, adj, used, visited, out);
            }
            out.push(u);
        }
    }

    /// Points along every edge spaced at most `spacing` apart in arc length,
    /// plus every vertex.
    pub fn sample(&self, spacing: f64) -> Vec<SpherePoint> {
        let mut out: Vec<SpherePoint> = self.vertices.clone();
        for &(a, b) in &self.edges {
            let (p, q) = (&self.vertices[a], &self.vertices[b]);
            let len = angle_between(p, q).radians();
            let k = (len / spacing).ceil() as usize;
            for j in 1..k {
                out.push(sphere::slerp(p, q, j as f64 / k as f64));
            }
        }
        out
    }

    /// A finite `r`-net of the set: arc-length samples of each edge with
    /// spacing at most `r`, endpoints included.
    pub fn net(&self, r: f64) -> Vec<SpherePoint> {
        self.sample(r)
    }

    /// Exact angle-metric distance from `p` to the set.
    pub fn distance(&self, p: &SpherePoint) -> f64 {
        let mut best = self
            .vertices
            .iter()
            .map(|v| angle_between(p, v).radians())
            .fold(f64::INFINITY, f64::min);
        for &(a, b) in &self.edges {
            best = best.min(arc_distance(p, &self.vertices[a], &self.vertices[b]));
        }
        best
    }
}

/// Angle from `p` to the great-circle arc `[a, b]` (arc shorter than π).
pub fn arc_distance(p: &SpherePoint, a: &SpherePoint, b: &SpherePoint) -> f64 {
    let ends = angle_between(p, a).radians().min(angle_between(p, b).radians());
    let ab = a.dot(b);
    let u2: Vec<f64> = b.coords().iter().zip(a.coords()).map(|(y, x)| y - ab * x).collect();
    let l2 = sphere::norm(&u2);
    if l2 <= 1e-15 {
        return ends;
    }
    let u2: Vec<f64> = u2.iter().map(|x| x / l2).collect();
    let (x, y) = (p.dot(a), sphere::dot(p.coords(), &u2));
    let theta = y.atan2(x);
    let span = l2.atan2(ab);
    if theta >= 0.0 && theta <= span {
        let perp = p
            .coords()
            .iter()
            .zip(a.coords().iter().zip(&u2))
            .map(|(c, (s, t))| c - x * s - y * t)
            .map(|r| r * r)
            .sum::<f64>()
            .sqrt();
        let in_plane = (x * x + y * y).sqrt();
        ends.min(perp.atan2(in_plane))
    } else {
        ends
    }
}
