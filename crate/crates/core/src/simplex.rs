//! Vertex-directed paths on the standard simplex.
//!
//! Paths are built on the Euclidean simplex `K = conv(e_1, .., e_n)` and moved
//! to the spherical simplex by radial projection, which sends vertices to
//! vertices and segments to great-circle arcs. A segment of a directed path
//! always heads straight for one vertex and stops somewhere on the way.
//!
//! On `K` every point has norm at least `1/√n`, so radial projection is
//! `√n`-Lipschitz from the Euclidean metric to the angle metric. Tolerances
//! given in angle units are divided by `√n` before working on `K`.


use crate::error::{domain, Error, Result};
use crate::sphere::{self, angle_between, SpherePoint};

/// Tolerance on barycentric coordinates.
pub const BARY_TOLERANCE: f64 = 1e-12;
/// Hard cap on zigzag iterations inside a single approximation call.
pub const MAX_ITERATIONS: usize = 1_000_000;
const SUPPORT_EPS: f64 = 1e-12;

/// A point of the Euclidean simplex in barycentric coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint(Vec<f64>);

impl SimplexPoint {
    pub fn new(mut bary: Vec<f64>) -> Result<Self> {
        if bary.is_empty() {
            return domain("simplex point needs at least one coordinate");
        }
        for c in bary.iter_mut() {
            if !c.is_finite() || *c < -BARY_TOLERANCE {
                return domain(format!("invalid barycentric coordinate {c}"));
            }
            *c = c.max(0.0);
        }
        let s: f64 = bary.iter().sum();
        if (s - 1.0).abs() > BARY_TOLERANCE {
            return domain(format!("barycentric coordinates sum to {s}"));
        }
        Ok(SimplexPoint(bary))
    }

    pub fn vertex(dim: usize, axis: usize) -> Self {
        let mut c = vec![0.0; dim];
        c[axis] = 1.0;
        SimplexPoint(c)
    }

    pub fn barycenter(dim: usize) -> Self {
        SimplexPoint(vec![1.0 / dim as f64; dim])
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Indices of the strictly positive coordinates: the face containing the
    /// point in its relative interior.
    pub fn support(&self) -> Vec<usize> {
        support(&self.0)
    }

    pub fn distance(&self, other: &SimplexPoint) -> f64 {
        dist(&self.0, &other.0)
    }

    /// Clamps and renormalizes raw coordinates produced by affine arithmetic.
    pub(crate) fn from_raw(mut c: Vec<f64>) -> Self {
        for x in c.iter_mut() {
            if *x < 0.0 {
                *x = 0.0;
            }
        }
        let s: f64 = c.iter().sum();
        for x in c.iter_mut() {
            *x /= s;
        }
        SimplexPoint(c)
    }
}

/// A point on which directed paths can be built.
pub trait PathPoint: Clone + std::fmt::Debug {
    fn dim(&self) -> usize;
    /// Distance in the natural metric of the space.
    fn gap(&self, other: &Self) -> f64;
    /// Whether `end` lies on the segment from `self` toward the vertex `axis`.
    fn on_way_to(&self, end: &Self, axis: usize) -> bool;
}

impl PathPoint for SimplexPoint {
    fn dim(&self) -> usize {
        self.0.len()
    }

    fn gap(&self, other: &Self) -> f64 {
        self.distance(other)
    }

    fn on_way_to(&self, end: &Self, axis: usize) -> bool {
        let v = SimplexPoint::vertex(self.dim(), axis);
        let total = self.distance(&v);
        (self.distance(end) + end.distance(&v) - total).abs() <= 1e-9
    }
}

impl PathPoint for SpherePoint {
    fn dim(&self) -> usize {
        SpherePoint::dim(self)
    }

    fn gap(&self, other: &Self) -> f64 {
        angle_between(self, other).radians()
    }

    fn on_way_to(&self, end: &Self, axis: usize) -> bool {
        let v = SpherePoint::vertex(self.dim(), axis);
        let d = |a: &SpherePoint, b: &SpherePoint| angle_between(a, b).radians();
        (d(self, end) + d(end, &v) - d(self, &v)).abs() <= 1e-9
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Constant,
    /// Moves straight toward the vertex with this axis index.
    Aimed(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathStep<P> {
    pub kind: StepKind,
    pub end: P,
}

/// A path made of constant steps and steps aimed at simplex vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedPath<P> {
    pub start: P,
    pub steps: Vec<PathStep<P>>,
}

impl<P: PathPoint> DirectedPath<P> {
    pub fn new(start: P) -> Self {
        DirectedPath { start, steps: Vec::new() }
    }

    pub fn end(&self) -> &P {
        self.steps.last().map_or(&self.start, |s| &s.end)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All points the path visits: its start followed by each step's end.
    pub fn nodes(&self) -> impl Iterator<Item = &P> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.end))
    }

    /// Checks that every aimed step ends on its way to its vertex and that
    /// constant steps do not move.
    pub fn validate(&self) -> Result<()> {
        let mut from = &self.start;
        for (k, step) in self.steps.iter().enumerate() {
            if step.end.dim() != from.dim() {
                return Err(Error::Internal(format!("step {k} changes dimension")));
            }
            let ok = match step.kind {
                StepKind::Constant => from.gap(&step.end) <= 1e-12,
                StepKind::Aimed(axis) => axis < from.dim() && from.on_way_to(&step.end, axis),
            };
            if !ok {
                return Err(Error::Internal(format!("step {k} is not vertex-directed")));
            }
            from = &step.end;
        }
        Ok(())
    }

    fn append(&mut self, other: DirectedPath<P>) {
        self.steps.extend(other.steps);
    }
}

impl DirectedPath<SimplexPoint> {
    /// Radial projection of the whole path onto the spherical simplex.
    pub fn to_sphere(&self) -> DirectedPath<SpherePoint> {
        DirectedPath {
            start: simplex_to_sphere(&self.start),
            steps: self
                .steps
                .iter()
                .map(|s| PathStep { kind: s.kind, end: simplex_to_sphere(&s.end) })
                .collect(),
        }
    }

    /// Points spaced at most `resolution` apart along the path.
    pub fn sample(&self, resolution: f64) -> Vec<Vec<f64>> {
        let pts: Vec<&[f64]> = self.nodes().map(|p| p.coords()).collect();
        sample_polyline_euclid(&pts, resolution)
    }
}

impl DirectedPath<SpherePoint> {
    /// Points spaced at most `resolution` apart (in angle) along the path.
    pub fn sample(&self, resolution: f64) -> Vec<SpherePoint> {
        let pts: Vec<SpherePoint> = self.nodes().cloned().collect();
        sample_polyline_sphere(&pts, resolution)
    }
}

/// A piecewise-linear path given by its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline<P> {
    vertices: Vec<P>,
}

impl<P: Clone> Polyline<P> {
    pub fn new(vertices: Vec<P>) -> Result<Self> {
        if vertices.is_empty() {
            return domain("polyline needs at least one vertex");
        }
        Ok(Polyline { vertices })
    }

    pub fn vertices(&self) -> &[P] {
        &self.vertices
    }

    pub fn first(&self) -> &P {
        &self.vertices[0]
    }

    pub fn last(&self) -> &P {
        self.vertices.last().expect("nonempty")
    }
}

impl Polyline<SimplexPoint> {
    pub fn sample(&self, resolution: f64) -> Vec<Vec<f64>> {
        let pts: Vec<&[f64]> = self.vertices.iter().map(|p| p.coords()).collect();
        sample_polyline_euclid(&pts, resolution)
    }
}

impl Polyline<SpherePoint> {
    pub fn sample(&self, resolution: f64) -> Vec<SpherePoint> {
        sample_polyline_sphere(&self.vertices, resolution)
    }

    pub fn to_simplex(&self) -> Polyline<SimplexPoint> {
        Polyline { vertices: self.vertices.iter().map(sphere_to_simplex).collect() }
    }
}

/// Radial projection of a simplex point to the spherical simplex.
pub fn simplex_to_sphere(p: &SimplexPoint) -> SpherePoint {
    SpherePoint::from_raw(p.0.clone())
}

/// Inverse of [`simplex_to_sphere`]: rescale so the coordinates sum to one.
pub fn sphere_to_simplex(p: &SpherePoint) -> SimplexPoint {
    SimplexPoint::from_raw(p.coords().to_vec())
}

/// Lipschitz constant of radial projection from `K` to the angle metric.
pub fn transfer_constant(dim: usize) -> f64 {
    (dim as f64).sqrt()
}

// ---------------------------------------------------------------------------
// Raw vector helpers

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

fn support(c: &[f64]) -> Vec<usize> {
    c.iter().enumerate().filter(|&(_, &x)| x > SUPPORT_EPS).map(|(i, _)| i).collect()
}

/// Euclidean distance from `p` to the segment `[a, b]`.
pub(crate) fn dist_to_segment(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab = sub(b, a);
    let len2 = sphere::dot(&ab, &ab);
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (sphere::dot(&sub(p, a), &ab) / len2).clamp(0.0, 1.0);
    dist(p, &lerp(a, b, t))
}

/// If `to` lies on the segment from `from` toward some vertex, return it.
fn aimed_vertex(from: &[f64], to: &[f64]) -> Option<usize> {
    let d = sub(to, from);
    for w in 0..from.len() {
        if from[w] >= 1.0 - 1e-15 {
            continue;
        }
        let t = d[w] / (1.0 - from[w]);
        if !(t > 0.0 && t <= 1.0 + 1e-12) {
            continue;
        }
        let ok = (0..from.len()).all(|j| j == w || (d[j] + t * from[j]).abs() <= 1e-12);
        if ok {
            return Some(w);
        }
    }
    None
}

pub(crate) fn sample_polyline_euclid(pts: &[&[f64]], resolution: f64) -> Vec<Vec<f64>> {
    let mut out = vec![pts[0].to_vec()];
    for w in pts.windows(2) {
        let len = dist(w[0], w[1]);
        let k = (len / resolution).ceil().max(1.0) as usize;
        for j in 1..=k {
            out.push(lerp(w[0], w[1], j as f64 / k as f64));
        }
    }
    out
}

pub(crate) fn sample_polyline_sphere(pts: &[SpherePoint], resolution: f64) -> Vec<SpherePoint> {
    let mut out = vec![pts[0].clone()];
    for w in pts.windows(2) {
        let len = angle_between(&w[0], &w[1]).radians();
        let k = (len / resolution).ceil().max(1.0) as usize;
        for j in 1..=k {
            out.push(sphere::slerp(&w[0], &w[1], j as f64 / k as f64));
        }
    }
    out
}

/// Hausdorff distance between two finite Euclidean point sets (brute force).
pub fn euclid_hausdorff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let directed = |x: &[Vec<f64>], y: &[Vec<f64>]| {
        x.iter()
            .map(|p| y.iter().map(|q| dist(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

// ---------------------------------------------------------------------------
// Line approximation

struct RawStep {
    vertex: usize,
    end: Vec<f64>,
}

/// The `radius`-neighbourhood of the segment `[a, b]`.
struct Fence<'a> {
    a: &'a [f64],
    b: &'a [f64],
    radius: f64,
}

impl Fence<'_> {
    fn contains(&self, p: &[f64]) -> bool {
        dist_to_segment(p, self.a, self.b) <= self.radius
    }

    /// Last point of `[from, to]` inside the fence; `from` must be inside.
    /// Distance to a segment is convex along lines, so bisection applies.
    fn cut(&self, from: &[f64], to: &[f64]) -> Vec<f64> {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if self.contains(&lerp(from, to, mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lerp(from, to, lo)
    }
}

/// Progress record of the outermost zigzag loop of a line approximation.
#[derive(Debug, Clone, Default)]
pub struct LineApproxTrace {
    /// Vertex chosen as the zigzag apex, if the general case ran.
    pub apex: Option<usize>,
    /// Distance from the current point to `[v, q'']` at each iteration.
    pub distances: Vec<f64>,
}

struct Approach {
    trace: Option<LineApproxTrace>,
}

/// Where a (possibly fenced) approximation stopped. Either way the point lies
/// on the segment being approximated, up to rounding.
enum Outcome {
    Done(Vec<f64>),
    Fenced(Vec<f64>),
}

impl Outcome {
    fn end(self) -> Vec<f64> {
        match self {
            Outcome::Done(p) | Outcome::Fenced(p) => p,
        }
    }
}

impl Approach {
    /// One aimed step from `q` toward the vertex `w`, ending at `target` or
    /// where it leaves the fence.
    fn straight(&self, q: &[f64], w: usize, target: &[f64], fence: Option<&Fence>, out: &mut Vec<RawStep>) -> Outcome {
        match fence {
            Some(f) if !f.contains(target) => {
                let end = f.cut(q, target);
                if dist(&end, q) > 0.0 {
                    out.push(RawStep { vertex: w, end: end.clone() });
                }
                Outcome::Fenced(end)
            }
            _ => {
                out.push(RawStep { vertex: w, end: target.to_vec() });
                Outcome::Done(target.to_vec())
            }
        }
    }

    /// Directed path from `q` to within `eps` of `target`, staying within
    /// `eps` of `[q, target]`. `target` must lie in the relative interior of
    /// `face`. With a fence, stops before the first round that would leave
    /// it; rounds end on the segment, so the stopping point does too.
    #[allow(clippy::too_many_arguments)]
    fn run(
        &mut self,
        q: &[f64],
        target: &[f64],
        face: &[usize],
        eps: f64,
        fence: Option<&Fence>,
        out: &mut Vec<RawStep>,
        top: bool,
    ) -> Result<Outcome> {
        let gap = dist(q, target);
        if gap <= 1e-12 {
            return Ok(Outcome::Done(q.to_vec()));
        }
        if let Some(w) = aimed_vertex(q, target) {
            return Ok(self.straight(q, w, target, fence, out));
        }
        if gap < eps {
            return Ok(Outcome::Done(q.to_vec()));
        }
        if face.len() == 1 {
            // a vertex target is always reachable by one aimed step
            return Ok(self.straight(q, face[0], target, fence, out));
        }

        // apex: the face vertex farthest from the target that is not on the
        // line through q and the target
        let n = q.len();
        let vertex = |i: usize| {
            let mut v = vec![0.0; n];
            v[i] = 1.0;
            v
        };
        let mut order: Vec<usize> = face.to_vec();
        order.sort_by(|&a, &b| {
            let da = dist(&vertex(a), target);
            let db = dist(&vertex(b), target);
            db.partial_cmp(&da).unwrap().then(a.cmp(&b))
        });
        let v = order
            .iter()
            .copied()
            .find(|&v| plane_normal(q, target, &vertex(v)).is_some())
            .ok_or_else(|| Error::Internal("no vertex spans a plane with the approximated segment".into()))?;
        if top {
            if let Some(t) = self.trace.as_mut() {
                t.apex = Some(v);
            }
        }
        let v_pt = vertex(v);
        let alpha = target[v];
        let mut far: Vec<f64> = target.iter().map(|x| x / (1.0 - alpha)).collect();
        far[v] = 0.0;
        let sub_face: Vec<usize> = face.iter().copied().filter(|&i| i != v).collect();

        if dist(target, &far) <= eps / 2.0 {
            return self.run(q, &far, &sub_face, eps / 2.0, fence, out, false);
        }

        let tube = Fence { a: q, b: target, radius: eps / 2.0 };
        let mut p = q.to_vec();
        for _ in 0..MAX_ITERATIONS {
            if dist(&p, target) < eps {
                return Ok(Outcome::Done(p));
            }
            if let Some(w) = aimed_vertex(&p, target) {
                let mut round = Vec::new();
                let end = self.straight(&p, w, target, Some(&tube), &mut round);
                return Ok(self.commit(&p, round, end, fence, out));
            }
            // the zigzag plane through p, the target and v
            let normal = plane_normal(&p, target, &v_pt).ok_or_else(|| {
                Error::Internal(format!("zigzag at {p:?} is collinear with the apex {v}"))
            })?;
            let b_v = sphere::dot(&sub(&v_pt, target), &normal);
            let d_line = dist_to_segment(&p, &v_pt, &far);
            if top {
                if let Some(t) = self.trace.as_mut() {
                    t.distances.push(d_line);
                }
            }
            let mut level = 2;
            while level < 60 && eps / f64::powi(2.0, level) >= d_line / 4.0 {
                level += 1;
            }

            // one round: toward q'' until the tube would be left, then
            // toward v back onto the segment. A finer inner path is used if
            // its first round already leaves the tube.
            let (mut round, x) = loop {
                let mut round = Vec::new();
                let inner_eps = eps / f64::powi(2.0, level);
                let x = self.run(&p, &far, &sub_face, inner_eps, Some(&tube), &mut round, false)?.end();
                if dist(&x, &p) > 0.0 || level >= 60 {
                    break (round, x);
                }
                level += 1;
            };
            let b_x = sphere::dot(&sub(&x, target), &normal);
            let u = if b_x > 0.0 {
                b_x / (b_x - b_v)
            } else {
                // no crossing ahead; slide toward the apex as far as it helps
                let to_v = sub(&v_pt, &x);
                (sphere::dot(&sub(target, &x), &to_v) / sphere::dot(&to_v, &to_v)).min(1.0)
            };
            let y = if u > 1e-12 {
                let y = tube.cut(&x, &lerp(&x, &v_pt, u));
                round.push(RawStep { vertex: v, end: y.clone() });
                y
            } else {
                x
            };
            if dist(&y, &p) == 0.0 {
                return Err(Error::Internal(format!("zigzag toward {target:?} stalled at {p:?}")));
            }
            if let Some(f) = fence {
                if !round.iter().all(|s| f.contains(&s.end)) {
                    return Ok(Outcome::Fenced(p));
                }
            }
            out.extend(round);
            p = y;
        }
        Err(Error::Internal(format!(
            "line approximation from {q:?} to {target:?} exceeded {MAX_ITERATIONS} iterations (eps = {eps})"
        )))
    }

    /// Appends a final round if it respects `fence`.
    fn commit(&self, p: &[f64], round: Vec<RawStep>, end: Outcome, fence: Option<&Fence>, out: &mut Vec<RawStep>) -> Outcome {
        if let Some(f) = fence {
            if !round.iter().all(|s| f.contains(&s.end)) {
                let mut single = Vec::new();
                let cut = match round.first() {
                    Some(s) => self.straight(p, s.vertex, &s.end, Some(f), &mut single),
                    None => Outcome::Fenced(p.to_vec()),
                };
                out.extend(single);
                return Outcome::Fenced(cut.end());
            }
        }
        out.extend(round);
        end
    }
}

/// Unit vector in the plane of `p`, `target` and `v`, perpendicular to
/// `target - p` and pointing away from `v`.
fn plane_normal(p: &[f64], target: &[f64], v: &[f64]) -> Option<Vec<f64>> {
    let dir = sub(target, p);
    let len = sphere::norm(&dir);
    if len == 0.0 {
        return None;
    }
    let unit: Vec<f64> = dir.iter().map(|x| x / len).collect();
    let vq = sub(v, target);
    let along = sphere::dot(&vq, &unit);
    let perp: Vec<f64> = vq.iter().zip(&unit).map(|(x, u)| x - along * u).collect();
    let plen = sphere::norm(&perp);
    (plen > 1e-9).then(|| perp.iter().map(|x| -x / plen).collect())
}

fn collect_path(start: &SimplexPoint, steps: Vec<RawStep>) -> DirectedPath<SimplexPoint> {
    DirectedPath {
        start: start.clone(),
        steps: steps
            .into_iter()
            .map(|s| PathStep { kind: StepKind::Aimed(s.vertex), end: SimplexPoint::from_raw(s.end) })
            .collect(),
    }
}

fn check_face(target: &SimplexPoint, face: &[usize]) -> Result<()> {
    let n = target.dim();
    if face.is_empty() || face.iter().any(|&i| i >= n) {
        return domain("face must be a nonempty set of vertex indices");
    }
    for i in 0..n {
        let inside = face.contains(&i);
        let c = target.0[i];
        if inside && c <= SUPPORT_EPS {
            return domain(format!("target is on the boundary of its face (coordinate {i} is {c})"));
        }
        if !inside && c > SUPPORT_EPS {
            return domain(format!("target is outside the face (coordinate {i} is {c})"));
        }
    }
    Ok(())
}

/// Directed path from `q` ending within `eps` of `target` and staying within
/// `eps` of the segment `[q, target]`. `target` must lie in the relative
/// interior of the face spanned by `face`.
pub fn line_approx(
    q: &SimplexPoint,
    target: &SimplexPoint,
    face: &[usize],
    eps: f64,
) -> Result<DirectedPath<SimplexPoint>> {
    line_approx_traced(q, target, face, eps).map(|(p, _)| p)
}

/// [`line_approx`] together with the progress record of its outer loop.
pub fn line_approx_traced(
    q: &SimplexPoint,
    target: &SimplexPoint,
    face: &[usize],
    eps: f64,
) -> Result<(DirectedPath<SimplexPoint>, LineApproxTrace)> {
    if q.dim() != target.dim() {
        return domain("dimension mismatch");
    }
    if !(eps > 0.0) {
        return domain("tolerance must be positive");
    }
    check_face(target, face)?;
    let mut face = face.to_vec();
    face.sort_unstable();
    face.dedup();
    let mut steps = Vec::new();
    let mut approach = Approach { trace: Some(LineApproxTrace::default()) };
    approach.run(&q.0, &target.0, &face, eps, None, &mut steps, true)?;
    Ok((collect_path(q, steps), approach.trace.unwrap_or_default()))
}

/// Directed path within Hausdorff distance `eps` of the polyline `path`,
/// starting at `start` and ending within `eps/2` of the polyline's last vertex.
pub fn direct_approx(
    path: &Polyline<SimplexPoint>,
    start: &SimplexPoint,
    eps: f64,
) -> Result<DirectedPath<SimplexPoint>> {
    if !(eps > 0.0) {
        return domain("tolerance must be positive");
    }
    let first = path.first();
    if first.dim() != start.dim() {
        return domain("dimension mismatch");
    }
    let d0 = start.distance(first);
    if d0 >= eps {
        return domain(format!("start is {d0} from the path, tolerance is {eps}"));
    }
    let mut out = DirectedPath::new(start.clone());
    if d0 >= eps / 2.0 {
        let budget = (eps / 2.0).min(eps - d0);
        out.append(line_approx(start, first, &first.support(), budget)?);
    }
    for target in &path.vertices()[1..] {
        let from = out.end().clone();
        out.append(line_approx(&from, target, &target.support(), eps / 2.0)?);
    }
    Ok(out)
}

/// Runs [`direct_approx`] for a polyline on the spherical simplex with an
/// angle tolerance, and projects the result back to the sphere.
pub fn direct_approx_sphere(
    path: &Polyline<SpherePoint>,
    start: &SpherePoint,
    eps: f64,
) -> Result<DirectedPath<SpherePoint>> {
    let k = transfer_constant(start.dim());
    let flat = direct_approx(&path.to_simplex(), &sphere_to_simplex(start), eps / k)?;
    Ok(with_exact_start(flat.to_sphere(), start))
}

/// Directed path on the sphere from `from` to within `eps` of `to`, staying
/// within `eps` of the arc between them.
pub fn line_approx_sphere(
    from: &SpherePoint,
    to: &SpherePoint,
    eps: f64,
) -> Result<DirectedPath<SpherePoint>> {
    let k = transfer_constant(from.dim());
    let target = sphere_to_simplex(to);
    let flat = line_approx(&sphere_to_simplex(from), &target, &target.support(), eps / k)?;
    Ok(with_exact_start(flat.to_sphere(), from))
}

fn with_exact_start(mut p: DirectedPath<SpherePoint>, start: &SpherePoint) -> DirectedPath<SpherePoint> {
    p.start = start.clone();
    p
}
