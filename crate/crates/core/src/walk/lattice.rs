use crate::error::{domain, Error, Result};
use crate::sphere::{self, SpherePoint};

/// An exact integer point of the lattice `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint(Vec<i128>);

impl LatticePoint {
    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn new(coords: Vec<i128>) -> Self {
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[i128] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Adds `count` copies of `e_axis`.
    pub fn advance(&mut self, axis: usize, count: u128) -> Result<()> {
        let c = &mut self.0[axis];
        *c = c
            .checked_add(i128::try_from(count).map_err(|_| Error::Overflow("run too long".into()))?)
            .ok_or_else(|| Error::Overflow(format!("coordinate {axis} overflowed")))?;
        Ok(())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&c| c as f64).collect()
    }

    pub fn norm(&self) -> f64 {
        sphere::norm(&self.to_f64())
    }

    pub fn l1(&self) -> i128 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Radial projection to the half-sphere.
    pub fn project(&self) -> Result<SpherePoint> {
        if !self.is_nonnegative() {
            return domain("cannot project a lattice point with negative coordinates");
        }
        sphere::radial_project(&self.to_f64())
    }

    /// Angle between the projection and the vertex `e_axis`.
    pub fn angle_to_vertex(&self, axis: usize) -> f64 {
        sphere::angle_to_axis(&self.to_f64(), axis)
    }
}

/// Fewest copies `m` of `e_axis` for which the projection of `x + m e_axis`
/// is within `target` of the vertex (strictly within when `strict`).
pub(crate) fn copies_toward(x: &[f64], axis: usize, target: f64, strict: bool) -> u128 {
    let perp = x
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != axis)
        .map(|(_, v)| v * v)
        .sum::<f64>()
        .sqrt();
    let ok = |m: u128| {
        let d = perp.atan2(x[axis] + m as f64);
        if strict {
            d < target
        } else {
            d <= target
        }
    };
    if ok(0) {
        return 0;
    }
    let guess = if target < std::f64::consts::FRAC_PI_2 {
        (perp / target.tan() - x[axis]).max(1.0)
    } else {
        1.0
    };
    let mut hi = if guess < 1e36 { guess as u128 } else { 1u128 << 120 };
    let mut lo = 0u128;
    while !ok(hi) {
        lo = hi;
        hi = hi.saturating_mul(2);
        if hi == u128::MAX {
            return hi;
        }
    }
    // ok(hi) holds, ok(lo) does not
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `count` consecutive steps along `e_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub axis: usize,
    pub count: u128,
}

/// A walk over the positive basis vectors, stored run-length encoded.
///
/// Positions are exact: `c(k+1) = c(k) + e_{i_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeWalk {
    start: LatticePoint,
    end: LatticePoint,
    runs: Vec<Run>,
    len: u128,
}

impl LatticeWalk {
    pub fn new(start: LatticePoint) -> Self {
        LatticeWalk { end: start.clone(), start, runs: Vec::new(), len: 0 }
    }

    pub fn from_indices(start: LatticePoint, indices: &[usize]) -> Result<Self> {
        let mut w = LatticeWalk::new(start);
        for &i in indices {
            w.push(i, 1)?;
        }
        Ok(w)
    }

    pub fn start(&self) -> &LatticePoint {
        &self.start
    }

    pub fn end(&self) -> &LatticePoint {
        &self.end
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of unit steps.
    pub fn len(&self) -> u128 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.start.dim()
    }

    pub fn push(&mut self, axis: usize, count: u128) -> Result<()> {
        if axis >= self.dim() {
            return domain(format!("axis {axis} out of range"));
        }
        if count == 0 {
            return Ok(());
        }
        self.end.advance(axis, count)?;
        self.len = self
            .len
            .checked_add(count)
            .ok_or_else(|| Error::Overflow("walk length overflowed".into()))?;
        match self.runs.last_mut() {
            Some(r) if r.axis == axis => r.count += count,
            _ => self.runs.push(Run { axis, count }),
        }
        Ok(())
    }

    /// Appends a walk that starts where this one ends.
    pub fn extend(&mut self, other: &LatticeWalk) -> Result<()> {
        if other.start != self.end {
            return Err(Error::Internal("walks do not chain".into()));
        }
        for r in &other.runs {
            self.push(r.axis, r.count)?;
        }
        Ok(())
    }

    /// Step indices (0-based axes), one per unit step.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.runs.iter().flat_map(|r| std::iter::repeat_n(r.axis, r.count as usize))
    }

    /// Every position, starting with the start point.
    pub fn positions(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        let mut cur = self.start.clone();
        std::iter::once(self.start.clone()).chain(self.indices().map(move |i| {
            cur.0[i] += 1;
            cur.clone()
        }))
    }

    /// Each run together with the position it starts from.
    pub fn runs_with_origin(&self) -> impl Iterator<Item = (LatticePoint, Run)> + '_ {
        let mut cur = self.start.clone();
        self.runs.iter().map(move |r| {
            let origin = cur.clone();
            cur.0[r.axis] += r.count as i128;
            (origin, *r)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_merge_and_positions_are_exact() {
        let mut w = LatticeWalk::new(LatticePoint::origin(2));
        w.push(0, 2).unwrap();
        w.push(0, 1).unwrap();
        w.push(1, 1).unwrap();
        assert_eq!(w.runs().len(), 2);
        assert_eq!(w.len(), 4);
        let pos: Vec<_> = w.positions().map(|p| p.coords().to_vec()).collect();
        assert_eq!(pos, vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0], vec![3, 1]]);
        assert_eq!(w.end().coords(), &[3, 1]);
    }

    #[test]
    fn chained_extension() {
        let mut a = LatticeWalk::from_indices(LatticePoint::origin(3), &[0, 1]).unwrap();
        let b = LatticeWalk::from_indices(a.end().clone(), &[2, 2]).unwrap();
        a.extend(&b).unwrap();
        assert_eq!(a.indices().collect::<Vec<_>>(), vec![0, 1, 2, 2]);
        let stray = LatticeWalk::new(LatticePoint::origin(3));
        assert!(a.extend(&stray).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let mut p = LatticePoint::new(vec![i128::MAX - 1, 0]);
        assert!(p.advance(0, 5).is_err());
    }
}
