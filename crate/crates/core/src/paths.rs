//! Piecewise-linear paths starting at the origin, and the raising operators
//! `e_α` acting on them.
//!
//! Paths are stored by their breakpoints. They are considered up to
//! reparameterization, so every constructor returns the canonical form:
//! no repeated points, no breakpoint between two segments pointing the same
//! way, and breakpoint times proportional to the cumulative coordinate
//! length.
//!
//! The height function is `h_α(t) = (π(t), α)`, the level of the hyperplane
//! parallel to `H_{α,0}` through `π(t)`. With this normalization `e_α` moves
//! the endpoint by the coroot `α^∨` and raises the critical value by exactly
//! one for short and long roots alike; for short roots `h_α = ⟨π, α^∨⟩`.

use serde_json::{json, Value};

use num_traits::{One, Zero};

use crate::json::{point_to_json, JsonScalar};
use crate::model_space::Point;
use crate::root_system::RootSystem;
use crate::scalar::Rational;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLPath {
    times: Vec<Rational>,
    points: Vec<Point<Rational>>,
}

fn same_direction(d1: &Point<Rational>, d2: &Point<Rational>) -> bool {
    let Some(k) = d1.coords().iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let ratio = d2[k] / d1[k];
    ratio > Rational::zero() && d1.scale(&ratio) == *d2
}

impl PLPath {
    /// Builds a path from explicit breakpoints and canonicalizes it.
    pub fn new(times: Vec<Rational>, points: Vec<Point<Rational>>) -> Result<PLPath, Error> {
        if times.len() != points.len() || times.len() < 2 {
            return Err(Error::InvalidArgument(
                "a path needs at least two breakpoints with matching times".into(),
            ));
        }
        if times[0] != Rational::zero() || times[times.len() - 1] != Rational::one() {
            return Err(Error::InvalidArgument("path times must run from 0 to 1".into()));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("path times must increase strictly".into()));
        }
        if !points[0].is_zero() {
            return Err(Error::InvalidArgument("paths start at the origin".into()));
        }
        let rank = points[0].rank();
        if points.iter().any(|p| p.rank() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: points.iter().map(Point::rank).find(|&r| r != rank).unwrap_or(rank),
            });
        }
        Ok(PLPath::canonical_from_points(points))
    }

    /// The path through the given points in order, starting at the origin.
    pub fn through(points: Vec<Point<Rational>>) -> Result<PLPath, Error> {
        let n = points.len();
        if n < 2 {
            return Err(Error::InvalidArgument("a path needs at least two points".into()));
        }
        let times = (0..n)
            .map(|i| Rational::new(i as i128, (n - 1) as i128))
            .collect();
        PLPath::new(times, points)
    }

    pub fn constant(rank: usize) -> PLPath {
        PLPath {
            times: vec![Rational::zero(), Rational::one()],
            points: vec![Point::zero(rank), Point::zero(rank)],
        }
    }

    /// The straight segment from the origin to `end`.
    pub fn straight(end: Point<Rational>) -> PLPath {
        let rank = end.rank();
        PLPath::canonical_from_points(vec![Point::zero(rank), end])
    }

    fn canonical_from_points(points: Vec<Point<Rational>>) -> PLPath {
        let rank = points[0].rank();
        let mut kept: Vec<Point<Rational>> = Vec::with_capacity(points.len());
        for p in points {
            if kept.last() == Some(&p) {
                continue;
            }
            if kept.len() >= 2 {
                let n = kept.len();
                let d1 = kept[n - 1].clone() - kept[n - 2].clone();
                let d2 = p.clone() - kept[n - 1].clone();
                if same_direction(&d1, &d2) {
                    kept[n - 1] = p;
                    continue;
                }
            }
            kept.push(p);
        }
        if kept.len() < 2 {
            return PLPath::constant(rank);
        }
        let lengths: Vec<Rational> = kept
            .windows(2)
            .map(|w| (w[1].clone() - w[0].clone()).l1_norm())
            .collect();
        let total: Rational = lengths.iter().sum();
        let mut times = Vec::with_capacity(kept.len());
        let mut acc = Rational::zero();
        times.push(acc);
        for l in &lengths {
            acc += l;
            times.push(acc / total);
        }
        PLPath {
            times,
            points: kept,
        }
    }

    /// Re-canonicalizes; canonical paths are returned unchanged.
    pub fn canonicalize(&self) -> PLPath {
        PLPath::canonical_from_points(self.points.clone())
    }

    pub fn rank(&self) -> usize {
        self.points[0].rank()
    }

    pub fn times(&self) -> &[Rational] {
        &self.times
    }

    pub fn points(&self) -> &[Point<Rational>] {
        &self.points
    }

    pub fn endpoint(&self) -> &Point<Rational> {
        self.points.last().expect("paths have at least two breakpoints")
    }

    pub fn is_constant(&self) -> bool {
        self.points.iter().all(Point::is_zero)
    }

    /// `π(t)` for `t ∈ [0, 1]`.
    pub fn evaluate(&self, t: &Rational) -> Point<Rational> {
        let last = self.times.len() - 1;
        if *t >= self.times[last] {
            return self.points[last].clone();
        }
        if *t <= self.times[0] {
            return self.points[0].clone();
        }
        let k = self.times.partition_point(|s| s <= t) - 1;
        let (t0, t1) = (self.times[k], self.times[k + 1]);
        let f = (t - t0) / (t1 - t0);
        let d = self.points[k + 1].clone() - self.points[k].clone();
        self.points[k].add_scaled(&d, &f)
    }

    /// `π₁ ∗ π₂`: run `π₁` on `[0, ½]`, then `π₁(1) + π₂` on `[½, 1]`.
    pub fn concat(&self, other: &PLPath) -> PLPath {
        let shift = self.endpoint().clone();
        let mut points = self.points.clone();
        points.extend(other.points.iter().skip(1).map(|p| p.clone() + shift.clone()));
        PLPath::canonical_from_points(points)
    }

    /// `t ↦ s_β(π(t))`.
    pub fn reflect(&self, rs: &RootSystem, root: usize) -> PLPath {
        PLPath::canonical_from_points(self.points.iter().map(|p| rs.reflect(p, root)).collect())
    }

    /// `h_α` at every breakpoint.
    pub fn heights(&self, rs: &RootSystem, root: usize) -> Vec<Rational> {
        self.points.iter().map(|p| rs.level(p, root)).collect()
    }

    pub fn height_at(&self, rs: &RootSystem, root: usize, t: &Rational) -> Rational {
        rs.level(&self.evaluate(t), root)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.times
                .iter()
                .zip(&self.points)
                .map(|(t, p)| json!({ "t": t.to_json(), "point": point_to_json(p) }))
                .collect(),
        )
    }
}

fn simple_root(rs: &RootSystem, i: usize) -> Result<usize, Error> {
    if i >= rs.rank() {
        return Err(Error::NotSimple(i));
    }
    Ok(rs.simple_index(i))
}

/// `n_α = min_t h_α(t)`, attained at a breakpoint.
pub fn critical_value(rs: &RootSystem, path: &PLPath, simple: usize) -> Result<Rational, Error> {
    let root = simple_root(rs, simple)?;
    Ok(path
        .heights(rs, root)
        .into_iter()
        .min()
        .expect("paths have breakpoints"))
}

/// The raising operator `e_α` for the simple root `α_simple`.
///
/// Returns `Ok(None)` when `n_α > -1`. Otherwise let `t₁` be the first time
/// the minimum `n_α` is attained and `t₀` the last time before which
/// `h_α ≥ n_α + 1`. On `[t₀, t₁]` the stretches where `h_α` strictly
/// decreases to a new running minimum are reflected by `s_α`; the stretches
/// where `h_α` leaves the running minimum and comes back to it are kept; the
/// remainder of the path after `t₁` is translated by `α^∨`. In closed form,
/// for `t ≥ t₀`,
///
/// `e_απ(t) = π(t) - (M(t) - n_α - 1) α^∨`, with `M(t) = min(n_α + 1, min_{[t₀,t]} h_α)`.
pub fn root_operator_e(
    rs: &RootSystem,
    path: &PLPath,
    simple: usize,
) -> Result<Option<PLPath>, Error> {
    let root = simple_root(rs, simple)?;
    let h = path.heights(rs, root);
    let n = *h.iter().min().expect("paths have breakpoints");
    let threshold = n + Rational::one();
    if n > -Rational::one() {
        return Ok(None);
    }
    let coroot = rs.coroot_vector(root);
    let pts = path.points();

    // First segment on which h drops below n + 1; h ≥ n + 1 before it.
    let k0 = (0..pts.len() - 1)
        .find(|&k| h[k + 1] < threshold)
        .expect("the minimum lies below n + 1");

    let mut out: Vec<Point<Rational>> = pts[..=k0].to_vec();
    let crossing = |a: usize, level: Rational| -> Point<Rational> {
        let f = (h[a] - level) / (h[a] - h[a + 1]);
        let d = pts[a + 1].clone() - pts[a].clone();
        pts[a].add_scaled(&d, &f)
    };
    // The first split below is t₀ itself, unless t₀ is a breakpoint.
    let mut running_min = threshold;
    let shifted = |p: &Point<Rational>, m: Rational| p.add_scaled(&coroot, &(threshold - m));
    for k in k0..pts.len() - 1 {
        let (ha, hb) = (h[k], h[k + 1]);
        if ha > running_min && hb < running_min {
            out.push(shifted(&crossing(k, running_min), running_min));
        }
        running_min = running_min.min(hb);
        out.push(shifted(&pts[k + 1], running_min));
    }
    Ok(Some(PLPath::canonical_from_points(out)))
}

/// Applies `e_α` repeatedly; `None` as soon as one application is absent.
pub fn root_operator_e_power(
    rs: &RootSystem,
    path: &PLPath,
    simple: usize,
    times: u64,
) -> Result<Option<PLPath>, Error> {
    let mut current = path.clone();
    for _ in 0..times {
        match root_operator_e(rs, &current, simple)? {
            Some(next) => current = next,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}
