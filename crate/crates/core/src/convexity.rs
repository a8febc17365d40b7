//! Dual half-apartments and the convex hull `conv*(W̄.x)` of a Weyl orbit.
//!
//! A dual half-apartment is `{y : (y, v) ≤ k}` where `v` runs over the Weyl
//! orbit of a fundamental co-weight. With the co-weights normalized by
//! `(α_j, ω_i) = δ_ij`, the bound attached to `ω_i` is the `i`-th
//! simple-root coordinate of `x⁺`. Any positive rescaling of `ω_i` describes
//! the same half-space, so only the sign convention (co-weights in the closed
//! fundamental chamber, inequalities of the form `≤`) matters.

use std::collections::BTreeSet;


use crate::model_space::{dominant_representative, solve, Point, TranslationLattice};
use crate::root_system::RootSystem;
use crate::scalar::{ceil, floor, Rational, Scalar};
use crate::Error;

/// `{y : Σ_j normal_j y_j ≤ bound}`.
///
/// `normal` is the covector `j ↦ (α_j, w·ω_i)`, so the boundary is the dual
/// hyperplane `{y : (y, w·ω_i) = bound}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualHalfSpace<S> {
    pub coweight: usize,
    /// `w·ω_i` in simple-root coordinates.
    pub direction: Point<Rational>,
    pub normal: Vec<Rational>,
    pub bound: S,
}

impl<S: Scalar> DualHalfSpace<S> {
    pub fn value(&self, y: &Point<S>) -> S {
        y.apply_row(&self.normal)
    }

    pub fn contains(&self, y: &Point<S>) -> bool {
        self.value(y) <= self.bound
    }
}

/// `conv*(W̄.x)` described by its dual half-spaces.
#[derive(Clone, Debug)]
pub struct OrbitHull<S> {
    pub base: Point<S>,
    pub dominant: Point<S>,
    pub halfspaces: Vec<DualHalfSpace<S>>,
}

/// Builds the hull of the Weyl orbit of `x`.
pub fn hull_of_orbit<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> OrbitHull<S> {
    let (dominant, _) = dominant_representative(rs, x);
    let mut halfspaces = Vec::new();
    for i in 0..rs.rank() {
        let omega = Point::new(rs.fundamental_coweight(i).to_vec());
        let bound = dominant[i].clone();
        for direction in rs.weyl_orbit(&omega) {
            let normal = (0..rs.rank())
                .map(|j| {
                    let alpha = Point::from_ints(rs.root(rs.simple_index(j)));
                    rs.form(&alpha, &direction)
                })
                .collect();
            halfspaces.push(DualHalfSpace {
                coweight: i,
                direction,
                normal,
                bound: bound.clone(),
            });
        }
    }
    OrbitHull {
        base: x.clone(),
        dominant,
        halfspaces,
    }
}

impl<S: Scalar> OrbitHull<S> {
    /// Membership by the dual half-space inequalities.
    pub fn contains(&self, y: &Point<S>) -> bool {
        self.halfspaces.iter().all(|h| h.contains(y))
    }

    /// Weyl orbit of the base point; these are the extreme points.
    pub fn orbit(&self, rs: &RootSystem) -> BTreeSet<Point<S>> {
        rs.weyl_orbit(&self.dominant)
    }
}

/// Membership by the dominance test `x⁺ - y⁺ ∈ C^p`.
pub fn contains_via_cone<S: Scalar>(rs: &RootSystem, x: &Point<S>, y: &Point<S>) -> bool {
    let (xd, _) = dominant_representative(rs, x);
    let (yd, _) = dominant_representative(rs, y);
    (xd - yd).coords().iter().all(|c| !c.is_negative())
}

/// Whether `v` is a non-negative combination of simple roots.
pub fn in_positive_cone<S: Scalar>(v: &Point<S>) -> bool {
    v.coords().iter().all(|c| !c.is_negative())
}

/// Points of `anchor + lattice` inside the hull.
///
/// The search box is the coordinate range of the orbit (the hull is the
/// convex hull of the orbit), pulled back to integer coefficients of the
/// lattice generators.
pub fn lattice_points(
    hull: &OrbitHull<Rational>,
    rs: &RootSystem,
    lattice: &TranslationLattice,
    anchor: &Point<Rational>,
) -> Result<BTreeSet<Point<Rational>>, Error> {
    let gens = lattice.generators().ok_or_else(|| {
        Error::InvalidArgument("lattice points need a discrete lattice, not the full group".into())
    })?;
    let n = rs.rank();
    if gens.len() != n || anchor.rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: anchor.rank(),
        });
    }
    let orbit = hull.orbit(rs);
    let lo: Vec<Rational> = (0..n)
        .map(|j| orbit.iter().map(|p| p[j]).min().expect("orbit is nonempty"))
        .collect();
    let hi: Vec<Rational> = (0..n)
        .map(|j| orbit.iter().map(|p| p[j]).max().expect("orbit is nonempty"))
        .collect();

    // Coefficient c = L⁻¹(y - anchor); bound each c_k over the box by
    // interval arithmetic on the rows of L⁻¹.
    let inverse_rows: Vec<Vec<Rational>> = {
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut e = vec![Rational::from_integer(0); n];
                e[j] = Rational::from_integer(1);
                solve(gens, &Point::new(e)).ok_or_else(|| {
                    Error::InvalidArgument("lattice generators are not full rank".into())
                })
            })
            .collect::<Result<_, _>>()?;
        (0..n).map(|k| (0..n).map(|j| cols[j][k]).collect()).collect()
    };
    let ranges: Vec<(i128, i128)> = inverse_rows
        .iter()
        .map(|row| {
            let (mut min, mut max) = (Rational::from_integer(0), Rational::from_integer(0));
            for j in 0..n {
                let a = row[j] * (lo[j] - anchor[j]);
                let b = row[j] * (hi[j] - anchor[j]);
                min += a.min(b);
                max += a.max(b);
            }
            (ceil(&min), floor(&max))
        })
        .collect();

    let mut out = BTreeSet::new();
    let mut coeffs: Vec<i128> = ranges.iter().map(|r| r.0).collect();
    if ranges.iter().any(|(a, b)| a > b) {
        return Ok(out);
    }
    loop {
        let mut y = anchor.clone();
        for (g, &c) in gens.iter().zip(&coeffs) {
            y = y.add_scaled(g, &Rational::from_integer(c));
        }
        if hull.contains(&y) {
            out.insert(y);
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            if coeffs[k] < ranges[k].1 {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = ranges[k].0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;
    use crate::scalar::{q, qi};

    fn pt(c: &[i128]) -> Point<Rational> {
        Point::new(c.iter().map(|&v| qi(v)).collect())
    }

    #[test]
    fn hull_of_zero_is_a_point() {
        let a2 = RootSystem::new(CartanType::A2);
        let hull = hull_of_orbit(&a2, &pt(&[0, 0]));
        assert!(hull.contains(&pt(&[0, 0])));
        assert!(!hull.contains(&Point::new(vec![q(1, 100), qi(0)])));
        let pts = lattice_points(&hull, &a2, &TranslationLattice::coroot(&a2), &pt(&[0, 0])).unwrap();
        assert_eq!(pts.len(), 1);
    }

    #[test]
    fn a1_hull_is_a_segment() {
        let a1 = RootSystem::new(CartanType::A1);
        let hull = hull_of_orbit(&a1, &pt(&[1]));
        assert!(hull.contains(&pt(&[-1])));
        assert!(hull.contains(&Point::new(vec![q(1, 2)])));
        assert!(!hull.contains(&Point::new(vec![q(-11, 10)])));
        let pts = lattice_points(&hull, &a1, &TranslationLattice::root(&a1), &pt(&[1])).unwrap();
        assert_eq!(pts, [pt(&[-1]), pt(&[0]), pt(&[1])].into_iter().collect());
    }

    #[test]
    fn a2_hexagon_has_seven_lattice_points() {
        let a2 = RootSystem::new(CartanType::A2);
        let theta = pt(&[1, 1]);
        let hull = hull_of_orbit(&a2, &theta);
        let pts = lattice_points(&hull, &a2, &TranslationLattice::root(&a2), &theta).unwrap();
        let mut expected: BTreeSet<_> = a2.roots().iter().map(|r| Point::from_ints(r)).collect();
        expected.insert(pt(&[0, 0]));
        assert_eq!(pts, expected);
        // Brute-force box oracle: the same points from a direct scan.
        let mut scan = BTreeSet::new();
        for a in -3..=3 {
            for b in -3..=3 {
                if contains_via_cone(&a2, &theta, &pt(&[a, b])) {
                    scan.insert(pt(&[a, b]));
                }
            }
        }
        assert_eq!(scan, expected);
    }

    #[test]
    fn membership_examples() {
        let a2 = RootSystem::new(CartanType::A2);
        let theta = pt(&[1, 1]);
        let hull = hull_of_orbit(&a2, &theta);
        assert!(hull.contains(&hull.dominant));
        assert!(!hull.contains(&pt(&[2, 0])));
        assert!(!contains_via_cone(&a2, &theta, &pt(&[2, 0])));
        assert!(contains_via_cone(&a2, &theta, &theta));
        assert!(contains_via_cone(&a2, &theta, &pt(&[0, 0])));
        assert!(!contains_via_cone(&a2, &theta, &pt(&[2, 1])));
    }

    #[test]
    fn hull_invariant_under_moving_base() {
        let g2 = RootSystem::new(CartanType::G2);
        let x = Point::new(vec![q(3, 2), q(1, 3)]);
        let h1 = hull_of_orbit(&g2, &x);
        for w in g2.weyl_group() {
            let h2 = hull_of_orbit(&g2, &w.act(&x));
            assert_eq!(h1.dominant, h2.dominant);
            for p in h1.orbit(&g2) {
                assert!(h2.contains(&p));
            }
        }
    }
}
