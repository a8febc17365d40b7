//! A finite thick Λ-tree: the rank-one building over `A1` with translation
//! group `T = step·ℤ`.
//!
//! Points are described in `α`-coordinates, so the base apartment is the
//! interval `[-N, N]` and the building metric is `d(cα, c'α) = 2|c - c'|`.
//! The tree also carries its own path length (`tree_distance`), which is the
//! metric divided by 2.
//!
//! Apartments may only branch at special points, the fixed points of the
//! reflections `c ↦ t - c`, `t ∈ T`; these form `½T`. A branch attached at
//! `z` is a segment of length `N - |z|` leaving the base apartment; together
//! with the ray from `z` to the `-∞` end it forms another apartment.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::convexity::hull_of_orbit;
use crate::json::{point_to_json, JsonScalar};
use crate::model_space::Point;
use crate::root_system::{CartanType, RootSystem};
use crate::scalar::{Rational, Scalar};
use crate::Error;

/// Upper bound on the number of special points in a tree. With a
/// non-Archimedean value group an infinitesimal step would otherwise give
/// infinitely many special points below a finite depth.
pub const MAX_SPECIAL_POINTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch<S> {
    pub anchor: S,
    pub length: S,
}

/// A point of the tree: branch `0` is the base apartment with coordinate
/// `c ∈ [-N, N]`; branch `b ≥ 1` is `branches[b - 1]` with coordinate the
/// depth `s ∈ (0, length]` measured from its anchor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreePoint<S> {
    pub branch: usize,
    pub coord: S,
}

impl<S: Scalar> TreePoint<S> {
    pub fn base(coord: S) -> Self {
        TreePoint { branch: 0, coord }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickTree<S> {
    step: S,
    depth: S,
    specials: Vec<S>,
    branches: Vec<Branch<S>>,
}

/// Multiples `k·step/2` with `|k·step/2| < depth`, in increasing order.
fn special_points<S: Scalar>(step: &S, depth: &S) -> Result<Vec<S>, Error> {
    if !step.is_positive() {
        return Err(Error::InvalidArgument("the translation step must be positive".into()));
    }
    if depth.is_negative() {
        return Err(Error::InvalidArgument("the depth must be non-negative".into()));
    }
    let half = step.scale(&Rational::new(1, 2));
    let mut positive = Vec::new();
    let mut z = half.clone();
    while z < *depth {
        if 2 * positive.len() + 1 >= MAX_SPECIAL_POINTS {
            return Err(Error::InvalidArgument(format!(
                "more than {MAX_SPECIAL_POINTS} special points below the requested depth"
            )));
        }
        positive.push(z.clone());
        z = z + half.clone();
    }
    let mut out: Vec<S> = positive.iter().rev().map(|p| -p.clone()).collect();
    if depth.is_positive() {
        out.push(S::zero());
    }
    out.extend(positive);
    Ok(out)
}

/// Builds a thick tree: every special point in the open interval
/// `(-depth, depth)` carries between one and three extra branches, the
/// counts drawn from a generator seeded by `seed`.
pub fn build_tree<S: Scalar>(step: &S, depth: &S, seed: u64) -> Result<ThickTree<S>, Error> {
    build_tree_with(step, depth, seed, 1, 3)
}

/// As [`build_tree`] with branch counts drawn uniformly from
/// `min_branches..=max_branches`. A minimum of `0` produces trees that are
/// not thick.
pub fn build_tree_with<S: Scalar>(
    step: &S,
    depth: &S,
    seed: u64,
    min_branches: u32,
    max_branches: u32,
) -> Result<ThickTree<S>, Error> {
    if min_branches > max_branches {
        return Err(Error::InvalidArgument("empty range of branch counts".into()));
    }
    let specials = special_points(step, depth)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut branches = Vec::new();
    for z in &specials {
        let count = rng.gen_range(min_branches..=max_branches);
        for _ in 0..count {
            branches.push(Branch {
                anchor: z.clone(),
                length: depth.clone() - z.abs(),
            });
        }
    }
    Ok(ThickTree {
        step: step.clone(),
        depth: depth.clone(),
        specials,
        branches,
    })
}

impl<S: Scalar> ThickTree<S> {
    /// The single apartment `[-depth, depth]` with no branching.
    pub fn apartment(step: &S, depth: &S) -> Result<Self, Error> {
        Ok(ThickTree {
            step: step.clone(),
            depth: depth.clone(),
            specials: special_points(step, depth)?,
            branches: Vec::new(),
        })
    }

    pub fn step(&self) -> &S {
        &self.step
    }

    pub fn depth(&self) -> &S {
        &self.depth
    }

    pub fn branches(&self) -> &[Branch<S>] {
        &self.branches
    }

    /// Special points strictly inside the base apartment.
    pub fn special_points(&self) -> &[S] {
        &self.specials
    }

    pub fn is_special(&self, z: &S) -> bool {
        self.specials.binary_search(z).is_ok()
    }

    /// Whether `c` lies in `T`.
    pub fn in_translation_group(&self, c: &S) -> bool {
        let mut k = 0i64;
        let target = c.abs();
        loop {
            let t = self.step.scale_int(k);
            if t == target {
                return true;
            }
            if t > target || k as usize > MAX_SPECIAL_POINTS {
                return false;
            }
            k += 1;
        }
    }

    pub fn branch_count_at(&self, z: &S) -> usize {
        self.branches.iter().filter(|b| b.anchor == *z).count()
    }

    pub fn is_valid_point(&self, p: &TreePoint<S>) -> bool {
        match p.branch {
            0 => p.coord.abs() <= self.depth,
            b => self
                .branches
                .get(b - 1)
                .is_some_and(|br| p.coord.is_positive() && p.coord <= br.length),
        }
    }

    /// Anchor on the base apartment and distance to it.
    fn foot(&self, p: &TreePoint<S>) -> (S, S) {
        match p.branch {
            0 => (p.coord.clone(), S::zero()),
            b => (self.branches[b - 1].anchor.clone(), p.coord.clone()),
        }
    }

    /// Path length between two points.
    pub fn tree_distance(&self, p: &TreePoint<S>, q: &TreePoint<S>) -> S {
        if p.branch == q.branch {
            return (p.coord.clone() - q.coord.clone()).abs();
        }
        let (zp, sp) = self.foot(p);
        let (zq, sq) = self.foot(q);
        sp + sq + (zp - zq).abs()
    }

    /// The building metric, twice the path length.
    pub fn metric(&self, p: &TreePoint<S>, q: &TreePoint<S>) -> S {
        self.tree_distance(p, q).scale_int(2)
    }

    /// Points at path length `radius` from `0`; one per direction that is
    /// still alive at that depth.
    pub fn sphere(&self, radius: &S) -> BTreeSet<TreePoint<S>> {
        let mut out = BTreeSet::new();
        if radius.is_negative() {
            return out;
        }
        if radius.is_zero() {
            out.insert(TreePoint::base(S::zero()));
            return out;
        }
        if *radius <= self.depth {
            out.insert(TreePoint::base(radius.clone()));
            out.insert(TreePoint::base(-radius.clone()));
        }
        for (i, br) in self.branches.iter().enumerate() {
            let s = radius.clone() - br.anchor.abs();
            if s.is_positive() && s <= br.length {
                out.insert(TreePoint {
                    branch: i + 1,
                    coord: s,
                });
            }
        }
        out
    }

    /// Retraction onto the base apartment centered at the germ of the
    /// fundamental chamber at `0`; it preserves the distance to `0`.
    pub fn retraction_r(&self, p: &TreePoint<S>) -> S {
        match p.branch {
            0 => p.coord.clone(),
            b => {
                let z = &self.branches[b - 1].anchor;
                if z.is_positive() {
                    z.clone() + p.coord.clone()
                } else {
                    z.clone() - p.coord.clone()
                }
            }
        }
    }

    /// Retraction onto the base apartment centered at the `-∞` end. A
    /// branch point `p` at depth `s` above `z` lies in the apartment made of
    /// the ray from `-∞` to `z` and the branch, which is unfolded onto the
    /// base apartment fixing that ray.
    pub fn retraction_rho(&self, p: &TreePoint<S>) -> S {
        let (z, s) = self.foot(p);
        z + s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeVerdict {
    True,
    False,
    InsufficientThickness,
}

impl TreeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TreeVerdict::True => "true",
            TreeVerdict::False => "false",
            TreeVerdict::InsufficientThickness => "INSUFFICIENT_THICKNESS",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TreeReport<S> {
    pub x: S,
    pub sphere: BTreeSet<TreePoint<S>>,
    pub rho_image: BTreeSet<S>,
    pub hull_points: BTreeSet<S>,
    /// Special points in `(x⁻, 0)` that carry no branch.
    pub missing_branches: Vec<S>,
    pub verdict: TreeVerdict,
}

impl<S: JsonScalar> TreeReport<S> {
    pub fn to_json(&self) -> Value {
        let one = |c: &S| point_to_json(&Point::new(vec![c.clone()]));
        json!({
            "x": one(&self.x),
            "sphere": self.sphere.iter().map(|p| json!({
                "branch": p.branch,
                "coord": p.coord.to_json(),
            })).collect::<Vec<_>>(),
            "rho_image": self.rho_image.iter().map(one).collect::<Vec<_>>(),
            "hull_points": self.hull_points.iter().map(one).collect::<Vec<_>>(),
            "missing_branches": self.missing_branches.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
            "verdict": self.verdict.as_str(),
        })
    }
}

/// `conv*(W̄.x) ∩ (x + T)` in `α`-coordinates: the points `x⁻ + k·step`
/// up to `x⁺`, each confirmed against the dual half-space description of
/// the `A1` hull.
pub fn hull_lattice_points<S: Scalar>(step: &S, x: &S) -> BTreeSet<S> {
    let a1 = RootSystem::new(CartanType::A1);
    let hull = hull_of_orbit(&a1, &Point::new(vec![x.clone()]));
    let (lo, hi) = (-x.abs(), x.abs());
    let mut out = BTreeSet::new();
    let mut y = lo;
    while y <= hi {
        debug_assert!(hull.contains(&Point::new(vec![y.clone()])));
        out.insert(y.clone());
        y = y + step.clone();
    }
    out
}

/// Computes `ρ(r⁻¹(W̄.x))` and `conv*(W̄.x) ∩ (x + T)` for a special vertex
/// `x = cα` of the base apartment.
pub fn verify_tree_theorem<S: Scalar>(tree: &ThickTree<S>, x: &S) -> Result<TreeReport<S>, Error> {
    if !tree.in_translation_group(x) {
        return Err(Error::NotInLattice(x.to_string()));
    }
    let radius = x.abs();
    if radius > tree.depth {
        return Err(Error::InvalidArgument(format!(
            "|x| = {radius} exceeds the tree depth {}",
            tree.depth
        )));
    }
    let sphere = tree.sphere(&radius);
    let rho_image: BTreeSet<S> = sphere.iter().map(|p| tree.retraction_rho(p)).collect();
    let hull_points = hull_lattice_points(&tree.step, x);
    let missing_branches: Vec<S> = tree
        .specials
        .iter()
        .filter(|z| **z > -radius.clone() && z.is_negative() && tree.branch_count_at(z) == 0)
        .cloned()
        .collect();
    let verdict = if rho_image == hull_points {
        TreeVerdict::True
    } else if !missing_branches.is_empty() && rho_image.is_subset(&hull_points) {
        TreeVerdict::InsufficientThickness
    } else {
        TreeVerdict::False
    };
    Ok(TreeReport {
        x: x.clone(),
        sphere,
        rho_image,
        hull_points,
        missing_branches,
        verdict,
    })
}

/// Uniformly chosen branch, coordinate on a grid of `resolution` steps.
pub fn random_tree_point<S: Scalar, R: Rng>(tree: &ThickTree<S>, rng: &mut R, resolution: i128) -> TreePoint<S> {
    let b = rng.gen_range(0..=tree.branches.len());
    if b == 0 {
        let k = rng.gen_range(-resolution..=resolution);
        TreePoint::base(tree.depth.scale(&Rational::new(k, resolution)))
    } else {
        let k = rng.gen_range(1..=resolution);
        TreePoint {
            branch: b,
            coord: tree.branches[b - 1].length.scale(&Rational::new(k, resolution)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi, Lex};

    #[test]
    fn special_points_are_half_translations() {
        let tree = build_tree(&qi(1), &qi(2), 0).unwrap();
        assert_eq!(
            tree.special_points(),
            &[q(-3, 2), qi(-1), q(-1, 2), qi(0), q(1, 2), qi(1), q(3, 2)]
        );
        let tree = build_tree(&q(1, 2), &qi(1), 0).unwrap();
        assert!(tree.is_special(&q(1, 4)));
        assert!(!tree.is_special(&q(1, 3)));
    }

    #[test]
    fn layout_is_reproducible() {
        let a = build_tree(&qi(1), &qi(3), 7).unwrap();
        let b = build_tree(&qi(1), &qi(3), 7).unwrap();
        assert_eq!(a, b);
        let c = build_tree(&qi(1), &qi(3), 8).unwrap();
        assert_ne!(a.branches().len(), 0);
        assert!(a.special_points().iter().all(|z| a.branch_count_at(z) >= 1));
        assert!(c.special_points().iter().all(|z| (1..=3).contains(&c.branch_count_at(z))));
    }

    #[test]
    fn infinitesimal_step_is_capped() {
        let r = build_tree(&Lex::epsilon(), &Lex(qi(1), qi(0)), 0);
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
        assert!(build_tree(&qi(0), &qi(1), 0).is_err());
    }

    #[test]
    fn sphere_examples() {
        let flat = ThickTree::apartment(&qi(1), &qi(3)).unwrap();
        assert_eq!(flat.sphere(&qi(0)), [TreePoint::base(qi(0))].into_iter().collect());
        assert_eq!(
            flat.sphere(&qi(2)),
            [TreePoint::base(qi(-2)), TreePoint::base(qi(2))].into_iter().collect()
        );
    }

    #[test]
    fn retraction_examples() {
        let tree = build_tree(&qi(1), &qi(3), 1).unwrap();
        assert_eq!(tree.retraction_rho(&TreePoint::base(q(-5, 2))), q(-5, 2));
        let at = |z: Rational| tree.branches().iter().position(|b| b.anchor == z).unwrap() + 1;
        // Branch at z = -1, depth 1: r(p) = x⁻ = -2 and ρ(p) = -2 + 2·1.
        let p = TreePoint { branch: at(qi(-1)), coord: qi(1) };
        assert_eq!(tree.retraction_r(&p), qi(-2));
        assert_eq!(tree.retraction_rho(&p), qi(0));
        // Branch in the fundamental chamber: both retractions agree.
        let p = TreePoint { branch: at(qi(1)), coord: qi(1) };
        assert_eq!(tree.retraction_r(&p), tree.retraction_rho(&p));
    }

    #[test]
    fn theorem_examples() {
        let tree = build_tree(&qi(1), &qi(2), 3).unwrap();
        let r = verify_tree_theorem(&tree, &qi(0)).unwrap();
        assert_eq!(r.rho_image, [qi(0)].into_iter().collect());
        assert_eq!(r.verdict, TreeVerdict::True);
        let r = verify_tree_theorem(&tree, &qi(2)).unwrap();
        let expected: BTreeSet<_> = (-2..=2).map(qi).collect();
        assert_eq!(r.hull_points, expected);
        assert_eq!(r.rho_image, expected);
        assert_eq!(r.verdict, TreeVerdict::True);
        assert!(verify_tree_theorem(&tree, &q(1, 2)).is_err());
    }

    #[test]
    fn thin_tree_reports_insufficient_thickness() {
        let flat = ThickTree::apartment(&qi(1), &qi(3)).unwrap();
        let r = verify_tree_theorem(&flat, &qi(2)).unwrap();
        assert_eq!(r.rho_image, [qi(-2), qi(2)].into_iter().collect());
        assert_eq!(r.verdict, TreeVerdict::InsufficientThickness);
    }

    #[test]
    fn lex_tree() {
        let step = Lex(qi(1), qi(0));
        let tree = build_tree(&step, &Lex(qi(3), q(1, 2)), 11).unwrap();
        assert!(tree.is_special(&Lex(q(-3, 2), qi(0))));
        assert!(!tree.is_special(&Lex(qi(1), q(1, 5))));
        for k in 0..=3 {
            let r = verify_tree_theorem(&tree, &step.scale_int(k)).unwrap();
            assert_eq!(r.verdict, TreeVerdict::True);
        }
    }

    #[test]
    fn rho_does_not_increase_distance() {
        let tree = build_tree(&q(1, 2), &qi(2), 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..2000 {
            let p = random_tree_point(&tree, &mut rng, 12);
            let q = random_tree_point(&tree, &mut rng, 12);
            let image = (tree.retraction_rho(&p) - tree.retraction_rho(&q)).abs();
            assert!(image <= tree.tree_distance(&p, &q));
            assert_eq!(
                (tree.retraction_r(&p)).abs(),
                tree.tree_distance(&p, &TreePoint::base(qi(0)))
            );
        }
    }
}
