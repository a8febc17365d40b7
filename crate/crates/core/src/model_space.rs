//! Points of the model space over an ordered group, its Λ-valued metric,
//! hyperplane coordinates, affine reflections and segments.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};


use crate::root_system::{IntMatrix, RootSystem, WeylElement};
use crate::scalar::{Rational, Scalar};
use crate::Error;

/// A point `Σ λ_i α_i` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<S>(Vec<S>);

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Point(vec![S::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(
            coords
                .iter()
                .map(|&c| S::from_rational(Rational::from_integer(c as i128)))
                .collect(),
        )
    }

    pub fn from_rationals(coords: &[Rational]) -> Self {
        Point(coords.iter().map(|c| S::from_rational(*c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [S] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<S> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Point(self.0.iter().map(|c| c.scale(factor)).collect())
    }

    /// `self + factor · v` for a rational direction `v`.
    pub fn add_scaled(&self, v: &Point<Rational>, factor: &S) -> Self {
        Point(
            self.0
                .iter()
                .zip(v.coords())
                .map(|(c, d)| c.clone() + factor.scale(d))
                .collect(),
        )
    }

    /// `Σ_j row_j · x_j` for an integer row.
    pub fn apply_int_row(&self, row: &[i64]) -> S {
        self.0
            .iter()
            .zip(row)
            .filter(|(_, &r)| r != 0)
            .fold(S::zero(), |acc, (c, &r)| acc + c.scale_int(r))
    }

    /// `Σ_j row_j · x_j` for a rational row.
    pub fn apply_row(&self, row: &[Rational]) -> S {
        self.0
            .iter()
            .zip(row)
            .filter(|(_, r)| !Scalar::is_zero(*r))
            .fold(S::zero(), |acc, (c, r)| acc + c.scale(r))
    }

    pub fn transform(&self, m: &IntMatrix) -> Self {
        Point(m.iter().map(|row| self.apply_int_row(row)).collect())
    }

    pub fn translate(&self, t: &Point<S>) -> Self {
        self.clone() + t.clone()
    }
}

impl Point<Rational> {
    /// Embeds a rational point into another scalar group.
    pub fn lift<S: Scalar>(&self) -> Point<S> {
        Point::from_rationals(&self.0)
    }

    /// Sum of absolute coordinates.
    pub fn l1_norm(&self) -> Rational {
        self.0.iter().map(Scalar::abs).sum()
    }
}

impl<S> Index<usize> for Point<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S: Scalar> Add for Point<S> {
    type Output = Point<S>;
    fn add(self, rhs: Point<S>) -> Point<S> {
        Point(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<S: Scalar> Sub for Point<S> {
    type Output = Point<S>;
    fn sub(self, rhs: Point<S>) -> Point<S> {
        Point(self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<S: Scalar> Neg for Point<S> {
    type Output = Point<S>;
    fn neg(self) -> Point<S> {
        Point(self.0.into_iter().map(|a| -a).collect())
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

fn check_rank<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> Result<(), Error> {
    if x.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: x.rank(),
        });
    }
    Ok(())
}

/// The hyperplane `H_{β,λ} = {x : (x, β) = λ}`, i.e.
/// `(β,β)/2 · ⟨x, β^∨⟩ = λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane<S> {
    pub root: usize,
    pub level: S,
}

/// Side of a hyperplane a point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Negative,
    On,
    Positive,
}

impl<S: Scalar> Hyperplane<S> {
    pub fn new(root: usize, level: S) -> Self {
        Hyperplane { root, level }
    }

    /// The same hyperplane described by a positive root.
    pub fn normalized(&self, rs: &RootSystem) -> Self {
        if rs.is_positive_index(self.root) {
            self.clone()
        } else {
            Hyperplane {
                root: rs.negate_index(self.root),
                level: -self.level.clone(),
            }
        }
    }

    pub fn side(&self, rs: &RootSystem, x: &Point<S>) -> Side {
        match rs.level(x, self.root).cmp(&self.level) {
            std::cmp::Ordering::Less => Side::Negative,
            std::cmp::Ordering::Equal => Side::On,
            std::cmp::Ordering::Greater => Side::Positive,
        }
    }

    pub fn contains(&self, rs: &RootSystem, x: &Point<S>) -> bool {
        self.side(rs, x) == Side::On
    }

    pub fn reflect(&self, rs: &RootSystem, x: &Point<S>) -> Point<S> {
        affine_reflect(rs, x, self.root, &self.level)
    }
}

/// Translation group `T` of the affine Weyl group `W̄T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TranslationLattice {
    /// All of the model space.
    Full,
    /// The integer span of a full-rank set of rational generators.
    Span(Vec<Point<Rational>>),
}

impl TranslationLattice {
    /// The coroot lattice `Q(R^∨)`, spanned by the simple coroots.
    pub fn coroot(rs: &RootSystem) -> Self {
        TranslationLattice::Span(
            (0..rs.rank())
                .map(|i| rs.coroot_vector(rs.simple_index(i)))
                .collect(),
        )
    }

    /// The root lattice `ℤR`.
    pub fn root(rs: &RootSystem) -> Self {
        TranslationLattice::Span(
            (0..rs.rank())
                .map(|i| Point::from_ints(rs.root(rs.simple_index(i))))
                .collect(),
        )
    }

    pub fn generators(&self) -> Option<&[Point<Rational>]> {
        match self {
            TranslationLattice::Full => None,
            TranslationLattice::Span(g) => Some(g),
        }
    }

    /// Integer coordinates of `v` in the generators, if `v` is in the lattice.
    pub fn coordinates(&self, v: &Point<Rational>) -> Option<Vec<i128>> {
        let gens = self.generators()?;
        let sol = solve(gens, v)?;
        sol.iter()
            .all(|c| c.is_integer())
            .then(|| sol.iter().map(|c| c.to_integer()).collect())
    }

    pub fn contains(&self, v: &Point<Rational>) -> bool {
        match self {
            TranslationLattice::Full => true,
            TranslationLattice::Span(_) => self.coordinates(v).is_some(),
        }
    }

    /// Checks that every simple reflection maps generators into the lattice.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        match self {
            TranslationLattice::Full => true,
            TranslationLattice::Span(gens) => !gens.is_empty()
                && gens.iter().all(|g| {
                    (0..rs.rank()).all(|i| self.contains(&rs.reflect(g, rs.simple_index(i))))
                }),
        }
    }
}

/// Solves `Σ c_k g_k = v` for a square, invertible generator set.
pub(crate) fn solve(gens: &[Point<Rational>], v: &Point<Rational>) -> Option<Vec<Rational>> {
    let n = v.rank();
    if gens.len() != n {
        return None;
    }
    // Augmented matrix with generators as columns.
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = gens.iter().map(|g| g[r]).collect();
            row.push(v[r]);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !Scalar::is_zero(&a[r][col]))?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !Scalar::is_zero(&a[r][col]) {
                let f = a[r][col];
                let pivot = a[col].clone();
                for (v, p) in a[r].iter_mut().zip(&pivot) {
                    *v -= f * *p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n]).collect())
}

/// Hyperplane coordinates `x^β = ½⟨x, β^∨⟩` for each simple root.
pub fn hyperplane_coords<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> Vec<S> {
    let half = Rational::new(1, 2);
    (0..rs.rank())
        .map(|i| rs.pairing(x, rs.simple_index(i)).scale(&half))
        .collect()
}

/// Splits `x = m + x^β β` with `m ∈ H_{β,0}`.
pub fn decompose<S: Scalar>(rs: &RootSystem, x: &Point<S>, root: usize) -> (Point<S>, S) {
    let coord = rs.pairing(x, root).scale(&Rational::new(1, 2));
    let beta: Point<Rational> = rs.root_point(root);
    let m = x.add_scaled(&beta, &-coord.clone());
    (m, coord)
}

/// `d(x, y) = Σ_{β ∈ R⁺} |⟨y - x, β^∨⟩|`.
pub fn distance<S: Scalar>(rs: &RootSystem, x: &Point<S>, y: &Point<S>) -> S {
    let diff = y.clone() - x.clone();
    (0..rs.num_positive()).fold(S::zero(), |acc, i| acc + rs.pairing(&diff, i).abs())
}

/// `d(0, x)` from the hyperplane coordinates of the dominant representative:
/// `d(0, x) = 2 Σ_{β ∈ R⁺} Σ_{γ ∈ B} q^β_γ (x⁺)^γ`, where `q^β_γ` are the
/// coefficients of `β^∨` in the simple coroots.
pub fn distance_to_origin_closed_form<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> S {
    let (dominant, _) = dominant_representative(rs, x);
    let coords = hyperplane_coords(rs, &dominant);
    let mut total = S::zero();
    for beta in 0..rs.num_positive() {
        for (q, c) in rs.coroot_coefficients(beta).iter().zip(&coords) {
            total = total + c.abs().scale(q);
        }
    }
    total.scale_int(2)
}

/// `r_{β,λ}(x) = s_β(x) + 2λ/(β,β) β`.
pub fn affine_reflect<S: Scalar>(rs: &RootSystem, x: &Point<S>, root: usize, level: &S) -> Point<S> {
    let reflected = rs.reflect(x, root);
    let len = Rational::from_integer(rs.root_length_sq(root) as i128);
    let shift = level.scale(&(Rational::from_integer(2) / len));
    reflected.add_scaled(&rs.root_point(root), &shift)
}

/// The unique dominant point `x⁺` of `W̄.x` and an element `w` with
/// `w.x = x⁺`.
pub fn dominant_representative<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> (Point<S>, WeylElement) {
    let mut current = x.clone();
    let mut applied = Vec::new();
    while let Some(i) =
        (0..rs.rank()).find(|&i| rs.pairing(&current, rs.simple_index(i)).is_negative())
    {
        current = rs.reflect(&current, rs.simple_index(i));
        applied.push(i);
    }
    applied.reverse();
    let w = rs
        .element_from_word(&applied)
        .expect("letters come from the rank range");
    (current, w)
}

/// Whether `z` lies on the segment `seg(x, y)`, i.e.
/// `d(x, y) = d(x, z) + d(z, y)`.
pub fn in_segment<S: Scalar>(rs: &RootSystem, x: &Point<S>, y: &Point<S>, z: &Point<S>) -> bool {
    distance(rs, x, y) == distance(rs, x, z) + distance(rs, z, y)
}

/// Membership in the `W̄T`-convex hull of `{x, y}` for `T` the full group:
/// the intersection of all half-apartments containing both points, i.e. for
/// every positive root `β`, `(z, β)` lies between `(x, β)` and `(y, β)`.
pub fn in_convex_hull_of_pair<S: Scalar>(
    rs: &RootSystem,
    x: &Point<S>,
    y: &Point<S>,
    z: &Point<S>,
) -> bool {
    (0..rs.num_positive()).all(|b| {
        let (a, c) = (rs.level(x, b), rs.level(y, b));
        let (lo, hi) = if a <= c { (a, c) } else { (c, a) };
        let v = rs.level(z, b);
        lo <= v && v <= hi
    })
}

/// Validates a point against a root system's rank.
pub fn validate<S: Scalar>(rs: &RootSystem, x: &Point<S>) -> Result<(), Error> {
    check_rank(rs, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;
    use crate::scalar::{q, qi, Lex};

    fn pt(c: &[Rational]) -> Point<Rational> {
        Point::new(c.to_vec())
    }

    #[test]
    fn hyperplane_coordinate_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        assert_eq!(hyperplane_coords(&a1, &pt(&[qi(1)])), vec![qi(1)]);
        let a2 = RootSystem::new(CartanType::A2);
        assert_eq!(hyperplane_coords(&a2, &pt(&[qi(1), qi(0)])), vec![qi(1), q(-1, 2)]);
        assert_eq!(hyperplane_coords(&a2, &Point::<Rational>::zero(2)), vec![qi(0), qi(0)]);
    }

    #[test]
    fn decomposition_lands_on_the_wall() {
        let b2 = RootSystem::new(CartanType::B2);
        let x = pt(&[q(3, 2), q(-7, 3)]);
        for i in 0..b2.roots().len() {
            let (m, c) = decompose(&b2, &x, i);
            assert!(b2.pairing(&m, i).is_zero());
            assert_eq!(m.add_scaled(&b2.root_point(i), &c), x);
        }
    }

    #[test]
    fn distance_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        let a2 = RootSystem::new(CartanType::A2);
        let x = pt(&[q(1, 3), q(5, 2)]);
        assert_eq!(distance(&a2, &x, &x), qi(0));
        assert_eq!(distance(&a1, &Point::zero(1), &pt(&[qi(1)])), qi(2));
        assert_eq!(distance(&a2, &Point::zero(2), &pt(&[qi(1), qi(0)])), qi(4));
    }

    #[test]
    fn closed_form_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        let a2 = RootSystem::new(CartanType::A2);
        assert_eq!(distance_to_origin_closed_form(&a2, &Point::<Rational>::zero(2)), qi(0));
        // The direct sum is |1| + |1| + |2| = 4.
        let theta = pt(&[qi(1), qi(1)]);
        assert_eq!(distance(&a2, &Point::zero(2), &theta), qi(4));
        assert_eq!(distance_to_origin_closed_form(&a2, &theta), qi(4));
        assert_eq!(distance_to_origin_closed_form(&a1, &pt(&[qi(-3)])), qi(6));
    }

    #[test]
    fn closed_form_matches_definition_on_non_simply_laced() {
        for t in [CartanType::B2, CartanType::C2, CartanType::G2] {
            let rs = RootSystem::new(t);
            for a in -4..=4 {
                for b in -4..=4 {
                    let x = pt(&[q(a, 3), q(b, 2)]);
                    assert_eq!(
                        distance_to_origin_closed_form(&rs, &x),
                        distance(&rs, &Point::zero(2), &x),
                        "{t} {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn affine_reflection_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        let zero = Point::<Rational>::zero(1);
        assert_eq!(affine_reflect(&a1, &zero, 0, &qi(1)), pt(&[qi(1)]));
        assert_eq!(affine_reflect(&a1, &pt(&[qi(1)]), 0, &qi(1)), zero);
        let a2 = RootSystem::new(CartanType::A2);
        let x = pt(&[q(2, 3), q(-1, 4)]);
        assert_eq!(affine_reflect(&a2, &x, 1, &qi(0)), a2.reflect(&x, 1));
    }

    #[test]
    fn affine_reflection_fixes_its_hyperplane_lex() {
        let g2 = RootSystem::new(CartanType::G2);
        let level = Lex(qi(2), qi(-1));
        for root in 0..g2.roots().len() {
            let h = Hyperplane::new(root, level.clone());
            let x = Point::new(vec![Lex(q(1, 2), qi(3)), Lex(qi(-1), q(1, 7))]);
            let y = h.reflect(&g2, &x);
            assert_eq!(h.reflect(&g2, &y), x);
            let (m, _) = decompose(&g2, &x, root);
            // Move m onto H_{β,λ} and check it is fixed.
            let len = Rational::from_integer(g2.root_length_sq(root) as i128);
            let on = m.add_scaled(&g2.root_point(root), &level.scale(&(Rational::from_integer(1) / len)));
            assert!(h.contains(&g2, &on));
            assert_eq!(h.reflect(&g2, &on), on);
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        let (d, w) = dominant_representative(&a1, &pt(&[qi(-1)]));
        assert_eq!(d, pt(&[qi(1)]));
        assert_eq!(w.word, vec![0]);
        let a2 = RootSystem::new(CartanType::A2);
        let x = pt(&[qi(-1), qi(0)]);
        let (d, w) = dominant_representative(&a2, &x);
        assert_eq!(d, pt(&[qi(1), qi(1)]));
        assert_eq!(w.len(), 2);
        assert_eq!(w.act(&x), d);
        let dom = pt(&[qi(2), qi(1)]);
        let (d, w) = dominant_representative(&a2, &dom);
        assert_eq!(d, dom);
        assert!(w.is_identity());
    }

    #[test]
    fn segment_examples() {
        let a1 = RootSystem::new(CartanType::A1);
        let (x, y) = (pt(&[qi(-1)]), pt(&[qi(1)]));
        assert!(in_segment(&a1, &x, &y, &x));
        assert!(in_segment(&a1, &x, &y, &Point::zero(1)));
        let a2 = RootSystem::new(CartanType::A2);
        let zero = Point::zero(2);
        let theta = pt(&[qi(1), qi(1)]);
        // d(0,θ) = 4, d(0,α₁) = 4, d(α₁,θ) = d(0,α₂) = 4.
        assert!(!in_segment(&a2, &zero, &theta, &pt(&[qi(1), qi(0)])));
        assert!(in_segment(&a2, &zero, &theta, &pt(&[q(1, 2), q(1, 2)])));
    }

    #[test]
    fn coroot_lattice_is_weyl_invariant() {
        for t in CartanType::ALL {
            let rs = RootSystem::new(t);
            assert!(TranslationLattice::coroot(&rs).is_weyl_invariant(&rs));
            assert!(TranslationLattice::root(&rs).is_weyl_invariant(&rs));
        }
        let a1 = RootSystem::new(CartanType::A1);
        let skew = TranslationLattice::Span(vec![pt(&[q(1, 2)])]);
        assert!(skew.contains(&pt(&[qi(3)])));
        assert!(!skew.contains(&pt(&[q(1, 3)])));
        assert!(skew.is_weyl_invariant(&a1));
    }
}
