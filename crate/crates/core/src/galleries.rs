//! Alcove walks in the affine Coxeter complex of `W̄ ⋉ Q(R^∨)` and
//! positively folded galleries.
//!
//! Walls are the hyperplanes `H_{β,k} = {x : (x, β) = k}` with `k ∈ ℤ`. The
//! fundamental alcove `c_f` is `{x : (x, α_i) > 0, (x, θ) < 1}` for the
//! highest root `θ`. An alcove is `w·c_f` for an element `w` of the affine
//! Weyl group; its panel of type `j` is the image of the panel of `c_f`
//! lying on `H_{α_j,0}` (types `1..=n`) or on `H_{θ,1}` (type `0`). Crossing
//! the panel of type `j` replaces `w` by `w s_j`.
//!
//! Type-0 vertices are exactly the points of `Q(R^∨)`; the type-0 vertex of
//! `w·c_f` is the translation part of `w`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::convexity::{hull_of_orbit, lattice_points};
use crate::json::point_to_json;
use crate::model_space::{Hyperplane, Point, TranslationLattice};
use crate::root_system::{mat_mul, mat_vec, IntMatrix, RootSystem};
use crate::scalar::{Rational, Scalar};
use crate::Error;

/// An element `x ↦ Mx + τ` of the affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub linear: IntMatrix,
    pub translation: Point<Rational>,
}

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        AffineElement {
            linear: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
            translation: Point::zero(rank),
        }
    }

    pub fn act(&self, x: &Point<Rational>) -> Point<Rational> {
        x.transform(&self.linear) + self.translation.clone()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineElement) -> AffineElement {
        AffineElement {
            linear: mat_mul(&self.linear, &other.linear),
            translation: other.translation.transform(&self.linear) + self.translation.clone(),
        }
    }
}

/// An alcove `w·c_f`, with the word of affine generators that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    pub word: Vec<usize>,
    pub element: AffineElement,
}

/// A panel crossed or folded at by a gallery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Panel {
    pub kind: usize,
    pub wall: Hyperplane<Rational>,
}

/// `(source, c_0, d_1, c_1, …, d_n, c_n, target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gallery {
    pub source: Point<Rational>,
    pub alcoves: Vec<Alcove>,
    pub panels: Vec<Panel>,
    pub target: Point<Rational>,
}

impl Gallery {
    pub fn gallery_type(&self) -> Vec<usize> {
        self.panels.iter().map(|p| p.kind).collect()
    }

    pub fn is_folded_at(&self, i: usize) -> bool {
        self.alcoves[i] == self.alcoves[i + 1]
            || self.alcoves[i].element == self.alcoves[i + 1].element
    }
}

/// Geometry of the affine Coxeter complex for one root system.
pub struct AlcoveComplex<'a> {
    rs: &'a RootSystem,
    generators: Vec<AffineElement>,
    /// For each panel type: the root and level of the panel of `c_f`.
    base_walls: Vec<(Vec<i64>, i64)>,
    vertices: Vec<Point<Rational>>,
    interior: Point<Rational>,
}

impl<'a> AlcoveComplex<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let n = rs.rank();
        let theta = rs.highest_root_index();
        let mut generators = vec![AffineElement {
            linear: rs.reflection_matrix(theta),
            translation: rs.coroot_vector(theta),
        }];
        let mut base_walls = vec![(rs.root(theta).to_vec(), 1)];
        for i in 0..n {
            generators.push(AffineElement {
                linear: rs.simple_reflection(i).clone(),
                translation: Point::zero(n),
            });
            base_walls.push((rs.root(rs.simple_index(i)).to_vec(), 0));
        }
        // The vertices other than 0 are ω_j / m_j, where θ = Σ m_j α_j.
        let vertices: Vec<Point<Rational>> = (0..n)
            .map(|j| {
                let m = Rational::from_integer(rs.root(theta)[j] as i128);
                Point::new(rs.fundamental_coweight(j).to_vec()).scale(&(Rational::from_integer(1) / m))
            })
            .collect();
        let interior = vertices
            .iter()
            .fold(Point::zero(n), |acc, v| acc + v.clone())
            .scale(&Rational::new(1, (n + 1) as i128));
        AlcoveComplex {
            rs,
            generators,
            base_walls,
            vertices,
            interior,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// A point in the interior of the fundamental alcove.
    pub fn interior_point(&self) -> &Point<Rational> {
        &self.interior
    }

    pub fn is_in_fundamental_alcove(&self, p: &Point<Rational>) -> bool {
        let rs = self.rs;
        (0..rs.rank()).all(|i| rs.level(p, rs.simple_index(i)).is_positive())
            && rs.level(p, rs.highest_root_index()) < Rational::from_integer(1)
    }

    pub fn generator(&self, kind: usize) -> &AffineElement {
        &self.generators[kind]
    }

    /// The wall carrying the panel of type `kind` of `w·c_f`, described by
    /// a positive root.
    pub fn panel_wall(&self, w: &AffineElement, kind: usize) -> Hyperplane<Rational> {
        let (beta, k) = &self.base_walls[kind];
        let image = mat_vec(&w.linear, beta);
        let root = self
            .rs
            .root_index(&image)
            .expect("Weyl group elements permute roots");
        let level = Rational::from_integer(*k as i128) + self.rs.level(&w.translation, root);
        Hyperplane::new(root, level).normalized(self.rs)
    }

    /// The type-0 vertex of `w·c_f`.
    pub fn special_vertex(&self, w: &AffineElement) -> Point<Rational> {
        w.translation.clone()
    }

    /// Whether folding `w·c_f` at `wall` is positive: the wall separates the
    /// alcove from every far translate of the antidominant chamber `C_f⁻`.
    ///
    /// Far translates of `C_f⁻` lie on the side `(·, γ) < k` of
    /// `H_{γ,k}` for positive `γ`, so the fold is positive exactly when the
    /// alcove lies on the side `(·, γ) > k`.
    pub fn is_positive_fold(
        &self,
        w: &AffineElement,
        wall: &Hyperplane<Rational>,
    ) -> Result<bool, Error> {
        let wall = wall.normalized(self.rs);
        let supports = (0..self.generators.len()).any(|j| self.panel_wall(w, j) == wall);
        if !supports {
            return Err(Error::InvalidArgument(
                "the wall does not carry a panel of the alcove".into(),
            ));
        }
        Ok(self.rs.level(&w.act(&self.interior), wall.root) > wall.level)
    }

    /// Number of walls separating `c_f` from `w·c_f`.
    pub fn separating_walls(&self, w: &AffineElement) -> usize {
        let p = &self.interior;
        let q = w.act(p);
        (0..self.rs.num_positive())
            .map(|b| {
                let (a, c) = (self.rs.level(p, b), self.rs.level(&q, b));
                let (lo, hi) = if a < c { (a, c) } else { (c, a) };
                (hi.ceil().to_integer() - lo.floor().to_integer() - 1).max(0) as usize
            })
            .sum()
    }

    /// Deterministic interior points. Attempt `0` starts from the
    /// barycenter, later attempts from other convex combinations of the
    /// vertices; each is then nudged off the barycentric symmetry.
    pub fn perturbed_interior(&self, attempt: u32) -> Point<Rational> {
        let n = self.rs.rank();
        let a = attempt as i128;
        let weight = |k: i128| if a == 0 { 1 } else { 1 + (a * (2 * k + 1) + k) % 7 };
        let total: i128 = (0..=n as i128).map(weight).sum();
        let center = self
            .vertices
            .iter()
            .enumerate()
            .fold(Point::zero(n), |acc, (j, v)| {
                acc + v.scale(&Rational::new(weight(j as i128 + 1), total))
            });
        let mut scale = Rational::new(1, 97 + 10 * attempt as i128);
        loop {
            let dir: Vec<Rational> = (0..n)
                .map(|j| {
                    let base = (j as i128 + 2) * (attempt as i128 + 3) + 1;
                    Rational::new(if (j + attempt as usize).is_multiple_of(2) { 1 } else { -1 }, base)
                })
                .collect();
            let p = center.add_scaled(&Point::new(dir), &scale);
            if self.is_in_fundamental_alcove(&p) {
                return p;
            }
            scale /= Rational::from_integer(2);
        }
    }
}

/// Checks that `x` is dominant and lies in `Q(R^∨)`.
fn check_dominant_lattice(rs: &RootSystem, x: &Point<Rational>) -> Result<(), Error> {
    crate::model_space::validate(rs, x)?;
    if !rs.is_dominant(x) {
        return Err(Error::NotDominant(x.to_string()));
    }
    if !TranslationLattice::coroot(rs).contains(x) {
        return Err(Error::NotInLattice(x.to_string()));
    }
    Ok(())
}

/// Minimal gallery from the vertex `0` to the vertex `x⁺`, obtained by
/// walking along the straight segment from a generic interior point of `c_f`
/// to `x⁺`.
pub fn minimal_gallery(rs: &RootSystem, x_plus: &Point<Rational>) -> Result<Gallery, Error> {
    minimal_gallery_with(rs, x_plus, 0)
}

/// As [`minimal_gallery`], starting from the `attempt`-th perturbation of the
/// barycenter. Attempts that hit a wall intersection of codimension two are
/// skipped deterministically.
pub fn minimal_gallery_with(
    rs: &RootSystem,
    x_plus: &Point<Rational>,
    attempt: u32,
) -> Result<Gallery, Error> {
    check_dominant_lattice(rs, x_plus)?;
    let complex = AlcoveComplex::new(rs);
    let mut attempt = attempt;
    let crossings = loop {
        let p = complex.perturbed_interior(attempt);
        if let Some(c) = wall_crossings(rs, &p, x_plus) {
            break c;
        }
        attempt += 1;
    };

    let rank = rs.rank();
    let mut current = Alcove {
        word: Vec::new(),
        element: AffineElement::identity(rank),
    };
    let mut alcoves = vec![current.clone()];
    let mut panels = Vec::new();
    for wall in crossings {
        let kind = (0..=rank)
            .find(|&j| complex.panel_wall(&current.element, j) == wall)
            .expect("the walk leaves each alcove through one of its panels");
        let element = current.element.compose(complex.generator(kind));
        let mut word = current.word.clone();
        word.push(kind);
        current = Alcove { word, element };
        alcoves.push(current.clone());
        panels.push(Panel { kind, wall });
    }
    let target = complex.special_vertex(&current.element);
    debug_assert_eq!(&target, x_plus);
    Ok(Gallery {
        source: Point::zero(rank),
        alcoves,
        panels,
        target,
    })
}

/// Walls strictly between `p` and `x`, ordered along the segment; `None` if
/// two walls are met at the same time.
fn wall_crossings(
    rs: &RootSystem,
    p: &Point<Rational>,
    x: &Point<Rational>,
) -> Option<Vec<Hyperplane<Rational>>> {
    let mut events: Vec<(Rational, Hyperplane<Rational>)> = Vec::new();
    for b in 0..rs.num_positive() {
        let (lo, hi) = (rs.level(p, b), rs.level(x, b));
        if lo == hi {
            continue;
        }
        let (a, c) = if lo < hi { (lo, hi) } else { (hi, lo) };
        let mut k = a.floor().to_integer() + 1;
        while Rational::from_integer(k) < c {
            let level = Rational::from_integer(k);
            let t = (level - lo) / (hi - lo);
            events.push((t, Hyperplane::new(b, level)));
            k += 1;
        }
    }
    events.sort_by_key(|e| e.0);
    if events.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    Some(events.into_iter().map(|(_, h)| h).collect())
}

/// A positively folded gallery in compact form: the starting alcove
/// `w·c_f` (`w` indexes the spherical Weyl group) and, per panel, whether the
/// gallery folds there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FoldedGallery {
    pub start: usize,
    pub folds: Vec<bool>,
    pub target: Point<Rational>,
}

/// Result of enumerating all positively folded galleries of one type.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub gallery_type: Vec<usize>,
    pub galleries: Vec<FoldedGallery>,
    pub explored: u64,
}

impl Enumeration {
    pub fn targets(&self) -> BTreeSet<Point<Rational>> {
        self.galleries.iter().map(|g| g.target.clone()).collect()
    }

    pub fn target_counts(&self) -> BTreeMap<Point<Rational>, usize> {
        let mut counts = BTreeMap::new();
        for g in &self.galleries {
            *counts.entry(g.target.clone()).or_insert(0) += 1;
        }
        counts
    }
}

/// Expands a compact gallery into alcoves and panels.
pub fn materialize(rs: &RootSystem, gallery_type: &[usize], folded: &FoldedGallery) -> Gallery {
    let complex = AlcoveComplex::new(rs);
    let start = &rs.weyl_group()[folded.start];
    let mut current = Alcove {
        word: Vec::new(),
        element: AffineElement {
            linear: start.matrix.clone(),
            translation: Point::zero(rs.rank()),
        },
    };
    let mut alcoves = vec![current.clone()];
    let mut panels = Vec::new();
    for (&kind, &fold) in gallery_type.iter().zip(&folded.folds) {
        let wall = complex.panel_wall(&current.element, kind);
        if !fold {
            let element = current.element.compose(complex.generator(kind));
            let mut word = current.word.clone();
            word.push(kind);
            current = Alcove { word, element };
        }
        alcoves.push(current.clone());
        panels.push(Panel { kind, wall });
    }
    Gallery {
        source: Point::zero(rs.rank()),
        target: complex.special_vertex(&current.element),
        alcoves,
        panels,
    }
}

/// Structural audit: consecutive alcoves share the recorded panel, the type
/// is respected, every fold is positive, the source and target are the
/// type-0 vertices of the first and last alcoves.
pub fn audit(rs: &RootSystem, gallery_type: &[usize], g: &Gallery) -> Result<(), String> {
    let complex = AlcoveComplex::new(rs);
    if g.gallery_type() != gallery_type || g.alcoves.len() != gallery_type.len() + 1 {
        return Err("gallery does not have the requested type".into());
    }
    if g.alcoves[0].element.act(&Point::zero(rs.rank())) != g.source {
        return Err("source is not a vertex of the first alcove".into());
    }
    for (i, panel) in g.panels.iter().enumerate() {
        let (a, b) = (&g.alcoves[i].element, &g.alcoves[i + 1].element);
        if complex.panel_wall(a, panel.kind) != panel.wall
            || complex.panel_wall(b, panel.kind) != panel.wall
        {
            return Err(format!("panel {i} is not shared by its alcoves"));
        }
        if a == b {
            if !complex
                .is_positive_fold(a, &panel.wall)
                .map_err(|e| e.to_string())?
            {
                return Err(format!("fold at panel {i} is not positive"));
            }
        } else if a.compose(complex.generator(panel.kind)) != *b {
            return Err(format!("alcoves {i} and {} are not adjacent", i + 1));
        }
    }
    let last = &g.alcoves.last().expect("nonempty").element;
    if complex.special_vertex(last) != g.target {
        return Err("target is not the type-0 vertex of the last alcove".into());
    }
    Ok(())
}

/// All positively folded galleries of the given type with source `0`.
///
/// Depth-first: at each panel the gallery either crosses or, when the fold is
/// positive, stays. The subtrees for the `|W̄|` starting alcoves around `0`
/// run in parallel; `budget` caps the total number of visited nodes.
pub fn enumerate_positively_folded(
    rs: &RootSystem,
    gallery_type: &[usize],
    budget: u64,
) -> Result<Enumeration, Error> {
    if let Some(&bad) = gallery_type.iter().find(|&&k| k > rs.rank()) {
        return Err(Error::InvalidArgument(format!("panel type {bad} out of range")));
    }
    let complex = AlcoveComplex::new(rs);
    let explored = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let per_start: Vec<Vec<FoldedGallery>> = rs
        .weyl_group()
        .par_iter()
        .enumerate()
        .map(|(start, w)| {
            let mut out = Vec::new();
            let origin = AffineElement {
                linear: w.matrix.clone(),
                translation: Point::zero(rs.rank()),
            };
            let mut folds = Vec::with_capacity(gallery_type.len());
            let mut search = Search {
                complex: &complex,
                gallery_type,
                budget,
                explored: &explored,
                exhausted: &exhausted,
                start,
                out: &mut out,
            };
            search.descend(&origin, &mut folds);
            out
        })
        .collect();
    let explored = explored.load(Ordering::Relaxed);
    let galleries: Vec<FoldedGallery> = per_start.into_iter().flatten().collect();
    if exhausted.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            budget,
            explored,
            completed: galleries.len() as u64,
        });
    }
    Ok(Enumeration {
        gallery_type: gallery_type.to_vec(),
        galleries,
        explored,
    })
}

struct Search<'s, 'a> {
    complex: &'s AlcoveComplex<'a>,
    gallery_type: &'s [usize],
    budget: u64,
    explored: &'s AtomicU64,
    exhausted: &'s AtomicBool,
    start: usize,
    out: &'s mut Vec<FoldedGallery>,
}

impl Search<'_, '_> {
    fn descend(&mut self, w: &AffineElement, folds: &mut Vec<bool>) {
        if self.exhausted.load(Ordering::Relaxed) {
            return;
        }
        if self.explored.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            return;
        }
        let depth = folds.len();
        if depth == self.gallery_type.len() {
            self.out.push(FoldedGallery {
                start: self.start,
                folds: folds.clone(),
                target: self.complex.special_vertex(w),
            });
            return;
        }
        let kind = self.gallery_type[depth];
        folds.push(false);
        let crossed = w.compose(self.complex.generator(kind));
        self.descend(&crossed, folds);
        folds.pop();

        let wall = self.complex.panel_wall(w, kind);
        if self
            .complex
            .is_positive_fold(w, &wall)
            .expect("the wall carries a panel of w")
        {
            folds.push(true);
            self.descend(w, folds);
            folds.pop();
        }
    }
}

/// Comparison of gallery targets with the lattice points of the hull.
#[derive(Clone, Debug)]
pub struct SimplicialReport {
    pub x_plus: Point<Rational>,
    pub gallery_type: Vec<usize>,
    pub targets: BTreeMap<Point<Rational>, usize>,
    pub hull_points: BTreeSet<Point<Rational>>,
    pub galleries: usize,
    pub verdict: bool,
}

impl SimplicialReport {
    pub fn to_json(&self) -> Value {
        json!({
            "x_plus": point_to_json(&self.x_plus),
            "gallery_type": self.gallery_type,
            "galleries": self.galleries,
            "targets": self.targets.iter().map(|(p, c)| json!({
                "point": point_to_json(p),
                "count": c,
            })).collect::<Vec<_>>(),
            "hull_points": self.hull_points.iter().map(point_to_json).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }
}

/// Checks that the targets of positively folded galleries of the type of a
/// minimal gallery `0 ⇝ x⁺` are exactly `conv*(W̄.x) ∩ (x + Q(R^∨))`.
pub fn verify_simplicial_convexity(
    rs: &RootSystem,
    x_plus: &Point<Rational>,
    budget: u64,
) -> Result<SimplicialReport, Error> {
    verify_simplicial_convexity_with(rs, x_plus, budget, 0)
}

pub fn verify_simplicial_convexity_with(
    rs: &RootSystem,
    x_plus: &Point<Rational>,
    budget: u64,
    attempt: u32,
) -> Result<SimplicialReport, Error> {
    let gallery = minimal_gallery_with(rs, x_plus, attempt)?;
    let gallery_type = gallery.gallery_type();
    let enumeration = enumerate_positively_folded(rs, &gallery_type, budget)?;
    let hull = hull_of_orbit(rs, x_plus);
    let hull_points = lattice_points(&hull, rs, &TranslationLattice::coroot(rs), x_plus)?;
    let targets = enumeration.target_counts();
    let verdict = targets.keys().cloned().collect::<BTreeSet<_>>() == hull_points;
    Ok(SimplicialReport {
        x_plus: x_plus.clone(),
        gallery_type,
        targets,
        hull_points,
        galleries: enumeration.galleries.len(),
        verdict,
    })
}
