//! The maximal folding recursion inside `conv*(W̄.x)` and the construction
//! of a positive fold of the geodesic to `w₀x⁺` with a prescribed endpoint.
//!
//! Given a reduced word `w₀ = s_{i_1} ⋯ s_{i_n}` and `y` in the hull, set
//! `y_0 = y` and `y_k = y_{k-1} - λ_k α_{i_k}^∨` with `λ_k ≥ 0` maximal such
//! that `y_k` stays in the hull. The recursion always ends at `w₀x⁺`. On
//! lattice points the steps are rounded down to integers `m_k`, and applying
//! `e_{α_{i_k}}` exactly `m_k` times for `k = n, …, 1` to the straight path
//! from `0` to `w₀x⁺` yields a path ending at `y`.

use serde_json::{json, Value};

use crate::convexity::{hull_of_orbit, OrbitHull};
use crate::json::{point_to_json, JsonScalar};
use crate::model_space::{dominant_representative, Point, TranslationLattice};
use crate::paths::{root_operator_e, PLPath};
use crate::root_system::RootSystem;
use crate::scalar::{floor, Rational, Scalar};
use crate::Error;

/// Outcome of the recursion: `points[k]` is `y_k`, `steps[k-1]` is `λ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldSchedule<S> {
    pub word: Vec<usize>,
    pub points: Vec<Point<S>>,
    pub steps: Vec<S>,
    /// `w₀x⁺`, the point the recursion must reach.
    pub expected_terminal: Point<S>,
}

impl<S: Scalar> FoldSchedule<S> {
    pub fn terminal(&self) -> &Point<S> {
        self.points.last().expect("schedule holds y_0")
    }

    pub fn reaches_terminal(&self) -> bool {
        *self.terminal() == self.expected_terminal
    }
}

impl<S: JsonScalar> FoldSchedule<S> {
    pub fn to_json(&self) -> Value {
        json!({
            "word": self.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "steps": self.steps.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
            "points": self.points.iter().map(point_to_json).collect::<Vec<_>>(),
            "terminal": point_to_json(self.terminal()),
            "expected_terminal": point_to_json(&self.expected_terminal),
            "reaches_terminal": self.reaches_terminal(),
        })
    }
}

/// Largest `λ ≥ 0` with `y - λ α^∨ ∈ hull`, by exact one-dimensional linear
/// programming over the hull's half-spaces.
pub fn lambda_max<S: Scalar>(
    rs: &RootSystem,
    hull: &OrbitHull<S>,
    y: &Point<S>,
    simple: usize,
) -> Result<S, Error> {
    if simple >= rs.rank() {
        return Err(Error::NotSimple(simple));
    }
    if !hull.contains(y) {
        return Err(Error::NotInHull(y.to_string()));
    }
    let coroot = rs.coroot_vector(rs.simple_index(simple));
    let mut best: Option<S> = None;
    for h in &hull.halfspaces {
        let rate: Rational = h.normal.iter().zip(coroot.coords()).map(|(a, b)| a * b).sum();
        if rate < Rational::from_integer(0) {
            let slack = h.bound.clone() - h.value(y);
            let limit = slack.scale(&(Rational::from_integer(-1) / rate));
            best = Some(match best {
                Some(b) if b <= limit => b,
                _ => limit,
            });
        }
    }
    Ok(best.expect("the hull is bounded in every direction"))
}

fn check_word(rs: &RootSystem, word: &[usize]) -> Result<(), Error> {
    let w0 = rs.longest_word();
    let e = rs.element_from_word(word)?;
    if e.matrix != w0.matrix || word.len() != w0.len() {
        return Err(Error::BadWord(format!(
            "{:?} is not a reduced expression of w₀",
            word.iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    }
    Ok(())
}

fn run_schedule<S: Scalar>(
    rs: &RootSystem,
    x: &Point<S>,
    y: &Point<S>,
    word: &[usize],
    round: impl Fn(S) -> S,
) -> Result<FoldSchedule<S>, Error> {
    check_word(rs, word)?;
    let hull = hull_of_orbit(rs, x);
    if !hull.contains(y) {
        return Err(Error::NotInHull(y.to_string()));
    }
    let mut points = vec![y.clone()];
    let mut steps = Vec::with_capacity(word.len());
    for &letter in word {
        let current = points.last().expect("nonempty");
        let step = round(lambda_max(rs, &hull, current, letter)?);
        let coroot = rs.coroot_vector(rs.simple_index(letter));
        let next = current.add_scaled(&coroot, &-step.clone());
        debug_assert!(hull.contains(&next));
        points.push(next);
        steps.push(step);
    }
    let expected_terminal = rs.longest_word().act(&hull.dominant);
    Ok(FoldSchedule {
        word: word.to_vec(),
        points,
        steps,
        expected_terminal,
    })
}

/// The recursion with real (Λ-valued) maximal steps.
pub fn fold_schedule<S: Scalar>(
    rs: &RootSystem,
    x: &Point<S>,
    y: &Point<S>,
    word: &[usize],
) -> Result<FoldSchedule<S>, Error> {
    run_schedule(rs, x, y, word, |s| s)
}

/// The lattice specialization: `y ∈ x + Q(R^∨)` and integer steps `m_k`.
pub fn fold_schedule_lattice(
    rs: &RootSystem,
    x: &Point<Rational>,
    y: &Point<Rational>,
    word: &[usize],
) -> Result<FoldSchedule<Rational>, Error> {
    if !TranslationLattice::coroot(rs).contains(&(y.clone() - x.clone())) {
        return Err(Error::NotInLattice(y.to_string()));
    }
    run_schedule(rs, x, y, word, |s| Rational::from_integer(floor(&s)))
}

/// A positive fold together with its intermediate stages.
#[derive(Clone, Debug)]
pub struct FoldConstruction {
    pub schedule: FoldSchedule<Rational>,
    /// `stages[0]` is the straight path to `w₀x⁺`; stage `j` is the path
    /// after processing letter `n + 1 - j`; the last stage is the result.
    pub stages: Vec<PLPath>,
}

impl FoldConstruction {
    pub fn path(&self) -> &PLPath {
        self.stages.last().expect("at least the initial path")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schedule": self.schedule.to_json(),
            "stages": self.stages.iter().map(PLPath::to_json).collect::<Vec<_>>(),
            "path": self.path().to_json(),
            "endpoint": point_to_json(self.path().endpoint()),
        })
    }
}

/// Builds a positive fold of the straight path `0 → w₀x⁺` ending at `y`.
pub fn positive_fold_to(
    rs: &RootSystem,
    x: &Point<Rational>,
    y: &Point<Rational>,
    word: &[usize],
) -> Result<FoldConstruction, Error> {
    let schedule = fold_schedule_lattice(rs, x, y, word)?;
    let (dominant, _) = dominant_representative(rs, x);
    let start = rs.longest_word().act(&dominant);
    let mut stages = vec![PLPath::straight(start)];
    for k in (0..word.len()).rev() {
        let mut current = stages.last().expect("nonempty").clone();
        let times = schedule.steps[k].to_integer();
        for _ in 0..times {
            current = root_operator_e(rs, &current, word[k])?.ok_or(
                Error::FoldConstructionFailed {
                    step: k + 1,
                    letter: word[k] + 1,
                },
            )?;
        }
        stages.push(current);
    }
    Ok(FoldConstruction { schedule, stages })
}
