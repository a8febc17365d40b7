use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weylfold::convexity::{contains_via_cone, hull_of_orbit, lattice_points};
use weylfold::folding::{fold_schedule, positive_fold_to};
use weylfold::galleries::verify_simplicial_convexity;
use weylfold::json::{point_to_json, points_to_json, JsonScalar, SCHEMA_VERSION};
use weylfold::lambda_tree::{build_tree, verify_tree_theorem, TreeVerdict};
use weylfold::literal::{parse_lex, parse_lex_point, parse_point, parse_rational};
use weylfold::model_space::{
    distance, distance_to_origin_closed_form, dominant_representative, validate, TranslationLattice,
};
use weylfold::plot::render_svg;
use weylfold::{Error, Lex, Point, Rational, RootSystem, Scalar};

/// Exact computations in affine building model spaces.
#[derive(Parser, Debug)]
#[command(name = "weylfold", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weyl group orbit of a point.
    Orbit(PointArgs),
    /// Dual half-spaces and lattice points of the hull of an orbit.
    Hull(HullArgs),
    /// Distance between two points and the closed form of d(0, x).
    Distance(PairArgs),
    /// Maximal folding schedule from y towards w₀x⁺.
    Fold(FoldArgs),
    /// Positively folded galleries against the lattice points of the hull.
    Galleries(GalleryArgs),
    /// Rank-one theorem on a seeded thick tree.
    Tree(TreeArgs),
    /// SVG of the folding stages of a rank-2 fold.
    Plot(PlotArgs),
    /// Runs the built-in verification suite.
    VerifyAll(VerifyArgs),
}

#[derive(Args, Debug)]
struct PointArgs {
    /// Root system label: A1, A2, A3, B2, C2 or G2.
    #[arg(long = "type")]
    cartan: String,
    /// Point in simple-root coordinates, e.g. `1,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Read coordinates as lexicographic pairs `a:b`.
    #[arg(long)]
    lex: bool,
}

#[derive(Args, Debug)]
struct HullArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Test membership of this point.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// List the points of x + Q(R^∨) in the hull.
    #[arg(long)]
    lattice_points: bool,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Args, Debug)]
struct FoldArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// One-based reduced word of w₀; defaults to the lexicographically least.
    #[arg(long)]
    word: Option<String>,
    /// Also write the folding stages as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GalleryArgs {
    #[arg(long = "type")]
    cartan: String,
    /// Dominant vertex x⁺ in the coroot lattice.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Args, Debug)]
struct TreeArgs {
    /// Generator of the translation group T.
    #[arg(long, default_value = "1")]
    step: String,
    /// Half-length N of the base apartment.
    #[arg(long, default_value = "4")]
    depth: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Special vertex x in α-coordinates.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Read scalars as lexicographic pairs `a:b`.
    #[arg(long)]
    lex: bool,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long = "type")]
    cartan: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long)]
    word: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Smaller instances only.
    #[arg(long)]
    quick: bool,
}

/// Why a run did not succeed.
enum Failure {
    Input(Error),
    Budget(Error),
    Verdict(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e),
            other => Failure::Input(other),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Input(Error::InvalidArgument(e.to_string()))
}

fn envelope(command: &str, mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
    }
    body
}

fn system(label: &str) -> Result<RootSystem, Error> {
    RootSystem::from_label(label)
}

fn rational_point(rs: &RootSystem, text: &str) -> Result<Point<Rational>, Error> {
    let p = parse_point(text)?;
    validate(rs, &p)?;
    Ok(p)
}

fn lex_point(rs: &RootSystem, text: &str) -> Result<Point<Lex>, Error> {
    let p = parse_lex_point(text)?;
    validate(rs, &p)?;
    Ok(p)
}

fn word_or_default(rs: &RootSystem, word: Option<&str>) -> Result<Vec<usize>, Error> {
    match word {
        Some(w) => rs.parse_longest_word(w),
        None => Ok(rs.longest_word().word.clone()),
    }
}

fn orbit_json<S: JsonScalar>(rs: &RootSystem, x: &Point<S>) -> Value {
    let (dominant, w) = dominant_representative(rs, x);
    json!({
        "x": point_to_json(x),
        "dominant": point_to_json(&dominant),
        "to_dominant": w.word_one_based(),
        "orbit": points_to_json(&rs.weyl_orbit(x)),
    })
}

fn run_orbit(a: &PointArgs) -> Result<Value, Failure> {
    let rs = system(&a.cartan)?;
    Ok(if a.lex {
        orbit_json(&rs, &lex_point(&rs, &a.x)?)
    } else {
        orbit_json(&rs, &rational_point(&rs, &a.x)?)
    })
}

fn hull_json<S: JsonScalar>(rs: &RootSystem, x: &Point<S>, y: Option<&Point<S>>) -> Value {
    let hull = hull_of_orbit(rs, x);
    let mut body = json!({
        "x": point_to_json(x),
        "dominant": point_to_json(&hull.dominant),
        "halfspaces": hull.halfspaces.iter().map(|h| json!({
            "coweight": h.coweight + 1,
            "direction": point_to_json(&h.direction),
            "normal": h.normal.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
            "bound": h.bound.to_json(),
        })).collect::<Vec<_>>(),
    });
    if let Some(y) = y {
        body["y"] = point_to_json(y);
        body["contains"] = json!(hull.contains(y));
        body["contains_via_cone"] = json!(contains_via_cone(rs, x, y));
    }
    body
}

fn run_hull(a: &HullArgs) -> Result<Value, Failure> {
    let rs = system(&a.point.cartan)?;
    if a.point.lex {
        if a.lattice_points {
            return Err(Failure::Input(Error::InvalidArgument(
                "lattice points are only listed for rational points".into(),
            )));
        }
        let x = lex_point(&rs, &a.point.x)?;
        let y = a.y.as_deref().map(|t| lex_point(&rs, t)).transpose()?;
        return Ok(hull_json(&rs, &x, y.as_ref()));
    }
    let x = rational_point(&rs, &a.point.x)?;
    let y = a.y.as_deref().map(|t| rational_point(&rs, t)).transpose()?;
    let mut body = hull_json(&rs, &x, y.as_ref());
    if a.lattice_points {
        let pts = lattice_points(&hull_of_orbit(&rs, &x), &rs, &TranslationLattice::coroot(&rs), &x)?;
        body["lattice_points"] = points_to_json(&pts);
    }
    Ok(body)
}

fn distance_json<S: JsonScalar>(rs: &RootSystem, x: &Point<S>, y: &Point<S>) -> Value {
    json!({
        "x": point_to_json(x),
        "y": point_to_json(y),
        "distance": distance(rs, x, y).to_json(),
        "distance_from_origin": {
            "x": distance(rs, &Point::zero(rs.rank()), x).to_json(),
            "x_closed_form": distance_to_origin_closed_form(rs, x).to_json(),
        },
    })
}

fn run_distance(a: &PairArgs) -> Result<Value, Failure> {
    let rs = system(&a.point.cartan)?;
    Ok(if a.point.lex {
        distance_json(&rs, &lex_point(&rs, &a.point.x)?, &lex_point(&rs, &a.y)?)
    } else {
        distance_json(&rs, &rational_point(&rs, &a.point.x)?, &rational_point(&rs, &a.y)?)
    })
}

fn run_fold(a: &FoldArgs) -> Result<Value, Failure> {
    let rs = system(&a.pair.point.cartan)?;
    let word = word_or_default(&rs, a.word.as_deref())?;
    if a.pair.point.lex {
        if a.svg.is_some() {
            return Err(Failure::Input(Error::InvalidArgument(
                "SVG output needs rational points".into(),
            )));
        }
        let x = lex_point(&rs, &a.pair.point.x)?;
        let y = lex_point(&rs, &a.pair.y)?;
        return Ok(json!({ "schedule": fold_schedule(&rs, &x, &y, &word)?.to_json() }));
    }
    let x = rational_point(&rs, &a.pair.point.x)?;
    let y = rational_point(&rs, &a.pair.y)?;
    let schedule = fold_schedule(&rs, &x, &y, &word)?;
    let mut body = json!({ "schedule": schedule.to_json() });
    if TranslationLattice::coroot(&rs).contains(&(y.clone() - x.clone())) {
        let construction = positive_fold_to(&rs, &x, &y, &word)?;
        body["construction"] = construction.to_json();
        if let Some(out) = &a.svg {
            let orbit: Vec<_> = rs.weyl_orbit(&x).into_iter().collect();
            fs::write(out, render_svg(&rs, &construction.stages, &orbit)?).map_err(io_failure)?;
            body["svg"] = json!(out.display().to_string());
        }
    } else if a.svg.is_some() {
        return Err(Failure::Input(Error::NotInLattice(y.to_string())));
    }
    Ok(body)
}

fn run_galleries(a: &GalleryArgs) -> Result<Value, Failure> {
    let rs = system(&a.cartan)?;
    let x = rational_point(&rs, &a.x)?;
    let report = verify_simplicial_convexity(&rs, &x, a.budget)?;
    let body = report.to_json();
    if report.verdict {
        Ok(body)
    } else {
        Err(Failure::Verdict(body))
    }
}

fn tree_report<S: JsonScalar>(step: &S, depth: &S, seed: u64, x: &S) -> Result<Value, Failure> {
    let tree = build_tree(step, depth, seed)?;
    let report = verify_tree_theorem(&tree, x)?;
    let body = json!({
        "step": step.to_json(),
        "depth": depth.to_json(),
        "seed": seed,
        "branches": tree.branches().len(),
        "report": report.to_json(),
    });
    if report.verdict == TreeVerdict::False {
        Err(Failure::Verdict(body))
    } else {
        Ok(body)
    }
}

fn run_tree(a: &TreeArgs) -> Result<Value, Failure> {
    if a.lex {
        tree_report(&parse_lex(&a.step)?, &parse_lex(&a.depth)?, a.seed, &parse_lex(&a.x)?)
    } else {
        tree_report(
            &parse_rational(&a.step)?,
            &parse_rational(&a.depth)?,
            a.seed,
            &parse_rational(&a.x)?,
        )
    }
}

fn run_plot(a: &PlotArgs) -> Result<(Value, Option<String>), Failure> {
    let rs = system(&a.cartan)?;
    let x = rational_point(&rs, &a.x)?;
    let y = rational_point(&rs, &a.y)?;
    let word = word_or_default(&rs, a.word.as_deref())?;
    let construction = positive_fold_to(&rs, &x, &y, &word)?;
    let orbit: Vec<_> = rs.weyl_orbit(&x).into_iter().collect();
    let svg = render_svg(&rs, &construction.stages, &orbit)?;
    match &a.out {
        Some(out) => {
            fs::write(out, &svg).map_err(io_failure)?;
            Ok((
                json!({
                    "out": out.display().to_string(),
                    "stages": construction.stages.len(),
                    "steps": construction.schedule.to_json()["steps"].clone(),
                }),
                None,
            ))
        }
        None => Ok((Value::Null, Some(svg))),
    }
}

fn run_verify_all(a: &VerifyArgs) -> Result<Value, Failure> {
    let q = |n: i128, d: i128| Rational::new(n, d);
    let z = |n: i128| Rational::from_integer(n);
    let mut gallery_cases: Vec<(&str, Vec<Rational>)> = vec![
        ("A1", vec![z(1)]),
        ("A1", vec![z(2)]),
        ("A2", vec![z(1), z(1)]),
        ("B2", vec![q(1, 2), z(1)]),
        ("G2", vec![z(2), z(1)]),
    ];
    if !a.quick {
        gallery_cases.extend([
            ("A1", vec![z(3)]),
            ("A2", vec![z(2), z(2)]),
            ("B2", vec![z(1), z(2)]),
            ("C2", vec![z(1), z(1)]),
            ("A3", vec![z(1), z(1), z(1)]),
        ]);
    }
    let mut checks = Vec::new();
    let mut all = true;
    for (label, coords) in gallery_cases {
        let rs = system(label)?;
        let x = Point::new(coords);
        let report = verify_simplicial_convexity(&rs, &x, 10_000_000)?;
        all &= report.verdict;
        checks.push(json!({
            "check": "galleries",
            "type": label,
            "x": point_to_json(&x),
            "verdict": report.verdict,
        }));
    }

    for label in ["A2", "B2", "G2"] {
        let rs = system(label)?;
        let x = rs.coroot_vector(rs.highest_root_index()).scale(&z(2));
        let (x, _) = dominant_representative(&rs, &x);
        let pts = lattice_points(&hull_of_orbit(&rs, &x), &rs, &TranslationLattice::coroot(&rs), &x)?;
        let mut ok = true;
        for word in rs.reduced_words(rs.longest_word()) {
            for y in &pts {
                ok &= fold_schedule(&rs, &x, y, &word)?.reaches_terminal();
                ok &= positive_fold_to(&rs, &x, y, &word)?.path().endpoint() == y;
            }
        }
        all &= ok;
        checks.push(json!({ "check": "folding", "type": label, "x": point_to_json(&x), "verdict": ok }));
    }

    let seeds = if a.quick { 5 } else { 25 };
    let mut ok = true;
    for seed in 0..seeds {
        for k in 1..=4 {
            let tree = build_tree(&z(1), &z(4), seed)?;
            ok &= verify_tree_theorem(&tree, &z(k))?.verdict == TreeVerdict::True;
            let step = Lex(z(1), z(0));
            let tree = build_tree(&step, &Lex(z(4), q(1, 3)), seed)?;
            ok &= verify_tree_theorem(&tree, &step.scale_int(k as i64))?.verdict == TreeVerdict::True;
        }
    }
    all &= ok;
    checks.push(json!({ "check": "tree", "seeds": seeds, "verdict": ok }));

    let body = json!({ "quick": a.quick, "checks": checks, "verdict": all });
    if all {
        Ok(body)
    } else {
        Err(Failure::Verdict(body))
    }
}

fn emit(text: &str) {
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(command: &str, body: Value) {
    emit(&format!("{}\n", envelope(command, body)));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (name, result) = match &cli.command {
        Command::Orbit(a) => ("orbit", run_orbit(a)),
        Command::Hull(a) => ("hull", run_hull(a)),
        Command::Distance(a) => ("distance", run_distance(a)),
        Command::Fold(a) => ("fold", run_fold(a)),
        Command::Galleries(a) => ("galleries", run_galleries(a)),
        Command::Tree(a) => ("tree", run_tree(a)),
        Command::Plot(a) => match run_plot(a) {
            Ok((_, Some(svg))) => {
                emit(&svg);
                return ExitCode::SUCCESS;
            }
            Ok((body, None)) => ("plot", Ok(body)),
            Err(e) => ("plot", Err(e)),
        },
        Command::VerifyAll(a) => ("verify-all", run_verify_all(a)),
    };
    match result {
        Ok(body) => {
            print(name, body);
            ExitCode::SUCCESS
        }
        Err(Failure::Verdict(body)) => {
            print(name, body);
            eprintln!("error: verdict is false");
            ExitCode::from(2)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
