//! SVG pictures of folded paths in rank 2.
//!
//! Points are exact in simple-root coordinates; only the drawing goes
//! through floating point, via the Cholesky embedding of the Gram matrix
//! (so `α₁` is horizontal and the angle to `α₂` is the true one).

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::model_space::Point;
use crate::paths::PLPath;
use crate::root_system::RootSystem;
use crate::scalar::Rational;
use crate::Error;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

struct Embedding {
    a1: (f64, f64),
    a2: (f64, f64),
}

impl Embedding {
    fn new(rs: &RootSystem) -> Self {
        let g = rs.gram();
        let (g11, g12, g22) = (g[0][0] as f64, g[0][1] as f64, g[1][1] as f64);
        let r = g11.sqrt();
        Embedding {
            a1: (r, 0.0),
            a2: (g12 / r, (g22 - g12 * g12 / g11).sqrt()),
        }
    }

    fn map(&self, p: &Point<Rational>) -> (f64, f64) {
        let c: Vec<f64> = p.coords().iter().map(|c| c.to_f64().unwrap_or(0.0)).collect();
        (
            c[0] * self.a1.0 + c[1] * self.a2.0,
            c[0] * self.a1.1 + c[1] * self.a2.1,
        )
    }
}

/// Renders the stages of a fold, the orbit `outline` (drawn as a closed
/// polygon in angular order) and the simple-root axes.
pub fn render_svg(
    rs: &RootSystem,
    stages: &[PLPath],
    outline: &[Point<Rational>],
) -> Result<String, Error> {
    if rs.rank() != 2 {
        return Err(Error::InvalidArgument("plots need a rank-2 root system".into()));
    }
    let emb = Embedding::new(rs);
    let axes = [
        Point::from_ints(rs.root(rs.simple_index(0))),
        Point::from_ints(rs.root(rs.simple_index(1))),
    ];
    let mut extent: f64 = 1.0;
    let all = stages
        .iter()
        .flat_map(|s| s.points().iter())
        .chain(outline)
        .chain(axes.iter());
    for p in all {
        let (x, y) = emb.map(p);
        extent = extent.max(x.abs()).max(y.abs());
    }
    let unit = (SIZE / 2.0 - MARGIN) / extent;
    let screen = |p: &Point<Rational>| {
        let (x, y) = emb.map(p);
        (SIZE / 2.0 + x * unit, SIZE / 2.0 - y * unit)
    };

    let mut out = String::new();
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(&mut out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n".into());
    w(
        &mut out,
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
        ),
    );
    w(&mut out, format!("<title>{} folding stages</title>\n", rs.cartan_type()));
    w(
        &mut out,
        format!("<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"),
    );

    if !outline.is_empty() {
        let mut pts: Vec<(f64, f64)> = outline.iter().map(&screen).collect();
        let c = (SIZE / 2.0, SIZE / 2.0);
        pts.sort_by(|a, b| {
            let ta = (a.1 - c.1).atan2(a.0 - c.0);
            let tb = (b.1 - c.1).atan2(b.0 - c.0);
            ta.total_cmp(&tb)
        });
        w(
            &mut out,
            format!(
                "<polygon class=\"hull\" points=\"{}\" fill=\"#f2f2f2\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
                join(&pts)
            ),
        );
    }

    let origin = screen(&Point::zero(2));
    for (i, a) in axes.iter().enumerate() {
        let (x, y) = screen(a);
        writeln!(
            out,
            "<line class=\"axis\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{x:.3}\" y2=\"{y:.3}\" stroke=\"black\" stroke-width=\"1\"/>",
            origin.0, origin.1
        )
        .expect("writing to a string");
        writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" font-family=\"serif\" font-size=\"14\">α{}</text>",
            x + 4.0,
            y - 4.0,
            i + 1
        )
        .expect("writing to a string");
    }

    for (k, stage) in stages.iter().enumerate() {
        let pts: Vec<(f64, f64)> = stage.points().iter().map(&screen).collect();
        writeln!(
            out,
            "<polyline class=\"stage\" data-stage=\"{k}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            join(&pts),
            PALETTE[k % PALETTE.len()]
        )
        .expect("writing to a string");
        let (x, y) = pts.last().copied().unwrap_or(origin);
        writeln!(
            out,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"{}\"/>",
            PALETTE[k % PALETTE.len()]
        )
        .expect("writing to a string");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn join(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{x:.3},{y:.3}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;
    use crate::scalar::qi;

    #[test]
    fn one_polyline_per_stage() {
        let a2 = RootSystem::new(CartanType::A2);
        let stages = vec![
            PLPath::straight(Point::new(vec![qi(-1), qi(-1)])),
            PLPath::straight(Point::new(vec![qi(0), qi(0)])),
        ];
        let svg = render_svg(&a2, &stages, &[]).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("class=\"axis\"").count(), 2);
        assert_eq!(svg, render_svg(&a2, &stages, &[]).unwrap());
    }

    #[test]
    fn rank_one_is_rejected() {
        let a1 = RootSystem::new(CartanType::A1);
        assert!(render_svg(&a1, &[], &[]).is_err());
    }
}
