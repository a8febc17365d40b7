//! `e_α` against an independent implementation that follows the textbook
//! segmentation: cut `[t₀, t₁]` at the points where the height reaches a new
//! running minimum, reflect the displacement of every strictly descending
//! piece, keep the others, and translate the tail by `α^∨`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylfold::paths::{critical_value, root_operator_e, PLPath};
use weylfold::scalar::{q, qi};
use weylfold::{CartanType, Point, Rational, RootSystem};

fn oracle(rs: &RootSystem, path: &PLPath, simple: usize) -> Option<PLPath> {
    let root = rs.simple_index(simple);
    let pts = path.points();
    let h: Vec<Rational> = pts.iter().map(|p| rs.level(p, root)).collect();
    let n = *h.iter().min().unwrap();
    if n > qi(-1) {
        return None;
    }
    let t1 = h.iter().position(|v| *v == n).unwrap();
    // t₀ is the largest time with h ≥ n + 1 on all of [0, t₀].
    let j = (0..t1).find(|&k| h[k + 1] < n + qi(1)).unwrap();

    // Breakpoints of the restriction to [t₀, t₁], with t₀ inserted.
    let at_level = |a: usize, level: Rational| {
        let f = (h[a] - level) / (h[a] - h[a + 1]);
        pts[a].add_scaled(&(pts[a + 1].clone() - pts[a].clone()), &f)
    };
    let mut piece: Vec<(Point<Rational>, Rational)> = Vec::new();
    if h[j] > n + qi(1) {
        piece.push((at_level(j, n + qi(1)), n + qi(1)));
    } else {
        piece.push((pts[j].clone(), h[j]));
    }
    for k in j..t1 {
        // Split where the segment passes the minimum reached so far.
        let low = piece.iter().map(|(_, v)| *v).min().unwrap();
        if h[k] > low && h[k + 1] < low && piece.last().unwrap().1 != low {
            piece.push((at_level(k, low), low));
        }
        piece.push((pts[k + 1].clone(), h[k + 1]));
    }

    let mut out: Vec<Point<Rational>> = pts[..=j].to_vec();
    if out.last() != Some(&piece[0].0) {
        out.push(piece[0].0.clone());
    }
    let mut cur = piece[0].0.clone();
    let mut low = piece[0].1;
    for w in piece.windows(2) {
        let d = w[1].0.clone() - w[0].0.clone();
        let descending_to_new_min = w[1].1 < low && w[0].1 <= low;
        let d = if descending_to_new_min { rs.reflect(&d, root) } else { d };
        low = low.min(w[1].1);
        cur = cur + d;
        out.push(cur.clone());
    }
    let coroot = rs.coroot_vector(root);
    assert_eq!(cur, pts[t1].clone() + coroot.clone());
    out.extend(pts[t1 + 1..].iter().map(|p| p.clone() + coroot.clone()));
    Some(PLPath::through(out).unwrap())
}

fn random_path(rng: &mut ChaCha8Rng, rank: usize) -> PLPath {
    let mut pts = vec![Point::zero(rank)];
    for _ in 0..rng.gen_range(1..=6) {
        pts.push(Point::new(
            (0..rank).map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect(),
        ));
    }
    PLPath::through(pts).unwrap()
}

#[test]
fn agrees_with_segmentation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for t in CartanType::ALL {
        let rs = RootSystem::new(t);
        for i in 0..rs.rank() {
            for _ in 0..400 {
                let path = random_path(&mut rng, rs.rank());
                let mine = root_operator_e(&rs, &path, i).unwrap();
                assert_eq!(mine, oracle(&rs, &path, i), "{t} e_{} on {path:?}", i + 1);
            }
        }
    }
}

#[test]
fn pointwise_closed_form_on_a_grid() {
    // e_απ(t) = π(t) + (n + 1 - M(t)) α^∨, where M is the running minimum of
    // the height capped at n + 1. Each sampled point must lie on the image.
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let rs = RootSystem::new(CartanType::G2);
    for i in 0..2 {
        let root = rs.simple_index(i);
        let coroot = rs.coroot_vector(root);
        for _ in 0..100 {
            let path = random_path(&mut rng, 2);
            let Some(image) = root_operator_e(&rs, &path, i).unwrap() else {
                continue;
            };
            let n = critical_value(&rs, &path, i).unwrap();
            let cap = n + qi(1);
            for k in 0..=96 {
                let t = q(k, 96);
                // Exact running minimum over [0, t]: breakpoints up to t and t
                // itself. Before t₀ it is at least n + 1, so the shift is zero.
                let mut m = path.height_at(&rs, root, &t);
                for (s, p) in path.times().iter().zip(path.points()) {
                    if *s <= t {
                        m = m.min(rs.level(p, root));
                    }
                }
                let shift = cap - m.min(cap);
                let expected = path.evaluate(&t).add_scaled(&coroot, &shift);
                let on_image = image.points().windows(2).any(|w| on_segment(&w[0], &w[1], &expected));
                assert!(on_image, "{expected} not on e_{}π", i + 1);
            }
        }
    }
}

fn on_segment(a: &Point<Rational>, b: &Point<Rational>, p: &Point<Rational>) -> bool {
    let d = b.clone() - a.clone();
    let v = p.clone() - a.clone();
    let Some(k) = d.coords().iter().position(|c| *c != qi(0)) else {
        return a == p;
    };
    let f = v[k] / d[k];
    f >= qi(0) && f <= qi(1) && a.add_scaled(&d, &f) == *p
}
