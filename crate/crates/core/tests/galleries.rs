use std::collections::BTreeSet;

use weylfold::convexity::{contains_via_cone, hull_of_orbit, lattice_points};
use weylfold::galleries::{
    audit, enumerate_positively_folded, materialize, minimal_gallery, minimal_gallery_with,
    verify_simplicial_convexity, verify_simplicial_convexity_with, AlcoveComplex,
};
use weylfold::model_space::{dominant_representative, TranslationLattice};
use weylfold::scalar::{q, qi};
use weylfold::{CartanType, Point, Rational, RootSystem};

fn pt(c: &[Rational]) -> Point<Rational> {
    Point::new(c.to_vec())
}

fn instances() -> Vec<(CartanType, Point<Rational>)> {
    vec![
        (CartanType::A1, pt(&[qi(2)])),
        (CartanType::A2, pt(&[qi(2), qi(1)])),
        (CartanType::A2, pt(&[qi(2), qi(2)])),
        (CartanType::B2, pt(&[q(1, 2), qi(1)])),
        (CartanType::B2, pt(&[qi(1), qi(2)])),
        (CartanType::C2, pt(&[qi(2), qi(2)])),
        (CartanType::G2, pt(&[qi(2), qi(1)])),
        (CartanType::A3, pt(&[qi(1), qi(1), qi(1)])),
    ]
}

#[test]
fn every_enumerated_gallery_passes_the_audit() {
    for (t, x) in instances() {
        let rs = RootSystem::new(t);
        let ty = minimal_gallery(&rs, &x).unwrap().gallery_type();
        let e = enumerate_positively_folded(&rs, &ty, 1_000_000).unwrap();
        let mut seen = BTreeSet::new();
        for g in &e.galleries {
            let full = materialize(&rs, &ty, g);
            audit(&rs, &ty, &full).unwrap_or_else(|m| panic!("{t} {x}: {m}"));
            assert_eq!(full.target, g.target);
            assert!(seen.insert((g.start, g.folds.clone())), "duplicate gallery");
        }
    }
}

#[test]
fn minimal_galleries_are_audited_and_unfolded() {
    for (t, x) in instances() {
        let rs = RootSystem::new(t);
        let g = minimal_gallery(&rs, &x).unwrap();
        audit(&rs, &g.gallery_type(), &g).unwrap();
        assert_eq!(g.target, x);
        assert!((0..g.panels.len()).all(|i| !g.is_folded_at(i)));
        // Minimal: the number of panels is the number of walls separating
        // the fundamental alcove from the last alcove.
        let complex = AlcoveComplex::new(&rs);
        assert_eq!(complex.separating_walls(&g.alcoves.last().unwrap().element), g.panels.len());
    }
}

#[test]
fn targets_do_not_depend_on_the_chosen_minimal_gallery() {
    let mut distinct_types = 0;
    for (t, x) in instances() {
        let rs = RootSystem::new(t);
        let a = verify_simplicial_convexity_with(&rs, &x, 1_000_000, 0).unwrap();
        let b = verify_simplicial_convexity_with(&rs, &x, 1_000_000, 5).unwrap();
        assert!(a.verdict && b.verdict, "{t} {x}");
        assert_eq!(a.hull_points, b.hull_points);
        assert_eq!(
            a.targets.keys().collect::<Vec<_>>(),
            b.targets.keys().collect::<Vec<_>>()
        );
        if a.gallery_type != b.gallery_type {
            distinct_types += 1;
        }
        let g = minimal_gallery_with(&rs, &x, 5).unwrap();
        assert_eq!(g.gallery_type(), b.gallery_type);
    }
    assert!(distinct_types > 0, "the perturbations should reach different types");
}

#[test]
fn targets_match_a_brute_force_hull() {
    // Oracle: scan a box of the coroot lattice with the dominance test.
    let rs = RootSystem::new(CartanType::B2);
    let x = pt(&[qi(1), qi(2)]);
    let report = verify_simplicial_convexity(&rs, &x, 1_000_000).unwrap();
    let gens = [rs.coroot_vector(rs.simple_index(0)), rs.coroot_vector(rs.simple_index(1))];
    let mut scan = BTreeSet::new();
    for a in -8..=8 {
        for b in -8..=8 {
            let y = gens[0].scale(&qi(a)) + gens[1].scale(&qi(b));
            if contains_via_cone(&rs, &x, &y) {
                scan.insert(y);
            }
        }
    }
    assert_eq!(report.hull_points, scan);
    assert_eq!(report.targets.keys().cloned().collect::<BTreeSet<_>>(), scan);
}

#[test]
fn theorem_on_every_small_dominant_vertex() {
    for t in [CartanType::A2, CartanType::B2, CartanType::C2, CartanType::G2] {
        let rs = RootSystem::new(t);
        let lattice = TranslationLattice::coroot(&rs);
        let gens = lattice.generators().unwrap().to_vec();
        let mut done = BTreeSet::new();
        for a in 0..=2 {
            for b in 0..=2 {
                let y = gens[0].scale(&qi(a)) + gens[1].scale(&qi(b));
                let (x, _) = dominant_representative(&rs, &y);
                if !done.insert(x.clone()) {
                    continue;
                }
                let r = verify_simplicial_convexity(&rs, &x, 5_000_000).unwrap();
                assert!(r.verdict, "{t} {x}");
                let hull = hull_of_orbit(&rs, &x);
                assert_eq!(r.hull_points, lattice_points(&hull, &rs, &lattice, &x).unwrap());
            }
        }
    }
}
