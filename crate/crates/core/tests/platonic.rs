mod common;

use trisurf::builtins;
use trisurf::monodromy::TriangleStrip;
use trisurf::platonic::{
    automorphism_group, base_flag, check_kvert, color_transport, exceptional_vertices,
    is_flag_regular, is_proper_platonic, lie_across_an_edge, loop_automorphism, platonic_coloring,
    platonic_monodromy_at, platonic_monodromy_image, roll_along_strip, roll_step, PlatonicColoring,
};
use trisurf::{platonic_target, Error, GermFlag};

#[test]
fn targets() {
    for (k, v, f) in [(3, 4, 4), (4, 6, 8), (5, 12, 20)] {
        let t = platonic_target(k).unwrap();
        assert_eq!((t.target.num_vertices(), t.target.num_triangles()), (v, f));
    }
    assert_eq!(platonic_target(2).unwrap_err(), Error::UnsupportedK(2));
}

#[test]
fn automorphism_orders_match_brute_force() {
    for (s, n) in [
        (builtins::tetrahedron(), 24),
        (builtins::octahedron(), 48),
        (builtins::icosahedron(), 120),
    ] {
        let g = automorphism_group(&s).unwrap();
        assert_eq!(g.len(), n);
        assert!(is_flag_regular(&s, &g));
        assert!(g.iter().all(|a| a.preserves(&s)));
        if s.num_vertices() <= 6 {
            assert_eq!(common::brute_force_automorphism_count(&s), n);
        }
    }
}

#[test]
fn roll_and_back_is_identity() {
    let s = builtins::icosahedron();
    for k in 3..=5 {
        let target = platonic_target(k).unwrap();
        for t in 0..s.num_triangles() {
            let f = base_flag(&target, t);
            let tri = *s.triangle(t);
            for e in [[tri[0], tri[1]], [tri[1], tri[2]], [tri[0], tri[2]]] {
                let g = roll_step(&s, &target, f, e).unwrap();
                assert_ne!(g.sigma, f.sigma);
                assert_eq!(roll_step(&s, &target, g, e).unwrap(), f);
            }
        }
    }
}

#[test]
fn rolling_octahedron_on_itself_stays_on_the_identity() {
    let o = builtins::octahedron();
    let target = platonic_target(4).unwrap();
    assert_eq!(target.target, o);
    let f = GermFlag {
        sigma: 0,
        sigma_prime: 0,
        phi: *o.triangle(0),
    };
    let tri = *o.triangle(0);
    let g = roll_step(&o, &target, f, [tri[0], tri[1]]).unwrap();
    assert_eq!(g.sigma, g.sigma_prime);
    assert_eq!(g.phi, *o.triangle(g.sigma));
}

#[test]
fn rolling_around_icosahedron_vertex_returns() {
    let s = builtins::icosahedron();
    let target = platonic_target(5).unwrap();
    for &v in s.vertices() {
        let t0 = s.triangles_at(v).unwrap()[0];
        let strip = TriangleStrip::around_vertex(&s, v, t0).unwrap();
        let f = base_flag(&target, t0);
        assert_eq!(roll_along_strip(&s, &target, f, &strip).unwrap(), f);
    }
}

#[test]
fn roll_step_errors() {
    let s = builtins::tetrahedron();
    let target = platonic_target(3).unwrap();
    let f = base_flag(&target, 0);
    assert!(matches!(
        roll_step(&s, &target, f, [0, 3]),
        Err(Error::EdgeNotInTriangle(..))
    ));
    let disk = trisurf::build_surface(&[[0, 1, 2], [0, 2, 3]]).unwrap();
    let f = base_flag(&target, 0);
    assert!(matches!(
        roll_step(&disk, &target, f, [0, 1]),
        Err(Error::BoundaryEdge(_))
    ));
}

#[test]
fn monodromy_of_targets_is_trivial() {
    for k in 3..=5 {
        let t = platonic_target(k).unwrap();
        let m = platonic_monodromy_image(&t.target, k).unwrap();
        assert!(m.is_trivial());
        let c = platonic_coloring(&t.target, k).unwrap().unwrap();
        assert!(is_proper_platonic(&t.target, &t.target, &c.colors));
    }
    let ico = builtins::icosahedron();
    let c = platonic_coloring(&ico, 5).unwrap().unwrap();
    assert!(c.colors.iter().all(|(a, b)| a == b));
}

#[test]
fn octahedron_on_tetrahedron_is_nontrivial() {
    let m = platonic_monodromy_image(&builtins::octahedron(), 3).unwrap();
    assert!(!m.is_trivial());
    assert!(m.is_subgroup());
    assert!(platonic_coloring(&builtins::octahedron(), 3)
        .unwrap()
        .is_none());
    assert!(platonic_coloring(&builtins::tetrahedron(), 4)
        .unwrap()
        .is_none());
}

#[test]
fn spheres_with_all_degrees_divisible_by_k_are_colorable() {
    for s in trisurf::enumerate::sphere_triangulations(10) {
        for k in 3..=5 {
            if exceptional_vertices(&s, k).is_empty() {
                assert!(platonic_monodromy_image(&s, k).unwrap().is_trivial());
                let c = platonic_coloring(&s, k).unwrap().unwrap();
                assert!(is_proper_platonic(
                    &s,
                    &platonic_target(k).unwrap().target,
                    &c.colors
                ));
            }
        }
    }
}

#[test]
fn monodromy_order_is_base_independent() {
    let s = builtins::seven_vertex_torus();
    for k in 3..=5 {
        let target = platonic_target(k).unwrap();
        let orders: std::collections::BTreeSet<usize> = [0, 5, 11]
            .iter()
            .map(|&b| {
                platonic_monodromy_at(&s, &target, base_flag(&target, b))
                    .unwrap()
                    .order()
            })
            .collect();
        assert_eq!(orders.len(), 1, "k = {k}");
    }
}

#[test]
fn loop_around_exceptional_vertex_fixes_its_color() {
    let s = builtins::octahedron();
    for k in [3, 5] {
        let target = platonic_target(k).unwrap();
        for &v in s.vertices() {
            let t0 = s.triangles_at(v).unwrap()[0];
            let strip = TriangleStrip::around_vertex(&s, v, t0).unwrap();
            let f = base_flag(&target, t0);
            let a = loop_automorphism(&s, &target, f, &strip).unwrap();
            assert!(!a.is_identity());
            let color = f.image_of(&s, v).unwrap();
            let fixed = a.fixed_vertices();
            assert!(fixed.contains(&color));
            // the rotation axis also passes through the antipode, when there is one
            assert_eq!(fixed.len(), if k == 3 { 1 } else { 2 });
        }
    }
}

#[test]
fn kvert_on_fixtures() {
    let r = check_kvert(&builtins::octahedron(), 4).unwrap();
    assert!(r.exceptional.is_empty() && !r.applies);
    let r = check_kvert(&builtins::icosahedron(), 5).unwrap();
    assert!(r.exceptional.is_empty() && !r.applies);
    let r = check_kvert(&builtins::octahedron(), 2).unwrap();
    assert_eq!(r.sym3_image, Some(trisurf::Sym3Subgroup::Trivial));
    assert_eq!(
        check_kvert(&builtins::seven_vertex_torus(), 3).unwrap_err(),
        Error::AssertionFailure("input is not a sphere".into())
    );
}

#[test]
fn k2_delegation_agrees_with_odd_pair_check() {
    for s in trisurf::enumerate::sphere_triangulations(9) {
        let a = check_kvert(&s, 2).is_ok();
        let b = trisurf::monodromy::check_odd_pair(&s).is_ok();
        assert_eq!(a, b);
    }
}

#[test]
fn bipyramid_contradicts_the_across_edge_strengthening_for_k4() {
    let bipyramid = trisurf::build_surface(&[
        [0, 1, 2],
        [0, 2, 3],
        [0, 1, 3],
        [4, 1, 2],
        [4, 2, 3],
        [4, 1, 3],
    ])
    .unwrap();
    assert_eq!(exceptional_vertices(&bipyramid, 4), [0, 4]);
    assert!(!bipyramid.has_edge(0, 4));
    assert!(lie_across_an_edge(&bipyramid, 0, 4));
    assert!(matches!(
        check_kvert(&bipyramid, 4),
        Err(Error::AssertionFailure(_))
    ));
    // rolling a die carries the color of one apex to the opposite face
    let target = platonic_target(4).unwrap();
    let t = color_transport(&bipyramid, &target, 0, 4).unwrap();
    assert!(t.strip_independent());
    assert!(t.second_colors.iter().all(|&c| c == 7 - t.first_color));
}

#[test]
fn coloring_json_shape() {
    let c = platonic_coloring(&builtins::octahedron(), 4)
        .unwrap()
        .unwrap();
    let text = serde_json::to_string(&c).unwrap();
    assert!(text.starts_with("{\"k\":4,\"colors\":{\"1\":\""));
    let back: PlatonicColoring = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
}
