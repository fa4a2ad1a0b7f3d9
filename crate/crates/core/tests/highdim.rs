use std::collections::BTreeMap;

use proptest::prelude::*;
use trisurf::builtins;
use trisurf::highdim::{
    link_pair_check, parity_check, ridge_sum_boundary, stellar_subdivision, unfolding_d,
    z2_nullhomologous_check,
};
use trisurf::monodromy::coloring_monodromy;
use trisurf::{are_isomorphic, odd_subcomplex, unfolding, Error, PureComplex};

/// Boundary of the 4-simplex with a sequence of stellar subdivisions; each
/// step picks a facet, a face size and a face of that size by index.
fn subdivided_sphere(steps: &[(usize, usize, usize)]) -> PureComplex {
    let mut c = builtins::boundary_4_simplex();
    for (i, &(fi, size, pick)) in steps.iter().enumerate() {
        let facet = c.facets()[fi % c.num_facets()].clone();
        let size = 2 + size % 3;
        let faces: Vec<Vec<u32>> =
            itertools::Itertools::combinations(facet.iter().copied(), size).collect();
        c = stellar_subdivision(&c, &faces[pick % faces.len()], 100 + i as u32).unwrap();
    }
    c
}

/// Direct count of facets around every edge of a 3-complex.
fn odd_edges_by_count(c: &PureComplex) -> Vec<Vec<u32>> {
    let mut count: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for f in c.facets() {
        for i in 0..4 {
            for j in i + 1..4 {
                *count.entry(vec![f[i], f[j]]).or_insert(0) += 1;
            }
        }
    }
    count
        .into_iter()
        .filter(|(_, n)| n % 2 == 1)
        .map(|(e, _)| e)
        .collect()
}

#[test]
fn odd_subcomplex_examples() {
    assert!(odd_subcomplex(&PureComplex::from_surface(&builtins::octahedron())).is_empty());
    assert_eq!(
        odd_subcomplex(&PureComplex::from_surface(&builtins::tetrahedron())).len(),
        4
    );
    let d4 = builtins::boundary_4_simplex();
    let odd = odd_subcomplex(&d4);
    assert_eq!(odd.len(), 10);
    assert!(odd.incidence_counts.values().all(|&n| n == 3));
    assert_eq!(odd.faces, odd_edges_by_count(&d4));
}

#[test]
fn z2_boundary_identity() {
    assert!(z2_nullhomologous_check(&builtins::boundary_4_simplex()));
    for s in [
        builtins::seven_vertex_torus(),
        builtins::octahedron(),
        builtins::tetrahedron(),
        builtins::projective_plane6(),
    ] {
        assert!(z2_nullhomologous_check(&PureComplex::from_surface(&s)));
    }
    let torus = PureComplex::from_surface(&builtins::seven_vertex_torus());
    assert!(odd_subcomplex(&torus).is_empty() && ridge_sum_boundary(&torus).is_empty());
}

#[test]
fn parity_examples() {
    let tetra = PureComplex::from_surface(&builtins::tetrahedron());
    assert!(parity_check(&tetra));
    assert!(parity_check(&builtins::boundary_4_simplex()));
    assert!(parity_check(&PureComplex::from_surface(
        &builtins::seven_vertex_torus()
    )));
    for s in trisurf::enumerate::sphere_triangulations(8) {
        let c = PureComplex::from_surface(&s);
        assert!(parity_check(&c));
        // d = 2: the number of odd vertices has the parity of the face count
        assert_eq!(odd_subcomplex(&c).len() % 2, s.num_triangles() % 2);
    }
}

#[test]
fn link_pair_on_boundary_of_simplex_is_vacuous() {
    let r = link_pair_check(&builtins::boundary_4_simplex()).unwrap();
    assert!(r.checked.is_empty() && r.not_sphere.is_empty());
    let even = builtins::suspension(&builtins::octahedron(), 10, 11);
    assert!(odd_subcomplex(&even)
        .faces
        .iter()
        .all(|e| e.contains(&10) || e.contains(&11)));
    assert_eq!(
        link_pair_check(&PureComplex::from_surface(&builtins::octahedron())).unwrap_err(),
        Error::WrongDimension {
            expected: 3,
            found: 2
        }
    );
}

#[test]
fn unfolding_d_agrees_with_surface_unfolding() {
    for s in [
        builtins::tetrahedron(),
        builtins::octahedron(),
        builtins::seven_vertex_torus(),
        builtins::projective_plane6(),
    ] {
        let a = unfolding(&s).unwrap();
        let b = unfolding_d(&PureComplex::from_surface(&s)).unwrap();
        assert_eq!(b.total.num_facets(), a.total.num_triangles());
        let bs = b.total.to_surface().unwrap();
        let (ca, cb) = (a.total.components(), bs.components());
        assert_eq!(ca.len(), cb.len());
        assert!(ca
            .iter()
            .zip(&cb)
            .all(|(x, y)| are_isomorphic(x, y).is_some()));
    }
}

#[test]
fn double_tetrahedron_unfolds_to_a_suspension_over_a_torus() {
    let u = unfolding_d(&builtins::double_tetrahedron()).unwrap();
    assert_eq!(u.total.num_facets(), 24 * 8);
    let singular = u.singular_vertices();
    assert!(!singular.is_empty());
    assert!(singular.iter().all(|&(_, chi)| chi == 0));
    // the singular points lie over the two cone points
    assert!(singular
        .iter()
        .all(|(v, _)| [4, 5].contains(&u.vertex_projection[v])));
}

#[test]
fn even_complexes_unfold_into_full_sheets() {
    let even = PureComplex::from_surface(&builtins::octahedron());
    let u = unfolding_d(&even).unwrap();
    assert_eq!(u.component_count(), 6);
    let sphere3 = builtins::boundary_4_simplex();
    let u = unfolding_d(&sphere3).unwrap();
    assert_eq!(u.total.num_facets(), 24 * 5);
    assert_eq!(24 % u.component_count(), 0);
}

#[test]
fn stellar_subdivision_errors() {
    let c = builtins::boundary_4_simplex();
    assert!(stellar_subdivision(&c, &[0, 1], 3).is_err());
    assert!(stellar_subdivision(&c, &[0, 9], 10).is_err());
}

#[test]
fn complex_json_round_trip() {
    let c = builtins::boundary_4_simplex();
    let j = c.to_json();
    assert_eq!(j.dim, 3);
    assert_eq!(PureComplex::from_json(&j).unwrap(), c);
    assert!(matches!(
        PureComplex::new(2, [vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]),
        Err(Error::NotPseudomanifold(3))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_three_spheres(steps in prop::collection::vec((0usize..64, 0usize..3, 0usize..10), 0..6)) {
        let c = subdivided_sphere(&steps);
        prop_assert!(c.is_closed_pseudomanifold());
        prop_assert!(c.vertex_links_are_spheres());
        prop_assert_eq!(c.euler_characteristic(), 0);
        prop_assert_eq!(odd_subcomplex(&c).faces, odd_edges_by_count(&c));
        prop_assert!(z2_nullhomologous_check(&c));
        prop_assert!(parity_check(&c));
        let r = link_pair_check(&c).unwrap();
        prop_assert!(r.not_sphere.is_empty());
    }

    #[test]
    fn trivial_local_monodromy_gives_manifold_points(steps in prop::collection::vec((0usize..64, 0usize..3, 0usize..10), 0..3)) {
        let c = subdivided_sphere(&steps);
        let u = unfolding_d(&c).unwrap();
        let singular: std::collections::BTreeSet<u32> = u.singular_vertices().into_iter().map(|(v, _)| v).collect();
        for v in u.total.vertices() {
            let base = u.vertex_projection[&v];
            let link = c.link(&[base]).unwrap().to_surface().unwrap();
            if coloring_monodromy(&link).unwrap().is_trivial() {
                prop_assert!(!singular.contains(&v));
            }
        }
    }
}

#[test]
fn generated_fixtures_exercise_the_link_pair_precondition() {
    let mut checked = 0;
    for a in 0..20 {
        for b in 0..3 {
            let c = subdivided_sphere(&[(a, b, a + b), (3 * a + 1, b + 1, 2 * a), (a + 7, b, a)]);
            checked += link_pair_check(&c).unwrap().checked.len();
        }
    }
    assert!(checked > 0);
}
