mod common;

use trisurf::builtins;
use trisurf::surface::SimplicialSurface;
use trisurf::{are_isomorphic, build_surface, Error};

#[test]
fn tetrahedron_basics() {
    let t = build_surface(&builtins::TETRAHEDRON).unwrap();
    assert!(t.is_closed());
    assert_eq!(t.euler_characteristic(), 2);
    assert!(t.is_orientable().unwrap().is_some());
    assert_eq!(t.genus().unwrap(), 0);
    assert!(t
        .vertices()
        .iter()
        .all(|&v| t.vertex_degree(v).unwrap() == 3));
}

#[test]
fn seven_vertex_torus_basics() {
    let t = builtins::seven_vertex_torus();
    assert_eq!(t.num_triangles(), 14);
    assert_eq!(t.euler_characteristic(), 0);
    assert!(t.is_orientable().unwrap().is_some());
    assert_eq!(t.genus().unwrap(), 1);
    assert!(t.degrees().values().all(|&d| d == 6));
}

#[test]
fn projective_plane_is_not_orientable() {
    let p = builtins::projective_plane6();
    assert_eq!(p.euler_characteristic(), 1);
    assert!(p.is_orientable().unwrap().is_none());
    assert_eq!(p.genus().unwrap_err(), Error::NotOrientable);
}

#[test]
fn orientation_witness_is_consistent() {
    let t = builtins::icosahedron();
    let oriented = t.orientation().unwrap();
    // every edge is traversed once in each direction
    let mut directed = std::collections::BTreeSet::new();
    for [a, b, c] in oriented {
        for e in [(a, b), (b, c), (c, a)] {
            assert!(directed.insert(e), "edge {e:?} used twice in one direction");
        }
    }
    assert!(directed.iter().all(|&(a, b)| directed.contains(&(b, a))));
}

#[test]
fn non_manifold_edge_rejected() {
    let err = build_surface(&[[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap_err();
    assert!(matches!(err, Error::NonManifoldEdge([0, 1], 3)));
    assert_eq!(err.name(), "NonManifoldEdge");
}

#[test]
fn other_validation_errors() {
    assert!(matches!(
        build_surface(&[[0, 0, 1]]),
        Err(Error::DegenerateTriangle(_))
    ));
    assert!(matches!(
        build_surface(&[[0, 1, 2], [2, 1, 0]]),
        Err(Error::DuplicateTriangle(_))
    ));
    assert_eq!(build_surface(&[]).unwrap_err(), Error::Empty);
    // two disks sharing only a vertex
    assert!(matches!(
        build_surface(&[[0, 1, 2], [0, 3, 4]]),
        Err(Error::PinchedVertex(0))
    ));
}

#[test]
fn vertex_ids_need_not_be_contiguous() {
    let s = build_surface(&[[10, 20, 30], [10, 20, 40], [10, 30, 40], [20, 30, 40]]).unwrap();
    assert!(are_isomorphic(&s, &builtins::tetrahedron()).is_some());
    assert_eq!(s.vertices(), &[10, 20, 30, 40]);
}

#[test]
fn isomorphism_examples() {
    let t = builtins::tetrahedron();
    let iso = are_isomorphic(&t, &t).unwrap();
    assert!(iso.verify(&t, &t));
    assert!(are_isomorphic(&t, &builtins::octahedron()).is_none());
    let comps = trisurf::unfolding(&builtins::seven_vertex_torus())
        .unwrap()
        .components();
    assert_eq!(comps.len(), 2);
    let iso = are_isomorphic(&comps[0].total, &comps[1].total).unwrap();
    assert!(iso.verify(&comps[0].total, &comps[1].total));
}

#[test]
fn isomorphism_agrees_with_brute_force_on_small_spheres() {
    let spheres = trisurf::enumerate::sphere_triangulations(7);
    for a in &spheres {
        for b in &spheres {
            let same = common::brute_canonical(a) == common::brute_canonical(b);
            assert_eq!(are_isomorphic(a, b).is_some(), same);
        }
    }
}

#[test]
fn adjacent_triangles() {
    let t = builtins::tetrahedron();
    for i in 0..4 {
        let tri = *t.triangle(i);
        for e in [[tri[0], tri[1]], [tri[0], tri[2]], [tri[1], tri[2]]] {
            let j = t.adjacent_triangle(i, e).unwrap().unwrap();
            assert_ne!(i, j);
            assert!(t.triangle(j).contains(&e[0]) && t.triangle(j).contains(&e[1]));
        }
    }
    let square = build_surface(&[[0, 1, 2], [0, 2, 3]]).unwrap();
    assert_eq!(square.adjacent_triangle(0, [0, 2]).unwrap(), Some(1));
    assert_eq!(square.adjacent_triangle(0, [0, 1]).unwrap(), None);
    assert!(matches!(
        square.adjacent_triangle(0, [0, 3]),
        Err(Error::EdgeNotInTriangle(..))
    ));
}

#[test]
fn boundary_of_square() {
    let square = build_surface(&[[0, 1, 2], [0, 2, 3]]).unwrap();
    assert!(!square.is_closed());
    let cycles = square.boundary_cycles();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].len(), 4);
    assert!(square.interior_vertices().is_empty());
    // degree is the number of edges, also on the boundary
    assert_eq!(square.vertex_degree(0).unwrap(), 3);
    assert_eq!(square.vertex_degree(1).unwrap(), 2);
}

#[test]
fn json_round_trip() {
    let t = builtins::octahedron();
    let text = t.to_json();
    assert!(text.starts_with("{\"dim\":2"));
    assert_eq!(SimplicialSurface::from_json(&text).unwrap(), t);
    assert!(matches!(
        SimplicialSurface::from_json("{\"dim\":3,\"facets\":[[0,1,2,3]]}"),
        Err(Error::WrongDimension { .. })
    ));
    assert!(matches!(
        SimplicialSurface::from_json("nope"),
        Err(Error::Json(_))
    ));
}

#[test]
fn disconnected_input_is_allowed_but_reported() {
    let mut facets = builtins::TETRAHEDRON.to_vec();
    facets.extend(builtins::TETRAHEDRON.iter().map(|t| t.map(|v| v + 10)));
    let two = build_surface(&facets).unwrap();
    assert!(!two.is_connected());
    assert_eq!(two.components().len(), 2);
    assert_eq!(two.is_orientable().unwrap_err(), Error::DisconnectedInput);
}
