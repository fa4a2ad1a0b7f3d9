//! Named example complexes.
//!
//! The platonic boundary complexes use fixed labelings: the tetrahedron on
//! `0..4`, the octahedron on `1..=6` with antipodal vertices summing to 7 (as
//! on a die), and the icosahedron on `0..12` with vertex `i` antipodal to
//! `11 - i`.

use crate::highdim::PureComplex;
use crate::monodromy::even_polygon_triangulation;
use crate::surface::{SimplicialSurface, Vertex};

pub const TETRAHEDRON: [[Vertex; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

pub const OCTAHEDRON: [[Vertex; 3]; 8] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 5],
    [2, 3, 6],
    [2, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

pub const ICOSAHEDRON: [[Vertex; 3]; 20] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 2, 4],
    [0, 3, 6],
    [0, 4, 6],
    [1, 2, 5],
    [1, 3, 7],
    [1, 5, 7],
    [2, 4, 8],
    [2, 5, 8],
    [3, 6, 9],
    [3, 7, 9],
    [4, 6, 10],
    [4, 8, 10],
    [5, 7, 11],
    [5, 8, 11],
    [6, 9, 10],
    [7, 9, 11],
    [8, 10, 11],
    [9, 10, 11],
];

/// Six-vertex projective plane (the antipodal quotient of the icosahedron).
pub const PROJECTIVE_PLANE_6: [[Vertex; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];

/// Torus with exactly two odd vertices (0 and 6, both of degree 7), which are adjacent.
pub const TORUS_TWO_ODD: [[Vertex; 3]; 16] = [
    [0, 1, 3],
    [0, 1, 7],
    [0, 2, 3],
    [0, 2, 6],
    [0, 4, 5],
    [0, 4, 6],
    [0, 5, 7],
    [1, 2, 4],
    [1, 2, 6],
    [1, 3, 4],
    [1, 6, 7],
    [2, 3, 5],
    [2, 4, 5],
    [3, 4, 6],
    [3, 5, 6],
    [5, 6, 7],
];

/// Projective plane with exactly two odd vertices (1 and 4, both of degree 5), which are adjacent.
pub const PROJECTIVE_PLANE_TWO_ODD: [[Vertex; 3]; 14] = [
    [0, 1, 2],
    [0, 1, 5],
    [0, 2, 3],
    [0, 3, 7],
    [0, 4, 5],
    [0, 4, 7],
    [1, 2, 4],
    [1, 4, 7],
    [1, 5, 7],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 6, 7],
    [5, 6, 7],
];

fn fixed(facets: &[[Vertex; 3]]) -> SimplicialSurface {
    SimplicialSurface::new(facets.iter().copied()).expect("builtin fixture is valid")
}

pub fn tetrahedron() -> SimplicialSurface {
    fixed(&TETRAHEDRON)
}

pub fn octahedron() -> SimplicialSurface {
    fixed(&OCTAHEDRON)
}

pub fn icosahedron() -> SimplicialSurface {
    fixed(&ICOSAHEDRON)
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn seven_vertex_torus() -> SimplicialSurface {
    let facets =
        (0..7u32).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialSurface::new(facets).expect("7-vertex torus is valid")
}

pub fn projective_plane6() -> SimplicialSurface {
    fixed(&PROJECTIVE_PLANE_6)
}

pub fn torus_two_odd() -> SimplicialSurface {
    fixed(&TORUS_TWO_ODD)
}

pub fn projective_plane_two_odd() -> SimplicialSurface {
    fixed(&PROJECTIVE_PLANE_TWO_ODD)
}

/// The `rows x cols` grid torus with one diagonal per square; all degrees are 6.
///
/// Requires `rows, cols >= 3` so that no edge is doubled.
pub fn grid_torus(rows: u32, cols: u32) -> SimplicialSurface {
    assert!(
        rows >= 3 && cols >= 3,
        "grid torus needs at least 3 rows and columns"
    );
    let v = |i: u32, j: u32| (i % rows) * cols + (j % cols);
    let mut facets = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            facets.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push([v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialSurface::new(facets).expect("grid torus is valid")
}

/// Boundary of the 4-simplex: a 3-sphere with 5 tetrahedra.
pub fn boundary_4_simplex() -> PureComplex {
    let facets = (0..5u32).map(|skip| (0..5u32).filter(|&v| v != skip).collect::<Vec<_>>());
    PureComplex::new(3, facets).expect("boundary of the 4-simplex is valid")
}

/// Suspension of a surface: cone over it from two new apexes `north` and `south`.
pub fn suspension(s: &SimplicialSurface, north: Vertex, south: Vertex) -> PureComplex {
    let facets = s
        .triangles()
        .iter()
        .flat_map(|t| [vec![t[0], t[1], t[2], north], vec![t[0], t[1], t[2], south]]);
    PureComplex::new(3, facets).expect("suspension of a surface is pure")
}

/// The double tetrahedron: two tetrahedral cones over the boundary of a
/// tetrahedron, i.e. its suspension. Every edge from an apex is odd.
pub fn double_tetrahedron() -> PureComplex {
    suspension(&tetrahedron(), 4, 5)
}

/// An entry of the builtin catalog.
#[derive(Debug, Clone)]
pub enum Builtin {
    Surface(SimplicialSurface),
    Complex(PureComplex),
}

pub const CATALOG: &[&str] = &[
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "7-vertex-torus",
    "projective-plane-6",
    "torus-two-odd",
    "projective-plane-two-odd",
    "even-polygon-<n>",
    "grid-torus-<r>x<c>",
    "boundary-4-simplex",
    "double-tetrahedron",
];

/// Looks up a builtin by name. Parametrised names: `even-polygon-9`, `grid-torus-3x4`.
pub fn by_name(name: &str) -> Option<Builtin> {
    let surface = match name {
        "tetrahedron" => tetrahedron(),
        "octahedron" => octahedron(),
        "icosahedron" => icosahedron(),
        "7-vertex-torus" => seven_vertex_torus(),
        "projective-plane-6" => projective_plane6(),
        "torus-two-odd" => torus_two_odd(),
        "projective-plane-two-odd" => projective_plane_two_odd(),
        "boundary-4-simplex" => return Some(Builtin::Complex(boundary_4_simplex())),
        "double-tetrahedron" => return Some(Builtin::Complex(double_tetrahedron())),
        _ => {
            if let Some(n) = name.strip_prefix("even-polygon-") {
                let n: usize = n.parse().ok()?;
                even_polygon_triangulation(n).ok()?
            } else {
                let rc = name.strip_prefix("grid-torus-")?;
                let (r, c) = rc.split_once('x')?;
                let (r, c): (u32, u32) = (r.parse().ok()?, c.parse().ok()?);
                if r < 3 || c < 3 {
                    return None;
                }
                grid_torus(r, c)
            }
        }
    };
    Some(Builtin::Surface(surface))
}
