//! Platonic monodromy: rolling the tetrahedron, octahedron or icosahedron
//! over a triangulated surface.
//!
//! For `k = 3, 4, 5` the colors are the vertices of a platonic boundary
//! complex whose vertex degrees are all `k`. A germ flag pairs a triangle of
//! the surface with a triangle of the target through a vertex bijection;
//! rolling across an edge moves both triangles across the matched edges.
//! Returning to the base triangle yields an automorphism of the target.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::builtins;
use crate::error::{Error, Result};
use crate::monodromy::{self, Sym3Subgroup, TriangleStrip};
use crate::surface::{
    corner_of, opposite_edge, propagate_flag_map, third, Flag, SimplicialSurface, Vertex, ORDERINGS,
};

/// Boundary complex of the tetrahedron, octahedron or icosahedron for k = 3, 4, 5.
#[derive(Debug, Clone)]
pub struct PlatonicTarget {
    pub k: usize,
    pub target: SimplicialSurface,
}

pub fn platonic_target(k: usize) -> Result<PlatonicTarget> {
    let target = match k {
        3 => builtins::tetrahedron(),
        4 => builtins::octahedron(),
        5 => builtins::icosahedron(),
        _ => return Err(Error::UnsupportedK(k)),
    };
    Ok(PlatonicTarget { k, target })
}

/// A vertex permutation preserving the triangle set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(pub BTreeMap<Vertex, Vertex>);

impl Automorphism {
    pub fn identity(s: &SimplicialSurface) -> Self {
        Automorphism(s.vertices().iter().map(|&v| (v, v)).collect())
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.0[&v]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(other.0.iter().map(|(&v, &w)| (v, self.apply(w))).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism(self.0.iter().map(|(&v, &w)| (w, v)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|(v, w)| v == w)
    }

    pub fn fixed_vertices(&self) -> Vec<Vertex> {
        self.0
            .iter()
            .filter(|(v, w)| v == w)
            .map(|(v, _)| *v)
            .collect()
    }

    pub fn preserves(&self, s: &SimplicialSurface) -> bool {
        s.triangles().iter().all(|t| {
            s.triangle_index(&[self.apply(t[0]), self.apply(t[1]), self.apply(t[2])])
                .is_some()
        })
    }
}

/// All automorphisms of a connected surface, found by propagating the image
/// of one fixed flag to every flag.
pub fn automorphism_group(s: &SimplicialSurface) -> Result<Vec<Automorphism>> {
    s.require_connected()?;
    let root = Flag {
        triangle: 0,
        vertices: *s.triangle(0),
    };
    let mut group: Vec<Automorphism> = s
        .flags()
        .filter_map(|f| propagate_flag_map(s, s, root, f))
        .filter(|m| m.len() == s.num_vertices())
        .map(|m| Automorphism(m.into_iter().collect()))
        .collect();
    group.sort();
    Ok(group)
}

/// The unique automorphism carrying flag `from` to flag `to`, if any.
pub fn automorphism_between(s: &SimplicialSurface, from: Flag, to: Flag) -> Option<Automorphism> {
    propagate_flag_map(s, s, from, to)
        .filter(|m| m.len() == s.num_vertices())
        .map(|m| Automorphism(m.into_iter().collect()))
}

/// Whether the automorphism group acts simply transitively on flags.
pub fn is_flag_regular(s: &SimplicialSurface, group: &[Automorphism]) -> bool {
    group.len() == 6 * s.num_triangles()
}

/// `(sigma, sigma_prime, phi)`: a triangle of the surface, a triangle of the
/// target, and the images `phi[i]` of the sorted vertices of `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GermFlag {
    pub sigma: usize,
    pub sigma_prime: usize,
    pub phi: [Vertex; 3],
}

impl GermFlag {
    pub fn image_of(&self, s: &SimplicialSurface, v: Vertex) -> Option<Vertex> {
        corner_of(s.triangle(self.sigma), v).map(|i| self.phi[i])
    }

    /// Dense index among the `6 F F'` germ flags.
    pub(crate) fn index(&self, target: &SimplicialSurface) -> usize {
        let tp = target.triangle(self.sigma_prime);
        let o = ORDERINGS
            .iter()
            .position(|o| [tp[o[0]], tp[o[1]], tp[o[2]]] == self.phi)
            .expect("phi is a bijection onto sigma_prime");
        (self.sigma * target.num_triangles() + self.sigma_prime) * 6 + o
    }

    /// Target flag listing the images of sigma's sorted vertices.
    pub fn target_flag(&self) -> Flag {
        Flag {
            triangle: self.sigma_prime,
            vertices: self.phi,
        }
    }
}

/// Rolls `flag` across the edge of `sigma` opposite `corner`. `None` if either
/// matched edge is on a boundary.
pub(crate) fn roll_across(
    s: &SimplicialSurface,
    target: &SimplicialSurface,
    flag: GermFlag,
    corner: usize,
) -> Option<GermFlag> {
    let sigma2 = s.across(flag.sigma, corner)?;
    let tri = *s.triangle(flag.sigma);
    let [x, y] = opposite_edge(&tri, corner);
    let (fx, fy) = (flag.phi[corner_of(&tri, x)?], flag.phi[corner_of(&tri, y)?]);
    let sp = target
        .adjacent_triangle(flag.sigma_prime, [fx, fy])
        .ok()??;
    let tri2 = s.triangle(sigma2);
    let z = third(tri2, x, y);
    let w = third(target.triangle(sp), fx, fy);
    let mut phi = [0; 3];
    for (i, &v) in tri2.iter().enumerate() {
        phi[i] = if v == x {
            fx
        } else if v == y {
            fy
        } else {
            debug_assert_eq!(v, z);
            w
        };
    }
    Some(GermFlag {
        sigma: sigma2,
        sigma_prime: sp,
        phi,
    })
}

/// The unique germ flag adjacent to `flag` across edge `e` of its triangle.
pub fn roll_step(
    s: &SimplicialSurface,
    target: &PlatonicTarget,
    flag: GermFlag,
    e: [Vertex; 2],
) -> Result<GermFlag> {
    let tri = s.triangle(flag.sigma);
    let (Some(i), Some(j)) = (corner_of(tri, e[0]), corner_of(tri, e[1])) else {
        return Err(Error::EdgeNotInTriangle(
            crate::surface::sorted_edge(e[0], e[1]),
            *tri,
        ));
    };
    if i == j {
        return Err(Error::EdgeNotInTriangle([e[0], e[1]], *tri));
    }
    roll_across(s, &target.target, flag, 3 - i - j)
        .ok_or(Error::BoundaryEdge(crate::surface::sorted_edge(e[0], e[1])))
}

/// Rolls along a strip and returns the final flag.
pub fn roll_along_strip(
    s: &SimplicialSurface,
    target: &PlatonicTarget,
    start: GermFlag,
    strip: &TriangleStrip,
) -> Result<GermFlag> {
    if strip.0.first().is_some_and(|&t| t != start.sigma) {
        return Err(Error::NotAStrip(0, 0));
    }
    let mut cur = start;
    for (i, w) in strip.0.windows(2).enumerate() {
        let corner = s
            .neighbors(w[0])
            .iter()
            .position(|&n| n == Some(w[1]))
            .ok_or(Error::NotAStrip(i, i + 1))?;
        cur = roll_across(s, &target.target, cur, corner).expect("target is closed");
    }
    Ok(cur)
}

/// The automorphism of the target relating the start flag to the flag
/// reached after a closed strip.
pub fn loop_automorphism(
    s: &SimplicialSurface,
    target: &PlatonicTarget,
    start: GermFlag,
    strip: &TriangleStrip,
) -> Result<Automorphism> {
    let end = roll_along_strip(s, target, start, strip)?;
    if end.sigma != start.sigma {
        return Err(Error::NotAStrip(0, strip.0.len().saturating_sub(1)));
    }
    Ok(
        automorphism_between(&target.target, start.target_flag(), end.target_flag())
            .expect("platonic targets are flag-transitive"),
    )
}

/// Base germ flag at triangle `sigma`: its sorted vertices onto the sorted
/// vertices of the target's first triangle.
pub fn base_flag(target: &PlatonicTarget, sigma: usize) -> GermFlag {
    GermFlag {
        sigma,
        sigma_prime: 0,
        phi: *target.target.triangle(0),
    }
}

/// For every triangle of `s`, the germ flags reached from `start`.
fn rolled_orbit(
    s: &SimplicialSurface,
    target: &SimplicialSurface,
    start: GermFlag,
) -> Vec<Vec<GermFlag>> {
    let mut seen = vec![false; 6 * s.num_triangles() * target.num_triangles()];
    let mut reached = vec![Vec::new(); s.num_triangles()];
    seen[start.index(target)] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        reached[f.sigma].push(f);
        for c in 0..3 {
            if let Some(n) = roll_across(s, target, f, c) {
                let i = n.index(target);
                if !seen[i] {
                    seen[i] = true;
                    queue.push_back(n);
                }
            }
        }
    }
    reached
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatonicMonodromy {
    pub k: usize,
    pub base: GermFlag,
    pub elements: BTreeSet<Automorphism>,
}

impl PlatonicMonodromy {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup(&self) -> bool {
        self.elements.iter().any(Automorphism::is_identity)
            && self.elements.iter().all(|g| {
                self.elements.contains(&g.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|h| self.elements.contains(&g.compose(h)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|g| self.elements.iter().all(|h| g.compose(h) == h.compose(g)))
    }
}

/// Monodromy image at an explicit base flag.
pub fn platonic_monodromy_at(
    s: &SimplicialSurface,
    target: &PlatonicTarget,
    base: GermFlag,
) -> Result<PlatonicMonodromy> {
    s.require_connected()?;
    let orbit = rolled_orbit(s, &target.target, base);
    let elements = orbit[base.sigma]
        .iter()
        .map(|f| {
            automorphism_between(&target.target, base.target_flag(), f.target_flag())
                .expect("platonic targets are flag-transitive")
        })
        .collect();
    let m = PlatonicMonodromy {
        k: target.k,
        base,
        elements,
    };
    debug_assert!(m.is_subgroup());
    Ok(m)
}

/// Monodromy image at the base flag on the first triangle.
pub fn platonic_monodromy_image(s: &SimplicialSurface, k: usize) -> Result<PlatonicMonodromy> {
    let target = platonic_target(k)?;
    platonic_monodromy_at(s, &target, base_flag(&target, 0))
}

/// A vertex assignment into the target's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatonicColoring {
    pub k: usize,
    #[serde(with = "string_values")]
    pub colors: BTreeMap<Vertex, Vertex>,
}

mod string_values {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::surface::Vertex;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<Vertex, Vertex>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        let as_strings: BTreeMap<Vertex, String> =
            m.iter().map(|(k, v)| (*k, v.to_string())).collect();
        as_strings.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<Vertex, Vertex>, D::Error> {
        let raw = BTreeMap::<Vertex, String>::deserialize(de)?;
        raw.into_iter()
            .map(|(k, v)| v.parse().map(|v| (k, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Checks the two conditions of a proper coloring by target vertices: every
/// triangle goes bijectively onto a target triangle, and every pair of
/// adjacent triangles goes bijectively onto a pair of adjacent target triangles.
pub fn is_proper_platonic(
    s: &SimplicialSurface,
    target: &SimplicialSurface,
    colors: &BTreeMap<Vertex, Vertex>,
) -> bool {
    let image = |v: &Vertex| colors.get(v).copied();
    let triangles_ok =
        s.triangles()
            .iter()
            .all(|t| match (image(&t[0]), image(&t[1]), image(&t[2])) {
                (Some(a), Some(b), Some(c)) => {
                    a != b && b != c && a != c && target.triangle_index(&[a, b, c]).is_some()
                }
                _ => false,
            });
    let pairs_ok = s.edges().all(|(e, ts)| {
        let [t1, t2] = ts else { return true };
        let z1 = colors[&third(s.triangle(*t1), e[0], e[1])];
        let z2 = colors[&third(s.triangle(*t2), e[0], e[1])];
        z1 != z2
    });
    triangles_ok && pairs_ok
}

/// A proper platonic coloring; exists exactly when the monodromy is trivial.
pub fn platonic_coloring(s: &SimplicialSurface, k: usize) -> Result<Option<PlatonicColoring>> {
    s.require_connected()?;
    let target = platonic_target(k)?;
    let orbit = rolled_orbit(s, &target.target, base_flag(&target, 0));
    if orbit[0].len() != 1 {
        return Ok(None);
    }
    let mut colors = BTreeMap::new();
    for (t, flags) in orbit.iter().enumerate() {
        for (i, &v) in s.triangle(t).iter().enumerate() {
            colors.insert(v, flags[0].phi[i]);
        }
    }
    if !is_proper_platonic(s, &target.target, &colors) {
        return Err(Error::AssertionFailure(
            "rolled coloring is not proper".into(),
        ));
    }
    Ok(Some(PlatonicColoring { k, colors }))
}

/// Vertices whose degree is not a multiple of `k`.
pub fn exceptional_vertices(s: &SimplicialSurface, k: usize) -> Vec<Vertex> {
    s.degrees()
        .into_iter()
        .filter(|(_, d)| d % k != 0)
        .map(|(v, _)| v)
        .collect()
}

/// Whether `a` and `b` are the apexes of two triangles sharing an edge.
pub fn lie_across_an_edge(s: &SimplicialSurface, a: Vertex, b: Vertex) -> bool {
    let Ok(ts) = s.triangles_at(a) else {
        return false;
    };
    ts.iter().any(|&t| {
        let c = corner_of(s.triangle(t), a).expect("incident");
        s.across(t, c).is_some_and(|n| {
            let [x, y] = opposite_edge(s.triangle(t), c);
            third(s.triangle(n), x, y) == b
        })
    })
}

/// Colors that rolling gives to `b`, starting from the base flag on the
/// smallest triangle at `a`, over every strip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorTransport {
    pub first_color: Vertex,
    pub second_colors: Vec<Vertex>,
}

impl ColorTransport {
    /// The color reached at `b` does not depend on the strip.
    pub fn strip_independent(&self) -> bool {
        self.second_colors.len() == 1
    }

    pub fn matches_first(&self) -> bool {
        self.second_colors == [self.first_color]
    }
}

pub fn color_transport(
    s: &SimplicialSurface,
    target: &PlatonicTarget,
    a: Vertex,
    b: Vertex,
) -> Result<ColorTransport> {
    let start_tri = s.triangles_at(a)?[0];
    let start = base_flag(target, start_tri);
    let first_color = start.image_of(s, a).expect("a lies on the start triangle");
    let b_tris: BTreeSet<usize> = s.triangles_at(b)?.iter().copied().collect();
    let orbit = rolled_orbit(s, &target.target, start);
    let second_colors: BTreeSet<Vertex> = orbit
        .iter()
        .enumerate()
        .filter(|(t, _)| b_tris.contains(t))
        .flat_map(|(_, flags)| {
            flags
                .iter()
                .map(|f| f.image_of(s, b).expect("b lies on sigma"))
        })
        .collect();
    Ok(ColorTransport {
        first_color,
        second_colors: second_colors.into_iter().collect(),
    })
}

/// Outcome of checking the two-exceptional-vertices statement for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KVertReport {
    pub k: usize,
    pub exceptional: Vec<Vertex>,
    /// Exactly two exceptional vertices, so the statement applies.
    pub applies: bool,
    /// For k > 2: whether the pair lies across an edge.
    pub across_edge: Option<bool>,
    /// For k > 2: rolling experiment from the first exceptional vertex to the second.
    pub transport: Option<ColorTransport>,
    pub monodromy_order: usize,
    /// The three-color monodromy, for k = 2.
    pub sym3_image: Option<Sym3Subgroup>,
}

/// On a sphere with exactly two vertices of degree not divisible by `k`,
/// those vertices are not adjacent; for `k > 2` they also do not lie across an
/// edge. Violations come back as `AssertionFailure`, carrying the report text.
pub fn check_kvert(s: &SimplicialSurface, k: usize) -> Result<KVertReport> {
    if k < 2 {
        return Err(Error::UnsupportedK(k));
    }
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    if s.genus()? != 0 {
        return Err(Error::AssertionFailure("input is not a sphere".into()));
    }
    if k == 2 {
        let r = monodromy::check_odd_pair(s)?;
        return Ok(KVertReport {
            k,
            exceptional: r.odd_vertices,
            applies: r.applies,
            across_edge: None,
            transport: None,
            monodromy_order: order_of(r.monodromy),
            sym3_image: Some(r.monodromy),
        });
    }
    let exceptional = exceptional_vertices(s, k);
    let applies = exceptional.len() == 2;
    if applies && s.has_edge(exceptional[0], exceptional[1]) {
        return Err(Error::AssertionFailure(format!(
            "k = {k}: exceptional vertices {} and {} are adjacent",
            exceptional[0], exceptional[1]
        )));
    }
    let (across_edge, transport, monodromy_order) = if k <= 5 {
        let target = platonic_target(k)?;
        let order = platonic_monodromy_at(s, &target, base_flag(&target, 0))?.order();
        if applies {
            let (a, b) = (exceptional[0], exceptional[1]);
            (
                Some(lie_across_an_edge(s, a, b)),
                Some(color_transport(s, &target, a, b)?),
                order,
            )
        } else {
            (None, None, order)
        }
    } else {
        (
            applies.then(|| lie_across_an_edge(s, exceptional[0], exceptional[1])),
            None,
            0,
        )
    };
    if across_edge == Some(true) {
        return Err(Error::AssertionFailure(format!(
            "k = {k}: exceptional vertices {} and {} lie across an edge",
            exceptional[0], exceptional[1]
        )));
    }
    Ok(KVertReport {
        k,
        exceptional,
        applies,
        across_edge,
        transport,
        monodromy_order,
        sym3_image: None,
    })
}

fn order_of(g: Sym3Subgroup) -> usize {
    match g {
        Sym3Subgroup::Trivial => 1,
        Sym3Subgroup::C2 => 2,
        Sym3Subgroup::C3 => 3,
        Sym3Subgroup::Sym3 => 6,
    }
}
