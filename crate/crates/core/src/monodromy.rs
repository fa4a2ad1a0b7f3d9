//! Three-color monodromy.
//!
//! Coloring one triangle with the colors 1, 2, 3 forces the coloring of each
//! neighbor: the shared vertices keep their colors and the third vertex gets
//! the remaining one. Following closed strips of triangles back to the start
//! permutes the colors; the set of permutations obtained this way is the
//! monodromy image, a subgroup of Sym3. It is computed as the orbit of the
//! base coloring in the graph of colored triangles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{corner_of, SimplicialSurface, Vertex, ORDERINGS};

pub type Color = u8;

/// A permutation of the colors {1, 2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([Color; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([1, 2, 3]);

    /// Builds the permutation sending color `i` to `images[i - 1]`.
    pub fn new(images: [Color; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &c in &images {
            if !(1..=3).contains(&c) || seen[(c - 1) as usize] {
                return None;
            }
            seen[(c - 1) as usize] = true;
        }
        Some(Perm3(images))
    }

    /// Images of 1, 2, 3.
    pub fn images(self) -> [Color; 3] {
        self.0
    }

    pub fn apply(self, c: Color) -> Color {
        self.0[(c - 1) as usize]
    }

    /// `self` after `other`.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([
            self.apply(other.apply(1)),
            self.apply(other.apply(2)),
            self.apply(other.apply(3)),
        ])
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0; 3];
        for c in 1..=3u8 {
            inv[(self.apply(c) - 1) as usize] = c;
        }
        Perm3(inv)
    }

    pub fn fixed_points(self) -> usize {
        (1..=3u8).filter(|&c| self.apply(c) == c).count()
    }

    pub fn is_transposition(self) -> bool {
        self.fixed_points() == 1
    }

    pub fn is_three_cycle(self) -> bool {
        self.fixed_points() == 0
    }

    pub fn all() -> impl Iterator<Item = Perm3> {
        ORDERINGS
            .iter()
            .map(|o| Perm3([o[0] as u8 + 1, o[1] as u8 + 1, o[2] as u8 + 1]))
    }

    /// The permutation `g` with `g(from[i]) = to[i]` for bijective color triples.
    pub fn relating(from: [Color; 3], to: [Color; 3]) -> Perm3 {
        let mut img = [0; 3];
        for i in 0..3 {
            img[(from[i] - 1) as usize] = to[i];
        }
        Perm3(img)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {} {}]", self.0[0], self.0[1], self.0[2])
    }
}

fn is_bijective(colors: [Color; 3]) -> bool {
    Perm3::new(colors).is_some()
}

/// Colors of the (sorted) vertices of one triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleColoring {
    pub triangle: usize,
    pub colors: [Color; 3],
}

impl TriangleColoring {
    pub fn new(triangle: usize, colors: [Color; 3]) -> Result<Self> {
        if !is_bijective(colors) {
            return Err(Error::NotABijection);
        }
        Ok(TriangleColoring { triangle, colors })
    }

    pub fn color_of(&self, s: &SimplicialSurface, v: Vertex) -> Option<Color> {
        corner_of(s.triangle(self.triangle), v).map(|i| self.colors[i])
    }

    fn index(&self) -> usize {
        self.triangle * 6 + coloring_index(self.colors)
    }
}

fn coloring_index(colors: [Color; 3]) -> usize {
    Perm3::all()
        .position(|p| p.0 == colors)
        .expect("bijective coloring")
}

fn coloring_from_index(i: usize) -> [Color; 3] {
    Perm3::all().nth(i).expect("index below 6").0
}

/// A vertex coloring in the colors 1, 2, 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeColoring {
    pub colors: BTreeMap<Vertex, Color>,
}

impl ThreeColoring {
    /// Whether every triangle of `s` gets three distinct colors (equivalently,
    /// adjacent vertices get different colors).
    pub fn is_proper(&self, s: &SimplicialSurface) -> bool {
        s.triangles().iter().all(|t| {
            let c: Option<Vec<Color>> = t.iter().map(|v| self.colors.get(v).copied()).collect();
            matches!(c, Some(c) if is_bijective([c[0], c[1], c[2]]))
        })
    }
}

/// Sequence of triangles in which consecutive entries share an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStrip(pub Vec<usize>);

impl TriangleStrip {
    /// Validates that consecutive triangles are adjacent.
    pub fn new(s: &SimplicialSurface, triangles: Vec<usize>) -> Result<Self> {
        for (i, w) in triangles.windows(2).enumerate() {
            if !s.neighbors(w[0]).contains(&Some(w[1])) {
                return Err(Error::NotAStrip(i, i + 1));
            }
        }
        Ok(TriangleStrip(triangles))
    }

    /// The closed strip that walks once around interior vertex `v`, starting
    /// and ending at `start`.
    pub fn around_vertex(s: &SimplicialSurface, v: Vertex, start: usize) -> Result<Self> {
        if !s.is_interior(v) {
            return Err(Error::BoundaryVertex(v));
        }
        let (fan, _) = s.vertex_fan(v)?;
        let pos = fan
            .iter()
            .position(|&t| t == start)
            .ok_or(Error::UnknownVertex(v))?;
        let mut strip: Vec<usize> = fan[pos..].iter().chain(&fan[..pos]).copied().collect();
        strip.push(start);
        Ok(TriangleStrip(strip))
    }
}

/// Coloring of the neighbor across the edge opposite `corner`, if the edge is interior.
pub fn extend_across(
    s: &SimplicialSurface,
    tc: TriangleColoring,
    corner: usize,
) -> Option<TriangleColoring> {
    let n = s.across(tc.triangle, corner)?;
    let tri = s.triangle(tc.triangle);
    let ntri = s.triangle(n);
    let mut colors = [0; 3];
    let mut shared_sum = 0;
    for (i, &v) in tri.iter().enumerate() {
        if i == corner {
            continue;
        }
        let j = corner_of(ntri, v).expect("shared vertex");
        colors[j] = tc.colors[i];
        shared_sum += tc.colors[i];
    }
    let k = colors.iter().position(|&c| c == 0).expect("one new vertex");
    colors[k] = 6 - shared_sum;
    Some(TriangleColoring {
        triangle: n,
        colors,
    })
}

/// Coloring of the last triangle of `strip` obtained by extending `start`
/// across each shared edge in turn.
pub fn extend_along_strip(
    s: &SimplicialSurface,
    start: TriangleColoring,
    strip: &TriangleStrip,
) -> Result<TriangleColoring> {
    if !is_bijective(start.colors) {
        return Err(Error::NotABijection);
    }
    let Some(&first) = strip.0.first() else {
        return Ok(start);
    };
    if first != start.triangle {
        return Err(Error::NotAStrip(0, 0));
    }
    let mut cur = start;
    for (i, w) in strip.0.windows(2).enumerate() {
        let corner = s
            .neighbors(w[0])
            .iter()
            .position(|&n| n == Some(w[1]))
            .ok_or(Error::NotAStrip(i, i + 1))?;
        cur = extend_across(s, cur, corner).expect("adjacent triangles share an interior edge");
    }
    Ok(cur)
}

/// Recoloring produced by a closed strip: the permutation `g` with
/// `final = g(start)` on every vertex of the base triangle.
pub fn strip_recoloring(
    s: &SimplicialSurface,
    start: TriangleColoring,
    strip: &TriangleStrip,
) -> Result<Perm3> {
    let end = extend_along_strip(s, start, strip)?;
    if end.triangle != start.triangle {
        return Err(Error::NotAStrip(0, strip.0.len().saturating_sub(1)));
    }
    Ok(Perm3::relating(start.colors, end.colors))
}

/// For every triangle, the colorings reached from `start` by extension.
fn colored_orbit(s: &SimplicialSurface, start: TriangleColoring) -> Vec<Vec<[Color; 3]>> {
    let mut seen = vec![false; 6 * s.num_triangles()];
    let mut reached = vec![Vec::new(); s.num_triangles()];
    seen[start.index()] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(tc) = queue.pop_front() {
        reached[tc.triangle].push(tc.colors);
        for c in 0..3 {
            if let Some(n) = extend_across(s, tc, c) {
                if !seen[n.index()] {
                    seen[n.index()] = true;
                    queue.push_back(n);
                }
            }
        }
    }
    reached
}

/// The monodromy image as an explicit permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringMonodromy {
    pub base: usize,
    pub base_coloring: [Color; 3],
    pub elements: BTreeSet<Perm3>,
}

/// Isomorphism type of a subgroup of Sym3; it also determines the conjugacy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sym3Subgroup {
    Trivial,
    C2,
    C3,
    Sym3,
}

impl fmt::Display for Sym3Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sym3Subgroup::Trivial => "trivial",
            Sym3Subgroup::C2 => "C2",
            Sym3Subgroup::C3 => "C3",
            Sym3Subgroup::Sym3 => "Sym3",
        };
        f.write_str(s)
    }
}

impl ColoringMonodromy {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn kind(&self) -> Sym3Subgroup {
        match self.elements.len() {
            1 => Sym3Subgroup::Trivial,
            2 => Sym3Subgroup::C2,
            3 => Sym3Subgroup::C3,
            _ => Sym3Subgroup::Sym3,
        }
    }

    /// Closure under composition and inverses.
    pub fn is_subgroup(&self) -> bool {
        self.elements.contains(&Perm3::IDENTITY)
            && self.elements.iter().all(|&g| {
                self.elements.contains(&g.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|&h| self.elements.contains(&g.compose(h)))
            })
    }
}

/// Monodromy image at `base`, starting from the coloring 1, 2, 3 of its sorted vertices.
pub fn coloring_monodromy_image(s: &SimplicialSurface, base: usize) -> Result<ColoringMonodromy> {
    s.require_connected()?;
    let start = TriangleColoring {
        triangle: base,
        colors: [1, 2, 3],
    };
    let orbit = colored_orbit(s, start);
    let elements = orbit[base]
        .iter()
        .map(|&c| Perm3::relating(start.colors, c))
        .collect();
    let m = ColoringMonodromy {
        base,
        base_coloring: start.colors,
        elements,
    };
    debug_assert!(m.is_subgroup());
    Ok(m)
}

/// Monodromy image at the lexicographically smallest triangle.
pub fn coloring_monodromy(s: &SimplicialSurface) -> Result<ColoringMonodromy> {
    coloring_monodromy_image(s, 0)
}

/// A proper 3-coloring, which exists exactly when the monodromy is trivial.
pub fn vertex_coloring(s: &SimplicialSurface) -> Result<Option<ThreeColoring>> {
    s.require_connected()?;
    let start = TriangleColoring {
        triangle: 0,
        colors: [1, 2, 3],
    };
    let orbit = colored_orbit(s, start);
    if orbit[0].len() != 1 {
        return Ok(None);
    }
    let mut colors = BTreeMap::new();
    for (t, cs) in orbit.iter().enumerate() {
        debug_assert_eq!(cs.len(), 1);
        for (i, &v) in s.triangle(t).iter().enumerate() {
            let prev = colors.insert(v, cs[0][i]);
            debug_assert!(prev.is_none() || prev == Some(cs[0][i]));
        }
    }
    let coloring = ThreeColoring { colors };
    debug_assert!(coloring.is_proper(s));
    Ok(Some(coloring))
}

/// Vertex-colorability of a possibly disconnected surface.
pub fn is_vertex_colorable(s: &SimplicialSurface) -> bool {
    s.components().iter().all(|c| {
        vertex_coloring(c)
            .expect("component is connected")
            .is_some()
    })
}

/// Interior vertices of odd degree.
pub fn odd_vertices(s: &SimplicialSurface) -> BTreeSet<Vertex> {
    s.interior_vertices()
        .into_iter()
        .filter(|&v| s.vertex_degree(v).expect("known vertex") % 2 == 1)
        .collect()
}

/// Whether every vertex, interior or on the boundary, has even degree.
pub fn all_degrees_even(s: &SimplicialSurface) -> bool {
    s.degrees().values().all(|d| d % 2 == 0)
}

/// A triangulated `n`-gon with every vertex of even degree and no vertices on
/// the sides. The boundary is labeled `0..n` in cyclic order.
///
/// `n = 3` is the single triangle (its corners have two edges each). `n = 6`
/// is the hexagon with a central triangle on alternate corners. Each further
/// step replaces a boundary edge `pq` by the path `p a b c q` and adds the
/// triangles `pab`, `pbq`, `bcq`: `p` and `q` gain two triangles, `a` and `c`
/// one, `b` three, so every parity is preserved.
pub fn even_polygon_triangulation(n: usize) -> Result<SimplicialSurface> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    if !n.is_multiple_of(3) {
        return Err(Error::NotDivisibleBy3(n));
    }
    if n == 3 {
        return SimplicialSurface::new([[0, 1, 2]]);
    }
    let mut facets: Vec<[Vertex; 3]> = vec![[0, 2, 4], [0, 1, 2], [2, 3, 4], [4, 5, 0]];
    let mut boundary: Vec<Vertex> = (0..6).collect();
    let mut next: Vertex = 6;
    let mut step = 0;
    while boundary.len() < n {
        let i = (3 * step + 1) % boundary.len();
        let p = boundary[i];
        let q = boundary[(i + 1) % boundary.len()];
        let (a, b, c) = (next, next + 1, next + 2);
        next += 3;
        facets.extend([[p, a, b], [p, b, q], [b, c, q]]);
        boundary.splice(i + 1..i + 1, [a, b, c]);
        step += 1;
    }
    let relabel: BTreeMap<Vertex, Vertex> = boundary
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as Vertex))
        .collect();
    let s = SimplicialSurface::new(
        facets
            .iter()
            .map(|t| [relabel[&t[0]], relabel[&t[1]], relabel[&t[2]]]),
    )?;
    debug_assert!(all_degrees_even(&s));
    Ok(s)
}

/// Colors read around the boundary of a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPeriod {
    pub colors: Vec<Color>,
    /// +1 if the colors run 1, 2, 3, 1, ... and -1 if they run 1, 3, 2, 1, ...
    pub direction: i8,
}

/// Checks that the boundary colors of an even colored disk repeat with period 3.
pub fn boundary_color_period(
    s: &SimplicialSurface,
    coloring: &ThreeColoring,
) -> Result<BoundaryPeriod> {
    let cycles = s.boundary_cycles();
    if cycles.len() != 1 || s.euler_characteristic() != 1 {
        return Err(Error::AssertionFailure("input is not a disk".into()));
    }
    if !coloring.is_proper(s) {
        return Err(Error::AssertionFailure("coloring is not proper".into()));
    }
    let colors: Vec<Color> = cycles[0].iter().map(|v| coloring.colors[v]).collect();
    let n = colors.len();
    let step = |i: usize| (colors[(i + 1) % n] as i8 - colors[i] as i8).rem_euclid(3);
    let first = step(0);
    if first == 0 || (0..n).any(|i| step(i) != first) || !n.is_multiple_of(3) {
        return Err(Error::AssertionFailure(format!(
            "boundary colors {colors:?} are not 3-periodic"
        )));
    }
    Ok(BoundaryPeriod {
        colors,
        direction: if first == 1 { 1 } else { -1 },
    })
}

/// Outcome of the two-odd-vertices check on a sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddPairReport {
    pub odd_vertices: Vec<Vertex>,
    /// Whether exactly two odd vertices exist, i.e. whether the statement applies.
    pub applies: bool,
    pub monodromy: Sym3Subgroup,
}

/// On a closed sphere, two lone odd vertices are never adjacent. Returns an
/// `AssertionFailure` if the input contradicts this.
pub fn check_odd_pair(s: &SimplicialSurface) -> Result<OddPairReport> {
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    if s.genus()? != 0 {
        return Err(Error::AssertionFailure("input is not a sphere".into()));
    }
    let odd: Vec<Vertex> = odd_vertices(s).into_iter().collect();
    let applies = odd.len() == 2;
    if applies && s.has_edge(odd[0], odd[1]) {
        return Err(Error::AssertionFailure(format!(
            "odd vertices {} and {} are adjacent",
            odd[0], odd[1]
        )));
    }
    let monodromy = coloring_monodromy(s)?.kind();
    Ok(OddPairReport {
        odd_vertices: odd,
        applies,
        monodromy,
    })
}

pub(crate) fn all_colorings() -> impl Iterator<Item = [Color; 3]> {
    (0..6).map(coloring_from_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn perm3_algebra() {
        let all: Vec<Perm3> = Perm3::all().collect();
        assert_eq!(all.len(), 6);
        for &g in &all {
            assert_eq!(g.compose(g.inverse()), Perm3::IDENTITY);
            for &h in &all {
                for &k in &all {
                    assert_eq!(g.compose(h).compose(k), g.compose(h.compose(k)));
                }
            }
        }
        assert_eq!(Perm3::new([1, 1, 2]), None);
        assert_eq!(all.iter().filter(|g| g.is_transposition()).count(), 3);
        assert_eq!(all.iter().filter(|g| g.is_three_cycle()).count(), 2);
    }

    #[test]
    fn length_one_strip_is_identity() {
        let s = builtins::octahedron();
        let start = TriangleColoring::new(3, [2, 3, 1]).unwrap();
        let strip = TriangleStrip::new(&s, vec![3]).unwrap();
        assert_eq!(extend_along_strip(&s, start, &strip).unwrap(), start);
    }

    #[test]
    fn around_degree_three_vertex_swaps_the_other_two() {
        // hand-rolled: around apex 3 of the tetrahedron, starting on [0,1,3]
        // colored 0->1, 1->2, 3->3: [0,1,3] -> [1,2,3] gives 2 color 1;
        // -> [0,2,3] gives 0 color 2; -> [0,1,3] gives 1 color 1.
        let s = builtins::tetrahedron();
        let base = s.triangle_index(&[0, 1, 3]).unwrap();
        let start = TriangleColoring::new(base, [1, 2, 3]).unwrap();
        let strip = TriangleStrip::around_vertex(&s, 3, base).unwrap();
        assert_eq!(strip.0.len(), 4);
        let end = extend_along_strip(&s, start, &strip).unwrap();
        assert_eq!(end.colors, [2, 1, 3]);
        assert!(strip_recoloring(&s, start, &strip)
            .unwrap()
            .is_transposition());
    }

    #[test]
    fn around_even_vertex_is_identity() {
        let s = builtins::octahedron();
        for &v in s.vertices() {
            let base = s.triangles_at(v).unwrap()[0];
            let start = TriangleColoring::new(base, [3, 1, 2]).unwrap();
            let strip = TriangleStrip::around_vertex(&s, v, base).unwrap();
            assert_eq!(extend_along_strip(&s, start, &strip).unwrap(), start);
        }
    }

    #[test]
    fn strip_errors() {
        let s = builtins::octahedron();
        let a = s.triangle_index(&[1, 2, 3]).unwrap();
        let b = s.triangle_index(&[4, 5, 6]).unwrap();
        assert_eq!(
            TriangleStrip::new(&s, vec![a, b]),
            Err(Error::NotAStrip(0, 1))
        );
        assert_eq!(
            TriangleColoring::new(a, [1, 1, 2]),
            Err(Error::NotABijection)
        );
    }

    #[test]
    fn monodromy_images_of_examples() {
        assert_eq!(
            coloring_monodromy(&builtins::octahedron()).unwrap().kind(),
            Sym3Subgroup::Trivial
        );
        assert_eq!(
            coloring_monodromy(&builtins::tetrahedron()).unwrap().kind(),
            Sym3Subgroup::Sym3
        );
        let torus = coloring_monodromy(&builtins::seven_vertex_torus()).unwrap();
        assert_eq!(torus.kind(), Sym3Subgroup::C3);
        assert!(torus
            .elements
            .iter()
            .filter(|g| **g != Perm3::IDENTITY)
            .all(|g| g.is_three_cycle()));
        assert!(torus.is_subgroup());
    }

    #[test]
    fn disconnected_input_rejected() {
        let s = SimplicialSurface::new([[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(coloring_monodromy(&s), Err(Error::DisconnectedInput));
        assert_eq!(vertex_coloring(&s), Err(Error::DisconnectedInput));
        assert!(is_vertex_colorable(&s));
    }

    #[test]
    fn colorings_of_examples() {
        let oct = builtins::octahedron();
        let c = vertex_coloring(&oct).unwrap().unwrap();
        assert!(c.is_proper(&oct));
        for v in 1..=6u32 {
            assert_eq!(c.colors[&v], c.colors[&(7 - v)], "antipodes share a color");
        }
        assert!(vertex_coloring(&builtins::tetrahedron()).unwrap().is_none());
        let hex = even_polygon_triangulation(6).unwrap();
        assert!(vertex_coloring(&hex).unwrap().unwrap().is_proper(&hex));
    }

    #[test]
    fn odd_vertex_sets() {
        assert!(odd_vertices(&builtins::octahedron()).is_empty());
        assert_eq!(odd_vertices(&builtins::tetrahedron()).len(), 4);
        assert!(odd_vertices(&even_polygon_triangulation(9).unwrap()).is_empty());
    }

    #[test]
    fn even_polygons() {
        for n in [3, 6, 9, 12, 15, 30] {
            let s = even_polygon_triangulation(n).unwrap();
            assert_eq!(
                s.boundary_cycles(),
                vec![(0..n as Vertex).collect::<Vec<_>>()]
            );
            assert_eq!(s.euler_characteristic(), 1);
            assert!(all_degrees_even(&s), "n = {n}");
            let c = vertex_coloring(&s)
                .unwrap()
                .expect("even disk is colorable");
            let period = boundary_color_period(&s, &c).unwrap();
            assert_eq!(period.colors.len(), n);
        }
        assert_eq!(
            even_polygon_triangulation(4).unwrap_err(),
            Error::NotDivisibleBy3(4)
        );
        assert_eq!(
            even_polygon_triangulation(2).unwrap_err(),
            Error::PolygonTooSmall(2)
        );
    }

    #[test]
    fn period_check_rejects_bad_colorings() {
        let s = SimplicialSurface::new([[0, 1, 2], [0, 2, 3]]).unwrap();
        let c = ThreeColoring {
            colors: BTreeMap::from([(0, 1), (1, 2), (2, 3), (3, 2)]),
        };
        assert!(c.is_proper(&s));
        assert!(matches!(
            boundary_color_period(&s, &c),
            Err(Error::AssertionFailure(_))
        ));
    }

    #[test]
    fn odd_pair_check() {
        let r = check_odd_pair(&builtins::octahedron()).unwrap();
        assert!(!r.applies);
        assert!(check_odd_pair(&builtins::seven_vertex_torus()).is_err());
    }

    #[test]
    fn coloring_json_shape() {
        let c = ThreeColoring {
            colors: BTreeMap::from([(0, 1), (10, 3), (2, 2)]),
        };
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"colors":{"0":1,"2":2,"10":3}}"#
        );
    }
}
