//! Branched covers generated by monodromy.
//!
//! Every cover here is glued from *sheets*: copies of base triangles carrying
//! extra labels (a coloring, a face color, a matched triangle of a second
//! surface). Two sheets are glued along an edge when their labels agree on
//! it. Total-space vertices are the classes of (sheet, corner) pairs under
//! this gluing, so branch indices are measured afterwards, not presupposed.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{
    all_colorings, extend_across, is_vertex_colorable, vertex_coloring, Color, TriangleColoring,
};
use crate::surface::{ComplexJson, SimplicialSurface, Vertex};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Result of gluing sheets over a base surface.
pub(crate) struct Glued {
    pub total: SimplicialSurface,
    /// Sheet of each total triangle.
    pub sheet_of: Vec<usize>,
    /// Total vertex at each corner of each sheet (corners follow the sorted base triangle).
    pub corners: Vec<[Vertex; 3]>,
}

/// Glues sheets lying over facets `facets[base[sheet]]` of a pure complex
/// of dimension `d`; `partner(sheet, corner)` is the sheet glued across the
/// codimension-1 face opposite `corner`, if any. Returns the total vertex at
/// each corner of each sheet.
pub(crate) fn glue_sheets_d<F>(
    d: usize,
    facets: &[Vec<Vertex>],
    base: &[usize],
    partner: F,
) -> Result<Vec<Vec<Vertex>>>
where
    F: Fn(usize, usize) -> Option<usize>,
{
    let n = base.len();
    let w = d + 1;
    let mut uf = UnionFind::new(w * n);
    for sheet in 0..n {
        let f = &facets[base[sheet]];
        for c in 0..w {
            let Some(other) = partner(sheet, c) else {
                continue;
            };
            let g = &facets[base[other]];
            let back = g.iter().position(|v| !f.contains(v));
            if back.is_none_or(|b| partner(other, b) != Some(sheet)) {
                return Err(Error::NotSimplicial(format!(
                    "gluing of sheet {sheet} is not symmetric"
                )));
            }
            for (i, x) in f.iter().enumerate().filter(|&(i, _)| i != c) {
                let j = g
                    .iter()
                    .position(|y| y == x)
                    .ok_or_else(|| Error::NotSimplicial("glued sheets share no face".into()))?;
                uf.union(w * sheet + i, w * other + j);
            }
        }
    }
    let mut ids: BTreeMap<usize, Vertex> = BTreeMap::new();
    Ok((0..n)
        .map(|sheet| {
            (0..w)
                .map(|i| {
                    let root = uf.find(w * sheet + i);
                    let next = ids.len() as Vertex;
                    *ids.entry(root).or_insert(next)
                })
                .collect()
        })
        .collect())
}

/// Two-dimensional gluing over a surface, checked to be simplicial.
pub(crate) fn glue_sheets<F>(
    base: &SimplicialSurface,
    base_triangles: &[usize],
    partner: F,
) -> Result<Glued>
where
    F: Fn(usize, usize) -> Option<usize>,
{
    let facets: Vec<Vec<Vertex>> = base.triangles().iter().map(|t| t.to_vec()).collect();
    let mut sides = (0, 0);
    for sheet in 0..base_triangles.len() {
        for c in 0..3 {
            if partner(sheet, c).is_some() {
                sides.0 += 1;
            } else {
                sides.1 += 1;
            }
        }
    }
    let corners: Vec<[Vertex; 3]> = glue_sheets_d(2, &facets, base_triangles, &partner)?
        .into_iter()
        .map(|c| [c[0], c[1], c[2]])
        .collect();
    let total = SimplicialSurface::new(corners.iter().copied())
        .map_err(|e| Error::NotSimplicial(e.to_string()))?;
    if total.num_edges() != sides.0 / 2 + sides.1 {
        return Err(Error::NotSimplicial(
            "distinct sheets share an unglued edge".into(),
        ));
    }
    let mut sheet_of = vec![0; base_triangles.len()];
    for (sheet, cs) in corners.iter().enumerate() {
        sheet_of[total.triangle_index(cs).expect("sheet is a total triangle")] = sheet;
    }
    Ok(Glued {
        total,
        sheet_of,
        corners,
    })
}

/// A simplicial branched cover `total -> base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchedCover {
    pub total: SimplicialSurface,
    pub base: SimplicialSurface,
    /// Base triangle index of each total triangle.
    pub triangle_projection: Vec<usize>,
    pub vertex_projection: BTreeMap<Vertex, Vertex>,
    pub branch_indices: BTreeMap<Vertex, usize>,
}

impl BranchedCover {
    /// Assembles a cover and measures branch indices; fails if the projection
    /// is not simplicial.
    pub fn new(
        total: SimplicialSurface,
        base: SimplicialSurface,
        triangle_projection: Vec<usize>,
        vertex_projection: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self> {
        if triangle_projection.len() != total.num_triangles() {
            return Err(Error::NotSimplicial(
                "triangle projection has the wrong length".into(),
            ));
        }
        for (t, &b) in triangle_projection.iter().enumerate() {
            let img = total
                .triangle(t)
                .map(|v| vertex_projection.get(&v).copied());
            let mut img: Vec<Vertex> = img.into_iter().collect::<Option<_>>().ok_or_else(|| {
                Error::NotSimplicial(format!("total triangle {t} has an unprojected vertex"))
            })?;
            img.sort_unstable();
            if b >= base.num_triangles() || img != base.triangle(b) {
                return Err(Error::NotSimplicial(format!(
                    "total triangle {t} does not map onto base triangle {b}"
                )));
            }
        }
        let mut branch_indices = BTreeMap::new();
        for &v in total.vertices() {
            let up = total.triangles_at(v)?.len();
            let down = base.triangles_at(vertex_projection[&v])?.len();
            if up % down != 0 {
                return Err(Error::NotSimplicial(format!(
                    "vertex {v} is not a branched covering point"
                )));
            }
            branch_indices.insert(v, up / down);
        }
        Ok(BranchedCover {
            total,
            base,
            triangle_projection,
            vertex_projection,
            branch_indices,
        })
    }

    /// Number of total triangles over each base triangle, if constant.
    pub fn covering_degree(&self) -> Option<usize> {
        let mut fiber = vec![0usize; self.base.num_triangles()];
        for &b in &self.triangle_projection {
            fiber[b] += 1;
        }
        let d = fiber[0];
        fiber.iter().all(|&f| f == d).then_some(d)
    }

    pub fn is_unbranched(&self) -> bool {
        self.branch_indices.values().all(|&i| i == 1)
    }

    /// Preimages of a base vertex.
    pub fn fiber(&self, v: Vertex) -> Vec<Vertex> {
        self.vertex_projection
            .iter()
            .filter(|(_, &b)| b == v)
            .map(|(&t, _)| t)
            .collect()
    }

    /// Total ramification `sum(index - 1)`.
    pub fn ramification(&self) -> usize {
        self.branch_indices.values().map(|i| i - 1).sum()
    }

    /// `chi(total) = degree * chi(base) - sum(index - 1)`, for a cover of
    /// constant degree. Edges are never ramified, so the identity holds with
    /// or without boundary.
    pub fn riemann_hurwitz_holds(&self) -> bool {
        self.covering_degree().is_some_and(|d| {
            self.total.euler_characteristic()
                == d as i64 * self.base.euler_characteristic() - self.ramification() as i64
        })
    }

    /// Restrictions to the connected components of the total surface.
    pub fn components(&self) -> Vec<BranchedCover> {
        self.total
            .dual_components()
            .into_iter()
            .map(|ts| {
                let total = SimplicialSurface::new(ts.iter().map(|&t| *self.total.triangle(t)))
                    .expect("component is valid");
                let triangle_projection = (0..total.num_triangles())
                    .map(|i| {
                        let t = self
                            .total
                            .triangle_index(total.triangle(i))
                            .expect("same triangle");
                        self.triangle_projection[t]
                    })
                    .collect();
                let vertex_projection = total
                    .vertices()
                    .iter()
                    .map(|v| (*v, self.vertex_projection[v]))
                    .collect();
                let branch_indices = total
                    .vertices()
                    .iter()
                    .map(|v| (*v, self.branch_indices[v]))
                    .collect();
                BranchedCover {
                    total,
                    base: self.base.clone(),
                    triangle_projection,
                    vertex_projection,
                    branch_indices,
                }
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.total.dual_components().len()
    }

    pub fn to_json_value(&self) -> CoverJson {
        CoverJson {
            total: self.total.to_complex_json(),
            base: self.base.to_complex_json(),
            triangle_projection: (0..self.total.num_triangles())
                .map(|t| {
                    (
                        *self.total.triangle(t),
                        *self.base.triangle(self.triangle_projection[t]),
                    )
                })
                .collect(),
            vertex_projection: self.vertex_projection.clone(),
            branch_indices: self.branch_indices.clone(),
            component_count: self.component_count(),
            covering_degree: self.covering_degree(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("cover serializes")
    }
}

/// Serialized form of a cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub total: ComplexJson,
    pub base: ComplexJson,
    /// Pairs (total triangle, base triangle).
    pub triangle_projection: Vec<([Vertex; 3], [Vertex; 3])>,
    pub vertex_projection: BTreeMap<Vertex, Vertex>,
    pub branch_indices: BTreeMap<Vertex, usize>,
    pub component_count: usize,
    pub covering_degree: Option<usize>,
}

fn cover_from_glued(
    base: &SimplicialSurface,
    base_triangles: &[usize],
    g: Glued,
) -> Result<BranchedCover> {
    let triangle_projection = g.sheet_of.iter().map(|&s| base_triangles[s]).collect();
    let mut vertex_projection = BTreeMap::new();
    for (sheet, cs) in g.corners.iter().enumerate() {
        let tri = base.triangle(base_triangles[sheet]);
        for i in 0..3 {
            vertex_projection.insert(cs[i], tri[i]);
        }
    }
    BranchedCover::new(
        g.total,
        base.clone(),
        triangle_projection,
        vertex_projection,
    )
}

/// Index of a 3-coloring among the six bijections.
fn coloring_slot(colors: [Color; 3]) -> usize {
    all_colorings()
        .position(|c| c == colors)
        .expect("bijective coloring")
}

/// The unfolding: one sheet per (triangle, 3-coloring), glued along edges on
/// which the colorings agree.
pub fn unfolding(s: &SimplicialSurface) -> Result<BranchedCover> {
    let colorings: Vec<[Color; 3]> = all_colorings().collect();
    let base_triangles: Vec<usize> = (0..6 * s.num_triangles()).map(|i| i / 6).collect();
    let partner = |sheet: usize, corner: usize| {
        let tc = TriangleColoring {
            triangle: sheet / 6,
            colors: colorings[sheet % 6],
        };
        extend_across(s, tc, corner).map(|n| 6 * n.triangle + coloring_slot(n.colors))
    };
    let g = glue_sheets(s, &base_triangles, partner)?;
    cover_from_glued(s, &base_triangles, g)
}

/// Colors of the two classes of a face 2-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceColor {
    White,
    Black,
}

impl FaceColor {
    pub fn opposite(self) -> FaceColor {
        match self {
            FaceColor::White => FaceColor::Black,
            FaceColor::Black => FaceColor::White,
        }
    }
}

/// A face color per triangle index, adjacent triangles differing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceColoring(pub Vec<FaceColor>);

impl FaceColoring {
    pub fn is_proper(&self, s: &SimplicialSurface) -> bool {
        self.0.len() == s.num_triangles()
            && (0..s.num_triangles()).all(|t| {
                s.neighbors(t)
                    .iter()
                    .flatten()
                    .all(|&n| self.0[n] != self.0[t])
            })
    }
}

/// Proper 2-coloring of the triangles, if the dual graph is bipartite.
pub fn face_coloring(s: &SimplicialSurface) -> Result<Option<FaceColoring>> {
    s.require_connected()?;
    let mut colors: Vec<Option<FaceColor>> = vec![None; s.num_triangles()];
    colors[0] = Some(FaceColor::White);
    let mut stack = vec![0];
    while let Some(t) = stack.pop() {
        let c = colors[t].expect("visited");
        for n in s.neighbors(t).into_iter().flatten() {
            match colors[n] {
                None => {
                    colors[n] = Some(c.opposite());
                    stack.push(n);
                }
                Some(d) if d == c => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(Some(FaceColoring(
        colors.into_iter().map(|c| c.expect("connected")).collect(),
    )))
}

/// Evaluation of the two colorability statements on one surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BelyiReport {
    pub vertex_colorable: bool,
    pub face_colorable: bool,
    pub orientable: bool,
    pub even: bool,
    /// Order of the coloring monodromy image.
    pub monodromy_order: usize,
    /// The first statement applies (vertex-colorable input).
    pub first_applies: bool,
    /// The second statement applies (even, orientable input).
    pub second_applies: bool,
}

/// A vertex-colorable triangulation is face-colorable iff orientable; an even
/// orientable triangulation is face-colorable iff its monodromy image is
/// trivial or generated by a 3-cycle. Violations are `AssertionFailure`s.
pub fn check_belyi_theorem(s: &SimplicialSurface) -> Result<BelyiReport> {
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    s.require_connected()?;
    let vertex_colorable = vertex_coloring(s)?.is_some();
    let face_colorable = face_coloring(s)?.is_some();
    let orientable = s.is_orientable()?.is_some();
    let even = crate::monodromy::all_degrees_even(s);
    let m = crate::monodromy::coloring_monodromy(s)?;
    let report = BelyiReport {
        vertex_colorable,
        face_colorable,
        orientable,
        even,
        monodromy_order: m.order(),
        first_applies: vertex_colorable,
        second_applies: even && orientable,
    };
    if report.first_applies && face_colorable != orientable {
        return Err(Error::AssertionFailure(format!(
            "vertex-colorable surface: face-colorable = {face_colorable}, orientable = {orientable}"
        )));
    }
    let cyclic_3 = m.order() == 1
        || (m.order() == 3
            && m.elements
                .iter()
                .all(|g| g.is_three_cycle() || g.fixed_points() == 3));
    if report.second_applies && face_colorable != cyclic_3 {
        return Err(Error::AssertionFailure(format!(
            "even orientable surface: face-colorable = {face_colorable}, monodromy order {}",
            m.order()
        )));
    }
    Ok(report)
}

/// Sheets (triangle, 3-coloring, face color), glued when the vertex colors
/// agree on the shared edge and the face colors are opposite.
pub fn face_vertex_colored_cover(s: &SimplicialSurface) -> Result<BranchedCover> {
    let colorings: Vec<[Color; 3]> = all_colorings().collect();
    let base_triangles: Vec<usize> = (0..12 * s.num_triangles()).map(|i| i / 12).collect();
    let partner = |sheet: usize, corner: usize| {
        let (t, rest) = (sheet / 12, sheet % 12);
        let tc = TriangleColoring {
            triangle: t,
            colors: colorings[rest % 6],
        };
        let flip = 1 - rest / 6;
        extend_across(s, tc, corner).map(|n| 12 * n.triangle + 6 * flip + coloring_slot(n.colors))
    };
    let g = glue_sheets(s, &base_triangles, partner)?;
    cover_from_glued(s, &base_triangles, g)
}

/// Cuts along a simple closed edge path `cycle` (consecutive vertices
/// adjacent, last adjacent to first). The vertices on one side are replaced
/// by fresh copies numbered above the current maximum.
pub fn cut_along_cycle(s: &SimplicialSurface, cycle: &[Vertex]) -> Result<SimplicialSurface> {
    let m = cycle.len();
    let distinct: BTreeSet<Vertex> = cycle.iter().copied().collect();
    if m < 3 || distinct.len() != m {
        return Err(Error::NotASimpleCycle);
    }
    if let Some(&v) = cycle.iter().find(|&&v| !s.contains_vertex(v)) {
        return Err(Error::UnknownVertex(v));
    }
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % m];
        if !s.has_edge(v, w) {
            return Err(Error::NotASimpleCycle);
        }
        if !s.is_interior(v) {
            return Err(Error::TouchesBoundary);
        }
    }
    // the triangle on the chosen side of edge cycle[0] cycle[1]
    let first_side = s.edge_triangles(cycle[0], cycle[1]).expect("edge")[0];
    let mut side = first_side;
    let mut left: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 1..=m {
        let v = cycle[i % m];
        let (prev, next) = (cycle[i - 1], cycle[(i + 1) % m]);
        let (fan, link) = s.vertex_fan(v)?;
        let d = fan.len();
        let p = link
            .iter()
            .position(|&x| x == prev)
            .expect("cycle edge in link");
        let q = link
            .iter()
            .position(|&x| x == next)
            .expect("cycle edge in link");
        // fan[j] lies between link[j] and link[j + 1]
        let forward: Vec<usize> = (0..d)
            .map(|k| (p + k) % d)
            .take_while(|&j| j != q)
            .collect();
        let backward: Vec<usize> = (0..d)
            .map(|k| (q + k) % d)
            .take_while(|&j| j != p)
            .collect();
        let (arc, exit) = if forward.iter().any(|&j| fan[j] == side) {
            (
                forward.iter().map(|&j| fan[j]).collect::<Vec<_>>(),
                fan[(q + d - 1) % d],
            )
        } else {
            (backward.iter().map(|&j| fan[j]).collect::<Vec<_>>(), fan[q])
        };
        debug_assert!(arc.contains(&side));
        left[i % m] = arc;
        side = exit;
    }
    if side != first_side {
        return Err(Error::OneSidedCycle);
    }
    let top = *s.vertices().iter().max().expect("nonempty");
    let mut facets: Vec<[Vertex; 3]> = s.triangles().to_vec();
    for (i, arc) in left.iter().enumerate() {
        let copy = top + 1 + i as Vertex;
        for &t in arc {
            for v in facets[t].iter_mut() {
                if *v == cycle[i] {
                    *v = copy;
                }
            }
        }
    }
    SimplicialSurface::new(facets)
}

/// Outcome of the torus cut search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusCut {
    AlreadyColorable,
    Cut {
        cycle: Vec<Vertex>,
        surface: SimplicialSurface,
    },
}

/// Simple closed edge paths of length `len`, each listed once: starting at
/// its smallest vertex, second vertex smaller than the last.
pub fn simple_cycles_of_length(s: &SimplicialSurface, len: usize) -> Vec<Vec<Vertex>> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for (e, _) in s.edges() {
        adj.entry(e[0]).or_default().push(e[1]);
        adj.entry(e[1]).or_default().push(e[0]);
    }
    for ns in adj.values_mut() {
        ns.sort_unstable();
    }
    fn extend(
        adj: &BTreeMap<Vertex, Vec<Vertex>>,
        len: usize,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        if path.len() == len {
            if adj[&last].contains(&start) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &w in &adj[&last] {
            if w > start && !path.contains(&w) {
                path.push(w);
                extend(adj, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for &v in s.vertices() {
        extend(&adj, len, &mut vec![v], &mut out);
    }
    out
}

/// Searches simple edge cycles by increasing length for one whose cut is
/// vertex-colorable.
pub fn torus_colorability_cut(s: &SimplicialSurface) -> Result<TorusCut> {
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    if s.is_orientable()?.is_none() {
        return Err(Error::NotOrientable);
    }
    if is_vertex_colorable(s) {
        return Ok(TorusCut::AlreadyColorable);
    }
    for len in 3..=s.num_vertices().min(s.num_edges()) {
        for cycle in simple_cycles_of_length(s, len) {
            match cut_along_cycle(s, &cycle) {
                Ok(cut) if is_vertex_colorable(&cut) => {
                    return Ok(TorusCut::Cut {
                        cycle,
                        surface: cut,
                    })
                }
                _ => {}
            }
        }
    }
    Err(Error::SearchExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn union_find_merges() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(1, 4);
        assert_eq!(uf.find(4), 1);
        assert_ne!(uf.find(0), uf.find(2));
    }

    #[test]
    fn single_triangle_unfolds_to_six_copies() {
        let s = SimplicialSurface::new([[0, 1, 2]]).unwrap();
        let c = unfolding(&s).unwrap();
        assert_eq!(c.component_count(), 6);
        assert!(c.is_unbranched());
        assert_eq!(c.covering_degree(), Some(6));
    }

    #[test]
    fn square_face_coloring() {
        let s = SimplicialSurface::new([[0, 1, 2], [0, 2, 3]]).unwrap();
        let f = face_coloring(&s).unwrap().unwrap();
        assert_eq!(f.0, vec![FaceColor::White, FaceColor::Black]);
        assert!(f.is_proper(&s));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"["white","black"]"#);
    }

    #[test]
    fn cycle_validation() {
        let s = builtins::octahedron();
        assert_eq!(cut_along_cycle(&s, &[1, 2]), Err(Error::NotASimpleCycle));
        assert_eq!(cut_along_cycle(&s, &[1, 6, 2]), Err(Error::NotASimpleCycle));
        let disk = crate::monodromy::even_polygon_triangulation(6).unwrap();
        assert_eq!(
            cut_along_cycle(&disk, &[0, 1, 2]),
            Err(Error::TouchesBoundary)
        );
    }

    #[test]
    fn cutting_the_octahedron_equator() {
        let s = builtins::octahedron();
        let cut = cut_along_cycle(&s, &[2, 3, 5, 4]).unwrap();
        assert_eq!(cut.components().len(), 2);
        assert_eq!(cut.boundary_cycles().len(), 2);
    }

    #[test]
    fn cycle_listing_counts_triangles() {
        // K4: four 3-cycles and three 4-cycles
        let s = builtins::tetrahedron();
        assert_eq!(simple_cycles_of_length(&s, 3).len(), 4);
        assert_eq!(simple_cycles_of_length(&s, 4).len(), 3);
    }
}
