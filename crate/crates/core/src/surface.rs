//! Validated triangulated surfaces.
//!
//! A [`SimplicialSurface`] is a finite set of vertex triples in which every
//! edge lies in one or two triangles and every vertex link is a single path
//! or cycle. Surfaces need not be connected or closed; operations that need
//! either property check it and say so.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;
/// Vertex triple in increasing order.
pub type Triangle = [Vertex; 3];
/// Vertex pair in increasing order.
pub type Edge = [Vertex; 2];

pub(crate) fn sorted_edge(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

pub(crate) fn sorted_triangle(mut t: [Vertex; 3]) -> Triangle {
    t.sort_unstable();
    t
}

/// The vertex of `t` that is neither `x` nor `y`.
pub(crate) fn third(t: &Triangle, x: Vertex, y: Vertex) -> Vertex {
    *t.iter()
        .find(|&&v| v != x && v != y)
        .expect("triangle has a third vertex")
}

pub(crate) fn corner_of(t: &Triangle, v: Vertex) -> Option<usize> {
    t.iter().position(|&w| w == v)
}

/// A triangle together with an ordering of its vertices.
///
/// Flags are the atoms of every rigid propagation in this crate: once the
/// image of one flag is fixed, a simplicial map of a connected surface is
/// determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub triangle: usize,
    pub vertices: [Vertex; 3],
}

/// The six orderings of a triple, starting with the identity.
pub(crate) const ORDERINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Interchange format for complexes of any dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: usize,
    pub facets: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone)]
pub struct SimplicialSurface {
    vertices: Vec<Vertex>,
    triangles: Vec<Triangle>,
    edges: BTreeMap<Edge, Vec<usize>>,
    // neighbors[t][i]: triangle across the edge opposite corner i
    neighbors: Vec<[Option<usize>; 3]>,
    vertex_triangles: BTreeMap<Vertex, Vec<usize>>,
}

impl PartialEq for SimplicialSurface {
    fn eq(&self, other: &Self) -> bool {
        self.triangles == other.triangles
    }
}

impl Eq for SimplicialSurface {}

impl SimplicialSurface {
    /// Validates a list of triangles and precomputes edges, neighbors and links.
    pub fn new<I>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut triangles = Vec::new();
        for f in facets {
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::DegenerateTriangle(f.to_vec()));
            }
            triangles.push(sorted_triangle(f));
        }
        if triangles.is_empty() {
            return Err(Error::Empty);
        }
        triangles.sort_unstable();
        for w in triangles.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateTriangle(w[0].to_vec()));
            }
        }

        let mut edges: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        let mut vertex_triangles: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, t) in triangles.iter().enumerate() {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                edges.entry([a, b]).or_default().push(i);
            }
            for &v in t {
                vertex_triangles.entry(v).or_default().push(i);
            }
        }
        if let Some((e, ts)) = edges.iter().find(|(_, ts)| ts.len() > 2) {
            return Err(Error::NonManifoldEdge(*e, ts.len()));
        }

        let neighbors = triangles
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut n = [None; 3];
                for (c, slot) in n.iter_mut().enumerate() {
                    let e = opposite_edge(t, c);
                    *slot = edges[&e].iter().copied().find(|&j| j != i);
                }
                n
            })
            .collect();

        let surface = SimplicialSurface {
            vertices: vertex_triangles.keys().copied().collect(),
            triangles,
            edges,
            neighbors,
            vertex_triangles,
        };
        for &v in &surface.vertices {
            if !surface.link_is_path_or_cycle(v) {
                return Err(Error::PinchedVertex(v));
            }
        }
        Ok(surface)
    }

    fn link_is_path_or_cycle(&self, v: Vertex) -> bool {
        let ts = &self.vertex_triangles[&v];
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &t in ts {
            let tri = &self.triangles[t];
            let others: Vec<Vertex> = tri.iter().copied().filter(|&w| w != v).collect();
            adj.entry(others[0]).or_default().push(others[1]);
            adj.entry(others[1]).or_default().push(others[0]);
        }
        // Degrees in the link are at most two because edges lie in at most two triangles.
        let start = *adj.keys().next().expect("vertex has a triangle");
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[&u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == adj.len()
    }

    /// Parses the JSON interchange format; `dim` must be 2.
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: ComplexJson =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_complex_json(&parsed)
    }

    pub fn from_complex_json(c: &ComplexJson) -> Result<Self> {
        if c.dim != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: c.dim,
            });
        }
        let mut facets = Vec::with_capacity(c.facets.len());
        for f in &c.facets {
            if f.len() != 3 {
                return Err(Error::WrongDimension {
                    expected: 2,
                    found: f.len().saturating_sub(1),
                });
            }
            facets.push([f[0], f[1], f[2]]);
        }
        Self::new(facets)
    }

    pub fn to_complex_json(&self) -> ComplexJson {
        ComplexJson {
            dim: 2,
            facets: self.triangles.iter().map(|t| t.to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_complex_json()).expect("serializable")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle(&self, t: usize) -> &Triangle {
        &self.triangles[t]
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Edge, &[usize])> + '_ {
        self.edges.iter().map(|(e, ts)| (e, ts.as_slice()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertex_triangles.contains_key(&v)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains_key(&sorted_edge(a, b))
    }

    pub fn edge_triangles(&self, a: Vertex, b: Vertex) -> Option<&[usize]> {
        self.edges.get(&sorted_edge(a, b)).map(Vec::as_slice)
    }

    pub fn triangle_index(&self, t: &[Vertex; 3]) -> Option<usize> {
        self.triangles.binary_search(&sorted_triangle(*t)).ok()
    }

    /// Triangles incident to `v`, in increasing index order.
    pub fn triangles_at(&self, v: Vertex) -> Result<&[usize]> {
        self.vertex_triangles
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    pub fn is_closed(&self) -> bool {
        self.edges.values().all(|ts| ts.len() == 2)
    }

    pub fn boundary_edges(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|(_, ts)| ts.len() == 1)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn is_boundary_edge(&self, a: Vertex, b: Vertex) -> bool {
        matches!(self.edge_triangles(a, b), Some(ts) if ts.len() == 1)
    }

    /// Number of edges at `v`. For an interior vertex this equals the number
    /// of incident triangles; on the boundary it is one more.
    pub fn vertex_degree(&self, v: Vertex) -> Result<usize> {
        let ts = self.triangles_at(v)?;
        Ok(if self.is_interior(v) {
            ts.len()
        } else {
            ts.len() + 1
        })
    }

    pub fn is_interior(&self, v: Vertex) -> bool {
        match self.vertex_triangles.get(&v) {
            None => false,
            Some(ts) => ts.iter().all(|&t| {
                let c = corner_of(&self.triangles[t], v).expect("incident");
                // the two edges at v in t are those opposite the other corners
                (0..3)
                    .filter(|&i| i != c)
                    .all(|i| self.neighbors[t][i].is_some())
            }),
        }
    }

    pub fn interior_vertices(&self) -> BTreeSet<Vertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_interior(v))
            .collect()
    }

    pub fn degrees(&self) -> BTreeMap<Vertex, usize> {
        self.vertices
            .iter()
            .map(|&v| (v, self.vertex_degree(v).expect("known vertex")))
            .collect()
    }

    /// Boundary components as vertex cycles, each starting at its smallest
    /// vertex and continuing towards its smaller boundary neighbor.
    pub fn boundary_cycles(&self) -> Vec<Vec<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for [a, b] in self.boundary_edges() {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for (&start, nbrs) in &adj {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut prev = start;
            let mut cur = *nbrs
                .iter()
                .min()
                .expect("boundary vertex has two boundary edges");
            while cur != start {
                seen.insert(cur);
                cycle.push(cur);
                let next = adj[&cur]
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("cycle");
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Neighbors of triangle `t` across the edges opposite its corners.
    pub fn neighbors(&self, t: usize) -> [Option<usize>; 3] {
        self.neighbors[t]
    }

    /// Triangle across the edge of `t` opposite its corner `corner`.
    pub fn across(&self, t: usize, corner: usize) -> Option<usize> {
        self.neighbors[t][corner]
    }

    /// The other triangle containing edge `e` of triangle `t`, if `e` is interior.
    pub fn adjacent_triangle(&self, t: usize, e: [Vertex; 2]) -> Result<Option<usize>> {
        let tri = &self.triangles[t];
        let (Some(i), Some(j)) = (corner_of(tri, e[0]), corner_of(tri, e[1])) else {
            return Err(Error::EdgeNotInTriangle(sorted_edge(e[0], e[1]), *tri));
        };
        if i == j {
            return Err(Error::EdgeNotInTriangle(sorted_edge(e[0], e[1]), *tri));
        }
        Ok(self.neighbors[t][3 - i - j])
    }

    /// Connected components of the dual graph, as sorted triangle index lists.
    pub fn dual_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.triangles.len()];
        let mut out = Vec::new();
        for start in 0..self.triangles.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for n in self.neighbors[t].iter().flatten() {
                    if comp[*n] == usize::MAX {
                        comp[*n] = id;
                        members.push(*n);
                        stack.push(*n);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.dual_components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedInput)
        }
    }

    /// The connected components, keeping vertex ids.
    pub fn components(&self) -> Vec<SimplicialSurface> {
        self.dual_components()
            .into_iter()
            .map(|c| {
                SimplicialSurface::new(c.iter().map(|&t| self.triangles[t]))
                    .expect("a component of a valid surface is valid")
            })
            .collect()
    }

    /// A compatible orientation of every triangle, or `None` when some
    /// component is non-orientable. Works on disconnected surfaces.
    pub fn orientation(&self) -> Option<Vec<[Vertex; 3]>> {
        let mut oriented: Vec<Option<[Vertex; 3]>> = vec![None; self.triangles.len()];
        for root in 0..self.triangles.len() {
            if oriented[root].is_some() {
                continue;
            }
            oriented[root] = Some(self.triangles[root]);
            let mut queue = VecDeque::from([root]);
            while let Some(t) = queue.pop_front() {
                let o = oriented[t].expect("queued triangles are oriented");
                for (x, y) in [(o[0], o[1]), (o[1], o[2]), (o[2], o[0])] {
                    let Some(n) = self.adjacent_triangle(t, [x, y]).expect("own edge") else {
                        continue;
                    };
                    match oriented[n] {
                        Some(on) => {
                            if !has_directed_edge(&on, y, x) {
                                return None;
                            }
                        }
                        None => {
                            oriented[n] = Some([y, x, third(&self.triangles[n], x, y)]);
                            queue.push_back(n);
                        }
                    }
                }
            }
        }
        Some(
            oriented
                .into_iter()
                .map(|o| o.expect("every triangle visited"))
                .collect(),
        )
    }

    /// Orientability of a connected surface, with the orientation as witness.
    pub fn is_orientable(&self) -> Result<Option<Vec<[Vertex; 3]>>> {
        self.require_connected()?;
        Ok(self.orientation())
    }

    /// Genus of a closed, connected, orientable surface.
    pub fn genus(&self) -> Result<u64> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        if self.is_orientable()?.is_none() {
            return Err(Error::NotOrientable);
        }
        Ok(((2 - self.euler_characteristic()) / 2) as u64)
    }

    /// Triangles around `v` in rotational order together with the link
    /// vertices: for an interior vertex the fan closes up and the link is a
    /// cycle with as many vertices as triangles; on the boundary the link is
    /// a path with one more vertex than the fan has triangles.
    pub fn vertex_fan(&self, v: Vertex) -> Result<(Vec<usize>, Vec<Vertex>)> {
        let ts = self.triangles_at(v)?;
        let interior = self.is_interior(v);
        let (t0, entry) = if interior {
            let t0 = ts[0];
            let tri = &self.triangles[t0];
            let a = tri
                .iter()
                .copied()
                .filter(|&w| w != v)
                .min()
                .expect("two others");
            (t0, a)
        } else {
            // start on the boundary edge at v whose far end is smallest
            let mut best: Option<(Vertex, usize)> = None;
            for &t in ts {
                for &w in self.triangles[t].iter().filter(|&&w| w != v) {
                    if self.is_boundary_edge(v, w) && best.is_none_or(|(b, _)| w < b) {
                        best = Some((w, t));
                    }
                }
            }
            let (a, t0) = best.expect("boundary vertex has a boundary edge");
            (t0, a)
        };
        let mut fan = Vec::with_capacity(ts.len());
        let mut link = vec![entry];
        let mut t = t0;
        let mut enter = entry;
        loop {
            fan.push(t);
            let exit = third(&self.triangles[t], v, enter);
            let next = self.adjacent_triangle(t, [v, exit]).expect("own edge");
            match next {
                Some(n) if n == t0 => break,
                Some(n) => {
                    link.push(exit);
                    t = n;
                    enter = exit;
                }
                None => {
                    link.push(exit);
                    break;
                }
            }
        }
        Ok((fan, link))
    }

    /// Image of the surface under a vertex relabeling.
    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<SimplicialSurface> {
        SimplicialSurface::new(self.triangles.iter().map(|t| [f(t[0]), f(t[1]), f(t[2])]))
    }

    /// Flags of triangle `t` in the six vertex orders.
    pub fn flags_of(&self, t: usize) -> impl Iterator<Item = Flag> + '_ {
        let tri = self.triangles[t];
        ORDERINGS.iter().map(move |o| Flag {
            triangle: t,
            vertices: [tri[o[0]], tri[o[1]], tri[o[2]]],
        })
    }

    pub fn flags(&self) -> impl Iterator<Item = Flag> + '_ {
        (0..self.triangles.len()).flat_map(move |t| self.flags_of(t))
    }
}

pub(crate) fn opposite_edge(t: &Triangle, corner: usize) -> Edge {
    match corner {
        0 => [t[1], t[2]],
        1 => [t[0], t[2]],
        _ => [t[0], t[1]],
    }
}

pub(crate) fn has_directed_edge(o: &[Vertex; 3], a: Vertex, b: Vertex) -> bool {
    (o[0] == a && o[1] == b) || (o[1] == a && o[2] == b) || (o[2] == a && o[0] == b)
}

/// Convenience constructor mirroring the JSON format.
pub fn build_surface(facets: &[[Vertex; 3]]) -> Result<SimplicialSurface> {
    SimplicialSurface::new(facets.iter().copied())
}

/// A vertex bijection carrying the triangles of one surface onto another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceIsomorphism {
    pub vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SurfaceIsomorphism {
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    /// Checks the defining property against the two surfaces.
    pub fn verify(&self, a: &SimplicialSurface, b: &SimplicialSurface) -> bool {
        if a.num_triangles() != b.num_triangles() || self.vertex_map.len() != a.num_vertices() {
            return false;
        }
        let images: BTreeSet<Vertex> = self.vertex_map.values().copied().collect();
        if images.len() != self.vertex_map.len() {
            return false;
        }
        a.triangles().iter().all(|t| {
            let img = [
                self.vertex_map.get(&t[0]),
                self.vertex_map.get(&t[1]),
                self.vertex_map.get(&t[2]),
            ];
            match img {
                [Some(&x), Some(&y), Some(&z)] => b.triangle_index(&[x, y, z]).is_some(),
                _ => false,
            }
        })
    }
}

/// Propagates the assignment `from -> to` across the component of `a`
/// containing `from.triangle`. Returns the vertex map on that component, or
/// `None` when the propagation is inconsistent.
pub(crate) fn propagate_flag_map(
    a: &SimplicialSurface,
    b: &SimplicialSurface,
    from: Flag,
    to: Flag,
) -> Option<HashMap<Vertex, Vertex>> {
    let mut vmap: HashMap<Vertex, Vertex> = HashMap::new();
    let mut used: HashMap<Vertex, Vertex> = HashMap::new();
    let mut assign = |x: Vertex, y: Vertex, vmap: &mut HashMap<Vertex, Vertex>| -> bool {
        match (vmap.get(&x), used.get(&y)) {
            (Some(&m), _) => m == y,
            (None, Some(_)) => false,
            (None, None) => {
                vmap.insert(x, y);
                used.insert(y, x);
                true
            }
        }
    };
    for i in 0..3 {
        if !assign(from.vertices[i], to.vertices[i], &mut vmap) {
            return None;
        }
    }
    let mut tmap: HashMap<usize, usize> = HashMap::from([(from.triangle, to.triangle)]);
    let mut tused: BTreeSet<usize> = BTreeSet::from([to.triangle]);
    let mut queue = VecDeque::from([from.triangle]);
    while let Some(ta) = queue.pop_front() {
        let tb = tmap[&ta];
        let tri = *a.triangle(ta);
        for c in 0..3 {
            let [x, y] = opposite_edge(&tri, c);
            let na = a.across(ta, c);
            let nb = b.adjacent_triangle(tb, [vmap[&x], vmap[&y]]).ok()?;
            match (na, nb) {
                (None, None) => {}
                (Some(na), Some(nb)) => {
                    let z = third(a.triangle(na), x, y);
                    let w = third(b.triangle(nb), vmap[&x], vmap[&y]);
                    if !assign(z, w, &mut vmap) {
                        return None;
                    }
                    match tmap.get(&na) {
                        Some(&m) => {
                            if m != nb {
                                return None;
                            }
                        }
                        None => {
                            if !tused.insert(nb) {
                                return None;
                            }
                            tmap.insert(na, nb);
                            queue.push_back(na);
                        }
                    }
                }
                _ => return None,
            }
        }
    }
    Some(vmap)
}

fn connected_isomorphism(
    a: &SimplicialSurface,
    b: &SimplicialSurface,
) -> Option<SurfaceIsomorphism> {
    if a.num_triangles() != b.num_triangles()
        || a.num_vertices() != b.num_vertices()
        || a.num_edges() != b.num_edges()
    {
        return None;
    }
    let signature =
        |s: &SimplicialSurface, v: Vertex| (s.vertex_degree(v).expect("known"), s.is_interior(v));
    let mut da: Vec<_> = a.vertices().iter().map(|&v| signature(a, v)).collect();
    let mut db: Vec<_> = b.vertices().iter().map(|&v| signature(b, v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let root = Flag {
        triangle: 0,
        vertices: *a.triangle(0),
    };
    let root_sig: Vec<_> = root.vertices.iter().map(|&v| signature(a, v)).collect();
    for cand in b.flags() {
        if cand
            .vertices
            .iter()
            .zip(&root_sig)
            .any(|(&w, s)| signature(b, w) != *s)
        {
            continue;
        }
        if let Some(m) = propagate_flag_map(a, b, root, cand) {
            if m.len() == a.num_vertices() {
                let iso = SurfaceIsomorphism {
                    vertex_map: m.into_iter().collect(),
                };
                debug_assert!(iso.verify(a, b));
                return Some(iso);
            }
        }
    }
    None
}

/// Decides isomorphism exactly, returning a witness. Disconnected surfaces are
/// matched component by component.
pub fn are_isomorphic(a: &SimplicialSurface, b: &SimplicialSurface) -> Option<SurfaceIsomorphism> {
    if a.num_triangles() != b.num_triangles() || a.num_vertices() != b.num_vertices() {
        return None;
    }
    let ca = a.components();
    let cb = b.components();
    if ca.len() != cb.len() {
        return None;
    }
    if ca.len() == 1 {
        return connected_isomorphism(a, b);
    }
    let mut taken = vec![false; cb.len()];
    let mut vertex_map = BTreeMap::new();
    for x in &ca {
        let mut matched = false;
        for (j, y) in cb.iter().enumerate() {
            if taken[j] {
                continue;
            }
            if let Some(iso) = connected_isomorphism(x, y) {
                taken[j] = true;
                vertex_map.extend(iso.vertex_map);
                matched = true;
                break;
            }
        }
        if !matched {
            return None;
        }
    }
    Some(SurfaceIsomorphism { vertex_map })
}
