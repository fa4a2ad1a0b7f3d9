//! Spherical cone metrics on triangulated surfaces.
//!
//! Every triangle is made an equilateral spherical triangle with angle
//! `2pi/k`. Developing a strip reflects each new triangle across the great
//! circle through the shared edge; comparing the start and end placement of
//! a closed strip gives its holonomy, a rotation of the sphere.
//!
//! For `k = 2` the triangle is a hemisphere whose vertices are equally
//! spaced on a great circle, so vertex positions alone do not tell the two
//! triangles on an edge apart. Each placement therefore also carries the
//! triangle's center (the pole of the hemisphere when `k = 2`).

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::{corner_of, SimplicialSurface, Vertex};

fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("float literal fits")
}

/// Tolerance for single comparisons.
pub const TOLERANCE: f64 = 1e-9;
/// Tolerance for identities after long loops.
pub const LOOP_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Float> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Self {
        self * (T::one() / self.norm())
    }

    /// Central angle between two unit vectors, robust near 0 and pi.
    pub fn angle_to(self, o: Self) -> T {
        self.cross(o).norm().atan2(self.dot(o))
    }

    pub fn distance(self, o: Self) -> T {
        (self - o).norm()
    }

    /// Mirror image in the plane through the origin with unit normal `n`.
    pub fn reflect(self, n: Self) -> Self {
        self - n * (lit::<T>(2.0) * self.dot(n))
    }

    pub fn to_f64(self) -> Vec3<f64> {
        Vec3::new(
            self.x.to_f64().expect("finite"),
            self.y.to_f64().expect("finite"),
            self.z.to_f64().expect("finite"),
        )
    }
}

impl<T: Float> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Float> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Float> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<T: Float> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// A rotation of the sphere, stored as a unit quaternion `w + (x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation<T> {
    w: T,
    v: Vec3<T>,
}

impl<T: Float + FloatConst> Rotation<T> {
    pub fn identity() -> Self {
        Rotation {
            w: T::one(),
            v: Vec3::new(T::zero(), T::zero(), T::zero()),
        }
    }

    /// Counterclockwise rotation by `angle` about the unit vector `axis`.
    pub fn from_axis_angle(axis: Vec3<T>, angle: T) -> Self {
        let half = angle / lit(2.0);
        Rotation {
            w: half.cos(),
            v: axis.normalized() * half.sin(),
        }
        .renormalized()
    }

    /// The rotation taking the orthonormal frame `(a1, a2, a1 x a2)` to `(b1, b2, b1 x b2)`.
    pub fn from_frames(a1: Vec3<T>, a2: Vec3<T>, b1: Vec3<T>, b2: Vec3<T>) -> Self {
        let (a3, b3) = (a1.cross(a2), b1.cross(b2));
        // m = B A^T
        let col = |b: Vec3<T>, a: Vec3<T>| {
            [
                [b.x * a.x, b.x * a.y, b.x * a.z],
                [b.y * a.x, b.y * a.y, b.y * a.z],
                [b.z * a.x, b.z * a.y, b.z * a.z],
            ]
        };
        let (p, q, r) = (col(b1, a1), col(b2, a2), col(b3, a3));
        let mut m = [[T::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = p[i][j] + q[i][j] + r[i][j];
            }
        }
        Self::from_matrix(m)
    }

    fn from_matrix(m: [[T; 3]; 3]) -> Self {
        let one = T::one();
        let quarter = lit::<T>(0.25);
        let trace = m[0][0] + m[1][1] + m[2][2];
        let q = if trace > T::zero() {
            let s = (trace + one).sqrt() * lit(2.0);
            (
                quarter * s,
                Vec3::new(
                    (m[2][1] - m[1][2]) / s,
                    (m[0][2] - m[2][0]) / s,
                    (m[1][0] - m[0][1]) / s,
                ),
            )
        } else if m[0][0] > m[1][1] && m[0][0] > m[2][2] {
            let s = (one + m[0][0] - m[1][1] - m[2][2]).sqrt() * lit(2.0);
            (
                (m[2][1] - m[1][2]) / s,
                Vec3::new(
                    quarter * s,
                    (m[0][1] + m[1][0]) / s,
                    (m[0][2] + m[2][0]) / s,
                ),
            )
        } else if m[1][1] > m[2][2] {
            let s = (one + m[1][1] - m[0][0] - m[2][2]).sqrt() * lit(2.0);
            (
                (m[0][2] - m[2][0]) / s,
                Vec3::new(
                    (m[0][1] + m[1][0]) / s,
                    quarter * s,
                    (m[1][2] + m[2][1]) / s,
                ),
            )
        } else {
            let s = (one + m[2][2] - m[0][0] - m[1][1]).sqrt() * lit(2.0);
            (
                (m[1][0] - m[0][1]) / s,
                Vec3::new(
                    (m[0][2] + m[2][0]) / s,
                    (m[1][2] + m[2][1]) / s,
                    quarter * s,
                ),
            )
        };
        Rotation { w: q.0, v: q.1 }.renormalized()
    }

    fn renormalized(self) -> Self {
        let n = (self.w * self.w + self.v.dot(self.v)).sqrt();
        Rotation {
            w: self.w / n,
            v: self.v * (T::one() / n),
        }
    }

    pub fn apply(&self, p: Vec3<T>) -> Vec3<T> {
        // p + 2w (v x p) + 2 v x (v x p)
        let t = self.v.cross(p) * lit(2.0);
        p + t * self.w + self.v.cross(t)
    }

    /// `self` after `other`, renormalized.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (self, other);
        Rotation {
            w: a.w * b.w - a.v.dot(b.v),
            v: b.v * a.w + a.v * b.w + a.v.cross(b.v),
        }
        .renormalized()
    }

    pub fn inverse(&self) -> Self {
        Rotation {
            w: self.w,
            v: -self.v,
        }
    }

    /// Rotation angle in `[0, pi]`.
    pub fn angle(&self) -> T {
        lit::<T>(2.0) * self.v.norm().atan2(self.w.abs())
    }

    /// Signed angle in `(-pi, pi]` about `axis`, assuming the rotation fixes it.
    pub fn angle_about(&self, axis: Vec3<T>) -> T {
        let s = self.v.dot(axis.normalized());
        let mut a = lit::<T>(2.0) * s.atan2(self.w);
        if a > T::PI() {
            a = a - T::PI() * lit(2.0);
        } else if a <= -T::PI() {
            a = a + T::PI() * lit(2.0);
        }
        a
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.angle() <= tol
    }

    /// Rows of the rotation matrix.
    pub fn matrix(&self) -> [[T; 3]; 3] {
        let e = [
            Vec3::new(T::one(), T::zero(), T::zero()),
            Vec3::new(T::zero(), T::one(), T::zero()),
            Vec3::new(T::zero(), T::zero(), T::one()),
        ];
        let c: Vec<Vec3<T>> = e.iter().map(|&x| self.apply(x)).collect();
        [
            [c[0].x, c[1].x, c[2].x],
            [c[0].y, c[1].y, c[2].y],
            [c[0].z, c[1].z, c[2].z],
        ]
    }

    /// Largest entry of `M M^T - I`.
    pub fn orthonormality_drift(&self) -> T {
        let m = self.matrix();
        let mut worst = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                let dot = m[i][0] * m[j][0] + m[i][1] * m[j][1] + m[i][2] * m[j][2];
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// The equilateral spherical triangle with angle `2pi/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleShape<T> {
    pub k: usize,
    pub angle: T,
    pub side: T,
}

fn check_k(k: usize) -> Result<()> {
    if (2..=5).contains(&k) {
        Ok(())
    } else {
        Err(Error::UnsupportedK(k))
    }
}

/// Side `a_k` of the equilateral triangle with angle `beta = 2pi/k`:
/// `cos a_k = cos beta / (1 - cos beta)`. For `k = 2` this is the exact `2pi/3`.
pub fn equilateral_side<T: Float + FloatConst>(k: usize) -> Result<T> {
    check_k(k)?;
    if k == 2 {
        return Ok(T::PI() * lit(2.0) / lit(3.0));
    }
    let beta = T::PI() * lit(2.0) / lit(k as f64);
    let c = beta.cos();
    Ok((c / (T::one() - c)).acos())
}

impl<T: Float + FloatConst> TriangleShape<T> {
    pub fn new(k: usize) -> Result<Self> {
        Ok(TriangleShape {
            k,
            angle: T::PI() * lit(2.0) / lit(k as f64),
            side: equilateral_side(k)?,
        })
    }

    /// Standard placement: centered at `+z`, counterclockwise seen from above.
    pub fn standard_placement(&self) -> [Vec3<T>; 3] {
        // circumradius rho: cos a = (3 cos^2 rho - 1) / 2
        // k = 2 is a great-circle triangle; the formula would only give ~1e-8
        let cos_rho = if self.k == 2 {
            T::zero()
        } else {
            ((lit::<T>(2.0) * self.side.cos() + T::one()) / lit(3.0))
                .max(T::zero())
                .sqrt()
        };
        let sin_rho = (T::one() - cos_rho * cos_rho).sqrt();
        let third = T::PI() * lit(2.0) / lit(3.0);
        [0.0, 1.0, 2.0].map(|i| {
            let phi = third * lit(i);
            Vec3::new(sin_rho * phi.cos(), sin_rho * phi.sin(), cos_rho)
        })
    }

    /// Whether three unit vectors form a congruent copy of this triangle.
    pub fn is_congruent(&self, p: &[Vec3<T>; 3], tol: T) -> bool {
        p.iter().all(|v| (v.norm() - T::one()).abs() <= tol)
            && [(0, 1), (1, 2), (0, 2)]
                .iter()
                .all(|&(i, j)| (p[i].angle_to(p[j]) - self.side).abs() <= tol)
    }
}

/// Developed positions of one triangle: its sorted vertices and its center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrianglePlacement<T> {
    pub vertices: [Vec3<T>; 3],
    pub center: Vec3<T>,
}

impl<T: Float + FloatConst> TrianglePlacement<T> {
    fn from_vertices(k: usize, vertices: [Vec3<T>; 3]) -> Self {
        let [p1, p2, p3] = vertices;
        let center = if k == 2 {
            (p2 - p1).cross(p3 - p1).normalized()
        } else {
            (p1 + p2 + p3).normalized()
        };
        TrianglePlacement { vertices, center }
    }

    /// Placement of the neighbor across the edge opposite `corner` of `tri`.
    fn reflect_across(&self, tri: &[Vertex; 3], corner: usize, next: &[Vertex; 3]) -> Self {
        let (i, j) = match corner {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let n = self.vertices[i].cross(self.vertices[j]).normalized();
        let mut vertices = [self.vertices[corner].reflect(n); 3];
        for (slot, &v) in next.iter().enumerate() {
            if let Some(c) = corner_of(tri, v) {
                vertices[slot] = self.vertices[c];
            }
        }
        TrianglePlacement {
            vertices,
            center: self.center.reflect(n),
        }
    }

    /// The rotation carrying `self` to `other`, both placements of one triangle.
    fn rotation_to(&self, other: &Self) -> Rotation<T> {
        let frame = |p: &Self| {
            let e1 = p.vertices[0];
            let e2 = (p.center - e1 * p.center.dot(e1)).normalized();
            (e1, e2)
        };
        let (a1, a2) = frame(self);
        let (b1, b2) = frame(other);
        Rotation::from_frames(a1, a2, b1, b2)
    }

    fn distance(&self, other: &Self) -> T {
        let mut d = self.center.distance(other.center);
        for i in 0..3 {
            d = d.max(self.vertices[i].distance(other.vertices[i]));
        }
        d
    }
}

/// Development of a connected surface along the breadth-first spanning tree
/// of its dual graph (neighbors visited in triangle order).
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPlacement<T> {
    pub k: usize,
    pub triangles: Vec<TrianglePlacement<T>>,
    /// Position of each vertex in the first triangle that reached it.
    pub vertices: BTreeMap<Vertex, Vec3<T>>,
}

impl<T: Float + FloatConst> SphericalPlacement<T> {
    /// Whether every triangle puts each vertex where the first one did,
    /// i.e. whether the development closes up.
    pub fn is_consistent(&self, s: &SimplicialSurface, tol: T) -> bool {
        self.triangles.iter().enumerate().all(|(t, p)| {
            s.triangle(t)
                .iter()
                .enumerate()
                .all(|(i, v)| p.vertices[i].distance(self.vertices[v]) <= tol)
        })
    }

    /// Pairwise central angles between vertex positions, in vertex order.
    pub fn angle_matrix(&self) -> Vec<Vec<T>> {
        let ps: Vec<Vec3<T>> = self.vertices.values().copied().collect();
        ps.iter()
            .map(|a| ps.iter().map(|&b| a.angle_to(b)).collect())
            .collect()
    }

    /// Serialized vertex positions rounded to 12 significant digits.
    pub fn to_json_value(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .vertices
            .iter()
            .map(|(v, p)| {
                let p = p.to_f64();
                (
                    v.to_string(),
                    serde_json::json!([round12(p.x), round12(p.y), round12(p.z)]),
                )
            })
            .collect();
        serde_json::json!({ "k": self.k, "vertices": map })
    }
}

/// Rounds to 12 significant digits; tiny values collapse to zero.
pub fn round12(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Develops `s` from `root`, placed at `root_placement` (its sorted vertices).
pub fn develop<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
    root: usize,
    root_placement: [Vec3<T>; 3],
) -> Result<SphericalPlacement<T>> {
    let shape = TriangleShape::<T>::new(k)?;
    s.require_connected()?;
    if root >= s.num_triangles() {
        return Err(Error::UnknownTriangle([0; 3]));
    }
    if !shape.is_congruent(&root_placement, lit(TOLERANCE)) {
        return Err(Error::ShapeMismatch(k));
    }
    let mut placed: Vec<Option<TrianglePlacement<T>>> = vec![None; s.num_triangles()];
    placed[root] = Some(TrianglePlacement::from_vertices(k, root_placement));
    let mut queue = VecDeque::from([root]);
    while let Some(t) = queue.pop_front() {
        let p = placed[t].expect("queued triangles are placed");
        let mut next: Vec<(usize, usize)> = s
            .neighbors(t)
            .iter()
            .enumerate()
            .filter_map(|(c, n)| n.map(|n| (n, c)))
            .collect();
        next.sort_unstable();
        for (n, c) in next {
            if placed[n].is_none() {
                placed[n] = Some(p.reflect_across(s.triangle(t), c, s.triangle(n)));
                queue.push_back(n);
            }
        }
    }
    let triangles: Vec<TrianglePlacement<T>> =
        placed.into_iter().map(|p| p.expect("connected")).collect();
    let mut order: Vec<usize> = (0..s.num_triangles()).collect();
    // vertex positions from the triangle nearest the root in the tree
    order.sort_by_key(|&t| (t != root, t));
    let mut vertices = BTreeMap::new();
    for t in order {
        for (i, &v) in s.triangle(t).iter().enumerate() {
            vertices.entry(v).or_insert(triangles[t].vertices[i]);
        }
    }
    Ok(SphericalPlacement {
        k,
        triangles,
        vertices,
    })
}

/// Develops `s` from its first triangle in the standard placement.
pub fn develop_standard<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
) -> Result<SphericalPlacement<T>> {
    let shape = TriangleShape::<T>::new(k)?;
    develop(s, k, 0, shape.standard_placement())
}

/// Develops along `strip` from the placement `start` of its first triangle.
pub fn develop_strip<T: Float + FloatConst>(
    s: &SimplicialSurface,
    strip: &[usize],
    start: TrianglePlacement<T>,
) -> Result<TrianglePlacement<T>> {
    let mut cur = start;
    for (i, w) in strip.windows(2).enumerate() {
        let c = s
            .neighbors(w[0])
            .iter()
            .position(|&n| n == Some(w[1]))
            .ok_or(Error::NotAStrip(i, i + 1))?;
        cur = cur.reflect_across(s.triangle(w[0]), c, s.triangle(w[1]));
    }
    Ok(cur)
}

/// Holonomy of a closed strip, starting from the standard placement of its first triangle.
pub fn strip_holonomy<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
    strip: &[usize],
) -> Result<Rotation<T>> {
    let shape = TriangleShape::<T>::new(k)?;
    let (Some(&first), Some(&last)) = (strip.first(), strip.last()) else {
        return Ok(Rotation::identity());
    };
    if first != last {
        return Err(Error::NotAStrip(0, strip.len() - 1));
    }
    let start = TrianglePlacement::from_vertices(k, shape.standard_placement());
    let end = develop_strip(s, strip, start)?;
    Ok(start.rotation_to(&end))
}

/// Holonomy around interior vertex `v`, with the position of `v` in the
/// standard placement of its first fan triangle. It is a rotation about that
/// position by `deg(v) * 2pi/k` up to sign.
pub fn holonomy_around_vertex<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
    v: Vertex,
) -> Result<(Rotation<T>, Vec3<T>)> {
    check_k(k)?;
    if !s.is_interior(v) {
        return Err(if s.contains_vertex(v) {
            Error::BoundaryVertex(v)
        } else {
            Error::UnknownVertex(v)
        });
    }
    let (mut fan, _) = s.vertex_fan(v)?;
    fan.push(fan[0]);
    let shape = TriangleShape::<T>::new(k)?;
    let axis = shape.standard_placement()[corner_of(s.triangle(fan[0]), v).expect("fan triangle")];
    Ok((strip_holonomy(s, k, &fan)?, axis))
}

/// Expected holonomy angle in `[0, pi]` around a vertex of degree `deg`.
pub fn expected_vertex_angle<T: Float + FloatConst>(k: usize, deg: usize) -> T {
    let two_pi = T::PI() * lit(2.0);
    let total = (deg % k) as f64 / k as f64;
    let a = two_pi * lit(total);
    a.min(two_pi - a)
}

/// Endpoints of a developed geodesic arc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Arc<T> {
    pub start: Vec3<T>,
    pub end: Vec3<T>,
}

impl<T: Float> Arc<T> {
    pub fn length(&self) -> T {
        self.start.angle_to(self.end)
    }

    fn to_f64(self) -> Arc<f64> {
        Arc {
            start: self.start.to_f64(),
            end: self.end.to_f64(),
        }
    }
}

/// Developed images of the two sides of a slit along the edge `ab`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlitReport<T> {
    pub k: usize,
    pub a: Vertex,
    pub b: Vertex,
    /// The edge in the first triangle on `ab`, in the standard placement.
    pub first_side: Arc<T>,
    /// The edge in the second triangle, developed around `a`.
    pub second_side_via_a: Arc<T>,
    /// The edge in the second triangle, developed around `b`.
    pub second_side_via_b: Arc<T>,
    /// Both developments of the second triangle agree.
    pub consistent: bool,
    /// The two sides are developed onto the same arc.
    pub arcs_coincide: bool,
}

impl<T: Float> SlitReport<T> {
    pub fn to_f64(&self) -> SlitReport<f64> {
        SlitReport {
            k: self.k,
            a: self.a,
            b: self.b,
            first_side: self.first_side.to_f64(),
            second_side_via_a: self.second_side_via_a.to_f64(),
            second_side_via_b: self.second_side_via_b.to_f64(),
            consistent: self.consistent,
            arcs_coincide: self.arcs_coincide,
        }
    }

    pub fn lengths(&self) -> [T; 3] {
        [
            self.first_side.length(),
            self.second_side_via_a.length(),
            self.second_side_via_b.length(),
        ]
    }
}

/// Walks the fan of `v` from `from` to `to` without crossing the edge `v w`
/// they share.
fn fan_path(s: &SimplicialSurface, v: Vertex, from: usize, to: usize) -> Result<Vec<usize>> {
    let (fan, _) = s.vertex_fan(v)?;
    let d = fan.len();
    let i = fan.iter().position(|&t| t == from).expect("fan triangle");
    let j = fan.iter().position(|&t| t == to).expect("fan triangle");
    // from and to are neighbors in the cyclic fan; go the long way round
    let step = if (i + 1) % d == j { d - 1 } else { 1 };
    let mut path = vec![fan[i]];
    let mut p = i;
    while p != j {
        p = (p + step) % d;
        path.push(fan[p]);
    }
    Ok(path)
}

/// Develops both sides of a slit along the interior edge `ab`, around `a`
/// and around `b`. Inconsistent developments come back as
/// `NontrivialHolonomy` carrying the partial report.
pub fn develop_slit<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
    a: Vertex,
    b: Vertex,
) -> Result<SlitReport<T>> {
    let shape = TriangleShape::<T>::new(k)?;
    let ts = s.edge_triangles(a, b).ok_or(Error::NotAdjacent(a, b))?;
    let &[t1, t2] = ts else {
        return Err(Error::BoundaryEdge(crate::surface::sorted_edge(a, b)));
    };
    for v in [a, b] {
        if !s.is_interior(v) {
            return Err(Error::BoundaryVertex(v));
        }
    }
    let start = TrianglePlacement::from_vertices(k, shape.standard_placement());
    let arc = |p: &TrianglePlacement<T>, t: usize| {
        let tri = s.triangle(t);
        Arc {
            start: p.vertices[corner_of(tri, a).expect("a")],
            end: p.vertices[corner_of(tri, b).expect("b")],
        }
    };
    let via_a = develop_strip(s, &fan_path(s, a, t1, t2)?, start)?;
    let via_b = develop_strip(s, &fan_path(s, b, t1, t2)?, start)?;
    let tol = lit::<T>(LOOP_TOLERANCE);
    let first_side = arc(&start, t1);
    let (second_side_via_a, second_side_via_b) = (arc(&via_a, t2), arc(&via_b, t2));
    let consistent = via_a.distance(&via_b) <= tol;
    let arcs_coincide = consistent
        && first_side.start.distance(second_side_via_a.start) <= tol
        && first_side.end.distance(second_side_via_a.end) <= tol;
    let report = SlitReport {
        k,
        a,
        b,
        first_side,
        second_side_via_a,
        second_side_via_b,
        consistent,
        arcs_coincide,
    };
    debug_assert!(report
        .lengths()
        .iter()
        .all(|&l| (l - shape.side).abs() <= lit(TOLERANCE)));
    if !consistent {
        return Err(Error::NontrivialHolonomy(Box::new(report.to_f64())));
    }
    Ok(report)
}

/// The slit construction for two adjacent exceptional vertices (degrees not
/// divisible by `k`); no sphere has such a pair, so inputs are other surfaces.
pub fn slit_geodesic_images<T: Float + FloatConst>(
    s: &SimplicialSurface,
    k: usize,
    a: Vertex,
    b: Vertex,
) -> Result<SlitReport<T>> {
    check_k(k)?;
    let exceptional = crate::platonic::exceptional_vertices(s, k);
    if exceptional.len() != 2 {
        return Err(Error::NotExactlyTwoExceptional(exceptional.len()));
    }
    let (a, b) = if exceptional == [a.min(b), a.max(b)] {
        (a, b)
    } else {
        return Err(Error::NotExactlyTwoExceptional(exceptional.len()));
    };
    if !s.has_edge(a, b) {
        return Err(Error::NotAdjacent(a, b));
    }
    develop_slit(s, k, a, b)
}

/// Counts of spheres with exactly one vertex of degree not divisible by `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PentaReport {
    pub spheres: usize,
    /// For each k: (instances found, whether the degree sum `6n - 12` alone excludes them for every n).
    pub single_exceptional: BTreeMap<usize, (usize, bool)>,
}

/// No sphere has all degrees but one divisible by 5 (nor by 2, 3, 4).
/// Instances are reported as `AssertionFailure`.
pub fn check_penta_absence(corpus: &[SimplicialSurface]) -> Result<PentaReport> {
    let mut single_exceptional = BTreeMap::new();
    for k in 2..=5usize {
        // the sum 6n - 12 is 0 mod k for all n exactly when k divides 6 and 12
        let arithmetic = 6 % k == 0 && 12 % k == 0;
        let count = corpus
            .iter()
            .filter(|s| crate::platonic::exceptional_vertices(s, k).len() == 1)
            .count();
        single_exceptional.insert(k, (count, arithmetic));
    }
    let report = PentaReport {
        spheres: corpus.len(),
        single_exceptional,
    };
    if let Some((k, (n, _))) = report.single_exceptional.iter().find(|(_, (n, _))| *n > 0) {
        return Err(Error::AssertionFailure(format!(
            "{n} spheres with one vertex of degree not divisible by {k}"
        )));
    }
    Ok(report)
}
