//! Pure d-dimensional complexes and the odd subcomplex.
//!
//! The odd subcomplex consists of the codimension-2 faces lying in an odd
//! number of facets; a complex is even when it is empty. On a closed
//! manifold it is the mod-2 boundary of the sum of all codimension-1 faces,
//! its size has the parity of `d(d+1)/2` times the facet count, and where a
//! codimension-3 face meets exactly two odd faces, the two are never in a
//! common codimension-1 face.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use serde::Serialize;

use crate::cover::glue_sheets_d;
use crate::error::{Error, Result};
use crate::monodromy::check_odd_pair;
use crate::surface::{ComplexJson, SimplicialSurface, Vertex};

/// A face, as a sorted vertex list.
pub type Face = Vec<Vertex>;

/// A pure complex of dimension `d`, facets stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureComplex {
    d: usize,
    facets: Vec<Face>,
}

impl PureComplex {
    /// Validates facet sizes and distinctness, and that no codimension-1
    /// face lies in more than two facets.
    pub fn new<I, F>(d: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<Vertex>>,
    {
        let mut out: Vec<Face> = Vec::new();
        for f in facets {
            let mut f: Vec<Vertex> = f.into();
            if f.len() != d + 1 {
                return Err(Error::WrongDimension {
                    expected: d,
                    found: f.len().saturating_sub(1),
                });
            }
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DegenerateTriangle(f));
            }
            out.push(f);
        }
        if out.is_empty() {
            return Err(Error::Empty);
        }
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateTriangle(w[0].clone()));
        }
        let c = PureComplex { d, facets: out };
        if d >= 1 {
            if let Some((_, n)) = c.face_counts(d - 1).into_iter().find(|(_, n)| *n > 2) {
                return Err(Error::NotPseudomanifold(n));
            }
        }
        Ok(c)
    }

    pub fn from_surface(s: &SimplicialSurface) -> Self {
        PureComplex {
            d: 2,
            facets: s.triangles().iter().map(|t| t.to_vec()).collect(),
        }
    }

    pub fn from_json(c: &ComplexJson) -> Result<Self> {
        PureComplex::new(c.dim, c.facets.clone())
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            dim: self.d,
            facets: self.facets.clone(),
        }
    }

    /// The surface with these facets, for `d = 2`.
    pub fn to_surface(&self) -> Result<SimplicialSurface> {
        if self.d != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: self.d,
            });
        }
        SimplicialSurface::new(self.facets.iter().map(|f| [f[0], f[1], f[2]]))
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets.iter().flatten().copied().collect()
    }

    /// Every `j`-face with the number of facets containing it.
    pub fn face_counts(&self, j: usize) -> BTreeMap<Face, usize> {
        let mut counts = BTreeMap::new();
        for f in &self.facets {
            for sub in f.iter().copied().combinations(j + 1) {
                *counts.entry(sub).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Number of faces of each dimension `0..=d`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.d).map(|j| self.face_counts(j).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(j, &n)| if j % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Link of `face`: the facets containing it with `face` removed.
    pub fn link(&self, face: &[Vertex]) -> Result<PureComplex> {
        if self.d < face.len() {
            return Err(Error::WrongDimension {
                expected: self.d,
                found: face.len() - 1,
            });
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
            .collect();
        PureComplex::new(self.d - face.len(), facets)
    }

    /// Whether every codimension-1 face lies in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.d >= 1 && self.face_counts(self.d - 1).values().all(|&n| n == 2)
    }

    /// For `d = 3`: whether every vertex link is a 2-sphere.
    pub fn vertex_links_are_spheres(&self) -> bool {
        self.d == 3
            && self.vertices().iter().all(|&v| {
                self.link(&[v]).and_then(|l| l.to_surface()).is_ok_and(|s| {
                    s.is_closed() && s.is_connected() && s.euler_characteristic() == 2
                })
            })
    }
}

/// Codimension-2 faces in an odd number of facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddSubcomplex {
    pub faces: Vec<Face>,
    pub incidence_counts: BTreeMap<String, usize>,
}

impl OddSubcomplex {
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }
}

fn face_key(f: &[Vertex]) -> String {
    f.iter().map(|v| v.to_string()).join(",")
}

pub fn odd_subcomplex(c: &PureComplex) -> OddSubcomplex {
    if c.d < 2 {
        return OddSubcomplex {
            faces: Vec::new(),
            incidence_counts: BTreeMap::new(),
        };
    }
    let odd: Vec<(Face, usize)> = c
        .face_counts(c.d - 2)
        .into_iter()
        .filter(|(_, n)| n % 2 == 1)
        .collect();
    OddSubcomplex {
        incidence_counts: odd.iter().map(|(f, n)| (face_key(f), *n)).collect(),
        faces: odd.into_iter().map(|(f, _)| f).collect(),
    }
}

/// The codimension-2 faces lying in an odd number of codimension-1 faces:
/// the mod-2 boundary of the sum of all codimension-1 faces.
pub fn ridge_sum_boundary(c: &PureComplex) -> Vec<Face> {
    if c.d < 2 {
        return Vec::new();
    }
    let mut counts: BTreeMap<Face, usize> = BTreeMap::new();
    for ridge in c.face_counts(c.d - 1).keys() {
        for sub in ridge.iter().copied().combinations(c.d - 1) {
            *counts.entry(sub).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .filter(|(_, n)| n % 2 == 1)
        .map(|(f, _)| f)
        .collect()
}

/// Whether the odd subcomplex equals the mod-2 boundary of the sum of all
/// codimension-1 faces; meaningful on closed manifolds.
pub fn z2_nullhomologous_check(c: &PureComplex) -> bool {
    odd_subcomplex(c).faces == ridge_sum_boundary(c)
}

/// `#odd = d(d+1)/2 * #facets (mod 2)`.
pub fn parity_check(c: &PureComplex) -> bool {
    let lhs = odd_subcomplex(c).len() % 2;
    let rhs = (c.d * (c.d + 1) / 2 % 2) * (c.num_facets() % 2);
    lhs == rhs
}

/// Results of the two-odd-faces check over all codimension-3 faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkPairReport {
    /// Faces with exactly two odd cofaces whose link is a 2-sphere, with the
    /// two odd link vertices.
    pub checked: Vec<(Face, [Vertex; 2])>,
    /// Faces with exactly two odd cofaces whose link is not a 2-sphere.
    pub not_sphere: Vec<Face>,
}

/// For every codimension-3 face with exactly two odd codimension-2 cofaces,
/// checks on its link (a 2-sphere) that the two odd vertices are not
/// adjacent. Adjacent pairs are reported as `AssertionFailure`.
pub fn link_pair_check(c: &PureComplex) -> Result<LinkPairReport> {
    if c.d < 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: c.d,
        });
    }
    let odd = odd_subcomplex(c).faces;
    let mut cofaces: BTreeMap<Face, Vec<&Face>> = BTreeMap::new();
    for f in &odd {
        for sub in f.iter().copied().combinations(c.d - 2) {
            cofaces.entry(sub).or_default().push(f);
        }
    }
    let mut report = LinkPairReport {
        checked: Vec::new(),
        not_sphere: Vec::new(),
    };
    for (tau, odd_cofaces) in cofaces {
        if odd_cofaces.len() != 2 {
            continue;
        }
        let link = c.link(&tau)?.to_surface();
        let sphere = link
            .ok()
            .filter(|s| s.is_closed() && s.is_connected() && s.euler_characteristic() == 2);
        let Some(link) = sphere else {
            report.not_sphere.push(tau);
            continue;
        };
        let apex = |f: &Face| {
            *f.iter()
                .find(|v| !tau.contains(v))
                .expect("coface has one more vertex")
        };
        let (p, q) = (apex(odd_cofaces[0]), apex(odd_cofaces[1]));
        let r = check_odd_pair(&link).map_err(|e| match e {
            Error::AssertionFailure(m) => Error::AssertionFailure(format!("link of {tau:?}: {m}")),
            e => e,
        })?;
        if r.odd_vertices != [p.min(q), p.max(q)] {
            return Err(Error::AssertionFailure(format!(
                "link of {tau:?} has odd vertices {:?}",
                r.odd_vertices
            )));
        }
        report.checked.push((tau, [p.min(q), p.max(q)]));
    }
    Ok(report)
}

/// The unfolding of a pure complex with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexUnfolding {
    pub total: PureComplex,
    /// Base facet index of each total facet.
    pub facet_projection: Vec<usize>,
    pub vertex_projection: BTreeMap<Vertex, Vertex>,
    /// The color in `1..=d+1` carried by each total vertex.
    pub colors: BTreeMap<Vertex, u8>,
}

impl ComplexUnfolding {
    /// Total vertices whose link has Euler characteristic other than that of
    /// a `(d-1)`-sphere; for `d = 3` these are the non-manifold points.
    pub fn singular_vertices(&self) -> Vec<(Vertex, i64)> {
        let sphere_chi = if (self.total.d - 1).is_multiple_of(2) {
            2
        } else {
            0
        };
        self.total
            .vertices()
            .into_iter()
            .filter_map(|v| {
                let chi = self
                    .total
                    .link(&[v])
                    .expect("vertex of the complex")
                    .euler_characteristic();
                (chi != sphere_chi).then_some((v, chi))
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in self.total.facets.iter().enumerate() {
            for r in f.iter().copied().combinations(self.total.d) {
                by_ridge.entry(r).or_default().push(i);
            }
        }
        let n = self.total.num_facets();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for r in self.total.facets[i]
                    .iter()
                    .copied()
                    .combinations(self.total.d)
                {
                    for &j in &by_ridge[&r] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        count
    }
}

/// Sheets (facet, bijection onto `1..=d+1`), glued across shared
/// codimension-1 faces on which the colorings agree.
pub fn unfolding_d(c: &PureComplex) -> Result<ComplexUnfolding> {
    let d = c.d;
    let colorings: Vec<Vec<u8>> = (1..=(d + 1) as u8).permutations(d + 1).collect();
    let slot: HashMap<&[u8], usize> = colorings
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let per = colorings.len();
    let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in c.facets.iter().enumerate() {
        for r in f.iter().copied().combinations(d) {
            by_ridge.entry(r).or_default().push(i);
        }
    }
    let base_facets: Vec<usize> = (0..per * c.num_facets()).map(|s| s / per).collect();
    let partner = |sheet: usize, corner: usize| -> Option<usize> {
        let (fi, col) = (sheet / per, &colorings[sheet % per]);
        let f = &c.facets[fi];
        let ridge: Face = f
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != corner)
            .map(|(_, &v)| v)
            .collect();
        let &gi = by_ridge[&ridge].iter().find(|&&g| g != fi)?;
        let g = &c.facets[gi];
        let gcol: Vec<u8> = g
            .iter()
            .map(|v| match f.iter().position(|w| w == v) {
                Some(i) => col[i],
                None => col[corner],
            })
            .collect();
        Some(gi * per + slot[gcol.as_slice()])
    };
    let corners = glue_sheets_d(d, &c.facets, &base_facets, partner)?;
    let total = PureComplex::new(d, corners.iter().cloned())
        .map_err(|e| Error::NotSimplicial(e.to_string()))?;
    let mut facet_projection = vec![0; total.num_facets()];
    let mut vertex_projection = BTreeMap::new();
    let mut colors = BTreeMap::new();
    for (sheet, cs) in corners.iter().enumerate() {
        let fi = sheet / per;
        let mut sorted = cs.clone();
        sorted.sort_unstable();
        let t = total
            .facets
            .binary_search(&sorted)
            .expect("sheet is a total facet");
        facet_projection[t] = fi;
        for (i, &v) in cs.iter().enumerate() {
            vertex_projection.insert(v, c.facets[fi][i]);
            colors.insert(v, colorings[sheet % per][i]);
        }
    }
    Ok(ComplexUnfolding {
        total,
        facet_projection,
        vertex_projection,
        colors,
    })
}

/// Stellar subdivision of `face` with the new vertex `apex`: each facet
/// `face * L` becomes the facets `(face - x) * L * apex` for `x` in `face`.
pub fn stellar_subdivision(c: &PureComplex, face: &[Vertex], apex: Vertex) -> Result<PureComplex> {
    if c.vertices().contains(&apex) {
        return Err(Error::DegenerateTriangle(vec![apex]));
    }
    let mut facets = Vec::new();
    let mut hit = false;
    for f in &c.facets {
        if face.iter().all(|v| f.contains(v)) {
            hit = true;
            for x in face {
                let mut g: Face = f.iter().copied().filter(|v| v != x).collect();
                g.push(apex);
                facets.push(g);
            }
        } else {
            facets.push(f.clone());
        }
    }
    if !hit {
        return Err(Error::UnknownTriangle([0; 3]));
    }
    PureComplex::new(c.d, facets)
}
