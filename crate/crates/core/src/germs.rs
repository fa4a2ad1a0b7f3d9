//! The space of germs between two closed surfaces.
//!
//! Its triangles are the germ flags `(sigma, sigma', phi)`; two of them are
//! glued when `sigma`s and `sigma'`s are adjacent across matched edges and
//! the bijections agree there. Both projections are branched covers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cover::{glue_sheets, BranchedCover, CoverJson};
use crate::error::{Error, Result};
use crate::platonic::{roll_across, GermFlag};
use crate::surface::{corner_of, sorted_triangle, SimplicialSurface, Vertex, ORDERINGS};

#[derive(Debug, Clone)]
pub struct GermSpace {
    pub total: SimplicialSurface,
    /// Germ flag of each total triangle.
    pub flags: Vec<GermFlag>,
    pub left: BranchedCover,
    pub right: BranchedCover,
    /// Total vertices at the corners of each germ flag, indexed like the flags
    /// themselves (corners follow the sorted vertices of `sigma`).
    flag_corners: Vec<[Vertex; 3]>,
}

/// A connected component with its two projections.
#[derive(Debug, Clone)]
pub struct GermComponent {
    pub surface: SimplicialSurface,
    pub left: BranchedCover,
    pub right: BranchedCover,
}

fn all_germ_flags(a: &SimplicialSurface, b: &SimplicialSurface) -> Vec<GermFlag> {
    let mut flags = Vec::with_capacity(6 * a.num_triangles() * b.num_triangles());
    for sigma in 0..a.num_triangles() {
        for sigma_prime in 0..b.num_triangles() {
            let tp = b.triangle(sigma_prime);
            for o in ORDERINGS {
                flags.push(GermFlag {
                    sigma,
                    sigma_prime,
                    phi: [tp[o[0]], tp[o[1]], tp[o[2]]],
                });
            }
        }
    }
    debug_assert!(flags.iter().enumerate().all(|(i, f)| f.index(b) == i));
    flags
}

/// Builds `G(a, b)`. Both surfaces must be closed.
pub fn space_of_germs(a: &SimplicialSurface, b: &SimplicialSurface) -> Result<GermSpace> {
    if !a.is_closed() || !b.is_closed() {
        return Err(Error::BoundaryNotSupported);
    }
    let all = all_germ_flags(a, b);
    let base_triangles: Vec<usize> = all.iter().map(|f| f.sigma).collect();
    let partner =
        |sheet: usize, corner: usize| roll_across(a, b, all[sheet], corner).map(|f| f.index(b));
    let g = glue_sheets(a, &base_triangles, partner)?;
    let flags: Vec<GermFlag> = g.sheet_of.iter().map(|&s| all[s]).collect();
    let mut left_vertices = BTreeMap::new();
    let mut right_vertices = BTreeMap::new();
    for (sheet, cs) in g.corners.iter().enumerate() {
        let f = all[sheet];
        let tri = a.triangle(f.sigma);
        for i in 0..3 {
            left_vertices.insert(cs[i], tri[i]);
            right_vertices.insert(cs[i], f.phi[i]);
        }
    }
    let left = BranchedCover::new(
        g.total.clone(),
        a.clone(),
        flags.iter().map(|f| f.sigma).collect(),
        left_vertices,
    )?;
    let right = BranchedCover::new(
        g.total.clone(),
        b.clone(),
        flags.iter().map(|f| f.sigma_prime).collect(),
        right_vertices,
    )?;
    Ok(GermSpace {
        total: g.total,
        flags,
        left,
        right,
        flag_corners: g.corners,
    })
}

impl GermSpace {
    /// Total triangle carrying a given germ flag.
    pub fn triangle_of(&self, flag: &GermFlag) -> usize {
        let corners = self.flag_corners[flag.index(&self.right.base)];
        self.total
            .triangle_index(&sorted_triangle(corners))
            .expect("every germ flag is a total triangle")
    }

    /// Total vertex at the corner of `flag` lying over left vertex `v`.
    pub fn vertex_of(&self, flag: &GermFlag, v: Vertex) -> Option<Vertex> {
        let i = corner_of(self.left.base.triangle(flag.sigma), v)?;
        Some(self.flag_corners[flag.index(&self.right.base)][i])
    }

    pub fn to_json_value(&self) -> GermJson {
        GermJson {
            component_count: self.left.component_count(),
            left: self.left.to_json_value(),
            right: self.right.to_json_value(),
        }
    }
}

/// Serialized germ space: the same total seen as a cover of either factor.
#[derive(Debug, Clone, Serialize)]
pub struct GermJson {
    pub component_count: usize,
    pub left: CoverJson,
    pub right: CoverJson,
}

/// Components of the germ space with both restricted projections.
pub fn germ_components(g: &GermSpace) -> Vec<GermComponent> {
    g.left
        .components()
        .into_iter()
        .zip(g.right.components())
        .map(|(left, right)| {
            debug_assert_eq!(left.total, right.total);
            GermComponent {
                surface: left.total.clone(),
                left,
                right,
            }
        })
        .collect()
}

/// The simplicial map `Z -> G(base, base')` induced by two covers of `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermFactorization {
    pub space: GermSpace,
    /// Germ-space triangle of each triangle of `Z`.
    pub triangle_map: Vec<usize>,
    pub vertex_map: BTreeMap<Vertex, Vertex>,
}

impl PartialEq for GermSpace {
    fn eq(&self, other: &Self) -> bool {
        self.total == other.total && self.flags == other.flags
    }
}

impl Eq for GermSpace {}

/// Sends each triangle `z` of the common total to `(f(z), f'(z), f' o f^-1)`.
pub fn factor_cover_through_germs(
    f: &BranchedCover,
    f2: &BranchedCover,
) -> Result<GermFactorization> {
    if f.total != f2.total {
        return Err(Error::MismatchedTotals);
    }
    let space = space_of_germs(&f.base, &f2.base)?;
    let z = &f.total;
    let mut triangle_map = Vec::with_capacity(z.num_triangles());
    let mut vertex_map: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for t in 0..z.num_triangles() {
        let sigma = f.triangle_projection[t];
        let sigma_prime = f2.triangle_projection[t];
        let zt = z.triangle(t);
        let mut phi = [0; 3];
        for (i, &x) in f.base.triangle(sigma).iter().enumerate() {
            let zv = *zt
                .iter()
                .find(|v| f.vertex_projection[*v] == x)
                .expect("f is simplicial");
            phi[i] = f2.vertex_projection[&zv];
        }
        let flag = GermFlag {
            sigma,
            sigma_prime,
            phi,
        };
        triangle_map.push(space.triangle_of(&flag));
        for &zv in zt {
            let gv = space
                .vertex_of(&flag, f.vertex_projection[&zv])
                .expect("vertex of sigma");
            if *vertex_map.entry(zv).or_insert(gv) != gv {
                return Err(Error::NotSimplicial(format!("vertex {zv} has two images")));
            }
        }
    }
    Ok(GermFactorization {
        space,
        triangle_map,
        vertex_map,
    })
}

impl GermFactorization {
    /// Composing with either projection recovers the original covers.
    pub fn recovers(&self, f: &BranchedCover, f2: &BranchedCover) -> bool {
        (0..f.total.num_triangles()).all(|t| {
            let g = self.triangle_map[t];
            self.space.left.triangle_projection[g] == f.triangle_projection[t]
                && self.space.right.triangle_projection[g] == f2.triangle_projection[t]
        }) && self.vertex_map.iter().all(|(z, g)| {
            self.space.left.vertex_projection[g] == f.vertex_projection[z]
                && self.space.right.vertex_projection[g] == f2.vertex_projection[z]
        })
    }
}
