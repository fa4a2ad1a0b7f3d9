//! Coloring and platonic monodromy of triangulated surfaces.
//!
//! Starting from validated [`SimplicialSurface`]s this crate computes the
//! three-color monodromy and its platonic analogues, the branched covers they
//! generate (unfoldings, face-and-vertex colored covers, spaces of germs),
//! spherical cone-metric developments and holonomy, odd subcomplexes of pure
//! complexes in any dimension, and an isomorph-free census of small sphere
//! triangulations on which the nonadjacency statements are checked
//! exhaustively.
//!
//! Everything combinatorial is exact. Only [`geometry`] is numeric; it is
//! generic over the float type, with `f64` aliases re-exported here.

pub mod builtins;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod germs;
pub mod highdim;
pub mod monodromy;
pub mod platonic;
pub mod surface;

pub use cover::{unfolding, BranchedCover, FaceColor, FaceColoring};
pub use error::{Error, Result};
pub use germs::{space_of_germs, GermSpace};
pub use highdim::{odd_subcomplex, PureComplex};
pub use monodromy::{coloring_monodromy, Perm3, Sym3Subgroup, ThreeColoring};
pub use platonic::{platonic_target, Automorphism, GermFlag, PlatonicTarget};
pub use surface::{are_isomorphic, build_surface, Edge, SimplicialSurface, Triangle, Vertex};

pub type Rotation64 = geometry::Rotation<f64>;
pub type Rotation32 = geometry::Rotation<f32>;
pub type Vec3f64 = geometry::Vec3<f64>;
pub type Vec3f32 = geometry::Vec3<f32>;
pub type Placement64 = geometry::SphericalPlacement<f64>;
pub type Placement32 = geometry::SphericalPlacement<f32>;
pub type Shape64 = geometry::TriangleShape<f64>;
pub type SlitReport64 = geometry::SlitReport<f64>;
