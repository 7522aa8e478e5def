//! Canonical polygons, filtrations and semistability.

mod codes;
pub mod lattice;
mod polygon;

pub use codes::{
    canonical_filtration, code_polygon, gap_condition_check, graded_pieces, is_semistable, is_stable,
    subset_polygon, verify_galois, CodeHn, Filtration,
};
pub use lattice::{HnLattice, SubsetLattice, SubspaceLattice};
pub use polygon::{CanonicalPolygon, RankDegreeProfile};
