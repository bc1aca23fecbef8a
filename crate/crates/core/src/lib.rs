//! Edge boundaries of finite sets in the king graph on `Z^n`, where two
//! lattice points are adjacent when their Chebyshev distance is 1.
//!
//! - [`lattice`]: points, directions, neighbourhoods and line sections.
//! - [`boundary`]: edge boundary by direct enumeration and by the
//!   projection-plus-gap formula, vertex boundaries, partial boundaries.
//! - [`compression`]: central compression along coordinate axes.
//! - [`search`]: exhaustive and heuristic search for minimal edge boundary.
//! - [`cli`]: set-file parsing, report serialization and rendering.

pub mod boundary;
pub mod cli;
pub mod compression;
pub mod error;
pub mod lattice;
pub mod search;

pub use boundary::{
    closed_vertex_boundary, edge_boundary_direct, edge_boundary_formula, exterior_vertex_boundary,
    gap_set, partial_edge_boundary, projection_count, BoundaryBreakdown, EdgeRecord,
};
pub use compression::{
    canonical_segment, central_compress, compress_to_fixed_point, potential, CompressionTrace,
};
pub use error::{LatticeError, Result};
pub use lattice::{
    chebyshev_distance, directions, insert_coordinate, line_sections, neighbors, Direction,
    LatticePoint, LineSection, PointSet,
};
pub use search::{
    enumerate_compressed_sets, fully_gap_free, min_edge_boundary, random_point_set,
    survey_gap_free_optima, SearchMode, SearchReport,
};
