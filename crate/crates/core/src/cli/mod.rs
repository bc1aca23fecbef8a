//! File formats, report serialization and rendering used by the
//! `lattice-boundary` binary.

pub mod render;
pub mod report;
pub mod setfile;

pub use render::{render_grid, RenderError, RenderMode, RenderOptions};
pub use report::{
    parse_report, serialize_report, BoundaryReport, CompressionReport, OutputFormat, Report,
    ReportError, SurveyRow, SurveyTable,
};
pub use setfile::{format_point_set, parse_point_set, parse_point_set_bytes, ParseError};
