//! Text formats: covering-array files, plane dumps, tower descriptors and
//! the verdict summary line.

mod ca;
mod plane;
mod report;
mod tower;

pub use ca::{parse_ca, parse_rows_only, read_ca, write_ca, write_ca_file, ROWS_ONLY};
pub use plane::{parse_plane, write_plane};
pub use report::verdict_line;
pub use tower::{describe_tower, parse_tower_descriptor};
