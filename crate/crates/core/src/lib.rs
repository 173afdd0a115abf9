//! Rainbow edge colorings built from a graph's radius and bridges.
//!
//! Starting from a center `u`, the core `{u}` is grown one distance layer at
//! a time. Each step attaches the pendant bridges leaving the core and then
//! covers the remaining neighbors with shortest ears, colored from a fresh
//! block of `max(2k+1, b_k)` colors. The finished coloring uses at most
//! `sum over k of max(2k+1, b_k)` colors.
//!
//! [`verify`] certifies any coloring by exhaustive state search and
//! [`oracle`] computes exact rainbow connection numbers for tiny graphs.

pub mod builder;
pub mod coloring;
pub mod ear;
pub mod generators;
pub mod graph;
pub mod layers;
pub mod oracle;
pub mod par;
pub mod toolkit;
pub mod verify;

pub use builder::{build, corollary1_check, theorem2_bound, Bound, BuildError, RcResult};
pub use coloring::{Color, Coloring, PaletteBlock};
pub use ear::{expand_step, EarError, EarPath, Orientation, StageReport};
pub use generators::{generate, FamilySpec};
pub use graph::{find_bridges, parse_edge_list, radius_center, Edge, Graph, GraphError, Metrics};
pub use oracle::{exact_rc, rc_lower_bound, OracleLimits};
pub use par::Exec;
pub use verify::{is_rainbow_connected, rainbow_path_exists, VerificationReport};
