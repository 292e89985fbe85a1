//! Independent brute-force counters and extremal searches: exhaustive
//! maximization over small integer line configurations (up to similarity),
//! enumeration of optimal sets, and lattice-restricted plane searches.

mod brute;
mod error;
mod line_search;
mod plane_search;
mod spec;

pub use brute::{brute_count, brute_count_equilateral};
pub use error::SearchError;
pub use line_search::{canonical_line_class, enumerate_optimal, line_max_search};
pub use plane_search::plane_lattice_max;
pub use spec::{SearchMode, SearchResult, SearchSpec, Witness};
