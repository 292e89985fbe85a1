//! Pattern counting on the line: arithmetic progressions, similar copies of
//! finite rational patterns, the exact maximum formulas, optimality criteria,
//! classification of optimal sets, and the extremal constructions.

mod classify;
mod count;
mod decomp;
mod error;
mod exec;
mod gen;
mod pattern;
mod set;

pub use classify::{classify_optimal, Classification, Concentricity};
pub use count::{
    count_instances, count_kap, count_kap_seq, general_upper_bound, jacob_bounds, sap_max,
    JacobBounds,
};
pub use decomp::{echelons, francis_check, orderly_decomposition, FrancisReport, FrancisViolation, OrderlyDecomposition, ViolationKind};
pub use error::LineError;
pub use gen::{construction_mary, gen_ap, gen_eo, gen_oliver, residue_table, OliverVariant, ResidueTable, RESIDUE_TRIPLES};
pub use pattern::{normalize_pattern, LinePattern, NormalizedPattern, Similarity};
pub use set::LinePointSet;
