//! Equilateral-triangle counting in finite plane sets with exact
//! Q(sqrt 3) arithmetic: reconstruction predicates, two cross-checked
//! counting routes, halving-line machinery, compartment decompositions,
//! and the quadratic upper bounds.

mod compartments;
mod count;
mod error;
mod exec;
mod halving;
mod lattice;
mod reconstruct;
mod set;

pub use compartments::{
    choose_rotation, compartments, terence_bound, terence_bound_from_sizes, CompartmentProfile,
    Compartments, Rotation, TerenceReport,
};
pub use count::{
    abrego_bound, count_by_reconstruction, count_by_third_vertices, count_equilateral,
    count_equilateral_seq, katherine_bound,
};
pub use error::PlaneError;
pub use halving::{
    find_concurrent_direction, halving_line, zeta_median, ConcurrencyCertificate,
    HalvingCertificate,
};
pub use lattice::gen_triangular_disk;
pub use reconstruct::{admits_reconstruction, reconstruct_first, reconstruct_last};
pub use set::PlanePointSet;
