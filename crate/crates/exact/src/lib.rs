//! Exact arithmetic foundation for pattern counting on the line and in the plane.
//!
//! Everything downstream counts with values from `Q(sqrt 3)`: the smallest
//! field containing the rationals that is closed under rotation by sixth
//! roots of unity. All predicates here (signs, order comparisons, equilateral
//! checks) are decided by integer arithmetic, never by floating point.

mod direction;
mod error;
mod point;
mod qsqrt3;
mod rat;

pub use direction::{dir_cmp, Direction, DEFAULT_DIR_TOLERANCE};
pub use error::ExactError;
pub use point::{lex_cmp, lex_positive, third_vertices, Point2};
pub use qsqrt3::{qs3_sign, QSqrt3};
pub use rat::{rat, ratio, Rat};
