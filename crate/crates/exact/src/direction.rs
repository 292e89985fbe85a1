use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::ExactError;
use crate::point::{lex_positive, Point2};

/// Relative tolerance for approximate direction comparisons. Comparisons
/// whose margin falls below it return [`ExactError::AmbiguousComparison`]
/// instead of silently tie-breaking.
pub const DEFAULT_DIR_TOLERANCE: f64 = 1e-9;

/// A direction `zeta` on the complex unit circle.
///
/// The exact form carries a unit vector with Q(sqrt 3) components and makes
/// every order comparison exact, ties included. The ray form carries an
/// exact nonzero vector that is not unit: the order under a direction only
/// depends on its ray (positive rescaling of `zeta` rescales both sides of
/// the defining comparison), so such directions still compare exactly even
/// though the unit vector itself lives outside the field. The approximate
/// form is an angle in radians; comparisons under it are tolerance-checked
/// and fail loudly when the margin is too small to trust.
#[derive(Clone, Debug)]
pub enum Direction {
    Exact { unit: Point2, theta: f64 },
    Ray { vector: Point2, theta: f64 },
    Approx { theta: f64 },
}

impl Direction {
    /// Exact direction from a unit vector; rejects vectors with `|p|^2 != 1`.
    pub fn from_unit(unit: Point2) -> Result<Self, ExactError> {
        if unit.norm_sqr() != crate::qsqrt3::QSqrt3::one() {
            return Err(ExactError::NotUnit);
        }
        let (x, y) = unit.to_f64();
        let theta = y.atan2(x);
        Ok(Direction::Exact { unit, theta })
    }

    /// Exact direction along an arbitrary nonzero vector, normalized to the
    /// unit form whenever `|v|` lies in the field.
    pub fn from_vector(v: Point2) -> Result<Self, ExactError> {
        if v.is_zero() {
            return Err(ExactError::ZeroVector);
        }
        let (x, y) = v.to_f64();
        let theta = y.atan2(x);
        if let Some(len) = v.norm_sqr().sqrt() {
            let unit = Point2::new(v.x() / &len, v.y() / &len);
            debug_assert_eq!(unit.norm_sqr(), crate::qsqrt3::QSqrt3::one());
            return Ok(Direction::Exact { unit, theta });
        }
        Ok(Direction::Ray { vector: v, theta })
    }

    pub fn from_angle(theta: f64) -> Self {
        Direction::Approx { theta: wrap_angle(theta) }
    }

    /// The direction `i` (positively directed y-axis); order under it is the
    /// plain lexicographic order.
    pub fn i() -> Self {
        Direction::Exact { unit: Point2::i(), theta: FRAC_PI_2 }
    }

    pub fn one() -> Self {
        Direction::Exact { unit: Point2::one(), theta: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        match self {
            Direction::Exact { theta, .. }
            | Direction::Ray { theta, .. }
            | Direction::Approx { theta } => *theta,
        }
    }

    pub fn exact_unit(&self) -> Option<&Point2> {
        match self {
            Direction::Exact { unit, .. } => Some(unit),
            _ => None,
        }
    }

    /// The exact vector spanning this direction's ray, unit or not.
    pub fn exact_vector(&self) -> Option<&Point2> {
        match self {
            Direction::Exact { unit, .. } => Some(unit),
            Direction::Ray { vector, .. } => Some(vector),
            Direction::Approx { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Direction::Approx { .. })
    }

    /// Rotate by `omega = e^{2 pi i/3}`; exactness is preserved.
    pub fn rotate_omega(&self) -> Self {
        match self {
            Direction::Exact { unit, theta } => Direction::Exact {
                unit: unit.mul_omega(),
                theta: wrap_angle(theta + TAU / 3.0),
            },
            Direction::Ray { vector, theta } => Direction::Ray {
                vector: vector.mul_omega(),
                theta: wrap_angle(theta + TAU / 3.0),
            },
            Direction::Approx { theta } => Direction::Approx { theta: wrap_angle(theta + TAU / 3.0) },
        }
    }

    /// The opposite direction `-zeta`.
    pub fn negate(&self) -> Self {
        match self {
            Direction::Exact { unit, theta } => Direction::Exact {
                unit: -unit,
                theta: wrap_angle(theta + PI),
            },
            Direction::Ray { vector, theta } => Direction::Ray {
                vector: -vector,
                theta: wrap_angle(theta + PI),
            },
            Direction::Approx { theta } => Direction::Approx { theta: wrap_angle(theta + PI) },
        }
    }

    /// Compare `y` and `z` under the rotated order of this direction with
    /// the default tolerance.
    pub fn compare(&self, y: &Point2, z: &Point2) -> Result<Ordering, ExactError> {
        self.compare_tol(y, z, DEFAULT_DIR_TOLERANCE)
    }

    /// `y <=_zeta z` iff `i conj(zeta) y <= i conj(zeta) z` lexicographically.
    ///
    /// Exact directions decide every case, ties included. Approximate
    /// directions compare rotated double-precision coordinates and return
    /// `AmbiguousComparison` when the margin is below `tol` relative to the
    /// coordinate scale.
    pub fn compare_tol(&self, y: &Point2, z: &Point2, tol: f64) -> Result<Ordering, ExactError> {
        if y == z {
            return Ok(Ordering::Equal);
        }
        match self {
            Direction::Exact { unit: v, .. } | Direction::Ray { vector: v, .. } => {
                let rotated = (&(y - z) * &v.conj()).mul_i();
                Ok(if lex_positive(&rotated) { Ordering::Greater } else { Ordering::Less })
            }
            Direction::Approx { theta } => {
                let (sin_t, cos_t) = theta.sin_cos();
                let (ya, yb) = y.to_f64();
                let (za, zb) = z.to_f64();
                // Re(i conj(zeta) p) = a sin(theta) - b cos(theta)
                let ry = ya * sin_t - yb * cos_t;
                let rz = za * sin_t - zb * cos_t;
                let scale = 1.0f64.max(ry.abs()).max(rz.abs());
                let margin = (ry - rz).abs();
                if margin > tol * scale {
                    Ok(if ry > rz { Ordering::Greater } else { Ordering::Less })
                } else {
                    Err(ExactError::AmbiguousComparison { margin, tolerance: tol * scale })
                }
            }
        }
    }
}

/// Order comparison under direction `zeta` with the default tolerance.
pub fn dir_cmp(zeta: &Direction, y: &Point2, z: &Point2) -> Result<Ordering, ExactError> {
    zeta.compare(y, z)
}

fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % TAU;
    if t > PI {
        t -= TAU;
    } else if t <= -PI {
        t += TAU;
    }
    t
}
