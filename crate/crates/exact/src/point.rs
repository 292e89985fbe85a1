use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ExactError;
use crate::qsqrt3::QSqrt3;
use crate::rat::{ratio, Rat};

/// A plane point with both coordinates in Q(sqrt 3), read as the complex
/// number `x + i y`.
///
/// The set of such points is closed under addition, complex multiplication,
/// conjugation, and in particular under multiplication by the sixth root of
/// unity `zeta6 = 1/2 + (sqrt3/2) i` and by `omega = zeta6^2`.
///
/// `Ord` is the lexicographic order of the paper: real parts first, imaginary
/// parts breaking ties.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    x: QSqrt3,
    y: QSqrt3,
}

impl Point2 {
    pub fn new(x: QSqrt3, y: QSqrt3) -> Self {
        Point2 { x, y }
    }

    pub fn zero() -> Self {
        Point2::new(QSqrt3::zero(), QSqrt3::zero())
    }

    pub fn one() -> Self {
        Point2::new(QSqrt3::one(), QSqrt3::zero())
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Point2::new(QSqrt3::zero(), QSqrt3::one())
    }

    /// `zeta6 = e^{i pi/3} = 1/2 + (sqrt3/2) i`.
    pub fn zeta6() -> Self {
        Point2::new(
            QSqrt3::from_ratio(1, 2),
            QSqrt3::new(ratio(0, 1), ratio(1, 2)),
        )
    }

    /// `omega = e^{2 pi i/3} = zeta6 - 1`.
    pub fn omega() -> Self {
        Point2::new(
            QSqrt3::from_ratio(-1, 2),
            QSqrt3::new(ratio(0, 1), ratio(1, 2)),
        )
    }

    /// Lattice point `a + b * zeta6` of the unit triangular lattice.
    pub fn lattice(a: i64, b: i64) -> Self {
        Point2::new(
            QSqrt3::new(ratio(2 * a + b, 2), ratio(0, 1)),
            QSqrt3::new(ratio(0, 1), ratio(b, 2)),
        )
    }

    pub fn x(&self) -> &QSqrt3 {
        &self.x
    }

    pub fn y(&self) -> &QSqrt3 {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Point2::new(self.x.clone(), -&self.y)
    }

    /// Squared modulus `x^2 + y^2`, exact in the field.
    pub fn norm_sqr(&self) -> QSqrt3 {
        &self.x * &self.x + &self.y * &self.y
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Point2::new(self.x.scale(s), self.y.scale(s))
    }

    pub fn half(&self) -> Self {
        Point2::new(self.x.half(), self.y.half())
    }

    /// Multiply by `zeta6`: rotation by +60 degrees.
    ///
    /// `zeta6 (x + iy) = (x - sqrt3 y)/2 + i (sqrt3 x + y)/2`. Multiplication
    /// by sqrt3 inside the field is just a coefficient swap, so this is much
    /// cheaper than a generic complex product.
    pub fn mul_zeta6(&self) -> Self {
        let sx = self.x.mul_sqrt3();
        let sy = self.y.mul_sqrt3();
        Point2::new((&self.x - &sy).half(), (&sx + &self.y).half())
    }

    /// Multiply by `conj(zeta6)`: rotation by -60 degrees.
    pub fn mul_conj_zeta6(&self) -> Self {
        let sx = self.x.mul_sqrt3();
        let sy = self.y.mul_sqrt3();
        Point2::new((&self.x + &sy).half(), (&self.y - &sx).half())
    }

    /// Multiply by `omega = e^{2 pi i / 3}`: rotation by +120 degrees.
    pub fn mul_omega(&self) -> Self {
        let sx = self.x.mul_sqrt3();
        let sy = self.y.mul_sqrt3();
        Point2::new((-&self.x - &sy).half(), (&sx - &self.y).half())
    }

    /// Multiply by `i`.
    pub fn mul_i(&self) -> Self {
        Point2::new(-&self.y, self.x.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Add<&Point2> for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Point2) -> Point2 {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point2> for &Point2 {
    type Output = Point2;
    fn sub(self, rhs: &Point2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul<&Point2> for &Point2 {
    type Output = Point2;
    fn mul(self, rhs: &Point2) -> Point2 {
        // (x1 + i y1)(x2 + i y2) = (x1 x2 - y1 y2) + i (x1 y2 + y1 x2)
        Point2::new(
            &self.x * &rhs.x - &self.y * &rhs.y,
            &self.x * &rhs.y + &self.y * &rhs.x,
        )
    }
}

impl Neg for &Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }
}

macro_rules! forward_point_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Point2 {
            type Output = Point2;
            fn $method(self, rhs: Point2) -> Point2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Point2> for Point2 {
            type Output = Point2;
            fn $method(self, rhs: &Point2) -> Point2 {
                (&self).$method(rhs)
            }
        }
        impl $trait<Point2> for &Point2 {
            type Output = Point2;
            fn $method(self, rhs: Point2) -> Point2 {
                self.$method(&rhs)
            }
        }
    };
}
forward_point_binop!(Add, add);
forward_point_binop!(Sub, sub);
forward_point_binop!(Mul, mul);

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        -&self
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The lexicographic order on plane points: real parts first, exact
/// tie-break on imaginary parts.
pub fn lex_cmp(y: &Point2, z: &Point2) -> Ordering {
    y.cmp(z)
}

/// Whether a nonzero vector is lexicographically greater than the origin:
/// `Re > 0`, or `Re = 0` and `Im > 0`.
pub fn lex_positive(p: &Point2) -> bool {
    match p.x.sign() {
        1 => true,
        -1 => false,
        _ => p.y.sign() > 0,
    }
}

/// Both third vertices completing `{u, v}` to an equilateral triangle,
/// returned as `(w, w')` with `w = zeta6 u + conj(zeta6) v` and
/// `w' = conj(zeta6) u + zeta6 v`.
///
/// The four points form a parallelogram: `(u+v)/2 = (w+w')/2`.
pub fn third_vertices(u: &Point2, v: &Point2) -> Result<(Point2, Point2), ExactError> {
    if u == v {
        return Err(ExactError::DegeneratePair);
    }
    // zeta6 u + conj(zeta6) v = u + conj(zeta6)(v - u), since zeta6 + conj(zeta6) = 1
    let d = v - u;
    let w = u + d.mul_conj_zeta6();
    let w_prime = u + d.mul_zeta6();
    Ok((w, w_prime))
}
