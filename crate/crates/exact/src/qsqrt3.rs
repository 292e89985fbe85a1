use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ExactError;
use crate::rat::{rat, ratio, Rat};

/// An element `a + b*sqrt(3)` of the real quadratic field Q(sqrt 3).
///
/// Since sqrt(3) is irrational, the pair `(a, b)` determines the value
/// uniquely, so derived equality and hashing are sound. The sign of any
/// element is computable exactly from integer arithmetic alone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    a: Rat,
    b: Rat,
}

impl QSqrt3 {
    pub fn new(a: Rat, b: Rat) -> Self {
        QSqrt3 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt3::new(rat(0), rat(0))
    }

    pub fn one() -> Self {
        QSqrt3::new(rat(1), rat(0))
    }

    /// The value sqrt(3) itself.
    pub fn sqrt3() -> Self {
        QSqrt3::new(rat(0), rat(1))
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt3::new(rat(n), rat(0))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QSqrt3::new(ratio(num, den), rat(0))
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    /// Coefficient `b` of sqrt(3).
    pub fn sqrt3_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of `a + b*sqrt(3)`: -1, 0, or +1.
    ///
    /// Decided by the signs of `a` and `b`, falling back to comparing
    /// `a^2` against `3 b^2` when they disagree. Never touches floating
    /// point. In the mixed-sign case the value cannot be zero (that would
    /// make sqrt(3) rational).
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (0, s) | (s, 0) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // a and b have strictly opposite signs; compare |a| with |b|*sqrt(3)
                // via squares. Equality is impossible for nonzero rationals.
                let a2 = &self.a * &self.a;
                let b2_3 = &self.b * &self.b * rat(3);
                match a2.cmp(&b2_3) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("sqrt(3) is irrational"),
                }
            }
        }
    }

    /// Multiply by sqrt(3): `(a + b sqrt3) * sqrt3 = 3b + a sqrt3`.
    pub fn mul_sqrt3(&self) -> Self {
        QSqrt3::new(&self.b * rat(3), self.a.clone())
    }

    /// Halve the value exactly.
    pub fn half(&self) -> Self {
        let two = rat(2);
        QSqrt3::new(&self.a / &two, &self.b / &two)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QSqrt3::new(&self.a * s, &self.b * s)
    }

    /// Exact nonnegative square root within the field, when one exists.
    ///
    /// Writing the root as `c + d sqrt3`, the components satisfy
    /// `c^2 + 3 d^2 = a` and `2 c d = b`, so `c^2` and `3 d^2` are the roots
    /// of `t^2 - a t + 3 b^2 / 4`; everything reduces to rational square
    /// tests.
    pub fn sqrt(&self) -> Option<QSqrt3> {
        match self.sign() {
            -1 => None,
            0 => Some(QSqrt3::zero()),
            _ => {
                if self.b.is_zero() {
                    if let Some(r) = rat_sqrt(&self.a) {
                        return Some(QSqrt3::new(r, rat(0)));
                    }
                    if let Some(r) = rat_sqrt(&(&self.a / rat(3))) {
                        return Some(QSqrt3::new(rat(0), r));
                    }
                    return None;
                }
                let disc = &self.a * &self.a - &self.b * &self.b * rat(3);
                if disc.is_negative() {
                    return None;
                }
                let s = rat_sqrt(&disc)?;
                for root in [(&self.a + &s) / rat(2), (&self.a - &s) / rat(2)] {
                    if let Some(c) = rat_sqrt(&root) {
                        if c.is_zero() {
                            continue;
                        }
                        let d = &self.b / (&c * rat(2));
                        let cand = QSqrt3::new(c, d);
                        if &(&cand * &cand) == self {
                            return Some(if cand.sign() >= 0 { cand } else { -cand });
                        }
                    }
                }
                None
            }
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(a + b sqrt3) = (a - b sqrt3) / (a^2 - 3 b^2)
        let norm = &self.a * &self.a - &self.b * &self.b * rat(3);
        debug_assert!(!norm.is_zero());
        Ok(QSqrt3::new(&self.a / &norm, -&self.b / &norm))
    }

    /// Double-precision approximation (used only for reporting and for
    /// tolerance-based direction work, never for exact predicates).
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * F64_SQRT3
    }
}

const F64_SQRT3: f64 = 1.732_050_807_568_877_2;

fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    (&(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom()).then(|| Rat::new(sn, sd))
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√3", self.b)
        } else {
            write!(f, "{}{}{}√3", self.a, if self.b.is_negative() { "" } else { "+" }, self.b)
        }
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: QSqrt3) -> QSqrt3 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: &QSqrt3) -> QSqrt3 {
                (&self).$method(rhs)
            }
        }
        impl $trait<QSqrt3> for &QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: QSqrt3) -> QSqrt3 {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}
forward_binop!(Add, add);

impl Sub<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}
forward_binop!(Sub, sub);

impl Mul<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 3 b1 b2 + (a1 b2 + a2 b1) s
        QSqrt3::new(
            &self.a * &rhs.a + &self.b * &rhs.b * rat(3),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn div(self, rhs: &QSqrt3) -> QSqrt3 {
        self * rhs.inverse().expect("division by zero in Q(sqrt 3)")
    }
}
forward_binop!(Div, div);

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-&self.a, -&self.b)
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        -&self
    }
}

/// Exact sign of a field element; free-function spelling of [`QSqrt3::sign`].
pub fn qs3_sign(v: &QSqrt3) -> i8 {
    v.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QSqrt3 {
        QSqrt3::new(ratio(a.0, a.1), ratio(b.0, b.1))
    }

    #[test]
    fn sign_basics() {
        assert_eq!(QSqrt3::zero().sign(), 0);
        // -2 + sqrt3 < 0 because 4 > 3
        assert_eq!(q((-2, 1), (1, 1)).sign(), -1);
        // -1 + sqrt3 > 0 because 1 < 3
        assert_eq!(q((-1, 1), (1, 1)).sign(), 1);
        assert_eq!(q((2, 1), (-1, 1)).sign(), 1);
        assert_eq!(q((1, 1), (-1, 1)).sign(), -1);
        assert_eq!(q((0, 1), (-5, 7)).sign(), -1);
    }

    #[test]
    fn field_ops() {
        let x = q((1, 2), (3, 5));
        let y = q((-7, 3), (1, 4));
        assert_eq!(&(&x + &y) - &y, x);
        assert_eq!(&(&x * &y) / &y, x);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QSqrt3::one());
        assert_eq!(x.mul_sqrt3(), &x * QSqrt3::sqrt3());
        assert!(QSqrt3::zero().inverse().is_err());
    }

    #[test]
    fn exact_square_roots() {
        // rational squares, 3-times-squares, and mixed-component squares
        assert_eq!(q((4, 1), (0, 1)).sqrt(), Some(q((2, 1), (0, 1))));
        assert_eq!(q((9, 4), (0, 1)).sqrt(), Some(q((3, 2), (0, 1))));
        assert_eq!(q((3, 1), (0, 1)).sqrt(), Some(QSqrt3::sqrt3()));
        assert_eq!(q((12, 1), (0, 1)).sqrt(), Some(q((0, 1), (2, 1))));
        // (1 + sqrt3)^2 = 4 + 2 sqrt3
        assert_eq!(q((4, 1), (2, 1)).sqrt(), Some(q((1, 1), (1, 1))));
        // (2 - sqrt3)^2 = 7 - 4 sqrt3
        assert_eq!(q((7, 1), (-4, 1)).sqrt(), Some(q((2, 1), (-1, 1))));
        // non-squares
        assert_eq!(q((7, 1), (0, 1)).sqrt(), None);
        assert_eq!(q((1, 1), (1, 1)).sqrt(), None);
        assert_eq!(q((-4, 1), (0, 1)).sqrt(), None);
        assert_eq!(QSqrt3::zero().sqrt(), Some(QSqrt3::zero()));
    }

    #[test]
    fn order_is_exact() {
        // 71/41 < sqrt3 < 97/56 (consecutive continued-fraction convergents)
        assert!(q((71, 41), (0, 1)) < QSqrt3::sqrt3());
        assert!(QSqrt3::sqrt3() < q((97, 56), (0, 1)));
        assert!(q((97, 56), (0, 1)) > q((71, 41), (0, 1)));
    }
}
