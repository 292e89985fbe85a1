use patterncount_exact::{lex_positive, Point2};

use crate::error::PlaneError;

/// Which part of the admissible argument set
/// `A = (-5pi/6, -pi/6] ∪ (pi/6, 5pi/6]` the difference `v - u` falls in,
/// decided purely by exact sign conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairClass {
    /// `Arg(v-u) ∈ (pi/6, 5pi/6]`: the first reconstruction is
    /// `w = zeta6 u + conj(zeta6) v`, the last is `w' = conj(zeta6) u + zeta6 v`.
    UpperA,
    /// `Arg(v-u) ∈ (-5pi/6, -pi/6]`: the roles of `w` and `w'` swap.
    LowerA,
    /// Outside A: the pair is neither the first two nor the last two
    /// vertices of any equilateral triangle.
    Outside,
}

/// Exact classification of a nonzero difference vector.
///
/// `u, v ≺ w` amounts to `conj(zeta6) d ≻ 0` and `-zeta6 d ≻ 0` in the
/// lexicographic sense (with the strict imaginary tie-break built into
/// `lex_positive`), and similarly for `w'`; the half-open interval endpoints
/// come out of those sign conditions with no floating point involved.
pub(crate) fn classify_pair(d: &Point2) -> PairClass {
    debug_assert!(!d.is_zero());
    let conj_rot = d.mul_conj_zeta6();
    let rot = d.mul_zeta6();
    if lex_positive(&conj_rot) && lex_positive(&-&rot) {
        PairClass::UpperA
    } else if lex_positive(&rot) && lex_positive(&-&conj_rot) {
        PairClass::LowerA
    } else {
        PairClass::Outside
    }
}

/// Whether `Arg(v - u) ∈ A`, i.e. the ordered pair admits a reconstruction
/// as first two (equivalently last two) vertices of an equilateral triangle.
pub fn admits_reconstruction(u: &Point2, v: &Point2) -> Result<bool, PlaneError> {
    if u >= v {
        return Err(patterncount_exact::ExactError::NotOrdered.into());
    }
    Ok(classify_pair(&(v - u)) != PairClass::Outside)
}

/// The unique `w` with `u ≺ v ≺ w` making `{u, v, w}` equilateral, if the
/// pair admits one.
pub fn reconstruct_first(u: &Point2, v: &Point2) -> Result<Option<Point2>, PlaneError> {
    if u >= v {
        return Err(patterncount_exact::ExactError::NotOrdered.into());
    }
    let d = v - u;
    Ok(match classify_pair(&d) {
        PairClass::UpperA => Some(u + d.mul_conj_zeta6()),
        PairClass::LowerA => Some(u + d.mul_zeta6()),
        PairClass::Outside => None,
    })
}

/// The unique `w` with `w ≺ u ≺ v` making `{w, u, v}` equilateral, if the
/// pair admits one.
pub fn reconstruct_last(u: &Point2, v: &Point2) -> Result<Option<Point2>, PlaneError> {
    if u >= v {
        return Err(patterncount_exact::ExactError::NotOrdered.into());
    }
    let d = v - u;
    Ok(match classify_pair(&d) {
        PairClass::UpperA => Some(u + d.mul_zeta6()),
        PairClass::LowerA => Some(u + d.mul_conj_zeta6()),
        PairClass::Outside => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterncount_exact::{ratio, QSqrt3};

    fn qr(n: i64, d: i64) -> QSqrt3 {
        QSqrt3::from_ratio(n, d)
    }

    fn qs(n: i64, d: i64) -> QSqrt3 {
        QSqrt3::new(ratio(0, 1), ratio(n, d))
    }

    fn pt(x: QSqrt3, y: QSqrt3) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn vertical_pair_reconstructs_both_ways() {
        let u = Point2::zero();
        let v = Point2::i();
        let w = reconstruct_first(&u, &v).unwrap().unwrap();
        assert_eq!(w, pt(qs(1, 2), qr(1, 2))); // sqrt3/2 + i/2
        let wl = reconstruct_last(&u, &v).unwrap().unwrap();
        assert_eq!(wl, pt(qs(-1, 2), qr(1, 2))); // -sqrt3/2 + i/2
        assert!(w > v && wl < u);
    }

    #[test]
    fn horizontal_pair_admits_nothing() {
        let u = Point2::zero();
        let v = Point2::one();
        assert_eq!(reconstruct_first(&u, &v).unwrap(), None);
        assert_eq!(reconstruct_last(&u, &v).unwrap(), None);
        assert!(!admits_reconstruction(&u, &v).unwrap());
    }

    #[test]
    fn near_horizontal_pair_like_figure_example() {
        // a shallow negative slope, argument in (-pi/6, 0): outside A
        let u = pt(qr(-49, 50), qr(17, 100));
        let v = pt(qr(49, 50), qr(-17, 100));
        assert_eq!(reconstruct_last(&u, &v).unwrap(), None);
        assert_eq!(reconstruct_first(&u, &v).unwrap(), None);
    }

    #[test]
    fn boundary_arguments_follow_half_open_intervals() {
        // For an ordered pair u ≺ v the difference is lexicographically
        // positive, so Arg(v-u) lies in (-pi/2, pi/2]; the boundaries at
        // ±5pi/6 are the same pairs traversed the other way.
        let u = Point2::zero();
        // Arg = pi/6 (excluded); equivalently Arg(u-v) = -5pi/6 excluded
        let v = pt(QSqrt3::sqrt3(), QSqrt3::one());
        assert!(!admits_reconstruction(&u, &v).unwrap());
        // Arg = -pi/6 (included); equivalently Arg(u-v) = 5pi/6 included
        let v = pt(QSqrt3::sqrt3(), -&QSqrt3::one());
        assert!(admits_reconstruction(&u, &v).unwrap());
        // Arg = pi/2 (inside): ordinary vertical
        assert!(admits_reconstruction(&u, &Point2::i()).unwrap());
        // order precondition
        assert!(reconstruct_first(&Point2::one(), &Point2::zero()).is_err());
        assert!(reconstruct_first(&u, &Point2::zero()).is_err());
    }

    #[test]
    fn exactly_one_case_fires_inside_a() {
        // inside A: first and last both exist, are distinct, and bracket the pair
        let u = pt(qr(1, 3), qs(1, 7));
        let v = pt(qr(2, 3), qr(5, 2));
        let first = reconstruct_first(&u, &v).unwrap();
        let last = reconstruct_last(&u, &v).unwrap();
        match (first, last) {
            (Some(w), Some(wl)) => {
                assert!(wl < u && v < w);
                assert_ne!(w, wl);
                // parallelogram identity
                assert_eq!((&u + &v).half(), (&w + &wl).half());
            }
            other => panic!("expected both reconstructions, got {other:?}"),
        }
    }
}
