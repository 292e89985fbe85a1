use patterncount_exact::{third_vertices, Point2};

use crate::error::PlaneError;
use crate::exec;
use crate::reconstruct::{classify_pair, PairClass};
use crate::set::PlanePointSet;

fn third_vertex_row(pts: &[Point2], i: usize) -> u64 {
    let mut hits = 0u64;
    for j in i + 1..pts.len() {
        let (w, wp) = third_vertices(&pts[i], &pts[j]).expect("points are distinct");
        if pts.binary_search(&w).is_ok() {
            hits += 1;
        }
        if pts.binary_search(&wp).is_ok() {
            hits += 1;
        }
    }
    hits
}

fn reconstruction_row(pts: &[Point2], i: usize) -> u64 {
    let mut hits = 0u64;
    let u = &pts[i];
    for v in &pts[i + 1..] {
        let d = v - u;
        let w = match classify_pair(&d) {
            PairClass::UpperA => u + d.mul_conj_zeta6(),
            PairClass::LowerA => u + d.mul_zeta6(),
            PairClass::Outside => continue,
        };
        if pts.binary_search(&w).is_ok() {
            hits += 1;
        }
    }
    hits
}

/// Triangle count via both third vertices of every pair; each triangle is
/// seen once per edge, so the incidence total is exactly three per triangle.
pub fn count_by_third_vertices(v: &PlanePointSet) -> u64 {
    let pts = v.points();
    let raw = exec::sum_indexed(pts.len(), |i| third_vertex_row(pts, i));
    debug_assert_eq!(raw % 3, 0);
    raw / 3
}

/// Triangle count via the unique first-reconstruction of each ordered pair;
/// each triangle is counted exactly once, at its two least vertices.
pub fn count_by_reconstruction(v: &PlanePointSet) -> u64 {
    let pts = v.points();
    exec::sum_indexed(pts.len(), |i| reconstruction_row(pts, i))
}

/// Number of equilateral triangles with all vertices in `v`, computed by the
/// two independent routes and cross-checked.
pub fn count_equilateral(v: &PlanePointSet) -> Result<u64, PlaneError> {
    let pts = v.points();
    let raw = exec::sum_indexed(pts.len(), |i| third_vertex_row(pts, i));
    let by_reconstruction = exec::sum_indexed(pts.len(), |i| reconstruction_row(pts, i));
    check_methods(raw, by_reconstruction)
}

/// Sequential fallback of [`count_equilateral`], compiled unconditionally;
/// the benchmarks compare it against the data-parallel path.
pub fn count_equilateral_seq(v: &PlanePointSet) -> Result<u64, PlaneError> {
    let pts = v.points();
    let raw = exec::sum_indexed_seq(pts.len(), |i| third_vertex_row(pts, i));
    let by_reconstruction = exec::sum_indexed_seq(pts.len(), |i| reconstruction_row(pts, i));
    check_methods(raw, by_reconstruction)
}

fn check_methods(raw: u64, by_reconstruction: u64) -> Result<u64, PlaneError> {
    if raw % 3 != 0 || raw / 3 != by_reconstruction {
        return Err(PlaneError::MethodMismatch {
            pairs: raw / 3,
            reconstruction: by_reconstruction,
        });
    }
    Ok(by_reconstruction)
}

/// `floor((4n - 1)(n - 1) / 18)`, the sharpest known upper bound for the
/// number of equilateral triangles in an n-point set.
pub fn katherine_bound(n: u64) -> u64 {
    let n = n as i128;
    let v = (4 * n - 1) * (n - 1) / 18;
    v.max(0) as u64
}

/// `floor((n - 1)^2 / 4)`, the previously best reconstruction-only bound.
pub fn abrego_bound(n: u64) -> u64 {
    let n = n as i128;
    let v = (n - 1) * (n - 1) / 4;
    v as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterncount_exact::QSqrt3;

    fn lattice_set(coords: &[(i64, i64)]) -> PlanePointSet {
        PlanePointSet::new(coords.iter().map(|&(a, b)| Point2::lattice(a, b)).collect()).unwrap()
    }

    #[test]
    fn unit_triangle_counts_once() {
        let v = lattice_set(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(count_equilateral(&v).unwrap(), 1);
        assert_eq!(count_by_third_vertices(&v), 1);
        assert_eq!(count_by_reconstruction(&v), 1);
    }

    #[test]
    fn hexagon_plus_center_has_eight() {
        let v = lattice_set(&[(0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]);
        assert_eq!(count_equilateral(&v).unwrap(), 8);
    }

    #[test]
    fn rhombus_has_two() {
        let v = lattice_set(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(count_equilateral(&v).unwrap(), 2);
        assert_eq!(count_equilateral_seq(&v).unwrap(), 2);
    }

    #[test]
    fn triangles_at_mixed_scales() {
        // unit triangle plus a doubled triangle sharing a vertex
        let v = lattice_set(&[(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)]);
        assert_eq!(count_equilateral(&v).unwrap(), 2);
        // empty and degenerate sets
        assert_eq!(count_equilateral(&PlanePointSet::empty()).unwrap(), 0);
        let two = lattice_set(&[(0, 0), (3, 1)]);
        assert_eq!(count_equilateral(&two).unwrap(), 0);
    }

    #[test]
    fn counting_is_exact_for_non_lattice_points() {
        // a triangle with an irrational vertex: {0, i, sqrt3/2 + i/2}
        let w = Point2::new(
            QSqrt3::new(patterncount_exact::ratio(0, 1), patterncount_exact::ratio(1, 2)),
            QSqrt3::from_ratio(1, 2),
        );
        let v = PlanePointSet::new(vec![Point2::zero(), Point2::i(), w]).unwrap();
        assert_eq!(count_equilateral(&v).unwrap(), 1);
    }

    #[test]
    fn bound_values() {
        assert_eq!(katherine_bound(7), 9);
        assert_eq!(katherine_bound(2), 0);
        assert_eq!(katherine_bound(1000), 221_944);
        assert_eq!(katherine_bound(0), 0);
        assert_eq!(abrego_bound(7), 9);
        assert_eq!(abrego_bound(2), 0);
        assert_eq!(abrego_bound(4), 2);
        for n in 2..=2000 {
            assert!(katherine_bound(n) <= abrego_bound(n), "n={n}");
        }
    }
}
