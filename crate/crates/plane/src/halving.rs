use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use patterncount_exact::{Direction, Point2, DEFAULT_DIR_TOLERANCE};

use crate::error::PlaneError;
use crate::set::PlanePointSet;

/// A halving line in a given direction, with the exact formal-side counts.
#[derive(Debug, Clone)]
pub struct HalvingCertificate {
    pub direction: Direction,
    /// The zeta-median: the middle point for odd n, the midpoint of the two
    /// middle points for even n.
    pub median: Point2,
    /// Number of points formally left (`z ⪯_ζ median`); always `ceil(n/2)`.
    pub left_count: usize,
    /// Number of points formally right; always `floor(n/2)`.
    pub right_count: usize,
}

/// A direction whose three halving lines (at mutual angles of 120 degrees)
/// pass through a common point up to `residual`.
#[derive(Debug, Clone)]
pub struct ConcurrencyCertificate {
    pub direction: Direction,
    /// Approximate intersection of the halving lines for `omega zeta` and
    /// `omega^2 zeta`.
    pub intersection: (f64, f64),
    /// Distance from that intersection to the halving line for `zeta`.
    pub residual: f64,
    /// The three zeta-medians, exact.
    pub medians: [Point2; 3],
}

/// Count of points `z ⪯_ζ c`, decided pairwise; errors if any comparison is
/// ambiguous under an approximate direction.
fn formal_rank(pts: &[Point2], dir: &Direction, c: &Point2, tol: f64) -> Result<usize, PlaneError> {
    let mut rank = 0;
    for z in pts {
        match dir.compare_tol(z, c, tol)? {
            Ordering::Less | Ordering::Equal => rank += 1,
            Ordering::Greater => {}
        }
    }
    Ok(rank)
}

fn median_exact(pts: &[Point2], dir: &Direction) -> Point2 {
    let n = pts.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| dir.compare(&pts[a], &pts[b]).expect("exact directions always compare"));
    if n % 2 == 1 {
        pts[idx[n / 2]].clone()
    } else {
        (&pts[idx[n / 2 - 1]] + &pts[idx[n / 2]]).half()
    }
}

fn median_approx(pts: &[Point2], dir: &Direction, tol: f64) -> Result<Point2, PlaneError> {
    let n = pts.len();
    let theta = dir.theta();
    let (s, c) = theta.sin_cos();
    let key = |p: &Point2| {
        let (x, y) = p.to_f64();
        (x * s - y * c, x * c + y * s)
    };
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| key(&pts[a]).partial_cmp(&key(&pts[b])).expect("finite keys"));

    // The double-precision sort proposes candidates near the middle; each is
    // certified by its decisive formal rank.
    let offsets = [0i64, -1, 1, -2, 2];
    if n % 2 == 1 {
        let want = n / 2 + 1;
        for off in offsets {
            let pos = n as i64 / 2 + off;
            if pos < 0 || pos >= n as i64 {
                continue;
            }
            let cand = &pts[idx[pos as usize]];
            if let Ok(rank) = formal_rank(pts, dir, cand, tol) {
                if rank == want {
                    return Ok(cand.clone());
                }
            }
        }
        Err(PlaneError::MedianVerification)
    } else {
        let mut lower = None; // rank n/2
        let mut upper = None; // rank n/2 + 1
        for off in [-3i64, -2, -1, 0, 1, 2] {
            let pos = n as i64 / 2 + off;
            if pos < 0 || pos >= n as i64 {
                continue;
            }
            let cand = &pts[idx[pos as usize]];
            if let Ok(rank) = formal_rank(pts, dir, cand, tol) {
                if rank == n / 2 {
                    lower = Some(cand.clone());
                } else if rank == n / 2 + 1 {
                    upper = Some(cand.clone());
                }
            }
        }
        match (lower, upper) {
            (Some(a), Some(b)) => Ok((&a + &b).half()),
            _ => Err(PlaneError::MedianVerification),
        }
    }
}

/// The zeta-median of a nonempty set: the middle point under the rotated
/// order for odd n, the midpoint of the two middle points for even n.
pub fn zeta_median(v: &PlanePointSet, zeta: &Direction, tol: f64) -> Result<Point2, PlaneError> {
    if v.is_empty() {
        return Err(PlaneError::EmptySet);
    }
    let pts = v.points();
    if zeta.is_exact() {
        Ok(median_exact(pts, zeta))
    } else {
        median_approx(pts, zeta, tol)
    }
}

/// The halving line of `v` in direction `zeta`, certified by explicit formal
/// side counts: `ceil(n/2)` points satisfy `z ⪯_ζ median`.
pub fn halving_line(v: &PlanePointSet, zeta: &Direction, tol: f64) -> Result<HalvingCertificate, PlaneError> {
    let median = zeta_median(v, zeta, tol)?;
    let pts = v.points();
    let n = pts.len();
    let left = formal_rank(pts, zeta, &median, tol)?;
    if left != n.div_ceil(2) {
        return Err(PlaneError::ToleranceViolation(format!(
            "halving line claims {left} formal-left points, expected {}",
            n.div_ceil(2)
        )));
    }
    Ok(HalvingCertificate {
        direction: zeta.clone(),
        median,
        left_count: left,
        right_count: n - left,
    })
}

/// State for scanning the concurrency defect as the direction rotates.
struct Scan {
    xy: Vec<(f64, f64)>,
}

impl Scan {
    fn new(pts: &[Point2]) -> Self {
        Scan { xy: pts.iter().map(|p| p.to_f64()).collect() }
    }

    /// Median coordinates under the rotated order at angle `theta`, purely
    /// in doubles (used only to steer the scan; the final certificate is
    /// re-verified with decisive comparisons).
    fn median_xy(&self, theta: f64) -> (f64, f64) {
        let (s, c) = theta.sin_cos();
        let n = self.xy.len();
        let mut keys: Vec<(f64, f64, usize)> = self
            .xy
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| (x * s - y * c, x * c + y * s, i))
            .collect();
        keys.sort_by(|a, b| a.partial_cmp(b).expect("finite keys"));
        if n % 2 == 1 {
            self.xy[keys[n / 2].2]
        } else {
            let (x1, y1) = self.xy[keys[n / 2 - 1].2];
            let (x2, y2) = self.xy[keys[n / 2].2];
            ((x1 + x2) / 2.0, (y1 + y2) / 2.0)
        }
    }

    /// Signed distance from the intersection of the halving lines at
    /// `theta + 2pi/3` and `theta + 4pi/3` to the halving line at `theta`,
    /// plus the intersection point itself.
    fn concurrency_defect(&self, theta: f64) -> (f64, (f64, f64)) {
        let t1 = theta + TAU / 3.0;
        let t2 = theta + 2.0 * TAU / 3.0;
        let m0 = self.median_xy(theta);
        let m1 = self.median_xy(t1);
        let m2 = self.median_xy(t2);
        // intersection of m1 + a (cos t1, sin t1) and m2 + b (cos t2, sin t2)
        let (d1x, d1y) = (t1.cos(), t1.sin());
        let (d2x, d2y) = (t2.cos(), t2.sin());
        let det = d1x * d2y - d1y * d2x; // |sin(2pi/3)|, never small
        let (rx, ry) = (m2.0 - m1.0, m2.1 - m1.1);
        let a = (rx * d2y - ry * d2x) / det;
        let p = (m1.0 + a * d1x, m1.1 + a * d1y);
        // side of p relative to the theta-line through m0
        let side = (p.0 - m0.0) * theta.sin() - (p.1 - m0.1) * theta.cos();
        (side, p)
    }
}

/// One direction at which some rotated median order degenerates: the base
/// angle `theta` together with the point pair and frame that produced it.
struct Critical {
    theta: f64,
    i: usize,
    j: usize,
    /// which of the three rotated frames is parallel to the pair
    rot: u8,
    /// whether the half-turned representative produced this angle
    flip: bool,
}

/// A direction whose three halving lines at mutual angle 120 degrees are
/// concurrent within `tol` (absolute distance).
///
/// Directions where some median changes are the angles of point differences
/// (in any of the three rotated frames); between consecutive critical angles
/// the defect varies continuously, and it flips sign diametrically, so a
/// crossing always exists. The scan samples every interval midpoint and
/// bisects a bracketing pair. When the crossing sits on a critical angle
/// itself (common for symmetric sets), the certificate is rebuilt with the
/// exact unit direction of the critical pair whenever one exists in the
/// field.
pub fn find_concurrent_direction(v: &PlanePointSet, tol: f64) -> Result<ConcurrencyCertificate, PlaneError> {
    let pts = v.points();
    let n = pts.len();
    if n == 0 {
        return Err(PlaneError::EmptySet);
    }
    if n == 1 {
        let (x, y) = pts[0].to_f64();
        return Ok(ConcurrencyCertificate {
            direction: Direction::i(),
            intersection: (x, y),
            residual: 0.0,
            medians: [pts[0].clone(), pts[0].clone(), pts[0].clone()],
        });
    }

    let scan = Scan::new(pts);
    let mut criticals: Vec<Critical> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (xi, yi) = scan.xy[i];
            let (xj, yj) = scan.xy[j];
            let base = (yj - yi).atan2(xj - xi);
            for flip in [false, true] {
                for rot in 0u8..3 {
                    let t = base + if flip { PI } else { 0.0 } - rot as f64 * TAU / 3.0;
                    criticals.push(Critical { theta: t.rem_euclid(TAU), i, j, rot, flip });
                }
            }
        }
    }
    criticals.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite angles"));

    // midpoints of the circular gaps between consecutive critical angles
    let mut samples = Vec::with_capacity(criticals.len());
    for (i, c) in criticals.iter().enumerate() {
        let next = if i + 1 < criticals.len() {
            criticals[i + 1].theta
        } else {
            criticals[0].theta + TAU
        };
        if next - c.theta > 1e-12 {
            samples.push((c.theta + next) / 2.0);
        }
    }
    if samples.is_empty() {
        samples.push(0.0);
    }

    let evaluated: Vec<(f64, f64)> = samples
        .iter()
        .map(|&t| {
            let (side, _) = scan.concurrency_defect(t);
            (t, side)
        })
        .collect();

    // any sample already concurrent within tolerance?
    let mut best = None;
    for &(t, side) in &evaluated {
        if side.abs() <= tol {
            best = Some(t);
            break;
        }
    }

    if best.is_none() {
        // bracket a sign change between consecutive samples (circularly) and bisect
        let m = evaluated.len();
        let mut bracket = None;
        for i in 0..m {
            let (ta, sa) = evaluated[i];
            let (tb, sb) = evaluated[(i + 1) % m];
            if sa.signum() != sb.signum() {
                let tb = if (i + 1) % m == 0 { tb + TAU } else { tb };
                bracket = Some((ta, sa, tb));
                break;
            }
        }
        let Some((mut lo, mut side_lo, mut hi)) = bracket else {
            return Err(PlaneError::NoSignChange(format!(
                "no bracketing sign change over {m} samples (n = {n})"
            )));
        };
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let (side, _) = scan.concurrency_defect(mid);
            if side.abs() <= tol {
                best = Some(mid);
                break;
            }
            if side.signum() == side_lo.signum() {
                lo = mid;
                side_lo = side;
            } else {
                hi = mid;
            }
        }
        if best.is_none() {
            // converged onto a point where the defect jumps through zero;
            // the midpoint is the candidate and certification decides
            best = Some(0.5 * (lo + hi));
        }
    }

    let theta = best.expect("set above");
    match certify(v, Direction::from_angle(theta), tol) {
        Ok(cert) => Ok(cert),
        Err(err) => {
            // The crossing may sit exactly on a critical direction, where
            // approximate comparisons cannot be decisive. Retry with the
            // exact direction of each nearby critical pair; the ray form
            // compares exactly even when the unit vector is outside the
            // field.
            for c in &criticals {
                let dist = (c.theta - theta.rem_euclid(TAU)).abs();
                let dist = dist.min(TAU - dist);
                if dist > 1e-5 {
                    continue;
                }
                if let Some(dir) = exact_direction_for(pts, c) {
                    if let Ok(cert) = certify(v, dir, tol) {
                        return Ok(cert);
                    }
                }
            }
            Err(err)
        }
    }
}

/// The exact direction whose angle is the critical's base angle:
/// `±d * omega^{-rot}` as a ray (normalized to a unit when possible).
fn exact_direction_for(pts: &[Point2], c: &Critical) -> Option<Direction> {
    let mut vector = &pts[c.j] - &pts[c.i];
    if c.flip {
        vector = -&vector;
    }
    for _ in 0..(3 - c.rot) % 3 {
        vector = vector.mul_omega();
    }
    Direction::from_vector(vector).ok()
}

/// Re-verify a candidate direction: certified medians (decisive or exact
/// comparisons), exact halving counts via [`halving_line`], and the residual
/// recomputed from the certified medians.
fn certify(v: &PlanePointSet, dir0: Direction, tol: f64) -> Result<ConcurrencyCertificate, PlaneError> {
    let dir1 = dir0.rotate_omega();
    let dir2 = dir1.rotate_omega();
    let h0 = halving_line(v, &dir0, DEFAULT_DIR_TOLERANCE)?;
    let h1 = halving_line(v, &dir1, DEFAULT_DIR_TOLERANCE)?;
    let h2 = halving_line(v, &dir2, DEFAULT_DIR_TOLERANCE)?;

    let theta = dir0.theta();
    let (t1, t2) = (dir1.theta(), dir2.theta());
    let m0 = h0.median.to_f64();
    let m1 = h1.median.to_f64();
    let m2 = h2.median.to_f64();
    let (d1x, d1y) = (t1.cos(), t1.sin());
    let (d2x, d2y) = (t2.cos(), t2.sin());
    let det = d1x * d2y - d1y * d2x;
    let (rx, ry) = (m2.0 - m1.0, m2.1 - m1.1);
    let a = (rx * d2y - ry * d2x) / det;
    let p = (m1.0 + a * d1x, m1.1 + a * d1y);
    let residual = ((p.0 - m0.0) * theta.sin() - (p.1 - m0.1) * theta.cos()).abs();
    if residual > tol {
        return Err(PlaneError::ToleranceViolation(format!(
            "certified residual {residual:.3e} above tolerance {tol:.1e}"
        )));
    }
    Ok(ConcurrencyCertificate {
        direction: dir0,
        intersection: p,
        residual,
        medians: [h0.median, h1.median, h2.median],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterncount_exact::{QSqrt3, ratio};

    fn lattice_set(coords: &[(i64, i64)]) -> PlanePointSet {
        PlanePointSet::new(coords.iter().map(|&(a, b)| Point2::lattice(a, b)).collect()).unwrap()
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point2 {
        Point2::new(QSqrt3::from_ratio(x.0, x.1), QSqrt3::from_ratio(y.0, y.1))
    }

    #[test]
    fn median_under_i_is_lexicographic_middle() {
        let v = PlanePointSet::new(vec![pt((0, 1), (0, 1)), pt((1, 1), (5, 1)), pt((3, 1), (-2, 1))]).unwrap();
        let m = zeta_median(&v, &Direction::i(), DEFAULT_DIR_TOLERANCE).unwrap();
        assert_eq!(m, pt((1, 1), (5, 1)));
    }

    #[test]
    fn even_median_is_midpoint() {
        let v = PlanePointSet::new(vec![Point2::zero(), Point2::one()]).unwrap();
        let m = zeta_median(&v, &Direction::i(), DEFAULT_DIR_TOLERANCE).unwrap();
        assert_eq!(m, Point2::new(QSqrt3::from_ratio(1, 2), QSqrt3::zero()));
    }

    #[test]
    fn zeta_and_minus_zeta_share_the_median() {
        let v = PlanePointSet::new(vec![
            pt((0, 1), (0, 1)),
            pt((1, 1), (2, 1)),
            pt((-3, 1), (1, 2)),
            pt((2, 1), (-1, 1)),
            pt((1, 2), (7, 3)),
        ])
        .unwrap();
        for dir in [Direction::i(), Direction::one(), Direction::from_angle(0.37)] {
            let a = zeta_median(&v, &dir, DEFAULT_DIR_TOLERANCE).unwrap();
            let b = zeta_median(&v, &dir.negate(), DEFAULT_DIR_TOLERANCE).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn halving_counts_are_exact_with_ties() {
        // three collinear points on the y-axis plus two off-axis: under
        // direction i, the on-axis points tie in projection and the formal
        // rule splits them exactly
        let v = PlanePointSet::new(vec![
            pt((0, 1), (0, 1)),
            pt((0, 1), (1, 1)),
            pt((0, 1), (2, 1)),
            pt((-1, 1), (0, 1)),
            pt((1, 1), (0, 1)),
        ])
        .unwrap();
        let h = halving_line(&v, &Direction::i(), DEFAULT_DIR_TOLERANCE).unwrap();
        assert_eq!(h.left_count, 3);
        assert_eq!(h.right_count, 2);
        assert_eq!(h.median, pt((0, 1), (1, 1)));
    }

    #[test]
    fn single_point_and_pair_are_trivially_concurrent() {
        let one = lattice_set(&[(2, 3)]);
        let c = find_concurrent_direction(&one, 1e-9).unwrap();
        assert_eq!(c.residual, 0.0);
        let two = lattice_set(&[(0, 0), (5, 2)]);
        let c = find_concurrent_direction(&two, 1e-9).unwrap();
        assert!(c.residual <= 1e-9);
        // all medians of a pair coincide at the midpoint
        assert_eq!(c.medians[0], c.medians[1]);
        assert_eq!(c.medians[1], c.medians[2]);
    }

    #[test]
    fn symmetric_hexagon_concurs_at_center() {
        let v = lattice_set(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (0, 0)]);
        let c = find_concurrent_direction(&v, 1e-9).unwrap();
        assert!(c.residual <= 1e-9);
        assert!(c.intersection.0.abs() < 1e-6 && c.intersection.1.abs() < 1e-6);
        for m in &c.medians {
            assert_eq!(*m, Point2::zero());
        }
    }

    #[test]
    fn random_style_set_gets_certified() {
        let v = PlanePointSet::new(vec![
            pt((0, 1), (0, 1)),
            pt((7, 2), (1, 3)),
            pt((-2, 1), (5, 4)),
            pt((3, 1), (-4, 1)),
            pt((1, 5), (2, 1)),
            pt((-5, 2), (-3, 2)),
            pt((4, 1), (9, 4)),
            pt((-1, 3), (3, 1)),
            Point2::new(QSqrt3::new(ratio(1, 2), ratio(1, 3)), QSqrt3::from_ratio(1, 1)),
            pt((2, 3), (-7, 5)),
        ])
        .unwrap();
        let c = find_concurrent_direction(&v, 1e-9).unwrap();
        assert!(c.residual <= 1e-9, "residual {}", c.residual);
        let n = v.len();
        for dir in [&c.direction, &c.direction.rotate_omega(), &c.direction.rotate_omega().rotate_omega()] {
            let h = halving_line(&v, dir, DEFAULT_DIR_TOLERANCE).unwrap();
            assert_eq!(h.left_count, n.div_ceil(2));
            assert_eq!(h.right_count, n / 2);
        }
    }
}
