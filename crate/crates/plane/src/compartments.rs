use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use patterncount_exact::{Direction, Point2, DEFAULT_DIR_TOLERANCE};

use crate::error::PlaneError;
use crate::halving::{find_concurrent_direction, zeta_median, ConcurrencyCertificate};
use crate::reconstruct::{classify_pair, PairClass};
use crate::set::PlanePointSet;

/// Rotation of the whole picture by 0, 120, or 240 degrees before testing
/// which pairs fall outside the admissible argument set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rotation {
    R0,
    R120,
    R240,
}

impl Rotation {
    pub fn index(self) -> usize {
        match self {
            Rotation::R0 => 0,
            Rotation::R120 => 1,
            Rotation::R240 => 2,
        }
    }
}

const ROTATIONS: [Rotation; 3] = [Rotation::R0, Rotation::R120, Rotation::R240];

/// The partition of a point set by formal side relative to three concurrent
/// halving lines at mutual angles of 120 degrees.
#[derive(Debug, Clone)]
pub struct Compartments {
    /// Point indices per compartment; the seventh can hold at most the
    /// common intersection point.
    pub classes: [Vec<usize>; 7],
    /// The three zeta-medians defining the lines.
    pub medians: [Point2; 3],
    pub direction: Direction,
}

impl Compartments {
    pub fn sizes(&self) -> [usize; 7] {
        std::array::from_fn(|i| self.classes[i].len())
    }
}

/// Summary of a compartment decomposition after the rotation is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompartmentProfile {
    pub sizes: [usize; 7],
    pub rotation: Rotation,
    /// Intracompartmental pairs whose rotated difference argument falls
    /// outside the admissible set; at least one third of all such pairs.
    pub intracompartmental_outside_a: u64,
}

/// Classify every point by its formal side (left = `z ⪯_ζ median`) relative
/// to the three halving lines of the certified direction.
pub fn compartments(v: &PlanePointSet, zeta: &Direction, tol: f64) -> Result<Compartments, PlaneError> {
    if v.is_empty() {
        return Err(PlaneError::EmptySet);
    }
    let dirs = [zeta.clone(), zeta.rotate_omega(), zeta.rotate_omega().rotate_omega()];
    let medians: [Point2; 3] = [
        zeta_median(v, &dirs[0], tol)?,
        zeta_median(v, &dirs[1], tol)?,
        zeta_median(v, &dirs[2], tol)?,
    ];
    let mut classes: [Vec<usize>; 7] = Default::default();
    for (i, p) in v.points().iter().enumerate() {
        let mut left = [false; 3];
        for j in 0..3 {
            left[j] = matches!(
                dirs[j].compare_tol(p, &medians[j], tol)?,
                Ordering::Less | Ordering::Equal
            );
        }
        let class = match (left[0], left[1], left[2]) {
            (true, false, true) => 0,
            (true, false, false) => 1,
            (true, true, false) => 2,
            (false, true, false) => 3,
            (false, true, true) => 4,
            (false, false, true) => 5,
            // formally the same side of all three lines: only possible on
            // the common intersection
            (true, true, true) | (false, false, false) => 6,
        };
        classes[class].push(i);
    }
    if classes[6].len() > 1 {
        return Err(PlaneError::ToleranceViolation(format!(
            "{} points classified onto the central intersection",
            classes[6].len()
        )));
    }
    Ok(Compartments { classes, medians, direction: zeta.clone() })
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Frame alignment sending the chosen halving line to the y-axis:
/// multiplication by `rho = i conj(zeta)`, exact when the direction is.
enum Align {
    Exact(Point2),
    Approx(f64),
}

impl Align {
    fn for_direction(zeta: &Direction) -> Self {
        // membership in A is scale-invariant, so a ray vector aligns as
        // well as a unit one
        match zeta.exact_vector() {
            Some(v) => Align::Exact(v.conj().mul_i()),
            None => Align::Approx(PI / 2.0 - zeta.theta()),
        }
    }
}

fn rotated_outside_a(d: &Point2, align: &Align, extra: Rotation) -> bool {
    match align {
        Align::Exact(rho) => {
            let mut e = rho * d;
            for _ in 0..extra.index() {
                e = e.mul_omega();
            }
            classify_pair(&e) == PairClass::Outside
        }
        Align::Approx(rho_theta) => {
            let (x, y) = d.to_f64();
            let angle = y.atan2(x) + rho_theta + extra.index() as f64 * TAU / 3.0;
            let a = wrap(angle);
            let a_flipped = wrap(a + PI);
            // outside A: within (-pi/6, pi/6] of the real axis, either side
            (a > -PI / 6.0 && a <= PI / 6.0) || (a_flipped > -PI / 6.0 && a_flipped <= PI / 6.0)
        }
    }
}

fn wrap(t: f64) -> f64 {
    let mut t = t % TAU;
    if t > PI {
        t -= TAU;
    } else if t <= -PI {
        t += TAU;
    }
    t
}

/// For each of the three rotations, the number of intracompartmental pairs
/// whose rotated difference has argument outside the admissible set. Every
/// pair is outside for exactly one rotation, so the counts sum to the number
/// of intracompartmental pairs (pairs in the central class excluded).
fn outside_a_counts(v: &PlanePointSet, comp: &Compartments) -> [u64; 3] {
    let align = Align::for_direction(&comp.direction);
    let pts = v.points();
    let mut outside = [0u64; 3];
    for class in &comp.classes[..6] {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                let d = &pts[j] - &pts[i];
                for (r, rot) in ROTATIONS.into_iter().enumerate() {
                    if rotated_outside_a(&d, &align, rot) {
                        outside[r] += 1;
                    }
                }
            }
        }
    }
    if matches!(align, Align::Exact(_)) {
        let total: u64 = comp.classes[..6].iter().map(|c| binom2(c.len() as u64)).sum();
        debug_assert_eq!(outside.iter().sum::<u64>(), total);
    }
    outside
}

/// Pick the rotation under which the intracompartmental pairs falling
/// outside the admissible argument set number at least one third of all
/// such pairs.
pub fn choose_rotation(v: &PlanePointSet, comp: &Compartments) -> (Rotation, CompartmentProfile) {
    let outside = outside_a_counts(v, comp);
    let best = (0..3).max_by_key(|&r| outside[r]).expect("three rotations");
    let rotation = ROTATIONS[best];
    let profile = CompartmentProfile {
        sizes: comp.sizes(),
        rotation,
        intracompartmental_outside_a: outside[best],
    };
    (rotation, profile)
}

/// Evaluate the compartment upper bound with actual sizes:
/// `C(ceil(n/2), 2) + C(floor(n/2), 2) - ceil(sum_j C(|V_j|, 2) / 3)`.
pub fn terence_bound_from_sizes(n: u64, sizes: &[usize; 7]) -> u64 {
    let base = binom2(n.div_ceil(2)) + binom2(n / 2);
    let intra: u64 = sizes[..6].iter().map(|&s| binom2(s as u64)).sum();
    base - intra.div_ceil(3)
}

/// Full compartment pipeline report for one point set.
#[derive(Debug, Clone)]
pub struct TerenceReport {
    pub certificate: ConcurrencyCertificate,
    pub profile: CompartmentProfile,
    /// The compartment bound from the sizes alone.
    pub bound: u64,
    /// Diagnostic: outside-A pair counts of each rotation; the largest gives
    /// the sharpest defensible deduction.
    pub per_rotation_outside_a: [u64; 3],
    pub sharp_bound: u64,
}

/// Find concurrent halving lines, classify compartments, choose the
/// rotation, and evaluate the compartment bound.
pub fn terence_bound(v: &PlanePointSet, tol: f64) -> Result<TerenceReport, PlaneError> {
    let certificate = find_concurrent_direction(v, tol)?;
    let comp = compartments(v, &certificate.direction, DEFAULT_DIR_TOLERANCE)?;
    let outside = outside_a_counts(v, &comp);
    let best = (0..3).max_by_key(|&r| outside[r]).expect("three rotations");
    let profile = CompartmentProfile {
        sizes: comp.sizes(),
        rotation: ROTATIONS[best],
        intracompartmental_outside_a: outside[best],
    };
    let n = v.len() as u64;
    let bound = terence_bound_from_sizes(n, &profile.sizes);
    let base = binom2(n.div_ceil(2)) + binom2(n / 2);
    let sharp_bound = base - outside[best];
    Ok(TerenceReport { certificate, profile, bound, per_rotation_outside_a: outside, sharp_bound })
}
