use std::cmp::Ordering;

use patterncount_exact::Point2;

use crate::set::PlanePointSet;

/// The n points of the unit triangular lattice `a + b zeta6` nearest the
/// origin, with ties broken by angle (counterclockwise from the positive
/// real axis) and then lexicographically by `(a, b)`.
///
/// This realizes the lattice-in-a-disk configurations: prefixes are exactly
/// the lattice points inside growing disks.
pub fn gen_triangular_disk(n: usize) -> PlanePointSet {
    if n == 0 {
        return PlanePointSet::empty();
    }
    // |a + b zeta6|^2 = a^2 + ab + b^2; lattice density is 2/sqrt(3) per
    // unit area, so a disk of squared radius ~ n sqrt(3)/(2 pi) suffices.
    let mut norm_bound = ((n as f64) * 0.28 + 4.0).ceil() as i64;
    loop {
        let mut pool: Vec<(i64, i64, i64)> = Vec::new();
        let amax = ((4.0 * norm_bound as f64 / 3.0).sqrt().ceil() as i64) + 1;
        for a in -amax..=amax {
            for b in -amax..=amax {
                let norm = a * a + a * b + b * b;
                if norm <= norm_bound {
                    pool.push((norm, a, b));
                }
            }
        }
        if pool.len() < n {
            norm_bound = norm_bound * 3 / 2 + 2;
            continue;
        }
        pool.sort_by(|x, y| {
            x.0.cmp(&y.0)
                .then_with(|| angle_cmp((x.1, x.2), (y.1, y.2)))
                .then_with(|| (x.1, x.2).cmp(&(y.1, y.2)))
        });
        let points = pool[..n].iter().map(|&(_, a, b)| Point2::lattice(a, b)).collect();
        return PlanePointSet::new(points).expect("lattice points are distinct");
    }
}

/// Exact counterclockwise angle comparison in [0, 2pi) for nonzero lattice
/// vectors: half-plane class first, then the cross product.
fn angle_cmp(p: (i64, i64), q: (i64, i64)) -> Ordering {
    fn class(v: (i64, i64)) -> u8 {
        // Cartesian coordinates are proportional to (2a + b, b sqrt(3))
        let x = 2 * v.0 + v.1;
        let y = v.1;
        if y == 0 {
            if x > 0 {
                0 // angle 0
            } else {
                2 // angle pi
            }
        } else if y > 0 {
            1 // (0, pi)
        } else {
            3 // (pi, 2 pi)
        }
    }
    fn cross(p: (i64, i64), q: (i64, i64)) -> i64 {
        // sign matches the Cartesian cross product
        p.0 * q.1 - p.1 * q.0
    }
    // within one open half-plane, smaller angle means q lies counterclockwise
    class(p).cmp(&class(q)).then_with(|| 0i64.cmp(&cross(p, q)))
}
