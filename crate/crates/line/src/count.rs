use patterncount_exact::Rat;

use crate::error::LineError;
use crate::exec;
use crate::pattern::LinePattern;
use crate::set::LinePointSet;

/// Exact maximum number of k-term arithmetic progressions in any n-subset of
/// the line: `(n - r)(n + r - k + 1) / (2k - 2)` with `r = n mod (k-1)`.
pub fn sap_max(n: u64, k: u64) -> u64 {
    assert!(k >= 2, "progressions need at least 2 terms");
    let r = n % (k - 1);
    let num = (n - r) as i128 * (n as i128 + r as i128 - k as i128 + 1);
    if num <= 0 {
        return 0;
    }
    let den = 2 * (k as i128 - 1);
    debug_assert_eq!(num % den, 0, "the maximum formula is always an integer");
    (num / den) as u64
}

/// The same value as [`sap_max`]: the upper bound holds for every k-pattern
/// on the line, not just progressions, because every pattern on the line is
/// uniquely reconstructible from consecutive points.
pub fn general_upper_bound(n: u64, k: u64) -> u64 {
    sap_max(n, k)
}

/// Lower and upper bounds for the number of instances of a commensurable
/// pattern in the best n-point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobBounds {
    /// Achieved by n-term arithmetic progressions via the enveloping
    /// progression of the pattern.
    pub lower: u64,
    /// The general reconstruction bound for k points.
    pub upper: u64,
}

/// Sandwich `sap_max(n, l) <= S_P(n) <= sap_max(n, k)` where `l` is the
/// enveloping progression length of the pattern and `k` its arity.
pub fn jacob_bounds(n: u64, pattern: &LinePattern) -> JacobBounds {
    JacobBounds {
        lower: sap_max(n, pattern.enveloping_length()),
        upper: sap_max(n, pattern.k() as u64),
    }
}

fn count_kap_row(pts: &[Rat], k: u64, i: usize) -> u64 {
    let n = pts.len();
    let last = &pts[n - 1];
    let steps = k - 2;
    let mut row = 0u64;
    for j in i + 1..n {
        let d = &pts[j] - &pts[i];
        // The farthest required term grows with j; once it passes the
        // maximum of V no later j can work either.
        let reach = &pts[j] + &(&d * Rat::from_integer(steps.into()));
        if &reach > last {
            break;
        }
        let mut t = pts[j].clone();
        let mut complete = true;
        for _ in 0..steps {
            t = &t + &d;
            if pts.binary_search(&t).is_err() {
                complete = false;
                break;
            }
        }
        if complete {
            row += 1;
        }
    }
    row
}

/// Number of k-term arithmetic progressions contained in `v`.
///
/// Each progression is reconstructed from its first two points, so the loop
/// is over ordered pairs with exact membership tests for the remaining
/// terms. Sets with fewer than k points contain none.
pub fn count_kap(v: &LinePointSet, k: u64) -> Result<u64, LineError> {
    if k < 2 {
        return Err(LineError::BadArity { k });
    }
    let n = v.len();
    if (n as u64) < k {
        return Ok(0);
    }
    if k == 2 {
        return Ok(n as u64 * (n as u64 - 1) / 2);
    }
    let pts = v.points();
    Ok(exec::sum_indexed(n, |i| count_kap_row(pts, k, i)))
}

/// Sequential fallback of [`count_kap`], compiled unconditionally; used by
/// the benchmarks to compare against the data-parallel path.
pub fn count_kap_seq(v: &LinePointSet, k: u64) -> Result<u64, LineError> {
    if k < 2 {
        return Err(LineError::BadArity { k });
    }
    let n = v.len();
    if (n as u64) < k {
        return Ok(0);
    }
    if k == 2 {
        return Ok(n as u64 * (n as u64 - 1) / 2);
    }
    let pts = v.points();
    Ok(exec::sum_indexed_seq(n, |i| count_kap_row(pts, k, i)))
}

fn count_direct_row(pts: &[Rat], pattern: &[Rat], i: usize) -> u64 {
    let n = pts.len();
    let last = &pts[n - 1];
    let first_gap = &pattern[1] - &pattern[0];
    let span = pattern.last().unwrap();
    let mut row = 0u64;
    for j in i + 1..n {
        // scale sending (pattern[0], pattern[1]) onto (pts[i], pts[j])
        let a = (&pts[j] - &pts[i]) / &first_gap;
        let reach = &pts[i] + &(&a * span);
        if &reach > last {
            break;
        }
        let complete = pattern[2..].iter().all(|q| {
            let t = &pts[i] + &(&a * q);
            pts.binary_search(&t).is_ok()
        });
        if complete {
            row += 1;
        }
    }
    row
}

/// Number of subsets of `v` directly similar to the pattern (maps
/// `x -> a x + b` with `a > 0`). With `allow_reflection`, instances of the
/// mirrored pattern are added unless the pattern is reflection-symmetric,
/// in which case the two families coincide and are counted once.
///
/// Uniqueness of reconstruction from the first two points makes the pair
/// loop count each instance exactly once.
pub fn count_instances(v: &LinePointSet, pattern: &LinePattern, allow_reflection: bool) -> u64 {
    let direct = count_direct(v, pattern);
    if allow_reflection && !pattern.is_reflection_symmetric() {
        direct + count_direct(v, &pattern.reflected())
    } else {
        direct
    }
}

fn count_direct(v: &LinePointSet, pattern: &LinePattern) -> u64 {
    let n = v.len();
    if n < pattern.k() {
        return 0;
    }
    let pts = v.points();
    let pat = pattern.points();
    if pattern.k() == 2 {
        return n as u64 * (n as u64 - 1) / 2;
    }
    exec::sum_indexed(n, |i| count_direct_row(pts, pat, i))
}
