use num_traits::Signed;
use patterncount_exact::{rat, Rat};

use crate::error::LineError;
use crate::set::LinePointSet;

/// Arithmetic progression `start, start + gap, ...` with n terms.
pub fn gen_ap(n: usize, start: &Rat, gap: &Rat) -> Result<LinePointSet, LineError> {
    if !gap.is_positive() && n > 1 {
        return Err(LineError::InfeasibleParameters("gap must be positive".into()));
    }
    let mut points = Vec::with_capacity(n);
    let mut t = start.clone();
    for _ in 0..n {
        points.push(t.clone());
        t = &t + gap;
    }
    LinePointSet::new(points)
}

/// Union of `e_size` consecutive even integers and `n - e_size` consecutive
/// odd integers, concentric when n is odd and nearly concentric (odd class
/// barycenter one to the right) when n is even. These are exactly the
/// optimal sets for 3-term progressions.
pub fn gen_eo(n: usize, e_size: usize) -> Result<LinePointSet, LineError> {
    if e_size == 0 || e_size >= n {
        return Err(LineError::InfeasibleParameters(format!(
            "both classes must be nonempty: need 1 <= e_size < n, got e_size {e_size}, n {n}"
        )));
    }
    let e = e_size as i64;
    let o = (n - e_size) as i64;
    // Even-class barycenter c must satisfy c = e - 1 (mod 2); the odd class
    // is centered at c for odd n and at c + 1 for even n.
    let c = (e - 1).rem_euclid(2);
    let odd_center = if n % 2 == 1 { c } else { c + 1 };
    let e_start = c - (e - 1);
    let o_start = odd_center - (o - 1);
    debug_assert!(e_start % 2 == 0 && o_start.rem_euclid(2) == 1);
    let mut points: Vec<Rat> = (0..e).map(|t| rat(e_start + 2 * t)).collect();
    points.extend((0..o).map(|t| rat(o_start + 2 * t)));
    LinePointSet::new(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OliverVariant {
    Full,
    DropSecond,
    DropPenultimate,
}

/// An n-term arithmetic progression of consecutive integers, optionally with
/// the second or penultimate point removed. The drop variants are optimal
/// for k-term progressions exactly when k-1 divides n, so that is required.
pub fn gen_oliver(n: usize, k: u64, variant: OliverVariant) -> Result<LinePointSet, LineError> {
    if k < 2 {
        return Err(LineError::BadArity { k });
    }
    match variant {
        OliverVariant::Full => gen_ap(n, &rat(0), &rat(1)),
        OliverVariant::DropSecond | OliverVariant::DropPenultimate => {
            if n as u64 % (k - 1) != 0 {
                return Err(LineError::InfeasibleParameters(format!(
                    "drop variants need (k-1) | n, got k {k}, n {n}"
                )));
            }
            let m = n as i64; // n points drawn from {0..=m}
            let dropped = match variant {
                OliverVariant::DropSecond => 1,
                _ => m - 1,
            };
            LinePointSet::new((0..=m).filter(|&x| x != dropped).map(rat).collect())
        }
    }
}

/// The 96k-point set `M0 ∪ M1 ∪ M3 ∪ M5` holding `1728 k^2 - 48 k` directly
/// similar copies of `{0, 1, 3}`.
pub fn construction_mary(k: u64) -> LinePointSet {
    assert!(k >= 1);
    let points = mary_integers(k as i64);
    debug_assert_eq!(points.len(), 96 * k as usize);
    LinePointSet::new(points.into_iter().map(rat).collect())
        .expect("the four residue classes are disjoint")
}

fn mary_integers(k: i64) -> Vec<i64> {
    let mut points = Vec::with_capacity(96 * k as usize);
    points.extend((0..=18 * k).map(|a| 6 * a)); // M0
    points.extend((12 * k..=24 * k - 1).map(|a| 6 * a + 1)); // M1
    points.extend((0..=54 * k - 2).map(|a| 6 * a + 3)); // M3
    points.extend((12 * k..=24 * k - 1).map(|a| 6 * a - 1)); // M5
    points.sort_unstable();
    points
}

/// The fourteen residue triples `(p1, p2, p3) mod 6` a copy of `{0,1,3}`
/// inside the construction can realize, in the order of the closed-form
/// table.
pub const RESIDUE_TRIPLES: [(u8, u8, u8); 14] = [
    (0, 0, 0),
    (0, 1, 3),
    (0, 3, 3),
    (0, 5, 3),
    (1, 1, 1),
    (1, 3, 1),
    (1, 5, 1),
    (3, 0, 0),
    (3, 1, 3),
    (3, 3, 3),
    (3, 5, 3),
    (5, 1, 5),
    (5, 3, 5),
    (5, 5, 5),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    /// Count of instances per residue triple, aligned with [`RESIDUE_TRIPLES`].
    pub rows: Vec<((u8, u8, u8), u64)>,
    pub total: u64,
}

/// Instance counts of `{0,1,3}` in the construction, split by the residue
/// classes mod 6 of the three points, by direct counting.
pub fn residue_table(k: u64) -> ResidueTable {
    assert!(k >= 1);
    let pts = mary_integers(k as i64);
    let mut buckets = std::collections::HashMap::new();
    let mut membership = vec![false; (*pts.last().unwrap() + 1) as usize];
    for &p in &pts {
        membership[p as usize] = true;
    }
    let max = *pts.last().unwrap();
    for (i, &p1) in pts.iter().enumerate() {
        for &p2 in &pts[i + 1..] {
            let p3 = 3 * p2 - 2 * p1;
            if p3 > max {
                break;
            }
            if membership[p3 as usize] {
                let key = (
                    (p1.rem_euclid(6)) as u8,
                    (p2.rem_euclid(6)) as u8,
                    (p3.rem_euclid(6)) as u8,
                );
                *buckets.entry(key).or_insert(0u64) += 1;
            }
        }
    }
    let rows: Vec<((u8, u8, u8), u64)> = RESIDUE_TRIPLES
        .iter()
        .map(|t| (*t, buckets.remove(t).unwrap_or(0)))
        .collect();
    assert!(buckets.is_empty(), "unexpected residue triples: {buckets:?}");
    let total = rows.iter().map(|r| r.1).sum();
    ResidueTable { rows, total }
}

impl ResidueTable {
    /// The closed form for one residue triple as a function of k.
    pub fn closed_form(triple: (u8, u8, u8), k: u64) -> Option<u64> {
        let k = k as i64;
        let v = match triple {
            (0, 0, 0) => 54 * k * k - 3 * k,
            (0, 1, 3) => 171 * k * k + 6 * k,
            (0, 3, 3) => 270 * k * k + 9 * k,
            (0, 5, 3) => 171 * k * k + 3 * k - 1,
            (1, 1, 1) | (5, 5, 5) => 24 * k * k - 6 * k,
            (1, 3, 1) | (5, 1, 5) => 24 * k * k + 2 * k,
            (1, 5, 1) | (5, 3, 5) => 24 * k * k - 2 * k,
            (3, 0, 0) => 54 * k * k + 3 * k,
            (3, 1, 3) => 189 * k * k - 6 * k,
            (3, 3, 3) => 486 * k * k - 45 * k + 1,
            (3, 5, 3) => 189 * k * k - 3 * k,
            _ => return None,
        };
        Some(v as u64)
    }

    /// `1728 k^2 - 48 k`, the total over all fourteen rows.
    pub fn closed_form_total(k: u64) -> u64 {
        1728 * k * k - 48 * k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_instances, count_kap, sap_max};
    use crate::decomp::francis_check;
    use crate::pattern::LinePattern;

    #[test]
    fn ap_generator() {
        let v = gen_ap(5, &rat(0), &rat(1)).unwrap();
        assert_eq!(v.points(), &[rat(0), rat(1), rat(2), rat(3), rat(4)]);
        assert!(gen_ap(3, &rat(0), &rat(0)).is_err());
        assert!(gen_ap(0, &rat(0), &rat(1)).unwrap().is_empty());
    }

    #[test]
    fn eo_generator_matches_catalogue() {
        let v = gen_eo(7, 5).unwrap();
        assert_eq!(v, LinePointSet::from_integers(&[-4, -2, -1, 0, 1, 2, 4]).unwrap());
        assert!(gen_eo(7, 0).is_err());
        assert!(gen_eo(7, 7).is_err());
        for n in 3..=12 {
            for e in 1..n {
                let v = gen_eo(n, e).unwrap();
                assert_eq!(v.len(), n);
                assert!(
                    francis_check(&v, 3, None).unwrap().optimal,
                    "gen_eo({n},{e}) must be optimal"
                );
            }
        }
    }

    #[test]
    fn oliver_generator() {
        let v = gen_oliver(9, 4, OliverVariant::DropSecond).unwrap();
        assert_eq!(v, LinePointSet::from_integers(&[0, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap());
        assert_eq!(count_kap(&v, 4).unwrap(), sap_max(9, 4));
        let w = gen_oliver(9, 4, OliverVariant::DropPenultimate).unwrap();
        assert_eq!(w, LinePointSet::from_integers(&[0, 1, 2, 3, 4, 5, 6, 7, 9]).unwrap());
        assert!(gen_oliver(10, 4, OliverVariant::DropSecond).is_err());
        assert_eq!(gen_oliver(6, 4, OliverVariant::Full).unwrap().len(), 6);
    }

    #[test]
    fn mary_sizes_and_membership() {
        let v = construction_mary(1);
        assert_eq!(v.len(), 96);
        // every point is congruent to 0, 1, 3, or 5 mod 6
        for p in v.points() {
            let r = p.to_integer() % 6;
            assert!([0, 1, 3, 5].contains(&i64::try_from(r).unwrap()));
        }
        assert_eq!(construction_mary(2).len(), 192);
    }

    #[test]
    fn mary_counts_k1() {
        let t = residue_table(1);
        assert_eq!(t.total, 1680);
        assert_eq!(t.total, ResidueTable::closed_form_total(1));
        let get = |triple| t.rows.iter().find(|r| r.0 == triple).unwrap().1;
        assert_eq!(get((0, 0, 0)), 51);
        assert_eq!(get((3, 3, 3)), 442);
        // and the fast rational counter agrees
        let p = LinePattern::from_integers(&[0, 1, 3]).unwrap();
        assert_eq!(count_instances(&construction_mary(1), &p, false), 1680);
    }
}
