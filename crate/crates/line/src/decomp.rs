use std::ops::Range;

use patterncount_exact::Rat;

use crate::error::LineError;
use crate::set::LinePointSet;

/// An orderly decomposition of an ordered n-set into consecutive blocks,
/// recorded as the block sizes (empty blocks allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderlyDecomposition {
    sizes: Vec<usize>,
}

impl OrderlyDecomposition {
    pub fn new(sizes: Vec<usize>) -> Self {
        assert!(!sizes.is_empty(), "need at least one block");
        OrderlyDecomposition { sizes }
    }

    /// The balanced decomposition with larger blocks first: `n mod l` blocks
    /// of size `ceil(n/l)` followed by blocks of size `floor(n/l)`.
    pub fn balanced(n: usize, l: usize) -> Self {
        assert!(l >= 1, "need at least one block");
        let q = n / l;
        let r = n % l;
        let sizes = (0..l).map(|j| if j < r { q + 1 } else { q }).collect();
        OrderlyDecomposition { sizes }
    }

    /// Every balanced assignment of block sizes (all placements of the
    /// larger blocks). Intended for sweeping tests; the count is C(l, n mod l).
    pub fn balanced_assignments(n: usize, l: usize) -> Vec<Self> {
        assert!(l >= 1 && l < usize::BITS as usize);
        let q = n / l;
        let r = n % l;
        let mut out = Vec::new();
        for mask in 0u64..(1 << l) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let sizes = (0..l).map(|j| if mask >> j & 1 == 1 { q + 1 } else { q }).collect();
            out.push(OrderlyDecomposition { sizes });
        }
        out
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        let n = self.total();
        let l = self.blocks();
        self.sizes.iter().all(|&s| s == n / l || s == n.div_ceil(l))
    }

    /// Index range of block `j` (0-based) within the sorted set.
    pub fn block_range(&self, j: usize) -> Range<usize> {
        let start: usize = self.sizes[..j].iter().sum();
        start..start + self.sizes[j]
    }
}

/// Balanced orderly decomposition of a point set, larger blocks first.
pub fn orderly_decomposition(v: &LinePointSet, l: usize) -> OrderlyDecomposition {
    OrderlyDecomposition::balanced(v.len(), l)
}

/// All echelons of a subset: the 1-based block numbers `j` such that the
/// j-th and (j+1)-th points of the subset both lie in block `j`.
///
/// `subset` holds strictly increasing indices into the decomposed sorted
/// set; its size must be one more than the number of blocks. The result is
/// never empty for valid input.
pub fn echelons(subset: &[usize], decomposition: &OrderlyDecomposition) -> Result<Vec<usize>, LineError> {
    let blocks = decomposition.blocks();
    if subset.len() != blocks + 1 {
        return Err(LineError::ArityMismatch { subset: subset.len(), blocks });
    }
    let n = decomposition.total();
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.last().is_some_and(|&i| i >= n) {
        return Err(LineError::InfeasibleParameters(
            "subset indices must be strictly increasing and within the set".into(),
        ));
    }
    let mut out = Vec::new();
    for j in 0..blocks {
        let range = decomposition.block_range(j);
        if range.contains(&subset[j]) && range.contains(&subset[j + 1]) {
            out.push(j + 1);
        }
    }
    debug_assert!(!out.is_empty(), "every (blocks+1)-subset has an echelon");
    Ok(out)
}

/// Why a pair of points in a block fails the optimality criterion.
#[derive(Debug, Clone, PartialEq)]
pub enum ViolationKind {
    /// The unique progression reconstructed from the pair leaves the set;
    /// carries the first missing term.
    MissingPoint(Rat),
    /// The reconstructed progression lies in the set but is of more than one
    /// echelon, so it would be double counted.
    MultipleEchelons(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrancisViolation {
    /// 1-based block of the offending pair.
    pub block: usize,
    pub v: Rat,
    pub w: Rat,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrancisReport {
    pub optimal: bool,
    pub violations: Vec<FrancisViolation>,
}

/// Optimality criterion for k-term progressions: `v` achieves
/// `sap_max(n, k)` if and only if for every block `j` of a balanced orderly
/// (k-1)-decomposition and every pair `v < w` in block `j`, the unique
/// progression with `v, w` as j-th and (j+1)-th terms lies in the set and is
/// of no other echelon.
///
/// `decomposition` overrides the default balanced split (larger blocks
/// first); the criterion holds for any balanced assignment.
pub fn francis_check(
    v: &LinePointSet,
    k: u64,
    decomposition: Option<&OrderlyDecomposition>,
) -> Result<FrancisReport, LineError> {
    if k < 2 {
        return Err(LineError::BadArity { k });
    }
    let n = v.len();
    let blocks = (k - 1) as usize;
    let default_decomp;
    let decomp = match decomposition {
        Some(d) => {
            if d.blocks() != blocks || d.total() != n || !d.is_balanced() {
                return Err(LineError::InfeasibleParameters(format!(
                    "need a balanced {blocks}-block decomposition of all {n} points"
                )));
            }
            d
        }
        None => {
            default_decomp = OrderlyDecomposition::balanced(n, blocks);
            &default_decomp
        }
    };

    let pts = v.points();
    let mut violations = Vec::new();
    for j in 0..blocks {
        let range = decomp.block_range(j);
        for a in range.clone() {
            'pair: for b in a + 1..range.end {
                let d = &pts[b] - &pts[a];
                // terms v + (m - j) d for 1-based positions m = 1..=k,
                // where the pair sits at positions j+1, j+2 (1-based)
                let mut indices = Vec::with_capacity(k as usize);
                for m in 0..k as i64 {
                    let t = &pts[a] + &d * Rat::from_integer((m - j as i64).into());
                    match pts.binary_search(&t) {
                        Ok(idx) => indices.push(idx),
                        Err(_) => {
                            violations.push(FrancisViolation {
                                block: j + 1,
                                v: pts[a].clone(),
                                w: pts[b].clone(),
                                kind: ViolationKind::MissingPoint(t),
                            });
                            continue 'pair;
                        }
                    }
                }
                let ech = echelons(&indices, decomp)?;
                if ech != [j + 1] {
                    violations.push(FrancisViolation {
                        block: j + 1,
                        v: pts[a].clone(),
                        w: pts[b].clone(),
                        kind: ViolationKind::MultipleEchelons(ech),
                    });
                }
            }
        }
    }
    Ok(FrancisReport { optimal: violations.is_empty(), violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_kap, sap_max};

    fn ints(v: &[i64]) -> LinePointSet {
        LinePointSet::from_integers(v).unwrap()
    }

    #[test]
    fn balanced_shapes() {
        assert_eq!(OrderlyDecomposition::balanced(6, 5).sizes(), &[2, 1, 1, 1, 1]);
        assert_eq!(OrderlyDecomposition::balanced(6, 2).sizes(), &[3, 3]);
        assert_eq!(OrderlyDecomposition::balanced(7, 2).sizes(), &[4, 3]);
        assert_eq!(OrderlyDecomposition::balanced(3, 5).sizes(), &[1, 1, 1, 0, 0]);
        assert!(OrderlyDecomposition::balanced(7, 3).is_balanced());
        assert_eq!(OrderlyDecomposition::balanced_assignments(7, 3).len(), 3);
        assert!(!OrderlyDecomposition::new(vec![3, 1]).is_balanced());
    }

    #[test]
    fn echelons_of_the_six_point_example() {
        // blocks (0,1,2,2,1) over six points; the full set has echelon 4 only
        let d = OrderlyDecomposition::new(vec![0, 1, 2, 2, 1]);
        assert_eq!(echelons(&[0, 1, 2, 3, 4, 5], &d).unwrap(), vec![4]);
    }

    #[test]
    fn echelons_edge_cases() {
        // k = 2: a single block always yields echelon 1
        let d = OrderlyDecomposition::new(vec![4]);
        assert_eq!(echelons(&[1, 3], &d).unwrap(), vec![1]);
        // four consecutive points under blocks (2,1,1): first two in block 1
        let d = OrderlyDecomposition::new(vec![2, 1, 1]);
        assert_eq!(echelons(&[0, 1, 2, 3], &d).unwrap(), vec![1]);
        assert!(matches!(
            echelons(&[0, 1], &d),
            Err(LineError::ArityMismatch { subset: 2, blocks: 3 })
        ));
        assert!(echelons(&[0, 0, 1, 2], &d).is_err());
    }

    #[test]
    fn multiple_echelons_possible_for_larger_k() {
        let d = OrderlyDecomposition::new(vec![2, 2, 1]);
        assert_eq!(echelons(&[0, 1, 2, 3], &d).unwrap(), vec![1]);
        // a 4-subset pinned to the outer blocks of (2,2,2) has two echelons
        let d2 = OrderlyDecomposition::new(vec![2, 2, 2]);
        assert_eq!(echelons(&[0, 1, 4, 5], &d2).unwrap(), vec![1, 3]);
    }

    #[test]
    fn francis_on_optimal_and_non_optimal_sets() {
        let ap = ints(&[0, 1, 2, 3, 4, 5, 6]);
        assert!(francis_check(&ap, 3, None).unwrap().optimal);

        let eo = ints(&[-4, -2, -1, 0, 1, 2, 4]);
        let rep = francis_check(&eo, 3, None).unwrap();
        assert!(rep.optimal, "violations: {:?}", rep.violations);
        assert_eq!(count_kap(&eo, 3).unwrap(), sap_max(7, 3));

        // {0,1,2,5} holds one progression, below the maximum of two
        let bad = ints(&[0, 1, 2, 5]);
        let rep = francis_check(&bad, 3, None).unwrap();
        assert!(!rep.optimal);
        assert!(!rep.violations.is_empty());
        assert_eq!(count_kap(&bad, 3).unwrap(), 1);
        assert_eq!(sap_max(4, 3), 2);

        // {0,1,2,4} is optimal: {0,1,2} and {0,2,4}
        let eo4 = ints(&[0, 1, 2, 4]);
        assert!(francis_check(&eo4, 3, None).unwrap().optimal);
        assert_eq!(count_kap(&eo4, 3).unwrap(), 2);
    }

    #[test]
    fn francis_holds_for_every_balanced_assignment() {
        let eo = ints(&[-4, -2, -1, 0, 1, 2, 4]);
        for d in OrderlyDecomposition::balanced_assignments(7, 2) {
            assert!(francis_check(&eo, 3, Some(&d)).unwrap().optimal);
        }
        let bad = ints(&[0, 1, 2, 5]);
        for d in OrderlyDecomposition::balanced_assignments(4, 2) {
            assert!(!francis_check(&bad, 3, Some(&d)).unwrap().optimal);
        }
    }
}
