use num_bigint::BigInt;
use num_traits::One;
use patterncount_exact::{rat, Rat};

use crate::count::{count_kap, sap_max};
use crate::error::LineError;
use crate::set::LinePointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Concentricity {
    /// The barycenters of the two progressions coincide (odd n).
    Concentric,
    /// The barycenters differ by exactly one (even n).
    NearlyConcentric,
}

/// Shape of an n-set that is optimal for k-term progressions, up to
/// similarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Ap,
    /// Union of a progression of consecutive even integers and one of
    /// consecutive odd integers (k = 3 only). Sizes are reported in the
    /// min-at-zero embedding: `e_size` is the class of the smallest point.
    /// `reflected` records a nearly-concentric set whose odd class sits left
    /// of the even class (the mirror of the generator's orientation).
    Eo { e_size: usize, o_size: usize, concentricity: Concentricity, reflected: bool },
    ApMinusSecond,
    ApMinusPenultimate,
    NotOptimal,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Ap => write!(f, "AP"),
            Classification::Eo { e_size, o_size, concentricity, reflected } => write!(
                f,
                "EO({e_size},{o_size},{}{})",
                match concentricity {
                    Concentricity::Concentric => "concentric",
                    Concentricity::NearlyConcentric => "nearly-concentric",
                },
                if *reflected { ",reflected" } else { "" }
            ),
            Classification::ApMinusSecond => write!(f, "AP-minus-second"),
            Classification::ApMinusPenultimate => write!(f, "AP-minus-penultimate"),
            Classification::NotOptimal => write!(f, "NotOptimal"),
        }
    }
}

/// Classify an n-set (n >= k >= 3) against the catalogue of optimal shapes.
/// The label is `NotOptimal` exactly when `count_kap(v, k) < sap_max(n, k)`.
pub fn classify_optimal(v: &LinePointSet, k: u64) -> Result<Classification, LineError> {
    if k < 3 {
        return Err(LineError::BadArity { k });
    }
    let n = v.len() as u64;
    if n < k {
        return Err(LineError::InfeasibleParameters(format!(
            "classification needs at least k = {k} points, got {n}"
        )));
    }
    if count_kap(v, k)? != sap_max(n, k) {
        return Ok(Classification::NotOptimal);
    }

    // Normalize up to direct similarity: smallest point to 0, smallest gap to 1.
    let pts = v.points();
    let min_gap = pts
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .expect("n >= k >= 3 points");
    let scaled: Vec<Rat> = pts.iter().map(|p| (p - &pts[0]) / &min_gap).collect();
    let ints: Vec<BigInt> = scaled
        .iter()
        .map(|p| {
            assert!(p.is_integer(), "optimal sets embed in the integers up to similarity");
            p.to_integer()
        })
        .collect();

    if k == 3 {
        return Ok(classify_three(&ints));
    }
    Ok(classify_higher(&ints, k))
}

fn classify_three(ints: &[BigInt]) -> Classification {
    let gaps: Vec<BigInt> = ints.windows(2).map(|w| &w[1] - &w[0]).collect();
    if gaps.iter().all(|g| g == &gaps[0]) {
        return Classification::Ap;
    }
    let evens: Vec<&BigInt> = ints.iter().filter(|p| !p.bit(0)).collect();
    let odds: Vec<&BigInt> = ints.iter().filter(|p| p.bit(0)).collect();
    let consecutive = |class: &[&BigInt]| {
        class.windows(2).all(|w| w[1] - w[0] == BigInt::from(2))
    };
    assert!(
        !evens.is_empty() && !odds.is_empty() && consecutive(&evens) && consecutive(&odds),
        "an optimal 3-progression set splits into two consecutive-parity progressions"
    );
    let bary = |class: &[&BigInt]| {
        let sum: BigInt = class.iter().copied().sum();
        Rat::new(sum, BigInt::from(class.len()))
    };
    let diff = bary(&odds) - bary(&evens);
    let (concentricity, reflected) = if diff == rat(0) {
        (Concentricity::Concentric, false)
    } else if diff == rat(1) {
        (Concentricity::NearlyConcentric, false)
    } else if diff == rat(-1) {
        (Concentricity::NearlyConcentric, true)
    } else {
        unreachable!("optimal 3-progression sets are concentric or nearly concentric")
    };
    Classification::Eo { e_size: evens.len(), o_size: odds.len(), concentricity, reflected }
}

fn classify_higher(ints: &[BigInt], k: u64) -> Classification {
    let n = ints.len() as u64;
    let gaps: Vec<BigInt> = ints.windows(2).map(|w| &w[1] - &w[0]).collect();
    let one = BigInt::one();
    let two = BigInt::from(2);
    if gaps.iter().all(|g| g == &one) {
        return Classification::Ap;
    }
    let all_ones_except = |skip: usize| gaps.iter().enumerate().all(|(i, g)| i == skip || g == &one);
    if gaps[0] == two && all_ones_except(0) {
        assert!(n % (k - 1) == 0, "drop variants are optimal only when k-1 divides n");
        return Classification::ApMinusSecond;
    }
    let last = gaps.len() - 1;
    if gaps[last] == two && all_ones_except(last) {
        assert!(n % (k - 1) == 0);
        return Classification::ApMinusPenultimate;
    }
    unreachable!("optimal sets for k >= 4 are progressions or single-drop progressions")
}
