use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use patterncount_exact::{rat, Rat};

use crate::error::LineError;

/// A canonical line pattern: at least two points, smallest point 0, entries
/// coprime nonnegative integers.
///
/// Coordinates in this artifact are rational, so every representable pattern
/// is commensurable and the canonical integer form always exists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinePattern {
    points: Vec<Rat>,
}

/// The direct similarity `x -> scale * x + offset` (scale > 0) that maps the
/// canonical pattern back onto the input it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Similarity {
    pub scale: Rat,
    pub offset: Rat,
}

/// Result of [`normalize_pattern`].
#[derive(Debug, Clone)]
pub struct NormalizedPattern {
    pub pattern: LinePattern,
    pub transform: Similarity,
    /// Whether all gap ratios are rational. Always true for rational inputs;
    /// kept so reports can state it explicitly.
    pub commensurable: bool,
}

/// Translate the minimum to 0 and scale so the entries become coprime
/// integers; the returned transform maps the canonical form back to the
/// input points.
pub fn normalize_pattern(points: &[Rat]) -> Result<NormalizedPattern, LineError> {
    if points.len() < 2 {
        return Err(LineError::BadArity { k: points.len() as u64 });
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(LineError::DuplicatePoint(w[0].to_string()));
        }
    }
    let offset = sorted[0].clone();
    let shifted: Vec<Rat> = sorted.iter().map(|p| p - &offset).collect();

    // common denominator, then shared factor of the numerators
    let mut den_lcm = BigInt::one();
    for p in &shifted {
        den_lcm = den_lcm.lcm(p.denom());
    }
    let mut num_gcd = BigInt::zero();
    for p in &shifted {
        num_gcd = num_gcd.gcd(&(p.numer() * &den_lcm / p.denom()));
    }
    debug_assert!(num_gcd.is_positive());
    let scale = Rat::new(num_gcd.clone(), den_lcm.clone());
    let canonical: Vec<Rat> = shifted.iter().map(|p| p / &scale).collect();
    debug_assert!(canonical.iter().all(|p| p.is_integer()));

    Ok(NormalizedPattern {
        pattern: LinePattern { points: canonical },
        transform: Similarity { scale, offset },
        commensurable: true,
    })
}

impl LinePattern {
    /// Canonicalize arbitrary rational points into a pattern.
    pub fn new(points: Vec<Rat>) -> Result<Self, LineError> {
        Ok(normalize_pattern(&points)?.pattern)
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, LineError> {
        LinePattern::new(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn points(&self) -> &[Rat] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }

    /// Largest canonical entry (the span of the pattern).
    pub fn span(&self) -> &Rat {
        self.points.last().expect("patterns have at least two points")
    }

    /// The reflection of the pattern, canonicalized again.
    pub fn reflected(&self) -> LinePattern {
        let span = self.span().clone();
        let mut pts: Vec<Rat> = self.points.iter().map(|p| &span - p).collect();
        pts.sort();
        // reflection of a canonical pattern is already canonical
        LinePattern { points: pts }
    }

    /// Whether the pattern equals its own reflection (as with arithmetic
    /// progressions), in which case direct similarity and similarity count
    /// the same instances.
    pub fn is_reflection_symmetric(&self) -> bool {
        *self == self.reflected()
    }

    pub fn is_arithmetic_progression(&self) -> bool {
        let d = &self.points[1] - &self.points[0];
        self.points.windows(2).all(|w| &w[1] - &w[0] == d)
    }

    /// Number of terms of the enveloping arithmetic progression: the unique
    /// minimal-cardinality progression containing the pattern. In canonical
    /// form the gaps are coprime, so this is span + 1.
    pub fn enveloping_length(&self) -> u64 {
        use num_traits::ToPrimitive;
        let span = self.span();
        debug_assert!(span.is_integer());
        span.to_integer()
            .to_u64()
            .expect("pattern span exceeds u64")
            + 1
    }
}

impl std::fmt::Display for LinePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterncount_exact::ratio;

    #[test]
    fn normalizes_translation_and_scale() {
        // {5, 7, 11} -> {0, 1, 3} by translating -5 and scaling 1/2
        let n = normalize_pattern(&[rat(5), rat(7), rat(11)]).unwrap();
        assert_eq!(n.pattern, LinePattern::from_integers(&[0, 1, 3]).unwrap());
        assert_eq!(n.transform.scale, rat(2));
        assert_eq!(n.transform.offset, rat(5));
        assert!(n.commensurable);

        // canonical patterns are fixed points
        let fixed = normalize_pattern(&[rat(0), rat(1), rat(3)]).unwrap();
        assert_eq!(fixed.pattern.points(), &[rat(0), rat(1), rat(3)]);
        assert_eq!(fixed.transform.scale, rat(1));

        // two points always normalize to {0, 1}
        let pair = normalize_pattern(&[ratio(1, 3), ratio(-1, 2)]).unwrap();
        assert_eq!(pair.pattern.points(), &[rat(0), rat(1)]);
        assert!(pair.commensurable);
    }

    #[test]
    fn normalizes_rational_gaps() {
        let n = normalize_pattern(&[ratio(1, 2), ratio(5, 6), rat(2)]).unwrap();
        // gaps 1/3 and 7/6 -> integers {0, 2, 9}
        assert_eq!(n.pattern, LinePattern::from_integers(&[0, 2, 9]).unwrap());
        let back: Vec<Rat> = n
            .pattern
            .points()
            .iter()
            .map(|p| p * &n.transform.scale + &n.transform.offset)
            .collect();
        assert_eq!(back, vec![ratio(1, 2), ratio(5, 6), rat(2)]);
    }

    #[test]
    fn arity_and_duplicates_rejected() {
        assert!(matches!(normalize_pattern(&[rat(1)]), Err(LineError::BadArity { k: 1 })));
        assert!(matches!(
            normalize_pattern(&[rat(1), rat(1)]),
            Err(LineError::DuplicatePoint(_))
        ));
    }

    #[test]
    fn enveloping_lengths() {
        let p = LinePattern::from_integers(&[0, 1, 3]).unwrap();
        assert_eq!(p.enveloping_length(), 4);
        let ap = LinePattern::from_integers(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(ap.enveloping_length(), 5);
        // {0, 2, 6} canonicalizes to {0, 1, 3}: gcd 2, span 6
        let q = LinePattern::from_integers(&[0, 2, 6]).unwrap();
        assert_eq!(q.enveloping_length(), 4);
    }

    #[test]
    fn reflection() {
        let p = LinePattern::from_integers(&[0, 1, 3]).unwrap();
        assert_eq!(p.reflected(), LinePattern::from_integers(&[0, 2, 3]).unwrap());
        assert!(!p.is_reflection_symmetric());
        let ap = LinePattern::from_integers(&[2, 5, 8, 11]).unwrap();
        assert!(ap.is_reflection_symmetric());
        assert!(ap.is_arithmetic_progression());
    }
}
