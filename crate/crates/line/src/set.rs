use num_traits::Zero;
use patterncount_exact::{rat, Rat};

use crate::error::LineError;

/// A finite multiplicity-free subset of the line, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePointSet {
    points: Vec<Rat>,
}

impl LinePointSet {
    /// Sorts the input and rejects duplicates.
    pub fn new(mut points: Vec<Rat>) -> Result<Self, LineError> {
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(LineError::DuplicatePoint(w[0].to_string()));
            }
        }
        Ok(LinePointSet { points })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, LineError> {
        LinePointSet::new(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn empty() -> Self {
        LinePointSet { points: Vec::new() }
    }

    pub fn points(&self) -> &[Rat] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, value: &Rat) -> bool {
        self.points.binary_search(value).is_ok()
    }

    pub fn index_of(&self, value: &Rat) -> Option<usize> {
        self.points.binary_search(value).ok()
    }

    /// Image under `x -> a x + b` with `a != 0`; order is re-established when
    /// `a` is negative.
    pub fn transform(&self, a: &Rat, b: &Rat) -> Result<Self, LineError> {
        if a.is_zero() {
            return Err(LineError::InfeasibleParameters("similarity scale must be nonzero".into()));
        }
        LinePointSet::new(self.points.iter().map(|p| p * a + b).collect())
    }

    /// The set without its smallest point.
    pub fn without_leftmost(&self) -> Self {
        LinePointSet { points: self.points.iter().skip(1).cloned().collect() }
    }

    /// The set without its largest point.
    pub fn without_rightmost(&self) -> Self {
        let mut points = self.points.clone();
        points.pop();
        LinePointSet { points }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use patterncount_exact::ratio;

    #[test]
    fn sorts_and_rejects_duplicates() {
        let s = LinePointSet::new(vec![rat(3), rat(1), rat(2)]).unwrap();
        assert_eq!(s.points(), &[rat(1), rat(2), rat(3)]);
        assert!(matches!(
            LinePointSet::new(vec![rat(1), ratio(2, 2)]),
            Err(LineError::DuplicatePoint(_))
        ));
    }

    #[test]
    fn transform_reverses_for_negative_scale() {
        let s = LinePointSet::from_integers(&[0, 1, 3]).unwrap();
        let t = s.transform(&rat(-2), &rat(10)).unwrap();
        assert_eq!(t.points(), &[rat(4), rat(8), rat(10)]);
        assert!(s.transform(&rat(0), &rat(1)).is_err());
    }
}
