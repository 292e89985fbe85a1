use patterncount_exact::Point2;

use crate::error::PlaneError;

/// A finite set of distinct plane points, stored sorted under the
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePointSet {
    points: Vec<Point2>,
}

impl PlanePointSet {
    /// Sorts the input and rejects exact duplicates.
    pub fn new(mut points: Vec<Point2>) -> Result<Self, PlaneError> {
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(PlaneError::DuplicatePoint(w[0].to_string()));
            }
        }
        Ok(PlanePointSet { points })
    }

    pub fn empty() -> Self {
        PlanePointSet { points: Vec::new() }
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn translate(&self, t: &Point2) -> Self {
        // translation preserves the lexicographic order
        PlanePointSet { points: self.points.iter().map(|p| p + t).collect() }
    }

    /// Image under multiplication by zeta6 (rotation by 60 degrees).
    pub fn rotate_zeta6(&self) -> Self {
        let mut points: Vec<Point2> = self.points.iter().map(|p| p.mul_zeta6()).collect();
        points.sort();
        PlanePointSet { points }
    }
}
