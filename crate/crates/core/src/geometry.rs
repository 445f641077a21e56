//! Points, datasets and lexicographic ordering.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point in k-dimensional space. For musical data `coords[0]` is time and
/// `coords[1]` is pitch.
///
/// The derived ordering is lexicographic, which is the only order used
/// anywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison of two points of equal dimension.
pub fn lex_compare<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<Ordering> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(p.cmp(q))
}

/// A finite set of distinct points sharing one dimension.
///
/// Points are kept sorted, so equality is set equality and `points()[i]` gives
/// every point a stable index that the discovery and encoding code rely on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dataset<S> {
    dim: usize,
    points: Vec<Point<S>>,
}

impl<S: Scalar> Dataset<S> {
    /// Builds a dataset, rejecting points of the wrong dimension and duplicates.
    pub fn new(dim: usize, points: Vec<Point<S>>) -> Result<Self> {
        Self::check_dims(dim, &points)?;
        let mut points = points;
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
        Ok(Dataset { dim, points })
    }

    /// Builds a dataset, silently merging duplicate points. Used for set unions.
    pub fn from_points_dedup(dim: usize, points: Vec<Point<S>>) -> Result<Self> {
        Self::check_dims(dim, &points)?;
        let mut points = points;
        points.sort_unstable();
        points.dedup();
        Ok(Dataset { dim, points })
    }

    pub fn from_int_points<const K: usize>(points: &[[i64; K]]) -> Result<Self> {
        Self::new(K, points.iter().map(|p| Point::from_ints(p)).collect())
    }

    pub fn empty(dim: usize) -> Self {
        Dataset {
            dim,
            points: Vec::new(),
        }
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, points: Vec<Point<S>>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Dataset { dim, points }
    }

    fn check_dims(dim: usize, points: &[Point<S>]) -> Result<()> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "dataset dimension must be positive".into(),
            ));
        }
        match points.iter().find(|p| p.dim() != dim) {
            Some(p) => Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            }),
            None => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in ascending lexicographic order.
    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<S>> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point<S>> {
        self.points
    }

    pub fn contains(&self, p: &Point<S>) -> bool {
        self.index_of(p).is_some()
    }

    pub fn index_of(&self, p: &Point<S>) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn is_subset(&self, other: &Dataset<S>) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    pub fn union(&self, other: &Dataset<S>) -> Result<Dataset<S>> {
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        Dataset::from_points_dedup(self.dim, pts)
    }

    pub fn difference(&self, other: &Dataset<S>) -> Dataset<S> {
        let pts = self
            .points
            .iter()
            .filter(|p| !other.contains(p))
            .cloned()
            .collect();
        Dataset::from_sorted_unchecked(self.dim, pts)
    }

    /// Smallest and largest value of coordinate `axis`, or `None` when empty.
    pub fn extent(&self, axis: usize) -> Option<(S, S)> {
        let mut it = self.points.iter().map(|p| &p.coords[axis]);
        let first = it.next()?.clone();
        Some(it.fold((first.clone(), first), |(lo, hi), c| {
            (lo.min(c.clone()), hi.max(c.clone()))
        }))
    }
}

impl<'a, S> IntoIterator for &'a Dataset<S> {
    type Item = &'a Point<S>;
    type IntoIter = std::slice::Iter<'a, Point<S>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// All points of `d` in ascending lexicographic order.
pub fn sorted_points<S: Scalar>(d: &Dataset<S>) -> Vec<Point<S>> {
    d.points().to_vec()
}
