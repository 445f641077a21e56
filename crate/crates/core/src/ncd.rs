//! Normalized compression distance with the MTP encoder as compressor, and
//! nearest-neighbour classification on top of it.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::encoder::encode_point_set;
use crate::error::{Error, Result};
use crate::geometry::{Dataset, Point};
use crate::scalar::Scalar;
use crate::transform::TransformationClass;

/// `D1` followed by `D2` shifted along the time axis so that its first point
/// lands `gap` after the last point of `D1`.
pub fn build_pair_dataset<S: Scalar>(
    d1: &Dataset<S>,
    d2: &Dataset<S>,
    gap: &S,
) -> Result<Dataset<S>> {
    if d1.is_empty() || d2.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot pair an empty dataset".into(),
        ));
    }
    if d1.dim() != d2.dim() {
        return Err(Error::DimensionMismatch {
            expected: d1.dim(),
            found: d2.dim(),
        });
    }
    if !gap.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "gap must be positive, got {gap}"
        )));
    }
    let (_, end) = d1.extent(0).expect("non-empty");
    let (start, _) = d2.extent(0).expect("non-empty");
    let shift = end - start + gap.clone();
    let mut pts = d1.points().to_vec();
    pts.extend(d2.iter().map(|p| {
        let mut c = p.coords().to_vec();
        c[0] = c[0].clone() + shift.clone();
        Point::new(c)
    }));
    Dataset::new(d1.dim(), pts)
}

/// `(C(xy) − min(C(x), C(y))) / max(C(x), C(y))` from description lengths.
pub fn ncd_from_lengths(cx: usize, cy: usize, cxy: usize) -> Ratio<i64> {
    let (lo, hi) = (cx.min(cy) as i64, cx.max(cy) as i64);
    if hi == 0 {
        return Ratio::from_integer(0);
    }
    Ratio::new(cxy as i64 - lo, hi)
}

/// Encoder settings shared by every compression in a distance computation.
#[derive(Clone, Debug)]
pub struct NcdConfig<S> {
    pub class: TransformationClass,
    pub min_size: usize,
    pub gap: S,
}

impl<S: Scalar> NcdConfig<S> {
    pub fn new(class: TransformationClass) -> Self {
        NcdConfig {
            class,
            min_size: 1,
            gap: S::one(),
        }
    }

    /// Description length of the encoding of `d`.
    pub fn compress(&self, d: &Dataset<S>) -> Result<usize> {
        Ok(encode_point_set(d, self.class, self.min_size)?.description_length())
    }
}

pub fn ncd<S: Scalar>(
    d1: &Dataset<S>,
    d2: &Dataset<S>,
    config: &NcdConfig<S>,
) -> Result<Ratio<i64>> {
    let pair = build_pair_dataset(d1, d2, &config.gap)?;
    Ok(ncd_from_lengths(
        config.compress(d1)?,
        config.compress(d2)?,
        config.compress(&pair)?,
    ))
}

/// Pairwise distances. Row `i` holds the distances from query `i`; the
/// diagonal is zero and never consulted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    pub entries: Vec<Vec<Ratio<i64>>>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Ratio<i64> {
        &self.entries[i][j]
    }
}

/// Everything computed while filling a distance matrix.
#[derive(Clone, Debug)]
pub struct CorpusAnalysis {
    pub matrix: DistanceMatrix,
    /// `k|D|` and DL for each item.
    pub singles: Vec<(usize, usize)>,
    /// `k|D|` and DL for each unordered pair `i < j`, row by row.
    pub pairs: Vec<(usize, usize)>,
    pub encoder_calls: usize,
}

impl CorpusAnalysis {
    /// Mean compression factor over the items.
    pub fn mean_item_cf(&self) -> f64 {
        mean_cf(&self.singles)
    }

    /// Mean compression factor over the pair datasets.
    pub fn mean_pair_cf(&self) -> f64 {
        mean_cf(&self.pairs)
    }
}

fn mean_cf(lengths: &[(usize, usize)]) -> f64 {
    if lengths.is_empty() {
        return f64::NAN;
    }
    let total: f64 = lengths
        .iter()
        .map(|&(ext, dl)| if dl == 0 { 1.0 } else { ext as f64 / dl as f64 })
        .sum();
    total / lengths.len() as f64
}

/// Distance matrix with every item compressed once and every unordered pair
/// once. The pair built from `(i, j)`, `i < j`, serves both `[i][j]` and
/// `[j][i]`.
pub fn distance_matrix<S: Scalar>(
    items: &[Dataset<S>],
    config: &NcdConfig<S>,
) -> Result<CorpusAnalysis> {
    distance_matrix_with(items, config.gap.clone(), |d| {
        let e = encode_point_set(d, config.class, config.min_size)?;
        Ok(e.description_length())
    })
}

/// [`distance_matrix`] with an arbitrary compressor mapping a dataset to its
/// description length.
pub fn distance_matrix_with<S, C>(
    items: &[Dataset<S>],
    gap: S,
    compress: C,
) -> Result<CorpusAnalysis>
where
    S: Scalar,
    C: Fn(&Dataset<S>) -> Result<usize> + Sync,
{
    if items.is_empty() {
        return Err(Error::InvalidArgument("empty corpus".into()));
    }
    let calls = AtomicUsize::new(0);
    let counted = |d: &Dataset<S>| {
        calls.fetch_add(1, Ordering::Relaxed);
        compress(d)
    };
    let singles: Vec<usize> = items.par_iter().map(&counted).collect::<Result<_>>()?;
    let m = items.len();
    let jobs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<(usize, usize)> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let pair = build_pair_dataset(&items[i], &items[j], &gap)?;
            Ok((pair.dim() * pair.len(), counted(&pair)?))
        })
        .collect::<Result<_>>()?;

    let mut entries = vec![vec![Ratio::from_integer(0); m]; m];
    for (&(i, j), &(_, cxy)) in jobs.iter().zip(&pairs) {
        let d = ncd_from_lengths(singles[i], singles[j], cxy);
        entries[i][j] = d;
        entries[j][i] = d;
    }
    Ok(CorpusAnalysis {
        matrix: DistanceMatrix { entries },
        singles: items
            .iter()
            .zip(&singles)
            .map(|(d, &c)| (d.dim() * d.len(), c))
            .collect(),
        pairs,
        encoder_calls: calls.into_inner(),
    })
}

/// Index of the nearest other item for each query, ties going to the
/// smallest index.
pub fn nearest_neighbours<T: PartialOrd>(entries: &[Vec<T>]) -> Vec<usize> {
    let m = entries.len();
    (0..m)
        .map(|i| {
            let mut best: Option<usize> = None;
            for j in (0..m).filter(|&j| j != i) {
                if best.is_none_or(|b| entries[i][j] < entries[i][b]) {
                    best = Some(j);
                }
            }
            best.unwrap_or(i)
        })
        .collect()
}

/// Leave-one-out 1-NN success rate.
pub fn one_nn_loocv<L: PartialEq>(matrix: &DistanceMatrix, labels: &[L]) -> Result<f64> {
    let m = matrix.size();
    if labels.len() != m || m < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least two items with one label each, got {m} items and {} labels",
            labels.len()
        )));
    }
    let nn = nearest_neighbours(&matrix.entries);
    let hits = (0..m).filter(|&i| labels[nn[i]] == labels[i]).count();
    Ok(hits as f64 / m as f64)
}
