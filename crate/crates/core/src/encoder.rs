//! Lossless compressed encodings built from MTP occurrence sets.
//!
//! The pipeline indexes the discovered MTPs by pattern size, merges MTPs that
//! share a pattern into occurrence sets, augments each occurrence set with the
//! transformations of the strictly larger patterns containing it, prunes
//! redundant transformations, and finally picks occurrence sets greedily in
//! order of compression factor. Points left uncovered form a residual set that
//! is stored extensionally.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::discovery::{discover, resolve_indices, MtpRecord};
use crate::error::{Error, Result};
use crate::geometry::{Dataset, Point};
use crate::scalar::Scalar;
use crate::transform::{simplicity_order, Transformation, TransformationClass};

/// A pattern together with the transformations that map it onto its other
/// occurrences. Transformations are kept sorted and unique.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OccurrenceSet<S> {
    pub pattern: Dataset<S>,
    pub transformations: Vec<Transformation<S>>,
}

impl<S: Scalar> OccurrenceSet<S> {
    pub fn new(pattern: Dataset<S>, mut transformations: Vec<Transformation<S>>) -> Self {
        transformations.sort();
        transformations.dedup();
        OccurrenceSet {
            pattern,
            transformations,
        }
    }

    pub fn covered_set(&self) -> Result<Dataset<S>> {
        covered_set(self)
    }
}

/// `P ∪ ⋃ f(P)` over the transformations of `os`.
pub fn covered_set<S: Scalar>(os: &OccurrenceSet<S>) -> Result<Dataset<S>> {
    let mut pts = os.pattern.points().to_vec();
    for f in &os.transformations {
        for p in &os.pattern {
            pts.push(f.apply(p)?);
        }
    }
    Dataset::from_points_dedup(os.pattern.dim(), pts)
}

/// Number of values needed to write `os` down: `k` per pattern point and `K`
/// per transformation.
pub fn description_length<S: Scalar>(os: &OccurrenceSet<S>, k: usize, complexity: usize) -> usize {
    k * os.pattern.len() + complexity * os.transformations.len()
}

/// `k·|COV(os)| / description_length(os)`, exactly.
pub fn compression_factor<S: Scalar>(
    os: &OccurrenceSet<S>,
    k: usize,
    complexity: usize,
) -> Result<Ratio<u64>> {
    let cov = covered_set(os)?.len();
    Ok(ratio(k * cov, description_length(os, k, complexity)))
}

fn ratio(num: usize, den: usize) -> Ratio<u64> {
    if den == 0 {
        return Ratio::from_integer(1);
    }
    Ratio::new(num as u64, den as u64)
}

/// Items bucketed by pattern size. `by_size[m]` holds the items whose pattern
/// has `m` points, sorted by pattern; `sizes` lists the occupied buckets in
/// ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SizeIndex<T> {
    pub by_size: Vec<Vec<T>>,
    pub sizes: Vec<usize>,
}

impl<T> SizeIndex<T> {
    /// Builds an index from buckets already sorted by pattern.
    pub fn from_buckets(by_size: Vec<Vec<T>>) -> Self {
        let sizes = (0..by_size.len())
            .filter(|&m| !by_size[m].is_empty())
            .collect();
        SizeIndex { by_size, sizes }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.sizes.iter().flat_map(move |&m| self.by_size[m].iter())
    }

    pub fn len(&self) -> usize {
        self.sizes.iter().map(|&m| self.by_size[m].len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }
}

/// Buckets MTPs by pattern size. Within a bucket, records sharing a pattern
/// end up adjacent.
pub fn index_mtps<S: Scalar>(mtps: Vec<MtpRecord<S>>, n: usize) -> SizeIndex<MtpRecord<S>> {
    let mut by_size: Vec<Vec<MtpRecord<S>>> = (0..=n).map(|_| Vec::new()).collect();
    for m in mtps {
        let size = m.pattern.len();
        if size >= by_size.len() {
            by_size.resize_with(size + 1, Vec::new);
        }
        by_size[size].push(m);
    }
    for bucket in &mut by_size {
        bucket.sort_by(|a, b| {
            a.pattern
                .points()
                .cmp(b.pattern.points())
                .then_with(|| a.transformation.cmp(&b.transformation))
        });
    }
    SizeIndex::from_buckets(by_size)
}

/// Collapses each run of same-pattern MTPs into one occurrence set.
pub fn merge_mtps<S: Scalar>(index: SizeIndex<MtpRecord<S>>) -> SizeIndex<OccurrenceSet<S>> {
    let by_size = index
        .by_size
        .into_iter()
        .map(|bucket| {
            let mut out: Vec<OccurrenceSet<S>> = Vec::new();
            for m in bucket {
                match out.last_mut() {
                    Some(os) if os.pattern == m.pattern => {
                        os.transformations.push(m.transformation)
                    }
                    _ => out.push(OccurrenceSet {
                        pattern: m.pattern,
                        transformations: vec![m.transformation],
                    }),
                }
            }
            out.into_iter()
                .map(|os| OccurrenceSet::new(os.pattern, os.transformations))
                .collect()
        })
        .collect();
    SizeIndex::from_buckets(by_size)
}

/// Augments every occurrence set with the transformations of the strictly
/// larger patterns that contain it, then deduplicates and sorts each bucket,
/// prunes redundant transformations and drops sets left without any.
pub fn compute_occurrence_sets<S: Scalar>(
    index: SizeIndex<OccurrenceSet<S>>,
) -> Result<SizeIndex<OccurrenceSet<S>>> {
    let mut by_size = augment_occurrence_sets(index).by_size;
    for bucket in &mut by_size {
        bucket.sort_by(|a, b| {
            a.pattern
                .points()
                .cmp(b.pattern.points())
                .then_with(|| a.transformations.cmp(&b.transformations))
        });
        bucket.dedup();
        let pruned: Vec<OccurrenceSet<S>> = std::mem::take(bucket)
            .into_par_iter()
            .map(remove_redundant_transformations)
            .collect::<Result<_>>()?;
        *bucket = pruned
            .into_iter()
            .filter(|os| !os.transformations.is_empty())
            .collect();
    }
    Ok(SizeIndex::from_buckets(by_size))
}

/// The augmentation step on its own: each set gains the transformations of
/// every strictly larger pattern containing its own.
pub fn augment_occurrence_sets<S: Scalar>(
    index: SizeIndex<OccurrenceSet<S>>,
) -> SizeIndex<OccurrenceSet<S>> {
    let augmented = augment(&index);
    let mut by_size = index.by_size;
    for (m, extra) in augmented {
        for (os, t) in by_size[m].iter_mut().zip(extra) {
            if !t.is_empty() {
                os.transformations.extend(t);
                os.transformations.sort();
                os.transformations.dedup();
            }
        }
    }
    SizeIndex::from_buckets(by_size)
}

/// For every bucket, the transformations each of its sets inherits from
/// strict supersets.
fn augment<S: Scalar>(
    index: &SizeIndex<OccurrenceSet<S>>,
) -> Vec<(usize, Vec<Vec<Transformation<S>>>)> {
    // Occurrence sets containing each point, larger patterns first.
    let mut postings: HashMap<&Point<S>, Vec<(usize, usize)>> = HashMap::new();
    for &m in index.sizes.iter().rev() {
        for (pos, os) in index.by_size[m].iter().enumerate() {
            for p in &os.pattern {
                postings.entry(p).or_default().push((m, pos));
            }
        }
    }
    index
        .sizes
        .iter()
        .map(|&m| {
            let extra = index.by_size[m]
                .par_iter()
                .map(|os| {
                    let Some(rarest) = os
                        .pattern
                        .iter()
                        .map(|p| &postings[p])
                        .min_by_key(|list| list.len())
                    else {
                        return Vec::new();
                    };
                    let mut t = Vec::new();
                    for &(size, pos) in rarest {
                        if size <= m {
                            break;
                        }
                        let q = &index.by_size[size][pos];
                        if is_sorted_subset(os.pattern.points(), q.pattern.points()) {
                            t.extend(q.transformations.iter().cloned());
                        }
                    }
                    t
                })
                .collect();
            (m, extra)
        })
        .collect()
}

/// Subset test on two ascending point lists by a single merge pass.
fn is_sorted_subset<T: Ord>(small: &[T], large: &[T]) -> bool {
    let mut it = large.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            match y.cmp(x) {
                Ordering::Less => continue,
                Ordering::Equal => continue 'outer,
                Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Prunes `T` without changing the covered set. Of several transformations
/// with the same image only the simplest is kept; the rest are then visited
/// from most to least complex and dropped whenever every point of their image
/// is still covered by the pattern or another image.
pub fn remove_redundant_transformations<S: Scalar>(
    os: OccurrenceSet<S>,
) -> Result<OccurrenceSet<S>> {
    let OccurrenceSet {
        pattern,
        transformations,
    } = os;
    let mut by_image: HashMap<Vec<Point<S>>, Transformation<S>> = HashMap::new();
    for f in transformations {
        let mut image = pattern
            .iter()
            .map(|p| f.apply(p))
            .collect::<Result<Vec<_>>>()?;
        image.sort();
        match by_image.get_mut(&image) {
            Some(g) if simplicity_order(&f, g) == Ordering::Less => *g = f,
            Some(_) => {}
            None => {
                by_image.insert(image, f);
            }
        }
    }
    let mut kept: Vec<(Transformation<S>, Vec<Point<S>>)> =
        by_image.into_iter().map(|(image, f)| (f, image)).collect();
    kept.sort_by(|a, b| simplicity_order(&b.0, &a.0));

    let own: HashSet<&Point<S>> = pattern.iter().collect();
    let mut cover: HashMap<Point<S>, usize> = HashMap::new();
    for (_, image) in &kept {
        for q in image {
            *cover.entry(q.clone()).or_default() += 1;
        }
    }
    let mut survivors = Vec::with_capacity(kept.len());
    for (f, image) in kept {
        if image.iter().all(|q| own.contains(q) || cover[q] > 1) {
            for q in &image {
                *cover.get_mut(q).expect("counted above") -= 1;
            }
        } else {
            survivors.push(f);
        }
    }
    Ok(OccurrenceSet::new(pattern, survivors))
}

/// Flattens the index into preference order: compression factor descending,
/// then coverage descending, then pattern ascending. Sets that do not
/// compress are left out.
pub fn sort_occurrence_sets<S: Scalar>(
    index: SizeIndex<OccurrenceSet<S>>,
    k: usize,
    complexity: usize,
) -> Result<Vec<OccurrenceSet<S>>> {
    let sizes = index.sizes;
    let mut by_size = index.by_size;
    let all: Vec<OccurrenceSet<S>> = sizes
        .iter()
        .flat_map(|&m| std::mem::take(&mut by_size[m]))
        .collect();
    let mut keyed: Vec<(Ratio<u64>, usize, OccurrenceSet<S>)> = all
        .into_par_iter()
        .map(|os| {
            let cov = covered_set(&os)?.len();
            Ok((
                ratio(k * cov, description_length(&os, k, complexity)),
                cov,
                os,
            ))
        })
        .collect::<Result<_>>()?;
    keyed.retain(|(cf, _, _)| *cf > Ratio::from_integer(1));
    keyed.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then_with(|| b.1.cmp(&a.1))
            .then_with(|| a.2.pattern.points().cmp(b.2.pattern.points()))
    });
    Ok(keyed.into_iter().map(|(_, _, os)| os).collect())
}

/// A dataset written as occurrence sets plus the points none of them cover.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Encoding<S> {
    pub class: TransformationClass,
    pub dim: usize,
    pub occurrence_sets: Vec<OccurrenceSet<S>>,
    pub residual: Dataset<S>,
}

impl<S: Scalar> Encoding<S> {
    pub fn description_length(&self) -> usize {
        let k = self.dim;
        let complexity = self.class.complexity();
        self.occurrence_sets
            .iter()
            .map(|os| description_length(os, k, complexity))
            .sum::<usize>()
            + k * self.residual.len()
    }

    /// Number of values in the plain listing of the encoded points.
    pub fn extensional_length(&self) -> Result<usize> {
        Ok(self.dim * decode(self)?.len())
    }

    pub fn compression_factor(&self) -> Result<Ratio<u64>> {
        Ok(ratio(self.extensional_length()?, self.description_length()))
    }

    pub fn decode(&self) -> Result<Dataset<S>> {
        decode(self)
    }
}

/// Greedy cover. An occurrence set is admitted only if its description is
/// shorter than the plain listing of the points it adds; whatever remains
/// uncovered becomes the residual.
pub fn compute_encoding<S: Scalar>(
    sorted: Vec<OccurrenceSet<S>>,
    d: &Dataset<S>,
    class: TransformationClass,
) -> Result<Encoding<S>> {
    let k = d.dim();
    let complexity = class.complexity();
    let mut covered: HashSet<Point<S>> = HashSet::new();
    let mut chosen = Vec::new();
    for os in sorted {
        let len = description_length(&os, k, complexity);
        let fresh: Vec<Point<S>> = covered_set(&os)?
            .into_points()
            .into_iter()
            .filter(|p| !covered.contains(p))
            .collect();
        if len < k * fresh.len() {
            covered.extend(fresh);
            chosen.push(os);
        }
    }
    let residual = d
        .iter()
        .filter(|p| !covered.contains(*p))
        .cloned()
        .collect();
    Ok(Encoding {
        class,
        dim: k,
        occurrence_sets: chosen,
        residual: Dataset::from_sorted_unchecked(k, residual),
    })
}

/// Discovers the MTPs of `d` and encodes `d` with them.
///
/// MTPs of at most `K/k` points are skipped up front: an occurrence set on
/// such a pattern can never compress, and it only ever passes
/// transformations on to smaller patterns, so dropping it does not change
/// the result.
pub fn encode_point_set<S: Scalar>(
    d: &Dataset<S>,
    class: TransformationClass,
    min_size: usize,
) -> Result<Encoding<S>> {
    let k = class.dimension();
    if d.is_empty() {
        return Ok(Encoding {
            class,
            dim: k,
            occurrence_sets: Vec::new(),
            residual: Dataset::empty(k),
        });
    }
    let threshold = min_size.max(class.complexity() / k + 1);
    let mtps: Vec<MtpRecord<S>> = discover(d, class, min_size)?
        .into_iter()
        .filter(|m| m.pattern.len() >= threshold)
        .map(|m| MtpRecord {
            pattern: resolve_indices(d, &m.pattern),
            transformation: m.transformation,
        })
        .collect();
    let index = index_mtps(mtps, d.len());
    let occurrence_sets = compute_occurrence_sets(merge_mtps(index))?;
    let sorted = sort_occurrence_sets(occurrence_sets, k, class.complexity())?;
    compute_encoding(sorted, d, class)
}

/// Rebuilds the dataset an encoding describes.
pub fn decode<S: Scalar>(e: &Encoding<S>) -> Result<Dataset<S>> {
    let mut pts: Vec<Point<S>> = e.residual.points().to_vec();
    for os in &e.occurrence_sets {
        if os.pattern.dim() != e.dim {
            return Err(Error::DimensionMismatch {
                expected: e.dim,
                found: os.pattern.dim(),
            });
        }
        for f in &os.transformations {
            if f.class() != e.class {
                return Err(Error::ClassMismatch {
                    left: e.class.id().to_string(),
                    right: f.class().id().to_string(),
                });
            }
        }
        pts.extend(covered_set(os)?.into_points());
    }
    Dataset::from_points_dedup(e.dim, pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::maximal_transformable_patterns;
    use crate::Rational;
    use TransformationClass::*;

    fn ds(pts: &[[i64; 2]]) -> Dataset<Rational> {
        Dataset::from_int_points(pts).unwrap()
    }

    fn t(class: TransformationClass, s: &[i64]) -> Transformation<Rational> {
        Transformation::from_ints(class, s).unwrap()
    }

    fn os(pattern: &[[i64; 2]], ts: Vec<Transformation<Rational>>) -> OccurrenceSet<Rational> {
        OccurrenceSet::new(ds(pattern), ts)
    }

    const AUGMENTATION: [[i64; 2]; 6] = [[0, 0], [1, 2], [2, 1], [4, 0], [6, 2], [8, 1]];

    #[test]
    fn covered_sets() {
        assert_eq!(os(&[[0, 0]], vec![]).covered_set().unwrap(), ds(&[[0, 0]]));
        assert_eq!(
            os(&[[0, 0]], vec![t(Translation, &[1, 0])])
                .covered_set()
                .unwrap(),
            ds(&[[0, 0], [1, 0]])
        );
        let stretched = os(
            &[[0, 0], [1, 2], [2, 1]],
            vec![t(ScaleTranslationReflection, &[2, 4, 0, 1])],
        );
        assert_eq!(stretched.covered_set().unwrap(), ds(&AUGMENTATION));
    }

    #[test]
    fn description_lengths() {
        let stretched = os(
            &[[0, 0], [1, 2], [2, 1]],
            vec![t(ScaleTranslationReflection, &[2, 4, 0, 1])],
        );
        assert_eq!(description_length(&stretched, 2, 4), 10);
        assert_eq!(
            description_length(&os(&[[0, 0], [1, 1], [2, 2]], vec![]), 2, 4),
            6
        );
        assert_eq!(
            description_length(&os(&[[0, 0]], vec![t(Translation, &[1, 0])]), 2, 2),
            4
        );
        assert_eq!(
            compression_factor(&stretched, 2, 4).unwrap(),
            Ratio::new(6, 5)
        );
    }

    #[test]
    fn indexing_and_merging() {
        let empty = index_mtps::<Rational>(Vec::new(), 4);
        assert!(empty.sizes.is_empty());
        assert_eq!(empty.by_size.len(), 5);

        let rec = |s: &[i64], p: &[[i64; 2]]| MtpRecord {
            transformation: t(Translation, s),
            pattern: ds(p),
        };
        let idx = index_mtps(
            vec![
                rec(&[5, 0], &[[0, 0], [1, 0], [2, 0]]),
                rec(&[1, 0], &[[0, 0]]),
                rec(&[2, 0], &[[3, 0]]),
                rec(&[3, 0], &[[0, 0]]),
            ],
            4,
        );
        assert_eq!(idx.sizes, vec![1, 3]);
        assert_eq!(idx.by_size[1][0].pattern, idx.by_size[1][1].pattern);

        let merged = merge_mtps(idx);
        assert_eq!(merged.by_size[1].len(), 2);
        assert_eq!(
            merged.by_size[1][0],
            os(
                &[[0, 0]],
                vec![t(Translation, &[1, 0]), t(Translation, &[3, 0])]
            )
        );
        assert_eq!(merged.by_size[3].len(), 1);
    }

    #[test]
    fn augmentation_inherits_from_supersets() {
        let small = os(&[[0, 0]], vec![t(Translation, &[1, 0])]);
        let large = os(&[[0, 0], [0, 1]], vec![t(Translation, &[5, 5])]);
        let unrelated = os(&[[7, 7], [8, 8]], vec![t(Translation, &[9, 9])]);
        let index =
            SizeIndex::from_buckets(vec![vec![], vec![small], vec![large.clone(), unrelated]]);
        let out = compute_occurrence_sets(index).unwrap();
        assert_eq!(
            out.by_size[1][0].transformations,
            vec![t(Translation, &[1, 0]), t(Translation, &[5, 5])]
        );
        assert_eq!(out.by_size[2][0], large);
    }

    #[test]
    fn equal_images_keep_the_simpler_transformation() {
        let horizontal = os(
            &[[0, 0], [1, 0]],
            vec![
                t(TranslationReflection, &[2, 0, 1]),
                t(TranslationReflection, &[2, 0, -1]),
            ],
        );
        let pruned = remove_redundant_transformations(horizontal).unwrap();
        assert_eq!(
            pruned.transformations,
            vec![t(TranslationReflection, &[2, 0, 1])]
        );

        let lone = os(&[[0, 0]], vec![t(Translation, &[3, 0])]);
        assert_eq!(
            remove_redundant_transformations(lone.clone()).unwrap(),
            lone
        );
    }

    #[test]
    fn images_covered_by_others_are_dropped() {
        // ⟨2,0⟩ maps {0,1} to {2,3}, already covered by the pattern and ⟨1,0⟩ ∪ ⟨3,0⟩.
        let p = [[0, 0], [1, 0]];
        let set = os(
            &p,
            vec![
                t(Translation, &[1, 0]),
                t(Translation, &[2, 0]),
                t(Translation, &[3, 0]),
            ],
        );
        let before = set.covered_set().unwrap();
        let pruned = remove_redundant_transformations(set).unwrap();
        assert_eq!(
            pruned.transformations,
            vec![t(Translation, &[1, 0]), t(Translation, &[3, 0])]
        );
        assert_eq!(pruned.covered_set().unwrap(), before);
    }

    #[test]
    fn self_maps_are_removed() {
        let d = ds(&[[0, 0], [1, 2], [2, 1], [3, 1], [4, 2], [5, 0]]);
        let set = OccurrenceSet::new(d, vec![t(ScaleTranslationReflection, &[-1, 5, 0, 1])]);
        assert!(remove_redundant_transformations(set)
            .unwrap()
            .transformations
            .is_empty());
    }

    #[test]
    fn sorting_prefers_compression_then_coverage_then_pattern() {
        let a = os(&[[0, 0], [1, 0], [2, 0]], vec![t(Translation, &[10, 0])]); // 12/8
        let b = os(
            &[[0, 5], [1, 5]],
            vec![t(Translation, &[0, 1]), t(Translation, &[0, 2])],
        ); // 12/8
        let c = os(&[[0, 9], [1, 9]], vec![t(Translation, &[0, 1])]); // 8/6
        let d = os(
            &[[0, 20], [1, 21], [2, 22], [3, 23]],
            vec![t(Translation, &[50, 0])],
        ); // 16/10
        let e = os(&[[0, 30]], vec![t(Translation, &[1, 0])]); // 4/4, dropped
        let index = SizeIndex::from_buckets(vec![
            vec![],
            vec![e],
            vec![b.clone(), c.clone()],
            vec![a.clone()],
            vec![d.clone()],
        ]);
        let sorted = sort_occurrence_sets(index, 2, 2).unwrap();
        assert_eq!(sorted, vec![d, a, b, c]);
    }

    #[test]
    fn gate_is_strict() {
        // DL 8 against 4 fresh points: not admitted.
        let d = ds(&[[0, 0], [1, 0], [2, 0], [3, 0]]);
        let line = os(&[[0, 0], [1, 0], [2, 0]], vec![t(Translation, &[1, 0])]);
        let e = compute_encoding(vec![line], &d, Translation).unwrap();
        assert!(e.occurrence_sets.is_empty());
        assert_eq!(e.residual, d);
        assert_eq!(e.description_length(), 8);
    }

    #[test]
    fn augmentation_fixture() {
        let d = ds(&AUGMENTATION);
        let e = encode_point_set(&d, ScaleTranslationReflection, 1).unwrap();
        assert_eq!(e.description_length(), 10);
        assert_eq!(e.extensional_length().unwrap(), 12);
        assert_eq!(e.compression_factor().unwrap(), Ratio::new(6, 5));
        assert_eq!(e.occurrence_sets.len(), 1);
        assert!(e.residual.is_empty());
        assert_eq!(e.decode().unwrap(), d);
    }

    #[test]
    fn line_fixture() {
        let d = ds(&[[0, 0], [1, 0], [2, 0], [3, 0]]);
        let e = encode_point_set(&d, Translation, 1).unwrap();
        assert!(e.description_length() <= 8);
        assert_eq!(e.decode().unwrap(), d);
    }

    #[test]
    fn trivial_encodings() {
        let single = ds(&[[3, 4]]);
        let e = encode_point_set(&single, Translation, 1).unwrap();
        assert!(e.occurrence_sets.is_empty());
        assert_eq!(e.residual, single);
        assert_eq!(e.description_length(), 2);

        let empty = Dataset::<Rational>::empty(2);
        let e = encode_point_set(&empty, ScaleTranslationReflection, 1).unwrap();
        assert_eq!(e.decode().unwrap(), empty);
        assert_eq!(e.description_length(), 0);
    }

    #[test]
    fn decode_rejects_mixed_classes() {
        let e = Encoding {
            class: Translation,
            dim: 2,
            occurrence_sets: vec![os(&[[0, 0]], vec![t(TranslationReflection, &[1, 0, 1])])],
            residual: Dataset::empty(2),
        };
        assert!(e.decode().is_err());
    }

    #[test]
    fn skipping_small_patterns_matches_the_full_pipeline() {
        let d = ds(&[
            [0, 0],
            [1, 2],
            [2, 1],
            [3, 0],
            [4, 2],
            [5, 1],
            [7, 3],
            [8, 1],
            [9, 0],
        ]);
        for class in TransformationClass::ALL {
            let full = maximal_transformable_patterns(&d, class, 1).unwrap();
            let index = compute_occurrence_sets(merge_mtps(index_mtps(full, d.len()))).unwrap();
            let sorted = sort_occurrence_sets(index, 2, class.complexity()).unwrap();
            let reference = compute_encoding(sorted, &d, class).unwrap();
            assert_eq!(
                encode_point_set(&d, class, 1).unwrap(),
                reference,
                "{class}"
            );
        }
    }

    #[test]
    fn subset_merge() {
        assert!(is_sorted_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[1, 2, 3]));
        assert!(is_sorted_subset::<i32>(&[], &[1]));
        assert!(!is_sorted_subset(&[0], &[1]));
    }
}
