//! Maximal transformable pattern (MTP) discovery.
//!
//! For a transformation `f`, the MTP of `f` in a dataset `D` is the set of
//! points of `D` that `f` maps into `D`, i.e. `D ∩ f⁻¹(D)`. Discovery works on
//! bases: every member of the class that maps one basis of `D` onto another is
//! collected together with the two bases, the list is sorted by
//! transformation, and each run of equal transformations is merged into the
//! union of its bases. For translations this is exactly SIA.
//!
//! The quadratic pairing of bases dominates the cost, so the object bases are
//! split into chunks handled by the rayon pool. Each chunk sorts and collapses
//! its own list and the chunk lists are combined with a multiway merge.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Dataset, Point};
use crate::scalar::Scalar;
use crate::transform::{Transformation, TransformationClass};

/// A transformation together with its maximal transformable pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MtpRecord<S> {
    pub transformation: Transformation<S>,
    pub pattern: Dataset<S>,
}

/// An MTP whose pattern is held as ascending indices into the sorted points of
/// its dataset. This is the form the encoder works with.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndexedMtp<S> {
    pub transformation: Transformation<S>,
    pub pattern: Vec<u32>,
}

impl<S: Scalar> IndexedMtp<S> {
    pub fn resolve(&self, d: &Dataset<S>) -> MtpRecord<S> {
        MtpRecord {
            transformation: self.transformation.clone(),
            pattern: resolve_indices(d, &self.pattern),
        }
    }
}

pub(crate) fn resolve_indices<S: Scalar>(d: &Dataset<S>, indices: &[u32]) -> Dataset<S> {
    let pts = indices
        .iter()
        .map(|&i| d.points()[i as usize].clone())
        .collect();
    Dataset::from_sorted_unchecked(d.dim(), pts)
}

/// Every β-combination of a dataset's points. Each basis lists point indices
/// in ascending (hence lexicographic) order and the bases themselves are in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisTable {
    beta: usize,
    bases: Vec<Vec<u32>>,
}

impl BasisTable {
    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn indices(&self) -> &[Vec<u32>] {
        &self.bases
    }

    /// The bases as point sequences.
    pub fn points<S: Scalar>(&self, d: &Dataset<S>) -> Vec<Vec<Point<S>>> {
        self.bases
            .iter()
            .map(|b| b.iter().map(|&i| d.points()[i as usize].clone()).collect())
            .collect()
    }
}

pub fn compute_object_bases<S: Scalar>(d: &Dataset<S>, beta: usize) -> Result<BasisTable> {
    if beta == 0 || beta > d.len() {
        return Err(Error::BasisSize {
            beta,
            points: d.len(),
        });
    }
    let bases = (0..d.len() as u32).combinations(beta).collect();
    Ok(BasisTable { beta, bases })
}

/// All `beta!` orderings of `0..beta`, in lexicographic order.
pub fn permutation_index_sequences(beta: usize) -> Vec<Vec<usize>> {
    (0..beta).permutations(beta).collect()
}

/// All MTPs of size at least `min_size` for non-identity members of `class`,
/// sorted by transformation.
pub fn maximal_transformable_patterns<S: Scalar>(
    d: &Dataset<S>,
    class: TransformationClass,
    min_size: usize,
) -> Result<Vec<MtpRecord<S>>> {
    Ok(discover(d, class, min_size)?
        .iter()
        .map(|m| m.resolve(d))
        .collect())
}

/// Same as [`maximal_transformable_patterns`] with index-based patterns.
pub fn discover<S: Scalar>(
    d: &Dataset<S>,
    class: TransformationClass,
    min_size: usize,
) -> Result<Vec<IndexedMtp<S>>> {
    if min_size == 0 {
        return Err(Error::InvalidArgument(
            "minimum pattern size must be at least 1".into(),
        ));
    }
    if !d.is_empty() && d.dim() != class.dimension() {
        return Err(Error::DimensionMismatch {
            expected: class.dimension(),
            found: d.dim(),
        });
    }
    let beta = class.basis_size();
    if d.len() < beta {
        return Ok(Vec::new());
    }
    let table = compute_object_bases(d, beta)?;
    let perms = permutation_index_sequences(beta);
    let partners = PartnerIndex::new(d, class, &table);

    let chunks: Vec<Vec<Run<S>>> = partners
        .row_chunks(rayon::current_num_threads())
        .into_par_iter()
        .map(|rows| enumerate_rows(d, class, &table, &partners, &perms, rows))
        .collect();

    let merged = chunks
        .into_iter()
        .kmerge_by(|a, b| a.transformation < b.transformation)
        .chunk_by(|run| run.transformation.clone());
    let mut out = Vec::new();
    for (transformation, runs) in &merged {
        let mut pattern: Vec<u32> = runs.flat_map(|r| r.points).collect();
        pattern.sort_unstable();
        pattern.dedup();
        if pattern.len() >= min_size {
            out.push(IndexedMtp {
                transformation,
                pattern,
            });
        }
    }
    Ok(out)
}

/// A run of equal transformations from one chunk, already merged.
struct Run<S> {
    transformation: Transformation<S>,
    points: Vec<u32>,
}

/// Groups bases by their class signature. Only bases with equal signatures
/// can be related by a member of the class, so each object basis is paired
/// with the members of its own group that do not precede it.
struct PartnerIndex {
    groups: Vec<Vec<u32>>,
    /// Per basis: `(group, position within group)`, or `None` for bases that
    /// never take part in a solution.
    slot: Vec<Option<(usize, usize)>>,
}

impl PartnerIndex {
    fn new<S: Scalar>(d: &Dataset<S>, class: TransformationClass, table: &BasisTable) -> Self {
        let pts = d.points();
        let mut by_signature: HashMap<S, usize> = HashMap::new();
        let mut groups: Vec<Vec<u32>> = Vec::new();
        let mut slot = Vec::with_capacity(table.len());
        let mut basis: Vec<&Point<S>> = Vec::with_capacity(table.beta());
        for (id, b) in table.indices().iter().enumerate() {
            basis.clear();
            basis.extend(b.iter().map(|&k| &pts[k as usize]));
            slot.push(class.basis_signature(&basis).map(|sig| {
                let g = *by_signature.entry(sig).or_insert_with(|| {
                    groups.push(Vec::new());
                    groups.len() - 1
                });
                groups[g].push(id as u32);
                (g, groups[g].len() - 1)
            }));
        }
        PartnerIndex { groups, slot }
    }

    /// Image bases paired with object basis `i` (those at or after it).
    fn partners(&self, i: usize) -> &[u32] {
        match self.slot[i] {
            Some((g, pos)) => &self.groups[g][pos..],
            None => &[],
        }
    }

    /// Splits the object-basis rows into contiguous ranges of roughly equal
    /// work.
    fn row_chunks(&self, threads: usize) -> Vec<std::ops::Range<usize>> {
        let work: Vec<usize> = (0..self.slot.len())
            .map(|i| self.partners(i).len())
            .collect();
        split_by_work(&work, threads.max(1) * 8)
    }
}

fn split_by_work(work: &[usize], pieces: usize) -> Vec<std::ops::Range<usize>> {
    let n = work.len();
    if n == 0 {
        return Vec::new();
    }
    let total: usize = work.iter().sum();
    let target = total.div_ceil(pieces.clamp(1, n)).max(1);
    let mut out = Vec::new();
    let (mut start, mut acc) = (0, 0);
    for (i, w) in work.iter().enumerate() {
        acc += w;
        if acc >= target {
            out.push(start..i + 1);
            start = i + 1;
            acc = 0;
        }
    }
    if start < n {
        out.push(start..n);
    }
    out
}

fn enumerate_rows<S: Scalar>(
    d: &Dataset<S>,
    class: TransformationClass,
    table: &BasisTable,
    partners: &PartnerIndex,
    perms: &[Vec<usize>],
    rows: std::ops::Range<usize>,
) -> Vec<Run<S>> {
    let pts = d.points();
    let bases = table.indices();
    let beta = table.beta();
    let mut pairs: Vec<(Transformation<S>, u32)> = Vec::new();
    let mut found = Vec::with_capacity(class.max_solutions());
    let mut obj: Vec<&Point<S>> = Vec::with_capacity(beta);
    let mut img: Vec<&Point<S>> = Vec::with_capacity(beta);
    for i in rows {
        obj.clear();
        obj.extend(bases[i].iter().map(|&k| &pts[k as usize]));
        for &j in partners.partners(i) {
            let image_basis = &bases[j as usize];
            for r in perms {
                img.clear();
                img.extend(r.iter().map(|&l| &pts[image_basis[l] as usize]));
                class.solve(&obj, &img, &mut found);
                for f in found.drain(..) {
                    if f.is_identity() {
                        continue;
                    }
                    pairs.push((f.invert(), j));
                    pairs.push((f, i as u32));
                }
            }
        }
    }
    pairs.sort_unstable();

    let mut runs: Vec<Run<S>> = Vec::new();
    for (f, basis) in pairs {
        let basis_points = &bases[basis as usize];
        match runs.last_mut() {
            Some(run) if run.transformation == f => run.points.extend_from_slice(basis_points),
            _ => runs.push(Run {
                transformation: f,
                points: basis_points.clone(),
            }),
        }
    }
    for run in &mut runs {
        run.points.sort_unstable();
        run.points.dedup();
    }
    runs
}
