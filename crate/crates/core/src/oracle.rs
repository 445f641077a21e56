//! Brute-force reference for MTP discovery.
//!
//! Candidate transformations come from every ordered pair of bases and every
//! ordering of the image basis; each candidate's pattern is then computed
//! straight from the definition `D ∩ f⁻¹(D)`. Quartic in the number of bases
//! for β = 2, so only meant for small datasets.

use std::collections::BTreeSet;

use crate::discovery::{compute_object_bases, permutation_index_sequences, MtpRecord};
use crate::error::Result;
use crate::geometry::Dataset;
use crate::scalar::Scalar;
use crate::transform::{Transformation, TransformationClass};

pub fn mtp_oracle<S: Scalar>(
    d: &Dataset<S>,
    class: TransformationClass,
    min_size: usize,
) -> Result<Vec<MtpRecord<S>>> {
    let beta = class.basis_size();
    if d.len() < beta {
        return Ok(Vec::new());
    }
    let bases = compute_object_bases(d, beta)?.points(d);
    let perms = permutation_index_sequences(beta);

    let mut candidates: BTreeSet<Transformation<S>> = BTreeSet::new();
    for obj in &bases {
        for img in &bases {
            for r in &perms {
                let permuted: Vec<_> = r.iter().map(|&l| img[l].clone()).collect();
                candidates.extend(class.get_transformations(obj, &permuted)?);
            }
        }
    }

    let mut out = Vec::new();
    for f in candidates {
        if f.is_identity() {
            continue;
        }
        let mut pattern = Vec::new();
        for p in d {
            if d.contains(&f.apply(p)?) {
                pattern.push(p.clone());
            }
        }
        if !pattern.is_empty() && pattern.len() >= min_size {
            out.push(MtpRecord {
                transformation: f,
                pattern: Dataset::new(d.dim(), pattern)?,
            });
        }
    }
    Ok(out)
}
