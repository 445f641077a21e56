//! Text formats for datasets, corpus manifests and encodings.
//!
//! Datasets hold one point per line with whitespace-separated coordinates.
//! Encodings start with `MTPENC 1 <class> <k>` followed by `P <m>` / `T <t>`
//! blocks; a trailing block with `T 0` is the residual point set. Numbers are
//! always written exactly, as integers or `p/q`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::encoder::{Encoding, OccurrenceSet};
use crate::error::{Error, Result};
use crate::geometry::{Dataset, Point};
use crate::scalar::Scalar;
use crate::transform::{Transformation, TransformationClass};

const MAGIC: &str = "MTPENC";
const VERSION: &str = "1";

/// Dimension given to a dataset file without any points.
pub const DEFAULT_DIMENSION: usize = 2;

fn parse_values<S: Scalar>(line_no: usize, line: &str) -> Result<Vec<S>> {
    line.split_whitespace()
        .map(|tok| {
            S::parse_exact(tok)
                .map_err(|_| Error::parse(line_no, format!("not an exact number: '{tok}'")))
        })
        .collect()
}

fn is_content(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with('#')
}

pub fn parse_dataset<S: Scalar>(text: &str) -> Result<Dataset<S>> {
    let mut dim = None;
    let mut seen: HashMap<Point<S>, usize> = HashMap::new();
    for (idx, line) in text.lines().enumerate().filter(|(_, l)| is_content(l)) {
        let line_no = idx + 1;
        let coords = parse_values::<S>(line_no, line)?;
        let k = *dim.get_or_insert(coords.len());
        if coords.len() != k {
            return Err(Error::parse(
                line_no,
                format!("expected {k} coordinates, found {}", coords.len()),
            ));
        }
        let p = Point::new(coords);
        if let Some(first) = seen.get(&p) {
            return Err(Error::parse(
                line_no,
                format!("duplicate point {p} (first on line {first})"),
            ));
        }
        seen.insert(p, line_no);
    }
    match dim {
        None => Ok(Dataset::empty(DEFAULT_DIMENSION)),
        Some(k) => Dataset::new(k, seen.into_keys().collect()),
    }
}

fn write_values<S: Scalar>(out: &mut String, values: &[S]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

pub fn serialize_dataset<S: Scalar>(d: &Dataset<S>) -> String {
    let mut out = String::new();
    for p in d {
        write_values(&mut out, p.coords());
    }
    out
}

/// One corpus entry: a dataset file and its class label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub label: String,
}

/// Parses `<path> TAB <label>` lines. Relative paths are resolved against
/// `base`.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in text.lines().enumerate().filter(|(_, l)| is_content(l)) {
        let line_no = idx + 1;
        let Some((path, label)) = line.split_once('\t') else {
            return Err(Error::parse(line_no, "expected '<path><TAB><label>'"));
        };
        let (path, label) = (path.trim(), label.trim());
        if path.is_empty() || label.is_empty() {
            return Err(Error::parse(line_no, "empty path or label"));
        }
        if !seen.insert(path.to_string()) {
            return Err(Error::parse(line_no, format!("duplicate path '{path}'")));
        }
        out.push(ManifestEntry {
            path: base.join(path),
            label: label.to_string(),
        });
    }
    Ok(out)
}

/// Writes an encoding. Only the residual may come without transformations,
/// since a `T 0` block is how the residual is recognised.
pub fn serialize_encoding<S: Scalar>(e: &Encoding<S>) -> Result<String> {
    let mut out = format!("{MAGIC} {VERSION} {} {}\n", e.class.id(), e.dim);
    for os in &e.occurrence_sets {
        if os.transformations.is_empty() {
            return Err(Error::InvalidArgument(
                "occurrence sets without transformations cannot be serialized".into(),
            ));
        }
        write_block(&mut out, &os.pattern, &os.transformations);
    }
    if !e.residual.is_empty() {
        write_block(&mut out, &e.residual, &[]);
    }
    Ok(out)
}

fn write_block<S: Scalar>(out: &mut String, pattern: &Dataset<S>, ts: &[Transformation<S>]) {
    let _ = writeln!(out, "P {}", pattern.len());
    for p in pattern {
        write_values(out, p.coords());
    }
    let _ = writeln!(out, "T {}", ts.len());
    for f in ts {
        write_values(out, f.sigma());
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, line) in self.inner.by_ref() {
            self.last = idx + 1;
            if is_content(line) {
                return Some((idx + 1, line.trim()));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.last;
        self.next().ok_or_else(|| {
            Error::parse(
                last + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }
}

fn parse_count(line_no: usize, line: &str, tag: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(t), Some(n), None) if t == tag => n
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad count '{n}' in '{tag}' line"))),
        _ => Err(Error::parse(
            line_no,
            format!("expected '{tag} <count>', found '{line}'"),
        )),
    }
}

pub fn parse_encoding<S: Scalar>(text: &str) -> Result<Encoding<S>> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (line_no, header) = lines.expect("header")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (class, dim) = match fields.as_slice() {
        [magic, version, class, dim] if *magic == MAGIC => {
            if *version != VERSION {
                return Err(Error::parse(
                    line_no,
                    format!("unsupported version '{version}'"),
                ));
            }
            let class: TransformationClass = class
                .parse()
                .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
            let dim: usize = dim
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad dimension '{dim}'")))?;
            if dim != class.dimension() {
                return Err(Error::parse(
                    line_no,
                    format!(
                        "class {class} works in {} dimensions, header says {dim}",
                        class.dimension()
                    ),
                ));
            }
            (class, dim)
        }
        _ => {
            return Err(Error::parse(
                line_no,
                format!("expected '{MAGIC} {VERSION} <class> <k>'"),
            ))
        }
    };

    let mut occurrence_sets = Vec::new();
    let mut residual = None;
    while let Some((line_no, line)) = lines.next() {
        if residual.is_some() {
            return Err(Error::parse(line_no, "content after the residual block"));
        }
        let m = parse_count(line_no, line, "P")?;
        let mut pts = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.expect("a pattern point")?;
            let coords = parse_values::<S>(line_no, line)?;
            if coords.len() != dim {
                return Err(Error::parse(
                    line_no,
                    format!("expected {dim} coordinates, found {}", coords.len()),
                ));
            }
            pts.push(Point::new(coords));
        }
        let pattern = Dataset::new(dim, pts).map_err(|e| Error::parse(line_no, e.to_string()))?;
        let (line_no, line) = lines.expect("a 'T <count>' line")?;
        let t = parse_count(line_no, line, "T")?;
        let mut ts = Vec::with_capacity(t);
        for _ in 0..t {
            let (line_no, line) = lines.expect("a parameter vector")?;
            let sigma = parse_values::<S>(line_no, line)?;
            ts.push(
                Transformation::new(class, sigma)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?,
            );
        }
        if ts.is_empty() {
            residual = Some(pattern);
        } else {
            occurrence_sets.push(OccurrenceSet::new(pattern, ts));
        }
    }
    Ok(Encoding {
        class,
        dim,
        occurrence_sets,
        residual: residual.unwrap_or_else(|| Dataset::empty(dim)),
    })
}
