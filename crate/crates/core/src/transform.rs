//! Transformation classes and their parameter vectors.
//!
//! A class is described by its basis size (how many point correspondences pin
//! down finitely many members), its complexity (the length of a parameter
//! vector) and four behaviours: apply, invert, identity, and solving for every
//! member that maps an object basis onto an image basis.
//!
//! | class  | parameters        | maps `(x, y)` to          |
//! |--------|-------------------|---------------------------|
//! | `2T`   | `⟨a, c⟩`          | `(x + a, y + c)`          |
//! | `2TR`  | `⟨a, c, b⟩`       | `(x + a, b(y + c))`       |
//! | `2STR` | `⟨s, t, w, b⟩`    | `(s·x + t, b(y + w))`     |
//!
//! with `b ∈ {-1, 1}` and `s ≠ 0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{Dataset, Point};
use crate::scalar::Scalar;

/// The registry of supported transformation classes. Adding a class means
/// adding a variant and filling in every `match` below.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TransformationClass {
    /// Two-dimensional translations.
    Translation,
    /// Translations optionally followed by a reflection in the time axis.
    TranslationReflection,
    /// Time-axis scaling and translation, optionally followed by a reflection
    /// in the time axis.
    ScaleTranslationReflection,
}

impl TransformationClass {
    pub const ALL: [TransformationClass; 3] = [
        TransformationClass::Translation,
        TransformationClass::TranslationReflection,
        TransformationClass::ScaleTranslationReflection,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TransformationClass::Translation => "2T",
            TransformationClass::TranslationReflection => "2TR",
            TransformationClass::ScaleTranslationReflection => "2STR",
        }
    }

    /// Dimension of the space the class acts on.
    pub fn dimension(self) -> usize {
        2
    }

    /// Number of points in an object basis.
    pub fn basis_size(self) -> usize {
        match self {
            TransformationClass::ScaleTranslationReflection => 2,
            _ => 1,
        }
    }

    /// Length of a parameter vector, i.e. the cost of one transformation in an
    /// encoding.
    pub fn complexity(self) -> usize {
        match self {
            TransformationClass::Translation => 2,
            TransformationClass::TranslationReflection => 3,
            TransformationClass::ScaleTranslationReflection => 4,
        }
    }

    /// Upper bound on the number of members mapping one basis onto another.
    pub fn max_solutions(self) -> usize {
        match self {
            TransformationClass::Translation => 1,
            _ => 2,
        }
    }

    pub fn identity<S: Scalar>(self) -> Transformation<S> {
        let (zero, one) = (S::zero(), S::one());
        let sigma = match self {
            TransformationClass::Translation => vec![zero.clone(), zero],
            TransformationClass::TranslationReflection => vec![zero.clone(), zero, one],
            TransformationClass::ScaleTranslationReflection => {
                vec![one.clone(), zero.clone(), zero, one]
            }
        };
        Transformation { class: self, sigma }
    }

    /// Every member of the class mapping `obj[i]` onto `img[i]` for all `i`,
    /// provided there are finitely many. Degenerate (underdetermined) bases
    /// yield no solutions.
    pub fn get_transformations<S: Scalar>(
        self,
        obj: &[Point<S>],
        img: &[Point<S>],
    ) -> Result<Vec<Transformation<S>>> {
        let beta = self.basis_size();
        if obj.len() != beta || img.len() != beta {
            return Err(Error::InvalidArgument(format!(
                "class {} needs bases of {beta} points, got {} and {}",
                self.id(),
                obj.len(),
                img.len()
            )));
        }
        for p in obj.iter().chain(img) {
            self.check_point(p)?;
        }
        let obj: Vec<&Point<S>> = obj.iter().collect();
        let img: Vec<&Point<S>> = img.iter().collect();
        let mut out = Vec::with_capacity(self.max_solutions());
        self.solve(&obj, &img, &mut out);
        Ok(out)
    }

    /// Unchecked solver used on the discovery hot path. Points must be
    /// two-dimensional and slices of length `basis_size()`.
    pub(crate) fn solve<S: Scalar>(
        self,
        obj: &[&Point<S>],
        img: &[&Point<S>],
        out: &mut Vec<Transformation<S>>,
    ) {
        let (p, q) = (obj[0].coords(), img[0].coords());
        match self {
            TransformationClass::Translation => out.push(Transformation {
                class: self,
                sigma: vec![q[0].clone() - p[0].clone(), q[1].clone() - p[1].clone()],
            }),
            TransformationClass::TranslationReflection => {
                let a = q[0].clone() - p[0].clone();
                out.push(Transformation {
                    class: self,
                    sigma: vec![a.clone(), q[1].clone() - p[1].clone(), S::one()],
                });
                out.push(Transformation {
                    class: self,
                    sigma: vec![a, -p[1].clone() - q[1].clone(), -S::one()],
                });
            }
            TransformationClass::ScaleTranslationReflection => {
                let (p2, q2) = (obj[1].coords(), img[1].coords());
                let dp = p2[0].clone() - p[0].clone();
                if dp.is_zero() {
                    return;
                }
                let s = (q2[0].clone() - q[0].clone()) / dp;
                if s.is_zero() {
                    return;
                }
                let t = q[0].clone() - s.clone() * p[0].clone();
                let pitch_obj = p2[1].clone() - p[1].clone();
                let pitch_img = q2[1].clone() - q[1].clone();
                for b in [S::one(), -S::one()] {
                    if b.clone() * pitch_obj.clone() == pitch_img {
                        let w = b.clone() * q[1].clone() - p[1].clone();
                        out.push(Transformation {
                            class: self,
                            sigma: vec![s.clone(), t.clone(), w, b],
                        });
                    }
                }
            }
        }
    }

    /// Invariant of a (lexicographically sorted) basis that any object and
    /// image basis related by a member of the class must share. `None` marks
    /// bases that can never take part in a solution.
    pub(crate) fn basis_signature<S: Scalar>(self, basis: &[&Point<S>]) -> Option<S> {
        match self {
            TransformationClass::Translation | TransformationClass::TranslationReflection => {
                Some(S::zero())
            }
            TransformationClass::ScaleTranslationReflection => {
                let (p, q) = (basis[0].coords(), basis[1].coords());
                if p[0] == q[0] {
                    None
                } else {
                    Some((q[1].clone() - p[1].clone()).abs())
                }
            }
        }
    }

    fn check_point<S: Scalar>(self, p: &Point<S>) -> Result<()> {
        if p.dim() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: p.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TransformationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TransformationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TransformationClass::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// One member of a transformation class, identified by its parameter vector.
///
/// Ordering is by class, then lexicographically by parameter vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transformation<S> {
    class: TransformationClass,
    sigma: Vec<S>,
}

impl<S: Scalar> Transformation<S> {
    /// Validates arity and the class constraints (`b = ±1`, `s ≠ 0`).
    pub fn new(class: TransformationClass, sigma: Vec<S>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidParameters {
            class: class.id().to_string(),
            reason: reason.to_string(),
        };
        if sigma.len() != class.complexity() {
            return Err(invalid(&format!(
                "expected {} values, got {}",
                class.complexity(),
                sigma.len()
            )));
        }
        let is_sign = |v: &S| v.is_one() || *v == -S::one();
        match class {
            TransformationClass::Translation => {}
            TransformationClass::TranslationReflection => {
                if !is_sign(&sigma[2]) {
                    return Err(invalid("reflection flag must be 1 or -1"));
                }
            }
            TransformationClass::ScaleTranslationReflection => {
                if sigma[0].is_zero() {
                    return Err(invalid("scale factor must be non-zero"));
                }
                if !is_sign(&sigma[3]) {
                    return Err(invalid("reflection flag must be 1 or -1"));
                }
            }
        }
        Ok(Transformation { class, sigma })
    }

    pub fn from_ints(class: TransformationClass, sigma: &[i64]) -> Result<Self> {
        Self::new(class, sigma.iter().map(|&v| S::from_i64(v)).collect())
    }

    pub fn class(&self) -> TransformationClass {
        self.class
    }

    pub fn sigma(&self) -> &[S] {
        &self.sigma
    }

    pub fn apply(&self, p: &Point<S>) -> Result<Point<S>> {
        self.class.check_point(p)?;
        Ok(self.map_point(p))
    }

    pub(crate) fn map_point(&self, p: &Point<S>) -> Point<S> {
        let c = p.coords();
        let s = &self.sigma;
        let coords = match self.class {
            TransformationClass::Translation => {
                vec![c[0].clone() + s[0].clone(), c[1].clone() + s[1].clone()]
            }
            TransformationClass::TranslationReflection => vec![
                c[0].clone() + s[0].clone(),
                s[2].clone() * (c[1].clone() + s[1].clone()),
            ],
            TransformationClass::ScaleTranslationReflection => vec![
                c[0].clone() * s[0].clone() + s[1].clone(),
                s[3].clone() * (c[1].clone() + s[2].clone()),
            ],
        };
        Point::new(coords)
    }

    /// Image of every point of `set`. Bijectivity keeps the size unchanged.
    pub fn apply_to_set(&self, set: &Dataset<S>) -> Result<Dataset<S>> {
        if !set.is_empty() {
            self.class.check_point(&set.points()[0])?;
        }
        let pts = set.iter().map(|p| self.map_point(p)).collect();
        Dataset::new(set.dim(), pts)
    }

    pub fn invert(&self) -> Transformation<S> {
        let s = &self.sigma;
        let sigma = match self.class {
            TransformationClass::Translation => vec![-s[0].clone(), -s[1].clone()],
            TransformationClass::TranslationReflection => {
                vec![-s[0].clone(), -(s[2].clone() * s[1].clone()), s[2].clone()]
            }
            TransformationClass::ScaleTranslationReflection => vec![
                S::one() / s[0].clone(),
                -(s[1].clone() / s[0].clone()),
                -(s[3].clone() * s[2].clone()),
                s[3].clone(),
            ],
        };
        Transformation {
            class: self.class,
            sigma,
        }
    }

    pub fn is_identity(&self) -> bool {
        let s = &self.sigma;
        match self.class {
            TransformationClass::Translation => s[0].is_zero() && s[1].is_zero(),
            TransformationClass::TranslationReflection => {
                s[0].is_zero() && s[1].is_zero() && s[2].is_one()
            }
            TransformationClass::ScaleTranslationReflection => {
                s[0].is_one() && s[1].is_zero() && s[2].is_zero() && s[3].is_one()
            }
        }
    }

    /// Number of parameters differing from a plain translation: one for a
    /// reflection, one for a time scale other than 1.
    pub fn complexity_rank(&self) -> usize {
        let s = &self.sigma;
        let reflected = |v: &S| usize::from(!v.is_one());
        match self.class {
            TransformationClass::Translation => 0,
            TransformationClass::TranslationReflection => reflected(&s[2]),
            TransformationClass::ScaleTranslationReflection => {
                reflected(&s[3]) + usize::from(!s[0].is_one())
            }
        }
    }
}

impl<S: Scalar> fmt::Display for Transformation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, v) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "⟩")
    }
}

/// Total order on transformations of one class: lexicographic on parameters.
pub fn compare_transformations<S: Scalar>(
    f: &Transformation<S>,
    g: &Transformation<S>,
) -> Result<Ordering> {
    if f.class != g.class {
        return Err(Error::ClassMismatch {
            left: f.class.id().to_string(),
            right: g.class.id().to_string(),
        });
    }
    Ok(f.sigma.cmp(&g.sigma))
}

/// Preference order used when dropping redundant transformations: simpler
/// first, then smaller parameter vector.
pub(crate) fn simplicity_order<S: Scalar>(
    f: &Transformation<S>,
    g: &Transformation<S>,
) -> Ordering {
    f.complexity_rank()
        .cmp(&g.complexity_rank())
        .then_with(|| f.sigma.cmp(&g.sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;
    use TransformationClass::*;

    type T = Transformation<Rational>;

    fn t(class: TransformationClass, s: &[i64]) -> T {
        Transformation::from_ints(class, s).unwrap()
    }

    fn p(c: &[i64]) -> Point<Rational> {
        Point::from_ints(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn class_constants() {
        assert_eq!(
            TransformationClass::ALL.map(|c| (c.basis_size(), c.complexity())),
            [(1, 2), (1, 3), (2, 4)]
        );
        assert_eq!(
            "2str".parse::<TransformationClass>().unwrap(),
            ScaleTranslationReflection
        );
        assert!("3T".parse::<TransformationClass>().is_err());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            t(Translation, &[3, 5]).apply(&p(&[1, 1])).unwrap(),
            p(&[4, 6])
        );
        assert_eq!(
            t(TranslationReflection, &[3, -9, -1])
                .apply(&p(&[1, 2]))
                .unwrap(),
            p(&[4, 7])
        );
        assert_eq!(
            t(ScaleTranslationReflection, &[-2, 4, 3, 1])
                .apply(&p(&[1, 0]))
                .unwrap(),
            p(&[2, 3])
        );
        assert!(t(Translation, &[0, 0]).apply(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn apply_to_set_examples() {
        let f = t(Translation, &[1, 0]);
        let empty = Dataset::<Rational>::empty(2);
        assert_eq!(f.apply_to_set(&empty).unwrap(), empty);
        let d = Dataset::from_int_points(&[[0, 0], [1, 0]]).unwrap();
        assert_eq!(
            f.apply_to_set(&d).unwrap(),
            Dataset::from_int_points(&[[1, 0], [2, 0]]).unwrap()
        );
        let retro = t(ScaleTranslationReflection, &[-1, 5, 0, 1]);
        let d = Dataset::from_int_points(&[[0, 0], [1, 2]]).unwrap();
        let image = retro.apply_to_set(&d).unwrap();
        assert_eq!(image, Dataset::from_int_points(&[[5, 0], [4, 2]]).unwrap());
        for pt in &d {
            assert!(image.contains(&retro.apply(pt).unwrap()));
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(t(Translation, &[3, 5]).invert(), t(Translation, &[-3, -5]));
        assert_eq!(
            t(TranslationReflection, &[3, -9, -1]).invert(),
            t(TranslationReflection, &[-3, -9, -1])
        );
        let inv = t(ScaleTranslationReflection, &[-2, 4, 3, 1]).invert();
        assert_eq!(inv.sigma(), &[q(-1, 2), q(2, 1), q(-3, 1), q(1, 1)]);
    }

    #[test]
    fn identity_examples() {
        assert!(t(Translation, &[0, 0]).is_identity());
        assert!(!t(TranslationReflection, &[0, 0, -1]).is_identity());
        assert!(t(ScaleTranslationReflection, &[1, 0, 0, 1]).is_identity());
        for c in TransformationClass::ALL {
            assert!(c.identity::<Rational>().is_identity());
        }
    }

    #[test]
    fn get_transformations_examples() {
        let solve = |c: TransformationClass, obj: &[[i64; 2]], img: &[[i64; 2]]| {
            let obj: Vec<_> = obj.iter().map(|x| p(x)).collect();
            let img: Vec<_> = img.iter().map(|x| p(x)).collect();
            c.get_transformations(&obj, &img).unwrap()
        };
        assert_eq!(
            solve(Translation, &[[0, 0]], &[[3, 5]]),
            vec![t(Translation, &[3, 5])]
        );
        assert_eq!(
            solve(TranslationReflection, &[[1, 2]], &[[4, 7]]),
            vec![
                t(TranslationReflection, &[3, 5, 1]),
                t(TranslationReflection, &[3, -9, -1])
            ]
        );
        assert_eq!(
            solve(
                ScaleTranslationReflection,
                &[[0, 0], [1, 0]],
                &[[4, 3], [2, 3]]
            ),
            vec![
                t(ScaleTranslationReflection, &[-2, 4, 3, 1]),
                t(ScaleTranslationReflection, &[-2, 4, -3, -1])
            ]
        );
        // shared time coordinate: underdetermined
        assert!(solve(
            ScaleTranslationReflection,
            &[[0, 0], [0, 1]],
            &[[4, 3], [4, 4]]
        )
        .is_empty());
        // image times coincide: would need s = 0
        assert!(solve(
            ScaleTranslationReflection,
            &[[0, 0], [1, 1]],
            &[[4, 3], [4, 4]]
        )
        .is_empty());
        // pitch interval 2 cannot map to 3
        assert!(solve(
            ScaleTranslationReflection,
            &[[0, 0], [1, 2]],
            &[[4, 3], [5, 6]]
        )
        .is_empty());
        assert!(Translation
            .get_transformations(&[p(&[0, 0]), p(&[1, 1])], &[p(&[0, 0])])
            .is_err());
    }

    #[test]
    fn compare_and_rank_examples() {
        let cmp = |a: &T, b: &T| compare_transformations(a, b).unwrap();
        assert_eq!(
            cmp(&t(Translation, &[1, 0]), &t(Translation, &[1, 0])),
            Ordering::Equal
        );
        assert_eq!(
            cmp(&t(Translation, &[0, 5]), &t(Translation, &[1, -9])),
            Ordering::Less
        );
        assert_eq!(
            cmp(
                &t(TranslationReflection, &[3, 5, 1]),
                &t(TranslationReflection, &[3, -9, -1])
            ),
            Ordering::Greater
        );
        assert!(compare_transformations(
            &t(Translation, &[0, 0]),
            &t(TranslationReflection, &[0, 0, 1])
        )
        .is_err());

        assert_eq!(t(Translation, &[3, 5]).complexity_rank(), 0);
        assert_eq!(t(TranslationReflection, &[3, -9, -1]).complexity_rank(), 1);
        assert_eq!(
            t(ScaleTranslationReflection, &[-2, 4, 3, 1]).complexity_rank(),
            1
        );
        assert_eq!(
            t(ScaleTranslationReflection, &[-2, 4, 3, -1]).complexity_rank(),
            2
        );
    }

    #[test]
    fn parameter_validation() {
        assert!(T::from_ints(Translation, &[1]).is_err());
        assert!(T::from_ints(TranslationReflection, &[1, 2, 2]).is_err());
        assert!(T::from_ints(ScaleTranslationReflection, &[0, 1, 1, 1]).is_err());
        assert!(T::from_ints(ScaleTranslationReflection, &[2, 1, 1, 0]).is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..6).prop_map(|(n, d)| q(n, d))
    }

    fn any_transformation() -> impl Strategy<Value = T> {
        let sign = prop_oneof![Just(1i64), Just(-1i64)];
        (
            0usize..3,
            small(),
            small(),
            small(),
            small().prop_filter("nonzero", |v| *v != q(0, 1)),
            sign,
        )
            .prop_map(|(c, a, b, w, s, sg)| {
                let sg = q(sg, 1);
                match c {
                    0 => Transformation::new(Translation, vec![a, b]).unwrap(),
                    1 => Transformation::new(TranslationReflection, vec![a, b, sg]).unwrap(),
                    _ => {
                        Transformation::new(ScaleTranslationReflection, vec![s, a, w, sg]).unwrap()
                    }
                }
            })
    }

    fn any_point() -> impl Strategy<Value = Point<Rational>> {
        (small(), small()).prop_map(|(a, b)| Point::new(vec![a, b]))
    }

    proptest! {
        #[test]
        fn inverse_round_trips(f in any_transformation(), x in any_point()) {
            let g = f.invert();
            prop_assert_eq!(g.apply(&f.apply(&x).unwrap()).unwrap(), x.clone());
            prop_assert_eq!(f.apply(&g.apply(&x).unwrap()).unwrap(), x);
            prop_assert_eq!(g.invert(), f);
        }

        #[test]
        fn solutions_are_sound(
            c in 0usize..3,
            a in (-6i64..6, -6i64..6), b in (-6i64..6, -6i64..6),
            x in (-6i64..6, -6i64..6), y in (-6i64..6, -6i64..6),
        ) {
            let class = TransformationClass::ALL[c];
            let beta = class.basis_size();
            let obj = [p(&[a.0, a.1]), p(&[b.0, b.1])];
            let img = [p(&[x.0, x.1]), p(&[y.0, y.1])];
            prop_assume!(obj[0] != obj[1] || beta == 1);
            let sols = class.get_transformations(&obj[..beta], &img[..beta]).unwrap();
            prop_assert!(sols.len() <= class.max_solutions());
            if class == TranslationReflection {
                prop_assert_eq!(sols.len(), 2);
            }
            for f in &sols {
                for i in 0..beta {
                    prop_assert_eq!(f.apply(&obj[i]).unwrap(), img[i].clone());
                }
            }
        }

        #[test]
        fn comparison_is_a_total_order(f in any_transformation(), g in any_transformation()) {
            prop_assume!(f.class() == g.class());
            let fg = compare_transformations(&f, &g).unwrap();
            prop_assert_eq!(fg.reverse(), compare_transformations(&g, &f).unwrap());
            prop_assert_eq!(fg == Ordering::Equal, f == g);
        }
    }
}
