//! Maximal transformable pattern (MTP) discovery in point sets, lossless
//! compression of point sets by MTP occurrence sets, and normalized
//! compression distance classification.
//!
//! Everything is generic over an exact [`scalar::Scalar`]; the aliases at the
//! crate root fix it to [`Rational`], which is what the CLI uses.
//!
//! ```
//! use mtpkit::{Dataset, TransformationClass};
//!
//! let d = Dataset::from_int_points(&[[0, 0], [1, 2], [2, 1], [4, 0], [6, 2], [8, 1]]).unwrap();
//! let e = mtpkit::encode_point_set(&d, TransformationClass::ScaleTranslationReflection, 1).unwrap();
//! assert_eq!(e.description_length(), 10);
//! assert_eq!(mtpkit::decode(&e).unwrap(), d);
//! ```

pub mod cli;
pub mod discovery;
pub mod encoder;
pub mod error;
pub mod geometry;
pub mod io;
pub mod ncd;
pub mod oracle;
pub mod rational;
pub mod scalar;
pub mod transform;

pub use discovery::{maximal_transformable_patterns, BasisTable};
pub use encoder::{decode, encode_point_set, SizeIndex};
pub use error::{Error, Result};
pub use ncd::{distance_matrix, ncd, one_nn_loocv, DistanceMatrix, NcdConfig};
pub use oracle::mtp_oracle;
pub use rational::Rational;
pub use scalar::Scalar;
pub use transform::TransformationClass;

pub type Point = geometry::Point<Rational>;
pub type Dataset = geometry::Dataset<Rational>;
pub type Transformation = transform::Transformation<Rational>;
pub type MtpRecord = discovery::MtpRecord<Rational>;
pub type OccurrenceSet = encoder::OccurrenceSet<Rational>;
pub type Encoding = encoder::Encoding<Rational>;
