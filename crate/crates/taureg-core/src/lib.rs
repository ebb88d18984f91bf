//! Exact computations with finite-dimensional quiver algebras over a prime
//! field: path-basis construction from an admissible presentation, module
//! and morphism arithmetic, minimal projective presentations, the translates
//! tau and tau-minus, and the generic-rank machinery for deciding
//! tau-regularity and enumerating generically tau-regular components.
//!
//! Everything is exact arithmetic in GF(p); randomness only enters where the
//! mathematics calls for generic choices (maximal-rank sampling, isomorphism
//! testing), and every such site takes an explicit seeded sampler.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod fp;
pub mod io;
pub mod matrix;
pub mod presentations;
pub mod quiver;
pub mod quotient;
pub mod rep;
pub mod sampler;
pub mod tauregular;

pub use algebra::{build_algebra, Algebra, BasisPath, SparseElem};
pub use error::{Error, Result};
pub use fp::{Fp, Scalar, DEFAULT_PRIME};
pub use matrix::Matrix;
pub use presentations::{GenericSample, PresentationParts, ProjectivePair};
pub use quiver::{AlgebraPresentation, Arrow, Quiver, Relation, RelationTerm};
pub use rep::{Morphism, ProjPresentation, ProjSum, Representation};
pub use sampler::Sampler;
pub use tauregular::{AsymmetryWitness, ComponentDescriptor, TauMinusPair, TauRegularPair};
