//! Finite presentations of central extensions of surface mapping class
//! groups, with exact tools to check them.
//!
//! The crate builds lifted Wajnryb, lifted Gervais and genus-2 presentations
//! as free-group words, abelianizes them through an exact Smith normal form,
//! verifies every relator in the symplectic representation, evaluates
//! projective representation candidates over the rationals, and carries the
//! central-element calculus used for Lefschetz fibration factorizations.
//!
//! ```
//! use mcgext::{abelianize, build_wajnryb_lift, verify_presentation_sp};
//!
//! let p = build_wajnryb_lift(3, 1).unwrap();
//! assert!(abelianize(&p).is_trivial());
//! assert!(verify_presentation_sp(&p).passed());
//! ```

pub mod central;
pub mod export;
pub mod intmat;
pub mod matrix;
pub mod presentations;
pub mod symplectic;
pub mod words;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use matrix::{Matrix, MatrixError, Scalar};

/// Exact integer matrices: relation matrices, Smith forms, `Sp(2g, Z)`.
pub type IntegerMatrix = Matrix<BigInt>;
/// Exact rational matrices for representation checks.
pub type RationalMatrix = Matrix<BigRational>;
/// Approximate matrices, for callers that only need a numerical picture.
pub type FloatMatrix = Matrix<f64>;

pub use central::{
    epsilon_counts, generator_check, ig_value, solve_central_exponents,
    solve_central_exponents_g2, CentralError, CentralExponents, Factorization, TwistType,
};
pub use intmat::{abelianize, relation_matrix, smith_normal_form, AbelianInvariants, SmithNormalForm};
pub use presentations::{
    build, build_genus2, build_with_table, build_gervais_lift, build_wajnryb_lift, good_triples, relator_library,
    Family, GoodTriple, Incidence, IntersectionTable, Presentation, PresentationError, Relator,
};
pub use symplectic::{
    curve_class, evaluate, transvection, verify_presentation_sp, verify_projective_rep,
    Assignment, HomologyClass, SymplecticElement, SymplecticError,
};
pub use words::{Alphabet, Letter, Symbol, Word, WordError};
