//! Exact invariant calculus for sheaves on an elliptic surface `p: X → B`
//! with a section, and for their relative Fourier–Mukai transforms on the
//! compactified relative Jacobian `X̂`.
//!
//! Everything here works on discrete invariants only: divisor classes in the
//! sublattice spanned by the section and the fibre, Chern characters
//! `(rank, c1, ch2)`, spectral cover classes `nΘ + kμ̂`, Hilbert polynomials
//! of sheaves on covers, and multisets describing S-equivalence classes.
//! All arithmetic is exact over `ℚ`.
//!
//! Modules:
//! - [`geometry`]: intersection pairing, the isometry `ϖ: X → X̂`, canonical
//!   classes, relative Todd class and Euler characteristics of curves.
//! - [`fourier_mukai`]: Chern characters and the transform/inverse transform.
//! - [`spectral`]: cover classes, Simpson rank/degree, sheaves on covers.
//! - [`stability`]: slopes, destabilizer scans, the `b₀` threshold and
//!   Fitting-cycle bookkeeping.

pub mod error;
pub mod fourier_mukai;
pub mod geometry;
pub mod rational;
pub mod remark;
pub mod spectral;
pub mod stability;

pub use error::{Error, Result};
pub use fourier_mukai::{
    fm_inverse_ch, fm_transform_ch, wit1_transform_ch, ChernCharacter, FibreInvariants,
    Polarization,
};
pub use geometry::{DivisorClass, GradedClass, Side, SurfaceGeometry};
pub use rational::{q, Rational};
pub use spectral::{CoverClass, CoverInvariants, CoverSheafInvariants, HilbertPolynomial};
pub use stability::{
    destabilizer_scan, destabilizing_margin, is_destabilizing, slope, threshold_b0, CandidateBox, Destabilizer, FittingCycle, PointId, SEquivalenceClass, SEquivalencePart,
    SubsheafCandidate, SymmetricPoint, ThresholdReport,
};
