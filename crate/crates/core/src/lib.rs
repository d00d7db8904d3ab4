//! Exact invariants of numerical semigroup rings.
//!
//! A numerical semigroup `Γ = ⟨g_0, …, g_ν⟩` is a cofinite additive
//! submonoid of the natural numbers.  Its semigroup ring `k[[t^γ : γ ∈ Γ]]`
//! is the coordinate ring of a monomial curve, and this crate computes the
//! standard homological invariants of that ring with exact arithmetic:
//!
//! * [`semigroup`] — membership tables, Apéry sets, order filtrations,
//!   Hilbert–Samuel functions, shifts, and width-bounded enumeration;
//! * [`linalg`] — exact rank and incremental span computations over the
//!   rationals or a prime field;
//! * [`monomial`] — monomial ideals, Hilbert functions, lexsegment ideals,
//!   and the Eliahou–Kervaire Betti formula for stable ideals;
//! * [`resolution`] — Betti tables via Koszul homology, squarefree divisor
//!   complexes, and tangent-cone initial ideals;
//! * [`bounds`] — closed-form Betti-number bounds and the verification
//!   sweeps built on top of everything above;
//! * [`interval`] — directed-rounding fixed-point interval arithmetic used
//!   to compare integers against transcendental bound expressions.
//!
//! All computations are deterministic: identical inputs produce identical
//! outputs, bit for bit, regardless of how callers schedule them.
//!
//! ```
//! use monocurve::{FieldConfig, NumericalSemigroup};
//! use monocurve::resolution::{betti_semigroup, tangent_cone_initial_ideal};
//!
//! let s = NumericalSemigroup::from_generators(&[4, 5, 6, 7]).unwrap();
//! let betti = betti_semigroup(&s, FieldConfig::Rationals).unwrap();
//! assert_eq!(betti.total, vec![1, 6, 8, 3]);
//!
//! let cone = tangent_cone_initial_ideal(&s).unwrap();
//! assert_eq!(cone.colength(), Some(4));
//! ```

pub mod bounds;
pub mod interval;
pub mod linalg;
pub mod monomial;
pub mod resolution;
pub mod semigroup;

pub use bounds::{BoundCheck, BoundReport, BoundsError, ShiftScanReport, Thm51Report};
pub use linalg::{FieldConfig, IncrementalSpan, LinalgError, SparseMatrix};
pub use monomial::{HilbertData, Monomial, MonomialError, MonomialIdeal};
pub use resolution::{BettiTable, GradedBetti, MonomialModule, ResolutionError};
pub use semigroup::{AperyData, NumericalSemigroup, SemigroupError};
