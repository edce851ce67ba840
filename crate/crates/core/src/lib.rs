//! Calculus of multiplications and convolutions over the classical spaces of
//! test functions and distributions.
//!
//! The crate has three layers:
//!
//! * a symbolic layer ([`space`], [`table`], [`expr`]) that knows the fourteen
//!   spaces, their continuous-inclusion order, the multiplier/convolutor table
//!   with its continuity flags, and infers result spaces and continuity
//!   verdicts for expressions built from `*`, `conv`, `fourier` and `d[α]`;
//! * a numeric layer ([`symbolic`], [`dist`], [`seminorm`]) with closed-form
//!   function families, exact derivatives, formal distributions and the
//!   seminorm systems of the spaces, evaluated by grid suprema and quadrature;
//! * a witness layer ([`witness`]) that runs the counterexample families
//!   behind every discontinuity flag and spot-checks the continuity bounds.

// `!(x > 0.0)` rejects NaN parameters where `x <= 0.0` would let them through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dist;
pub mod expr;
pub mod seminorm;
pub mod space;
pub mod symbolic;
pub mod table;
pub mod witness;

pub use dist::{BoundedSetSpec, Carrier, DistError, DistTerm, DistributionRep};
pub use expr::{ClassifyOutcome, Expr, InferError, TypedResult, Verdict};
pub use seminorm::{GridSpec, QuadRule, SeminormError, SeminormSpec};
pub use space::{Space, SpaceError, SpaceKind};
pub use symbolic::{SymbolicError, SymbolicFunction};
pub use table::{BilinearOp, ContinuityVerdict, Flag, PropRef, TableEntry};
pub use witness::{
    BoundReport, OcCauchyReport, WitnessError, WitnessFamily, WitnessFamilyId, WitnessReport,
    WitnessVerdict,
};
