//! Exact computational toolkit for K3 surfaces with real multiplication:
//! trace-form lattices over totally real number fields, rank-two
//! quadratic-twist endomorphism models, Dickson-polynomial deformations,
//! elliptic-surface fibre analysis and section heights, self-isogeny
//! verification, and point counts / zeta factors over prime fields.
//!
//! Everything is exact: rationals, number fields, and certified interval
//! arithmetic at real embeddings. Floating point appears only in optional
//! diagnostics, never in a result.

pub mod dickson;
pub mod ellsurf;
pub mod exactmath;
pub mod isogeny;
pub mod qform;
pub mod rmendo;
