//! Weierstrass models of elliptic surfaces over k(t) and their fibre geometry.
//!
//! The pieces fit together as follows: [`model`] holds the Weierstrass data
//! (short or isogeny-adapted form) over a base field abstracted by
//! [`SurfaceBase`]; [`classify`] runs the valuation-table form of Tate's
//! algorithm at every place of ℙ¹ including ∞, producing a
//! [`SurfaceAnalysis`] with Euler number, rational/K3 recognition and the
//! Shioda–Tate lower bound; [`family`] builds the explicit one- to
//! three-parameter families this crate studies; [`sections`] verifies
//! sections and computes their heights in the Mordell–Weil lattice.
//!
//! Residue characteristics 2 and 3 are rejected throughout — every
//! computation this crate performs lives in characteristic 0 or ≥ 5, where
//! the additive-reduction bookkeeping collapses to the (v(A), v(B), v(Δ))
//! lookup table.

pub mod classify;
pub mod family;
pub mod kodaira;
pub mod model;
pub mod sections;

pub use classify::{
    analyze, classify_place, minimalize_at, poly_ord, BasePlace, KodairaFibre, SurfaceAnalysis,
};
pub use family::{sample_member, FamilyName};
pub use kodaira::{KodairaType, SplitKind};
pub use model::{
    fmt_poly, qpoly, reduce_mod_p, short_from_three_isog, short_from_two_torsion, ModelForm,
    SurfaceBase, SurfaceClass, WeierstrassModel,
};
pub use sections::{
    constant_x_sections, section_height, verify_section, ConstantXSections, Section,
};

use thiserror::Error;

/// Everything that can go wrong while building or analyzing a surface.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SurfaceError {
    /// Residue characteristic 2 or 3: the valuation lookup table does not apply.
    #[error("unsupported residue characteristic {0}; this crate requires characteristic 0 or ≥ 5")]
    SmallCharacteristic(u64),
    /// Vanishing discriminant or other degeneracy that makes the fibration meaningless.
    #[error("degenerate model: {0}")]
    Degenerate(String),
    /// Family parameters outside the allowed degree window.
    #[error("{0}; a K3 model requires deg(α) ≤ 8 and deg(β) ≤ 12")]
    DegreeBounds(String),
    /// A computation hit a configuration the crate deliberately does not handle.
    #[error("unimplemented: {0}")]
    Unimplemented(String),
    /// Input outside the scope of the requested operation.
    #[error("unsupported input: {0}")]
    Unsupported(String),
}
