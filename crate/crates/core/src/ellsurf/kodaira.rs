//! Kodaira fibre types and their numerical invariants.

use std::fmt;

/// Kodaira type of a fibre of an elliptic surface.
///
/// `I(0)` is the smooth fibre; `I(n)` for n ≥ 1 the multiplicative n-gon;
/// the rest are the additive types. `IStar(n)` is Iₙ*.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I(usize),
    II,
    III,
    IV,
    IStar(usize),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Number of irreducible components of the fibre (over the algebraic closure).
    pub fn components(&self) -> usize {
        match *self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => n,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// Local Euler number e(F_v).
    pub fn euler(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn is_additive(&self) -> bool {
        !matches!(self, KodairaType::I(_))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KodairaType::I(n) => write!(f, "I{}", n),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{}*", n),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// Whether the Frobenius action on the fibre's component chain is trivial.
///
/// Only multiplicative chains and the IV/IV* arm swaps carry a genuine
/// two-valued datum over a finite residue field; types whose non-identity
/// components are pinned by the intersection pattern (III, III*, II*) are
/// always split, and single-component types have nothing to distinguish.
/// Over ℚ, and for I₀* (whose component field data lives in the leaf
/// degrees), the datum is `NotApplicable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    Split,
    NonSplit,
    NotApplicable,
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitKind::Split => write!(f, "split"),
            SplitKind::NonSplit => write!(f, "nonsplit"),
            SplitKind::NotApplicable => write!(f, "n/a"),
        }
    }
}
