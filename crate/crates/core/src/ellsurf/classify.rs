//! Fibre classification at the places of the base ℙ¹.
//!
//! The reduction type at a finite place π(t) or at t = ∞ is read off the
//! valuations of (A, B, Δ) after stripping twelfth powers of π from the
//! discriminant (the residue characteristic is at least 5, so no further
//! blow-up bookkeeping is needed).  Multiplicative fibres additionally get
//! a split/nonsplit tag from the square class of the node's tangent-cone
//! discriminant, and I₀* fibres record the residue-field degrees of the
//! three outer components.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::exactmath::field::CoeffField;
use crate::exactmath::poly::Poly;

use super::kodaira::{KodairaType, SplitKind};
use super::model::{fmt_poly, infinity_chart, SurfaceBase, SurfaceClass, WeierstrassModel};
use super::SurfaceError;

/// A closed point of ℙ¹ over the base field: a monic irreducible π(t), or ∞.
#[derive(Debug, Clone, PartialEq)]
pub enum BasePlace<K: SurfaceBase> {
    Finite(Poly<K>),
    Infinity,
}

impl<K: SurfaceBase> BasePlace<K> {
    /// Residue-field degree over the base field.
    pub fn degree(&self) -> usize {
        match self {
            BasePlace::Finite(pi) => pi.deg().unwrap_or(0),
            BasePlace::Infinity => 1,
        }
    }
}

impl<K: SurfaceBase> std::fmt::Display for BasePlace<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasePlace::Finite(pi) => write!(f, "{}", fmt_poly(pi, "t")),
            BasePlace::Infinity => write!(f, "infinity"),
        }
    }
}

/// The fibre over one place.
#[derive(Debug, Clone, PartialEq)]
pub struct KodairaFibre<K: SurfaceBase> {
    pub place: BasePlace<K>,
    /// Degree of the place; Euler numbers and component counts scale by it.
    pub degree: usize,
    pub kind: KodairaType,
    pub split: SplitKind,
    /// For I₀*: degrees over the residue field of the fields of definition
    /// of the three outer components, sorted ascending.
    pub leaf_degrees: Option<Vec<usize>>,
}

/// Every bad fibre of a model, with the global invariants they determine.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceAnalysis<K: SurfaceBase> {
    /// Bad fibres only, finite places first (by degree, then coefficients),
    /// the fibre at ∞ last when it is bad.
    pub fibres: Vec<KodairaFibre<K>>,
    /// Σ deg(v) · e(F_v); 12 for a rational elliptic surface, 24 for a K3.
    pub euler_total: i64,
    pub surface_class: SurfaceClass,
    /// 2 + Σ deg(v) · (m_v − 1), the trivial-lattice rank in NS.
    pub shioda_tate_lower_bound: i64,
    /// Chart exponent e used at t = ∞.
    pub infinity_exponent: i64,
}

/// π-adic valuation of a polynomial; `None` for the zero polynomial.
pub fn poly_ord<K: CoeffField>(f: &Poly<K>, pi: &Poly<K>) -> Option<i64> {
    if f.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut g = f.clone();
    loop {
        let (q, r) = g.divrem(pi);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        g = q;
    }
}

fn strip<K: CoeffField>(f: &Poly<K>, pi: &Poly<K>, k: i64) -> Poly<K> {
    let mut g = f.clone();
    for _ in 0..k {
        if g.is_zero() {
            return g;
        }
        g = g.exact_div(pi);
    }
    g
}

/// Remove twelfth powers of π from the discriminant: divide (A, B) by
/// (π^{4m}, π^{6m}) for the largest valid m.  Returns (A₁, B₁, m).
pub fn minimalize_at<K: SurfaceBase>(
    big_a: &Poly<K>,
    big_b: &Poly<K>,
    pi: &Poly<K>,
) -> (Poly<K>, Poly<K>, i64) {
    let va = poly_ord(big_a, pi);
    let vb = poly_ord(big_b, pi);
    let m = match (va, vb) {
        (Some(va), Some(vb)) => (va / 4).min(vb / 6),
        (Some(va), None) => va / 4,
        (None, Some(vb)) => vb / 6,
        (None, None) => 0,
    };
    (strip(big_a, pi, 4 * m), strip(big_b, pi, 6 * m), m)
}

fn fmt_val(v: Option<i64>) -> String {
    v.map_or_else(|| "oo".to_string(), |x| x.to_string())
}

/// A model reduced at one place: the minimal local pair (A₁, B₁), the
/// uniformizer, the number of twelfth powers stripped, and the chart
/// exponent when the place is ∞.
pub(crate) struct LocalData<K: SurfaceBase> {
    pub(crate) a1: Poly<K>,
    pub(crate) b1: Poly<K>,
    pub(crate) pi: Poly<K>,
    pub(crate) m: i64,
    pub(crate) infinity_e: Option<i64>,
}

/// Reduction of a model modulo one place: the minimal pair (A₁, B₁) and the
/// uniformizer, with ∞ handled in the chart s = 1/t.
pub(crate) fn localize<K: SurfaceBase>(
    model: &WeierstrassModel<K>,
    place: &BasePlace<K>,
) -> Result<LocalData<K>, SurfaceError> {
    let (big_a, big_b) = model.short_ab()?;
    let (a_loc, b_loc, pi, infinity_e) = match place {
        BasePlace::Finite(pi) => (big_a, big_b, pi.clone(), None),
        BasePlace::Infinity => {
            let e = model.infinity_exponent()?;
            let w = model.witness();
            let a_star = infinity_chart(&big_a, 4 * e as usize, &w);
            let b_star = infinity_chart(&big_b, 6 * e as usize, &w);
            (a_star, b_star, Poly::x(&w), Some(e))
        }
    };
    let (a1, b1, m) = minimalize_at(&a_loc, &b_loc, &pi);
    Ok(LocalData {
        a1,
        b1,
        pi,
        m,
        infinity_e,
    })
}

/// Inverse of f in the residue field at π, as a polynomial representative.
pub(crate) fn residue_inverse<K: SurfaceBase>(f: &Poly<K>, pi: &Poly<K>) -> Poly<K> {
    let fbar = f.divrem(pi).1;
    let (g, s, _) = fbar.xgcd(pi);
    assert!(g.deg_i() == 0, "residue inverse of a multiple of the place");
    s.scale(&g.lc().inv().expect("nonzero leading coefficient"))
        .divrem(pi)
        .1
}

/// Classify the fibre of `model` over one place of the base.
pub fn classify_place<K: SurfaceBase>(
    model: &WeierstrassModel<K>,
    place: &BasePlace<K>,
) -> Result<KodairaFibre<K>, SurfaceError> {
    let loc = localize(model, place)?;
    let (a1, b1, pi) = (loc.a1, loc.b1, loc.pi);
    let w = model.witness();
    let four_a3 = a1.mul(&a1).mul(&a1).scale(&w.int_like(4));
    let delta1 = four_a3
        .add(&b1.mul(&b1).scale(&w.int_like(27)))
        .scale(&w.int_like(-16));
    if delta1.is_zero() {
        return Err(SurfaceError::Degenerate(
            "the discriminant vanishes identically".to_string(),
        ));
    }
    let d = poly_ord(&delta1, &pi).expect("nonzero discriminant");
    let va = poly_ord(&a1, &pi);
    let vb = poly_ord(&b1, &pi);

    let kind = if d == 0 {
        KodairaType::I(0)
    } else if va == Some(0) {
        KodairaType::I(d as usize)
    } else if va == Some(2) && vb == Some(3) && d >= 7 {
        KodairaType::IStar((d - 6) as usize)
    } else {
        match d {
            2 => KodairaType::II,
            3 => KodairaType::III,
            4 => KodairaType::IV,
            6 => KodairaType::IStar(0),
            8 => KodairaType::IVStar,
            9 => KodairaType::IIIStar,
            10 => KodairaType::IIStar,
            _ => {
                return Err(SurfaceError::Degenerate(format!(
                    "valuations (v(A), v(B), v(Delta)) = ({}, {}, {}) at {} match no fibre type",
                    fmt_val(va),
                    fmt_val(vb),
                    d,
                    place
                )))
            }
        }
    };

    let finite_base = K::residue_char(&w).is_some();
    let mut leaf_degrees = None;
    let split = match kind {
        KodairaType::I(n) if n >= 1 => {
            // Node at x ≡ −3B/(2A); its tangent-cone discriminant is 3x,
            // and the two branches are rational iff that is a square.
            let inv2a = residue_inverse(&a1.scale(&w.int_like(2)), &pi);
            let u = b1.mul(&inv2a).scale(&w.int_like(-9)).divrem(&pi).1;
            match K::residue_is_square(&pi, &u) {
                Some(true) => SplitKind::Split,
                Some(false) => SplitKind::NonSplit,
                None => SplitKind::NotApplicable,
            }
        }
        KodairaType::IV => match K::residue_is_square(&pi, &strip(&b1, &pi, 2)) {
            Some(true) => SplitKind::Split,
            Some(false) => SplitKind::NonSplit,
            None => SplitKind::NotApplicable,
        },
        KodairaType::IVStar => match K::residue_is_square(&pi, &strip(&b1, &pi, 4)) {
            Some(true) => SplitKind::Split,
            Some(false) => SplitKind::NonSplit,
            None => SplitKind::NotApplicable,
        },
        // One non-identity simple component (III) or a graph with no
        // symmetry moving the identity leaf (III*, II*): Frobenius fixes
        // every component over a finite residue field.
        KodairaType::III | KodairaType::IIIStar | KodairaType::IIStar if finite_base => {
            SplitKind::Split
        }
        KodairaType::IStar(0) => {
            leaf_degrees =
                K::residue_cubic_degrees(&pi, &strip(&a1, &pi, 2), &strip(&b1, &pi, 3));
            SplitKind::NotApplicable
        }
        _ => SplitKind::NotApplicable,
    };

    Ok(KodairaFibre {
        place: place.clone(),
        degree: place.degree(),
        kind,
        split,
        leaf_degrees,
    })
}

pub(crate) fn cmp_poly<K: SurfaceBase>(x: &Poly<K>, y: &Poly<K>) -> Ordering {
    x.deg_i().cmp(&y.deg_i()).then_with(|| {
        let w = x.lc().zero_like();
        let n = x.coeffs().len().max(y.coeffs().len());
        for i in 0..n {
            let c = K::cmp_elem(&x.coeff_or_zero(i, &w), &y.coeff_or_zero(i, &w));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    })
}

/// Classify every bad fibre and assemble the global invariants.
///
/// Places are the zeros of the discriminant together with t = ∞; fibres of
/// good reduction are dropped from the list (they carry no components and
/// no Euler number).  Classification across places runs in parallel.
pub fn analyze<K: SurfaceBase>(
    model: &WeierstrassModel<K>,
) -> Result<SurfaceAnalysis<K>, SurfaceError> {
    let delta = model.discriminant()?;
    if delta.is_zero() {
        return Err(SurfaceError::Degenerate(
            "the discriminant vanishes identically".to_string(),
        ));
    }
    let mut finite: Vec<Poly<K>> = K::factor_monic(&delta).into_iter().map(|(pi, _)| pi).collect();
    finite.sort_by(cmp_poly);
    let mut places: Vec<BasePlace<K>> = finite.into_iter().map(BasePlace::Finite).collect();
    places.push(BasePlace::Infinity);

    let classified: Result<Vec<_>, _> = places
        .par_iter()
        .map(|pl| classify_place(model, pl))
        .collect();
    let mut fibres = classified?;
    fibres.retain(|f| f.kind != KodairaType::I(0));

    let euler_total: i64 = fibres
        .iter()
        .map(|f| f.degree as i64 * f.kind.euler() as i64)
        .sum();
    let surface_class = match euler_total {
        12 => SurfaceClass::Rational,
        24 => SurfaceClass::K3,
        _ => SurfaceClass::Other,
    };
    let shioda_tate_lower_bound = 2 + fibres
        .iter()
        .map(|f| f.degree as i64 * (f.kind.components() as i64 - 1))
        .sum::<i64>();
    Ok(SurfaceAnalysis {
        fibres,
        euler_total,
        surface_class,
        shioda_tate_lower_bound,
        infinity_exponent: model.infinity_exponent()?,
    })
}
