//! Sections of an elliptic surface and their Mordell–Weil lattice heights.
//!
//! A section is given by its coordinates over k(t), written in the model's
//! own form.  Verification is exact; for a section given by x alone the
//! y-coordinate is required to exist as the base's `rhs_is_square`
//! interprets it — an exact square over 𝔽_p, a square up to a constant
//! (i.e. over the algebraic closure) in characteristic 0.
//!
//! Heights follow the usual elliptic-surface recipe
//!
//! ```text
//!     h(P) = 2χ + 2(P·O) − Σ_v deg(v)·contr_v(P),
//! ```
//!
//! where (P·O) is read off the pole orders of x in minimal local
//! coordinates and contr_v depends on which component of the reducible
//! fibre at v the section passes through.  For an I_n fibre the component
//! is found by lifting the branch point of the node — the simple root of
//! the reduced cubic — to a root modulo π^{n+1} and measuring the contact
//! order of x with the remaining quadratic factor.

use num_bigint::BigInt;

use crate::exactmath::arith::BigRat;
use crate::exactmath::field::CoeffField;
use crate::exactmath::poly::Poly;
use crate::exactmath::qfactor::factor_q;
use crate::exactmath::ratfunc::RatFunc;

use super::classify::{
    cmp_poly, localize, minimalize_at, residue_inverse, BasePlace, KodairaFibre, LocalData,
    SurfaceAnalysis,
};
use super::kodaira::KodairaType;
use super::model::{infinity_chart, poly_to_ratfunc, ModelForm, SurfaceBase, WeierstrassModel};
use super::SurfaceError;

/// Valuation stand-in for the identically-zero function.
const ORD_LARGE: i64 = 1 << 40;

/// A section of the fibration, in the coordinates of the model's own form.
#[derive(Debug, Clone)]
pub enum Section<K: SurfaceBase> {
    /// The zero section: the point at infinity of every fibre.
    Zero,
    /// A section with affine coordinates.  `y` may be omitted, in which
    /// case verification only checks that the right-hand side at `x` is a
    /// square over the base.
    Affine {
        x: RatFunc<K>,
        y: Option<RatFunc<K>>,
    },
}

impl<K: SurfaceBase> Section<K> {
    pub fn from_x(x: RatFunc<K>) -> Self {
        Section::Affine { x, y: None }
    }

    pub fn from_xy(x: RatFunc<K>, y: RatFunc<K>) -> Self {
        Section::Affine { x, y: Some(y) }
    }

    /// The section with constant x-coordinate c.
    pub fn constant_x(c: K) -> Self {
        Section::Affine {
            x: RatFunc::constant(c),
            y: None,
        }
    }
}

fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

fn ord_at_or_large<K: CoeffField>(f: &RatFunc<K>, pi: &Poly<K>) -> i64 {
    if f.is_zero() {
        ORD_LARGE
    } else {
        f.ord_at(pi)
    }
}

fn ord_at_infinity_or_large<K: CoeffField>(f: &RatFunc<K>) -> i64 {
    if f.is_zero() {
        ORD_LARGE
    } else {
        f.ord_at_infinity()
    }
}

/// The right-hand side of the model's own form, evaluated at x.
fn form_rhs_at<K: SurfaceBase>(model: &WeierstrassModel<K>, x: &RatFunc<K>) -> RatFunc<K> {
    let w = model.witness();
    let int = |n: i64| RatFunc::constant(w.int_like(n));
    let a = poly_to_ratfunc(model.a.clone(), &w);
    let b = poly_to_ratfunc(model.b.clone(), &w);
    let x2 = x.mul(x);
    let x3 = x2.mul(x);
    match model.form {
        ModelForm::Short => x3.add(&a.mul(x)).add(&b),
        ModelForm::TwoTorsion => {
            // x(x² + 2ax + b)
            x.mul(&x2.add(&a.mul(x).mul(&int(2))).add(&b))
        }
        ModelForm::ThreeIsog => {
            // x³ + 27a(x − 4b)²
            let lin = x.sub(&b.mul(&int(4)));
            x3.add(&a.mul(&lin).mul(&lin).mul(&int(27)))
        }
    }
}

/// Check that a section lies on the surface.
///
/// With both coordinates given this is the exact identity y² = RHS(x) in
/// k(t).  With x alone, the right-hand side must be a square in the sense
/// of the base field: exactly over 𝔽_p, up to a constant over ℚ.
pub fn verify_section<K: SurfaceBase>(model: &WeierstrassModel<K>, section: &Section<K>) -> bool {
    match section {
        Section::Zero => true,
        Section::Affine { x, y } => {
            let rhs = form_rhs_at(model, x);
            match y {
                Some(y) => y.mul(y) == rhs,
                None => {
                    if rhs.is_zero() {
                        return true;
                    }
                    K::rhs_is_square(&rhs.num().mul(rhs.den()))
                }
            }
        }
    }
}

/// The section's x-coordinate in the minimal local coordinates at a place:
/// passed through the chart s = 1/t when the place is ∞ (x picks up s^{2e}),
/// then divided by π^{2m} when m twelfth powers were stripped.
fn localize_x<K: SurfaceBase>(xs: &RatFunc<K>, loc: &LocalData<K>, w: &K) -> RatFunc<K> {
    let base = match loc.infinity_e {
        None => xs.clone(),
        Some(e) => {
            let s = RatFunc::x(w);
            xs.compose(&s.pow_i(-1)).mul(&s.pow_i(2 * e))
        }
    };
    if loc.m == 0 {
        base
    } else {
        base.mul(&RatFunc::from_poly(loc.pi.clone()).pow_i(-2 * loc.m))
    }
}

/// Component contribution of an I_n fibre, n ≥ 2.
///
/// The reduced cubic has a double root r̄ (the node) and a simple root,
/// which Newton-lifts to an exact root T of x³ + A₁x + B₁ modulo π^{n+1}.
/// The quadratic cofactor q(x) = x² + Tx + (A₁ + T²) vanishes at the two
/// branches through the node, so v(q(x_P)) = 2i when the section meets the
/// chain component at distance i < n/2 from the identity, and v ≥ n exactly
/// on the opposite component i = n/2.
fn i_n_contribution<K: SurfaceBase>(
    n: usize,
    loc: &LocalData<K>,
    x1: &RatFunc<K>,
    fibre: &KodairaFibre<K>,
    w: &K,
) -> Result<BigRat, SurfaceError> {
    let pi = &loc.pi;
    let pimod = pi.pow((n + 1) as u32);
    let red = |f: &Poly<K>| f.divrem(&pimod).1;
    let inv_mod = |f: &Poly<K>| -> Poly<K> {
        let (g, s, _) = f.xgcd(&pimod);
        debug_assert!(g.deg_i() == 0);
        s.scale(&g.lc().inv().expect("unit modulo the place power"))
            .divrem(&pimod)
            .1
    };
    // T̄ = 3B̄/Ā, then Newton until T is a root modulo π^{n+1}.
    let abar_inv = residue_inverse(&loc.a1, pi);
    let mut t = red(&loc.b1.mul(&abar_inv).scale(&w.int_like(3)))
        .divrem(pi)
        .1;
    for _ in 0..8 {
        let ft = red(&t.mul(&t).mul(&t).add(&loc.a1.mul(&t)).add(&loc.b1));
        if ft.is_zero() {
            break;
        }
        let dft = red(&t.mul(&t).scale(&w.int_like(3)).add(&loc.a1));
        t = red(&t.sub(&ft.mul(&inv_mod(&dft))));
    }
    let t_rf = poly_to_ratfunc(t.clone(), w);
    let tau = poly_to_ratfunc(red(&loc.a1.add(&t.mul(&t))), w);
    let wq = x1.mul(x1).add(&x1.mul(&t_rf)).add(&tau);
    let vw = ord_at_or_large(&wq, pi).min(n as i64);
    if vw <= 0 {
        return Ok(rat_int(0));
    }
    if n > 9 {
        return Err(SurfaceError::Unimplemented(format!(
            "no height correction entry for a section through the {} fibre at {}",
            fibre.kind, fibre.place
        )));
    }
    let i = if vw < n as i64 {
        if vw % 2 != 0 {
            return Err(SurfaceError::Degenerate(format!(
                "odd contact order {} with the node branches of the {} fibre at {}",
                vw, fibre.kind, fibre.place
            )));
        }
        vw / 2
    } else {
        if n % 2 != 0 {
            return Err(SurfaceError::Degenerate(format!(
                "contact order ≥ {} with the node branches of the odd {} fibre at {}",
                n, fibre.kind, fibre.place
            )));
        }
        (n / 2) as i64
    };
    Ok(BigRat::new(
        BigInt::from(i * (n as i64 - i)),
        BigInt::from(n as i64),
    ))
}

/// Correction term for one reducible fibre.
fn fibre_contribution<K: SurfaceBase>(
    fibre: &KodairaFibre<K>,
    loc: &LocalData<K>,
    x1: &RatFunc<K>,
    w: &K,
) -> Result<BigRat, SurfaceError> {
    use KodairaType::*;
    // Every additive fibre of the minimal model is singular at (x, y) = (0, 0);
    // the section passes through the non-identity locus exactly when x and
    // y both vanish there, i.e. v(x₁) ≥ 1 and v(x₁³ + A₁x₁ + B₁) ≥ 2.
    let meets_additive = || -> bool {
        if ord_at_or_large(x1, &loc.pi) < 1 {
            return false;
        }
        let a1 = poly_to_ratfunc(loc.a1.clone(), w);
        let b1 = poly_to_ratfunc(loc.b1.clone(), w);
        let w1 = x1.mul(x1).mul(x1).add(&a1.mul(x1)).add(&b1);
        ord_at_or_large(&w1, &loc.pi) >= 2
    };
    match fibre.kind {
        I(0) | I(1) | II => Ok(rat_int(0)),
        I(n) => i_n_contribution(n, loc, x1, fibre, w),
        III => Ok(if meets_additive() { frac(1, 2) } else { rat_int(0) }),
        IV => Ok(if meets_additive() { frac(2, 3) } else { rat_int(0) }),
        IStar(0) => Ok(if meets_additive() { rat_int(1) } else { rat_int(0) }),
        IVStar => Ok(if meets_additive() {
            frac(4, 3)
        } else {
            rat_int(0)
        }),
        IStar(_) | IIIStar | IIStar => {
            if meets_additive() {
                Err(SurfaceError::Unimplemented(format!(
                    "no height correction entry for a section through the {} fibre at {}",
                    fibre.kind, fibre.place
                )))
            } else {
                Ok(rat_int(0))
            }
        }
    }
}

/// Canonical height of a section in the Mordell–Weil lattice.
///
/// `analysis` must be the analysis of `model`.  The section is taken at
/// face value; run [`verify_section`] first if it is untrusted.  Torsion
/// sections come out at exactly 0.
pub fn section_height<K: SurfaceBase>(
    model: &WeierstrassModel<K>,
    section: &Section<K>,
    analysis: &SurfaceAnalysis<K>,
) -> Result<BigRat, SurfaceError> {
    let x_form = match section {
        Section::Zero => return Ok(rat_int(0)),
        Section::Affine { x, .. } => x,
    };
    let w = model.witness();
    let xs = x_form.add(&poly_to_ratfunc(model.x_shift(), &w));
    let (big_a, big_b) = model.short_ab()?;

    // 2χ = e / 6.
    let chi2 = BigRat::new(BigInt::from(analysis.euler_total), BigInt::from(6));

    // 2(P·O) = Σ_v deg(v)·max(0, −ord_v(x)) over the poles of x in minimal
    // local coordinates, the place at ∞ included.
    let mut pole_sum: i64 = 0;
    let mut pole_places: Vec<Poly<K>> = K::factor_monic(xs.den())
        .into_iter()
        .map(|(pi, _)| pi)
        .collect();
    for fibre in &analysis.fibres {
        if let BasePlace::Finite(pi) = &fibre.place {
            pole_places.push(pi.clone());
        }
    }
    pole_places.sort_by(cmp_poly);
    pole_places.dedup();
    for pi in &pole_places {
        let (_, _, m) = minimalize_at(&big_a, &big_b, pi);
        let ord = ord_at_or_large(&xs, pi) - 2 * m;
        if ord < 0 {
            pole_sum += pi.deg_i() * (-ord);
        }
    }
    {
        let e = analysis.infinity_exponent;
        let a_star = infinity_chart(&big_a, (4 * e) as usize, &w);
        let b_star = infinity_chart(&big_b, (6 * e) as usize, &w);
        let (_, _, m) = minimalize_at(&a_star, &b_star, &Poly::x(&w));
        let ord = 2 * e + ord_at_infinity_or_large(&xs) - 2 * m;
        if ord < 0 {
            pole_sum += -ord;
        }
    }
    let po2 = rat_int(pole_sum);

    let mut corr = rat_int(0);
    for fibre in &analysis.fibres {
        let loc = localize(model, &fibre.place)?;
        let x1 = localize_x(&xs, &loc, &w);
        let c = fibre_contribution(fibre, &loc, &x1, &w)?;
        corr = corr + rat_int(fibre.degree as i64) * c;
    }

    Ok(chi2 + po2 - corr)
}

/// The constant-x sections of a low-degree short model.
#[derive(Debug, Clone)]
pub struct ConstantXSections {
    /// The cubic D(c) whose roots are the constant x-values.
    pub condition: Poly<BigRat>,
    /// Roots of D in ℚ, with multiplicity.
    pub roots: Vec<(BigRat, u32)>,
    /// Sections over the algebraic closure, counted with multiplicity:
    /// two (±y) per root of D.
    pub section_count: usize,
    /// Whether D is squarefree, i.e. the constant x-values are distinct.
    pub squarefree: bool,
    /// Set when the t²-coefficient of B vanishes and the count collapses.
    pub degenerate: bool,
}

/// Enumerate the sections with constant x-coordinate of a short model
/// y² = x³ + A(t)x + B(t) with deg A ≤ 1 and deg B ≤ 2.
///
/// Substituting a constant c, the right-hand side
/// B₂t² + (A₁c + B₁)t + (c³ + A₀c + B₀) is a square of a linear polynomial
/// in t exactly when its t-discriminant
///
/// ```text
///     D(c) = (A₁c + B₁)² − 4B₂(c³ + A₀c + B₀)
/// ```
///
/// vanishes.  D is a cubic in c when B₂ ≠ 0, so there are three constant
/// x-values over the algebraic closure — six sections ±y — distinct when D
/// is squarefree.
pub fn constant_x_sections(
    model: &WeierstrassModel<BigRat>,
) -> Result<ConstantXSections, SurfaceError> {
    if model.form != ModelForm::Short || model.a.deg_i() > 1 || model.b.deg_i() > 2 {
        return Err(SurfaceError::Unsupported(
            "constant-x enumeration expects a short model with deg A ≤ 1 and deg B ≤ 2"
                .to_string(),
        ));
    }
    let q = |k: i64| rat_int(k);
    let zero = q(0);
    let a1 = model.a.coeff_or_zero(1, &zero);
    let a0 = model.a.coeff_or_zero(0, &zero);
    let b2 = model.b.coeff_or_zero(2, &zero);
    let b1 = model.b.coeff_or_zero(1, &zero);
    let b0 = model.b.coeff_or_zero(0, &zero);
    let lin = Poly::new(vec![b1, a1]);
    let cube = Poly::new(vec![b0, a0, q(0), q(1)]);
    let condition = lin.mul(&lin).sub(&cube.scale(&(&q(4) * &b2)));
    if b2.is_zero() {
        return Ok(ConstantXSections {
            condition,
            roots: vec![],
            section_count: 0,
            squarefree: false,
            degenerate: true,
        });
    }
    let section_count = 2 * condition.deg().unwrap_or(0);
    let (_, factors) = factor_q(&condition);
    let mut roots = Vec::new();
    let mut squarefree = true;
    for (f, e) in &factors {
        if *e > 1 {
            squarefree = false;
        }
        if f.deg() == Some(1) {
            roots.push((-f.coeff_or_zero(0, &zero), *e));
        }
    }
    Ok(ConstantXSections {
        condition,
        roots,
        section_count,
        squarefree,
        degenerate: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellsurf::classify::analyze;
    use crate::ellsurf::family::{n7, res5, rm5};
    use crate::ellsurf::model::{qpoly, reduce_mod_p};
    use crate::exactmath::field::Fp;

    fn q(n: i64) -> BigRat {
        rat_int(n)
    }

    fn qq(n: i64, d: i64) -> BigRat {
        frac(n, d)
    }

    #[test]
    fn zero_section_is_trivial() {
        let m = rm5();
        assert!(verify_section(&m, &Section::Zero));
        let analysis = analyze(&m).unwrap();
        assert_eq!(section_height(&m, &Section::Zero, &analysis).unwrap(), q(0));
    }

    #[test]
    fn explicit_xy_sections_verify_exactly() {
        // y² = x³ + t⁷x + (−t⁷ + 3) carries (1, 2): the t⁷-terms cancel.
        let m = n7(&q(1), &q(0), &q(-1), &q(3), None);
        let good = Section::from_xy(RatFunc::constant(q(1)), RatFunc::constant(q(2)));
        let bad = Section::from_xy(RatFunc::constant(q(1)), RatFunc::constant(q(3)));
        assert!(verify_section(&m, &good));
        assert!(!verify_section(&m, &bad));
    }

    #[test]
    fn x_only_verification_is_geometric_over_q_and_exact_over_fp() {
        // Here RHS(1) = 3: a square up to a constant over ℚ, a square
        // modulo p exactly when (3|p) = 1.
        let m = n7(&q(1), &q(0), &q(-1), &q(2), None);
        assert!(verify_section(&m, &Section::constant_x(q(1))));
        let m7 = reduce_mod_p(&m, 7).unwrap();
        let m11 = reduce_mod_p(&m, 11).unwrap();
        assert!(!verify_section(&m7, &Section::constant_x(Fp::new(1, 7))));
        assert!(verify_section(&m11, &Section::constant_x(Fp::new(1, 11))));
    }

    #[test]
    fn two_torsion_section_verifies_with_y_zero() {
        // y² = x(x² + (1 + t²)x + t²): x = 0 is 2-torsion.
        let a = Poly::new(vec![qq(1, 2), q(0), qq(1, 2)]);
        let b = qpoly(&[0, 0, 1]);
        let m = crate::ellsurf::WeierstrassModel::two_torsion(a, b);
        assert!(verify_section(&m, &Section::constant_x(q(0))));
        let with_y = Section::from_xy(RatFunc::constant(q(0)), RatFunc::constant(q(0)));
        assert!(verify_section(&m, &with_y));
    }

    #[test]
    fn torsion_sections_have_height_zero() {
        // The 2-torsion section of y² = x(x² + (1 + t²)x + t²) threads the
        // far component of the I₄ fibres at t = 0 and t = ∞ and misses the
        // nodes of the I₂ fibres at t = ±1; the corrections cancel 2χ.
        let a = Poly::new(vec![qq(1, 2), q(0), qq(1, 2)]);
        let b = qpoly(&[0, 0, 1]);
        let m = crate::ellsurf::WeierstrassModel::two_torsion(a, b);
        let analysis = analyze(&m).unwrap();
        assert_eq!(analysis.euler_total, 12);
        let mut kinds: Vec<String> = analysis
            .fibres
            .iter()
            .map(|f| format!("{}@{}", f.kind, f.place))
            .collect();
        kinds.sort();
        assert_eq!(
            kinds,
            vec!["I2@t + 1", "I2@t - 1", "I4@infinity", "I4@t"]
        );
        let h = section_height(&m, &Section::constant_x(q(0)), &analysis).unwrap();
        assert_eq!(h, q(0));
    }

    #[test]
    fn res5_constant_x_sections_enumerate_and_verify() {
        // B = (t + 1)² makes c = 0 a root of the section condition.
        let m = res5(&qpoly(&[0, 1]), &qpoly(&[1, 2, 1]), None).unwrap();
        let cx = constant_x_sections(&m).unwrap();
        assert_eq!(cx.condition.deg(), Some(3));
        assert_eq!(cx.section_count, 6);
        assert!(cx.squarefree);
        assert!(!cx.degenerate);
        assert!(cx.roots.iter().any(|(r, _)| r == &q(0)));
        for (r, _) in &cx.roots {
            assert!(verify_section(&m, &Section::constant_x(r.clone())));
        }
    }

    #[test]
    fn res5_constant_x_section_has_height_two_thirds() {
        let m = res5(&qpoly(&[0, 1]), &qpoly(&[1, 2, 1]), None).unwrap();
        let analysis = analyze(&m).unwrap();
        assert_eq!(analysis.euler_total, 12);
        let h = section_height(&m, &Section::constant_x(q(0)), &analysis).unwrap();
        assert_eq!(h, qq(2, 3));
    }

    #[test]
    fn n7_constant_x_section_has_height_seven_halves() {
        let m = n7(&q(1), &q(0), &q(-1), &q(2), None);
        let analysis = analyze(&m).unwrap();
        assert_eq!(analysis.euler_total, 24);
        let h = section_height(&m, &Section::constant_x(q(1)), &analysis).unwrap();
        assert_eq!(h, qq(7, 2));
    }

    #[test]
    fn rm5_printed_section_verifies_and_has_height_four_fifths() {
        // x = −3(t² − 125)(t² + 16t + 35); its y is only defined over a
        // constant quadratic extension, so verification is geometric.
        let m = rm5();
        let x = RatFunc::from_poly(qpoly(&[13125, 6000, 270, -48, -3]));
        let section = Section::from_x(x);
        assert!(verify_section(&m, &section));
        let analysis = analyze(&m).unwrap();
        // χ = 2 and (P·O) = 0; the section passes through the I₀* singular
        // point over t² − 125 (contribution 1 at a degree-2 place) and
        // meets the I₅ fibre at ∞ two components away (contribution 6/5):
        // h = 4 − 2 − 6/5 = 4/5.
        let h = section_height(&m, &section, &analysis).unwrap();
        assert_eq!(h, qq(4, 5));
    }

    #[test]
    fn rm5_printed_section_strictness_mod_p_tracks_minus_one() {
        // RHS(x_P) = −(108(t² − 125)²)², so the exact 𝔽_p test succeeds
        // exactly when −1 is a square, i.e. p ≡ 1 (mod 4).
        let m = rm5();
        let x = qpoly(&[13125, 6000, 270, -48, -3]);
        let m13 = reduce_mod_p(&m, 13).unwrap();
        let m7 = reduce_mod_p(&m, 7).unwrap();
        let x13 = RatFunc::from_poly(Poly::new(
            x.coeffs()
                .iter()
                .map(|c| Fp::from_rat(c, 13).unwrap())
                .collect(),
        ));
        let x7 = RatFunc::from_poly(Poly::new(
            x.coeffs()
                .iter()
                .map(|c| Fp::from_rat(c, 7).unwrap())
                .collect(),
        ));
        assert!(verify_section(&m13, &Section::from_x(x13)));
        assert!(!verify_section(&m7, &Section::from_x(x7)));
    }

    #[test]
    fn sections_through_unimplemented_fibres_are_reported() {
        // y² = x³ + t³x + t⁵ has a III* fibre at t = 0; x = t runs into it.
        let m = crate::ellsurf::WeierstrassModel::short(qpoly(&[0, 0, 0, 1]), qpoly(&[0, 0, 0, 0, 0, 1]));
        let analysis = analyze(&m).unwrap();
        assert!(analysis
            .fibres
            .iter()
            .any(|f| f.kind == KodairaType::IIIStar));
        let section = Section::from_x(RatFunc::x(&q(1)));
        match section_height(&m, &section, &analysis) {
            Err(SurfaceError::Unimplemented(msg)) => assert!(msg.contains("III*")),
            other => panic!("expected an unimplemented-correction error, got {other:?}"),
        }
    }

    #[test]
    fn constant_x_rejects_out_of_scope_models() {
        let wide = crate::ellsurf::WeierstrassModel::short(qpoly(&[0, 0, 1]), qpoly(&[1]));
        assert!(matches!(
            constant_x_sections(&wide),
            Err(SurfaceError::Unsupported(_))
        ));
        let deformed = res5(&qpoly(&[0, 1]), &qpoly(&[1, 2, 1]), Some(&q(1))).unwrap();
        assert!(matches!(
            constant_x_sections(&deformed),
            Err(SurfaceError::Unsupported(_))
        ));
    }

    #[test]
    fn constant_x_flags_degenerate_quadratic_coefficient() {
        let m = crate::ellsurf::WeierstrassModel::short(qpoly(&[1]), qpoly(&[3]));
        let cx = constant_x_sections(&m).unwrap();
        assert!(cx.degenerate);
        assert_eq!(cx.section_count, 0);
        assert!(cx.roots.is_empty());
    }
}
