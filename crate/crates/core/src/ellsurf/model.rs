//! Weierstrass data over k(t) and the base-field abstraction.
//!
//! A [`WeierstrassModel`] is a pair of polynomials in the chosen
//! [`ModelForm`]: the short form y² = x³ + A(t)x + B(t), the two-torsion
//! form y² = x(x² + 2a(t)x + b(t)) used by the degree-2 isogeny families,
//! or the three-isogeny form y² = x³ + 27a(t)(x − 4b(t))².  Everything
//! downstream (classification, heights, point counts) works on the short
//! form; `to_short_form` performs the completion of the cube exactly.

use std::cmp::Ordering;

use crate::exactmath::arith::BigRat;
use crate::exactmath::field::{rat_sqrt, CoeffField, Fp};
use crate::exactmath::gf::{Gf, GfCtx};
use crate::exactmath::poly::{factor_fp, Poly};
use crate::exactmath::qfactor::factor_q;
use crate::exactmath::ratfunc::RatFunc;
use num_bigint::BigInt;
use num_traits::Signed;

use super::SurfaceError;

/// Coefficient fields that can serve as the constant field of the base ℙ¹.
///
/// The extra hooks beyond plain field arithmetic are the ones fibre
/// classification needs: factoring monic polynomials into places, square
/// tests in residue fields, and a total order making reports deterministic.
/// Residue-field hooks return `None` over ℚ, where the corresponding fibre
/// data (split/nonsplit, leaf fields) is not defined.
pub trait SurfaceBase: CoeffField + Send + Sync {
    /// The residue characteristic, or `None` in characteristic 0.
    fn residue_char(witness: &Self) -> Option<u64>;

    /// Monic irreducible factors with multiplicity, deterministically ordered.
    fn factor_monic(f: &Poly<Self>) -> Vec<(Poly<Self>, u32)>;

    /// Total order on field elements, used only to sort places in reports.
    fn cmp_elem(a: &Self, b: &Self) -> Ordering;

    /// Square root in the base field itself.
    fn sqrt_elem(c: &Self) -> Option<Self>;

    /// Is the residue of `u` a square in the residue field at `pi`?
    /// `None` when the base has no finite residue fields.
    fn residue_is_square(pi: &Poly<Self>, u: &Poly<Self>) -> Option<bool>;

    /// Degrees of the irreducible factors of X³ + āX + b̄ over the residue
    /// field at `pi`, sorted ascending; `None` over ℚ.
    fn residue_cubic_degrees(pi: &Poly<Self>, a: &Poly<Self>, b: &Poly<Self>)
        -> Option<Vec<usize>>;

    /// Whether a polynomial is the square of a section's y-coordinate over
    /// this base: an exact square in 𝔽_p[t] (leading class included), or a
    /// square up to a constant — i.e. over the algebraic closure — in
    /// characteristic 0.
    fn rhs_is_square(f: &Poly<Self>) -> bool;

    /// Plain-text rendering of a field element, used in reports.
    fn fmt_elem(c: &Self) -> String;
}

/// Plain-text rendering of a polynomial, highest-degree term first.
pub fn fmt_poly<K: SurfaceBase>(f: &Poly<K>, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mut s = K::fmt_elem(c);
        let neg = s.starts_with('-');
        if neg {
            s = s[1..].to_string();
        }
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, i),
        };
        if power.is_empty() {
            out.push_str(&s);
        } else if s == "1" {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{}*{}", s, power));
        }
    }
    out
}

impl SurfaceBase for BigRat {
    fn residue_char(_witness: &Self) -> Option<u64> {
        None
    }

    fn factor_monic(f: &Poly<Self>) -> Vec<(Poly<Self>, u32)> {
        factor_q(f).1
    }

    fn cmp_elem(a: &Self, b: &Self) -> Ordering {
        a.cmp(b)
    }

    fn sqrt_elem(c: &Self) -> Option<Self> {
        rat_sqrt(c)
    }

    fn residue_is_square(_pi: &Poly<Self>, _u: &Poly<Self>) -> Option<bool> {
        None
    }

    fn residue_cubic_degrees(
        _pi: &Poly<Self>,
        _a: &Poly<Self>,
        _b: &Poly<Self>,
    ) -> Option<Vec<usize>> {
        None
    }

    fn rhs_is_square(f: &Poly<Self>) -> bool {
        if f.is_zero() {
            return true;
        }
        // Square up to a constant ⟺ every irreducible factor appears with
        // even multiplicity.
        f.squarefree_decomposition_char0()
            .iter()
            .all(|(_, i)| i % 2 == 0)
    }

    fn fmt_elem(c: &Self) -> String {
        c.to_string()
    }
}

impl SurfaceBase for Fp {
    fn residue_char(witness: &Self) -> Option<u64> {
        Some(witness.p)
    }

    fn factor_monic(f: &Poly<Self>) -> Vec<(Poly<Self>, u32)> {
        factor_fp(f)
    }

    fn cmp_elem(a: &Self, b: &Self) -> Ordering {
        a.v.cmp(&b.v)
    }

    fn sqrt_elem(c: &Self) -> Option<Self> {
        if c.is_zero() {
            return Some(*c);
        }
        let ctx = GfCtx::new(c.p, 1);
        Gf::from_fp(&ctx, *c).sqrt().and_then(|r| r.as_fp())
    }

    fn residue_is_square(pi: &Poly<Self>, u: &Poly<Self>) -> Option<bool> {
        let ctx = GfCtx::with_modulus(pi.clone());
        Some(Gf::new(&ctx, u.clone()).is_square())
    }

    fn residue_cubic_degrees(
        pi: &Poly<Self>,
        a: &Poly<Self>,
        b: &Poly<Self>,
    ) -> Option<Vec<usize>> {
        let ctx = GfCtx::with_modulus(pi.clone());
        let abar = Gf::new(&ctx, a.clone());
        let bbar = Gf::new(&ctx, b.clone());
        let one = Gf::one(&ctx);
        let cubic = Poly::new(vec![bbar, abar, Gf::zero(&ctx), one.clone()]);
        // Count roots in the residue field κ: deg gcd(X^|κ| − X, cubic).
        let q = BigInt::from(ctx.p()).pow(ctx.degree() as u32);
        let x = Poly::x(&one);
        let xq = x.powmod(&q, &cubic);
        let rational_roots = cubic.gcd(&xq.sub(&x)).deg_i();
        Some(match rational_roots {
            3 => vec![1, 1, 1],
            1 => vec![1, 2],
            0 => vec![3],
            _ => unreachable!("separable cubic over a finite field"),
        })
    }

    fn rhs_is_square(f: &Poly<Self>) -> bool {
        if f.is_zero() {
            return true;
        }
        if f.lc().legendre() != 1 {
            return false;
        }
        factor_fp(f).iter().all(|(_, e)| e % 2 == 0)
    }

    fn fmt_elem(c: &Self) -> String {
        c.v.to_string()
    }
}

/// Coarse classification of the surface by its Euler number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceClass {
    Rational,
    K3,
    Other,
}

impl std::fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurfaceClass::Rational => write!(f, "rational"),
            SurfaceClass::K3 => write!(f, "K3"),
            SurfaceClass::Other => write!(f, "other"),
        }
    }
}

/// Which Weierstrass shape the stored pair of polynomials describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelForm {
    /// y² = x³ + A x + B; the stored pair is (A, B).
    Short,
    /// y² = x(x² + 2a x + b); carries the 2-torsion point (0,0).
    TwoTorsion,
    /// y² = x³ + 27a(x − 4b)²; the form adapted to a rational 3-isogeny.
    ThreeIsog,
}

/// An elliptic surface over k(t) in Weierstrass form.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassModel<K: SurfaceBase> {
    pub form: ModelForm,
    /// First coefficient polynomial: A for `Short`, a otherwise.
    pub a: Poly<K>,
    /// Second coefficient polynomial: B for `Short`, b otherwise.
    pub b: Poly<K>,
    /// Declared surface class; steers the choice of the chart exponent at
    /// t = ∞, with automatic fallback to the minimal valid exponent.
    pub declared: Option<SurfaceClass>,
}

/// Short-form coefficients of y² = x(x² + 2ax + b) after x → x − 2a/3.
pub fn short_from_two_torsion<K: CoeffField>(a: &Poly<K>, b: &Poly<K>) -> (Poly<K>, Poly<K>) {
    let w = poly_witness(a, b);
    let frac = |n: i64, d: i64| w.int_like(n).div(&w.int_like(d));
    // A = b − 4a²/3, B = 16a³/27 − 2ab/3.
    let a2 = a.mul(a);
    let a3 = a2.mul(a);
    let big_a = b.sub(&a2.scale(&frac(4, 3)));
    let big_b = a3.scale(&frac(16, 27)).sub(&a.mul(b).scale(&frac(2, 3)));
    (big_a, big_b)
}

/// Short-form coefficients of y² = x³ + 27a(x − 4b)² after x → x − 9a.
pub fn short_from_three_isog<K: CoeffField>(a: &Poly<K>, b: &Poly<K>) -> (Poly<K>, Poly<K>) {
    let w = poly_witness(a, b);
    let int = |n: i64| w.int_like(n);
    // Expanding gives y² = x³ + 27a x² − 216ab x + 432ab²; depressing the
    // cube leaves A = −27a(9a + 8b), B = 54a(27a² + 36ab + 8b²).
    let a2 = a.mul(a);
    let ab = a.mul(b);
    let b2 = b.mul(b);
    let big_a = a
        .mul(&a.scale(&int(9)).add(&b.scale(&int(8))))
        .scale(&int(-27));
    let inner = a2
        .scale(&int(27))
        .add(&ab.scale(&int(36)))
        .add(&b2.scale(&int(8)));
    let big_b = a.mul(&inner).scale(&int(54));
    (big_a, big_b)
}

fn poly_witness<K: CoeffField>(a: &Poly<K>, b: &Poly<K>) -> K {
    a.coeffs()
        .first()
        .or_else(|| b.coeffs().first())
        .cloned()
        .expect("model with both coefficient polynomials zero")
}

impl<K: SurfaceBase> WeierstrassModel<K> {
    pub fn short(a: Poly<K>, b: Poly<K>) -> Self {
        WeierstrassModel { form: ModelForm::Short, a, b, declared: None }
    }

    pub fn two_torsion(a: Poly<K>, b: Poly<K>) -> Self {
        WeierstrassModel { form: ModelForm::TwoTorsion, a, b, declared: None }
    }

    pub fn three_isog(a: Poly<K>, b: Poly<K>) -> Self {
        WeierstrassModel { form: ModelForm::ThreeIsog, a, b, declared: None }
    }

    pub fn with_class(mut self, class: SurfaceClass) -> Self {
        self.declared = Some(class);
        self
    }

    /// A sample coefficient, for constructing constants of the right field.
    pub fn witness(&self) -> K {
        poly_witness(&self.a, &self.b)
    }

    fn check_char(&self) -> Result<(), SurfaceError> {
        match K::residue_char(&self.witness()) {
            Some(p) if p < 5 => Err(SurfaceError::SmallCharacteristic(p)),
            _ => Ok(()),
        }
    }

    /// The short-form coefficient pair (A, B), converting if necessary.
    pub fn short_ab(&self) -> Result<(Poly<K>, Poly<K>), SurfaceError> {
        self.check_char()?;
        Ok(match self.form {
            ModelForm::Short => (self.a.clone(), self.b.clone()),
            ModelForm::TwoTorsion => short_from_two_torsion(&self.a, &self.b),
            ModelForm::ThreeIsog => short_from_three_isog(&self.a, &self.b),
        })
    }

    /// The isomorphic short model y² = x³ + Ax + B (idempotent on short input).
    pub fn to_short_form(&self) -> Result<WeierstrassModel<K>, SurfaceError> {
        let (big_a, big_b) = self.short_ab()?;
        Ok(WeierstrassModel {
            form: ModelForm::Short,
            a: big_a,
            b: big_b,
            declared: self.declared,
        })
    }

    /// The x-shift μ(t) with RHS_form(X − μ) = RHS_short(X); points move by
    /// x ↦ x + μ when passing to the short form.
    pub fn x_shift(&self) -> Poly<K> {
        let w = self.witness();
        match self.form {
            ModelForm::Short => Poly::zero(),
            ModelForm::TwoTorsion => self.a.scale(&w.int_like(2).div(&w.int_like(3))),
            ModelForm::ThreeIsog => self.a.scale(&w.int_like(9)),
        }
    }

    /// Discriminant Δ = −16(4A³ + 27B²) of the short form.
    pub fn discriminant(&self) -> Result<Poly<K>, SurfaceError> {
        let (big_a, big_b) = self.short_ab()?;
        let w = self.witness();
        let four_a3 = big_a.mul(&big_a).mul(&big_a).scale(&w.int_like(4));
        let t27_b2 = big_b.mul(&big_b).scale(&w.int_like(27));
        Ok(four_a3.add(&t27_b2).scale(&w.int_like(-16)))
    }

    /// The short-form right-hand side x³ + A x + B as a polynomial in x
    /// with coefficients in k(t).
    pub fn short_rhs_x(&self) -> Result<Poly<RatFunc<K>>, SurfaceError> {
        let (big_a, big_b) = self.short_ab()?;
        let w = self.witness();
        Ok(Poly::new(vec![
            poly_to_ratfunc(big_b, &w),
            poly_to_ratfunc(big_a, &w),
            RatFunc::constant(w.zero_like()),
            RatFunc::constant(w.one_like()),
        ]))
    }

    /// Chart exponent e at t = ∞: A*(s) = s^{4e} A(1/s), B*(s) = s^{6e} B(1/s).
    ///
    /// The declared surface class requests e = 2 (K3) or e = 1 (rational);
    /// if that is too small for the actual degrees, the minimal valid
    /// exponent wins.
    pub fn infinity_exponent(&self) -> Result<i64, SurfaceError> {
        let (big_a, big_b) = self.short_ab()?;
        let need = |d: i64, q: i64| if d <= 0 { 1 } else { (d + q - 1) / q };
        let minimal = need(big_a.deg_i(), 4).max(need(big_b.deg_i(), 6)).max(1);
        let declared = match self.declared {
            Some(SurfaceClass::K3) => 2,
            _ => 1,
        };
        Ok(minimal.max(declared))
    }
}

/// A polynomial as a rational function, tolerating the zero polynomial.
pub fn poly_to_ratfunc<K: CoeffField>(p: Poly<K>, w: &K) -> RatFunc<K> {
    if p.is_zero() {
        RatFunc::constant(w.zero_like())
    } else {
        RatFunc::from_poly(p)
    }
}

/// f written in the chart at infinity: s^n f(1/s), requiring deg f ≤ n.
pub fn infinity_chart<K: CoeffField>(f: &Poly<K>, n: usize, w: &K) -> Poly<K> {
    let mut c = vec![w.zero_like(); n + 1];
    for (i, ci) in f.coeffs().iter().enumerate() {
        c[n - i] = ci.clone();
    }
    Poly::new(c)
}

/// Reduce a model over ℚ modulo p, coefficient by coefficient.
///
/// Fails when any denominator is divisible by p (bad reduction of the model
/// data itself, as opposed to bad reduction of fibres).
pub fn reduce_mod_p(
    model: &WeierstrassModel<BigRat>,
    p: u64,
) -> Result<WeierstrassModel<Fp>, SurfaceError> {
    if p < 5 {
        return Err(SurfaceError::SmallCharacteristic(p));
    }
    let conv = |f: &Poly<BigRat>, label: &str| -> Result<Poly<Fp>, SurfaceError> {
        let coeffs: Option<Vec<Fp>> = f.coeffs().iter().map(|c| Fp::from_rat(c, p)).collect();
        coeffs.map(Poly::new).ok_or_else(|| {
            SurfaceError::Degenerate(format!(
                "coefficient denominator of {} divisible by {}",
                label, p
            ))
        })
    };
    Ok(WeierstrassModel {
        form: model.form,
        a: conv(&model.a, "the first coefficient polynomial")?,
        b: conv(&model.b, "the second coefficient polynomial")?,
        declared: model.declared,
    })
}

/// A polynomial over ℚ from integer coefficients, lowest first.
pub fn qpoly(coeffs: &[i64]) -> Poly<BigRat> {
    Poly::new(coeffs.iter().map(|&n| BigRat::from(BigInt::from(n))).collect())
}

/// True iff the rational number is a square in ℚ.
pub fn is_rat_square(c: &BigRat) -> bool {
    !c.is_negative() && rat_sqrt(c).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    type Q = BigRat;
    /// ℚ(a)(b): a is the inner variable, b the outer one.
    type Tower = RatFunc<RatFunc<Q>>;

    fn qr(n: i64) -> Q {
        Q::from(BigInt::from(n))
    }

    fn symbolic_ab() -> (Tower, Tower) {
        let inner_x: RatFunc<Q> = RatFunc::x(&qr(0));
        let a: Tower = RatFunc::constant(inner_x.clone());
        let b: Tower = RatFunc::x(&inner_x.zero_like());
        (a, b)
    }

    fn scalar_short_pair(
        form: fn(&Poly<Tower>, &Poly<Tower>) -> (Poly<Tower>, Poly<Tower>),
        a: &Tower,
        b: &Tower,
    ) -> (Tower, Tower) {
        let (big_a, big_b) = form(&Poly::constant(a.clone()), &Poly::constant(b.clone()));
        let w = a.zero_like();
        (big_a.coeff_or_zero(0, &w), big_b.coeff_or_zero(0, &w))
    }

    /// Substituting x ↦ x − shift into the original right-hand side must
    /// give exactly the depressed cubic: completion of the cube is exact.
    #[test]
    fn two_torsion_resubstitution_identity() {
        let (a, b) = symbolic_ab();
        let one = a.one_like();
        let zero = a.zero_like();
        let (big_a, big_b) = scalar_short_pair(short_from_two_torsion, &a, &b);
        // Original rhs in x: x³ + 2a x² + b x (coefficients in the tower).
        let orig = Poly::new(vec![
            zero.clone(),
            b.clone(),
            a.mul(&a.int_like(2)),
            one.clone(),
        ]);
        let shift = a.mul(&a.int_like(2)).div(&a.int_like(3));
        let x_minus_shift = Poly::new(vec![shift.neg(), one.clone()]);
        let depressed = Poly::new(vec![big_b, big_a, zero, one]);
        assert_eq!(orig.compose(&x_minus_shift), depressed);
    }

    #[test]
    fn three_isog_resubstitution_identity() {
        let (a, b) = symbolic_ab();
        let one = a.one_like();
        let zero = a.zero_like();
        let (big_a, big_b) = scalar_short_pair(short_from_three_isog, &a, &b);
        // Original rhs: x³ + 27a(x − 4b)².
        let x = Poly::new(vec![zero.clone(), one.clone()]);
        let lin = x.sub(&Poly::constant(b.mul(&b.int_like(4))));
        let orig = x
            .mul(&x)
            .mul(&x)
            .add(&lin.mul(&lin).scale(&a.mul(&a.int_like(27))));
        let shift = a.mul(&a.int_like(9));
        let x_minus_shift = Poly::new(vec![shift.neg(), one]);
        let depressed = Poly::new(vec![big_b, big_a, zero, a.one_like()]);
        assert_eq!(orig.compose(&x_minus_shift), depressed);
    }

    #[test]
    fn short_form_is_idempotent() {
        let m = WeierstrassModel::short(qpoly(&[1, 2]), qpoly(&[3, 0, 1]));
        let s = m.to_short_form().unwrap();
        assert_eq!(s, m);
    }

    #[test]
    fn two_torsion_with_zero_a_keeps_b() {
        let m = WeierstrassModel::two_torsion(Poly::zero(), qpoly(&[5, 1]));
        let s = m.to_short_form().unwrap();
        assert_eq!(s.a, qpoly(&[5, 1]));
        assert!(s.b.is_zero());
    }

    #[test]
    fn discriminant_of_two_torsion_form() {
        // Δ(y² = x(x² + 2ax + b)) = 64 b² (a² − b) on the nose.
        let a = qpoly(&[1, 1]);
        let b = qpoly(&[0, 3, 0, 1]);
        let m = WeierstrassModel::two_torsion(a.clone(), b.clone());
        let delta = m.discriminant().unwrap();
        let expect = b.mul(&b).mul(&a.mul(&a).sub(&b)).scale(&qr(64));
        assert_eq!(delta, expect);
    }

    #[test]
    fn infinity_chart_reverses_coefficients() {
        let f = qpoly(&[1, 0, 7]);
        let g = infinity_chart(&f, 4, &qr(0));
        assert_eq!(g, qpoly(&[0, 0, 7, 0, 1]));
    }

    #[test]
    fn infinity_exponent_prefers_declared_class() {
        let m = WeierstrassModel::short(qpoly(&[1]), qpoly(&[0, 1]));
        assert_eq!(m.infinity_exponent().unwrap(), 1);
        let k3 = m.clone().with_class(SurfaceClass::K3);
        assert_eq!(k3.infinity_exponent().unwrap(), 2);
        // Degrees forcing e = 2 override a rational declaration.
        let big = WeierstrassModel::short(qpoly(&[1, 0, 0, 0, 0, 1]), qpoly(&[1]))
            .with_class(SurfaceClass::Rational);
        assert_eq!(big.infinity_exponent().unwrap(), 2);
    }

    #[test]
    fn reduce_mod_p_rejects_bad_denominators() {
        let fifth = Q::new(BigInt::one(), BigInt::from(5));
        let m = WeierstrassModel::short(Poly::constant(fifth), qpoly(&[1]));
        assert!(reduce_mod_p(&m, 5).is_err());
        assert!(reduce_mod_p(&m, 7).is_ok());
        assert!(matches!(
            reduce_mod_p(&m, 3),
            Err(SurfaceError::SmallCharacteristic(3))
        ));
    }

    #[test]
    fn small_characteristic_rejected() {
        let m = WeierstrassModel::short(
            Poly::constant(Fp::new(1, 3)),
            Poly::constant(Fp::new(1, 3)),
        );
        assert!(matches!(
            m.short_ab(),
            Err(SurfaceError::SmallCharacteristic(3))
        ));
    }

    #[test]
    fn fp_rhs_square_test_tracks_leading_class() {
        // 2 is a nonsquare mod 5; 2(t+1)² is not a square, 4(t+1)² is.
        let sq = Poly::from_i64_mod(&[1, 2, 1], 5);
        assert!(Fp::rhs_is_square(&sq.scale(&Fp::new(4, 5))));
        assert!(!Fp::rhs_is_square(&sq.scale(&Fp::new(2, 5))));
        assert!(!Fp::rhs_is_square(&Poly::from_i64_mod(&[1, 1], 5)));
    }

    #[test]
    fn rat_rhs_square_test_is_geometric() {
        // −(t²−2)² is a square times a constant: admissible over ℚ̄.
        let f = qpoly(&[4, 0, -4, 0, 1]).scale(&qr(-1));
        assert!(BigRat::rhs_is_square(&f));
        assert!(!BigRat::rhs_is_square(&qpoly(&[0, 1])));
    }
}
