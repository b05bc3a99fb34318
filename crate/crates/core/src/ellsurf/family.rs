//! The explicit surface families, with seeded generic-member sampling.
//!
//! Four base-change families (`res5`, `n7`, `n9`, `n11`) take an optional
//! deformation parameter `a` replacing the cyclic cover tⁿ by the Dickson
//! polynomial p_{n,a}(t); four isogeny-adapted families (`prop2cm`,
//! `prop2rm`, `prop3cm`, `prop3rm`) are parametrized by auxiliary
//! polynomials α, β; and two fixed surfaces (`rm5`, `rm7`) carry the
//! degree-5 and degree-7 self-isogenies.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dickson::dickson;
use crate::exactmath::arith::BigRat;
use crate::exactmath::poly::Poly;

use super::model::{qpoly, SurfaceClass, WeierstrassModel};
use super::SurfaceError;

/// Tags for the named families, as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Res5,
    N7,
    N9,
    N11,
    Prop2Cm,
    Prop2Rm,
    Prop3Cm,
    Prop3Rm,
    Rm5,
    Rm7,
}

impl FamilyName {
    pub const ALL: [FamilyName; 10] = [
        FamilyName::Res5,
        FamilyName::N7,
        FamilyName::N9,
        FamilyName::N11,
        FamilyName::Prop2Cm,
        FamilyName::Prop2Rm,
        FamilyName::Prop3Cm,
        FamilyName::Prop3Rm,
        FamilyName::Rm5,
        FamilyName::Rm7,
    ];

    /// Families whose very general member has real multiplication; their
    /// trivial-lattice rank can never exceed 16.
    pub fn has_rm(&self) -> bool {
        !matches!(self, FamilyName::Prop2Cm | FamilyName::Prop3Cm)
    }

    /// Euler number of a generic member (12 for the rational family).
    pub fn expected_euler(&self) -> i64 {
        match self {
            FamilyName::Res5 => 12,
            _ => 24,
        }
    }
}

impl std::fmt::Display for FamilyName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyName::Res5 => "res5",
            FamilyName::N7 => "n7",
            FamilyName::N9 => "n9",
            FamilyName::N11 => "n11",
            FamilyName::Prop2Cm => "prop2cm",
            FamilyName::Prop2Rm => "prop2rm",
            FamilyName::Prop3Cm => "prop3cm",
            FamilyName::Prop3Rm => "prop3rm",
            FamilyName::Rm5 => "rm5",
            FamilyName::Rm7 => "rm7",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for FamilyName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyName::ALL
            .iter()
            .copied()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| format!("unknown family '{}'", s))
    }
}

fn qr(n: i64) -> BigRat {
    BigRat::from(BigInt::from(n))
}

fn half() -> BigRat {
    BigRat::new(BigInt::from(1), BigInt::from(2))
}

fn check_deg(f: &Poly<BigRat>, bound: i64, what: &str) -> Result<(), SurfaceError> {
    if f.deg_i() > bound {
        return Err(SurfaceError::DegreeBounds(format!(
            "deg({}) = {} exceeds the family bound {}",
            what,
            f.deg_i(),
            bound
        )));
    }
    Ok(())
}

/// f(t²).
fn at_t2(f: &Poly<BigRat>) -> Poly<BigRat> {
    f.compose(&qpoly(&[0, 0, 1]))
}

/// The degree-n cover map: tⁿ, or its Dickson deformation p_{n,a}(t).
fn cover_poly(n: usize, deform: Option<&BigRat>) -> Poly<BigRat> {
    match deform {
        None => qpoly(&[1]).shift(n),
        Some(a) => dickson(n)
            .expect("Dickson polynomial of positive degree")
            .at_param(a),
    }
}

/// y² = x³ + a₁(t)x + a₂(t) with deg(aᵢ) ≤ i: a rational elliptic surface
/// with a IV* fibre at ∞.  A deformation parameter pulls the family back
/// along t = p_{5,a}(s), giving K3 surfaces.
pub fn res5(
    a1: &Poly<BigRat>,
    a2: &Poly<BigRat>,
    deform: Option<&BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(a1, 1, "a1")?;
    check_deg(a2, 2, "a2")?;
    Ok(match deform {
        None => WeierstrassModel::short(a1.clone(), a2.clone()).with_class(SurfaceClass::Rational),
        Some(a) => {
            let p = cover_poly(5, Some(a));
            WeierstrassModel::short(a1.compose(&p), a2.compose(&p))
                .with_class(SurfaceClass::K3)
        }
    })
}

/// y² = x³ + (b₁t⁷ + b₀)x + (c₁t⁷ + c₀), optionally with t⁷ → p_{7,a}(t).
pub fn n7(
    b1: &BigRat,
    b0: &BigRat,
    c1: &BigRat,
    c0: &BigRat,
    deform: Option<&BigRat>,
) -> WeierstrassModel<BigRat> {
    let u = cover_poly(7, deform);
    let a = u.scale(b1).add(&Poly::constant(b0.clone()));
    let b = u.scale(c1).add(&Poly::constant(c0.clone()));
    WeierstrassModel::short(a, b).with_class(SurfaceClass::K3)
}

/// y² = x³ + bx + (c₁t⁹ + c₀), optionally with t⁹ → p_{9,a}(t).
pub fn n9(b: &BigRat, c1: &BigRat, c0: &BigRat, deform: Option<&BigRat>) -> WeierstrassModel<BigRat> {
    let u = cover_poly(9, deform);
    WeierstrassModel::short(
        Poly::constant(b.clone()),
        u.scale(c1).add(&Poly::constant(c0.clone())),
    )
    .with_class(SurfaceClass::K3)
}

/// y² = x³ + bx + (c₁t¹¹ + c₀), optionally with t¹¹ → p_{11,a}(t).
pub fn n11(
    b: &BigRat,
    c1: &BigRat,
    c0: &BigRat,
    deform: Option<&BigRat>,
) -> WeierstrassModel<BigRat> {
    let u = cover_poly(11, deform);
    WeierstrassModel::short(
        Poly::constant(b.clone()),
        u.scale(c1).add(&Poly::constant(c0.clone())),
    )
    .with_class(SurfaceClass::K3)
}

/// y² = x(x² + 2α(t²)x + ½α(t²)² + tβ(t²)), deg α ≤ 2, deg β ≤ 3: the
/// degree-2 self-isogeny family with a = a∘σ under σ(t) = −t.
pub fn prop2cm(
    alpha: &Poly<BigRat>,
    beta: &Poly<BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(alpha, 2, "alpha")?;
    check_deg(beta, 3, "beta")?;
    let a = at_t2(alpha);
    let b = a.mul(&a).scale(&half()).add(&at_t2(beta).shift(1));
    Ok(WeierstrassModel::two_torsion(a, b).with_class(SurfaceClass::K3))
}

/// y² = x(x² + 2tα(t²)x + ½t²α(t²)² + tβ(t²)), deg α ≤ 1, deg β ≤ 3: the
/// degree-2 self-isogeny family with a = −a∘σ under σ(t) = −t.
pub fn prop2rm(
    alpha: &Poly<BigRat>,
    beta: &Poly<BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(alpha, 1, "alpha")?;
    check_deg(beta, 3, "beta")?;
    let a = at_t2(alpha).shift(1);
    let b = a.mul(&a).scale(&half()).add(&at_t2(beta).shift(1));
    Ok(WeierstrassModel::two_torsion(a, b).with_class(SurfaceClass::K3))
}

/// The stratum of `prop2rm` where t divides β: three fibres I₁, I₂, III
/// merge into I₀* at t = 0, raising the very general Picard number to 12.
pub fn prop2rm_i0star_stratum(
    alpha: &Poly<BigRat>,
    gamma: &Poly<BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(gamma, 2, "gamma")?;
    prop2rm(alpha, &gamma.shift(1))
}

/// The stratum of either degree-2 family where α ≡ 0: the generic fibre
/// y² = x³ + tβ(t²)x has an order-4 automorphism, so the quadratic
/// multiplication extends to the eighth cyclotomic field.
pub fn prop2_zeta8_stratum(beta: &Poly<BigRat>) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    prop2cm(&Poly::zero(), beta)
}

/// y² = x³ + 27a(x − 4b)² with a = α(t²), b = −½a + tβ(t²); deg α ≤ 2,
/// deg β ≤ 1: the degree-3 self-isogeny family with a = a∘σ.
pub fn prop3cm(
    alpha: &Poly<BigRat>,
    beta: &Poly<BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(alpha, 2, "alpha")?;
    check_deg(beta, 1, "beta")?;
    let a = at_t2(alpha);
    let b = a.scale(&-half()).add(&at_t2(beta).shift(1));
    Ok(WeierstrassModel::three_isog(a, b).with_class(SurfaceClass::K3))
}

/// y² = x³ + 27a(x − 4b)² with a = tα(t²), b = −½a + β(t²); deg α ≤ 1,
/// deg β ≤ 2: the degree-3 self-isogeny family with a = −a∘σ.
pub fn prop3rm(
    alpha: &Poly<BigRat>,
    beta: &Poly<BigRat>,
) -> Result<WeierstrassModel<BigRat>, SurfaceError> {
    check_deg(alpha, 1, "alpha")?;
    check_deg(beta, 2, "beta")?;
    let a = at_t2(alpha).shift(1);
    let b = a.scale(&-half()).add(&at_t2(beta));
    Ok(WeierstrassModel::three_isog(a, b).with_class(SurfaceClass::K3))
}

/// The fixed K3 surface with a degree-5 self-isogeny over t ↦ 125/t:
/// y² = x³ − 27(t²−125)²(t²+10t+5)(t²+22t+125)x
///          − 54(t²+4t−1)(t²−125)³(t²+22t+125)².
pub fn rm5() -> WeierstrassModel<BigRat> {
    let d = qpoly(&[-125, 0, 1]);
    let f = qpoly(&[5, 10, 1]);
    let g = qpoly(&[125, 22, 1]);
    let h = qpoly(&[-1, 4, 1]);
    let big_a = d.pow(2).mul(&f).mul(&g).scale(&qr(-27));
    let big_b = h.mul(&d.pow(3)).mul(&g.pow(2)).scale(&qr(-54));
    WeierstrassModel::short(big_a, big_b).with_class(SurfaceClass::K3)
}

/// The fixed K3 surface with a degree-7 self-isogeny over t ↦ 49/t:
/// y² = x³ − 27(t²+13t+49)(t²+5t+1)(t²−49)²x
///          + 54(t²+13t+49)(t⁴+14t³+63t²+70t−7)(t²−49)³.
pub fn rm7() -> WeierstrassModel<BigRat> {
    let q = qpoly(&[49, 13, 1]);
    let r = qpoly(&[1, 5, 1]);
    let d = qpoly(&[-49, 0, 1]);
    let s = qpoly(&[-7, 70, 63, 14, 1]);
    let big_a = q.mul(&r).mul(&d.pow(2)).scale(&qr(-27));
    let big_b = q.mul(&s).mul(&d.pow(3)).scale(&qr(54));
    WeierstrassModel::short(big_a, big_b).with_class(SurfaceClass::K3)
}

fn is_squarefree(f: &Poly<BigRat>) -> bool {
    f.squarefree_part_char0().deg_i() == f.deg_i()
}

fn coprime(f: &Poly<BigRat>, g: &Poly<BigRat>) -> bool {
    f.gcd(g).deg_i() == 0
}

struct Draw {
    rng: ChaCha8Rng,
}

impl Draw {
    fn int(&mut self, lo: i64, hi: i64) -> BigRat {
        qr(self.rng.gen_range(lo..=hi))
    }

    fn nonzero(&mut self) -> BigRat {
        loop {
            let v = self.rng.gen_range(-9..=9);
            if v != 0 {
                return qr(v);
            }
        }
    }

    /// Random coefficients in [−9, 9]; `exact` forces the stated degree.
    fn poly(&mut self, deg: usize, exact: bool) -> Poly<BigRat> {
        let mut c: Vec<BigRat> = (0..=deg).map(|_| self.int(-9, 9)).collect();
        if exact {
            c[deg] = self.nonzero();
        }
        Poly::new(c)
    }

    fn deform(&mut self) -> Option<BigRat> {
        Some(self.int(-3, 3))
    }
}

/// A reproducible generic member of the named family.
///
/// Coefficients are small seeded integers; draws with merged or missing
/// fibres (degenerate discriminants, vanishing leading coefficients) are
/// discarded and redrawn, so the returned member shows the family's
/// generic fibre configuration.  The two fixed surfaces ignore the seed.
pub fn sample_member(name: FamilyName, seed: u64) -> WeierstrassModel<BigRat> {
    let mut d = Draw {
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    for _ in 0..500 {
        let model = match name {
            FamilyName::Res5 => {
                let a1 = d.poly(1, false);
                let a2 = d.poly(2, true);
                res5(&a1, &a2, None).expect("degrees within bounds")
            }
            FamilyName::N7 => {
                let (b1, c1) = (d.nonzero(), d.nonzero());
                let (b0, c0) = (d.int(-9, 9), d.int(-9, 9));
                n7(&b1, &b0, &c1, &c0, d.deform().as_ref())
            }
            FamilyName::N9 => {
                let (b, c1) = (d.nonzero(), d.nonzero());
                let c0 = d.int(-9, 9);
                n9(&b, &c1, &c0, d.deform().as_ref())
            }
            FamilyName::N11 => {
                let (b, c1) = (d.nonzero(), d.nonzero());
                let c0 = d.int(-9, 9);
                n11(&b, &c1, &c0, d.deform().as_ref())
            }
            FamilyName::Prop2Cm => {
                let alpha = d.poly(2, true);
                let beta = d.poly(3, false);
                prop2cm(&alpha, &beta).expect("degrees within bounds")
            }
            FamilyName::Prop2Rm => {
                let alpha = d.poly(1, true);
                let mut beta = d.poly(3, true);
                let mut c = beta.coeffs().to_vec();
                c[0] = d.nonzero();
                beta = Poly::new(c);
                prop2rm(&alpha, &beta).expect("degrees within bounds")
            }
            FamilyName::Prop3Cm => {
                let alpha = d.poly(2, true);
                let beta = d.poly(1, false);
                prop3cm(&alpha, &beta).expect("degrees within bounds")
            }
            FamilyName::Prop3Rm => {
                let alpha = d.poly(1, true);
                let beta = d.poly(2, true);
                prop3rm(&alpha, &beta).expect("degrees within bounds")
            }
            FamilyName::Rm5 => return rm5(),
            FamilyName::Rm7 => return rm7(),
        };
        if member_is_generic(name, &model) {
            return model;
        }
    }
    panic!("no nondegenerate {} member within the attempt budget", name);
}

/// Family-specific rejection predicate: no merged or degenerate fibres.
fn member_is_generic(name: FamilyName, model: &WeierstrassModel<BigRat>) -> bool {
    let delta = match model.discriminant() {
        Ok(d) if !d.is_zero() => d,
        _ => return false,
    };
    match name {
        FamilyName::Res5 | FamilyName::N7 | FamilyName::N9 | FamilyName::N11 => {
            is_squarefree(&delta)
        }
        FamilyName::Prop2Cm => {
            let (a, b) = (&model.a, &model.b);
            let rest = a.mul(a).sub(b);
            is_squarefree(b) && is_squarefree(&rest) && coprime(b, &rest)
        }
        FamilyName::Prop2Rm => {
            // b = t·g and a² − b = t·h; the shared zero at t = 0 is the
            // expected III fibre, so genericity lives in g and h.
            let (a, b) = (&model.a, &model.b);
            let t = qpoly(&[0, 1]);
            let g = b.exact_div(&t);
            let h = a.mul(a).sub(b).exact_div(&t);
            is_squarefree(&g)
                && is_squarefree(&h)
                && coprime(&g, &h)
                && coprime(&g, &t)
                && coprime(&h, &t)
        }
        FamilyName::Prop3Cm | FamilyName::Prop3Rm => {
            let (a, b) = (&model.a, &model.b);
            let sum = a.add(b);
            is_squarefree(a)
                && is_squarefree(b)
                && is_squarefree(&sum)
                && coprime(a, b)
                && coprime(a, &sum)
                && coprime(b, &sum)
        }
        FamilyName::Rm5 | FamilyName::Rm7 => true,
    }
}
