//! Finite extension fields 𝔽_{p^k} realized as 𝔽_p[x]/(m) for a monic
//! irreducible modulus m. Elements carry a shared context handle, so the
//! type slots into the witness-based `CoeffField` machinery and all the
//! generic polynomial code (gcds, factorization helpers, curve formulas)
//! works over them unchanged.

use std::sync::Arc;

use super::arith::is_prime_u64;
use super::field::{CoeffField, Fp};
use super::poly::{is_irreducible_fp, FpPoly, Poly};

/// Shared description of one field 𝔽_{p^k}: the prime and the modulus.
#[derive(Clone, PartialEq, Debug)]
pub struct GfCtx {
    p: u64,
    modulus: FpPoly,
}

impl GfCtx {
    /// The field with the canonical modulus: the monic irreducible of
    /// degree k whose non-leading coefficients, read as base-p digits with
    /// the constant term least significant, form the smallest integer.
    /// Degree 1 always yields the modulus x, so `Gf` over it is 𝔽_p itself.
    pub fn new(p: u64, k: usize) -> Arc<GfCtx> {
        assert!(is_prime_u64(p) && p > 2, "GfCtx requires an odd prime, got {p}");
        assert!(k >= 1, "extension degree must be at least 1");
        let q = p.checked_pow(k as u32).expect("field order overflows u64");
        for n in 0..q {
            let mut coeffs: Vec<i64> = digits_base_p(n, p, k).iter().map(|&d| d as i64).collect();
            coeffs.push(1);
            let cand = FpPoly::from_i64_mod(&coeffs, p);
            if is_irreducible_fp(&cand) {
                return Arc::new(GfCtx { p, modulus: cand });
            }
        }
        unreachable!("an irreducible monic polynomial of each degree exists over 𝔽_p");
    }

    /// The field 𝔽_p[x]/(m) for a caller-supplied monic irreducible m —
    /// the natural form for residue fields of places.
    pub fn with_modulus(modulus: FpPoly) -> Arc<GfCtx> {
        let p = modulus.modulus().expect("modulus must be a nonzero polynomial over some 𝔽_p");
        assert!(p > 2, "GfCtx requires an odd prime, got {p}");
        assert!(modulus.deg_i() >= 1, "modulus must be non-constant");
        assert!(modulus.lc().v == 1, "modulus must be monic");
        assert!(is_irreducible_fp(&modulus), "modulus must be irreducible");
        Arc::new(GfCtx { p, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree k.
    pub fn degree(&self) -> usize {
        self.modulus.deg().expect("modulus is non-constant")
    }

    /// Field order q = p^k.
    pub fn order(&self) -> u64 {
        self.p
            .checked_pow(self.degree() as u32)
            .expect("field order overflows u64")
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }
}

fn digits_base_p(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    let mut ds = Vec::with_capacity(k);
    for _ in 0..k {
        ds.push(n % p);
        n /= p;
    }
    debug_assert_eq!(n, 0);
    ds
}

/// An element of 𝔽_{p^k}: a residue mod the context's modulus.
#[derive(Clone, PartialEq, Debug)]
pub struct Gf {
    rep: FpPoly,
    ctx: Arc<GfCtx>,
}

impl Gf {
    pub fn new(ctx: &Arc<GfCtx>, rep: FpPoly) -> Gf {
        if let Some(p) = rep.modulus() {
            assert_eq!(p, ctx.p, "representative over the wrong prime field");
        }
        Gf { rep: rep.rem(&ctx.modulus), ctx: ctx.clone() }
    }

    pub fn zero(ctx: &Arc<GfCtx>) -> Gf {
        Gf { rep: Poly::zero(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &Arc<GfCtx>) -> Gf {
        Gf::from_fp(ctx, Fp::from_u64(1, ctx.p))
    }

    /// The class of x (a generator of the field over 𝔽_p when k > 1).
    pub fn gen(ctx: &Arc<GfCtx>) -> Gf {
        Gf::new(ctx, Poly::x(&Fp::from_u64(0, ctx.p)))
    }

    pub fn from_fp(ctx: &Arc<GfCtx>, v: Fp) -> Gf {
        assert_eq!(v.p, ctx.p);
        Gf::new(ctx, Poly::constant(v))
    }

    pub fn from_u64(ctx: &Arc<GfCtx>, v: u64) -> Gf {
        Gf::from_fp(ctx, Fp::from_u64(v, ctx.p))
    }

    pub fn from_i64(ctx: &Arc<GfCtx>, v: i64) -> Gf {
        Gf::from_fp(ctx, Fp::new(v, ctx.p))
    }

    /// The n-th element in the fixed enumeration 0 ≤ n < q: base-p digits
    /// of n, constant coefficient least significant.
    pub fn from_index(ctx: &Arc<GfCtx>, n: u64) -> Gf {
        assert!(n < ctx.order());
        let coeffs: Vec<i64> =
            digits_base_p(n, ctx.p, ctx.degree()).iter().map(|&d| d as i64).collect();
        Gf::new(ctx, FpPoly::from_i64_mod(&coeffs, ctx.p))
    }

    /// Position of this element in the `from_index` enumeration.
    pub fn index(&self) -> u64 {
        let mut n = 0u64;
        for (i, c) in self.rep.coeffs().iter().enumerate() {
            n += c.v * self.ctx.p.pow(i as u32);
        }
        n
    }

    pub fn ctx(&self) -> &Arc<GfCtx> {
        &self.ctx
    }

    pub fn rep(&self) -> &FpPoly {
        &self.rep
    }

    /// The image in 𝔽_p when the element lies in the prime field.
    pub fn as_fp(&self) -> Option<Fp> {
        if self.rep.deg_i() > 0 {
            return None;
        }
        Some(self.rep.coeff_or_zero(0, &Fp::from_u64(0, self.ctx.p)))
    }

    pub fn pow(&self, mut e: u64) -> Gf {
        let mut acc = Gf::one(&self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The p-power Frobenius z ↦ z^p.
    pub fn frobenius(&self) -> Gf {
        self.pow(self.ctx.p)
    }

    /// Degree of the subfield 𝔽_p(z) generated by this element: the least
    /// d with z^{p^d} = z.
    pub fn degree_over_prime(&self) -> usize {
        let mut z = self.frobenius();
        let mut d = 1;
        while z != *self {
            z = z.frobenius();
            d += 1;
        }
        d
    }

    /// Euler-criterion square test; zero counts as a square.
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let q = self.ctx.order();
        self.pow((q - 1) / 2) == Gf::one(&self.ctx)
    }

    /// A square root via Tonelli–Shanks in the multiplicative group,
    /// None when the element is a non-square.
    pub fn sqrt(&self) -> Option<Gf> {
        let ctx = &self.ctx;
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_square() {
            return None;
        }
        let q = ctx.order();
        // q − 1 = 2^s · t with t odd.
        let mut t = q - 1;
        let mut s = 0;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        if s == 1 {
            return Some(self.pow((q + 1) / 4));
        }
        // A deterministic non-square to seed the 2-Sylow walk.
        let mut n = 2u64;
        let nonsq = loop {
            let z = Gf::from_index(ctx, n);
            if !z.is_zero() && !z.is_square() {
                break z;
            }
            n += 1;
        };
        let mut c = nonsq.pow(t);
        let mut r = self.pow((t + 1) / 2);
        let mut u = self.pow(t);
        let one = Gf::one(ctx);
        let mut m = s;
        while u != one {
            let mut i = 0u32;
            let mut z = u.clone();
            while z != one {
                z = z.mul(&z);
                i += 1;
            }
            debug_assert!(i < m);
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.mul(&b);
            }
            r = r.mul(&b);
            c = b.mul(&b);
            u = u.mul(&c);
            m = i;
        }
        Some(r)
    }
}

impl CoeffField for Gf {
    fn zero_like(&self) -> Self {
        Gf::zero(&self.ctx)
    }

    fn one_like(&self) -> Self {
        Gf::one(&self.ctx)
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Gf { rep: self.rep.add(&other.rep), ctx: self.ctx.clone() }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Gf { rep: self.rep.sub(&other.rep), ctx: self.ctx.clone() }
    }

    fn neg(&self) -> Self {
        Gf { rep: self.rep.neg(), ctx: self.ctx.clone() }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Gf { rep: self.rep.mul(&other.rep).rem(&self.ctx.modulus), ctx: self.ctx.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.rep.xgcd(&self.ctx.modulus);
        debug_assert_eq!(g.deg_i(), 0);
        let ginv = g.lc().inv().expect("gcd with an irreducible modulus is a unit");
        Some(Gf { rep: s.scale(&ginv).rem(&self.ctx.modulus), ctx: self.ctx.clone() })
    }

    fn int_like(&self, n: i64) -> Self {
        Gf::from_i64(&self.ctx, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli_are_the_smallest_irreducibles() {
        let f71 = GfCtx::new(7, 1);
        assert_eq!(f71.modulus(), &FpPoly::from_i64_mod(&[0, 1], 7));
        let f52 = GfCtx::new(5, 2);
        assert_eq!(f52.modulus(), &FpPoly::from_i64_mod(&[2, 0, 1], 5));
        // Determinism: a second construction is identical.
        let again = GfCtx::new(11, 2);
        assert_eq!(GfCtx::new(11, 2).modulus(), again.modulus());
        assert_eq!(again.order(), 121);
    }

    #[test]
    fn arithmetic_and_inverses_round_trip() {
        let ctx = GfCtx::new(5, 3);
        for n in 0..ctx.order() {
            let z = Gf::from_index(&ctx, n);
            assert_eq!(z.index(), n);
            if z.is_zero() {
                assert!(z.inv().is_none());
                continue;
            }
            let zi = z.inv().unwrap();
            assert_eq!(z.mul(&zi), Gf::one(&ctx));
        }
        let g = Gf::gen(&ctx);
        let lhs = g.add(&Gf::from_u64(&ctx, 3)).mul(&g.sub(&Gf::from_u64(&ctx, 3)));
        let rhs = g.mul(&g).sub(&Gf::from_u64(&ctx, 9));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicative_group_has_full_order() {
        let ctx = GfCtx::new(7, 2);
        let q = ctx.order();
        // Every nonzero element satisfies z^(q-1) = 1, and some element has
        // exact order q−1 (the group is cyclic).
        let one = Gf::one(&ctx);
        let mut found_generator = false;
        for n in 1..q {
            let z = Gf::from_index(&ctx, n);
            assert_eq!(z.pow(q - 1), one);
            let full = (1..q - 1).all(|e| z.pow(e) != one);
            found_generator |= full;
            if found_generator {
                break;
            }
        }
        assert!(found_generator);
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        let ctx = GfCtx::new(5, 4);
        for n in 0..ctx.order().min(700) {
            let z = Gf::from_index(&ctx, n);
            let fixed = z.frobenius() == z;
            assert_eq!(fixed, z.as_fp().is_some());
            let d = z.degree_over_prime();
            assert!(d == 1 || d == 2 || d == 4);
            assert_eq!(d == 1, z.as_fp().is_some());
        }
        // Frobenius is additive and multiplicative.
        let a = Gf::from_index(&ctx, 123);
        let b = Gf::from_index(&ctx, 456);
        assert_eq!(a.add(&b).frobenius(), a.frobenius().add(&b.frobenius()));
        assert_eq!(a.mul(&b).frobenius(), a.frobenius().mul(&b.frobenius()));
    }

    #[test]
    fn square_census_matches_brute_force() {
        for (p, k) in [(5u64, 2usize), (7, 2), (13, 1), (5, 3)] {
            let ctx = GfCtx::new(p, k);
            let q = ctx.order();
            let mut squares = std::collections::HashSet::new();
            for n in 0..q {
                let z = Gf::from_index(&ctx, n);
                squares.insert(z.mul(&z).index());
            }
            let mut count = 0u64;
            for n in 0..q {
                let z = Gf::from_index(&ctx, n);
                let claimed = z.is_square();
                assert_eq!(claimed, squares.contains(&n), "square test wrong at index {n} in GF({p}^{k})");
                if claimed && !z.is_zero() {
                    count += 1;
                    let r = z.sqrt().expect("square must have a root");
                    assert_eq!(r.mul(&r), z);
                } else if !claimed {
                    assert!(z.sqrt().is_none());
                }
            }
            assert_eq!(count, (q - 1) / 2);
        }
    }

    #[test]
    fn residue_field_style_modulus() {
        // t² + 4 is irreducible over 𝔽₁₁ (−4 is a non-residue mod 11).
        let pi = FpPoly::from_i64_mod(&[4, 0, 1], 11);
        let ctx = GfCtx::with_modulus(pi.clone());
        assert_eq!(ctx.order(), 121);
        let t = Gf::gen(&ctx);
        assert_eq!(t.mul(&t), Gf::from_i64(&ctx, -4));
        // The class of t has degree 2, its square lies in the prime field.
        assert_eq!(t.degree_over_prime(), 2);
        assert_eq!(t.mul(&t).degree_over_prime(), 1);
    }
}
