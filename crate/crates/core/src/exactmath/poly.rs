//! Dense univariate polynomials over any `CoeffField`, with the usual exact
//! toolkit: division, gcd chains, resultants, squarefree decomposition, and
//! full factorization over prime fields. Coefficients are stored lowest
//! degree first; the zero polynomial has an empty coefficient vector.

use super::arith::BigRat;
use super::field::{CoeffField, Fp};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K: CoeffField> {
    c: Vec<K>,
}

impl<K: CoeffField> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |x| x.is_zero()) {
            coeffs.pop();
        }
        Poly { c: coeffs }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn constant(k: K) -> Self {
        Poly::new(vec![k])
    }

    /// x^n with the given coefficient, using `witness` only for zero-fill.
    pub fn monomial(coeff: K, n: usize) -> Self {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![coeff.zero_like(); n];
        c.push(coeff);
        Poly { c }
    }

    /// Linear polynomial x (monic), built from a witness scalar.
    pub fn x(witness: &K) -> Self {
        Poly { c: vec![witness.zero_like(), witness.one_like()] }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> Option<&K> {
        self.c.get(i)
    }

    /// Coefficient of x^i, zero-filled (needs a witness for the zero).
    pub fn coeff_or_zero(&self, i: usize, witness: &K) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| witness.zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree with deg(0) = -1, convenient in valuation arithmetic.
    pub fn deg_i(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lc(&self) -> &K {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.c.get(i), other.c.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.c.iter().map(|x| x.mul(k)).collect())
    }

    /// Multiply by x^n.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![self.c[0].zero_like(); n];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let z = self.c[0].zero_like();
        let mut out = vec![z; self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let w = self.c.first().expect("pow of zero polynomial to exponent 0");
            return Poly::constant(w.one_like());
        }
        let mut acc: Option<Poly<K>> = None;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.c.len() < divisor.c.len() {
            return (Poly::zero(), self.clone());
        }
        let dlc_inv = divisor.lc().inv().expect("leading coefficient not invertible");
        let mut rem = self.c.clone();
        let dq = self.c.len() - divisor.c.len();
        let z = self.c[0].zero_like();
        let mut quot = vec![z; dq + 1];
        for i in (0..=dq).rev() {
            let top = rem[i + divisor.c.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.mul(&dlc_inv);
            for (j, d) in divisor.c.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&q.mul(d));
            }
            quot[i] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Division known to be exact; panics (debug) on nonzero remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "exact_div: nonzero remainder");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("monic: leading coefficient not invertible");
        self.scale(&inv)
    }

    /// Monic gcd; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g (g monic).
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let w = self
            .c
            .first()
            .or_else(|| other.c.first())
            .expect("xgcd of two zero polynomials")
            .clone();
        let one = Poly::constant(w.one_like());
        let zero = Poly::zero();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lcinv = r0.lc().inv().unwrap();
        (r0.scale(&lcinv), s0.scale(&lcinv), t0.scale(&lcinv))
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            out.push(a.mul(&a.int_like(i as i64)));
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero_like();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(a.clone()));
        }
        acc
    }

    /// Reverse coefficients: x^n f(1/x) for n = deg f.
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Poly::new(c)
    }

    /// f(-x).
    pub fn substitute_neg_x(&self) -> Self {
        let out: Vec<K> = self
            .c
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { a.neg() } else { a.clone() })
            .collect();
        Poly::new(out)
    }

    /// Resultant of self and other (0 if either is 0 and the other has
    /// positive degree; constants behave as usual).
    pub fn resultant(&self, other: &Self) -> K {
        let w = self
            .c
            .first()
            .or_else(|| other.c.first())
            .expect("resultant of zero polynomials")
            .clone();
        let mut a = self.clone();
        let mut b = other.clone();
        let mut sign = false;
        let mut acc = w.one_like();
        loop {
            if b.is_zero() {
                return w.zero_like();
            }
            if b.is_constant() {
                let e = a.deg_i().max(0) as u32;
                let mut p = w.one_like();
                for _ in 0..e {
                    p = p.mul(b.lc());
                }
                acc = acc.mul(&p);
                return if sign { acc.neg() } else { acc };
            }
            if a.c.len() < b.c.len() {
                std::mem::swap(&mut a, &mut b);
                if a.deg_i() % 2 == 1 && b.deg_i() % 2 == 1 {
                    sign = !sign;
                }
                continue;
            }
            let r = a.rem(&b);
            let drop = a.deg_i() - r.deg_i();
            let mut p = w.one_like();
            for _ in 0..drop {
                p = p.mul(b.lc());
            }
            acc = acc.mul(&p);
            if a.deg_i() % 2 == 1 && b.deg_i() % 2 == 1 {
                sign = !sign;
            }
            a = b;
            b = r;
        }
    }

    /// Discriminant: (-1)^(n(n-1)/2) res(f, f') / lc(f).
    pub fn discriminant(&self) -> K {
        let n = self.deg().expect("discriminant of zero polynomial");
        assert!(n >= 1);
        let res = self.resultant(&self.derivative());
        let r = res.div(self.lc());
        if (n * (n - 1) / 2) % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// Squarefree part in characteristic zero: f / gcd(f, f').
    pub fn squarefree_part_char0(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's squarefree decomposition (characteristic zero): returns the
    /// list [(g_1, 1), (g_2, 2), ...] with f = lc * prod g_i^i, g_i monic
    /// squarefree and pairwise coprime; factors with g_i = 1 are omitted.
    pub fn squarefree_decomposition_char0(&self) -> Vec<(Self, u32)> {
        assert!(!self.is_zero());
        if self.is_constant() {
            return vec![];
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        if a.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.exact_div(&a);
        let mut c = df.exact_div(&a);
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        loop {
            let g = b.gcd(&d);
            if g.deg_i() > 0 {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g);
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&g);
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Exact polynomial square root, if self = g^2; `leaf_sqrt` extracts
    /// square roots of scalars (returning None on non-squares).
    pub fn sqrt_with(&self, leaf_sqrt: impl Fn(&K) -> Option<K>) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.deg().unwrap();
        if n % 2 != 0 {
            return None;
        }
        let glc = leaf_sqrt(self.lc())?;
        let m = n / 2;
        let z = self.c[0].zero_like();
        let mut g = vec![z.clone(); m + 1];
        g[m] = glc;
        // determine coefficients top-down: coefficient of x^(m+k) in g^2
        for k in (0..m).rev() {
            // c_{m+k} = sum_{i+j = m+k} g_i g_j ; only unknown is g_k
            let mut s = z.clone();
            for i in k + 1..=m {
                let j = (m + k) as i64 - i as i64;
                if j < 0 || j as usize >= i {
                    continue;
                }
                let t = g[i].mul(&g[j as usize]);
                s = s.add(&t).add(&t);
            }
            if (m + k) % 2 == 0 {
                let h = g[(m + k) / 2].clone();
                s = s.add(&h.mul(&h));
            }
            let target = self.coeff_or_zero(m + k, &z);
            let num = target.sub(&s);
            let den = g[m].add(&g[m]);
            g[k] = num.div(&den);
        }
        let cand = Poly::new(g);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl<K: CoeffField> Poly<K> {
    /// Modular exponentiation: self^e mod m.
    pub fn powmod(&self, e: &BigInt, m: &Self) -> Self {
        assert!(!m.is_zero());
        let w = m.lc().clone();
        let mut acc = Poly::constant(w.one_like());
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Rational-coefficient specifics
// ---------------------------------------------------------------------------

pub type QPoly = Poly<BigRat>;

impl Poly<BigRat> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&n| BigRat::from_integer(BigInt::from(n))).collect())
    }

    /// Smallest positive rational c with c*f having coprime integer
    /// coefficients; returns (primitive integer coefficients, c).
    pub fn primitive_integer_form(&self) -> (Vec<BigInt>, BigRat) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for a in &self.c {
            den = num_integer::lcm(den, a.denom().clone());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|a| a.numer() * (&den / a.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        let g = if g.is_zero() { BigInt::one() } else { g };
        let prim: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
        (prim, BigRat::new(den, g))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.c.iter().all(|a| a.denom().is_one())
    }
}

// ---------------------------------------------------------------------------
// Prime-field factorization (squarefree / distinct-degree / equal-degree)
// ---------------------------------------------------------------------------

pub type FpPoly = Poly<Fp>;

impl Poly<Fp> {
    pub fn from_i64_mod(coeffs: &[i64], p: u64) -> Self {
        Poly::new(coeffs.iter().map(|&n| Fp::new(n, p)).collect())
    }

    pub fn modulus(&self) -> Option<u64> {
        self.c.first().map(|f| f.p)
    }
}

/// Squarefree decomposition over F_p, handling the x -> x^p degeneracy.
pub fn squarefree_decomposition_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    assert!(!f.is_zero());
    let p = f.modulus().unwrap();
    if f.is_constant() {
        return vec![];
    }
    let f = f.monic();
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p); p-th root: in F_p coefficients are fixed by Frobenius
        let mut g = Vec::new();
        for (i, a) in f.coeffs().iter().enumerate() {
            if i % (p as usize) == 0 {
                g.push(*a);
            } else {
                assert!(a.is_zero());
            }
        }
        let inner = squarefree_decomposition_fp(&Poly::new(g));
        return inner.into_iter().map(|(q, e)| (q, e * p as u32)).collect();
    }
    let a = f.gcd(&df);
    if a.is_constant() {
        return vec![(f, 1)];
    }
    let w = f.exact_div(&a);
    // w carries each squarefree factor once (those with exponent not
    // divisible by p); pull them out by exponent, then recurse on the
    // p-power part.
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    let mut rest = f.clone();
    let mut w_cur = w;
    let mut i = 1u32;
    while !w_cur.is_constant() {
        rest = rest.exact_div(&w_cur);
        let w_next = w_cur.gcd(&rest);
        let g = w_cur.exact_div(&w_next);
        if !g.is_constant() {
            out.push((g, i));
        }
        w_cur = w_next;
        i += 1;
    }
    if !rest.is_constant() {
        // rest is a p-th power
        for (q, e) in squarefree_decomposition_fp(&rest) {
            out.push((q, e));
        }
        // merge duplicates
        out.sort_by_key(|(q, _)| q.coeffs().iter().map(|c| c.v).collect::<Vec<_>>());
        let mut merged: Vec<(FpPoly, u32)> = Vec::new();
        for (q, e) in out {
            if let Some(last) = merged.last_mut() {
                if last.0 == q {
                    last.1 += e;
                    continue;
                }
            }
            merged.push((q, e));
        }
        return merged;
    }
    out
}

/// Full factorization over F_p into monic irreducibles with multiplicity,
/// deterministic (fixed-seed randomness in the equal-degree splits).
pub fn factor_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition_fp(f) {
        for irred in factor_squarefree_fp(&g, &mut rng) {
            out.push((irred, e));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg_i(), a.0.coeffs().iter().map(|c| c.v).collect::<Vec<_>>())
            .cmp(&(b.0.deg_i(), b.0.coeffs().iter().map(|c| c.v).collect::<Vec<_>>()))
    });
    out
}

fn factor_squarefree_fp(f: &FpPoly, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = f.modulus().unwrap();
    let mut out = Vec::new();
    let x = Poly::x(&Fp::new(0, p));
    // distinct-degree
    let mut h = x.clone();
    let mut rest = f.monic();
    let mut d = 0usize;
    while !rest.is_constant() {
        d += 1;
        if 2 * d > rest.deg().unwrap() {
            out.push(rest.clone());
            break;
        }
        h = h.powmod(&BigInt::from(p), &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_constant() {
            split_equal_degree(&g, d, p, rng, &mut out);
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
        }
    }
    out
}

fn split_equal_degree(f: &FpPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    if f.deg() == Some(d) {
        out.push(f.monic());
        return;
    }
    // Cantor-Zassenhaus (p odd in this crate)
    let e = (BigInt::from(p).pow(d as u32) - 1) / 2;
    loop {
        let n = f.deg().unwrap();
        let coeffs: Vec<Fp> = (0..n).map(|_| Fp::from_u64(rng.gen_range(0..p), p)).collect();
        let r = Poly::new(coeffs);
        if r.is_constant() {
            continue;
        }
        let s = r.powmod(&e, f);
        let one = Poly::constant(Fp::new(1, p));
        let g = f.gcd(&s.sub(&one));
        if !g.is_constant() && g.deg() != f.deg() {
            split_equal_degree(&g, d, p, rng, out);
            split_equal_degree(&f.exact_div(&g), d, p, rng, out);
            return;
        }
    }
}

pub fn is_irreducible_fp(f: &FpPoly) -> bool {
    match f.deg() {
        None | Some(0) => false,
        Some(1) => true,
        Some(n) => {
            let p = f.modulus().unwrap();
            let x = Poly::x(&Fp::new(0, p));
            // x^(p^n) = x mod f, and x^(p^(n/q)) - x coprime to f for q | n
            let mut h = x.clone();
            for _ in 0..n {
                h = h.powmod(&BigInt::from(p), f);
            }
            if h != x.rem(f) {
                return false;
            }
            let mut m = n;
            let mut qs = Vec::new();
            let mut q = 2;
            while q * q <= m {
                if m % q == 0 {
                    qs.push(q);
                    while m % q == 0 {
                        m /= q;
                    }
                }
                q += 1;
            }
            if m > 1 {
                qs.push(m);
            }
            for q in qs {
                let mut h = x.clone();
                for _ in 0..n / q {
                    h = h.powmod(&BigInt::from(p), f);
                }
                let g = f.gcd(&h.sub(&x));
                if !g.is_constant() {
                    return false;
                }
            }
            true
        }
    }
}

/// Roots in F_p of a polynomial (each once, sorted).
pub fn roots_fp(f: &FpPoly) -> Vec<Fp> {
    let p = f.modulus().expect("roots of zero polynomial");
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    // gcd with x^p - x restricts to the product of linear factors
    let x = Poly::x(&Fp::new(0, p));
    let xp = x.powmod(&BigInt::from(p), f);
    let lin = f.gcd(&xp.sub(&x));
    for (g, _) in factor_fp(&lin) {
        if g.deg() == Some(1) {
            let a = g.coeffs()[0];
            out.push(a.neg());
        }
    }
    out.sort_by_key(|a| a.v);
    out
}
