//! Exact factorization in Q[x]: squarefree split, factorization modulo a
//! good prime, Hensel lifting to a Mignotte-style coefficient bound, and
//! subset recombination. Degrees in this crate are small, so the classic
//! quadratic-time recombination is more than fast enough.

use super::arith::{isqrt, BigRat};
use super::field::Fp;
use super::poly::{factor_fp, FpPoly, Poly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Factor f over Q as unit * prod(monic irreducible ^ multiplicity).
pub fn factor_q(f: &Poly<BigRat>) -> (BigRat, Vec<(Poly<BigRat>, u32)>) {
    assert!(!f.is_zero(), "factor_q(0)");
    let unit = f.lc().clone();
    if f.is_constant() {
        return (unit, vec![]);
    }
    let mut out = Vec::new();
    for (g, e) in f.squarefree_decomposition_char0() {
        for h in factor_squarefree_monic(&g) {
            out.push((h, e));
        }
    }
    out.sort_by(|a, b| (a.0.deg_i(), format!("{:?}", a.0)).cmp(&(b.0.deg_i(), format!("{:?}", b.0))));
    (unit, out)
}

pub fn is_irreducible_q(f: &Poly<BigRat>) -> bool {
    match f.deg() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let (_, fac) = factor_q(f);
            fac.len() == 1 && fac[0].1 == 1
        }
    }
}

/// Factor a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree_monic(g: &Poly<BigRat>) -> Vec<Poly<BigRat>> {
    let n = g.deg().unwrap();
    if n == 1 {
        return vec![g.clone()];
    }
    // clear denominators: G = c*g integer primitive, lc(G) = c
    let (gi, _) = g.primitive_integer_form();
    let lc = gi.last().unwrap().clone();
    // monicize: Gh(x) = lc^(n-1) * G(x/lc), monic integer
    let gh: Vec<BigInt> = gi
        .iter()
        .enumerate()
        .map(|(i, a)| if i == n { BigInt::one() } else { a * lc.pow((n - 1 - i) as u32) })
        .collect();
    debug_assert!(gh.last().unwrap().is_one());
    let factors_h = factor_monic_squarefree_int(&gh);
    // map back: m_j(x) = h_j(lc*x) / lc^(deg h_j), monic rational
    factors_h
        .into_iter()
        .map(|h| {
            let d = h.len() - 1;
            let coeffs: Vec<BigRat> = h
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    // coefficient of x^i in h(lc*x)/lc^d = a * lc^i / lc^d
                    BigRat::new(a * lc.pow(i as u32), lc.pow(d as u32))
                })
                .collect();
            Poly::new(coeffs)
        })
        .collect()
}

/// Factor a monic squarefree integer polynomial (coeff vec, low first,
/// last = 1) into monic integer irreducibles.
fn factor_monic_squarefree_int(g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = g.len() - 1;
    if n == 1 {
        return vec![g.to_vec()];
    }
    // choose an odd prime where g stays squarefree
    let mut p = 0u64;
    for cand in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        .into_iter()
        .chain((101..10_000).step_by(2).filter(|&m| super::arith::is_prime_u64(m)))
    {
        let gp = int_to_fp(g, cand);
        if gp.deg() != Some(n) {
            continue; // cannot happen for monic, but keep the guard
        }
        if gp.gcd(&gp.derivative()).is_constant() {
            p = cand;
            break;
        }
    }
    assert!(p != 0, "no squarefree prime found");
    let gp = int_to_fp(g, p);
    let fac = factor_fp(&gp);
    debug_assert!(fac.iter().all(|(_, e)| *e == 1));
    let mod_factors: Vec<FpPoly> = fac.into_iter().map(|(q, _)| q).collect();
    if mod_factors.len() == 1 {
        return vec![g.to_vec()];
    }
    // Hensel lift to p^k beyond twice the factor-coefficient bound
    let norm2: BigInt = g.iter().map(|a| a * a).sum();
    let root = BigInt::from(isqrt(&norm2.to_biguint().expect("norm is nonnegative")));
    let bound = (BigInt::one() << n) * (root + 1);
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk <= &bound * 2 {
        pk *= p;
        k += 1;
    }
    let lifted = hensel_tree(g, &mod_factors, p, k, &pk);

    // subset recombination
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut target = g.to_vec();
    let mut out = Vec::new();
    'outer: loop {
        let r = remaining.len();
        if r == 0 {
            break;
        }
        if r == 1 {
            out.push(target.clone());
            break;
        }
        for size in 1..=r / 2 {
            for mask in subsets_of_size(r, size) {
                let mut cand = vec![BigInt::one()];
                for (i, item) in remaining.iter().enumerate() {
                    if mask & (1usize << i) != 0 {
                        cand = imul_mod(&cand, item, &pk);
                    }
                }
                balance_coeffs(&mut cand, &pk);
                if let Some(quot) = int_poly_exact_div(&target, &cand) {
                    out.push(cand);
                    target = quot;
                    remaining = remaining
                        .into_iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1usize << i) == 0)
                        .map(|(_, v)| v)
                        .collect();
                    continue 'outer;
                }
            }
        }
        // nothing recombined: remainder is irreducible
        out.push(target.clone());
        break;
    }
    out
}

fn subsets_of_size(n: usize, size: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for mask in 1usize..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push(mask);
        }
    }
    out
}

fn int_to_fp(g: &[BigInt], p: u64) -> FpPoly {
    use num_traits::ToPrimitive;
    let pb = BigInt::from(p);
    Poly::new(
        g.iter()
            .map(|a| {
                let r = ((a % &pb) + &pb) % &pb;
                Fp::from_u64(r.to_u64().expect("residue fits in u64"), p)
            })
            .collect(),
    )
}

fn fp_to_int(g: &FpPoly) -> Vec<BigInt> {
    g.coeffs().iter().map(|c| BigInt::from(c.v)).collect()
}

fn imul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn imul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = imul(a, b);
    for c in &mut out {
        *c = modnn(c, m);
    }
    trim(&mut out);
    out
}

fn isub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |x| x.is_zero()) {
        v.pop();
    }
}

fn modnn(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

fn balance_coeffs(v: &mut Vec<BigInt>, m: &BigInt) {
    let half = m / 2;
    for c in v.iter_mut() {
        let r = modnn(c, m);
        *c = if r > half { r - m } else { r };
    }
    trim(v);
}

/// Exact division of integer polynomials when divisor is monic; None if the
/// division leaves a remainder.
fn int_poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(b.last().map_or(false, |x| x.is_one()), "divisor must be monic");
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let dq = a.len() - b.len();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let top = rem[i + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            rem[i + j] = &rem[i + j] - &top * d;
        }
        quot[i] = top;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(quot)
}

/// Lift the mod-p factorization of a monic integer polynomial to mod p^k.
fn hensel_tree(target: &[BigInt], factors: &[FpPoly], p: u64, k: u32, pk: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let mut t: Vec<BigInt> = target.iter().map(|c| modnn(c, pk)).collect();
        trim(&mut t);
        return vec![t];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut u0 = Poly::constant(Fp::new(1, p));
    for f in left {
        u0 = u0.mul(f);
    }
    let mut v0 = Poly::constant(Fp::new(1, p));
    for f in right {
        v0 = v0.mul(f);
    }
    let (u, v) = hensel_lift_pair(target, &u0, &v0, p, k, pk);
    let mut out = hensel_tree(&u, left, p, k, pk);
    out.extend(hensel_tree(&v, right, p, k, pk));
    out
}

/// Linear Hensel: target == u*v (mod p^k) with u,v monic lifting u0,v0.
fn hensel_lift_pair(
    target: &[BigInt],
    u0: &FpPoly,
    v0: &FpPoly,
    p: u64,
    k: u32,
    pk: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (gcd, _s, t) = u0.xgcd(v0);
    assert!(gcd.deg() == Some(0), "lift factors not coprime mod p");
    let mut u = fp_to_int(u0);
    let mut v = fp_to_int(v0);
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let pj1 = &pj * &pb;
        // e = (target - u*v) mod p^(j+1); divisible by p^j
        let uv = imul(&u, &v);
        let mut e = isub(target, &uv);
        for c in &mut e {
            *c = modnn(c, &pj1);
        }
        trim(&mut e);
        let d: Vec<BigInt> = e
            .iter()
            .map(|c| {
                debug_assert!((c % &pj).is_zero());
                c / &pj
            })
            .collect();
        let dp = int_to_fp(&d, p);
        // a = t*d mod u0 ; b = (d - a*v0)/u0
        let a = t.mul(&dp).rem(u0);
        let bnum = dp.sub(&a.mul(v0));
        let (b, br) = bnum.divrem(u0);
        assert!(br.is_zero());
        let ai = fp_to_int(&a);
        let bi = fp_to_int(&b);
        for (i, c) in ai.iter().enumerate() {
            if i >= u.len() {
                u.resize(i + 1, BigInt::zero());
            }
            u[i] = modnn(&(&u[i] + c * &pj), &pj1);
        }
        for (i, c) in bi.iter().enumerate() {
            if i >= v.len() {
                v.resize(i + 1, BigInt::zero());
            }
            v[i] = modnn(&(&v[i] + c * &pj), &pj1);
        }
        pj = pj1;
    }
    debug_assert_eq!(&pj, pk);
    // final check
    let uv = imul(&u, &v);
    let diff = isub(target, &uv);
    assert!(diff.iter().all(|c| modnn(c, pk).is_zero()), "hensel lift failed");
    (u, v)
}
