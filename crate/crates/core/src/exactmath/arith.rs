//! Integer and rational scalar helpers: primality, factorization, square
//! classes, Legendre/Jacobi symbols. Everything here is exact; `BigRat` is the
//! workspace-wide arbitrary-precision rational type.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type BigRat = num_rational::BigRational;

pub fn brat_i64(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn brat(num: i64, den: i64) -> BigRat {
    assert!(den != 0);
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "n" or "n/d" with optional sign into an exact rational.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRat::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(BigRat::from_integer(num))
    }
}

/// Render a rational as `n` or `n/d` (lowest terms, positive denominator).
pub fn rat_str(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let m = n.magnitude();
    let r = m.sqrt();
    &r * &r == *m
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.magnitude().sqrt();
    if &r * &r == *n.magnitude() {
        Some(BigInt::from_biguint(Sign::Plus, r))
    } else {
        None
    }
}

/// Deterministic Miller–Rabin, valid for all u64 (fixed witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_big(n: &BigUint) -> bool {
    if let Ok(small) = u64::try_from(n) {
        return is_prime_u64(small);
    }
    // Miller–Rabin with fixed witnesses; adequate for the composite-vs-prime
    // decisions made here (inputs are discriminants of modest size).
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    // Brent's cycle variant; n is odd, composite, and not a prime power check
    // is left to the caller loop.
    use num_integer::gcd;
    let one = BigUint::one();
    for c in 1u64..64 {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = gcd(diff, n.clone());
            count += 1;
            if count > 4_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    panic!("pollard_rho: failed to split {n}");
}

/// Full factorization of a positive integer into (prime, exponent) pairs,
/// sorted by prime. Trial division for small primes, Pollard rho beyond.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(n.is_positive(), "factor: need positive input, got {n}");
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.magnitude().clone();
    let push = |p: BigUint, out: &mut Vec<(BigInt, u32)>| {
        let p = BigInt::from_biguint(Sign::Plus, p);
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    for small in 2u64..=100_000 {
        if m.is_one() {
            break;
        }
        let sp = BigUint::from(small);
        if &sp * &sp > m {
            break;
        }
        while (&m % &sp).is_zero() {
            m /= &sp;
            push(sp.clone(), &mut out);
        }
    }
    let mut stack = vec![m];
    let mut big_factors: Vec<BigUint> = Vec::new();
    while let Some(v) = stack.pop() {
        if v.is_one() {
            continue;
        }
        if is_prime_big(&v) {
            big_factors.push(v);
            continue;
        }
        // perfect powers split cheaply
        let r = v.sqrt();
        if &r * &r == v {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let d = pollard_rho(&v);
        stack.push(&v / &d);
        stack.push(d);
    }
    big_factors.sort();
    for p in big_factors {
        push(p, &mut out);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    // merge duplicates produced across phases
    let mut merged: Vec<(BigInt, u32)> = Vec::new();
    for (p, e) in out {
        if let Some(last) = merged.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        merged.push((p, e));
    }
    merged
}

/// Squarefree part of a nonzero integer, sign preserved.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let mut out = BigInt::from(n.signum());
    for (p, e) in factor(&n.abs()) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    out
}

/// Squarefree part of a nonzero rational: n/d ~ n*d modulo squares.
pub fn squarefree_part_rat(q: &BigRat) -> BigInt {
    assert!(!q.is_zero());
    squarefree_part(&(q.numer() * q.denom()))
}

/// Jacobi symbol (a/n) for odd positive n.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    assert!(n.is_positive() && n.is_odd(), "jacobi: n must be odd positive");
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r: BigInt = &n % 8;
            let r = r.to_string().parse::<i64>().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4) == BigInt::from(3) && (&n % 4) == BigInt::from(3) {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Legendre symbol for prime p (odd).
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    jacobi(a, p)
}

/// p-adic valuation of a nonzero rational, plus the unit part u with
/// q = p^v * u and v_p(u) = 0.
pub fn padic_split(q: &BigRat, p: &BigInt) -> (i64, BigRat) {
    assert!(!q.is_zero());
    let mut v = 0i64;
    let mut num = q.numer().clone();
    let mut den = q.denom().clone();
    while (&num % p).is_zero() {
        num /= p;
        v += 1;
    }
    while (&den % p).is_zero() {
        den /= p;
        v -= 1;
    }
    (v, BigRat::new(num, den))
}

/// Lexicographically smallest (a1,a2,a3,a4), a1>=a2>=a3>=a4>=0, with
/// a1^2+a2^2+a3^2+a4^2 = n. Always exists (Lagrange).
pub fn four_squares(n: u64) -> (u64, u64, u64, u64) {
    let isq = |x: u64| (x as f64).sqrt() as u64 + 1;
    let exact = |x: u64| -> Option<u64> {
        let r = (x as f64).sqrt() as u64;
        for c in r.saturating_sub(2)..=r + 2 {
            if c * c == x {
                return Some(c);
            }
        }
        None
    };
    if n == 0 {
        return (0, 0, 0, 0);
    }
    // a1 ascending gives lexicographically smallest overall.
    let mut a1 = 1;
    while 4 * a1 * a1 < n {
        a1 += 1;
    }
    while a1 * a1 <= n {
        let r1 = n - a1 * a1;
        let mut a2 = {
            // need a2^2 >= r1/3
            let mut v = 0;
            while 3 * v * v < r1 {
                v += 1;
            }
            v
        };
        while a2 <= a1 && a2 * a2 <= r1 {
            let r2 = r1 - a2 * a2;
            let mut a3 = {
                let mut v = 0;
                while 2 * v * v < r2 {
                    v += 1;
                }
                v
            };
            while a3 <= a2 && a3 * a3 <= r2 {
                let r3 = r2 - a3 * a3;
                if let Some(a4) = exact(r3) {
                    if a4 <= a3 {
                        return (a1, a2, a3, a4);
                    }
                }
                a3 += 1;
            }
            a2 += 1;
        }
        a1 += 1;
        let _ = isq;
    }
    unreachable!("four_squares: no representation found for {n}");
}
