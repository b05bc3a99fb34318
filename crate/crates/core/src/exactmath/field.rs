//! Field abstraction shared by the polynomial, matrix, and function-field
//! code, with three concrete scalar types beyond `BigRat`: prime fields,
//! quadratic extensions of Q, and (elsewhere) rational-function fields.
//!
//! The trait deliberately has no static `zero()`/`one()`: scalars such as
//! `Fp` carry their modulus, so constants are derived from a witness element
//! (`zero_like`, `one_like`). Generic code always has a witness in hand.

use super::arith::{exact_sqrt, squarefree_part, BigRat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub trait CoeffField: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; None exactly for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Small-integer embedding via double-and-add on the witness.
    fn int_like(&self, n: i64) -> Self {
        let mut m = n.unsigned_abs();
        let mut acc = self.zero_like();
        let mut base = self.one_like();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            m >>= 1;
        }
        if n < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

/// Fields with a real embedding fixed well enough to read off signs.
pub trait OrderedField: CoeffField {
    /// -1, 0, or +1.
    fn sign(&self) -> i32;
}

impl CoeffField for BigRat {
    fn zero_like(&self) -> Self {
        BigRat::zero()
    }
    fn one_like(&self) -> Self {
        BigRat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl OrderedField for BigRat {
    fn sign(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Prime-field element; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        assert!(p >= 2);
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }
    pub fn from_u64(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }
    /// Reduce a rational mod p; None if the denominator is divisible by p.
    pub fn from_rat(q: &BigRat, p: u64) -> Option<Self> {
        let bp = BigInt::from(p);
        let den = q.denom().mod_floor_u(&bp);
        if den == 0 {
            return None;
        }
        let num = q.numer().mod_floor_u(&bp);
        let inv = Fp { v: den, p }.inv()?;
        Some(Fp { v: num, p }.mul(&inv))
    }
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
    /// Legendre symbol as +1 / -1 / 0.
    pub fn legendre(&self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        let e = self.pow((self.p - 1) / 2);
        if e.v == 1 {
            1
        } else {
            -1
        }
    }
}

trait ModFloorU {
    fn mod_floor_u(&self, m: &BigInt) -> u64;
}
impl ModFloorU for BigInt {
    fn mod_floor_u(&self, m: &BigInt) -> u64 {
        use num_integer::Integer;
        let r = self.mod_floor(m);
        u64::try_from(&r).expect("modulus fits u64")
    }
}

impl CoeffField for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = self.v + other.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = self.v + self.p - other.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp { v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        Some(self.pow(self.p - 2))
    }
}

/// Element a + b*sqrt(d) of Q(sqrt d), d a squarefree nonzero integer.
/// When d > 0 the embedding with sqrt(d) > 0 is fixed, making the field
/// ordered; conjugation swaps the two real embeddings.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadExt {
    pub a: BigRat,
    pub b: BigRat,
    pub d: BigInt,
}

impl QuadExt {
    pub fn new(a: BigRat, b: BigRat, d: BigInt) -> Self {
        debug_assert!(!d.is_zero() && squarefree_part(&d) == d, "d must be squarefree nonzero");
        QuadExt { a, b, d }
    }
    pub fn from_rat(a: BigRat, d: BigInt) -> Self {
        QuadExt { a, b: BigRat::zero(), d }
    }
    pub fn sqrt_d(d: BigInt) -> Self {
        QuadExt { a: BigRat::zero(), b: BigRat::one(), d }
    }
    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
    /// Rational norm a^2 - d b^2.
    pub fn norm(&self) -> BigRat {
        &self.a * &self.a - BigRat::from_integer(self.d.clone()) * &self.b * &self.b
    }
    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }
    /// Exact square root within the field, if one exists.
    pub fn sqrt_in_field(&self) -> Option<QuadExt> {
        // Solve (x + y sqrt d)^2 = a + b sqrt d: x^2 + d y^2 = a, 2xy = b.
        if self.is_zero() {
            return Some(self.zero_like());
        }
        let d = BigRat::from_integer(self.d.clone());
        if Zero::is_zero(&self.b) {
            // either sqrt(a) rational or sqrt(a/d) rational
            if let Some(r) = rat_sqrt(&self.a) {
                return Some(QuadExt::from_rat(r, self.d.clone()));
            }
            let q = &self.a / &d;
            if let Some(r) = rat_sqrt(&q) {
                return Some(QuadExt { a: BigRat::zero(), b: r, d: self.d.clone() });
            }
            return None;
        }
        // x^2 solves t^2 - a t + d (b/2)^2 = 0
        let half_b = &self.b / BigRat::from_integer(BigInt::from(2));
        let disc = &self.a * &self.a - BigRat::from_integer(BigInt::from(4)) * &d * &half_b * &half_b;
        let sd = rat_sqrt(&disc)?;
        for sign in [1i64, -1] {
            let two = BigRat::from_integer(BigInt::from(2));
            let t = (&self.a + BigRat::from_integer(BigInt::from(sign)) * &sd) / &two;
            if let Some(x) = rat_sqrt(&t) {
                if !Zero::is_zero(&x) {
                    let y = &half_b / &x;
                    let cand = QuadExt { a: x, b: y, d: self.d.clone() };
                    if cand.mul(&cand) == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rat_sqrt(q: &BigRat) -> Option<BigRat> {
    if q.is_negative() {
        return None;
    }
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRat::new(n, d))
}

impl CoeffField for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt { a: BigRat::zero(), b: BigRat::zero(), d: self.d.clone() }
    }
    fn one_like(&self) -> Self {
        QuadExt { a: BigRat::one(), b: BigRat::zero(), d: self.d.clone() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.d, other.d);
        QuadExt { a: &self.a + &other.a, b: &self.b + &other.b, d: self.d.clone() }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.d, other.d);
        QuadExt { a: &self.a - &other.a, b: &self.b - &other.b, d: self.d.clone() }
    }
    fn neg(&self) -> Self {
        QuadExt { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.d, other.d);
        let d = BigRat::from_integer(self.d.clone());
        QuadExt {
            a: &self.a * &other.a + &d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        assert!(!Zero::is_zero(&n), "nonzero element with zero norm in Q(sqrt d)");
        let ninv = n.recip();
        Some(QuadExt { a: &self.a * &ninv, b: -(&self.b * &ninv), d: self.d.clone() })
    }
}

impl OrderedField for QuadExt {
    /// Sign in the embedding with sqrt(d) > 0; requires d > 0.
    fn sign(&self) -> i32 {
        assert!(self.d.is_positive(), "ordering needs a real quadratic field");
        let sa = OrderedField::sign(&self.a);
        let sb = OrderedField::sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // compare |a| vs |b| sqrt(d): a^2 vs d b^2
        let lhs = &self.a * &self.a;
        let rhs = BigRat::from_integer(self.d.clone()) * &self.b * &self.b;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::arith::brat;

    #[test]
    fn fp_basics() {
        let a = Fp::new(5, 7);
        let b = Fp::new(4, 7);
        assert_eq!(a.add(&b).v, 2);
        assert_eq!(a.mul(&b).v, 6);
        assert_eq!(a.inv().unwrap().mul(&a).v, 1);
        assert_eq!(Fp::new(-3, 7).v, 4);
        assert_eq!(Fp::from_rat(&brat(1, 2), 7).unwrap().v, 4);
        assert!(Fp::from_rat(&brat(1, 7), 7).is_none());
    }

    #[test]
    fn quadext_arithmetic_and_order() {
        let d = BigInt::from(5);
        let golden = QuadExt::new(brat(1, 2), brat(1, 2), d.clone()); // (1+sqrt5)/2
        let sq = golden.mul(&golden);
        // golden^2 = golden + 1
        assert_eq!(sq, golden.add(&golden.one_like()));
        let inv = golden.inv().unwrap();
        assert_eq!(golden.mul(&inv), golden.one_like());
        // sign of 1 - sqrt(5) is negative, of sqrt(5) - 2 positive
        let x = QuadExt::new(brat(1, 1), brat(-1, 1), d.clone());
        assert_eq!(x.sign(), -1);
        let y = QuadExt::new(brat(-2, 1), brat(1, 1), d.clone());
        assert_eq!(y.sign(), 1);
    }

    #[test]
    fn quadext_sqrt() {
        let d = BigInt::from(5);
        // (23 - 3 sqrt5)/2 = ( (-1 + 3 sqrt5)/2 )^2
        let t = QuadExt::new(brat(23, 2), brat(-3, 2), d.clone());
        let s = t.sqrt_in_field().expect("square in field");
        assert_eq!(s.mul(&s), t);
        //  sqrt of a non-square fails
        let u = QuadExt::new(brat(2, 1), brat(0, 1), d);
        assert!(u.sqrt_in_field().is_none());
        // but sqrt(5)*square is a square: 20 = (2 sqrt5)^2
        let v = QuadExt::new(brat(20, 1), brat(0, 1), BigInt::from(5));
        let sv = v.sqrt_in_field().unwrap();
        assert_eq!(sv.mul(&sv), v);
    }
}
