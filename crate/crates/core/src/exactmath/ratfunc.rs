//! Rational functions num/den over an arbitrary coefficient field, kept in
//! canonical form (coprime, monic denominator). `RatFunc<K>` is itself a
//! `CoeffField`, so towers like "rational functions in t over a quadratic
//! field" compose out of the same polynomial engine.

use super::field::CoeffField;
use super::poly::Poly;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K: CoeffField> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: CoeffField> RatFunc<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        let w = match p.coeffs().first() {
            Some(c) => c.one_like(),
            None => panic!("from_poly on zero polynomial needs witness; use zero_like"),
        };
        RatFunc { num: p, den: Poly::constant(w) }
    }

    pub fn constant(k: K) -> Self {
        let one = k.one_like();
        RatFunc { num: Poly::constant(k), den: Poly::constant(one) }
    }

    /// The identity function t.
    pub fn x(witness: &K) -> Self {
        RatFunc { num: Poly::x(witness), den: Poly::constant(witness.one_like()) }
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.deg() == Some(0)
    }

    /// The underlying polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<Poly<K>> {
        if self.is_poly() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::constant(self.den.lc().one_like());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.deg_i() > 0 {
            self.num = self.num.exact_div(&g);
            self.den = self.den.exact_div(&g);
        }
        let lcinv = self.den.lc().inv().expect("denominator leading coefficient not invertible");
        self.num = self.num.scale(&lcinv);
        self.den = self.den.scale(&lcinv);
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n'd - nd')/d^2
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        let d = self.den.mul(&self.den);
        RatFunc::new(n, d)
    }

    /// Evaluate at a point; None when the denominator vanishes there.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    /// Substitute a rational function for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let w = inner.den.lc();
        let mut acc = RatFunc::constant(w.zero_like());
        for a in self.num.coeffs().iter().rev() {
            acc = acc.mul(inner).add(&RatFunc::constant(a.clone()));
        }
        let mut dacc = RatFunc::constant(w.zero_like());
        for a in self.den.coeffs().iter().rev() {
            dacc = dacc.mul(inner).add(&RatFunc::constant(a.clone()));
        }
        acc.div(&dacc)
    }

    /// Order of vanishing at the monic irreducible `pi` (negative = pole).
    /// The element must be nonzero.
    pub fn ord_at(&self, pi: &Poly<K>) -> i64 {
        assert!(!self.is_zero(), "valuation of the zero function");
        assert!(pi.deg_i() > 0);
        fn mult<K: CoeffField>(mut f: Poly<K>, pi: &Poly<K>) -> i64 {
            let mut m = 0;
            loop {
                let (q, r) = f.divrem(pi);
                if !r.is_zero() {
                    return m;
                }
                m += 1;
                f = q;
            }
        }
        mult(self.num.clone(), pi) - mult(self.den.clone(), pi)
    }

    /// Order of vanishing at infinity: deg den - deg num (negative = pole).
    pub fn ord_at_infinity(&self) -> i64 {
        assert!(!self.is_zero(), "valuation of the zero function");
        self.den.deg_i() - self.num.deg_i()
    }

    pub fn pow_i(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow_i(-e);
        }
        let w = self.den.lc();
        let mut acc = RatFunc::constant(w.one_like());
        let mut base = self.clone();
        let mut e = e as u64;
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

    pub fn map<L: CoeffField>(&self, f: impl Fn(&K) -> L + Copy) -> RatFunc<L> {
        let num = Poly::new(self.num.coeffs().iter().map(f).collect());
        let den = Poly::new(self.den.coeffs().iter().map(f).collect());
        RatFunc::new(num, den)
    }
}

impl<K: CoeffField> CoeffField for RatFunc<K> {
    fn zero_like(&self) -> Self {
        let w = self.den.lc();
        RatFunc { num: Poly::zero(), den: Poly::constant(w.one_like()) }
    }

    fn one_like(&self) -> Self {
        let w = self.den.lc();
        RatFunc { num: Poly::constant(w.one_like()), den: Poly::constant(w.one_like()) }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den)
    }

    fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den)
    }

    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::arith::{brat_i64, BigRat};

    type QR = RatFunc<BigRat>;

    fn qpoly(c: &[i64]) -> Poly<BigRat> {
        Poly::from_i64(c)
    }

    #[test]
    fn normalization_cancels() {
        // (t^2-1)/(t-1) = t+1
        let r = QR::new(qpoly(&[-1, 0, 1]), qpoly(&[-1, 1]));
        assert!(r.is_poly());
        assert_eq!(r.as_poly().unwrap(), qpoly(&[1, 1]));
        // denominator made monic: t/(2t+2) = (1/2)t / (t+1)
        let r2 = QR::new(qpoly(&[0, 1]), qpoly(&[2, 2]));
        assert_eq!(r2.den(), &qpoly(&[1, 1]));
    }

    #[test]
    fn field_axioms_spot_checks() {
        let t = QR::x(&brat_i64(0));
        let a = t.mul(&t).add(&QR::constant(brat_i64(1))); // t^2+1
        let b = t.sub(&QR::constant(brat_i64(3))); // t-3
        let q = a.div(&b);
        assert_eq!(q.mul(&b), a);
        let inv = q.inv().unwrap();
        assert!(q.mul(&inv).sub(&q.one_like()).is_zero());
    }

    #[test]
    fn valuations() {
        let t = QR::x(&brat_i64(0));
        // f = t^2 (t-1) / (t+2)^3
        let f = t
            .pow_i(2)
            .mul(&t.sub(&QR::constant(brat_i64(1))))
            .mul(&t.add(&QR::constant(brat_i64(2))).pow_i(-3));
        assert_eq!(f.ord_at(&qpoly(&[0, 1])), 2);
        assert_eq!(f.ord_at(&qpoly(&[-1, 1])), 1);
        assert_eq!(f.ord_at(&qpoly(&[2, 1])), -3);
        assert_eq!(f.ord_at(&qpoly(&[5, 1])), 0);
        assert_eq!(f.ord_at_infinity(), 0); // deg 3 - deg 3
        let g = t.pow_i(-2);
        assert_eq!(g.ord_at_infinity(), 2);
    }

    #[test]
    fn derivative_quotient_rule() {
        let t = QR::x(&brat_i64(0));
        // d/dt (1/t) = -1/t^2
        let f = t.inv().unwrap();
        assert_eq!(f.derivative(), t.pow_i(-2).neg());
        // d/dt (t^2/(t+1)) = (t^2 + 2t)/(t+1)^2
        let g = t.pow_i(2).div(&t.add(&QR::constant(brat_i64(1))));
        let expect = QR::new(qpoly(&[0, 2, 1]), qpoly(&[1, 2, 1]));
        assert_eq!(g.derivative(), expect);
    }

    #[test]
    fn eval_and_compose() {
        let t = QR::x(&brat_i64(0));
        let f = t.pow_i(2).add(&QR::constant(brat_i64(1))).div(&t); // (t^2+1)/t
        assert_eq!(f.eval(&brat_i64(2)), Some(crate::exactmath::arith::brat(5, 2)));
        assert_eq!(f.eval(&brat_i64(0)), None);
        // compose with 1/t : f(1/t) = (1+t^2)/t again (symmetric)
        let g = f.compose(&t.inv().unwrap());
        assert_eq!(g, f);
    }
}
