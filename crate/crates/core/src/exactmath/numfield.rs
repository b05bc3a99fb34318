//! Number fields Q[x]/(f) with exact arithmetic in the power basis,
//! real-embedding machinery (Sturm isolation plus interval refinement, so
//! signs at embeddings are certified rather than floating-point guesses),
//! and order arithmetic up to maximal orders via radical/multiplier-ring
//! enlargement at individual primes.

use super::arith::{factor as factor_int, BigRat};
use super::field::{CoeffField, Fp, OrderedField};
use super::matrix::{hnf_rows, Mat};
use super::poly::Poly;
use super::qfactor::is_irreducible_q;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FieldBuildError {
    #[error("minimal polynomial must be non-constant")]
    Constant,
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("minimal polynomial is reducible over the rationals")]
    Reducible,
}

/// A number field presented as Q[x]/(f) for monic irreducible f.
#[derive(Clone, Debug)]
pub struct NumberField {
    f: Poly<BigRat>,
    n: usize,
}

/// Field element in power-basis coordinates (length = degree).
#[derive(Clone, PartialEq, Debug)]
pub struct NfElem(pub Vec<BigRat>);

impl NfElem {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| num_traits::Zero::is_zero(c))
    }
}

impl NumberField {
    pub fn new(f: Poly<BigRat>) -> Result<NumberField, FieldBuildError> {
        let n = match f.deg() {
            None | Some(0) => return Err(FieldBuildError::Constant),
            Some(n) => n,
        };
        if !f.lc().is_one() {
            return Err(FieldBuildError::NotMonic);
        }
        if n > 1 && !is_irreducible_q(&f) {
            return Err(FieldBuildError::Reducible);
        }
        Ok(NumberField { f, n })
    }

    pub fn deg(&self) -> usize {
        self.n
    }

    pub fn min_poly(&self) -> &Poly<BigRat> {
        &self.f
    }

    pub fn zero(&self) -> NfElem {
        NfElem(vec![BigRat::zero(); self.n])
    }

    pub fn one(&self) -> NfElem {
        self.from_rat(BigRat::one())
    }

    pub fn gen(&self) -> NfElem {
        let mut v = vec![BigRat::zero(); self.n];
        if self.n == 1 {
            // theta is the rational root itself
            v[0] = -self.f.coeffs()[0].clone();
        } else {
            v[1] = BigRat::one();
        }
        NfElem(v)
    }

    pub fn from_rat(&self, q: BigRat) -> NfElem {
        let mut v = vec![BigRat::zero(); self.n];
        v[0] = q;
        NfElem(v)
    }

    pub fn from_int(&self, k: i64) -> NfElem {
        self.from_rat(BigRat::from_integer(BigInt::from(k)))
    }

    /// Reduce an arbitrary polynomial in theta to power-basis coordinates.
    pub fn from_poly(&self, p: &Poly<BigRat>) -> NfElem {
        let r = p.rem(&self.f);
        let mut v = vec![BigRat::zero(); self.n];
        for (i, c) in r.coeffs().iter().enumerate() {
            v[i] = c.clone();
        }
        NfElem(v)
    }

    pub fn to_poly(&self, a: &NfElem) -> Poly<BigRat> {
        Poly::new(a.0.clone())
    }

    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &NfElem, k: &BigRat) -> NfElem {
        NfElem(a.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        let pa = self.to_poly(a);
        let pb = self.to_poly(b);
        self.from_poly(&pa.mul(&pb))
    }

    pub fn inv(&self, a: &NfElem) -> Option<NfElem> {
        let pa = self.to_poly(a);
        if pa.is_zero() {
            return None;
        }
        let (g, s, _) = pa.xgcd(&self.f);
        debug_assert_eq!(g.deg(), Some(0));
        let ginv = g.coeffs()[0].inv().unwrap();
        Some(self.from_poly(&s.scale(&ginv)))
    }

    pub fn div(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.mul(a, &self.inv(b).expect("division by zero field element"))
    }

    pub fn pow(&self, a: &NfElem, e: u32) -> NfElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of multiplication by a on the power basis (row convention:
    /// row j = coordinates of a * theta^j).
    pub fn mult_matrix(&self, a: &NfElem) -> Mat<BigRat> {
        let pa = self.to_poly(a);
        let rows: Vec<Vec<BigRat>> = (0..self.n)
            .map(|j| {
                let m = pa.shift(j).rem(&self.f);
                let mut v = vec![BigRat::zero(); self.n];
                for (i, c) in m.coeffs().iter().enumerate() {
                    v[i] = c.clone();
                }
                v
            })
            .collect();
        Mat::from_rows(rows)
    }

    pub fn trace(&self, a: &NfElem) -> BigRat {
        let m = self.mult_matrix(a);
        let mut t = BigRat::zero();
        for i in 0..self.n {
            t = t + m.at(i, i);
        }
        t
    }

    pub fn norm(&self, a: &NfElem) -> BigRat {
        self.mult_matrix(a).det()
    }

    /// Minimal polynomial check helper: is this element rational?
    pub fn is_rational(&self, a: &NfElem) -> bool {
        a.0.iter().skip(1).all(|c| num_traits::Zero::is_zero(c))
    }

    // -- real embeddings ---------------------------------------------------

    /// Isolating intervals for the real roots of the minimal polynomial,
    /// sorted ascending. Totally real fields yield deg() boxes.
    pub fn real_roots(&self) -> Vec<RealRootBox> {
        real_roots_of(&self.f)
    }

    pub fn is_totally_real(&self) -> bool {
        self.real_roots().len() == self.n
    }

    /// Exact sign of a at the real embedding determined by `root`:
    /// -1, 0, or +1.
    pub fn sign_at(&self, a: &NfElem, root: &RealRootBox) -> i32 {
        let g = self.to_poly(a);
        if g.is_zero() {
            return 0;
        }
        if let Some(x) = root.exact() {
            return g.eval(&x).sign();
        }
        let mut b = root.clone();
        loop {
            let (lo, hi) = interval_eval(&g, &b.lo, &b.hi);
            if lo.sign() > 0 {
                return 1;
            }
            if hi.sign() < 0 {
                return -1;
            }
            b = bisect_once(&self.f, &b);
        }
    }

    /// Signs of a at all real embeddings, in ascending root order.
    pub fn embedding_signs(&self, a: &NfElem) -> Vec<i32> {
        self.real_roots().iter().map(|r| self.sign_at(a, r)).collect()
    }
}

// ---------------------------------------------------------------------------
// Real root isolation (Sturm)
// ---------------------------------------------------------------------------

/// An interval (lo, hi) containing exactly one root of the polynomial it
/// was built from; lo == hi encodes an exact rational root.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRootBox {
    pub lo: BigRat,
    pub hi: BigRat,
}

impl RealRootBox {
    pub fn exact(&self) -> Option<BigRat> {
        if self.lo == self.hi {
            Some(self.lo.clone())
        } else {
            None
        }
    }

    /// Midpoint, for reporting approximate values.
    pub fn midpoint(&self) -> BigRat {
        (&self.lo + &self.hi) / BigRat::from_integer(BigInt::from(2))
    }

    pub fn approx_f64(&self) -> f64 {
        let m = self.midpoint();
        m.numer().to_f64().unwrap_or(f64::NAN) / m.denom().to_f64().unwrap_or(f64::NAN)
    }
}

fn sturm_chain(f: &Poly<BigRat>) -> Vec<Poly<BigRat>> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        if chain[k - 1].is_constant() {
            return chain;
        }
        let r = chain[k - 2].rem(&chain[k - 1]).neg();
        chain.push(r);
    }
}

fn variations(chain: &[Poly<BigRat>], x: &BigRat) -> usize {
    let mut prev = 0i32;
    let mut count = 0;
    for p in chain {
        let s = if p.is_zero() { 0 } else { p.eval(x).sign() };
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Isolating boxes for all real roots of f (which must be nonzero);
/// multiple roots are isolated once. Panics if a bisection midpoint lands
/// exactly on a root with other roots nearby — callers pass irreducible or
/// squarefree-with-irrational-roots inputs, where this cannot happen.
pub fn real_roots_of(f: &Poly<BigRat>) -> Vec<RealRootBox> {
    assert!(!f.is_zero());
    if f.deg() == Some(0) {
        return vec![];
    }
    if f.deg() == Some(1) {
        let r = -f.coeffs()[0].clone() / f.coeffs()[1].clone();
        return vec![RealRootBox { lo: r.clone(), hi: r }];
    }
    let sf = f.squarefree_part_char0();
    let chain = sturm_chain(&sf);
    // Cauchy bound: all roots have |r| < 1 + max |a_i / a_n|
    let lc = sf.lc().clone();
    let mut maxq = BigRat::zero();
    for c in sf.coeffs() {
        let q = (c / &lc).abs();
        if q > maxq {
            maxq = q;
        }
    }
    let bound = maxq + BigRat::one();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let v = variations(&chain, &lo);
        let w = variations(&chain, &hi);
        let count = v.saturating_sub(w);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RealRootBox { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / BigRat::from_integer(BigInt::from(2));
        assert!(!num_traits::Zero::is_zero(&sf.eval(&mid)), "bisection midpoint hit a root; input has rational roots");
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Halve a root box (for squarefree f with a sign change across the box).
fn bisect_once(f: &Poly<BigRat>, b: &RealRootBox) -> RealRootBox {
    let mid = b.midpoint();
    let fm = f.eval(&mid);
    assert!(!num_traits::Zero::is_zero(&fm), "midpoint hit the root exactly");
    let flo = f.eval(&b.lo);
    if flo.sign() * fm.sign() < 0 {
        RealRootBox { lo: b.lo.clone(), hi: mid }
    } else {
        RealRootBox { lo: mid, hi: b.hi.clone() }
    }
}

/// Exact interval Horner evaluation: returns rationals (m, M) with
/// m <= p(x) <= M for all x in [lo, hi].
fn interval_eval(p: &Poly<BigRat>, lo: &BigRat, hi: &BigRat) -> (BigRat, BigRat) {
    let mut a = BigRat::zero();
    let mut b = BigRat::zero();
    for c in p.coeffs().iter().rev() {
        // [a,b] * [lo,hi]
        let p1 = &a * lo;
        let p2 = &a * hi;
        let p3 = &b * lo;
        let p4 = &b * hi;
        let mut m = p1.clone();
        let mut mm = p1;
        for q in [p2, p3, p4] {
            if q < m {
                m = q.clone();
            }
            if q > mm {
                mm = q;
            }
        }
        a = m + c;
        b = mm + c;
    }
    (a, b)
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

/// A full-rank order (or fractional-order basis) given by basis rows in
/// power-basis coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderBasis {
    pub basis: Mat<BigRat>,
}

impl OrderBasis {
    /// The equation order Z[theta].
    pub fn standard(field: &NumberField) -> OrderBasis {
        OrderBasis { basis: Mat::identity(field.deg(), &BigRat::zero()) }
    }

    pub fn elements(&self) -> Vec<NfElem> {
        (0..self.basis.rows).map(|i| NfElem(self.basis.row_vec(i))).collect()
    }

    /// Gram matrix of the trace form Tr(b_i b_j) on this basis.
    pub fn trace_gram(&self, field: &NumberField) -> Mat<BigRat> {
        let els = self.elements();
        Mat::from_fn(els.len(), els.len(), |i, j| field.trace(&field.mul(&els[i], &els[j])))
    }

    pub fn discriminant(&self, field: &NumberField) -> BigRat {
        self.trace_gram(field).det()
    }

    /// Does the module contain the element (integral coordinates)?
    pub fn contains(&self, _field: &NumberField, a: &NfElem) -> bool {
        let binv = self.basis.inverse().expect("order basis is singular");
        // coords = a_power * B^{-1} (row-vector convention)
        let coords = row_times(&a.0, &binv);
        coords.iter().all(|c| c.denom().is_one())
    }

    /// Coordinates of the element with respect to this basis.
    pub fn coords(&self, a: &NfElem) -> Vec<BigRat> {
        let binv = self.basis.inverse().expect("order basis is singular");
        row_times(&a.0, &binv)
    }
}

fn row_times(v: &[BigRat], m: &Mat<BigRat>) -> Vec<BigRat> {
    (0..m.cols)
        .map(|j| {
            let mut acc = BigRat::zero();
            for (i, x) in v.iter().enumerate() {
                acc = acc + x * m.at(i, j);
            }
            acc
        })
        .collect()
}

/// One enlargement pass: returns the p-maximal order containing `order`,
/// looping radical/multiplier steps until stable.
pub fn p_maximal_order(field: &NumberField, order: &OrderBasis, p: u64) -> OrderBasis {
    let n = field.deg();
    let mut basis = order.basis.clone();
    for _round in 0..200 {
        let binv = basis.inverse().expect("order basis singular");
        let els: Vec<NfElem> = (0..n).map(|i| NfElem(basis.row_vec(i))).collect();
        // integer multiplication tables: mult[i] row j = coords of b_i b_j
        let mut mult: Vec<Mat<BigRat>> = Vec::with_capacity(n);
        for bi in &els {
            let rows: Vec<Vec<BigRat>> = els
                .iter()
                .map(|bj| {
                    let prod = field.mul(bi, bj);
                    let coords = row_times(&prod.0, &binv);
                    assert!(
                        coords.iter().all(|c| c.denom().is_one()),
                        "basis does not span a ring (non-integral structure constants)"
                    );
                    coords
                })
                .collect();
            mult.push(Mat::from_rows(rows));
        }
        let multp: Vec<Mat<Fp>> = mult.iter().map(|m| m.map(|q| fp_of_rat(q, p))).collect();
        // Frobenius x -> x^p on O/pO, row convention
        let frob_rows: Vec<Vec<Fp>> = (0..n)
            .map(|i| {
                let mut e = vec![Fp::new(0, p); n];
                e[i] = Fp::new(1, p);
                alg_pow(&e, p, &multp)
            })
            .collect();
        let frob = Mat::from_rows(frob_rows);
        // iterate until p^m >= n
        let mut m = 1u32;
        let mut pm = p as u128;
        while pm < n as u128 {
            pm *= p as u128;
            m += 1;
        }
        let mut fm = frob.clone();
        for _ in 1..m {
            fm = fm.mul(&frob);
        }
        // radical = left kernel of fm = right kernel of fm^T
        let rad = fm.transpose().kernel_basis();
        // J = radical lifts + pO, as HNF rows in order coordinates
        let mut jrows: Vec<Vec<BigInt>> = rad
            .iter()
            .map(|v| v.iter().map(|x| BigInt::from(x.v)).collect())
            .collect();
        for i in 0..n {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::from(p);
            jrows.push(r);
        }
        let r = hnf_rows(jrows);
        assert_eq!(r.len(), n, "radical lattice not full rank");
        let rmat = Mat::from_rows(
            r.iter().map(|row| row.iter().map(|x| BigRat::from_integer(x.clone())).collect()).collect(),
        );
        let rinv = rmat.inverse().expect("radical basis singular");
        // multiplier condition: for y = sum c_i b_i, each y*j_k must lie in
        // pJ; in J-coordinates that is (r_k Mult_i) R^{-1} = 0 mod p
        let mut lin_rows: Vec<Vec<Fp>> = Vec::with_capacity(n * n);
        for k in 0..n {
            let rk = rmat.row_vec(k);
            // for each i: w_i = (r_k * Mult_i) * R^{-1}
            let mut per_i: Vec<Vec<BigRat>> = Vec::with_capacity(n);
            for mi in &mult {
                let v = row_times(&rk, mi);
                let w = row_times(&v, &rinv);
                assert!(w.iter().all(|c| c.denom().is_one()), "J is not an ideal of the order");
                per_i.push(w);
            }
            for l in 0..n {
                let row: Vec<Fp> = (0..n).map(|i| fp_of_rat(&per_i[i][l], p)).collect();
                lin_rows.push(row);
            }
        }
        let lin = Mat::from_rows(lin_rows);
        let uker = lin.kernel_basis();
        // U = kernel lifts + pO
        let mut urows: Vec<Vec<BigInt>> = uker
            .iter()
            .map(|v| v.iter().map(|x| BigInt::from(x.v)).collect())
            .collect();
        for i in 0..n {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::from(p);
            urows.push(r);
        }
        let u = hnf_rows(urows);
        assert_eq!(u.len(), n);
        let is_p_times_identity = (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    u[i][j] == BigInt::from(p)
                } else {
                    u[i][j].is_zero()
                }
            })
        });
        if is_p_times_identity {
            return OrderBasis { basis };
        }
        // new order basis = (1/p) * U * B
        let umat = Mat::from_rows(
            u.iter().map(|row| row.iter().map(|x| BigRat::from_integer(x.clone())).collect()).collect(),
        );
        let pr = BigRat::from_integer(BigInt::from(p));
        basis = umat.mul(&basis).map(|q| q / &pr);
    }
    panic!("order enlargement did not stabilize");
}

fn fp_of_rat(q: &BigRat, p: u64) -> Fp {
    Fp::from_rat(q, p).expect("denominator divisible by p in reduction")
}

/// Multiply coordinate vectors in the mod-p structure-constant algebra.
fn alg_mul(a: &[Fp], b: &[Fp], mult: &[Mat<Fp>]) -> Vec<Fp> {
    let n = a.len();
    let p = a[0].p;
    let mut out = vec![Fp::new(0, p); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        // ai * (b * Mult_i)
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let coef = ai.mul(bj);
            for l in 0..n {
                out[l] = out[l].add(&coef.mul(mult[i].at(j, l)));
            }
        }
    }
    out
}

fn alg_pow(a: &[Fp], e: u64, mult: &[Mat<Fp>]) -> Vec<Fp> {
    let n = a.len();
    let p = a[0].p;
    let mut acc: Option<Vec<Fp>> = None;
    let mut base = a.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(x) => alg_mul(&x, &base, mult),
            });
        }
        e >>= 1;
        if e > 0 {
            base = alg_mul(&base, &base, mult);
        }
    }
    acc.unwrap_or_else(|| {
        let mut one = vec![Fp::new(0, p); n];
        one[0] = Fp::new(1, p);
        one
    })
}

/// Maximal order: enlarge at every prime whose square divides the
/// discriminant of the starting order.
pub fn maximal_order(field: &NumberField) -> OrderBasis {
    let start = OrderBasis::standard(field);
    let disc = start.discriminant(field);
    assert!(disc.denom().is_one(), "equation-order discriminant must be integral");
    let primes = primes_with_square_dividing(&disc.numer().abs());
    let mut order = start;
    for p in primes {
        order = p_maximal_order(field, &order, p);
    }
    order
}

/// Primes p with p^2 dividing n (n nonzero).
pub fn primes_with_square_dividing(n: &BigInt) -> Vec<u64> {
    assert!(!n.is_zero());
    factor_int(&n.abs())
        .into_iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| p.to_u64().expect("enlargement prime fits in u64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::arith::{brat, brat_i64};

    fn field(coeffs: &[i64]) -> NumberField {
        NumberField::new(Poly::from_i64(coeffs)).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(NumberField::new(Poly::from_i64(&[-2, 0, 1])).is_ok());
        assert_eq!(
            NumberField::new(Poly::from_i64(&[-1, 0, 1])).unwrap_err(),
            FieldBuildError::Reducible
        );
        assert_eq!(
            NumberField::new(Poly::from_i64(&[-2, 0, 2])).unwrap_err(),
            FieldBuildError::NotMonic
        );
    }

    #[test]
    fn sqrt2_arithmetic() {
        let k = field(&[-2, 0, 1]);
        let t = k.gen();
        assert_eq!(k.trace(&t), brat_i64(0));
        // (1+sqrt2)(−1+sqrt2) = 1 → norm(1+sqrt2) = −1
        let a = k.add(&k.one(), &t);
        assert_eq!(k.norm(&a), brat_i64(-1));
        let ainv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ainv), k.one());
        assert_eq!(k.trace(&k.mul(&t, &t)), brat_i64(4));
    }

    #[test]
    fn real_roots_and_signs_quadratic() {
        let k = field(&[-2, 0, 1]);
        let roots = k.real_roots();
        assert_eq!(roots.len(), 2);
        let t = k.gen();
        assert_eq!(k.sign_at(&t, &roots[0]), -1);
        assert_eq!(k.sign_at(&t, &roots[1]), 1);
        assert_eq!(k.embedding_signs(&t), vec![-1, 1]);
        assert!(k.is_totally_real());
    }

    #[test]
    fn real_roots_cubic_trace_field() {
        // x^3 + x^2 - 2x - 1: roots 2cos(2pi k/7), all real
        let k = field(&[-1, -2, 1, 1]);
        assert!(k.is_totally_real());
        let roots = k.real_roots();
        assert_eq!(roots.len(), 3);
        // theta^2 - 2 at the ascending roots has signs (+, -, -)
        let t = k.gen();
        let a = k.sub(&k.mul(&t, &t), &k.from_int(2));
        assert_eq!(k.embedding_signs(&a), vec![1, -1, -1]);
        assert_eq!(k.trace(&t), brat_i64(-1));
        assert_eq!(k.norm(&t), brat_i64(1));
    }

    #[test]
    fn imaginary_quadratic_has_no_real_roots() {
        let k = field(&[1, 0, 1]);
        assert_eq!(k.real_roots().len(), 0);
        assert!(!k.is_totally_real());
    }

    #[test]
    fn round2_finds_golden_integers() {
        // Z[sqrt5] has discriminant 20; the maximal order adds (1+sqrt5)/2
        let k = field(&[-5, 0, 1]);
        let start = OrderBasis::standard(&k);
        assert_eq!(start.discriminant(&k), brat_i64(20));
        let max = maximal_order(&k);
        assert_eq!(max.discriminant(&k), brat_i64(5));
        let phi = NfElem(vec![brat(1, 2), brat(1, 2)]);
        assert!(max.contains(&k, &phi));
        assert!(!start.contains(&k, &phi));
    }

    #[test]
    fn round2_leaves_maximal_alone() {
        // disc(Z[theta]) = 49 for the cubic, but Z[theta] is already maximal
        let k = field(&[-1, -2, 1, 1]);
        let start = OrderBasis::standard(&k);
        assert_eq!(start.discriminant(&k), brat_i64(49));
        let max = maximal_order(&k);
        assert_eq!(max.discriminant(&k), brat_i64(49));
        assert!(max.basis.is_identity());
    }

    #[test]
    fn round2_wild_prime() {
        // Z[theta] for theta = sqrt(8): index 2 in Z[sqrt2] scaled...
        // x^2 - 8 = (2sqrt2)^2: maximal order is Z[sqrt2], disc 8
        let k = field(&[-8, 0, 1]);
        let max = maximal_order(&k);
        assert_eq!(max.discriminant(&k), brat_i64(8));
        // sqrt8/2 = sqrt2 must be integral
        let half_theta = NfElem(vec![brat_i64(0), brat(1, 2)]);
        assert!(max.contains(&k, &half_theta));
    }

    #[test]
    fn trace_gram_matches_disc() {
        let k = field(&[-2, 0, 1]);
        let o = OrderBasis::standard(&k);
        let g = o.trace_gram(&k);
        assert_eq!(g.at(0, 0), &brat_i64(2));
        assert_eq!(g.at(1, 1), &brat_i64(4));
        assert_eq!(g.at(0, 1), &brat_i64(0));
        assert_eq!(o.discriminant(&k), brat_i64(8));
    }

    #[test]
    fn degree_one_field() {
        let k = field(&[-3, 1]); // Q with theta = 3
        assert_eq!(k.deg(), 1);
        let t = k.gen();
        assert_eq!(k.trace(&t), brat_i64(3));
        let roots = k.real_roots();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].exact(), Some(brat_i64(3)));
        assert_eq!(k.sign_at(&t, &roots[0]), 1);
    }
}
