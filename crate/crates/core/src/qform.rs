//! Quadratic forms over the rationals.
//!
//! Gram matrices with exact rational entries, classical invariants
//! (signature, determinant square class, Hasse symbols at the relevant
//! places), Hilbert symbols, and the standard lattice constructors
//! (`U`, `U(r)`, root lattices `A_n`, `D_n`, `E8`, diagonal forms) that
//! the rest of the crate composes into transcendental lattices.
//!
//! Conventions:
//! - Root lattices are positive definite on their simple-root bases;
//!   negative twists are written explicitly, e.g. `e8().rescale(-1)`.
//! - The Hasse invariant of a diagonal form `⟨d₁,…,d_n⟩` is the
//!   Hasse–Witt product `Π_{i<j} (d_i, d_j)_p`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::arith::{brat_i64, factor, padic_split, legendre, squarefree_part_rat, BigRat};
use crate::exactmath::matrix::{diag_signature, Mat};

/// Errors from constructing or analyzing quadratic forms.
#[derive(Debug, Error)]
pub enum QFormError {
    #[error("gram matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix must be symmetric")]
    NotSymmetric,
    #[error("form is degenerate (determinant is zero)")]
    Degenerate,
    #[error("invalid lattice parameters: {0}")]
    BadLattice(String),
}

/// A nondegenerate symmetric bilinear form, stored as its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GramForm {
    entries: Mat<BigRat>,
}

impl GramForm {
    /// Wraps a symmetric square matrix. The form may be degenerate; operations
    /// that need nondegeneracy check for it themselves.
    pub fn new(entries: Mat<BigRat>) -> Result<Self, QFormError> {
        if entries.rows != entries.cols {
            return Err(QFormError::NotSquare { rows: entries.rows, cols: entries.cols });
        }
        if !entries.is_symmetric() {
            return Err(QFormError::NotSymmetric);
        }
        Ok(GramForm { entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigRat>>) -> Result<Self, QFormError> {
        Self::new(Mat::from_rows(rows))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, QFormError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| brat_i64(v)).collect()).collect())
    }

    pub fn dimension(&self) -> usize {
        self.entries.rows
    }

    pub fn entries(&self) -> &Mat<BigRat> {
        &self.entries
    }

    pub fn det(&self) -> BigRat {
        self.entries.det()
    }

    /// Block direct sum of two forms.
    pub fn direct_sum(&self, other: &GramForm) -> GramForm {
        GramForm { entries: Mat::block_diag(&[self.entries.clone(), other.entries.clone()]) }
    }

    /// Direct sum of several copies of this form.
    pub fn repeat(&self, copies: usize) -> GramForm {
        let blocks: Vec<Mat<BigRat>> = (0..copies).map(|_| self.entries.clone()).collect();
        GramForm { entries: Mat::block_diag(&blocks) }
    }

    /// Multiplies every entry by `c`: the form `q` becomes `c·q`.
    pub fn rescale(&self, c: &BigRat) -> GramForm {
        GramForm { entries: self.entries.scale(c) }
    }

    pub fn rescale_i64(&self, c: i64) -> GramForm {
        self.rescale(&brat_i64(c))
    }

    /// Gram matrix of the dual lattice (the inverse matrix).
    pub fn dual(&self) -> Result<GramForm, QFormError> {
        let inv = self.entries.inverse().ok_or(QFormError::Degenerate)?;
        Ok(GramForm { entries: inv })
    }

    /// Pulls the form back along the column basis change `P`: returns `ᵗP·G·P`.
    pub fn change_basis(&self, p: &Mat<BigRat>) -> GramForm {
        GramForm { entries: p.transpose().mul(&self.entries).mul(p) }
    }

    /// True iff every entry is an integer and the determinant is ±1.
    pub fn is_integral_unimodular(&self) -> bool {
        let integral = self.entries.entries().iter().all(|e| e.denom().is_one());
        if !integral {
            return false;
        }
        let d = self.det();
        d.numer().abs().is_one() && d.denom().is_one()
    }
}

/// A place of ℚ: a finite prime or the archimedean absolute value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(BigInt),
    Infinite,
}

impl Place {
    pub fn finite(p: i64) -> Place {
        Place::Finite(BigInt::from(p))
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "oo"),
        }
    }
}

/// ε(u) = (u−1)/2 mod 2 for a 2-adic unit given as an odd rational.
fn eps2(u: &BigRat) -> u32 {
    // For odd d, d⁻¹ ≡ d (mod 8), so u = n/d ≡ n·d (mod 8).
    let m = (u.numer() * u.denom()).mod_floor(&BigInt::from(4));
    if m == BigInt::from(3) { 1 } else { 0 }
}

/// ω(u) = (u²−1)/8 mod 2 for a 2-adic unit given as an odd rational.
fn omega2(u: &BigRat) -> u32 {
    let m = (u.numer() * u.denom()).mod_floor(&BigInt::from(8));
    if m == BigInt::from(3) || m == BigInt::from(5) { 1 } else { 0 }
}

/// Legendre symbol of a p-adic unit written as a rational, p odd.
fn unit_residue_symbol(u: &BigRat, p: &BigInt) -> i32 {
    legendre(u.numer(), p) * legendre(u.denom(), p)
}

/// The Hilbert symbol (a,b) at a place of ℚ. Both arguments must be nonzero.
pub fn hilbert_symbol(a: &BigRat, b: &BigRat, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "hilbert symbol needs nonzero arguments");
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => {
            assert!(p.is_positive(), "place must be a positive prime");
            let (alpha, u) = padic_split(a, p);
            let (beta, v) = padic_split(b, p);
            if *p == BigInt::from(2) {
                let mut e = eps2(&u) * eps2(&v);
                e += (alpha.rem_euclid(2) as u32) * omega2(&v);
                e += (beta.rem_euclid(2) as u32) * omega2(&u);
                if e % 2 == 0 { 1 } else { -1 }
            } else {
                let eps_p = ((p - BigInt::one()) / BigInt::from(2)).mod_floor(&BigInt::from(2));
                let mut s = 1i32;
                if alpha.rem_euclid(2) == 1 && beta.rem_euclid(2) == 1 && eps_p.is_one() {
                    s = -s;
                }
                if beta.rem_euclid(2) == 1 {
                    s *= unit_residue_symbol(&u, p);
                }
                if alpha.rem_euclid(2) == 1 {
                    s *= unit_residue_symbol(&v, p);
                }
                s
            }
        }
    }
}

/// Complete rational-isometry invariants of a nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClassInvariants {
    pub dimension: usize,
    /// Squarefree integer representing the square class of the determinant.
    pub det_squarefree: BigInt,
    /// (positive, negative) inertia indices.
    pub signature: (usize, usize),
    /// Hasse symbols at every place where they can be nontrivial
    /// (primes dividing twice the determinant, any further prime with
    /// symbol −1, and the archimedean place), sorted by place.
    pub hasse: Vec<(Place, i32)>,
}

impl QClassInvariants {
    fn hasse_at(&self, place: &Place) -> i32 {
        self.hasse
            .iter()
            .find(|(q, _)| q == place)
            .map(|(_, s)| *s)
            .unwrap_or(1)
    }
}

/// Hasse–Witt invariant `Π_{i<j} (d_i, d_j)` of a diagonalization at one place.
fn hasse_of_diag(diag: &[BigRat], place: &Place) -> i32 {
    let mut s = 1i32;
    for i in 0..diag.len() {
        for j in (i + 1)..diag.len() {
            s *= hilbert_symbol(&diag[i], &diag[j], place);
        }
    }
    s
}

/// The Hasse–Witt invariant of a form at one place.
pub fn hasse_invariant(g: &GramForm, place: &Place) -> Result<i32, QFormError> {
    let diag = nondegenerate_diagonal(g)?;
    Ok(hasse_of_diag(&diag, place))
}

fn nondegenerate_diagonal(g: &GramForm) -> Result<Vec<BigRat>, QFormError> {
    let (diag, _) = g.entries.congruent_diagonalize();
    if diag.iter().any(|d| num_traits::Zero::is_zero(d)) {
        return Err(QFormError::Degenerate);
    }
    Ok(diag)
}

/// Computes the full invariant set of a nondegenerate form by exact
/// symmetric diagonalization. Every prime appearing in a diagonal entry is
/// examined, so the stored Hasse list misses no −1 symbol.
pub fn invariants(g: &GramForm) -> Result<QClassInvariants, QFormError> {
    let diag = nondegenerate_diagonal(g)?;
    let (pos, neg, _zero) = diag_signature(&diag);

    let det: BigRat = diag.iter().fold(BigRat::one(), |acc, d| acc * d);
    let det_squarefree = squarefree_part_rat(&det);

    let mut primes: BTreeSet<BigInt> = BTreeSet::new();
    primes.insert(BigInt::from(2));
    for d in &diag {
        for (p, _) in factor(&d.numer().abs()) {
            primes.insert(p);
        }
        for (p, _) in factor(d.denom()) {
            primes.insert(p);
        }
    }

    let mut hasse: Vec<(Place, i32)> = Vec::new();
    for p in primes {
        let place = Place::Finite(p.clone());
        let s = hasse_of_diag(&diag, &place);
        let divides_2det = p == BigInt::from(2)
            || det.numer().mod_floor(&p).is_zero()
            || det.denom().mod_floor(&p).is_zero();
        if divides_2det || s == -1 {
            hasse.push((place, s));
        }
    }
    hasse.push((Place::Infinite, hasse_of_diag(&diag, &Place::Infinite)));

    Ok(QClassInvariants { dimension: diag.len(), det_squarefree, signature: (pos, neg), hasse })
}

/// Signature (p, q) of a nondegenerate form.
pub fn signature(g: &GramForm) -> Result<(usize, usize), QFormError> {
    let diag = nondegenerate_diagonal(g)?;
    let (pos, neg, _) = diag_signature(&diag);
    Ok((pos, neg))
}

/// Decides rational isometry: dimension, determinant square class, signature,
/// and Hasse symbols at every place form a complete invariant system over ℚ.
pub fn rationally_isometric(g1: &GramForm, g2: &GramForm) -> Result<bool, QFormError> {
    let i1 = invariants(g1)?;
    let i2 = invariants(g2)?;
    if i1.dimension != i2.dimension
        || i1.det_squarefree != i2.det_squarefree
        || i1.signature != i2.signature
    {
        return Ok(false);
    }
    let mut places: BTreeSet<Place> = BTreeSet::new();
    for (q, _) in i1.hasse.iter().chain(i2.hasse.iter()) {
        places.insert(q.clone());
    }
    Ok(places.iter().all(|q| i1.hasse_at(q) == i2.hasse_at(q)))
}

/// Names for the fixed library lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeName {
    /// Hyperbolic plane `[[0,1],[1,0]]`.
    U,
    /// Scaled hyperbolic plane `[[0,r],[r,0]]`, `r ≠ 0`.
    UScaled(i64),
    /// Root lattice `A_n` (positive definite, simple-root basis), `n ≥ 1`.
    A(usize),
    /// Root lattice `D_n` (positive definite, simple-root basis), `n ≥ 2`.
    D(usize),
    /// Root lattice `E8` (positive definite, simple-root basis).
    E8,
    /// Diagonal form `⟨e₁, …, e_k⟩`.
    Diag(Vec<BigRat>),
}

/// Builds the Gram matrix of a named lattice in its documented basis.
pub fn standard_lattice(name: &LatticeName) -> Result<GramForm, QFormError> {
    match name {
        LatticeName::U => GramForm::from_i64_rows(&[&[0, 1], &[1, 0]]),
        LatticeName::UScaled(r) => {
            if *r == 0 {
                return Err(QFormError::BadLattice("U(r) needs r != 0".into()));
            }
            GramForm::from_i64_rows(&[&[0, *r], &[*r, 0]])
        }
        LatticeName::A(n) => {
            if *n < 1 {
                return Err(QFormError::BadLattice("A_n needs n >= 1".into()));
            }
            Ok(GramForm { entries: path_cartan(*n) })
        }
        LatticeName::D(n) => {
            if *n < 2 {
                return Err(QFormError::BadLattice("D_n needs n >= 2".into()));
            }
            // Simple roots e_1−e_2, …, e_{n−1}−e_n, e_{n−1}+e_n: a path on the
            // first n−1 nodes with the last node attached to node n−2.
            let mut m = path_cartan(*n);
            let last = *n - 1;
            if *n >= 3 {
                *m.at_mut(last, last - 1) = BigRat::zero();
                *m.at_mut(last - 1, last) = BigRat::zero();
                *m.at_mut(last, last - 2) = -BigRat::one();
                *m.at_mut(last - 2, last) = -BigRat::one();
            } else {
                // D_2 = A_1 ⊕ A_1.
                *m.at_mut(0, 1) = BigRat::zero();
                *m.at_mut(1, 0) = BigRat::zero();
            }
            Ok(GramForm { entries: m })
        }
        LatticeName::E8 => {
            // Simple-root numbering: a path 1–3–4–5–6–7–8 with node 2
            // attached to node 4 (indices zero-based below).
            let mut m = Mat::identity(8, &BigRat::one()).scale(&brat_i64(2));
            let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
            for (i, j) in edges {
                *m.at_mut(i, j) = -BigRat::one();
                *m.at_mut(j, i) = -BigRat::one();
            }
            Ok(GramForm { entries: m })
        }
        LatticeName::Diag(es) => {
            if es.is_empty() {
                return Err(QFormError::BadLattice("diagonal form needs at least one entry".into()));
            }
            let n = es.len();
            let m = Mat::from_fn(n, n, |i, j| if i == j { es[i].clone() } else { BigRat::zero() });
            Ok(GramForm { entries: m })
        }
    }
}

/// Cartan matrix of the path graph on `n` nodes (the A_n Gram matrix).
fn path_cartan(n: usize) -> Mat<BigRat> {
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            brat_i64(2)
        } else if i.abs_diff(j) == 1 {
            brat_i64(-1)
        } else {
            BigRat::zero()
        }
    })
}

/// Convenience constructor: the hyperbolic plane.
pub fn u() -> GramForm {
    standard_lattice(&LatticeName::U).unwrap()
}

/// Convenience constructor: `U(r)`.
pub fn u_scaled(r: i64) -> GramForm {
    standard_lattice(&LatticeName::UScaled(r)).unwrap()
}

/// Convenience constructor: positive definite `E8`.
pub fn e8() -> GramForm {
    standard_lattice(&LatticeName::E8).unwrap()
}

/// Convenience constructor: `⟨e₁,…,e_k⟩` from integers.
pub fn diag_form(entries: &[i64]) -> GramForm {
    standard_lattice(&LatticeName::Diag(entries.iter().map(|&e| brat_i64(e)).collect())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> BigRat {
        crate::exactmath::arith::brat(n, d)
    }

    #[test]
    fn u_gram_and_invariants() {
        let g = u();
        assert_eq!(g.entries().to_rows(), vec![vec![brat_i64(0), brat_i64(1)], vec![brat_i64(1), brat_i64(0)]]);
        let inv = invariants(&g).unwrap();
        assert_eq!(inv.dimension, 2);
        assert_eq!(inv.det_squarefree, BigInt::from(-1));
        assert_eq!(inv.signature, (1, 1));
    }

    #[test]
    fn u_scaled_gram_and_det() {
        let g3 = u_scaled(3);
        assert_eq!(g3.entries().to_rows(), vec![vec![brat_i64(0), brat_i64(3)], vec![brat_i64(3), brat_i64(0)]]);
        for r in [1i64, 2, 3, 5, 12] {
            let g = u_scaled(r);
            assert_eq!(g.det(), brat_i64(-r * r));
        }
        assert!(standard_lattice(&LatticeName::UScaled(0)).is_err());
    }

    #[test]
    fn root_lattice_dets_and_signatures() {
        for n in 1..=8 {
            let a = standard_lattice(&LatticeName::A(n)).unwrap();
            assert_eq!(a.det(), brat_i64(n as i64 + 1));
            assert_eq!(signature(&a).unwrap(), (n, 0));
        }
        for n in 2..=8 {
            let d = standard_lattice(&LatticeName::D(n)).unwrap();
            assert_eq!(d.det(), brat_i64(4), "D_{n} det");
            assert_eq!(signature(&d).unwrap(), (n, 0));
        }
        let e = e8();
        assert_eq!(e.det(), brat_i64(1));
        assert_eq!(signature(&e).unwrap(), (8, 0));
        assert!(e.is_integral_unimodular());
        let inv = invariants(&e).unwrap();
        assert_eq!(inv.det_squarefree, BigInt::one());
    }

    #[test]
    fn dual_of_a2_has_det_one_third() {
        let a2 = standard_lattice(&LatticeName::A(2)).unwrap();
        let dual = a2.dual().unwrap();
        assert_eq!(dual.det(), rat(1, 3));
    }

    #[test]
    fn unimodularity_detects_scaling() {
        assert!(u().is_integral_unimodular());
        assert!(!u_scaled(2).is_integral_unimodular());
        assert!(!diag_form(&[1, 3]).is_integral_unimodular());
        let half = diag_form(&[1, 1]).rescale(&rat(1, 2));
        assert!(!half.is_integral_unimodular());
    }

    #[test]
    fn hilbert_symbol_basics() {
        let two = brat_i64(2);
        let seven = brat_i64(7);
        let minus_one = brat_i64(-1);
        // 1 is a square everywhere.
        for place in [Place::finite(2), Place::finite(3), Place::finite(7), Place::Infinite] {
            assert_eq!(hilbert_symbol(&BigRat::one(), &seven, &place), 1);
        }
        assert_eq!(hilbert_symbol(&minus_one, &minus_one, &Place::finite(2)), -1);
        assert_eq!(hilbert_symbol(&minus_one, &minus_one, &Place::Infinite), -1);
        // Tame symbol (2,7)_7 = (2|7) = +1; (3,7)_7 = (3|7) = -1.
        assert_eq!(hilbert_symbol(&two, &seven, &Place::finite(7)), 1);
        assert_eq!(hilbert_symbol(&brat_i64(3), &seven, &Place::finite(7)), -1);
        // (p,p)_p = (-1,p)_p.
        for p in [3i64, 5, 7, 11, 13] {
            let bp = brat_i64(p);
            assert_eq!(
                hilbert_symbol(&bp, &bp, &Place::finite(p)),
                hilbert_symbol(&minus_one, &bp, &Place::finite(p))
            );
        }
    }

    #[test]
    fn hilbert_symbol_bilinear_and_product_formula() {
        let mut rng = StdRng::seed_from_u64(7);
        let sample = |rng: &mut StdRng| -> BigRat {
            loop {
                let n = rng.gen_range(-60i64..=60);
                if n != 0 {
                    let d = rng.gen_range(1i64..=30);
                    return rat(n, d);
                }
            }
        };
        for _ in 0..40 {
            let a = sample(&mut rng);
            let b1 = sample(&mut rng);
            let b2 = sample(&mut rng);
            let prod = &b1 * &b2;
            // Places where anything can be nontrivial for these arguments.
            let mut places = vec![Place::Infinite, Place::finite(2)];
            for v in [&a, &b1, &b2] {
                for (p, _) in factor(&v.numer().abs()) {
                    places.push(Place::Finite(p));
                }
                for (p, _) in factor(v.denom()) {
                    places.push(Place::Finite(p));
                }
            }
            places.sort();
            places.dedup();
            for place in &places {
                assert_eq!(
                    hilbert_symbol(&a, &prod, place),
                    hilbert_symbol(&a, &b1, place) * hilbert_symbol(&a, &b2, place),
                    "bilinearity at {place} for a={a}, b1={b1}, b2={b2}"
                );
            }
            let total: i32 = places.iter().map(|q| hilbert_symbol(&a, &b1, q)).product();
            assert_eq!(total, 1, "product formula for a={a}, b={b1}");
        }
    }

    #[test]
    fn diag_one_minus_one_isometric_to_u() {
        let g = diag_form(&[1, -1]);
        assert!(rationally_isometric(&g, &u()).unwrap());
        // And U is NOT isometric to the definite plane.
        assert!(!rationally_isometric(&u(), &diag_form(&[1, 1])).unwrap());
    }

    #[test]
    fn hasse_respects_direct_sums() {
        let forms = [
            diag_form(&[1, -1]),
            diag_form(&[2, 3, -5]),
            u(),
            standard_lattice(&LatticeName::A(3)).unwrap(),
            e8().rescale_i64(-1),
        ];
        let places = [Place::finite(2), Place::finite(3), Place::finite(5), Place::Infinite];
        for g1 in &forms {
            for g2 in &forms {
                let sum = g1.direct_sum(g2);
                for place in &places {
                    let lhs = hasse_invariant(&sum, place).unwrap();
                    let d1 = g1.det();
                    let d2 = g2.det();
                    let rhs = hasse_invariant(g1, place).unwrap()
                        * hasse_invariant(g2, place).unwrap()
                        * hilbert_symbol(&d1, &d2, place);
                    assert_eq!(lhs, rhs, "sum rule at {place}");
                }
            }
        }
    }

    /// Random products of elementary matrices: unimodular with small entries.
    fn random_unimodular(n: usize, rng: &mut StdRng) -> Mat<BigRat> {
        let mut m = Mat::identity(n, &BigRat::one());
        for _ in 0..(3 * n) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            match rng.gen_range(0..3) {
                0 => {
                    // row_i += k * row_j
                    let k = brat_i64(rng.gen_range(-2i64..=2));
                    for c in 0..n {
                        let add = &k * m.at(j, c);
                        *m.at_mut(i, c) = m.at(i, c) + &add;
                    }
                }
                1 => {
                    for c in 0..n {
                        let tmp = m.at(i, c).clone();
                        *m.at_mut(i, c) = m.at(j, c).clone();
                        *m.at_mut(j, c) = tmp;
                    }
                }
                _ => {
                    for c in 0..n {
                        *m.at_mut(i, c) = -m.at(i, c).clone();
                    }
                }
            }
        }
        m
    }

    #[test]
    fn change_of_basis_preserves_invariants() {
        let mut rng = StdRng::seed_from_u64(1234);
        let bases: Vec<GramForm> = vec![
            u(),
            diag_form(&[1, -2, 3]),
            diag_form(&[2, 5, -7, 1]),
            standard_lattice(&LatticeName::A(4)).unwrap(),
            u_scaled(2).direct_sum(&diag_form(&[-3])),
        ];
        for trial in 0..50 {
            let g = &bases[trial % bases.len()];
            let p = random_unimodular(g.dimension(), &mut rng);
            let h = g.change_basis(&p);
            assert_eq!(invariants(g).unwrap(), invariants(&h).unwrap(), "trial {trial}");
            assert!(rationally_isometric(g, &h).unwrap(), "trial {trial}");
        }
        // Forms with different signatures are never isometric.
        assert!(!rationally_isometric(&diag_form(&[1, 1]), &diag_form(&[1, -1])).unwrap());
        assert!(!rationally_isometric(&diag_form(&[1, 1, 1]), &diag_form(&[1, 1, -1])).unwrap());
    }

    #[test]
    fn k3_transcendental_identities() {
        // U² ⊕ E8(−1)² ⊕ ⟨−1⟩ ≅ ⟨1⟩² ⊕ ⟨−1⟩^19.
        let e8m = e8().rescale_i64(-1);
        let lhs = u().repeat(2).direct_sum(&e8m.repeat(2)).direct_sum(&diag_form(&[-1]));
        let mut rhs_entries = vec![1i64, 1];
        rhs_entries.extend(std::iter::repeat(-1).take(19));
        let rhs = diag_form(&rhs_entries);
        assert!(rationally_isometric(&lhs, &rhs).unwrap());

        // U ⊕ ⟨4r²⟩ ⊕ ⟨−4r²⟩ ⊕ E8(−1)² ≅ ⟨1⟩² ⊕ ⟨−1⟩^18 for r = 1, 2.
        for r in [1i64, 2] {
            let s = 4 * r * r;
            let lhs = u().direct_sum(&diag_form(&[s, -s])).direct_sum(&e8m.repeat(2));
            let mut entries = vec![1i64, 1];
            entries.extend(std::iter::repeat(-1).take(18));
            assert!(rationally_isometric(&lhs, &diag_form(&entries)).unwrap(), "r={r}");
        }

        // ⟨4r²⟩² ⊕ E8(−1)² ≅ ⟨1⟩² ⊕ ⟨−1⟩^16 for r = 1, 2.
        for r in [1i64, 2] {
            let s = 4 * r * r;
            let lhs = diag_form(&[s, s]).direct_sum(&e8m.repeat(2));
            let mut entries = vec![1i64, 1];
            entries.extend(std::iter::repeat(-1).take(16));
            assert!(rationally_isometric(&lhs, &diag_form(&entries)).unwrap(), "r={r}");
        }
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        let g = diag_form(&[1, 1]);
        let mut m = g.entries().clone();
        *m.at_mut(1, 1) = BigRat::zero();
        let dgn = GramForm::new(m).unwrap();
        assert!(matches!(invariants(&dgn), Err(QFormError::Degenerate)));
        assert!(GramForm::from_i64_rows(&[&[0, 1], &[2, 0]]).is_err());
    }
}
