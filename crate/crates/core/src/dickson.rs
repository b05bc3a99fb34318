//! Dickson polynomials with parameter.
//!
//! `p_{n,a}` is the unique degree-`n` polynomial with
//! `p_{n,a}(v + a/v) = vⁿ + (a/v)ⁿ`; specializing `a = 0` recovers the cyclic
//! cover `x ↦ xⁿ`, so varying `a` deforms a cyclic base change into a
//! dihedral one. The checks below prove the three identities the
//! deformation constructions rely on — the defining Laurent identity, the
//! scaling rule `p_{n,a²}(ax) = aⁿ·p_{n,1}(x)`, and the composition rule
//! `p_{mn,a} = p_{m,aⁿ} ∘ p_{n,a}` — as exact polynomial identities with the
//! parameter kept symbolic, not by sampling values.

use thiserror::Error;

use crate::exactmath::arith::{brat_i64, BigRat};
use crate::exactmath::field::CoeffField;
use crate::exactmath::poly::Poly;
use crate::exactmath::ratfunc::RatFunc;

/// Rational functions in the parameter `a`.
pub type Param = RatFunc<BigRat>;
/// Polynomials in `x` with coefficients in `ℚ(a)`.
pub type ParamPoly = Poly<Param>;

#[derive(Debug, Error)]
pub enum DicksonError {
    #[error("dickson polynomial needs degree >= 1, got {0}")]
    DegreeTooSmall(usize),
}

/// The symbolic parameter `a`.
pub fn param_a() -> Param {
    RatFunc::x(&BigRat::from_integer(1.into()))
}

fn param_const(k: i64) -> Param {
    RatFunc::constant(brat_i64(k))
}

/// A Dickson polynomial with its parameter kept symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct DicksonPoly {
    pub n: usize,
    /// `p_{n,a}` as an element of `ℚ(a)[x]` (all coefficients polynomial in `a`).
    pub poly: ParamPoly,
}

impl DicksonPoly {
    /// Specializes the parameter to a rational number.
    pub fn at_param(&self, a: &BigRat) -> Poly<BigRat> {
        Poly::new(
            self.poly
                .coeffs()
                .iter()
                .map(|c| c.eval(a).expect("dickson coefficients are polynomials in a"))
                .collect(),
        )
    }
}

/// Builds `p_{n,a}` by the recurrence `p₀ = 2`, `p₁ = x`,
/// `p_{k+1} = x·p_k − a·p_{k−1}`.
pub fn dickson(n: usize) -> Result<DicksonPoly, DicksonError> {
    if n == 0 {
        return Err(DicksonError::DegreeTooSmall(n));
    }
    let a = param_a();
    let x = ParamPoly::x(&a);
    let mut prev = ParamPoly::constant(param_const(2));
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev.scale(&a));
        prev = cur;
        cur = next;
    }
    Ok(DicksonPoly { n, poly: cur })
}

/// Lifts an element of `ℚ(a)` to a constant of `ℚ(a)(v)`.
fn lift(c: &Param) -> RatFunc<Param> {
    RatFunc::constant(c.clone())
}

/// Verifies `p_{n,a}(v + a/v) = vⁿ + (a/v)ⁿ` identically in `ℚ(a)(v)`.
pub fn check_defining_identity(n: usize) -> Result<bool, DicksonError> {
    let p = dickson(n)?;
    let a = param_a();
    let v: RatFunc<Param> = RatFunc::x(&a);
    let a_over_v = lift(&a).div(&v);
    let substituted = v.add(&a_over_v);
    let lifted = Poly::new(p.poly.coeffs().iter().map(lift).collect());
    let lhs = lifted.eval(&substituted);
    let rhs = v.pow_i(n as i64).add(&a_over_v.pow_i(n as i64));
    Ok(lhs == rhs)
}

/// Verifies the scaling rule `p_{n,a²}(a·x) = aⁿ·p_{n,1}(x)` in `ℚ(a)[x]`.
pub fn check_scaling(n: usize) -> Result<bool, DicksonError> {
    let p = dickson(n)?;
    let a = param_a();
    let a_sq = a.mul(&a);
    // Left side: substitute a ↦ a² in the coefficients, then x ↦ a·x.
    let lhs = Poly::new(
        p.poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.compose(&a_sq).mul(&a.pow_i(k as i64)))
            .collect(),
    );
    // Right side: specialize a = 1 and multiply by aⁿ.
    let an = a.pow_i(n as i64);
    let rhs = Poly::new(
        p.poly
            .coeffs()
            .iter()
            .map(|c| {
                let at_one = c.eval(&BigRat::from_integer(1.into())).expect("polynomial in a");
                RatFunc::constant(at_one).mul(&an)
            })
            .collect(),
    );
    Ok(lhs == rhs)
}

/// Verifies the composition rule `p_{mn,a} = p_{m,aⁿ}(p_{n,a})` in `ℚ(a)[x]`.
pub fn check_composition(m: usize, n: usize) -> Result<bool, DicksonError> {
    if m == 0 || n == 0 {
        return Err(DicksonError::DegreeTooSmall(0));
    }
    let lhs = dickson(m * n)?.poly;
    let a = param_a();
    let a_n = a.pow_i(n as i64);
    let pm_twisted = Poly::new(
        dickson(m)?.poly.coeffs().iter().map(|c| c.compose(&a_n)).collect(),
    );
    let rhs = pm_twisted.compose(&dickson(n)?.poly);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    /// Builds Σ cᵢ·a^{eᵢ}·x^{dᵢ} from (coefficient, a-power, x-power) triples.
    fn from_terms(n: usize, terms: &[(i64, u32, usize)]) -> ParamPoly {
        let a = param_a();
        let mut coeffs = vec![a.zero_like(); n + 1];
        for &(c, e, d) in terms {
            coeffs[d] = param_const(c).mul(&a.pow_i(e as i64));
        }
        Poly::new(coeffs)
    }

    #[test]
    fn matches_printed_small_degrees() {
        let cases: Vec<(usize, Vec<(i64, u32, usize)>)> = vec![
            (3, vec![(1, 0, 3), (-3, 1, 1)]),
            (5, vec![(1, 0, 5), (-5, 1, 3), (5, 2, 1)]),
            (7, vec![(1, 0, 7), (-7, 1, 5), (14, 2, 3), (-7, 3, 1)]),
            (9, vec![(1, 0, 9), (-9, 1, 7), (27, 2, 5), (-30, 3, 3), (9, 4, 1)]),
            (
                11,
                vec![(1, 0, 11), (-11, 1, 9), (44, 2, 7), (-77, 3, 5), (55, 4, 3), (-11, 5, 1)],
            ),
        ];
        for (n, terms) in cases {
            assert_eq!(dickson(n).unwrap().poly, from_terms(n, &terms), "degree {n}");
        }
    }

    #[test]
    fn zero_parameter_gives_power_map() {
        for n in 1..=12 {
            let specialized = dickson(n).unwrap().at_param(&BigRat::zero());
            assert_eq!(specialized, Poly::<BigRat>::monomial(brat_i64(1), n), "n = {n}");
        }
    }

    #[test]
    fn defining_identity_holds() {
        for n in 1..=12 {
            assert!(check_defining_identity(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn scaling_identity_holds() {
        for n in 1..=12 {
            assert!(check_scaling(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn composition_identity_holds() {
        for (m, n) in [(3, 3), (1, 7), (7, 1), (5, 2), (2, 5), (3, 4), (2, 6)] {
            assert!(check_composition(m, n).unwrap(), "(m,n) = ({m},{n})");
        }
    }

    #[test]
    fn parity_and_term_structure() {
        for n in 1..=12 {
            let p = dickson(n).unwrap().poly;
            // p(−x) = (−1)ⁿ p(x)
            let negated = p.substitute_neg_x();
            let expect = if n % 2 == 0 { p.clone() } else { p.neg() };
            assert_eq!(negated, expect, "parity n = {n}");
            // Monic, only x^{n−2k} terms, and the coefficient of x^{n−2k}
            // is divisible by a^k.
            let a_poly = Poly::x(&BigRat::zero());
            assert!(p.lc().is_poly());
            assert_eq!(p.lc().as_poly().unwrap().deg(), Some(0));
            for (d, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    assert_ne!((n - d) % 2, 0, "only every other term may vanish");
                    continue;
                }
                assert_eq!((n - d) % 2, 0, "term x^{d} present in p_{n}");
                let k = ((n - d) / 2) as i64;
                assert!(c.is_poly(), "coefficient is polynomial in a");
                assert!(c.ord_at(&a_poly) >= k, "a^{k} divides coefficient of x^{d}");
            }
        }
    }

    #[test]
    fn rejects_degree_zero() {
        assert!(dickson(0).is_err());
        assert!(check_composition(0, 3).is_err());
    }
}
