//! Real-multiplication endomorphisms on K3-type lattices.
//!
//! Two mechanisms produce a self-adjoint `M` with `M² = d` on pieces of the
//! K3 lattice:
//!
//! - on a hyperbolic plane `U(r)` the endomorphism `(u,v) ↦ (dv,u)` works
//!   directly, and
//! - on an `E8(−1)` block one takes `M = a₁g₁ + a₂g₂ + a₃g₃ + a₄g₄` where the
//!   `gᵢ` are four anti-commuting involutions of the `E8` lattice (frozen
//!   integer matrices below, living in the Weyl group) and `Σaᵢ² = d`.
//!
//! Higher-degree real multiplication comes from trace-form lattices: for a
//! totally real field `F = ℚ(α)` of degree `m` and a generator `γ` of the
//! different ideal, `b_γ(x,y) = Tr_{F/ℚ}(γ⁻¹xy)` is an integral unimodular
//! form on the ring of integers, and block sums `(F,b_{uδ})² ⊕ (F,b_δ)^{l−2}`
//! carry the diagonal multiplication-by-`α` action. The crate ships six
//! certified `(f, δ, uδ)` triples covering degrees 3, 4, 6 and 7.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::arith::{brat, brat_i64, four_squares, squarefree_part, BigRat};
use crate::exactmath::field::{CoeffField, OrderedField, QuadExt};
use crate::exactmath::matrix::{diag_signature, Mat};
use crate::exactmath::numfield::{
    maximal_order, FieldBuildError, NfElem, NumberField, OrderBasis,
};
use crate::exactmath::poly::Poly;
use crate::qform::{self, GramForm, QFormError};

#[derive(Debug, Error)]
pub enum RmError {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("endomorphism violates its declared relation: {0}")]
    RelationFailed(String),
    #[error("block count l must be at least 3 (the eigenspace carrying the period needs signature (2, l-2) with l-2 >= 1), got {0}")]
    RankTooSmall(usize),
    #[error("trace-form certification failed: {0}")]
    CertificationFailed(String),
    #[error(transparent)]
    Form(#[from] QFormError),
    #[error(transparent)]
    Field(#[from] FieldBuildError),
}

// ---------------------------------------------------------------------------
// Endomorphisms with a square-root witness
// ---------------------------------------------------------------------------

/// A rational endomorphism of a lattice's ambient space, optionally with a
/// witness `d` such that `matrix² = d·Id`.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoMatrix {
    pub matrix: Mat<BigRat>,
    pub min_poly_witness: Option<BigRat>,
}

impl EndoMatrix {
    /// Checks `matrix² = d·Id` against the stored witness.
    pub fn witness_holds(&self) -> bool {
        match &self.min_poly_witness {
            None => true,
            Some(d) => {
                let n = self.matrix.rows;
                let sq = self.matrix.mul(&self.matrix);
                let want = Mat::identity(n, &BigRat::one()).scale(d);
                sq == want
            }
        }
    }
}

/// True iff `ᵗM·G = G·M` exactly, i.e. `M` is self-adjoint for the form.
pub fn adjoint_check(endo: &EndoMatrix, g: &GramForm) -> bool {
    if endo.matrix.rows != g.dimension() {
        return false;
    }
    let m = &endo.matrix;
    m.transpose().mul(g.entries()) == g.entries().mul(m)
}

/// Which lattice the square-root endomorphism is built on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadShape {
    /// `U ⊕ U(r)` with the in-plane map `(u,v) ↦ (dv,u)` on each summand.
    UPair(i64),
    /// `E8(−1)²` with the involution combination acting diagonally.
    E8Pair,
    /// The full 20-dimensional sum `U ⊕ U(r) ⊕ E8(−1)²`.
    FullT(i64),
}

/// In-plane square root of `d` on a hyperbolic plane: `(u,v) ↦ (dv,u)`.
fn tau_block(d: u64) -> Mat<BigRat> {
    Mat::from_rows(vec![
        vec![BigRat::zero(), brat_i64(d as i64)],
        vec![BigRat::one(), BigRat::zero()],
    ])
}

/// Square root of `d` on one `E8` block from the involution fixture and a
/// four-square decomposition of `d`.
fn e8_sqrt_block(d: u64) -> Mat<BigRat> {
    let (a1, a2, a3, a4) = four_squares(d);
    let gs = anticommuting_involutions_e8();
    let mut acc = Mat::zeros(8, 8, &BigRat::zero());
    for (a, g) in [a1, a2, a3, a4].into_iter().zip(gs.iter()) {
        acc = acc.add(&g.scale(&brat_i64(a as i64)));
    }
    acc
}

/// Builds a lattice of the requested shape together with a self-adjoint
/// endomorphism squaring to `d`.
pub fn quad_endo(d: u64, shape: &QuadShape) -> Result<(GramForm, EndoMatrix), RmError> {
    if d == 0 {
        return Err(RmError::BadInput("d must be positive".into()));
    }
    let db = BigInt::from(d);
    if squarefree_part(&db) != db {
        return Err(RmError::BadInput(format!("d = {d} is not squarefree")));
    }
    let check_r = |r: i64| -> Result<(), RmError> {
        if r == 0 {
            Err(RmError::BadInput("U(r) needs r != 0".into()))
        } else {
            Ok(())
        }
    };
    let e8m = qform::e8().rescale_i64(-1);
    let (gram, mat) = match shape {
        QuadShape::UPair(r) => {
            check_r(*r)?;
            let g = qform::u().direct_sum(&qform::u_scaled(*r));
            let m = Mat::block_diag(&[tau_block(d), tau_block(d)]);
            (g, m)
        }
        QuadShape::E8Pair => {
            let g = e8m.repeat(2);
            let w = e8_sqrt_block(d);
            let m = Mat::block_diag(&[w.clone(), w]);
            (g, m)
        }
        QuadShape::FullT(r) => {
            check_r(*r)?;
            let g = qform::u().direct_sum(&qform::u_scaled(*r)).direct_sum(&e8m.repeat(2));
            let w = e8_sqrt_block(d);
            let m = Mat::block_diag(&[tau_block(d), tau_block(d), w.clone(), w]);
            (g, m)
        }
    };
    let endo = EndoMatrix { matrix: mat, min_poly_witness: Some(brat_i64(d as i64)) };
    debug_assert!(endo.witness_holds());
    debug_assert!(adjoint_check(&endo, &gram));
    Ok((gram, endo))
}

/// Signature of the form restricted to one eigenvalue branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSignature {
    pub branch: String,
    pub signature: (usize, usize),
}

/// Exact eigenspace signatures for an endomorphism with witness `M² = d·Id`,
/// computed over `ℚ(√d)` (or over `ℚ` when `d = 1`). Branches are returned as
/// `+√d` first, then `−√d`.
pub fn eigenspace_signatures(
    endo: &EndoMatrix,
    g: &GramForm,
) -> Result<Vec<BranchSignature>, RmError> {
    let d = endo
        .min_poly_witness
        .clone()
        .ok_or_else(|| RmError::BadInput("endomorphism carries no square witness".into()))?;
    if !endo.witness_holds() {
        return Err(RmError::RelationFailed(format!("matrix squared is not {d}·Id")));
    }
    if endo.matrix.rows != g.dimension() {
        return Err(RmError::BadInput("matrix and form dimensions differ".into()));
    }
    if !d.is_integer() || !d.is_positive() {
        return Err(RmError::BadInput(format!("witness {d} is not a positive integer")));
    }
    let n = g.dimension();
    if d.is_one() {
        // Rational eigenvalues ±1.
        let mut out = Vec::new();
        for (label, sign) in [("+1", 1i64), ("-1", -1i64)] {
            let shifted = endo.matrix.sub(&Mat::identity(n, &BigRat::one()).scale(&brat_i64(sign)));
            let kernel = shifted.kernel_basis();
            out.push(BranchSignature {
                branch: label.to_string(),
                signature: restricted_signature(g.entries(), &kernel),
            });
        }
        return Ok(out);
    }
    let dint = d.numer().clone();
    let to_k = |q: &BigRat| QuadExt::from_rat(q.clone(), dint.clone());
    let mk = endo.matrix.map(&to_k);
    let gk = g.entries().map(&to_k);
    let sqrt_d = QuadExt::sqrt_d(dint.clone());
    let one_k = QuadExt::from_rat(BigRat::one(), dint.clone());
    let mut out = Vec::new();
    for (label_sign, lambda) in [("+", sqrt_d.clone()), ("-", sqrt_d.neg())] {
        let lam_id = Mat::identity(n, &one_k).map(|e| e.mul(&lambda));
        let shifted = mk.sub(&lam_id);
        let kernel = shifted.kernel_basis();
        out.push(BranchSignature {
            branch: format!("{label_sign}sqrt({dint})"),
            signature: restricted_signature(&gk, &kernel),
        });
    }
    Ok(out)
}

/// Signature of `G` restricted to the span of the given vectors.
fn restricted_signature<K: OrderedField>(g: &Mat<K>, span: &[Vec<K>]) -> (usize, usize) {
    if span.is_empty() {
        return (0, 0);
    }
    let n = g.rows;
    let k = span.len();
    let w = Mat::from_fn(n, k, |i, b| span[b][i].clone());
    let restricted = w.transpose().mul(g).mul(&w);
    let (diag, _) = restricted.congruent_diagonalize();
    let (p, q, _) = diag_signature(&diag);
    (p, q)
}

// ---------------------------------------------------------------------------
// Anti-commuting involutions of E8
// ---------------------------------------------------------------------------

/// Four anti-commuting involutive isometries of the `E8` lattice, written on
/// the simple-root basis used by [`qform::e8`]. In the coordinate model they
/// are the signed permutations `X⊗I⊗I`, `Z⊗X⊗I`, `Z⊗Z⊗X`, `Z⊗Z⊗Z` of `ℝ⁸`
/// (each flipping evenly many signs, hence lattice-preserving); the integer
/// matrices below are those maps conjugated onto the root basis, verified by
/// the test suite.
const E8_INVOLUTIONS: [[[i64; 8]; 8]; 4] = [
    [
        [-1, 0, 0, 0, 2, -2, 0, 0],
        [-2, 1, 0, 0, 2, -2, 0, 0],
        [-2, 1, 0, 0, 3, -4, 1, 0],
        [-3, 2, 0, 0, 4, -5, 0, 1],
        [-2, 2, 0, 0, 3, -4, 0, 0],
        [-2, 2, 0, 0, 2, -3, 0, 0],
        [-2, 1, 1, 0, 1, -2, 0, 0],
        [-1, 0, 0, 1, 0, -1, 0, 0],
    ],
    [
        [1, 0, 0, 0, 0, 0, -2, 2],
        [1, 1, 0, 0, 0, -1, -2, 2],
        [2, 1, 0, -1, 1, -1, -3, 3],
        [3, 2, 0, -1, 0, -1, -4, 4],
        [2, 1, 1, -1, 0, -1, -3, 3],
        [2, 0, 0, 0, 0, -1, -2, 2],
        [1, 0, 0, 0, 0, -1, -1, 2],
        [1, 0, 0, 0, 0, -1, 0, 1],
    ],
    [
        [-1, 0, 0, 0, 0, 0, 0, 2],
        [0, 1, 0, -1, 0, 0, 0, 3],
        [0, 0, -1, 0, 0, 0, 0, 4],
        [0, 0, 0, -1, 0, 0, 0, 6],
        [0, 0, 0, -1, 1, -1, 0, 5],
        [0, 0, 0, 0, 0, -1, 0, 4],
        [0, 0, 0, 0, 0, -1, 1, 2],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [-1, 0, 0, 0, 0, 0, 0, 0],
        [-1, 0, -1, 0, 1, -1, 1, 0],
        [-2, -1, 0, 0, 1, -1, 1, 0],
        [-3, 0, 0, -1, 2, -2, 2, 0],
        [-3, 0, 0, 0, 1, -2, 2, 0],
        [-2, 0, 0, 0, 0, -1, 2, 0],
        [-2, 0, 0, 0, 0, 0, 1, 0],
        [-1, 0, 0, 0, 0, 0, 0, 1],
    ],
];

/// The four frozen anti-commuting involutions as rational matrices.
pub fn anticommuting_involutions_e8() -> [Mat<BigRat>; 4] {
    let build = |k: usize| {
        Mat::from_fn(8, 8, |i, j| brat_i64(E8_INVOLUTIONS[k][i][j]))
    };
    [build(0), build(1), build(2), build(3)]
}

// ---------------------------------------------------------------------------
// Trace-form lattices over totally real fields
// ---------------------------------------------------------------------------

/// Defining data for a trace-form lattice: a totally real field, a totally
/// negative generator `δ` of the different, the twisted generator `uδ`, and
/// the order basis the forms live on (power basis by default).
#[derive(Clone, Debug)]
pub struct TraceFormSpec {
    pub field: NumberField,
    pub delta: NfElem,
    pub u_delta: NfElem,
    pub basis: OrderBasis,
}

impl TraceFormSpec {
    pub fn new(field: NumberField, delta: NfElem, u_delta: NfElem) -> TraceFormSpec {
        let basis = OrderBasis::standard(&field);
        TraceFormSpec { field, delta, u_delta, basis }
    }

    pub fn with_basis(mut self, basis: OrderBasis) -> TraceFormSpec {
        self.basis = basis;
        self
    }
}

/// Which generator the trace form is twisted by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceGenerator {
    Delta,
    UDelta,
}

/// Gram matrix of `b_γ(x,y) = Tr(γ⁻¹xy)` on the spec's order basis.
pub fn trace_form_gram(spec: &TraceFormSpec, which: TraceGenerator) -> Result<GramForm, RmError> {
    let gamma = match which {
        TraceGenerator::Delta => &spec.delta,
        TraceGenerator::UDelta => &spec.u_delta,
    };
    let gamma_inv = spec
        .field
        .inv(gamma)
        .ok_or_else(|| RmError::BadInput("trace-form generator is zero".into()))?;
    let els = spec.basis.elements();
    let n = els.len();
    let gram = Mat::from_fn(n, n, |i, j| {
        spec.field.trace(&spec.field.mul(&gamma_inv, &spec.field.mul(&els[i], &els[j])))
    });
    Ok(GramForm::new(gram)?)
}

/// One named pass/fail check with a human-readable witness string.
#[derive(Clone, Debug)]
pub struct CertCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of certifying a trace-form spec: the individual checks and their
/// conjunction.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub checks: Vec<CertCheck>,
    pub overall: bool,
}

impl Certificate {
    fn from_checks(checks: Vec<CertCheck>) -> Certificate {
        let overall = checks.iter().all(|c| c.pass);
        Certificate { checks, overall }
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }
}

/// Certifies that `(f, δ, uδ)` defines unimodular trace forms of the right
/// signatures on the spec's basis:
///
/// 1. `f` is totally real of the stated degree,
/// 2. `Gram(b_δ)` is integral with determinant ±1,
/// 3. `Gram(b_{uδ})` is integral with determinant ±1,
/// 4. `δ` is totally negative (signature `(0,m)`),
/// 5. `b_{uδ}` has signature `(1,m−1)`,
/// 6. `uδ/δ` is a unit of the order (it and its inverse are integral).
///
/// Failures are recorded in the certificate, never thrown. The multiplicity
/// `l` is carried along for reporting only; the checks don't depend on it.
pub fn certify_table_entry(spec: &TraceFormSpec, m: usize, l: usize) -> Certificate {
    let mut checks = Vec::new();
    let deg = spec.field.deg();
    let real_count = spec.field.real_roots().len();
    checks.push(CertCheck {
        name: "totally_real_of_degree",
        pass: deg == m && real_count == deg,
        detail: format!("degree {deg} (want {m}), {real_count} real roots, multiplicity l = {l}"),
    });

    let mut gram_check = |name: &'static str, which: TraceGenerator| -> Option<GramForm> {
        match trace_form_gram(spec, which) {
            Ok(g) => {
                let det = g.det();
                checks.push(CertCheck {
                    name,
                    pass: g.is_integral_unimodular(),
                    detail: format!("det = {det}"),
                });
                Some(g)
            }
            Err(e) => {
                checks.push(CertCheck { name, pass: false, detail: e.to_string() });
                None
            }
        }
    };
    let g_delta = gram_check("delta_gram_unimodular", TraceGenerator::Delta);
    let g_udelta = gram_check("u_delta_gram_unimodular", TraceGenerator::UDelta);

    let mut sig_check = |name: &'static str, g: &Option<GramForm>, want: (usize, usize)| {
        let (pass, detail) = match g {
            Some(g) => match qform::signature(g) {
                Ok(sig) => (sig == want, format!("signature {sig:?}, want {want:?}")),
                Err(e) => (false, e.to_string()),
            },
            None => (false, "gram unavailable".to_string()),
        };
        checks.push(CertCheck { name, pass, detail });
    };
    sig_check("delta_totally_negative", &g_delta, (0, m));
    sig_check("u_delta_signature_hyperbolic", &g_udelta, (1, m.saturating_sub(1)));

    let unit_check = (|| -> Result<(bool, String), RmError> {
        let dinv = spec
            .field
            .inv(&spec.delta)
            .ok_or_else(|| RmError::BadInput("delta is zero".into()))?;
        let u = spec.field.mul(&spec.u_delta, &dinv);
        let uinv = spec
            .field
            .inv(&u)
            .ok_or_else(|| RmError::BadInput("u_delta is zero".into()))?;
        let fwd = spec.basis.contains(&spec.field, &u);
        let bwd = spec.basis.contains(&spec.field, &uinv);
        Ok((fwd && bwd, format!("u integral: {fwd}, u^-1 integral: {bwd}")))
    })();
    match unit_check {
        Ok((pass, detail)) => checks.push(CertCheck { name: "quotient_is_unit", pass, detail }),
        Err(e) => checks.push(CertCheck {
            name: "quotient_is_unit",
            pass: false,
            detail: e.to_string(),
        }),
    }

    Certificate::from_checks(checks)
}

/// Basis of the maximal order of the field (identity when the power basis
/// already is maximal).
pub fn maximal_order_basis(field: &NumberField) -> OrderBasis {
    maximal_order(field)
}

// ---------------------------------------------------------------------------
// Assembled block lattices with field action
// ---------------------------------------------------------------------------

/// A block lattice `(F,b_{uδ})² ⊕ (F,b_δ)^{l−2}` with the diagonal
/// multiplication-by-`α` action.
#[derive(Clone, Debug)]
pub struct RMAssembly {
    pub spec: TraceFormSpec,
    pub l: usize,
    pub gram: GramForm,
    pub action: EndoMatrix,
}

/// Builds the block lattice for a certified spec. The first two blocks carry
/// `b_{uδ}`, the remaining `l−2` carry `b_δ`; the action is multiplication by
/// the field generator on every block.
pub fn assemble_rm_lattice(spec: &TraceFormSpec, l: usize) -> Result<RMAssembly, RmError> {
    if l < 3 {
        return Err(RmError::RankTooSmall(l));
    }
    let m = spec.field.deg();
    let cert = certify_table_entry(spec, m, l);
    if !cert.overall {
        return Err(RmError::CertificationFailed(format!(
            "failing checks: {}",
            cert.failing().join(", ")
        )));
    }
    let g_u = trace_form_gram(spec, TraceGenerator::UDelta)?;
    let g_d = trace_form_gram(spec, TraceGenerator::Delta)?;
    let mut gram = g_u.direct_sum(&g_u);
    for _ in 0..(l - 2) {
        gram = gram.direct_sum(&g_d);
    }

    // Multiplication by α on the order basis, column convention.
    let els = spec.basis.elements();
    let alpha = spec.field.gen();
    let mut cols: Vec<Vec<BigRat>> = Vec::with_capacity(m);
    for b in &els {
        cols.push(spec.basis.coords(&spec.field.mul(&alpha, b)));
    }
    let block = Mat::from_fn(m, m, |i, j| cols[j][i].clone());
    let blocks: Vec<Mat<BigRat>> = (0..l).map(|_| block.clone()).collect();
    let action = EndoMatrix { matrix: Mat::block_diag(&blocks), min_poly_witness: None };

    if !adjoint_check(&action, &gram) {
        return Err(RmError::RelationFailed(
            "field action is not self-adjoint for the assembled form".into(),
        ));
    }
    Ok(RMAssembly { spec: spec.clone(), l, gram, action })
}

impl RMAssembly {
    /// Signature of the form on each real-embedding eigenspace of the field
    /// action, via the sign rule: the branch at the `i`-th real root receives
    /// `(1,0)` from a block `b_γ` when `σᵢ(γ) > 0` and `(0,1)` when negative.
    pub fn eigenspace_signatures(&self) -> Vec<BranchSignature> {
        let roots = self.spec.field.real_roots();
        let su = self.spec.field.embedding_signs(&self.spec.u_delta);
        let sd = self.spec.field.embedding_signs(&self.spec.delta);
        let rest = self.l - 2;
        roots
            .iter()
            .enumerate()
            .map(|(i, root)| {
                let mut p = 0;
                let mut q = 0;
                if su[i] > 0 {
                    p += 2;
                } else {
                    q += 2;
                }
                if sd[i] > 0 {
                    p += rest;
                } else {
                    q += rest;
                }
                BranchSignature {
                    branch: format!("alpha ~ {:.6}", root.approx_f64()),
                    signature: (p, q),
                }
            })
            .collect()
    }
}

/// Dimension of the relevant period-domain family: `l−2` for real
/// multiplication, `l−1` for complex multiplication, where `l = rank_T / m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultKind {
    RM,
    CM,
}

pub fn moduli_dimension(rank_t: usize, m: usize, kind: MultKind) -> Result<i64, RmError> {
    if m == 0 || rank_t % m != 0 {
        return Err(RmError::BadInput(format!(
            "field degree {m} must divide the transcendental rank {rank_t}"
        )));
    }
    let l = (rank_t / m) as i64;
    Ok(match kind {
        MultKind::RM => l - 2,
        MultKind::CM => l - 1,
    })
}

// ---------------------------------------------------------------------------
// Built-in certified field data
// ---------------------------------------------------------------------------

/// One built-in `(f, δ, uδ)` triple. Coefficient slices are ascending in the
/// field generator; `den` is a global denominator.
#[derive(Clone, Copy, Debug)]
pub struct RmFieldEntry {
    pub label: &'static str,
    pub degree: usize,
    /// Number of trace-form blocks in the associated K3 lattice (`m·l ≤ 21`).
    pub block_count: usize,
    min_poly: &'static [i64],
    delta_num: &'static [i64],
    delta_den: i64,
    u_delta_num: &'static [i64],
    u_delta_den: i64,
}

/// Totally real fields with certified different generators: degrees 3–7,
/// including the real cyclotomic fields of conductor 7, 13 and 43, the
/// quartic subfield of conductor 17, the biquadratic field ℚ(√2,√5), and a
/// non-Galois septic field.
///
/// Generators are sign-normalized: `δ` is totally negative and `b_{uδ}` has
/// signature `(1, m−1)`. Flipping the sign of a generator changes neither
/// the ideal it generates nor the unit property of `uδ/δ`, so this pins the
/// convention the certification checks expect.
pub const BUILTIN_RM_FIELDS: [RmFieldEntry; 6] = [
    RmFieldEntry {
        label: "zeta7-plus",
        degree: 3,
        block_count: 7,
        min_poly: &[-1, -2, 1, 1],
        delta_num: &[-4, -3, -1],
        delta_den: 1,
        u_delta_num: &[-6, -1, 2],
        u_delta_den: 1,
    },
    RmFieldEntry {
        label: "zeta17-quartic",
        degree: 4,
        block_count: 5,
        min_poly: &[1, -1, -6, 1, 1],
        delta_num: &[-46, -76, 19, 14],
        delta_den: 1,
        u_delta_num: &[-5, -26, -2, 3],
        u_delta_den: 2,
    },
    RmFieldEntry {
        label: "sqrt2-sqrt5",
        degree: 4,
        block_count: 5,
        min_poly: &[4, 0, -6, 0, 1],
        delta_num: &[-16, 14, 2, -3],
        delta_den: 1,
        u_delta_num: &[-16, 8, 2, -1],
        u_delta_den: 1,
    },
    RmFieldEntry {
        label: "zeta13-plus",
        degree: 6,
        block_count: 3,
        min_poly: &[-1, 3, 6, -4, -5, 1, 1],
        delta_num: &[-21, 72, -7, -55, 4, 10],
        delta_den: 1,
        u_delta_num: &[-1, -4, -22, 11, 7, -2],
        u_delta_den: 1,
    },
    RmFieldEntry {
        label: "zeta43-plus",
        degree: 7,
        block_count: 3,
        min_poly: &[-49, 7, 104, 38, -35, -18, 1, 1],
        delta_num: &[1553433, -1241898, -2481943, 425142, 830561, 25217, -48274],
        delta_den: 7,
        u_delta_num: &[-7749, 15145, -1455, -6270, 1418, 582, -138],
        u_delta_den: 7,
    },
    RmFieldEntry {
        label: "septic-nongalois",
        degree: 7,
        block_count: 3,
        min_poly: &[1, -2, -10, 7, 9, -5, -2, 1],
        delta_num: &[-6, -3, 15, 7, -13, -3, 2],
        delta_den: 1,
        u_delta_num: &[-6, -20, -11, 33, -2, -13, 4],
        u_delta_den: 1,
    },
];

pub fn builtin_rm_fields() -> &'static [RmFieldEntry] {
    &BUILTIN_RM_FIELDS
}

pub fn builtin_rm_field(label: &str) -> Option<&'static RmFieldEntry> {
    BUILTIN_RM_FIELDS.iter().find(|e| e.label == label)
}

fn elem_from_coeffs(field: &NumberField, num: &[i64], den: i64) -> NfElem {
    let p = Poly::new(num.iter().map(|&c| brat(c, den)).collect());
    field.from_poly(&p)
}

impl RmFieldEntry {
    pub fn field(&self) -> Result<NumberField, RmError> {
        let f = Poly::new(self.min_poly.iter().map(|&c| brat_i64(c)).collect());
        Ok(NumberField::new(f)?)
    }

    /// Builds the trace-form spec, certifying on the power basis first and
    /// falling back to the maximal order when integrality fails there.
    pub fn spec(&self) -> Result<TraceFormSpec, RmError> {
        let field = self.field()?;
        let delta = elem_from_coeffs(&field, self.delta_num, self.delta_den);
        let u_delta = elem_from_coeffs(&field, self.u_delta_num, self.u_delta_den);
        let spec = TraceFormSpec::new(field, delta, u_delta);
        let cert = certify_table_entry(&spec, self.degree, self.block_count);
        if cert.overall {
            return Ok(spec);
        }
        let enlarged = maximal_order_basis(&spec.field);
        Ok(spec.with_basis(enlarged))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qform::{diag_form, rationally_isometric};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn quad_endo_u_pair() {
        let (g, m) = quad_endo(5, &QuadShape::UPair(1)).unwrap();
        assert_eq!(g.dimension(), 4);
        assert!(m.witness_holds());
        assert!(adjoint_check(&m, &g));
        let sq = m.matrix.mul(&m.matrix);
        assert_eq!(sq, Mat::identity(4, &BigRat::one()).scale(&brat_i64(5)));
        let sigs = eigenspace_signatures(&m, &g).unwrap();
        assert_eq!(sigs[0].signature, (2, 0));
        assert_eq!(sigs[1].signature, (0, 2));
    }

    #[test]
    fn quad_endo_e8_pair() {
        let (g, m) = quad_endo(2, &QuadShape::E8Pair).unwrap();
        assert_eq!(g.dimension(), 16);
        assert!(m.witness_holds());
        assert!(adjoint_check(&m, &g));
        let sigs = eigenspace_signatures(&m, &g).unwrap();
        assert_eq!(sigs[0].signature, (0, 8));
        assert_eq!(sigs[1].signature, (0, 8));
    }

    #[test]
    fn quad_endo_full_t() {
        for (d, r) in [(5u64, 1i64), (7, 2), (3, 1)] {
            let (g, m) = quad_endo(d, &QuadShape::FullT(r)).unwrap();
            assert_eq!(g.dimension(), 20);
            assert!(m.witness_holds());
            assert!(adjoint_check(&m, &g));
            let sigs = eigenspace_signatures(&m, &g).unwrap();
            assert_eq!(sigs[0].signature, (2, 8), "d={d}, r={r}");
            assert_eq!(sigs[1].signature, (0, 10), "d={d}, r={r}");
        }
    }

    #[test]
    fn quad_endo_degenerate_and_invalid() {
        let (g, m) = quad_endo(1, &QuadShape::UPair(1)).unwrap();
        assert_eq!(m.matrix.mul(&m.matrix), Mat::identity(4, &BigRat::one()));
        assert!(adjoint_check(&m, &g));
        assert!(matches!(quad_endo(12, &QuadShape::UPair(1)), Err(RmError::BadInput(_))));
        assert!(matches!(quad_endo(5, &QuadShape::UPair(0)), Err(RmError::BadInput(_))));
        assert!(matches!(quad_endo(0, &QuadShape::E8Pair), Err(RmError::BadInput(_))));
    }

    #[test]
    fn eigenspace_requires_true_witness() {
        let (g, mut m) = quad_endo(5, &QuadShape::UPair(1)).unwrap();
        m.min_poly_witness = Some(brat_i64(7));
        assert!(matches!(eigenspace_signatures(&m, &g), Err(RmError::RelationFailed(_))));
    }

    #[test]
    fn adjoint_check_examples() {
        let g = diag_form(&[1, -1, 2]);
        let id = EndoMatrix {
            matrix: Mat::identity(3, &BigRat::one()),
            min_poly_witness: Some(BigRat::one()),
        };
        assert!(adjoint_check(&id, &g));
        // A fixed non-symmetric matrix fails against a diagonal form.
        let skew = EndoMatrix {
            matrix: Mat::from_rows(vec![
                vec![brat_i64(1), brat_i64(2), brat_i64(0)],
                vec![brat_i64(0), brat_i64(1), brat_i64(0)],
                vec![brat_i64(0), brat_i64(0), brat_i64(1)],
            ]),
            min_poly_witness: None,
        };
        assert!(!adjoint_check(&skew, &g));
    }

    #[test]
    fn involutions_anticommute_and_preserve_e8() {
        let gs = anticommuting_involutions_e8();
        let g = qform::e8();
        let id = Mat::identity(8, &BigRat::one());
        for (i, gi) in gs.iter().enumerate() {
            assert_eq!(gi.mul(gi), id, "g{} is an involution", i + 1);
            assert_eq!(&gi.transpose().mul(g.entries()).mul(gi), g.entries(), "g{} isometry", i + 1);
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let ab = gs[i].mul(&gs[j]);
                let ba = gs[j].mul(&gs[i]);
                assert_eq!(ab, ba.neg(), "g{}g{} = -g{}g{}", i + 1, j + 1, j + 1, i + 1);
            }
        }
    }

    #[test]
    fn involution_combinations_square_to_norm() {
        let gs = anticommuting_involutions_e8();
        let combo = |a: [i64; 4]| -> Mat<BigRat> {
            let mut acc = Mat::zeros(8, 8, &BigRat::zero());
            for (ai, gi) in a.iter().zip(gs.iter()) {
                acc = acc.add(&gi.scale(&brat_i64(*ai)));
            }
            acc
        };
        let m = combo([2, 1, 1, 1]);
        assert_eq!(m.mul(&m), Mat::identity(8, &BigRat::one()).scale(&brat_i64(7)));
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..20 {
            let a: [i64; 4] = core::array::from_fn(|_| rng.gen_range(-6i64..=6));
            let norm: i64 = a.iter().map(|x| x * x).sum();
            let m = combo(a);
            assert_eq!(m.mul(&m), Mat::identity(8, &BigRat::one()).scale(&brat_i64(norm)));
        }
    }

    #[test]
    fn four_squares_examples() {
        assert_eq!(four_squares(1), (1, 0, 0, 0));
        assert_eq!(four_squares(2), (1, 1, 0, 0));
        assert_eq!(four_squares(7), (2, 1, 1, 1));
        for n in 1..=200u64 {
            let (a, b, c, d) = four_squares(n);
            assert_eq!(a * a + b * b + c * c + d * d, n);
            assert!(a >= b && b >= c && c >= d);
        }
    }

    fn cubic_spec() -> TraceFormSpec {
        builtin_rm_field("zeta7-plus").unwrap().spec().unwrap()
    }

    #[test]
    fn cubic_trace_form_signatures() {
        let spec = cubic_spec();
        let gd = trace_form_gram(&spec, TraceGenerator::Delta).unwrap();
        let gu = trace_form_gram(&spec, TraceGenerator::UDelta).unwrap();
        assert_eq!(qform::signature(&gd).unwrap(), (0, 3));
        assert_eq!(qform::signature(&gu).unwrap(), (1, 2));
        assert!(gd.is_integral_unimodular());
        assert!(gu.is_integral_unimodular());
    }

    #[test]
    fn rational_field_trace_form() {
        let field = NumberField::new(Poly::new(vec![BigRat::zero(), BigRat::one()])).unwrap();
        let one = field.one();
        let spec = TraceFormSpec::new(field, one.clone(), one);
        let g = trace_form_gram(&spec, TraceGenerator::Delta).unwrap();
        assert_eq!(g.entries().to_rows(), vec![vec![BigRat::one()]]);
    }

    #[test]
    fn all_builtin_entries_certify() {
        for entry in builtin_rm_fields() {
            let spec = entry.spec().unwrap();
            let cert = certify_table_entry(&spec, entry.degree, entry.block_count);
            assert!(
                cert.overall,
                "{} failed: {:?}",
                entry.label,
                cert.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn trivial_generator_fails_unimodularity() {
        let spec = cubic_spec();
        let bad = TraceFormSpec::new(spec.field.clone(), spec.field.one(), spec.u_delta.clone());
        let cert = certify_table_entry(&bad, 3, 7);
        assert!(!cert.overall);
        let det_check = cert.checks.iter().find(|c| c.name == "delta_gram_unimodular").unwrap();
        assert!(!det_check.pass);
        assert!(det_check.detail.contains("49"), "plain trace form det is the discriminant");
    }

    #[test]
    fn mutating_delta_breaks_certification() {
        for entry in builtin_rm_fields() {
            let spec = entry.spec().unwrap();
            for i in 0..entry.degree {
                let bump = {
                    let mut c = vec![BigRat::zero(); entry.degree];
                    c[i] = BigRat::one();
                    spec.field.from_poly(&Poly::new(c))
                };
                let mutated = TraceFormSpec {
                    field: spec.field.clone(),
                    delta: spec.field.add(&spec.delta, &bump),
                    u_delta: spec.u_delta.clone(),
                    basis: spec.basis.clone(),
                };
                let cert = certify_table_entry(&mutated, entry.degree, entry.block_count);
                assert!(!cert.overall, "{} survived +alpha^{}", entry.label, i);
            }
        }
    }

    #[test]
    fn maximal_order_basis_examples() {
        let sqrt2 = NumberField::new(Poly::new(vec![brat_i64(-2), brat_i64(0), brat_i64(1)])).unwrap();
        assert!(maximal_order_basis(&sqrt2).basis.is_identity());
        let sqrt5 = NumberField::new(Poly::new(vec![brat_i64(-5), brat_i64(0), brat_i64(1)])).unwrap();
        let b5 = maximal_order_basis(&sqrt5);
        let golden = NfElem(vec![brat(1, 2), brat(1, 2)]);
        assert!(b5.contains(&sqrt5, &golden));
        let cubic = cubic_spec();
        assert!(maximal_order_basis(&cubic.field).basis.is_identity());
    }

    #[test]
    fn assembly_cubic_l7() {
        let spec = cubic_spec();
        let asm = assemble_rm_lattice(&spec, 7).unwrap();
        assert_eq!(asm.gram.dimension(), 21);
        assert!(adjoint_check(&asm.action, &asm.gram));
        let sigs = asm.eigenspace_signatures();
        let mut counts = std::collections::BTreeMap::new();
        for s in &sigs {
            *counts.entry(s.signature).or_insert(0usize) += 1;
        }
        assert_eq!(counts.get(&(2, 5)), Some(&1));
        assert_eq!(counts.get(&(0, 7)), Some(&2));
        let mut entries = vec![1i64, 1];
        entries.extend(std::iter::repeat(-1).take(19));
        assert!(rationally_isometric(&asm.gram, &diag_form(&entries)).unwrap());
    }

    #[test]
    fn assembly_matches_diagonal_model_for_all_entries() {
        for entry in builtin_rm_fields() {
            let spec = entry.spec().unwrap();
            let m = entry.degree;
            let l = entry.block_count;
            let asm = assemble_rm_lattice(&spec, l).unwrap();
            assert_eq!(asm.gram.dimension(), m * l);

            // Exactly one branch (2, l-2), the rest (0, l).
            let sigs = asm.eigenspace_signatures();
            let good = sigs.iter().filter(|s| s.signature == (2, l - 2)).count();
            let rest = sigs.iter().filter(|s| s.signature == (0, l)).count();
            assert_eq!((good, rest), (1, m - 1), "{}", entry.label);

            // (⟨1⟩ ⊕ ⟨-1⟩^{m-1})² ⊕ (⟨-1⟩^m)^{l-2}
            let mut entries: Vec<i64> = Vec::new();
            for _ in 0..2 {
                entries.push(1);
                entries.extend(std::iter::repeat(-1).take(m - 1));
            }
            entries.extend(std::iter::repeat(-1).take(m * (l - 2)));
            assert!(
                rationally_isometric(&asm.gram, &diag_form(&entries)).unwrap(),
                "{}",
                entry.label
            );
        }
    }

    #[test]
    fn assembly_rejects_small_l() {
        let spec = cubic_spec();
        assert!(matches!(assemble_rm_lattice(&spec, 2), Err(RmError::RankTooSmall(2))));
    }

    #[test]
    fn moduli_dimension_examples() {
        assert_eq!(moduli_dimension(20, 2, MultKind::RM).unwrap(), 8);
        assert_eq!(moduli_dimension(12, 3, MultKind::RM).unwrap(), 2);
        assert_eq!(moduli_dimension(20, 20, MultKind::CM).unwrap(), 0);
        assert!(moduli_dimension(20, 3, MultKind::RM).is_err());
    }
}
