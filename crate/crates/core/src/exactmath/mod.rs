//! Exact arithmetic foundation: integers and rationals, prime fields,
//! quadratic extensions, polynomials and rational functions over any of
//! them, matrices, rational polynomial factorization, and number fields
//! with real-embedding and order machinery.

pub mod arith;
pub mod field;
pub mod gf;
pub mod matrix;
pub mod numfield;
pub mod poly;
pub mod qfactor;
pub mod ratfunc;
