//! Coefficient arithmetic: the cyclotomic field containing `q`, `q^{1/2}` and
//! `i`, polynomials in the real parameters, and q-combinatorics.

mod cyclotomic;
mod param;
mod qnum;

pub use cyclotomic::{CycField, CycScalar};
pub use param::{Param, ParamExp, ParamScalar, PARAM_COUNT};
pub use qnum::{inv_q_fact, q_binom, q_fact, q_int, Sign};

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::Result;

/// Numeric value of a scalar under `w -> exp(2 pi i / 4p)` and a real
/// parameter assignment.
pub fn embed_numeric(x: &ParamScalar, assignment: &HashMap<Param, f64>) -> Result<Complex64> {
    x.embed(assignment)
}
