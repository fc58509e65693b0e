//! q-numbers, q-factorials and the signed q-binomials of the coproduct.

use super::cyclotomic::{CycField, CycScalar};
use crate::error::{AlgebraError, Result};

/// Selects one of the two conjugate conventions (`+` / `-` generators).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The q-number `[n] = (q^n - q^-n)/(q - q^-1)`, periodic in `n` with period `p`.
pub fn q_int(field: &'static CycField, n: i64) -> CycScalar {
    let p = field.p() as i64;
    field.q_int_table()[n.rem_euclid(p) as usize].clone()
}

/// `[n]! = [1][2]...[n]` for `0 <= n <= p-1`.
pub fn q_fact(field: &'static CycField, n: i64) -> Result<CycScalar> {
    check_fact_range(field, n)?;
    Ok(field.q_fact_table()[n as usize].clone())
}

/// `1/[n]!` for `0 <= n <= p-1`.
pub fn inv_q_fact(field: &'static CycField, n: i64) -> Result<CycScalar> {
    check_fact_range(field, n)?;
    Ok(field.inv_q_fact_table()[n as usize].clone())
}

fn check_fact_range(field: &CycField, n: i64) -> Result<()> {
    if n < 0 || n >= field.p() as i64 {
        return Err(AlgebraError::OutOfRange(format!(
            "q-factorial index {n} outside [0, {}]",
            field.p() - 1
        )));
    }
    Ok(())
}

/// `q^{+-m(m-n)} [n]! / ([n-m]! [m]!)` for `0 <= m <= n <= p-1`.
pub fn q_binom(field: &'static CycField, n: i64, m: i64, sign: Sign) -> Result<CycScalar> {
    if m < 0 || m > n || n >= field.p() as i64 {
        return Err(AlgebraError::OutOfRange(format!(
            "q-binomial ({n}, {m}) needs 0 <= m <= n <= {}",
            field.p() - 1
        )));
    }
    let ratio = &(&q_fact(field, n)? * &inv_q_fact(field, n - m)?) * &inv_q_fact(field, m)?;
    Ok(&ratio * &field.q_pow(sign.value() * m * (m - n)))
}
