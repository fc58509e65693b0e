//! The reduced quantum Poincare group: the `p^3`-dimensional Hopf *-algebra
//! spanned by `eta+^n eta-^m delta^k`, with
//!
//! ```text
//! eta- eta+ = q^2 eta+ eta-      eta(+-) delta = q^2 delta eta(+-)
//! delta^p = 1                    eta(+-)^p = 0
//! D(eta+-) = eta+- (x) 1 + delta^{+-1} (x) eta+-      D(delta) = delta (x) delta
//! S(eta+-) = -delta^{-+1} eta+-                        eta+-* = eta+-, delta* = delta
//! ```

use crate::error::{AlgebraError, Result};
use crate::linear::{LinComb, Monomial, Tensor};
use crate::scalars::{q_binom, CycField, CycScalar, ParamScalar, Sign};

/// `eta+^n eta-^m delta^k` with all exponents in `[0, p-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AMonomial {
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl AMonomial {
    pub const ONE: AMonomial = AMonomial { n: 0, m: 0, k: 0 };

    pub fn new(n: u32, m: u32, k: u32) -> Self {
        AMonomial { n, m, k }
    }

    /// Every monomial for order `p`, in canonical order.
    pub fn all(p: u32) -> impl Iterator<Item = AMonomial> {
        (0..p).flat_map(move |n| (0..p).flat_map(move |m| (0..p).map(move |k| AMonomial { n, m, k })))
    }
}

impl Monomial for AMonomial {
    fn mul(&self, other: &Self, field: &'static CycField) -> Option<(i64, Self)> {
        let p = field.p();
        let n = self.n + other.n;
        let m = self.m + other.m;
        if n >= p || m >= p {
            return None;
        }
        // eta-^b eta+^d = q^{2bd} eta+^d eta-^b ; delta^c eta^(d+e) = q^{-2c(d+e)} eta^(d+e) delta^c
        let (b, c, d, e) = (self.m as i64, self.k as i64, other.n as i64, other.m as i64);
        let q_exp = 2 * b * d - 2 * c * (d + e);
        Some((
            4 * q_exp,
            AMonomial {
                n,
                m,
                k: (self.k + other.k) % p,
            },
        ))
    }

    fn unit(_: &'static CycField) -> Self {
        AMonomial::ONE
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("eta+", self.n), ("eta-", self.m), ("delta", self.k)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join(" ")
    }
}

pub type AElement = LinComb<AMonomial>;
pub type ATensor = Tensor<AMonomial, AMonomial>;

pub fn a_monomial(field: &'static CycField, n: u32, m: u32, k: u32) -> AElement {
    let p = field.p();
    if n >= p || m >= p {
        return AElement::zero(field);
    }
    AElement::monomial(field, AMonomial::new(n, m, k % p))
}

/// The generator `eta+` or `eta-`.
pub fn eta(field: &'static CycField, sign: Sign) -> AElement {
    match sign {
        Sign::Plus => a_monomial(field, 1, 0, 0),
        Sign::Minus => a_monomial(field, 0, 1, 0),
    }
}

/// `delta^k` for any integer `k`.
pub fn delta_pow(field: &'static CycField, k: i64) -> AElement {
    let p = field.p() as i64;
    a_monomial(field, 0, 0, k.rem_euclid(p) as u32)
}

pub fn a_mul(x: &AElement, y: &AElement) -> AElement {
    x * y
}

/// `D(eta+^n eta-^m delta^k)` in normal order.
pub fn monomial_coproduct(field: &'static CycField, mono: &AMonomial) -> ATensor {
    let plus = eta_power_coproduct(field, mono.n, Sign::Plus);
    let minus = eta_power_coproduct(field, mono.m, Sign::Minus);
    let dk = AMonomial::new(0, 0, mono.k);
    let delta_part = ATensor::monomial(field, (dk, dk));
    &(&plus * &minus) * &delta_part
}

/// `D(eta+-^n) = sum_j [n j]_+- eta^{n-j} delta^{+-j} (x) eta^j`.
pub fn eta_power_coproduct(field: &'static CycField, n: u32, sign: Sign) -> ATensor {
    let p = field.p();
    let mut out = ATensor::zero(field);
    for j in 0..=n {
        let c = q_binom(field, n as i64, j as i64, sign).expect("exponent below p");
        let dk = (sign.value() * j as i64).rem_euclid(p as i64) as u32;
        let (left, right) = match sign {
            Sign::Plus => (AMonomial::new(n - j, 0, dk), AMonomial::new(j, 0, 0)),
            Sign::Minus => (AMonomial::new(0, n - j, dk), AMonomial::new(0, j, 0)),
        };
        out.add_term((left, right), ParamScalar::constant(c));
    }
    out
}

pub fn a_coproduct(x: &AElement) -> ATensor {
    let field = x.field();
    let mut out = ATensor::zero(field);
    for (m, c) in x.terms() {
        for (t, d) in monomial_coproduct(field, m).into_terms() {
            out.add_term(t, &d * c);
        }
    }
    out
}

pub fn monomial_counit(mono: &AMonomial) -> bool {
    mono.n == 0 && mono.m == 0
}

pub fn a_counit(x: &AElement) -> ParamScalar {
    x.functional(|m| {
        if monomial_counit(m) {
            ParamScalar::one(x.field())
        } else {
            ParamScalar::zero(x.field())
        }
    })
}

/// `S(eta+^n eta-^m delta^k) = delta^{-k} S(eta-)^m S(eta+)^n`.
pub fn monomial_antipode(field: &'static CycField, mono: &AMonomial) -> AElement {
    let minus_one = ParamScalar::int(field, -1);
    let s_plus = (&delta_pow(field, -1) * &eta(field, Sign::Plus)).scale(&minus_one);
    let s_minus = (&delta_pow(field, 1) * &eta(field, Sign::Minus)).scale(&minus_one);
    let mut out = delta_pow(field, -(mono.k as i64));
    out = &out * &s_minus.pow(mono.m);
    &out * &s_plus.pow(mono.n)
}

pub fn a_antipode(x: &AElement) -> AElement {
    let field = x.field();
    x.linear_map(|m| monomial_antipode(field, m))
}

/// `(c eta+^n eta-^m delta^k)* = conj(c) delta^k eta-^m eta+^n`.
pub fn a_star(x: &AElement) -> AElement {
    let field = x.field();
    let mut out = AElement::zero(field);
    for (m, c) in x.terms() {
        let reordered = &(&delta_pow(field, m.k as i64) * &a_monomial(field, 0, m.m, 0))
            * &a_monomial(field, m.n, 0, 0);
        for (mono, d) in reordered.into_terms() {
            out.add_term(mono, &d * &c.conj());
        }
    }
    out
}

/// The idempotent `zeta(m) = (1/p) sum_n q^{-nm} delta^n`.
pub fn zeta_idempotent(field: &'static CycField, m: i64) -> AElement {
    let p = field.p() as i64;
    let inv_p = CycScalar::from_ratio(field, 1, p);
    let mut out = AElement::zero(field);
    for n in 0..p {
        out.add_term(
            AMonomial::new(0, 0, n as u32),
            ParamScalar::constant(&inv_p * &field.q_pow(-n * m)),
        );
    }
    out
}

/// A coset basis vector `e(+-)_{nm}` kept as its numerator and the square of
/// its normalizer `q^{2n+1} + q^{-2n-1}`, which is real.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetBasisVector {
    pub n: u32,
    pub m: u32,
    pub sign: Sign,
    pub numerator: AElement,
    pub norm_sq: CycScalar,
}

impl CosetBasisVector {
    /// Numeric value of the normalizer, principal square root of `norm_sq`.
    pub fn normalizer(&self) -> num_complex::Complex64 {
        self.norm_sq.to_complex().sqrt()
    }
}

/// Indices `(n, m)` on which the `e(+-)` vectors are independent. With
/// `p = 2 n0 + 1` this is `n < n0, m <= 2 n0` together with `n = n0, m <= n0`;
/// for the `-` sign the vanishing `(n0, n0)` vector is left out.
pub fn coset_basis_indices(p: u32, sign: Sign) -> Vec<(u32, u32)> {
    let n0 = (p - 1) / 2;
    let mut out = Vec::new();
    for n in 0..n0 {
        for m in 0..=2 * n0 {
            out.push((n, m));
        }
    }
    for m in 0..=n0 {
        if sign == Sign::Minus && m == n0 {
            continue;
        }
        out.push((n0, m));
    }
    out
}

/// `e(+-)_{nm} = (eta+^{p-1-n} eta-^{p-1-m} +- eta+^n eta-^m) / sqrt(q^{2n+1} + q^{-2n-1})`.
pub fn basis_e_pm(field: &'static CycField, n: u32, m: u32, sign: Sign) -> Result<CosetBasisVector> {
    let p = field.p();
    let n0 = (p - 1) / 2;
    let in_range = (n < n0 && m <= 2 * n0) || (n == n0 && m <= n0);
    if !in_range {
        return Err(AlgebraError::OutOfRange(format!(
            "({n}, {m}) is outside the independent range of the coset basis"
        )));
    }
    let mut numerator = a_monomial(field, p - 1 - n, p - 1 - m, 0);
    let second = a_monomial(field, n, m, 0).scale(&ParamScalar::int(field, sign.value()));
    numerator = &numerator + &second;
    let e = 2 * n as i64 + 1;
    let norm_sq = &field.q_pow(e) + &field.q_pow(-e);
    Ok(CosetBasisVector {
        n,
        m,
        sign,
        numerator,
        norm_sq,
    })
}
