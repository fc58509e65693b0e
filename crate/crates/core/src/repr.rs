//! Representations of the dual algebra on `span(delta^0 .. delta^{p-1})`, the
//! corepresentation matrices obtained from the universal T-matrix, cut-off
//! q-special functions, and the closed forms of the matrix elements.
//!
//! The corepresentation matrix is
//!
//! ```text
//! D = exp(-i lambda+^p z+ - i lambda-^p z-) e+^{i L(eps+) (x) eta+} e-^{i L(eps-) (x) eta-} diag(delta^0 .. delta^{p-1})
//! ```
//!
//! with entries multiplied as elements of the extended group algebra.

use std::ops::{Add, Mul};

use crate::duality::right_rep;
use crate::error::{AlgebraError, Result};
use crate::hopf_a::{a_monomial, AElement};
use crate::hopf_ext::{e_coproduct, e_counit, e_star, exp_z, lift_a, EElement, ETensor};
use crate::hopf_u::{big_p_gen, epsilon_ops, kappa_pow, p_gen, plane_wave_ops, UElement, UMonomial};
use crate::invariants::{herm_e, DistValue};
use crate::linear::{LinComb, Monomial};
use crate::report::{CheckResult, Tally};
use crate::scalars::{inv_q_fact, CycField, CycScalar, Param, ParamScalar, Sign};

/// A ring in which the cut-off series can be evaluated.
pub trait Algebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &ParamScalar) -> Self;
    fn field(&self) -> &'static CycField;

    fn power(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

impl Algebra for ParamScalar {
    fn zero_like(&self) -> Self {
        ParamScalar::zero(self.field())
    }
    fn one_like(&self) -> Self {
        ParamScalar::one(self.field())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &ParamScalar) -> Self {
        self * c
    }
    fn field(&self) -> &'static CycField {
        ParamScalar::field(self)
    }
}

impl<M: Monomial> Algebra for LinComb<M> {
    fn zero_like(&self) -> Self {
        LinComb::zero(self.field())
    }
    fn one_like(&self) -> Self {
        LinComb::one(self.field())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &ParamScalar) -> Self {
        self.scale(c)
    }
    fn field(&self) -> &'static CycField {
        LinComb::field(self)
    }
}

/// A dense square matrix over an [`Algebra`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Algebra> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn map<U: Algebra>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl<T: Algebra> Algebra for Matrix<T> {
    fn zero_like(&self) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.zero_like()).collect(),
        }
    }

    fn one_like(&self) -> Self {
        let zero = self.entries[0].zero_like();
        let one = self.entries[0].one_like();
        Matrix::from_fn(self.n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    fn plus(&self, other: &Self) -> Self {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    fn times(&self, other: &Self) -> Self {
        let n = self.n;
        Matrix::from_fn(n, |i, j| {
            let mut acc = self.get(0, 0).zero_like();
            for k in 0..n {
                acc = acc.plus(&self.get(i, k).times(other.get(k, j)));
            }
            acc
        })
    }

    fn scaled(&self, c: &ParamScalar) -> Self {
        self.map(|e| e.scaled(c))
    }

    fn field(&self) -> &'static CycField {
        self.entries[0].field()
    }
}

impl<T: Algebra> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.plus(rhs)
    }
}

impl<T: Algebra> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.times(rhs)
    }
}

pub type RepMatrix = Matrix<ParamScalar>;

impl RepMatrix {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> RepMatrix {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).conj())
    }
}

/// `e+-^x = sum_{m=0}^{p-1} q^{+-m(m-1)/2} / [m]! x^m`.
pub fn cutoff_qexp<T: Algebra>(x: &T, sign: Sign) -> T {
    let field = x.field();
    let p = field.p() as i64;
    let mut acc = x.zero_like();
    let mut power = x.one_like();
    for m in 0..p {
        let c = &field.q_pow(sign.value() * m * (m - 1) / 2) * &inv_q_fact(field, m).unwrap();
        acc = acc.plus(&power.scaled(&ParamScalar::constant(c)));
        power = power.times(x);
    }
    acc
}

/// Cut-off Hahn-Exton q-Bessel function
/// `J_m(x) = sum_{k=0}^{p-1-m} (-1)^k / ([k]! [k+m]!) (q^m x)^k`; `J_p = 0`.
pub fn qbessel_cut<T: Algebra>(m: u32, x: &T) -> Result<T> {
    let field = x.field();
    let p = field.p();
    if m > p {
        return Err(AlgebraError::OutOfRange(format!(
            "Bessel index {m} outside [0, {p}]"
        )));
    }
    let qx = x.scaled(&ParamScalar::constant(field.q_pow(m as i64)));
    let mut acc = x.zero_like();
    let mut power = x.one_like();
    for k in 0..(p - m) as i64 {
        let c = &inv_q_fact(field, k).unwrap() * &inv_q_fact(field, k + m as i64).unwrap();
        let c = if k % 2 == 0 { c } else { -&c };
        acc = acc.plus(&power.scaled(&ParamScalar::constant(c)));
        power = power.times(&qx);
    }
    Ok(acc)
}

/// Images of the generators under a representation.
#[derive(Clone, Debug)]
pub struct Representation {
    pub p_plus: RepMatrix,
    pub p_minus: RepMatrix,
    pub kappa: RepMatrix,
    pub big_p_plus: RepMatrix,
    pub big_p_minus: RepMatrix,
}

impl Representation {
    /// Image of an arbitrary element, generator by generator.
    pub fn image(&self, x: &UElement) -> RepMatrix {
        let mut acc = self.kappa.zero_like();
        for (m, c) in x.terms() {
            acc = acc.plus(&self.monomial_image(m).scaled(c));
        }
        acc
    }

    fn monomial_image(&self, m: &UMonomial) -> RepMatrix {
        let mut out = self.big_p_plus.power(m.t);
        out = out.times(&self.big_p_minus.power(m.s));
        out = out.times(&self.p_plus.power(m.n));
        out = out.times(&self.p_minus.power(m.m));
        out.times(&self.kappa.power(m.k))
    }

    pub fn size(&self) -> usize {
        self.kappa.size()
    }
}

/// `L(p+-) delta^m = lambda+- delta^{m+-1}`, `L(kappa) delta^m = q^m delta^m`,
/// `L(P+-) = lambda+-^p`.
pub fn rep_l(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Representation> {
    if lambda_plus.is_zero() && lambda_minus.is_zero() {
        return Err(AlgebraError::ZeroLambda);
    }
    let field = lambda_plus.field();
    let p = field.p() as usize;
    let zero = ParamScalar::zero(field);
    let shift = |lambda: &ParamScalar, step: usize| {
        Matrix::from_fn(p, |i, j| {
            if i == (j + step) % p {
                lambda.clone()
            } else {
                zero.clone()
            }
        })
    };
    let scalar = |c: ParamScalar| {
        Matrix::from_fn(p, |i, j| if i == j { c.clone() } else { zero.clone() })
    };
    Ok(Representation {
        p_plus: shift(lambda_plus, 1),
        p_minus: shift(lambda_minus, p - 1),
        kappa: Matrix::from_fn(p, |i, j| {
            if i == j {
                ParamScalar::constant(field.q_pow(i as i64))
            } else {
                zero.clone()
            }
        }),
        big_p_plus: scalar(lambda_plus.pow(p as u32)),
        big_p_minus: scalar(lambda_minus.pow(p as u32)),
    })
}

/// The one-dimensional representation on `delta^m`: `p+- -> 0`, `kappa -> q^m`.
pub fn rep_l_weight(field: &'static CycField, m: u32) -> Representation {
    let zero = Matrix::from_fn(1, |_, _| ParamScalar::zero(field));
    Representation {
        p_plus: zero.clone(),
        p_minus: zero.clone(),
        kappa: Matrix::from_fn(1, |_, _| ParamScalar::constant(field.q_pow(m as i64))),
        big_p_plus: zero.clone(),
        big_p_minus: zero,
    }
}

/// Gram matrix of `(delta^i, delta^j)_S`.
pub fn s_gram(field: &'static CycField) -> RepMatrix {
    let p = field.p() as usize;
    Matrix::from_fn(p, |i, j| {
        if (i + j) % p == 0 {
            ParamScalar::one(field)
        } else {
            ParamScalar::zero(field)
        }
    })
}

/// Whether `(L a, b)_S = (a, L b)_S` for all `a, b`, i.e. `L^dagger G = G L`.
pub fn is_s_self_adjoint(m: &RepMatrix) -> bool {
    let g = s_gram(m.field());
    m.adjoint().times(&g) == g.times(m)
}

/// Corepresentation matrix; entry `(m, n)` is `D_{mn}`.
pub type DMatrix = Matrix<EElement>;

fn tensor_with(m: &RepMatrix, x: &EElement) -> Matrix<EElement> {
    m.map(|c| x.scale(c))
}

/// `D(kappa, delta) = 1/p sum_{m,k} q^{-mk} L(kappa)^m (x) delta^k` as a matrix of
/// reduced elements.
pub fn projector_sum(rep: &Representation) -> Matrix<AElement> {
    let field = rep.kappa.field();
    let p = field.p() as i64;
    let inv_p = ParamScalar::constant(field.int(p).inv().unwrap());
    let zero = AElement::zero(field);
    let mut acc = Matrix::from_fn(rep.size(), |_, _| zero.clone());
    let mut kappa_m = rep.kappa.one_like();
    for m in 0..p {
        for k in 0..p {
            let delta = a_monomial(field, 0, 0, k as u32)
                .scale(&(&ParamScalar::constant(field.q_pow(-m * k)) * &inv_p));
            acc = acc.plus(&kappa_m.map(|c| delta.scale(c)));
        }
        kappa_m = kappa_m.times(&rep.kappa);
    }
    acc
}

/// Evaluates the universal T-matrix in a representation. Column `n` is the
/// image of `delta^n`, so entry `(m, n)` is `D_{mn} = {delta^{p-m} (x) 1, T delta^n}_S`.
///
/// The factors are, in order: the classical exponential of the central
/// elements, `e+^{i L(eps+) (x) eta+}`, `e-^{i L(eps-) (x) eta-}` and the
/// projector sum.
pub fn t_matrix(rep: &Representation) -> DMatrix {
    let field = rep.kappa.field();
    let i = ParamScalar::constant(field.i());
    let minus_i = ParamScalar::constant(-&field.i());
    // L(P+-) are scalar matrices
    let classical = exp_z(
        &(&minus_i * rep.big_p_plus.get(0, 0)),
        &(&minus_i * rep.big_p_minus.get(0, 0)),
    );
    let eps_p = rep.image(&epsilon_ops(field, Sign::Plus)).scaled(&i);
    let eps_m = rep.image(&epsilon_ops(field, Sign::Minus)).scaled(&i);
    let eta_p = lift_a(&a_monomial(field, 1, 0, 0));
    let eta_m = lift_a(&a_monomial(field, 0, 1, 0));
    let e_plus = cutoff_qexp(&tensor_with(&eps_p, &eta_p), Sign::Plus);
    let e_minus = cutoff_qexp(&tensor_with(&eps_m, &eta_m), Sign::Minus);
    let zero = EElement::zero(field);
    let prefix = Matrix::from_fn(rep.size(), |a, b| {
        if a == b {
            classical.clone()
        } else {
            zero.clone()
        }
    });
    let projector = projector_sum(rep).map(lift_a);
    prefix.times(&e_plus).times(&e_minus).times(&projector)
}

/// `D^lambda` for the representation `L^lambda`.
pub fn universal_t_rep(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<DMatrix> {
    Ok(t_matrix(&rep_l(lambda_plus, lambda_minus)?))
}

/// `T^(m) delta^m = delta^m (x) delta^m`: the single entry `delta^m`.
pub fn weight_t_rep(field: &'static CycField, m: u32) -> DMatrix {
    t_matrix(&rep_l_weight(field, m))
}

/// Variants of the closed form of `D_{mn}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// As printed: the `q^{+-1/2 - n}` factors raised together with `eta`.
    Printed,
    /// The printed form with the `q^{+-1/2 - n}` factors left outside the powers.
    QOutside,
    /// Form derived from the ordered product; agrees with [`universal_t_rep`].
    Derived,
}

fn xi(field: &'static CycField) -> AElement {
    a_monomial(field, 1, 1, 0).scale(&ParamScalar::constant(field.q_pow(1)))
}

/// `c^j eta^j`, or `c eta^j` when the scalar is kept outside the power.
fn eta_power(
    field: &'static CycField,
    sign: Sign,
    c: &ParamScalar,
    j: u32,
    outside: bool,
) -> AElement {
    let mono = match sign {
        Sign::Plus => a_monomial(field, j, 0, 0),
        Sign::Minus => a_monomial(field, 0, j, 0),
    };
    if outside {
        mono.scale(c)
    } else {
        mono.scale(&c.pow(j))
    }
}

/// Closed form of `D_{mn}` for `lambda^2 = lambda+ lambda-` and `xi = q eta+ eta-`.
pub fn dmatrix_closed(
    lambda_plus: &ParamScalar,
    lambda_minus: &ParamScalar,
    m: u32,
    n: u32,
    variant: ClosedForm,
) -> EElement {
    let field = lambda_plus.field();
    let p = field.p();
    let (mi, ni, pi) = (m as i64, n as i64, p as i64);
    let minus_i = ParamScalar::constant(-&field.i());
    let classical = exp_z(
        &(&minus_i * &lambda_plus.pow(p)),
        &(&minus_i * &lambda_minus.pow(p)),
    );
    let lam2 = lambda_plus * lambda_minus;
    let xi = xi(field);
    let delta_n = a_monomial(field, 0, 0, n);
    let series = |upper: i64, q_sign: i64, shift: i64| -> AElement {
        // sum_k (-lambda^2)^k q^{q_sign k (m+n)} / ([k]! [k+shift]!) xi^k
        let mut acc = AElement::zero(field);
        let mut xi_k = AElement::one(field);
        let mut lam_k = ParamScalar::one(field);
        for k in 0..=upper {
            // [p]! only shows up where the eta power reaches p, so the term is zero
            let Ok(inv_shifted) = inv_q_fact(field, k + shift) else {
                break;
            };
            let c = &(&field.q_pow(q_sign * k * (mi + ni)) * &inv_q_fact(field, k).unwrap())
                * &inv_shifted;
            acc = &acc + &xi_k.scale(&(&lam_k * &ParamScalar::constant(c)));
            xi_k = &xi_k * &xi;
            lam_k = &lam_k * &(-&lam2);
        }
        acc
    };
    let (minus_factor, plus_factor, outside) = match variant {
        ClosedForm::Printed | ClosedForm::QOutside => (
            &minus_i * &(lambda_minus * &ParamScalar::constant(field.q_half_pow(1 - 2 * ni))),
            &minus_i * &(lambda_plus * &ParamScalar::constant(field.q_half_pow(-1 - 2 * ni))),
            variant == ClosedForm::QOutside,
        ),
        ClosedForm::Derived => {
            return derived_entry(lambda_plus, lambda_minus, m, n);
        }
    };
    let body = if n >= m {
        let first = &(&series(pi - 1 - ni + mi, -1, ni - mi)
            * &eta_power(field, Sign::Minus, &minus_factor, n - m, outside))
            * &delta_n;
        let second = &(&eta_power(field, Sign::Plus, &plus_factor, p + m - n, outside) * &delta_n)
            * &series(ni - mi, 1, pi + mi - ni);
        &first + &second
    } else {
        let first = &(&series(mi - ni, -1, pi + ni - mi)
            * &eta_power(field, Sign::Minus, &minus_factor, p + n - m, outside))
            * &delta_n;
        let second = &(&eta_power(field, Sign::Plus, &plus_factor, m - n, outside) * &delta_n)
            * &series(pi - 1 - mi + ni, 1, mi - ni);
        &first + &second
    };
    &classical * &lift_a(&body)
}

/// Entry of the ordered product written out term by term:
/// `D_{mn} = E0 sum_a c+(m, a) c-(a, n) eta+^{(m-a) mod p} eta-^{(n-a) mod p} delta^n`.
fn derived_entry(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar, m: u32, n: u32) -> EElement {
    let field = lambda_plus.field();
    let p = field.p();
    let pi = p as i64;
    let minus_i = ParamScalar::constant(-&field.i());
    let i = ParamScalar::constant(field.i());
    let classical = exp_z(
        &(&minus_i * &lambda_plus.pow(p)),
        &(&minus_i * &lambda_minus.pow(p)),
    );
    let mut body = AElement::zero(field);
    for a in 0..pi {
        let jp = (m as i64 - a).rem_euclid(pi);
        let jm = (n as i64 - a).rem_euclid(pi);
        // i L(eps+) maps delta^j to -i q^{-1/2} q^{-j} lambda+ delta^{j+1}
        let mut cp = ParamScalar::constant(
            &field.q_pow(jp * (jp - 1) / 2) * &inv_q_fact(field, jp).unwrap(),
        );
        for step in 0..jp {
            let j = a + step;
            let f = &(&i * &ParamScalar::constant(-&field.q_half_pow(-1 - 2 * j))) * lambda_plus;
            cp = &cp * &f;
        }
        // i L(eps-) maps delta^j to -i q^{1/2} q^{-j} lambda- delta^{j-1}
        let mut cm = ParamScalar::constant(
            &field.q_pow(-jm * (jm - 1) / 2) * &inv_q_fact(field, jm).unwrap(),
        );
        for step in 0..jm {
            let j = n as i64 - step;
            let f = &(&i * &ParamScalar::constant(-&field.q_half_pow(1 - 2 * j))) * lambda_minus;
            cm = &cm * &f;
        }
        let mono = a_monomial(field, jp as u32, jm as u32, n);
        body = &body + &mono.scale(&(&cp * &cm));
    }
    &classical * &lift_a(&body)
}

/// `D_{m0}` from the Bessel form:
/// `E0 [J_{p-m}(lambda^2 xi) (-i q^{1/2} lambda- eta-)^{p-m} + (-i q^{-1/2} lambda+ eta+)^m J_m(lambda^2 xi)]`.
pub fn dmatrix_bessel(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar, m: u32) -> Result<EElement> {
    let field = lambda_plus.field();
    let p = field.p();
    let minus_i = ParamScalar::constant(-&field.i());
    let classical = exp_z(
        &(&minus_i * &lambda_plus.pow(p)),
        &(&minus_i * &lambda_minus.pow(p)),
    );
    let arg = xi(field).scale(&(lambda_plus * lambda_minus));
    let minus_factor = &minus_i * &(lambda_minus * &ParamScalar::constant(field.q_half_pow(1)));
    let plus_factor = &minus_i * &(lambda_plus * &ParamScalar::constant(field.q_half_pow(-1)));
    let first = &qbessel_cut(p - m, &arg)? * &eta_power(field, Sign::Minus, &minus_factor, p - m, false);
    let second = &eta_power(field, Sign::Plus, &plus_factor, m, false) * &qbessel_cut(m, &arg)?;
    Ok(&classical * &lift_a(&(&first + &second)))
}

/// `Y = e+^{-i chi+ eta+} e+^{-i q chi- eta-} exp(i chi+^p z+) exp(i chi-^p z-)`.
pub fn plane_wave(chi_plus: &ParamScalar, chi_minus: &ParamScalar) -> EElement {
    let field = chi_plus.field();
    let p = field.p();
    let i = ParamScalar::constant(field.i());
    let minus_i = ParamScalar::constant(-&field.i());
    let q = ParamScalar::constant(field.q_pow(1));
    let xp = a_monomial(field, 1, 0, 0).scale(&(&minus_i * chi_plus));
    let xm = a_monomial(field, 0, 1, 0).scale(&(&(&minus_i * &q) * chi_minus));
    let reduced = &cutoff_qexp(&xp, Sign::Plus) * &cutoff_qexp(&xm, Sign::Plus);
    let classical = exp_z(&(&i * &chi_plus.pow(p)), &(&i * &chi_minus.pow(p)));
    &lift_a(&reduced) * &classical
}

/// Defining relations of the dual algebra as matrix identities, and the star
/// property for the form `(., .)_S`.
pub fn representation_check(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Vec<CheckResult>> {
    let rep = rep_l(lambda_plus, lambda_minus)?;
    let field = lambda_plus.field();
    let p = field.p();
    let mut relations = Tally::new();
    relations.record(rep.p_plus.times(&rep.p_minus) == rep.p_minus.times(&rep.p_plus), || "p+ p- = p- p+".into());
    for (sign, gen) in [(Sign::Plus, &rep.p_plus), (Sign::Minus, &rep.p_minus)] {
        let q = ParamScalar::constant(field.q_pow(-sign.value()));
        let ok = gen.times(&rep.kappa) == rep.kappa.times(gen).scaled(&q);
        relations.record(ok, || format!("p{} kappa = q^(-+1) kappa p{}", sign.symbol(), sign.symbol()));
    }
    let mut kappa = Tally::new();
    kappa.record(rep.kappa.power(p) == rep.kappa.one_like(), || "kappa^p".into());
    let mut central = Tally::new();
    for (sign, gen, big, lambda) in [
        (Sign::Plus, &rep.p_plus, &rep.big_p_plus, lambda_plus),
        (Sign::Minus, &rep.p_minus, &rep.big_p_minus, lambda_minus),
    ] {
        let id = rep.kappa.one_like();
        central.record(gen.power(p) == *big, || format!("p{}^p = P{}", sign.symbol(), sign.symbol()));
        central.record(*big == id.scaled(&lambda.pow(p)), || format!("P{} = lambda^p", sign.symbol()));
    }
    let mut star = Tally::new();
    for (name, m) in [("p+", &rep.p_plus), ("p-", &rep.p_minus), ("kappa", &rep.kappa)] {
        star.record(is_s_self_adjoint(m), || name.to_string());
    }
    Ok(vec![
        relations.finish("repr.rep.relations", "commutation relations of p+-, kappa in L^lambda"),
        kappa.finish("repr.rep.kappa_order", "kappa^p = 1 in L^lambda"),
        central.finish("repr.rep.central", "L^lambda(P+-) = lambda+-^p"),
        star.finish("repr.rep.star", "L^lambda is a *-representation for (., .)_S"),
    ])
}

/// Closed forms against the evaluated T-matrix. Entries where the closed form
/// disagrees are listed; the product value is the one adopted.
pub fn closed_form_check(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Vec<CheckResult>> {
    let d = universal_t_rep(lambda_plus, lambda_minus)?;
    let p = d.size() as u32;
    let mut printed = Tally::new();
    let mut derived = Tally::new();
    let mut bessel = Tally::new();
    let mut outside = 0usize;
    for m in 0..p {
        for n in 0..p {
            let truth = d.get(m as usize, n as usize);
            let closed = dmatrix_closed(lambda_plus, lambda_minus, m, n, ClosedForm::Printed);
            printed.record(&closed == truth, || {
                format!("{}: closed form minus product = {}", entry_name(m as usize, n as usize), (&closed - truth).render())
            });
            let alt = dmatrix_closed(lambda_plus, lambda_minus, m, n, ClosedForm::Derived);
            derived.record(&alt == truth, || entry_name(m as usize, n as usize));
            if dmatrix_closed(lambda_plus, lambda_minus, m, n, ClosedForm::QOutside) != *truth {
                outside += 1;
            }
        }
        let j = dmatrix_bessel(lambda_plus, lambda_minus, m)?;
        bessel.record(&j == d.get(m as usize, 0), || entry_name(m as usize, 0));
    }
    Ok(vec![
        printed.finish("repr.closed.printed", "closed form of D_mn, both branches"),
        derived.finish("repr.closed.term_by_term", "term-by-term expansion of the ordered product"),
        bessel.finish("repr.closed.bessel", "D_m0 through the cut-off q-Bessel functions"),
        CheckResult::info(
            "repr.closed.q_outside",
            "placement of the q^(+-1/2 - n) factors in the closed form",
            format!("keeping the q-factors outside the powers disagrees on {outside} of {} entries", p * p),
        ),
    ])
}

fn entry_name(m: usize, n: usize) -> String {
    format!("D_{{{m}{n}}}")
}

/// `Delta(D_{nm}) = sum_k D_{nk} (x) D_{km}` and `eps(D_{nm}) = delta_{nm}`.
pub fn addition_theorem_check(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Vec<CheckResult>> {
    let d = universal_t_rep(lambda_plus, lambda_minus)?;
    let field = lambda_plus.field();
    let p = d.size();
    let mut addition = Tally::new();
    let mut counit = Tally::new();
    let mut counit_leg = Tally::new();
    for n in 0..p {
        for m in 0..p {
            let entry = d.get(n, m);
            let lhs = e_coproduct(entry);
            let mut rhs = ETensor::zero(field);
            for k in 0..p {
                rhs = &rhs + &d.get(n, k).tensor(d.get(k, m));
            }
            addition.record(lhs == rhs, || entry_name(n, m));
            let eps = e_counit(entry);
            let ok = if n == m { eps.is_one() } else { eps.is_zero() };
            counit.record(ok, || format!("eps({}) = {}", entry_name(n, m), eps.render()));
            let slice = lhs.contract_left(|a| e_counit(&EElement::monomial(field, a.clone())));
            counit_leg.record(&slice == entry, || entry_name(n, m));
        }
    }
    Ok(vec![
        addition.finish("repr.addition_theorem", "addition theorem for the matrix elements"),
        counit.finish("repr.counit_slice", "counit of a corepresentation is the identity matrix"),
        counit_leg.finish("repr.counit_leg", "(eps (x) id) Delta(D_nm) = D_nm"),
    ])
}

/// `{T a, T b}_S = (a, b)_S 1` in its component form
/// `sum_j D_{ja}^* D_{-j,b} = (delta^a, delta^b)_S`.
pub fn unitarity_sums_check(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Vec<CheckResult>> {
    let d = universal_t_rep(lambda_plus, lambda_minus)?;
    let field = lambda_plus.field();
    let p = d.size();
    let mut general = Tally::new();
    let mut origin = Tally::new();
    let mut paired = Tally::new();
    for a in 0..p {
        for b in 0..p {
            let mut sum = EElement::zero(field);
            for j in 0..p {
                sum = &sum + &(&e_star(d.get(j, a)) * d.get((p - j) % p, b));
            }
            let expected = if (a + b) % p == 0 {
                EElement::one(field)
            } else {
                EElement::zero(field)
            };
            let ok = sum == expected;
            let case = || format!("(m, n) = ({a}, {b}) gives {}", sum.render());
            if a == 0 && b == 0 {
                origin.record(ok, case);
            } else if (a + b) % p == 0 {
                paired.record(ok, case);
            } else {
                general.record(ok, case);
            }
        }
    }
    Ok(vec![
        general.finish("repr.unitarity.general", "pseudo-unitarity sums, (m, n) with m + n != 0 mod p"),
        origin.finish("repr.unitarity.origin", "pseudo-unitarity sum for (m, n) = (0, 0)"),
        paired.finish("repr.unitarity.paired", "pseudo-unitarity sum for (m, n) = (s, p - s)"),
    ])
}

/// Shift recurrences of the first column under the right action, with the
/// Casimir, weight and central eigenvalues.
pub fn recurrence_check(lambda_plus: &ParamScalar, lambda_minus: &ParamScalar) -> Result<Vec<CheckResult>> {
    let d = universal_t_rep(lambda_plus, lambda_minus)?;
    let field = lambda_plus.field();
    let p = d.size();
    let pp = p_gen(field, Sign::Plus);
    let pm = p_gen(field, Sign::Minus);
    let casimir = &pp * &pm;
    let kappa = kappa_pow(field, 1);
    let lam2 = lambda_plus * lambda_minus;
    let mut down = Tally::new();
    let mut up = Tally::new();
    let mut wrap_down = Tally::new();
    let mut wrap_up = Tally::new();
    let mut cas = Tally::new();
    let mut weight = Tally::new();
    let mut central = Tally::new();
    for m in 0..p {
        let x = d.get(m, 0);
        let ok = right_rep(&pp, x) == d.get((m + p - 1) % p, 0).scale(lambda_plus);
        let case = || format!("R(p+) {}", entry_name(m, 0));
        if m == 0 {
            wrap_down.record(ok, case);
        } else {
            down.record(ok, case);
        }
        let ok = right_rep(&pm, x) == d.get((m + 1) % p, 0).scale(lambda_minus);
        let case = || format!("R(p-) {}", entry_name(m, 0));
        if m == p - 1 {
            wrap_up.record(ok, case);
        } else {
            up.record(ok, case);
        }
        cas.record(right_rep(&casimir, x) == x.scale(&lam2), || entry_name(m, 0));
        let qm = ParamScalar::constant(field.q_pow(m as i64));
        weight.record(right_rep(&kappa, x) == x.scale(&qm), || entry_name(m, 0));
        for (sign, lambda) in [(Sign::Plus, lambda_plus), (Sign::Minus, lambda_minus)] {
            let ok = right_rep(&big_p_gen(field, sign), x) == x.scale(&lambda.pow(p as u32));
            central.record(ok, || format!("R(P{}) {}", sign.symbol(), entry_name(m, 0)));
        }
    }
    Ok(vec![
        down.finish("repr.recurrence.p_plus", "R(p+) D_m0 = lambda+ D_{m-1,0}"),
        wrap_down.finish("repr.recurrence.p_plus_wrap", "R(p+) D_00 = lambda+ D_{p-1,0}"),
        up.finish("repr.recurrence.p_minus", "R(p-) D_m0 = lambda- D_{m+1,0}"),
        wrap_up.finish("repr.recurrence.p_minus_wrap", "R(p-) D_{p-1,0} = lambda- D_00"),
        cas.finish("repr.casimir", "R(p+ p-) X = lambda^2 X"),
        weight.finish("repr.weight", "R(kappa) D_m0 = q^m D_m0"),
        central.finish("repr.central", "R(P+-) D_m0 = lambda+-^p D_m0"),
    ])
}

/// Eigen-equations of the plane wave `Y` under `p'+-` and `P+-`, and the
/// relation `P+- = -(p'+-)^p`.
pub fn plane_wave_check(chi_plus: &ParamScalar, chi_minus: &ParamScalar) -> Vec<CheckResult> {
    let field = chi_plus.field();
    let p = field.p();
    let y = plane_wave(chi_plus, chi_minus);
    let mut eigen = Tally::new();
    let mut central = Tally::new();
    let mut relation = Tally::new();
    for (sign, chi) in [(Sign::Plus, chi_plus), (Sign::Minus, chi_minus)] {
        let op = plane_wave_ops(field, sign);
        eigen.record(right_rep(&op, &y) == y.scale(chi), || format!("p'{}", sign.symbol()));
        let big = big_p_gen(field, sign);
        let ok = right_rep(&big, &y) == y.scale(&(-&chi.pow(p)));
        central.record(ok, || format!("P{}", sign.symbol()));
        relation.record(-&op.pow(p) == big, || format!("P{} = -(p'{})^p", sign.symbol(), sign.symbol()));
    }
    vec![
        eigen.finish("repr.plane_wave.eigen", "R(p'+-) Y = chi+- Y"),
        central.finish("repr.plane_wave.central", "R(P+-) Y = -chi+-^p Y"),
        relation.finish("repr.plane_wave.relation", "P+- = -(p'+-)^p"),
    ]
}

/// Outcome of `(D^lambda_{n0}, D^{lambda'}_{m0})_E` for independent `lambda`, `lambda'`.
#[derive(Clone, Debug)]
pub struct Orthogonality {
    pub n: u32,
    pub m: u32,
    /// The full distributional value.
    pub value: DistValue,
    /// The value on the slice `lambda' = lambda` (delta arguments untouched).
    pub coincidence: DistValue,
    /// Constant `c` and exponent `e` with coefficient `c (lambda+ lambda-)^e`,
    /// when the coincidence coefficient has that shape.
    pub coefficient: Option<(CycScalar, u16)>,
}

/// `sum_{k=0}^{p-1} 1 / ([k]! [p-1-k]!)^2`.
pub fn orthogonality_ksum(field: &'static CycField) -> CycScalar {
    let p = field.p() as i64;
    let mut acc = field.zero();
    for k in 0..p {
        let x = &inv_q_fact(field, k).unwrap() * &inv_q_fact(field, p - 1 - k).unwrap();
        acc = &acc + &(&x * &x);
    }
    acc
}

pub fn orthogonality_discrete(field: &'static CycField, n: u32, m: u32) -> Result<Orthogonality> {
    let lp = ParamScalar::param(field, Param::LambdaPlus);
    let lm = ParamScalar::param(field, Param::LambdaMinus);
    let lpp = ParamScalar::param(field, Param::LambdaPlusPrime);
    let lmp = ParamScalar::param(field, Param::LambdaMinusPrime);
    let p = field.p();
    if n >= p || m >= p {
        return Err(AlgebraError::OutOfRange(format!("indices ({n}, {m}) outside [0, {p})")));
    }
    let d = universal_t_rep(&lp, &lm)?;
    let d2 = universal_t_rep(&lpp, &lmp)?;
    let value = herm_e(d.get(n as usize, 0), d2.get(m as usize, 0))?;
    let coincidence = value
        .substitute_coefficients(Param::LambdaPlusPrime, &lp)
        .substitute_coefficients(Param::LambdaMinusPrime, &lm);
    let parts: Vec<_> = coincidence.parts().collect();
    let coefficient = match (parts.first(), parts.get(1)) {
        (Some((_, c)), None) => match c.terms() {
            [(exp, k)] => {
                let e_plus = exp[Param::LambdaPlus.index()];
                let e_minus = exp[Param::LambdaMinus.index()];
                let others = exp.iter().enumerate().all(|(idx, e)| {
                    idx == Param::LambdaPlus.index() || idx == Param::LambdaMinus.index() || *e == 0
                });
                (e_plus == e_minus && others).then(|| (k.clone(), e_plus))
            }
            _ => None,
        },
        _ => None,
    };
    Ok(Orthogonality {
        n,
        m,
        value,
        coincidence,
        coefficient,
    })
}

/// Discrete part of the orthogonality relation: vanishing off `n + m = 0 mod p`,
/// and on it an `n`-independent coefficient whose constant equals the k-sum
/// to `1e-10`. The delta normalization is recorded, not asserted.
pub fn orthogonality_check(field: &'static CycField) -> Result<Vec<CheckResult>> {
    let p = field.p();
    let ksum = orthogonality_ksum(field);
    let ksum_f = ksum.to_complex();
    let mut vanishing = Tally::new();
    let mut matches = Tally::new();
    let mut seen: Option<(CycScalar, u16)> = None;
    let mut uniform = true;
    let mut sample = String::new();
    for n in 0..p {
        for m in 0..p {
            let o = orthogonality_discrete(field, n, m)?;
            if (n + m) % p != 0 {
                vanishing.record(o.value.is_zero(), || format!("({n}, {m}): {}", o.value.render()));
                continue;
            }
            if n == 0 {
                sample = o.coincidence.render();
            }
            match &o.coefficient {
                Some((c, e)) => {
                    let err = (c.to_complex() - ksum_f).norm();
                    matches.record(err <= ORTHOGONALITY_TOL, || format!("({n}, {m}): |c - ksum| = {err:e}"));
                    match &seen {
                        None => seen = Some((c.clone(), *e)),
                        Some(first) => uniform &= first.0 == *c && first.1 == *e,
                    }
                }
                None => matches.record(false, || format!("({n}, {m}): {}", o.coincidence.render())),
            }
        }
    }
    let exponent = seen.as_ref().map(|s| s.1).unwrap_or(0);
    Ok(vec![
        vanishing.finish("repr.orthogonality.vanishing", "orthogonality vanishes unless n + m = 0 mod p"),
        CheckResult::check(
            "repr.orthogonality.n_independent",
            "orthogonality coefficient independent of n",
            uniform && seen.is_some(),
            format!("coefficient (lambda+ lambda-)^{exponent} times a constant"),
        ),
        matches.finish(
            "repr.orthogonality.ksum",
            "orthogonality constant sum_k 1/([k]! [p-1-k]!)^2",
        ),
        CheckResult::info(
            "repr.orthogonality.normalization",
            "continuous delta normalization of the orthogonality relation",
            format!(
                "(D_00, D'_00)_E at lambda' = lambda: {sample}; k-sum = {:.12}; \
                 with delta(lambda^p - lambda'^p) = delta(lambda - lambda') / (p lambda^(p-1)) per leg \
                 this is (2pi)^2 / p^2 * k-sum * delta(lambda+ - lambda'+) delta(lambda- - lambda'-)",
                ksum_f.re
            ),
        ),
    ])
}

/// Absolute tolerance for the numeric comparison of the orthogonality constant.
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_a::eta;
    use crate::hopf_u::{big_p_gen, kappa_pow, p_gen};
    use crate::scalars::{q_fact, Param};

    fn f(p: u32) -> &'static CycField {
        CycField::new(p).unwrap()
    }

    fn lambdas(field: &'static CycField) -> (ParamScalar, ParamScalar) {
        (
            ParamScalar::param(field, Param::LambdaPlus),
            ParamScalar::param(field, Param::LambdaMinus),
        )
    }

    #[test]
    fn qexp_values() {
        let field = f(3);
        let zero = AElement::zero(field);
        assert_eq!(cutoff_qexp(&zero, Sign::Plus), AElement::one(field));
        let e = eta(field, Sign::Plus);
        let expected = &(&AElement::one(field) + &e)
            + &e.pow(2).scale(&ParamScalar::constant(
                &field.q_pow(1) * &q_fact(field, 2).unwrap().inv().unwrap(),
            ));
        assert_eq!(cutoff_qexp(&e, Sign::Plus), expected);
        let field = f(5);
        let e = eta(field, Sign::Plus);
        let x = cutoff_qexp(&e, Sign::Plus);
        assert_eq!(x.len(), 5);
        let top = &field.q_pow(6) * &q_fact(field, 4).unwrap().inv().unwrap();
        assert_eq!(x.coeff(&crate::hopf_a::AMonomial::new(4, 0, 0)), ParamScalar::constant(top));
    }

    #[test]
    fn bessel_values() {
        let field = f(3);
        let x = ParamScalar::param(field, Param::Mu);
        assert_eq!(
            qbessel_cut(2, &x).unwrap(),
            ParamScalar::constant(q_fact(field, 2).unwrap().inv().unwrap())
        );
        assert!(qbessel_cut(0, &ParamScalar::zero(field)).unwrap().is_one());
        assert!(qbessel_cut(3, &x).unwrap().is_zero());
        assert!(qbessel_cut(4, &x).is_err());
        // J_0(x) = 1 - x/[1]! + x^2/([2]!)^2 for p = 3
        let inv2 = q_fact(field, 2).unwrap().inv().unwrap();
        let expected = &(&ParamScalar::one(field) - &x) + &x.pow(2).scale(&(&inv2 * &inv2));
        assert_eq!(qbessel_cut(0, &x).unwrap(), expected);
    }

    #[test]
    fn representation_relations() {
        for p in [3, 5] {
            let field = f(p);
            let (lp, lm) = lambdas(field);
            let rep = rep_l(&lp, &lm).unwrap();
            let qm1 = ParamScalar::constant(field.q_pow(-1));
            assert_eq!(rep.p_plus.times(&rep.kappa), rep.kappa.times(&rep.p_plus).scaled(&qm1));
            assert_eq!(rep.kappa.power(p), rep.kappa.one_like());
            assert_eq!(rep.p_plus.power(p), rep.big_p_plus);
            assert_eq!(rep.image(&big_p_gen(field, Sign::Minus)), rep.big_p_minus);
            assert!(is_s_self_adjoint(&rep.p_plus));
            assert!(is_s_self_adjoint(&rep.p_minus));
            assert!(is_s_self_adjoint(&rep.kappa));
            let _ = (p_gen(field, Sign::Plus), kappa_pow(field, 1));
        }
        let field = f(3);
        let zero = ParamScalar::zero(field);
        assert!(matches!(rep_l(&zero, &zero), Err(AlgebraError::ZeroLambda)));
        let w = rep_l_weight(field, 0);
        assert!(w.kappa.get(0, 0).is_one());
        assert!(w.p_plus.get(0, 0).is_zero());
    }

    #[test]
    fn closed_forms_against_product() {
        for p in [3, 5] {
            let field = f(p);
            let (lp, lm) = lambdas(field);
            let d = universal_t_rep(&lp, &lm).unwrap();
            for m in 0..p {
                for n in 0..p {
                    let derived = dmatrix_closed(&lp, &lm, m, n, ClosedForm::Derived);
                    assert_eq!(&derived, d.get(m as usize, n as usize), "m={m} n={n}");
                }
                assert_eq!(&dmatrix_bessel(&lp, &lm, m).unwrap(), d.get(m as usize, 0));
            }
        }
    }

    #[test]
    fn d00_is_bessel_zero() {
        let field = f(3);
        let (lp, lm) = lambdas(field);
        let d = universal_t_rep(&lp, &lm).unwrap();
        let arg = xi(field).scale(&(&lp * &lm));
        let minus_i = ParamScalar::constant(-&field.i());
        let e0 = exp_z(&(&minus_i * &lp.pow(3)), &(&minus_i * &lm.pow(3)));
        assert_eq!(d.get(0, 0), &(&e0 * &lift_a(&qbessel_cut(0, &arg).unwrap())));
    }

    #[test]
    fn weight_corepresentation() {
        let field = f(5);
        for m in 0..5 {
            let t = weight_t_rep(field, m);
            assert_eq!(t.size(), 1);
            assert_eq!(t.get(0, 0), &lift_a(&a_monomial(field, 0, 0, m)));
        }
    }

    #[test]
    fn identity_checks_at_three() {
        let field = f(3);
        let (lp, lm) = lambdas(field);
        let chi_p = ParamScalar::param(field, Param::ChiPlus);
        let chi_m = ParamScalar::param(field, Param::ChiMinus);
        let mut all = addition_theorem_check(&lp, &lm).unwrap();
        all.extend(representation_check(&lp, &lm).unwrap());
        all.extend(closed_form_check(&lp, &lm).unwrap());
        all.extend(unitarity_sums_check(&lp, &lm).unwrap());
        all.extend(recurrence_check(&lp, &lm).unwrap());
        all.extend(plane_wave_check(&chi_p, &chi_m));
        all.extend(orthogonality_check(field).unwrap());
        for r in &all {
            assert!(!r.failed(), "{}: {}", r.assertion_id, r.detail);
        }
    }

    #[test]
    fn trivial_plane_wave() {
        let field = f(3);
        let zero = ParamScalar::zero(field);
        assert_eq!(plane_wave(&zero, &zero), EElement::one(field));
    }

    #[test]
    fn orthogonality_constant_at_three() {
        // [1] = [2] = 1 at p = 3, so the k-sum is 3
        let field = f(3);
        assert_eq!(orthogonality_ksum(field), field.int(3));
        let o = orthogonality_discrete(field, 0, 0).unwrap();
        assert_eq!(o.coefficient, Some((field.int(3), 2)));
    }
}
