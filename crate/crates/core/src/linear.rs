//! Sparse linear combinations of normal-ordered monomials, and their tensor
//! products.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{CycField, CycScalar, ParamScalar};

/// A basis monomial of one of the algebras.
pub trait Monomial: Clone + Ord + Hash + fmt::Debug {
    /// Product of two monomials in normal order: `None` when the product
    /// vanishes, otherwise a power `e` of the primitive `4p`-th root `w` and the
    /// resulting monomial, meaning `self * other = w^e * result`.
    fn mul(&self, other: &Self, field: &'static CycField) -> Option<(i64, Self)>;

    fn unit(field: &'static CycField) -> Self;

    fn render(&self) -> String;
}

impl<A: Monomial, B: Monomial> Monomial for (A, B) {
    fn mul(&self, other: &Self, field: &'static CycField) -> Option<(i64, Self)> {
        let (ea, a) = self.0.mul(&other.0, field)?;
        let (eb, b) = self.1.mul(&other.1, field)?;
        Some((ea + eb, (a, b)))
    }

    fn unit(field: &'static CycField) -> Self {
        (A::unit(field), B::unit(field))
    }

    fn render(&self) -> String {
        format!("[{}] (x) [{}]", self.0.render(), self.1.render())
    }
}

/// A finite [`ParamScalar`]-linear combination of monomials with no zero
/// coefficients stored.
#[derive(Clone)]
pub struct LinComb<M: Monomial> {
    field: &'static CycField,
    terms: BTreeMap<M, ParamScalar>,
}

/// Tensor product of two spaces spanned by monomials.
pub type Tensor<A, B> = LinComb<(A, B)>;

impl<M: Monomial> PartialEq for LinComb<M> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<M: Monomial> Eq for LinComb<M> {}

impl<M: Monomial> LinComb<M> {
    pub fn zero(field: &'static CycField) -> Self {
        LinComb {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &'static CycField) -> Self {
        Self::monomial(field, M::unit(field))
    }

    pub fn monomial(field: &'static CycField, m: M) -> Self {
        Self::term(m, ParamScalar::one(field))
    }

    pub fn term(m: M, c: ParamScalar) -> Self {
        let mut out = Self::zero(c.field());
        out.add_term(m, c);
        out
    }

    /// A scalar multiple of the unit.
    pub fn scalar(c: ParamScalar) -> Self {
        let field = c.field();
        Self::term(M::unit(field), c)
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn add_term(&mut self, m: M, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, ParamScalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> ParamScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| ParamScalar::zero(self.field))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            let v = x * c;
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn scale_cyc(&self, c: &CycScalar) -> Self {
        self.scale(&ParamScalar::constant(c.clone()))
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((e, m)) = ma.mul(mb, self.field) {
                    out.add_term(m, (ca * cb).mul_root_pow(e));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Extends a map on monomials linearly.
    pub fn linear_map<N: Monomial>(&self, mut f: impl FnMut(&M) -> LinComb<N>) -> LinComb<N> {
        let mut out = LinComb::zero(self.field);
        for (m, c) in &self.terms {
            for (n, d) in f(m).terms {
                out.add_term(n, &d * c);
            }
        }
        out
    }

    /// Extends a scalar-valued map on monomials linearly.
    pub fn functional(&self, mut f: impl FnMut(&M) -> ParamScalar) -> ParamScalar {
        let mut acc = ParamScalar::zero(self.field);
        for (m, c) in &self.terms {
            let v = f(m);
            if !v.is_zero() {
                acc = &acc + &(&v * c);
            }
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Self {
        let mut out = Self::zero(self.field);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn tensor<N: Monomial>(&self, other: &LinComb<N>) -> Tensor<M, N> {
        let mut out = LinComb::zero(self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono = m.render();
                if mono.is_empty() {
                    c.render()
                } else {
                    format!("{}*{}", c.render(), mono)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<A: Monomial, B: Monomial> LinComb<(A, B)> {
    /// Applies linear maps to each tensor leg.
    pub fn map_legs<C: Monomial, D: Monomial>(
        &self,
        mut f: impl FnMut(&A) -> LinComb<C>,
        mut g: impl FnMut(&B) -> LinComb<D>,
    ) -> Tensor<C, D> {
        let mut out = LinComb::zero(self.field);
        for ((a, b), c) in &self.terms {
            let fa = f(a);
            if fa.is_zero() {
                continue;
            }
            let gb = g(b);
            for (x, cx) in &fa.terms {
                for (y, cy) in &gb.terms {
                    out.add_term((x.clone(), y.clone()), &(cx * cy) * c);
                }
            }
        }
        out
    }

    /// Contracts the left leg with a functional.
    pub fn contract_left(&self, mut f: impl FnMut(&A) -> ParamScalar) -> LinComb<B> {
        let mut out = LinComb::zero(self.field);
        for ((a, b), c) in &self.terms {
            let v = f(a);
            if !v.is_zero() {
                out.add_term(b.clone(), &v * c);
            }
        }
        out
    }

    /// Contracts the right leg with a functional.
    pub fn contract_right(&self, mut f: impl FnMut(&B) -> ParamScalar) -> LinComb<A> {
        let mut out = LinComb::zero(self.field);
        for ((a, b), c) in &self.terms {
            let v = f(b);
            if !v.is_zero() {
                out.add_term(a.clone(), &v * c);
            }
        }
        out
    }
}

impl<M: Monomial> LinComb<(M, M)> {
    /// Multiplies the two legs together.
    pub fn multiply_legs(&self) -> LinComb<M> {
        let mut out = LinComb::zero(self.field);
        for ((a, b), c) in &self.terms {
            if let Some((e, m)) = a.mul(b, self.field) {
                out.add_term(m, c.mul_root_pow(e));
            }
        }
        out
    }
}

impl<M: Monomial> fmt::Debug for LinComb<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monomial> fmt::Display for LinComb<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monomial> Add for &LinComb<M> {
    type Output = LinComb<M>;
    fn add(self, rhs: &LinComb<M>) -> LinComb<M> {
        self.add_ref(rhs)
    }
}

impl<M: Monomial> Sub for &LinComb<M> {
    type Output = LinComb<M>;
    fn sub(self, rhs: &LinComb<M>) -> LinComb<M> {
        self.sub_ref(rhs)
    }
}

impl<M: Monomial> Mul for &LinComb<M> {
    type Output = LinComb<M>;
    fn mul(self, rhs: &LinComb<M>) -> LinComb<M> {
        self.mul_ref(rhs)
    }
}

impl<M: Monomial> Neg for &LinComb<M> {
    type Output = LinComb<M>;
    fn neg(self) -> LinComb<M> {
        self.map_coeffs(|c| -c)
    }
}
