//! The translation extension: central coordinates `z+`, `z-` adjoined to the
//! reduced algebra, with functions of `z` modelled by exponential-polynomials
//! `z+^a z-^b exp(u z+ + v z-)`.
//!
//! The coproduct of a function `f(z)` is
//!
//! ```text
//! D(f) = f(Z) + f_{z+}(Z) B+ + f_{z-}(Z) B- + f_{z+ z-}(Z) B+ B-
//! ```
//!
//! where `Z+- = z+- (x) 1 + 1 (x) z+-` and `B+-` are the correction tensors of
//! [`b_plus_minus`].

use crate::hopf_a::{a_star, monomial_antipode, monomial_coproduct, AElement, AMonomial, ATensor};
use crate::linear::{LinComb, Monomial, Tensor};
use crate::scalars::{inv_q_fact, CycField, ParamScalar, Sign};

/// `z+^a z-^b exp(u z+ + v z-)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZMonomial {
    pub a: u32,
    pub b: u32,
    pub u: ParamScalar,
    pub v: ParamScalar,
}

impl ZMonomial {
    pub fn one(field: &'static CycField) -> Self {
        ZMonomial {
            a: 0,
            b: 0,
            u: ParamScalar::zero(field),
            v: ParamScalar::zero(field),
        }
    }

    pub fn poly(field: &'static CycField, a: u32, b: u32) -> Self {
        ZMonomial {
            a,
            b,
            ..ZMonomial::one(field)
        }
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.b == 0 && self.u.is_zero() && self.v.is_zero()
    }

    pub fn has_exp(&self) -> bool {
        !(self.u.is_zero() && self.v.is_zero())
    }

    /// Power of `z` and exponential frequency along one coordinate.
    pub fn along(&self, sign: Sign) -> (u32, &ParamScalar) {
        match sign {
            Sign::Plus => (self.a, &self.u),
            Sign::Minus => (self.b, &self.v),
        }
    }

    fn with_power(&self, sign: Sign, e: u32) -> Self {
        let mut out = self.clone();
        match sign {
            Sign::Plus => out.a = e,
            Sign::Minus => out.b = e,
        }
        out
    }

    /// `d/dz+-` as a list of `(coefficient, monomial)`.
    pub fn derivative(&self, sign: Sign) -> Vec<(ParamScalar, ZMonomial)> {
        let field = self.u.field();
        let (e, freq) = self.along(sign);
        let mut out = Vec::new();
        if e > 0 {
            out.push((ParamScalar::int(field, e as i64), self.with_power(sign, e - 1)));
        }
        if !freq.is_zero() {
            out.push((freq.clone(), self.clone()));
        }
        out
    }

    /// `f(-z)` as `(sign, monomial)`.
    pub fn reflect(&self) -> (i64, ZMonomial) {
        let sign = if (self.a + self.b).is_multiple_of(2) { 1 } else { -1 };
        (
            sign,
            ZMonomial {
                a: self.a,
                b: self.b,
                u: -&self.u,
                v: -&self.v,
            },
        )
    }

    pub fn conj(&self) -> ZMonomial {
        ZMonomial {
            a: self.a,
            b: self.b,
            u: self.u.conj(),
            v: self.v.conj(),
        }
    }

    /// `f(0)`.
    pub fn at_origin(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `f(Z)` with `Z = z (x) 1 + 1 (x) z`, expanded binomially.
    pub fn split(&self) -> Vec<(u64, ZMonomial, ZMonomial)> {
        let mut out = Vec::new();
        for i in 0..=self.a {
            for j in 0..=self.b {
                let c = binomial(self.a, i) * binomial(self.b, j);
                let left = ZMonomial {
                    a: i,
                    b: j,
                    u: self.u.clone(),
                    v: self.v.clone(),
                };
                let right = ZMonomial {
                    a: self.a - i,
                    b: self.b - j,
                    u: self.u.clone(),
                    v: self.v.clone(),
                };
                out.push((c, left, right));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("z+", self.a), ("z-", self.b)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if self.has_exp() {
            let mut arg = Vec::new();
            if !self.u.is_zero() {
                arg.push(format!("({}) z+", self.u.render()));
            }
            if !self.v.is_zero() {
                arg.push(format!("({}) z-", self.v.render()));
            }
            parts.push(format!("exp({})", arg.join(" + ")));
        }
        parts.join(" ")
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut acc: u64 = 1;
    for j in 0..k as u64 {
        acc = acc * (n as u64 - j) / (j + 1);
    }
    acc
}

impl Monomial for ZMonomial {
    fn mul(&self, other: &Self, _: &'static CycField) -> Option<(i64, Self)> {
        Some((
            0,
            ZMonomial {
                a: self.a + other.a,
                b: self.b + other.b,
                u: &self.u + &other.u,
                v: &self.v + &other.v,
            },
        ))
    }

    fn unit(field: &'static CycField) -> Self {
        ZMonomial::one(field)
    }

    fn render(&self) -> String {
        ZMonomial::render(self)
    }
}

/// A reduced monomial times a function of `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EMonomial {
    pub a: AMonomial,
    pub z: ZMonomial,
}

impl Monomial for EMonomial {
    fn mul(&self, other: &Self, field: &'static CycField) -> Option<(i64, Self)> {
        let (e, a) = self.a.mul(&other.a, field)?;
        let (_, z) = self.z.mul(&other.z, field)?;
        Some((e, EMonomial { a, z }))
    }

    fn unit(field: &'static CycField) -> Self {
        EMonomial {
            a: AMonomial::ONE,
            z: ZMonomial::one(field),
        }
    }

    fn render(&self) -> String {
        let a = Monomial::render(&self.a);
        let z = self.z.render();
        match (a.is_empty(), z.is_empty()) {
            (true, _) => z,
            (false, true) => a,
            (false, false) => format!("{a} {z}"),
        }
    }
}

pub type ExpPoly = LinComb<ZMonomial>;
pub type EElement = LinComb<EMonomial>;
pub type ETensor = Tensor<EMonomial, EMonomial>;

/// Embeds a reduced element.
pub fn lift_a(x: &AElement) -> EElement {
    let field = x.field();
    let mut out = EElement::zero(field);
    for (m, c) in x.terms() {
        out.add_term(
            EMonomial {
                a: *m,
                z: ZMonomial::one(field),
            },
            c.clone(),
        );
    }
    out
}

/// Embeds a function of `z`.
pub fn lift_z(f: &ExpPoly) -> EElement {
    let field = f.field();
    let mut out = EElement::zero(field);
    for (z, c) in f.terms() {
        out.add_term(
            EMonomial {
                a: AMonomial::ONE,
                z: z.clone(),
            },
            c.clone(),
        );
    }
    out
}

pub fn lift_a_tensor(t: &ATensor) -> ETensor {
    let field = t.field();
    let one = ZMonomial::one(field);
    let mut out = ETensor::zero(field);
    for ((l, r), c) in t.terms() {
        out.add_term(
            (
                EMonomial { a: *l, z: one.clone() },
                EMonomial { a: *r, z: one.clone() },
            ),
            c.clone(),
        );
    }
    out
}

/// The coordinate `z+` or `z-`.
pub fn z_gen(field: &'static CycField, sign: Sign) -> EElement {
    let z = match sign {
        Sign::Plus => ZMonomial::poly(field, 1, 0),
        Sign::Minus => ZMonomial::poly(field, 0, 1),
    };
    EElement::monomial(field, EMonomial { a: AMonomial::ONE, z })
}

/// `exp(u z+ + v z-)`.
pub fn exp_z(u: &ParamScalar, v: &ParamScalar) -> EElement {
    let field = u.field();
    EElement::monomial(
        field,
        EMonomial {
            a: AMonomial::ONE,
            z: ZMonomial {
                a: 0,
                b: 0,
                u: u.clone(),
                v: v.clone(),
            },
        },
    )
}

pub fn e_mul(x: &EElement, y: &EElement) -> EElement {
    x * y
}

/// `B+-` = `(-1)^{(p+1)/2} sum_{n=1}^{p-1} q^{+-n^2} / ([p-n]! [n]!) eta^{p-n} delta^{+-n} (x) eta^n`.
pub fn b_plus_minus(field: &'static CycField, sign: Sign) -> ATensor {
    let p = field.p();
    let overall = if p.div_ceil(2).is_multiple_of(2) { 1 } else { -1 };
    let mut out = ATensor::zero(field);
    for n in 1..p {
        let n64 = n as i64;
        let c = &(&field.q_pow(sign.value() * n64 * n64) * &inv_q_fact(field, (p - n) as i64).unwrap())
            * &inv_q_fact(field, n64).unwrap();
        let c = c.scale_int(overall);
        let dk = (sign.value() * n64).rem_euclid(p as i64) as u32;
        let (l, r) = match sign {
            Sign::Plus => (AMonomial::new(p - n, 0, dk), AMonomial::new(n, 0, 0)),
            Sign::Minus => (AMonomial::new(0, p - n, dk), AMonomial::new(0, n, 0)),
        };
        out.add_term((l, r), ParamScalar::constant(c));
    }
    out
}

/// Coproduct of a pure function of `z`.
pub fn z_coproduct(field: &'static CycField, z: &ZMonomial) -> ETensor {
    let bp = lift_a_tensor(&b_plus_minus(field, Sign::Plus));
    let bm = lift_a_tensor(&b_plus_minus(field, Sign::Minus));
    let mut out = split_z(field, &[(ParamScalar::one(field), z.clone())]);
    let dp = z.derivative(Sign::Plus);
    if !dp.is_empty() {
        out = &out + &(&split_z(field, &dp) * &bp);
    }
    let dm = z.derivative(Sign::Minus);
    if !dm.is_empty() {
        out = &out + &(&split_z(field, &dm) * &bm);
    }
    let dpm: Vec<(ParamScalar, ZMonomial)> = dp
        .iter()
        .flat_map(|(c, m)| {
            m.derivative(Sign::Minus)
                .into_iter()
                .map(move |(d, n)| (c * &d, n))
        })
        .collect();
    if !dpm.is_empty() {
        out = &out + &(&(&split_z(field, &dpm) * &bp) * &bm);
    }
    out
}

fn split_z(field: &'static CycField, terms: &[(ParamScalar, ZMonomial)]) -> ETensor {
    let mut out = ETensor::zero(field);
    for (c, z) in terms {
        for (b, l, r) in z.split() {
            out.add_term(
                (
                    EMonomial { a: AMonomial::ONE, z: l },
                    EMonomial { a: AMonomial::ONE, z: r },
                ),
                c * &ParamScalar::int(field, b as i64),
            );
        }
    }
    out
}

pub fn e_monomial_coproduct(field: &'static CycField, m: &EMonomial) -> ETensor {
    let a_part = lift_a_tensor(&monomial_coproduct(field, &m.a));
    if m.z.is_one() {
        return a_part;
    }
    &a_part * &z_coproduct(field, &m.z)
}

pub fn e_coproduct(x: &EElement) -> ETensor {
    let field = x.field();
    let mut out = ETensor::zero(field);
    for (m, c) in x.terms() {
        for (t, d) in e_monomial_coproduct(field, m).into_terms() {
            out.add_term(t, &d * c);
        }
    }
    out
}

pub fn e_counit(x: &EElement) -> ParamScalar {
    let field = x.field();
    x.functional(|m| {
        if m.a.n == 0 && m.a.m == 0 && m.z.at_origin() {
            ParamScalar::one(field)
        } else {
            ParamScalar::zero(field)
        }
    })
}

/// `S(a f(z)) = f(-z) S(a)`.
pub fn e_antipode(x: &EElement) -> EElement {
    let field = x.field();
    x.linear_map(|m| {
        let (s, z) = m.z.reflect();
        let sa = monomial_antipode(field, &m.a);
        let mut out = EElement::zero(field);
        for (a, c) in sa.into_terms() {
            out.add_term(EMonomial { a, z: z.clone() }, &c * &ParamScalar::int(field, s));
        }
        out
    })
}

/// Conjugates coefficients and frequencies, fixes `z`, applies the reduced star.
pub fn e_star(x: &EElement) -> EElement {
    let field = x.field();
    let mut out = EElement::zero(field);
    for (m, c) in x.terms() {
        let z = m.z.conj();
        let sa = a_star(&AElement::monomial(field, m.a));
        for (a, d) in sa.into_terms() {
            out.add_term(EMonomial { a, z: z.clone() }, &d * &c.conj());
        }
    }
    out
}

/// Formal derivative in `z+` or `z-`.
pub fn d_dz(x: &EElement, sign: Sign) -> EElement {
    let field = x.field();
    let mut out = EElement::zero(field);
    for (m, c) in x.terms() {
        for (d, z) in m.z.derivative(sign) {
            out.add_term(EMonomial { a: m.a, z }, &d * c);
        }
    }
    out
}

/// Splits an element into its reduced factors grouped by function of `z`.
pub fn by_function(x: &EElement) -> Vec<(ZMonomial, AElement)> {
    let field = x.field();
    let mut groups: std::collections::BTreeMap<ZMonomial, AElement> = Default::default();
    for (m, c) in x.terms() {
        groups
            .entry(m.z.clone())
            .or_insert_with(|| AElement::zero(field))
            .add_term(m.a, c.clone());
    }
    groups.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_a::{a_monomial, eta};
    use crate::scalars::Param;

    fn f(p: u32) -> &'static CycField {
        CycField::new(p).unwrap()
    }

    #[test]
    fn centrality_and_exponential_law() {
        let field = f(3);
        let zp = z_gen(field, Sign::Plus);
        let ep = lift_a(&eta(field, Sign::Plus));
        assert_eq!(&zp * &ep, &ep * &zp);
        let u = ParamScalar::param(field, Param::LambdaPlus);
        let u2 = ParamScalar::param(field, Param::LambdaMinus);
        let zero = ParamScalar::zero(field);
        assert_eq!(&exp_z(&u, &zero) * &exp_z(&u2, &zero), exp_z(&(&u + &u2), &zero));
        let top = &lift_a(&a_monomial(field, 2, 0, 0)) * &zp;
        assert!((&top * &ep).is_zero());
    }

    #[test]
    fn b_tensors() {
        for p in [3, 5] {
            let field = f(p);
            for s in [Sign::Plus, Sign::Minus] {
                let b = b_plus_minus(field, s);
                assert_eq!(b.len() as u32, p - 1);
                assert!((&b * &b).is_zero());
                let counit = b.contract_left(|m| {
                    if m.n == 0 && m.m == 0 {
                        ParamScalar::one(field)
                    } else {
                        ParamScalar::zero(field)
                    }
                });
                assert!(counit.is_zero());
            }
            let bp = b_plus_minus(field, Sign::Plus);
            let bm = b_plus_minus(field, Sign::Minus);
            assert_eq!(&bp * &bm, &bm * &bp);
        }
    }

    #[test]
    fn coproduct_of_z() {
        let field = f(3);
        let zp = z_gen(field, Sign::Plus);
        let one = EElement::one(field);
        let expected = &(&zp.tensor(&one) + &one.tensor(&zp))
            + &lift_a_tensor(&b_plus_minus(field, Sign::Plus));
        assert_eq!(e_coproduct(&zp), expected);
        assert_eq!(e_coproduct(&one), ETensor::one(field));
    }

    #[test]
    fn coproduct_of_exponential() {
        let field = f(3);
        let u = ParamScalar::param(field, Param::ChiPlus);
        let zero = ParamScalar::zero(field);
        let e = exp_z(&u, &zero);
        let b = lift_a_tensor(&b_plus_minus(field, Sign::Plus));
        let rhs = &e.tensor(&e) * &(&ETensor::one(field) + &b.scale(&u));
        assert_eq!(e_coproduct(&e), rhs);
    }

    #[test]
    fn antipode_counit_star() {
        let field = f(3);
        let zp = z_gen(field, Sign::Plus);
        assert_eq!(e_antipode(&zp), -&zp);
        let u = ParamScalar::param(field, Param::ChiPlus);
        let zero = ParamScalar::zero(field);
        assert!(e_counit(&exp_z(&u, &zero)).is_one());
        let i = ParamScalar::constant(field.i());
        assert_eq!(e_star(&zp.scale(&i)), zp.scale(&(-&i)));
    }

    #[test]
    fn derivatives() {
        let field = f(3);
        let zp = z_gen(field, Sign::Plus);
        let z2 = &zp * &zp;
        assert_eq!(d_dz(&z2, Sign::Plus), zp.scale(&ParamScalar::int(field, 2)));
        let u = ParamScalar::param(field, Param::ChiPlus);
        let zero = ParamScalar::zero(field);
        let e = exp_z(&u, &zero);
        assert_eq!(d_dz(&e, Sign::Plus), e.scale(&u));
        let ze = &zp * &e;
        assert_eq!(d_dz(&ze, Sign::Plus), &e + &ze.scale(&u));
        assert!(d_dz(&e, Sign::Minus).is_zero());
    }
}
