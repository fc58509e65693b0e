//! Polynomials in the declared real parameters with cyclotomic coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::cyclotomic::{CycField, CycScalar};
use crate::error::{AlgebraError, Result};

/// The declared real parameters. The set is fixed so that the canonical term
/// order of [`ParamScalar`] never changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    LambdaPlus,
    LambdaMinus,
    LambdaPlusPrime,
    LambdaMinusPrime,
    ChiPlus,
    ChiMinus,
    Mu,
    Nu,
}

pub const PARAM_COUNT: usize = 8;

impl Param {
    pub const ALL: [Param; PARAM_COUNT] = [
        Param::LambdaPlus,
        Param::LambdaMinus,
        Param::LambdaPlusPrime,
        Param::LambdaMinusPrime,
        Param::ChiPlus,
        Param::ChiMinus,
        Param::Mu,
        Param::Nu,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::LambdaPlus => "lambda+",
            Param::LambdaMinus => "lambda-",
            Param::LambdaPlusPrime => "lambda'+",
            Param::LambdaMinusPrime => "lambda'-",
            Param::ChiPlus => "chi+",
            Param::ChiMinus => "chi-",
            Param::Mu => "mu",
            Param::Nu => "nu",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }
}

/// Exponent vector over [`Param::ALL`].
pub type ParamExp = [u16; PARAM_COUNT];

/// A polynomial in the real parameters with [`CycScalar`] coefficients.
///
/// Terms are kept sorted by exponent vector (lexicographic) with no zero
/// coefficients.
#[derive(Clone)]
pub struct ParamScalar {
    field: &'static CycField,
    terms: Vec<(ParamExp, CycScalar)>,
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for ParamScalar {}

impl std::hash::Hash for ParamScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl PartialOrd for ParamScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ParamScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl ParamScalar {
    pub fn zero(field: &'static CycField) -> Self {
        ParamScalar {
            field,
            terms: Vec::new(),
        }
    }

    pub fn one(field: &'static CycField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: CycScalar) -> Self {
        let field = c.field();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![([0; PARAM_COUNT], c)]
        };
        ParamScalar { field, terms }
    }

    pub fn int(field: &'static CycField, n: i64) -> Self {
        Self::constant(field.int(n))
    }

    /// The bare parameter `x`.
    pub fn param(field: &'static CycField, x: Param) -> Self {
        Self::monomial(field.one(), x, 1)
    }

    /// `c * x^e`.
    pub fn monomial(c: CycScalar, x: Param, e: u16) -> Self {
        let mut exp = [0; PARAM_COUNT];
        exp[x.index()] = e;
        let field = c.field();
        if c.is_zero() {
            return Self::zero(field);
        }
        ParamScalar {
            field,
            terms: vec![(exp, c)],
        }
    }

    pub fn from_terms(field: &'static CycField, terms: impl IntoIterator<Item = (ParamExp, CycScalar)>) -> Self {
        let mut map: std::collections::BTreeMap<ParamExp, CycScalar> = Default::default();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(|| field.zero());
            *entry = &*entry + &c;
        }
        ParamScalar {
            field,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn terms(&self) -> &[(ParamExp, CycScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; PARAM_COUNT] && self.terms[0].1.is_one()
    }

    /// The value when no parameter occurs.
    pub fn as_constant(&self) -> Option<CycScalar> {
        match self.terms.as_slice() {
            [] => Some(self.field.zero()),
            [(e, c)] if *e == [0; PARAM_COUNT] => Some(c.clone()),
            _ => None,
        }
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> CycScalar {
        match self.terms.first() {
            Some((e, c)) if *e == [0; PARAM_COUNT] => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ParamScalar {
            field: self.field,
            terms: out,
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut map: std::collections::BTreeMap<ParamExp, CycScalar> = Default::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for k in 0..PARAM_COUNT {
                    e[k] += eb[k];
                }
                let prod = ca * cb;
                match map.get_mut(&e) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        map.insert(e, prod);
                    }
                }
            }
        }
        ParamScalar {
            field: self.field,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        if c.is_one() {
            return self.clone();
        }
        ParamScalar {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Multiplies every coefficient by `w^e`.
    pub fn mul_root_pow(&self, e: i64) -> Self {
        if e.rem_euclid(self.field.root_order() as i64) == 0 {
            return self.clone();
        }
        ParamScalar {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (*x, c.mul_root_pow(e)))
                .collect(),
        }
    }

    /// Conjugates coefficients; parameters are real and stay fixed.
    pub fn conj(&self) -> Self {
        ParamScalar {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn occurs(&self, x: Param) -> bool {
        self.terms.iter().any(|(e, _)| e[x.index()] > 0)
    }

    /// Substitutes `x -> value` everywhere.
    pub fn substitute(&self, x: Param, value: &ParamScalar) -> Self {
        let mut acc = Self::zero(self.field);
        let mut powers: Vec<ParamScalar> = vec![Self::one(self.field)];
        for (e, c) in &self.terms {
            let k = e[x.index()] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *e;
            rest[x.index()] = 0;
            let term = ParamScalar {
                field: self.field,
                terms: vec![(rest, c.clone())],
            };
            acc = &acc + &(&term * &powers[k]);
        }
        acc
    }

    /// Multivariate division by `divisor` in lexicographic order:
    /// returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no remainder term divisible by the leading term of `divisor`.
    pub fn div_rem(&self, divisor: &ParamScalar) -> (ParamScalar, ParamScalar) {
        let field = self.field;
        let (lead_exp, lead_coeff) = divisor
            .terms
            .last()
            .cloned()
            .expect("division by the zero polynomial");
        let lead_inv = lead_coeff.inv().expect("nonzero leading coefficient");
        let mut quotient = Self::zero(field);
        let mut remainder = Self::zero(field);
        let mut rest = self.clone();
        while let Some((e, c)) = rest.terms.last().cloned() {
            let divisible = (0..PARAM_COUNT).all(|k| e[k] >= lead_exp[k]);
            if divisible {
                let mut qe = e;
                for k in 0..PARAM_COUNT {
                    qe[k] -= lead_exp[k];
                }
                let t = ParamScalar {
                    field,
                    terms: vec![(qe, &c * &lead_inv)],
                };
                quotient = &quotient + &t;
                rest = &rest - &(&t * divisor);
            } else {
                let t = ParamScalar {
                    field,
                    terms: vec![(e, c)],
                };
                remainder = &remainder + &t;
                rest = &rest - &t;
            }
        }
        (quotient, remainder)
    }

    /// Evaluates under `w -> exp(2 pi i / 4p)` and the given real assignment.
    pub fn embed(&self, assignment: &HashMap<Param, f64>) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut v = c.to_complex();
            for x in Param::ALL {
                let k = e[x.index()];
                if k > 0 {
                    let value = assignment
                        .get(&x)
                        .ok_or_else(|| AlgebraError::MissingParameter(x.name().to_string()))?;
                    v *= value.powi(k as i32);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut s = c.render();
                for x in Param::ALL {
                    let k = e[x.index()];
                    if k == 1 {
                        s.push_str(&format!("*{}", x.name()));
                    } else if k > 1 {
                        s.push_str(&format!("*{}^{}", x.name(), k));
                    }
                }
                s
            })
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(" + "))
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        self.add_ref(rhs)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self.add_ref(&-rhs)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: ParamScalar) -> ParamScalar {
        self.add_ref(&rhs)
    }
}

impl Sub for ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: ParamScalar) -> ParamScalar {
        self.add_ref(&-&rhs)
    }
}

impl Mul for ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: ParamScalar) -> ParamScalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_operations() {
        let f = CycField::new(3).unwrap();
        let lp = ParamScalar::param(f, Param::LambdaPlus);
        let lm = ParamScalar::param(f, Param::LambdaMinus);
        let s = &lp + &lm;
        let d = &lp - &lm;
        let prod = &s * &d;
        let expected = &lp.pow(2) - &lm.pow(2);
        assert_eq!(prod, expected);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn conjugation_fixes_parameters() {
        let f = CycField::new(5).unwrap();
        let x = ParamScalar::monomial(f.i(), Param::ChiPlus, 2);
        assert_eq!(x.conj(), -&x);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn division_remainder() {
        let f = CycField::new(3).unwrap();
        let mu = ParamScalar::param(f, Param::Mu);
        let nu = ParamScalar::param(f, Param::Nu);
        let g = &mu - &nu;
        let c = &(&mu * &mu) + &ParamScalar::int(f, 2);
        let (quot, rem) = c.div_rem(&g);
        assert_eq!(&(&quot * &g) + &rem, c);
        assert!(!rem.occurs(Param::Nu) || !rem.occurs(Param::Mu));
    }

    #[test]
    fn embedding_needs_assignment() {
        let f = CycField::new(3).unwrap();
        let lp = ParamScalar::param(f, Param::LambdaPlus);
        assert!(lp.embed(&HashMap::new()).is_err());
        let mut a = HashMap::new();
        a.insert(Param::LambdaPlus, 2.0);
        assert!((lp.embed(&a).unwrap().re - 2.0).abs() < 1e-15);
    }
}
