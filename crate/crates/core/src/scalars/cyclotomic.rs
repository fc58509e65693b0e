//! Exact arithmetic in the cyclotomic field generated by a primitive `4p`-th
//! root of unity `w`.
//!
//! The field contains `q = w^4` (a primitive `p`-th root of unity), the
//! imaginary unit `i = w^p` and the square root `q^{1/2} = w^2`. Elements are
//! stored in the power basis `1, w, ..., w^{d-1}` with `d = phi(4p)`, reduced
//! modulo the `4p`-th cyclotomic polynomial, with a single common
//! denominator. Small values stay on an `i64` fast path and are promoted to
//! big integers only when an intermediate result overflows.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Tables describing `Q(w)` for one odd order `p`.
///
/// Instances are created once per order and live for the rest of the process;
/// obtain them with [`CycField::new`].
pub struct CycField {
    p: u32,
    order: usize,
    degree: usize,
    /// `reduction[e]` holds `w^e` in the power basis, for `0 <= e < 4p`.
    reduction: Vec<Vec<i64>>,
    q_ints: OnceLock<Vec<CycScalar>>,
    q_facts: OnceLock<Vec<CycScalar>>,
    inv_q_facts: OnceLock<Vec<CycScalar>>,
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycField")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .finish()
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();

impl CycField {
    /// Returns the field for the odd order `p >= 3`, building it on first use.
    pub fn new(p: u32) -> Result<&'static CycField> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(AlgebraError::InvalidOrder(p));
        }
        let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        if let Some(field) = guard.get(&p) {
            return Ok(field);
        }
        let field: &'static CycField = Box::leak(Box::new(CycField::build(p)));
        guard.insert(p, field);
        Ok(field)
    }

    fn build(p: u32) -> CycField {
        let order = 4 * p as usize;
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut reduction = Vec::with_capacity(order);
        let mut current = vec![0i64; degree];
        current[0] = 1;
        for _ in 0..order {
            reduction.push(current.clone());
            // multiply by w and reduce with the monic minimal polynomial
            let top = current[degree - 1];
            for j in (1..degree).rev() {
                current[j] = current[j - 1];
            }
            current[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    current[j] -= top * phi[j];
                }
            }
        }
        CycField {
            p,
            order,
            degree,
            reduction,
            q_ints: OnceLock::new(),
            q_facts: OnceLock::new(),
            inv_q_facts: OnceLock::new(),
        }
    }

    /// The odd order `p` of `q`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Order `4p` of the generating root `w`.
    pub fn root_order(&self) -> usize {
        self.order
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&'static self) -> CycScalar {
        CycScalar::zero(self)
    }

    pub fn one(&'static self) -> CycScalar {
        CycScalar::from_int(self, 1)
    }

    pub fn int(&'static self, n: i64) -> CycScalar {
        CycScalar::from_int(self, n)
    }

    /// `w^e` for any integer `e`.
    pub fn root_pow(&'static self, e: i64) -> CycScalar {
        let e = e.rem_euclid(self.order as i64) as usize;
        CycScalar::from_small(self, self.reduction[e].clone(), 1)
    }

    /// `q^e` with `q = w^4`.
    pub fn q_pow(&'static self, e: i64) -> CycScalar {
        self.root_pow(4 * e)
    }

    /// `(q^{1/2})^e` with the square root `q^{1/2} = w^2 = exp(i pi / p)`.
    pub fn q_half_pow(&'static self, e: i64) -> CycScalar {
        self.root_pow(2 * e)
    }

    /// The imaginary unit `w^p`.
    pub fn i(&'static self) -> CycScalar {
        self.root_pow(self.p as i64)
    }

    /// `i^e`.
    pub fn i_pow(&'static self, e: i64) -> CycScalar {
        self.root_pow(self.p as i64 * e)
    }

    pub(crate) fn q_int_table(&'static self) -> &'static [CycScalar] {
        self.q_ints.get_or_init(|| {
            let p = self.p as i64;
            let denom = (self.q_pow(1) - self.q_pow(-1))
                .inv()
                .expect("q - q^-1 is nonzero for odd p");
            (0..p)
                .map(|n| &(self.q_pow(n) - self.q_pow(-n)) * &denom)
                .collect()
        })
    }

    pub(crate) fn q_fact_table(&'static self) -> &'static [CycScalar] {
        self.q_facts.get_or_init(|| {
            let ints = self.q_int_table();
            let mut out = Vec::with_capacity(self.p as usize);
            let mut acc = self.one();
            out.push(acc.clone());
            for n in 1..self.p as usize {
                acc = &acc * &ints[n];
                out.push(acc.clone());
            }
            out
        })
    }

    pub(crate) fn inv_q_fact_table(&'static self) -> &'static [CycScalar] {
        self.inv_q_facts.get_or_init(|| {
            self.q_fact_table()
                .iter()
                .map(|f| f.inv().expect("[n]! is nonzero below p"))
                .collect()
        })
    }

    /// Numeric value of `w`.
    pub fn root_numeric(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.order as f64)
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_div_monic(&poly, &divisor);
        }
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for j in 0..=dn {
            rem[i + j] -= c * den[j];
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

/// An exact element of `Q(w)`, `w = exp(2 pi i / 4p)`.
///
/// The representation is canonical (reduced power basis, coprime positive
/// denominator, trailing zeros trimmed), so structural equality is field
/// equality.
#[derive(Clone)]
pub struct CycScalar {
    field: &'static CycField,
    repr: Repr,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state)
    }
}

impl PartialOrd for CycScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.repr.cmp(&other.repr)
    }
}

/// Integer operations shared by the `i128` fast path and the `BigInt` path.
trait Arith: Clone {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn negate(&self) -> Self;
}

impl Arith for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Arith for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Divides out the content, makes the denominator positive, trims zeros.
fn normalize<T: Arith>(mut num: Vec<T>, mut den: T) -> (Vec<T>, T) {
    while num.last().is_some_and(|c| c.is_zero()) {
        num.pop();
    }
    if num.is_empty() {
        return (num, T::from_i64(1));
    }
    if den.is_negative() {
        den = den.negate();
        for c in num.iter_mut() {
            *c = c.negate();
        }
    }
    let mut g = den.clone();
    for c in &num {
        g = g.gcd(c);
    }
    if !g.is_zero() {
        let one = T::from_i64(1);
        let neg_one = T::from_i64(-1);
        // skip the division when the gcd is +-1
        if !(g.add(&neg_one).is_some_and(|x| x.is_zero()) || g.add(&one).is_some_and(|x| x.is_zero())) {
            for c in num.iter_mut() {
                *c = c.div_exact(&g);
            }
            den = den.div_exact(&g);
        }
    }
    (num, den)
}

fn add_generic<T: Arith>(a: &[T], ad: &T, b: &[T], bd: &T) -> Option<(Vec<T>, T)> {
    let g = ad.gcd(bd);
    let fa = bd.div_exact(&g);
    let fb = ad.div_exact(&g);
    let den = ad.mul(&fa)?;
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for j in 0..len {
        let x = match a.get(j) {
            Some(c) => c.mul(&fa)?,
            None => T::zero(),
        };
        let y = match b.get(j) {
            Some(c) => c.mul(&fb)?,
            None => T::zero(),
        };
        out.push(x.add(&y)?);
    }
    Some(normalize(out, den))
}

fn mul_generic<T: Arith>(
    field: &CycField,
    a: &[T],
    ad: &T,
    b: &[T],
    bd: &T,
) -> Option<(Vec<T>, T)> {
    if a.is_empty() || b.is_empty() {
        return Some((Vec::new(), T::from_i64(1)));
    }
    let mut prod = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] = prod[i + j].add(&x.mul(y)?)?;
        }
    }
    let reduced = reduce_generic(field, prod)?;
    let den = ad.mul(bd)?;
    Some(normalize(reduced, den))
}

fn reduce_generic<T: Arith>(field: &CycField, prod: Vec<T>) -> Option<Vec<T>> {
    let d = field.degree;
    if prod.len() <= d {
        return Some(prod);
    }
    let mut out: Vec<T> = vec![T::zero(); d];
    for (e, c) in prod.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < d {
            out[e] = out[e].add(&c)?;
        } else {
            for (j, r) in field.reduction[e].iter().enumerate() {
                if *r != 0 {
                    out[j] = out[j].add(&c.mul(&T::from_i64(*r))?)?;
                }
            }
        }
    }
    Some(out)
}

fn shift_generic<T: Arith>(field: &CycField, a: &[T], e: usize) -> Option<Vec<T>> {
    let d = field.degree;
    let mut out: Vec<T> = vec![T::zero(); d];
    for (j, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let target = (j + e) % field.order;
        for (l, r) in field.reduction[target].iter().enumerate() {
            if *r != 0 {
                out[l] = out[l].add(&c.mul(&T::from_i64(*r))?)?;
            }
        }
    }
    Some(out)
}

fn conj_generic<T: Arith>(field: &CycField, a: &[T]) -> Option<Vec<T>> {
    let d = field.degree;
    let mut out: Vec<T> = vec![T::zero(); d];
    for (j, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let target = (field.order - j) % field.order;
        for (l, r) in field.reduction[target].iter().enumerate() {
            if *r != 0 {
                out[l] = out[l].add(&c.mul(&T::from_i64(*r))?)?;
            }
        }
    }
    Some(out)
}

fn widen(num: &[i64], den: i64) -> (Vec<i128>, i128) {
    (num.iter().map(|&c| c as i128).collect(), den as i128)
}

fn to_big(num: &[i64], den: i64) -> (Vec<BigInt>, BigInt) {
    (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(den))
}

impl CycScalar {
    pub fn zero(field: &'static CycField) -> Self {
        CycScalar {
            field,
            repr: Repr::Small {
                num: Vec::new(),
                den: 1,
            },
        }
    }

    pub fn from_int(field: &'static CycField, n: i64) -> Self {
        Self::from_small(field, vec![n], 1)
    }

    /// The rational `num / den`.
    pub fn from_ratio(field: &'static CycField, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_small(field, vec![num], den)
    }

    pub fn from_rational(field: &'static CycField, r: &BigRational) -> Self {
        Self::from_big(field, vec![r.numer().clone()], r.denom().clone())
    }

    fn from_small(field: &'static CycField, num: Vec<i64>, den: i64) -> Self {
        let (num, den) = widen(&num, den);
        Self::from_wide(field, num, den)
    }

    fn from_wide(field: &'static CycField, num: Vec<i128>, den: i128) -> Self {
        let (num, den) = normalize(num, den);
        let fits = |v: &i128| i64::try_from(*v).is_ok();
        if fits(&den) && num.iter().all(fits) {
            CycScalar {
                field,
                repr: Repr::Small {
                    num: num.iter().map(|&c| c as i64).collect(),
                    den: den as i64,
                },
            }
        } else {
            Self::from_big(
                field,
                num.into_iter().map(BigInt::from).collect(),
                BigInt::from(den),
            )
        }
    }

    fn from_big(field: &'static CycField, num: Vec<BigInt>, den: BigInt) -> Self {
        let (num, den) = normalize(num, den);
        let small_den = den.to_i64();
        let small_num: Option<Vec<i64>> = num.iter().map(|c| c.to_i64()).collect();
        match (small_num, small_den) {
            (Some(num), Some(den)) => CycScalar {
                field,
                repr: Repr::Small { num, den },
            },
            _ => CycScalar {
                field,
                repr: Repr::Big { num, den },
            },
        }
    }

    /// Builds an element from rational coordinates in the power basis.
    pub fn from_coordinates(field: &'static CycField, coords: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let mut num = vec![<BigInt as Zero>::zero(); field.degree];
        for (j, c) in coords.iter().enumerate() {
            let idx = j % field.order;
            let scaled = c.numer() * (&den / c.denom());
            if j < field.degree {
                num[j] += scaled;
            } else {
                for (l, r) in field.reduction[idx].iter().enumerate() {
                    num[l] += &scaled * BigInt::from(*r);
                }
            }
        }
        Self::from_big(field, num, den)
    }

    /// Rational coordinates in the power basis (length = field degree).
    pub fn coordinates(&self) -> Vec<BigRational> {
        let (num, den) = self.big_parts();
        (0..self.field.degree)
            .map(|j| {
                let n = num.get(j).cloned().unwrap_or_else(<BigInt as Zero>::zero);
                BigRational::new(n, den.clone())
            })
            .collect()
    }

    fn big_parts(&self) -> (Vec<BigInt>, BigInt) {
        match &self.repr {
            Repr::Small { num, den } => to_big(num, *den),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.is_empty(),
            Repr::Big { num, .. } => num.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Small { num, den } if num.len() == 1 && num[0] == 1 && *den == 1)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let (num, den) = self.big_parts();
        match num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(num[0].clone(), den)),
            _ => None,
        }
    }

    fn check_field(&self, other: &Self) {
        assert!(
            std::ptr::eq(self.field, other.field),
            "mixing scalars of different cyclotomic fields"
        );
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        if let (Repr::Small { num: a, den: ad }, Repr::Small { num: b, den: bd }) =
            (&self.repr, &other.repr)
        {
            let (a, ad) = widen(a, *ad);
            let (b, bd) = widen(b, *bd);
            if let Some((n, d)) = add_generic(&a, &ad, &b, &bd) {
                return Self::from_wide(self.field, n, d);
            }
        }
        let (a, ad) = self.big_parts();
        let (b, bd) = other.big_parts();
        let (n, d) = add_generic(&a, &ad, &b, &bd).expect("bigint arithmetic is total");
        Self::from_big(self.field, n, d)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        if let (Repr::Small { num: a, den: ad }, Repr::Small { num: b, den: bd }) =
            (&self.repr, &other.repr)
        {
            let (a, ad) = widen(a, *ad);
            let (b, bd) = widen(b, *bd);
            if let Some((n, d)) = mul_generic(self.field, &a, &ad, &b, &bd) {
                return Self::from_wide(self.field, n, d);
            }
        }
        let (a, ad) = self.big_parts();
        let (b, bd) = other.big_parts();
        let (n, d) = mul_generic(self.field, &a, &ad, &b, &bd).expect("bigint arithmetic is total");
        Self::from_big(self.field, n, d)
    }

    /// Multiplies by `w^e`.
    pub fn mul_root_pow(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let e = e.rem_euclid(self.field.order as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        if let Repr::Small { num, den } = &self.repr {
            let (a, ad) = widen(num, *den);
            if let Some(n) = shift_generic(self.field, &a, e) {
                return Self::from_wide(self.field, n, ad);
            }
        }
        let (a, ad) = self.big_parts();
        let n = shift_generic(self.field, &a, e).expect("bigint arithmetic is total");
        Self::from_big(self.field, n, ad)
    }

    /// Complex conjugation, `w -> w^{-1}`.
    pub fn conj(&self) -> Self {
        if let Repr::Small { num, den } = &self.repr {
            let (a, ad) = widen(num, *den);
            if let Some(n) = conj_generic(self.field, &a) {
                return Self::from_wide(self.field, n, ad);
            }
        }
        let (a, ad) = self.big_parts();
        let n = conj_generic(self.field, &a).expect("bigint arithmetic is total");
        Self::from_big(self.field, n, ad)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Scales by an integer.
    pub fn scale_int(&self, k: i64) -> Self {
        self * &Self::from_int(self.field, k)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(self.field, &r.recip()));
        }
        let modulus = self.minimal_modulus();
        let value = self.coordinates();
        let inverse = poly_inverse_mod(&value, &modulus)?;
        Some(Self::from_coordinates(self.field, &inverse))
    }

    fn minimal_modulus(&self) -> Vec<BigRational> {
        // Phi_{4p} = w^d - (w^d reduced)
        let d = self.field.degree;
        let mut m: Vec<BigRational> = self.field.reduction[d]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(-c)))
            .collect();
        m.push(BigRational::one());
        m
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(self.field, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numeric value under `w -> exp(2 pi i / 4p)`.
    pub fn to_complex(&self) -> Complex64 {
        let w = self.field.root_numeric();
        let (num, den) = self.big_parts();
        let den = den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for c in &num {
            acc += power * c.to_f64().unwrap_or(f64::NAN);
            power *= w;
        }
        acc / den
    }

    /// Canonical text: `(c0 + c1*w + ...)/den`, integer coefficients, `w` the
    /// primitive `4p`-th root.
    pub fn render(&self) -> String {
        let (num, den) = self.big_parts();
        if num.is_empty() {
            return "0".to_string();
        }
        let mut body = String::new();
        for (j, c) in num.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let negative = Signed::is_negative(c);
            let abs = c.abs();
            if body.is_empty() {
                if negative {
                    body.push('-');
                }
            } else {
                body.push_str(if negative { " - " } else { " + " });
            }
            match j {
                0 => body.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        body.push_str(&abs.to_string());
                        body.push('*');
                    }
                    body.push('w');
                    if j > 1 {
                        body.push_str(&format!("^{j}"));
                    }
                }
            }
        }
        if den.is_one() {
            format!("({body})")
        } else {
            format!("({body})/{den}")
        }
    }
}

/// Inverse of `a` modulo the monic polynomial `m` over `Q`.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    fn trim(v: &mut Vec<BigRational>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }
    fn sub_scaled_shift(a: &mut Vec<BigRational>, b: &[BigRational], c: &BigRational, s: usize) {
        if a.len() < b.len() + s {
            a.resize(b.len() + s, BigRational::zero());
        }
        for (j, x) in b.iter().enumerate() {
            a[j + s] -= c * x;
        }
    }
    // extended Euclid tracking the cofactor of `a`
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let mut rem = r0.clone();
        let mut quot: Vec<BigRational> = Vec::new();
        let lead = r1.last().unwrap().clone();
        while rem.len() >= r1.len() && !rem.is_empty() {
            let shift = rem.len() - r1.len();
            let c = rem.last().unwrap() / &lead;
            if quot.len() <= shift {
                quot.resize(shift + 1, BigRational::zero());
            }
            quot[shift] += &c;
            sub_scaled_shift(&mut rem, &r1, &c, shift);
            rem.pop();
            trim(&mut rem);
        }
        // s_new = s0 - quot * s1
        let mut s_new = s0.clone();
        for (i, qc) in quot.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            sub_scaled_shift(&mut s_new, &s1, qc, i);
        }
        trim(&mut s_new);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    Some(s0.into_iter().map(|c| c / &g).collect())
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.add_ref(rhs)
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        self.add_ref(&rhs)
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.add_ref(&-rhs)
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        self.add_ref(&-rhs)
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.mul_ref(rhs)
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        let repr = match &self.repr {
            Repr::Small { num, den } => {
                if num.iter().all(|&c| c != i64::MIN) {
                    Repr::Small {
                        num: num.iter().map(|c| -c).collect(),
                        den: *den,
                    }
                } else {
                    let (n, d) = to_big(num, *den);
                    return CycScalar::from_big(self.field, n.into_iter().map(|c| -c).collect(), d);
                }
            }
            Repr::Big { num, den } => Repr::Big {
                num: num.iter().map(|c| -c).collect(),
                den: den.clone(),
            },
        };
        CycScalar {
            field: self.field,
            repr,
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_degrees() {
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(CycField::new(3).unwrap().degree(), 4);
        assert_eq!(CycField::new(5).unwrap().degree(), 8);
        assert_eq!(CycField::new(9).unwrap().degree(), 12);
    }

    #[test]
    fn even_order_rejected() {
        assert!(CycField::new(4).is_err());
        assert!(CycField::new(1).is_err());
    }

    #[test]
    fn q_has_exact_order_p() {
        for p in [3u32, 5, 7] {
            let f = CycField::new(p).unwrap();
            for k in 1..p as i64 {
                assert_ne!(f.q_pow(k), f.one());
            }
            assert_eq!(f.q_pow(p as i64), f.one());
            assert_eq!(f.q_half_pow(1).pow(2), f.q_pow(1));
            assert_eq!(f.i().pow(2), f.int(-1));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = CycField::new(5).unwrap();
        let x = &f.q_pow(1) + &f.int(3);
        let y = &(&x * &f.i()) - &f.q_half_pow(3);
        for v in [x, y] {
            let inv = v.inv().unwrap();
            assert_eq!(&v * &inv, f.one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn big_path_matches_small_path() {
        let f = CycField::new(3).unwrap();
        let big = f.int(i64::MAX);
        let sq = &big * &big;
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        assert_eq!(&sq - &sq, f.zero());
    }

    #[test]
    fn numeric_embedding_of_generators() {
        let f = CycField::new(7).unwrap();
        let i = f.i().to_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let q = f.q_pow(1).to_complex();
        let expected = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 7.0);
        assert!((q - expected).norm() < 1e-14);
    }
}
