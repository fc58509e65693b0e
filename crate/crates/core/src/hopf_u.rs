//! The dual quantum algebra generated by `p+`, `p-`, `kappa` with the central
//! elements `P+- = p+-^p`:
//!
//! ```text
//! p+ p- = p- p+        p+- kappa = q^{-+1} kappa p+-        kappa^p = 1
//! D(p+-) = p+- (x) kappa + kappa^{-1} (x) p+-                D(kappa) = kappa (x) kappa
//! S(p+-) = -q^{+-1} p+-     S(kappa) = kappa^{-1}     S(P+-) = -P+-
//! ```
//!
//! Elements are kept in the ordered basis `P+^t P-^s p+^n p-^m kappa^k`.

use crate::linear::{LinComb, Monomial, Tensor};
use crate::scalars::{CycField, ParamScalar, Sign};

/// `P+^t P-^s p+^n p-^m kappa^k` with `n, m, k` in `[0, p-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMonomial {
    pub t: u32,
    pub s: u32,
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl UMonomial {
    pub const ONE: UMonomial = UMonomial {
        t: 0,
        s: 0,
        n: 0,
        m: 0,
        k: 0,
    };

    pub fn new(t: u32, s: u32, n: u32, m: u32, k: u32) -> Self {
        UMonomial { t, s, n, m, k }
    }

    /// The `p^3` monomials without `P+-` factors.
    pub fn reduced(p: u32) -> impl Iterator<Item = UMonomial> {
        (0..p).flat_map(move |n| {
            (0..p).flat_map(move |m| (0..p).map(move |k| UMonomial::new(0, 0, n, m, k)))
        })
    }
}

impl Monomial for UMonomial {
    fn mul(&self, other: &Self, field: &'static CycField) -> Option<(i64, Self)> {
        let p = field.p();
        // kappa^k p+^n' p-^m' = q^{k(n' - m')} p+^n' p-^m' kappa^k
        let q_exp = self.k as i64 * (other.n as i64 - other.m as i64);
        let n = self.n + other.n;
        let m = self.m + other.m;
        Some((
            4 * q_exp,
            UMonomial {
                t: self.t + other.t + n / p,
                s: self.s + other.s + m / p,
                n: n % p,
                m: m % p,
                k: (self.k + other.k) % p,
            },
        ))
    }

    fn unit(_: &'static CycField) -> Self {
        UMonomial::ONE
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [
            ("P+", self.t),
            ("P-", self.s),
            ("p+", self.n),
            ("p-", self.m),
            ("kappa", self.k),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join(" ")
    }
}

pub type UElement = LinComb<UMonomial>;
pub type UTensor = Tensor<UMonomial, UMonomial>;

pub fn u_monomial(field: &'static CycField, t: u32, s: u32, n: u32, m: u32, k: i64) -> UElement {
    let p = field.p();
    // route through the product so that large exponents are carried
    let base = UElement::monomial(field, UMonomial::new(t, s, 0, 0, 0));
    let pp = p_gen(field, Sign::Plus).pow(n);
    let pm = p_gen(field, Sign::Minus).pow(m);
    let kk = UElement::monomial(
        field,
        UMonomial::new(0, 0, 0, 0, k.rem_euclid(p as i64) as u32),
    );
    &(&(&base * &pp) * &pm) * &kk
}

/// `p+` or `p-`.
pub fn p_gen(field: &'static CycField, sign: Sign) -> UElement {
    let m = match sign {
        Sign::Plus => UMonomial::new(0, 0, 1, 0, 0),
        Sign::Minus => UMonomial::new(0, 0, 0, 1, 0),
    };
    UElement::monomial(field, m)
}

/// The central element `P+` or `P-`.
pub fn big_p_gen(field: &'static CycField, sign: Sign) -> UElement {
    let m = match sign {
        Sign::Plus => UMonomial::new(1, 0, 0, 0, 0),
        Sign::Minus => UMonomial::new(0, 1, 0, 0, 0),
    };
    UElement::monomial(field, m)
}

/// `kappa^k` for any integer `k`.
pub fn kappa_pow(field: &'static CycField, k: i64) -> UElement {
    let p = field.p() as i64;
    UElement::monomial(field, UMonomial::new(0, 0, 0, 0, k.rem_euclid(p) as u32))
}

pub fn u_mul(x: &UElement, y: &UElement) -> UElement {
    x * y
}

fn generator_coproduct(field: &'static CycField, sign: Sign) -> UTensor {
    let p = p_gen(field, sign);
    &p.tensor(&kappa_pow(field, 1)) + &kappa_pow(field, -1).tensor(&p)
}

pub fn monomial_coproduct(field: &'static CycField, mono: &UMonomial) -> UTensor {
    let one = UElement::one(field);
    let bp = big_p_gen(field, Sign::Plus);
    let bm = big_p_gen(field, Sign::Minus);
    let dbp = &bp.tensor(&one) + &one.tensor(&bp);
    let dbm = &bm.tensor(&one) + &one.tensor(&bm);
    let mut out = dbp.pow(mono.t);
    out = &out * &dbm.pow(mono.s);
    out = &out * &generator_coproduct(field, Sign::Plus).pow(mono.n);
    out = &out * &generator_coproduct(field, Sign::Minus).pow(mono.m);
    let kk = UMonomial::new(0, 0, 0, 0, mono.k);
    &out * &UTensor::monomial(field, (kk, kk))
}

pub fn u_coproduct(x: &UElement) -> UTensor {
    let field = x.field();
    let mut out = UTensor::zero(field);
    for (m, c) in x.terms() {
        for (t, d) in monomial_coproduct(field, m).into_terms() {
            out.add_term(t, &d * c);
        }
    }
    out
}

pub fn u_counit(x: &UElement) -> ParamScalar {
    let field = x.field();
    x.functional(|m| {
        if m.t == 0 && m.s == 0 && m.n == 0 && m.m == 0 {
            ParamScalar::one(field)
        } else {
            ParamScalar::zero(field)
        }
    })
}

/// `S(P+^t P-^s p+^n p-^m kappa^k) = S(kappa)^k S(p-)^m S(p+)^n S(P-)^s S(P+)^t`.
pub fn monomial_antipode(field: &'static CycField, mono: &UMonomial) -> UElement {
    let s_p = |sign: Sign| {
        p_gen(field, sign).scale(&ParamScalar::constant(-&field.q_pow(sign.value())))
    };
    let minus_one = ParamScalar::int(field, -1);
    let mut out = kappa_pow(field, -(mono.k as i64));
    out = &out * &s_p(Sign::Minus).pow(mono.m);
    out = &out * &s_p(Sign::Plus).pow(mono.n);
    out = &out * &big_p_gen(field, Sign::Minus).scale(&minus_one).pow(mono.s);
    &out * &big_p_gen(field, Sign::Plus).scale(&minus_one).pow(mono.t)
}

pub fn u_antipode(x: &UElement) -> UElement {
    let field = x.field();
    x.linear_map(|m| monomial_antipode(field, m))
}

/// Antilinear anti-homomorphism fixing `p+-`, `kappa` and `P+-`.
pub fn u_star(x: &UElement) -> UElement {
    let field = x.field();
    let mut out = UElement::zero(field);
    for (m, c) in x.terms() {
        let mut r = kappa_pow(field, m.k as i64);
        r = &r * &p_gen(field, Sign::Minus).pow(m.m);
        r = &r * &p_gen(field, Sign::Plus).pow(m.n);
        r = &r * &UElement::monomial(field, UMonomial::new(m.t, m.s, 0, 0, 0));
        for (mono, d) in r.into_terms() {
            out.add_term(mono, &d * &c.conj());
        }
    }
    out
}

/// `eps+- = -q^{-+1/2} p+- kappa^{-1}`.
pub fn epsilon_ops(field: &'static CycField, sign: Sign) -> UElement {
    let c = -&field.q_half_pow(-sign.value());
    (&p_gen(field, sign) * &kappa_pow(field, -1)).scale(&ParamScalar::constant(c))
}

/// `p'+ = q^{-1/2} p+ kappa^{-1}` and `p'- = q^{-1/2} p- kappa`.
pub fn plane_wave_ops(field: &'static CycField, sign: Sign) -> UElement {
    let k = match sign {
        Sign::Plus => -1,
        Sign::Minus => 1,
    };
    (&p_gen(field, sign) * &kappa_pow(field, k))
        .scale(&ParamScalar::constant(field.q_half_pow(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> &'static CycField {
        CycField::new(p).unwrap()
    }

    #[test]
    fn relations() {
        for p in [3, 5] {
            let field = f(p);
            let pp = p_gen(field, Sign::Plus);
            let pm = p_gen(field, Sign::Minus);
            let k = kappa_pow(field, 1);
            let qm1 = ParamScalar::constant(field.q_pow(-1));
            assert_eq!(&pp * &k, (&k * &pp).scale(&qm1));
            assert_eq!(&pm * &k, (&k * &pm).scale(&ParamScalar::constant(field.q_pow(1))));
            assert_eq!(&pp * &pm, &pm * &pp);
            assert_eq!(&pp.pow(p - 1) * &pp, big_p_gen(field, Sign::Plus));
            assert_eq!(&kappa_pow(field, p as i64 - 1) * &k, UElement::one(field));
        }
    }

    #[test]
    fn coproduct_values() {
        let field = f(3);
        let k = UMonomial::new(0, 0, 0, 0, 1);
        assert_eq!(
            u_coproduct(&kappa_pow(field, 1)),
            UTensor::monomial(field, (k, k))
        );
        let bp = big_p_gen(field, Sign::Plus);
        let one = UElement::one(field);
        assert_eq!(u_coproduct(&bp), &bp.tensor(&one) + &one.tensor(&bp));
        for p in [3, 5] {
            let field = f(p);
            for s in [Sign::Plus, Sign::Minus] {
                let d = u_coproduct(&p_gen(field, s));
                assert_eq!(d.pow(p), u_coproduct(&big_p_gen(field, s)));
            }
        }
    }

    #[test]
    fn antipode_and_star() {
        let field = f(5);
        let pp = p_gen(field, Sign::Plus);
        assert_eq!(
            u_antipode(&pp),
            pp.scale(&ParamScalar::constant(-&field.q_pow(1)))
        );
        // S^2 is conjugation by kappa^2
        let conj = &(&kappa_pow(field, 2) * &pp) * &kappa_pow(field, -2);
        assert_eq!(u_antipode(&u_antipode(&pp)), conj);
        assert_eq!(conj, pp.scale(&ParamScalar::constant(field.q_pow(2))));
        let i = ParamScalar::constant(field.i());
        assert_eq!(u_star(&pp.scale(&i)), pp.scale(&(-&i)));
        assert_eq!(
            u_antipode(&big_p_gen(field, Sign::Minus)),
            -&big_p_gen(field, Sign::Minus)
        );
    }

    #[test]
    fn epsilon_values() {
        let field = f(3);
        let e = epsilon_ops(field, Sign::Plus);
        let expected = UElement::term(
            UMonomial::new(0, 0, 1, 0, 2),
            ParamScalar::constant(-&field.q_half_pow(-1)),
        );
        assert_eq!(e, expected);
        let star = u_star(&e);
        let reordered = (&kappa_pow(field, -1) * &p_gen(field, Sign::Plus))
            .scale(&ParamScalar::constant(-&field.q_half_pow(1)));
        assert_eq!(star, reordered);
    }

    #[test]
    fn casimirs() {
        for p in [3, 5] {
            let field = f(p);
            let pp = p_gen(field, Sign::Plus);
            let pm = p_gen(field, Sign::Minus);
            let c = &pp * &pm;
            for g in [&pp, &pm, &kappa_pow(field, 1)] {
                assert_eq!(&c * g, g * &c);
            }
            let lhs = &big_p_gen(field, Sign::Plus) * &big_p_gen(field, Sign::Minus);
            assert_eq!(lhs, (&pm * &pp).pow(p));
        }
    }
}
