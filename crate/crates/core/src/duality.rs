//! The pairing between the dual quantum algebra and the extended group
//! algebra, convolution products and the right representation `R`.
//!
//! The pairing is fixed on generators,
//!
//! ```text
//! <kappa^j, delta^k> = q^{jk}     <p+-, eta+-> = i q^{+-1/2}     <P+-, z+-> = i
//! ```
//!
//! and extended through `<phi psi, F> = <phi (x) psi, D(F)>`: a monomial of the
//! dual algebra is split into its leftmost generator and the rest, and the
//! coproduct of `F` is paired leg by leg. Results are memoized per order `p`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::hopf_a::{AElement, AMonomial};
use crate::hopf_ext::{e_monomial_coproduct, lift_a, EElement, EMonomial, ETensor};
use crate::hopf_u::{UElement, UMonomial};
use crate::scalars::{q_fact, CycField, CycScalar, ParamScalar, Sign};

/// Per-order pairing state: the field and the memo tables.
pub struct PairingContext {
    field: &'static CycField,
    memo: RwLock<HashMap<(UMonomial, EMonomial), ParamScalar>>,
    coproducts: RwLock<HashMap<EMonomial, Arc<ETensor>>>,
}

impl PairingContext {
    /// The shared context for the field of `field`.
    pub fn for_field(field: &'static CycField) -> Arc<PairingContext> {
        static CONTEXTS: OnceLock<Mutex<HashMap<u32, Arc<PairingContext>>>> = OnceLock::new();
        let map = CONTEXTS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
        guard
            .entry(field.p())
            .or_insert_with(|| {
                Arc::new(PairingContext {
                    field,
                    memo: RwLock::new(HashMap::new()),
                    coproducts: RwLock::new(HashMap::new()),
                })
            })
            .clone()
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    fn coproduct(&self, f: &EMonomial) -> Arc<ETensor> {
        if let Some(t) = self.coproducts.read().unwrap().get(f) {
            return t.clone();
        }
        let t = Arc::new(e_monomial_coproduct(self.field, f));
        self.coproducts
            .write()
            .unwrap()
            .insert(f.clone(), t.clone());
        t
    }

    /// `<phi, F>` on basis monomials.
    pub fn pair_monomials(&self, phi: &UMonomial, f: &EMonomial) -> ParamScalar {
        let field = self.field;
        if let Some(direct) = self.pair_direct(phi, f) {
            return direct;
        }
        let key = (*phi, f.clone());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let (head, rest) = split_first(phi);
        let mut acc = ParamScalar::zero(field);
        for ((f1, f2), c) in self.coproduct(f).terms() {
            let h = self.pair_generator(&head, f1);
            if h.is_zero() {
                continue;
            }
            let r = self.pair_monomials(&rest, f2);
            if r.is_zero() {
                continue;
            }
            acc = &acc + &(&(&h * &r) * c);
        }
        self.memo.write().unwrap().insert(key, acc.clone());
        acc
    }

    /// Cases that need no coproduct: the unit and pure powers of `kappa`.
    fn pair_direct(&self, phi: &UMonomial, f: &EMonomial) -> Option<ParamScalar> {
        if phi.t == 0 && phi.s == 0 && phi.n == 0 && phi.m == 0 {
            return Some(self.pair_generator(phi, f));
        }
        // the pairing preserves the eta degrees
        let field = self.field;
        if phi.n != f.a.n || phi.m != f.a.m {
            return Some(ParamScalar::zero(field));
        }
        None
    }

    /// `<g, F>` for `g` one of `P+`, `P-`, `p+`, `p-` or a power of `kappa`.
    fn pair_generator(&self, g: &UMonomial, f: &EMonomial) -> ParamScalar {
        let field = self.field;
        let zero = ParamScalar::zero(field);
        let z = &f.z;
        let a = &f.a;
        if g.t == 1 || g.s == 1 {
            // primitive: only the z-part contributes, through its derivative at 0
            if a.n != 0 || a.m != 0 {
                return zero;
            }
            let sign = if g.t == 1 { Sign::Plus } else { Sign::Minus };
            let mut d = ParamScalar::zero(field);
            for (c, m) in z.derivative(sign) {
                if m.at_origin() {
                    d = &d + &c;
                }
            }
            return &d * &ParamScalar::constant(field.i());
        }
        if !z.at_origin() {
            return zero;
        }
        if g.n == 1 || g.m == 1 {
            let (sign, ok) = if g.n == 1 {
                (Sign::Plus, a.n == 1 && a.m == 0)
            } else {
                (Sign::Minus, a.n == 0 && a.m == 1)
            };
            if !ok {
                return zero;
            }
            // i q^{+-1/2} q^{k}, the kappa leg of the coproduct acting on delta^k
            let c = &(&field.i() * &field.q_half_pow(sign.value())) * &field.q_pow(a.k as i64);
            return ParamScalar::constant(c);
        }
        // kappa^j, a character: eta -> 0, delta -> q^j, f -> f(0)
        if a.n != 0 || a.m != 0 {
            return zero;
        }
        ParamScalar::constant(field.q_pow(g.k as i64 * a.k as i64))
    }
}

fn split_first(phi: &UMonomial) -> (UMonomial, UMonomial) {
    let mut rest = *phi;
    let head = if phi.t > 0 {
        rest.t -= 1;
        UMonomial::new(1, 0, 0, 0, 0)
    } else if phi.s > 0 {
        rest.s -= 1;
        UMonomial::new(0, 1, 0, 0, 0)
    } else if phi.n > 0 {
        rest.n -= 1;
        UMonomial::new(0, 0, 1, 0, 0)
    } else if phi.m > 0 {
        rest.m -= 1;
        UMonomial::new(0, 0, 0, 1, 0)
    } else {
        rest.k = 0;
        UMonomial::new(0, 0, 0, 0, phi.k)
    };
    (head, rest)
}

/// `<phi, F>`, bilinear.
pub fn pair(phi: &UElement, f: &EElement) -> ParamScalar {
    let field = phi.field();
    let ctx = PairingContext::for_field(field);
    let mut acc = ParamScalar::zero(field);
    for (u, cu) in phi.terms() {
        for (e, ce) in f.terms() {
            let v = ctx.pair_monomials(u, e);
            if !v.is_zero() {
                acc = &acc + &(&v * &(cu * ce));
            }
        }
    }
    acc
}

/// `<phi, a>` for a reduced element.
pub fn pair_reduced(phi: &UElement, a: &AElement) -> ParamScalar {
    pair(phi, &lift_a(a))
}

/// `<phi (x) psi, T> = sum <phi, T1> <psi, T2>`.
pub fn pair_tensor(phi: &UElement, psi: &UElement, t: &ETensor) -> ParamScalar {
    let field = t.field();
    let ctx = PairingContext::for_field(field);
    let mut acc = ParamScalar::zero(field);
    for ((l, r), c) in t.terms() {
        let mut left = ParamScalar::zero(field);
        for (u, cu) in phi.terms() {
            left = &left + &(&ctx.pair_monomials(u, l) * cu);
        }
        if left.is_zero() {
            continue;
        }
        let mut right = ParamScalar::zero(field);
        for (u, cu) in psi.terms() {
            right = &right + &(&ctx.pair_monomials(u, r) * cu);
        }
        acc = &acc + &(&(&left * &right) * c);
    }
    acc
}

/// `F <> phi = (phi (x) id) D(F)`.
pub fn conv_right(f: &EElement, phi: &UElement) -> EElement {
    let field = f.field();
    let ctx = PairingContext::for_field(field);
    let mut out = EElement::zero(field);
    for (e, ce) in f.terms() {
        let t = ctx.coproduct(e);
        let part = t.contract_left(|l| {
            let mut v = ParamScalar::zero(field);
            for (u, cu) in phi.terms() {
                v = &v + &(&ctx.pair_monomials(u, l) * cu);
            }
            v
        });
        out = &out + &part.scale(ce);
    }
    out
}

/// `phi <> F = (id (x) phi) D(F)`.
pub fn conv_left(phi: &UElement, f: &EElement) -> EElement {
    let field = f.field();
    let ctx = PairingContext::for_field(field);
    let mut out = EElement::zero(field);
    for (e, ce) in f.terms() {
        let t = ctx.coproduct(e);
        let part = t.contract_right(|r| {
            let mut v = ParamScalar::zero(field);
            for (u, cu) in phi.terms() {
                v = &v + &(&ctx.pair_monomials(u, r) * cu);
            }
            v
        });
        out = &out + &part.scale(ce);
    }
    out
}

/// The right representation `R(phi) F = F <> phi`; an anti-homomorphism.
pub fn right_rep(phi: &UElement, f: &EElement) -> EElement {
    conv_right(f, phi)
}

/// The `p^3 x p^3` matrix `<p+^n p-^m kappa^k, eta+^n' eta-^m' zeta(k')>`,
/// rows and columns in lexicographic order of the exponents.
pub fn reduced_pairing_matrix(field: &'static CycField) -> Vec<Vec<ParamScalar>> {
    let p = field.p();
    let columns: Vec<EElement> = AMonomial::all(p)
        .map(|a| {
            let z = crate::hopf_a::zeta_idempotent(field, a.k as i64);
            let eta = crate::hopf_a::a_monomial(field, a.n, a.m, 0);
            lift_a(&(&eta * &z))
        })
        .collect();
    UMonomial::reduced(p)
        .map(|u| {
            let phi = UElement::monomial(field, u);
            columns.iter().map(|c| pair(&phi, c)).collect()
        })
        .collect()
}

/// How the undeclared indices of the printed closed form are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormReading {
    /// `l = s`, and the `delta^k` shift is `n + m`; agrees with the recursion.
    Corrected,
    /// `l = s` throughout, including the shift `k + t + s`.
    Literal,
}

/// Closed-form value of `<P+^t P-^s p+^n p-^m kappa^k, z+^t' z-^s' eta+^n' eta-^m' zeta(k')>`.
pub fn closed_form_pairing(
    field: &'static CycField,
    phi: &UMonomial,
    target: (u32, u32, u32, u32, u32),
    reading: ClosedFormReading,
) -> CycScalar {
    let (t2, s2, n2, m2, k2) = target;
    let p = field.p() as i64;
    let UMonomial { t, s, n, m, k } = *phi;
    let shift = match reading {
        ClosedFormReading::Corrected => n + m,
        ClosedFormReading::Literal => t + s,
    } as i64;
    if n != n2 || m != m2 || t != t2 || s != s2 || (k as i64 + shift - k2 as i64).rem_euclid(p) != 0 {
        return field.zero();
    }
    let (n, m) = (n as i64, m as i64);
    let facts: i64 = (1..=t as i64).product::<i64>() * (1..=s as i64).product::<i64>();
    let c = &(&field.i_pow(n + m + (t + s) as i64) * &field.q_half_pow(n - m)) * &field.q_pow(-n * m);
    let qf = &q_fact(field, n).expect("n < p") * &q_fact(field, m).expect("m < p");
    (&c * &qf).scale_int(facts)
}

/// The basis element `z+^t z-^s eta+^n eta-^m zeta(k)` of the extended algebra.
pub fn zeta_basis_element(field: &'static CycField, target: (u32, u32, u32, u32, u32)) -> EElement {
    let (t, s, n, m, k) = target;
    let z = crate::hopf_ext::ZMonomial::poly(field, t, s);
    let a = &crate::hopf_a::a_monomial(field, n, m, 0) * &crate::hopf_a::zeta_idempotent(field, k as i64);
    let mut out = EElement::zero(field);
    for (mono, c) in a.into_terms() {
        out.add_term(EMonomial { a: mono, z: z.clone() }, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_a::{a_monomial, delta_pow, eta, zeta_idempotent};
    use crate::hopf_ext::{exp_z, z_gen};
    use crate::hopf_u::{big_p_gen, kappa_pow, p_gen};
    use crate::scalars::{q_fact, Param};

    fn f(p: u32) -> &'static CycField {
        CycField::new(p).unwrap()
    }

    #[test]
    fn generator_table() {
        let field = f(5);
        let i = field.i();
        assert_eq!(
            pair_reduced(&p_gen(field, Sign::Plus), &eta(field, Sign::Plus)),
            ParamScalar::constant(&i * &field.q_half_pow(1))
        );
        assert_eq!(
            pair_reduced(&p_gen(field, Sign::Minus), &eta(field, Sign::Minus)),
            ParamScalar::constant(&i * &field.q_half_pow(-1))
        );
        assert!(pair_reduced(&p_gen(field, Sign::Plus), &eta(field, Sign::Minus)).is_zero());
        assert_eq!(
            pair_reduced(&kappa_pow(field, 2), &delta_pow(field, 3)),
            ParamScalar::constant(field.q_pow(6))
        );
        assert_eq!(
            pair(&big_p_gen(field, Sign::Plus), &z_gen(field, Sign::Plus)),
            ParamScalar::constant(i.clone())
        );
        assert!(pair(&big_p_gen(field, Sign::Plus), &z_gen(field, Sign::Minus)).is_zero());
    }

    #[test]
    fn kappa_against_zeta() {
        let field = f(3);
        for n in 0..3 {
            for m in 0..3 {
                let v = pair_reduced(&kappa_pow(field, n), &zeta_idempotent(field, m));
                assert_eq!(v.is_one(), n == m);
                assert_eq!(v.is_zero(), n != m);
            }
        }
    }

    #[test]
    fn powers_of_p() {
        for p in [3, 5] {
            let field = f(p);
            for s in [Sign::Plus, Sign::Minus] {
                for n in 0..p {
                    for m in 0..p {
                        let phi = p_gen(field, s).pow(n);
                        let a = eta(field, s).pow(m);
                        let v = pair_reduced(&phi, &a);
                        if n == m {
                            let c = &(&field.i_pow(n as i64)
                                * &field.q_half_pow(s.value() * n as i64))
                                * &q_fact(field, n as i64).unwrap();
                            assert_eq!(v, ParamScalar::constant(c));
                        } else {
                            assert!(v.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn big_p_powers() {
        let field = f(3);
        let zp = z_gen(field, Sign::Plus);
        for n in 0..4u32 {
            for m in 0..4u32 {
                let v = pair(&big_p_gen(field, Sign::Plus).pow(n), &zp.pow(m));
                if n == m {
                    let fact: i64 = (1..=n as i64).product();
                    let c = field.i_pow(n as i64).scale_int(fact);
                    assert_eq!(v, ParamScalar::constant(c));
                } else {
                    assert!(v.is_zero(), "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn right_rep_rules() {
        let field = f(5);
        let i = field.i();
        for k in 1..5 {
            let r = right_rep(&p_gen(field, Sign::Plus), &lift_a(&eta(field, Sign::Plus).pow(k)));
            let c = &(&i * &field.q_half_pow(1)) * &crate::scalars::q_int(field, k as i64);
            assert_eq!(r, lift_a(&eta(field, Sign::Plus).pow(k - 1)).scale(&ParamScalar::constant(c)));
        }
        for m in 0..5 {
            let r = right_rep(&kappa_pow(field, 1), &lift_a(&delta_pow(field, m)));
            assert_eq!(r, lift_a(&delta_pow(field, m)).scale(&ParamScalar::constant(field.q_pow(m))));
        }
        let u = ParamScalar::param(field, Param::ChiPlus);
        let zero = ParamScalar::zero(field);
        let e = exp_z(&u, &zero);
        let r = right_rep(&big_p_gen(field, Sign::Plus), &e);
        assert_eq!(r, e.scale(&(&u * &ParamScalar::constant(i.clone()))));
        assert_eq!(right_rep(&kappa_pow(field, 1), &e), e);
        let f1 = right_rep(&UElement::one(field), &e);
        assert_eq!(f1, e);
        let _ = a_monomial(field, 0, 0, 0);
    }

    #[test]
    fn closed_form_matches_recursion() {
        let field = f(3);
        let mut literal_mismatches = 0;
        for t in 0..3 {
            for s in 0..2 {
                for phi in UMonomial::reduced(3) {
                    let phi = UMonomial { t, s, ..phi };
                    let u = UElement::monomial(field, phi);
                    for t2 in 0..3 {
                        for s2 in 0..2 {
                            for k2 in 0..3 {
                                let target = (t2, s2, phi.n, phi.m, k2);
                                let v = pair(&u, &zeta_basis_element(field, target));
                                let c = closed_form_pairing(field, &phi, target, ClosedFormReading::Corrected);
                                assert_eq!(v, ParamScalar::constant(c), "{phi:?} {target:?}");
                                let l = closed_form_pairing(field, &phi, target, ClosedFormReading::Literal);
                                if v != ParamScalar::constant(l) {
                                    literal_mismatches += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(literal_mismatches > 0);
    }
}
