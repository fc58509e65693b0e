//! Randomized algebraic invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qpoincare::duality::{pair, pair_tensor};
use qpoincare::expr::{parse, Parsed, Side};
use qpoincare::hopf_a::{a_antipode, a_coproduct, a_counit, a_star, AElement, AMonomial};
use qpoincare::hopf_ext::{e_coproduct, lift_a};
use qpoincare::hopf_u::{u_antipode, u_coproduct, u_counit, u_star, UElement, UMonomial};
use qpoincare::scalars::{CycField, CycScalar, ParamScalar};

fn field(p: u32) -> &'static CycField {
    CycField::new(p).unwrap()
}

fn scalar_strategy(p: u32) -> impl Strategy<Value = CycScalar> {
    let f = field(p);
    prop::collection::vec(-3i64..=3, f.degree()).prop_map(move |c| {
        let coords: Vec<BigRational> = c.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect();
        CycScalar::from_coordinates(f, &coords)
    })
}

fn a_strategy(p: u32) -> impl Strategy<Value = AElement> {
    let f = field(p);
    prop::collection::vec((0..p, 0..p, 0..p, -4i64..=4, 0i64..4), 0..4).prop_map(move |terms| {
        let mut x = AElement::zero(f);
        for (n, m, k, c, e) in terms {
            let c = &CycScalar::from_int(f, c) * &f.root_pow(e);
            x.add_term(AMonomial::new(n, m, k), ParamScalar::constant(c));
        }
        x
    })
}

fn u_strategy(p: u32) -> impl Strategy<Value = UElement> {
    let f = field(p);
    prop::collection::vec((0..2u32, 0..2u32, 0..p, 0..p, 0..p, -4i64..=4), 0..4).prop_map(move |terms| {
        let mut x = UElement::zero(f);
        for (t, s, n, m, k, c) in terms {
            x.add_term(UMonomial::new(t, s, n, m, k), ParamScalar::constant(CycScalar::from_int(f, c)));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_is_a_field((a, b, c) in prop::sample::select(vec![3u32, 5, 7])
        .prop_flat_map(|p| (scalar_strategy(p), scalar_strategy(p), scalar_strategy(p))))
    {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let err = ((&a * &b).to_complex() - a.to_complex() * b.to_complex()).norm();
        prop_assert!(err < 1e-9, "embedding error {}", err);
    }

    #[test]
    fn reduced_group_algebra(x in a_strategy(5), y in a_strategy(5), z in a_strategy(5)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(a_coproduct(&(&x * &y)), &a_coproduct(&x) * &a_coproduct(&y));
        prop_assert_eq!(a_counit(&(&x * &y)), &a_counit(&x) * &a_counit(&y));
        prop_assert_eq!(a_antipode(&(&x * &y)), &a_antipode(&y) * &a_antipode(&x));
        prop_assert_eq!(a_star(&(&x * &y)), &a_star(&y) * &a_star(&x));
        prop_assert_eq!(a_star(&a_star(&x)), x.clone());
    }

    #[test]
    fn dual_algebra(x in u_strategy(3), y in u_strategy(3), z in u_strategy(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(u_coproduct(&(&x * &y)), &u_coproduct(&x) * &u_coproduct(&y));
        prop_assert_eq!(u_counit(&(&x * &y)), &u_counit(&x) * &u_counit(&y));
        prop_assert_eq!(u_antipode(&(&x * &y)), &u_antipode(&y) * &u_antipode(&x));
        prop_assert_eq!(u_star(&(&x * &y)), &u_star(&y) * &u_star(&x));
    }

    #[test]
    fn pairing_is_a_duality(phi in u_strategy(3), psi in u_strategy(3), a in a_strategy(3), b in a_strategy(3)) {
        let (fa, fb) = (lift_a(&a), lift_a(&b));
        // <phi psi, F> = <phi (x) psi, Delta F>
        prop_assert_eq!(pair(&(&phi * &psi), &fa), pair_tensor(&phi, &psi, &e_coproduct(&fa)));
        // <Delta phi, F (x) G> = <phi, F G>
        let mut split = ParamScalar::zero(phi.field());
        for ((l, r), c) in u_coproduct(&phi).terms() {
            let l = UElement::monomial(phi.field(), *l);
            let r = UElement::monomial(phi.field(), *r);
            split = &split + &(&(&pair(&l, &fa) * &pair(&r, &fb)) * c);
        }
        prop_assert_eq!(split, pair(&phi, &(&fa * &fb)));
    }

    #[test]
    fn rendering_parses_back(x in a_strategy(7), y in u_strategy(5)) {
        let xs = Parsed::A(lift_a(&x));
        prop_assert_eq!(parse(field(7), &xs.render(), Side::A).unwrap(), xs);
        let ys = Parsed::U(y);
        prop_assert_eq!(parse(field(5), &ys.render(), Side::U).unwrap(), ys);
    }
}
