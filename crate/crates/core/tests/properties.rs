//! Randomized properties of the scalars, the normal forms of C_q[SL(2)],
//! U_q(sl2) and the double, and their Hopf structure.

use proptest::prelude::*;
use qdouble::double::DoubleAlgebra;
use qdouble::freealg::{Gen, NcPoly, Word};
use qdouble::hopf::Algebra;
use qdouble::qgroups::QuantumGroup;
use qdouble::scalars::Scalar;

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -3i32..=3), 0..4).prop_map(|terms| {
        terms.iter().fold(Scalar::zero(), |acc, (c, k)| &acc + &(&Scalar::from_int(*c) * &Scalar::v_pow(*k)))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

fn word_in(alg: &'static Algebra, max: usize) -> impl Strategy<Value = Word> {
    let gens: Vec<Gen> = alg.gens();
    prop::collection::vec(prop::sample::select(gens), 0..=max).prop_map(|w| w.into_iter().collect())
}

fn a2() -> &'static Algebra {
    &QuantumGroup::get(2).unwrap().a
}

fn u2() -> &'static Algebra {
    &QuantumGroup::get(2).unwrap().u
}

fn double2() -> &'static Algebra {
    &DoubleAlgebra::get(2).unwrap().alg
}

fn word(w: &Word) -> NcPoly {
    NcPoly::from_word(w.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_form_a_field(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x - &x, Scalar::zero());
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        }
    }

    #[test]
    fn display_round_trips(x in scalar()) {
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn normal_form_is_idempotent_and_parses_back(w in word_in(a2(), 5)) {
        let a = a2();
        let nf = a.nf(&word(&w));
        prop_assert_eq!(a.nf(&nf), nf.clone());
        prop_assert_eq!(a.nf(&a.parse(&a.format(&nf)).unwrap()), nf);
    }

    #[test]
    fn coordinate_ring_is_associative(x in word_in(a2(), 3), y in word_in(a2(), 3), z in word_in(a2(), 3)) {
        let a = a2();
        let (x, y, z) = (word(&x), word(&y), word(&z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn coproduct_and_counit_are_multiplicative(x in word_in(a2(), 2), y in word_in(a2(), 2)) {
        let a = a2();
        let sq = a.square();
        let xy = a.mul_words(&x, &y);
        prop_assert_eq!(a.coproduct(&xy), sq.mul(&a.coproduct_word(&x), &a.coproduct_word(&y)));
        prop_assert_eq!(a.counit(&xy), &a.counit_word(&x) * &a.counit_word(&y));
    }

    #[test]
    fn antipode_reverses_products(x in word_in(u2(), 2), y in word_in(u2(), 2)) {
        let u = u2();
        let lhs = u.antipode(&u.mul_words(&x, &y));
        let rhs = u.mul(&u.antipode_word(&y), &u.antipode_word(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_is_associative(x in word_in(double2(), 2), y in word_in(double2(), 2), z in word_in(double2(), 2)) {
        let d = double2();
        let (x, y, z) = (word(&x), word(&y), word(&z));
        prop_assert_eq!(d.mul(&d.mul(&x, &y), &z), d.mul(&x, &d.mul(&y, &z)));
    }

    #[test]
    fn double_coproduct_is_multiplicative(x in word_in(double2(), 2), y in word_in(double2(), 2)) {
        let d = double2();
        let sq = d.square();
        prop_assert_eq!(d.coproduct(&d.mul_words(&x, &y)), sq.mul(&d.coproduct_word(&x), &d.coproduct_word(&y)));
    }

    #[test]
    fn xi_is_multiplicative(x in word_in(double2(), 2), y in word_in(double2(), 2)) {
        let dd = DoubleAlgebra::get(2).unwrap();
        let xi = dd.map_xi().unwrap();
        let t = xi.target();
        prop_assert_eq!(xi.apply(&dd.alg.mul_words(&x, &y)), t.mul(&xi.apply_word(&x), &xi.apply_word(&y)));
    }
}
