use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use recsym::checker::{sample_le_right, SampleConfig};
use recsym::expr::{evaluate, parse, Value};
use recsym::pauli::{embed, extract};
use recsym::{AnyQuat, Backend, GaussianRational, Quat4, Scalar};

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        rational().prop_map(GaussianRational::real),
        (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im)),
    ]
}

fn quat() -> impl Strategy<Value = Quat4<GaussianRational>> {
    (gaussian(), gaussian(), gaussian(), gaussian()).prop_map(|(s, a, b, c)| Quat4::new(s, [a, b, c]))
}

/// Right operands with a rational square-root radicand, drawn by the
/// checker's own sampler at arbitrary seeds and positions.
fn le_right() -> impl Strategy<Value = Quat4<GaussianRational>> {
    (any::<u64>(), 0u64..10_000).prop_map(|(seed, pos)| {
        let cfg = SampleConfig { seed, ..SampleConfig::default() };
        sample_le_right(&cfg, pos)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conj_is_an_involution(a in quat()) {
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn rs_is_associative(a in quat(), b in quat(), c in quat()) {
        prop_assert_eq!(a.rs_compose(&b).rs_compose(&c), a.rs_compose(&b.rs_compose(&c)));
    }

    #[test]
    fn embed_is_a_homomorphism(a in quat(), b in quat()) {
        prop_assert_eq!(embed(&a).mat_mul(&embed(&b)), embed(&a.rs_compose(&b)));
    }

    #[test]
    fn extract_inverts_embed(a in quat()) {
        prop_assert_eq!(extract(&embed(&a)), a);
    }

    #[test]
    fn det_of_embedding_is_qform(a in quat()) {
        prop_assert_eq!(embed(&a).det(), a.qform());
    }

    #[test]
    fn rs_is_multiplicative(a in quat(), b in quat()) {
        prop_assert_eq!(a.rs_compose(&b).qform(), a.qform() * b.qform());
    }

    #[test]
    fn le_is_multiplicative(a in quat(), b in le_right()) {
        let ab = a.le_compose(&b).unwrap();
        prop_assert_eq!(ab.qform(), a.qform() * b.qform());
    }

    #[test]
    fn rs_commutator_is_twice_the_cross_term(a in quat(), b in quat()) {
        let diff = a.rs_compose(&b).sub(&b.rs_compose(&a));
        let two_i = GaussianRational::i() + GaussianRational::i();
        let expected = recsym::scalar::cross(&a.v, &b.v).map(|x| two_i.clone() * x);
        prop_assert!(diff.s.is_zero());
        prop_assert_eq!(diff.v, expected);
    }

    #[test]
    fn printed_quats_reparse_exactly(a in quat()) {
        let text = a.to_string();
        let expr = parse(&text).unwrap();
        let value = evaluate(&expr, &[], Backend::Exact).unwrap();
        prop_assert_eq!(value, Value::Quat(AnyQuat::Exact(a)));
    }

    #[test]
    fn printed_float_quats_reparse_exactly(re in prop::array::uniform4(-1e6f64..1e6), im in prop::array::uniform4(-1e6f64..1e6)) {
        let c = |k: usize| num_complex::Complex64::new(re[k], im[k]);
        let a = Quat4::new(c(0), [c(1), c(2), c(3)]);
        let value = evaluate(&parse(&a.to_string()).unwrap(), &[], Backend::Float).unwrap();
        prop_assert_eq!(value, Value::Quat(AnyQuat::Float(a)));
    }

    #[test]
    fn printed_expressions_reparse_to_the_same_tree(a in quat(), b in quat(), pick in 0usize..6) {
        let source = match pick {
            0 => format!("le({a}, X)"),
            1 => format!("rs(conj({a}), {b})"),
            2 => format!("qform(rs({a}, {b}))"),
            3 => format!("det(embed(cross({a}, {b})))"),
            4 => format!("le(boost(-3/5, 0, 0), rs(X, {b}))"),
            _ => format!("conj(conj({a}))"),
        };
        let expr = parse(&source).unwrap();
        let again = parse(&expr.to_string()).unwrap();
        prop_assert_eq!(expr.without_spans(), again.without_spans());
    }
}
