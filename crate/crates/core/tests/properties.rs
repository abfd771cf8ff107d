mod common;

use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};
use proptest::strategy::Strategy as _;
use rand_chacha::ChaCha8Rng;
use redmachine::prelude::*;

use common::{all_engines, random_instance};

fn seeded() -> impl proptest::strategy::Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(common::rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn engines_agree_and_results_are_normal_forms(mut rng in seeded()) {
        let inst = random_instance(&mut rng);
        let expected = classic_reduce(&inst.g, &inst.basis, &inst.strategy).unwrap().normal_form;
        prop_assert!(is_normal_form(&expected, &inst.basis));
        for engine in all_engines() {
            let got = engine.reduce(&inst.g, &inst.basis, &inst.strategy).unwrap();
            prop_assert_eq!(&got.normal_form, &expected, "{}", engine);
        }
    }

    #[test]
    fn normal_form_modulo_groebner_basis_ignores_strategy(mut rng in seeded()) {
        let inst = random_instance(&mut rng);
        let ord = inst.basis.ord().clone();
        let gb = reduced_groebner_basis(inst.basis.generators(), &ord, &GroebnerConfig::default())
            .unwrap()
            .basis;
        let forms: Vec<Polynomial> = [Strategy::FirstDivisor, Strategy::MaxLpp, Strategy::LastDivisor]
            .iter()
            .map(|s| Engine::Cached.reduce(&inst.g, &gb, s).unwrap().normal_form)
            .collect();
        prop_assert!(forms.windows(2).all(|w| w[0] == w[1]));
        // g - NF(g) lies in the ideal
        let diff = &inst.g - &forms[0];
        prop_assert!(ideal_member(&diff, inst.basis.generators(), &ord, Engine::Classic).unwrap());
    }
}

#[test]
fn strategies_can_disagree_without_a_groebner_basis() {
    let ring = Ring::new(["x"]).unwrap();
    let f = vec![
        parse_polynomial("x - 1", &ring).unwrap(),
        parse_polynomial("x - 2", &ring).unwrap(),
    ];
    let basis = Basis::new(f, OrderingSpec::new(MonomialOrder::Lex, ring.clone())).unwrap();
    let g = parse_polynomial("x", &ring).unwrap();
    let first = Engine::Machine
        .reduce(&g, &basis, &Strategy::FirstDivisor)
        .unwrap();
    let last = Engine::Machine
        .reduce(&g, &basis, &Strategy::LastDivisor)
        .unwrap();
    assert_ne!(first.normal_form, last.normal_form);
}
