mod support;

use proptest::prelude::*;
use starcoh::arrows::System;
use starcoh::cutelim::{eliminate_with, Options, Strategy};
use starcoh::{batch, denote, gentzenize, graph_of, parse_formula, parse_net, parse_term, random, BrauerArrow};
use support::{classes, closure_compose, rng};

fn system() -> impl proptest::strategy::Strategy<Value = System> {
    prop_oneof![Just(System::Ds), Just(System::Pn), Just(System::S)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_text_roundtrip(seed in any::<u64>(), sys in system(), n in 1usize..7) {
        let a = random::formula(&mut rng(seed), sys, n);
        prop_assert_eq!(a.letter_count(), n);
        let back = parse_formula(&a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn term_text_roundtrip(seed in any::<u64>(), sys in system()) {
        let t = random::term(&mut rng(seed), sys, 5, 8);
        let back = parse_term(&t.to_string()).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert!(t.type_of().is_ok());
    }

    #[test]
    fn net_text_roundtrip(seed in any::<u64>()) {
        let n = random::cut_net(&mut rng(seed), 4, 2);
        let back = parse_net(&n.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), n.to_string());
    }

    #[test]
    fn brauer_json_roundtrip(seed in any::<u64>(), m in 0usize..7, n in 0usize..7) {
        prop_assume!((m + n) % 2 == 0);
        let b = random::brauer(&mut rng(seed), m, n);
        prop_assert_eq!(BrauerArrow::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn compose_agrees_with_closure(seed in any::<u64>()) {
        let (r, p, _) = random::brauer_triple(&mut rng(seed), 8);
        let c = BrauerArrow::compose(&p, &r).unwrap();
        prop_assert_eq!(classes(&c), closure_compose(&p, &r));
    }

    #[test]
    fn graph_sizes_follow_letters(seed in any::<u64>(), sys in system()) {
        let t = random::term(&mut rng(seed), sys, 5, 10);
        let (a, b) = t.type_of().unwrap();
        let g = graph_of(&t).unwrap();
        prop_assert_eq!((g.source(), g.target()), (a.letter_count(), b.letter_count()));
    }

    #[test]
    fn mutation_keeps_type_and_graph(seed in any::<u64>(), sys in system()) {
        let mut g = rng(seed);
        let t = random::term(&mut g, sys, 4, 6);
        let (m, _) = random::mutate(&mut g, &t, sys, 3);
        prop_assert_eq!(m.type_of().unwrap(), t.type_of().unwrap());
        prop_assert_eq!(graph_of(&m).unwrap(), graph_of(&t).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strategies_agree(seed in any::<u64>()) {
        let n = random::cut_net(&mut rng(seed), 4, 2);
        let g = graph_of(&denote(&n)).unwrap();
        for strategy in [Strategy::GSideFirst, Strategy::FSideFirst] {
            let (out, _) = eliminate_with(&n, Options { strategy, checked: true }).unwrap();
            prop_assert!(out.is_cut_free());
            prop_assert_eq!(graph_of(&denote(&out)).unwrap(), g.clone());
        }
    }

    #[test]
    fn denotation_of_gentzenized_term(seed in any::<u64>()) {
        let t = random::term(&mut rng(seed), System::S, 4, 8);
        let d = denote(&gentzenize(&t).unwrap());
        prop_assert_eq!(d.type_of().unwrap(), t.type_of().unwrap());
        prop_assert_eq!(graph_of(&d).unwrap(), graph_of(&t).unwrap());
    }
}

#[test]
fn batch_matches_sequential() {
    let mut g = rng(21);
    let terms: Vec<_> = (0..50).map(|_| random::term(&mut g, System::S, 5, 10)).collect();
    assert_eq!(batch::graphs(&terms), batch::graphs_seq(&terms));
}
