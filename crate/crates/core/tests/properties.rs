use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use bsq::automata::alphabet;
use bsq::bs::{BsAutomaton, BsEdge};
use bsq::compile::compile;
use bsq::group::{Gen, GeneratorWord, GroupContext, GroupElement};
use bsq::oracle::reachable_elements;
use bsq::pe;
use bsq::pe_regular::PeSet;
use bsq::succinct::{Circuit, SuccinctAutomaton};

fn base() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(10)]
}

fn raw_element() -> impl Strategy<Value = (i64, i64, i64)> {
    (-100_000i64..100_000, -3i64..6, -8i64..8)
}

fn build(ctx: &GroupContext, (n, e, m): (i64, i64, i64)) -> GroupElement {
    ctx.element(BigInt::from(n), e, m)
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::A), Just(Gen::AInv), Just(Gen::T), Just(Gen::TInv)]
}

fn word(max: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(gen(), 0..max).prop_map(GeneratorWord::new)
}

proptest! {
    #[test]
    fn group_laws(q in base(), x in raw_element(), y in raw_element(), z in raw_element()) {
        let c = GroupContext::new(q).unwrap();
        let (g, h, k) = (build(&c, x), build(&c, y), build(&c, z));
        prop_assert_eq!(c.multiply(&c.multiply(&g, &h), &k), c.multiply(&g, &c.multiply(&h, &k)));
        prop_assert_eq!(c.multiply(&g, &c.identity()), g.clone());
        prop_assert!(c.multiply(&g, &c.inverse(&g)).is_identity());
        prop_assert_eq!(c.inverse(&c.inverse(&g)), g);
    }

    #[test]
    fn words_evaluate_homomorphically(q in base(), u in word(12), v in word(12)) {
        let c = GroupContext::new(q).unwrap();
        prop_assert_eq!(c.eval_word(&u.concat(&v)), c.multiply(&c.eval_word(&u), &c.eval_word(&v)));
        prop_assert!(c.eval_word(&u.concat(&u.inverse())).is_identity());
        prop_assert_eq!(GeneratorWord::from_text(&u.to_text()).unwrap(), u);
    }

    #[test]
    fn word_magnitude(q in base(), w in word(16)) {
        let c = GroupContext::new(q).unwrap();
        prop_assert!(c.abs_le_power(&c.eval_word(&w), 2 * w.len() as i64));
    }

    #[test]
    fn pe_round_trip(q in base(), x in raw_element()) {
        let c = GroupContext::new(q).unwrap();
        let g = build(&c, x);
        let w = pe::encode(&c, &g);
        prop_assert!(w.is_canonical());
        prop_assert_eq!(pe::decode(&c, &w).unwrap(), g.clone());
        let parsed = pe::PeWord::from_text(&w.to_text()).unwrap();
        prop_assert_eq!(&parsed, &w);
        // padding with zeros on both ends canonicalizes back
        let mut padded = w.clone();
        padded.digits.insert(0, 0);
        padded.digits.push(0);
        padded.radix_index += 1;
        padded.cursor_index += 1;
        prop_assert_eq!(pe::canonicalize(&c, &padded).unwrap(), w);
    }

    #[test]
    fn finite_set_algebra(xs in prop::collection::vec(raw_element(), 0..5), ys in prop::collection::vec(raw_element(), 0..5)) {
        let c = GroupContext::new(2).unwrap();
        let a: BTreeSet<GroupElement> = xs.iter().map(|&x| build(&c, x)).collect();
        let b: BTreeSet<GroupElement> = ys.iter().map(|&y| build(&c, y)).collect();
        let sa = PeSet::from_elements(c, &a.iter().cloned().collect::<Vec<_>>());
        let sb = PeSet::from_elements(c, &b.iter().cloned().collect::<Vec<_>>());
        let u = sa.union(&sb).unwrap();
        let i = sa.intersect(&sb).unwrap();
        let d = sa.difference(&sb).unwrap();
        for g in a.union(&b) {
            prop_assert_eq!(u.contains(g), true);
            prop_assert_eq!(i.contains(g), a.contains(g) && b.contains(g));
            prop_assert_eq!(d.contains(g), a.contains(g) && !b.contains(g));
            prop_assert_eq!(sa.complement().contains(g), !a.contains(g));
            prop_assert_eq!(sa.inverse().contains(&c.inverse(g)), a.contains(g));
        }
        let prods: Vec<GroupElement> = a.iter().flat_map(|g| b.iter().map(|h| c.multiply(g, h))).collect();
        prop_assert_eq!(sa.product(&sb).unwrap(), PeSet::from_elements(c, &prods));
        prop_assert_eq!(PeSet::parse(&u.dump()).unwrap().dump(), u.dump());
    }

    #[test]
    fn succinct_text_round_trip(bits in 1u32..5, seed in any::<u64>(), words in prop::collection::vec(prop::collection::vec(0u32..2, 0..5), 1..8)) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut c = Circuit::new();
        let mut formula = |c: &mut Circuit| {
            let lits: Vec<u32> = (0..bits).flat_map(|i| [false, true].map(|p| (i, p))).filter(|_| rng.gen_bool(0.5)).map(|(i, p)| {
                let v = c.var(i, p);
                if i % 2 == 0 { v } else { c.not(v) }
            }).collect();
            let cube = c.and(lits);
            let other = c.var(0, true);
            c.or(vec![cube, other])
        };
        let phi = vec![formula(&mut c), formula(&mut c)];
        let eps = c.konst(false);
        let s = SuccinctAutomaton::new(bits, alphabet(["a", "b"]), c, phi, eps, 0, (1 << bits) - 1).unwrap();
        let t = SuccinctAutomaton::parse(&s.serialize()).unwrap();
        prop_assert_eq!(t.serialize(), s.serialize());
        for w in &words {
            prop_assert_eq!(t.otf_membership(w), s.otf_membership(w));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compile_contains_short_runs(n in 1usize..=3, edges in prop::collection::vec((0usize..3, gen(), 0usize..3), 1..7)) {
        let c = GroupContext::new(2).unwrap();
        let edges: Vec<BsEdge> = edges.into_iter().map(|(s, g, d)| BsEdge { src: s % n, dst: d % n, label: GeneratorWord::new(vec![g]) }).collect();
        let a = BsAutomaton::new(c, (0..n).map(|i| format!("s{i}")).collect(), edges, 0, n - 1).unwrap();
        let r = compile(&a).unwrap();
        for g in reachable_elements(&a, 8) {
            prop_assert!(r.contains(&g), "{} missing", g);
        }
    }
}
