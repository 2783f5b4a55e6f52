use std::collections::{HashSet, VecDeque};
use std::path::Path;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pigen_core::arith::{is_pi_number, is_pi_prime_number, p_part, prime_divisors};
use pigen_core::bound::{read_bound_file, sporadic_bound};
use pigen_core::classes::ClassTable;
use pigen_core::engine::{
    construct_pi_pair, is_complement, normal_hall_subgroups, o_pi, quotient, schur_zassenhaus_complement, Epimorphism,
};
use pigen_core::sylow::sylow_generic;
use pigen_core::{GroupHandle, Limits, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group(max_n: usize) -> impl Strategy<Value = GroupHandle> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| GroupHandle::new(n, gens).unwrap())
    })
}

/// Every element, by breadth-first closure under right multiplication.
fn closure(n: usize, gens: &[Permutation]) -> HashSet<Vec<u32>> {
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.images().to_vec()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = &x * s;
            if seen.insert(y.images().to_vec()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    (0..1u64 << primes.len())
        .map(|m| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_inverse_and_associativity(a in perm(9), b in perm(9), c in perm(9)) {
        prop_assert_eq!((&a * &b).inverse(), &b.inverse() * &a.inverse());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn conjugation_and_cycle_text(a in perm(8), g in perm(8)) {
        let c = a.conjugate_by(&g);
        prop_assert_eq!(c.clone(), &(&g.inverse() * &a) * &g);
        prop_assert_eq!(c.cycle_type(), a.cycle_type());
        prop_assert!(a.pow_big(&a.order()).is_identity());
        prop_assert_eq!(Permutation::parse_cycles(&a.to_cycle_string(), 8).unwrap(), a);
    }

    #[test]
    fn chain_order_matches_closure(g in group(7)) {
        let all = closure(g.degree(), g.generators());
        prop_assert_eq!(g.order(), BigUint::from(all.len()));
        for x in all.iter().take(50) {
            prop_assert!(g.has(&Permutation::from_images(x.clone()).unwrap()));
        }
    }

    #[test]
    fn random_sylow_has_full_p_part(g in group(7), seed in any::<u64>()) {
        let limits = Limits::default();
        for p in prime_divisors(&g.order()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = sylow_generic(&g, p, &mut rng, &limits).unwrap();
            prop_assert_eq!(s.group.order(), p_part(&g.order(), p));
            prop_assert!(g.contains_group(&s.group));
        }
    }

    #[test]
    fn o_pi_is_normal_pi_and_idempotent(g in group(6)) {
        let limits = Limits::default();
        for pi in subsets(&prime_divisors(&g.order())) {
            let o = o_pi(&g, &pi, &limits).unwrap();
            prop_assert!(o.is_normal_in(&g));
            prop_assert!(is_pi_number(&o.order(), &pi));
            let f = quotient(&g, &o, &limits).unwrap();
            prop_assert_eq!(f.source().order(), f.target().order() * f.kernel().order());
            prop_assert!(o_pi(f.target(), &pi, &limits).unwrap().is_trivial());
        }
    }

    #[test]
    fn epimorphisms_respect_products(g in group(6), a in perm(6), b in perm(6)) {
        let limits = Limits::default();
        let n = g.degree();
        let (a, b) = (a.extend(n.max(6)), b.extend(n.max(6)));
        prop_assume!(n == 6);
        let x = g.normal_closure(&[g.generators()[0].clone()]);
        let f = quotient(&g, &x, &limits).unwrap();
        let members: Vec<Permutation> = [a, b].into_iter().filter(|p| g.has(p)).collect();
        for p in &members {
            for q in &members {
                prop_assert_eq!(f.image(&(p * q)), &f.image(p) * &f.image(q));
            }
        }
        let h = Epimorphism::from_images(&g, g.generators().iter().map(|s| f.image(s)).collect()).unwrap();
        prop_assert!(h.kernel().same_group(&x));
        for t in f.target().generators() {
            prop_assert_eq!(&h.image(&h.lift(t).unwrap()), t);
        }
    }

    #[test]
    fn complements_of_normal_hall_subgroups(g in group(6), seed in any::<u64>()) {
        let limits = Limits::default();
        for (_, k) in normal_hall_subgroups(&g, &limits).unwrap() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = schur_zassenhaus_complement(&g, &k, &mut rng, &limits).unwrap();
            prop_assert!(is_complement(&g, &k, &c));
        }
    }

    #[test]
    fn pi_pairs_generate(g in group(6), seed in any::<u64>()) {
        let limits = Limits::default();
        for pi in subsets(&prime_divisors(&g.order())) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pair = construct_pi_pair(&g, &pi, &mut rng, &limits).unwrap();
            prop_assert!(pair.certificate.generated && pair.certificate.recheck());
            prop_assert_eq!(&pair.certificate.joint_order, &g.order());
            prop_assert!(is_pi_number(&pair.p.order(), &pi));
            prop_assert!(is_pi_prime_number(&pair.r.order(), &pi));
            if pi == [2] {
                prop_assert!(&pair.r.order() % 2u32 == BigUint::from(1u32));
            }
        }
    }

    #[test]
    fn class_sizes_partition_the_group(g in group(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let table = ClassTable::build(&g, &mut rng, &Limits::default()).unwrap();
        let total: u64 = table.classes().iter().map(|c| c.size).sum();
        prop_assert_eq!(BigUint::from(total), g.order());
        for c in table.classes() {
            prop_assert!(&g.order() % c.size == BigUint::from(0u32));
            prop_assert_eq!(&table.class_of(&c.representative).unwrap().name, &c.name);
        }
    }

    #[test]
    fn bound_is_monotone_in_character_values(col in 0usize..3, class in 1usize..10, bump in 1u32..50) {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/bounds/m11.json");
        let input = read_bound_file(path).unwrap();
        let before = sporadic_bound(&input);
        let mut raised = input.clone();
        raised.maximals[col].values[class] += bump;
        let after = sporadic_bound(&raised);
        for (x, y) in before.rows.iter().zip(&after.rows) {
            prop_assert!(y.lhs >= x.lhs);
        }
        prop_assert!(after.rows[class - 1].lhs > before.rows[class - 1].lhs);
    }
}
