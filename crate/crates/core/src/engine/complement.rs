//! Complements to normal Hall subgroups.

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::arith::{is_pi_number, pi_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::Permutation;

use super::normal::o_pi;

/// The part of `x` whose order is built from the primes in `pi`.
pub(crate) fn pi_part_element(x: &Permutation, pi: &[u64]) -> Permutation {
    let o = x.order();
    let keep = pi_part(&o, pi);
    x.pow_big(&(o / keep))
}

/// A complement to the normal Hall subgroup `k` of `g`, by greedy random
/// accumulation of elements of order dividing `[G:K]`, with restarts.
pub fn schur_zassenhaus_complement<R: Rng + ?Sized>(
    g: &GroupHandle,
    k: &GroupHandle,
    rng: &mut R,
    limits: &Limits,
) -> Result<GroupHandle> {
    g.check_subgroup(k)?;
    k.check_normal_in(g)?;
    let order = g.order();
    let k_order = k.order();
    let index = &order / &k_order;
    if !k_order.gcd(&index).is_one() {
        return Err(Error::InvalidInput(format!(
            "not a Hall subgroup: |K| = {k_order}, [G:K] = {index}"
        )));
    }
    if index.is_one() {
        return Ok(GroupHandle::trivial(g.degree()));
    }
    if k.is_trivial() {
        return Ok(g.clone());
    }
    let primes = prime_divisors(&index);
    let mut draws = 0usize;
    let budget = limits.trials.max(1);
    while draws < budget {
        let mut c = GroupHandle::trivial(g.degree());
        let mut stalls = 0;
        while c.order() < index && stalls < 32 && draws < budget {
            draws += 1;
            let x = pi_part_element(&g.random_element(rng), &primes);
            if x.is_identity() || c.has(&x) {
                stalls += 1;
                continue;
            }
            let next = c.subgroup(c.nontrivial_generators().into_iter().chain([x]).collect());
            if (&index % next.order()).is_zero() {
                c = next;
                stalls = 0;
            } else {
                stalls += 1;
            }
        }
        if c.order() == index {
            debug_assert!(is_complement(g, k, &c));
            return Ok(c);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no complement of order {index} found in {budget} draws"
    )))
}

/// `|C|·|K| = |G|` and `C ∩ K = 1`, checked over the elements of `C`.
pub fn is_complement(g: &GroupHandle, k: &GroupHandle, c: &GroupHandle) -> bool {
    if !g.contains_group(c) || c.order() * k.order() != g.order() {
        return false;
    }
    let Ok(elts) = c.enumerate(u64::MAX) else { return false };
    elts.iter().filter(|x| k.has(x)).count() == 1
}

/// Every proper nontrivial normal Hall subgroup, with its prime set. A normal
/// Hall pi-subgroup is `O_pi(G)`, so each prime subset is tried once.
pub fn normal_hall_subgroups(g: &GroupHandle, limits: &Limits) -> Result<Vec<(Vec<u64>, GroupHandle)>> {
    let order = g.order();
    let primes = prime_divisors(&order);
    let mut out = Vec::new();
    for mask in 1..(1u64 << primes.len()) - 1 {
        let pi: Vec<u64> = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let k = o_pi(g, &pi, limits)?;
        let index = &order / k.order();
        if !k.is_trivial() && is_pi_number(&k.order(), &pi) && pi.iter().all(|&p| !(&index % p).is_zero()) {
            out.push((pi, k));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use num_bigint::BigUint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    /// SL(2,3) acting on the 8 nonzero vectors of GF(3)^2.
    fn sl23() -> GroupHandle {
        GroupHandle::new(8, vec![p("(3,4,5)(6,8,7)", 8), p("(1,6,2,3)(4,7,8,5)", 8)]).unwrap()
    }

    #[test]
    fn s3_and_a4() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let l = Limits::default();
        let s3 = symmetric(3);
        let k = s3.subgroup(vec![p("(1,2,3)", 3)]);
        let c = schur_zassenhaus_complement(&s3, &k, &mut rng, &l).unwrap();
        assert_eq!(c.order(), BigUint::from(2u32));
        assert!(is_complement(&s3, &k, &c));
        let a4 = alternating(4);
        let v4 = a4.subgroup(vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]);
        let c = schur_zassenhaus_complement(&a4, &v4, &mut rng, &l).unwrap();
        assert_eq!(c.order(), BigUint::from(3u32));
        assert!(is_complement(&a4, &v4, &c));
    }

    #[test]
    fn sl23_quaternion_complement() {
        let g = sl23();
        assert_eq!(g.order(), BigUint::from(24u32));
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q8 = crate::sylow::sylow_generic(&g, 2, &mut rng, &l).unwrap().group;
        assert!(q8.is_normal_in(&g));
        let c = schur_zassenhaus_complement(&g, &q8, &mut rng, &l).unwrap();
        assert!(is_complement(&g, &q8, &c));
        // oracle: every order-3 subgroup is a complement, and some exist
        let order3: Vec<Permutation> = g
            .enumerate(100)
            .unwrap()
            .into_iter()
            .filter(|x| x.order() == BigUint::from(3u32))
            .collect();
        assert!(!order3.is_empty());
        assert!(order3
            .iter()
            .all(|x| is_complement(&g, &q8, &g.subgroup(vec![x.clone()]))));
        assert!(c.generators().iter().any(|x| order3.contains(x)));
    }

    #[test]
    fn normal_hall_subgroups_of_s4_and_a4() {
        let l = Limits::default();
        assert!(normal_hall_subgroups(&symmetric(4), &l).unwrap().is_empty());
        let found = normal_hall_subgroups(&alternating(4), &l).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, vec![2]);
        assert_eq!(found[0].1.order(), BigUint::from(4u32));
    }

    #[test]
    fn non_hall_rejected() {
        let s4 = symmetric(4);
        let v4 = s4.subgroup(vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            schur_zassenhaus_complement(&s4, &v4, &mut rng, &Limits::default()),
            Err(Error::InvalidInput(_))
        ));
    }
}
