//! Lifting pi-subgroups through surjections onto pi-groups.

use rand::Rng;

use crate::arith::{is_pi_number, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::sylow::sylow_generic;

use super::complement::schur_zassenhaus_complement;
use super::hom::{quotient, Epimorphism};

fn require_pi_target(f: &Epimorphism, pi: &[u64]) -> Result<()> {
    let h = f.target().order();
    if is_pi_number(&h, pi) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "target of order {h} is not a pi-group for pi = {pi:?}"
        )))
    }
}

/// A pi-subgroup `M` of the source with `f(M)` the whole target.
///
/// A pi'-kernel has a complement. Otherwise take a Sylow `r`-subgroup `R` of
/// the kernel for some `r` in pi: if it is not normal, pass to its normalizer
/// (which still maps onto the target), else factor `f` through `G/R` and pull
/// the answer back.
pub fn lift_pi_subgroup<R: Rng + ?Sized>(
    f: &Epimorphism,
    pi: &[u64],
    rng: &mut R,
    limits: &Limits,
) -> Result<GroupHandle> {
    require_pi_target(f, pi)?;
    let m = lift0(f, pi, rng, limits, 0)?;
    debug_assert!(is_pi_number(&m.order(), pi));
    debug_assert!(f.image_group(&m).order() == f.target().order());
    Ok(m)
}

fn lift0<R: Rng + ?Sized>(
    f: &Epimorphism,
    pi: &[u64],
    rng: &mut R,
    limits: &Limits,
    depth: usize,
) -> Result<GroupHandle> {
    if depth > limits.max_depth {
        return Err(Error::BudgetExhausted(format!(
            "lifting recursion deeper than {}",
            limits.max_depth
        )));
    }
    let src = f.source();
    let k = f.kernel();
    let Some(r) = prime_divisors(&k.order()).into_iter().find(|r| pi.contains(r)) else {
        return schur_zassenhaus_complement(src, k, rng, limits);
    };
    let sylow = sylow_generic(k, r, rng, limits)?.group;
    let n = src.normalizer(&sylow, limits)?;
    if n.order() < src.order() {
        let fn_ = f.restrict(&n)?;
        if fn_.target().order() != f.target().order() {
            return Err(Error::Internal(
                "normalizer of a kernel Sylow subgroup does not map onto the target".into(),
            ));
        }
        return lift0(&fn_, pi, rng, limits, depth + 1);
    }
    let q = quotient(src, &sylow, limits)?;
    let fbar = Epimorphism::from_images(q.target(), f.generator_images().to_vec())?;
    let mbar = lift0(&fbar, pi, rng, limits, depth + 1)?;
    q.preimage(&mbar)
}

/// A pi-subgroup `M` with `J <= M` and `f(M)` the whole target, for `J` a
/// pi-subgroup of the kernel that is normal in the source.
pub fn lift_pi_over_kernel<R: Rng + ?Sized>(
    f: &Epimorphism,
    j: &GroupHandle,
    pi: &[u64],
    rng: &mut R,
    limits: &Limits,
) -> Result<GroupHandle> {
    require_pi_target(f, pi)?;
    if !f.kernel().contains_group(j) {
        return Err(Error::InvalidInput("J is not contained in the kernel".into()));
    }
    if !is_pi_number(&j.order(), pi) {
        return Err(Error::InvalidInput(format!(
            "J of order {} is not a pi-group",
            j.order()
        )));
    }
    j.check_normal_in(f.source())?;
    let m = lift0(f, pi, rng, limits, 0)?.join(j);
    if !is_pi_number(&m.order(), pi) || f.image_group(&m).order() != f.target().order() {
        return Err(Error::Internal("lifted subgroup failed verification".into()));
    }
    Ok(m)
}

/// `lift_pi_over_kernel` for a Sylow subgroup `j` of the kernel of `f` restricted
/// to `x`: pass to `N_X(J)`, which maps onto `f(X)`, where `J` is normal.
pub fn lift_over_sylow<R: Rng + ?Sized>(
    f: &Epimorphism,
    x: &GroupHandle,
    j: &GroupHandle,
    pi: &[u64],
    rng: &mut R,
    limits: &Limits,
) -> Result<GroupHandle> {
    let fx = f.restrict(x)?;
    let n = x.normalizer(j, limits)?;
    let fn_ = fx.restrict(&n)?;
    if fn_.target().order() != fx.target().order() {
        return Err(Error::Internal(
            "Frattini argument failed: N_X(J) does not map onto f(X)".into(),
        ));
    }
    lift_pi_over_kernel(&fn_, j, pi, rng, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use crate::perm::Permutation;
    use num_bigint::BigUint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn v4() -> GroupHandle {
        GroupHandle::new(4, vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap()
    }

    #[test]
    fn s4_over_v4_gives_sylow_2() {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = quotient(&symmetric(4), &v4(), &l).unwrap();
        let t = f.target().subgroup(vec![f.image(&p("(1,2)", 4))]);
        let x = f.preimage(&t).unwrap();
        let fx = f.restrict(&x).unwrap();
        let m = lift_pi_over_kernel(&fx, &v4(), &[2], &mut rng, &l).unwrap();
        assert_eq!(m.order(), BigUint::from(8u32));
        assert_eq!(fx.image_group(&m).order(), BigUint::from(2u32));
    }

    #[test]
    fn pi_prime_kernel_gives_complement() {
        // A4 -> C3 with kernel V4, pi = {3}
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = quotient(&alternating(4), &v4(), &l).unwrap();
        let m = lift_pi_over_kernel(&f, &GroupHandle::trivial(4), &[3], &mut rng, &l).unwrap();
        assert_eq!(m.order(), BigUint::from(3u32));
    }

    #[test]
    fn trivial_kernel_gives_source() {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let d8 = GroupHandle::new(4, vec![p("(1,2,3,4)", 4), p("(1,3)", 4)]).unwrap();
        let f = quotient(&d8, &GroupHandle::trivial(4), &l).unwrap();
        let m = lift_pi_over_kernel(&f, &GroupHandle::trivial(4), &[2], &mut rng, &l).unwrap();
        assert!(m.same_group(&d8));
    }

    #[test]
    fn kernel_with_pi_part() {
        // S4 -> S4/V4 restricted over a 3-subgroup, pi = {3}: kernel V4 is pi'
        // and over a 2-subgroup with pi = {2}: kernel V4 is a pi-group
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let s4 = symmetric(4);
        let f = quotient(&s4, &v4(), &l).unwrap();
        let t = f.target().subgroup(vec![f.image(&p("(1,2)", 4))]);
        let fx = f.restrict(&f.preimage(&t).unwrap()).unwrap();
        let m = lift_pi_subgroup(&fx, &[2], &mut rng, &l).unwrap();
        assert!(is_pi_number(&m.order(), &[2]));
        assert_eq!(fx.image_group(&m).order(), BigUint::from(2u32));
    }

    #[test]
    fn preconditions_named() {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = quotient(&symmetric(4), &v4(), &l).unwrap();
        // target S3 is not a 2-group
        assert!(lift_pi_over_kernel(&f, &v4(), &[2], &mut rng, &l).is_err());
        let t = f.target().subgroup(vec![f.image(&p("(1,2)", 4))]);
        let fx = f.restrict(&f.preimage(&t).unwrap()).unwrap();
        let outside = GroupHandle::new(4, vec![p("(1,2)", 4)]).unwrap();
        assert!(lift_pi_over_kernel(&fx, &outside, &[2], &mut rng, &l).is_err());
        let not_normal = GroupHandle::new(4, vec![p("(1,3)(2,4)", 4)]).unwrap();
        assert!(matches!(
            lift_pi_over_kernel(&fx, &not_normal, &[2], &mut rng, &l),
            Err(Error::NotNormal { .. })
        ));
    }
}
