//! Sylow subgroups: explicit constructions in symmetric and alternating
//! groups, normalizer ascent in arbitrary groups.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::arith::{is_p_power, legendre_valuation, p_part, require_prime};
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ExplicitSymmetric,
    ExplicitAlternating,
    Ascent,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::ExplicitSymmetric => "explicit-symmetric",
            Provenance::ExplicitAlternating => "explicit-alternating",
            Provenance::Ascent => "ascent",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SylowDescriptor {
    pub p: u64,
    pub group: GroupHandle,
    pub claimed_order: BigUint,
    pub provenance: Provenance,
}

impl SylowDescriptor {
    fn checked(p: u64, group: GroupHandle, claimed_order: BigUint, provenance: Provenance) -> Result<Self> {
        let order = group.order();
        if order != claimed_order || !is_p_power(&order, p) {
            return Err(Error::Internal(format!(
                "Sylow {p}-subgroup ({}) has order {order}, expected {claimed_order}",
                provenance.label()
            )));
        }
        Ok(SylowDescriptor {
            p,
            group,
            claimed_order,
            provenance,
        })
    }
}

/// Blocks of the standard layout as `(offset, exponent)`: for each base-`p`
/// digit of `n`, that many consecutive blocks of `p^exponent` points, largest
/// blocks first.
pub fn std_blocks(n: usize, p: u64) -> Vec<(u32, u32)> {
    let p = p as usize;
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    let mut out = Vec::new();
    let mut offset = 0usize;
    for e in (0..digits.len()).rev() {
        let size = p.pow(e as u32);
        for _ in 0..digits[e] {
            out.push((offset as u32, e as u32));
            offset += size;
        }
    }
    out
}

/// `x -> x + p^(j-1) mod p^j` on the points `offset .. offset + p^j`.
fn block_shift(degree: usize, offset: u32, p: u64, j: u32) -> Permutation {
    let lo = p.pow(j - 1) as u32;
    let hi = p.pow(j) as u32;
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for x in 0..hi {
        images[(offset + x) as usize] = offset + (x + lo) % hi;
    }
    Permutation::from_images_unchecked(images)
}

/// Generators of the iterated wreath product on one block of `p^a` points.
pub fn block_generators(degree: usize, offset: u32, p: u64, a: u32) -> Vec<Permutation> {
    (1..=a).map(|j| block_shift(degree, offset, p, j)).collect()
}

/// A `p^a`-cycle on the block, lying in its wreath product.
pub fn block_full_cycle(degree: usize, offset: u32, p: u64, a: u32) -> Permutation {
    block_generators(degree, offset, p, a)
        .iter()
        .fold(Permutation::identity(degree), |acc, g| acc.mul_unchecked(g))
}

fn symmetric_generators(n: usize, p: u64) -> Vec<Permutation> {
    std_blocks(n, p)
        .into_iter()
        .flat_map(|(offset, e)| block_generators(n, offset, p, e))
        .collect()
}

/// Sylow `p`-subgroup of `S_n` on consecutive blocks. Trivial if `p > n`.
pub fn sylow_symmetric(n: usize, p: u64) -> Result<SylowDescriptor> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    let claimed = BigUint::from(p).pow(legendre_valuation(n as u64, p)?);
    let gens = symmetric_generators(n, p);
    let group = if gens.is_empty() {
        GroupHandle::trivial(n)
    } else {
        GroupHandle::new(n, gens)?
    };
    SylowDescriptor::checked(p, group, claimed, Provenance::ExplicitSymmetric)
}

/// Sylow `p`-subgroup of `A_n`. For odd `p` this is the symmetric one; for
/// `p = 2` it is the even part of the symmetric one, generated by Schreier
/// generators relative to the first odd generator `h`.
pub fn sylow_alternating(n: usize, p: u64) -> Result<SylowDescriptor> {
    require_prime(p)?;
    if n < 3 {
        return Err(Error::InvalidInput(format!("alternating group needs n >= 3, got {n}")));
    }
    let sym = sylow_symmetric(n, p)?;
    if p != 2 {
        return SylowDescriptor::checked(p, sym.group, sym.claimed_order, Provenance::ExplicitAlternating);
    }
    let gens = sym.group.generators().to_vec();
    let claimed = sym.claimed_order / 2u32;
    let alt_gens: Vec<Permutation> = match gens.iter().find(|g| !g.is_even()) {
        None => gens,
        Some(h) => {
            let h_inv = h.inverse();
            let mut out = Vec::new();
            for s in &gens {
                if s.is_even() {
                    out.push(s.clone());
                    out.push(h.mul_unchecked(s).mul_unchecked(&h_inv));
                } else {
                    out.push(s.mul_unchecked(&h_inv));
                    out.push(h.mul_unchecked(s));
                }
            }
            let mut seen = std::collections::HashSet::new();
            out.retain(|g| !g.is_identity() && seen.insert(g.clone()));
            out
        }
    };
    let group = GroupHandle::trivial(n).subgroup(alt_gens);
    SylowDescriptor::checked(2, group, claimed, Provenance::ExplicitAlternating)
}

/// Sylow `p`-subgroup of an arbitrary group by normalizer ascent: start from
/// the `p`-part of a random element, then repeatedly adjoin a `p`-element of
/// `N_G(P)` outside `P`.
pub fn sylow_generic<R: Rng + ?Sized>(
    g: &GroupHandle,
    p: u64,
    rng: &mut R,
    limits: &Limits,
) -> Result<SylowDescriptor> {
    require_prime(p)?;
    let order = g.order();
    if !(&order % p).is_zero() {
        return Err(Error::InvalidInput(format!(
            "{p} does not divide the group order {order}"
        )));
    }
    g.order_under(limits.max_order, "group for Sylow ascent")?;
    let target = p_part(&order, p);
    for _ in 0..limits.ascent_trials.max(1) {
        let start = (0..64)
            .map(|_| g.random_element(rng).p_part(p))
            .find(|x| !x.is_identity());
        let Some(start) = start else { continue };
        let mut gens = vec![start];
        let mut cur = g.subgroup(gens.clone());
        while cur.order() < target {
            let n = g.normalizer(&cur, limits)?;
            match p_element_outside(&n, &cur, p, rng) {
                Some(z) => {
                    gens.push(z);
                    cur = g.subgroup(gens.clone());
                }
                None => break,
            }
        }
        if cur.order() == target {
            return SylowDescriptor::checked(p, cur, target, Provenance::Ascent);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "Sylow {p}-ascent stalled after {} restarts",
        limits.ascent_trials
    )))
}

/// A `p`-element of `n` outside its normal `p`-subgroup `cur`.
fn p_element_outside<R: Rng + ?Sized>(n: &GroupHandle, cur: &GroupHandle, p: u64, rng: &mut R) -> Option<Permutation> {
    for _ in 0..64 {
        let z = n.random_element(rng).p_part(p);
        if !cur.has(&z) {
            return Some(z);
        }
    }
    n.bsgs()
        .elements()
        .into_iter()
        .map(|z| z.p_part(p))
        .find(|z| !cur.has(z))
}

/// Trivial descriptor, used for primes not dividing the order.
pub fn trivial_descriptor(degree: usize, p: u64) -> SylowDescriptor {
    SylowDescriptor {
        p,
        group: GroupHandle::trivial(degree),
        claimed_order: BigUint::one(),
        provenance: Provenance::Ascent,
    }
}
