//! Generating pairs made of a pi-subgroup and a pi'-subgroup.

use num_bigint::BigUint;
use rand::Rng;
use serde_json::Value;

use crate::altgen::{generates, GenerationCertificate};
use crate::arith::{is_pi_number, prime_divisors, require_prime};
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::sylow::sylow_generic;

use super::complement::schur_zassenhaus_complement;
use super::hom::quotient;
use super::lift::lift_over_sylow;
use super::normal::minimal_normal_subgroups;

/// `G = <P, R>` with `P` a pi-subgroup and `R` a pi'-subgroup.
#[derive(Clone, Debug)]
pub struct PiPair {
    pub pi: Vec<u64>,
    pub p: GroupHandle,
    pub r: GroupHandle,
    pub certificate: GenerationCertificate,
    /// One entry per recursion level, outermost first.
    pub trace: Vec<String>,
}

/// Builds a pi / pi' generating pair by recursing through minimal normal
/// subgroups, and verifies it.
pub fn construct_pi_pair<R: Rng + ?Sized>(g: &GroupHandle, pi: &[u64], rng: &mut R, limits: &Limits) -> Result<PiPair> {
    for &p in pi {
        require_prime(p)?;
    }
    let mut pi = pi.to_vec();
    pi.sort_unstable();
    pi.dedup();
    g.order_under(limits.max_order, "group for the pair constructor")?;
    let mut trace = Vec::new();
    let (p, r) = build(g, &pi, rng, limits, 0, &mut trace)?;
    let mut certificate = generates(g, &p, &r)?;
    let pi_prime: Vec<u64> = prime_divisors(&g.order())
        .into_iter()
        .filter(|q| !pi.contains(q))
        .collect();
    if !certificate.generated || !is_pi_number(&p.order(), &pi) || !is_pi_number(&r.order(), &pi_prime) {
        return Err(Error::Internal(format!(
            "pair failed verification: |P| = {}, |R| = {}, joint order {}",
            p.order(),
            r.order(),
            certificate.joint_order
        )));
    }
    certificate.branch = "pi-pair".into();
    certificate.details.insert("pi".into(), Value::from(pi.clone()));
    certificate.details.insert("trace".into(), Value::from(trace.clone()));
    Ok(PiPair {
        pi,
        p,
        r,
        certificate,
        trace,
    })
}

fn build<R: Rng + ?Sized>(
    g: &GroupHandle,
    pi: &[u64],
    rng: &mut R,
    limits: &Limits,
    depth: usize,
    trace: &mut Vec<String>,
) -> Result<(GroupHandle, GroupHandle)> {
    if depth > limits.max_depth {
        return Err(Error::BudgetExhausted(format!(
            "recursion depth exceeds {}",
            limits.max_depth
        )));
    }
    let trivial = GroupHandle::trivial(g.degree());
    if g.is_trivial() {
        trace.push(format!("{depth}: trivial group"));
        return Ok((trivial.clone(), trivial));
    }
    let order = g.order();
    let primes = prime_divisors(&order);
    let here: Vec<u64> = primes.iter().copied().filter(|q| pi.contains(q)).collect();
    let there: Vec<u64> = primes.iter().copied().filter(|q| !pi.contains(q)).collect();
    if there.is_empty() {
        trace.push(format!("{depth}: pi-group of order {order}"));
        return Ok((g.clone(), trivial));
    }
    if here.is_empty() {
        trace.push(format!("{depth}: pi'-group of order {order}"));
        return Ok((trivial, g.clone()));
    }
    let minimal = minimal_normal_subgroups(g, limits)?;

    if let Some(a) = minimal.iter().find(|a| is_pi_number(&a.order(), pi)) {
        trace.push(format!("{depth}: step 1, |A| = {}", a.order()));
        let f = quotient(g, a, limits)?;
        let (pb, rb) = build(f.target(), pi, rng, limits, depth + 1, trace)?;
        let p = f.preimage(&pb)?;
        let r = schur_zassenhaus_complement(&f.preimage(&rb)?, a, rng, limits)?;
        return Ok((p, r));
    }
    if let Some(a) = minimal.iter().find(|a| is_pi_number(&a.order(), &there)) {
        trace.push(format!("{depth}: step 2, |A| = {}", a.order()));
        let f = quotient(g, a, limits)?;
        let (pb, rb) = build(f.target(), pi, rng, limits, depth + 1, trace)?;
        let p = schur_zassenhaus_complement(&f.preimage(&pb)?, a, rng, limits)?;
        let r = f.preimage(&rb)?;
        return Ok((p, r));
    }

    let a = &minimal[0];
    let a_primes = prime_divisors(&a.order());
    let ps: Vec<u64> = a_primes.iter().copied().filter(|q| pi.contains(q)).collect();
    let rs: Vec<u64> = a_primes.iter().copied().filter(|q| !pi.contains(q)).collect();
    let (q, m, label) = sylow_generating_pair(a, &ps, &rs, rng, limits).map_err(|e| match e {
        Error::BudgetExhausted(msg) => Error::BudgetExhausted(format!("step 3 at depth {depth}: {msg}")),
        other => other,
    })?;
    trace.push(format!("{depth}: step 3, |A| = {}, {label}", a.order()));
    let f = quotient(g, a, limits)?;
    let (xb, yb) = build(f.target(), pi, rng, limits, depth + 1, trace)?;
    let x = f.preimage(&xb)?;
    let y = f.preimage(&yb)?;
    let x1 = lift_over_sylow(&f, &x, &q, pi, rng, limits)?;
    let y1 = lift_over_sylow(&f, &y, &m, &there, rng, limits)?;
    Ok((x1, y1))
}

/// Sylow subgroups `Q` (for a prime of `ps`) and `M` (for a prime of `rs`)
/// with `A = <Q, M>`: each prime pair in ascending order, the pair as found
/// first, then random conjugates of `M`.
pub fn sylow_generating_pair<R: Rng + ?Sized>(
    a: &GroupHandle,
    ps: &[u64],
    rs: &[u64],
    rng: &mut R,
    limits: &Limits,
) -> Result<(GroupHandle, GroupHandle, String)> {
    let target: BigUint = a.order();
    for &p in ps {
        for &r in rs {
            let q = sylow_generic(a, p, rng, limits)?.group;
            let m = sylow_generic(a, r, rng, limits)?.group;
            if q.join(&m).order() == target {
                return Ok((q, m, format!("p = {p}, r = {r}, first try")));
            }
            for trial in 1..=limits.step3_budget {
                let c = a.random_element(rng);
                let mc = m.conjugate_by(&c);
                if q.join(&mc).order() == target {
                    return Ok((q, mc, format!("p = {p}, r = {r}, conjugate trial {trial}")));
                }
            }
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no generating Sylow pair for primes {ps:?} x {rs:?} within {} conjugates each",
        limits.step3_budget
    )))
}
