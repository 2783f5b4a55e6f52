//! Generating alternating groups by two Sylow subgroups, generation
//! certificates, and the search for a conjugate of a class element that
//! generates together with a fixed subgroup.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{factorial, require_prime};
use crate::blocks::minimal_blocks;
use crate::error::{Error, Result};
use crate::group::{alternating, orbits_of, GroupHandle, Limits};
use crate::perm::Permutation;
use crate::ser;
use crate::sylow::{block_full_cycle, std_blocks, sylow_alternating};

/// Outcome of comparing `<A, B>` with an ambient group.
#[derive(Clone, Debug, Serialize)]
pub struct GenerationCertificate {
    pub degree: usize,
    #[serde(serialize_with = "ser::big")]
    pub ambient_order: BigUint,
    #[serde(serialize_with = "ser::perms")]
    pub a_generators: Vec<Permutation>,
    #[serde(serialize_with = "ser::big")]
    pub a_order: BigUint,
    #[serde(serialize_with = "ser::perms")]
    pub b_generators: Vec<Permutation>,
    #[serde(serialize_with = "ser::big")]
    pub b_order: BigUint,
    #[serde(serialize_with = "ser::big")]
    pub joint_order: BigUint,
    pub generated: bool,
    pub branch: String,
    #[serde(serialize_with = "ser::opt_perm")]
    pub conjugator: Option<Permutation>,
    pub details: BTreeMap<String, Value>,
}

impl GenerationCertificate {
    fn from_groups(ambient_order: BigUint, a: &GroupHandle, b: &GroupHandle, joint: &GroupHandle) -> Self {
        let joint_order = joint.order();
        GenerationCertificate {
            degree: a.degree(),
            generated: joint_order == ambient_order,
            ambient_order,
            a_generators: a.generators().to_vec(),
            a_order: a.order(),
            b_generators: b.generators().to_vec(),
            b_order: b.order(),
            joint_order,
            branch: "direct".into(),
            conjugator: None,
            details: BTreeMap::new(),
        }
    }

    /// Rebuilds `<A, B>` from the stored generator lists and compares its
    /// order with the stored ambient order.
    pub fn recheck(&self) -> bool {
        let mut gens: Vec<Permutation> = self.a_generators.clone();
        gens.extend(self.b_generators.iter().cloned());
        let joint = GroupHandle::trivial(self.degree).subgroup(gens);
        (joint.order() == self.ambient_order) == self.generated && joint.order() == self.joint_order
    }
}

/// Checks `A, B <= G` and compares `|<A, B>|` with `|G|`.
pub fn generates(g: &GroupHandle, a: &GroupHandle, b: &GroupHandle) -> Result<GenerationCertificate> {
    g.check_subgroup(a)?;
    g.check_subgroup(b)?;
    let joint = a.join(b);
    Ok(GenerationCertificate::from_groups(g.order(), a, b, &joint))
}

/// Permutation sending each `from` to its `to`, and the remaining points in
/// ascending order to the remaining images in ascending order.
fn conjugator_from_pairs(n: usize, pairs: &[(u32, u32)]) -> Permutation {
    let mut images = vec![u32::MAX; n];
    let mut used = vec![false; n];
    for &(from, to) in pairs {
        images[from as usize] = to;
        used[to as usize] = true;
    }
    let mut free = (0..n as u32).filter(|&c| !used[c as usize]);
    for slot in images.iter_mut() {
        if *slot == u32::MAX {
            *slot = free.next().expect("pairs are injective");
        }
    }
    Permutation::from_images_unchecked(images)
}

/// The cycle of `x` through `start`, in cycle order.
fn cycle_through(x: &Permutation, start: u32) -> Vec<u32> {
    let mut out = vec![start];
    let mut a = x.image(start);
    while a != start {
        out.push(a);
        a = x.image(a);
    }
    out
}

/// An even permutation `g` such that the image of `cycle` (a cycle of `x`)
/// under `g` meets every part, so that the matching cycle of `x^g` does too.
pub fn orbit_meeting_conjugator(x: &Permutation, parts: &[Vec<u32>], cycle: &[u32]) -> Result<Permutation> {
    let n = x.degree();
    if cycle.is_empty() || cycle_through(x, cycle[0]) != cycle {
        return Err(Error::InvalidInput("the chosen points are not a cycle of x".into()));
    }
    if cycle.len() < parts.len() {
        return Err(Error::InvalidInput(format!(
            "cycle of length {} cannot meet {} parts",
            cycle.len(),
            parts.len()
        )));
    }
    let on_cycle: HashSet<u32> = cycle.iter().copied().collect();
    if parts.iter().all(|part| part.iter().any(|a| on_cycle.contains(a))) {
        return Ok(Permutation::identity(n));
    }
    let pairs: Vec<(u32, u32)> = parts.iter().zip(cycle).map(|(part, &c)| (c, part[0])).collect();
    let mut g = conjugator_from_pairs(n, &pairs);
    if !g.is_even() {
        let targets: HashSet<u32> = pairs.iter().map(|&(_, t)| t).collect();
        let mut by_size: Vec<&Vec<u32>> = parts.iter().collect();
        by_size.sort_by_key(|part| std::cmp::Reverse(part.len()));
        let swap = by_size.iter().find_map(|part| {
            let free: Vec<u32> = part.iter().copied().filter(|a| !targets.contains(a)).take(2).collect();
            (free.len() == 2).then(|| (free[0], free[1]))
        });
        // Otherwise swap two points of the cycle's image, which keeps that image as a set.
        let (u, v) = swap.unwrap_or((g.image(cycle[0]), g.image(cycle[1])));
        g = g.mul_unchecked(&Permutation::cycle(n, &[u, v])?);
    }
    Ok(g)
}

/// A Sylow subgroup of `A_n` given as the standard one conjugated by `conj`.
#[derive(Clone, Debug)]
struct Side {
    prime: u64,
    conj: Permutation,
}

impl Side {
    fn standard(n: usize, prime: u64) -> Self {
        Side {
            prime,
            conj: Permutation::identity(n),
        }
    }
}

struct Construction {
    a: Side,
    b: Side,
    a_group: GroupHandle,
    b_group: GroupHandle,
    joint: GroupHandle,
    branch: String,
    details: BTreeMap<String, Value>,
}

struct Ctx<'a, R: Rng + ?Sized> {
    rng: &'a mut R,
    limits: &'a Limits,
    std: HashMap<(usize, u64), GroupHandle>,
    alt: HashMap<usize, GroupHandle>,
}

impl<'a, R: Rng + ?Sized> Ctx<'a, R> {
    fn new(rng: &'a mut R, limits: &'a Limits) -> Self {
        Ctx {
            rng,
            limits,
            std: HashMap::new(),
            alt: HashMap::new(),
        }
    }

    fn std(&mut self, n: usize, p: u64) -> Result<GroupHandle> {
        if let Some(g) = self.std.get(&(n, p)) {
            return Ok(g.clone());
        }
        let g = sylow_alternating(n, p)?.group;
        self.std.insert((n, p), g.clone());
        Ok(g)
    }

    fn alt(&mut self, n: usize) -> GroupHandle {
        self.alt.entry(n).or_insert_with(|| alternating(n)).clone()
    }

    fn side_group(&mut self, n: usize, side: &Side) -> Result<GroupHandle> {
        Ok(self.std(n, side.prime)?.conjugate_by(&side.conj))
    }

    /// `Some` if the two sides generate `A_n`.
    fn attempt(
        &mut self,
        n: usize,
        a: &Side,
        b: &Side,
        branch: &str,
        details: &BTreeMap<String, Value>,
    ) -> Result<Option<Construction>> {
        let a_group = self.side_group(n, a)?;
        let b_group = self.side_group(n, b)?;
        let joint = a_group.join(&b_group);
        if joint.order() != factorial(n as u64) / 2u32 {
            return Ok(None);
        }
        Ok(Some(Construction {
            a: a.clone(),
            b: b.clone(),
            a_group,
            b_group,
            joint,
            branch: branch.to_string(),
            details: details.clone(),
        }))
    }

    /// Verifies the deterministic witness, then falls back to random
    /// conjugates of the second side.
    fn finish(
        &mut self,
        n: usize,
        a: Side,
        b: Side,
        branch: &str,
        mut details: BTreeMap<String, Value>,
    ) -> Result<Construction> {
        if let Some(c) = self.attempt(n, &a, &b, branch, &details)? {
            return Ok(c);
        }
        let alt = self.alt(n);
        for trial in 1..=self.limits.trials {
            let h = alt.random_element(self.rng);
            let b2 = Side {
                prime: b.prime,
                conj: b.conj.mul_unchecked(&h),
            };
            details.insert("fallback_trials".into(), json!(trial));
            let label = format!("{branch}+random-conjugate");
            if let Some(c) = self.attempt(n, &a, &b2, &label, &details)? {
                return Ok(c);
            }
        }
        Err(Error::BudgetExhausted(format!(
            "branch {branch} (n = {n}, primes {}, {}): no generating pair within {} trials",
            a.prime, b.prime, self.limits.trials
        )))
    }
}

fn certificate(n: usize, c: Construction) -> GenerationCertificate {
    let mut cert = GenerationCertificate::from_groups(factorial(n as u64) / 2u32, &c.a_group, &c.b_group, &c.joint);
    cert.branch = c.branch;
    cert.conjugator = Some(c.b.conj.clone()).filter(|g| !g.is_identity());
    cert.details = c.details;
    cert.details.insert("a_prime".into(), json!(c.a.prime));
    cert.details.insert("b_prime".into(), json!(c.b.prime));
    if !c.a.conj.is_identity() {
        cert.details
            .insert("a_conjugator".into(), json!(c.a.conj.to_cycle_string()));
    }
    let transitive = c.joint.is_transitive();
    cert.details.insert("transitive".into(), json!(transitive));
    if transitive {
        let primitive = minimal_blocks(&c.joint).map(|v| v.is_primitive()).unwrap_or(false);
        cert.details.insert("primitive".into(), json!(primitive));
    }
    cert
}

fn check_alt_args(n: usize, primes: &[u64]) -> Result<()> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("need n >= 5, got {n}")));
    }
    for &p in primes {
        require_prime(p)?;
        if p as usize > n {
            return Err(Error::InvalidInput(format!("prime {p} exceeds n = {n}")));
        }
    }
    Ok(())
}

/// A Sylow 2-subgroup and a Sylow `t`-subgroup generating `A_n`, verified.
pub fn alt_two_vs_t<R: Rng + ?Sized>(n: usize, t: u64, rng: &mut R, limits: &Limits) -> Result<GenerationCertificate> {
    check_alt_args(n, &[t])?;
    let mut ctx = Ctx::new(rng, limits);
    let c = two_vs_t(&mut ctx, n, t)?;
    Ok(certificate(n, c))
}

fn two_vs_t<R: Rng + ?Sized>(ctx: &mut Ctx<'_, R>, n: usize, t: u64) -> Result<Construction> {
    let r = Side::standard(n, 2);
    let mut details = BTreeMap::new();
    if n <= 8 {
        let alt = ctx.alt(n);
        let mut candidates = vec![Permutation::identity(n)];
        candidates.extend(alt.enumerate(ctx.limits.max_order)?);
        for (k, g) in candidates.into_iter().enumerate() {
            details.insert("conjugates_tried".into(), json!(k + 1));
            let b = Side { prime: t, conj: g };
            if let Some(c) = ctx.attempt(n, &r, &b, "small-n", &details)? {
                return Ok(c);
            }
        }
        return Err(Error::Internal(format!(
            "no conjugate of the Sylow {t}-subgroup generates A_{n} with the Sylow 2-subgroup"
        )));
    }
    if n % 2 == 1 {
        let (offset, e) = std_blocks(n, t)[0];
        let x0 = block_full_cycle(n, offset, t, e);
        let cycle = cycle_through(&x0, offset);
        let parts = ctx.std(n, 2)?.orbits();
        let g = orbit_meeting_conjugator(&x0, &parts, &cycle)?;
        details.insert("cycle_length".into(), json!(cycle.len()));
        details.insert("sylow2_orbits".into(), json!(parts.len()));
        return ctx.finish(n, r, Side { prime: t, conj: g }, "odd", details);
    }
    let sub = two_vs_t(ctx, n - 1, t)?;
    let a = Side {
        prime: 2,
        conj: sub.a.conj.extend(n),
    };
    let b = Side {
        prime: t,
        conj: sub.b.conj.extend(n),
    };
    details.insert("recursed_from".into(), json!(sub.branch));
    ctx.finish(n, a, b, "even", details)
}

/// A Sylow `p`-subgroup and a Sylow `q`-subgroup generating `A_n`, verified.
pub fn alt_syl_pair<R: Rng + ?Sized>(
    n: usize,
    p: u64,
    q: u64,
    rng: &mut R,
    limits: &Limits,
) -> Result<GenerationCertificate> {
    check_alt_args(n, &[p, q])?;
    if p > q {
        return Err(Error::InvalidInput(format!("need p <= q, got p = {p}, q = {q}")));
    }
    let mut ctx = Ctx::new(rng, limits);
    let c = syl_pair(&mut ctx, n, p, q)?;
    Ok(certificate(n, c))
}

fn syl_pair<R: Rng + ?Sized>(ctx: &mut Ctx<'_, R>, n: usize, p: u64, q: u64) -> Result<Construction> {
    let nn = n as u64;
    let mut details = BTreeMap::new();
    if p == 2 {
        let mut c = two_vs_t(ctx, n, q)?;
        c.branch = format!("p=2:{}", c.branch);
        return Ok(c);
    }
    let coprime = (p * q).gcd(&nn) == 1 && p + 4 <= nn;
    if p == q || (n <= 11 && !coprime) {
        // Start from a conjugate whose longest q-cycle meets every orbit of P.
        let (offset, e) = std_blocks(n, q)[0];
        let y0 = block_full_cycle(n, offset, q, e);
        let cycle = cycle_through(&y0, offset);
        let parts = ctx.std(n, p)?.orbits();
        let conj = if cycle.len() >= parts.len() {
            orbit_meeting_conjugator(&y0, &parts, &cycle)?
        } else {
            Permutation::identity(n)
        };
        details.insert("cycle_length".into(), json!(cycle.len()));
        return ctx.finish(
            n,
            Side::standard(n, p),
            Side { prime: q, conj },
            "direct-search",
            details,
        );
    }
    if n > 11 && ((nn.is_multiple_of(p) && p < nn) || (nn.is_multiple_of(q) && q < nn)) {
        let sub = syl_pair(ctx, n - 1, p, q)?;
        let a = Side {
            prime: p,
            conj: sub.a.conj.extend(n),
        };
        let b = Side {
            prime: q,
            conj: sub.b.conj.extend(n),
        };
        details.insert("recursed_from".into(), json!(sub.branch));
        return ctx.finish(n, a, b, "divisor-recursive", details);
    }
    if q == nn {
        if p + 2 == q {
            return q_equals_n_twin(ctx, n, p, q);
        }
        return ctx.finish(n, Side::standard(n, p), Side::standard(n, q), "q-equals-n", details);
    }
    if p + 3 >= nn {
        return near_n(ctx, n, p, q);
    }
    coprime_construction(ctx, n, p, q)
}

/// A `p`-side containing the `p`-cycle `x`, for `p > n/2`.
fn side_containing_cycle(n: usize, p: u64, x: &Permutation) -> Side {
    let cyc = x.moved_cycles().remove(0);
    let pairs: Vec<(u32, u32)> = cyc.iter().enumerate().map(|(i, &c)| (i as u32, c)).collect();
    let conj = conjugator_from_pairs(n, &pairs);
    debug_assert_eq!(block_full_cycle(n, 0, p, 1).conjugate_by(&conj), *x);
    Side { prime: p, conj }
}

fn is_single_cycle(x: &Permutation, len: usize) -> bool {
    let lengths = x.cycle_type();
    lengths.count(len) == 1 && lengths.lengths().iter().all(|&l| l == len || l == 1)
}

/// Visits every `k`-cycle on `n` points (least point first) until `f` returns true.
fn for_each_k_cycle(n: usize, k: usize, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(n: u32, k: usize, cur: &mut Vec<u32>, used: &mut [bool], f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for a in cur[0] + 1..n {
            if used[a as usize] {
                continue;
            }
            used[a as usize] = true;
            cur.push(a);
            let stop = rec(n, k, cur, used, f);
            cur.pop();
            used[a as usize] = false;
            if stop {
                return true;
            }
        }
        false
    }
    let mut used = vec![false; n];
    for first in 0..n as u32 {
        used[first as usize] = true;
        let mut cur = vec![first];
        if rec(n as u32, k, &mut cur, &mut used, &mut f) {
            return true;
        }
        used[first as usize] = false;
    }
    false
}

/// `q = n` and `p = q - 2`: a `p`-cycle `x` with `x y` a 3-cycle for the
/// standard `q`-cycle `y`.
fn q_equals_n_twin<R: Rng + ?Sized>(ctx: &mut Ctx<'_, R>, n: usize, p: u64, q: u64) -> Result<Construction> {
    let y = block_full_cycle(n, 0, q, 1);
    let y_inv = y.inverse();
    let mut found: Option<Construction> = None;
    let mut tried = 0usize;
    let mut err: Option<Error> = None;
    for_each_k_cycle(n, 3, |c| {
        tried += 1;
        let c = Permutation::cycle(n, c).expect("valid cycle");
        let x = c.mul_unchecked(&y_inv);
        if !is_single_cycle(&x, p as usize) {
            return false;
        }
        let mut details = BTreeMap::new();
        details.insert("xy".into(), json!(c.to_cycle_string()));
        details.insert("candidates_tried".into(), json!(tried));
        let a = side_containing_cycle(n, p, &x);
        match ctx.attempt(n, &a, &Side::standard(n, q), "q-equals-n-twin", &details) {
            Ok(Some(con)) => {
                found = Some(con);
                true
            }
            Ok(None) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    match found {
        Some(c) => Ok(c),
        None => ctx.finish(
            n,
            Side::standard(n, p),
            Side::standard(n, q),
            "q-equals-n-twin",
            BTreeMap::new(),
        ),
    }
}

/// `n - 3 <= p < q < n`: a `p`-cycle `x` and the standard `q`-cycle `y` with
/// `<x, y>` transitive and `x y` a cycle of length 3, 5 or 7.
fn near_n<R: Rng + ?Sized>(ctx: &mut Ctx<'_, R>, n: usize, p: u64, q: u64) -> Result<Construction> {
    let y = block_full_cycle(n, 0, q, 1);
    let y_inv = y.inverse();
    let mut found: Option<Construction> = None;
    let mut err: Option<Error> = None;
    let mut tried = 0usize;
    let mut check = |ctx: &mut Ctx<'_, R>, c: &[u32], found: &mut Option<Construction>, err: &mut Option<Error>| {
        tried += 1;
        let cyc = Permutation::cycle(n, c).expect("valid cycle");
        let x = cyc.mul_unchecked(&y_inv);
        if !is_single_cycle(&x, p as usize) || orbits_of(n, &[x.clone(), y.clone()]).len() != 1 {
            return false;
        }
        let mut details = BTreeMap::new();
        details.insert("xy".into(), json!(cyc.to_cycle_string()));
        details.insert("xy_length".into(), json!(c.len()));
        details.insert("candidates_tried".into(), json!(tried));
        let a = side_containing_cycle(n, p, &x);
        match ctx.attempt(n, &a, &Side::standard(n, q), "near-n", &details) {
            Ok(Some(con)) => {
                *found = Some(con);
                true
            }
            Ok(None) => false,
            Err(e) => {
                *err = Some(e);
                true
            }
        }
    };
    for k in [3usize, 5] {
        if for_each_k_cycle(n, k, |c| check(ctx, c, &mut found, &mut err)) {
            break;
        }
    }
    if found.is_none() && err.is_none() {
        for _ in 0..ctx.limits.trials.max(1) * 20 {
            let mut pts: Vec<u32> = (0..n as u32).collect();
            for i in 0..7 {
                let j = ctx.rng.gen_range(i..n);
                pts.swap(i, j);
            }
            let c = pts[..7].to_vec();
            if check(ctx, &c, &mut found, &mut err) {
                break;
            }
        }
    }
    if let Some(e) = err {
        return Err(e);
    }
    match found {
        Some(c) => Ok(c),
        None => ctx.finish(n, Side::standard(n, p), Side::standard(n, q), "near-n", BTreeMap::new()),
    }
}

fn largest_power_below(p: u64, n: u64) -> (u64, u32) {
    let mut a = 1u64;
    let mut e = 0u32;
    while a * p < n {
        a *= p;
        e += 1;
    }
    (a, e)
}

/// `gcd(pq, n) = 1`: `x` with `alpha` orbits of size `a` and `beta` fixed
/// points, and `y` one or two `b`-cycles arranged so that `<x, y>` is transitive.
fn coprime_construction<R: Rng + ?Sized>(ctx: &mut Ctx<'_, R>, n: usize, p: u64, q: u64) -> Result<Construction> {
    let nn = n as u64;
    let (a_p, _) = largest_power_below(p, nn);
    let (b_q, _) = largest_power_below(q, nn);
    let swapped = b_q < a_p;
    let (px, py) = if swapped { (q, p) } else { (p, q) };
    let (a, ea) = largest_power_below(px, nn);
    let (b, eb) = largest_power_below(py, nn);
    let alpha = nn / a;
    let beta = nn % a;
    let mut details = BTreeMap::new();
    details.insert("a".into(), json!(a_p));
    details.insert("b".into(), json!(b_q));
    details.insert("swapped".into(), json!(swapped));
    details.insert("alpha".into(), json!(alpha));
    details.insert("beta".into(), json!(beta));
    details.insert("x_orbit_size".into(), json!(a));
    details.insert("y_cycle_length".into(), json!(b));
    if alpha >= px {
        return Err(Error::Internal(format!("alpha = {alpha} is not below {px}")));
    }

    let xblocks = std_blocks(n, px);
    let mut x0 = Permutation::identity(n);
    for &(offset, e) in xblocks.iter().take(alpha as usize) {
        debug_assert_eq!(e, ea);
        x0 = x0.mul_unchecked(&block_full_cycle(n, offset, px, e));
    }
    let parts = orbits_of(n, &[x0.clone()]);
    let yblocks = std_blocks(n, py);
    let m = parts.len() as u64;
    let g = if b >= m {
        details.insert("y_shape".into(), json!("one-cycle"));
        let (offset, e) = yblocks[0];
        debug_assert_eq!(e, eb);
        let y0 = block_full_cycle(n, offset, py, e);
        orbit_meeting_conjugator(&y0, &parts, &cycle_through(&y0, offset))?
    } else {
        details.insert("y_shape".into(), json!("two-cycles"));
        if yblocks.len() < 2 || yblocks[1].1 != eb {
            return Err(Error::Internal(format!(
                "two disjoint {b}-cycles needed but {py}-Sylow has one {b}-block (n = {n})"
            )));
        }
        let y0 = block_full_cycle(n, yblocks[0].0, py, eb).mul_unchecked(&block_full_cycle(n, yblocks[1].0, py, eb));
        let c1 = cycle_through(&y0, yblocks[0].0);
        let c2 = cycle_through(&y0, yblocks[1].0);
        // The first part is an orbit of size a >= 3 and is met by both cycles.
        let shared = &parts[0];
        let others = &parts[1..];
        let s1 = (b as usize - 1).min(others.len());
        let mut pairs = vec![(c1[0], shared[0]), (c2[0], shared[1])];
        for (i, part) in others[..s1].iter().enumerate() {
            pairs.push((c1[1 + i], part[0]));
        }
        for (j, part) in others[s1..].iter().enumerate() {
            pairs.push((c2[1 + j], part[0]));
        }
        conjugator_from_pairs(n, &pairs)
    };
    let y = if b >= m {
        block_full_cycle(n, yblocks[0].0, py, eb).conjugate_by(&g)
    } else {
        block_full_cycle(n, yblocks[0].0, py, eb)
            .mul_unchecked(&block_full_cycle(n, yblocks[1].0, py, eb))
            .conjugate_by(&g)
    };
    let witness_transitive = orbits_of(n, &[x0, y]).len() == 1;
    details.insert("witness_transitive".into(), json!(witness_transitive));
    let xs = Side::standard(n, px);
    let ys = Side { prime: py, conj: g };
    let (sp, sq) = if swapped { (ys, xs) } else { (xs, ys) };
    // Keep the random fallback acting on whichever side carries the conjugator.
    if swapped {
        let mut c = ctx.finish(n, sq, sp, "gcd", details)?;
        std::mem::swap(&mut c.a, &mut c.b);
        std::mem::swap(&mut c.a_group, &mut c.b_group);
        Ok(c)
    } else {
        ctx.finish(n, sp, sq, "gcd", details)
    }
}

/// Result of [`sylow_vs_class`].
#[derive(Clone, Debug, Serialize)]
pub struct ClassSearch {
    #[serde(serialize_with = "ser::opt_perm")]
    pub conjugator: Option<Permutation>,
    pub trials_run: usize,
    pub distinct_failures: usize,
    /// Orbit count of `<P, x^g>` per trial.
    pub orbit_counts: Vec<usize>,
}

/// Looks for `g` with `<P, x^g> = G`, trying the identity first and then
/// random elements of `G`.
pub fn sylow_vs_class<R: Rng + ?Sized>(
    g: &GroupHandle,
    p: &GroupHandle,
    x: &Permutation,
    trials: usize,
    rng: &mut R,
) -> Result<ClassSearch> {
    g.check_subgroup(p)?;
    if x.is_identity() {
        return Err(Error::InvalidInput("x must not be the identity".into()));
    }
    if !g.contains(x)? {
        return Err(Error::InvalidInput(format!("{x} is not in the group")));
    }
    let target = g.order();
    let g_orbits = g.orbits().len();
    let mut failures: HashSet<Permutation> = HashSet::new();
    let mut orbit_counts = Vec::new();
    for trial in 0..trials.max(1) {
        let h = if trial == 0 {
            Permutation::identity(g.degree())
        } else {
            g.random_element(rng)
        };
        let y = x.conjugate_by(&h);
        let mut gens = p.nontrivial_generators();
        gens.push(y.clone());
        let orbits = orbits_of(g.degree(), &gens).len();
        orbit_counts.push(orbits);
        if orbits == g_orbits && p.subgroup(gens).order() == target {
            return Ok(ClassSearch {
                conjugator: Some(h),
                trials_run: trial + 1,
                distinct_failures: failures.len(),
                orbit_counts,
            });
        }
        failures.insert(y);
    }
    Ok(ClassSearch {
        conjugator: None,
        trials_run: trials.max(1),
        distinct_failures: failures.len(),
        orbit_counts,
    })
}
