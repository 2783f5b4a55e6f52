//! Permutation groups given by generators, with a lazily built BSGS.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::{check_degree, Permutation};

/// Size caps and search budgets shared by every construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree of an induced coset action.
    pub max_degree: usize,
    /// Largest group order for which elements are enumerated.
    pub max_order: u64,
    /// Random-conjugate fallback trials in alternating-group constructions.
    pub trials: usize,
    /// Restarts of the Sylow normalizer ascent.
    pub ascent_trials: usize,
    /// Random conjugates tried per prime pair in the pair constructor.
    pub step3_budget: usize,
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 10_000,
            max_order: 200_000,
            trials: 1000,
            ascent_trials: 64,
            step3_budget: 200,
            max_depth: 32,
        }
    }
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    base_prefix: Vec<u32>,
    bsgs: OnceLock<Bsgs>,
}

/// A permutation group. Cloning is cheap; the BSGS is built once on first use
/// and shared between clones.
#[derive(Clone)]
pub struct GroupHandle {
    inner: Arc<Inner>,
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHandle")
            .field("degree", &self.inner.degree)
            .field("gens", &self.inner.gens)
            .finish()
    }
}

impl GroupHandle {
    /// Group generated by `gens`, all of degree `degree`. An empty list is
    /// rejected; use [`GroupHandle::trivial`] instead.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_base(degree, gens, Vec::new())
    }

    /// As [`GroupHandle::new`], forcing `base_prefix` to start the base.
    pub fn with_base(degree: usize, gens: Vec<Permutation>, base_prefix: Vec<u32>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        for g in &gens {
            check_degree(degree, g.degree())?;
        }
        if let Some(&b) = base_prefix.iter().find(|&&b| b as usize >= degree) {
            return Err(Error::InvalidInput(format!("base point {b} out of range")));
        }
        Ok(Self::from_parts(degree, gens, base_prefix))
    }

    fn from_parts(degree: usize, gens: Vec<Permutation>, base_prefix: Vec<u32>) -> Self {
        GroupHandle {
            inner: Arc::new(Inner {
                degree,
                gens,
                base_prefix,
                bsgs: OnceLock::new(),
            }),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, vec![Permutation::identity(degree)], Vec::new())
    }

    /// Subgroup generated by `gens` in the same degree; trivial if `gens` is empty.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Self {
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            Self::trivial(self.degree())
        } else {
            Self::from_parts(self.degree(), gens, Vec::new())
        }
    }

    /// `<self, other>`.
    pub fn join(&self, other: &GroupHandle) -> Self {
        let mut gens = self.nontrivial_generators();
        gens.extend(other.nontrivial_generators());
        self.subgroup(gens)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.gens
    }

    pub fn nontrivial_generators(&self) -> Vec<Permutation> {
        self.inner.gens.iter().filter(|g| !g.is_identity()).cloned().collect()
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.inner
            .bsgs
            .get_or_init(|| Bsgs::build(self.inner.degree, &self.inner.gens, &self.inner.base_prefix))
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.iter().all(|g| g.is_identity())
    }

    /// Membership by sifting. Errors on a degree mismatch.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        check_degree(self.degree(), p.degree())?;
        Ok(self.has(p))
    }

    /// Membership for a permutation already known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        self.bsgs().contains(p)
    }

    /// True if every generator of `sub` lies in `self`.
    pub fn contains_group(&self, sub: &GroupHandle) -> bool {
        sub.degree() == self.degree() && sub.generators().iter().all(|g| self.has(g))
    }

    /// Errors with the index of the first generator of `sub` outside `self`.
    pub fn check_subgroup(&self, sub: &GroupHandle) -> Result<()> {
        check_degree(self.degree(), sub.degree())?;
        match sub.generators().iter().position(|g| !self.has(g)) {
            Some(index) => Err(Error::NotSubgroup { index }),
            None => Ok(()),
        }
    }

    /// Same group, possibly different generators.
    pub fn same_group(&self, other: &GroupHandle) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    /// Orbits on points, each sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree(), self.generators())
    }

    pub fn orbit_of(&self, point: u32) -> Vec<u32> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = vec![point];
        seen[point as usize] = true;
        let mut k = 0;
        while k < out.len() {
            let a = out[k];
            for g in self.generators() {
                let b = g.image(a);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    out.push(b);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of(0).len() == self.degree()
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.bsgs().random_element(rng)
    }

    /// `self.order()` as a `u64` if it is at most `cap`.
    pub fn order_under(&self, cap: u64, what: &str) -> Result<u64> {
        let order = self.order();
        match order.to_u64() {
            Some(o) if o <= cap => Ok(o),
            _ => Err(Error::cap(format!("order of {what}"), &order, cap)),
        }
    }

    /// All elements, each exactly once.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<Permutation>> {
        self.order_under(cap, "group to enumerate")?;
        Ok(self.bsgs().elements())
    }

    /// Conjugate group `self^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        self.subgroup(self.generators().iter().map(|s| s.conjugate_by(g)).collect())
    }

    /// True if `g` normalizes `self`.
    pub fn normalized_by(&self, g: &Permutation) -> bool {
        self.generators().iter().all(|s| self.has(&s.conjugate_by(g)))
    }

    pub fn is_normal_in(&self, g: &GroupHandle) -> bool {
        g.generators().iter().all(|x| self.normalized_by(x))
    }

    /// Errors with a conjugate witness unless `self` is normal in `g`.
    pub fn check_normal_in(&self, g: &GroupHandle) -> Result<()> {
        for x in g.generators() {
            for s in self.generators() {
                let c = s.conjugate_by(x);
                if !self.has(&c) {
                    return Err(Error::NotNormal {
                        witness: c.to_cycle_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> GroupHandle {
        let mut cur_gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut n = self.subgroup(cur_gens.clone());
        let mut queue: VecDeque<Permutation> = cur_gens.iter().cloned().collect();
        while let Some(s) = queue.pop_front() {
            for x in self.generators() {
                let c = s.conjugate_by(x);
                if !n.has(&c) {
                    cur_gens.push(c.clone());
                    n = self.subgroup(cur_gens.clone());
                    queue.push_back(c);
                }
            }
        }
        n
    }

    /// `N_self(h)` by brute force over the elements of `self`.
    pub fn normalizer(&self, h: &GroupHandle, limits: &Limits) -> Result<GroupHandle> {
        self.check_subgroup(h)?;
        if self.order_under(limits.max_order, "group").is_err() {
            return Err(Error::cap(
                "order of group (too large for exact normalizer)",
                self.order(),
                limits.max_order,
            ));
        }
        let mut gens = h.nontrivial_generators();
        let mut n = self.subgroup(gens.clone());
        if n.order() == self.order() {
            return Ok(self.clone());
        }
        for g in self.bsgs().elements() {
            if n.has(&g) || !h.normalized_by(&g) {
                continue;
            }
            gens.push(g);
            n = self.subgroup(gens.clone());
            if n.order() == self.order() {
                break;
            }
        }
        Ok(n)
    }

    /// Conjugacy class representatives by brute force, as `(rep, size)`.
    pub fn conjugacy_classes(&self, limits: &Limits) -> Result<Vec<(Permutation, u64)>> {
        let elements = self.enumerate(limits.max_order)?;
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
        let mut out = Vec::new();
        for x in elements {
            if seen.contains(&x) {
                continue;
            }
            let mut class = vec![x.clone()];
            seen.insert(x.clone());
            let mut k = 0;
            while k < class.len() {
                let y = class[k].clone();
                for g in self.generators() {
                    let z = y.conjugate_by(g);
                    if seen.insert(z.clone()) {
                        class.push(z);
                    }
                }
                k += 1;
            }
            out.push((x, class.len() as u64));
        }
        Ok(out)
    }

    /// `[self : sub]` for a subgroup `sub`.
    pub fn index_of(&self, sub: &GroupHandle) -> BigUint {
        self.order() / sub.order()
    }

    pub fn is_identity_group(&self) -> bool {
        self.order().is_one()
    }

    /// Group file text (1-indexed cycle notation).
    pub fn to_group_file(&self) -> String {
        let mut s = format!("degree {}\n", self.degree());
        for g in self.generators() {
            s.push_str(&g.to_cycle_string());
            s.push('\n');
        }
        s
    }
}

/// Orbits of the group generated by `gens` on `{0, .., degree-1}`.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let a = orbit[k];
            for g in gens {
                let b = g.image(a);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    orbit.push(b);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Standard generators of `S_n`: a transposition and an `n`-cycle.
pub fn symmetric(n: usize) -> GroupHandle {
    if n < 2 {
        return GroupHandle::trivial(n.max(1));
    }
    let t = Permutation::cycle(n, &[0, 1]).expect("valid");
    let c = Permutation::cycle(n, &(0..n as u32).collect::<Vec<_>>()).expect("valid");
    GroupHandle::from_parts(n, vec![t, c], Vec::new())
}

/// Generators of `A_n`: the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> GroupHandle {
    if n < 3 {
        return GroupHandle::trivial(n.max(1));
    }
    let gens = (2..n as u32)
        .map(|k| Permutation::cycle(n, &[0, 1, k]).expect("valid"))
        .collect();
    GroupHandle::from_parts(n, gens, Vec::new())
}
