//! Base and strong generating set, built by deterministic Schreier–Sims
//! with explicit transversals.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

/// One level of the stabilizer chain: the group fixing all earlier base
/// points, acting on the orbit of this level's base point.
#[derive(Clone, Debug)]
pub struct Level {
    point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `slot[x]` indexes `reps` for orbit points, `NONE` otherwise.
    slot: Vec<u32>,
    /// `reps[k]` maps `point` to `orbit[k]`.
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            slot: vec![NONE; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.slot.iter_mut().for_each(|s| *s = NONE);
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        let id = Permutation::identity(degree);
        self.slot[self.point as usize] = 0;
        self.orbit.push(self.point);
        self.reps.push(id.clone());
        self.inv_reps.push(id);
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in &self.gens {
                let gamma = s.image(beta);
                if self.slot[gamma as usize] == NONE {
                    let rep = self.reps[k].mul_unchecked(s);
                    self.slot[gamma as usize] = self.orbit.len() as u32;
                    self.orbit.push(gamma);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            k += 1;
        }
    }

    pub fn base_point(&self) -> u32 {
        self.point
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Transversal element sending the base point to `x`, if `x` is in the orbit.
    pub fn transversal(&self, x: u32) -> Option<&Permutation> {
        match self.slot[x as usize] {
            NONE => None,
            k => Some(&self.reps[k as usize]),
        }
    }

    pub fn transversal_elements(&self) -> &[Permutation] {
        &self.reps
    }
}

#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Runs Schreier–Sims on `gens`. Points of `initial_base` come first in
    /// the base, in the given order, even if some of them are redundant.
    pub fn build(degree: usize, gens: &[Permutation], initial_base: &[u32]) -> Self {
        let strong: Vec<Permutation> = {
            let mut v: Vec<Permutation> = Vec::new();
            for g in gens {
                if !g.is_identity() && !v.contains(g) {
                    v.push(g.clone());
                }
            }
            v
        };
        let mut base: Vec<u32> = initial_base.to_vec();
        for g in &strong {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level {
                point: b,
                gens: strong
                    .iter()
                    .filter(|s| base[..i].iter().all(|&c| s.image(c) == c))
                    .cloned()
                    .collect(),
                orbit: Vec::new(),
                slot: vec![NONE; degree],
                reps: Vec::new(),
                inv_reps: Vec::new(),
            };
            level.rebuild_orbit(degree);
            levels.push(level);
        }
        let mut bsgs = Bsgs { degree, levels };
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart: Option<usize> = None;
            'scan: for k in 0..self.levels[iu].orbit.len() {
                for s_idx in 0..self.levels[iu].gens.len() {
                    let level = &self.levels[iu];
                    let s = &level.gens[s_idx];
                    let beta = level.orbit[k];
                    let gamma = s.image(beta);
                    let g_slot = level.slot[gamma as usize] as usize;
                    // Schreier generator u_beta * s * u_gamma^-1 fixes the base point.
                    let h = level.reps[k].mul_unchecked(s).mul_unchecked(&level.inv_reps[g_slot]);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.sift_from(&h, iu + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if drop == self.levels.len() {
                        let b = residue.first_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(b, degree));
                    }
                    for l in iu + 1..=drop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(degree);
                    }
                    restart = Some(drop);
                    break 'scan;
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// All strong generators (those of the first level).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| &l.gens[..]).unwrap_or(&[])
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` starting at level `start`. Returns the residue and the index
    /// of the level where sifting stopped (`levels.len()` if it went through).
    pub fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (idx, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.image(level.point);
            match level.slot[b as usize] {
                NONE => return (h, idx),
                k => h = h.mul_unchecked(&level.inv_reps[k as usize]),
            }
        }
        (h, self.levels.len())
    }

    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g, 0)
    }

    /// Sifts through the first `upto` levels only; `None` if `g` leaves an orbit.
    pub fn sift_prefix(&self, g: &Permutation, upto: usize) -> Option<Permutation> {
        let mut h = g.clone();
        for level in self.levels.iter().take(upto) {
            match level.slot[h.image(level.point) as usize] {
                NONE => return None,
                k => h = h.mul_unchecked(&level.inv_reps[k as usize]),
            }
        }
        Some(h)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.sift(g);
        drop == self.levels.len() && residue.is_identity()
    }

    /// Uniform random element: a product of uniform transversal picks,
    /// deepest level first.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.reps.len());
            g = g.mul_unchecked(&level.reps[k]);
        }
        g
    }

    /// Every element exactly once.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for g in &out {
                for r in &level.reps {
                    next.push(g.mul_unchecked(r));
                }
            }
            out = next;
        }
        out
    }

    /// The least element of the right coset `H g`, where `H` is the group of
    /// this chain, in the order that compares images of the base points.
    /// Two elements lie in the same right coset iff their representatives agree.
    pub fn canonical_right_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let mut best = 0usize;
            let mut best_img = u32::MAX;
            for (k, &beta) in level.orbit.iter().enumerate() {
                let img = h.image(beta);
                if img < best_img {
                    best_img = img;
                    best = k;
                }
            }
            if best != 0 {
                h = level.reps[best].mul_unchecked(&h);
            }
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn sym(n: usize) -> Bsgs {
        let gens = vec![
            p("(1,2)", n),
            Permutation::cycle(n, &(0..n as u32).collect::<Vec<_>>()).unwrap(),
        ];
        Bsgs::build(n, &gens, &[])
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(sym(5).order(), BigUint::from(120u32));
        assert_eq!(sym(7).order(), BigUint::from(5040u32));
    }

    #[test]
    fn strong_generators_sift_to_identity() {
        let b = sym(6);
        for level in b.levels() {
            for s in level.generators() {
                assert!(b.contains(s));
            }
        }
    }

    #[test]
    fn redundant_initial_base_kept() {
        let gens = vec![p("(1,2,3)", 5)];
        let b = Bsgs::build(5, &gens, &[4, 3]);
        assert_eq!(&b.base()[..2], &[4, 3]);
        assert_eq!(b.order(), BigUint::from(3u32));
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let b = sym(5);
        let all = b.elements();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), 120);
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn canonical_coset_rep_classifies_cosets() {
        // H = <(0 1 2)> in S4: 8 right cosets
        let g = sym(4);
        let h = Bsgs::build(4, &[p("(1,2,3)", 4)], &[]);
        let mut reps = HashSet::new();
        for x in g.elements() {
            let r = h.canonical_right_coset_rep(&x);
            // r is in the coset H x
            assert!(h.contains(&(&r * &x.inverse())));
            reps.insert(r);
        }
        assert_eq!(reps.len(), 8);
    }

    #[test]
    fn random_elements_are_members() {
        let b = sym(8);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            assert!(b.contains(&b.random_element(&mut rng)));
        }
    }
}
