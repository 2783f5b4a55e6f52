//! Action of a group on the right cosets of a subgroup.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::{check_degree, Permutation};

/// `G` acting on the right cosets `M r_0, M r_1, ..` by right multiplication.
/// Coset `0` is `M` itself.
pub struct CosetAction {
    group: GroupHandle,
    sub: GroupHandle,
    reps: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    image: GroupHandle,
}

impl CosetAction {
    pub fn new(g: &GroupHandle, m: &GroupHandle, limits: &Limits) -> Result<Self> {
        g.check_subgroup(m)?;
        let idx = g.index_of(m);
        match idx.to_usize() {
            Some(i) if i <= limits.max_degree => {}
            _ => return Err(Error::cap("coset action degree", &idx, limits.max_degree)),
        }
        let mb: &Bsgs = m.bsgs();
        let degree = g.degree();
        let id = Permutation::identity(degree);
        let mut reps = vec![mb.canonical_right_coset_rep(&id)];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(reps[0].clone(), 0);
        let gens = g.generators();
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut k = 0;
        while k < reps.len() {
            for (s_idx, s) in gens.iter().enumerate() {
                let c = mb.canonical_right_coset_rep(&reps[k].mul_unchecked(s));
                let j = match index.get(&c) {
                    Some(&j) => j,
                    None => {
                        let j = reps.len() as u32;
                        index.insert(c.clone(), j);
                        reps.push(c);
                        j
                    }
                };
                images[s_idx].push(j);
            }
            k += 1;
        }
        let n = reps.len();
        let image_gens = images
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect::<Vec<_>>();
        debug_assert!(image_gens.iter().all(|p| p.degree() == n));
        let image = GroupHandle::new(n, image_gens)?;
        Ok(CosetAction {
            group: g.clone(),
            sub: m.clone(),
            reps,
            index,
            image,
        })
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// The permutation group induced on the cosets.
    pub fn image(&self) -> &GroupHandle {
        &self.image
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn subgroup(&self) -> &GroupHandle {
        &self.sub
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Index of the coset `M g`.
    pub fn coset_of(&self, g: &Permutation) -> u32 {
        let c = self.sub.bsgs().canonical_right_coset_rep(g);
        self.index[&c]
    }

    /// Image of an element of `G` in the coset action.
    pub fn act(&self, x: &Permutation) -> Result<Permutation> {
        check_degree(self.group.degree(), x.degree())?;
        if !self.group.has(x) {
            return Err(Error::InvalidInput(format!("{x} is not in the group")));
        }
        Ok(self.act_unchecked(x))
    }

    pub(crate) fn act_unchecked(&self, x: &Permutation) -> Permutation {
        let images = self.reps.iter().map(|r| self.coset_of(&r.mul_unchecked(x))).collect();
        Permutation::from_images_unchecked(images)
    }

    /// Number of cosets fixed by `x`, i.e. the permutation character at `x`.
    pub fn fixed_cosets(&self, x: &Permutation) -> Result<u64> {
        check_degree(self.group.degree(), x.degree())?;
        if !self.group.has(x) {
            return Err(Error::InvalidInput(format!("{x} is not in the group")));
        }
        let mb = self.sub.bsgs();
        Ok(self
            .reps
            .iter()
            .filter(|r| &mb.canonical_right_coset_rep(&r.mul_unchecked(x)) == *r)
            .count() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use num_bigint::BigUint;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn point_stabilizer_in_s4() {
        let s4 = symmetric(4);
        let s3 = GroupHandle::new(4, vec![p("(1,2)", 4), p("(1,2,3)", 4)]).unwrap();
        let act = CosetAction::new(&s4, &s3, &Limits::default()).unwrap();
        assert_eq!(act.degree(), 4);
        assert_eq!(act.image().order(), BigUint::from(24u32));
        // fixed cosets agree with fixed points of the natural action
        for g in s4.enumerate(100).unwrap() {
            assert_eq!(act.fixed_cosets(&g).unwrap() as usize, g.fixed_points());
        }
    }

    #[test]
    fn whole_group_gives_degree_one() {
        let a5 = alternating(5);
        let act = CosetAction::new(&a5, &a5, &Limits::default()).unwrap();
        assert_eq!(act.degree(), 1);
    }

    #[test]
    fn a5_on_a4_cosets() {
        let a5 = alternating(5);
        let a4 = GroupHandle::new(5, vec![p("(1,2,3)", 5), p("(2,3,4)", 5)]).unwrap();
        let act = CosetAction::new(&a5, &a4, &Limits::default()).unwrap();
        assert_eq!(act.degree(), 5);
        assert!(act.image().is_transitive());
        assert_eq!(act.image().order(), BigUint::from(60u32));
    }

    #[test]
    fn stabilizer_of_base_coset_is_subgroup() {
        let s5 = symmetric(5);
        let m = GroupHandle::new(5, vec![p("(1,2,3,4,5)", 5), p("(2,5)(3,4)", 5)]).unwrap();
        let act = CosetAction::new(&s5, &m, &Limits::default()).unwrap();
        assert_eq!(act.degree(), 12);
        for g in s5.enumerate(200).unwrap() {
            assert_eq!(act.act(&g).unwrap().image(0) == 0, m.has(&g));
        }
    }

    #[test]
    fn non_subgroup_rejected() {
        let a5 = alternating(5);
        let t = GroupHandle::new(5, vec![p("(1,2)", 5)]).unwrap();
        assert!(matches!(
            CosetAction::new(&a5, &t, &Limits::default()),
            Err(Error::NotSubgroup { .. })
        ));
    }
}
