//! Conjugacy classes of moderately large groups, found by random sampling
//! and closed under conjugation, with names of the form `<order><letter>`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub order: u64,
    pub size: u64,
    /// The least element of the class, comparing image lists.
    pub representative: Permutation,
}

/// Every element of the group, keyed by its image list, mapped to its class.
pub struct ClassTable {
    degree: usize,
    classes: Vec<ClassInfo>,
    lookup: HashMap<Box<[u8]>, u32>,
}

fn key(p: &Permutation) -> Box<[u8]> {
    p.images().iter().map(|&x| x as u8).collect()
}

impl ClassTable {
    /// Samples random elements and their powers until the class sizes add up
    /// to the group order. Names: classes of equal element order are lettered
    /// by increasing size, ties broken by the representative.
    pub fn build<R: Rng + ?Sized>(g: &GroupHandle, rng: &mut R, limits: &Limits) -> Result<Self> {
        if g.degree() > 256 {
            return Err(Error::cap("degree for sampled classes", g.degree(), 256));
        }
        let order = g.order_under(limits.max_order, "group for sampled classes")?;
        let mut found: Vec<(u64, u64, Permutation)> = Vec::new();
        let mut lookup: HashMap<Box<[u8]>, u32> = HashMap::with_capacity(order as usize);
        let mut covered = 0u64;
        let budget = 1000 * limits.trials.max(1);
        let mut draws = 0;
        let id = Permutation::identity(g.degree());
        let mut pending = vec![id];
        while covered < order {
            let Some(x) = pending.pop() else {
                if draws >= budget {
                    return Err(Error::BudgetExhausted(format!(
                        "classes cover {covered} of {order} elements after {draws} samples"
                    )));
                }
                draws += 1;
                let x = g.random_element(rng);
                let o = x.order().to_u64().expect("small order");
                for d in (1..=o).filter(|d| o.is_multiple_of(*d)) {
                    pending.push(x.pow(d as i64));
                }
                continue;
            };
            if lookup.contains_key(&key(&x)) {
                continue;
            }
            let idx = found.len() as u32;
            let mut class = vec![x.clone()];
            let mut least = key(&x);
            lookup.insert(least.clone(), idx);
            let mut k = 0;
            while k < class.len() {
                for s in g.generators() {
                    let z = class[k].conjugate_by(s);
                    let kz = key(&z);
                    if let Entry::Vacant(slot) = lookup.entry(kz) {
                        if **slot.key() < *least {
                            least = slot.key().clone();
                        }
                        slot.insert(idx);
                        class.push(z);
                    }
                }
                k += 1;
            }
            let rep = Permutation::from_images_unchecked(least.iter().map(|&b| b as u32).collect());
            let o = x.order().to_u64().expect("small order");
            covered += class.len() as u64;
            found.push((o, class.len() as u64, rep));
        }
        let mut perm: Vec<usize> = (0..found.len()).collect();
        perm.sort_by(|&a, &b| {
            let (oa, sa, ra) = &found[a];
            let (ob, sb, rb) = &found[b];
            (oa, sa, ra.images()).cmp(&(ob, sb, rb.images()))
        });
        let mut new_index = vec![0u32; found.len()];
        let mut classes = Vec::with_capacity(found.len());
        let mut letter = 0u8;
        for (pos, &old) in perm.iter().enumerate() {
            let (o, size, rep) = &found[old];
            if pos > 0 && found[perm[pos - 1]].0 == *o {
                letter += 1;
            } else {
                letter = 0;
            }
            new_index[old] = pos as u32;
            classes.push(ClassInfo {
                name: format!("{o}{}", class_letter(letter)),
                order: *o,
                size: *size,
                representative: rep.clone(),
            });
        }
        for v in lookup.values_mut() {
            *v = new_index[*v as usize];
        }
        Ok(ClassTable {
            degree: g.degree(),
            classes,
            lookup,
        })
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    /// The class of a group element; `None` for non-members.
    pub fn class_of(&self, x: &Permutation) -> Option<&ClassInfo> {
        if x.degree() != self.degree {
            return None;
        }
        self.lookup.get(&key(x)).map(|&i| &self.classes[i as usize])
    }
}

fn class_letter(k: u8) -> String {
    if k < 26 {
        ((b'A' + k) as char).to_string()
    } else {
        format!("{}{}", class_letter(k / 26 - 1), class_letter(k % 26))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_brute_force() {
        let l = Limits::default();
        for g in [symmetric(5), alternating(6)] {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            let table = ClassTable::build(&g, &mut rng, &l).unwrap();
            let mut sampled: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
            let mut brute: Vec<u64> = g.conjugacy_classes(&l).unwrap().iter().map(|c| c.1).collect();
            sampled.sort();
            brute.sort();
            assert_eq!(sampled, brute);
        }
    }

    #[test]
    fn a5_names() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let table = ClassTable::build(&alternating(5), &mut rng, &Limits::default()).unwrap();
        let names: Vec<(&str, u64)> = table.classes().iter().map(|c| (c.name.as_str(), c.size)).collect();
        assert_eq!(&names[..3], &[("1A", 1), ("2A", 15), ("3A", 20)]);
        assert_eq!(names[3].1, 12);
        assert_eq!(names[4].1, 12);
        let x = Permutation::parse_cycles("(1,2,3)", 5).unwrap();
        assert_eq!(table.class_of(&x).unwrap().name, "3A");
    }

    #[test]
    fn names_do_not_depend_on_seed() {
        let g = symmetric(6);
        let l = Limits::default();
        let a = ClassTable::build(&g, &mut ChaCha8Rng::seed_from_u64(1), &l).unwrap();
        let b = ClassTable::build(&g, &mut ChaCha8Rng::seed_from_u64(2), &l).unwrap();
        assert_eq!(a.classes(), b.classes());
    }

    #[test]
    fn letters() {
        assert_eq!(class_letter(0), "A");
        assert_eq!(class_letter(25), "Z");
        assert_eq!(class_letter(26), "AA");
    }
}
