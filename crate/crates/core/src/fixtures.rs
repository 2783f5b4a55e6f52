//! Bound inputs rebuilt from generators: sampled classes, odd-index maximal
//! subgroups, their permutation characters and `[N(P):P]` for a Sylow
//! 2-subgroup `P`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::Rng;

use crate::arith::p_part;
use crate::blocks::{block_system_joining, block_system_merging, minimal_blocks};
use crate::bound::{consistency_check, perm_character_from_subgroup, BoundInput, ClassDatum, PermCharColumn};
use crate::classes::ClassTable;
use crate::coset::CosetAction;
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::Permutation;
use crate::sylow::sylow_generic;

fn block_of_zero(blocks: Vec<Vec<u32>>) -> Vec<u32> {
    blocks
        .into_iter()
        .find(|b| b.first() == Some(&0))
        .expect("0 lies in some block")
}

/// Maximal subgroups of odd index up to conjugacy. Each contains a
/// conjugate of the Sylow 2-subgroup `p`, so they are found as maximal
/// blocks through the coset `P` in the action on the cosets of `P`.
pub fn odd_index_maximals(g: &GroupHandle, p: &GroupHandle, limits: &Limits) -> Result<Vec<GroupHandle>> {
    let action = CosetAction::new(g, p, limits)?;
    let x = action.image();
    let n = action.degree();
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut minimal: BTreeSet<Vec<u32>> = BTreeSet::new();
    for b in 1..n as u32 {
        let block = block_of_zero(block_system_joining(x, 0, b));
        if block.len() < n {
            minimal.insert(block);
        }
    }
    let minimal: Vec<Vec<u32>> = minimal.into_iter().collect();
    let mut all: BTreeSet<Vec<u32>> = minimal.iter().cloned().collect();
    let mut queue: Vec<Vec<u32>> = minimal.clone();
    while let Some(b) = queue.pop() {
        let mut inside = vec![false; n];
        b.iter().for_each(|&y| inside[y as usize] = true);
        for m in &minimal {
            if m.iter().all(|&y| inside[y as usize]) {
                continue;
            }
            let seeds: Vec<u32> = b.iter().chain(m.iter()).copied().collect();
            let joined = block_of_zero(block_system_merging(x, &seeds));
            if joined.len() < n && all.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let all: Vec<Vec<u32>> = all.into_iter().collect();
    let maximal_blocks = all.iter().filter(|b| {
        !all.iter()
            .any(|c| c.len() > b.len() && b.iter().all(|y| c.binary_search(y).is_ok()))
    });
    let mut kept: Vec<(GroupHandle, CosetAction)> = Vec::new();
    for block in maximal_blocks {
        let target = p.order() * BigUint::from(block.len());
        let mut gens = p.nontrivial_generators();
        let mut k = g.subgroup(gens.clone());
        for &y in block {
            if k.order() == target {
                break;
            }
            let r = &action.representatives()[y as usize];
            if !k.has(r) {
                gens.push(r.clone());
                k = g.subgroup(gens.clone());
            }
        }
        debug_assert_eq!(k.order(), target);
        if kept.iter().any(|(m, a)| m.order() == k.order() && fixes_a_coset(a, &k)) {
            continue;
        }
        let a = CosetAction::new(g, &k, limits)?;
        kept.push((k, a));
    }
    let mut out: Vec<GroupHandle> = kept.into_iter().map(|(m, _)| m).collect();
    out.sort_by_key(|m| std::cmp::Reverse(m.order()));
    Ok(out)
}

/// True if `k` fixes one of the cosets acted on, i.e. lies in a conjugate
/// of the subgroup.
fn fixes_a_coset(a: &CosetAction, k: &GroupHandle) -> bool {
    let images: Vec<Permutation> = k.generators().iter().map(|s| a.act_unchecked(s)).collect();
    (0..a.degree() as u32).any(|c| images.iter().all(|s| s.image(c) == c))
}

/// Subgroup, odd index and primitive coset action (so maximal).
pub fn check_odd_index_maximal(g: &GroupHandle, m: &GroupHandle, limits: &Limits) -> Result<()> {
    g.check_subgroup(m)?;
    let index = g.index_of(m);
    if !index.bit(0) {
        return Err(Error::InvalidInput(format!("subgroup has even index {index}")));
    }
    let action = CosetAction::new(g, m, limits)?;
    if action.degree() > 1 && !minimal_blocks(action.image())?.is_primitive() {
        return Err(Error::InvalidInput(format!("subgroup of index {index} is not maximal")));
    }
    Ok(())
}

/// `[N_G(P):P]` and a note on how it was obtained. When `Z(P)` has order 2,
/// `N_G(P)` lies in the centralizer of its involution `z`; if one of
/// `candidates` is that centralizer (it contains `P`, commutes with `z`
/// and has order `|G| / |z^G|`), the normalizer is computed there.
/// Otherwise `G` is searched directly.
pub fn sylow_normalizer_index(
    g: &GroupHandle,
    p: &GroupHandle,
    table: &ClassTable,
    candidates: &[GroupHandle],
    limits: &Limits,
) -> Result<(BigUint, String)> {
    if let Some((z, m)) = central_involution_centralizer(g, p, table, candidates, limits)? {
        let n = m.normalizer(p, limits)?;
        let note = format!(
            "N(P) <= C(z) for the central involution z = {} of P; C(z) has order {} and is a candidate",
            z.to_cycle_string(),
            m.order()
        );
        return Ok((n.order() / p.order(), note));
    }
    let n = g.normalizer(p, limits)?;
    Ok((n.order() / p.order(), "N(P) computed in the whole group".into()))
}

fn central_involution_centralizer(
    g: &GroupHandle,
    p: &GroupHandle,
    table: &ClassTable,
    candidates: &[GroupHandle],
    limits: &Limits,
) -> Result<Option<(Permutation, GroupHandle)>> {
    let center: Vec<Permutation> = p
        .enumerate(limits.max_order)?
        .into_iter()
        .filter(|x| p.generators().iter().all(|s| x * s == s * x))
        .collect();
    if center.len() != 2 {
        return Ok(None);
    }
    let z = center.into_iter().find(|x| !x.is_identity()).expect("order 2");
    let Some(class) = table.class_of(&z) else {
        return Err(Error::Internal(
            "central involution missing from the class table".into(),
        ));
    };
    let centralizer_order = g.order() / BigUint::from(class.size);
    let found = candidates.iter().find(|m| {
        m.order() == centralizer_order && m.contains_group(p) && m.generators().iter().all(|s| s * &z == &z * s)
    });
    Ok(found.map(|m| (z.clone(), m.clone())))
}

/// Everything behind a derived bound input.
pub struct Derivation {
    pub input: BoundInput,
    pub sylow: GroupHandle,
    pub maximals: Vec<GroupHandle>,
    pub normalizer_note: String,
}

/// Builds the bound input of `g` from scratch. `supplied` maximal subgroups
/// are checked for odd index and maximality but not for completeness;
/// without them the odd-index maximals are computed.
pub fn derive_bound_input<R: Rng + ?Sized>(
    name: &str,
    g: &GroupHandle,
    supplied: Option<Vec<GroupHandle>>,
    rng: &mut R,
    limits: &Limits,
) -> Result<Derivation> {
    let order = g.order();
    let sylow_order = p_part(&order, 2);
    let table = ClassTable::build(g, rng, limits)?;
    let (sylow, maximals) = match supplied {
        Some(ms) => {
            for m in &ms {
                check_odd_index_maximal(g, m, limits)?;
            }
            let host = ms.first().unwrap_or(g);
            let sylow = sylow_generic(host, 2, rng, limits)?.group;
            (sylow, ms)
        }
        None => {
            let sylow = sylow_generic(g, 2, rng, limits)?.group;
            let ms = odd_index_maximals(g, &sylow, limits)?;
            (sylow, ms)
        }
    };
    if sylow.order() != sylow_order {
        return Err(Error::Internal(
            "Sylow 2-subgroup of a maximal subgroup has the wrong order".into(),
        ));
    }
    let reps: Vec<Permutation> = table.classes().iter().map(|c| c.representative.clone()).collect();
    let mut columns: Vec<(PermCharColumn, GroupHandle)> = maximals
        .iter()
        .map(|m| perm_character_from_subgroup(g, m, &reps, "", limits).map(|c| (c, m.clone())))
        .collect::<Result<_>>()?;
    columns.sort_by(|a, b| (&a.0.degree, &a.0.values).cmp(&(&b.0.degree, &b.0.values)));
    for i in 0..columns.len() {
        let same: Vec<usize> = (0..columns.len())
            .filter(|&j| columns[j].0.degree == columns[i].0.degree)
            .collect();
        let suffix = if same.len() > 1 {
            ((b'a' + same.iter().position(|&j| j == i).unwrap_or(0) as u8) as char).to_string()
        } else {
            String::new()
        };
        columns[i].0.label = format!("M{}{suffix}", columns[i].0.degree);
    }
    let maximals: Vec<GroupHandle> = columns.iter().map(|c| c.1.clone()).collect();
    let (normalizer_index, normalizer_note) = sylow_normalizer_index(g, &sylow, &table, &maximals, limits)?;
    let input = BoundInput {
        group: name.to_string(),
        order: order.clone(),
        normalizer_index,
        classes: table
            .classes()
            .iter()
            .map(|c| ClassDatum {
                name: c.name.clone(),
                size: BigUint::from(c.size),
                order: c.order,
                representative: Some(c.representative.to_cycle_string()),
            })
            .collect(),
        maximals: columns.into_iter().map(|c| c.0).collect(),
        degree: Some(g.degree()),
        generators: Some(g.generators().iter().map(|s| s.to_cycle_string()).collect()),
    };
    let violations = consistency_check(&input);
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Internal(format!(
            "derived data inconsistent: {}",
            list.join("; ")
        )));
    }
    Ok(Derivation {
        input,
        sylow,
        maximals,
        normalizer_note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, symmetric};
    use num_traits::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn indices(ms: &[GroupHandle], g: &GroupHandle) -> Vec<u64> {
        let mut v: Vec<u64> = ms.iter().map(|m| g.index_of(m).to_u64().unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn small_odd_index_maximals() {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // odd indices only: A4 in A5, S4 in S5, the two classes of S4 in A6
        for (g, expected) in [
            (alternating(5), vec![5u64]),
            (symmetric(5), vec![5]),
            (alternating(6), vec![15, 15]),
        ] {
            let p = sylow_generic(&g, 2, &mut rng, &l).unwrap().group;
            let ms = odd_index_maximals(&g, &p, &l).unwrap();
            assert_eq!(indices(&ms, &g), expected);
            for m in &ms {
                check_odd_index_maximal(&g, m, &l).unwrap();
            }
        }
    }

    #[test]
    fn odd_index_maximals_match_brute_force_in_s6() {
        // oracle: the maximal members among the proper subgroups <P, x>
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = symmetric(6);
        let p = sylow_generic(&g, 2, &mut rng, &l).unwrap().group;
        let ms = odd_index_maximals(&g, &p, &l).unwrap();
        // S6 odd-index maximals: S4 x S2 (15) and its outer-automorphism image S2 wr S3 (15)
        assert_eq!(indices(&ms, &g), vec![15, 15]);
        let mut overgroups: Vec<GroupHandle> = Vec::new();
        for x in g.enumerate(1000).unwrap() {
            let h = p.join(&g.subgroup(vec![x]));
            if h.order() < g.order() && !overgroups.iter().any(|o| o.same_group(&h)) {
                overgroups.push(h);
            }
        }
        let maximal: Vec<&GroupHandle> = overgroups
            .iter()
            .filter(|h| !overgroups.iter().any(|o| o.order() > h.order() && o.contains_group(h)))
            .collect();
        assert_eq!(maximal.len(), 2);
    }

    #[test]
    fn even_index_rejected() {
        let l = Limits::default();
        let a4 = alternating(4);
        let c3 = a4.subgroup(vec![Permutation::parse_cycles("(1,2,3)", 4).unwrap()]);
        assert!(check_odd_index_maximal(&a4, &c3, &l).is_err());
    }
}
