//! Minimal normal subgroups and the largest normal pi-subgroup.

use crate::arith::is_pi_number;
use crate::error::Result;
use crate::group::{GroupHandle, Limits};

use super::hom::quotient;

/// All inclusion-minimal nontrivial normal subgroups, as the minimal members
/// among normal closures of class representatives.
pub fn minimal_normal_subgroups(g: &GroupHandle, limits: &Limits) -> Result<Vec<GroupHandle>> {
    let classes = g.conjugacy_classes(limits)?;
    let mut closures: Vec<GroupHandle> = Vec::new();
    for (rep, _) in classes {
        if rep.is_identity() {
            continue;
        }
        let n = g.normal_closure(&[rep]);
        if !closures.iter().any(|c| c.same_group(&n)) {
            closures.push(n);
        }
    }
    let minimal = closures
        .iter()
        .filter(|n| !closures.iter().any(|m| m.order() < n.order() && n.contains_group(m)))
        .cloned()
        .collect();
    Ok(minimal)
}

/// `O_pi(G)`, by peeling off minimal normal pi-subgroups one quotient at a time.
pub fn o_pi(g: &GroupHandle, pi: &[u64], limits: &Limits) -> Result<GroupHandle> {
    if g.is_trivial() {
        return Ok(g.clone());
    }
    if is_pi_number(&g.order(), pi) {
        return Ok(g.clone());
    }
    let minimal = minimal_normal_subgroups(g, limits)?;
    let Some(a) = minimal.into_iter().find(|a| is_pi_number(&a.order(), pi)) else {
        return Ok(GroupHandle::trivial(g.degree()));
    };
    let f = quotient(g, &a, limits)?;
    let above = o_pi(f.target(), pi, limits)?;
    f.preimage(&above)
}
