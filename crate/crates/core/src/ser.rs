//! Serde helpers: big integers as decimal strings, permutations in cycle notation.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serializer;

use crate::perm::Permutation;

pub fn big<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub fn rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn perm<S: Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_cycle_string())
}

pub fn opt_perm<S: Serializer>(p: &Option<Permutation>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.to_cycle_string()),
        None => s.serialize_none(),
    }
}

pub fn perms<S: Serializer>(ps: &[Permutation], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_cycle_string()))
}
