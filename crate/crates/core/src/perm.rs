//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Products are read left to right: `p * q` applies `p` first, then `q`, so
//! `(p * q).image(x) == q.image(p.image(x))`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n {
                return Err(Error::NotAPermutation(format!("image {i} out of range for degree {n}")));
            }
            if seen[i] {
                return Err(Error::NotAPermutation(format!("image {i} repeated")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a_us = a as usize;
                if a_us >= degree {
                    return Err(Error::NotAPermutation(format!(
                        "point {a} out of range for degree {degree}"
                    )));
                }
                if touched[a_us] {
                    return Err(Error::NotAPermutation(format!("point {a} appears twice")));
                }
                touched[a_us] = true;
                images[a_us] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// A single cycle on the given points.
    pub fn cycle(degree: usize, points: &[u32]) -> Result<Self> {
        Self::from_cycles(degree, &[points.to_vec()])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. apply `self` first. Errors on a degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    /// `g^-1 * self * g`; maps the cycle `(a b ..)` to `(a^g b^g ..)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            images[g.images[a] as usize] = g.images[b as usize];
        }
        Permutation { images }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Self {
        let e = BigUint::from(exp.unsigned_abs());
        let p = self.pow_big(&e);
        if exp < 0 {
            p.inverse()
        } else {
            p
        }
    }

    /// Power with an arbitrary-precision exponent, computed cycle by cycle.
    pub fn pow_big(&self, exp: &BigUint) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (exp % BigUint::from(len)).to_usize().unwrap_or(0);
            for (k, &a) in cycle.iter().enumerate() {
                images[a as usize] = cycle[(k + shift) % len];
            }
        }
        Permutation { images }
    }

    /// All cycles including fixed points, each starting at its least point,
    /// in increasing order of that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Nontrivial cycles only.
    pub fn moved_cycles(&self) -> Vec<Vec<u32>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn order(&self) -> BigUint {
        self.cycle_type().order()
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i as u32 == j).count()
    }

    pub fn support(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
            .collect()
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    /// Same permutation on a larger domain, fixing the new points.
    pub fn extend(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// `self^m` where `m` is the largest divisor of the order prime to `p`;
    /// the result has `p`-power order and lies in the cyclic group of `self`.
    pub fn p_part(&self, p: u64) -> Self {
        let pb = BigUint::from(p);
        let mut rest = self.order();
        while (&rest % &pb).is_zero() {
            rest /= &pb;
        }
        self.pow_big(&rest)
    }

    /// Disjoint-cycle notation with 1-indexed points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.moved_cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, a) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&(a + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses 1-indexed disjoint-cycle notation such as `(1,2)(3,4,5)`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        parse_cycle_line(text, degree, 1)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.mul_unchecked(rhs)
    }
}

pub(crate) fn check_degree(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DegreeMismatch { expected, found });
    }
    Ok(())
}

/// Parses one line of cycle notation. `line` is only used for error positions.
pub(crate) fn parse_cycle_line(text: &str, degree: usize, line: usize) -> Result<Permutation> {
    let err = |column: usize, message: &str| Error::Parse {
        line,
        column,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(err(1, "empty permutation"));
    }
    let mut seen = vec![false; degree];
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(err(i + 1, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                return Err(err(i + 1, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            if !cycle.is_empty() {
                if bytes[i] != b',' {
                    return Err(err(i + 1, "expected ',' or ')'"));
                }
                i += 1;
                skip_ws(&mut i);
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(start + 1, "expected a point number"));
            }
            let point: usize = text[start..i]
                .parse()
                .map_err(|_| err(start + 1, "point number too large"))?;
            if point == 0 || point > degree {
                return Err(Error::PointOutOfRange { point, degree, line });
            }
            if seen[point - 1] {
                return Err(err(start + 1, "point repeated within the permutation"));
            }
            seen[point - 1] = true;
            cycle.push((point - 1) as u32);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Multiset of cycle lengths, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    /// Sorted in decreasing order.
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn from_lengths(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn degree(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn order(&self) -> BigUint {
        self.lengths
            .iter()
            .fold(BigUint::one(), |acc, &l| acc.lcm(&BigUint::from(l)))
    }

    pub fn count(&self, len: usize) -> usize {
        self.lengths.iter().filter(|&&l| l == len).count()
    }

    pub fn longest(&self) -> usize {
        self.lengths.first().copied().unwrap_or(0)
    }
}
