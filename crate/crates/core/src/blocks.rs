//! Block systems of transitive groups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupHandle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BlockVerdict {
    Primitive,
    /// Blocks sorted by least point, each sorted.
    Blocks(Vec<Vec<u32>>),
}

impl BlockVerdict {
    pub fn is_primitive(&self) -> bool {
        matches!(self, BlockVerdict::Primitive)
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

/// The finest block system in which `a` and `b` share a block.
pub fn block_system_joining(g: &GroupHandle, a: u32, b: u32) -> Vec<Vec<u32>> {
    block_system_merging(g, &[a, b])
}

/// The finest block system in which all of `points` share a block.
pub fn block_system_merging(g: &GroupHandle, points: &[u32]) -> Vec<Vec<u32>> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    if let Some((&a, rest)) = points.split_first() {
        for &b in rest {
            if uf.union(a, b) {
                queue.push((a, b));
            }
        }
    }
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (sx, sy) = (s.image(x), s.image(y));
            if uf.union(sx, sy) {
                queue.push((sx, sy));
            }
        }
    }
    let mut classes: Vec<Vec<u32>> = vec![Vec::new(); n];
    for x in 0..n as u32 {
        let r = uf.find(x);
        classes[r as usize].push(x);
    }
    classes.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Seeds the pairs `(0, k)` in ascending `k` and returns the first nontrivial
/// block system found, or `Primitive` if none is.
pub fn minimal_blocks(g: &GroupHandle) -> Result<BlockVerdict> {
    if !g.is_transitive() {
        return Err(Error::Intransitive { orbits: g.orbits() });
    }
    for k in 1..g.degree() as u32 {
        let blocks = block_system_joining(g, 0, k);
        if blocks.len() > 1 {
            return Ok(BlockVerdict::Blocks(blocks));
        }
    }
    Ok(BlockVerdict::Primitive)
}
