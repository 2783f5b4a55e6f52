//! Surjective homomorphisms between permutation groups.

use std::sync::Arc;

use crate::bsgs::Bsgs;
use crate::coset::CosetAction;
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::{check_degree, Permutation};

enum Map {
    /// Action on the right cosets of the kernel.
    Cosets(Arc<CosetAction>),
    /// The graph `{(g, f(g))}` on the disjoint union of both domains, with
    /// one chain based on the source points first and one on the target points.
    Graph(Arc<GraphMap>),
}

struct GraphMap {
    n: usize,
    m: usize,
    by_source: Bsgs,
    source_levels: usize,
    by_target: Bsgs,
    target_levels: usize,
}

fn pair(s: &Permutation, t: &Permutation) -> Permutation {
    let n = s.degree() as u32;
    let mut images: Vec<u32> = s.images().to_vec();
    images.extend(t.images().iter().map(|&x| x + n));
    Permutation::from_images_unchecked(images)
}

fn split(x: &Permutation, n: usize) -> (Permutation, Permutation) {
    let s = Permutation::from_images_unchecked(x.images()[..n].to_vec());
    let t = Permutation::from_images_unchecked(x.images()[n..].iter().map(|&y| y - n as u32).collect());
    (s, t)
}

impl GraphMap {
    fn image(&self, x: &Permutation) -> Permutation {
        let h = self
            .by_source
            .sift_prefix(&pair(x, &Permutation::identity(self.m)), self.source_levels)
            .expect("element of the source");
        let (s, t) = split(&h, self.n);
        debug_assert!(s.is_identity());
        t.inverse()
    }

    fn lift(&self, t: &Permutation) -> Permutation {
        let h = self
            .by_target
            .sift_prefix(&pair(&Permutation::identity(self.n), t), self.target_levels)
            .expect("element of the target");
        let (s, rest) = split(&h, self.n);
        debug_assert!(rest.is_identity());
        s.inverse()
    }
}

/// A surjection `source -> target`, given by generator images.
#[derive(Clone)]
pub struct Epimorphism {
    source: GroupHandle,
    target: GroupHandle,
    images: Vec<Permutation>,
    kernel: GroupHandle,
    map: MapRef,
}

#[derive(Clone)]
struct MapRef(Arc<Map>);

impl std::fmt::Debug for Epimorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Epimorphism")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target.order())
            .field("kernel_order", &self.kernel.order())
            .finish()
    }
}

impl Epimorphism {
    /// The map sending the `i`-th generator of `source` to `images[i]`,
    /// onto the group the images generate. Errors if this is not a homomorphism.
    pub fn from_images(source: &GroupHandle, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::InvalidInput(format!(
                "{} images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        let m = images.first().map(|p| p.degree()).unwrap_or(1);
        for t in &images {
            check_degree(m, t.degree())?;
        }
        let n = source.degree();
        let target = GroupHandle::new(m, images.clone())?;
        let d_gens: Vec<Permutation> = source
            .generators()
            .iter()
            .zip(&images)
            .map(|(s, t)| pair(s, t))
            .collect();
        let source_base = source.bsgs().base();
        let target_base: Vec<u32> = target.bsgs().base().iter().map(|&b| b + n as u32).collect();
        let by_source = Bsgs::build(n + m, &d_gens, &source_base);
        if by_source.order() != source.order() {
            return Err(Error::InvalidInput(
                "generator images do not define a homomorphism".into(),
            ));
        }
        let by_target = Bsgs::build(n + m, &d_gens, &target_base);
        let kernel_gens: Vec<Permutation> = by_target
            .levels()
            .get(target_base.len())
            .map(|level| level.generators().iter().map(|g| split(g, n).0).collect())
            .unwrap_or_default();
        let kernel = source.subgroup(kernel_gens);
        let graph = GraphMap {
            n,
            m,
            by_source,
            source_levels: source_base.len(),
            by_target,
            target_levels: target_base.len(),
        };
        Ok(Epimorphism {
            source: source.clone(),
            target,
            images,
            kernel,
            map: MapRef(Arc::new(Map::Graph(Arc::new(graph)))),
        })
    }

    pub fn source(&self) -> &GroupHandle {
        &self.source
    }

    pub fn target(&self) -> &GroupHandle {
        &self.target
    }

    pub fn kernel(&self) -> &GroupHandle {
        &self.kernel
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn image(&self, x: &Permutation) -> Permutation {
        match &*self.map.0 {
            Map::Cosets(a) => a.act_unchecked(x),
            Map::Graph(g) => g.image(x),
        }
    }

    /// Some element of the full source group of the underlying map mapping to `t`.
    fn lift_raw(&self, t: &Permutation) -> Permutation {
        match &*self.map.0 {
            Map::Cosets(a) => a.representatives()[t.image(0) as usize].clone(),
            Map::Graph(g) => g.lift(t),
        }
    }

    /// A preimage of `t`, which must lie in the target.
    pub fn lift(&self, t: &Permutation) -> Result<Permutation> {
        check_degree(self.target.degree(), t.degree())?;
        if !self.target.has(t) {
            return Err(Error::InvalidInput(format!("{t} is not in the target")));
        }
        let s = self.lift_raw(t);
        debug_assert!(self.source.has(&s));
        Ok(s)
    }

    /// `f(h)` for a subgroup `h` of the source.
    pub fn image_group(&self, h: &GroupHandle) -> GroupHandle {
        self.target
            .subgroup(h.generators().iter().map(|g| self.image(g)).collect())
    }

    /// `f^-1(t)` for a subgroup `t` of the target.
    pub fn preimage(&self, t: &GroupHandle) -> Result<GroupHandle> {
        let mut gens = self.kernel.nontrivial_generators();
        for g in t.generators() {
            gens.push(self.lift(g)?);
        }
        Ok(self.source.subgroup(gens))
    }

    /// The restriction to a subgroup `x` of the source, onto `f(x)`.
    pub fn restrict(&self, x: &GroupHandle) -> Result<Epimorphism> {
        self.source.check_subgroup(x)?;
        let images: Vec<Permutation> = x.generators().iter().map(|g| self.image(g)).collect();
        if x.contains_group(&self.kernel) {
            let target = self.target.subgroup(images.clone());
            return Ok(Epimorphism {
                source: x.clone(),
                target,
                images,
                kernel: self.kernel.clone(),
                map: self.map.clone(),
            });
        }
        Epimorphism::from_images(x, images)
    }
}

/// The natural map `G -> G/N`, realized as the action on the cosets of `N`.
pub fn quotient(g: &GroupHandle, n: &GroupHandle, limits: &Limits) -> Result<Epimorphism> {
    g.check_subgroup(n)?;
    n.check_normal_in(g)?;
    let action = CosetAction::new(g, n, limits)?;
    let target = action.image().clone();
    let images = target.generators().to_vec();
    Ok(Epimorphism {
        source: g.clone(),
        target,
        images,
        kernel: n.clone(),
        map: MapRef(Arc::new(Map::Cosets(Arc::new(action)))),
    })
}
