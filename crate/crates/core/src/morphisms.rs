//! Good homomorphisms: `f(x + y) = f(x) + f(y)` and `f(x∘y) = f(x)∘f(y)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{self, HyperIdeal};
use crate::ring::HyperRing;
use crate::set::ElementSet;

/// Default largest order for which endomorphisms are enumerated.
pub const DEFAULT_ENUM_CAP: usize = 64;

/// A validated good homomorphism between two rings.
#[derive(Clone)]
pub struct Homomorphism {
    source: Arc<HyperRing>,
    target: Arc<HyperRing>,
    map: Vec<u32>,
}

/// A good homomorphism whose source and target coincide.
pub type Endomorphism = Homomorphism;

/// First pair at which a candidate map breaks a homomorphism law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum HomViolation {
    /// Map length differs from the source order or an image is foreign.
    NotTotal,
    Additive {
        x: usize,
        y: usize,
    },
    Multiplicative {
        x: usize,
        y: usize,
    },
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomViolation::NotTotal => f.write_str("map is not total on the carrier"),
            HomViolation::Additive { x, y } => write!(f, "f({x}+{y}) ≠ f({x})+f({y})"),
            HomViolation::Multiplicative { x, y } => write!(f, "f({x}∘{y}) ≠ f({x})∘f({y})"),
        }
    }
}

/// `true` when both rings are the same object or structurally identical.
pub fn same_ring(a: &Arc<HyperRing>, b: &Arc<HyperRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Checks both laws exhaustively; `None` means `map` is a good homomorphism.
pub fn homomorphism_violation(
    source: &HyperRing,
    target: &HyperRing,
    map: &[usize],
) -> Option<HomViolation> {
    if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
        return Some(HomViolation::NotTotal);
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return Some(HomViolation::Additive { x, y });
            }
        }
    }
    for x in source.elements() {
        for y in source.elements() {
            let image: ElementSet = source.mul(x, y).iter().map(|t| map[t]).collect();
            if &image != target.mul(map[x], map[y]) {
                return Some(HomViolation::Multiplicative { x, y });
            }
        }
    }
    None
}

pub fn is_good_homomorphism(source: &HyperRing, target: &HyperRing, map: &[usize]) -> bool {
    homomorphism_violation(source, target, map).is_none()
}

impl Homomorphism {
    pub fn new(source: Arc<HyperRing>, target: Arc<HyperRing>, map: Vec<usize>) -> Result<Self> {
        if let Some(v) = homomorphism_violation(&source, &target, &map) {
            return Err(Error::BadHomomorphism(v.to_string()));
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(
        source: Arc<HyperRing>,
        target: Arc<HyperRing>,
        map: Vec<usize>,
    ) -> Self {
        Homomorphism {
            source,
            target,
            map: map.into_iter().map(|x| x as u32).collect(),
        }
    }

    /// A good endomorphism of `ring`.
    pub fn endo(ring: Arc<HyperRing>, map: Vec<usize>) -> Result<Self> {
        if let Some(v) = homomorphism_violation(&ring, &ring, &map) {
            return Err(Error::BadEndomorphism(v.to_string()));
        }
        Ok(Self::new_unchecked(ring.clone(), ring, map))
    }

    pub fn identity(ring: Arc<HyperRing>) -> Self {
        let map = ring.elements().collect();
        Self::new_unchecked(ring.clone(), ring, map)
    }

    /// `x ↦ x + x + … + x` (`k` summands); `x ↦ k·x` on residue rings.
    pub fn multiple(ring: Arc<HyperRing>, k: usize) -> Result<Self> {
        let map = ring
            .elements()
            .map(|x| (0..k).fold(ring.zero(), |acc, _| ring.add(acc, x)))
            .collect();
        Self::endo(ring, map)
    }

    pub fn source(&self) -> &Arc<HyperRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HyperRing> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn table(&self) -> &[u32] {
        &self.map
    }

    pub fn is_endomorphism(&self) -> bool {
        same_ring(&self.source, &self.target)
    }

    /// Elementwise image of a set.
    pub fn image(&self, s: &ElementSet) -> ElementSet {
        s.image(&self.map)
    }

    /// `{x : f(x) ∈ s}`.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        let mask = s.mask(self.target.order());
        self.source
            .elements()
            .filter(|&x| mask[self.apply(x)])
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut hit[y as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.map {
            hit[y as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_zero_map(&self) -> bool {
        self.map.iter().all(|&y| y as usize == self.target.zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.map.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    /// `g ∘ self`: first `self`, then `g`.
    pub fn then(&self, g: &Homomorphism) -> Result<Homomorphism> {
        if !same_ring(&self.target, &g.source) {
            return Err(Error::BadHomomorphism(
                "composition across different rings".into(),
            ));
        }
        let map = self.map.iter().map(|&y| g.apply(y as usize)).collect();
        Homomorphism::new(self.source.clone(), g.target.clone(), map)
    }
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && same_ring(&self.source, &other.source)
            && same_ring(&self.target, &other.target)
    }
}

impl Eq for Homomorphism {}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}: {}",
            self.source.name(),
            self.target.name(),
            self
        )
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, y) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        f.write_str("]")
    }
}

/// Greedy generating set of the additive group: each new generator is the
/// smallest element outside the subgroup generated so far.
pub fn additive_generators(ring: &HyperRing) -> Vec<usize> {
    let mut member = vec![false; ring.order()];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    member[ring.zero()] = true;
    members.push(ring.zero());
    for x in ring.elements() {
        if member[x] {
            continue;
        }
        gens.push(x);
        // Cosets of the current subgroup by multiples of x.
        let base = members.clone();
        let mut step = x;
        while !member[step] {
            for &h in &base {
                let v = ring.add(h, step);
                member[v] = true;
                members.push(v);
            }
            step = ring.add(step, x);
        }
    }
    gens
}

/// Every good homomorphism `source → target`, in lexicographic order of maps.
///
/// Additive maps are determined by the images of [`additive_generators`];
/// each assignment is propagated along the Cayley graph and rejected on the
/// first inconsistency, then filtered by the multiplicative law.
pub fn enumerate_homomorphisms(
    source: &Arc<HyperRing>,
    target: &Arc<HyperRing>,
    cap: usize,
) -> Result<Vec<Homomorphism>> {
    for r in [source, target] {
        if r.order() > cap {
            return Err(Error::CapExceeded {
                order: r.order(),
                cap,
            });
        }
    }
    let gens = additive_generators(source);
    let n = source.order();
    let m = target.order();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    let mut map = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    'assignments: loop {
        map.fill(usize::MAX);
        map[source.zero()] = target.zero();
        queue.clear();
        queue.push(source.zero());
        let mut head = 0;
        let mut consistent = true;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            for (&g, &ig) in gens.iter().zip(&images) {
                let v = source.add(u, g);
                let iv = target.add(map[u], ig);
                if map[v] == usize::MAX {
                    map[v] = iv;
                    queue.push(v);
                } else if map[v] != iv {
                    consistent = false;
                    break 'bfs;
                }
            }
        }
        if consistent && is_good_homomorphism(source, target, &map) {
            out.push(Homomorphism::new_unchecked(
                source.clone(),
                target.clone(),
                map.clone(),
            ));
        }
        // Next assignment in odometer order.
        for slot in (0..images.len()).rev() {
            images[slot] += 1;
            if images[slot] < m {
                continue 'assignments;
            }
            images[slot] = 0;
        }
        break;
    }
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

pub fn enumerate_endomorphisms(ring: &Arc<HyperRing>, cap: usize) -> Result<Vec<Endomorphism>> {
    enumerate_homomorphisms(ring, ring, cap)
}

/// `Ker f = f⁻¹(⟨0⟩)`, where `⟨0⟩` is generated in the target.
pub fn kernel(f: &Homomorphism) -> Result<HyperIdeal> {
    let zero = ideals::generate_hyperideal(f.target(), &f.target().zero_set())?;
    preimage_ideal(f, &zero)
}

/// `f⁻¹(I₂)`, verified to be a hyperideal of the source.
pub fn preimage_ideal(f: &Homomorphism, ideal: &HyperIdeal) -> Result<HyperIdeal> {
    if !same_ring(f.target(), ideal.ring()) {
        return Err(Error::BadHomomorphism(
            "ideal does not live in the target".into(),
        ));
    }
    HyperIdeal::new(f.source().clone(), f.preimage(ideal.elements()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageIdeal {
    pub elements: ElementSet,
    pub is_hyperideal: bool,
}

/// `f(I₁)` with a verdict on whether it is a hyperideal of the target.
pub fn image_ideal(f: &Homomorphism, ideal: &HyperIdeal) -> Result<ImageIdeal> {
    if !same_ring(f.source(), ideal.ring()) {
        return Err(Error::BadHomomorphism(
            "ideal does not live in the source".into(),
        ));
    }
    let elements = f.image(ideal.elements());
    let is_hyperideal = ideals::is_hyperideal(f.target(), &elements);
    Ok(ImageIdeal {
        elements,
        is_hyperideal,
    })
}

/// First `r` with `α₂(f(r)) ≠ f(α₁(r))`, if any.
pub fn commutation_witness(
    f: &Homomorphism,
    alpha1: &Endomorphism,
    alpha2: &Endomorphism,
) -> Option<usize> {
    f.source()
        .elements()
        .find(|&r| alpha2.apply(f.apply(r)) != f.apply(alpha1.apply(r)))
}

pub fn commutes(f: &Homomorphism, alpha1: &Endomorphism, alpha2: &Endomorphism) -> bool {
    commutation_witness(f, alpha1, alpha2).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::make_zn_multiplier_ring;

    fn r6() -> Arc<HyperRing> {
        Arc::new(make_zn_multiplier_ring(6, &[2]).unwrap())
    }

    #[test]
    fn r6_good_homomorphism_examples() {
        let r = r6();
        assert!(is_good_homomorphism(&r, &r, &[0, 3, 0, 3, 0, 3]));
        assert_eq!(
            homomorphism_violation(&r, &r, &[0, 2, 4, 0, 2, 4]),
            Some(HomViolation::Multiplicative { x: 1, y: 1 })
        );
        assert!(Homomorphism::identity(r.clone()).is_identity());
    }

    #[test]
    fn r6_has_four_endomorphisms() {
        let r = r6();
        let maps: Vec<Vec<usize>> = enumerate_endomorphisms(&r, 16)
            .unwrap()
            .iter()
            .map(|f| f.map())
            .collect();
        let scale = |k: usize| (0..6).map(|x| k * x % 6).collect::<Vec<_>>();
        let mut expected = vec![scale(0), scale(1), scale(3), scale(4)];
        expected.sort();
        assert_eq!(maps, expected);
    }

    #[test]
    fn r5_has_two_endomorphisms() {
        let r = Arc::new(make_zn_multiplier_ring(5, &[2]).unwrap());
        let endos = enumerate_endomorphisms(&r, 16).unwrap();
        assert_eq!(endos.len(), 2);
        assert!(endos[0].is_zero_map() && endos[1].is_identity());
    }

    #[test]
    fn enumeration_respects_cap() {
        let r = r6();
        assert_eq!(
            enumerate_endomorphisms(&r, 5).unwrap_err(),
            Error::CapExceeded { order: 6, cap: 5 }
        );
    }

    #[test]
    fn kernels() {
        let r = r6();
        let three = Homomorphism::multiple(r.clone(), 3).unwrap();
        assert_eq!(
            kernel(&three).unwrap().elements(),
            &ElementSet::from([0, 2, 4])
        );
        assert_eq!(
            kernel(&Homomorphism::identity(r.clone()))
                .unwrap()
                .elements(),
            &[0].into()
        );
        let r5 = Arc::new(make_zn_multiplier_ring(5, &[2]).unwrap());
        let zero = Homomorphism::multiple(r5.clone(), 0).unwrap();
        let k = kernel(&zero).unwrap();
        assert!(!k.is_proper());
    }

    #[test]
    fn images_and_preimages() {
        let r = r6();
        let three = Homomorphism::multiple(r.clone(), 3).unwrap();
        let four = Homomorphism::multiple(r.clone(), 4).unwrap();
        let i03 = HyperIdeal::new(r.clone(), [0, 3].into()).unwrap();
        let i024 = HyperIdeal::new(r.clone(), [0, 2, 4].into()).unwrap();
        assert!(!preimage_ideal(&three, &i03).unwrap().is_proper());
        assert!(!preimage_ideal(&four, &i024).unwrap().is_proper());
        assert_eq!(image_ideal(&three, &i024).unwrap().elements, [0].into());
        assert_eq!(image_ideal(&four, &i03).unwrap().elements, [0].into());
    }

    #[test]
    fn commutation_examples() {
        let r = r6();
        let id = Homomorphism::identity(r.clone());
        let three = Homomorphism::multiple(r.clone(), 3).unwrap();
        let four = Homomorphism::multiple(r.clone(), 4).unwrap();
        assert!(commutes(&id, &four, &four));
        assert!(commutes(&three, &four, &four));
        assert_eq!(commutation_witness(&three, &id, &four), Some(1));
    }

    #[test]
    fn composition_stays_good() {
        let r = r6();
        let endos = enumerate_endomorphisms(&r, 16).unwrap();
        for f in &endos {
            for g in &endos {
                assert!(f.then(g).is_ok());
            }
        }
    }
}
