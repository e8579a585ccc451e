//! Quotients `R/I`, products `R₁ × R₂` and the endomorphisms they induce.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::HyperIdeal;
use crate::morphisms::{same_ring, Endomorphism, Homomorphism};
use crate::ring::{validate_structure, HyperRing, RawRing};
use crate::set::ElementSet;

/// Default largest order accepted by [`product_ring`].
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// `R/I` over coset indices. Cosets are numbered by their smallest element.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    base: Arc<HyperRing>,
    ideal: HyperIdeal,
    cosets: Vec<ElementSet>,
    coset_of: Vec<usize>,
    ring: Arc<HyperRing>,
    projection: Homomorphism,
}

impl QuotientRing {
    pub fn base(&self) -> &Arc<HyperRing> {
        &self.base
    }

    pub fn ideal(&self) -> &HyperIdeal {
        &self.ideal
    }

    pub fn cosets(&self) -> &[ElementSet] {
        &self.cosets
    }

    /// Index of the coset `x + I`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn ring(&self) -> &Arc<HyperRing> {
        &self.ring
    }

    pub fn projection(&self) -> &Homomorphism {
        &self.projection
    }

    /// `I'/I` for a hyperideal `I' ⊇ I`, as a hyperideal of the quotient.
    pub fn ideal_image(&self, outer: &HyperIdeal) -> Result<HyperIdeal> {
        if !same_ring(outer.ring(), &self.base) || !self.ideal.is_subset_of(outer) {
            return Err(Error::NotAHyperideal(format!(
                "{outer} does not contain {}",
                self.ideal
            )));
        }
        HyperIdeal::new(self.ring.clone(), self.projection.image(outer.elements()))
    }
}

/// Builds `R/I` with `(x+I)∘(y+I) = {t+I : t ∈ x∘y}` and checks that the
/// result does not depend on the chosen representatives.
pub fn quotient_ring(ideal: &HyperIdeal) -> Result<QuotientRing> {
    if !ideal.is_proper() {
        return Err(Error::NotProper);
    }
    let base = ideal.ring().clone();
    let n = base.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut cosets = Vec::new();
    for x in base.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c: ElementSet = ideal.elements().iter().map(|i| base.add(x, i)).collect();
        for y in c.iter() {
            coset_of[y] = cosets.len();
        }
        reps.push(x);
        cosets.push(c);
    }
    let m = reps.len();
    let image = |t: &ElementSet| -> ElementSet { t.iter().map(|u| coset_of[u]).collect() };
    let hyp: Vec<Vec<ElementSet>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| image(base.mul(a, b))).collect())
        .collect();
    for x in base.elements() {
        for y in base.elements() {
            if image(base.mul(x, y)) != hyp[coset_of[x]][coset_of[y]] {
                return Err(Error::NotWellDefined(format!(
                    "{x}∘{y} and {}∘{} give different cosets",
                    reps[coset_of[x]], reps[coset_of[y]]
                )));
            }
        }
    }
    let raw = RawRing {
        name: format!("{}/{}", base.name(), ideal),
        order: m,
        zero: coset_of[base.zero()],
        add: reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[base.add(a, b)]).collect())
            .collect(),
        neg: reps.iter().map(|&a| coset_of[base.neg(a)]).collect(),
        hyp,
        identity: None,
    };
    let ring = Arc::new(validate_structure(&raw)?);
    let projection = Homomorphism::new(base.clone(), ring.clone(), coset_of.clone())?;
    Ok(QuotientRing {
        base,
        ideal: ideal.clone(),
        cosets,
        coset_of,
        ring,
        projection,
    })
}

/// `R₁ × R₂` on row-major pair indices `i₁·|R₂| + i₂`.
#[derive(Clone, Debug)]
pub struct ProductRing {
    left: Arc<HyperRing>,
    right: Arc<HyperRing>,
    ring: Arc<HyperRing>,
}

impl ProductRing {
    pub fn left(&self) -> &Arc<HyperRing> {
        &self.left
    }

    pub fn right(&self) -> &Arc<HyperRing> {
        &self.right
    }

    pub fn ring(&self) -> &Arc<HyperRing> {
        &self.ring
    }

    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.right.order() + b
    }

    #[inline]
    pub fn split(&self, z: usize) -> (usize, usize) {
        (z / self.right.order(), z % self.right.order())
    }

    /// `A × B` as a set of pair indices.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| self.pair(x, y)))
            .collect()
    }

    /// `I₁ × I₂`, validated as a hyperideal of the product.
    pub fn product_ideal(&self, i1: &HyperIdeal, i2: &HyperIdeal) -> Result<HyperIdeal> {
        if !same_ring(i1.ring(), &self.left) || !same_ring(i2.ring(), &self.right) {
            return Err(Error::NotAHyperideal("factor ideals of other rings".into()));
        }
        HyperIdeal::new(
            self.ring.clone(),
            self.product_set(i1.elements(), i2.elements()),
        )
    }

    pub fn left_projection(&self) -> Result<Homomorphism> {
        let map = self.ring.elements().map(|z| self.split(z).0).collect();
        Homomorphism::new(self.ring.clone(), self.left.clone(), map)
    }

    pub fn right_projection(&self) -> Result<Homomorphism> {
        let map = self.ring.elements().map(|z| self.split(z).1).collect();
        Homomorphism::new(self.ring.clone(), self.right.clone(), map)
    }

    /// `a ↦ (a, 0)` as a plain element map.
    pub fn left_injection(&self) -> Vec<usize> {
        self.left
            .elements()
            .map(|a| self.pair(a, self.right.zero()))
            .collect()
    }

    /// `b ↦ (0, b)` as a plain element map.
    pub fn right_injection(&self) -> Vec<usize> {
        self.right
            .elements()
            .map(|b| self.pair(self.left.zero(), b))
            .collect()
    }
}

/// Componentwise addition and `(x₁,x₂)∘(y₁,y₂) = (x₁∘y₁) × (x₂∘y₂)`.
pub fn product_ring(r1: &Arc<HyperRing>, r2: &Arc<HyperRing>, cap: usize) -> Result<ProductRing> {
    let (n1, n2) = (r1.order(), r2.order());
    let n = n1 * n2;
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    let split = |z: usize| (z / n2, z % n2);
    let raw = RawRing {
        name: format!("{} × {}", r1.name(), r2.name()),
        order: n,
        zero: r1.zero() * n2 + r2.zero(),
        add: (0..n)
            .map(|a| {
                let (a1, a2) = split(a);
                (0..n)
                    .map(|b| {
                        let (b1, b2) = split(b);
                        r1.add(a1, b1) * n2 + r2.add(a2, b2)
                    })
                    .collect()
            })
            .collect(),
        neg: (0..n)
            .map(|a| r1.neg(a / n2) * n2 + r2.neg(a % n2))
            .collect(),
        hyp: (0..n)
            .map(|a| {
                let (a1, a2) = split(a);
                (0..n)
                    .map(|b| {
                        let (b1, b2) = split(b);
                        let right = r2.mul(a2, b2);
                        r1.mul(a1, b1)
                            .iter()
                            .flat_map(|u| right.iter().map(move |v| u * n2 + v))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        identity: None,
    };
    let ring = Arc::new(validate_structure(&raw)?);
    Ok(ProductRing {
        left: r1.clone(),
        right: r2.clone(),
        ring,
    })
}

/// How the second component of `ᾱ` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaBarReading {
    /// `ᾱ(r₁, r₂) = (α₁(r₁), α₂(r₂))`.
    #[default]
    Corrected,
    /// `ᾱ(r₁, r₂) = (α₁(r₁), α₂(r₁))`; only typed when both factors coincide.
    AsPrinted,
}

/// The componentwise endomorphism `ᾱ` of a product, verified good.
pub fn product_endomorphism(
    p: &ProductRing,
    alpha1: &Endomorphism,
    alpha2: &Endomorphism,
    reading: AlphaBarReading,
) -> Result<Endomorphism> {
    if !alpha1.is_endomorphism() || !same_ring(alpha1.source(), &p.left) {
        return Err(Error::BadEndomorphism(
            "first map is not an endomorphism of the left factor".into(),
        ));
    }
    if !alpha2.is_endomorphism() || !same_ring(alpha2.source(), &p.right) {
        return Err(Error::BadEndomorphism(
            "second map is not an endomorphism of the right factor".into(),
        ));
    }
    if reading == AlphaBarReading::AsPrinted && !same_ring(&p.left, &p.right) {
        return Err(Error::BadEndomorphism(
            "printed reading needs equal factors".into(),
        ));
    }
    let map = p
        .ring
        .elements()
        .map(|z| {
            let (a, b) = p.split(z);
            let second = match reading {
                AlphaBarReading::Corrected => alpha2.apply(b),
                AlphaBarReading::AsPrinted => alpha2.apply(a),
            };
            p.pair(alpha1.apply(a), second)
        })
        .collect();
    Endomorphism::endo(p.ring.clone(), map)
}

/// `α*(x + J) = α(x) + J`; requires `α(J) ⊆ J`.
pub fn induced_quotient_endo(q: &QuotientRing, alpha: &Endomorphism) -> Result<Endomorphism> {
    if !alpha.is_endomorphism() || !same_ring(alpha.source(), &q.base) {
        return Err(Error::BadEndomorphism(
            "not an endomorphism of the base ring".into(),
        ));
    }
    let j = q.ideal.elements();
    if let Some(x) = j.iter().find(|&x| !q.ideal.contains(alpha.apply(x))) {
        return Err(Error::NotInvariant(format!(
            "α({x}) = {} ∉ {j}",
            alpha.apply(x)
        )));
    }
    let mut map = vec![usize::MAX; q.cosets.len()];
    for x in q.base.elements() {
        let c = q.coset_of[x];
        let image = q.coset_of[alpha.apply(x)];
        if map[c] == usize::MAX {
            map[c] = image;
        } else if map[c] != image {
            return Err(Error::NotWellDefined(format!("α* at coset of {x}")));
        }
    }
    Endomorphism::endo(q.ring.clone(), map)
}
