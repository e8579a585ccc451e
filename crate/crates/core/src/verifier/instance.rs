//! Instances the catalog is evaluated on, and the per-ring data they share.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::constructions::{quotient_ring, AlphaBarReading, ProductRing, QuotientRing};
use crate::error::{Error, Result};
use crate::ideals::{d_set, enumerate_hyperideals, is_prime, HyperIdeal, Radical};
use crate::morphisms::{same_ring, Endomorphism, Homomorphism};
use crate::ring::HyperRing;
use crate::set::ElementSet;

/// A ring with its hyperideal lattice and lazily computed per-ideal data.
pub struct RingContext {
    ring: Arc<HyperRing>,
    ideals: Vec<HyperIdeal>,
    zero_ideal: usize,
    primes: Vec<OnceLock<bool>>,
    radicals: Vec<OnceLock<Radical>>,
    quotients: Vec<OnceLock<Option<Arc<QuotientRing>>>>,
}

impl RingContext {
    /// Enumerates every hyperideal of `ring` (up to `cap` elements).
    pub fn new(ring: Arc<HyperRing>, cap: usize) -> Result<Self> {
        let ideals = enumerate_hyperideals(&ring, cap)?;
        Ok(Self::from_parts(ring, ideals))
    }

    /// Uses an explicit list of hyperideals instead of the full lattice.
    /// `⟨0⟩` is added when missing.
    pub fn with_ideals(ring: Arc<HyperRing>, sets: Vec<ElementSet>) -> Result<Self> {
        let mut ideals = sets
            .into_iter()
            .map(|s| HyperIdeal::new(ring.clone(), s))
            .collect::<Result<Vec<_>>>()?;
        let zero = crate::ideals::generate_hyperideal(&ring, &ring.zero_set())?;
        if !ideals.contains(&zero) {
            ideals.push(zero);
        }
        ideals.sort_by(|a, b| a.elements().canonical_cmp(b.elements()));
        ideals.dedup();
        Ok(Self::from_parts(ring, ideals))
    }

    fn from_parts(ring: Arc<HyperRing>, ideals: Vec<HyperIdeal>) -> Self {
        // The least hyperideal sorts first in the canonical order.
        let zero_ideal = ideals
            .iter()
            .position(|i| ideals.iter().all(|j| i.is_subset_of(j)))
            .expect("the lattice contains ⟨0⟩");
        let n = ideals.len();
        RingContext {
            ring,
            ideals,
            zero_ideal,
            primes: (0..n).map(|_| OnceLock::new()).collect(),
            radicals: (0..n).map(|_| OnceLock::new()).collect(),
            quotients: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<HyperRing> {
        &self.ring
    }

    /// All hyperideals in canonical order (size, then elements).
    pub fn ideals(&self) -> &[HyperIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, idx: usize) -> &HyperIdeal {
        &self.ideals[idx]
    }

    /// `⟨0⟩`, the least hyperideal.
    pub fn zero_ideal(&self) -> &HyperIdeal {
        &self.ideals[self.zero_ideal]
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.ideals.iter().position(|i| i.elements() == set)
    }

    /// Proper and prime.
    pub fn is_prime(&self, idx: usize) -> bool {
        *self.primes[idx].get_or_init(|| {
            let i = &self.ideals[idx];
            i.is_proper() && is_prime(i).unwrap_or(false)
        })
    }

    pub fn radical(&self, idx: usize) -> &Radical {
        self.radicals[idx].get_or_init(|| {
            let i = &self.ideals[idx];
            let mut radical = self.ring.full_set();
            for (k, p) in self.ideals.iter().enumerate() {
                if i.is_subset_of(p) && self.is_prime(k) {
                    radical = radical.intersection(p.elements());
                }
            }
            Radical {
                radical,
                d_set: d_set(&self.ring, i.elements()),
                c_status: i.c_status(),
            }
        })
    }

    /// `R/I`, or `None` when `I` is improper or the coset product depends on
    /// representatives.
    pub fn quotient(&self, idx: usize) -> Option<&Arc<QuotientRing>> {
        self.quotients[idx]
            .get_or_init(|| quotient_ring(&self.ideals[idx]).ok().map(Arc::new))
            .as_ref()
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingContext")
            .field("ring", &self.ring.name())
            .field("ideals", &self.ideals.len())
            .finish()
    }
}

/// Which components a check consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    /// `(R, α, I)`.
    Triple,
    /// `(R, α)`.
    RingEndo,
    /// `(R, I)`.
    RingIdeal,
    /// `(f: R₁ → R₂, α₁, α₂)`.
    Hom,
    /// `(R₁ × R₂, α₁, α₂)` with the factor lattices.
    Product,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Triple => "ring, endomorphism, ideal",
            Signature::RingEndo => "ring, endomorphism",
            Signature::RingIdeal => "ring, ideal",
            Signature::Hom => "homomorphism, endomorphism pair",
            Signature::Product => "product, endomorphism pair",
        })
    }
}

#[derive(Clone, Debug)]
pub enum InstanceKind {
    Triple {
        ctx: Arc<RingContext>,
        alpha: Endomorphism,
        ideal: usize,
    },
    RingEndo {
        ctx: Arc<RingContext>,
        alpha: Endomorphism,
    },
    RingIdeal {
        ctx: Arc<RingContext>,
        ideal: usize,
    },
    Hom {
        source: Arc<RingContext>,
        target: Arc<RingContext>,
        f: Homomorphism,
        alpha1: Endomorphism,
        alpha2: Endomorphism,
    },
    Product {
        left: Arc<RingContext>,
        right: Arc<RingContext>,
        product: Arc<ProductRing>,
        alpha1: Endomorphism,
        alpha2: Endomorphism,
        alpha_bar: Endomorphism,
        reading: AlphaBarReading,
    },
}

/// A validated, named input to the catalog.
#[derive(Clone, Debug)]
pub struct Instance {
    id: String,
    kind: InstanceKind,
}

/// `id`, `0` or the image list.
fn label(h: &Homomorphism) -> String {
    if h.is_endomorphism() && h.is_identity() {
        "id".into()
    } else if h.is_zero_map() {
        "0".into()
    } else {
        h.to_string()
    }
}

fn require_endo(ctx: &RingContext, alpha: &Endomorphism) -> Result<()> {
    if alpha.is_endomorphism() && same_ring(alpha.source(), &ctx.ring) {
        Ok(())
    } else {
        Err(Error::BadEndomorphism(format!(
            "not an endomorphism of {}",
            ctx.ring.name()
        )))
    }
}

fn require_ideal(ctx: &RingContext, idx: usize) -> Result<()> {
    if idx < ctx.ideals.len() {
        Ok(())
    } else {
        Err(Error::NotAHyperideal(format!(
            "no hyperideal #{idx} in {}",
            ctx.ring.name()
        )))
    }
}

impl Instance {
    pub fn triple(ctx: Arc<RingContext>, alpha: Endomorphism, ideal: usize) -> Result<Self> {
        require_endo(&ctx, &alpha)?;
        require_ideal(&ctx, ideal)?;
        let id = format!(
            "{} alpha={} I={}",
            ctx.ring.name(),
            label(&alpha),
            ctx.ideal(ideal).elements()
        );
        Ok(Instance {
            id,
            kind: InstanceKind::Triple { ctx, alpha, ideal },
        })
    }

    pub fn ring_endo(ctx: Arc<RingContext>, alpha: Endomorphism) -> Result<Self> {
        require_endo(&ctx, &alpha)?;
        let id = format!("{} alpha={}", ctx.ring.name(), label(&alpha));
        Ok(Instance {
            id,
            kind: InstanceKind::RingEndo { ctx, alpha },
        })
    }

    pub fn ring_ideal(ctx: Arc<RingContext>, ideal: usize) -> Result<Self> {
        require_ideal(&ctx, ideal)?;
        let id = format!("{} I={}", ctx.ring.name(), ctx.ideal(ideal).elements());
        Ok(Instance {
            id,
            kind: InstanceKind::RingIdeal { ctx, ideal },
        })
    }

    pub fn hom(
        source: Arc<RingContext>,
        target: Arc<RingContext>,
        f: Homomorphism,
        alpha1: Endomorphism,
        alpha2: Endomorphism,
    ) -> Result<Self> {
        if !same_ring(f.source(), &source.ring) || !same_ring(f.target(), &target.ring) {
            return Err(Error::BadHomomorphism(
                "map does not match the given rings".into(),
            ));
        }
        require_endo(&source, &alpha1)?;
        require_endo(&target, &alpha2)?;
        let id = format!(
            "{} -> {} f={} alpha1={} alpha2={}",
            source.ring.name(),
            target.ring.name(),
            label(&f),
            label(&alpha1),
            label(&alpha2)
        );
        Ok(Instance {
            id,
            kind: InstanceKind::Hom {
                source,
                target,
                f,
                alpha1,
                alpha2,
            },
        })
    }

    pub fn product(
        left: Arc<RingContext>,
        right: Arc<RingContext>,
        product: Arc<ProductRing>,
        alpha1: Endomorphism,
        alpha2: Endomorphism,
        reading: AlphaBarReading,
    ) -> Result<Self> {
        if !same_ring(product.left(), &left.ring) || !same_ring(product.right(), &right.ring) {
            return Err(Error::SignatureMismatch(
                "factor lattices do not match the product".into(),
            ));
        }
        let alpha_bar =
            crate::constructions::product_endomorphism(&product, &alpha1, &alpha2, reading)?;
        let id = format!(
            "{} alpha1={} alpha2={}",
            product.ring().name(),
            label(&alpha1),
            label(&alpha2)
        );
        Ok(Instance {
            id,
            kind: InstanceKind::Product {
                left,
                right,
                product,
                alpha1,
                alpha2,
                alpha_bar,
                reading,
            },
        })
    }

    /// Replaces the generated identifier.
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> &InstanceKind {
        &self.kind
    }

    pub fn signature(&self) -> Signature {
        match self.kind {
            InstanceKind::Triple { .. } => Signature::Triple,
            InstanceKind::RingEndo { .. } => Signature::RingEndo,
            InstanceKind::RingIdeal { .. } => Signature::RingIdeal,
            InstanceKind::Hom { .. } => Signature::Hom,
            InstanceKind::Product { .. } => Signature::Product,
        }
    }

    /// The endomorphism of a triple or ring-endomorphism instance.
    pub fn alpha(&self) -> Option<&Endomorphism> {
        match &self.kind {
            InstanceKind::Triple { alpha, .. } | InstanceKind::RingEndo { alpha, .. } => {
                Some(alpha)
            }
            InstanceKind::Product { alpha_bar, .. } => Some(alpha_bar),
            _ => None,
        }
    }

    /// The primary ring (source ring for homomorphisms, the product ring for
    /// products).
    pub fn ring(&self) -> &Arc<HyperRing> {
        match &self.kind {
            InstanceKind::Triple { ctx, .. }
            | InstanceKind::RingEndo { ctx, .. }
            | InstanceKind::RingIdeal { ctx, .. } => &ctx.ring,
            InstanceKind::Hom { source, .. } => &source.ring,
            InstanceKind::Product { product, .. } => product.ring(),
        }
    }

    /// The hyperideal of a triple or ring-ideal instance.
    pub fn ideal(&self) -> Option<&HyperIdeal> {
        match &self.kind {
            InstanceKind::Triple { ctx, ideal, .. } | InstanceKind::RingIdeal { ctx, ideal } => {
                Some(ctx.ideal(*ideal))
            }
            _ => None,
        }
    }
}
