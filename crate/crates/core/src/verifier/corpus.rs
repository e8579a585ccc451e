//! Deterministic instance corpora.

use std::collections::HashSet;
use std::ops::RangeInclusive;
use std::sync::Arc;

use super::instance::{Instance, RingContext};
use super::ledger::known_discrepancy;
use super::theorems::{pair_violates, violating_pair};
use super::{Status, VerdictReport, Witness};
use crate::constructions::{
    induced_quotient_endo, product_ring, AlphaBarReading, DEFAULT_PRODUCT_CAP,
};
use crate::error::Result;
use crate::ideals::{is_alpha_prime_or_false, DEFAULT_IDEAL_CAP};
use crate::morphisms::{enumerate_endomorphisms, Endomorphism, DEFAULT_ENUM_CAP};
use crate::ring::{from_fns, HyperRing};
use crate::set::ElementSet;
use crate::zn::make_zn_multiplier_ring;

/// Knobs for [`generate_corpus`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusConfig {
    pub moduli: RangeInclusive<usize>,
    /// Explicit multiplier sets; `None` means every `A` with
    /// `1 ≤ |A| ≤ max_multipliers`.
    pub multiplier_sets: Option<Vec<Vec<usize>>>,
    pub max_multipliers: usize,
    pub ideal_cap: usize,
    pub endo_cap: usize,
    /// Endomorphism pairs `(f, α)` are added as homomorphism instances for
    /// rings up to this order.
    pub hom_max_order: usize,
    /// Projections `R → R/J` with induced endomorphisms.
    pub projections: bool,
    /// Factors `ℤ_n{1}` and `ℤ_n{1,n−1}` for these moduli.
    pub product_moduli: RangeInclusive<usize>,
    pub product_max_order: usize,
    /// Hand-built rings, the large product and the example claims.
    pub fixtures: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            moduli: 2..=12,
            multiplier_sets: None,
            max_multipliers: 3,
            ideal_cap: DEFAULT_IDEAL_CAP,
            endo_cap: DEFAULT_ENUM_CAP,
            hom_max_order: 8,
            projections: true,
            product_moduli: 2..=6,
            product_max_order: 36,
            fixtures: true,
        }
    }
}

impl CorpusConfig {
    /// Exactly one `ℤ_A` ring and its own instances.
    pub fn single(n: usize, multipliers: Vec<usize>) -> Self {
        CorpusConfig {
            moduli: n..=n,
            multiplier_sets: Some(vec![multipliers]),
            projections: false,
            product_moduli: 1..=0,
            fixtures: false,
            ..Self::default()
        }
    }

    /// No rings at all.
    pub fn empty() -> Self {
        CorpusConfig {
            moduli: 1..=0,
            ..Self::single(0, vec![])
        }
    }
}

/// Instances plus the rings they were built from.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub rings: Vec<Arc<RingContext>>,
    pub instances: Vec<Instance>,
    pub claims: Vec<ExampleClaim>,
}

impl Corpus {
    pub fn ring(&self, name: &str) -> Option<&Arc<RingContext>> {
        self.rings.iter().find(|c| c.ring().name() == name)
    }

    /// Builds the standard instances for explicit rings and factor pairs.
    pub fn from_rings(
        rings: Vec<HyperRing>,
        products: Vec<(HyperRing, HyperRing)>,
        config: &CorpusConfig,
    ) -> Result<Self> {
        let mut corpus = Corpus::default();
        for r in rings {
            corpus.add_ring(Arc::new(r), config)?;
        }
        for (a, b) in products {
            corpus.add_product(Arc::new(a), Arc::new(b), config)?;
        }
        Ok(corpus)
    }

    fn add_ring(
        &mut self,
        ring: Arc<HyperRing>,
        config: &CorpusConfig,
    ) -> Result<Arc<RingContext>> {
        let ctx = Arc::new(RingContext::new(ring.clone(), config.ideal_cap)?);
        let endos = enumerate_endomorphisms(&ring, config.endo_cap)?;
        let proper: Vec<usize> = (0..ctx.ideals().len())
            .filter(|&k| ctx.ideal(k).is_proper())
            .collect();
        for a in &endos {
            self.instances
                .push(Instance::ring_endo(ctx.clone(), a.clone())?);
        }
        for a in &endos {
            for &k in &proper {
                self.instances
                    .push(Instance::triple(ctx.clone(), a.clone(), k)?);
            }
        }
        for &k in &proper {
            self.instances.push(Instance::ring_ideal(ctx.clone(), k)?);
        }
        if ring.order() <= config.hom_max_order {
            for f in &endos {
                for a in &endos {
                    self.instances.push(Instance::hom(
                        ctx.clone(),
                        ctx.clone(),
                        f.clone(),
                        a.clone(),
                        a.clone(),
                    )?);
                }
            }
        }
        if config.projections {
            self.add_projections(&ctx, &endos, &proper, config)?;
        }
        self.rings.push(ctx.clone());
        Ok(ctx)
    }

    /// `R → R/J` for every proper `J` with a well-defined quotient, skipping
    /// `J = {0}` in zero-absorbing rings where the projection is an
    /// isomorphism.
    fn add_projections(
        &mut self,
        ctx: &Arc<RingContext>,
        endos: &[Endomorphism],
        proper: &[usize],
        config: &CorpusConfig,
    ) -> Result<()> {
        let ring = ctx.ring();
        for &k in proper {
            let j = ctx.ideal(k);
            if j.len() == 1 && ring.is_zero_absorbing() {
                continue;
            }
            let Some(q) = ctx.quotient(k) else { continue };
            let qctx = Arc::new(RingContext::new(q.ring().clone(), config.ideal_cap)?);
            for a in endos {
                if let Ok(star) = induced_quotient_endo(q, a) {
                    self.instances.push(Instance::hom(
                        ctx.clone(),
                        qctx.clone(),
                        q.projection().clone(),
                        a.clone(),
                        star,
                    )?);
                }
            }
        }
        Ok(())
    }

    fn add_product(
        &mut self,
        r1: Arc<HyperRing>,
        r2: Arc<HyperRing>,
        config: &CorpusConfig,
    ) -> Result<()> {
        let p = Arc::new(product_ring(&r1, &r2, DEFAULT_PRODUCT_CAP)?);
        // Factor lattices are small even when the product is not.
        let left = Arc::new(RingContext::new(r1.clone(), config.ideal_cap.max(64))?);
        let right = Arc::new(RingContext::new(r2.clone(), config.ideal_cap.max(64))?);
        for a1 in enumerate_endomorphisms(&r1, config.endo_cap)? {
            for a2 in enumerate_endomorphisms(&r2, config.endo_cap)? {
                self.instances.push(Instance::product(
                    left.clone(),
                    right.clone(),
                    p.clone(),
                    a1.clone(),
                    a2,
                    AlphaBarReading::Corrected,
                )?);
            }
        }
        Ok(())
    }
}

fn multiplier_family(n: usize, config: &CorpusConfig) -> Vec<Vec<usize>> {
    if let Some(sets) = &config.multiplier_sets {
        return sets.clone();
    }
    let mut out = Vec::new();
    for k in 1..=config.max_multipliers.min(n) {
        combinations(n, k, &mut Vec::new(), 0, &mut out);
    }
    out
}

fn combinations(n: usize, k: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in start..n {
        cur.push(x);
        combinations(n, k, cur, x + 1, out);
        cur.pop();
    }
}

/// The default corpus, or a restricted one. Deterministic in `config`.
pub fn generate_corpus(config: &CorpusConfig) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    let mut seen = HashSet::new();
    let mut rings = Vec::new();
    for n in config.moduli.clone() {
        for a in multiplier_family(n, config) {
            let r = make_zn_multiplier_ring(n, &a)?;
            if seen.insert(r.to_raw().hyp) {
                rings.push(r);
            }
        }
    }
    if config.fixtures {
        for r in fixtures()? {
            if seen.insert(r.to_raw().hyp) {
                rings.push(r);
            }
        }
    }
    for r in rings {
        corpus.add_ring(Arc::new(r), config)?;
    }

    let mut factors: Vec<Arc<HyperRing>> = Vec::new();
    for n in config.product_moduli.clone() {
        for a in [vec![1], vec![1, n - 1]] {
            let r = make_zn_multiplier_ring(n, &a)?;
            if !factors.iter().any(|f| f.name() == r.name()) {
                factors.push(Arc::new(r));
            }
        }
    }
    for r1 in &factors {
        for r2 in &factors {
            if r1.order() * r2.order() <= config.product_max_order {
                corpus.add_product(r1.clone(), r2.clone(), config)?;
            }
        }
    }

    if config.fixtures {
        add_claims(&mut corpus, config)?;
    }
    Ok(corpus)
}

/// Hand-built table rings: a coset hyperring on `ℤ₂×ℤ₂` with only a weak
/// identity, upper triangular `2×2` matrices over `F₂`, `ℤ₈{0,2,4,6}` and
/// `ℤ₁₂{2,3}` (not strongly distributive).
pub fn fixtures() -> Result<Vec<HyperRing>> {
    // (a,b) ↦ 2a+b; a∘b = ab + K with K = ℤ₂×{0}.
    let coset = from_fns(
        "Z2xZ2+K".to_string(),
        4,
        0,
        |x, y| x ^ y,
        |x| x,
        |x, y| {
            let p = x & y;
            ElementSet::from_iter([p, p ^ 2])
        },
    )?;
    // [[a,b],[0,d]] ↦ 4a+2b+d.
    let upper = from_fns(
        "UT2(F2)".to_string(),
        8,
        0,
        |x, y| x ^ y,
        |x| x,
        |x, y| {
            let (a, b, d) = (x >> 2, (x >> 1) & 1, x & 1);
            let (a2, b2, d2) = (y >> 2, (y >> 1) & 1, y & 1);
            let top = a & a2;
            let mid = (a & b2) ^ (b & d2);
            ElementSet::singleton(4 * top + 2 * mid + (d & d2))
        },
    )?;
    Ok(vec![
        coset,
        upper,
        make_zn_multiplier_ring(8, &[0, 2, 4, 6])?,
        make_zn_multiplier_ring(12, &[2, 3])?,
    ])
}

/// A published membership claim about one `(R, α, I)`, checked directly.
#[derive(Debug, Clone)]
pub struct ExampleClaim {
    pub id: &'static str,
    pub instance: Instance,
    /// The claimed value of "I is α-prime".
    pub claimed_alpha_prime: bool,
    /// A pair cited as evidence against α-primeness, if any.
    pub cited_pair: Option<(usize, usize)>,
}

impl ExampleClaim {
    pub fn evaluate(&self) -> VerdictReport {
        let ideal = self.instance.ideal().expect("claims are about triples");
        let alpha = self.instance.alpha().expect("claims are about triples");
        let ring = ideal.ring();
        let actual = is_alpha_prime_or_false(ideal, alpha);
        let cited_ok = self
            .cited_pair
            .map(|p| pair_violates(ring, ideal.elements(), Some(alpha), p));
        let found = violating_pair(ring, ideal.elements(), Some(alpha));
        let pair = match self.cited_pair {
            Some(p) if cited_ok == Some(true) => Some(p),
            _ => found,
        };
        let holds = actual == self.claimed_alpha_prime && cited_ok != Some(false);
        let mut flags = vec![format!("alpha_prime={actual}")];
        if let Some(ok) = cited_ok {
            flags.push(format!("cited_pair_valid={ok}"));
        }
        let mut report = VerdictReport {
            instance: self.instance.id().to_string(),
            theorem: self.id.to_string(),
            status: if holds { Status::Holds } else { Status::Fails },
            hypotheses: Vec::new(),
            witness: pair.map(|p| Witness::Derived {
                from: ideal.elements().clone(),
                set: ideal.elements().clone(),
                pair: Some(p),
            }),
            anchors: vec!["example claim".to_string()],
            flags,
            ledger: None,
        };
        report.ledger = known_discrepancy(&self.instance, &report).map(|e| e.id);
        report
    }
}

fn claim_triple(ctx: &Arc<RingContext>, alpha: Endomorphism, set: ElementSet) -> Result<Instance> {
    let idx = ctx
        .index_of(&set)
        .ok_or_else(|| crate::error::Error::NotAHyperideal(set.to_string()))?;
    Instance::triple(ctx.clone(), alpha, idx)
}

fn add_claims(corpus: &mut Corpus, config: &CorpusConfig) -> Result<()> {
    let ctx_of = |corpus: &Corpus, n: usize, a: &[usize]| -> Result<Arc<RingContext>> {
        let name = make_zn_multiplier_ring(n, a)?.name().to_string();
        match corpus.ring(&name) {
            Some(c) => Ok(c.clone()),
            None => Ok(Arc::new(RingContext::new(
                Arc::new(make_zn_multiplier_ring(n, a)?),
                config.ideal_cap,
            )?)),
        }
    };
    let r12 = ctx_of(corpus, 12, &[2, 3])?;
    let id12 = Endomorphism::identity(r12.ring().clone());
    let r6 = ctx_of(corpus, 6, &[2])?;
    let r8 = ctx_of(corpus, 8, &[0, 2, 4, 6])?;
    let mut claims = vec![
        ExampleClaim {
            id: "ex-z12-ideal-2-alpha-prime",
            instance: claim_triple(&r12, id12.clone(), [0, 2, 4, 6, 8, 10].into())?,
            claimed_alpha_prime: true,
            cited_pair: None,
        },
        ExampleClaim {
            id: "ex-z12-ideal-3-alpha-prime",
            instance: claim_triple(&r12, id12, [0, 3, 6, 9].into())?,
            claimed_alpha_prime: true,
            cited_pair: None,
        },
        ExampleClaim {
            id: "ex-z6-scaled-3x-alpha-prime",
            instance: claim_triple(
                &r6,
                Endomorphism::multiple(r6.ring().clone(), 3)?,
                [0, 3].into(),
            )?,
            claimed_alpha_prime: true,
            cited_pair: None,
        },
        ExampleClaim {
            id: "ex-z8-scaled-3x-alpha-prime",
            instance: claim_triple(
                &r8,
                Endomorphism::multiple(r8.ring().clone(), 3)?,
                [0, 2, 4, 6].into(),
            )?,
            claimed_alpha_prime: true,
            cited_pair: None,
        },
    ];
    claims.push(z35_product_claim(corpus, config)?);
    corpus.claims = claims;
    Ok(())
}

/// `ℤ₃₅{1,7} × ℤ₃₅{1,5}` with `ᾱ = id`: a product instance over all
/// factor-ideal pairs and the claim that `7ℤ × 5ℤ` is not `ᾱ`-prime.
fn z35_product_claim(corpus: &mut Corpus, config: &CorpusConfig) -> Result<ExampleClaim> {
    let r1 = Arc::new(make_zn_multiplier_ring(35, &[1, 7])?);
    let r2 = Arc::new(make_zn_multiplier_ring(35, &[1, 5])?);
    let cap = config.ideal_cap.max(64);
    let inst = Instance::product(
        Arc::new(RingContext::new(r1.clone(), cap)?),
        Arc::new(RingContext::new(r2.clone(), cap)?),
        Arc::new(product_ring(&r1, &r2, DEFAULT_PRODUCT_CAP)?),
        Endomorphism::identity(r1),
        Endomorphism::identity(r2),
        AlphaBarReading::Corrected,
    )?;
    corpus.instances.push(inst.clone());
    let super::InstanceKind::Product {
        product, alpha_bar, ..
    } = inst.kind()
    else {
        unreachable!("product instance")
    };
    let sevens: ElementSet = (0..35).step_by(7).collect();
    let fives: ElementSet = (0..35).step_by(5).collect();
    let set = product.product_set(&sevens, &fives);
    let ctx = Arc::new(RingContext::with_ideals(
        product.ring().clone(),
        vec![set.clone()],
    )?);
    let triple = claim_triple(&ctx, alpha_bar.clone(), set)?;
    Ok(ExampleClaim {
        id: "ex-z35-product-not-alpha-prime",
        instance: triple,
        claimed_alpha_prime: false,
        cited_pair: Some((product.pair(5, 0), product.pair(0, 7))),
    })
}
