//! Hypotheses, conclusions and witness rechecks for each catalog entry.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::instance::{Instance, InstanceKind, RingContext, Signature};
use super::witness::Witness;
use super::{HypothesisRecord, Met, Status, TheoremCheck};
use crate::constructions::{
    induced_quotient_endo, quotient_ring, AlphaBarReading, ProductRing, QuotientRing,
};
use crate::ideals::{
    alpha_nilradical, alpha_radical_unchecked, d_set, is_alpha_integral_hyperdomain,
    is_alpha_prime_or_false, is_hyperideal, is_prime, nonzero_zero_divisors, primary_witness,
    prime_radical_in, zero_divisors, CStatus, HyperIdeal,
};
use crate::morphisms::{commutes, Endomorphism, Homomorphism};
use crate::ring::{HyperRing, IdentityFlavor};
use crate::set::ElementSet;

use Signature::{Hom, Product, RingEndo, RingIdeal, Triple};

const AP: &str = "I is α-prime";
const PROPER: &str = "I is proper";
const C_IDEAL: &str = "I is a C-hyperideal";
const WEAK_ID: &str = "R has a weak identity";
const SCALAR_ID: &str = "R has a scalar identity";
const COMMUTATIVE: &str = "R is commutative";
const ZERO_ABS: &str = "R is zero-absorbing";
const QUOTIENT: &str = "R/I is well defined";
const COMMUTES: &str = "α₂∘f = f∘α₁";
const ZERO_PRIME: &str = "⟨0⟩ is prime";
const LEFT_ID: &str = "R₁ has a weak identity";
const RIGHT_ID: &str = "R₂ has a weak identity";

macro_rules! check {
    ($id:literal, $sig:expr, [$($h:expr),*], $concl:literal, $anchor:literal) => {
        TheoremCheck { id: $id, signature: $sig, hypotheses: &[$($h),*], conclusion: $concl, anchor: $anchor }
    };
}

pub(crate) static CATALOG: &[TheoremCheck] = &[
    check!(
        "T01",
        Triple,
        [PROPER, AP, WEAK_ID],
        "α(I) ⊆ I",
        "invariance of α-primes"
    ),
    check!(
        "T02",
        Triple,
        [AP, C_IDEAL, "√I is proper"],
        "√I is α-prime",
        "prime radical of an α-prime"
    ),
    check!(
        "T03",
        Triple,
        [AP, "E = α⁻¹(I) is proper"],
        "E is α-prime, and I ⊆ E given a weak identity",
        "contraction along α"
    ),
    check!(
        "T04",
        Triple,
        [AP, "I is maximal among proper α-invariant hyperideals"],
        "I is prime",
        "maximal invariant ideals"
    ),
    check!(
        "T05",
        Triple,
        [PROPER, COMMUTATIVE],
        "I α-prime ⟺ (I₁∘I₂ ⊆ I ⇒ I₁ ⊆ I or α(I₂) ⊆ I)",
        "ideal-pair form"
    ),
    check!(
        "T06",
        Triple,
        [AP, COMMUTATIVE],
        "every proper (I:S) is α-prime",
        "colon ideals"
    ),
    check!("T07", Triple, [AP, C_IDEAL], "xⁿ ⊆ I ⇒ α(x) ∈ I", "powers"),
    check!(
        "T08",
        Triple,
        [AP, C_IDEAL],
        "α(y)ⁿ ⊆ I ⇒ α²(y) ∈ I",
        "powers of images"
    ),
    check!(
        "T09",
        RingEndo,
        [SCALAR_ID],
        "Nil_α(R) is a hyperideal",
        "α-nilradical"
    ),
    check!(
        "T10",
        Hom,
        [COMMUTES],
        "f⁻¹(I₂) is α₁-prime for α₂-prime I₂ with proper preimage",
        "preimages"
    ),
    check!(
        "T11",
        RingEndo,
        [],
        "Ker α ⊆ every α-prime hyperideal",
        "kernel bound"
    ),
    check!(
        "T12",
        RingEndo,
        [ZERO_PRIME, "Ker α is proper"],
        "Ker α is prime",
        "kernel primality"
    ),
    check!(
        "T13",
        RingEndo,
        [ZERO_ABS, ZERO_PRIME],
        "Nil_α(R) = ⋂ α-prime hyperideals",
        "nilradical as intersection"
    ),
    check!(
        "T14",
        RingEndo,
        [ZERO_ABS, "⟨0⟩ is a C-hyperideal"],
        "Nil_α(R) = √α⟨0⟩",
        "nilradical and α-radical"
    ),
    check!(
        "T15",
        RingEndo,
        [ZERO_ABS, COMMUTATIVE],
        "α-radical is monotone, sum-bounded and meets products",
        "α-radical laws"
    ),
    check!(
        "T16",
        RingEndo,
        [ZERO_ABS, SCALAR_ID, "α fixes the scalar identity"],
        "√αA = R ⟺ A = R; √α(Aⁿ) = √αA for α-prime A",
        "α-radical of powers"
    ),
    check!(
        "T17",
        Hom,
        [COMMUTES, "R₁ is zero-absorbing", "R₂ is zero-absorbing"],
        "f(√αI₁) ⊆ √αf(I₁), √αf⁻¹(I₂) ⊆ f⁻¹(√αI₂), equality for bijections",
        "α-radicals under maps"
    ),
    check!(
        "T18",
        Triple,
        [ZERO_ABS, "a∘b ⊆ I ⇒ a ∈ I or b ∈ √αI", "√αI is proper"],
        "√αI is α-prime",
        "sufficient condition"
    ),
    check!(
        "T19",
        Triple,
        [PROPER, C_IDEAL, COMMUTATIVE, QUOTIENT],
        "I α-prime ⟺ α(y) ∈ I whenever y+I is a zero divisor",
        "zero divisors of R/I"
    ),
    check!(
        "T20",
        RingIdeal,
        [PROPER, C_IDEAL, QUOTIENT],
        "I prime ⟺ R/I has no nonzero zero divisors",
        "classical zero divisors"
    ),
    check!(
        "T21",
        Triple,
        ["Ker α ⊆ I", "α(Ker α) ⊆ Ker α", "R/Ker α is well defined"],
        "I α-prime ⟺ I/Ker α prime",
        "quotient by the kernel"
    ),
    check!(
        "T22",
        Triple,
        [PROPER, C_IDEAL, "α(I) ⊆ I", QUOTIENT],
        "I α-prime ⟺ R/I is α*-integral",
        "integral quotients"
    ),
    check!(
        "T23",
        Hom,
        ["f is surjective", COMMUTES],
        "I₁ α₁-prime ⟺ f(I₁) α₂-prime, for I₁ over the kernel",
        "epimorphic images"
    ),
    check!(
        "T24",
        Triple,
        ["some J ⊆ I with α(J) ⊆ J has R/J well defined"],
        "I α-prime ⟺ I/J α*-prime",
        "quotient correspondence"
    ),
    check!(
        "T25",
        Product,
        [LEFT_ID, RIGHT_ID],
        "I₁ α₁-prime ⟺ I₁ × R₂ ᾱ-prime",
        "product with a full factor"
    ),
    check!(
        "T26",
        Product,
        [
            LEFT_ID,
            RIGHT_ID,
            "α₁ sends a weak identity to a weak identity",
            "α₂ sends a weak identity to a weak identity"
        ],
        "I₁ × I₂ ᾱ-prime ⟺ one factor full and the other αᵢ-prime",
        "product ideals"
    ),
    check!(
        "T27",
        RingIdeal,
        [],
        "D ⊆ √I, with equality for C-hyperideals",
        "D-set radical"
    ),
    check!(
        "T28",
        RingIdeal,
        ["Q is primary", "√Q is proper"],
        "√Q is prime",
        "radical of a primary"
    ),
];

pub(crate) struct Outcome {
    pub hypotheses: Vec<HypothesisRecord>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub flags: Vec<String>,
}

#[derive(Default)]
struct Eval {
    hyps: Vec<HypothesisRecord>,
    flags: Vec<String>,
}

impl Eval {
    fn new() -> Self {
        Self::default()
    }

    fn hyp(mut self, name: &'static str, met: impl Into<Met>) -> Self {
        self.hyps.push(HypothesisRecord {
            name,
            met: met.into(),
        });
        self
    }

    fn flag(mut self, flag: impl Into<String>) -> Self {
        self.flags.push(flag.into());
        self
    }

    fn conclude(self, conclusion: impl FnOnce(&mut Vec<String>) -> Option<Witness>) -> Outcome {
        let Eval { hyps, mut flags } = self;
        let blocked = if hyps.iter().any(|h| h.met == Met::No) {
            Some(Status::HypothesesNotMet)
        } else if hyps.iter().any(|h| h.met == Met::Unknown) {
            Some(Status::Undecided)
        } else {
            None
        };
        let (status, witness) = match blocked {
            Some(s) => (s, None),
            None => match conclusion(&mut flags) {
                None => (Status::Holds, None),
                Some(w) => (Status::Fails, Some(w)),
            },
        };
        Outcome {
            hypotheses: hyps,
            status,
            witness,
            flags,
        }
    }
}

impl From<CStatus> for Met {
    fn from(c: CStatus) -> Self {
        match c {
            CStatus::Yes => Met::Yes,
            CStatus::No => Met::No,
            CStatus::Unknown => Met::Unknown,
        }
    }
}

// ---- set-level predicates, shared by evaluation and recheck ----

fn apply(alpha: Option<&Endomorphism>, y: usize) -> usize {
    alpha.map_or(y, |a| a.apply(y))
}

/// First `(x, y)` with `x∘y ⊆ S`, `x ∉ S` and `α(y) ∉ S`.
pub(crate) fn violating_pair(
    ring: &HyperRing,
    set: &ElementSet,
    alpha: Option<&Endomorphism>,
) -> Option<(usize, usize)> {
    let mask = set.mask(ring.order());
    ring.elements().filter(|&x| !mask[x]).find_map(|x| {
        ring.elements()
            .find(|&y| !mask[apply(alpha, y)] && ring.mul(x, y).is_within(&mask))
            .map(|y| (x, y))
    })
}

pub(crate) fn pair_violates(
    ring: &HyperRing,
    set: &ElementSet,
    alpha: Option<&Endomorphism>,
    (x, y): (usize, usize),
) -> bool {
    x < ring.order()
        && y < ring.order()
        && !set.contains(x)
        && !set.contains(apply(alpha, y))
        && ring.mul(x, y).is_subset(set)
}

/// `Err(None)`: not a hyperideal; `Err(Some(p))`: first violating pair.
fn prime_like(
    ring: &HyperRing,
    set: &ElementSet,
    alpha: Option<&Endomorphism>,
) -> Result<(), Option<(usize, usize)>> {
    if !is_hyperideal(ring, set) {
        return Err(None);
    }
    violating_pair(ring, set, alpha).map_or(Ok(()), |p| Err(Some(p)))
}

/// Proper hyperideal with no violating pair.
fn set_prime_like(ring: &HyperRing, set: &ElementSet, alpha: Option<&Endomorphism>) -> bool {
    set.len() < ring.order() && prime_like(ring, set, alpha).is_ok()
}

fn derived(
    ring: &HyperRing,
    from: &ElementSet,
    set: &ElementSet,
    alpha: Option<&Endomorphism>,
) -> Option<Witness> {
    prime_like(ring, set, alpha)
        .err()
        .map(|pair| Witness::Derived {
            from: from.clone(),
            set: set.clone(),
            pair,
        })
}

fn derived_ok(
    w: &Witness,
    ring: &HyperRing,
    from: &ElementSet,
    set: &ElementSet,
    alpha: Option<&Endomorphism>,
) -> bool {
    match w {
        Witness::Derived {
            from: f,
            set: s,
            pair,
        } if f == from && s == set => match pair {
            Some(p) => is_hyperideal(ring, s) && pair_violates(ring, s, alpha, *p),
            None => !is_hyperideal(ring, s),
        },
        _ => false,
    }
}

fn escape(inside: &ElementSet, outside: &ElementSet) -> Option<Witness> {
    inside
        .iter()
        .find(|&x| !outside.contains(x))
        .map(|x| Witness::Escape {
            x,
            inside: inside.clone(),
            outside: outside.clone(),
        })
}

fn escape_ok(w: &Witness, inside: &ElementSet, outside: &ElementSet) -> bool {
    matches!(w, Witness::Escape { x, inside: i, outside: o }
        if i == inside && o == outside && inside.contains(*x) && !outside.contains(*x))
}

/// First element of the symmetric difference, reported from the side that
/// holds it.
fn mismatch(a: &ElementSet, b: &ElementSet) -> Option<Witness> {
    let x = a
        .union(b)
        .iter()
        .find(|&x| a.contains(x) != b.contains(x))?;
    let (inside, outside) = if a.contains(x) { (a, b) } else { (b, a) };
    Some(Witness::Escape {
        x,
        inside: inside.clone(),
        outside: outside.clone(),
    })
}

fn mismatch_ok(w: &Witness, a: &ElementSet, b: &ElementSet) -> bool {
    escape_ok(w, a, b) || escape_ok(w, b, a)
}

fn disagree(
    subject: Vec<ElementSet>,
    reading: Option<&'static str>,
    lhs: bool,
    rhs: bool,
) -> Option<Witness> {
    (lhs != rhs).then_some(Witness::Disagree {
        subject,
        reading,
        lhs,
        rhs,
    })
}

/// Recomputes both sides on the witness subject.
fn disagree_ok(
    w: &Witness,
    sides: impl FnOnce(&[ElementSet], Option<&str>) -> Option<(bool, bool)>,
) -> bool {
    match w {
        Witness::Disagree {
            subject,
            reading,
            lhs,
            rhs,
        } => sides(subject, *reading).is_some_and(|(l, r)| l == *lhs && r == *rhs && l != r),
        _ => false,
    }
}

fn has_weak_identity(ring: &HyperRing) -> bool {
    ring.elements()
        .any(|e| ring.satisfies_identity(e, IdentityFlavor::Weak))
}

fn scalar_identity(ring: &HyperRing) -> Option<usize> {
    ring.elements()
        .find(|&e| ring.satisfies_identity(e, IdentityFlavor::Scalar))
}

fn is_invariant(alpha: &Endomorphism, set: &ElementSet) -> bool {
    alpha.image(set).is_subset(set)
}

/// `{r : r∘s ⊆ I for all s ∈ S}`.
fn colon_of(ring: &HyperRing, i: &ElementSet, s: &ElementSet) -> ElementSet {
    let mask = i.mask(ring.order());
    ring.elements()
        .filter(|&r| s.iter().all(|y| ring.mul(r, y).is_within(&mask)))
        .collect()
}

fn quotient_by(ctx: &RingContext, set: &ElementSet) -> Option<Arc<QuotientRing>> {
    match ctx.index_of(set) {
        Some(k) => ctx.quotient(k).cloned(),
        None => fresh_quotient(ctx.ring(), set),
    }
}

fn fresh_quotient(ring: &Arc<HyperRing>, set: &ElementSet) -> Option<Arc<QuotientRing>> {
    let ideal = HyperIdeal::new(ring.clone(), set.clone()).ok()?;
    quotient_ring(&ideal).ok().map(Arc::new)
}

fn ideal_in(ring: &Arc<HyperRing>, set: &ElementSet) -> Option<HyperIdeal> {
    HyperIdeal::new(ring.clone(), set.clone()).ok()
}

// ---- dispatch ----

pub(crate) fn evaluate(id: &str, inst: &Instance) -> Outcome {
    match inst.kind() {
        InstanceKind::Triple { ctx, alpha, ideal } => Tr::new(ctx, alpha, *ideal).evaluate(id),
        InstanceKind::RingEndo { ctx, alpha } => Re {
            ctx,
            ring: ctx.ring(),
            alpha,
        }
        .evaluate(id),
        InstanceKind::RingIdeal { ctx, ideal } => Ri {
            ctx,
            ring: ctx.ring(),
            idx: *ideal,
            i: ctx.ideal(*ideal),
        }
        .evaluate(id),
        InstanceKind::Hom {
            source,
            target,
            f,
            alpha1,
            alpha2,
        } => Hm {
            src: source,
            tgt: target,
            f,
            a1: alpha1,
            a2: alpha2,
        }
        .evaluate(id),
        InstanceKind::Product {
            left,
            right,
            product,
            alpha1,
            alpha2,
            alpha_bar,
            reading,
        } => Pr {
            left,
            right,
            p: product,
            a1: alpha1,
            a2: alpha2,
            abar: alpha_bar,
            reading: *reading,
        }
        .evaluate(id),
    }
}

pub(crate) fn recheck(id: &str, inst: &Instance, w: &Witness) -> bool {
    match inst.kind() {
        InstanceKind::Triple { ctx, alpha, ideal } => Tr::new(ctx, alpha, *ideal).recheck(id, w),
        InstanceKind::RingEndo { ctx, alpha } => Re {
            ctx,
            ring: ctx.ring(),
            alpha,
        }
        .recheck(id, w),
        InstanceKind::RingIdeal { ctx, ideal } => Ri {
            ctx,
            ring: ctx.ring(),
            idx: *ideal,
            i: ctx.ideal(*ideal),
        }
        .recheck(id, w),
        InstanceKind::Hom {
            source,
            target,
            f,
            alpha1,
            alpha2,
        } => Hm {
            src: source,
            tgt: target,
            f,
            a1: alpha1,
            a2: alpha2,
        }
        .recheck(id, w),
        InstanceKind::Product {
            left,
            right,
            product,
            alpha1,
            alpha2,
            alpha_bar,
            reading,
        } => Pr {
            left,
            right,
            p: product,
            a1: alpha1,
            a2: alpha2,
            abar: alpha_bar,
            reading: *reading,
        }
        .recheck(id, w),
    }
}

// ---- (R, α, I) ----

struct Tr<'a> {
    ctx: &'a RingContext,
    ring: &'a HyperRing,
    alpha: &'a Endomorphism,
    idx: usize,
    i: &'a HyperIdeal,
}

impl<'a> Tr<'a> {
    fn new(ctx: &'a RingContext, alpha: &'a Endomorphism, idx: usize) -> Self {
        Tr {
            ctx,
            ring: ctx.ring(),
            alpha,
            idx,
            i: ctx.ideal(idx),
        }
    }

    fn set(&self) -> &ElementSet {
        self.i.elements()
    }

    fn a(&self) -> Option<&Endomorphism> {
        Some(self.alpha)
    }

    fn ap(&self) -> bool {
        is_alpha_prime_or_false(self.i, self.alpha)
    }

    fn preimage(&self) -> ElementSet {
        self.alpha.preimage(self.set())
    }

    fn kernel(&self) -> ElementSet {
        self.alpha.preimage(self.ctx.zero_ideal().elements())
    }

    fn alpha_radical(&self) -> ElementSet {
        alpha_radical_unchecked(self.ring, self.set(), self.alpha)
    }

    fn maximal_invariant(&self) -> bool {
        let inv = |j: &HyperIdeal| j.is_proper() && is_invariant(self.alpha, j.elements());
        inv(self.i)
            && !self
                .ctx
                .ideals()
                .iter()
                .any(|j| inv(j) && j.len() > self.i.len() && self.i.is_subset_of(j))
    }

    fn t05_rhs(&self) -> bool {
        let ids = self.ctx.ideals();
        let mask = self.i.mask();
        ids.iter().all(|i1| {
            i1.is_subset_of(self.i)
                || ids.iter().all(|i2| {
                    self.alpha.image(i2.elements()).is_within(mask)
                        || !self
                            .ring
                            .product(i1.elements(), i2.elements())
                            .is_within(mask)
                })
        })
    }

    /// Distinct colon ideals `(I:S)` with a generating `S` for each, in
    /// canonical order of the colon.
    fn colon_family(&self) -> Vec<(ElementSet, ElementSet)> {
        let singles: Vec<ElementSet> = self
            .ring
            .elements()
            .map(|s| colon_of(self.ring, self.set(), &ElementSet::singleton(s)))
            .collect();
        let mut family: Vec<(ElementSet, ElementSet)> = Vec::new();
        let mut seen: FxHashMap<ElementSet, ()> = FxHashMap::default();
        for (s, c) in singles.iter().enumerate() {
            if seen.insert(c.clone(), ()).is_none() {
                family.push((ElementSet::singleton(s), c.clone()));
            }
        }
        let mut k = 0;
        while k < family.len() {
            for (s, c) in singles.iter().enumerate() {
                let meet = family[k].1.intersection(c);
                if seen.insert(meet.clone(), ()).is_none() {
                    let gens = family[k].0.union(&ElementSet::singleton(s));
                    family.push((gens, meet));
                }
            }
            k += 1;
        }
        family.sort_by(|a, b| a.1.canonical_cmp(&b.1));
        family
    }

    fn t18_condition(&self, rad: &ElementSet) -> bool {
        let mask = self.i.mask();
        self.ring.elements().all(|a| {
            self.i.contains(a)
                || self
                    .ring
                    .elements()
                    .all(|b| rad.contains(b) || !self.ring.mul(a, b).is_within(mask))
        })
    }

    fn t19_rhs(&self, q: &QuotientRing) -> bool {
        let zd = zero_divisors(q.ring());
        self.ring
            .elements()
            .all(|y| !zd.contains(q.coset_of(y)) || self.i.contains(self.alpha.apply(y)))
    }

    fn t21_rhs(&self, q: &QuotientRing) -> bool {
        q.ideal_image(self.i)
            .is_ok_and(|i| i.is_proper() && is_prime(&i).unwrap_or(false))
    }

    fn t22_rhs(&self, q: &QuotientRing) -> bool {
        induced_quotient_endo(q, self.alpha)
            .is_ok_and(|a| is_alpha_integral_hyperdomain(q.ring(), &a))
    }

    /// Quotients `R/J` admissible for the correspondence.
    fn t24_quotients(&self) -> impl Iterator<Item = (&'a HyperIdeal, &'a Arc<QuotientRing>)> + '_ {
        self.ctx
            .ideals()
            .iter()
            .enumerate()
            .filter_map(move |(k, j)| {
                if !j.is_subset_of(self.i) || !is_invariant(self.alpha, j.elements()) {
                    return None;
                }
                self.ctx.quotient(k).map(|q| (j, q))
            })
    }

    fn t24_rhs(&self, q: &QuotientRing) -> bool {
        let Ok(star) = induced_quotient_endo(q, self.alpha) else {
            return false;
        };
        q.ideal_image(self.i)
            .is_ok_and(|ij| is_alpha_prime_or_false(&ij, &star))
    }

    fn evaluate(&self, id: &str) -> Outcome {
        let ring = self.ring;
        let i = self.set();
        match id {
            "T01" => Eval::new()
                .hyp(PROPER, self.i.is_proper())
                .hyp(AP, self.ap())
                .hyp(WEAK_ID, has_weak_identity(ring))
                .conclude(|_| escape(i, &self.preimage())),
            "T02" => {
                let rad = &self.ctx.radical(self.idx).radical;
                Eval::new()
                    .hyp(AP, self.ap())
                    .hyp(C_IDEAL, self.i.c_status())
                    .hyp("√I is proper", rad.len() < ring.order())
                    .conclude(|_| derived(ring, i, rad, self.a()))
            }
            "T03" => {
                let e = self.preimage();
                Eval::new()
                    .hyp(AP, self.ap())
                    .hyp("E = α⁻¹(I) is proper", e.len() < ring.order())
                    .conclude(|_| {
                        derived(ring, i, &e, self.a())
                            .or_else(|| has_weak_identity(ring).then(|| escape(i, &e)).flatten())
                    })
            }
            "T04" => Eval::new()
                .hyp(AP, self.ap())
                .hyp(
                    "I is maximal among proper α-invariant hyperideals",
                    self.maximal_invariant(),
                )
                .conclude(|_| derived(ring, i, i, None)),
            "T05" => Eval::new()
                .hyp(PROPER, self.i.is_proper())
                .hyp(COMMUTATIVE, ring.is_commutative())
                .conclude(|_| disagree(vec![i.clone()], None, self.ap(), self.t05_rhs())),
            "T06" => Eval::new()
                .hyp(AP, self.ap())
                .hyp(COMMUTATIVE, ring.is_commutative())
                .conclude(|_| {
                    self.colon_family()
                        .iter()
                        .filter(|(_, c)| c.len() < ring.order())
                        .find_map(|(s, c)| derived(ring, s, c, self.a()))
                }),
            "T07" => Eval::new()
                .hyp(AP, self.ap())
                .hyp(C_IDEAL, self.i.c_status())
                .conclude(|_| escape(&self.ctx.radical(self.idx).d_set, &self.preimage())),
            "T08" => Eval::new()
                .hyp(AP, self.ap())
                .hyp(C_IDEAL, self.i.c_status())
                .conclude(|_| {
                    let d = &self.ctx.radical(self.idx).d_set;
                    escape(
                        &self.alpha.preimage(d),
                        &self.alpha.preimage(&self.preimage()),
                    )
                }),
            "T18" => {
                let rad = self.alpha_radical();
                Eval::new()
                    .hyp(ZERO_ABS, ring.is_zero_absorbing())
                    .hyp("a∘b ⊆ I ⇒ a ∈ I or b ∈ √αI", self.t18_condition(&rad))
                    .hyp("√αI is proper", rad.len() < ring.order())
                    .conclude(|_| derived(ring, i, &rad, self.a()))
            }
            "T19" => {
                let q = self.ctx.quotient(self.idx);
                Eval::new()
                    .hyp(PROPER, self.i.is_proper())
                    .hyp(C_IDEAL, self.i.c_status())
                    .hyp(COMMUTATIVE, ring.is_commutative())
                    .hyp(QUOTIENT, q.is_some())
                    .conclude(|_| disagree(vec![i.clone()], None, self.ap(), self.t19_rhs(q?)))
            }
            "T21" => {
                let k = self.kernel();
                let q = (k.is_subset(i) && k.len() < ring.order())
                    .then(|| quotient_by(self.ctx, &k))
                    .flatten();
                Eval::new()
                    .hyp("Ker α ⊆ I", k.is_subset(i))
                    .hyp("α(Ker α) ⊆ Ker α", is_invariant(self.alpha, &k))
                    .hyp("R/Ker α is well defined", q.is_some())
                    .conclude(|_| {
                        disagree(
                            vec![i.clone(), k.clone()],
                            None,
                            self.ap(),
                            self.t21_rhs(q.as_deref()?),
                        )
                    })
            }
            "T22" => {
                let q = self.ctx.quotient(self.idx);
                Eval::new()
                    .hyp(PROPER, self.i.is_proper())
                    .hyp(C_IDEAL, self.i.c_status())
                    .hyp("α(I) ⊆ I", is_invariant(self.alpha, i))
                    .hyp(QUOTIENT, q.is_some())
                    .conclude(|_| disagree(vec![i.clone()], None, self.ap(), self.t22_rhs(q?)))
            }
            "T24" => Eval::new()
                .hyp(
                    "some J ⊆ I with α(J) ⊆ J has R/J well defined",
                    self.t24_quotients().next().is_some(),
                )
                .conclude(|_| {
                    let ap = self.ap();
                    self.t24_quotients().find_map(|(j, q)| {
                        disagree(
                            vec![i.clone(), j.elements().clone()],
                            None,
                            ap,
                            self.t24_rhs(q),
                        )
                    })
                }),
            _ => unreachable!("{id} is not a triple check"),
        }
    }

    fn recheck(&self, id: &str, w: &Witness) -> bool {
        let ring = self.ring;
        let i = self.set();
        let fresh_ap = || set_prime_like(ring, i, self.a());
        match id {
            "T01" => escape_ok(w, i, &self.preimage()),
            "T02" => {
                let rad = prime_radical_in(self.i, self.ctx.ideals()).radical;
                derived_ok(w, ring, i, &rad, self.a())
            }
            "T03" => {
                let e = self.preimage();
                derived_ok(w, ring, i, &e, self.a()) || escape_ok(w, i, &e)
            }
            "T04" => derived_ok(w, ring, i, i, None),
            "T05" => disagree_ok(w, |s, _| {
                (s == [i.clone()]).then(|| (fresh_ap(), self.t05_rhs()))
            }),
            "T06" => match w {
                Witness::Derived { from, set, .. } => {
                    !from.is_empty()
                        && set.len() < ring.order()
                        && derived_ok(w, ring, from, &colon_of(ring, i, from), self.a())
                }
                _ => false,
            },
            "T07" => escape_ok(w, &d_set(ring, i), &self.preimage()),
            "T08" => escape_ok(
                w,
                &self.alpha.preimage(&d_set(ring, i)),
                &self.alpha.preimage(&self.preimage()),
            ),
            "T18" => derived_ok(w, ring, i, &self.alpha_radical(), self.a()),
            "T19" => disagree_ok(w, |s, _| {
                let q = fresh_quotient(self.ctx.ring(), i)?;
                (s == [i.clone()]).then(|| (fresh_ap(), self.t19_rhs(&q)))
            }),
            "T21" => disagree_ok(w, |s, _| {
                let k = self.kernel();
                let q = fresh_quotient(self.ctx.ring(), &k)?;
                (s == [i.clone(), k]).then(|| (fresh_ap(), self.t21_rhs(&q)))
            }),
            "T22" => disagree_ok(w, |s, _| {
                let q = fresh_quotient(self.ctx.ring(), i)?;
                (s == [i.clone()]).then(|| (fresh_ap(), self.t22_rhs(&q)))
            }),
            "T24" => disagree_ok(w, |s, _| {
                let [si, j] = s else { return None };
                if si != i || !j.is_subset(i) || !is_invariant(self.alpha, j) {
                    return None;
                }
                let q = fresh_quotient(self.ctx.ring(), j)?;
                Some((fresh_ap(), self.t24_rhs(&q)))
            }),
            _ => false,
        }
    }
}

// ---- (R, α) ----

struct Re<'a> {
    ctx: &'a RingContext,
    ring: &'a Arc<HyperRing>,
    alpha: &'a Endomorphism,
}

impl Re<'_> {
    fn kernel(&self) -> ElementSet {
        self.alpha.preimage(self.ctx.zero_ideal().elements())
    }

    fn alpha_primes(&self) -> impl Iterator<Item = &HyperIdeal> + '_ {
        self.ctx
            .ideals()
            .iter()
            .filter(|i| is_alpha_prime_or_false(i, self.alpha))
    }

    fn prime_meet(&self) -> ElementSet {
        self.alpha_primes().fold(self.ring.full_set(), |acc, p| {
            acc.intersection(p.elements())
        })
    }

    fn rad(&self, j: &ElementSet) -> ElementSet {
        alpha_radical_unchecked(self.ring, j, self.alpha)
    }

    fn zero_prime(&self) -> bool {
        let z = self.ctx.zero_ideal();
        z.is_proper() && is_prime(z).unwrap_or(false)
    }

    /// First law of the radical calculus failing for `(a, b)`.
    fn t15_law(&self, a: &ElementSet, b: &ElementSet) -> Option<&'static str> {
        let (ra, rb) = (self.rad(a), self.rad(b));
        if a.is_subset(b) && !ra.is_subset(&rb) {
            return Some("monotone");
        }
        let sum = self.ring.sum_sets(a, b);
        if !self
            .rad(&sum)
            .is_subset(&self.rad(&self.ring.sum_sets(&ra, &rb)))
        {
            return Some("sum");
        }
        let meet = ra.intersection(&rb);
        if self.rad(&self.ring.product(a, b)) != meet || self.rad(&a.intersection(b)) != meet {
            return Some("product_intersection");
        }
        None
    }

    /// `A, A∘A, A∘A∘A, …` up to the first repeat.
    fn powers(&self, a: &ElementSet) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = Vec::new();
        let mut p = a.clone();
        while !out.contains(&p) {
            let next = self.ring.product(&p, a);
            out.push(p);
            p = next;
        }
        out
    }

    /// First law of the identity case failing for `a` (with the offending
    /// power in the second slot).
    fn t16_law(&self, a: &HyperIdeal) -> Option<(&'static str, ElementSet)> {
        let ra = self.rad(a.elements());
        if (ra.len() == self.ring.order()) != !a.is_proper() {
            return Some(("full", a.elements().clone()));
        }
        if is_alpha_prime_or_false(a, self.alpha) {
            if let Some(p) = self
                .powers(a.elements())
                .into_iter()
                .find(|p| self.rad(p) != ra)
            {
                return Some(("power", p));
            }
        }
        None
    }

    fn evaluate(&self, id: &str) -> Outcome {
        let ring = self.ring;
        match id {
            "T09" => Eval::new()
                .hyp(SCALAR_ID, scalar_identity(ring).is_some())
                .conclude(|_| {
                    let nil = alpha_nilradical(ring, self.alpha);
                    (!is_hyperideal(ring, &nil)).then(|| Witness::Derived {
                        from: ring.zero_set(),
                        set: nil,
                        pair: None,
                    })
                }),
            "T11" => Eval::new().conclude(|_| {
                let k = self.kernel();
                let w = k.iter().find_map(|x| {
                    self.alpha_primes()
                        .find(|p| !p.contains(x))
                        .map(|p| Witness::Escape {
                            x,
                            inside: k.clone(),
                            outside: p.elements().clone(),
                        })
                });
                w
            }),
            "T12" => {
                let k = self.kernel();
                Eval::new()
                    .hyp(ZERO_PRIME, self.zero_prime())
                    .hyp("Ker α is proper", k.len() < ring.order())
                    .conclude(|_| derived(ring, self.ctx.zero_ideal().elements(), &k, None))
            }
            "T13" => Eval::new()
                .hyp(ZERO_ABS, ring.is_zero_absorbing())
                .hyp(ZERO_PRIME, self.zero_prime())
                .conclude(|_| mismatch(&alpha_nilradical(ring, self.alpha), &self.prime_meet())),
            "T14" => Eval::new()
                .hyp(ZERO_ABS, ring.is_zero_absorbing())
                .hyp("⟨0⟩ is a C-hyperideal", self.ctx.zero_ideal().c_status())
                .conclude(|_| {
                    mismatch(
                        &alpha_nilradical(ring, self.alpha),
                        &self.rad(self.ctx.zero_ideal().elements()),
                    )
                }),
            "T15" => Eval::new()
                .hyp(ZERO_ABS, ring.is_zero_absorbing())
                .hyp(COMMUTATIVE, ring.is_commutative())
                .conclude(|_| {
                    let ids = self.ctx.ideals();
                    ids.iter().find_map(|a| {
                        ids.iter().find_map(|b| {
                            self.t15_law(a.elements(), b.elements())
                                .map(|law| Witness::Law {
                                    law,
                                    a: a.elements().clone(),
                                    b: b.elements().clone(),
                                })
                        })
                    })
                }),
            "T16" => {
                let e = scalar_identity(ring);
                Eval::new()
                    .hyp(ZERO_ABS, ring.is_zero_absorbing())
                    .hyp(SCALAR_ID, e.is_some())
                    .hyp(
                        "α fixes the scalar identity",
                        e.is_some_and(|e| self.alpha.apply(e) == e),
                    )
                    .conclude(|_| {
                        self.ctx.ideals().iter().find_map(|a| {
                            self.t16_law(a).map(|(law, b)| Witness::Law {
                                law,
                                a: a.elements().clone(),
                                b,
                            })
                        })
                    })
            }
            _ => unreachable!("{id} is not a ring-endomorphism check"),
        }
    }

    fn recheck(&self, id: &str, w: &Witness) -> bool {
        let ring = self.ring;
        match id {
            "T09" => match w {
                Witness::Derived {
                    set, pair: None, ..
                } => *set == alpha_nilradical(ring, self.alpha) && !is_hyperideal(ring, set),
                _ => false,
            },
            "T11" => match w {
                Witness::Escape { outside, .. } => {
                    ideal_in(ring, outside).is_some_and(|p| is_alpha_prime_or_false(&p, self.alpha))
                        && escape_ok(w, &self.kernel(), outside)
                }
                _ => false,
            },
            "T12" => derived_ok(
                w,
                ring,
                self.ctx.zero_ideal().elements(),
                &self.kernel(),
                None,
            ),
            "T13" => {
                let meet = ring
                    .elements()
                    .filter(|&x| {
                        self.ctx.ideals().iter().all(|p| {
                            p.contains(x) || !set_prime_like(ring, p.elements(), Some(self.alpha))
                        })
                    })
                    .collect();
                mismatch_ok(w, &alpha_nilradical(ring, self.alpha), &meet)
            }
            "T14" => mismatch_ok(
                w,
                &alpha_nilradical(ring, self.alpha),
                &self.rad(self.ctx.zero_ideal().elements()),
            ),
            "T15" => match w {
                Witness::Law { law, a, b } => {
                    is_hyperideal(ring, a)
                        && is_hyperideal(ring, b)
                        && self.t15_law(a, b) == Some(law)
                }
                _ => false,
            },
            "T16" => match w {
                Witness::Law { law, a, b } => ideal_in(ring, a).is_some_and(|ia| match *law {
                    "full" => (self.rad(a).len() == ring.order()) != (a.len() == ring.order()),
                    "power" => {
                        is_alpha_prime_or_false(&ia, self.alpha)
                            && self.powers(a).contains(b)
                            && self.rad(b) != self.rad(a)
                    }
                    _ => false,
                }),
                _ => false,
            },
            _ => false,
        }
    }
}

// ---- (R, I) ----

struct Ri<'a> {
    ctx: &'a RingContext,
    ring: &'a Arc<HyperRing>,
    idx: usize,
    i: &'a HyperIdeal,
}

impl Ri<'_> {
    fn t20_rhs(q: &QuotientRing) -> bool {
        nonzero_zero_divisors(q.ring()).is_empty()
    }

    fn evaluate(&self, id: &str) -> Outcome {
        let ring = self.ring;
        let i = self.i.elements();
        match id {
            "T20" => {
                let q = self.ctx.quotient(self.idx);
                Eval::new()
                    .hyp(PROPER, self.i.is_proper())
                    .hyp(C_IDEAL, self.i.c_status())
                    .hyp(QUOTIENT, q.is_some())
                    .conclude(|_| {
                        disagree(
                            vec![i.clone()],
                            None,
                            self.ctx.is_prime(self.idx),
                            Self::t20_rhs(q?),
                        )
                    })
            }
            "T27" => {
                let c = self.i.c_status();
                Eval::new().flag(format!("c_status={c}")).conclude(|_| {
                    let r = self.ctx.radical(self.idx);
                    escape(&r.d_set, &r.radical).or_else(|| {
                        (c == CStatus::Yes)
                            .then(|| escape(&r.radical, &r.d_set))
                            .flatten()
                    })
                })
            }
            "T28" => {
                let primary = self.i.is_proper()
                    && primary_witness(self.i, self.ctx.ideals(), false).is_ok_and(|w| w.is_none());
                let rad = &self.ctx.radical(self.idx).radical;
                Eval::new()
                    .hyp("Q is primary", primary)
                    .hyp("√Q is proper", rad.len() < ring.order())
                    .conclude(|_| derived(ring, i, rad, None))
            }
            _ => unreachable!("{id} is not a ring-ideal check"),
        }
    }

    fn recheck(&self, id: &str, w: &Witness) -> bool {
        let ring = self.ring;
        let i = self.i.elements();
        match id {
            "T20" => disagree_ok(w, |s, _| {
                let q = fresh_quotient(ring, i)?;
                (s == [i.clone()]).then(|| (set_prime_like(ring, i, None), Self::t20_rhs(&q)))
            }),
            "T27" => {
                let rad = prime_radical_in(self.i, self.ctx.ideals()).radical;
                let d = d_set(ring, i);
                escape_ok(w, &d, &rad)
                    || (self.i.c_status() == CStatus::Yes && escape_ok(w, &rad, &d))
            }
            "T28" => derived_ok(
                w,
                ring,
                i,
                &prime_radical_in(self.i, self.ctx.ideals()).radical,
                None,
            ),
            _ => false,
        }
    }
}

// ---- (f: R₁ → R₂, α₁, α₂) ----

struct Hm<'a> {
    src: &'a RingContext,
    tgt: &'a RingContext,
    f: &'a Homomorphism,
    a1: &'a Endomorphism,
    a2: &'a Endomorphism,
}

const READINGS: [&str; 2] = ["ker_alpha", "ker_f"];

impl Hm<'_> {
    fn rad1(&self, j: &ElementSet) -> ElementSet {
        alpha_radical_unchecked(self.src.ring(), j, self.a1)
    }

    fn rad2(&self, j: &ElementSet) -> ElementSet {
        alpha_radical_unchecked(self.tgt.ring(), j, self.a2)
    }

    fn t10_witness(&self, i2: &ElementSet) -> Option<Witness> {
        let r1 = self.src.ring();
        let pre = self.f.preimage(i2);
        (pre.len() < r1.order())
            .then(|| derived(r1, i2, &pre, Some(self.a1)))
            .flatten()
    }

    fn t17_law(&self, law: &str, a: &ElementSet) -> bool {
        match law {
            "image" => self
                .f
                .image(&self.rad1(a))
                .is_subset(&self.rad2(&self.f.image(a))),
            "preimage" => self
                .rad1(&self.f.preimage(a))
                .is_subset(&self.f.preimage(&self.rad2(a))),
            "image_equality" => self.f.image(&self.rad1(a)) == self.rad2(&self.f.image(a)),
            _ => true,
        }
    }

    fn t23_kernel(&self, reading: &str) -> ElementSet {
        match reading {
            "ker_alpha" => self.a1.preimage(self.src.zero_ideal().elements()),
            _ => self.f.preimage(self.tgt.zero_ideal().elements()),
        }
    }

    fn t23_sides(&self, i1: &ElementSet) -> (bool, bool) {
        let lhs = set_prime_like(self.src.ring(), i1, Some(self.a1));
        let rhs = set_prime_like(self.tgt.ring(), &self.f.image(i1), Some(self.a2));
        (lhs, rhs)
    }

    fn t23_reading(&self, reading: &'static str) -> Option<Witness> {
        let k = self.t23_kernel(reading);
        self.src
            .ideals()
            .iter()
            .filter(|i| k.is_subset(i.elements()))
            .find_map(|i| {
                let lhs = is_alpha_prime_or_false(i, self.a1);
                let rhs =
                    set_prime_like(self.tgt.ring(), &self.f.image(i.elements()), Some(self.a2));
                disagree(vec![i.elements().clone()], Some(reading), lhs, rhs)
            })
    }

    fn evaluate(&self, id: &str) -> Outcome {
        let (r1, r2) = (self.src.ring(), self.tgt.ring());
        let comm = commutes(self.f, self.a1, self.a2);
        match id {
            "T10" => Eval::new().hyp(COMMUTES, comm).conclude(|_| {
                self.tgt
                    .ideals()
                    .iter()
                    .filter(|i2| is_alpha_prime_or_false(i2, self.a2))
                    .find_map(|i2| self.t10_witness(i2.elements()))
            }),
            "T17" => Eval::new()
                .hyp(COMMUTES, comm)
                .hyp("R₁ is zero-absorbing", r1.is_zero_absorbing())
                .hyp("R₂ is zero-absorbing", r2.is_zero_absorbing())
                .conclude(|flags| {
                    let bij = self.f.is_bijective();
                    if bij {
                        flags.push("bijective".into());
                    }
                    let law = |law: &'static str, ids: &[HyperIdeal]| {
                        ids.iter()
                            .find(|a| !self.t17_law(law, a.elements()))
                            .map(|a| Witness::Law {
                                law,
                                a: a.elements().clone(),
                                b: match law {
                                    "preimage" => self.f.preimage(a.elements()),
                                    _ => self.f.image(a.elements()),
                                },
                            })
                    };
                    law("image", self.src.ideals())
                        .or_else(|| law("preimage", self.tgt.ideals()))
                        .or_else(|| {
                            bij.then(|| law("image_equality", self.src.ideals()))
                                .flatten()
                        })
                }),
            "T23" => Eval::new()
                .hyp("f is surjective", self.f.is_surjective())
                .hyp(COMMUTES, comm)
                .conclude(|flags| {
                    let mut first = None;
                    for reading in READINGS {
                        let w = self.t23_reading(reading);
                        flags.push(format!(
                            "{reading}_reading={}",
                            if w.is_some() { "fails" } else { "holds" }
                        ));
                        first = first.or(w);
                    }
                    first
                }),
            _ => unreachable!("{id} is not a homomorphism check"),
        }
    }

    fn recheck(&self, id: &str, w: &Witness) -> bool {
        let (r1, r2) = (self.src.ring(), self.tgt.ring());
        match id {
            "T10" => match w {
                Witness::Derived { from, set, .. } => {
                    ideal_in(r2, from).is_some_and(|i2| is_alpha_prime_or_false(&i2, self.a2))
                        && set.len() < r1.order()
                        && derived_ok(w, r1, from, &self.f.preimage(from), Some(self.a1))
                }
                _ => false,
            },
            "T17" => match w {
                Witness::Law { law, a, b } => {
                    let (ring, expect) = match *law {
                        "preimage" => (r2, self.f.preimage(a)),
                        _ => (r1, self.f.image(a)),
                    };
                    let applies = *law != "image_equality" || self.f.is_bijective();
                    applies && is_hyperideal(ring, a) && *b == expect && !self.t17_law(law, a)
                }
                _ => false,
            },
            "T23" => disagree_ok(w, |s, reading| {
                let reading = READINGS.into_iter().find(|r| Some(*r) == reading)?;
                let [i1] = s else { return None };
                (is_hyperideal(r1, i1) && self.t23_kernel(reading).is_subset(i1))
                    .then(|| self.t23_sides(i1))
            }),
            _ => false,
        }
    }
}

// ---- (R₁ × R₂, α₁, α₂) ----

struct Pr<'a> {
    left: &'a RingContext,
    right: &'a RingContext,
    p: &'a ProductRing,
    a1: &'a Endomorphism,
    a2: &'a Endomorphism,
    abar: &'a Endomorphism,
    reading: AlphaBarReading,
}

impl Pr<'_> {
    fn bar_prime(&self, i1: &ElementSet, i2: &ElementSet) -> bool {
        set_prime_like(self.p.ring(), &self.p.product_set(i1, i2), Some(self.abar))
    }

    fn preserves_identity(ring: &HyperRing, alpha: &Endomorphism) -> bool {
        ring.elements().any(|e| {
            ring.satisfies_identity(e, IdentityFlavor::Weak)
                && ring.satisfies_identity(alpha.apply(e), IdentityFlavor::Weak)
        })
    }

    fn t26_rhs(&self, i1: &ElementSet, i2: &ElementSet) -> bool {
        let (r1, r2) = (self.left.ring(), self.right.ring());
        (i1.len() == r1.order() && set_prime_like(r2, i2, Some(self.a2)))
            || (i2.len() == r2.order() && set_prime_like(r1, i1, Some(self.a1)))
    }

    fn eval_base(&self) -> Eval {
        let flag = match self.reading {
            AlphaBarReading::Corrected => "alpha_bar_corrected",
            AlphaBarReading::AsPrinted => "alpha_bar_as_printed",
        };
        Eval::new()
            .flag(flag)
            .hyp(LEFT_ID, has_weak_identity(self.left.ring()))
            .hyp(RIGHT_ID, has_weak_identity(self.right.ring()))
    }

    fn evaluate(&self, id: &str) -> Outcome {
        let full2 = self.right.ring().full_set();
        match id {
            "T25" => self.eval_base().conclude(|_| {
                self.left.ideals().iter().find_map(|i1| {
                    let lhs = is_alpha_prime_or_false(i1, self.a1);
                    disagree(
                        vec![i1.elements().clone()],
                        None,
                        lhs,
                        self.bar_prime(i1.elements(), &full2),
                    )
                })
            }),
            "T26" => self
                .eval_base()
                .hyp(
                    "α₁ sends a weak identity to a weak identity",
                    Self::preserves_identity(self.left.ring(), self.a1),
                )
                .hyp(
                    "α₂ sends a weak identity to a weak identity",
                    Self::preserves_identity(self.right.ring(), self.a2),
                )
                .conclude(|_| {
                    self.left.ideals().iter().find_map(|i1| {
                        self.right.ideals().iter().find_map(|i2| {
                            let (a, b) = (i1.elements(), i2.elements());
                            disagree(
                                vec![a.clone(), b.clone()],
                                None,
                                self.bar_prime(a, b),
                                self.t26_rhs(a, b),
                            )
                        })
                    })
                }),
            _ => unreachable!("{id} is not a product check"),
        }
    }

    fn recheck(&self, id: &str, w: &Witness) -> bool {
        let (r1, r2) = (self.left.ring(), self.right.ring());
        match id {
            "T25" => disagree_ok(w, |s, _| {
                let [i1] = s else { return None };
                is_hyperideal(r1, i1).then(|| {
                    (
                        set_prime_like(r1, i1, Some(self.a1)),
                        self.bar_prime(i1, &r2.full_set()),
                    )
                })
            }),
            "T26" => disagree_ok(w, |s, _| {
                let [i1, i2] = s else { return None };
                (is_hyperideal(r1, i1) && is_hyperideal(r2, i2))
                    .then(|| (self.bar_prime(i1, i2), self.t26_rhs(i1, i2)))
            }),
            _ => false,
        }
    }
}
