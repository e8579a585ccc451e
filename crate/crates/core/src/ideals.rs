//! Hyperideals, primality predicates and radicals.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphisms::{same_ring, Endomorphism};
use crate::ring::HyperRing;
use crate::set::ElementSet;

/// Default largest order for which all hyperideals are enumerated.
pub const DEFAULT_IDEAL_CAP: usize = 16;

/// Outcome of the C-hyperideal decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CStatus {
    Yes,
    No,
    /// The product-set closure exceeded its cap.
    Unknown,
}

impl fmt::Display for CStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CStatus::Yes => "yes",
            CStatus::No => "no",
            CStatus::Unknown => "unknown",
        })
    }
}

/// A validated hyperideal together with its cached classification data.
#[derive(Clone)]
pub struct HyperIdeal {
    ring: Arc<HyperRing>,
    elements: ElementSet,
    mask: Vec<bool>,
    proper: bool,
    c_status: CStatus,
}

impl HyperIdeal {
    /// Validates `elements` as a hyperideal of `ring`.
    pub fn new(ring: Arc<HyperRing>, elements: ElementSet) -> Result<Self> {
        ring.check_set(&elements)?;
        if !is_hyperideal(&ring, &elements) {
            return Err(Error::NotAHyperideal(elements.to_string()));
        }
        Ok(Self::new_unchecked(ring, elements))
    }

    pub(crate) fn new_unchecked(ring: Arc<HyperRing>, elements: ElementSet) -> Self {
        let mask = elements.mask(ring.order());
        let proper = elements.len() < ring.order();
        let c_status = c_status_of(&ring, &mask);
        HyperIdeal {
            ring,
            elements,
            mask,
            proper,
            c_status,
        }
    }

    pub fn ring(&self) -> &Arc<HyperRing> {
        &self.ring
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn c_status(&self) -> CStatus {
        self.c_status
    }

    pub fn is_subset_of(&self, other: &HyperIdeal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    fn require_proper(&self) -> Result<()> {
        if self.proper {
            Ok(())
        } else {
            Err(Error::NotProper)
        }
    }

    fn require_endo(&self, alpha: &Endomorphism) -> Result<()> {
        if alpha.is_endomorphism() && same_ring(alpha.source(), &self.ring) {
            Ok(())
        } else {
            Err(Error::BadEndomorphism(
                "endomorphism of a different ring".into(),
            ))
        }
    }
}

impl PartialEq for HyperIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for HyperIdeal {}

impl fmt::Debug for HyperIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HyperIdeal({} in {})", self.elements, self.ring.name())
    }
}

impl fmt::Display for HyperIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.elements, f)
    }
}

/// Closed under subtraction and two-sided absorption.
pub fn is_hyperideal(ring: &HyperRing, s: &ElementSet) -> bool {
    if ring.check_set(s).is_err() || !s.contains(ring.zero()) {
        return false;
    }
    let mask = s.mask(ring.order());
    s.iter().all(|a| s.iter().all(|b| mask[ring.sub(a, b)]))
        && s.iter().all(|x| {
            ring.elements()
                .all(|r| ring.mul(r, x).is_within(&mask) && ring.mul(x, r).is_within(&mask))
        })
}

/// Least hyperideal containing `s`.
pub fn generate_hyperideal(ring: &Arc<HyperRing>, s: &ElementSet) -> Result<HyperIdeal> {
    ring.check_set(s)?;
    let mut mask = vec![false; ring.order()];
    let mut members = Vec::new();
    let push = |x: usize, mask: &mut Vec<bool>, members: &mut Vec<usize>| {
        if !mask[x] {
            mask[x] = true;
            members.push(x);
        }
    };
    push(ring.zero(), &mut mask, &mut members);
    for x in s.iter() {
        push(x, &mut mask, &mut members);
    }
    let mut next = 0;
    while next < members.len() {
        let u = members[next];
        next += 1;
        for r in ring.elements() {
            for t in ring.mul(r, u).iter().chain(ring.mul(u, r).iter()) {
                push(t, &mut mask, &mut members);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            push(ring.sub(u, v), &mut mask, &mut members);
            push(ring.sub(v, u), &mut mask, &mut members);
            i += 1;
        }
    }
    Ok(HyperIdeal::new_unchecked(
        ring.clone(),
        ElementSet::from_mask(&mask),
    ))
}

fn subgroup_closure(ring: &HyperRing, seed: &[bool]) -> Vec<bool> {
    let mut mask = seed.to_vec();
    let mut members: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
    let mut next = 0;
    while next < members.len() {
        let u = members[next];
        next += 1;
        let mut i = 0;
        while i < members.len() {
            let v = ring.add(u, members[i]);
            if !mask[v] {
                mask[v] = true;
                members.push(v);
            }
            i += 1;
        }
    }
    mask
}

/// All additive subgroups, in canonical order.
pub fn additive_subgroups(ring: &HyperRing) -> Vec<ElementSet> {
    let mut zero = vec![false; ring.order()];
    zero[ring.zero()] = true;
    let mut seen = std::collections::HashSet::new();
    let mut found = vec![zero];
    seen.insert(found[0].clone());
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        next += 1;
        for x in ring.elements().filter(|&x| !h[x]) {
            let mut seed = h.clone();
            seed[x] = true;
            let k = subgroup_closure(ring, &seed);
            if seen.insert(k.clone()) {
                found.push(k);
            }
        }
    }
    let mut out: Vec<ElementSet> = found.iter().map(|m| ElementSet::from_mask(m)).collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Every hyperideal of `ring`, in canonical order (by size, then lexicographic).
pub fn enumerate_hyperideals(ring: &Arc<HyperRing>, cap: usize) -> Result<Vec<HyperIdeal>> {
    if ring.order() > cap {
        return Err(Error::CapExceeded {
            order: ring.order(),
            cap,
        });
    }
    Ok(additive_subgroups(ring)
        .into_iter()
        .filter(|s| is_hyperideal(ring, s))
        .map(|s| HyperIdeal::new_unchecked(ring.clone(), s))
        .collect())
}

fn c_status_of(ring: &HyperRing, mask: &[bool]) -> CStatus {
    match ring.product_set_family() {
        None => CStatus::Unknown,
        Some(family) => {
            if family.iter().all(|x| !x.meets(mask) || x.is_within(mask)) {
                CStatus::Yes
            } else {
                CStatus::No
            }
        }
    }
}

/// Every reachable product-set that meets `s` lies inside `s`.
pub fn is_c_hyperideal(ring: &HyperRing, s: &ElementSet) -> CStatus {
    c_status_of(ring, &s.mask(ring.order()))
}

/// First product-set that meets the ideal without lying inside it.
pub fn c_witness(ideal: &HyperIdeal) -> Option<ElementSet> {
    ideal
        .ring
        .product_set_family()?
        .iter()
        .find(|x| x.meets(&ideal.mask) && !x.is_within(&ideal.mask))
        .cloned()
}

/// First `(x, y)` with `x∘y ⊆ I`, `x ∉ I` and `y ∉ I`.
pub fn prime_witness(ideal: &HyperIdeal) -> Result<Option<(usize, usize)>> {
    ideal.require_proper()?;
    let r = &ideal.ring;
    Ok(r.elements()
        .filter(|&x| !ideal.contains(x))
        .flat_map(|x| r.elements().map(move |y| (x, y)))
        .find(|&(x, y)| !ideal.contains(y) && r.mul(x, y).is_within(&ideal.mask)))
}

pub fn is_prime(ideal: &HyperIdeal) -> Result<bool> {
    Ok(prime_witness(ideal)?.is_none())
}

/// First `(x, y)` with `x∘y ⊆ I`, `x ∉ I` and `α(y) ∉ I`.
pub fn alpha_prime_witness(
    ideal: &HyperIdeal,
    alpha: &Endomorphism,
) -> Result<Option<(usize, usize)>> {
    ideal.require_proper()?;
    ideal.require_endo(alpha)?;
    Ok(alpha_prime_scan(ideal, |x, y| (x, alpha.apply(y))))
}

/// Mirror form: first `(x, y)` with `x∘y ⊆ I`, `α(x) ∉ I` and `y ∉ I`.
pub fn alpha_prime_mirror_witness(
    ideal: &HyperIdeal,
    alpha: &Endomorphism,
) -> Result<Option<(usize, usize)>> {
    ideal.require_proper()?;
    ideal.require_endo(alpha)?;
    Ok(alpha_prime_scan(ideal, |x, y| (alpha.apply(x), y)))
}

fn alpha_prime_scan(
    ideal: &HyperIdeal,
    escape: impl Fn(usize, usize) -> (usize, usize),
) -> Option<(usize, usize)> {
    let r = &ideal.ring;
    for x in r.elements() {
        for y in r.elements() {
            let (u, v) = escape(x, y);
            if !ideal.contains(u) && !ideal.contains(v) && r.mul(x, y).is_within(&ideal.mask) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `x∘y ⊆ I ⇒ x ∈ I or α(y) ∈ I`, for a proper `I`.
pub fn is_alpha_prime(ideal: &HyperIdeal, alpha: &Endomorphism) -> Result<bool> {
    Ok(alpha_prime_witness(ideal, alpha)?.is_none())
}

/// Like [`is_alpha_prime`] but improper ideals are simply not α-prime.
pub fn is_alpha_prime_or_false(ideal: &HyperIdeal, alpha: &Endomorphism) -> bool {
    ideal.proper && is_alpha_prime(ideal, alpha).unwrap_or(false)
}

/// Both radical forms of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Radical {
    /// Intersection of the prime hyperideals containing `I` (the whole
    /// carrier when there are none).
    pub radical: ElementSet,
    /// `{r : rⁿ ⊆ I for some n}`.
    pub d_set: ElementSet,
    pub c_status: CStatus,
}

impl Radical {
    /// `D = √I`; expected whenever `I` is a C-hyperideal.
    pub fn forms_agree(&self) -> bool {
        self.radical == self.d_set
    }
}

/// `{r : rⁿ ⊆ J for some n}`.
pub fn d_set(ring: &HyperRing, j: &ElementSet) -> ElementSet {
    let mask = j.mask(ring.order());
    ring.elements()
        .filter(|&r| ring.orbit(r).iter().any(|p| p.is_within(&mask)))
        .collect()
}

pub fn prime_radical(ideal: &HyperIdeal, cap: usize) -> Result<Radical> {
    let all = enumerate_hyperideals(&ideal.ring, cap)?;
    Ok(prime_radical_in(ideal, &all))
}

/// [`prime_radical`] against a precomputed list of all hyperideals.
pub fn prime_radical_in(ideal: &HyperIdeal, all: &[HyperIdeal]) -> Radical {
    let mut radical = ideal.ring.full_set();
    for p in all {
        if p.proper && ideal.is_subset_of(p) && is_prime(p).unwrap_or(false) {
            radical = radical.intersection(&p.elements);
        }
    }
    Radical {
        radical,
        d_set: d_set(&ideal.ring, &ideal.elements),
        c_status: ideal.c_status,
    }
}

/// Classical primary test; `{0}` only qualifies with `allow_zero_primary`.
pub fn primary_witness(
    ideal: &HyperIdeal,
    all: &[HyperIdeal],
    allow_zero_primary: bool,
) -> Result<Option<(usize, usize)>> {
    ideal.require_proper()?;
    let r = &ideal.ring;
    if !allow_zero_primary && ideal.elements == r.zero_set() {
        return Ok(Some((r.zero(), r.zero())));
    }
    let rad = prime_radical_in(ideal, all).radical.mask(r.order());
    for x in r.elements().filter(|&x| !ideal.contains(x)) {
        for y in r.elements().filter(|&y| !rad[y]) {
            if r.mul(x, y).is_within(&ideal.mask) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// `x∘y ⊆ Q ⇒ x ∈ Q or y ∈ √Q`. The zero ideal is reported as not primary
/// unless `allow_zero_primary` is set.
pub fn is_primary(ideal: &HyperIdeal, cap: usize, allow_zero_primary: bool) -> Result<bool> {
    ideal.require_proper()?;
    let all = enumerate_hyperideals(&ideal.ring, cap)?;
    Ok(primary_witness(ideal, &all, allow_zero_primary)?.is_none())
}

/// First proper hyperideal strictly containing `I`, if any.
pub fn maximal_witness<'a>(
    ideal: &HyperIdeal,
    all: &'a [HyperIdeal],
) -> Result<Option<&'a HyperIdeal>> {
    ideal.require_proper()?;
    Ok(all
        .iter()
        .find(|j| j.proper && j.len() > ideal.len() && ideal.is_subset_of(j)))
}

pub fn is_maximal(ideal: &HyperIdeal, cap: usize) -> Result<bool> {
    ideal.require_proper()?;
    let all = enumerate_hyperideals(&ideal.ring, cap)?;
    Ok(maximal_witness(ideal, &all)?.is_none())
}

/// `{r : α(rⁿ) ⊆ J for some n}`; requires a zero-absorbing ring.
pub fn alpha_radical(ring: &HyperRing, j: &ElementSet, alpha: &Endomorphism) -> Result<ElementSet> {
    if !ring.is_zero_absorbing() {
        return Err(Error::NotZeroAbsorbing);
    }
    ring.check_set(j)?;
    Ok(alpha_radical_unchecked(ring, j, alpha))
}

/// [`alpha_radical`] without the zero-absorbing precondition.
pub fn alpha_radical_unchecked(
    ring: &HyperRing,
    j: &ElementSet,
    alpha: &Endomorphism,
) -> ElementSet {
    let mask = j.mask(ring.order());
    let table = alpha.table();
    ring.elements()
        .filter(|&r| {
            ring.orbit(r)
                .iter()
                .any(|p| p.iter().all(|t| mask[table[t] as usize]))
        })
        .collect()
}

/// `{x : 0 ∈ xⁿ for some n}`.
pub fn nilradical(ring: &HyperRing) -> ElementSet {
    ring.elements().filter(|&x| ring.is_nilpotent(x)).collect()
}

/// `{x : 0 ∈ α(xⁿ) for some n}`.
pub fn alpha_nilradical(ring: &HyperRing, alpha: &Endomorphism) -> ElementSet {
    let zero = ring.zero();
    ring.elements()
        .filter(|&x| {
            ring.orbit(x)
                .iter()
                .any(|p| p.iter().any(|t| alpha.apply(t) == zero))
        })
        .collect()
}

/// `(I : S) = {r : r∘s ⊆ I for all s ∈ S}`.
pub fn colon(ideal: &HyperIdeal, s: &ElementSet) -> Result<HyperIdeal> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let r = &ideal.ring;
    r.check_set(s)?;
    let members: ElementSet = r
        .elements()
        .filter(|&x| s.iter().all(|y| r.mul(x, y).is_within(&ideal.mask)))
        .collect();
    HyperIdeal::new(r.clone(), members)
}

/// `I + J`, elementwise.
pub fn sum_ideals(i: &HyperIdeal, j: &HyperIdeal) -> Result<HyperIdeal> {
    if !same_ring(&i.ring, &j.ring) {
        return Err(Error::NotAHyperideal(
            "summands live in different rings".into(),
        ));
    }
    HyperIdeal::new(i.ring.clone(), i.ring.sum_sets(&i.elements, &j.elements))
}

pub fn intersect_ideals(i: &HyperIdeal, j: &HyperIdeal) -> Result<HyperIdeal> {
    if !same_ring(&i.ring, &j.ring) {
        return Err(Error::NotAHyperideal(
            "operands live in different rings".into(),
        ));
    }
    HyperIdeal::new(i.ring.clone(), i.elements.intersection(&j.elements))
}

/// `{a : 0 ∈ a∘b for some b ≠ 0}`; `0` is included when it satisfies the
/// formula.
pub fn zero_divisors(ring: &HyperRing) -> ElementSet {
    let z = ring.zero();
    ring.elements()
        .filter(|&a| {
            ring.elements()
                .any(|b| b != z && ring.mul(a, b).contains(z))
        })
        .collect()
}

/// [`zero_divisors`] with `0` removed.
pub fn nonzero_zero_divisors(ring: &HyperRing) -> ElementSet {
    let mut zd = zero_divisors(ring);
    if zd.contains(ring.zero()) {
        zd = zd.difference(&ring.zero_set());
    }
    zd
}

/// First `(x, y)` with `0 ∈ x∘y`, `x ≠ 0` and `α(y) ≠ 0`.
pub fn alpha_integral_witness(ring: &HyperRing, alpha: &Endomorphism) -> Option<(usize, usize)> {
    let z = ring.zero();
    ring.elements()
        .filter(|&x| x != z)
        .flat_map(|x| ring.elements().map(move |y| (x, y)))
        .find(|&(x, y)| alpha.apply(y) != z && ring.mul(x, y).contains(z))
}

pub fn is_alpha_integral_hyperdomain(ring: &HyperRing, alpha: &Endomorphism) -> bool {
    alpha_integral_witness(ring, alpha).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::Homomorphism;
    use crate::zn::make_zn_multiplier_ring;

    fn ring(n: usize, a: &[usize]) -> Arc<HyperRing> {
        Arc::new(make_zn_multiplier_ring(n, a).unwrap())
    }

    fn ideal(r: &Arc<HyperRing>, e: &[usize]) -> HyperIdeal {
        HyperIdeal::new(r.clone(), e.iter().copied().collect()).unwrap()
    }

    #[test]
    fn hyperideal_membership() {
        let r6 = ring(6, &[2]);
        assert!(is_hyperideal(&r6, &[0, 3].into()));
        assert!(is_hyperideal(&r6, &[0, 2, 4].into()));
        assert!(!is_hyperideal(&r6, &[0, 1].into()));
        assert!(!is_hyperideal(&r6, &[0, 9].into()));
    }

    #[test]
    fn generation() {
        let r6 = ring(6, &[2]);
        assert_eq!(
            generate_hyperideal(&r6, &[2].into()).unwrap().elements(),
            &[0, 2, 4].into()
        );
        assert_eq!(
            generate_hyperideal(&r6, &[0].into()).unwrap().elements(),
            &[0].into()
        );
        let r12 = ring(12, &[2, 3]);
        assert_eq!(
            generate_hyperideal(&r12, &[3].into()).unwrap().elements(),
            &[0, 3, 6, 9].into()
        );
    }

    #[test]
    fn enumeration_counts() {
        let r6 = ring(6, &[2]);
        let all: Vec<ElementSet> = enumerate_hyperideals(&r6, 16)
            .unwrap()
            .iter()
            .map(|i| i.elements().clone())
            .collect();
        assert_eq!(
            all,
            vec![
                [0].into(),
                [0, 3].into(),
                [0, 2, 4].into(),
                ElementSet::full(6)
            ]
        );
        assert_eq!(enumerate_hyperideals(&ring(5, &[2]), 16).unwrap().len(), 2);
        assert!(matches!(
            enumerate_hyperideals(&ring(17, &[1]), 16),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn c_hyperideal_examples() {
        let r6 = ring(6, &[2]);
        assert_eq!(ideal(&r6, &[0, 3]).c_status(), CStatus::Yes);
        let r12 = ring(12, &[2, 3]);
        let three = ideal(&r12, &[0, 3, 6, 9]);
        assert_eq!(three.c_status(), CStatus::No);
        let w = c_witness(&three).unwrap();
        assert!(w.meets(three.mask()) && !w.is_within(three.mask()));
        assert!(r12.product_set_family().unwrap().contains(&[2, 3].into()));
        assert_eq!(ideal(&r12, &[0, 2, 4, 6, 8, 10]).c_status(), CStatus::No);
    }

    #[test]
    fn primality_examples() {
        let r6 = ring(6, &[2]);
        assert!(is_prime(&ideal(&r6, &[0, 3])).unwrap());
        assert_eq!(
            prime_witness(&ideal(&r6, &[0, 2, 4])).unwrap(),
            Some((1, 1))
        );
        assert_eq!(
            is_prime(&ideal(&r6, &[0, 1, 2, 3, 4, 5])),
            Err(Error::NotProper)
        );
        let r12 = ring(12, &[2, 3]);
        assert!(is_prime(&ideal(&r12, &[0, 2, 4, 6, 8, 10])).unwrap());
    }

    #[test]
    fn alpha_prime_examples() {
        let r6 = ring(6, &[2]);
        let three = Homomorphism::multiple(r6.clone(), 3).unwrap();
        assert!(is_alpha_prime(&ideal(&r6, &[0, 3]), &three).unwrap());
        assert_eq!(
            alpha_prime_witness(&ideal(&r6, &[0, 2, 4]), &three).unwrap(),
            Some((1, 1))
        );
        let other = Homomorphism::identity(ring(5, &[2]));
        assert!(matches!(
            is_alpha_prime(&ideal(&r6, &[0, 3]), &other),
            Err(Error::BadEndomorphism(_))
        ));
    }

    #[test]
    fn primary_and_maximal() {
        let r6 = ring(6, &[2]);
        assert!(is_primary(&ideal(&r6, &[0, 3]), 16, false).unwrap());
        assert!(is_primary(&ideal(&r6, &[0, 2, 4]), 16, false).unwrap());
        assert!(!is_primary(&ideal(&r6, &[0]), 16, false).unwrap());
        assert!(is_maximal(&ideal(&r6, &[0, 3]), 16).unwrap());
        assert!(!is_maximal(&ideal(&r6, &[0]), 16).unwrap());
        assert!(is_maximal(&ideal(&ring(5, &[2]), &[0]), 16).unwrap());
        let r12 = ring(12, &[2, 3]);
        assert!(is_primary(&ideal(&r12, &[0, 2, 4, 6, 8, 10]), 16, false).unwrap());
    }

    #[test]
    fn radicals() {
        let r6 = ring(6, &[2]);
        let rad = prime_radical(&ideal(&r6, &[0]), 16).unwrap();
        assert_eq!(rad.radical, [0, 3].into());
        assert!(rad.forms_agree());
        assert_eq!(
            prime_radical(&ideal(&r6, &[0, 3]), 16).unwrap().radical,
            [0, 3].into()
        );
        let r5 = ring(5, &[2]);
        assert_eq!(
            prime_radical(&ideal(&r5, &[0]), 16).unwrap().radical,
            [0].into()
        );

        let three = Homomorphism::multiple(r6.clone(), 3).unwrap();
        let id = Homomorphism::identity(r6.clone());
        assert_eq!(
            alpha_radical(&r6, &[0].into(), &three).unwrap(),
            ElementSet::full(6)
        );
        assert_eq!(alpha_radical(&r6, &[0].into(), &id).unwrap(), [0, 3].into());
        assert_eq!(
            alpha_radical(&r6, &ElementSet::full(6), &id).unwrap(),
            ElementSet::full(6)
        );
    }

    #[test]
    fn nilradicals() {
        let r6 = ring(6, &[2]);
        assert_eq!(nilradical(&r6), [0, 3].into());
        let three = Homomorphism::multiple(r6.clone(), 3).unwrap();
        assert_eq!(alpha_nilradical(&r6, &three), ElementSet::full(6));
        let r5 = ring(5, &[2]);
        let zero = Homomorphism::multiple(r5.clone(), 0).unwrap();
        assert_eq!(alpha_nilradical(&r5, &zero), ElementSet::full(5));
    }

    #[test]
    fn colon_and_sums() {
        let r6 = ring(6, &[2]);
        assert!(!colon(&ideal(&r6, &[0, 3]), &[3].into())
            .unwrap()
            .is_proper());
        assert_eq!(
            colon(&ideal(&r6, &[0]), &[1].into()).unwrap().elements(),
            &[0, 3].into()
        );
        assert_eq!(
            colon(&ideal(&r6, &[0]), &ElementSet::new()).unwrap_err(),
            Error::EmptySet
        );
        let s = sum_ideals(&ideal(&r6, &[0, 3]), &ideal(&r6, &[0, 2, 4])).unwrap();
        assert!(!s.is_proper());
        let s = sum_ideals(&ideal(&r6, &[0]), &ideal(&r6, &[0, 3])).unwrap();
        assert_eq!(s.elements(), &[0, 3].into());
    }

    #[test]
    fn zero_divisor_sets() {
        assert_eq!(zero_divisors(&ring(6, &[2])), ElementSet::full(6));
        assert_eq!(zero_divisors(&ring(5, &[2])), [0].into());
        assert_eq!(nonzero_zero_divisors(&ring(7, &[1])), ElementSet::new());
    }

    #[test]
    fn alpha_integral_examples() {
        let r5 = ring(5, &[2]);
        assert!(is_alpha_integral_hyperdomain(
            &r5,
            &Homomorphism::identity(r5.clone())
        ));
        let r6 = ring(6, &[2]);
        assert_eq!(
            alpha_integral_witness(&r6, &Homomorphism::identity(r6.clone())),
            Some((1, 3))
        );
        let zero = Homomorphism::multiple(r6.clone(), 0).unwrap();
        assert!(is_alpha_integral_hyperdomain(&r6, &zero));
    }
}
