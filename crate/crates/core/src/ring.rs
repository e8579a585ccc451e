//! Finite multiplicative hyperrings: validation and set-valued arithmetic.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result, Side};
use crate::set::ElementSet;

/// Largest carrier accepted by [`validate_structure`].
pub const MAX_ORDER: usize = 1 << 16;

/// Default number of distinct product-sets explored when deciding the
/// C-hyperideal property before giving up with an `unknown` verdict.
pub const C_FAMILY_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityFlavor {
    /// `a ∈ a∘e` for every `a`.
    Weak,
    /// `e∘a = a∘e = {a}` for every `a`.
    Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identity {
    pub element: usize,
    pub flavor: IdentityFlavor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub commutative: bool,
    pub strongly_distributive: bool,
    pub zero_absorbing: bool,
    pub identity: Option<Identity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingFlag {
    /// A `ℤ_A` ring built from a single multiplier, i.e. an ordinary ring.
    DegenerateMultiplier,
}

impl fmt::Display for RingFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingFlag::DegenerateMultiplier => f.write_str("degenerate_multiplier"),
        }
    }
}

/// Unvalidated ring description, laid out as nested tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRing {
    pub name: String,
    pub order: usize,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub hyp: Vec<Vec<ElementSet>>,
    pub identity: Option<Identity>,
}

/// A validated finite multiplicative hyperring.
///
/// Immutable once built. Tables are stored flat in row-major order.
#[derive(Clone)]
pub struct HyperRing {
    name: String,
    order: usize,
    zero: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    hyp: Vec<ElementSet>,
    identity: Option<Identity>,
    props: Properties,
    strong_witness: Option<(usize, usize, usize, Side)>,
    flags: Vec<RingFlag>,
    c_family: OnceLock<Option<Vec<ElementSet>>>,
    orbits: OnceLock<Vec<Vec<ElementSet>>>,
}

impl PartialEq for HyperRing {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.order == other.order
            && self.zero == other.zero
            && self.add == other.add
            && self.neg == other.neg
            && self.hyp == other.hyp
            && self.identity == other.identity
            && self.props == other.props
            && self.flags == other.flags
    }
}

impl Eq for HyperRing {}

impl fmt::Debug for HyperRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("props", &self.props)
            .finish_non_exhaustive()
    }
}

struct Interner {
    ids: FxHashMap<ElementSet, u32>,
    sets: Vec<ElementSet>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            ids: FxHashMap::default(),
            sets: Vec::new(),
        }
    }

    fn intern(&mut self, s: ElementSet) -> u32 {
        if let Some(&id) = self.ids.get(&s) {
            return id;
        }
        let id = self.sets.len() as u32;
        self.sets.push(s.clone());
        self.ids.insert(s, id);
        id
    }
}

fn union_of<'a>(parts: impl Iterator<Item = &'a ElementSet>) -> ElementSet {
    let mut acc: SmallVec<[u32; 4]> = SmallVec::new();
    for p in parts {
        acc.extend_from_slice(p.as_slice());
    }
    ElementSet::from_unsorted(acc)
}

/// Checks every axiom and returns the validated ring.
///
/// Checks run in a fixed order (group laws, nonempty products,
/// associativity, distributivity, sign law, declared identity) and within
/// each axiom triples are scanned lexicographically, so the reported witness
/// is the first violation in that order.
pub fn validate_structure(raw: &RawRing) -> Result<HyperRing> {
    let n = raw.order;
    check_dimensions(raw)?;

    let add: Vec<u32> = raw.add.iter().flatten().map(|&x| x as u32).collect();
    let neg: Vec<u32> = raw.neg.iter().map(|&x| x as u32).collect();
    let hyp: Vec<ElementSet> = raw.hyp.iter().flatten().cloned().collect();
    let zero = raw.zero;

    check_group(n, zero, &add, &neg)?;
    for a in 0..n {
        for b in 0..n {
            if hyp[a * n + b].is_empty() {
                return Err(Error::EmptyProduct(a, b));
            }
        }
    }

    let mut interner = Interner::new();
    let hyp_id: Vec<u32> = hyp.iter().map(|s| interner.intern(s.clone())).collect();
    let distinct = interner.sets.len();
    let commutative = (0..n).all(|a| (0..n).all(|b| hyp_id[a * n + b] == hyp_id[b * n + a]));
    check_associative(n, &hyp, &hyp_id, &mut interner, commutative)?;
    let strong_witness =
        check_distributive(n, &add, &hyp_id, distinct, &mut interner, commutative)?;
    check_sign_law(n, &neg, &hyp)?;

    let zero_set = ElementSet::singleton(zero);
    let zero_absorbing =
        (0..n).all(|r| hyp[zero * n + r] == zero_set && hyp[r * n + zero] == zero_set);

    let detected = detect_identity(n, &hyp);
    let identity = match raw.identity {
        Some(claim) => {
            if claim.element >= n || !identity_holds(n, &hyp, claim) {
                return Err(Error::IdentityClaimFalse(claim.element));
            }
            Some(claim)
        }
        None => detected,
    };

    Ok(HyperRing {
        name: raw.name.clone(),
        order: n,
        zero,
        add,
        neg,
        hyp,
        identity,
        props: Properties {
            commutative,
            strongly_distributive: strong_witness.is_none(),
            zero_absorbing,
            identity: detected,
        },
        strong_witness,
        flags: Vec::new(),
        c_family: OnceLock::new(),
        orbits: OnceLock::new(),
    })
}

fn check_dimensions(raw: &RawRing) -> Result<()> {
    let n = raw.order;
    let bad = |msg: String| Err(Error::Malformed(msg));
    if n == 0 || n > MAX_ORDER {
        return bad(format!("order {n} must lie in 1..={MAX_ORDER}"));
    }
    if raw.zero >= n {
        return bad(format!("zero {} outside carrier", raw.zero));
    }
    if raw.add.len() != n || raw.add.iter().any(|row| row.len() != n) {
        return bad("addition table must be order × order".into());
    }
    if raw.neg.len() != n {
        return bad("negation table must have length order".into());
    }
    if raw.hyp.len() != n || raw.hyp.iter().any(|row| row.len() != n) {
        return bad("hyperoperation table must be order × order".into());
    }
    if let Some(x) = raw
        .add
        .iter()
        .flatten()
        .chain(raw.neg.iter())
        .find(|&&x| x >= n)
    {
        return bad(format!("table entry {x} outside carrier"));
    }
    if let Some(s) = raw
        .hyp
        .iter()
        .flatten()
        .find(|s| s.last().is_some_and(|x| x >= n))
    {
        return bad(format!("hyperproduct {s} outside carrier"));
    }
    Ok(())
}

/// Greedy generators of `(0..n, add)` as a magma; every element is a sum of
/// generators in some bracketing.
fn magma_generators(n: usize, add: &[u32]) -> Vec<usize> {
    let mut member = vec![false; n];
    let mut members: Vec<usize> = Vec::with_capacity(n);
    let mut gens = Vec::new();
    for x in 0..n {
        if member[x] {
            continue;
        }
        gens.push(x);
        member[x] = true;
        members.push(x);
        let mut next = members.len() - 1;
        while next < members.len() {
            let u = members[next];
            next += 1;
            let mut i = 0;
            while i < members.len() {
                let s = members[i];
                for v in [add[u * n + s] as usize, add[s * n + u] as usize] {
                    if !member[v] {
                        member[v] = true;
                        members.push(v);
                    }
                }
                i += 1;
            }
        }
    }
    gens
}

fn check_group(n: usize, zero: usize, add: &[u32], neg: &[u32]) -> Result<()> {
    for a in 0..n {
        if add[zero * n + a] as usize != a || add[a * n + zero] as usize != a {
            return Err(Error::NotAGroup(format!("{zero} is not neutral for {a}")));
        }
        if add[a * n + neg[a] as usize] as usize != zero {
            return Err(Error::NotAGroup(format!(
                "{} is not the inverse of {a}",
                neg[a]
            )));
        }
        for b in 0..a {
            if add[a * n + b] != add[b * n + a] {
                return Err(Error::NotAGroup(format!("{b}+{a} ≠ {a}+{b}")));
            }
        }
    }
    // Light's test: middle elements restricted to a generating set.
    let gens = magma_generators(n, add);
    for a in 0..n {
        for &g in &gens {
            let ag = add[a * n + g] as usize;
            for c in 0..n {
                let gc = add[g * n + c] as usize;
                if add[ag * n + c] != add[a * n + gc] {
                    return Err(Error::NotAGroup(format!("({a}+{g})+{c} ≠ {a}+({g}+{c})")));
                }
            }
        }
    }
    Ok(())
}

/// With commutative multiplication, associativity at `(a,b,c)` is
/// equivalent to associativity at `(c,b,a)`, so only `c ≥ a` is scanned.
fn check_associative(
    n: usize,
    hyp: &[ElementSet],
    hyp_id: &[u32],
    interner: &mut Interner,
    commutative: bool,
) -> Result<()> {
    let d = interner.sets.len();
    if d.saturating_mul(n) > 1 << 26 {
        return check_associative_direct(n, hyp);
    }
    // left[s][c] = S∘{c} and right[a][t] = {a}∘T as interned ids.
    let mut left = vec![0u32; d * n];
    let mut right = vec![0u32; n * d];
    for s in 0..d {
        let set = interner.sets[s].clone();
        for c in 0..n {
            left[s * n + c] = interner.intern(union_of(set.iter().map(|x| &hyp[x * n + c])));
        }
    }
    for t in 0..d {
        let set = interner.sets[t].clone();
        for a in 0..n {
            right[a * d + t] = interner.intern(union_of(set.iter().map(|y| &hyp[a * n + y])));
        }
    }
    for a in 0..n {
        let r_row = &right[a * d..(a + 1) * d];
        for b in 0..n {
            let l_row = &left[hyp_id[a * n + b] as usize * n..][..n];
            let bc = &hyp_id[b * n..(b + 1) * n];
            let first = if commutative { a } else { 0 };
            for c in first..n {
                if l_row[c] != r_row[bc[c] as usize] {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    Ok(())
}

fn check_associative_direct(n: usize, hyp: &[ElementSet]) -> Result<()> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = union_of(hyp[a * n + b].iter().map(|x| &hyp[x * n + c]));
                let r = union_of(hyp[b * n + c].iter().map(|y| &hyp[a * n + y]));
                if l != r {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    Ok(())
}

fn sumset(n: usize, add: &[u32], x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut acc: SmallVec<[u32; 4]> = SmallVec::with_capacity(x.len() * y.len());
    for u in x.iter() {
        for v in y.iter() {
            acc.push(add[u * n + v]);
        }
    }
    ElementSet::from_unsorted(acc)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Inclusion {
    Equal,
    Strict,
    Violated,
}

#[derive(Clone, Copy)]
struct SumEntry {
    sum: u32,
    last_x: u32,
    last: Inclusion,
}

/// Memo of `P + Q` per pair of hyperproduct ids, plus the verdict for the
/// most recent left-hand side seen with that pair.
struct SumMemo<'a> {
    n: usize,
    add: &'a [u32],
    d: usize,
    entries: Vec<SumEntry>,
}

impl<'a> SumMemo<'a> {
    fn new(n: usize, add: &'a [u32], d: usize) -> Self {
        let entries = if d.saturating_mul(d) <= 1 << 22 {
            vec![
                SumEntry {
                    sum: u32::MAX,
                    last_x: u32::MAX,
                    last: Inclusion::Violated
                };
                d * d
            ]
        } else {
            Vec::new()
        };
        SumMemo { n, add, d, entries }
    }

    /// Relation between `X` and `P + Q`.
    #[inline]
    fn relation(&mut self, x: u32, p: u32, q: u32, interner: &mut Interner) -> Inclusion {
        if self.entries.is_empty() {
            return self.compute(x, p, q, interner).1;
        }
        let e = &self.entries[p as usize * self.d + q as usize];
        if e.last_x == x {
            return e.last;
        }
        self.refresh(x, p, q, interner)
    }

    #[cold]
    #[inline(never)]
    fn refresh(&mut self, x: u32, p: u32, q: u32, interner: &mut Interner) -> Inclusion {
        let idx = p as usize * self.d + q as usize;
        let sum = self.entries[idx].sum;
        let (sum, rel) = if sum == u32::MAX {
            self.compute(x, p, q, interner)
        } else {
            (
                sum,
                classify(
                    &interner.sets[x as usize],
                    sum == x,
                    &interner.sets[sum as usize],
                ),
            )
        };
        self.entries[idx] = SumEntry {
            sum,
            last_x: x,
            last: rel,
        };
        rel
    }

    fn compute(&self, x: u32, p: u32, q: u32, interner: &mut Interner) -> (u32, Inclusion) {
        let s = sumset(
            self.n,
            self.add,
            &interner.sets[p as usize],
            &interner.sets[q as usize],
        );
        let sum = interner.intern(s);
        (
            sum,
            classify(
                &interner.sets[x as usize],
                sum == x,
                &interner.sets[sum as usize],
            ),
        )
    }
}

fn classify(x: &ElementSet, equal: bool, sum: &ElementSet) -> Inclusion {
    if equal {
        Inclusion::Equal
    } else if x.is_subset(sum) {
        Inclusion::Strict
    } else {
        Inclusion::Violated
    }
}

/// Checks both distributive inclusions and returns the first triple where
/// equality fails (`None` when strongly distributive).
///
/// Both conditions are symmetric in `b` and `c`, so only `c ≥ b` is scanned;
/// the lexicographically first violation always has `b ≤ c`. Sums are
/// memoized per pair of hyperproduct ids (`d` of them). For commutative
/// multiplication the right-hand law coincides with the left one.
fn check_distributive(
    n: usize,
    add: &[u32],
    hyp_id: &[u32],
    d: usize,
    interner: &mut Interner,
    commutative: bool,
) -> Result<Option<(usize, usize, usize, Side)>> {
    let mut memo = SumMemo::new(n, add, d);
    let mut strong: Option<(usize, usize, usize, Side)> = None;
    let mut note = |rel: Inclusion, a, b, c, side| -> Result<()> {
        match rel {
            Inclusion::Equal => Ok(()),
            Inclusion::Strict => {
                strong.get_or_insert((a, b, c, side));
                Ok(())
            }
            Inclusion::Violated => Err(Error::NotDistributive(a, b, c, side)),
        }
    };
    for a in 0..n {
        let row = &hyp_id[a * n..(a + 1) * n];
        for b in 0..n {
            let sums = &add[b * n..(b + 1) * n];
            let p = row[b];
            for c in b..n {
                let bc = sums[c] as usize;
                let rel = memo.relation(row[bc], p, row[c], interner);
                if rel != Inclusion::Equal {
                    note(rel, a, b, c, Side::Left)?;
                }
                if !commutative {
                    let rel = memo.relation(
                        hyp_id[bc * n + a],
                        hyp_id[b * n + a],
                        hyp_id[c * n + a],
                        interner,
                    );
                    if rel != Inclusion::Equal {
                        note(rel, a, b, c, Side::Right)?;
                    }
                }
            }
        }
    }
    Ok(strong)
}

fn check_sign_law(n: usize, neg: &[u32], hyp: &[ElementSet]) -> Result<()> {
    for a in 0..n {
        let na = neg[a] as usize;
        for b in 0..n {
            let nb = neg[b] as usize;
            let negated = hyp[a * n + b].image(neg);
            if hyp[a * n + nb] != negated || hyp[na * n + b] != negated {
                return Err(Error::SignLawViolated(a, b));
            }
        }
    }
    Ok(())
}

fn identity_holds(n: usize, hyp: &[ElementSet], claim: Identity) -> bool {
    let e = claim.element;
    match claim.flavor {
        IdentityFlavor::Weak => (0..n).all(|a| hyp[a * n + e].contains(a)),
        IdentityFlavor::Scalar => (0..n).all(|a| {
            let s = ElementSet::singleton(a);
            hyp[e * n + a] == s && hyp[a * n + e] == s
        }),
    }
}

/// First scalar identity if any, otherwise the first weak one.
fn detect_identity(n: usize, hyp: &[ElementSet]) -> Option<Identity> {
    [IdentityFlavor::Scalar, IdentityFlavor::Weak]
        .into_iter()
        .find_map(|flavor| {
            (0..n)
                .map(|element| Identity { element, flavor })
                .find(|&claim| identity_holds(n, hyp, claim))
        })
}

impl HyperRing {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_flag(mut self, flag: RingFlag) -> Self {
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
            self.flags.sort();
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::singleton(self.zero)
    }

    /// The identity in force: the declared one, otherwise the detected one.
    pub fn identity(&self) -> Option<Identity> {
        self.identity
    }

    /// `true` when `e` satisfies the given identity flavor.
    pub fn satisfies_identity(&self, e: usize, flavor: IdentityFlavor) -> bool {
        e < self.order && identity_holds(self.order, &self.hyp, Identity { element: e, flavor })
    }

    pub fn flags(&self) -> &[RingFlag] {
        &self.flags
    }

    pub fn structure_properties(&self) -> &Properties {
        &self.props
    }

    pub fn is_commutative(&self) -> bool {
        self.props.commutative
    }

    pub fn is_zero_absorbing(&self) -> bool {
        self.props.zero_absorbing
    }

    /// First triple `(a, b, c)` where a distributive inclusion is strict.
    pub fn strong_distributivity_witness(&self) -> Option<(usize, usize, usize, Side)> {
        self.strong_witness
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The hyperproduct `a∘b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> &ElementSet {
        &self.hyp[a * self.order + b]
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ForeignElement(x))
        }
    }

    pub fn check_set(&self, s: &ElementSet) -> Result<()> {
        match s.last() {
            Some(x) if x >= self.order => Err(Error::ForeignElement(x)),
            _ => Ok(()),
        }
    }

    /// `X∘Y`, the union of `x∘y` over all pairs.
    pub fn set_product(&self, x: &ElementSet, y: &ElementSet) -> Result<ElementSet> {
        self.check_set(x)?;
        self.check_set(y)?;
        Ok(self.product(x, y))
    }

    pub(crate) fn product(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        if x.len() * y.len() <= 8 {
            return union_of(x.iter().flat_map(|a| y.iter().map(move |b| self.mul(a, b))));
        }
        let mut mask = vec![false; self.order];
        for a in x.iter() {
            for b in y.iter() {
                for t in self.mul(a, b).iter() {
                    mask[t] = true;
                }
            }
        }
        ElementSet::from_mask(&mask)
    }

    /// `X + Y`, elementwise.
    pub fn sum_sets(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        x.iter()
            .flat_map(|a| y.iter().map(move |b| self.add(a, b)))
            .collect()
    }

    pub fn neg_set(&self, x: &ElementSet) -> ElementSet {
        x.image(&self.neg)
    }

    /// `xⁿ` with `x¹ = {x}` and `xⁿ = xⁿ⁻¹∘{x}`.
    pub fn power(&self, x: usize, n: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let xs = ElementSet::singleton(x);
        let mut p = xs.clone();
        for _ in 1..n {
            p = self.product(&p, &xs);
        }
        Ok(p)
    }

    /// `x¹, x², …` up to (excluding) the first repeated set.
    ///
    /// Every later power repeats an entry of the orbit, so a statement of
    /// the form "for some n, P(xⁿ)" holds iff it holds for an orbit entry.
    ///
    /// # Panics
    /// If `x` is outside the carrier.
    pub fn power_orbit(&self, x: usize) -> Vec<ElementSet> {
        self.orbit(x).to_vec()
    }

    /// Borrowed form of [`power_orbit`](Self::power_orbit), cached per ring.
    pub fn orbit(&self, x: usize) -> &[ElementSet] {
        assert!(x < self.order, "element {x} outside carrier");
        &self
            .orbits
            .get_or_init(|| self.elements().map(|y| self.compute_orbit(y)).collect())[x]
    }

    fn compute_orbit(&self, x: usize) -> Vec<ElementSet> {
        let xs = ElementSet::singleton(x);
        let mut seen = HashSet::new();
        let mut orbit = vec![xs.clone()];
        seen.insert(xs.clone());
        loop {
            let next = self.product(orbit.last().unwrap(), &xs);
            if !seen.insert(next.clone()) {
                return orbit;
            }
            orbit.push(next);
        }
    }

    /// `∃n: 0 ∈ xⁿ`.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        self.orbit(x).iter().any(|p| p.contains(self.zero))
    }

    /// `∃y: e ∈ x∘y` for the ring's identity `e`.
    pub fn is_unit(&self, x: usize) -> Result<bool> {
        self.check_element(x)?;
        let e = self.identity.ok_or(Error::NoIdentity)?.element;
        Ok(self.elements().any(|y| self.mul(x, y).contains(e)))
    }

    /// Every set reachable as a finite product `r₁∘r₂∘…∘rₖ`, or `None` if
    /// more than [`C_FAMILY_CAP`] distinct sets appear. Computed once.
    pub fn product_set_family(&self) -> Option<&[ElementSet]> {
        self.c_family
            .get_or_init(|| self.compute_product_sets(C_FAMILY_CAP))
            .as_deref()
    }

    fn compute_product_sets(&self, cap: usize) -> Option<Vec<ElementSet>> {
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut family = Vec::new();
        for r in self.elements() {
            let s = ElementSet::singleton(r);
            seen.insert(s.clone());
            family.push(s);
        }
        if family.len() > cap {
            return None;
        }
        let mut frontier = 0;
        while frontier < family.len() {
            let x = family[frontier].clone();
            frontier += 1;
            for r in self.elements() {
                let y = self.product(&x, &ElementSet::singleton(r));
                if seen.insert(y.clone()) {
                    family.push(y);
                    if family.len() > cap {
                        return None;
                    }
                }
            }
        }
        family.sort_by(|a, b| a.canonical_cmp(b));
        Some(family)
    }

    /// Nested-table form suitable for serialization.
    pub fn to_raw(&self) -> RawRing {
        let n = self.order;
        RawRing {
            name: self.name.clone(),
            order: n,
            zero: self.zero,
            add: (0..n)
                .map(|a| (0..n).map(|b| self.add(a, b)).collect())
                .collect(),
            neg: (0..n).map(|a| self.neg(a)).collect(),
            hyp: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b).clone()).collect())
                .collect(),
            identity: self.identity,
        }
    }
}

/// Builds a ring from a binary hyperoperation given as a closure, with
/// addition taken from another closure. Validates the result.
pub fn from_fns(
    name: impl Into<String>,
    order: usize,
    zero: usize,
    add: impl Fn(usize, usize) -> usize,
    neg: impl Fn(usize) -> usize,
    hyp: impl Fn(usize, usize) -> ElementSet,
) -> Result<HyperRing> {
    let raw = RawRing {
        name: name.into(),
        order,
        zero,
        add: (0..order)
            .map(|a| (0..order).map(|b| add(a, b)).collect())
            .collect(),
        neg: (0..order).map(&neg).collect(),
        hyp: (0..order)
            .map(|a| (0..order).map(|b| hyp(a, b)).collect())
            .collect(),
        identity: None,
    };
    validate_structure(&raw)
}

/// Re-evaluates a validation error directly from the definitions, returning
/// `true` when the reported witness really violates the named axiom.
pub fn witness_is_genuine(raw: &RawRing, err: &Error) -> bool {
    let n = raw.order;
    let prod = |x: &ElementSet, y: &ElementSet| -> ElementSet {
        union_of(x.iter().flat_map(|a| y.iter().map(move |b| &raw.hyp[a][b])))
    };
    let sum = |x: &ElementSet, y: &ElementSet| -> ElementSet {
        x.iter()
            .flat_map(|a| y.iter().map(move |b| raw.add[a][b]))
            .collect()
    };
    let single = ElementSet::singleton;
    match *err {
        Error::EmptyProduct(a, b) => a < n && b < n && raw.hyp[a][b].is_empty(),
        Error::NotAssociative(a, b, c) => {
            prod(&raw.hyp[a][b], &single(c)) != prod(&single(a), &raw.hyp[b][c])
        }
        Error::NotDistributive(a, b, c, side) => {
            let bc = raw.add[b][c];
            match side {
                Side::Left => !raw.hyp[a][bc].is_subset(&sum(&raw.hyp[a][b], &raw.hyp[a][c])),
                Side::Right => !raw.hyp[bc][a].is_subset(&sum(&raw.hyp[b][a], &raw.hyp[c][a])),
            }
        }
        Error::SignLawViolated(a, b) => {
            let negated: ElementSet = raw.hyp[a][b].iter().map(|t| raw.neg[t]).collect();
            raw.hyp[a][raw.neg[b]] != negated || raw.hyp[raw.neg[a]][b] != negated
        }
        Error::IdentityClaimFalse(e) => match raw.identity {
            Some(claim) if claim.element == e => {
                e >= n
                    || (0..n).any(|a| match claim.flavor {
                        IdentityFlavor::Weak => !raw.hyp[a][e].contains(a),
                        IdentityFlavor::Scalar => {
                            raw.hyp[a][e] != single(a) || raw.hyp[e][a] != single(a)
                        }
                    })
            }
            _ => false,
        },
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::make_zn_multiplier_ring;

    fn r6() -> HyperRing {
        make_zn_multiplier_ring(6, &[2]).unwrap()
    }

    #[test]
    fn r6_properties() {
        let p = r6().structure_properties().clone();
        assert!(p.commutative && p.strongly_distributive && p.zero_absorbing);
        assert_eq!(p.identity, None);
    }

    #[test]
    fn r12_is_not_strongly_distributive_at_1_1_1() {
        let r = make_zn_multiplier_ring(12, &[2, 3]).unwrap();
        assert!(!r.structure_properties().strongly_distributive);
        assert_eq!(
            r.strong_distributivity_witness(),
            Some((1, 1, 1, Side::Left))
        );
        assert_eq!(r.mul(1, 1), &ElementSet::from([2, 3]));
    }

    #[test]
    fn trivial_ring_is_valid() {
        let r = from_fns("0", 1, 0, |_, _| 0, |_| 0, |_, _| ElementSet::singleton(0)).unwrap();
        assert_eq!(r.order(), 1);
        assert!(r.is_zero_absorbing());
    }

    #[test]
    fn set_product_examples() {
        let r = r6();
        let one = ElementSet::singleton(1);
        assert_eq!(
            r.set_product(&one, &ElementSet::singleton(2)).unwrap(),
            [4].into()
        );
        assert_eq!(
            r.set_product(&ElementSet::new(), &one).unwrap(),
            ElementSet::new()
        );
        assert_eq!(
            r.set_product(&one, &ElementSet::singleton(6)),
            Err(Error::ForeignElement(6))
        );
    }

    #[test]
    fn powers_and_orbits() {
        let r = r6();
        assert_eq!(r.power(3, 2).unwrap(), [0].into());
        assert_eq!(r.power(2, 3).unwrap(), [2].into());
        assert_eq!(r.power(4, 1).unwrap(), [4].into());
        assert_eq!(r.power(4, 0), Err(Error::ZeroExponent));
        assert_eq!(r.power_orbit(3), vec![[3].into(), [0].into()]);
        assert_eq!(r.power_orbit(2), vec![ElementSet::from([2])]);
        assert_eq!(r.power_orbit(0), vec![ElementSet::from([0])]);
        assert!(r.is_nilpotent(3) && r.is_nilpotent(0) && !r.is_nilpotent(2));
    }

    #[test]
    fn units_need_an_identity() {
        let z5 = make_zn_multiplier_ring(5, &[1]).unwrap();
        assert_eq!(
            z5.identity(),
            Some(Identity {
                element: 1,
                flavor: IdentityFlavor::Scalar
            })
        );
        assert!(z5.is_unit(3).unwrap());
        assert!(!z5.is_unit(0).unwrap());
        assert_eq!(r6().is_unit(1), Err(Error::NoIdentity));
    }

    #[test]
    fn false_identity_claim_is_rejected() {
        let mut raw = r6().to_raw();
        raw.identity = Some(Identity {
            element: 1,
            flavor: IdentityFlavor::Weak,
        });
        assert_eq!(
            validate_structure(&raw).unwrap_err(),
            Error::IdentityClaimFalse(1)
        );
    }

    #[test]
    fn group_failures_are_reported() {
        let mut raw = r6().to_raw();
        raw.neg[1] = 1;
        assert!(matches!(validate_structure(&raw), Err(Error::NotAGroup(_))));
        let mut raw = r6().to_raw();
        raw.hyp[2][3] = ElementSet::new();
        assert_eq!(
            validate_structure(&raw).unwrap_err(),
            Error::EmptyProduct(2, 3)
        );
    }

    #[test]
    fn dimension_errors_are_malformed() {
        let mut raw = r6().to_raw();
        raw.add.pop();
        assert!(matches!(validate_structure(&raw), Err(Error::Malformed(_))));
        let mut raw = r6().to_raw();
        raw.hyp[0][0] = [9].into();
        assert!(matches!(validate_structure(&raw), Err(Error::Malformed(_))));
    }

    #[test]
    fn revalidation_is_idempotent() {
        let r = make_zn_multiplier_ring(12, &[2, 3]).unwrap();
        let again = validate_structure(&r.to_raw()).unwrap();
        assert_eq!(r.structure_properties(), again.structure_properties());
    }

    #[test]
    fn product_set_family_of_r6_is_singletons() {
        let fam = r6().product_set_family().unwrap().to_vec();
        assert!(fam.iter().all(|s| s.len() == 1));
        assert_eq!(fam.len(), 6);
    }
}
