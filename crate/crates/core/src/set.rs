//! Canonically ordered subsets of a finite carrier.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

/// A sorted, duplicate-free set of element indices.
///
/// Every set-valued quantity in the crate (hyperproducts, powers, ideals,
/// cosets) is an `ElementSet`, so equality and hashing are structural and
/// report output is reproducible.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(SmallVec<[u32; 4]>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(SmallVec::new())
    }

    pub fn singleton(x: usize) -> Self {
        let mut v = SmallVec::new();
        v.push(x as u32);
        ElementSet(v)
    }

    /// The whole carrier `0..order`.
    pub fn full(order: usize) -> Self {
        ElementSet((0..order as u32).collect())
    }

    /// Builds a set from raw indices in any order, dropping duplicates.
    pub fn from_unsorted(mut raw: SmallVec<[u32; 4]>) -> Self {
        raw.sort_unstable();
        raw.dedup();
        ElementSet(raw)
    }

    /// Collects the indices `i` with `mask[i]` set.
    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &m)| m.then_some(i as u32))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        let x = x as u32;
        if self.0.len() <= 8 {
            self.0.contains(&x)
        } else {
            self.0.binary_search(&x).is_ok()
        }
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().map(|&x| x as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().map(|&x| x as usize)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for x in &self.0 {
            for y in rest.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// `true` when every member is marked in `mask`.
    pub fn is_within(&self, mask: &[bool]) -> bool {
        self.0.iter().all(|&x| mask[x as usize])
    }

    /// `true` when some member is marked in `mask`.
    pub fn meets(&self, mask: &[bool]) -> bool {
        self.0.iter().any(|&x| mask[x as usize])
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ElementSet(out)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| other.contains(x as usize))
                .collect(),
        )
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| !other.contains(x as usize))
                .collect(),
        )
    }

    /// Membership mask of length `order`.
    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut m = vec![false; order];
        for &x in &self.0 {
            m[x as usize] = true;
        }
        m
    }

    /// Elementwise image under a total map.
    pub fn image(&self, map: &[u32]) -> ElementSet {
        ElementSet::from_unsorted(self.0.iter().map(|&x| map[x as usize]).collect())
    }

    /// Ordering used for lists of sets: by size, then lexicographically.
    pub fn canonical_cmp(&self, other: &ElementSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElementSet::from_unsorted(iter.into_iter().map(|x| x as u32).collect())
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<u32>::deserialize(d)?;
        Ok(ElementSet::from_unsorted(raw.into_iter().collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_dedups() {
        let s: ElementSet = [5, 1, 3, 1, 5].into();
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
    }

    #[test]
    fn subset_and_set_algebra() {
        let a: ElementSet = [0, 2, 4].into();
        let b: ElementSet = [0, 1, 2, 3, 4].into();
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(ElementSet::new().is_subset(&a));
        assert_eq!(a.union(&[1, 5].into()), [0, 1, 2, 4, 5].into());
        assert_eq!(b.intersection(&[4, 7].into()), [4].into());
        assert_eq!(b.difference(&a), [1, 3].into());
    }

    #[test]
    fn large_sets_use_binary_search() {
        let s = ElementSet::full(40);
        assert!(s.contains(39));
        assert!(!s.contains(40));
        assert_eq!(ElementSet::from_mask(&s.mask(40)), s);
    }

    #[test]
    fn serde_is_a_plain_list() {
        let s: ElementSet = [3, 0].into();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3]");
        let back: ElementSet = serde_json::from_str("[3,0,3]").unwrap();
        assert_eq!(back, s);
    }
}
