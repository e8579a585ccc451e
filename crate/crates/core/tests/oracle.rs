//! Library results against a naive model of `ℤ_n{A}` built from bitmasks.

use std::collections::HashSet;
use std::sync::Arc;

use hyperring_core::ideals::{
    alpha_nilradical, enumerate_hyperideals, is_alpha_prime, is_prime, nilradical, prime_radical,
};
use hyperring_core::morphisms::{enumerate_endomorphisms, kernel};
use hyperring_core::{make_zn_multiplier_ring, ElementSet, Endomorphism, HyperIdeal, HyperRing};

/// Naive `ℤ_n{A}` with subsets as bitmasks.
struct Naive {
    n: usize,
    a: Vec<usize>,
}

impl Naive {
    fn hyp(&self, x: usize, y: usize) -> u32 {
        self.a.iter().fold(0, |m, r| m | 1 << (x * r * y % self.n))
    }

    fn set_prod(&self, s: u32, t: u32) -> u32 {
        let mut out = 0;
        for x in self.members(s) {
            for y in self.members(t) {
                out |= self.hyp(x, y);
            }
        }
        out
    }

    fn members(&self, s: u32) -> Vec<usize> {
        (0..self.n).filter(|&x| s >> x & 1 == 1).collect()
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn is_ideal(&self, s: u32) -> bool {
        let n = self.n;
        if s & 1 == 0 {
            return false;
        }
        for x in self.members(s) {
            for y in self.members(s) {
                if s >> ((x + n - y) % n) & 1 == 0 {
                    return false;
                }
            }
            for r in 0..n {
                if self.hyp(r, x) & !s != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn ideals(&self) -> Vec<u32> {
        (0..=self.full()).filter(|&s| self.is_ideal(s)).collect()
    }

    fn alpha_prime(&self, s: u32, f: &[usize]) -> bool {
        s != self.full()
            && (0..self.n).all(|x| {
                (0..self.n)
                    .all(|y| self.hyp(x, y) & !s != 0 || s >> x & 1 == 1 || s >> f[y] & 1 == 1)
            })
    }

    fn endos(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        // Additive maps of a cyclic group are x ↦ kx.
        (0..n)
            .map(|k| (0..n).map(|x| k * x % n).collect::<Vec<_>>())
            .filter(|f| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        let image = self
                            .members(self.hyp(x, y))
                            .iter()
                            .fold(0u32, |m, &t| m | 1 << f[t]);
                        image == self.hyp(f[x], f[y])
                    })
                })
            })
            .collect()
    }

    /// `x¹, x², …` until a power repeats.
    fn powers(&self, x: usize) -> Vec<u32> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut p = 1u32 << x;
        while seen.insert(p) {
            out.push(p);
            p = self.set_prod(p, 1 << x);
        }
        out
    }

    fn nil(&self, f: &[usize]) -> u32 {
        (0..self.n)
            .filter(|&x| {
                self.powers(x)
                    .iter()
                    .any(|&p| self.members(p).iter().any(|&t| f[t] == 0))
            })
            .fold(0, |m, x| m | 1 << x)
    }

    fn radical(&self, s: u32) -> u32 {
        let id: Vec<usize> = (0..self.n).collect();
        self.ideals()
            .into_iter()
            .filter(|&p| p & s == s && self.alpha_prime(p, &id))
            .fold(self.full(), |m, p| m & p)
    }
}

fn mask(s: &ElementSet) -> u32 {
    s.iter().fold(0, |m, x| m | 1 << x)
}

fn small_rings() -> Vec<(Naive, Arc<HyperRing>)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        let mut sets: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
        for a in 0..n {
            for b in a + 1..n {
                sets.push(vec![a, b]);
            }
        }
        for a in sets {
            let ring = Arc::new(make_zn_multiplier_ring(n, &a).unwrap());
            out.push((Naive { n, a }, ring));
        }
    }
    out
}

fn lib_endos(ring: &Arc<HyperRing>) -> Vec<Endomorphism> {
    enumerate_endomorphisms(ring, 64).unwrap()
}

#[test]
fn hyperideals_match_subset_scan() {
    for (naive, ring) in small_rings() {
        let lib: Vec<u32> = enumerate_hyperideals(&ring, 64)
            .unwrap()
            .iter()
            .map(|i| mask(i.elements()))
            .collect();
        let mut lib_sorted = lib.clone();
        lib_sorted.sort();
        assert_eq!(lib_sorted, naive.ideals(), "{}", ring.name());
    }
}

#[test]
fn endomorphisms_match_scaling_scan() {
    for (naive, ring) in small_rings() {
        let mut lib: Vec<Vec<usize>> = lib_endos(&ring).iter().map(|e| e.map()).collect();
        lib.sort();
        let mut brute = naive.endos();
        brute.sort();
        assert_eq!(lib, brute, "{}", ring.name());
    }
}

#[test]
fn primality_and_alpha_primality_match() {
    for (naive, ring) in small_rings() {
        let endos = lib_endos(&ring);
        for i in enumerate_hyperideals(&ring, 64).unwrap() {
            if !i.is_proper() {
                continue;
            }
            let s = mask(i.elements());
            let id: Vec<usize> = (0..naive.n).collect();
            assert_eq!(is_prime(&i).unwrap(), naive.alpha_prime(s, &id));
            for e in &endos {
                assert_eq!(
                    is_alpha_prime(&i, e).unwrap(),
                    naive.alpha_prime(s, &e.map()),
                    "{} {} {}",
                    ring.name(),
                    i.elements(),
                    e
                );
            }
        }
    }
}

#[test]
fn nilradicals_and_radicals_match() {
    for (naive, ring) in small_rings() {
        let id: Vec<usize> = (0..naive.n).collect();
        assert_eq!(mask(&nilradical(&ring)), naive.nil(&id), "{}", ring.name());
        for e in lib_endos(&ring) {
            assert_eq!(mask(&alpha_nilradical(&ring, &e)), naive.nil(&e.map()));
        }
        for i in enumerate_hyperideals(&ring, 64).unwrap() {
            if i.is_proper() {
                let rad = prime_radical(&i, 64).unwrap();
                assert_eq!(mask(&rad.radical), naive.radical(mask(i.elements())));
            }
        }
    }
}

#[test]
fn kernels_match_zero_preimage() {
    for (naive, ring) in small_rings() {
        for e in lib_endos(&ring) {
            let expected = (0..naive.n)
                .filter(|&x| e.map()[x] == 0)
                .fold(0, |m, x| m | 1 << x);
            assert_eq!(mask(kernel(&e).unwrap().elements()), expected);
        }
    }
}

#[test]
fn r6_and_r5_exact_counts() {
    let r6 = Arc::new(make_zn_multiplier_ring(6, &[2]).unwrap());
    assert_eq!(enumerate_hyperideals(&r6, 16).unwrap().len(), 4);
    assert_eq!(lib_endos(&r6).len(), 4);
    assert_eq!(nilradical(&r6), ElementSet::from([0, 3]));
    let triple = Endomorphism::multiple(r6.clone(), 3).unwrap();
    assert_eq!(
        kernel(&triple).unwrap().elements(),
        &ElementSet::from([0, 2, 4])
    );

    let r5 = Arc::new(make_zn_multiplier_ring(5, &[2]).unwrap());
    assert_eq!(lib_endos(&r5).len(), 2);
    let naive = Naive { n: 5, a: vec![2] };
    assert_eq!(naive.endos().len(), 2);
    let zero = HyperIdeal::new(r5.clone(), [0].into()).unwrap();
    assert!(is_prime(&zero).unwrap());
}
