//! Failures that are expected: counterexamples to statements as printed.

use std::fmt;

use super::instance::{Instance, InstanceKind};
use super::{Status, VerdictReport};
use crate::ideals::CStatus;

/// One family of known counterexamples.
pub struct LedgerEntry {
    pub id: &'static str,
    /// Catalog id or example-claim id the entry covers.
    pub theorem: &'static str,
    pub note: &'static str,
    matches: fn(&Instance, &VerdictReport) -> bool,
}

impl fmt::Debug for LedgerEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LedgerEntry")
            .field("id", &self.id)
            .field("theorem", &self.theorem)
            .finish()
    }
}

fn non_injective_alpha(inst: &Instance, _: &VerdictReport) -> bool {
    inst.alpha().is_some_and(|a| !a.is_injective())
}

fn zero_ideal_not_c(inst: &Instance, _: &VerdictReport) -> bool {
    match inst.kind() {
        InstanceKind::RingEndo { ctx, .. } => ctx.zero_ideal().c_status() != CStatus::Yes,
        _ => false,
    }
}

fn ring_without_identity(inst: &Instance, _: &VerdictReport) -> bool {
    inst.ring().identity().is_none()
}

fn only_kernel_alpha_reading(_: &Instance, r: &VerdictReport) -> bool {
    r.flags.iter().any(|f| f == "ker_alpha_reading=fails")
        && r.flags.iter().any(|f| f == "ker_f_reading=holds")
}

fn kernel_quotient_collapse(inst: &Instance, _: &VerdictReport) -> bool {
    match inst.kind() {
        InstanceKind::Triple { alpha, .. } => !alpha.is_injective(),
        _ => false,
    }
}

fn always(_: &Instance, _: &VerdictReport) -> bool {
    true
}

pub static LEDGER: &[LedgerEntry] = &[
    LedgerEntry {
        id: "kernel-bound-needs-injective-alpha",
        theorem: "T11",
        note: "a non-injective α has elements of Ker α outside some α-prime hyperideal",
        matches: non_injective_alpha,
    },
    LedgerEntry {
        id: "nil-intersection-needs-injective-alpha",
        theorem: "T13",
        note: "a non-injective α makes Nil_α larger than the meet of the α-primes",
        matches: non_injective_alpha,
    },
    LedgerEntry {
        id: "nil-intersection-needs-c-zero-ideal",
        theorem: "T13",
        note: "when ⟨0⟩ is not a C-hyperideal, 0 ∈ xⁿ no longer forces xⁿ ⊆ ⟨0⟩",
        matches: zero_ideal_not_c,
    },
    LedgerEntry {
        id: "maximal-invariant-needs-identity",
        theorem: "T04",
        note: "without an identity a maximal α-invariant α-prime need not be prime",
        matches: ring_without_identity,
    },
    LedgerEntry {
        id: "kernel-quotient-degenerate-alpha",
        theorem: "T21",
        note: "for a non-injective α the primes of R/Ker α need not match the α-primes of R",
        matches: kernel_quotient_collapse,
    },
    LedgerEntry {
        id: "epimorphism-kernel-reading",
        theorem: "T23",
        note: "fails with Ker α ⊆ I₁ but holds with Ker f ⊆ I₁",
        matches: only_kernel_alpha_reading,
    },
    LedgerEntry {
        id: "z8-scaled-3x-not-alpha-prime",
        theorem: "ex-z8-scaled-3x-alpha-prime",
        note: "1∘1 = {0,2,4,6} lies in ⟨2⟩ while 1 and 3·1 do not",
        matches: always,
    },
];

/// The ledger entry covering a failing verdict, if any.
pub fn known_discrepancy(inst: &Instance, report: &VerdictReport) -> Option<&'static LedgerEntry> {
    if report.status != Status::Fails {
        return None;
    }
    LEDGER
        .iter()
        .find(|e| e.theorem == report.theorem && (e.matches)(inst, report))
}
