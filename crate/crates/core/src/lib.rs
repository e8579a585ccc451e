//! Finite multiplicative hyperrings.
//!
//! A multiplicative hyperring is an abelian group `(R, +)` equipped with a
//! set-valued, associative multiplication `∘` that distributes over `+` up to
//! inclusion and obeys the sign law `a∘(−b) = (−a)∘b = −(a∘b)`. This crate
//! represents finite instances as Cayley tables over element indices and
//! provides:
//!
//! * [`ring`]: validation and set-valued arithmetic,
//! * [`ideals`]: hyperideals, primality predicates and radicals,
//! * [`morphisms`]: good homomorphisms and endomorphism enumeration,
//! * [`constructions`]: quotients, products and induced maps,
//! * [`verifier`]: a catalog of checkable statements run over generated
//!   corpora, with self-certifying counterexamples.

pub mod constructions;
pub mod error;
pub mod ideals;
pub mod morphisms;
pub mod ring;
pub mod set;
pub mod verifier;
pub mod zn;

pub use constructions::{
    induced_quotient_endo, product_endomorphism, product_ring, quotient_ring, AlphaBarReading,
    ProductRing, QuotientRing,
};
pub use error::{Error, Result, Side};
pub use ideals::{CStatus, HyperIdeal};
pub use morphisms::{Endomorphism, Homomorphism};
pub use ring::{HyperRing, Identity, IdentityFlavor, Properties, RawRing, RingFlag};
pub use set::ElementSet;
pub use zn::make_zn_multiplier_ring;
