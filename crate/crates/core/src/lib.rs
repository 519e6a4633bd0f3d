//! Exact-arithmetic calculus for symplectic Steinberg groups.
//!
//! The crate provides, bottom to top:
//!
//! * [`ring`] — a tower of exact rings (integers, residues, sparse
//!   polynomials, localizations at certified non-zero-divisors, and the
//!   mixed ring `R ⋉ t·R_a[t]`) with registered homomorphisms;
//! * [`symplectic`] — vectors, the standard alternating form, elementary
//!   symplectic transvections and their ESD generalizations, all over any
//!   tower ring;
//! * [`word`] — formal generator words, their matrix projection, free
//!   reduction, rewrite steps and replayable derivation traces, plus the
//!   orbit/basis constructors realizing ESD transformations as words;
//! * [`relative`] — the three presentations of a relative group along a
//!   split ideal (naive, actor/root pairs, four-slot generators) and the
//!   comparison maps between them;
//! * [`zcalc`] — the Suslin-style isotropic decomposition and the derived
//!   `Z`-element constructors with their projection targets;
//! * [`localglobal`] — substitution and localization functors on words,
//!   the stage maps into the mixed ring, the generator-level globalization
//!   map, dilation search and comaximal gluing;
//! * [`checks`] — the data-driven relation catalogue: every relation family
//!   has a seeded instance generator and an exact projection-level checker.
//!
//! Equality of words in the Steinberg group is never decided; a claimed
//! equality is either certified by a derivation trace or refuted by the
//! matrix projection.

pub mod checks;
pub mod error;
pub mod localglobal;
pub mod relative;
pub mod ring;
pub mod sample;
pub mod symplectic;
pub mod word;
pub mod zcalc;

pub use error::{Error, Result};
