//! Exact symbolic computation for the rank-one Weyl vertex algebra
//! (the bosonic ghost / beta-gamma system at central charge 2).
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating point numbers anywhere in this crate.
//!
//! The layers, bottom to top:
//!
//! * [`modes`]: the affinized Weyl algebra on generators `a(n)`, `a*(n)` with
//!   `[a(m), a*(n)] = delta_{m+n,0}`, normal ordering, spectral flow and the
//!   Dixmier automorphism.
//! * [`weyl`]: the plain (zero-mode) Weyl algebra `<a, a*>` with `a a* - a* a = 1`.
//! * [`partitions`]: integer partitions and bipartitions.
//! * [`fock`]: the Fock module, its PBW basis, bigraded dimensions, vertex
//!   operator modes, Virasoro / Heisenberg structure and the Zhu products.
//! * [`character`]: the two-variable character as a product expansion.
//! * [`mta`]: mode transition algebras, their matrix realization, and the
//!   higher Zhu algebra block structure.
//! * [`weight`]: the classical weight modules over the Weyl algebra
//!   (polynomials, Laurent polynomials, and twists thereof), socle/radical
//!   structure and the weak-interlocking test.
//! * [`induced`]: generalized Verma truncations over a weight module base.
//! * [`flow`]: the Delta-operator (spectral flow on modules) and flowed actions.
//! * [`oracles`]: independent reference implementations used for cross-checks.
//! * [`verification`]: the full self-check suite driven by the CLI and the
//!   acceptance tests.

pub mod character;
pub mod error;
pub mod flow;
pub mod fock;
pub mod induced;
pub mod modes;
pub mod mta;
pub mod oracles;
pub mod partitions;
pub mod rational;
pub mod verification;
pub mod weight;
pub mod weyl;

pub use error::Error;
pub use rational::Q;
