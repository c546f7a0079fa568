//! Exact-arithmetic kernel for inflection polynomials of superelliptic pencils.
//!
//! Everything in this crate is computed over exact rationals (or exact
//! quotient-ring / finite-field coefficients); no floating point is used
//! anywhere. The crate is `no_std`-compatible (`alloc` required) so the
//! algorithmic core stays independent of the I/O layer in `hasseflex-cli`.
//!
//! Module overview:
//!
//! * [`rat`], [`coeff`], [`quotient`] — coefficient rings (arbitrary-precision
//!   rationals, `Z/p`, monic quotient extensions of `Q`).
//! * [`mpoly`] — sparse multivariate polynomials with a canonical term order,
//!   Hasse derivatives, exact division, substitution.
//! * [`factorial`] — falling/rising/double factorial gadgets, numeric and
//!   symbolic.
//! * [`series`] — truncated power series, local inversion of `f(x) = y^n`,
//!   series Wronskians.
//! * [`resultant`] — Sylvester/Bareiss, subresultant PRS and
//!   evaluation–interpolation resultants plus calibrated discriminants.
//! * [`modp`] — reduction mod p and squarefree machinery over `Z/p`.
//! * [`pencils`] — the pencil catalog, the atomic inflection recursion and
//!   its symmetry/parity/coefficient checks.
//! * [`wronskian`] — the determinantal model of complete-series Wronskians
//!   away from ramification.
//! * [`lattice`] — Newton polygons, Minkowski sums, lattice-point counts,
//!   lower hulls, delta invariants and the genus pipeline.
//! * [`ramification`] — inflectionary orders, Vandermonde/tropical/Plücker
//!   combinatorics at ramification points and the global inflection class.
//! * [`elimination`] — singular loci, discriminant curves and their
//!   components, parameterization and cusp-locus checks.
//! * [`ffarith`] — exact point counting over prime fields and p-adic
//!   valuation utilities.
//! * [`report`] — structured pass/fail verification records.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod coeff;
pub mod elimination;
pub mod error;
pub mod factorial;
pub mod ffarith;
pub mod lattice;
pub mod modp;
pub mod mpoly;
pub mod pencils;
pub mod quotient;
pub mod ramification;
pub mod rat;
pub mod report;
pub mod resultant;
pub mod series;
pub mod wronskian;

pub use error::Error;
pub use mpoly::MPoly;
pub use rat::Rat;
