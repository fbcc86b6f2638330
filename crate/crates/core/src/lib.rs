//! Exact computation and verification of p-adic invariant sums built on
//! central binomial coefficients.
//!
//! The central object is the family of identities
//!
//! ```text
//! sum_{n=0}^{N-1} C(2n,n) [n^k (4x-1)^k + U_k(x)] x^n = C(2N,N) x^N A_{k-1}(N,x)
//! ```
//!
//! which, as `N` grows, shows that the series on the left has p-adic sum 0 for
//! every rational `x` in its convergence set. The crate regenerates `U_k` and
//! `A_{k-1}` from their recurrences, checks the identity symbolically and
//! numerically, traces p-adic valuations of partial sums, and derives the
//! Bernoulli-number relations obtained by Volkenborn integration.
//!
//! Everything is exact: rationals are arbitrary precision and valuations are
//! integers (or infinite).
//!
//! ```
//! use padic_invariant::{InvariantTable, Prime, rational::rat};
//! use padic_invariant::series::valuation_trace;
//!
//! let table = InvariantTable::build(3).unwrap();
//! assert_eq!(table.u(3).unwrap().to_string(), "8x^3+20x^2+2x");
//!
//! let two = Prime::new(2).unwrap();
//! let trace = valuation_trace(&table, 1, &rat(2, 7), two, 10).unwrap();
//! for entry in &trace.trace.entries {
//!     assert!(entry.valuation >= entry.index as i64);
//! }
//! ```
//!
//! Modules, roughly bottom-up:
//!
//! - [`padic`]: primes, base-p digits, valuations of integers, factorials,
//!   binomials and rationals.
//! - [`poly`]: dense polynomials over the rationals, including the two-level
//!   polynomials that hold `A_{k-1}(n, x)`.
//! - [`invariant`]: the `U`/`A` recurrences and three routes to the partial
//!   sums `S_k(N, x)`.
//! - [`series`]: convergence-set membership and valuation traces.
//! - [`bernoulli`]: Bernoulli numbers and polynomials, Volkenborn sums, and
//!   the derived relations.
//! - [`selfcheck`]: the full verification suite at desk scale.

pub mod bernoulli;
pub mod error;
pub mod invariant;
pub mod padic;
pub mod poly;
pub mod published;
pub mod rational;
pub mod selfcheck;
pub mod series;
pub mod trace;

pub use error::{Error, Result};
pub use invariant::InvariantTable;
pub use padic::{Prime, Valuation};
pub use poly::{BiPolynomial, NPolynomial, Polynomial};
pub use rational::Rational;
pub use trace::ValuationTrace;
