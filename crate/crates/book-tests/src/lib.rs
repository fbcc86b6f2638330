//! Runs the guide's code samples as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/valuations.md")]
mod valuations {}

#[doc = include_str!("../../../book/src/polynomials.md")]
mod polynomials {}

#[doc = include_str!("../../../book/src/invariant-sums.md")]
mod invariant_sums {}

#[doc = include_str!("../../../book/src/convergence.md")]
mod convergence {}

#[doc = include_str!("../../../book/src/bernoulli.md")]
mod bernoulli {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
