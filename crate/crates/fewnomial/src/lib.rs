//! Analysis of near-circuit exponential sums: n variables, n+3 terms, real
//! (rational) exponents.
//!
//! The library normalizes a signed support to its canonical form, builds the
//! canonical Gale dual, traces the signed reduced A-discriminant contour via
//! the Horn-Kapranov uniformization, decomposes its complement into chambers
//! with depths, computes Hessian signatures along the contour, and combines
//! everything into per-chamber piece-count intervals plus a certified global
//! bound (at most 3) on the number of connected components of the positive
//! zero set. A brute-force grid oracle cross-validates the counts at low
//! dimension.
//!
//! Pipeline: [`support::normalize`] -> [`gale::gale_dual`] ->
//! [`contour::parameter_domain`] -> [`contour::find_cusps`] ->
//! [`contour::trace_contour`] -> [`arrangement::build_arrangement`] ->
//! [`morse::segment_signatures`] -> [`counter::analyze`].

pub mod rat;
pub mod linalg;
pub mod poly;
pub mod roots;

pub use rat::Rat;
