//! Exact arithmetic for finite pseudo-reflection groups.
//!
//! This crate computes, without floating point and without rounding:
//!
//! - the eigenspace statistic `a(m)`: the largest dimension of a
//!   `ζ_m`-eigenspace over the elements of a group, both by direct
//!   maximization over conjugacy data ([`spectra`]) and by counting
//!   fundamental invariant degrees divisible by `m` ([`eddim::a_springer`]);
//! - essential dimension at a prime `ed(G; p)`, absolute essential
//!   dimension `ed(G)` (exact value or interval), and poor man's essential
//!   dimension `pmed(G)` for groups across the Shephard-Todd
//!   classification ([`eddim`]);
//! - Molien (Poincaré) series of invariant rings with exact cyclotomic
//!   intermediate arithmetic, and recovery of the fundamental degrees from
//!   the series, used as an independent oracle ([`molien`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); the companion CLI
//! crate carries IO, file formats and command-line reporting.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod eddim;
pub mod enumerate;
pub mod exactnum;
pub mod molien;
pub mod oracle;
pub mod spectra;

mod util;
