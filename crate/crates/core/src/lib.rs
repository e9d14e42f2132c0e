//! Exact q-series engine and partition-statistics oracle.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`series`]: truncated power series in `q` over exact coefficient rings
//!   ([`Rat`], [`LaurentPoly`], [`XPoly`], [`Dual`]), q-Pochhammer builders and
//!   bilateral Appell–Lerch type sums;
//! - [`combinatorics`]: enumeration of partitions, overpartitions,
//!   overpartition pairs and partitions without repeated odd parts, with their
//!   rank, M2-rank and crank statistics and NT-style tallies;
//! - [`genfun`]: the rank generating functions, the differentiated
//!   part-counting rank-difference series and every closed form used by the
//!   congruence proofs;
//! - [`verify`]: a declarative registry of congruences, identities and
//!   conjectures and a runner that checks them against either engine.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod combinatorics;
pub mod error;
pub mod genfun;
pub mod ring;
pub mod series;
pub mod verify;

pub use error::Error;
pub use ring::{CoeffRing, Dual, Fp, LaurentPoly, Rat, XPoly};
pub use series::{Monomial, QSeries};

pub type Result<T, E = Error> = core::result::Result<T, E>;
