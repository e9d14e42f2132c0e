//! Rank generating functions, differentiated rank-difference series and the
//! closed forms used by the congruence proofs.
//!
//! Everything is built from the two-parameter series
//!
//! `𝒩(d, e, x, z; q) = Σ_n ∏_{k=1}^n (d + Q^(k-1))(e + Q^(k-1)) · x^n Q^n / ∏_{k=1}^n (1 − zQ^k)(1 − xQ^k/z)`
//!
//! with `Q = q^step`, which counts overpartition pairs by `d^r e^s x^t z^m`.
//! Taking `d = 0` is the limit `d → 0` of `(−1/d; Q)_n d^n`.

mod build;
mod forms;
mod lemma;

pub use build::{
    genovpair_series, nt_diff_gf, nt_diff_in, rank_fraction_series, rank_gf, thmain_check,
    thmain_rhs, IdentityReport, RankFractionExpr, Vars,
};
pub use forms::{closed_form, conjecture_rhs, form_description, CONJECTURE_IDS, FORM_IDS};
pub use lemma::{lemma42_check, LemmaReport};

use core::fmt;
use core::str::FromStr;

use crate::combinatorics::{Counter, Statistic};
use crate::ring::{CoeffRing, Rat};
use crate::{Error, Result};

/// A parameter `coeff · q^qexp`; a zero coefficient means the limit `→ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub coeff: Rat,
    pub qexp: i64,
}

impl Param {
    pub fn zero() -> Self {
        Param {
            coeff: Rat::zero(),
            qexp: 0,
        }
    }

    pub fn constant(c: Rat) -> Self {
        Param { coeff: c, qexp: 0 }
    }

    pub fn qpow(qexp: i64) -> Self {
        Param {
            coeff: Rat::one(),
            qexp,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Generic `(d, e)`; only usable through [`genovpair_series`] with explicit parameters.
    PairGeneric,
    /// `d, e → 0`: Dyson's rank of partitions.
    Dyson,
    /// `(d, e) = (1, 0)`: Dyson's rank of overpartitions.
    OvRank,
    /// `(d, e, q) = (1, 1/q, q²)`: M2-rank of overpartitions.
    OvM2,
    /// `(d, e, q) = (0, 1/q, q²)`: M2-rank of partitions without repeated odd parts.
    DoM2,
}

impl Family {
    pub const SPECIALIZED: [Family; 4] =
        [Family::Dyson, Family::OvRank, Family::OvM2, Family::DoM2];

    pub fn name(self) -> &'static str {
        match self {
            Family::PairGeneric => "pair",
            Family::Dyson => "dyson",
            Family::OvRank => "ov",
            Family::OvM2 => "ovm2",
            Family::DoM2 => "dom2",
        }
    }

    pub fn specialization(self) -> Result<Specialization> {
        let (d, e, step) = match self {
            Family::PairGeneric => return Err(Error::UnsupportedSpecialization("pair")),
            Family::Dyson => (Param::zero(), Param::zero(), 1),
            Family::OvRank => (Param::constant(Rat::one()), Param::zero(), 1),
            Family::OvM2 => (Param::constant(Rat::one()), Param::qpow(-1), 2),
            Family::DoM2 => (Param::zero(), Param::qpow(-1), 2),
        };
        Ok(Specialization { d, e, step })
    }

    /// The statistic whose distribution the specialized series counts.
    pub fn statistic(self) -> Option<Statistic> {
        match self {
            Family::PairGeneric => None,
            Family::Dyson => Some(Statistic::DysonRank),
            Family::OvRank => Some(Statistic::OvRank),
            Family::OvM2 => Some(Statistic::M2Overpartition),
            Family::DoM2 => Some(Statistic::M2DistinctOdd),
        }
    }

    /// Part-weighted counter (`NT`-type) of this family.
    pub fn part_counter(self) -> Option<Counter> {
        match self {
            Family::PairGeneric => None,
            Family::Dyson => Some(Counter::Nt),
            Family::OvRank => Some(Counter::NtBar),
            Family::OvM2 => Some(Counter::NtBar2),
            Family::DoM2 => Some(Counter::Nt2),
        }
    }

    /// Object-counting counter (`N`-type) of this family.
    pub fn object_counter(self) -> Option<Counter> {
        match self {
            Family::PairGeneric => None,
            Family::Dyson => Some(Counter::N),
            Family::OvRank => Some(Counter::NBar),
            Family::OvM2 => Some(Counter::NBar2),
            Family::DoM2 => Some(Counter::N2),
        }
    }

    pub fn of_counter(c: Counter) -> Option<Family> {
        match c {
            Counter::Nt | Counter::N => Some(Family::Dyson),
            Counter::NtBar | Counter::NBar => Some(Family::OvRank),
            Counter::NtBar2 | Counter::NBar2 => Some(Family::OvM2),
            Counter::Nt2 | Counter::N2 => Some(Family::DoM2),
            Counter::MOmega => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pair" | "pairs" => Ok(Family::PairGeneric),
            "dyson" => Ok(Family::Dyson),
            "ov" | "ov-rank" => Ok(Family::OvRank),
            "ovm2" | "ov-m2" => Ok(Family::OvM2),
            "dom2" | "do-m2" => Ok(Family::DoM2),
            _ => Err(Error::InvalidArgument(alloc::format!(
                "unknown family `{s}`"
            ))),
        }
    }
}

/// Parameters `(d, e)` and the dilation `Q = q^step`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub d: Param,
    pub e: Param,
    pub step: usize,
}

impl Specialization {
    pub fn generic(d: Param, e: Param) -> Self {
        Specialization { d, e, step: 1 }
    }
}

/// `Σ (T(b, k, n) − T(k − b, k, n)) qⁿ` for the part-weighted counter `T` of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NTDiffSpec {
    pub family: Family,
    pub b: u32,
    pub k: u32,
}

impl NTDiffSpec {
    pub fn new(family: Family, b: u32, k: u32) -> Result<Self> {
        if k < 2 || b < 1 || b >= k {
            return Err(Error::InvalidArgument(alloc::format!(
                "need 1 <= b <= k-1, got b = {b}, k = {k}"
            )));
        }
        family.specialization()?;
        Ok(NTDiffSpec { family, b, k })
    }
}
