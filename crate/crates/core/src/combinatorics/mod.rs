//! Partition-like objects, their statistics, and exhaustive tallies.
//!
//! Four families are enumerated: partitions, overpartitions, overpartition
//! pairs and partitions without repeated odd parts. Hot loops use the lending
//! walkers in [`walk`]; the owned iterators are convenient wrappers.
//!
//! The empty object has every rank equal to 0. It contributes nothing to the
//! part-weighted counters and one object to residue class 0 of the
//! object-counting ones.

mod stats;
mod tally;
pub mod walk;

pub use stats::{
    count_ones, crank, dyson_rank, m2_rank_distinct_odd, m2_rank_overpartition, ov_rank, pair_rank,
    pair_record, PairRecord,
};
pub use tally::{
    pair_profile, tally, Bin, Counter, EnumBounds, Histogram, ObjectClass, Statistic, Weight,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};
use walk::{OverpartitionWalk, PairWalk, PartitionWalk};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into non-increasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn dyson_rank(&self) -> i64 {
        dyson_rank(&self.parts)
    }

    pub fn crank(&self) -> i64 {
        crank(&self.parts)
    }

    pub fn ones(&self) -> u32 {
        count_ones(&self.parts)
    }

    pub fn m2_rank(&self) -> Result<i64> {
        m2_rank_distinct_odd(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One part of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OvPart {
    pub value: u32,
    pub overlined: bool,
}

impl OvPart {
    pub fn plain(value: u32) -> Self {
        OvPart {
            value,
            overlined: false,
        }
    }

    pub fn over(value: u32) -> Self {
        OvPart {
            value,
            overlined: true,
        }
    }
}

impl PartialOrd for OvPart {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// `k̄ > k`, and larger values are larger.
impl Ord for OvPart {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.value, self.overlined).cmp(&(other.value, other.overlined))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Vec<OvPart>,
}

impl Overpartition {
    /// Canonicalizes the order (values non-increasing, overlined copy first)
    /// and rejects a value overlined twice.
    pub fn new(mut parts: Vec<OvPart>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::InvalidArgument(
                "overpartition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        for w in parts.windows(2) {
            if w[0].overlined && w[1].overlined && w[0].value == w[1].value {
                return Err(Error::InvalidArgument(alloc::format!(
                    "value {} is overlined twice",
                    w[0].value
                )));
            }
        }
        Ok(Overpartition { parts })
    }

    /// Parses `"6',6,5,3'"`; a trailing `'` marks an overlined part and the
    /// empty string is the empty overpartition.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (digits, overlined) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let value = digits
                .parse()
                .map_err(|_| Error::InvalidArgument(alloc::format!("bad part `{tok}`")))?;
            parts.push(OvPart { value, overlined });
        }
        Overpartition::new(parts)
    }

    pub fn parts(&self) -> &[OvPart] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn overlined_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    pub fn rank(&self) -> i64 {
        ov_rank(&self.parts)
    }

    pub fn m2_rank(&self) -> i64 {
        m2_rank_overpartition(&self.parts)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("(");
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{}", p.value));
            if p.overlined {
                s.push('\'');
            }
        }
        s.push(')');
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverpartitionPair {
    pub lambda: Overpartition,
    pub mu: Overpartition,
}

impl OverpartitionPair {
    pub fn new(lambda: Overpartition, mu: Overpartition) -> Self {
        OverpartitionPair { lambda, mu }
    }

    pub fn weight(&self) -> u32 {
        self.lambda.weight() + self.mu.weight()
    }

    pub fn rank(&self) -> i64 {
        pair_rank(&self.lambda.parts, &self.mu.parts)
    }

    pub fn record(&self) -> PairRecord {
        pair_record(&self.lambda.parts, &self.mu.parts)
    }
}

/// Owned iterator over the partitions of `n`.
pub struct Partitions(PartitionWalk);

impl Iterator for Partitions {
    type Item = Partition;
    fn next(&mut self) -> Option<Partition> {
        self.0.advance().map(|p| Partition { parts: p.to_vec() })
    }
}

pub struct Overpartitions(OverpartitionWalk);

impl Iterator for Overpartitions {
    type Item = Overpartition;
    fn next(&mut self) -> Option<Overpartition> {
        self.0
            .advance()
            .map(|p| Overpartition { parts: p.to_vec() })
    }
}

pub struct OverpartitionPairs(PairWalk);

impl Iterator for OverpartitionPairs {
    type Item = OverpartitionPair;
    fn next(&mut self) -> Option<OverpartitionPair> {
        self.0.advance().map(|(l, m)| OverpartitionPair {
            lambda: Overpartition { parts: l.to_vec() },
            mu: Overpartition { parts: m.to_vec() },
        })
    }
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions(PartitionWalk::new(n))
}

/// Partitions of `n` without repeated odd parts.
pub fn enumerate_distinct_odd(n: u32) -> Partitions {
    Partitions(PartitionWalk::distinct_odd(n))
}

pub fn enumerate_overpartitions(n: u32) -> Overpartitions {
    Overpartitions(OverpartitionWalk::new(n))
}

pub fn enumerate_overpartition_pairs(n: u32) -> OverpartitionPairs {
    OverpartitionPairs(PairWalk::new(n))
}

/// Number of objects of weight `n` in a family, by exhaustive enumeration.
pub fn count(class: ObjectClass, n: u32) -> u64 {
    let mut c = 0u64;
    match class {
        ObjectClass::Partitions => {
            let mut w = PartitionWalk::new(n);
            while w.advance().is_some() {
                c += 1;
            }
        }
        ObjectClass::DistinctOdd => {
            let mut w = PartitionWalk::distinct_odd(n);
            while w.advance().is_some() {
                c += 1;
            }
        }
        ObjectClass::Overpartitions => {
            // each partition with d distinct values yields 2^d overpartitions
            let mut w = PartitionWalk::new(n);
            while let Some(p) = w.advance() {
                let distinct =
                    p.windows(2).filter(|x| x[0] != x[1]).count() + usize::from(!p.is_empty());
                c += 1 << distinct;
            }
        }
        ObjectClass::Pairs => {
            let ov: Vec<u64> = (0..=n)
                .map(|m| count(ObjectClass::Overpartitions, m))
                .collect();
            c = (0..=n as usize).map(|a| ov[a] * ov[n as usize - a]).sum();
        }
    }
    c
}
