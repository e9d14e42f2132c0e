use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::stats::{
    count_ones, crank, dyson_rank, m2_rank_distinct_odd, m2_rank_overpartition, pair_record,
    PairRecord,
};
use super::walk::{OverpartitionWalk, PairWalk, PartitionWalk};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectClass {
    Partitions,
    Overpartitions,
    Pairs,
    DistinctOdd,
}

impl ObjectClass {
    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::Partitions => "partitions",
            ObjectClass::Overpartitions => "overpartitions",
            ObjectClass::Pairs => "overpartition pairs",
            ObjectClass::DistinctOdd => "partitions without repeated odd parts",
        }
    }
}

/// Enumeration limits per family; requests beyond them are refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBounds {
    pub partitions: u32,
    pub overpartitions: u32,
    pub pairs: u32,
    pub distinct_odd: u32,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            partitions: 80,
            overpartitions: 40,
            pairs: 24,
            distinct_odd: 80,
        }
    }
}

impl EnumBounds {
    pub fn unlimited() -> Self {
        EnumBounds {
            partitions: u32::MAX,
            overpartitions: u32::MAX,
            pairs: u32::MAX,
            distinct_odd: u32::MAX,
        }
    }

    pub fn bound(&self, class: ObjectClass) -> u32 {
        match class {
            ObjectClass::Partitions => self.partitions,
            ObjectClass::Overpartitions => self.overpartitions,
            ObjectClass::Pairs => self.pairs,
            ObjectClass::DistinctOdd => self.distinct_odd,
        }
    }

    pub fn check(&self, class: ObjectClass, n: u32) -> Result<()> {
        let bound = self.bound(class);
        if n > bound {
            return Err(Error::BoundExceeded {
                family: class.name(),
                n: n.into(),
                bound: bound.into(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    DysonRank,
    Crank,
    OvRank,
    M2Overpartition,
    M2DistinctOdd,
}

impl Statistic {
    pub fn class(self) -> ObjectClass {
        match self {
            Statistic::DysonRank | Statistic::Crank => ObjectClass::Partitions,
            Statistic::OvRank | Statistic::M2Overpartition => ObjectClass::Overpartitions,
            Statistic::M2DistinctOdd => ObjectClass::DistinctOdd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    Objects,
    Parts,
    Ones,
}

/// Residue-class counters. `NT*` sum numbers of parts, `N*` count objects and
/// `Momega` sums numbers of ones by crank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Counter {
    Nt,
    NtBar,
    NtBar2,
    Nt2,
    MOmega,
    N,
    NBar,
    NBar2,
    N2,
}

impl Counter {
    pub const ALL: [Counter; 9] = [
        Counter::Nt,
        Counter::NtBar,
        Counter::NtBar2,
        Counter::Nt2,
        Counter::MOmega,
        Counter::N,
        Counter::NBar,
        Counter::NBar2,
        Counter::N2,
    ];

    pub fn statistic(self) -> Statistic {
        match self {
            Counter::Nt | Counter::N => Statistic::DysonRank,
            Counter::NtBar | Counter::NBar => Statistic::OvRank,
            Counter::NtBar2 | Counter::NBar2 => Statistic::M2Overpartition,
            Counter::Nt2 | Counter::N2 => Statistic::M2DistinctOdd,
            Counter::MOmega => Statistic::Crank,
        }
    }

    pub fn weight(self) -> Weight {
        match self {
            Counter::Nt | Counter::NtBar | Counter::NtBar2 | Counter::Nt2 => Weight::Parts,
            Counter::MOmega => Weight::Ones,
            _ => Weight::Objects,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Counter::Nt => "NT",
            Counter::NtBar => "NTbar",
            Counter::NtBar2 => "NTbar2",
            Counter::Nt2 => "NT2",
            Counter::MOmega => "Momega",
            Counter::N => "N",
            Counter::NBar => "Nbar",
            Counter::NBar2 => "Nbar2",
            Counter::N2 => "N2",
        }
    }
}

impl fmt::Display for Counter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Counter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Counter::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown counter `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bin {
    pub objects: u64,
    pub parts: u64,
    pub ones: u64,
}

impl Bin {
    pub fn get(&self, w: Weight) -> u64 {
        match w {
            Weight::Objects => self.objects,
            Weight::Parts => self.parts,
            Weight::Ones => self.ones,
        }
    }
}

/// Joint distribution of one statistic over all objects of weight `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub statistic: Statistic,
    pub n: u32,
    pub bins: BTreeMap<i64, Bin>,
}

impl Histogram {
    /// Enumerates every object of weight `n`; no bound is applied.
    pub fn compute(statistic: Statistic, n: u32) -> Self {
        let mut bins: BTreeMap<i64, Bin> = BTreeMap::new();
        let mut add = |m: i64, objects: u64, parts: u64, ones: u64| {
            let b = bins.entry(m).or_default();
            b.objects += objects;
            b.parts += parts;
            b.ones += ones;
        };
        match statistic {
            Statistic::DysonRank | Statistic::Crank => {
                let mut w = PartitionWalk::new(n);
                while let Some(p) = w.advance() {
                    let m = if statistic == Statistic::Crank {
                        crank(p)
                    } else {
                        dyson_rank(p)
                    };
                    add(m, 1, p.len() as u64, count_ones(p).into());
                }
            }
            Statistic::OvRank => {
                // the rank ignores overlines: weight each partition by 2^(distinct values)
                let mut w = PartitionWalk::new(n);
                while let Some(p) = w.advance() {
                    let distinct =
                        p.windows(2).filter(|x| x[0] != x[1]).count() + usize::from(!p.is_empty());
                    let mult = 1u64 << distinct;
                    add(
                        dyson_rank(p),
                        mult,
                        mult * p.len() as u64,
                        mult * u64::from(count_ones(p)),
                    );
                }
            }
            Statistic::M2Overpartition => {
                let mut w = OverpartitionWalk::new(n);
                while let Some(p) = w.advance() {
                    let ones = p.iter().filter(|x| x.value == 1).count() as u64;
                    add(m2_rank_overpartition(p), 1, p.len() as u64, ones);
                }
            }
            Statistic::M2DistinctOdd => {
                let mut w = PartitionWalk::distinct_odd(n);
                while let Some(p) = w.advance() {
                    let m = m2_rank_distinct_odd(p).expect("walker never repeats odd parts");
                    add(m, 1, p.len() as u64, count_ones(p).into());
                }
            }
        }
        Histogram { statistic, n, bins }
    }

    pub fn total(&self, w: Weight) -> u64 {
        self.bins.values().map(|b| b.get(w)).sum()
    }

    /// Counter values for residues `0..k`.
    pub fn residues(&self, w: Weight, k: u32) -> Vec<u64> {
        let mut out = alloc::vec![0u64; k as usize];
        for (m, b) in &self.bins {
            out[m.rem_euclid(i64::from(k)) as usize] += b.get(w);
        }
        out
    }
}

/// `counter(m, k, n)` for every residue `m` in `0..k`.
pub fn tally(counter: Counter, n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "modulus k must be at least 1".into(),
        ));
    }
    let stat = counter.statistic();
    bounds.check(stat.class(), n)?;
    Ok(Histogram::compute(stat, n).residues(counter.weight(), k))
}

/// Joint distribution `N(r, s, t, m, n)` over overpartition pairs of weight `n`.
pub fn pair_profile(n: u32, bounds: &EnumBounds) -> Result<BTreeMap<PairRecord, u64>> {
    bounds.check(ObjectClass::Pairs, n)?;
    let mut out = BTreeMap::new();
    let mut w = PairWalk::new(n);
    while let Some((l, m)) = w.advance() {
        *out.entry(pair_record(l, m)).or_insert(0) += 1;
    }
    Ok(out)
}
