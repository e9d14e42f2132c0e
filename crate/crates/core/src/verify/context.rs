use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{Histogram, Statistic};
use crate::genfun::{closed_form, nt_diff_gf, nt_diff_in, rank_gf, Family, NTDiffSpec};
use crate::ring::{Fp, Rat};
use crate::series::QSeries;
use crate::{Error, Result};

/// A memoizable series; some keys expand to several series (one per residue).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKey {
    NtDiff(NTDiffSpec),
    /// The same series computed over `F_p`, coefficients in `0..p`.
    NtDiffMod(NTDiffSpec, u64),
    /// `Σ N(m, k, n) qⁿ` for `m = 0..k`, from the rank generating function.
    ObjectResidues(Family, u32),
    Form(String),
}

impl SeriesKey {
    pub fn compute(&self, order: usize) -> Result<Vec<QSeries<Rat>>> {
        Ok(match self {
            SeriesKey::NtDiff(spec) => alloc::vec![nt_diff_gf(spec, order)?],
            SeriesKey::NtDiffMod(spec, p) => alloc::vec![nt_diff_mod(spec, *p, order)?],
            SeriesKey::ObjectResidues(family, k) => {
                let g = rank_gf(*family, order)?;
                let mut out = alloc::vec![QSeries::zero(order); *k as usize];
                for (n, c) in g.coeffs().iter().enumerate() {
                    for (m, v) in c.residue_sums(*k).into_iter().enumerate() {
                        out[m].set_coeff(n, v);
                    }
                }
                out
            }
            SeriesKey::Form(id) => alloc::vec![closed_form(id, order)?],
        })
    }
}

fn via_fp<const P: u64>(spec: &NTDiffSpec, order: usize) -> Result<QSeries<Rat>> {
    let s = nt_diff_in::<Fp<P>>(spec, order)?;
    Ok(s.map(|c| Rat::from_int(c.value() as i64)))
}

/// Rank-difference series reduced mod a small prime, computed in `F_p`.
pub fn nt_diff_mod(spec: &NTDiffSpec, p: u64, order: usize) -> Result<QSeries<Rat>> {
    match p {
        2 => via_fp::<2>(spec, order),
        3 => via_fp::<3>(spec, order),
        5 => via_fp::<5>(spec, order),
        7 => via_fp::<7>(spec, order),
        11 => via_fp::<11>(spec, order),
        13 => via_fp::<13>(spec, order),
        17 => via_fp::<17>(spec, order),
        19 => via_fp::<19>(spec, order),
        23 => via_fp::<23>(spec, order),
        _ => Err(Error::InvalidArgument(alloc::format!(
            "no F_p fast path for p = {p}"
        ))),
    }
}

/// A unit of precomputation; independent jobs may run concurrently.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Job {
    Series(SeriesKey, usize),
    Histogram(Statistic, u32),
}

#[derive(Clone, Debug)]
pub enum Artifact {
    Series(SeriesKey, Vec<QSeries<Rat>>),
    Histogram(Histogram),
}

impl Job {
    pub fn run(&self) -> Result<Artifact> {
        match self {
            Job::Series(key, order) => Ok(Artifact::Series(key.clone(), key.compute(*order)?)),
            Job::Histogram(stat, n) => Ok(Artifact::Histogram(Histogram::compute(*stat, *n))),
        }
    }
}

/// Read-only cache shared by checks. Lookups that miss compute on the spot.
#[derive(Clone, Debug, Default)]
pub struct Context {
    series: BTreeMap<SeriesKey, Vec<QSeries<Rat>>>,
    histograms: BTreeMap<(Statistic, u32), Histogram>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    /// Deduplicates jobs, keeping the largest order per series key.
    pub fn merge_jobs(jobs: impl IntoIterator<Item = Job>) -> Vec<Job> {
        let mut series: BTreeMap<SeriesKey, usize> = BTreeMap::new();
        let mut hist: BTreeMap<(Statistic, u32), ()> = BTreeMap::new();
        for j in jobs {
            match j {
                Job::Series(k, o) => {
                    let e = series.entry(k).or_insert(0);
                    *e = (*e).max(o);
                }
                Job::Histogram(s, n) => {
                    hist.insert((s, n), ());
                }
            }
        }
        let mut out: Vec<Job> = series.into_iter().map(|(k, o)| Job::Series(k, o)).collect();
        out.extend(hist.into_keys().map(|(s, n)| Job::Histogram(s, n)));
        out
    }

    pub fn insert(&mut self, a: Artifact) {
        match a {
            Artifact::Series(k, v) => {
                let keep = self
                    .series
                    .get(&k)
                    .is_some_and(|old| old[0].order() >= v[0].order());
                if !keep {
                    self.series.insert(k, v);
                }
            }
            Artifact::Histogram(h) => {
                self.histograms.insert((h.statistic, h.n), h);
            }
        }
    }

    /// Runs the jobs one after another and stores the results.
    pub fn warm(&mut self, jobs: &[Job]) -> Result<()> {
        for j in jobs {
            let a = j.run()?;
            self.insert(a);
        }
        Ok(())
    }

    /// The series for `key`, truncated to `order`.
    pub fn series(&self, key: &SeriesKey, order: usize) -> Result<Vec<QSeries<Rat>>> {
        match self.series.get(key) {
            Some(v) if v[0].order() >= order => Ok(v.iter().map(|s| s.truncate(order)).collect()),
            _ => key.compute(order),
        }
    }

    pub fn histogram(&self, stat: Statistic, n: u32) -> Histogram {
        match self.histograms.get(&(stat, n)) {
            Some(h) => h.clone(),
            None => Histogram::compute(stat, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoeffRing;

    #[test]
    fn fast_path_matches_exact_reduction() {
        let spec = NTDiffSpec::new(Family::OvM2, 2, 5).unwrap();
        let exact = nt_diff_gf(&spec, 60).unwrap().reduce_mod(5).unwrap();
        let fast: Vec<u64> = nt_diff_mod(&spec, 5, 60)
            .unwrap()
            .to_integers()
            .unwrap()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(exact, fast);
        assert!(nt_diff_mod(&spec, 4, 10).is_err());
    }

    #[test]
    fn object_residues_sum_to_counts() {
        let v = SeriesKey::ObjectResidues(Family::DoM2, 5)
            .compute(10)
            .unwrap();
        let total: Vec<Rat> = (0..=10)
            .map(|n| v.iter().fold(Rat::zero(), |a, s| &a + s.coeff(n)))
            .collect();
        let counts = closed_form("distinct-odd-gf", 10).unwrap();
        assert_eq!(total, counts.coeffs());
    }

    #[test]
    fn cache_truncates_and_merges() {
        let key = SeriesKey::Form("partition-gf".into());
        let jobs = Context::merge_jobs([
            Job::Series(key.clone(), 5),
            Job::Series(key.clone(), 9),
            Job::Histogram(Statistic::Crank, 3),
        ]);
        assert_eq!(jobs.len(), 2);
        let mut ctx = Context::new();
        ctx.warm(&jobs).unwrap();
        assert_eq!(ctx.series(&key, 4).unwrap()[0].order(), 4);
        assert_eq!(ctx.histogram(Statistic::Crank, 3).n, 3);
    }
}
