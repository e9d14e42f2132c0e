use qcert_core::combinatorics::walk::{OverpartitionWalk, PairWalk, PartitionWalk};
use qcert_core::combinatorics::{
    count, enumerate_overpartitions, pair_profile, tally, Counter, EnumBounds, Histogram,
    ObjectClass, Overpartition, OverpartitionPair, Statistic, Weight,
};
use qcert_core::genfun::{closed_form, genovpair_series, Param, Specialization, Vars};
use qcert_core::{CoeffRing, LaurentPoly, QSeries, Rat};

/// p(n) by Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Partitions into parts drawn from `allowed`, each at most `max_mult` times.
fn restricted(
    n: usize,
    allowed: impl Fn(usize) -> bool,
    max_mult: impl Fn(usize) -> usize,
) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for part in (1..=n).filter(|&k| allowed(k)) {
        let mut next = vec![0u64; n + 1];
        for (m, v) in c.iter().enumerate() {
            for j in 0..=max_mult(part) {
                if m + j * part > n {
                    break;
                }
                next[m + j * part] += v;
            }
        }
        c = next;
    }
    c
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    (0..a.len())
        .map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum())
        .collect()
}

fn ints(s: &QSeries<Rat>) -> Vec<u64> {
    s.coeffs()
        .iter()
        .map(|c| c.to_i64().unwrap() as u64)
        .collect()
}

#[test]
fn family_counts_agree_with_independent_oracles() {
    let n = 30;
    let p = partition_numbers(n);
    let distinct = restricted(n, |_| true, |_| 1);
    let ov = convolve(&p, &distinct);
    let do_ = restricted(n, |_| true, |k| if k % 2 == 1 { 1 } else { usize::MAX });
    let pairs = convolve(&ov, &ov);
    assert_eq!(p[4], 5);
    assert_eq!(ov[4], 14);
    assert_eq!(ints(&closed_form("partition-gf", n).unwrap()), p);
    assert_eq!(ints(&closed_form("overpartition-gf", n).unwrap()), ov);
    assert_eq!(ints(&closed_form("distinct-odd-gf", n).unwrap()), do_);
    assert_eq!(ints(&closed_form("pair-gf", n).unwrap()), pairs);
    for m in 0..=n as u32 {
        let mu = m as usize;
        assert_eq!(count(ObjectClass::Partitions, m), p[mu]);
        assert_eq!(count(ObjectClass::DistinctOdd, m), do_[mu]);
        assert_eq!(count(ObjectClass::Overpartitions, m), ov[mu]);
        assert_eq!(count(ObjectClass::Pairs, m), pairs[mu]);
    }
    for m in 0..=16u32 {
        let mut w = OverpartitionWalk::new(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        assert_eq!(c, ov[m as usize]);
    }
    for m in 0..=8u32 {
        let mut w = PairWalk::new(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        assert_eq!(c, pairs[m as usize]);
    }
    let mut w = PartitionWalk::distinct_odd(12);
    let mut c = 0;
    while w.advance().is_some() {
        c += 1;
    }
    assert_eq!(c, do_[12]);
}

#[test]
fn worked_examples_from_the_definitions() {
    let pair = |l: &str, m: &str| {
        OverpartitionPair::new(
            Overpartition::parse(l).unwrap(),
            Overpartition::parse(m).unwrap(),
        )
    };
    assert_eq!(pair("6',6,5,4,4,4,3',1'", "7,7,5',2,2,2").rank(), -3);
    assert_eq!(pair("4,3',3,2',1", "4,4,4,1'").rank(), -2);
    let fourteen: Vec<String> = enumerate_overpartitions(4).map(|o| o.to_string()).collect();
    assert_eq!(fourteen.len(), 14);
    assert!(fourteen.contains(&"(4')".to_string()) && fourteen.contains(&"(1',1,1,1)".to_string()));
}

#[test]
fn dyson_rank_is_symmetric_but_part_counts_are_not() {
    let mut asymmetric = false;
    for n in 1..=25 {
        let h = Histogram::compute(Statistic::DysonRank, n);
        for (m, b) in &h.bins {
            let mirror = h.bins.get(&-m).map(|b| b.objects).unwrap_or(0);
            assert_eq!(b.objects, mirror, "n = {n}, m = {m}");
            asymmetric |= h.bins.get(&-m).map(|b| b.parts).unwrap_or(0) != b.parts;
        }
    }
    assert!(asymmetric);
}

#[test]
fn object_tallies_sum_to_counts() {
    let b = EnumBounds::default();
    for (counter, class) in [
        (Counter::N, ObjectClass::Partitions),
        (Counter::NBar, ObjectClass::Overpartitions),
        (Counter::NBar2, ObjectClass::Overpartitions),
        (Counter::N2, ObjectClass::DistinctOdd),
    ] {
        for n in 0..=14 {
            let t = tally(counter, n, 7, &b).unwrap();
            assert_eq!(t.iter().sum::<u64>(), count(class, n), "{counter} at {n}");
        }
    }
    let h = Histogram::compute(Statistic::Crank, 9);
    assert_eq!(
        h.total(Weight::Ones),
        partition_numbers(8).iter().sum::<u64>()
    );
}

#[test]
fn pair_profile_matches_the_two_parameter_series() {
    let bounds = EnumBounds::default();
    let order = 7;
    for (d, e, x) in [(1i64, 1i64, 1i64), (2, -1, 3), (0, 2, -2)] {
        let spec =
            Specialization::generic(Param::constant(Rat::from(d)), Param::constant(Rat::from(e)));
        let s: QSeries<LaurentPoly> = genovpair_series(
            &spec,
            &Vars {
                x: Some(Rat::from(x)),
                z: None,
            },
            order,
        )
        .unwrap();
        for n in 0..=order {
            let mut expected = LaurentPoly::zero();
            for (rec, c) in pair_profile(n as u32, &bounds).unwrap() {
                let w = Rat::from(d).pow(rec.r)
                    * Rat::from(e).pow(rec.s)
                    * Rat::from(x).pow(rec.t)
                    * Rat::from(c as i64);
                expected.add_term(rec.m, &w);
            }
            assert_eq!(s.coeff(n), &expected, "n = {n} at ({d}, {e}, {x})");
        }
    }
    assert!(pair_profile(25, &bounds).is_err());
}
