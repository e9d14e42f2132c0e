use super::OvPart;
use crate::{Error, Result};

fn ceil_half(v: u32) -> i64 {
    i64::from(v).div_euclid(2) + i64::from(v % 2)
}

/// Largest part minus number of parts. Parts must be non-increasing.
pub fn dyson_rank(parts: &[u32]) -> i64 {
    match parts.first() {
        Some(&l) => i64::from(l) - parts.len() as i64,
        None => 0,
    }
}

pub fn count_ones(parts: &[u32]) -> u32 {
    parts.iter().rev().take_while(|&&p| p == 1).count() as u32
}

/// Largest part if there are no ones, otherwise the number of parts larger
/// than the number of ones minus the number of ones.
pub fn crank(parts: &[u32]) -> i64 {
    let ones = count_ones(parts);
    if ones == 0 {
        return parts.first().map_or(0, |&l| i64::from(l));
    }
    let larger = parts.iter().filter(|&&p| p > ones).count() as i64;
    larger - i64::from(ones)
}

/// Dyson's rank of an overpartition in canonical order.
pub fn ov_rank(parts: &[OvPart]) -> i64 {
    match parts.first() {
        Some(l) => i64::from(l.value) - parts.len() as i64,
        None => 0,
    }
}

/// M2-rank `⌈ℓ/2⌉ − #parts + #(odd non-overlined parts) − χ` where `χ = 1`
/// iff the largest part is odd and not overlined. When the largest value
/// occurs both overlined and plain, the overlined copy counts as largest.
pub fn m2_rank_overpartition(parts: &[OvPart]) -> i64 {
    let Some(first) = parts.first() else {
        return 0;
    };
    let odd_plain = parts
        .iter()
        .filter(|p| !p.overlined && p.value % 2 == 1)
        .count() as i64;
    let chi = i64::from(!first.overlined && first.value % 2 == 1);
    ceil_half(first.value) - parts.len() as i64 + odd_plain - chi
}

/// M2-rank `⌈ℓ/2⌉ − #parts` of a partition without repeated odd parts.
pub fn m2_rank_distinct_odd(parts: &[u32]) -> Result<i64> {
    for w in parts.windows(2) {
        if w[0] == w[1] && w[0] % 2 == 1 {
            return Err(Error::RepeatedOddPart(w[0]));
        }
    }
    Ok(parts
        .first()
        .map_or(0, |&l| ceil_half(l) - parts.len() as i64))
}

/// The exponents `(r, s, t, m)` of `d^r e^s x^t z^m` carried by an
/// overpartition pair in the two-parameter generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairRecord {
    /// overlined parts of λ plus non-overlined parts of μ
    pub r: u32,
    /// parts of μ
    pub s: u32,
    /// total parts
    pub t: u32,
    /// pair rank
    pub m: i64,
}

/// `ℓ − #parts(λ) − #overlined(μ) − χ`, with the largest part chosen by
/// `k̄_λ > k_λ > k̄_μ > k_μ` and `χ = 1` iff it is a non-overlined part of μ.
pub fn pair_rank(lambda: &[OvPart], mu: &[OvPart]) -> i64 {
    let (largest, chi) = match (lambda.first(), mu.first()) {
        (None, None) => return 0,
        (Some(l), None) => (l.value, 0),
        (Some(l), Some(m)) if l.value >= m.value => (l.value, 0),
        (_, Some(m)) => (m.value, i64::from(!m.overlined)),
    };
    let over_mu = mu.iter().filter(|p| p.overlined).count() as i64;
    i64::from(largest) - lambda.len() as i64 - over_mu - chi
}

pub fn pair_record(lambda: &[OvPart], mu: &[OvPart]) -> PairRecord {
    let over_lambda = lambda.iter().filter(|p| p.overlined).count() as u32;
    let plain_mu = mu.iter().filter(|p| !p.overlined).count() as u32;
    PairRecord {
        r: over_lambda + plain_mu,
        s: mu.len() as u32,
        t: (lambda.len() + mu.len()) as u32,
        m: pair_rank(lambda, mu),
    }
}

#[cfg(test)]
#[allow(clippy::identity_op)]
mod tests {
    use super::super::Overpartition;
    use super::*;

    fn ov(s: &str) -> Overpartition {
        Overpartition::parse(s).unwrap()
    }

    #[test]
    fn worked_pair_examples() {
        let l = ov("6',6,5,4,4,4,3',1'");
        let m = ov("7,7,5',2,2,2");
        assert_eq!(pair_rank(l.parts(), m.parts()), -3);
        let l = ov("4,3',3,2',1");
        let m = ov("4,4,4,1'");
        assert_eq!(pair_rank(l.parts(), m.parts()), -2);
    }

    #[test]
    fn pair_rank_reduces_to_dyson() {
        assert_eq!(pair_rank(ov("4").parts(), &[]), 3);
        assert_eq!(pair_rank(ov("3,1,1").parts(), &[]), dyson_rank(&[3, 1, 1]));
    }

    #[test]
    fn pair_rank_tie_goes_to_lambda() {
        // (3) vs (3'): λ's 3 is larger, χ = 0
        assert_eq!(pair_rank(ov("3").parts(), ov("3'").parts()), 3 - 1 - 1);
        // μ alone: plain largest part in μ, χ = 1
        assert_eq!(pair_rank(&[], ov("3").parts()), 3 - 0 - 0 - 1);
    }

    #[test]
    fn dyson_and_crank() {
        assert_eq!(dyson_rank(&[4]), 3);
        assert_eq!(dyson_rank(&[1, 1, 1, 1]), -3);
        assert_eq!(dyson_rank(&[2, 2]), 0);
        assert_eq!(crank(&[4]), 4);
        assert_eq!(count_ones(&[4]), 0);
        assert_eq!(crank(&[1]), -1);
        assert_eq!(crank(&[2, 1, 1]), -2);
        assert_eq!(count_ones(&[2, 1, 1]), 2);
        assert_eq!(crank(&[3, 2, 1]), 2 - 1);
    }

    #[test]
    fn m2_ranks() {
        assert_eq!(m2_rank_overpartition(ov("2").parts()), 0);
        assert_eq!(m2_rank_overpartition(ov("1").parts()), 0);
        assert_eq!(m2_rank_overpartition(ov("1'").parts()), 1 - 1);
        // largest value plain and overlined: overlined copy is largest, χ = 0
        assert_eq!(m2_rank_overpartition(ov("3',3").parts()), 2 - 2 + 1);
        assert_eq!(m2_rank_distinct_odd(&[4]), Ok(1));
        assert_eq!(m2_rank_distinct_odd(&[3, 2, 1]), Ok(-1));
        assert_eq!(
            m2_rank_distinct_odd(&[3, 3]),
            Err(Error::RepeatedOddPart(3))
        );
        assert_eq!(m2_rank_distinct_odd(&[2, 2]), Ok(-1));
    }

    #[test]
    fn record_exponents() {
        let r = pair_record(ov("2',1").parts(), ov("3,1'").parts());
        assert_eq!(
            r,
            PairRecord {
                r: 2,
                s: 2,
                t: 4,
                m: 3 - 2 - 1 - 1
            }
        );
    }
}
