use alloc::vec::Vec;

use super::OvPart;

/// Depth-first walk over partitions of `n` in reverse lexicographic order.
///
/// `advance` lends the current parts without allocating; wrap it in an
/// iterator when owned values are needed.
#[derive(Clone, Debug)]
pub struct PartitionWalk {
    parts: Vec<u32>,
    rem: u32,
    distinct_odd: bool,
    started: bool,
    done: bool,
}

impl PartitionWalk {
    pub fn new(n: u32) -> Self {
        Self::with_rule(n, false)
    }

    /// Partitions of `n` in which no odd part is repeated.
    pub fn distinct_odd(n: u32) -> Self {
        Self::with_rule(n, true)
    }

    fn with_rule(n: u32, distinct_odd: bool) -> Self {
        PartitionWalk {
            parts: Vec::new(),
            rem: n,
            distinct_odd,
            started: false,
            done: false,
        }
    }

    /// Largest admissible part `<= max` following `prev`.
    fn largest_valid(&self, max: u32, prev: Option<u32>) -> Option<u32> {
        let mut p = max;
        if self.distinct_odd && p % 2 == 1 && prev == Some(p) {
            p -= 1;
        }
        (p >= 1).then_some(p)
    }

    fn descend(&mut self) -> bool {
        while self.rem > 0 {
            let prev = self.parts.last().copied();
            let max = prev.map_or(self.rem, |p| p.min(self.rem));
            match self.largest_valid(max, prev) {
                Some(p) => {
                    self.parts.push(p);
                    self.rem -= p;
                }
                None => return false,
            }
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        while let Some(p) = self.parts.pop() {
            self.rem += p;
            let prev = self.parts.last().copied();
            if let Some(q) = self.largest_valid(p - 1, prev) {
                self.parts.push(q);
                self.rem -= q;
                return true;
            }
        }
        false
    }

    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(&self.parts);
            }
        }
        loop {
            if !self.backtrack() {
                self.done = true;
                return None;
            }
            if self.descend() {
                return Some(&self.parts);
            }
        }
    }
}

/// Walk over overpartitions of `n` in canonical order: each partition is
/// visited once per subset of its distinct values that carry an overline.
#[derive(Clone, Debug)]
pub struct OverpartitionWalk {
    inner: PartitionWalk,
    parts: Vec<u32>,
    // (value, multiplicity) of the current partition
    groups: Vec<(u32, u32)>,
    mask: u64,
    buf: Vec<OvPart>,
}

impl OverpartitionWalk {
    pub fn new(n: u32) -> Self {
        OverpartitionWalk {
            inner: PartitionWalk::new(n),
            parts: Vec::new(),
            groups: Vec::new(),
            mask: 0,
            buf: Vec::new(),
        }
    }

    fn load_next_partition(&mut self) -> bool {
        let Some(parts) = self.inner.advance() else {
            return false;
        };
        self.parts.clear();
        self.parts.extend_from_slice(parts);
        self.groups.clear();
        for &p in &self.parts {
            match self.groups.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => self.groups.push((p, 1)),
            }
        }
        self.mask = 0;
        true
    }

    pub fn advance(&mut self) -> Option<&[OvPart]> {
        self.step().then_some(&self.buf)
    }

    /// Move to the next overpartition; `current` then lends it.
    pub fn step(&mut self) -> bool {
        let exhausted = self.mask.checked_shr(self.groups.len() as u32).unwrap_or(0) != 0;
        if (!self.inner.started || exhausted) && !self.load_next_partition() {
            return false;
        }
        self.buf.clear();
        for (i, &(v, c)) in self.groups.iter().enumerate() {
            let over = self.mask >> i & 1 == 1;
            self.buf.push(OvPart {
                value: v,
                overlined: over,
            });
            for _ in 1..c {
                self.buf.push(OvPart {
                    value: v,
                    overlined: false,
                });
            }
        }
        self.mask += 1;
        true
    }

    pub fn current(&self) -> &[OvPart] {
        &self.buf
    }
}

/// Walk over overpartition pairs `(λ, μ)` of total weight `n`, ordered by
/// `|λ|` descending, then λ, then μ.
#[derive(Clone, Debug)]
pub struct PairWalk {
    n: u32,
    lam_weight: u32,
    lam_walk: OverpartitionWalk,
    mu_walk: OverpartitionWalk,
    lam: Vec<OvPart>,
    has_lam: bool,
}

impl PairWalk {
    pub fn new(n: u32) -> Self {
        PairWalk {
            n,
            lam_weight: n,
            lam_walk: OverpartitionWalk::new(n),
            mu_walk: OverpartitionWalk::new(0),
            lam: Vec::new(),
            has_lam: false,
        }
    }

    pub fn advance(&mut self) -> Option<(&[OvPart], &[OvPart])> {
        loop {
            if self.has_lam {
                if self.mu_walk.step() {
                    return Some((&self.lam, self.mu_walk.current()));
                }
                self.has_lam = false;
            }
            match self.lam_walk.advance() {
                Some(lam) => {
                    self.lam.clear();
                    self.lam.extend_from_slice(lam);
                    self.mu_walk = OverpartitionWalk::new(self.n - self.lam_weight);
                    self.has_lam = true;
                }
                None => {
                    if self.lam_weight == 0 {
                        return None;
                    }
                    self.lam_weight -= 1;
                    self.lam_walk = OverpartitionWalk::new(self.lam_weight);
                }
            }
        }
    }
}
