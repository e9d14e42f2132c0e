use core::fmt;

use super::{CoeffRing, Rat};

/// Prime field `Z/PZ`, used only as a fast path for congruence sweeps.
/// Identity checks always run over [`Rat`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> CoeffRing for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        self.0 = (self.0 + rhs.0) % P;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.0 = (self.0 + P - rhs.0) % P;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }

    fn neg_ref(&self) -> Self {
        Fp((P - self.0) % P)
    }

    fn inverse(&self) -> Option<Self> {
        // P is assumed prime
        (self.0 != 0).then(|| self.pow(P - 2))
    }

    fn lift(coeff: &Rat, _xexp: u32, zexp: i64) -> Option<Self> {
        if zexp != 0 {
            return None;
        }
        coeff.rem_euclid(P).ok().map(Fp)
    }
}
