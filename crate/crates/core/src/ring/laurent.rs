use alloc::collections::BTreeMap;
use core::fmt;

use super::{CoeffRing, Rat};

/// Laurent polynomial in the rank variable `z` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn monomial(coeff: Rat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Sum of all coefficients (the value at `z = 1`).
    pub fn eval_one(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Multiply by `c·z^k`.
    pub fn scale_shift(&self, c: &Rat, k: i64) -> Self {
        if c.is_zero() {
            return LaurentPoly::default();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (e + k, v * c)).collect(),
        }
    }

    /// Coefficient sums over exponent classes modulo `k`.
    pub fn residue_sums(&self, k: u32) -> alloc::vec::Vec<Rat> {
        let mut out = alloc::vec![Rat::zero(); k as usize];
        for (e, c) in &self.terms {
            out[e.rem_euclid(k as i64) as usize] += c;
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})z^{e}")?;
        }
        Ok(())
    }
}

impl CoeffRing for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn one() -> Self {
        LaurentPoly::monomial(Rat::one(), 0)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Only single-term polynomials `c·z^m` are units.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(LaurentPoly::monomial(c.recip()?, -e))
    }

    fn lift(coeff: &Rat, _xexp: u32, zexp: i64) -> Option<Self> {
        Some(LaurentPoly::monomial(coeff.clone(), zexp))
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, &(ca * cb));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rat::from_int(c))))
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut a = lp(&[(-1, 1), (2, 3)]);
        a.add_assign_ref(&lp(&[(-1, -1)]));
        assert_eq!(a, lp(&[(2, 3)]));
        assert_eq!(a.min_exp(), Some(2));
        assert_eq!(a.max_exp(), Some(2));
    }

    #[test]
    fn product_and_units() {
        let a = lp(&[(-1, 1), (1, 1)]);
        let sq = a.mul_ref(&a);
        assert_eq!(sq, lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert!(a.inverse().is_none());
        let u = lp(&[(3, 2)]);
        assert_eq!(u.mul_ref(&u.inverse().unwrap()), LaurentPoly::one());
    }

    #[test]
    fn residue_sums_wrap_negative_exponents() {
        let p = lp(&[(-4, 1), (1, 2), (6, 5)]);
        assert_eq!(
            p.residue_sums(5),
            alloc::vec![
                Rat::zero(),
                Rat::from_int(8),
                Rat::zero(),
                Rat::zero(),
                Rat::zero()
            ]
        );
    }
}
