//! Truncated formal power series in `q`.
//!
//! A [`QSeries`] of order `N` stores the coefficients of `q^0..=q^N` and is
//! only claimed to be correct modulo `q^(N+1)`. Binary operations return the
//! minimum order of their operands.

mod deriv;
mod lerch;
mod monomial;
mod product;

pub use deriv::{derivative_check, DerivativeReport, XExpression};
pub use lerch::LerchSum;
pub use monomial::Monomial;
pub use product::{bracket_infinite, pochhammer_finite, pochhammer_infinite};

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::ring::{CoeffRing, Dual, Rat};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries<R> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> QSeries<R> {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: alloc::vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·q^qexp`; vanishes if `qexp > order`.
    pub fn monomial(c: R, qexp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if qexp <= order {
            s.coeffs[qexp] = c;
        }
        s
    }

    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always knows at least `q^0`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Restrict to a smaller order. Panics if `order` exceeds the known order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {order}",
            self.order()
        );
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        if n <= self.order() {
            self.coeffs[n] = c;
        }
    }

    pub fn add_to_coeff(&mut self, n: usize, c: &R) {
        if n <= self.order() {
            self.coeffs[n].add_assign_ref(c);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiply by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiply by `q^k` and raise the order by `k`. Exact: the result is
    /// known modulo `q^(order + k + 1)`.
    pub fn shift_extend(&self, k: usize) -> Self {
        let mut coeffs = alloc::vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QSeries { coeffs }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        if rhs.order() < self.order() {
            self.coeffs.truncate(rhs.order() + 1);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign_ref(b);
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &Self) {
        if rhs.order() < self.order() {
            self.coeffs.truncate(rhs.order() + 1);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.sub_assign_ref(b);
        }
    }

    pub fn neg_ref(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(R::neg_ref).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].mul_add_assign(a, b);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Multiplicative inverse modulo `q^(order+1)`.
    pub fn invert(&self) -> Result<Self> {
        let n = self.order();
        let a0_inv = self.coeffs[0].inverse().ok_or(Error::NonUnitConstantTerm)?;
        let mut out = Self::zero(n);
        out.coeffs[0] = a0_inv.clone();
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc.mul_add_assign(&self.coeffs[k], &out.coeffs[m - k]);
                }
            }
            out.coeffs[m] = acc.mul_ref(&a0_inv).neg_ref();
        }
        Ok(out)
    }

    /// Substitute `q → q^k`. The coefficient of `q^n` moves to `q^(kn)`; the
    /// result is known modulo `q^(k(N+1))`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let new_order = k * (self.order() + 1) - 1;
        let mut out = Self::zero(new_order);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Multiply by `alpha + beta·q^w` in linear time.
    pub fn mul_binomial(&self, alpha: &R, beta: &R, w: usize) -> Self {
        let n = self.order();
        let mut out = if alpha.is_one() {
            self.clone()
        } else {
            self.scale(alpha)
        };
        if !beta.is_zero() {
            for i in (w..=n).rev() {
                let b = &self.coeffs[i - w];
                if !b.is_zero() {
                    out.coeffs[i].mul_add_assign(beta, b);
                }
            }
        }
        out
    }

    /// Divide by `alpha + beta·q^w` in linear time; `alpha` (or `alpha + beta`
    /// when `w = 0`) must be a unit.
    pub fn div_binomial(&self, alpha: &R, beta: &R, w: usize) -> Result<Self> {
        if w == 0 {
            let mut c = alpha.clone();
            c.add_assign_ref(beta);
            let inv = c.inverse().ok_or(Error::NonUnitConstantTerm)?;
            return Ok(self.scale(&inv));
        }
        let unit = alpha.is_one();
        let alpha_inv = if unit {
            R::one()
        } else {
            alpha.inverse().ok_or(Error::NonUnitConstantTerm)?
        };
        let minus_beta = beta.neg_ref();
        let mut out = self.clone();
        for i in 0..=self.order() {
            if i >= w {
                let (lo, hi) = out.coeffs.split_at_mut(i);
                let prev = &lo[i - w];
                if !prev.is_zero() {
                    hi[0].mul_add_assign(&minus_beta, prev);
                }
            }
            if !unit {
                out.coeffs[i] = out.coeffs[i].mul_ref(&alpha_inv);
            }
        }
        Ok(out)
    }

    /// `self · (1 − a)`.
    pub fn mul_one_minus(&self, a: &Monomial) -> Result<Self> {
        let w = a.nonneg_qexp()?;
        let beta: R = a.scalar::<R>()?.neg_ref();
        Ok(self.mul_binomial(&R::one(), &beta, w))
    }

    /// `self / (1 − a)`.
    pub fn div_one_minus(&self, a: &Monomial) -> Result<Self> {
        let w = a.nonneg_qexp()?;
        let beta: R = a.scalar::<R>()?.neg_ref();
        self.div_binomial(&R::one(), &beta, w)
    }

    /// Multiply by `(a; q^step)_∞^power`; a negative power divides.
    pub fn mul_poch_inf(&self, a: &Monomial, step: usize, power: i32) -> Result<Self> {
        let mut out = self.clone();
        if a.coeff.is_zero() || power == 0 {
            return Ok(out);
        }
        product::check_infinite_arg(a, step)?;
        let order = self.order() as i64;
        for _ in 0..power.unsigned_abs() {
            let mut k = 0;
            while a.qexp + (k * step) as i64 <= order {
                let f = a.times_q(k * step);
                out = if power > 0 {
                    out.mul_one_minus(&f)?
                } else {
                    out.div_one_minus(&f)?
                };
                k += 1;
            }
        }
        Ok(out)
    }

    /// Multiply by `[a; q^modulus]_∞^power = ((a, q^modulus/a; q^modulus)_∞)^power`.
    pub fn mul_bracket_inf(&self, a: &Monomial, modulus: usize, power: i32) -> Result<Self> {
        let partner = a.bracket_partner(modulus)?;
        self.mul_poch_inf(a, modulus, power)?
            .mul_poch_inf(&partner, modulus, power)
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> QSeries<S> {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Lift a rational series into another ring.
    pub fn lift_from(s: &QSeries<Rat>) -> Result<Self> {
        let coeffs = s
            .coeffs
            .iter()
            .map(|c| {
                R::from_rat(c).ok_or_else(|| Error::UnrepresentableMonomial(alloc::format!("{c}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries { coeffs })
    }
}

impl QSeries<Rat> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QSeries::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(Rat::to_integer).collect()
    }

    /// Coefficientwise residues modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Vec<u64>> {
        self.coeffs.iter().map(|c| c.rem_euclid(p)).collect()
    }

    /// Keep every `step`-th coefficient starting at `residue`, re-indexed so
    /// that the coefficient of `q^(step·n + residue)` lands on `q^n`.
    pub fn sift(&self, step: usize, residue: usize) -> Self {
        assert!(step >= 1 && residue < step);
        let coeffs: Vec<Rat> = self
            .coeffs
            .iter()
            .skip(residue)
            .step_by(step)
            .cloned()
            .collect();
        if coeffs.is_empty() {
            // order smaller than the residue: nothing known
            return QSeries::zero(0);
        }
        QSeries { coeffs }
    }
}

impl<R: CoeffRing> QSeries<Dual<R>> {
    pub fn value_part(&self) -> QSeries<R> {
        self.map(|d| d.value.clone())
    }

    pub fn deriv_part(&self) -> QSeries<R> {
        self.map(|d| d.deriv.clone())
    }
}

impl<R: CoeffRing> Add for &QSeries<R> {
    type Output = QSeries<R>;
    fn add(self, rhs: &QSeries<R>) -> QSeries<R> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<R: CoeffRing> Sub for &QSeries<R> {
    type Output = QSeries<R>;
    fn sub(self, rhs: &QSeries<R>) -> QSeries<R> {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<R: CoeffRing> Mul for &QSeries<R> {
    type Output = QSeries<R>;
    fn mul(self, rhs: &QSeries<R>) -> QSeries<R> {
        self.mul_ref(rhs)
    }
}

impl<R: CoeffRing> Neg for &QSeries<R> {
    type Output = QSeries<R>;
    fn neg(self) -> QSeries<R> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> QSeries<Rat> {
        QSeries::from_ints(c)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&s(&[1, 1, 0]) + &s(&[1, -1, 0]), s(&[2, 0, 0]));
        assert_eq!(&s(&[3, 4]) + &QSeries::zero(1), s(&[3, 4]));
    }

    #[test]
    fn add_takes_min_order() {
        assert_eq!((&s(&[1, 2, 3]) + &s(&[1])).order(), 0);
        assert_eq!((&s(&[1, 2, 3]) * &s(&[1, 1])).order(), 1);
    }

    #[test]
    fn overpartition_prefix_plus_negation_is_zero() {
        let a = s(&[1, 2, 4, 8, 14]);
        assert!((&a + &-&a).is_zero());
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = s(&[1, -1, 0, 0, 0, 0]);
        let geo = s(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(&one_minus_q * &geo, QSeries::one(5));
        assert_eq!(one_minus_q.invert().unwrap(), geo);
    }

    #[test]
    fn monomial_product() {
        let a = QSeries::monomial(Rat::one(), 2, 10);
        let b = QSeries::monomial(Rat::one(), 5, 10);
        assert_eq!(&a * &b, QSeries::monomial(Rat::one(), 7, 10));
        assert_eq!(
            (&a * &QSeries::monomial(Rat::one(), 9, 10)),
            QSeries::zero(10)
        );
    }

    #[test]
    fn invert_rejects_non_units() {
        assert_eq!(s(&[0, 1, 2]).invert(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn invert_is_an_involution() {
        let a = s(&[3, -1, 4, 1, -5, 9]);
        assert_eq!(a.invert().unwrap().invert().unwrap(), a);
    }

    #[test]
    fn binomial_division_matches_invert() {
        let a = s(&[2, 7, 1, 8, 2, 8, 1, 8]);
        let alpha = Rat::from_int(3);
        let beta = Rat::from_int(-2);
        let div = a.div_binomial(&alpha, &beta, 2).unwrap();
        let den = QSeries::one(7).mul_binomial(&alpha, &beta, 2);
        assert_eq!(&div * &den, a);
        assert_eq!(div, &a * &den.invert().unwrap());
    }

    #[test]
    fn dilate_moves_coefficients() {
        let a = s(&[1, 2, 3]);
        let d = a.dilate(3);
        assert_eq!(d.order(), 8);
        assert_eq!(d, s(&[1, 0, 0, 2, 0, 0, 3, 0, 0]));
    }

    #[test]
    fn sift_reindexes() {
        let a = s(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(a.sift(3, 1), s(&[1, 4, 7]));
        assert_eq!(a.sift(5, 2), s(&[2, 7]));
    }

    #[test]
    fn reduce_mod_handles_signs() {
        assert_eq!(s(&[-1, 5, 7]).reduce_mod(5).unwrap(), [4, 0, 2]);
    }
}
