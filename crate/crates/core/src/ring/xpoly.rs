use alloc::vec::Vec;

use super::{CoeffRing, Rat};

/// Polynomial in the part-counting variable `x`, kept fully formal.
///
/// Used as the independent route when checking dual-number derivatives: a
/// series evaluated over `XPoly` can be differentiated coefficientwise and
/// then evaluated at `x = 1`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct XPoly {
    // coeffs[i] is the coefficient of x^i; no trailing zeros
    coeffs: Vec<Rat>,
}

impl XPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> XPoly {
        XPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from_int(i as i64))
                .collect(),
        )
    }
}

impl CoeffRing for XPoly {
    fn zero() -> Self {
        XPoly::default()
    }

    fn one() -> Self {
        XPoly {
            coeffs: alloc::vec![Rat::one()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = XPoly::from_coeffs(core::mem::take(&mut self.coeffs));
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.add_assign_ref(&rhs.neg_ref());
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::default();
        }
        let mut out = alloc::vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].mul_add_assign(a, b);
            }
        }
        XPoly::from_coeffs(out)
    }

    fn neg_ref(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        Some(XPoly {
            coeffs: alloc::vec![self.coeffs[0].recip()?],
        })
    }

    fn lift(coeff: &Rat, xexp: u32, zexp: i64) -> Option<Self> {
        if zexp != 0 {
            return None;
        }
        let mut coeffs = alloc::vec![Rat::zero(); xexp as usize + 1];
        coeffs[xexp as usize] = coeff.clone();
        Some(XPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_square() {
        let x = XPoly::lift(&Rat::one(), 1, 0).unwrap();
        let sq = x.mul_ref(&x);
        assert_eq!(sq.derivative().eval(&Rat::one()), Rat::from_int(2));
    }

    #[test]
    fn no_z_powers() {
        assert!(XPoly::lift(&Rat::one(), 0, 1).is_none());
    }
}
