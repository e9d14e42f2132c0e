use super::{CoeffRing, Rat};

/// First-order jet `value + deriv·ε` with `ε² = 0`.
///
/// Lifting `c·x^i` produces `c + c·i·ε`, i.e. the expansion of `c·x^i` at
/// `x = 1 + ε`. The inner ring always sees `x = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dual<R> {
    pub value: R,
    pub deriv: R,
}

impl<R: CoeffRing> Dual<R> {
    pub fn new(value: R, deriv: R) -> Self {
        Dual { value, deriv }
    }

    pub fn constant(value: R) -> Self {
        Dual {
            value,
            deriv: R::zero(),
        }
    }
}

impl<R: CoeffRing> CoeffRing for Dual<R> {
    fn zero() -> Self {
        Dual::constant(R::zero())
    }

    fn one() -> Self {
        Dual::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        self.value.add_assign_ref(&rhs.value);
        self.deriv.add_assign_ref(&rhs.deriv);
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.value.sub_assign_ref(&rhs.value);
        self.deriv.sub_assign_ref(&rhs.deriv);
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let value = self.value.mul_ref(&rhs.value);
        let mut deriv = self.value.mul_ref(&rhs.deriv);
        deriv.mul_add_assign(&self.deriv, &rhs.value);
        Dual { value, deriv }
    }

    fn neg_ref(&self) -> Self {
        Dual {
            value: self.value.neg_ref(),
            deriv: self.deriv.neg_ref(),
        }
    }

    /// `(a + bε)⁻¹ = a⁻¹ − b·a⁻²·ε`
    fn inverse(&self) -> Option<Self> {
        let inv = self.value.inverse()?;
        let deriv = inv.mul_ref(&inv).mul_ref(&self.deriv).neg_ref();
        Some(Dual { value: inv, deriv })
    }

    fn lift(coeff: &Rat, xexp: u32, zexp: i64) -> Option<Self> {
        let value = R::lift(coeff, 0, zexp)?;
        let deriv = R::lift(&(coeff * &Rat::from_int(xexp as i64)), 0, zexp)?;
        Some(Dual { value, deriv })
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        self.value.mul_add_assign(&a.value, &b.value);
        self.deriv.mul_add_assign(&a.value, &b.deriv);
        self.deriv.mul_add_assign(&a.deriv, &b.value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = Dual<Rat>;

    fn d(v: i64, e: i64) -> D {
        Dual::new(Rat::from_int(v), Rat::from_int(e))
    }

    #[test]
    fn product_rule() {
        // (2 + 3ε)(5 + 7ε) = 10 + (14 + 15)ε
        assert_eq!(d(2, 3).mul_ref(&d(5, 7)), d(10, 29));
    }

    #[test]
    fn generator_lift() {
        assert_eq!(D::lift(&Rat::one(), 1, 0).unwrap(), d(1, 1));
        assert_eq!(D::lift(&Rat::from_int(3), 0, 0).unwrap(), d(3, 0));
        // x^2 at 1 + ε
        assert_eq!(D::lift(&Rat::one(), 2, 0).unwrap(), d(1, 2));
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = d(4, -6);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul_ref(&inv), D::one());
        assert!(d(0, 1).inverse().is_none());
    }
}
