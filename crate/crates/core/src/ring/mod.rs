//! Exact coefficient rings for [`QSeries`](crate::series::QSeries).
//!
//! Every ring knows how to lift the scalar part `c·x^i·z^j` of a
//! [`Monomial`](crate::series::Monomial). The auxiliary variable `x` (which
//! marks the number of parts) is evaluated at `1` by [`Rat`] and
//! [`LaurentPoly`], at `1 + ε` by [`Dual`], and kept formal by [`XPoly`].

mod dual;
mod fp;
mod laurent;
mod rat;
mod xpoly;

pub use dual::Dual;
pub use fp::Fp;
pub use laurent::LaurentPoly;
pub use rat::Rat;
pub use xpoly::XPoly;

use core::fmt::Debug;

pub trait CoeffRing: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// Lift `coeff · x^xexp · z^zexp`, or `None` when the ring has no room
    /// for the requested variables (e.g. a `z` power in [`Rat`]).
    fn lift(coeff: &Rat, xexp: u32, zexp: i64) -> Option<Self>;

    fn from_rat(r: &Rat) -> Option<Self> {
        Self::lift(r, 0, 0)
    }

    /// `self += a * b`
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}
