use alloc::format;
use core::fmt;

use crate::ring::{CoeffRing, Rat};
use crate::{Error, Result};

/// `coeff · x^xexp · q^qexp · z^zexp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub coeff: Rat,
    pub qexp: i64,
    pub zexp: i64,
    pub xexp: u32,
}

impl Monomial {
    pub fn new(coeff: Rat, qexp: i64) -> Self {
        Monomial {
            coeff,
            qexp,
            zexp: 0,
            xexp: 0,
        }
    }

    /// `q^qexp`
    pub fn q(qexp: i64) -> Self {
        Monomial::new(Rat::one(), qexp)
    }

    pub fn constant(coeff: Rat) -> Self {
        Monomial::new(coeff, 0)
    }

    pub fn with_z(mut self, zexp: i64) -> Self {
        self.zexp = zexp;
        self
    }

    pub fn with_x(mut self, xexp: u32) -> Self {
        self.xexp = xexp;
        self
    }

    pub fn neg(&self) -> Self {
        Monomial {
            coeff: -&self.coeff,
            ..self.clone()
        }
    }

    pub fn mul(&self, rhs: &Monomial) -> Self {
        Monomial {
            coeff: &self.coeff * &rhs.coeff,
            qexp: self.qexp + rhs.qexp,
            zexp: self.zexp + rhs.zexp,
            xexp: self.xexp + rhs.xexp,
        }
    }

    pub fn times_q(&self, k: usize) -> Self {
        Monomial {
            qexp: self.qexp + k as i64,
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The part of the monomial that lives in the coefficient ring.
    pub fn scalar<R: CoeffRing>(&self) -> Result<R> {
        R::lift(&self.coeff, self.xexp, self.zexp)
            .ok_or_else(|| Error::UnrepresentableMonomial(format!("{self}")))
    }

    pub(crate) fn nonneg_qexp(&self) -> Result<usize> {
        usize::try_from(self.qexp).map_err(|_| Error::NegativeValuation {
            n: 0,
            valuation: self.qexp,
        })
    }

    /// `q^modulus / self`, the second argument of a theta bracket.
    pub(crate) fn bracket_partner(&self, modulus: usize) -> Result<Monomial> {
        if self.xexp != 0 {
            return Err(Error::UnrepresentableMonomial(format!("1/({self})")));
        }
        let coeff = self
            .coeff
            .recip()
            .ok_or_else(|| Error::InvalidArgument("bracket argument is zero".into()))?;
        Ok(Monomial {
            coeff,
            qexp: modulus as i64 - self.qexp,
            zexp: -self.zexp,
            xexp: 0,
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.xexp != 0 {
            write!(f, "·x^{}", self.xexp)?;
        }
        if self.qexp != 0 {
            write!(f, "·q^{}", self.qexp)?;
        }
        if self.zexp != 0 {
            write!(f, "·z^{}", self.zexp)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Dual, LaurentPoly};

    #[test]
    fn scalar_lifts() {
        let m = Monomial::new(Rat::from_int(3), 2).with_z(-1);
        assert_eq!(
            m.scalar::<LaurentPoly>().unwrap(),
            LaurentPoly::monomial(Rat::from_int(3), -1)
        );
        assert!(m.scalar::<Rat>().is_err());
        let x = Monomial::q(1).with_x(2);
        assert_eq!(
            x.scalar::<Dual<Rat>>().unwrap(),
            Dual::new(Rat::one(), Rat::from_int(2))
        );
    }

    #[test]
    fn bracket_partner() {
        let m = Monomial::new(Rat::from_int(-1), 3);
        let p = m.bracket_partner(9).unwrap();
        assert_eq!(p, Monomial::new(Rat::from_int(-1), 6));
        assert!(Monomial::q(1).with_x(1).bracket_partner(2).is_err());
    }
}
