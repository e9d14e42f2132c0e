use alloc::format;

use super::{Monomial, QSeries};
use crate::ring::CoeffRing;
use crate::{Error, Result};

pub(super) fn check_infinite_arg(a: &Monomial, step: usize) -> Result<()> {
    if step == 0 {
        return Err(Error::DivergentProduct(format!("({a}; q^0)_inf")));
    }
    if a.qexp < 0 {
        return Err(Error::DivergentProduct(format!(
            "({a}; q^{step})_inf has factors with negative q-degree"
        )));
    }
    Ok(())
}

/// `(a; q^step)_n = ∏_{k=0}^{n-1} (1 − a·q^(k·step))`.
pub fn pochhammer_finite<R: CoeffRing>(
    a: &Monomial,
    n: usize,
    step: usize,
    order: usize,
) -> Result<QSeries<R>> {
    let mut out = QSeries::one(order);
    if a.is_zero() {
        return Ok(out);
    }
    for k in 0..n {
        let f = a.times_q(k * step);
        if f.qexp < 0 {
            return Err(Error::NegativeValuation {
                n: k as i64,
                valuation: f.qexp,
            });
        }
        if f.qexp as usize > order {
            // every later factor is 1 modulo q^(order+1)
            if step > 0 {
                break;
            }
            continue;
        }
        out = out.mul_one_minus(&f)?;
    }
    Ok(out)
}

/// `(a; q^step)_∞`. A zero argument gives 1.
pub fn pochhammer_infinite<R: CoeffRing>(
    a: &Monomial,
    step: usize,
    order: usize,
) -> Result<QSeries<R>> {
    QSeries::one(order).mul_poch_inf(a, step, 1)
}

/// `[a; q^modulus]_∞ = (a; q^modulus)_∞ (q^modulus/a; q^modulus)_∞`.
pub fn bracket_infinite<R: CoeffRing>(
    a: &Monomial,
    modulus: usize,
    order: usize,
) -> Result<QSeries<R>> {
    QSeries::one(order).mul_bracket_inf(a, modulus, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rat;

    #[test]
    fn euler_function_prefix() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - ...
        let e: QSeries<Rat> = pochhammer_infinite(&Monomial::q(1), 1, 15).unwrap();
        assert_eq!(
            e,
            QSeries::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1])
        );
    }

    #[test]
    fn partition_numbers_from_division() {
        let p = QSeries::<Rat>::one(10)
            .mul_poch_inf(&Monomial::q(1), 1, -1)
            .unwrap();
        assert_eq!(
            p,
            QSeries::from_ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])
        );
    }

    #[test]
    fn finite_reaches_infinite() {
        let a = Monomial::new(Rat::from_int(-1), 1);
        let fin: QSeries<Rat> = pochhammer_finite(&a, 20, 1, 12).unwrap();
        let inf: QSeries<Rat> = pochhammer_infinite(&a, 1, 12).unwrap();
        assert_eq!(fin, inf);
    }

    #[test]
    fn negative_degree_rejected() {
        let r: Result<QSeries<Rat>> = pochhammer_infinite(&Monomial::q(-1), 1, 5);
        assert!(matches!(r, Err(Error::DivergentProduct(_))));
        let r: Result<QSeries<Rat>> = pochhammer_infinite(&Monomial::q(1), 0, 5);
        assert!(matches!(r, Err(Error::DivergentProduct(_))));
    }

    #[test]
    fn jacobi_triple_product_at_minus_one() {
        // [q; q^2]_inf (q^2;q^2)_inf = sum (-1)^n q^(n^2)
        let b: QSeries<Rat> = bracket_infinite(&Monomial::q(1), 2, 20).unwrap();
        let lhs = b.mul_poch_inf(&Monomial::q(2), 2, 1).unwrap();
        let mut rhs = QSeries::<Rat>::zero(20);
        for n in -5i64..=5 {
            let e = (n * n) as usize;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            rhs.add_to_coeff(e, &Rat::from_int(sign));
        }
        assert_eq!(lhs, rhs);
    }
}
