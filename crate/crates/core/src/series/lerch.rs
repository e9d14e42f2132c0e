use alloc::vec::Vec;

use super::QSeries;
use crate::ring::{CoeffRing, Rat};
use crate::{Error, Result};

/// Bilateral (or one-sided) sum of Lerch type
///
/// `scale · Σ_n (±1)^n q^(quad·n² + lin·n + shift) · num(q^n) / (1 + s·q^(dq·n + dsh))^power`
///
/// where `num(y) = Σ c_j y^j`. Terms whose denominator exponent is negative are
/// rewritten as `s^power q^(power·m) / (1 + s q^m)^power` before expanding; a
/// vanishing exponent gives the constant `(1 + s)^-power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LerchSum {
    pub scale: Rat,
    pub alternating: bool,
    pub quad: i64,
    pub lin: i64,
    pub shift: i64,
    /// `(j, c_j)`; empty means `num = 1`.
    pub numerator: Vec<(i64, i64)>,
    pub denom_sign: i64,
    pub denom_qexp: i64,
    pub denom_shift: i64,
    /// 0 drops the denominator entirely.
    pub denom_power: u32,
    /// Smallest summation index, `None` for a bilateral sum.
    pub from: Option<i64>,
    /// Drop the `n = 0` term (used when it is a removable `0/0`).
    pub skip_zero: bool,
}

impl LerchSum {
    /// `Σ_n (±1)^n q^(quad n² + lin n) / (1 + s q^(dq n))` over all integers.
    pub fn new(alternating: bool, quad: i64, lin: i64, denom_sign: i64, denom_qexp: i64) -> Self {
        LerchSum {
            scale: Rat::one(),
            alternating,
            quad,
            lin,
            shift: 0,
            numerator: Vec::new(),
            denom_sign,
            denom_qexp,
            denom_shift: 0,
            denom_power: 1,
            from: None,
            skip_zero: false,
        }
    }

    /// A theta-type sum with no denominator.
    pub fn theta(alternating: bool, quad: i64, lin: i64) -> Self {
        LerchSum {
            denom_power: 0,
            ..LerchSum::new(alternating, quad, lin, 1, 0)
        }
    }

    pub fn scaled(mut self, scale: Rat) -> Self {
        self.scale = scale;
        self
    }

    pub fn shifted(mut self, shift: i64) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_numerator(mut self, numerator: Vec<(i64, i64)>) -> Self {
        self.numerator = numerator;
        self
    }

    pub fn with_denom_shift(mut self, denom_shift: i64) -> Self {
        self.denom_shift = denom_shift;
        self
    }

    pub fn with_denom_power(mut self, power: u32) -> Self {
        self.denom_power = power;
        self
    }

    pub fn starting_at(mut self, from: i64) -> Self {
        self.from = Some(from);
        self
    }

    pub fn without_zero_term(mut self) -> Self {
        self.skip_zero = true;
        self
    }

    /// Largest `|n|` that can contribute below `q^(order+1)`.
    fn index_bound(&self, order: usize) -> i64 {
        let jmax = self
            .numerator
            .iter()
            .map(|(j, _)| j.abs())
            .max()
            .unwrap_or(0);
        let k = self.lin.abs() + jmax;
        let mut m = 0i64;
        // the lower bound quad m² − k m + shift only grows once 2·quad·m ≥ k
        while !(2 * self.quad * m >= k && self.quad * m * m - k * m + self.shift > order as i64) {
            m += 1;
        }
        m
    }

    pub fn expand(&self, order: usize) -> Result<QSeries<Rat>> {
        if self.quad < 1 {
            return Err(Error::InvalidArgument(
                "Lerch sum needs a positive quadratic exponent".into(),
            ));
        }
        if self.denom_power > 0 && self.denom_sign.abs() != 1 {
            return Err(Error::InvalidArgument("denominator sign must be ±1".into()));
        }
        let bound = self.index_bound(order);
        let lo = self.from.map_or(-bound, |f| f.max(-bound));
        let one_num = [(0i64, 1i64)];
        let numerator: &[(i64, i64)] = if self.numerator.is_empty() {
            &one_num
        } else {
            &self.numerator
        };
        let mut out = alloc::vec![Rat::zero(); order + 1];
        let s = self.denom_sign;
        let p = self.denom_power;
        for n in lo..=bound {
            if n == 0 && self.skip_zero {
                continue;
            }
            let base = self.quad * n * n + self.lin * n + self.shift;
            let sign: i64 = if self.alternating && n.rem_euclid(2) == 1 {
                -1
            } else {
                1
            };
            // (constant factor, q-shift, geometric step) of the denominator
            let (den_coeff, den_shift, step) = if p == 0 {
                (Rat::one(), 0, None)
            } else {
                let b = self.denom_qexp * n + self.denom_shift;
                if b > 0 {
                    (Rat::one(), 0, Some(b))
                } else if b < 0 {
                    let sp = if s == -1 && p % 2 == 1 { -1 } else { 1 };
                    (Rat::from_int(sp), p as i64 * -b, Some(-b))
                } else if s == 1 {
                    (Rat::from_int(2).pow(p).recip().expect("nonzero"), 0, None)
                } else {
                    return Err(Error::ZeroDenominator { n });
                }
            };
            let lead = &(&self.scale * &den_coeff) * &Rat::from_int(sign);
            for &(j, c) in numerator {
                let e0 = base + j * n + den_shift;
                if e0 > order as i64 || c == 0 {
                    continue;
                }
                if e0 < 0 {
                    return Err(Error::NegativeValuation { n, valuation: e0 });
                }
                let first = &lead * &Rat::from_int(c);
                match step {
                    None => out[e0 as usize] += &first,
                    Some(m) => {
                        // 1/(1 + s y)^p = Σ_t C(p+t-1, t) (−s y)^t
                        let mut coeff = first;
                        let mut e = e0;
                        let mut t = 0i64;
                        while e <= order as i64 {
                            out[e as usize] += &coeff;
                            coeff = &(&coeff * &Rat::from_int(-s * (p as i64 + t)))
                                / &Rat::from_int(t + 1);
                            t += 1;
                            e += m;
                        }
                    }
                }
            }
        }
        Ok(QSeries::from_coeffs(out))
    }
}
