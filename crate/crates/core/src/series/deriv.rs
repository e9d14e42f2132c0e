use super::QSeries;
use crate::ring::{CoeffRing, Dual, Rat, XPoly};
use crate::Result;

/// A series-valued expression in `x` that can be evaluated over any
/// coefficient ring, so that the same code runs with `x = 1 + ε` and with
/// `x` formal.
pub trait XExpression {
    fn eval<R: CoeffRing>(&self, order: usize) -> Result<QSeries<R>>;
}

/// Agreement of the dual-number route with the formal route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeReport {
    pub order: usize,
    /// Largest `x`-degree seen in the formal evaluation.
    pub degree: usize,
    /// First `q`-power where value or derivative disagree.
    pub first_mismatch: Option<usize>,
}

impl DerivativeReport {
    pub fn is_pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Evaluates `expr` over `Dual<Rat>` and over `XPoly`, then compares the
/// `ε`-part with `d/dx` of the polynomial at `x = 1` (and the values).
pub fn derivative_check<E: XExpression>(expr: &E, order: usize) -> Result<DerivativeReport> {
    let dual: QSeries<Dual<Rat>> = expr.eval(order)?;
    let poly: QSeries<XPoly> = expr.eval(order)?;
    let one = Rat::one();
    let order = dual.order().min(poly.order());
    let degree = poly
        .coeffs()
        .iter()
        .filter_map(XPoly::degree)
        .max()
        .unwrap_or(0);
    let first_mismatch = (0..=order).find(|&i| {
        let (d, p) = (dual.coeff(i), poly.coeff(i));
        d.value != p.eval(&one) || d.deriv != p.derivative().eval(&one)
    });
    Ok(DerivativeReport {
        order,
        degree,
        first_mismatch,
    })
}
