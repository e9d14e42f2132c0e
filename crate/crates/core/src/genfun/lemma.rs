use super::{closed_form, IdentityReport};
use crate::ring::Rat;
use crate::series::QSeries;
use crate::Result;

/// Outcome of the nine-dissection product identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// Product with `[-q³;q⁹]³` in the denominator against the Lerch side.
    pub identity: IdentityReport,
    /// Whether the variant with `[-q³;q⁹]²` also matches.
    pub square_variant_matches: bool,
    /// Whether the Lerch side has integer coefficients even though its
    /// individual sums carry halves from the `n = 0` terms.
    pub rhs_integral: bool,
    pub first_sum_integral: bool,
}

impl LemmaReport {
    pub fn is_pass(&self) -> bool {
        self.identity.is_pass() && self.rhs_integral
    }
}

pub fn lemma42_check(order: usize) -> Result<LemmaReport> {
    let lhs = closed_form("lemma42-lhs", order)?;
    let square = closed_form("lemma42-lhs-square", order)?;
    let rhs = closed_form("lemma42-rhs", order)?;
    let first: QSeries<Rat> = crate::series::LerchSum::new(true, 9, 6, 1, 9).expand(order)?;
    Ok(LemmaReport {
        identity: IdentityReport::compare(&lhs, &rhs),
        square_variant_matches: square == rhs,
        rhs_integral: rhs.is_integral(),
        first_sum_integral: first.is_integral(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_holds_square_does_not() {
        let r = lemma42_check(80).unwrap();
        assert!(r.is_pass());
        assert!(!r.square_variant_matches);
        assert!(!r.first_sum_integral);
    }
}
