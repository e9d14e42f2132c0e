use alloc::string::String;
use alloc::vec::Vec;

use super::{nt_diff_gf, Family, NTDiffSpec};
use crate::ring::Rat;
use crate::series::{LerchSum, Monomial, QSeries};
use crate::{Error, Result};

/// Identifiers accepted by [`closed_form`], besides `nt-diff-<family>-<b>-<k>`.
pub const FORM_IDS: [&str; 29] = [
    "partition-gf",
    "overpartition-gf",
    "pair-gf",
    "distinct-odd-gf",
    "conm2ovmod51",
    "conm2ovmod52",
    "conm2mod51",
    "conm2mod52",
    "thm2-ov",
    "thm2-ovm2",
    "dis1-rhs",
    "dis2-lhs",
    "dis2-rhs",
    "dis2-rhs-alt",
    "dis3-lhs",
    "dis3-mid",
    "dis3-rhs",
    "ovs131",
    "ovs131-onesided",
    "ovs132",
    "m2s131",
    "m2s131-onesided",
    "m2s132",
    "lemma42-lhs",
    "lemma42-lhs-square",
    "lemma42-rhs",
    "id7125-rhs",
    "id7135-rhs",
    "idcr54-rhs",
];

pub fn form_description(id: &str) -> Option<String> {
    let s = match id {
        "partition-gf" => "1/(q;q)_∞",
        "overpartition-gf" | "dis2-lhs" => "(-q;q)_∞/(q;q)_∞",
        "pair-gf" => "(-q;q)_∞²/(q;q)_∞²",
        "distinct-odd-gf" => "(-q;q²)_∞/(q²;q²)_∞",
        "conm2ovmod51" => {
            "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+2n) (q^2n-1)³(q^4n-1)(1+2q^2n+4q^4n+2q^6n+q^8n) / ((1+q^2n)(1-q^10n)²)"
        }
        "conm2ovmod52" => {
            "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+2n) (q^2n-1)³(q^4n-1)(2q^2n+q^4n+2q^6n) / ((1+q^2n)(1-q^10n)²)"
        }
        "conm2mod51" => {
            "(-q;q²)_∞/(q²;q²)_∞ Σ_{n≥1} (-1)^n q^(2n²+n) (q^2n-1)³(q^4n-1)(1+2q^2n+4q^4n+2q^6n+q^8n) / (1-q^10n)²"
        }
        "conm2mod52" => {
            "(-q;q²)_∞/(q²;q²)_∞ Σ_{n≥1} (-1)^n q^(2n²+n) (q^2n-1)³(q^4n-1)(2q^2n+q^4n+2q^6n) / (1-q^10n)²"
        }
        "thm2-ov" => "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+n) (q^n-1)⁴ / (1-q^3n)²",
        "thm2-ovm2" => "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+2n) (q^2n-1)⁴ / (1-q^6n)²",
        "dis1-rhs" => "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+n) (1+q^n) / (1+q^3n)",
        "dis2-rhs" => "(q^18;q^18)³ / ([q³;q^18]⁸ (q⁶;q⁶)⁴ [q⁹;q^18]) · (1 + 2qr + 4q²r²), r = [q³;q^18]/[q⁹;q^18]",
        "dis2-rhs-alt" => "same prefactor with r = (-q⁹;q⁹)²/[-q³;q⁹]",
        "dis3-lhs" => "Σ_{n≥1} (-1)^n q^(n²+n) (1+q^n) / (1+q^3n)",
        "dis3-mid" => "-1/2 + Σ_{n∈Z} (-1)^n q^(n²+n) / (1+q^3n)",
        "dis3-rhs" => {
            "-1/2 + Σ (-1)^n q^(9n²+6n)/(1+q^9n) - Σ (-1)^n q^(9n²+12n+3)/(1+q^(9n+3)) + Σ (-1)^n q^(9n²+18n+8)/(1+q^(9n+6))"
        }
        "ovs131" => "2(-q)_∞/(q)_∞ (S(1) + 3S(3)), S(b) = Σ_{n≠0} (-1)^n q^(n²+2bn)/(1-q^10n)",
        "ovs131-onesided" => "2(-q)_∞/(q)_∞ Σ_{n≥1} (-1)^n q^(n²+2n) (1-q^2n)³ / (1-q^10n)",
        "ovs132" => "2(-q)_∞/(q)_∞ (-S(1) - 3S(3)), S(b) = Σ_{n≠0} (-1)^n q^(n²+2bn)/(1-q^10n)",
        "m2s131" => "(-q;q²)_∞/(q²;q²)_∞ (S(1) - 2S(3)), S(b) = Σ_{n≠0} (-1)^n q^(2n²+bn)/(1-q^10n)",
        "m2s131-onesided" => "(-q;q²)_∞/(q²;q²)_∞ Σ_{n≥1} (-1)^n q^(2n²+n) (1-2q^2n+2q^6n-q^8n) / (1-q^10n)",
        "m2s132" => "(-q;q²)_∞/(q²;q²)_∞ (-S(1) + 2S(3)), S(b) = Σ_{n≠0} (-1)^n q^(2n²+bn)/(1-q^10n)",
        "lemma42-lhs" => "[q³;q⁹]³ (q⁹;q⁹)² / ([-q³;q⁹]³ (-q⁹;q⁹)²)",
        "lemma42-lhs-square" => "[q³;q⁹]³ (q⁹;q⁹)² / ([-q³;q⁹]² (-q⁹;q⁹)²)",
        "lemma42-rhs" => {
            "2 Σ (-1)^n q^(9n²+6n)/(1+q^9n) - 2 Σ (-1)^n q^(9n²+12n+3)/(1+q^(9n+3)) + 4(-q⁹;q⁹)²/[-q³;q⁹] Σ (-1)^n q^(9n²+18n+9)/(1+q^(9n+6))"
        }
        "id7125-rhs" | "id7125" => "-7 (q⁷;q⁷)³ (q³,q⁴;q⁷)_∞ / ((q,q⁶;q⁷)_∞ (q²,q⁵;q⁷)_∞²)",
        "id7135-rhs" | "id7135" => "-7 (q⁷;q⁷)³ (q³,q⁴;q⁷)_∞² / ((q,q⁶;q⁷)_∞ (q²,q⁵;q⁷)_∞³)",
        "idcr54-rhs" | "idcr54" => "-5 (q⁵;q⁵)⁴ / (q;q)",
        _ => {
            let spec = parse_nt_diff(id)?;
            return Some(alloc::format!(
                "Σ (T({b},{k},n) - T({kb},{k},n)) qⁿ for the part-weighted {f} counter",
                b = spec.b,
                k = spec.k,
                kb = spec.k - spec.b,
                f = spec.family
            ));
        }
    };
    Some(s.into())
}

fn parse_nt_diff(id: &str) -> Option<NTDiffSpec> {
    let rest = id.strip_prefix("nt-diff-")?;
    let mut it = rest.rsplitn(3, '-');
    let k = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    let family: Family = it.next()?.parse().ok()?;
    NTDiffSpec::new(family, b, k).ok()
}

/// `∏ (c·q^e; q^step)_∞^power` over the given factors.
fn poch(order: usize, factors: &[(i64, i64, usize, i32)]) -> Result<QSeries<Rat>> {
    let mut s = QSeries::one(order);
    for &(c, e, step, power) in factors {
        s = s.mul_poch_inf(&Monomial::new(Rat::from_int(c), e), step, power)?;
    }
    Ok(s)
}

/// `∏ [c·q^e; q^modulus]_∞^power` over the given factors.
fn brackets(s: QSeries<Rat>, factors: &[(i64, i64, usize, i32)]) -> Result<QSeries<Rat>> {
    let mut s = s;
    for &(c, e, modulus, power) in factors {
        s = s.mul_bracket_inf(&Monomial::new(Rat::from_int(c), e), modulus, power)?;
    }
    Ok(s)
}

fn ov_gf(order: usize) -> Result<QSeries<Rat>> {
    poch(order, &[(-1, 1, 1, 1), (1, 1, 1, -1)])
}

fn do_gf(order: usize) -> Result<QSeries<Rat>> {
    poch(order, &[(-1, 1, 2, 1), (1, 2, 2, -1)])
}

/// One summand `sign · q^val · poly(q) · ∏ (α + β q^w)^power`, where `poly`
/// has exponents `≥ 0` and every `α` is `±1`.
struct Summand {
    sign: i64,
    val: i64,
    poly: Vec<(i64, i64)>,
    factors: Vec<(i64, i64, i64, i32)>,
}

/// `Σ_{n≥1} f(n)`; stops once the valuation passes `order` for good, which
/// is guaranteed by the quadratic exponent `quad·n²` carried by `f`.
fn one_sided(order: usize, quad: i64, f: impl Fn(i64) -> Summand) -> Result<QSeries<Rat>> {
    let mut acc = QSeries::zero(order);
    let mut n = 1;
    while quad * n * n <= order as i64 + quad * n * 4 + 16 {
        let t = f(n);
        n += 1;
        if t.val < 0 {
            return Err(Error::NegativeValuation {
                n: n - 1,
                valuation: t.val,
            });
        }
        if t.val > order as i64 {
            continue;
        }
        let v = t.val as usize;
        let mut s = QSeries::<Rat>::one(order - v);
        for &(a, b, w, power) in &t.factors {
            let (a, b) = (Rat::from_int(a), Rat::from_int(b));
            for _ in 0..power.unsigned_abs() {
                s = if power > 0 {
                    s.mul_binomial(&a, &b, w as usize)
                } else {
                    s.div_binomial(&a, &b, w as usize)?
                };
            }
        }
        if !t.poly.is_empty() {
            let mut p = QSeries::zero(order - v);
            for &(e, c) in &t.poly {
                p.add_assign_ref(&s.shift(e as usize).scale(&Rat::from_int(c)));
            }
            s = p;
        }
        let sign = Rat::from_int(t.sign);
        for (i, c) in s.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc.add_to_coeff(v + i, &(c * &sign));
            }
        }
    }
    Ok(acc)
}

fn alt(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn conm2ov(order: usize, bracket: &[(i64, i64)], extra: i64) -> Result<QSeries<Rat>> {
    let sum = one_sided(order, 1, |n| Summand {
        sign: alt(n),
        val: n * n + (2 + extra) * n,
        poly: bracket.iter().map(|&(j, c)| (2 * n * j, c)).collect(),
        factors: alloc::vec![
            (-1, 1, 2 * n, 3),
            (-1, 1, 4 * n, 1),
            (1, 1, 2 * n, -1),
            (1, -1, 10 * n, -2)
        ],
    })?;
    Ok(ov_gf(order)?.mul_ref(&sum).scale(&Rat::from_int(2)))
}

fn conm2(order: usize, bracket: &[(i64, i64)], extra: i64) -> Result<QSeries<Rat>> {
    let sum = one_sided(order, 2, |n| Summand {
        sign: alt(n),
        val: 2 * n * n + (1 + extra) * n,
        poly: bracket.iter().map(|&(j, c)| (2 * n * j, c)).collect(),
        factors: alloc::vec![(-1, 1, 2 * n, 3), (-1, 1, 4 * n, 1), (1, -1, 10 * n, -2)],
    })?;
    Ok(do_gf(order)?.mul_ref(&sum))
}

const BRACKET_1: [(i64, i64); 5] = [(0, 1), (1, 2), (2, 4), (3, 2), (4, 1)];
// 2q^2n + q^4n + 2q^6n with the q^2n moved into the valuation
const BRACKET_2: [(i64, i64); 3] = [(0, 2), (1, 1), (2, 2)];

fn thm2(order: usize, lin: i64, w: i64) -> Result<QSeries<Rat>> {
    let sum = one_sided(order, 1, |n| Summand {
        sign: alt(n),
        val: n * n + lin * n,
        poly: Vec::new(),
        factors: alloc::vec![(-1, 1, lin * n, 4), (1, -1, w * n, -2)],
    })?;
    Ok(ov_gf(order)?.mul_ref(&sum).scale(&Rat::from_int(2)))
}

fn dis3_lhs(order: usize) -> Result<QSeries<Rat>> {
    one_sided(order, 1, |n| Summand {
        sign: alt(n),
        val: n * n + n,
        poly: Vec::new(),
        factors: alloc::vec![(1, 1, n, 1), (1, 1, 3 * n, -1)],
    })
}

/// The three nine-dissected Lerch sums `A`, `B` and `C` with `C`'s numerator
/// exponent `9n² + 18n + c_shift`.
fn nine_sums(order: usize, c_shift: i64) -> Result<[QSeries<Rat>; 3]> {
    let a = LerchSum::new(true, 9, 6, 1, 9).expand(order)?;
    let b = LerchSum::new(true, 9, 12, 1, 9)
        .shifted(3)
        .with_denom_shift(3)
        .expand(order)?;
    let c = LerchSum::new(true, 9, 18, 1, 9)
        .shifted(c_shift)
        .with_denom_shift(6)
        .expand(order)?;
    Ok([a, b, c])
}

fn minus_half(order: usize) -> QSeries<Rat> {
    QSeries::constant(-Rat::half(), order)
}

fn lemma42_lhs(order: usize, k: i32) -> Result<QSeries<Rat>> {
    let s = poch(order, &[(1, 9, 9, 2), (-1, 9, 9, -2)])?;
    brackets(s, &[(1, 3, 9, 3), (-1, 3, 9, -k)])
}

fn lemma42_rhs(order: usize) -> Result<QSeries<Rat>> {
    let [a, b, c] = nine_sums(order, 9)?;
    let pref = brackets(poch(order, &[(-1, 9, 9, 2)])?, &[(-1, 3, 9, -1)])?;
    let two = Rat::from_int(2);
    let mut out = a.scale(&two);
    out.sub_assign_ref(&b.scale(&two));
    out.add_assign_ref(&pref.mul_ref(&c).scale(&Rat::from_int(4)));
    Ok(out)
}

fn dis2(order: usize, r: QSeries<Rat>) -> Result<QSeries<Rat>> {
    let pre = brackets(
        poch(order, &[(1, 18, 18, 3), (1, 6, 6, -4)])?,
        &[(1, 3, 18, -8), (1, 9, 18, -1)],
    )?;
    let mut v = QSeries::one(order);
    v.add_assign_ref(&r.shift(1).scale(&Rat::from_int(2)));
    v.add_assign_ref(&r.mul_ref(&r).shift(2).scale(&Rat::from_int(4)));
    Ok(pre.mul_ref(&v))
}

/// `S(b) = Σ_{n≠0} (-1)^n q^(quad·n² + lin·n)/(1 − q^(10n))`.
fn s_sum(order: usize, quad: i64, lin: i64) -> Result<QSeries<Rat>> {
    LerchSum::new(true, quad, lin, -1, 10)
        .without_zero_term()
        .expand(order)
}

fn combine(terms: &[(i64, &QSeries<Rat>)]) -> QSeries<Rat> {
    let order = terms.iter().map(|t| t.1.order()).min().unwrap_or(0);
    let mut out = QSeries::zero(order);
    for (c, s) in terms {
        out.add_assign_ref(&s.scale(&Rat::from_int(*c)));
    }
    out
}

fn seven(order: usize, a: i32, b: i32) -> Result<QSeries<Rat>> {
    let s = poch(order, &[(1, 7, 7, 3)])?;
    Ok(brackets(s, &[(1, 3, 7, a), (1, 1, 7, -1), (1, 2, 7, -b)])?.scale(&Rat::from_int(-7)))
}

/// Conjectured product sides, accepted with or without the `-rhs` suffix.
pub const CONJECTURE_IDS: [&str; 3] = ["id7125", "id7135", "idcr54"];

pub fn conjecture_rhs(id: &str, order: usize) -> Result<QSeries<Rat>> {
    let base = id.strip_suffix("-rhs").unwrap_or(id);
    if !CONJECTURE_IDS.contains(&base) {
        return Err(Error::UnknownFormId(id.into()));
    }
    closed_form(&alloc::format!("{base}-rhs"), order)
}

/// Exact expansion of a named series, truncated at `q^order`.
pub fn closed_form(id: &str, order: usize) -> Result<QSeries<Rat>> {
    let two = Rat::from_int(2);
    match id {
        "partition-gf" => poch(order, &[(1, 1, 1, -1)]),
        "overpartition-gf" | "dis2-lhs" => ov_gf(order),
        "pair-gf" => poch(order, &[(-1, 1, 1, 2), (1, 1, 1, -2)]),
        "distinct-odd-gf" => do_gf(order),
        "conm2ovmod51" => conm2ov(order, &BRACKET_1, 0),
        "conm2ovmod52" => conm2ov(order, &BRACKET_2, 2),
        "conm2mod51" => conm2(order, &BRACKET_1, 0),
        "conm2mod52" => conm2(order, &BRACKET_2, 2),
        "thm2-ov" => thm2(order, 1, 3),
        "thm2-ovm2" => thm2(order, 2, 6),
        "dis1-rhs" => Ok(ov_gf(order)?.mul_ref(&dis3_lhs(order)?).scale(&two)),
        "dis2-rhs" => {
            let r = brackets(QSeries::one(order), &[(1, 3, 18, 1), (1, 9, 18, -1)])?;
            dis2(order, r)
        }
        "dis2-rhs-alt" => {
            let r = brackets(poch(order, &[(-1, 9, 9, 2)])?, &[(-1, 3, 9, -1)])?;
            dis2(order, r)
        }
        "dis3-lhs" => dis3_lhs(order),
        "dis3-mid" => {
            let mut s = LerchSum::new(true, 1, 1, 1, 3).expand(order)?;
            s.add_assign_ref(&minus_half(order));
            Ok(s)
        }
        "dis3-rhs" => {
            let [a, b, c] = nine_sums(order, 8)?;
            Ok(&combine(&[(1, &a), (-1, &b), (1, &c)]) + &minus_half(order))
        }
        "ovs131" | "ovs132" => {
            let (s1, s3) = (s_sum(order, 1, 2)?, s_sum(order, 1, 6)?);
            let sign = if id == "ovs131" { 1 } else { -1 };
            Ok(ov_gf(order)?
                .mul_ref(&combine(&[(sign, &s1), (3 * sign, &s3)]))
                .scale(&two))
        }
        "ovs131-onesided" => {
            let sum = one_sided(order, 1, |n| Summand {
                sign: alt(n),
                val: n * n + 2 * n,
                poly: Vec::new(),
                factors: alloc::vec![(1, -1, 2 * n, 3), (1, -1, 10 * n, -1)],
            })?;
            Ok(ov_gf(order)?.mul_ref(&sum).scale(&two))
        }
        "m2s131" | "m2s132" => {
            let (s1, s3) = (s_sum(order, 2, 1)?, s_sum(order, 2, 3)?);
            let sign = if id == "m2s131" { 1 } else { -1 };
            Ok(do_gf(order)?.mul_ref(&combine(&[(sign, &s1), (-2 * sign, &s3)])))
        }
        "m2s131-onesided" => {
            let sum = one_sided(order, 2, |n| Summand {
                sign: alt(n),
                val: 2 * n * n + n,
                poly: alloc::vec![(0, 1), (2 * n, -2), (6 * n, 2), (8 * n, -1)],
                factors: alloc::vec![(1, -1, 10 * n, -1)],
            })?;
            Ok(do_gf(order)?.mul_ref(&sum))
        }
        "lemma42-lhs" => lemma42_lhs(order, 3),
        "lemma42-lhs-square" => lemma42_lhs(order, 2),
        "lemma42-rhs" => lemma42_rhs(order),
        "id7125-rhs" => seven(order, 1, 2),
        "id7135-rhs" => seven(order, 2, 3),
        "idcr54-rhs" => Ok(poch(order, &[(1, 5, 5, 4), (1, 1, 1, -1)])?.scale(&Rat::from_int(-5))),
        _ => match parse_nt_diff(id) {
            Some(spec) => nt_diff_gf(&spec, order),
            None => Err(Error::UnknownFormId(id.into())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_complete() {
        for id in FORM_IDS {
            assert!(form_description(id).is_some(), "{id}");
            closed_form(id, 12).unwrap();
        }
        assert!(matches!(
            closed_form("nope", 5),
            Err(Error::UnknownFormId(_))
        ));
        assert!(closed_form("nt-diff-ovm2-2-5", 5).is_ok());
        assert!(closed_form("nt-diff-ovm2-5-5", 5).is_err());
    }

    #[test]
    fn conjecture_leading_terms() {
        assert_eq!(
            conjecture_rhs("idcr54", 0).unwrap().coeff(0),
            &Rat::from_int(-5)
        );
        assert_eq!(
            conjecture_rhs("id7125-rhs", 0).unwrap().coeff(0),
            &Rat::from_int(-7)
        );
        let s = conjecture_rhs("id7135", 50).unwrap();
        assert!(s.reduce_mod(7).unwrap().iter().all(|&c| c == 0));
        assert!(conjecture_rhs("dis2-rhs", 5).is_err());
    }

    #[test]
    fn overpartition_numbers() {
        let s = closed_form("overpartition-gf", 8).unwrap();
        assert_eq!(s, QSeries::from_ints(&[1, 2, 4, 8, 14, 24, 40, 64, 100]));
    }

    #[test]
    fn one_sided_agrees_with_bilateral() {
        let o = 60;
        assert_eq!(
            closed_form("ovs131", o).unwrap(),
            closed_form("ovs131-onesided", o).unwrap()
        );
        assert_eq!(
            closed_form("m2s131", o).unwrap(),
            closed_form("m2s131-onesided", o).unwrap()
        );
        assert_eq!(
            closed_form("dis3-lhs", o).unwrap(),
            closed_form("dis3-mid", o).unwrap()
        );
    }
}
