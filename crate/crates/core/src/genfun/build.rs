use alloc::format;

use super::{Family, NTDiffSpec, Param, Specialization};
use crate::ring::{CoeffRing, Dual, LaurentPoly, Rat};
use crate::series::{Monomial, QSeries, XExpression};
use crate::{Error, Result};

/// Numeric values for `x` and `z`. A `None` keeps the variable formal, in
/// which case the coefficient ring decides what it means.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vars {
    pub x: Option<Rat>,
    pub z: Option<Rat>,
}

impl Vars {
    pub fn formal() -> Self {
        Vars::default()
    }

    pub fn at(x: Rat, z: Rat) -> Self {
        Vars {
            x: Some(x),
            z: Some(z),
        }
    }

    /// `coeff · x^xexp · z^zexp` with numeric variables folded in.
    fn scalar<R: CoeffRing>(&self, coeff: Rat, xexp: u32, zexp: i64) -> Result<R> {
        let mut c = coeff;
        let (mut xe, mut ze) = (xexp, zexp);
        if let Some(x) = &self.x {
            c = &c * &x.pow(xe);
            xe = 0;
        }
        if let Some(z) = &self.z {
            let zp = z.pow(ze.unsigned_abs() as u32);
            c = if ze >= 0 {
                &c * &zp
            } else {
                let inv = zp
                    .recip()
                    .ok_or_else(|| Error::InvalidArgument("z must be nonzero".into()))?;
                &c * &inv
            };
            ze = 0;
        }
        R::lift(&c, xe, ze)
            .ok_or_else(|| Error::UnrepresentableMonomial(format!("{c}·x^{xe}·z^{ze}")))
    }
}

fn lift<R: CoeffRing>(c: i64, xexp: u32, zexp: i64) -> Result<R> {
    Vars::formal().scalar(Rat::from_int(c), xexp, zexp)
}

/// `(c·q^j + q^m) = q^shift · (alpha + beta·q^w)`.
struct Factor {
    shift: i64,
    alpha: Rat,
    beta: Rat,
    w: usize,
}

fn param_factor(p: &Param, m: i64) -> Factor {
    let (c, j) = (&p.coeff, p.qexp);
    if c.is_zero() {
        Factor {
            shift: m,
            alpha: Rat::one(),
            beta: Rat::zero(),
            w: 0,
        }
    } else if j < m {
        Factor {
            shift: j,
            alpha: c.clone(),
            beta: Rat::one(),
            w: (m - j) as usize,
        }
    } else if j > m {
        Factor {
            shift: m,
            alpha: Rat::one(),
            beta: c.clone(),
            w: (j - m) as usize,
        }
    } else {
        Factor {
            shift: m,
            alpha: c + &Rat::one(),
            beta: Rat::zero(),
            w: 0,
        }
    }
}

/// A summand stored as `q^val · s`, where `s` is known to the order that
/// keeps the product exact modulo `q^(order+1)`.
#[derive(Clone)]
struct Term<R> {
    order: usize,
    val: i64,
    s: QSeries<R>,
}

impl<R: CoeffRing> Term<R> {
    fn one(order: usize) -> Self {
        Term {
            order,
            val: 0,
            s: QSeries::one(order),
        }
    }

    /// Multiply by `q^k`; returns whether the term still reaches `q^order`.
    fn shift(&mut self, k: i64, n: i64) -> Result<bool> {
        if k < 0 {
            return Err(Error::NegativeValuation {
                n,
                valuation: self.val + k,
            });
        }
        self.val += k;
        if self.val > self.order as i64 {
            return Ok(false);
        }
        let keep = self.order - self.val as usize;
        if keep < self.s.order() {
            self.s = self.s.truncate(keep);
        }
        Ok(true)
    }

    fn apply(&mut self, f: &Factor) -> Result<()> {
        let alpha = R::from_rat(&f.alpha).ok_or(Error::NonUnitConstantTerm)?;
        let beta = R::from_rat(&f.beta).ok_or(Error::NonUnitConstantTerm)?;
        self.s = self.s.mul_binomial(&alpha, &beta, f.w);
        Ok(())
    }

    fn scale(&mut self, c: &R) {
        self.s = self.s.scale(c);
    }

    /// Multiply by `1 − a·q^w`.
    fn mul_one_minus(&mut self, a: &R, w: usize) {
        self.s = self.s.mul_binomial(&R::one(), &a.neg_ref(), w);
    }

    /// Divide by `1 − a·q^w`.
    fn div_one_minus(&mut self, a: &R, w: i64, n: i64) -> Result<()> {
        let w = usize::try_from(w).map_err(|_| Error::NegativeValuation { n, valuation: w })?;
        self.s = self.s.div_binomial(&R::one(), &a.neg_ref(), w)?;
        Ok(())
    }

    fn add_into(&self, acc: &mut QSeries<R>) {
        let v = self.val as usize;
        for (i, c) in self.s.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc.add_to_coeff(v + i, c);
            }
        }
    }
}

/// `𝒩(d, e, x, z; q^step)` truncated at `order`.
pub fn genovpair_series<R: CoeffRing>(
    spec: &Specialization,
    vars: &Vars,
    order: usize,
) -> Result<QSeries<R>> {
    let step = spec.step as i64;
    if step < 1 {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    let x: R = vars.scalar(Rat::one(), 1, 0)?;
    let z: R = vars.scalar(Rat::one(), 0, 1)?;
    let x_over_z: R = vars.scalar(Rat::one(), 1, -1)?;
    let mut acc = QSeries::one(order);
    let mut term = Term::one(order);
    for n in 1.. {
        let m = step * (n - 1);
        let fd = param_factor(&spec.d, m);
        let fe = param_factor(&spec.e, m);
        // valuation of the summand only grows from here on
        if !term.shift(fd.shift + fe.shift + step, n)? {
            break;
        }
        if n as usize > order + 2 {
            return Err(Error::InvalidArgument(
                "series does not converge formally".into(),
            ));
        }
        term.apply(&fd)?;
        term.apply(&fe)?;
        term.scale(&x);
        term.div_one_minus(&z, step * n, n)?;
        term.div_one_minus(&x_over_z, step * n, n)?;
        term.add_into(&mut acc);
    }
    Ok(acc)
}

/// Rank generating function of a family: coefficient of `z^m qⁿ` counts the
/// objects of weight `n` with statistic `m`.
pub fn rank_gf(family: Family, order: usize) -> Result<QSeries<LaurentPoly>> {
    let spec = family.specialization()?;
    let s: QSeries<LaurentPoly> = genovpair_series(&spec, &Vars::formal(), order)?;
    for (n, c) in s.coeffs().iter().enumerate() {
        if let (Some(lo), Some(hi)) = (c.min_exp(), c.max_exp()) {
            assert!(
                lo.unsigned_abs() as usize <= n && hi.unsigned_abs() as usize <= n,
                "rank exceeds weight at q^{n}"
            );
        }
    }
    Ok(s)
}

/// Runs `T_n · Q^(−n)` for `n = 1, 2, …` until it leaves the truncation, where
///
/// `T_n = (xQ;Q)_n ∏(d + Q^(k−1))(e + Q^(k−1)) Q^(n(n+3)/2) (−x)^n / ((Q;Q)_(n−1) (−xdQ, −xeQ; Q)_n)`.
fn for_each_base<R: CoeffRing>(
    spec: &Specialization,
    order: usize,
    mut f: impl FnMut(i64, &Term<R>) -> Result<()>,
) -> Result<()> {
    let step = spec.step as i64;
    let x: R = lift(1, 1, 0)?;
    let neg_x: R = lift(-1, 1, 0)?;
    let one = R::one();
    let mut base = Term::one(order);
    for n in 1.. {
        let m = step * (n - 1);
        let fd = param_factor(&spec.d, m);
        let fe = param_factor(&spec.e, m);
        // Q^(n(n+3)/2 − n) grows by Q^n per step
        if !base.shift(fd.shift + fe.shift + step * n, n)? {
            break;
        }
        if n as usize > order + 2 {
            return Err(Error::InvalidArgument(
                "series does not converge formally".into(),
            ));
        }
        base.apply(&fd)?;
        base.apply(&fe)?;
        base.mul_one_minus(&x, (step * n) as usize);
        base.scale(&neg_x);
        for p in [&spec.d, &spec.e] {
            if !p.is_zero() {
                // 1 + c·x·q^(j + step·n)
                let a: R = Vars::formal().scalar(-&p.coeff, 1, 0)?;
                base.div_one_minus(&a, p.qexp + step * n, n)?;
            }
        }
        if n >= 2 {
            base.div_one_minus(&one, step * (n - 1), n)?;
        }
        f(n, &base)?;
    }
    Ok(())
}

/// Multiply by `(−xQd, −xQe; Q)_∞ / (xQ, xQde; Q)_∞`.
fn apply_prefactor<R: CoeffRing>(s: QSeries<R>, spec: &Specialization) -> Result<QSeries<R>> {
    let step = spec.step;
    let mut out = s;
    for p in [&spec.d, &spec.e] {
        if !p.is_zero() {
            let a = Monomial::new(-&p.coeff, p.qexp + step as i64).with_x(1);
            out = out.mul_poch_inf(&a, step, 1)?;
        }
    }
    out = out.mul_poch_inf(&Monomial::q(step as i64).with_x(1), step, -1)?;
    if !spec.d.is_zero() && !spec.e.is_zero() {
        let a = Monomial::new(
            &spec.d.coeff * &spec.e.coeff,
            spec.d.qexp + spec.e.qexp + step as i64,
        )
        .with_x(1);
        out = out.mul_poch_inf(&a, step, -1)?;
    }
    Ok(out)
}

/// Right-hand side of the Watson-type expansion
///
/// `1 − P · Σ_{n≥1} T_n (Q^(−n)/(1 − zQ^n) + x z^(−1)/(1 − xQ^n/z))`.
pub fn thmain_rhs<R: CoeffRing>(spec: &Specialization, order: usize) -> Result<QSeries<R>> {
    let step = spec.step as i64;
    let z: R = lift(1, 0, 1)?;
    let x_over_z: R = lift(1, 1, -1)?;
    let mut acc = QSeries::zero(order);
    for_each_base(spec, order, |n, base| {
        let mut t1 = base.clone();
        t1.div_one_minus(&z, step * n, n)?;
        t1.add_into(&mut acc);
        let mut t2 = base.clone();
        if t2.shift(step * n, n)? {
            t2.scale(&x_over_z);
            t2.div_one_minus(&x_over_z, step * n, n)?;
            t2.add_into(&mut acc);
        }
        Ok(())
    })?;
    let tail = apply_prefactor(acc, spec)?;
    Ok(&QSeries::one(order) - &tail)
}

/// `P · Σ_{n≥1} T_n W_n` whose negated `x`-derivative at `x = 1` is the
/// rank-difference series, with
///
/// `W_n = (Q^((b−1)n) − Q^((k−b−1)n))/(1 − Q^(kn)) + (x^(k−b) Q^((k−1−b)n) − x^b Q^((b−1)n))/(1 − x^k Q^(kn))`.
pub fn rank_fraction_series<R: CoeffRing>(spec: &NTDiffSpec, order: usize) -> Result<QSeries<R>> {
    let sp = spec.family.specialization()?;
    let step = sp.step as i64;
    let (b, k) = (i64::from(spec.b), i64::from(spec.k));
    let one = R::one();
    let xk: R = lift(1, spec.k, 0)?;
    let mut acc = QSeries::zero(order);
    for_each_base(&sp, order, |n, base| {
        // base carries Q^(−n); W_n Q^n has exponents b·n and (k−b)·n
        let fractions = [
            ((1, 0u32, b * n), (-1, 0u32, (k - b) * n), &one),
            ((1, spec.k - spec.b, (k - b) * n), (-1, spec.b, b * n), &xk),
        ];
        for (p1, p2, den_x) in fractions {
            let (lo, hi) = if p1.2 <= p2.2 { (p1, p2) } else { (p2, p1) };
            let mut t = base.clone();
            if !t.shift(step * lo.2, n)? {
                continue;
            }
            let alpha: R = lift(lo.0, lo.1, 0)?;
            let beta: R = lift(hi.0, hi.1, 0)?;
            t.s =
                t.s.mul_binomial(&alpha, &beta, (step * (hi.2 - lo.2)) as usize);
            t.div_one_minus(den_x, step * k * n, n)?;
            t.add_into(&mut acc);
        }
        Ok(())
    })?;
    apply_prefactor(acc, &sp)
}

/// [`rank_fraction_series`] as an expression in `x`, for checking the
/// dual-number derivative against the formal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankFractionExpr(pub NTDiffSpec);

impl XExpression for RankFractionExpr {
    fn eval<R: CoeffRing>(&self, order: usize) -> Result<QSeries<R>> {
        rank_fraction_series(&self.0, order)
    }
}

/// The rank-difference series over an arbitrary inner ring (used for the
/// `Fp` fast path). The value part is identically zero.
pub fn nt_diff_in<S: CoeffRing>(spec: &NTDiffSpec, order: usize) -> Result<QSeries<S>> {
    let f: QSeries<Dual<S>> = rank_fraction_series(spec, order)?;
    debug_assert!(f.value_part().is_zero(), "W_n vanishes at x = 1");
    Ok(f.deriv_part().neg_ref())
}

/// `Σ_n (T(b, k, n) − T(k − b, k, n)) qⁿ` with `T` the part-weighted counter
/// of the family.
pub fn nt_diff_gf(spec: &NTDiffSpec, order: usize) -> Result<QSeries<Rat>> {
    nt_diff_in::<Rat>(spec, order)
}

/// Outcome of comparing two independently built series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    pub fn compare<R: CoeffRing>(lhs: &QSeries<R>, rhs: &QSeries<R>) -> Self {
        let order = lhs.order().min(rhs.order());
        let first_mismatch = (0..=order).find(|&i| lhs.coeff(i) != rhs.coeff(i));
        IdentityReport {
            order,
            first_mismatch,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Checks the specialized two-parameter series against its Watson-type
/// expansion, with `x = 1` or, when `dual` is set, `x = 1 + ε`.
pub fn thmain_check(family: Family, order: usize, dual: bool) -> Result<IdentityReport> {
    let spec = family.specialization()?;
    if dual {
        let lhs: QSeries<Dual<LaurentPoly>> = genovpair_series(&spec, &Vars::formal(), order)?;
        let rhs = thmain_rhs(&spec, order)?;
        Ok(IdentityReport::compare(&lhs, &rhs))
    } else {
        let lhs: QSeries<LaurentPoly> = genovpair_series(&spec, &Vars::formal(), order)?;
        let rhs = thmain_rhs(&spec, order)?;
        Ok(IdentityReport::compare(&lhs, &rhs))
    }
}
