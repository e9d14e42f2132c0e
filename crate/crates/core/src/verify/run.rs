use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{
    CheckKind, CheckReport, CheckSpec, Context, Engines, Job, Progression, SeriesKey, Side, Status,
    Term, Witness,
};
use crate::combinatorics::{pair_profile, Counter, EnumBounds, Weight};
use crate::genfun::{
    genovpair_series, rank_gf, thmain_check, Family, NTDiffSpec, Param, Specialization, Vars,
};
use crate::ring::{CoeffRing, LaurentPoly, Rat};
use crate::series::QSeries;
use crate::{Error, Result};

/// Which engine to prefer for checks that support both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EngineChoice {
    #[default]
    Auto,
    Series,
    Enum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Overrides every spec's series order.
    pub order: Option<usize>,
    /// Overrides every spec's enumeration bound.
    pub bound: Option<usize>,
    pub enum_bounds: EnumBounds,
    pub engine: EngineChoice,
    /// Compute congruences over `F_p`, cross-checked against exact arithmetic
    /// on a prefix.
    pub fast_mod: bool,
    /// `(d, e, x)` points for the overpartition-pair cross-check; `z` stays formal.
    pub pair_points: Vec<(i64, i64, i64)>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            order: None,
            bound: None,
            enum_bounds: EnumBounds::default(),
            engine: EngineChoice::Auto,
            fast_mod: false,
            pair_points: PAIR_POINTS.to_vec(),
        }
    }
}

/// Prefix on which the `F_p` path is compared with exact arithmetic.
const FAST_PREFIX: usize = 60;

/// Rank differences compared in the oracle cross-checks.
const XCHECK_DIFFS: [(u32, u32); 6] = [(1, 3), (1, 5), (2, 5), (1, 7), (2, 7), (3, 7)];

pub const PAIR_POINTS: [(i64, i64, i64); 5] =
    [(1, 1, 1), (2, 3, 1), (-1, 2, 3), (3, -2, 2), (0, 1, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Plan {
    Series(usize),
    Enum(usize),
    Both(usize, usize),
    Mixed(usize),
}

fn plan(spec: &CheckSpec, opts: &RunOptions) -> Result<Plan> {
    let order = opts.order.unwrap_or(spec.order);
    let bound = opts.bound.or(spec.bound).unwrap_or(order);
    let plan = match (spec.engines, opts.engine) {
        (Engines::Series, EngineChoice::Enum)
        | (Engines::Enum | Engines::Mixed, EngineChoice::Series) => {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} has no {} engine",
                spec.id,
                if opts.engine == EngineChoice::Enum {
                    "enumeration"
                } else {
                    "series"
                }
            )))
        }
        (Engines::Series, _) | (Engines::Both, EngineChoice::Series) => Plan::Series(order),
        (Engines::Enum, _) | (Engines::Both, EngineChoice::Enum) => Plan::Enum(bound),
        (Engines::Both, EngineChoice::Auto) => Plan::Both(order, bound),
        (Engines::Mixed, _) => Plan::Mixed(bound),
    };
    let needed = spec.min_order();
    let enum_needed = spec.progression.residue as usize + spec.progression.step as usize;
    let (o, b) = match plan {
        Plan::Series(o) => (Some(o), None),
        Plan::Enum(b) | Plan::Mixed(b) => (None, Some(b)),
        Plan::Both(o, b) => (Some(o), Some(b)),
    };
    if let Some(o) = o.filter(|&o| o < needed) {
        return Err(Error::InsufficientOrder {
            id: spec.id.clone(),
            order: o,
            needed,
        });
    }
    if let Some(b) = b {
        if spec.kind != CheckKind::OracleXcheck && b < enum_needed {
            return Err(Error::InsufficientOrder {
                id: spec.id.clone(),
                order: b,
                needed: enum_needed,
            });
        }
        for t in spec.all_terms() {
            let enumerated =
                matches!(plan, Plan::Enum(_) | Plan::Both(..)) || t.counter == Counter::MOmega;
            if enumerated {
                opts.enum_bounds
                    .check(t.counter.statistic().class(), b as u32)?;
            }
        }
        if let Side::Oracle(f) = spec.lhs {
            let class = match f.statistic() {
                Some(s) => s.class(),
                None => crate::combinatorics::ObjectClass::Pairs,
            };
            opts.enum_bounds.check(class, b as u32)?;
        }
    }
    Ok(plan)
}

/// `Σ coeff · T(residue, k, n) qⁿ` through the series engine.
fn terms_series(
    terms: &[Term],
    ctx: &Context,
    order: usize,
    fast: Option<u64>,
) -> Result<QSeries<Rat>> {
    let mut acc = QSeries::zero(order);
    // part-weighted counters only enter through antisymmetric combinations
    let mut parts: BTreeMap<(Counter, u32), BTreeMap<u32, i64>> = BTreeMap::new();
    for t in terms {
        let family = Family::of_counter(t.counter).ok_or_else(|| {
            Error::InvalidArgument(alloc::format!("{} has no series engine", t.counter))
        })?;
        if t.counter == family.part_counter().unwrap() {
            *parts
                .entry((t.counter, t.modulus))
                .or_default()
                .entry(t.residue)
                .or_insert(0) += t.coeff;
        } else {
            let v = ctx.series(&SeriesKey::ObjectResidues(family, t.modulus), order)?;
            acc.add_assign_ref(&v[t.residue as usize].scale(&Rat::from_int(t.coeff)));
        }
    }
    for ((counter, k), coeffs) in parts {
        let family = Family::of_counter(counter).unwrap();
        for b in 1..k {
            let c = coeffs.get(&b).copied().unwrap_or(0);
            let partner = coeffs.get(&(k - b)).copied().unwrap_or(0);
            if c != -partner {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{counter} terms mod {k} are not antisymmetric under b -> k - b"
                )));
            }
            if c == 0 || b >= k - b {
                continue;
            }
            let spec = NTDiffSpec::new(family, b, k)?;
            let key = match fast {
                Some(p) => SeriesKey::NtDiffMod(spec, p),
                None => SeriesKey::NtDiff(spec),
            };
            let s = ctx.series(&key, order)?;
            acc.add_assign_ref(&s[0].scale(&Rat::from_int(c)));
        }
        if coeffs.get(&0).copied().unwrap_or(0) != 0 {
            return Err(Error::InvalidArgument(alloc::format!(
                "{counter} residue 0 mod {k} has no series engine"
            )));
        }
    }
    Ok(acc)
}

fn form(ctx: &Context, id: &str, order: usize) -> Result<QSeries<Rat>> {
    Ok(ctx.series(&SeriesKey::Form(id.into()), order)?.remove(0))
}

/// A side as a series in the progression index `m`, with `count` terms.
fn side_sequence(
    side: &Side,
    spec: &CheckSpec,
    ctx: &Context,
    count: usize,
    fast: Option<u64>,
) -> Result<Vec<Rat>> {
    let prog = spec.progression;
    let m_order = count - 1;
    Ok(match side {
        Side::Zero => alloc::vec![Rat::zero(); count],
        Side::Terms(t) => {
            let s = terms_series(t, ctx, prog.at(m_order), fast)?;
            s.sift(prog.step as usize, prog.residue as usize).coeffs()[..count].to_vec()
        }
        Side::Form(id) => form(ctx, id, m_order)?.coeffs()[..count].to_vec(),
        _ => {
            return Err(Error::InvalidArgument(alloc::format!(
                "{}: side has no sequence",
                spec.id
            )))
        }
    })
}

/// Values of the counter terms at each `n = prog.at(m)`, `m < count`, by
/// enumeration; in mixed mode only the crank terms are enumerated.
fn enum_sequence(
    side: &Side,
    spec: &CheckSpec,
    ctx: &Context,
    count: usize,
    mixed: bool,
) -> Result<Vec<Rat>> {
    let prog = spec.progression;
    let terms = match side {
        Side::Terms(t) => t.as_slice(),
        _ => return side_sequence(side, spec, ctx, count, None),
    };
    let (enumerated, by_series): (Vec<Term>, Vec<Term>) = terms
        .iter()
        .partition(|t| !mixed || t.counter == Counter::MOmega);
    let mut out = if by_series.is_empty() {
        alloc::vec![Rat::zero(); count]
    } else {
        side_sequence(&Side::Terms(by_series), spec, ctx, count, None)?
    };
    for (m, slot) in out.iter_mut().enumerate() {
        let n = prog.at(m) as u32;
        for t in &enumerated {
            let h = ctx.histogram(t.counter.statistic(), n);
            let v = h.residues(t.counter.weight(), t.modulus)[t.residue as usize];
            *slot += &(&Rat::from_int(t.coeff) * &Rat::from(v as i64));
        }
    }
    Ok(out)
}

fn compare(spec: &CheckSpec, lhs: &[Rat], rhs: &[Rat]) -> Result<Status> {
    for (m, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        let n = match spec.kind {
            CheckKind::ExactIdentity if !matches!(spec.lhs, Side::Terms(_)) => m,
            _ => spec.progression.at(m),
        };
        let bad = match spec.kind {
            CheckKind::Congruence => {
                let p = spec.modulus.unwrap_or(0);
                (l - r).rem_euclid(p)? != 0
            }
            _ => l != r,
        };
        if bad {
            let expected = match (spec.kind, &spec.rhs) {
                (CheckKind::Congruence, Side::Zero) => {
                    alloc::format!("0 (mod {})", spec.modulus.unwrap_or(0))
                }
                (CheckKind::Congruence, _) => {
                    alloc::format!("{r} (mod {})", spec.modulus.unwrap_or(0))
                }
                _ => r.to_string(),
            };
            return Ok(Status::Fail(Witness {
                n,
                value: l.to_string(),
                expected,
            }));
        }
    }
    Ok(Status::Pass)
}

/// Number of progression points with `n <= limit` (or `m <= limit` for
/// identities, whose order counts the right-hand side).
fn series_count(spec: &CheckSpec, order: usize) -> usize {
    match spec.kind {
        CheckKind::ExactIdentity => order + 1,
        _ => (order - spec.progression.residue as usize) / spec.progression.step as usize + 1,
    }
}

fn enum_count(spec: &CheckSpec, bound: usize) -> usize {
    let p = spec.progression;
    if bound < p.residue as usize {
        return 0;
    }
    (bound - p.residue as usize) / p.step as usize + 1
}

fn run_series(
    spec: &CheckSpec,
    ctx: &Context,
    order: usize,
    fast: Option<u64>,
) -> Result<(Status, usize)> {
    let count = series_count(spec, order);
    let lhs = side_sequence(&spec.lhs, spec, ctx, count, fast)?;
    let rhs = side_sequence(&spec.rhs, spec, ctx, count, fast)?;
    Ok((compare(spec, &lhs, &rhs)?, count))
}

fn run_enum(spec: &CheckSpec, ctx: &Context, bound: usize, mixed: bool) -> Result<(Status, usize)> {
    let count = enum_count(spec, bound);
    let lhs = enum_sequence(&spec.lhs, spec, ctx, count, mixed)?;
    let rhs = enum_sequence(&spec.rhs, spec, ctx, count, mixed)?;
    Ok((compare(spec, &lhs, &rhs)?, count))
}

fn witness(n: usize, value: impl ToString, expected: impl ToString) -> Status {
    Status::Fail(Witness {
        n,
        value: value.to_string(),
        expected: expected.to_string(),
    })
}

fn xcheck_family(family: Family, ctx: &Context, bound: usize) -> Result<(Status, usize)> {
    let stat = family.statistic().unwrap();
    let g = rank_gf(family, bound)?;
    for n in 0..=bound {
        let h = ctx.histogram(stat, n as u32);
        let expected = LaurentPoly::from_terms(
            h.bins
                .iter()
                .map(|(m, b)| (*m, Rat::from(b.objects as i64))),
        );
        if g.coeff(n) != &expected {
            return Ok((
                witness(
                    n,
                    alloc::format!("{:?}", g.coeff(n)),
                    alloc::format!("{expected:?}"),
                ),
                n + 1,
            ));
        }
    }
    let counter = family.part_counter().unwrap();
    for (b, k) in XCHECK_DIFFS {
        let s = ctx
            .series(&SeriesKey::NtDiff(NTDiffSpec::new(family, b, k)?), bound)?
            .remove(0);
        for n in 0..=bound {
            let r = ctx.histogram(stat, n as u32).residues(Weight::Parts, k);
            let e = r[b as usize] as i64 - r[(k - b) as usize] as i64;
            if s.coeff(n) != &Rat::from(e) {
                let label = alloc::format!("{counter}({b},{k})-{counter}({},{k})", k - b);
                return Ok((
                    witness(n, alloc::format!("{label} = {}", s.coeff(n)), e),
                    bound + 1,
                ));
            }
        }
    }
    Ok((Status::Pass, bound + 1))
}

fn xcheck_pairs(
    bounds: &EnumBounds,
    points: &[(i64, i64, i64)],
    bound: usize,
) -> Result<(Status, usize)> {
    let profiles: Vec<_> = (0..=bound)
        .map(|n| pair_profile(n as u32, bounds))
        .collect::<Result<_>>()?;
    for &(d, e, x) in points {
        let spec =
            Specialization::generic(Param::constant(Rat::from(d)), Param::constant(Rat::from(e)));
        let vars = Vars {
            x: Some(Rat::from(x)),
            z: None,
        };
        let s: QSeries<LaurentPoly> = genovpair_series(&spec, &vars, bound)?;
        let (d, e, x) = (Rat::from(d), Rat::from(e), Rat::from(x));
        for (n, profile) in profiles.iter().enumerate() {
            let mut expected = LaurentPoly::zero();
            for (rec, c) in profile {
                let w = &(&(&d.pow(rec.r) * &e.pow(rec.s)) * &x.pow(rec.t)) * &Rat::from(*c as i64);
                expected.add_term(rec.m, &w);
            }
            if s.coeff(n) != &expected {
                let at = alloc::format!(" at (d, e, x) = ({d}, {e}, {x})");
                return Ok((
                    witness(
                        n,
                        alloc::format!("{:?}{at}", s.coeff(n)),
                        alloc::format!("{expected:?}"),
                    ),
                    n + 1,
                ));
            }
        }
    }
    Ok((Status::Pass, bound + 1))
}

/// Runs one check. Infrastructure problems are returned as errors.
pub fn run_check(spec: &CheckSpec, ctx: &Context, opts: &RunOptions) -> Result<CheckReport> {
    let plan = plan(spec, opts)?;
    let fast = fast_modulus(spec, opts);
    let mut note = None;
    let (engine, order, bound, status, checked) = match (&spec.lhs, plan) {
        (Side::Thmain(f), Plan::Series(o)) => {
            let r = thmain_check(*f, o, true)?;
            let status = match r.first_mismatch {
                None => Status::Pass,
                Some(n) => witness(n, "left-hand coefficient", "differs from the expansion"),
            };
            ("series".into(), o, None, status, o + 1)
        }
        (Side::Oracle(f), Plan::Both(_, b) | Plan::Enum(b) | Plan::Series(b)) => {
            let (status, checked) = match f {
                Family::PairGeneric => xcheck_pairs(&opts.enum_bounds, &opts.pair_points, b)?,
                _ => xcheck_family(*f, ctx, b)?,
            };
            ("series+enum".into(), b, Some(b), status, checked)
        }
        (_, Plan::Series(o)) => {
            let (status, checked) = run_series(spec, ctx, o, fast)?;
            if let Some(p) = fast {
                verify_fast_prefix(spec, ctx, o.min(FAST_PREFIX), p)?;
                note = Some(alloc::format!(
                    "computed over F_{p}; exact arithmetic agrees up to {}",
                    o.min(FAST_PREFIX)
                ));
            }
            (
                if fast.is_some() {
                    "series(F_p)".into()
                } else {
                    "series".into()
                },
                o,
                None,
                status,
                checked,
            )
        }
        (_, Plan::Enum(b)) => {
            let (status, checked) = run_enum(spec, ctx, b, false)?;
            ("enum".into(), b, Some(b), status, checked)
        }
        (_, Plan::Mixed(b)) => {
            let (status, checked) = run_enum(spec, ctx, b, true)?;
            let order = match spec.kind {
                CheckKind::ExactIdentity => checked.saturating_sub(1),
                _ => b,
            };
            ("mixed".into(), order, Some(b), status, checked)
        }
        (_, Plan::Both(o, b)) => {
            let (s1, c1) = run_series(spec, ctx, o, fast)?;
            let (s2, c2) = run_enum(spec, ctx, b, false)?;
            let series = match fast {
                Some(_) => "series(F_p)",
                None => "series",
            };
            let status = match (&s1, &s2) {
                (Status::Pass, Status::Pass) => Status::Pass,
                (Status::Fail(_), _) => s1,
                _ => s2,
            };
            (alloc::format!("{series}+enum"), o, Some(b), status, c1 + c2)
        }
    };
    Ok(CheckReport {
        id: spec.id.clone(),
        statement: spec.statement.clone(),
        category: spec.category,
        kind: spec.kind,
        engine,
        order,
        bound,
        checked,
        status,
        note,
        ms: 0,
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn verify_fast_prefix(spec: &CheckSpec, ctx: &Context, order: usize, p: u64) -> Result<()> {
    let count = series_count(spec, order);
    for side in [&spec.lhs, &spec.rhs] {
        let fast = side_sequence(side, spec, ctx, count, Some(p))?;
        let exact = side_sequence(side, spec, ctx, count, None)?;
        for (a, b) in fast.iter().zip(&exact) {
            if a.rem_euclid(p)? != b.rem_euclid(p)? {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{}: F_{p} path disagrees with exact arithmetic",
                    spec.id
                )));
            }
        }
    }
    Ok(())
}

fn term_jobs(terms: &[Term], order: usize, fast: Option<u64>, out: &mut Vec<Job>) {
    for t in terms {
        let Some(family) = Family::of_counter(t.counter) else {
            continue;
        };
        if family.part_counter() == Some(t.counter) {
            let (b, k) = (t.residue.min(t.modulus - t.residue), t.modulus);
            if let Ok(spec) = NTDiffSpec::new(family, b, k) {
                let exact = if fast.is_some() {
                    order.min(FAST_PREFIX)
                } else {
                    order
                };
                out.push(Job::Series(SeriesKey::NtDiff(spec), exact));
                if let Some(p) = fast {
                    out.push(Job::Series(SeriesKey::NtDiffMod(spec, p), order));
                }
            }
        } else {
            out.push(Job::Series(
                SeriesKey::ObjectResidues(family, t.modulus),
                order,
            ));
        }
    }
}

fn side_jobs(side: &Side, spec: &CheckSpec, count: usize, fast: Option<u64>, out: &mut Vec<Job>) {
    match side {
        Side::Terms(t) => term_jobs(t, spec.progression.at(count - 1), fast, out),
        Side::Form(id) => out.push(Job::Series(SeriesKey::Form(id.clone()), count - 1)),
        _ => {}
    }
}

fn enum_jobs(spec: &CheckSpec, count: usize, mixed: bool, out: &mut Vec<Job>) {
    for side in [&spec.lhs, &spec.rhs] {
        let (enumerated, by_series): (Vec<Term>, Vec<Term>) = side
            .terms()
            .iter()
            .partition(|t| !mixed || t.counter == Counter::MOmega);
        term_jobs(&by_series, spec.progression.at(count - 1), None, out);
        for t in &enumerated {
            out.extend(
                (0..count)
                    .map(|m| Job::Histogram(t.counter.statistic(), spec.progression.at(m) as u32)),
            );
        }
        if let Side::Form(id) = side {
            out.push(Job::Series(SeriesKey::Form(id.clone()), count - 1));
        }
    }
}

/// Precomputations `run_check` would otherwise do on the spot; warming a
/// [`Context`] with them lets independent checks share the work.
pub fn jobs(spec: &CheckSpec, opts: &RunOptions) -> Vec<Job> {
    let Ok(plan) = plan(spec, opts) else {
        return Vec::new();
    };
    let fast = fast_modulus(spec, opts);
    let mut out = Vec::new();
    match (&spec.lhs, plan) {
        (Side::Thmain(_), _) => {}
        (Side::Oracle(f), Plan::Both(_, b) | Plan::Enum(b) | Plan::Series(b)) => {
            if let (Some(stat), Some(_)) = (f.statistic(), f.part_counter()) {
                out.extend((0..=b).map(|n| Job::Histogram(stat, n as u32)));
                for (db, k) in XCHECK_DIFFS {
                    if let Ok(s) = NTDiffSpec::new(*f, db, k) {
                        out.push(Job::Series(SeriesKey::NtDiff(s), b));
                    }
                }
            }
        }
        (_, Plan::Series(o)) => {
            let count = series_count(spec, o);
            side_jobs(&spec.lhs, spec, count, fast, &mut out);
            side_jobs(&spec.rhs, spec, count, fast, &mut out);
        }
        (_, Plan::Enum(b)) => enum_jobs(spec, enum_count(spec, b), false, &mut out),
        (_, Plan::Mixed(b)) => enum_jobs(spec, enum_count(spec, b), true, &mut out),
        (_, Plan::Both(o, b)) => {
            let count = series_count(spec, o);
            side_jobs(&spec.lhs, spec, count, fast, &mut out);
            side_jobs(&spec.rhs, spec, count, fast, &mut out);
            enum_jobs(spec, enum_count(spec, b), false, &mut out);
        }
    }
    out
}

fn fast_modulus(spec: &CheckSpec, opts: &RunOptions) -> Option<u64> {
    match (opts.fast_mod, spec.kind, spec.modulus) {
        (true, CheckKind::Congruence, Some(p)) if p <= 23 && is_prime(p) => Some(p),
        _ => None,
    }
}

/// Whether a filter token selects a spec: `all`, a category plural, an exact
/// id, or a prefix ending in `-` or `*`.
pub fn matches_filter(spec: &CheckSpec, filter: &str) -> bool {
    filter.split(',').map(str::trim).any(|tok| {
        tok.eq_ignore_ascii_case("all")
            || tok.eq_ignore_ascii_case(spec.category.filter_name())
            || tok.eq_ignore_ascii_case(&spec.id)
            || tok.eq_ignore_ascii_case(&spec.group)
            || tok
                .strip_suffix('*')
                .is_some_and(|p| spec.id.starts_with(p))
            || (tok.ends_with('-') && spec.id.starts_with(tok))
    })
}

impl CheckReport {
    /// Report for a check that could not run.
    pub fn from_error(spec: &CheckSpec, opts: &RunOptions, e: &Error) -> Self {
        CheckReport {
            id: spec.id.clone(),
            statement: spec.statement.clone(),
            category: spec.category,
            kind: spec.kind,
            engine: spec.engines.name().into(),
            order: opts.order.unwrap_or(spec.order),
            bound: opts.bound.or(spec.bound),
            checked: 0,
            status: Status::Error(e.to_string()),
            note: None,
            ms: 0,
        }
    }
}

/// Runs the selected specs in order; errors become [`Status::Error`] reports.
pub fn run_all(
    specs: &[CheckSpec],
    filter: &str,
    ctx: &Context,
    opts: &RunOptions,
) -> Vec<CheckReport> {
    specs
        .iter()
        .filter(|s| matches_filter(s, filter))
        .map(|s| run_check(s, ctx, opts).unwrap_or_else(|e| CheckReport::from_error(s, opts, &e)))
        .collect()
}

/// Copies of `spec` with one lhs coefficient perturbed by one. A
/// part-weighted term moves together with its partner `k − b` so the
/// combination stays in the series engine's domain.
pub fn mutations(spec: &CheckSpec) -> Vec<CheckSpec> {
    let terms = spec.lhs.terms();
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let key = (t.counter, t.modulus, t.residue.min(t.modulus - t.residue));
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let mut m = spec.clone();
        let mut new = terms.to_vec();
        let delta = if t.coeff == -1 { -1 } else { 1 };
        new[i].coeff += delta;
        let paired =
            Family::of_counter(t.counter).is_some_and(|f| f.part_counter() == Some(t.counter));
        if paired {
            if let Some(j) = terms.iter().position(|u| {
                u.counter == t.counter
                    && u.modulus == t.modulus
                    && u.residue == t.modulus - t.residue
            }) {
                new[j].coeff -= delta;
            }
        }
        new.retain(|t| t.coeff != 0);
        m.id = alloc::format!("{}~{i}", spec.id);
        m.lhs = Side::Terms(new);
        out.push(m);
    }
    out
}

/// Result of scanning one residue class of a congruence group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreRow {
    pub group: String,
    pub residue: u32,
    pub claimed: bool,
    /// First `n` in the class where the congruence fails.
    pub first_failure: Option<usize>,
}

/// Scans every residue class of the step of `group`, marking the classes the
/// registry does not claim as informational.
pub fn explore(
    specs: &[CheckSpec],
    group: &str,
    ctx: &Context,
    opts: &RunOptions,
) -> Result<Vec<ExploreRow>> {
    let members: Vec<&CheckSpec> = specs.iter().filter(|s| s.group == group).collect();
    let template = *members
        .first()
        .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown group `{group}`")))?;
    let step = template.progression.step;
    let mut rows = Vec::new();
    for r in 0..step {
        let mut s = template.clone();
        s.progression = Progression::new(step, r);
        let report = run_check(&s, ctx, opts)?;
        rows.push(ExploreRow {
            group: group.into(),
            residue: r,
            claimed: members.iter().any(|m| m.progression.residue == r),
            first_failure: match report.status {
                Status::Fail(w) => Some(w.n),
                _ => None,
            },
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::super::registry;
    use super::*;

    fn find(id: &str) -> CheckSpec {
        registry().into_iter().find(|s| s.id == id).unwrap()
    }

    fn quick(order: usize) -> RunOptions {
        RunOptions {
            order: Some(order),
            ..RunOptions::default()
        }
    }

    #[test]
    fn t1_passes_with_both_engines() {
        let r = run_check(&find("T1-2"), &Context::new(), &quick(60)).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.engine, "series+enum");
    }

    #[test]
    fn insufficient_order_is_an_error() {
        let e = run_check(
            &find("T1-2"),
            &Context::new(),
            &RunOptions {
                engine: EngineChoice::Series,
                ..quick(3)
            },
        );
        assert!(matches!(e, Err(Error::InsufficientOrder { needed: 7, .. })));
    }

    #[test]
    fn mutated_t1_fails_early() {
        let spec = find("T1-2");
        let muts = mutations(&spec);
        assert_eq!(muts.len(), 2);
        let opts = RunOptions {
            engine: EngineChoice::Series,
            ..quick(30)
        };
        for m in &muts {
            let r = run_check(m, &Context::new(), &opts).unwrap();
            assert!(r.is_fail(), "{} survived", m.id);
        }
    }

    #[test]
    fn fast_path_agrees() {
        let spec = find("A-NT7-1");
        let opts = RunOptions {
            engine: EngineChoice::Series,
            fast_mod: true,
            ..quick(120)
        };
        let r = run_check(&spec, &Context::new(), &opts).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.engine, "series(F_p)");
        assert!(r.note.is_some());
    }

    #[test]
    fn crank_checks_use_enumeration() {
        let ctx = Context::new();
        for id in ["C-CR713-0", "C-RC512-1", "C-IDCR54", "C-EQC54"] {
            let r = run_check(
                &find(id),
                &ctx,
                &RunOptions {
                    bound: Some(40),
                    ..RunOptions::default()
                },
            )
            .unwrap();
            assert!(matches!(r.engine.as_str(), "enum" | "mixed"));
            assert_eq!(r.status, Status::Pass, "{id}: {r:?}");
        }
    }

    #[test]
    fn crosschecks_pass_small() {
        let ctx = Context::new();
        for id in ["X-DYSON", "X-OVM2", "X-PAIR"] {
            let r = run_check(
                &find(id),
                &ctx,
                &RunOptions {
                    bound: Some(8),
                    ..RunOptions::default()
                },
            )
            .unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {r:?}");
        }
    }

    #[test]
    fn explore_marks_unclaimed_classes() {
        let rows = explore(&registry(), "A-NT5", &Context::new(), &quick(80)).unwrap();
        assert_eq!(rows.len(), 5);
        for row in &rows {
            assert_eq!(row.claimed, row.first_failure.is_none(), "{row:?}");
        }
    }

    #[test]
    fn filters_and_errors() {
        let specs = registry();
        let reports = run_all(
            &specs,
            "T2a",
            &Context::new(),
            &RunOptions {
                bound: Some(1000),
                ..quick(40)
            },
        );
        assert_eq!(reports.len(), 1);
        assert!(matches!(reports[0].status, Status::Error(_)));
        assert!(specs
            .iter()
            .filter(|s| matches_filter(s, "theorems"))
            .all(|s| s.category == super::super::Category::Theorem));
        assert!(specs.iter().any(|s| matches_filter(s, "NEW7A-")));
    }

    #[test]
    fn warmed_context_gives_same_reports() {
        let specs: Vec<CheckSpec> = registry()
            .into_iter()
            .filter(|s| matches_filter(s, "A-NT7-,C-RC512-1,X-DOM2,ID-DIS2"))
            .collect();
        let opts = RunOptions {
            bound: Some(20),
            ..quick(70)
        };
        let mut ctx = Context::new();
        let all = Context::merge_jobs(specs.iter().flat_map(|s| jobs(s, &opts)));
        assert!(!all.is_empty());
        ctx.warm(&all).unwrap();
        assert_eq!(
            run_all(&specs, "all", &ctx, &opts),
            run_all(&specs, "all", &Context::new(), &opts)
        );
    }

    #[test]
    fn deterministic() {
        let specs = registry();
        let a = run_all(&specs, "A-NT5-", &Context::new(), &quick(60));
        let b = run_all(&specs, "A-NT5-", &Context::new(), &quick(60));
        assert_eq!(a, b);
    }
}
