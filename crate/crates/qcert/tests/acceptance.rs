//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qcert::report::RunDocument;
use qcert_core::combinatorics::walk::{OverpartitionWalk, PairWalk, PartitionWalk};
use qcert_core::combinatorics::{Overpartition, OverpartitionPair};
use qcert_core::genfun::{closed_form, lemma42_check};
use qcert_core::series::{derivative_check, XExpression};
use qcert_core::verify::{
    mutations, registry, run_all, run_check, Category, CheckReport, Context, EngineChoice,
    RunOptions, Status,
};
use qcert_core::{CoeffRing, Dual, Monomial, QSeries, Rat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn walk_counts(n: u32, mut count: impl FnMut(u32) -> u64) -> Vec<u64> {
    (0..=n).map(&mut count).collect()
}

fn series_counts(form: &str, n: usize) -> Vec<u64> {
    closed_form(form, n)
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| c.to_i64().unwrap() as u64)
        .collect()
}

fn counting_oracles() -> Outcome {
    let partitions = walk_counts(40, |m| {
        let mut w = PartitionWalk::new(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        c
    });
    let distinct_odd = walk_counts(40, |m| {
        let mut w = PartitionWalk::distinct_odd(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        c
    });
    let overpartitions = walk_counts(40, |m| {
        let mut w = OverpartitionWalk::new(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        c
    });
    let pairs = walk_counts(24, |m| {
        let mut w = PairWalk::new(m);
        let mut c = 0;
        while w.advance().is_some() {
            c += 1;
        }
        c
    });
    ensure(partitions[4] == 5 && overpartitions[4] == 14, || {
        "p(4) or p̄(4) wrong by enumeration".into()
    })?;
    for (name, form, counts) in [
        ("partitions", "partition-gf", &partitions),
        ("overpartitions", "overpartition-gf", &overpartitions),
        ("distinct-odd", "distinct-odd-gf", &distinct_odd),
        ("pairs", "pair-gf", &pairs),
    ] {
        let s = series_counts(form, counts.len() - 1);
        ensure(&s == counts, || {
            format!("{name}: series and enumeration disagree")
        })?;
    }
    Ok(format!(
        "p(4) = {}, p̄(4) = {}; four families agree to n = 40 (pairs 24, {} pairs of weight 24)",
        partitions[4], overpartitions[4], pairs[24]
    ))
}

fn worked_examples() -> Outcome {
    let pair = |l: &str, m: &str| {
        OverpartitionPair::new(
            Overpartition::parse(l).unwrap(),
            Overpartition::parse(m).unwrap(),
        )
    };
    let a = pair("6',6,5,4,4,4,3',1'", "7,7,5',2,2,2").rank();
    let b = pair("4,3',3,2',1", "4,4,4,1'").rank();
    ensure(a == -3 && b == -2, || format!("ranks {a}, {b}"))?;
    Ok(format!("pair ranks {a} and {b}"))
}

fn run(ids: &[&str], opts: &RunOptions) -> Vec<CheckReport> {
    let specs = registry();
    let ctx = Context::new();
    ids.iter()
        .map(|id| {
            let spec = specs
                .iter()
                .find(|s| s.id == *id)
                .unwrap_or_else(|| panic!("no spec {id}"));
            run_check(spec, &ctx, opts).unwrap_or_else(|e| CheckReport::from_error(spec, opts, &e))
        })
        .collect()
}

fn all_pass(reports: &[CheckReport], need_enum: bool, series_to: usize) -> Outcome {
    for r in reports {
        ensure(r.status == Status::Pass, || {
            format!("{}: {:?}", r.id, r.status)
        })?;
        ensure(r.order >= series_to, || {
            format!("{}: order {}", r.id, r.order)
        })?;
        ensure(!need_enum || r.engine.contains("enum"), || {
            format!("{}: engine {}", r.id, r.engine)
        })?;
    }
    Ok(reports
        .iter()
        .map(|r| match r.bound {
            Some(b) => format!("{} n<={} enum n<={}", r.id, r.order, b),
            None => format!("{} n<={}", r.id, r.order),
        })
        .collect::<Vec<_>>()
        .join(", "))
}

fn theorem(ids: &[&str], bound: usize) -> Outcome {
    let reports = run(ids, &RunOptions::default());
    for r in &reports {
        ensure(r.bound == Some(bound), || {
            format!("{}: bound {:?}", r.id, r.bound)
        })?;
    }
    all_pass(&reports, true, 300)
}

fn nt_congruences() -> Outcome {
    let ids: Vec<String> = registry()
        .into_iter()
        .filter(|s| ["A-NT5", "A-NT7", "NEW7A", "NEW7B"].contains(&s.group.as_str()))
        .map(|s| s.id)
        .collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    ensure(ids.len() == 11, || format!("{} specs", ids.len()))?;
    let opts = RunOptions {
        engine: EngineChoice::Series,
        ..RunOptions::default()
    };
    all_pass(&run(&ids, &opts), false, 300)
}

fn identity_suite() -> Outcome {
    let lemma = lemma42_check(200).map_err(|e| e.to_string())?;
    ensure(lemma.is_pass(), || {
        format!("nine-dissection lemma: {lemma:?}")
    })?;
    let mut reports = run(
        &["ID-DIS2", "ID-DIS2-ALT", "ID-DIS3"],
        &RunOptions {
            order: Some(150),
            ..RunOptions::default()
        },
    );
    reports.extend(run(
        &["ID-CONM2OV51", "ID-CONM2OV52", "ID-CONM251", "ID-CONM252"],
        &RunOptions {
            order: Some(60),
            ..RunOptions::default()
        },
    ));
    reports.extend(run(
        &[
            "ID-THMAIN-DYSON",
            "ID-THMAIN-OV",
            "ID-THMAIN-OVM2",
            "ID-THMAIN-DOM2",
        ],
        &RunOptions {
            order: Some(40),
            ..RunOptions::default()
        },
    ));
    let detail = all_pass(&reports, false, 40)?;
    Ok(format!("lemma to order 200, {detail}"))
}

fn conjecture_suite() -> Outcome {
    let reports = run_all(
        &registry(),
        "conjectures",
        &Context::new(),
        &RunOptions::default(),
    );
    ensure(reports.len() == 22, || {
        format!("{} conjecture checks", reports.len())
    })?;
    for r in &reports {
        ensure(r.status == Status::Pass, || {
            let w = match &r.status {
                Status::Fail(w) => format!("witness n = {}: {} vs {}", w.n, w.value, w.expected),
                s => format!("{s:?}"),
            };
            format!("{} {}: {w}", r.label(), r.id)
        })?;
        ensure(r.label() == "CONJECTURE-PASS", || {
            format!("{} labelled {}", r.id, r.label())
        })?;
    }
    let get = |id: &str| reports.iter().find(|r| r.id == id).unwrap();
    ensure(
        get("C-ID7125").order >= 150 && get("C-ID7135").order >= 150,
        || "id7 order".into(),
    )?;
    ensure(
        ["C-11-6", "C-11-1", "C-13-1", "C-13-3"]
            .iter()
            .all(|id| get(id).order >= 200),
        || "mod 11/13 order".into(),
    )?;
    let crank: Vec<&CheckReport> = reports
        .iter()
        .filter(|r| r.engine == "enum" || r.engine == "mixed")
        .collect();
    ensure(
        crank.len() == 16 && crank.iter().all(|r| r.bound == Some(60)),
        || "crank checks not enumerated to 60".into(),
    )?;
    Ok(format!(
        "{} CONJECTURE-PASS ({} through enumeration to n = 60)",
        reports.len(),
        crank.len()
    ))
}

#[derive(Debug, Clone)]
struct Product(Vec<(Rat, u32, i64, bool)>);

impl XExpression for Product {
    fn eval<R: CoeffRing>(&self, order: usize) -> qcert_core::Result<QSeries<R>> {
        let mut s = QSeries::one(order);
        for (c, a, b, inverse) in &self.0 {
            let m = Monomial::new(c.clone(), *b).with_x(*a);
            s = if *inverse {
                s.div_one_minus(&m)?
            } else {
                s.mul_one_minus(&m)?
            };
        }
        Ok(s)
    }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Rat::new(a, b))
}

fn property_suites() -> Outcome {
    let series =
        || (0usize..9).prop_flat_map(|o| proptest::collection::vec(rat(), (o + 1)..=(o + 1)));
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(series(), series(), series()), |(a, b, c)| {
            let k = a.len().min(b.len()).min(c.len());
            let [a, b, c] = [a, b, c].map(|v| QSeries::from_coeffs(v[..k].to_vec()));
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            let mut bc = b.clone();
            bc.add_assign_ref(&c);
            let mut sum = a.mul_ref(&b);
            sum.add_assign_ref(&a.mul_ref(&c));
            prop_assert_eq!(a.mul_ref(&bc), sum);
            if !a.coeff(0).is_zero() {
                prop_assert_eq!(a.mul_ref(&a.invert().unwrap()), QSeries::one(a.order()));
            }
            Ok(())
        })
        .map_err(|e| format!("ring laws: {e}"))?;
    let product =
        proptest::collection::vec((rat(), 0u32..4, 1i64..6, any::<bool>()), 1..6).prop_map(Product);
    let mut runner = TestRunner::new(Config {
        cases: 100,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&product, |p| {
            prop_assert!(derivative_check(&p, 10).unwrap().is_pass());
            let one_minus_x = {
                let mut q = p.clone();
                q.0.push((Rat::one(), 1, 0, false));
                q
            };
            let d: QSeries<Dual<Rat>> = one_minus_x.eval(10).unwrap();
            let f: QSeries<Rat> = p.eval(10).unwrap();
            prop_assert!(d.value_part().is_zero());
            prop_assert_eq!(d.deriv_part(), f.neg_ref());
            Ok(())
        })
        .map_err(|e| format!("derivative laws: {e}"))?;
    let ctx = Context::new();
    let opts = RunOptions {
        order: Some(30),
        engine: EngineChoice::Series,
        ..RunOptions::default()
    };
    let theorems: Vec<_> = registry()
        .into_iter()
        .filter(|s| s.category == Category::Theorem)
        .collect();
    for spec in &theorems {
        let caught = mutations(spec)
            .iter()
            .any(|m| run_check(m, &ctx, &opts).is_ok_and(|r| r.is_fail()));
        ensure(caught, || {
            format!("{}: no mutation fails by n = 30", spec.id)
        })?;
    }
    Ok(format!(
        "1000 ring-law cases, 100 dual-vs-formal cases with the (1 - x) law, {} theorem specs mutation-sensitive",
        theorems.len()
    ))
}

fn determinism() -> Outcome {
    let once = || -> Result<RunDocument, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_qcert"))
            .args(["verify", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("verify exited with {:?}", out.status.code())
        })?;
        let doc: RunDocument = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        Ok(doc)
    };
    let (a, b) = (once()?.without_timing(), once()?.without_timing());
    let (ja, jb) = (
        a.to_json().map_err(|e| e.to_string())?,
        b.to_json().map_err(|e| e.to_string())?,
    );
    ensure(ja == jb, || "reports differ".into())?;
    Ok(format!(
        "two `verify` runs give identical reports ({} checks, {} bytes)",
        a.reports.len(),
        ja.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("counting oracles", counting_oracles),
        ("worked examples", worked_examples),
        ("M2-rank of overpartitions mod 5 (T1)", || {
            theorem(&["T1-2"], 37)
        }),
        ("overpartition rank mod 3 (T2a, T2b)", || {
            theorem(&["T2a", "T2b"], 37)
        }),
        ("M2-rank without repeated odd parts mod 5 (T3)", || {
            theorem(&["T3-1"], 76)
        }),
        ("NT congruences mod 5 and 7", nt_congruences),
        ("identity suite", identity_suite),
        ("conjecture suite", conjecture_suite),
        ("property suites", property_suites),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name} [{secs:.1}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} [{secs:.1}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
