use qcert_core::verify::{
    mutations, registry, run_all, run_check, Category, Context, EngineChoice, RunOptions, Status,
};

fn assert_all_pass(filter: &str, opts: &RunOptions) -> usize {
    let reports = run_all(&registry(), filter, &Context::new(), opts);
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.status);
    }
    reports.len()
}

#[test]
fn identities_hold_at_default_orders() {
    assert!(assert_all_pass("identities", &RunOptions::default()) >= 20);
}

#[test]
fn theorems_hold_on_a_shorter_prefix() {
    let opts = RunOptions {
        order: Some(150),
        bound: Some(30),
        ..RunOptions::default()
    };
    assert_eq!(assert_all_pass("theorems", &opts), 15);
}

#[test]
fn conjectures_hold_on_a_shorter_prefix() {
    let opts = RunOptions {
        order: Some(80),
        bound: Some(40),
        ..RunOptions::default()
    };
    assert_eq!(assert_all_pass("conjectures", &opts), 22);
}

#[test]
fn every_theorem_has_a_failing_mutation_by_30() {
    let ctx = Context::new();
    let opts = RunOptions {
        order: Some(30),
        engine: EngineChoice::Series,
        ..RunOptions::default()
    };
    for spec in registry()
        .iter()
        .filter(|s| s.category == Category::Theorem)
    {
        let caught = mutations(spec)
            .iter()
            .any(|m| run_check(m, &ctx, &opts).unwrap().is_fail());
        assert!(caught, "{} has no sensitive mutation", spec.id);
    }
}

#[test]
fn empty_filter_is_empty() {
    assert!(run_all(
        &registry(),
        "NO-SUCH-CHECK",
        &Context::new(),
        &RunOptions::default()
    )
    .is_empty());
}
