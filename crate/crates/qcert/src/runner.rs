//! Parallel execution of registry checks over a shared, pre-warmed cache.

use std::time::Instant;

use anyhow::Context as _;
use qcert_core::verify::{
    jobs, matches_filter, run_check, CheckReport, CheckSpec, Context, Job, RunOptions,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

/// Thread pool sized by `QCERT_THREADS` when set, else by rayon's default.
pub fn pool() -> anyhow::Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("QCERT_THREADS") {
        let n: usize = v
            .parse()
            .with_context(|| format!("QCERT_THREADS must be a positive integer, got `{v}`"))?;
        b = b.num_threads(n.max(1));
    }
    Ok(b.build()?)
}

/// Runs the jobs concurrently; a failing job is left for the check to redo
/// (and report) on its own.
pub fn warm(jobs: &[Job], pool: &rayon::ThreadPool) -> Context {
    let artifacts: Vec<_> = pool.install(|| jobs.par_iter().filter_map(|j| j.run().ok()).collect());
    let mut ctx = Context::new();
    for a in artifacts {
        ctx.insert(a);
    }
    ctx
}

/// Selected checks in registry order, each timed.
pub fn run(
    specs: &[CheckSpec],
    filter: &str,
    opts: &RunOptions,
    pool: &rayon::ThreadPool,
) -> Vec<CheckReport> {
    let selected: Vec<&CheckSpec> = specs.iter().filter(|s| matches_filter(s, filter)).collect();
    let all = Context::merge_jobs(selected.iter().flat_map(|s| jobs(s, opts)));
    let ctx = warm(&all, pool);
    pool.install(|| {
        selected
            .par_iter()
            .map(|s| {
                let t = Instant::now();
                let mut r = run_check(s, &ctx, opts)
                    .unwrap_or_else(|e| CheckReport::from_error(s, opts, &e));
                r.ms = t.elapsed().as_millis() as u64;
                r
            })
            .collect()
    })
}

/// Five `(d, e, x)` points with small nonzero entries.
pub fn pair_points(seed: u64) -> Vec<(i64, i64, i64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pick = || loop {
        let v: i64 = rng.gen_range(-3..=3);
        if v != 0 {
            return v;
        }
    };
    (0..5).map(|_| (pick(), pick(), pick())).collect()
}
