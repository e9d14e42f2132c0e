//! Command-line interface.

use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand};
use qcert_core::combinatorics::{tally, Counter, EnumBounds};
use qcert_core::genfun::{closed_form, form_description, CONJECTURE_IDS, FORM_IDS};
use qcert_core::verify::{explore, registry, CheckSpec, Context, EngineChoice, RunOptions};
use serde::Serialize;

use crate::format::{Format, SeriesDoc};
use crate::report::{ExploreJson, RunDocument};
use crate::runner;

#[derive(Parser, Debug)]
#[command(
    name = "qcert",
    version,
    about = "Exact verification of rank and crank congruences for partitions and overpartitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a closed form as a truncated q-series
    Expand(ExpandArgs),
    /// Tabulate a rank or crank counter by exhaustive enumeration
    Stat(StatArgs),
    /// Run registry checks
    Verify(VerifyArgs),
    /// Compare the series engine with enumeration for one family
    Crosscheck(CrosscheckArgs),
    /// List registry checks
    ListChecks(ListArgs),
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// Form id; `--list` shows them all
    #[arg(long, required_unless_present = "list")]
    pub form: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    /// Reduce coefficients mod p
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub list: bool,
}

/// Enumeration limits per family.
#[derive(Args, Debug, Clone, Default)]
pub struct BoundArgs {
    /// Allow enumeration beyond the default limits
    #[arg(long)]
    pub unsafe_bounds: bool,
    #[arg(long)]
    pub max_partitions: Option<u32>,
    #[arg(long)]
    pub max_overpartitions: Option<u32>,
    #[arg(long)]
    pub max_pairs: Option<u32>,
    #[arg(long)]
    pub max_distinct_odd: Option<u32>,
}

impl BoundArgs {
    pub fn resolve(&self) -> anyhow::Result<EnumBounds> {
        let defaults = EnumBounds::default();
        let base = if self.unsafe_bounds {
            EnumBounds::unlimited()
        } else {
            defaults
        };
        let pick = |v: Option<u32>, def: u32, cur: u32, name: &str| -> anyhow::Result<u32> {
            match v {
                Some(v) if v > def && !self.unsafe_bounds => {
                    bail!("--max-{name} {v} exceeds the default limit {def}; pass --unsafe-bounds to allow it")
                }
                Some(v) => Ok(v),
                None => Ok(cur),
            }
        };
        Ok(EnumBounds {
            partitions: pick(
                self.max_partitions,
                defaults.partitions,
                base.partitions,
                "partitions",
            )?,
            overpartitions: pick(
                self.max_overpartitions,
                defaults.overpartitions,
                base.overpartitions,
                "overpartitions",
            )?,
            pairs: pick(self.max_pairs, defaults.pairs, base.pairs, "pairs")?,
            distinct_odd: pick(
                self.max_distinct_odd,
                defaults.distinct_odd,
                base.distinct_odd,
                "distinct-odd",
            )?,
        })
    }
}

/// `n` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange(pub u32, pub u32);

impl FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad n `{t}`"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(NRange(a, b))
            }
            None => parse(s).map(|n| NRange(n, n)),
        }
    }
}

#[derive(Args, Debug)]
pub struct StatArgs {
    /// Counter: NT, NTbar, NTbar2, NT2, Momega, N, Nbar, Nbar2, N2
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub k: u32,
    /// `n` or `a..b`
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub bounds: BoundArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EngineArg {
    Auto,
    Series,
    Enum,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Series order for every selected check
    #[arg(long)]
    pub order: Option<usize>,
    /// Largest n for enumeration engines
    #[arg(long, visible_alias = "max-n")]
    pub bound: Option<usize>,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,
    /// Sweep congruences over F_p, cross-checked against exact arithmetic on a prefix
    #[arg(long)]
    pub fast_mod: bool,
    /// Seed for the sample points of the overpartition-pair cross-check
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here; a text summary still goes to stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Exit nonzero when a conjecture fails
    #[arg(long)]
    pub strict_conjectures: bool,
    #[command(flatten)]
    pub bounds: BoundArgs,
}

impl RunArgs {
    pub fn options(&self) -> anyhow::Result<RunOptions> {
        let mut opts = RunOptions {
            order: self.order,
            bound: self.bound,
            enum_bounds: self.bounds.resolve()?,
            engine: match self.engine {
                EngineArg::Auto => EngineChoice::Auto,
                EngineArg::Series => EngineChoice::Series,
                EngineArg::Enum => EngineChoice::Enum,
            },
            fast_mod: self.fast_mod,
            ..RunOptions::default()
        };
        if let Some(seed) = self.seed {
            opts.pair_points = runner::pair_points(seed);
        }
        Ok(opts)
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all`, `theorems`, `identities`, `conjectures`, `crosschecks`, ids,
    /// groups or prefixes ending in `-`; comma separated
    #[arg(long, default_value = "theorems")]
    pub only: String,
    /// Also scan the residue classes a congruence does not claim
    #[arg(long)]
    pub explore: bool,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct CrosscheckArgs {
    /// dyson, ov, ovm2, dom2, pair or all
    #[arg(long, default_value = "all")]
    pub family: String,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[arg(long, default_value = "all")]
    pub only: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn emit(output: Option<&PathBuf>, body: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_expand(a: &ExpandArgs) -> anyhow::Result<i32> {
    if a.list {
        let mut out = String::new();
        for id in FORM_IDS.iter().chain(CONJECTURE_IDS.iter()) {
            let desc = form_description(id).unwrap_or_default();
            out += &format!("{id:<24} {desc}\n");
        }
        out += "nt-diff-<family>-<b>-<k>  rank-difference series, family dyson|ov|ovm2|dom2\n";
        emit(a.output.as_ref(), &out)?;
        return Ok(0);
    }
    let id = a.form.as_deref().unwrap_or_default();
    let s = closed_form(id, a.order)?;
    let doc = match a.modulus {
        Some(p) => SeriesDoc::reduced(id, &s, p)?,
        None => SeriesDoc::exact(id, &s),
    };
    emit(a.output.as_ref(), &doc.render(a.format)?)?;
    Ok(0)
}

#[derive(Serialize)]
struct StatRow {
    n: u32,
    residue: u32,
    value: u64,
}

#[derive(Serialize)]
struct StatDoc {
    counter: String,
    k: u32,
    rows: Vec<StatRow>,
}

fn cmd_stat(a: &StatArgs) -> anyhow::Result<i32> {
    let counter: Counter = a.family.parse()?;
    let bounds = a.bounds.resolve()?;
    let mut rows = Vec::new();
    for n in a.n.0..=a.n.1 {
        for (m, v) in tally(counter, n, a.k, &bounds)?.into_iter().enumerate() {
            rows.push(StatRow {
                n,
                residue: m as u32,
                value: v,
            });
        }
    }
    let body = match a.format {
        Format::Json => {
            serde_json::to_string_pretty(&StatDoc {
                counter: counter.to_string(),
                k: a.k,
                rows,
            })? + "\n"
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    };
    emit(a.output.as_ref(), &body)?;
    Ok(0)
}

fn exit_code(doc: &RunDocument, strict: bool) -> i32 {
    let s = &doc.summary;
    if s.theorem_failures > 0 || (strict && s.conjecture_failures > 0) {
        1
    } else if s.errors > 0 {
        2
    } else {
        0
    }
}

fn run_and_report(
    specs: &[CheckSpec],
    filter: &str,
    args: &RunArgs,
    explore_groups: bool,
) -> anyhow::Result<i32> {
    let opts = args.options()?;
    let pool = runner::pool()?;
    let reports = runner::run(specs, filter, &opts, &pool);
    let mut doc = RunDocument::new(filter, args.seed, &reports);
    if explore_groups {
        let ctx = Context::new();
        for (group, _, _) in qcert_core::verify::explore_groups(specs) {
            if !specs
                .iter()
                .any(|s| s.group == group && qcert_core::verify::matches_filter(s, filter))
            {
                continue;
            }
            let rows = explore(specs, &group, &ctx, &opts)?;
            doc.exploratory.extend(rows.iter().map(ExploreJson::from));
        }
    }
    let body = match args.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json()?,
        Format::Csv => doc.to_csv()?,
    };
    emit(args.output.as_ref(), &body)?;
    if args.output.is_some() {
        print!("{}", doc.to_text());
    }
    Ok(exit_code(&doc, args.strict_conjectures))
}

fn cmd_crosscheck(a: &CrosscheckArgs) -> anyhow::Result<i32> {
    let filter = match a.family.to_ascii_lowercase().as_str() {
        "all" => "crosschecks".to_string(),
        f => {
            let family: qcert_core::genfun::Family = f.parse()?;
            format!("X-{}", family.name().to_ascii_uppercase())
        }
    };
    run_and_report(&registry(), &filter, &a.run, false)
}

fn cmd_list(a: &ListArgs) -> anyhow::Result<i32> {
    #[derive(Serialize)]
    struct Row<'a> {
        id: &'a str,
        category: &'a str,
        kind: &'a str,
        engines: &'a str,
        order: usize,
        bound: Option<usize>,
        statement: &'a str,
    }
    let specs = registry();
    let rows: Vec<Row> = specs
        .iter()
        .filter(|s| qcert_core::verify::matches_filter(s, &a.only))
        .map(|s| Row {
            id: &s.id,
            category: s.category.name(),
            kind: s.kind.name(),
            engines: s.engines.name(),
            order: s.order,
            bound: s.bound,
            statement: &s.statement,
        })
        .collect();
    let body = match a.format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{:<16} {:<10} {:<14} {:<6} {}\n",
                    r.id, r.category, r.kind, r.engines, r.statement
                )
            })
            .collect(),
    };
    emit(None, &body)?;
    Ok(0)
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand(a) => cmd_expand(a),
        Command::Stat(a) => cmd_stat(a),
        Command::Verify(a) => run_and_report(&registry(), &a.only, &a.run, a.explore),
        Command::Crosscheck(a) => cmd_crosscheck(a),
        Command::ListChecks(a) => cmd_list(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_ranges() {
        assert_eq!("4".parse::<NRange>().unwrap(), NRange(4, 4));
        assert_eq!("2..7".parse::<NRange>().unwrap(), NRange(2, 7));
        assert_eq!("2..=7".parse::<NRange>().unwrap(), NRange(2, 7));
        assert!("7..2".parse::<NRange>().is_err());
    }

    #[test]
    fn bounds_need_opt_in() {
        let mut b = BoundArgs {
            max_overpartitions: Some(50),
            ..BoundArgs::default()
        };
        assert!(b.resolve().is_err());
        b.unsafe_bounds = true;
        assert_eq!(b.resolve().unwrap().overpartitions, 50);
        let lower = BoundArgs {
            max_pairs: Some(10),
            ..BoundArgs::default()
        };
        assert_eq!(lower.resolve().unwrap().pairs, 10);
    }

    #[test]
    fn exit_codes() {
        use qcert_core::verify::{Category, CheckKind, CheckReport, Status, Witness};
        let report = |category, status| CheckReport {
            id: "x".into(),
            statement: String::new(),
            category,
            kind: CheckKind::Congruence,
            engine: "series".into(),
            order: 1,
            bound: None,
            checked: 1,
            status,
            note: None,
            ms: 0,
        };
        let fail = || {
            Status::Fail(Witness {
                n: 1,
                value: "1".into(),
                expected: "0".into(),
            })
        };
        let conj = RunDocument::new("all", None, &[report(Category::Conjecture, fail())]);
        assert_eq!(exit_code(&conj, false), 0);
        assert_eq!(exit_code(&conj, true), 1);
        let thm = RunDocument::new(
            "all",
            None,
            &[
                report(Category::Theorem, fail()),
                report(Category::Theorem, Status::Error("e".into())),
            ],
        );
        assert_eq!(exit_code(&thm, false), 1);
        let err = RunDocument::new(
            "all",
            None,
            &[report(Category::Identity, Status::Error("e".into()))],
        );
        assert_eq!(exit_code(&err, false), 2);
        assert_eq!(exit_code(&RunDocument::new("all", None, &[]), true), 0);
    }

    #[test]
    fn cli_parses() {
        Cli::try_parse_from(["qcert", "verify", "--only", "T1", "--order", "3"]).unwrap();
        Cli::try_parse_from(["qcert", "crosscheck", "--family", "dyson", "--max-n", "30"]).unwrap();
        assert!(Cli::try_parse_from(["qcert", "expand"]).is_err());
    }
}
