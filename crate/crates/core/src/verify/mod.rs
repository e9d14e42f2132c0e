//! Declarative checks of congruences, identities and conjectures.
//!
//! A [`CheckSpec`] compares two [`Side`]s along an arithmetic progression of
//! `n`. Counter terms can be evaluated by the series engine (through the
//! rank-difference and rank generating functions) or by exhaustive
//! enumeration; crank-based counters only have the enumeration engine.
//!
//! `order` is the truncation order of the statement's own series: for
//! congruences and relations the largest `n` examined, for identities with a
//! progression `Mn + i` the order of the right-hand side in `q^n`.

mod context;
mod registry;
mod run;

pub use context::{Artifact, Context, Job, SeriesKey};
pub use registry::{explore_groups, registry};
pub use run::{
    explore, jobs, matches_filter, mutations, run_all, run_check, EngineChoice, ExploreRow,
    RunOptions, PAIR_POINTS,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Counter, EnumBounds};
use crate::genfun::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Theorem,
    Identity,
    Conjecture,
    CrossCheck,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Theorem,
        Category::Identity,
        Category::Conjecture,
        Category::CrossCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::Theorem => "theorem",
            Category::Identity => "identity",
            Category::Conjecture => "conjecture",
            Category::CrossCheck => "crosscheck",
        }
    }

    /// Plural used by run filters.
    pub fn filter_name(self) -> &'static str {
        match self {
            Category::Theorem => "theorems",
            Category::Identity => "identities",
            Category::Conjecture => "conjectures",
            Category::CrossCheck => "crosschecks",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    /// `lhs − rhs ≡ 0 (mod p)` at every sampled `n`.
    Congruence,
    /// `Σ lhs(Mn + i) qⁿ = rhs` coefficientwise.
    ExactIdentity,
    /// `lhs(n) = rhs(n)` at every sampled `n`.
    ExactRelation,
    /// Series and enumeration engines agree.
    OracleXcheck,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Congruence => "congruence",
            CheckKind::ExactIdentity => "exact-identity",
            CheckKind::ExactRelation => "exact-relation",
            CheckKind::OracleXcheck => "oracle-xcheck",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engines {
    Series,
    Enum,
    Both,
    /// Counter terms by series, crank terms by enumeration.
    Mixed,
}

impl Engines {
    pub fn name(self) -> &'static str {
        match self {
            Engines::Series => "series",
            Engines::Enum => "enum",
            Engines::Both => "both",
            Engines::Mixed => "mixed",
        }
    }
}

/// `coeff · counter(residue, modulus, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: i64,
    pub counter: Counter,
    pub residue: u32,
    pub modulus: u32,
}

impl Term {
    pub fn new(coeff: i64, counter: Counter, residue: u32, modulus: u32) -> Self {
        Term {
            coeff,
            counter,
            residue,
            modulus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Zero,
    Terms(Vec<Term>),
    /// A [`closed_form`](crate::genfun::closed_form) id.
    Form(String),
    /// Both sides of the Watson-type expansion for a family.
    Thmain(Family),
    /// Series against enumeration for a family (`PairGeneric` for pairs).
    Oracle(Family),
}

impl Side {
    pub fn terms(&self) -> &[Term] {
        match self {
            Side::Terms(t) => t,
            _ => &[],
        }
    }
}

/// `n = step·m + residue` for `m ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Progression {
    pub step: u32,
    pub residue: u32,
}

impl Progression {
    pub fn all() -> Self {
        Progression {
            step: 1,
            residue: 0,
        }
    }

    pub fn new(step: u32, residue: u32) -> Self {
        Progression { step, residue }
    }

    pub fn at(&self, m: usize) -> usize {
        self.step as usize * m + self.residue as usize
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.step, self.residue) {
            (1, 0) => write!(f, "n"),
            (s, 0) => write!(f, "{s}n"),
            (s, r) => write!(f, "{s}n+{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    /// Specs generated from one statement for several residues share a group.
    pub group: String,
    pub statement: String,
    pub category: Category,
    pub kind: CheckKind,
    pub lhs: Side,
    pub rhs: Side,
    pub modulus: Option<u64>,
    pub progression: Progression,
    pub engines: Engines,
    /// Default series order.
    pub order: usize,
    /// Default enumeration bound on `n`, when an enumeration engine applies.
    pub bound: Option<usize>,
}

impl CheckSpec {
    /// Every counter term on either side.
    pub fn all_terms(&self) -> impl Iterator<Item = &Term> {
        self.lhs.terms().iter().chain(self.rhs.terms())
    }

    pub fn families(&self) -> Vec<Family> {
        let mut out: Vec<Family> = self
            .all_terms()
            .filter_map(|t| Family::of_counter(t.counter))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Smallest order at which the check samples anything beyond its first
    /// point.
    pub fn min_order(&self) -> usize {
        match self.kind {
            CheckKind::ExactIdentity => 1,
            CheckKind::OracleXcheck => 1,
            _ => self.progression.residue as usize + self.progression.step as usize,
        }
    }

    /// Checks the structural invariants: nonzero coefficients, residues below
    /// their moduli and a valid progression.
    pub fn validate(&self, bounds: &EnumBounds) -> crate::Result<()> {
        use crate::Error;
        if self.progression.step == 0 || self.progression.residue >= self.progression.step {
            return Err(Error::InvalidArgument(alloc::format!(
                "{}: bad progression",
                self.id
            )));
        }
        for t in self.all_terms() {
            if t.coeff == 0 || t.modulus == 0 || t.residue >= t.modulus {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{}: bad term {t:?}",
                    self.id
                )));
            }
        }
        if self.kind == CheckKind::Congruence && self.modulus.is_none_or(|p| p < 2) {
            return Err(Error::InvalidArgument(alloc::format!(
                "{}: congruence needs a modulus",
                self.id
            )));
        }
        if let Some(b) = self.bound {
            for t in self.all_terms() {
                bounds.check(t.counter.statistic().class(), b as u32)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    Skipped(String),
    /// The check could not run (infrastructure problem, not a verdict).
    Error(String),
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail(_) => "FAIL",
            Status::Skipped(_) => "SKIPPED",
            Status::Error(_) => "ERROR",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub statement: String,
    pub category: Category,
    pub kind: CheckKind,
    /// Engines actually used, e.g. `series+enum`.
    pub engine: String,
    pub order: usize,
    pub bound: Option<usize>,
    /// Number of sampled points compared.
    pub checked: usize,
    pub status: Status,
    pub note: Option<String>,
    /// Wall time, filled in by callers that measure it.
    pub ms: u64,
}

impl CheckReport {
    /// `PASS`, `FAIL`, … prefixed with `CONJECTURE-` for conjectures.
    pub fn label(&self) -> String {
        if self.category == Category::Conjecture {
            alloc::format!("CONJECTURE-{}", self.status.name())
        } else {
            self.status.name().into()
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

/// Totals over a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub errors: usize,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail(_) => {
                    s.fail += 1;
                    if r.category == Category::Conjecture {
                        s.conjecture_failures += 1;
                    } else {
                        s.theorem_failures += 1;
                    }
                }
                Status::Skipped(_) => s.skipped += 1,
                Status::Error(_) => s.errors += 1,
            }
        }
        s
    }
}
