use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Category, CheckKind, CheckSpec, Engines, Progression, Side, Term};
use crate::combinatorics::Counter;
use crate::genfun::Family;

/// `Σ c·(T(b, k) − T(k − b, k))` over the given `(b, c)`.
fn anti(counter: Counter, k: u32, pairs: &[(u32, i64)]) -> Vec<Term> {
    let mut out = Vec::new();
    for &(b, c) in pairs {
        out.push(Term::new(c, counter, b, k));
        out.push(Term::new(-c, counter, k - b, k));
    }
    out
}

fn join(a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    let mut a = a;
    a.extend(b);
    a
}

fn fmt_terms(terms: &[Term], arg: &str) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = t.coeff.abs();
        let sign = if t.coeff < 0 { "-" } else { "+" };
        if i == 0 {
            if t.coeff < 0 {
                s.push('-');
            }
        } else {
            s.push(' ');
            s.push_str(sign);
            s.push(' ');
        }
        if c != 1 {
            s.push_str(&alloc::format!("{c}"));
        }
        s.push_str(&alloc::format!(
            "{}({},{},{arg})",
            t.counter,
            t.residue,
            t.modulus
        ));
    }
    s
}

fn fmt_side(side: &Side, arg: &str) -> String {
    match side {
        Side::Zero => "0".into(),
        Side::Terms(t) => fmt_terms(t, arg),
        Side::Form(id) => alloc::format!("[{id}]"),
        Side::Thmain(f) => alloc::format!("two-parameter series for {f}"),
        Side::Oracle(f) => alloc::format!("{f}"),
    }
}

fn statement(kind: CheckKind, lhs: &Side, rhs: &Side, p: Option<u64>, prog: Progression) -> String {
    let arg = alloc::format!("{prog}");
    match kind {
        CheckKind::Congruence => match rhs {
            Side::Zero => alloc::format!("{} ≡ 0 (mod {})", fmt_side(lhs, &arg), p.unwrap_or(0)),
            _ => alloc::format!(
                "Σ ({}) qⁿ ≡ {} (mod {})",
                fmt_side(lhs, "n"),
                fmt_side(rhs, "n"),
                p.unwrap_or(0)
            ),
        },
        CheckKind::ExactRelation => {
            alloc::format!("{} = {}", fmt_side(lhs, &arg), fmt_side(rhs, &arg))
        }
        CheckKind::ExactIdentity => match (lhs, rhs) {
            (Side::Thmain(f), _) => {
                alloc::format!(
                    "two-parameter series for {f} equals its Lerch-type expansion at x = 1 + ε"
                )
            }
            (Side::Terms(_), _) => {
                alloc::format!("Σ ({}) qⁿ = {}", fmt_side(lhs, &arg), fmt_side(rhs, "n"))
            }
            _ => alloc::format!("{} = {}", fmt_side(lhs, "n"), fmt_side(rhs, "n")),
        },
        CheckKind::OracleXcheck => {
            alloc::format!(
                "series and enumeration engines agree for {}",
                fmt_side(lhs, &arg)
            )
        }
    }
}

struct Builder {
    id: String,
    group: String,
    category: Category,
    kind: CheckKind,
    lhs: Side,
    rhs: Side,
    modulus: Option<u64>,
    progression: Progression,
    engines: Engines,
    order: usize,
    bound: Option<usize>,
}

impl Builder {
    fn new(category: Category, kind: CheckKind, id: &str, lhs: Side, rhs: Side) -> Self {
        Builder {
            id: id.into(),
            group: id.into(),
            category,
            kind,
            lhs,
            rhs,
            modulus: None,
            progression: Progression::all(),
            engines: Engines::Series,
            order: 200,
            bound: None,
        }
    }

    fn modulo(mut self, p: u64) -> Self {
        self.modulus = Some(p);
        self
    }

    fn along(mut self, step: u32, residue: u32) -> Self {
        self.progression = Progression::new(step, residue);
        if step > 1 {
            self.id = alloc::format!("{}-{residue}", self.group);
        }
        self
    }

    fn engines(mut self, e: Engines, bound: Option<usize>) -> Self {
        self.engines = e;
        self.bound = bound;
        self
    }

    fn order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    fn named(mut self, id: &str) -> Self {
        self.id = id.into();
        self
    }

    fn build(self) -> CheckSpec {
        let statement = statement(
            self.kind,
            &self.lhs,
            &self.rhs,
            self.modulus,
            self.progression,
        );
        CheckSpec {
            id: self.id,
            group: self.group,
            statement,
            category: self.category,
            kind: self.kind,
            lhs: self.lhs,
            rhs: self.rhs,
            modulus: self.modulus,
            progression: self.progression,
            engines: self.engines,
            order: self.order,
            bound: self.bound,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn congruences(
    out: &mut Vec<CheckSpec>,
    category: Category,
    group: &str,
    terms: Vec<Term>,
    p: u64,
    step: u32,
    residues: &[u32],
    engines: Engines,
    order: usize,
    bound: Option<usize>,
) {
    for &i in residues {
        out.push(
            Builder::new(
                category,
                CheckKind::Congruence,
                group,
                Side::Terms(terms.clone()),
                Side::Zero,
            )
            .modulo(p)
            .along(step, i)
            .engines(engines, bound)
            .order(order)
            .build(),
        );
    }
}

fn relations(
    out: &mut Vec<CheckSpec>,
    group: &str,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
    step: u32,
    residues: &[u32],
    engines: Engines,
) {
    for &i in residues {
        out.push(
            Builder::new(
                Category::Conjecture,
                CheckKind::ExactRelation,
                group,
                Side::Terms(lhs.clone()),
                Side::Terms(rhs.clone()),
            )
            .along(step, i)
            .engines(engines, Some(60))
            .order(60)
            .build(),
        );
    }
}

fn form_identity(id: &str, lhs: &str, rhs: &str, order: usize) -> CheckSpec {
    Builder::new(
        Category::Identity,
        CheckKind::ExactIdentity,
        id,
        Side::Form(lhs.into()),
        Side::Form(rhs.into()),
    )
    .order(order)
    .build()
}

fn series_identity(id: &str, lhs: Vec<Term>, rhs: &str, order: usize) -> CheckSpec {
    Builder::new(
        Category::Identity,
        CheckKind::ExactIdentity,
        id,
        Side::Terms(lhs),
        Side::Form(rhs.into()),
    )
    .order(order)
    .build()
}

fn form_congruence(id: &str, lhs: Vec<Term>, rhs: &str, p: u64) -> CheckSpec {
    Builder::new(
        Category::Identity,
        CheckKind::Congruence,
        id,
        Side::Terms(lhs),
        Side::Form(rhs.into()),
    )
    .modulo(p)
    .build()
}

/// Every check, in a fixed order.
pub fn registry() -> Vec<CheckSpec> {
    use Category::*;
    use Counter::*;
    let mut r = Vec::new();

    // theorems
    let five = |c| anti(c, 5, &[(1, 1), (2, 2)]);
    congruences(
        &mut r,
        Theorem,
        "T1",
        five(NtBar2),
        5,
        5,
        &[2],
        Engines::Both,
        302,
        Some(37),
    );
    let t2 = join(anti(NtBar, 3, &[(1, 1)]), anti(NtBar2, 3, &[(1, -1)]));
    r.push(
        Builder::new(
            Theorem,
            CheckKind::Congruence,
            "T2",
            Side::Terms(t2.clone()),
            Side::Zero,
        )
        .modulo(3)
        .along(3, 0)
        .named("T2a")
        .engines(Engines::Both, Some(37))
        .order(302)
        .build(),
    );
    r.push(
        Builder::new(
            Theorem,
            CheckKind::Congruence,
            "T2",
            Side::Terms(t2),
            Side::Zero,
        )
        .modulo(3)
        .along(3, 1)
        .named("T2b")
        .engines(Engines::Both, Some(37))
        .order(302)
        .build(),
    );
    congruences(
        &mut r,
        Theorem,
        "T3",
        five(Nt2),
        5,
        5,
        &[1],
        Engines::Both,
        302,
        Some(76),
    );
    congruences(
        &mut r,
        Theorem,
        "A-NT5",
        five(Nt),
        5,
        5,
        &[1, 4],
        Engines::Both,
        302,
        Some(60),
    );
    let seven = anti(Nt, 7, &[(1, 1), (2, 1), (3, -1)]);
    congruences(
        &mut r,
        Theorem,
        "A-NT7",
        seven,
        7,
        7,
        &[1, 5],
        Engines::Both,
        302,
        Some(60),
    );
    let new7a = anti(Nt, 7, &[(1, 1), (3, 2)]);
    congruences(
        &mut r,
        Theorem,
        "NEW7A",
        new7a,
        7,
        7,
        &[1, 3, 4, 5],
        Engines::Both,
        302,
        Some(60),
    );
    let new7b = anti(Nt, 7, &[(2, 1), (3, 4)]);
    congruences(
        &mut r,
        Theorem,
        "NEW7B",
        new7b,
        7,
        7,
        &[0, 1, 5],
        Engines::Both,
        302,
        Some(60),
    );

    // the proof chains
    r.push(series_identity(
        "ID-CONM2OV51",
        anti(NtBar2, 5, &[(1, 1)]),
        "conm2ovmod51",
        100,
    ));
    r.push(series_identity(
        "ID-CONM2OV52",
        anti(NtBar2, 5, &[(2, 1)]),
        "conm2ovmod52",
        100,
    ));
    r.push(series_identity(
        "ID-CONM251",
        anti(Nt2, 5, &[(1, 1)]),
        "conm2mod51",
        100,
    ));
    r.push(series_identity(
        "ID-CONM252",
        anti(Nt2, 5, &[(2, 1)]),
        "conm2mod52",
        100,
    ));
    r.push(series_identity(
        "ID-THM2-OV",
        anti(NtBar, 3, &[(1, 1)]),
        "thm2-ov",
        200,
    ));
    r.push(series_identity(
        "ID-THM2-OVM2",
        anti(NtBar2, 3, &[(1, 1)]),
        "thm2-ovm2",
        200,
    ));
    r.push(form_congruence("ID-OVS131", five(NtBar2), "ovs131", 5));
    r.push(form_identity(
        "ID-OVS131-SUM",
        "ovs131-onesided",
        "ovs131",
        200,
    ));
    r.push(
        Builder::new(
            Identity,
            CheckKind::ExactIdentity,
            "ID-OVS132",
            Side::Terms(alloc::vec![
                Term::new(1, NBar2, 1, 5),
                Term::new(-1, NBar2, 2, 5)
            ]),
            Side::Form("ovs132".into()),
        )
        .engines(Engines::Both, Some(30))
        .order(100)
        .build(),
    );
    r.push(form_congruence("ID-M2S131", five(Nt2), "m2s131", 5));
    r.push(form_identity(
        "ID-M2S131-SUM",
        "m2s131-onesided",
        "m2s131",
        200,
    ));
    r.push(
        Builder::new(
            Identity,
            CheckKind::ExactIdentity,
            "ID-M2S132",
            Side::Terms(alloc::vec![Term::new(1, N2, 1, 5), Term::new(-1, N2, 2, 5)]),
            Side::Form("m2s132".into()),
        )
        .engines(Engines::Both, Some(60))
        .order(100)
        .build(),
    );
    let dis1 = join(anti(NtBar, 3, &[(1, 1)]), anti(NtBar2, 3, &[(1, -1)]));
    r.push(form_congruence("ID-DIS1", dis1, "dis1-rhs", 3));
    r.push(form_identity("ID-DIS2", "dis2-lhs", "dis2-rhs", 150));
    r.push(form_identity(
        "ID-DIS2-ALT",
        "dis2-lhs",
        "dis2-rhs-alt",
        150,
    ));
    r.push(form_identity("ID-DIS3", "dis3-lhs", "dis3-rhs", 150));
    r.push(form_identity("ID-DIS3-MID", "dis3-lhs", "dis3-mid", 150));
    r.push(form_identity(
        "ID-LEMMA42",
        "lemma42-lhs",
        "lemma42-rhs",
        200,
    ));
    for f in Family::SPECIALIZED {
        let id = alloc::format!("ID-THMAIN-{}", f.name().to_ascii_uppercase());
        r.push(
            Builder::new(
                Identity,
                CheckKind::ExactIdentity,
                &id,
                Side::Thmain(f),
                Side::Zero,
            )
            .order(40)
            .build(),
        );
    }

    // conjectures
    let id7 = |id: &str, pairs: &[(u32, i64)], residue: u32, rhs: &str| {
        Builder::new(
            Conjecture,
            CheckKind::ExactIdentity,
            id,
            Side::Terms(anti(Nt, 7, pairs)),
            Side::Form(rhs.into()),
        )
        .along(7, residue)
        .named(id)
        .engines(Engines::Both, Some(60))
        .order(150)
        .build()
    };
    r.push(id7("C-ID7125", &[(1, 1), (2, 3)], 5, "id7125-rhs"));
    r.push(id7("C-ID7135", &[(1, 1), (3, 2)], 4, "id7135-rhs"));
    let c116 = anti(Nt, 11, &[(1, 1), (2, 3), (3, -4), (4, 3), (5, 3)]);
    congruences(
        &mut r,
        Conjecture,
        "C-11",
        c116,
        11,
        11,
        &[6],
        Engines::Both,
        200,
        Some(60),
    );
    let c111 = anti(Nt, 11, &[(1, 1), (2, -3), (3, 5), (4, -2), (5, 4)]);
    congruences(
        &mut r,
        Conjecture,
        "C-11",
        c111,
        11,
        11,
        &[1],
        Engines::Both,
        200,
        Some(60),
    );
    let c131 = anti(Nt, 13, &[(1, 1), (2, 1), (3, 6), (6, 3)]);
    congruences(
        &mut r,
        Conjecture,
        "C-13",
        c131,
        13,
        13,
        &[1],
        Engines::Both,
        200,
        Some(60),
    );
    let c133 = anti(Nt, 13, &[(1, 1), (3, 3), (4, -4), (5, 1), (6, -2)]);
    congruences(
        &mut r,
        Conjecture,
        "C-13",
        c133,
        13,
        13,
        &[3],
        Engines::Both,
        200,
        Some(60),
    );
    // the two C-11 (and C-13) statements are different combinations
    for s in r
        .iter_mut()
        .filter(|s| s.group == "C-11" || s.group == "C-13")
    {
        s.group = s.id.clone();
    }

    relations(
        &mut r,
        "C-EQC54",
        anti(MOmega, 5, &[(1, 1)]),
        anti(MOmega, 5, &[(3, 2)]),
        5,
        &[4],
        Engines::Enum,
    );
    let cr504 = join(anti(MOmega, 5, &[(1, 1)]), anti(Nt, 5, &[(2, 2)]));
    congruences(
        &mut r,
        Conjecture,
        "C-CR504",
        cr504,
        5,
        5,
        &[0, 4],
        Engines::Mixed,
        60,
        Some(60),
    );
    relations(
        &mut r,
        "C-EQCR52",
        anti(MOmega, 5, &[(1, 1)]),
        anti(Nt, 5, &[(3, 2)]),
        5,
        &[2],
        Engines::Mixed,
    );
    let rc512 = join(anti(Nt, 5, &[(1, 1)]), anti(MOmega, 5, &[(2, 2)]));
    congruences(
        &mut r,
        Conjecture,
        "C-RC512",
        rc512,
        5,
        5,
        &[1, 2],
        Engines::Mixed,
        60,
        Some(60),
    );
    let idcr = join(anti(Nt, 5, &[(1, 1)]), anti(MOmega, 5, &[(2, 2)]));
    r.push(
        Builder::new(
            Conjecture,
            CheckKind::ExactIdentity,
            "C-IDCR54",
            Side::Terms(idcr),
            Side::Form("idcr54-rhs".into()),
        )
        .along(5, 4)
        .named("C-IDCR54")
        .engines(Engines::Mixed, Some(60))
        .order(11)
        .build(),
    );
    relations(
        &mut r,
        "C-EQCR54",
        anti(MOmega, 5, &[(1, 1)]),
        anti(Nt, 5, &[(4, 4)]),
        5,
        &[4],
        Engines::Mixed,
    );
    let cr713 = anti(MOmega, 7, &[(1, 1), (3, 2)]);
    congruences(
        &mut r,
        Conjecture,
        "C-CR713",
        cr713,
        7,
        7,
        &[0, 2, 5, 6],
        Engines::Enum,
        60,
        Some(60),
    );
    let cr723 = anti(MOmega, 7, &[(2, 1), (3, -3)]);
    congruences(
        &mut r,
        Conjecture,
        "C-CR723",
        cr723,
        7,
        7,
        &[0, 1, 4, 5],
        Engines::Enum,
        60,
        Some(60),
    );
    // single-residue relations keep the bare id
    for s in r.iter_mut().filter(|s| s.group.starts_with("C-EQC")) {
        s.id = s.group.clone();
    }

    // oracle cross-checks
    for f in [
        Family::Dyson,
        Family::OvRank,
        Family::OvM2,
        Family::DoM2,
        Family::PairGeneric,
    ] {
        let bound = if f == Family::PairGeneric { 12 } else { 40 };
        let id = alloc::format!("X-{}", f.name().to_ascii_uppercase());
        r.push(
            Builder::new(
                CrossCheck,
                CheckKind::OracleXcheck,
                &id,
                Side::Oracle(f),
                Side::Zero,
            )
            .engines(Engines::Both, Some(bound))
            .order(bound)
            .build(),
        );
    }
    r
}

/// Congruence groups stated for a list of residues: `(group, step, claimed)`.
pub fn explore_groups(specs: &[CheckSpec]) -> Vec<(String, u32, Vec<u32>)> {
    let mut groups: BTreeMap<String, (u32, Vec<u32>)> = BTreeMap::new();
    for s in specs
        .iter()
        .filter(|s| s.kind == CheckKind::Congruence && s.progression.step > 1)
    {
        let e = groups
            .entry(s.group.clone())
            .or_insert((s.progression.step, Vec::new()));
        e.1.push(s.progression.residue);
    }
    groups
        .into_iter()
        .map(|(g, (step, res))| (g, step, res))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::EnumBounds;

    #[test]
    fn registry_is_valid_and_unique() {
        let r = registry();
        assert!(r.len() >= 30);
        let mut ids: Vec<&str> = r.iter().map(|s| s.id.as_str()).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n, "duplicate ids");
        for s in &r {
            s.validate(&EnumBounds::default()).unwrap();
        }
    }

    #[test]
    fn expected_ids_present() {
        let r = registry();
        for id in [
            "T1-2",
            "T2a",
            "T2b",
            "T3-1",
            "A-NT5-1",
            "A-NT5-4",
            "A-NT7-1",
            "A-NT7-5",
            "NEW7A-3",
            "NEW7B-0",
            "C-ID7125",
            "C-ID7135",
            "C-11-6",
            "C-11-1",
            "C-13-1",
            "C-13-3",
            "C-EQC54",
            "C-CR504-0",
            "C-CR504-4",
            "C-EQCR52",
            "C-RC512-1",
            "C-RC512-2",
            "C-IDCR54",
            "C-EQCR54",
            "C-CR713-6",
            "C-CR723-4",
            "X-PAIR",
        ] {
            assert!(r.iter().any(|s| s.id == id), "{id}");
        }
    }

    #[test]
    fn both_engine_specs_have_crosscheck_companions() {
        let r = registry();
        for s in r
            .iter()
            .filter(|s| s.engines == Engines::Both && s.kind != CheckKind::OracleXcheck)
        {
            for f in s.families() {
                let x = alloc::format!("X-{}", f.name().to_ascii_uppercase());
                assert!(r.iter().any(|c| c.id == x), "{} lacks {x}", s.id);
            }
        }
    }

    #[test]
    fn crank_terms_never_use_series_only() {
        for s in registry() {
            if s.all_terms().any(|t| t.counter == Counter::MOmega) {
                assert!(
                    matches!(s.engines, Engines::Enum | Engines::Mixed),
                    "{}",
                    s.id
                );
            }
        }
    }

    #[test]
    fn statements_render() {
        let r = registry();
        let t1 = r.iter().find(|s| s.id == "T1-2").unwrap();
        assert_eq!(
            t1.statement,
            "NTbar2(1,5,5n+2) - NTbar2(4,5,5n+2) + 2NTbar2(2,5,5n+2) - 2NTbar2(3,5,5n+2) ≡ 0 (mod 5)"
        );
        let groups = explore_groups(&r);
        let a = groups.iter().find(|g| g.0 == "A-NT5").unwrap();
        assert_eq!((a.1, a.2.clone()), (5, alloc::vec![1, 4]));
    }
}
