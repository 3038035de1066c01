//! Property profiles, the theorem cross-check harness, and the corpus
//! verification runner.
//!
//! Every equivalence and implication among the classified properties is
//! asserted per structure from independently computed condition values.
//! The harness can negate any single condition before asserting — the
//! mutation hook behind `verify --mutate`, which demonstrates that the
//! suite actually depends on each predicate.

use crate::classify;
use crate::enumerate::{enumerate_semirings_capped, EnumerationCapError};
use crate::fractions::FractionSemifield;
use crate::ideals::Nonunits;
use crate::par;
use crate::semiring::FiniteSemiring;
use crate::symbolic::{self, Bound, Naturals, SymbolicSemidomain, Tropical};
use crate::verdict::{ReportEntry, Verdict};
use crate::{catalog, dot};
use serde::Serialize;
use std::fmt;

/// Every individually negatable theorem condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionId {
    LopCond1,
    LopCond2,
    LopCond3,
    LopCond4,
    LopCond5,
    Uniserial,
    Valuation,
    Gcd,
    DividedCond1,
    DividedCond2,
    DividedCond3,
    DividedCond4,
    Pvs,
    PvsLocalRoute,
    PvsSubsetRoute,
    PvsCond2,
    PvsCond3,
    PvsCond4,
    PvsCond5,
    PvsCond6,
    Scaling,
}

impl ConditionId {
    pub const ALL: [ConditionId; 21] = [
        ConditionId::LopCond1,
        ConditionId::LopCond2,
        ConditionId::LopCond3,
        ConditionId::LopCond4,
        ConditionId::LopCond5,
        ConditionId::Uniserial,
        ConditionId::Valuation,
        ConditionId::Gcd,
        ConditionId::DividedCond1,
        ConditionId::DividedCond2,
        ConditionId::DividedCond3,
        ConditionId::DividedCond4,
        ConditionId::Pvs,
        ConditionId::PvsLocalRoute,
        ConditionId::PvsSubsetRoute,
        ConditionId::PvsCond2,
        ConditionId::PvsCond3,
        ConditionId::PvsCond4,
        ConditionId::PvsCond5,
        ConditionId::PvsCond6,
        ConditionId::Scaling,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::LopCond1 => "lop-cond1",
            ConditionId::LopCond2 => "lop-cond2",
            ConditionId::LopCond3 => "lop-cond3",
            ConditionId::LopCond4 => "lop-cond4",
            ConditionId::LopCond5 => "lop-cond5",
            ConditionId::Uniserial => "uniserial",
            ConditionId::Valuation => "valuation",
            ConditionId::Gcd => "gcd",
            ConditionId::DividedCond1 => "divided-cond1",
            ConditionId::DividedCond2 => "divided-cond2",
            ConditionId::DividedCond3 => "divided-cond3",
            ConditionId::DividedCond4 => "divided-cond4",
            ConditionId::Pvs => "pvs",
            ConditionId::PvsLocalRoute => "pvs-local",
            ConditionId::PvsSubsetRoute => "pvs-subset",
            ConditionId::PvsCond2 => "pvs-cond2",
            ConditionId::PvsCond3 => "pvs-cond3",
            ConditionId::PvsCond4 => "pvs-cond4",
            ConditionId::PvsCond5 => "pvs-cond5",
            ConditionId::PvsCond6 => "pvs-cond6",
            ConditionId::Scaling => "scaling",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown condition `{0}`")]
pub struct UnknownCondition(pub String);

impl std::str::FromStr for ConditionId {
    type Err = UnknownCondition;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConditionId::ALL
            .iter()
            .find(|id| id.as_str() == s)
            .copied()
            .ok_or_else(|| UnknownCondition(s.to_string()))
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The resolved truth values of every condition on one finite structure.
/// Semidomain-only conditions are `None` on structures that fail
/// cancellativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionValues {
    pub semidomain: bool,
    pub local: bool,
    pub lop: [bool; 5],
    pub uniserial: bool,
    pub valuation: Option<bool>,
    pub gcd: Option<bool>,
    pub divided: Option<[bool; 4]>,
    pub pvs: Option<bool>,
    pub pvs_local_route: Option<bool>,
    pub pvs_subset_route: Option<bool>,
    pub pvs_conditions: Option<[bool; 6]>,
    pub scaling: Option<bool>,
}

impl ConditionValues {
    pub fn evaluate(s: &FiniteSemiring) -> ConditionValues {
        let semidomain = s.is_semidomain().is_holds();
        let lop = [
            classify::lop_cond1(s).is_holds(),
            classify::lop_cond2(s).is_holds(),
            classify::lop_cond3(s).is_holds(),
            classify::lop_cond4(s).is_holds(),
            classify::lop_cond5(s).is_holds(),
        ];
        let uniserial = classify::is_uniserial(s).is_holds();
        let local = s.is_local();
        if !semidomain {
            return ConditionValues {
                semidomain,
                local,
                lop,
                uniserial,
                valuation: None,
                gcd: None,
                divided: None,
                pvs: None,
                pvs_local_route: None,
                pvs_subset_route: None,
                pvs_conditions: None,
                scaling: None,
            };
        }
        let fsf = FractionSemifield::build(s).expect("semidomain checked above");
        fn unwrap<W>(r: Result<Verdict<W>, crate::fractions::NotSemidomain>) -> bool {
            r.expect("semidomain checked above").is_holds()
        }
        ConditionValues {
            semidomain,
            local,
            lop,
            uniserial,
            valuation: Some(unwrap(classify::is_valuation(s))),
            gcd: Some(unwrap(classify::is_gcd_semidomain(s))),
            divided: Some([
                unwrap(classify::divided_cond1(s)),
                unwrap(classify::divided_cond2(s)),
                unwrap(classify::divided_cond3(s)),
                unwrap(classify::divided_cond4(s)),
            ]),
            pvs: Some(fsf.is_pvs().is_holds()),
            pvs_local_route: Some(fsf.is_pvs_local_route().is_holds()),
            pvs_subset_route: fsf.maximal_comparability().ok().map(|v| v.is_holds()),
            pvs_conditions: Some([
                unwrap(classify::pvs_cond1(s)),
                unwrap(classify::pvs_cond2(s)),
                unwrap(classify::pvs_cond3(s)),
                unwrap(classify::pvs_cond4(s)),
                unwrap(classify::pvs_cond5(s)),
                unwrap(classify::pvs_cond6(s)),
            ]),
            scaling: fsf.scaling_comparability().ok().map(|v| v.is_holds()),
        }
    }

    /// Negate one condition's resolved value (no effect when the
    /// condition was skipped for this structure).
    pub fn negate(&mut self, id: ConditionId) {
        fn flip(v: &mut Option<bool>) {
            if let Some(b) = v {
                *b = !*b;
            }
        }
        match id {
            ConditionId::LopCond1 => self.lop[0] = !self.lop[0],
            ConditionId::LopCond2 => self.lop[1] = !self.lop[1],
            ConditionId::LopCond3 => self.lop[2] = !self.lop[2],
            ConditionId::LopCond4 => self.lop[3] = !self.lop[3],
            ConditionId::LopCond5 => self.lop[4] = !self.lop[4],
            ConditionId::Uniserial => self.uniserial = !self.uniserial,
            ConditionId::Valuation => flip(&mut self.valuation),
            ConditionId::Gcd => flip(&mut self.gcd),
            ConditionId::DividedCond1 => {
                if let Some(d) = &mut self.divided {
                    d[0] = !d[0];
                }
            }
            ConditionId::DividedCond2 => {
                if let Some(d) = &mut self.divided {
                    d[1] = !d[1];
                }
            }
            ConditionId::DividedCond3 => {
                if let Some(d) = &mut self.divided {
                    d[2] = !d[2];
                }
            }
            ConditionId::DividedCond4 => {
                if let Some(d) = &mut self.divided {
                    d[3] = !d[3];
                }
            }
            ConditionId::Pvs => flip(&mut self.pvs),
            ConditionId::PvsLocalRoute => flip(&mut self.pvs_local_route),
            ConditionId::PvsSubsetRoute => flip(&mut self.pvs_subset_route),
            ConditionId::PvsCond2 => {
                if let Some(p) = &mut self.pvs_conditions {
                    p[1] = !p[1];
                }
            }
            ConditionId::PvsCond3 => {
                if let Some(p) = &mut self.pvs_conditions {
                    p[2] = !p[2];
                }
            }
            ConditionId::PvsCond4 => {
                if let Some(p) = &mut self.pvs_conditions {
                    p[3] = !p[3];
                }
            }
            ConditionId::PvsCond5 => {
                if let Some(p) = &mut self.pvs_conditions {
                    p[4] = !p[4];
                }
            }
            ConditionId::PvsCond6 => {
                if let Some(p) = &mut self.pvs_conditions {
                    p[5] = !p[5];
                }
            }
            ConditionId::Scaling => flip(&mut self.scaling),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail { detail: String },
    Skipped { reason: String },
}

impl CheckOutcome {
    pub fn failed(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub theorem: &'static str,
    pub outcome: CheckOutcome,
}

fn equivalence(theorem: &'static str, values: Option<&[bool]>) -> TheoremCheck {
    let outcome = match values {
        None => CheckOutcome::Skipped {
            reason: "not a semidomain".to_string(),
        },
        Some(vs) => {
            if vs.iter().all(|&v| v == vs[0]) {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail {
                    detail: format!("conditions resolved as {vs:?}"),
                }
            }
        }
    };
    TheoremCheck { theorem, outcome }
}

fn implication(theorem: &'static str, hyp: Option<bool>, conc: Option<bool>) -> TheoremCheck {
    let outcome = match (hyp, conc) {
        (None, _) | (_, None) => CheckOutcome::Skipped {
            reason: "not a semidomain".to_string(),
        },
        (Some(true), Some(false)) => CheckOutcome::Fail {
            detail: "hypothesis holds but conclusion fails".to_string(),
        },
        _ => CheckOutcome::Pass,
    };
    TheoremCheck { theorem, outcome }
}

fn iff(theorem: &'static str, left: Option<bool>, right: Option<bool>) -> TheoremCheck {
    let outcome = match (left, right) {
        (None, _) | (_, None) => CheckOutcome::Skipped {
            reason: "not a semidomain".to_string(),
        },
        (Some(l), Some(r)) if l == r => CheckOutcome::Pass,
        (Some(l), Some(r)) => CheckOutcome::Fail {
            detail: format!("sides resolved as {l} and {r}"),
        },
    };
    TheoremCheck { theorem, outcome }
}

/// Assert every theorem over resolved condition values.
pub fn theorem_checks(v: &ConditionValues) -> Vec<TheoremCheck> {
    let mut checks = vec![
        equivalence("lop-equivalence", Some(&v.lop)),
        implication(
            "uniserial-implies-lop",
            Some(v.uniserial),
            Some(v.lop[0]),
        ),
        iff("valuation-iff-uniserial", v.valuation, v.semidomain.then_some(v.uniserial)),
        iff(
            "valuation-iff-gcd-and-lop",
            v.valuation,
            v.gcd.map(|g| g && v.lop[0]),
        ),
        implication("valuation-implies-pvs", v.valuation, v.pvs),
        implication("pvs-implies-lop", v.pvs, v.semidomain.then_some(v.lop[0])),
        equivalence("divided-equivalence", v.divided.as_ref().map(|d| &d[..])),
        implication(
            "divided-implies-lop",
            v.divided.map(|d| d[0]),
            v.semidomain.then_some(v.lop[0]),
        ),
        equivalence(
            "pvs-nonunit-equivalence",
            v.pvs_conditions.as_ref().map(|p| &p[..]),
        ),
        implication(
            "scaling-implies-lop",
            v.scaling,
            v.semidomain.then_some(v.lop[0]),
        ),
    ];
    // route agreement: definition vs local characterization vs fraction
    // comparability; the third is only defined on local semidomains
    let route_values: Option<Vec<bool>> = match (v.pvs, v.pvs_local_route) {
        (Some(a), Some(b)) => {
            let mut routes = vec![a, b];
            if let Some(c) = v.pvs_subset_route {
                routes.push(c);
            }
            Some(routes)
        }
        _ => None,
    };
    checks.push(equivalence("pvs-route-agreement", route_values.as_deref()));
    checks
}

/// Implementation cross-checks computed directly on the structure (two
/// radical routes, two divisibility routes, the finite fraction
/// collapse). These are not mutation targets — they compare redundant
/// computations, not theorem conditions.
pub fn structure_checks(s: &FiniteSemiring) -> Vec<TheoremCheck> {
    let mut checks = Vec::new();

    let lattice = s.ideal_lattice();
    let radical_mismatch = lattice
        .iter()
        .find(|i| i.radical_via_primes() != i.radical_via_krull());
    checks.push(TheoremCheck {
        theorem: "radical-routes-agree",
        outcome: match radical_mismatch {
            None => CheckOutcome::Pass,
            Some(i) => CheckOutcome::Fail {
                detail: format!("routes disagree on {i}"),
            },
        },
    });

    let divisibility_mismatch = s.elements().find_map(|d| {
        s.elements().find_map(|a| {
            (s.divides(d, a) != s.divides_via_ideals(d, a)).then_some((d, a))
        })
    });
    checks.push(TheoremCheck {
        theorem: "divisibility-ideal-agreement",
        outcome: match divisibility_mismatch {
            None => CheckOutcome::Pass,
            Some((d, a)) => CheckOutcome::Fail {
                detail: format!("routes disagree on {d} | {a}"),
            },
        },
    });

    let collapse = match FractionSemifield::build(s) {
        Err(_) => CheckOutcome::Skipped {
            reason: "not a semidomain".to_string(),
        },
        Ok(fsf) => {
            if fsf.class_count() != s.order() {
                CheckOutcome::Fail {
                    detail: format!(
                        "|F(S)| = {} but |S| = {}",
                        fsf.class_count(),
                        s.order()
                    ),
                }
            } else if !fsf.embedding_onto() || !fsf.embedding_injective() {
                CheckOutcome::Fail {
                    detail: "embedding is not a bijection".to_string(),
                }
            } else {
                let mismatch = lattice.iter().filter(|i| i.is_proper()).find(|i| {
                    fsf.is_strongly_prime(i).is_holds() != i.is_prime()
                });
                match mismatch {
                    None => CheckOutcome::Pass,
                    Some(i) => CheckOutcome::Fail {
                        detail: format!("strongly-prime and prime disagree on {i}"),
                    },
                }
            }
        }
    };
    checks.push(TheoremCheck {
        theorem: "fraction-collapse",
        outcome: collapse,
    });

    let mirror = match (
        classify::divided_cond4(s),
        classify::divided_cond4_mirror(s),
    ) {
        (Err(_), _) | (_, Err(_)) => CheckOutcome::Skipped {
            reason: "not a semidomain".to_string(),
        },
        (Ok(a), Ok(b)) => {
            if a.is_holds() == b.is_holds() {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail {
                    detail: format!("statement scan {a}, mirrored scan {b}"),
                }
            }
        }
    };
    checks.push(TheoremCheck {
        theorem: "divided-cond4-mirror-agreement",
        outcome: mirror,
    });

    checks
}

/// Full cross-check of one structure: theorem assertions over its
/// condition values (optionally with one condition negated) plus the
/// implementation cross-checks, sorted by theorem label.
pub fn cross_check_theorems(
    s: &FiniteSemiring,
    mutate: Option<ConditionId>,
) -> Vec<TheoremCheck> {
    let mut values = ConditionValues::evaluate(s);
    if let Some(id) = mutate {
        values.negate(id);
    }
    let mut checks = theorem_checks(&values);
    checks.extend(structure_checks(s));
    checks.sort_by_key(|c| c.theorem);
    checks
}

// ---------------------------------------------------------------------
// Property profile (the `check` command's output)
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LopEntries {
    pub cond1: ReportEntry,
    pub cond2: ReportEntry,
    pub cond3: ReportEntry,
    pub cond4: ReportEntry,
    pub cond5: ReportEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DividedEntries {
    pub cond1: ReportEntry,
    pub cond2: ReportEntry,
    pub cond3: ReportEntry,
    pub cond4: ReportEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PvsEntries {
    pub cond1: ReportEntry,
    pub cond2: ReportEntry,
    pub cond3: ReportEntry,
    pub cond4: ReportEntry,
    pub cond5: ReportEntry,
    pub cond6: ReportEntry,
}

/// Full classification record of one finite semiring, in a stable field
/// order for byte-identical JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyProfile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub semidomain: ReportEntry,
    pub local: ReportEntry,
    pub uniserial: ReportEntry,
    pub lop: LopEntries,
    pub valuation: ReportEntry,
    pub gcd: ReportEntry,
    pub divided: DividedEntries,
    pub pvs: ReportEntry,
    pub pvs_conditions: PvsEntries,
}

const NOT_SEMIDOMAIN: &str = "not a semidomain";

/// Compute the full property profile of a finite semiring.
pub fn profile(s: &FiniteSemiring) -> PropertyProfile {
    let semidomain = s.is_semidomain();
    let local = match s.nonunits() {
        Nonunits::Ideal(_) => Verdict::holds(),
        Nonunits::NotClosed(w) => Verdict::Fails(w),
    };
    fn gated<W: fmt::Display>(
        r: Result<Verdict<W>, crate::fractions::NotSemidomain>,
    ) -> ReportEntry {
        match r {
            Ok(v) => v.entry(),
            Err(_) => ReportEntry::skipped(NOT_SEMIDOMAIN),
        }
    }
    let (pvs, pvs_cond1) = match FractionSemifield::build(s) {
        Ok(fsf) => (fsf.is_pvs().entry(), gated(classify::pvs_cond1(s))),
        Err(_) => (
            ReportEntry::skipped(NOT_SEMIDOMAIN),
            ReportEntry::skipped(NOT_SEMIDOMAIN),
        ),
    };
    PropertyProfile {
        name: s.name().map(str::to_string),
        order: s.order(),
        semidomain: semidomain.entry(),
        local: local.entry(),
        uniserial: classify::is_uniserial(s).entry(),
        lop: LopEntries {
            cond1: classify::lop_cond1(s).entry(),
            cond2: classify::lop_cond2(s).entry(),
            cond3: classify::lop_cond3(s).entry(),
            cond4: classify::lop_cond4(s).entry(),
            cond5: classify::lop_cond5(s).entry(),
        },
        valuation: gated(classify::is_valuation(s)),
        gcd: gated(classify::is_gcd_semidomain(s)),
        divided: DividedEntries {
            cond1: gated(classify::divided_cond1(s)),
            cond2: gated(classify::divided_cond2(s)),
            cond3: gated(classify::divided_cond3(s)),
            cond4: gated(classify::divided_cond4(s)),
        },
        pvs,
        pvs_conditions: PvsEntries {
            cond1: pvs_cond1,
            cond2: gated(classify::pvs_cond2(s)),
            cond3: gated(classify::pvs_cond3(s)),
            cond4: gated(classify::pvs_cond4(s)),
            cond5: gated(classify::pvs_cond5(s)),
            cond6: gated(classify::pvs_cond6(s)),
        },
    }
}

/// The profile as JSON with witness strings removed: the shape compared
/// under relabelings, where statuses are invariant but witnesses move
/// with the labels.
pub fn profile_statuses(p: &PropertyProfile) -> serde_json::Value {
    fn strip(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                map.remove("witness");
                for (_, child) in map.iter_mut() {
                    strip(child);
                }
            }
            serde_json::Value::Array(items) => items.iter_mut().for_each(strip),
            _ => {}
        }
    }
    let mut value = serde_json::to_value(p).expect("profile serializes");
    if let serde_json::Value::Object(map) = &mut value {
        map.remove("name");
    }
    strip(&mut value);
    value
}

/// Witness (or holds/skip note) for one named property of a structure —
/// the `witness` command.
pub fn property_witness(s: &FiniteSemiring, property: &str) -> Result<String, UnknownCondition> {
    fn render<W: fmt::Display>(v: Verdict<W>) -> String {
        match v {
            Verdict::Fails(w) => w.to_string(),
            Verdict::Holds(_) => "none (holds)".to_string(),
            Verdict::Unknown { bound } => format!("unknown ({bound})"),
        }
    }
    fn render_gated<W: fmt::Display, E>(r: Result<Verdict<W>, E>) -> String {
        match r {
            Ok(v) => render(v),
            Err(_) => format!("skipped ({NOT_SEMIDOMAIN})"),
        }
    }
    Ok(match property {
        "semidomain" => render(s.is_semidomain()),
        "local" => match s.nonunits() {
            Nonunits::Ideal(_) => "none (holds)".to_string(),
            Nonunits::NotClosed(w) => w.to_string(),
        },
        "uniserial" => render(classify::is_uniserial(s)),
        "lop-cond1" => render(classify::lop_cond1(s)),
        "lop-cond2" => render(classify::lop_cond2(s)),
        "lop-cond3" => render(classify::lop_cond3(s)),
        "lop-cond4" => render(classify::lop_cond4(s)),
        "lop-cond5" => render(classify::lop_cond5(s)),
        "valuation" => render_gated(classify::is_valuation(s)),
        "gcd" => render_gated(classify::is_gcd_semidomain(s)),
        "divided-cond1" => render_gated(classify::divided_cond1(s)),
        "divided-cond2" => render_gated(classify::divided_cond2(s)),
        "divided-cond3" => render_gated(classify::divided_cond3(s)),
        "divided-cond4" => render_gated(classify::divided_cond4(s)),
        "pvs" => match FractionSemifield::build(s) {
            Ok(fsf) => render(fsf.is_pvs()),
            Err(_) => format!("skipped ({NOT_SEMIDOMAIN})"),
        },
        "pvs-local" => match FractionSemifield::build(s) {
            Ok(fsf) => render(fsf.is_pvs_local_route()),
            Err(_) => format!("skipped ({NOT_SEMIDOMAIN})"),
        },
        "pvs-subset" => match FractionSemifield::build(s) {
            Ok(fsf) => match fsf.maximal_comparability() {
                Ok(v) => render(v),
                Err(e) => format!("skipped ({e})"),
            },
            Err(_) => format!("skipped ({NOT_SEMIDOMAIN})"),
        },
        "pvs-cond1" => render_gated(classify::pvs_cond1(s)),
        "pvs-cond2" => render_gated(classify::pvs_cond2(s)),
        "pvs-cond3" => render_gated(classify::pvs_cond3(s)),
        "pvs-cond4" => render_gated(classify::pvs_cond4(s)),
        "pvs-cond5" => render_gated(classify::pvs_cond5(s)),
        "pvs-cond6" => render_gated(classify::pvs_cond6(s)),
        "scaling" => match FractionSemifield::build(s) {
            Ok(fsf) => match fsf.scaling_comparability() {
                Ok(v) => render(v),
                Err(e) => format!("skipped ({e})"),
            },
            Err(_) => format!("skipped ({NOT_SEMIDOMAIN})"),
        },
        other => return Err(UnknownCondition(other.to_string())),
    })
}

/// All property names accepted by [`property_witness`].
pub const WITNESS_PROPERTIES: &[&str] = &[
    "semidomain",
    "local",
    "uniserial",
    "lop-cond1",
    "lop-cond2",
    "lop-cond3",
    "lop-cond4",
    "lop-cond5",
    "valuation",
    "gcd",
    "divided-cond1",
    "divided-cond2",
    "divided-cond3",
    "divided-cond4",
    "pvs",
    "pvs-local",
    "pvs-subset",
    "pvs-cond1",
    "pvs-cond2",
    "pvs-cond3",
    "pvs-cond4",
    "pvs-cond5",
    "pvs-cond6",
    "scaling",
];

// ---------------------------------------------------------------------
// Verification runner
// ---------------------------------------------------------------------

/// What the verification suite runs over.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Enumerate all semirings of order `2..=max_order` (0 or 1 disables
    /// enumeration).
    pub max_order: usize,
    /// Guard for the enumeration (overridable via the CLI / environment).
    pub enumeration_cap: usize,
    pub include_catalog: bool,
    pub include_symbolic: bool,
    pub bound: Bound,
    pub mutate: Option<ConditionId>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: 4,
            enumeration_cap: 4,
            include_catalog: true,
            include_symbolic: true,
            bound: Bound::default(),
            mutate: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub name: String,
    pub order: usize,
    pub semidomain: bool,
    pub checks: Vec<TheoremCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicCheck {
    pub instance: &'static str,
    pub theorem: &'static str,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub structures: usize,
    pub semidomains: usize,
    pub failures: usize,
    pub corpus: Vec<StructureReport>,
    pub symbolic: Vec<SymbolicCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Labels of every failing check, deduplicated and sorted.
    pub fn failing_theorems(&self) -> Vec<&'static str> {
        let mut labels: Vec<&'static str> = self
            .corpus
            .iter()
            .flat_map(|r| r.checks.iter())
            .filter(|c| c.outcome.failed())
            .map(|c| c.theorem)
            .chain(
                self.symbolic
                    .iter()
                    .filter(|c| c.outcome.failed())
                    .map(|c| c.theorem),
            )
            .collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// Human-readable rendering; identical bytes for identical configs.
    pub fn render_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        writeln!(
            out,
            "verified {} structures ({} semidomains)",
            self.structures, self.semidomains
        )
        .unwrap();
        if self.structures == 0 {
            writeln!(out, "warning: empty corpus, nothing to verify").unwrap();
        }
        let mut by_theorem: std::collections::BTreeMap<&'static str, (usize, usize, usize)> =
            std::collections::BTreeMap::new();
        for report in &self.corpus {
            for check in &report.checks {
                let entry = by_theorem.entry(check.theorem).or_default();
                match &check.outcome {
                    CheckOutcome::Pass => entry.0 += 1,
                    CheckOutcome::Fail { .. } => entry.1 += 1,
                    CheckOutcome::Skipped { .. } => entry.2 += 1,
                }
            }
        }
        for (theorem, (pass, fail, skip)) in &by_theorem {
            writeln!(
                out,
                "  {theorem}: {pass} pass, {fail} fail, {skip} skipped"
            )
            .unwrap();
        }
        for report in &self.corpus {
            for check in &report.checks {
                if let CheckOutcome::Fail { detail } = &check.outcome {
                    writeln!(
                        out,
                        "FAIL {} on {} (order {}): {detail}",
                        check.theorem, report.name, report.order
                    )
                    .unwrap();
                }
            }
        }
        if !self.symbolic.is_empty() {
            writeln!(out, "symbolic instances:").unwrap();
            for check in &self.symbolic {
                match &check.outcome {
                    CheckOutcome::Pass => {
                        writeln!(out, "  {} {}: pass", check.instance, check.theorem).unwrap()
                    }
                    CheckOutcome::Fail { detail } => writeln!(
                        out,
                        "FAIL {} {}: {detail}",
                        check.instance, check.theorem
                    )
                    .unwrap(),
                    CheckOutcome::Skipped { reason } => writeln!(
                        out,
                        "  {} {}: skipped ({reason})",
                        check.instance, check.theorem
                    )
                    .unwrap(),
                }
            }
        }
        writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

/// Resolved bounded verdicts for one symbolic instance; `None` is an
/// `Unknown` verdict.
#[derive(Debug, Clone, Copy, Default)]
struct SymbolicValues {
    cond5: Option<bool>,
    valuation: Option<bool>,
    divided4: Option<bool>,
    gcd: Option<bool>,
    strongly_prime: Option<bool>,
    subsetlocal: Option<bool>,
    scaling: Option<bool>,
}

fn evaluate_symbolic<D: SymbolicSemidomain>(d: &D, bound: &Bound) -> SymbolicValues {
    SymbolicValues {
        cond5: symbolic::bounded_lop_cond5(d, bound).as_bool(),
        valuation: symbolic::bounded_valuation(d, bound).as_bool(),
        divided4: symbolic::bounded_divided_cond4(d, bound).as_bool(),
        gcd: symbolic::bounded_gcd(d, bound).as_bool(),
        strongly_prime: symbolic::bounded_strongly_prime_maximal(d, bound).as_bool(),
        subsetlocal: symbolic::bounded_subsetlocal(d, bound).as_bool(),
        scaling: symbolic::bounded_scaling(d, bound).as_bool(),
    }
}

impl SymbolicValues {
    fn negate(&mut self, id: ConditionId) {
        fn flip(v: &mut Option<bool>) {
            if let Some(b) = v {
                *b = !*b;
            }
        }
        match id {
            ConditionId::LopCond5 => flip(&mut self.cond5),
            ConditionId::Valuation => flip(&mut self.valuation),
            ConditionId::DividedCond4 => flip(&mut self.divided4),
            ConditionId::Gcd => flip(&mut self.gcd),
            ConditionId::Pvs | ConditionId::PvsLocalRoute => flip(&mut self.strongly_prime),
            ConditionId::PvsSubsetRoute => flip(&mut self.subsetlocal),
            ConditionId::Scaling => flip(&mut self.scaling),
            _ => {}
        }
    }
}

fn symbolic_outcome(hyp: Option<bool>, conc: Option<bool>, kind: &str) -> CheckOutcome {
    match (kind, hyp, conc) {
        (_, None, _) | (_, _, None) => CheckOutcome::Skipped {
            reason: "unresolved within bound".to_string(),
        },
        ("implies", Some(true), Some(false)) => CheckOutcome::Fail {
            detail: "hypothesis holds but conclusion fails".to_string(),
        },
        ("implies", _, _) => CheckOutcome::Pass,
        (_, Some(l), Some(r)) if l == r => CheckOutcome::Pass,
        (_, Some(l), Some(r)) => CheckOutcome::Fail {
            detail: format!("sides resolved as {l} and {r}"),
        },
    }
}

fn symbolic_checks_for(
    instance: &'static str,
    v: &SymbolicValues,
) -> Vec<SymbolicCheck> {
    let mk = |theorem: &'static str, outcome: CheckOutcome| SymbolicCheck {
        instance,
        theorem,
        outcome,
    };
    vec![
        mk(
            "valuation-implies-pvs",
            symbolic_outcome(v.valuation, v.strongly_prime, "implies"),
        ),
        mk(
            "pvs-implies-lop",
            symbolic_outcome(v.strongly_prime, v.cond5, "implies"),
        ),
        mk(
            "valuation-iff-gcd-and-lop",
            symbolic_outcome(
                v.valuation,
                match (v.gcd, v.cond5) {
                    (Some(g), Some(l)) => Some(g && l),
                    _ => None,
                },
                "iff",
            ),
        ),
        mk(
            "divided-implies-lop",
            symbolic_outcome(v.divided4, v.cond5, "implies"),
        ),
        mk(
            "scaling-implies-lop",
            symbolic_outcome(v.scaling, v.cond5, "implies"),
        ),
        mk(
            "pvs-route-agreement",
            symbolic_outcome(v.strongly_prime, v.subsetlocal, "iff"),
        ),
    ]
}

/// Run the cross-check suite over the enumerated corpus, the catalog, and
/// the symbolic instances.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, EnumerationCapError> {
    let mut members: Vec<FiniteSemiring> = Vec::new();
    for order in 2..=cfg.max_order.max(1) {
        members.extend(enumerate_semirings_capped(order, cfg.enumeration_cap)?);
    }
    if cfg.include_catalog {
        members.extend(catalog::all());
    }
    members.sort_by_key(|s| (s.order(), s.label()));

    let corpus: Vec<StructureReport> = par::map_indexed(members.len(), |i| {
        let s = &members[i];
        StructureReport {
            name: s.label(),
            order: s.order(),
            semidomain: s.is_semidomain().is_holds(),
            checks: cross_check_theorems(s, cfg.mutate),
        }
    });

    let mut symbolic_reports = Vec::new();
    if cfg.include_symbolic {
        let mut nat = evaluate_symbolic(&Naturals, &cfg.bound);
        let mut trop = evaluate_symbolic(&Tropical, &cfg.bound);
        if let Some(id) = cfg.mutate {
            nat.negate(id);
            trop.negate(id);
        }
        symbolic_reports.extend(symbolic_checks_for("naturals", &nat));
        symbolic_reports.extend(symbolic_checks_for("tropical", &trop));
        symbolic_reports.sort_by_key(|c| (c.instance, c.theorem));
    }

    let failures = corpus
        .iter()
        .flat_map(|r| r.checks.iter())
        .filter(|c| c.outcome.failed())
        .count()
        + symbolic_reports
            .iter()
            .filter(|c| c.outcome.failed())
            .count();

    Ok(VerifyReport {
        structures: corpus.len(),
        semidomains: corpus.iter().filter(|r| r.semidomain).count(),
        failures,
        corpus,
        symbolic: symbolic_reports,
    })
}

/// Render a profile as human-readable text.
pub fn render_profile_text(p: &PropertyProfile) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    if let Some(name) = &p.name {
        writeln!(out, "name: {name}").unwrap();
    }
    writeln!(out, "order: {}", p.order).unwrap();
    writeln!(out, "semidomain: {}", p.semidomain).unwrap();
    writeln!(out, "local: {}", p.local).unwrap();
    writeln!(out, "uniserial: {}", p.uniserial).unwrap();
    for (i, e) in [&p.lop.cond1, &p.lop.cond2, &p.lop.cond3, &p.lop.cond4, &p.lop.cond5]
        .iter()
        .enumerate()
    {
        writeln!(out, "lop-cond{}: {}", i + 1, e).unwrap();
    }
    writeln!(out, "valuation: {}", p.valuation).unwrap();
    writeln!(out, "gcd: {}", p.gcd).unwrap();
    for (i, e) in [
        &p.divided.cond1,
        &p.divided.cond2,
        &p.divided.cond3,
        &p.divided.cond4,
    ]
    .iter()
    .enumerate()
    {
        writeln!(out, "divided-cond{}: {}", i + 1, e).unwrap();
    }
    writeln!(out, "pvs: {}", p.pvs).unwrap();
    for (i, e) in [
        &p.pvs_conditions.cond1,
        &p.pvs_conditions.cond2,
        &p.pvs_conditions.cond3,
        &p.pvs_conditions.cond4,
        &p.pvs_conditions.cond5,
        &p.pvs_conditions.cond6,
    ]
    .iter()
    .enumerate()
    {
        writeln!(out, "pvs-cond{}: {}", i + 1, e).unwrap();
    }
    out
}

/// Re-export for CLI convenience.
pub use dot::{ideal_lattice_dot, ideal_lattice_text};
