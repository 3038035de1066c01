//! Tri-state outcomes for property checks.
//!
//! Finite checks always resolve to [`Verdict::Holds`] or [`Verdict::Fails`];
//! the `Unknown` state only arises from bounded searches over the symbolic
//! instances, where a scan that finds no counterexample proves nothing.

use serde::Serialize;
use std::fmt;

/// How a positive verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confirmation {
    /// Every instance of the quantified statement was checked.
    Exhaustive,
    /// The quantified set is empty, so the statement holds with no content.
    Vacuous,
    /// A hand-written per-instance argument covers the infinite part of the
    /// domain; the string records the argument.
    Analytic(&'static str),
}

/// Outcome of a property check, carrying a structured counterexample on
/// failure.
///
/// Witnesses are always the lexicographically smallest violating tuple in
/// the check's scan order, so they are stable across runs and thread counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds(Confirmation),
    Fails(W),
    /// A bounded search neither confirmed nor refuted the property; the
    /// string describes the searched region.
    Unknown { bound: String },
}

impl<W> Verdict<W> {
    pub fn holds() -> Self {
        Verdict::Holds(Confirmation::Exhaustive)
    }

    pub fn vacuous() -> Self {
        Verdict::Holds(Confirmation::Vacuous)
    }

    pub fn analytic(reason: &'static str) -> Self {
        Verdict::Holds(Confirmation::Analytic(reason))
    }

    pub fn unknown(bound: impl Into<String>) -> Self {
        Verdict::Unknown { bound: bound.into() }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, Verdict::Holds(Confirmation::Vacuous))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(true)` / `Some(false)` for resolved checks, `None` for `Unknown`.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds(_) => Some(true),
            Verdict::Fails(_) => Some(false),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds(c) => Verdict::Holds(c),
            Verdict::Fails(w) => Verdict::Fails(f(w)),
            Verdict::Unknown { bound } => Verdict::Unknown { bound },
        }
    }
}

impl<W: fmt::Display> Verdict<W> {
    /// Flatten into the JSON-facing form used by profiles and reports.
    pub fn entry(&self) -> ReportEntry {
        match self {
            Verdict::Holds(Confirmation::Exhaustive) => ReportEntry {
                status: Status::Holds,
                witness: None,
                note: None,
            },
            Verdict::Holds(Confirmation::Vacuous) => ReportEntry {
                status: Status::Holds,
                witness: None,
                note: Some("vacuous".to_string()),
            },
            Verdict::Holds(Confirmation::Analytic(reason)) => ReportEntry {
                status: Status::Holds,
                witness: None,
                note: Some(format!("analytic: {reason}")),
            },
            Verdict::Fails(w) => ReportEntry {
                status: Status::Fails,
                witness: Some(w.to_string()),
                note: None,
            },
            Verdict::Unknown { bound } => ReportEntry {
                status: Status::Unknown,
                witness: None,
                note: Some(bound.clone()),
            },
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds(Confirmation::Exhaustive) => write!(f, "holds"),
            Verdict::Holds(Confirmation::Vacuous) => write!(f, "holds (vacuous)"),
            Verdict::Holds(Confirmation::Analytic(r)) => write!(f, "holds (analytic: {r})"),
            Verdict::Fails(w) => write!(f, "fails, witness {w}"),
            Verdict::Unknown { bound } => write!(f, "unknown ({bound})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Unknown,
    Skipped,
}

/// One profile entry: a verdict flattened to a stable, serializable shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportEntry {
    /// Entry for a check whose precondition is not met (for example a
    /// semidomain-only check on a semiring with zero divisors).
    pub fn skipped(reason: impl Into<String>) -> Self {
        ReportEntry {
            status: Status::Skipped,
            witness: None,
            note: Some(reason.into()),
        }
    }
}

impl fmt::Display for ReportEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Holds => write!(f, "holds")?,
            Status::Fails => write!(f, "fails")?,
            Status::Unknown => write!(f, "unknown")?,
            Status::Skipped => write!(f, "skipped")?,
        }
        if let Some(w) = &self.witness {
            write!(f, ", witness {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}
