//! Finite semirings presented by Cayley tables.
//!
//! A semiring here is a pair of commutative monoids `(S, +, 0)` and
//! `(S, ·, 1)` over the same carrier with `1 ≠ 0`, linked by
//! `a(b+c) = ab + ac` and `a·0 = 0`. Elements are indices into the tables;
//! zero and one may sit at any index. Validation is exhaustive — orders are
//! small enough that an O(n³) table scan is instant — and a
//! [`FiniteSemiring`] can only be built from tables that pass it, so every
//! later operation may assume the axioms.

use crate::verdict::Verdict;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

/// Index of an element in its semiring's tables.
pub type ElementId = usize;

/// Unvalidated Cayley data, and the JSON schema for semiring files:
/// `{"name": str?, "order": n, "zero": i, "one": j, "add": [[..]], "mul": [[..]]}`
/// with row-major integer tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTables {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

/// Structural defect in raw tables, distinct from an axiom violation:
/// tables of this kind do not even describe a pair of binary operations
/// with designated constants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("{table} table has {rows} rows, expected {order}")]
    RowCount {
        table: &'static str,
        rows: usize,
        order: usize,
    },
    #[error("{table} table row {row} has {cols} entries, expected {order}")]
    RowLength {
        table: &'static str,
        row: usize,
        cols: usize,
        order: usize,
    },
    #[error("{table}[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{which} index {index} is out of range for order {order}")]
    ConstantOutOfRange {
        which: &'static str,
        index: usize,
        order: usize,
    },
    #[error("zero and one coincide at index {0}")]
    ZeroEqualsOne(usize),
}

/// The individual semiring axioms checked by [`validate_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    Distributive,
    ZeroAbsorbs,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddAssociative => "associativity of +",
            Axiom::AddCommutative => "commutativity of +",
            Axiom::AddIdentity => "additive identity",
            Axiom::MulAssociative => "associativity of *",
            Axiom::MulCommutative => "commutativity of *",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::Distributive => "distributivity",
            Axiom::ZeroAbsorbs => "absorption by zero",
        };
        f.write_str(s)
    }
}

/// A violated axiom together with the lexicographically smallest violating
/// triple. Axioms quantified over fewer than three variables repeat the
/// last variable to fill the triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (ElementId, ElementId, ElementId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.witness;
        write!(f, "{} at ({a}, {b}, {c})", self.axiom)
    }
}

/// Result of checking the semiring axioms over well-formed tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid() {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Why a [`FiniteSemiring`] could not be constructed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemiringError {
    #[error("malformed tables: {0}")]
    Table(#[from] TableError),
    #[error("axiom violations: {0}")]
    Axioms(AxiomReport),
}

/// Why a semiring file could not be loaded. JSON and shape problems are
/// schema errors; axiom violations mean the file parsed but does not
/// describe a semiring.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed tables: {0}")]
    Table(TableError),
    #[error("axiom violations:\n{0}")]
    Axioms(AxiomReport),
}

impl From<SemiringError> for LoadError {
    fn from(e: SemiringError) -> Self {
        match e {
            SemiringError::Table(t) => LoadError::Table(t),
            SemiringError::Axioms(r) => LoadError::Axioms(r),
        }
    }
}

fn check_shape(raw: &RawTables) -> Result<(), TableError> {
    let n = raw.order;
    if n < 2 {
        return Err(TableError::OrderTooSmall(n));
    }
    for (table, data) in [("add", &raw.add), ("mul", &raw.mul)] {
        if data.len() != n {
            return Err(TableError::RowCount {
                table,
                rows: data.len(),
                order: n,
            });
        }
        for (row, entries) in data.iter().enumerate() {
            if entries.len() != n {
                return Err(TableError::RowLength {
                    table,
                    row,
                    cols: entries.len(),
                    order: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(TableError::EntryOutOfRange {
                        table,
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
        }
    }
    for (which, index) in [("zero", raw.zero), ("one", raw.one)] {
        if index >= n {
            return Err(TableError::ConstantOutOfRange {
                which,
                index,
                order: n,
            });
        }
    }
    if raw.zero == raw.one {
        return Err(TableError::ZeroEqualsOne(raw.zero));
    }
    Ok(())
}

/// Check every semiring axiom over the given tables.
///
/// Structural problems (non-square tables, out-of-range entries,
/// `zero == one`) are rejected with a [`TableError`] before any axiom is
/// considered. Each violated axiom is reported once, with its
/// lexicographically smallest violating triple.
pub fn validate_axioms(raw: &RawTables) -> Result<AxiomReport, TableError> {
    check_shape(raw)?;
    let n = raw.order;
    let add = |a: usize, b: usize| raw.add[a][b];
    let mul = |a: usize, b: usize| raw.mul[a][b];

    let mut violations = Vec::new();
    let mut record = |axiom: Axiom, witness: (usize, usize, usize)| {
        if !violations.iter().any(|v: &Violation| v.axiom == axiom) {
            violations.push(Violation { axiom, witness });
        }
    };

    // Scans run in lexicographic order, so the first hit per axiom is the
    // minimal witness.
    'add_assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add(add(a, b), c) != add(a, add(b, c)) {
                    record(Axiom::AddAssociative, (a, b, c));
                    break 'add_assoc;
                }
            }
        }
    }
    'add_comm: for a in 0..n {
        for b in 0..n {
            if add(a, b) != add(b, a) {
                record(Axiom::AddCommutative, (a, b, b));
                break 'add_comm;
            }
        }
    }
    for a in 0..n {
        if add(raw.zero, a) != a || add(a, raw.zero) != a {
            record(Axiom::AddIdentity, (a, a, a));
            break;
        }
    }
    'mul_assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    record(Axiom::MulAssociative, (a, b, c));
                    break 'mul_assoc;
                }
            }
        }
    }
    'mul_comm: for a in 0..n {
        for b in 0..n {
            if mul(a, b) != mul(b, a) {
                record(Axiom::MulCommutative, (a, b, b));
                break 'mul_comm;
            }
        }
    }
    for a in 0..n {
        if mul(raw.one, a) != a || mul(a, raw.one) != a {
            record(Axiom::MulIdentity, (a, a, a));
            break;
        }
    }
    'dist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                    record(Axiom::Distributive, (a, b, c));
                    break 'dist;
                }
            }
        }
    }
    for a in 0..n {
        if mul(a, raw.zero) != raw.zero || mul(raw.zero, a) != raw.zero {
            record(Axiom::ZeroAbsorbs, (a, a, a));
            break;
        }
    }

    Ok(AxiomReport { violations })
}

/// Witness that multiplication is not cancellative: `a·b = a·c` with
/// `a ≠ 0` and `b ≠ c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CancellationFailure {
    pub a: ElementId,
    pub b: ElementId,
    pub c: ElementId,
}

impl fmt::Display for CancellationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A validated finite semiring.
///
/// Immutable after construction; every method is a pure function, so values
/// can be shared freely across threads. The ideal lattice is computed once
/// on demand and cached.
#[derive(Debug, Clone)]
pub struct FiniteSemiring {
    name: Option<String>,
    order: usize,
    zero: ElementId,
    one: ElementId,
    add: Vec<ElementId>,
    mul: Vec<ElementId>,
    pub(crate) ideal_cache: OnceLock<Vec<Vec<bool>>>,
}

impl FiniteSemiring {
    /// Validate raw tables and build a semiring from them.
    pub fn new(raw: RawTables) -> Result<Self, SemiringError> {
        let report = validate_axioms(&raw)?;
        if !report.valid() {
            return Err(SemiringError::Axioms(report));
        }
        let n = raw.order;
        let flatten = |t: &[Vec<usize>]| {
            let mut flat = Vec::with_capacity(n * n);
            for row in t {
                flat.extend_from_slice(row);
            }
            flat
        };
        Ok(FiniteSemiring {
            name: raw.name.clone(),
            order: n,
            zero: raw.zero,
            one: raw.one,
            add: flatten(&raw.add),
            mul: flatten(&raw.mul),
            ideal_cache: OnceLock::new(),
        })
    }

    /// Parse a semiring from its JSON file format.
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        let raw: RawTables = serde_json::from_str(text).map_err(|e| LoadError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Ok(Self::new(raw)?)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.order + b]
    }

    /// Back to the raw-table form (for JSON output).
    pub fn to_raw(&self) -> RawTables {
        let n = self.order;
        let unflatten = |t: &[ElementId]| (0..n).map(|i| t[i * n..(i + 1) * n].to_vec()).collect();
        RawTables {
            name: self.name.clone(),
            order: n,
            zero: self.zero,
            one: self.one,
            add: unflatten(&self.add),
            mul: unflatten(&self.mul),
        }
    }

    /// Does `d` divide `a`, i.e. is there an `x` with `a = d·x`?
    pub fn divides(&self, d: ElementId, a: ElementId) -> bool {
        self.elements().any(|x| self.mul(d, x) == a)
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        self.divides(a, self.one)
    }

    /// All invertible elements; always contains `one`.
    pub fn units(&self) -> Vec<ElementId> {
        self.elements().filter(|&u| self.is_unit(u)).collect()
    }

    /// Distinct values of `x¹, x², …` in order of first appearance.
    /// Pigeonhole bounds the length by the order, and the result is the
    /// exact set of positive powers of `x`, which makes `∃n ≥ 1` quantifiers
    /// over powers decidable by a finite scan.
    pub fn power_orbit(&self, x: ElementId) -> Vec<ElementId> {
        let mut seen = vec![false; self.order];
        let mut orbit = Vec::new();
        let mut current = x;
        while !seen[current] {
            seen[current] = true;
            orbit.push(current);
            current = self.mul(current, x);
        }
        orbit
    }

    /// Are `a` and `b` equal up to a unit factor?
    pub fn are_associates(&self, a: ElementId, b: ElementId) -> bool {
        self.units().into_iter().any(|u| self.mul(u, b) == a)
    }

    /// Is multiplication by every nonzero element injective?
    ///
    /// On failure the witness is the lexicographically smallest
    /// `(a, b, c)` with `a·b = a·c`, `a ≠ 0`, `b < c`.
    pub fn is_semidomain(&self) -> Verdict<CancellationFailure> {
        for a in self.elements() {
            if a == self.zero {
                continue;
            }
            for b in self.elements() {
                for c in (b + 1)..self.order {
                    if self.mul(a, b) == self.mul(a, c) {
                        return Verdict::Fails(CancellationFailure { a, b, c });
                    }
                }
            }
        }
        Verdict::holds()
    }

    /// Relabel elements by a permutation: element `i` becomes `perm[i]`.
    /// The result is isomorphic to `self`.
    pub fn relabel(&self, perm: &[ElementId]) -> FiniteSemiring {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length must match order");
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)];
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteSemiring {
            name: self.name.clone(),
            order: n,
            zero: perm[self.zero],
            one: perm[self.one],
            add,
            mul,
            ideal_cache: OnceLock::new(),
        }
    }

    /// Human-readable label: the name if set, otherwise "order-n semiring".
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("order-{} semiring", self.order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn boolean_tables_are_valid() {
        let raw = catalog::boolean().to_raw();
        let report = validate_axioms(&raw).unwrap();
        assert!(report.valid());
    }

    #[test]
    fn z6_tables_are_valid() {
        let raw = catalog::zmod(6).to_raw();
        assert!(validate_axioms(&raw).unwrap().valid());
    }

    #[test]
    fn asymmetric_patch_breaks_commutativity() {
        let mut raw = catalog::boolean().to_raw();
        // add(1,0) = 0 while add(0,1) stays 1: commutativity and the
        // identity axiom both break, each with its minimal witness.
        raw.add[1][0] = 0;
        let report = validate_axioms(&raw).unwrap();
        assert!(!report.valid());
        let comm = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::AddCommutative)
            .expect("commutativity violation");
        assert_eq!(comm.witness, (0, 1, 1));
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::AddIdentity));
    }

    #[test]
    fn single_entry_mutations_of_boolean() {
        // Flipping any single cell of B's tables breaks an axiom, except
        // add(1,1) -> 0, which turns B into Z/2.
        let base = catalog::boolean().to_raw();
        let mut valid_mutants = Vec::new();
        for table in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    let mut raw = base.clone();
                    let cell = if table == 0 {
                        &mut raw.add[i][j]
                    } else {
                        &mut raw.mul[i][j]
                    };
                    *cell = 1 - *cell;
                    if validate_axioms(&raw).unwrap().valid() {
                        valid_mutants.push((table, i, j));
                    }
                }
            }
        }
        assert_eq!(valid_mutants, vec![(0, 1, 1)]);
    }

    #[test]
    fn structural_errors_are_not_axiom_violations() {
        let mut raw = catalog::boolean().to_raw();
        raw.add[0][1] = 7;
        assert!(matches!(
            validate_axioms(&raw),
            Err(TableError::EntryOutOfRange { .. })
        ));

        let mut raw = catalog::boolean().to_raw();
        raw.one = 0;
        assert!(matches!(validate_axioms(&raw), Err(TableError::ZeroEqualsOne(0))));

        let mut raw = catalog::boolean().to_raw();
        raw.mul.pop();
        assert!(matches!(validate_axioms(&raw), Err(TableError::RowCount { .. })));
    }

    #[test]
    fn semidomain_verdicts() {
        assert!(catalog::boolean().is_semidomain().is_holds());
        let z6 = catalog::zmod(6);
        assert_eq!(
            z6.is_semidomain().witness(),
            Some(&CancellationFailure { a: 2, b: 0, c: 3 })
        );
        let c3 = catalog::chain(3);
        assert_eq!(
            c3.is_semidomain().witness(),
            Some(&CancellationFailure { a: 2, b: 1, c: 2 })
        );
    }

    #[test]
    fn no_zero_divisors_in_semidomains() {
        for s in catalog::all() {
            if !s.is_semidomain().is_holds() {
                continue;
            }
            for a in s.elements() {
                for b in s.elements() {
                    if s.mul(a, b) == s.zero() {
                        assert!(a == s.zero() || b == s.zero(), "{}", s.label());
                    }
                }
            }
        }
    }

    #[test]
    fn divides_examples() {
        let b = catalog::boolean();
        assert!(b.divides(1, 0));
        assert!(!b.divides(0, 1));
        let z4 = catalog::zmod(4);
        assert!(z4.divides(3, 2));
        let z6 = catalog::zmod(6);
        assert!(!z6.divides(2, 3));
    }

    #[test]
    fn units_examples() {
        assert_eq!(catalog::boolean().units(), vec![1]);
        assert_eq!(catalog::zmod(4).units(), vec![1, 3]);
        assert_eq!(catalog::chain(3).units(), vec![1]);
    }

    #[test]
    fn power_orbit_examples() {
        let z4 = catalog::zmod(4);
        assert_eq!(z4.power_orbit(2), vec![2, 0]);
        assert_eq!(z4.power_orbit(1), vec![1]);
        let z6 = catalog::zmod(6);
        assert_eq!(z6.power_orbit(3), vec![3]);
    }

    #[test]
    fn power_orbit_bounds() {
        for s in catalog::all() {
            for x in s.elements() {
                let orbit = s.power_orbit(x);
                assert!(orbit.len() <= s.order());
                assert!(orbit.contains(&x));
            }
        }
    }

    #[test]
    fn associates_examples() {
        let z4 = catalog::zmod(4);
        assert!(z4.are_associates(1, 3));
        assert!(z4.are_associates(2, 2));
        let z6 = catalog::zmod(6);
        assert!(!z6.are_associates(2, 3));
    }

    #[test]
    fn relabel_is_isomorphic() {
        let z6 = catalog::zmod(6);
        let perm = vec![3, 0, 4, 1, 5, 2];
        let relabeled = z6.relabel(&perm);
        let raw = relabeled.to_raw();
        assert!(validate_axioms(&raw).unwrap().valid());
        assert_eq!(relabeled.zero(), 3);
        assert_eq!(relabeled.one(), 0);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(relabeled.add(perm[a], perm[b]), perm[z6.add(a, b)]);
                assert_eq!(relabeled.mul(perm[a], perm[b]), perm[z6.mul(a, b)]);
            }
        }
    }
}
