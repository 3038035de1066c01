//! The checked-in corpus of small semirings used by tests and the
//! verification suite.
//!
//! Each structure ships both as a JSON file under `data/catalog/` (the
//! on-disk contract exercised by the CLI) and as a programmatic
//! constructor; a test asserts the two agree cell for cell.

use crate::semiring::{FiniteSemiring, RawTables};

/// The Boolean semiring: `add` = OR, `mul` = AND.
pub fn boolean() -> FiniteSemiring {
    FiniteSemiring::new(RawTables {
        name: Some("boolean".to_string()),
        order: 2,
        zero: 0,
        one: 1,
        add: vec![vec![0, 1], vec![1, 1]],
        mul: vec![vec![0, 0], vec![0, 1]],
    })
    .expect("boolean semiring is valid")
}

/// Integers modulo `n` with the usual operations.
pub fn zmod(n: usize) -> FiniteSemiring {
    assert!(n >= 2);
    let table = |f: &dyn Fn(usize, usize) -> usize| {
        (0..n)
            .map(|a| (0..n).map(|b| f(a, b) % n).collect())
            .collect()
    };
    FiniteSemiring::new(RawTables {
        name: Some(format!("z{n}")),
        order: n,
        zero: 0,
        one: 1,
        add: table(&|a, b| a + b),
        mul: table(&|a, b| a * b),
    })
    .expect("modular arithmetic is a semiring")
}

/// The `k`-element chain with `add` = max and `mul` = min.
///
/// Index 0 is the bottom (zero), index 1 the top (one), and indices
/// `2..k` the middle elements in ascending chain position, so the chain
/// order is `0 < 2 < 3 < … < k-1 < 1`. `chain(5)` is the five-point
/// discretization of the fuzzy interval `([0,1], max, min)`.
pub fn chain(k: usize) -> FiniteSemiring {
    assert!(k >= 2);
    let rank = |e: usize| match e {
        0 => 0,
        1 => k - 1,
        _ => e - 1,
    };
    let unrank = |r: usize| match r {
        0 => 0,
        r if r == k - 1 => 1,
        _ => r + 1,
    };
    let table = |f: &dyn Fn(usize, usize) -> usize| {
        (0..k)
            .map(|a| (0..k).map(|b| unrank(f(rank(a), rank(b)))).collect())
            .collect()
    };
    FiniteSemiring::new(RawTables {
        name: Some(format!("c{k}")),
        order: k,
        zero: 0,
        one: 1,
        add: table(&|a, b| a.max(b)),
        mul: table(&|a, b| a.min(b)),
    })
    .expect("a bounded chain under max/min is a semiring")
}

const FILES: &[(&str, &str)] = &[
    ("boolean", include_str!("../data/catalog/boolean.json")),
    ("c3", include_str!("../data/catalog/c3.json")),
    ("c5_fuzzy", include_str!("../data/catalog/c5_fuzzy.json")),
    ("z2", include_str!("../data/catalog/z2.json")),
    ("z3", include_str!("../data/catalog/z3.json")),
    ("z4", include_str!("../data/catalog/z4.json")),
    ("z5", include_str!("../data/catalog/z5.json")),
    ("z6", include_str!("../data/catalog/z6.json")),
    ("z7", include_str!("../data/catalog/z7.json")),
];

/// All catalog semirings, parsed from the checked-in JSON files, in a
/// fixed order.
pub fn all() -> Vec<FiniteSemiring> {
    FILES
        .iter()
        .map(|(name, text)| {
            FiniteSemiring::from_json(text)
                .unwrap_or_else(|e| panic!("catalog file {name}.json: {e}"))
        })
        .collect()
}

/// Look up one catalog member by name.
pub fn by_name(name: &str) -> Option<FiniteSemiring> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| FiniteSemiring::from_json(text).expect("catalog file is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn files_match_constructors() {
        let expected = [
            ("boolean", boolean().with_name("boolean")),
            ("c3", chain(3)),
            ("c5_fuzzy", chain(5).with_name("c5_fuzzy")),
            ("z2", zmod(2)),
            ("z3", zmod(3)),
            ("z4", zmod(4)),
            ("z5", zmod(5)),
            ("z6", zmod(6)),
            ("z7", zmod(7)),
        ];
        for (name, built) in expected {
            let parsed = by_name(name).unwrap_or_else(|| panic!("missing catalog file {name}"));
            assert_eq!(parsed.to_raw(), built.to_raw(), "catalog file {name}");
        }
    }

    #[test]
    fn all_members_are_valid() {
        let members = all();
        assert_eq!(members.len(), 9);
        for s in &members {
            assert!(crate::semiring::validate_axioms(&s.to_raw()).unwrap().valid());
        }
    }
}
