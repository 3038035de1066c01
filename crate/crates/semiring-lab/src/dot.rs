//! Hasse-diagram export of the ideal lattice in DOT format.
//!
//! One node per ideal, labeled by its sorted member list; edges are the
//! covering relations of the inclusion order, drawn bottom-up. Prime
//! ideals are doubly outlined, so the prime sub-poset is visible inside
//! the full lattice, and can also be exported on its own.

use crate::ideals::{Ideal, LatticeCapError};
use crate::semiring::FiniteSemiring;
use std::fmt::Write as _;

/// Render the ideal lattice (or with `primes_only`, just the prime
/// sub-poset) as a DOT digraph.
pub fn ideal_lattice_dot(
    s: &FiniteSemiring,
    primes_only: bool,
) -> Result<String, LatticeCapError> {
    let mut ideals = s.all_ideals()?;
    if primes_only {
        ideals.retain(Ideal::is_prime);
    }
    let mut out = String::new();
    let name = if primes_only { "primes" } else { "ideals" };
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, ideal) in ideals.iter().enumerate() {
        let peripheries = if ideal.is_prime() { 2 } else { 1 };
        writeln!(
            out,
            "  n{i} [label=\"{ideal}\", peripheries={peripheries}];"
        )
        .unwrap();
    }
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i == j || !a.is_subset_of(b) {
                continue;
            }
            // covering relation: nothing strictly between a and b
            let covered = ideals.iter().enumerate().any(|(k, c)| {
                k != i && k != j && a.is_subset_of(c) && c.is_subset_of(b)
            });
            if !covered {
                writeln!(out, "  n{i} -> n{j};").unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// Plain-text rendering of the lattice: one line per ideal with its
/// covers, for terminal use.
pub fn ideal_lattice_text(s: &FiniteSemiring) -> Result<String, LatticeCapError> {
    let ideals = s.all_ideals()?;
    let mut out = String::new();
    for (i, a) in ideals.iter().enumerate() {
        let mut covers: Vec<String> = Vec::new();
        for (j, b) in ideals.iter().enumerate() {
            if i == j || !a.is_subset_of(b) {
                continue;
            }
            let covered = ideals.iter().enumerate().any(|(k, c)| {
                k != i && k != j && a.is_subset_of(c) && c.is_subset_of(b)
            });
            if !covered {
                covers.push(b.to_string());
            }
        }
        let tag = if a.is_prime() { " (prime)" } else { "" };
        if covers.is_empty() {
            writeln!(out, "{a}{tag}").unwrap();
        } else {
            writeln!(out, "{a}{tag} < {}", covers.join(", ")).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn edge_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    fn node_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("[label=")).count()
    }

    #[test]
    fn z4_is_a_three_node_chain() {
        let dot = ideal_lattice_dot(&catalog::zmod(4), false).unwrap();
        assert_eq!(node_count(&dot), 3);
        assert_eq!(edge_count(&dot), 2);
    }

    #[test]
    fn z6_is_a_diamond() {
        let dot = ideal_lattice_dot(&catalog::zmod(6), false).unwrap();
        assert_eq!(node_count(&dot), 4);
        assert_eq!(edge_count(&dot), 4);
        assert!(dot.contains("{0, 2, 4}"));
        assert!(dot.contains("{0, 3}"));
    }

    #[test]
    fn boolean_is_a_two_node_chain() {
        let dot = ideal_lattice_dot(&catalog::boolean(), false).unwrap();
        assert_eq!(node_count(&dot), 2);
        assert_eq!(edge_count(&dot), 1);
    }

    #[test]
    fn primes_only_restricts_nodes() {
        let dot = ideal_lattice_dot(&catalog::zmod(6), true).unwrap();
        assert_eq!(node_count(&dot), 2);
        assert_eq!(edge_count(&dot), 0);
    }
}
