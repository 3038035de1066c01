//! Ideals of a finite semiring: generation, the full ideal lattice,
//! prime and maximal ideals, and radicals by two independent routes.
//!
//! An ideal is a nonempty subset closed under addition and under
//! multiplication by arbitrary semiring elements; every ideal contains
//! zero. Ideals are ordered by their sorted member lists, and every
//! function that returns a set of ideals returns them in that order.

use crate::semiring::{ElementId, FiniteSemiring};
use std::cmp::Ordering;
use std::fmt;

/// Default guard for full ideal-lattice enumeration. The lattice can have
/// up to `2^n` members, so callers must opt in explicitly beyond this.
pub const DEFAULT_IDEAL_CAP: usize = 10;

/// Full lattice enumeration refused because the order is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("ideal enumeration refused: order {order} exceeds cap {cap} (raise the cap explicitly)")]
pub struct LatticeCapError {
    pub order: usize,
    pub cap: usize,
}

/// A subset of a semiring's elements, closed under addition and outer
/// multiplication, in dense boolean representation.
#[derive(Debug, Clone)]
pub struct Ideal<'a> {
    semiring: &'a FiniteSemiring,
    members: Vec<bool>,
}

impl<'a> Ideal<'a> {
    fn from_members(semiring: &'a FiniteSemiring, members: Vec<bool>) -> Self {
        debug_assert_eq!(members.len(), semiring.order());
        debug_assert!(members[semiring.zero()], "every ideal contains zero");
        Ideal { semiring, members }
    }

    pub fn semiring(&self) -> &'a FiniteSemiring {
        self.semiring
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.members[e]
    }

    /// Sorted list of member indices.
    pub fn member_list(&self) -> Vec<ElementId> {
        (0..self.members.len()).filter(|&e| self.members[e]).collect()
    }

    /// Number of members (always at least one: zero).
    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_proper(&self) -> bool {
        self.members.iter().any(|&m| !m)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset_of(&self, other: &Ideal<'a>) -> bool {
        self.assert_same_parent(other);
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    pub fn comparable_with(&self, other: &Ideal<'a>) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    fn assert_same_parent(&self, other: &Ideal<'a>) {
        assert!(
            std::ptr::eq(self.semiring, other.semiring),
            "ideal arithmetic requires a common parent semiring"
        );
    }

    /// Join: the least ideal containing both.
    pub fn sum(&self, other: &Ideal<'a>) -> Ideal<'a> {
        self.assert_same_parent(other);
        let gens: Vec<ElementId> = (0..self.members.len())
            .filter(|&e| self.members[e] || other.members[e])
            .collect();
        self.semiring.ideal_generated_by(&gens)
    }

    /// The ideal generated by pairwise products of members.
    pub fn product(&self, other: &Ideal<'a>) -> Ideal<'a> {
        self.assert_same_parent(other);
        let s = self.semiring;
        let mut gens = Vec::new();
        for x in s.elements().filter(|&x| self.members[x]) {
            for y in s.elements().filter(|&y| other.members[y]) {
                gens.push(s.mul(x, y));
            }
        }
        s.ideal_generated_by(&gens)
    }

    /// Set intersection, which is always an ideal.
    pub fn intersection(&self, other: &Ideal<'a>) -> Ideal<'a> {
        self.assert_same_parent(other);
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(&a, &b)| a && b)
            .collect();
        Ideal::from_members(self.semiring, members)
    }

    /// Prime: proper, and `a·b` inside implies `a` or `b` inside.
    /// Improper input returns `false` (primes are proper by convention).
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let s = self.semiring;
        for a in s.elements() {
            for b in s.elements() {
                if self.members[s.mul(a, b)] && !self.members[a] && !self.members[b] {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal: proper, with no ideal strictly between it and the whole
    /// semiring. Computed against the full lattice.
    pub fn is_maximal(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        self.semiring
            .ideal_lattice()
            .iter()
            .all(|j| !(self.is_subset_of(j) && *j != *self && j.is_proper()))
    }

    /// All prime ideals containing this one, in canonical order.
    pub fn variety(&self) -> Vec<Ideal<'a>> {
        self.semiring
            .ideal_lattice()
            .into_iter()
            .filter(|p| p.is_prime() && self.is_subset_of(p))
            .collect()
    }

    /// Radical as the intersection of all primes over this ideal; the empty
    /// intersection (no primes above, only possible for the improper ideal)
    /// is the whole semiring.
    pub fn radical_via_primes(&self) -> Ideal<'a> {
        let primes = self.variety();
        let mut members = vec![true; self.members.len()];
        for p in &primes {
            for e in 0..members.len() {
                members[e] &= p.members[e];
            }
        }
        Ideal::from_members(self.semiring, members)
    }

    /// Radical as the elements with some positive power inside, decided
    /// exactly by scanning each element's power orbit.
    pub fn radical_via_krull(&self) -> Ideal<'a> {
        let s = self.semiring;
        let members = s
            .elements()
            .map(|e| s.power_orbit(e).into_iter().any(|p| self.members[p]))
            .collect();
        Ideal::from_members(s, members)
    }

    /// Is this ideal its own radical? Uses the power-orbit route; the
    /// verification suite asserts both routes agree on every corpus ideal.
    pub fn is_radical(&self) -> bool {
        self.radical_via_krull() == *self
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_parent(other);
        self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl PartialOrd for Ideal<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal<'_> {
    /// Lexicographic order on sorted member lists: at the first element
    /// where two ideals differ, the one containing it comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        for e in 0..self.members.len() {
            match (self.members[e], other.members[e]) {
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.member_list().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Why the nonunit set is not closed as an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureFailure {
    /// `x + y` is a unit for the nonunits `x, y`.
    Add { x: ElementId, y: ElementId },
    /// `s·x` is a unit for some `s` and nonunit `x` (cannot happen when
    /// multiplication is cancellative, but checked explicitly).
    Mul { s: ElementId, x: ElementId },
}

impl fmt::Display for ClosureFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureFailure::Add { x, y } => write!(f, "({x}, {y}) under +"),
            ClosureFailure::Mul { s, x } => write!(f, "({s}, {x}) under *"),
        }
    }
}

/// The nonunit set `N = S − U(S)`: an ideal exactly when the semiring is
/// local, otherwise a witness to the closure that fails.
#[derive(Debug, Clone, PartialEq)]
pub enum Nonunits<'a> {
    Ideal(Ideal<'a>),
    NotClosed(ClosureFailure),
}

impl FiniteSemiring {
    /// The least ideal containing `gens`; empty `gens` yields `{zero}`.
    ///
    /// Computed as a fixpoint closure under addition and outer
    /// multiplication.
    pub fn ideal_generated_by(&self, gens: &[ElementId]) -> Ideal<'_> {
        let n = self.order();
        let mut members = vec![false; n];
        members[self.zero()] = true;
        for &g in gens {
            assert!(g < n, "generator out of range");
            members[g] = true;
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                if !members[x] {
                    continue;
                }
                for y in 0..n {
                    if members[y] {
                        let s = self.add(x, y);
                        if !members[s] {
                            members[s] = true;
                            changed = true;
                        }
                    }
                    let p = self.mul(y, x);
                    if !members[p] {
                        members[p] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ideal::from_members(self, members)
    }

    /// The principal ideal `(x) = {s·x : s ∈ S}` (already closed under
    /// addition by distributivity).
    pub fn principal_ideal(&self, x: ElementId) -> Ideal<'_> {
        self.ideal_generated_by(&[x])
    }

    /// Divisibility via ideal containment: `d | a` iff `(a) ⊆ (d)`.
    /// An independent route to [`FiniteSemiring::divides`]; the two must
    /// agree everywhere.
    pub fn divides_via_ideals(&self, d: ElementId, a: ElementId) -> bool {
        self.principal_ideal(a).is_subset_of(&self.principal_ideal(d))
    }

    /// Every ideal, in canonical order, guarded by [`DEFAULT_IDEAL_CAP`].
    ///
    /// Every ideal is the join of the principal ideals of its elements, so
    /// the set of all ideals is the closure of the principal ideals under
    /// binary join. The result is cached per semiring; the cache is safe
    /// for concurrent readers.
    pub fn all_ideals(&self) -> Result<Vec<Ideal<'_>>, LatticeCapError> {
        self.all_ideals_capped(DEFAULT_IDEAL_CAP)
    }

    /// [`FiniteSemiring::all_ideals`] with an explicit order cap.
    pub fn all_ideals_capped(&self, cap: usize) -> Result<Vec<Ideal<'_>>, LatticeCapError> {
        if self.order() > cap {
            return Err(LatticeCapError {
                order: self.order(),
                cap,
            });
        }
        let member_sets = self.ideal_cache.get_or_init(|| {
            let mut sets: std::collections::BTreeSet<Vec<bool>> = std::collections::BTreeSet::new();
            let principals: Vec<Ideal<'_>> =
                self.elements().map(|x| self.principal_ideal(x)).collect();
            for p in &principals {
                sets.insert(p.members.clone());
            }
            loop {
                let current: Vec<Vec<bool>> = sets.iter().cloned().collect();
                let before = sets.len();
                for a in &current {
                    for p in &principals {
                        let ideal_a = Ideal::from_members(self, a.clone());
                        sets.insert(ideal_a.sum(p).members);
                    }
                }
                if sets.len() == before {
                    break;
                }
            }
            let mut ideals: Vec<Ideal<'_>> = sets
                .into_iter()
                .map(|m| Ideal::from_members(self, m))
                .collect();
            ideals.sort();
            ideals.into_iter().map(|i| i.members).collect()
        });
        Ok(member_sets
            .iter()
            .map(|m| Ideal::from_members(self, m.clone()))
            .collect())
    }

    /// [`FiniteSemiring::all_ideals`] for contexts that have already
    /// checked the cap; panics with the cap error otherwise.
    pub(crate) fn ideal_lattice(&self) -> Vec<Ideal<'_>> {
        self.all_ideals().expect("ideal lattice exceeds the default cap")
    }

    /// All prime ideals, in canonical order.
    pub fn prime_ideals(&self) -> Vec<Ideal<'_>> {
        self.ideal_lattice()
            .into_iter()
            .filter(Ideal::is_prime)
            .collect()
    }

    /// The nonunit set, as an ideal when both closures hold.
    pub fn nonunits(&self) -> Nonunits<'_> {
        let nonunit: Vec<bool> = self.elements().map(|e| !self.is_unit(e)).collect();
        for x in self.elements().filter(|&x| nonunit[x]) {
            for y in self.elements().filter(|&y| nonunit[y]) {
                if !nonunit[self.add(x, y)] {
                    return Nonunits::NotClosed(ClosureFailure::Add { x, y });
                }
            }
        }
        for s in self.elements() {
            for x in self.elements().filter(|&x| nonunit[x]) {
                if !nonunit[self.mul(s, x)] {
                    return Nonunits::NotClosed(ClosureFailure::Mul { s, x });
                }
            }
        }
        Nonunits::Ideal(Ideal::from_members(self, nonunit))
    }

    /// Local means the nonunit set is an ideal (then it is the unique
    /// maximal ideal).
    pub fn is_local(&self) -> bool {
        matches!(self.nonunits(), Nonunits::Ideal(_))
    }

    /// The unique maximal ideal of a local semiring.
    pub fn maximal_ideal(&self) -> Option<Ideal<'_>> {
        match self.nonunits() {
            Nonunits::Ideal(m) => Some(m),
            _ => None,
        }
    }
}
