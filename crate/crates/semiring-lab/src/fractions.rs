//! The semifield of fractions `F(S)` of a finite semidomain, and the
//! fraction-quantified property checks: strongly prime ideals,
//! pseudo-valuation, and the comparability conditions on the maximal
//! ideal.
//!
//! For a finite semidomain the nonzero elements form a group under
//! multiplication, so `F(S)` collapses onto `S` itself: the embedding is
//! a bijection and every fraction class has an integral representative.
//! The construction below does not assume this — classes are built from
//! raw numerator/denominator pairs — and the collapse is asserted as an
//! invariant instead, which is exactly what makes the fraction-level
//! checks meaningful as cross-checks.

use crate::ideals::{ClosureFailure, Ideal, Nonunits};
use crate::semiring::{CancellationFailure, ElementId, FiniteSemiring};
use crate::verdict::Verdict;
use std::fmt;

/// The operation requires a multiplicatively cancellative semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("not a semidomain: cancellation fails at {0}")]
pub struct NotSemidomain(pub CancellationFailure);

/// The operation requires a local semiring (nonunits closed as an ideal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("not local: nonunit set is not closed at {0}")]
pub struct NotLocal(pub ClosureFailure);

/// Canonical representative of a fraction class: the lexicographically
/// smallest (numerator, denominator) pair in the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FractionRepr {
    pub num: ElementId,
    pub den: ElementId,
}

impl fmt::Display for FractionRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Witness that some prime ideal is not strongly prime: a fraction pair
/// whose product lands in the (embedded) prime while neither factor does.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrongPrimeFailure {
    pub prime: Vec<ElementId>,
    pub x: FractionRepr,
    pub y: FractionRepr,
}

impl fmt::Display for StrongPrimeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prime {{")?;
        for (i, e) in self.prime.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}, pair ({}, {})", self.x, self.y)
    }
}

/// Witness against the local-route characterization of a PVS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PvsLocalFailure {
    NotLocal(ClosureFailure),
    MaximalNotStronglyPrime(StrongPrimeFailure),
}

impl fmt::Display for PvsLocalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PvsLocalFailure::NotLocal(w) => write!(f, "not local at {w}"),
            PvsLocalFailure::MaximalNotStronglyPrime(w) => write!(f, "{w}"),
        }
    }
}

/// Witness that `x⁻¹·p ⊄ p` for a fraction `x` outside the embedded image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseStabilityFailure {
    pub x: FractionRepr,
    pub prime: Vec<ElementId>,
    pub element: ElementId,
}

impl fmt::Display for InverseStabilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x = {}, element {} of prime {:?}",
            self.x, self.element, self.prime
        )
    }
}

/// `F(S)` for a finite semidomain `S`: fraction classes under
/// `a/b ~ c/d ⇔ ad = cb`, with arithmetic tables over canonical
/// representatives and the embedding `s ↦ s/1`.
#[derive(Debug, Clone)]
pub struct FractionSemifield<'a> {
    semiring: &'a FiniteSemiring,
    reps: Vec<FractionRepr>,
    class_of: Vec<Option<usize>>,
    add: Vec<usize>,
    mul: Vec<usize>,
    embed: Vec<usize>,
    zero_class: usize,
    one_class: usize,
}

impl<'a> FractionSemifield<'a> {
    /// Build `F(S)`. Fails when `S` is not a semidomain, since fraction
    /// equality is only an equivalence under cancellativity.
    pub fn build(s: &'a FiniteSemiring) -> Result<Self, NotSemidomain> {
        if let Verdict::Fails(w) = s.is_semidomain() {
            return Err(NotSemidomain(w));
        }
        let n = s.order();
        let mut reps: Vec<FractionRepr> = Vec::new();
        let mut class_of: Vec<Option<usize>> = vec![None; n * n];
        for num in 0..n {
            for den in 0..n {
                if den == s.zero() {
                    continue;
                }
                let id = reps
                    .iter()
                    .position(|r| s.mul(num, r.den) == s.mul(r.num, den))
                    .unwrap_or_else(|| {
                        reps.push(FractionRepr { num, den });
                        reps.len() - 1
                    });
                class_of[num * n + den] = Some(id);
            }
        }
        let k = reps.len();
        let class = |num: ElementId, den: ElementId| {
            class_of[num * n + den].expect("denominator is nonzero")
        };
        let mut add = vec![0; k * k];
        let mut mul = vec![0; k * k];
        for (i, x) in reps.iter().enumerate() {
            for (j, y) in reps.iter().enumerate() {
                // a/b + c/d = (ad + cb)/bd, (a/b)(c/d) = ac/bd; bd ≠ 0
                // because a semidomain has no zero divisors.
                let den = s.mul(x.den, y.den);
                let sum_num = s.add(s.mul(x.num, y.den), s.mul(y.num, x.den));
                add[i * k + j] = class(sum_num, den);
                mul[i * k + j] = class(s.mul(x.num, y.num), den);
            }
        }
        let embed: Vec<usize> = (0..n).map(|e| class(e, s.one())).collect();
        let fsf = FractionSemifield {
            semiring: s,
            reps,
            class_of,
            add,
            mul,
            embed: embed.clone(),
            zero_class: embed[s.zero()],
            one_class: embed[s.one()],
        };
        for c in 0..k {
            if c != fsf.zero_class {
                assert!(
                    fsf.inverse_class(c).is_some(),
                    "nonzero fraction class {} has no inverse",
                    fsf.reps[c]
                );
            }
        }
        assert!(fsf.embedding_preserves_ops(), "embedding preserves operations");
        Ok(fsf)
    }

    pub fn semiring(&self) -> &'a FiniteSemiring {
        self.semiring
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn classes(&self) -> std::ops::Range<usize> {
        0..self.reps.len()
    }

    pub fn rep(&self, class: usize) -> FractionRepr {
        self.reps[class]
    }

    /// Class of `num/den`; `None` when `den` is zero.
    pub fn class_of_pair(&self, num: ElementId, den: ElementId) -> Option<usize> {
        self.class_of[num * self.semiring.order() + den]
    }

    pub fn add_class(&self, x: usize, y: usize) -> usize {
        self.add[x * self.reps.len() + y]
    }

    pub fn mul_class(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.reps.len() + y]
    }

    pub fn zero_class(&self) -> usize {
        self.zero_class
    }

    pub fn one_class(&self) -> usize {
        self.one_class
    }

    /// Class of the embedded element `e/1`.
    pub fn embed(&self, e: ElementId) -> usize {
        self.embed[e]
    }

    /// The element mapping to this class, when the class lies in the
    /// embedded image of `S`.
    pub fn preimage(&self, class: usize) -> Option<ElementId> {
        self.semiring.elements().find(|&e| self.embed[e] == class)
    }

    pub fn inverse_class(&self, class: usize) -> Option<usize> {
        self.classes().find(|&y| self.mul_class(class, y) == self.one_class)
    }

    pub fn embedding_injective(&self) -> bool {
        let s = self.semiring;
        s.elements()
            .all(|a| ((a + 1)..s.order()).all(|b| self.embed[a] != self.embed[b]))
    }

    pub fn embedding_onto(&self) -> bool {
        self.classes().all(|c| self.embed.contains(&c))
    }

    pub fn embedding_preserves_ops(&self) -> bool {
        let s = self.semiring;
        s.elements().all(|a| {
            s.elements().all(|b| {
                self.embed[s.add(a, b)] == self.add_class(self.embed[a], self.embed[b])
                    && self.embed[s.mul(a, b)] == self.mul_class(self.embed[a], self.embed[b])
            })
        })
    }

    /// Classes lying in the embedded image of the given subset of `S`.
    fn embedded_set(&self, members: impl Iterator<Item = ElementId>) -> Vec<bool> {
        let mut set = vec![false; self.reps.len()];
        for e in members {
            set[self.embed[e]] = true;
        }
        set
    }

    /// Is `p` strongly prime: does `x·y ∈ p` for fractions `x, y` force
    /// `x ∈ p` or `y ∈ p`? A fraction lies in `p` when it is embedded from
    /// an element of `p`. Scans every fraction-class pair; on failure the
    /// witness is the first violating pair in class order.
    pub fn is_strongly_prime(&self, p: &Ideal<'a>) -> Verdict<(FractionRepr, FractionRepr)> {
        let in_p = self.embedded_set(p.member_list().into_iter());
        for x in self.classes() {
            for y in x..self.class_count() {
                if in_p[self.mul_class(x, y)] && !in_p[x] && !in_p[y] {
                    return Verdict::Fails((self.reps[x], self.reps[y]));
                }
            }
        }
        Verdict::holds()
    }

    /// Pseudo-valuation by definition: every prime ideal is strongly
    /// prime.
    pub fn is_pvs(&self) -> Verdict<StrongPrimeFailure> {
        for p in self.semiring.prime_ideals() {
            if let Verdict::Fails((x, y)) = self.is_strongly_prime(&p) {
                return Verdict::Fails(StrongPrimeFailure {
                    prime: p.member_list(),
                    x,
                    y,
                });
            }
        }
        Verdict::holds()
    }

    /// Pseudo-valuation by the local route: the semiring is local and its
    /// unique maximal ideal is strongly prime. Must agree with
    /// [`FractionSemifield::is_pvs`] everywhere.
    pub fn is_pvs_local_route(&self) -> Verdict<PvsLocalFailure> {
        let m = match self.semiring.nonunits() {
            Nonunits::Ideal(m) => m,
            Nonunits::NotClosed(w) => {
                return Verdict::Fails(PvsLocalFailure::NotLocal(w));
            }
        };
        debug_assert!(m.is_maximal() || !m.is_proper());
        match self.is_strongly_prime(&m) {
            Verdict::Fails((x, y)) => Verdict::Fails(PvsLocalFailure::MaximalNotStronglyPrime(
                StrongPrimeFailure {
                    prime: m.member_list(),
                    x,
                    y,
                },
            )),
            _ => Verdict::holds(),
        }
    }

    /// For every fraction `x`, is `xS ⊆ m` or `m ⊆ xS` (computed inside
    /// `F(S)` with `m` the maximal ideal)? Equivalent to the
    /// pseudo-valuation property on local semidomains; the witness is the
    /// first incomparable `x` in class order.
    pub fn maximal_comparability(&self) -> Result<Verdict<FractionRepr>, NotLocal> {
        self.comparability_check(|_self| _self.embed.clone())
    }

    /// For every fraction `x`, is `x·m ⊆ m` or `m ⊆ x·m`? When this holds
    /// on a local semidomain, the prime ideals are linearly ordered.
    pub fn scaling_comparability(&self) -> Result<Verdict<FractionRepr>, NotLocal> {
        self.comparability_check(|_self| {
            let m = match _self.semiring.nonunits() {
                Nonunits::Ideal(m) => m,
                Nonunits::NotClosed(_) => unreachable!("guarded by comparability_check"),
            };
            m.member_list().into_iter().map(|e| _self.embed[e]).collect()
        })
    }

    /// Shared shape of the two comparability checks: `multipliers` picks
    /// the classes multiplied by each fraction `x` (all of `S`, or just
    /// `m`), and the products are compared with the embedded maximal
    /// ideal by mutual inclusion.
    fn comparability_check(
        &self,
        multipliers: impl Fn(&Self) -> Vec<usize>,
    ) -> Result<Verdict<FractionRepr>, NotLocal> {
        let m = match self.semiring.nonunits() {
            Nonunits::Ideal(m) => m,
            Nonunits::NotClosed(w) => return Err(NotLocal(w)),
        };
        let m_set = self.embedded_set(m.member_list().into_iter());
        let mult = multipliers(self);
        for x in self.classes() {
            let products: Vec<bool> = {
                let mut set = vec![false; self.class_count()];
                for &c in &mult {
                    set[self.mul_class(x, c)] = true;
                }
                set
            };
            let forward = products
                .iter()
                .zip(&m_set)
                .all(|(&in_prod, &in_m)| !in_prod || in_m);
            let backward = m_set
                .iter()
                .zip(&products)
                .all(|(&in_m, &in_prod)| !in_m || in_prod);
            if !forward && !backward {
                return Ok(Verdict::Fails(self.reps[x]));
            }
        }
        Ok(Verdict::holds())
    }

    /// For every fraction `x` outside the embedded image and every prime
    /// `p`: `x⁻¹·p ⊆ p`. For a finite semidomain the embedding is onto,
    /// so the quantified set is empty and the verdict records vacuity.
    pub fn inverse_stabilizes_primes(&self) -> Verdict<InverseStabilityFailure> {
        let image = self.embedded_set(self.semiring.elements());
        let outside: Vec<usize> = self.classes().filter(|&c| !image[c]).collect();
        if outside.is_empty() {
            return Verdict::vacuous();
        }
        for &x in &outside {
            let inv = self
                .inverse_class(x)
                .expect("nonzero class in a semifield is invertible");
            for p in self.semiring.prime_ideals() {
                let in_p = self.embedded_set(p.member_list().into_iter());
                for e in p.member_list() {
                    if !in_p[self.mul_class(inv, self.embed[e])] {
                        return Verdict::Fails(InverseStabilityFailure {
                            x: self.reps[x],
                            prime: p.member_list(),
                            element: e,
                        });
                    }
                }
            }
        }
        Verdict::holds()
    }
}
