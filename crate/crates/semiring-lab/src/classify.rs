//! Independent predicates for every property and every individually
//! testable theorem condition, so each equivalence can be cross-checked
//! rather than assumed.
//!
//! The linear-ordering conditions, equivalent for every semiring:
//!   1. the prime ideals are linearly ordered by inclusion;
//!   2. the radical ideals are linearly ordered;
//!   3. every proper radical ideal is prime;
//!   4. the radicals of the principal ideals are linearly ordered;
//!   5. for all `x, y` there is `n ≥ 1` with `x | yⁿ` or `y | xⁿ`.
//!
//! The divided conditions, equivalent for every semidomain:
//!   1. every prime `p` satisfies `p ⊂ (x)` for each `x ∉ p`;
//!   2. every ideal is comparable with every radical `√b`;
//!   3. every `(x)` is comparable with every `√(y)`;
//!   4. for all `x, y`: `x | y` or `y | xⁿ` for some `n ≥ 1`.
//!
//! The pseudo-valuation conditions on the nonunit set `N = S − U(S)`,
//! equivalent for every semidomain:
//!   1. the semiring is a PVS whose maximal ideal is `N`;
//!   2. for ideals `a, b`: `b ⊆ a`, or `a·c ⊆ b` for every proper ideal `c`;
//!   3. for `x, y` and nonunit `z`: `yS ⊆ xS` or `xzS ⊆ yS`;
//!   4. for `x, y` and nonunit `z`: `x | y` or `y | xz`;
//!   5. for `x, y`: `yS ⊆ xS` or `xN ⊆ yS`;
//!   6. for `x, y`: `yN ⊆ xS` or `xS ⊆ yN`.
//!
//! `N` is used as a raw element set in (5) and (6), whether or not it is
//! an ideal. All scans run in lexicographic order and report the smallest
//! violating tuple.

use crate::fractions::{FractionSemifield, NotSemidomain, StrongPrimeFailure};
use crate::ideals::{ClosureFailure, Ideal, Nonunits};
use crate::semiring::{ElementId, FiniteSemiring};
use crate::verdict::Verdict;
use std::fmt;

fn fmt_set(f: &mut fmt::Formatter<'_>, members: &[ElementId]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, e) in members.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementPair(pub ElementId, pub ElementId);

impl fmt::Display for ElementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementTriple(pub ElementId, pub ElementId, pub ElementId);

impl fmt::Display for ElementTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealPair(pub Vec<ElementId>, pub Vec<ElementId>);

impl fmt::Display for IdealPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_set(f, &self.0)?;
        write!(f, ", ")?;
        fmt_set(f, &self.1)?;
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealTriple(
    pub Vec<ElementId>,
    pub Vec<ElementId>,
    pub Vec<ElementId>,
);

impl fmt::Display for IdealTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_set(f, &self.0)?;
        write!(f, ", ")?;
        fmt_set(f, &self.1)?;
        write!(f, ", ")?;
        fmt_set(f, &self.2)?;
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealMembers(pub Vec<ElementId>);

impl fmt::Display for IdealMembers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_set(f, &self.0)
    }
}

/// Witness that a prime is not divided: `x ∉ p` with `p ⊄ (x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DividedFailure {
    pub prime: Vec<ElementId>,
    pub x: ElementId,
}

impl fmt::Display for DividedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(prime ")?;
        fmt_set(f, &self.prime)?;
        write!(f, ", x = {})", self.x)
    }
}

/// The two sides of the valuation ⇔ GCD ∧ linearly-ordered-primes
/// equivalence, recorded when they disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceSides {
    pub valuation: bool,
    pub gcd: bool,
    pub lop: bool,
}

impl fmt::Display for EquivalenceSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "valuation = {}, gcd = {}, linearly ordered primes = {}",
            self.valuation, self.gcd, self.lop
        )
    }
}

/// Witness against pseudo-valuation condition 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PvsCond1Failure {
    NotPvs(StrongPrimeFailure),
    NotLocal(ClosureFailure),
    NonunitsNotMaximal(Vec<ElementId>),
}

impl fmt::Display for PvsCond1Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PvsCond1Failure::NotPvs(w) => write!(f, "not a PVS: {w}"),
            PvsCond1Failure::NotLocal(w) => write!(f, "not local at {w}"),
            PvsCond1Failure::NonunitsNotMaximal(m) => {
                write!(f, "nonunit ideal ")?;
                fmt_set(f, m)?;
                write!(f, " is not maximal")
            }
        }
    }
}

/// Precondition error for both-zero gcd queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GcdError {
    #[error(transparent)]
    NotSemidomain(#[from] NotSemidomain),
    #[error("gcd is undefined when both arguments are zero")]
    BothZero,
}

fn require_semidomain(s: &FiniteSemiring) -> Result<(), NotSemidomain> {
    match s.is_semidomain() {
        Verdict::Fails(w) => Err(NotSemidomain(w)),
        _ => Ok(()),
    }
}

// ---------------------------------------------------------------------
// Linear-ordering conditions (any semiring)
// ---------------------------------------------------------------------

fn pairwise_comparable(ideals: &[Ideal<'_>]) -> Verdict<IdealPair> {
    for (i, a) in ideals.iter().enumerate() {
        for b in &ideals[i + 1..] {
            if !a.comparable_with(b) {
                return Verdict::Fails(IdealPair(a.member_list(), b.member_list()));
            }
        }
    }
    Verdict::holds()
}

/// Condition 1: the prime ideals form a chain under inclusion.
pub fn lop_cond1(s: &FiniteSemiring) -> Verdict<IdealPair> {
    pairwise_comparable(&s.prime_ideals())
}

/// Condition 2: the radical ideals form a chain under inclusion.
pub fn lop_cond2(s: &FiniteSemiring) -> Verdict<IdealPair> {
    let radicals: Vec<Ideal<'_>> = s
        .ideal_lattice()
        .into_iter()
        .filter(Ideal::is_radical)
        .collect();
    pairwise_comparable(&radicals)
}

/// Condition 3: every proper radical ideal is prime.
pub fn lop_cond3(s: &FiniteSemiring) -> Verdict<IdealMembers> {
    for ideal in s.ideal_lattice() {
        if ideal.is_proper() && ideal.is_radical() && !ideal.is_prime() {
            return Verdict::Fails(IdealMembers(ideal.member_list()));
        }
    }
    Verdict::holds()
}

/// Condition 4: the radicals of the principal ideals form a chain.
pub fn lop_cond4(s: &FiniteSemiring) -> Verdict<ElementPair> {
    for x in s.elements() {
        let rx = s.principal_ideal(x).radical_via_primes();
        for y in (x + 1)..s.order() {
            let ry = s.principal_ideal(y).radical_via_primes();
            if !rx.comparable_with(&ry) {
                return Verdict::Fails(ElementPair(x, y));
            }
        }
    }
    Verdict::holds()
}

/// Condition 5: for each `x, y` some `n ≥ 1` has `x | yⁿ` or `y | xⁿ`.
/// The power orbit is the exact set of positive powers, so the
/// existential over `n` is decided with no cutoff.
pub fn lop_cond5(s: &FiniteSemiring) -> Verdict<ElementPair> {
    for x in s.elements() {
        for y in x..s.order() {
            let forward = s.power_orbit(y).into_iter().any(|p| s.divides(x, p));
            let backward = || s.power_orbit(x).into_iter().any(|p| s.divides(y, p));
            if !forward && !backward() {
                return Verdict::Fails(ElementPair(x, y));
            }
        }
    }
    Verdict::holds()
}

/// Are all ideals linearly ordered by inclusion?
pub fn is_uniserial(s: &FiniteSemiring) -> Verdict<IdealPair> {
    pairwise_comparable(&s.ideal_lattice())
}

// ---------------------------------------------------------------------
// Semidomain properties
// ---------------------------------------------------------------------

/// Valuation semidomain via total divisibility: `a | b` or `b | a` for
/// all `a, b`. Agrees with [`is_uniserial`] on semidomains; both routes
/// are kept so the agreement can be asserted.
pub fn is_valuation(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for a in s.elements() {
        for b in (a + 1)..s.order() {
            if !s.divides(a, b) && !s.divides(b, a) {
                return Ok(Verdict::Fails(ElementPair(a, b)));
            }
        }
    }
    Ok(Verdict::holds())
}

/// A gcd of `a` and `b`: a common divisor divided by every common
/// divisor. Gcds form an associate class; the smallest element index is
/// returned so outputs are deterministic.
pub fn gcd(
    s: &FiniteSemiring,
    a: ElementId,
    b: ElementId,
) -> Result<Option<ElementId>, GcdError> {
    require_semidomain(s)?;
    if a == s.zero() && b == s.zero() {
        return Err(GcdError::BothZero);
    }
    let common: Vec<ElementId> = s
        .elements()
        .filter(|&c| s.divides(c, a) && s.divides(c, b))
        .collect();
    Ok(common
        .iter()
        .copied()
        .find(|&d| common.iter().all(|&c| s.divides(c, d))))
}

/// Does every admissible pair (not both zero) have a gcd?
pub fn is_gcd_semidomain(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for a in s.elements() {
        for b in a..s.order() {
            if a == s.zero() && b == s.zero() {
                continue;
            }
            if gcd(s, a, b).expect("pair is admissible").is_none() {
                return Ok(Verdict::Fails(ElementPair(a, b)));
            }
        }
    }
    Ok(Verdict::holds())
}

/// The equivalence "valuation ⇔ GCD semidomain with linearly ordered
/// primes", asserted rather than assumed: fails with both sides when
/// they disagree.
pub fn valuation_gcd_equivalence(
    s: &FiniteSemiring,
) -> Result<Verdict<EquivalenceSides>, NotSemidomain> {
    let sides = EquivalenceSides {
        valuation: is_valuation(s)?.is_holds(),
        gcd: is_gcd_semidomain(s)?.is_holds(),
        lop: lop_cond1(s).is_holds(),
    };
    if sides.valuation == (sides.gcd && sides.lop) {
        Ok(Verdict::holds())
    } else {
        Ok(Verdict::Fails(sides))
    }
}

// ---------------------------------------------------------------------
// Divided conditions (semidomains)
// ---------------------------------------------------------------------

/// Condition 1: every prime ideal `p` is divided, i.e. `p ⊂ (x)` strictly
/// for every `x` outside `p`.
pub fn divided_cond1(s: &FiniteSemiring) -> Result<Verdict<DividedFailure>, NotSemidomain> {
    require_semidomain(s)?;
    for p in s.prime_ideals() {
        for x in s.elements().filter(|&x| !p.contains(x)) {
            let px = s.principal_ideal(x);
            if !(p.is_subset_of(&px) && p != px) {
                return Ok(Verdict::Fails(DividedFailure {
                    prime: p.member_list(),
                    x,
                }));
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 2: every ideal `a` is comparable with every radical `√b`.
pub fn divided_cond2(s: &FiniteSemiring) -> Result<Verdict<IdealPair>, NotSemidomain> {
    require_semidomain(s)?;
    let lattice = s.ideal_lattice();
    for a in &lattice {
        for b in &lattice {
            if !a.comparable_with(&b.radical_via_krull()) {
                return Ok(Verdict::Fails(IdealPair(a.member_list(), b.member_list())));
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 3: every `(x)` is comparable with every `√(y)`.
pub fn divided_cond3(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        let px = s.principal_ideal(x);
        for y in s.elements() {
            if !px.comparable_with(&s.principal_ideal(y).radical_via_primes()) {
                return Ok(Verdict::Fails(ElementPair(x, y)));
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 4: for all `x, y`: `x | y`, or `y | xⁿ` for some `n ≥ 1`.
pub fn divided_cond4(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        for y in s.elements() {
            if !s.divides(x, y) && !s.power_orbit(x).into_iter().any(|p| s.divides(y, p)) {
                return Ok(Verdict::Fails(ElementPair(x, y)));
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 4 with the roles of the two elements swapped in the scan
/// (`y | x`, or `x | yⁿ`). Quantifying over all ordered pairs makes this
/// the same property; it is kept as a separate scan and asserted equal on
/// the corpus as a guard against asymmetry bugs.
pub fn divided_cond4_mirror(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        for y in s.elements() {
            if !s.divides(y, x) && !s.power_orbit(y).into_iter().any(|p| s.divides(x, p)) {
                return Ok(Verdict::Fails(ElementPair(x, y)));
            }
        }
    }
    Ok(Verdict::holds())
}

// ---------------------------------------------------------------------
// Pseudo-valuation conditions on the nonunit set (semidomains)
// ---------------------------------------------------------------------

/// Condition 1: a PVS whose maximal ideal is the nonunit set. Composite:
/// pseudo-valuation by definition, plus the nonunits forming a maximal
/// ideal, each computed independently.
pub fn pvs_cond1(s: &FiniteSemiring) -> Result<Verdict<PvsCond1Failure>, NotSemidomain> {
    let fsf = FractionSemifield::build(s)?;
    let m = match s.nonunits() {
        Nonunits::Ideal(m) => m,
        Nonunits::NotClosed(w) => return Ok(Verdict::Fails(PvsCond1Failure::NotLocal(w))),
    };
    if !m.is_maximal() {
        return Ok(Verdict::Fails(PvsCond1Failure::NonunitsNotMaximal(
            m.member_list(),
        )));
    }
    match fsf.is_pvs() {
        Verdict::Fails(w) => Ok(Verdict::Fails(PvsCond1Failure::NotPvs(w))),
        _ => Ok(Verdict::holds()),
    }
}

/// Condition 2: for all ideals `a, b`: `b ⊆ a`, or `a·c ⊆ b` for every
/// proper ideal `c`.
pub fn pvs_cond2(s: &FiniteSemiring) -> Result<Verdict<IdealTriple>, NotSemidomain> {
    require_semidomain(s)?;
    let lattice = s.ideal_lattice();
    for a in &lattice {
        for b in &lattice {
            if b.is_subset_of(a) {
                continue;
            }
            for c in lattice.iter().filter(|c| c.is_proper()) {
                if !a.product(c).is_subset_of(b) {
                    return Ok(Verdict::Fails(IdealTriple(
                        a.member_list(),
                        b.member_list(),
                        c.member_list(),
                    )));
                }
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 3: for all `x, y` and nonunits `z`: `yS ⊆ xS` or `xzS ⊆ yS`,
/// via principal-ideal containment.
pub fn pvs_cond3(s: &FiniteSemiring) -> Result<Verdict<ElementTriple>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        let px = s.principal_ideal(x);
        for y in s.elements() {
            let py = s.principal_ideal(y);
            if py.is_subset_of(&px) {
                continue;
            }
            for z in s.elements().filter(|&z| !s.is_unit(z)) {
                if !s.principal_ideal(s.mul(x, z)).is_subset_of(&py) {
                    return Ok(Verdict::Fails(ElementTriple(x, y, z)));
                }
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 4: for all `x, y` and nonunits `z`: `x | y` or `y | xz`,
/// via direct divisibility scans — the element-level counterpart of
/// condition 3 through the other divisibility route.
pub fn pvs_cond4(s: &FiniteSemiring) -> Result<Verdict<ElementTriple>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        for y in s.elements() {
            if s.divides(x, y) {
                continue;
            }
            for z in s.elements().filter(|&z| !s.is_unit(z)) {
                if !s.divides(y, s.mul(x, z)) {
                    return Ok(Verdict::Fails(ElementTriple(x, y, z)));
                }
            }
        }
    }
    Ok(Verdict::holds())
}

fn nonunit_multiples(s: &FiniteSemiring, x: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&z| !s.is_unit(z))
        .map(|z| s.mul(x, z))
        .collect()
}

/// Condition 5: for all `x, y`: `yS ⊆ xS`, or `xN ⊆ yS` with `N` the raw
/// nonunit set.
pub fn pvs_cond5(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        let px = s.principal_ideal(x);
        for y in s.elements() {
            let py = s.principal_ideal(y);
            if py.is_subset_of(&px) {
                continue;
            }
            if !nonunit_multiples(s, x).into_iter().all(|e| py.contains(e)) {
                return Ok(Verdict::Fails(ElementPair(x, y)));
            }
        }
    }
    Ok(Verdict::holds())
}

/// Condition 6: for all `x, y`: `yN ⊆ xS` or `xS ⊆ yN`.
pub fn pvs_cond6(s: &FiniteSemiring) -> Result<Verdict<ElementPair>, NotSemidomain> {
    require_semidomain(s)?;
    for x in s.elements() {
        let px = s.principal_ideal(x);
        for y in s.elements() {
            let yn = nonunit_multiples(s, y);
            let forward = yn.iter().all(|&e| px.contains(e));
            let backward = || {
                px.member_list()
                    .into_iter()
                    .all(|e| yn.contains(&e))
            };
            if !forward && !backward() {
                return Ok(Verdict::Fails(ElementPair(x, y)));
            }
        }
    }
    Ok(Verdict::holds())
}
