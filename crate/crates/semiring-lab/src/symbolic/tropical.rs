//! The min-plus tropical semiring `T = (ℕ ∪ {∞}, min, +)` as a symbolic
//! semidomain.
//!
//! `∞` is the additive identity (the zero of the semiring) and `0` the
//! multiplicative identity. Divisibility is the total order on values —
//! `x | y` iff `y ≥ x` — which makes T a valuation semiring, so every
//! property here holds and the instance carries analytic deciders for all
//! of them. Its fraction semifield is `(ℤ ∪ {∞}, min, +)`: elements and
//! fractions share one representation, with elements required to be
//! non-negative.

use super::{Bound, NeverReason, PowerDecision, PropertyKind, SymbolicSemidomain};
use std::fmt;

/// A value of the min-plus semiring or its fraction semifield.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinPlus {
    Fin(i64),
    Inf,
}

use MinPlus::{Fin, Inf};

impl fmt::Display for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(v) => write!(f, "{v}"),
            Inf => write!(f, "∞"),
        }
    }
}

/// `(ℕ ∪ {∞}, min, +)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Tropical;

impl SymbolicSemidomain for Tropical {
    type Elem = MinPlus;
    type Frac = MinPlus;

    fn name(&self) -> &'static str {
        "tropical"
    }

    fn zero(&self) -> MinPlus {
        Inf
    }

    fn one(&self) -> MinPlus {
        Fin(0)
    }

    fn add(&self, a: MinPlus, b: MinPlus) -> MinPlus {
        match (a, b) {
            (Inf, x) | (x, Inf) => x,
            (Fin(u), Fin(v)) => Fin(u.min(v)),
        }
    }

    fn mul(&self, a: MinPlus, b: MinPlus) -> MinPlus {
        match (a, b) {
            (Inf, _) | (_, Inf) => Inf,
            (Fin(u), Fin(v)) => Fin(u + v),
        }
    }

    /// `d | a` iff `a = d + t` for some `t` in the semiring: the value
    /// order, with `x | ∞` for every `x`.
    fn divides(&self, d: MinPlus, a: MinPlus) -> bool {
        match (d, a) {
            (_, Inf) => true,
            (Inf, Fin(_)) => false,
            (Fin(dv), Fin(av)) => av >= dv,
        }
    }

    fn is_unit(&self, a: MinPlus) -> bool {
        a == Fin(0)
    }

    fn in_maximal(&self, a: MinPlus) -> bool {
        !self.is_unit(a)
    }

    fn gcd_of(&self, a: MinPlus, b: MinPlus) -> Option<MinPlus> {
        match (a, b) {
            (Inf, Inf) => None,
            (Inf, x) | (x, Inf) => Some(x),
            (Fin(u), Fin(v)) => Some(Fin(u.min(v))),
        }
    }

    fn elements_up_to(&self, bound: &Bound) -> Vec<MinPlus> {
        let mut elems: Vec<MinPlus> = (0..=bound.max_element as i64).map(Fin).collect();
        elems.push(Inf);
        elems
    }

    fn fractions_up_to(&self, bound: &Bound) -> Vec<MinPlus> {
        let cap = bound.max_fraction as i64;
        let mut fracs: Vec<MinPlus> = (-cap..=cap).map(Fin).collect();
        fracs.push(Inf);
        fracs
    }

    fn embed(&self, e: MinPlus) -> MinPlus {
        e
    }

    fn frac_mul(&self, x: MinPlus, y: MinPlus) -> MinPlus {
        self.mul(x, y)
    }

    fn frac_div(&self, x: MinPlus, y: MinPlus) -> Option<MinPlus> {
        match (x, y) {
            (_, Inf) => None,
            (Inf, Fin(_)) => Some(Inf),
            (Fin(u), Fin(v)) => Some(Fin(u - v)),
        }
    }

    fn frac_in_base(&self, x: MinPlus) -> Option<MinPlus> {
        match x {
            Inf => Some(Inf),
            Fin(v) if v >= 0 => Some(Fin(v)),
            Fin(_) => None,
        }
    }

    /// `baseⁿ = n·base` in values, so `d | baseⁿ` for some `n` iff the
    /// values can climb past `d`.
    fn power_divides(&self, divisor: MinPlus, base: MinPlus) -> Option<PowerDecision> {
        match (divisor, base) {
            // base is the semiring zero: zero divides zero
            (_, Inf) => Some(PowerDecision::DividesAt(1)),
            (Inf, Fin(_)) => Some(PowerDecision::Never(NeverReason::ZeroDividesOnlyZero)),
            (Fin(dv), Fin(_)) if dv <= 0 => Some(PowerDecision::DividesAt(1)),
            (Fin(_), Fin(0)) => Some(PowerDecision::Never(NeverReason::IdentityPowers)),
            (Fin(dv), Fin(bv)) => {
                // dv ≥ 1, bv ≥ 1 here: n·bv ≥ dv at n = ⌈dv/bv⌉
                let n = ((dv + bv - 1) / bv).max(1) as u32;
                Some(PowerDecision::DividesAt(n))
            }
        }
    }

    fn analytic(&self, property: PropertyKind) -> Option<&'static str> {
        match property {
            PropertyKind::Valuation => {
                Some("divisibility is the total order on values: x | y iff y ≥ x")
            }
            PropertyKind::LopCond5 => {
                Some("values are totally ordered, so x | y or y | x already holds with n = 1")
            }
            PropertyKind::DividedCond4 => {
                Some("values are totally ordered, so x | y or y | x already holds")
            }
            PropertyKind::Gcd => {
                Some("divisibility is a total order, so the smaller value is a gcd")
            }
            PropertyKind::StronglyPrimeMaximal => {
                Some("x + y ≥ 1 over the integers forces x ≥ 1 or y ≥ 1")
            }
            PropertyKind::SubsetLocal => {
                Some("for integer x: x ≥ 1 gives xT ⊆ m, x ≤ 0 gives m ⊆ xT; x = ∞ gives xT = {∞} ⊆ m")
            }
            PropertyKind::Scaling => {
                Some("x·m has values ≥ x + 1: x ≥ 0 gives x·m ⊆ m, x ≤ 0 gives m ⊆ x·m; x = ∞ gives {∞} ⊆ m")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_divisible_by_everything() {
        let t = Tropical;
        for x in t.elements_up_to(&Bound::uniform(5)) {
            assert!(t.divides(x, Inf));
        }
        assert!(!t.divides(Inf, Fin(3)));
    }

    #[test]
    fn arithmetic() {
        let t = Tropical;
        assert_eq!(t.add(Fin(3), Fin(5)), Fin(3));
        assert_eq!(t.add(Inf, Fin(5)), Fin(5));
        assert_eq!(t.mul(Fin(3), Fin(5)), Fin(8));
        assert_eq!(t.mul(Inf, Fin(5)), Inf);
    }

    #[test]
    fn fraction_semifield_is_integers() {
        let t = Tropical;
        assert_eq!(t.frac_div(Fin(2), Fin(5)), Some(Fin(-3)));
        assert_eq!(t.frac_in_base(Fin(-3)), None);
        assert_eq!(t.frac_in_base(Fin(3)), Some(Fin(3)));
        assert_eq!(t.frac_div(Fin(2), Inf), None);
    }

    #[test]
    fn power_divides_follows_the_order() {
        let t = Tropical;
        assert_eq!(t.power_divides(Fin(7), Fin(2)), Some(PowerDecision::DividesAt(4)));
        assert_eq!(
            t.power_divides(Fin(1), Fin(0)),
            Some(PowerDecision::Never(NeverReason::IdentityPowers))
        );
        assert_eq!(t.power_divides(Fin(3), Inf), Some(PowerDecision::DividesAt(1)));
    }

    #[test]
    fn maximal_ideal_scaling_by_inverse_stays_inside() {
        // x = -1 in F(T): x⁻¹ = 1, and 1 + m = {k ≥ 2} ∪ {∞} ⊆ m.
        let t = Tropical;
        let x = Fin(-1);
        let inv = t.frac_div(t.one(), x).unwrap();
        assert_eq!(inv, Fin(1));
        for k in 1..=20i64 {
            let moved = t.frac_mul(inv, Fin(k));
            let e = t.frac_in_base(moved).expect("stays integral");
            assert!(t.in_maximal(e));
        }
        assert_eq!(t.frac_mul(inv, Inf), Inf);
    }
}
