//! The naturals `(ℕ, +, ×, 0, 1)` as a symbolic semidomain.
//!
//! Divisibility, gcd, and power divisibility are decided exactly by
//! integer arithmetic. The instance is local — the nonunits `ℕ − {1}`
//! are closed under addition and multiplication — and its only analytic
//! decider is for gcd existence; everything else about it fails, with
//! certified witnesses.

use super::{Bound, NeverReason, PowerDecision, PropertyKind, SymbolicSemidomain};
use std::fmt;

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, exp: u32, modulus: u64) -> u64 {
    let mut result: u128 = 1;
    let mut base = base as u128 % modulus as u128;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus as u128;
        }
        base = base * base % modulus as u128;
        exp >>= 1;
    }
    result as u64
}

/// Reduced fraction over the naturals with a nonzero denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatFrac {
    pub num: u64,
    pub den: u64,
}

impl NatFrac {
    pub fn new(num: u64, den: u64) -> NatFrac {
        assert!(den != 0, "denominator must be nonzero");
        let g = gcd_u64(num, den).max(1);
        NatFrac {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for NatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `(ℕ, +, ×, 0, 1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Naturals;

impl SymbolicSemidomain for Naturals {
    type Elem = u64;
    type Frac = NatFrac;

    fn name(&self) -> &'static str {
        "naturals"
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        a + b
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b
    }

    fn divides(&self, d: u64, a: u64) -> bool {
        if d == 0 {
            a == 0
        } else {
            a % d == 0
        }
    }

    fn is_unit(&self, a: u64) -> bool {
        a == 1
    }

    fn in_maximal(&self, a: u64) -> bool {
        a != 1
    }

    fn gcd_of(&self, a: u64, b: u64) -> Option<u64> {
        if a == 0 && b == 0 {
            None
        } else {
            Some(gcd_u64(a, b))
        }
    }

    fn elements_up_to(&self, bound: &Bound) -> Vec<u64> {
        (0..=bound.max_element).collect()
    }

    fn fractions_up_to(&self, bound: &Bound) -> Vec<NatFrac> {
        let cap = bound.max_fraction;
        let mut fracs = Vec::new();
        for num in 0..=cap {
            for den in 1..=cap {
                if gcd_u64(num, den) == 1 {
                    fracs.push(NatFrac { num, den });
                }
            }
        }
        debug_assert!(fracs.windows(2).all(|w| w[0] < w[1]));
        fracs
    }

    fn embed(&self, e: u64) -> NatFrac {
        NatFrac { num: e, den: 1 }
    }

    fn frac_mul(&self, x: NatFrac, y: NatFrac) -> NatFrac {
        NatFrac::new(x.num * y.num, x.den * y.den)
    }

    fn frac_div(&self, x: NatFrac, y: NatFrac) -> Option<NatFrac> {
        if y.num == 0 {
            return None;
        }
        Some(NatFrac::new(x.num * y.den, x.den * y.num))
    }

    fn frac_in_base(&self, x: NatFrac) -> Option<u64> {
        (x.den == 1).then_some(x.num)
    }

    /// Exact: `d | baseⁿ` for some `n ≥ 1` iff every prime of `d` divides
    /// `base`; the needed exponent is bounded by the multiplicities.
    fn power_divides(&self, divisor: u64, base: u64) -> Option<PowerDecision> {
        if base == 0 {
            // every d divides 0 = base¹
            return Some(PowerDecision::DividesAt(1));
        }
        if divisor == 0 {
            return Some(PowerDecision::Never(NeverReason::ZeroDividesOnlyZero));
        }
        if divisor == 1 {
            return Some(PowerDecision::DividesAt(1));
        }
        if base == 1 {
            return Some(PowerDecision::Never(NeverReason::IdentityPowers));
        }
        let mut rest = divisor;
        let mut needed: u32 = 1;
        let mut p = 2;
        while rest > 1 {
            if rest % p == 0 {
                if base % p != 0 {
                    return Some(PowerDecision::Never(NeverReason::BlockingPrime(p)));
                }
                let mut mult_d = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    mult_d += 1;
                }
                let mut mult_b = 0u32;
                let mut b = base;
                while b % p == 0 {
                    b /= p;
                    mult_b += 1;
                }
                needed = needed.max(mult_d.div_ceil(mult_b));
            } else {
                p += 1;
            }
        }
        debug_assert_eq!(pow_mod(base, needed, divisor), 0, "exponent bound is wrong");
        Some(PowerDecision::DividesAt(needed))
    }

    fn verify_power_refutation(&self, divisor: u64, base: u64, reason: &NeverReason) -> bool {
        match reason {
            NeverReason::ZeroDividesOnlyZero => divisor == 0 && base != 0,
            NeverReason::IdentityPowers => base == 1 && divisor != 1,
            NeverReason::BlockingPrime(p) => {
                is_prime(*p) && divisor % p == 0 && base % p != 0
            }
        }
    }

    fn analytic(&self, property: PropertyKind) -> Option<&'static str> {
        match property {
            PropertyKind::Gcd => {
                Some("Euclid's algorithm yields a greatest common divisor for every pair")
            }
            _ => None,
        }
    }
}
