//! Exhaustive enumeration of all semirings of a small order, one
//! representative per isomorphism class.
//!
//! Search strategy: enumerate commutative-monoid addition tables with
//! identity 0 (backtracking over the upper triangle with incremental
//! associativity pruning), dedup those up to relabelings fixing 0, then
//! for each addition class and each choice of multiplicative identity,
//! backtrack over multiplication tables with associativity and
//! distributivity checked as cells are assigned. Candidates are reduced
//! to canonical form and deduplicated; emission is in canonical-form
//! order, so output is identical across runs and thread counts.
//!
//! [`enumerate_by_filtering`] is a deliberately independent second
//! strategy (generate everything, validate, reject isomorphs pairwise)
//! used to pin the class counts.

use crate::par;
use crate::semiring::{validate_axioms, FiniteSemiring, RawTables};
use std::collections::BTreeSet;

/// Default guard for enumeration; the search space explodes beyond this.
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("enumeration refused: order {order} exceeds cap {cap} (raise the cap explicitly)")]
pub struct EnumerationCapError {
    pub order: usize,
    pub cap: usize,
}

/// Permutation-minimal byte encoding of a semiring: two semirings are
/// isomorphic exactly when their canonical forms are equal. Nothing is
/// fixed a priori — the zero and one positions are recomputed under every
/// permutation and included in the encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k % 2 == 0 {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut result);
    result
}

fn encode_relabeled(s: &FiniteSemiring, perm: &[usize]) -> Vec<u8> {
    let n = s.order();
    // inverse permutation: new label -> old label
    let mut inv = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut bytes = Vec::with_capacity(3 + 2 * n * n);
    bytes.push(n as u8);
    bytes.push(perm[s.zero()] as u8);
    bytes.push(perm[s.one()] as u8);
    for i in 0..n {
        for j in 0..n {
            bytes.push(perm[s.add(inv[i], inv[j])] as u8);
        }
    }
    for i in 0..n {
        for j in 0..n {
            bytes.push(perm[s.mul(inv[i], inv[j])] as u8);
        }
    }
    bytes
}

/// Minimal encoding over all `n!` relabelings.
pub fn canonical_form(s: &FiniteSemiring) -> CanonicalForm {
    let n = s.order();
    assert!(n <= 8, "canonical form enumerates all n! permutations");
    CanonicalForm(
        permutations(n)
            .iter()
            .map(|perm| encode_relabeled(s, perm))
            .min()
            .expect("at least one permutation"),
    )
}

/// Rebuild the representative semiring a canonical form encodes.
pub fn from_canonical(form: &CanonicalForm) -> FiniteSemiring {
    let b = &form.0;
    let n = b[0] as usize;
    let table = |offset: usize| {
        (0..n)
            .map(|i| (0..n).map(|j| b[offset + i * n + j] as usize).collect())
            .collect()
    };
    FiniteSemiring::new(RawTables {
        name: None,
        order: n,
        zero: b[1] as usize,
        one: b[2] as usize,
        add: table(3),
        mul: table(3 + n * n),
    })
    .expect("canonical forms encode valid semirings")
}

/// Direct isomorphism test: some relabeling carries one structure onto
/// the other. Independent of [`canonical_form`], so the two can check
/// each other.
pub fn are_isomorphic(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    permutations(n).iter().any(|perm| {
        perm[a.zero()] == b.zero()
            && perm[a.one()] == b.one()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    perm[a.add(i, j)] == b.add(perm[i], perm[j])
                        && perm[a.mul(i, j)] == b.mul(perm[i], perm[j])
                })
            })
    })
}

/// Partial symmetric operation table during backtracking.
struct PartialTable {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl PartialTable {
    fn new(n: usize) -> Self {
        PartialTable {
            n,
            cells: vec![None; n * n],
        }
    }

    fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.cells[i * self.n + j]
    }

    fn set_symmetric(&mut self, i: usize, j: usize, v: usize) {
        self.cells[i * self.n + j] = Some(v);
        self.cells[j * self.n + i] = Some(v);
    }

    fn clear_symmetric(&mut self, i: usize, j: usize) {
        self.cells[i * self.n + j] = None;
        self.cells[j * self.n + i] = None;
    }

    fn complete(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.expect("table complete")).collect()
    }

    /// Associativity over every triple whose lookups are all defined.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    let (Some(abc), Some(bc)) = (self.get(ab, c), self.get(b, c)) else {
                        continue;
                    };
                    let Some(a_bc) = self.get(a, bc) else { continue };
                    if abc != a_bc {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All commutative-monoid tables on `0..n` with identity 0, as flat
/// row-major tables.
fn addition_tables(n: usize) -> Vec<Vec<usize>> {
    let mut table = PartialTable::new(n);
    for i in 0..n {
        table.set_symmetric(0, i, i);
    }
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fn recurse(
        table: &mut PartialTable,
        free: &[(usize, usize)],
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == free.len() {
            out.push(table.complete());
            return;
        }
        let (i, j) = free[depth];
        for v in 0..table.n {
            table.set_symmetric(i, j, v);
            if table.associative_so_far() {
                recurse(table, free, depth + 1, out);
            }
            table.clear_symmetric(i, j);
        }
    }
    recurse(&mut table, &free, 0, &mut out);
    out
}

/// Canonical key of an addition table under relabelings fixing 0 — the
/// monoid identity must map to the identity, so only these relabelings
/// can identify two tables that both have identity 0.
fn addition_key(table: &[usize], n: usize) -> Vec<u8> {
    permutations(n)
        .iter()
        .filter(|p| p[0] == 0)
        .map(|perm| {
            let mut inv = vec![0usize; n];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            let mut bytes = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    bytes.push(perm[table[inv[i] * n + inv[j]]] as u8);
                }
            }
            bytes
        })
        .min()
        .expect("identity permutation fixes 0")
}

/// All multiplication tables completing `add` into a semiring with
/// multiplicative identity `one` (zero is 0). Commutativity and the
/// forced rows are built in; associativity and distributivity prune the
/// search as each cell is assigned.
fn multiplication_tables(add: &[usize], n: usize, one: usize) -> Vec<Vec<usize>> {
    let mut mul = PartialTable::new(n);
    for i in 0..n {
        mul.set_symmetric(0, i, 0);
        if i != 0 {
            mul.set_symmetric(one, i, i);
        }
    }
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != one && j != one)
        .collect();

    let distributive_so_far = |mul: &PartialTable| -> bool {
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = mul.get(a, b) else { continue };
                for c in 0..n {
                    let Some(ac) = mul.get(a, c) else { continue };
                    let Some(a_bc) = mul.get(a, add[b * n + c]) else {
                        continue;
                    };
                    if a_bc != add[ab * n + ac] {
                        return false;
                    }
                }
            }
        }
        true
    };

    let mut out = Vec::new();
    fn recurse(
        mul: &mut PartialTable,
        free: &[(usize, usize)],
        depth: usize,
        dist: &dyn Fn(&PartialTable) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == free.len() {
            out.push(mul.complete());
            return;
        }
        let (i, j) = free[depth];
        for v in 0..mul.n {
            mul.set_symmetric(i, j, v);
            if mul.associative_so_far() && dist(mul) {
                recurse(mul, free, depth + 1, dist, out);
            }
            mul.clear_symmetric(i, j);
        }
    }
    recurse(&mut mul, &free, 0, &distributive_so_far, &mut out);
    out
}

fn unflatten(table: &[usize], n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| table[i * n..(i + 1) * n].to_vec()).collect()
}

/// Enumerate all semirings of the given order up to isomorphism, guarded
/// by [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_semirings(order: usize) -> Result<Vec<FiniteSemiring>, EnumerationCapError> {
    enumerate_semirings_capped(order, DEFAULT_ENUMERATION_CAP)
}

/// [`enumerate_semirings`] with an explicit cap.
pub fn enumerate_semirings_capped(
    order: usize,
    cap: usize,
) -> Result<Vec<FiniteSemiring>, EnumerationCapError> {
    if order > cap {
        return Err(EnumerationCapError { order, cap });
    }
    if order < 2 {
        return Ok(Vec::new());
    }
    let n = order;
    let additions = addition_tables(n);
    let mut seen_adds = BTreeSet::new();
    let add_classes: Vec<Vec<usize>> = additions
        .into_iter()
        .filter(|t| seen_adds.insert(addition_key(t, n)))
        .collect();

    // one addition class per task; each task completes every choice of
    // multiplicative identity
    let candidates: Vec<CanonicalForm> = par::flat_map_indexed(add_classes.len(), |idx| {
        let add = &add_classes[idx];
        let mut forms = Vec::new();
        for one in 1..n {
            for mul in multiplication_tables(add, n, one) {
                let raw = RawTables {
                    name: None,
                    order: n,
                    zero: 0,
                    one,
                    add: unflatten(add, n),
                    mul: unflatten(&mul, n),
                };
                let s = FiniteSemiring::new(raw)
                    .expect("backtracking emits only axiom-satisfying tables");
                forms.push(canonical_form(&s));
            }
        }
        forms
    });

    let distinct: BTreeSet<CanonicalForm> = candidates.into_iter().collect();
    Ok(distinct
        .iter()
        .enumerate()
        .map(|(i, form)| from_canonical(form).with_name(format!("order{n}_{i}")))
        .collect())
}

/// Second, independent strategy: generate every table pair, keep the ones
/// that validate, and reject isomorphs by pairwise permutation search.
/// Exponential; only usable for tiny orders, which is its entire job.
pub fn enumerate_by_filtering(order: usize) -> Vec<FiniteSemiring> {
    assert!((2..=4).contains(&order), "filtering strategy is for order 2..=4");
    let n = order;
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();

    // every symmetric table with a forced identity row, by odometer
    let symmetric_tables = |identity_value: &dyn Fn(usize) -> usize,
                            free_cells: &[(usize, usize)]|
     -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut assignment = vec![0usize; free_cells.len()];
        loop {
            let mut table = vec![0usize; n * n];
            for i in 0..n {
                table[i] = identity_value(i);
                table[i * n] = identity_value(i);
            }
            for (&(i, j), &v) in free_cells.iter().zip(&assignment) {
                table[i * n + j] = v;
                table[j * n + i] = v;
            }
            out.push(table);
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    return out;
                }
                assignment[pos] += 1;
                if assignment[pos] < n {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    };

    // prefilter: keep only commutative-monoid addition tables (checked
    // with its own scan, independent of validate_axioms)
    let is_comm_monoid = |t: &[usize]| -> bool {
        for a in 0..n {
            if t[a] != a || t[a * n] != a {
                return false;
            }
            for b in 0..n {
                if t[a * n + b] != t[b * n + a] {
                    return false;
                }
                for c in 0..n {
                    if t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]] {
                        return false;
                    }
                }
            }
        }
        true
    };
    let adds: Vec<Vec<usize>> = symmetric_tables(&|i| i, &free)
        .into_iter()
        .filter(|t| is_comm_monoid(t))
        .collect();
    let mut found: Vec<FiniteSemiring> = Vec::new();
    for add in &adds {
        for one in 1..n {
            let mul_free: Vec<(usize, usize)> = free
                .iter()
                .copied()
                .filter(|&(i, j)| i != one && j != one)
                .collect();
            let mut muls = Vec::new();
            let mut assignment = vec![0usize; mul_free.len()];
            loop {
                let mut table = vec![0usize; n * n];
                for i in 0..n {
                    table[one * n + i] = i;
                    table[i * n + one] = i;
                }
                table[0] = 0;
                for (&(i, j), &v) in mul_free.iter().zip(&assignment) {
                    table[i * n + j] = v;
                    table[j * n + i] = v;
                }
                muls.push(table);
                let mut pos = 0;
                let done = loop {
                    if pos == assignment.len() {
                        break true;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < n {
                        break false;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                };
                if done {
                    break;
                }
            }
            for mul in muls {
                let raw = RawTables {
                    name: None,
                    order: n,
                    zero: 0,
                    one,
                    add: unflatten(add, n),
                    mul: unflatten(&mul, n),
                };
                if validate_axioms(&raw).map(|r| r.valid()).unwrap_or(false) {
                    let s = FiniteSemiring::new(raw).expect("validated");
                    if !found.iter().any(|t| are_isomorphic(t, &s)) {
                        found.push(s);
                    }
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn order_two_has_exactly_boolean_and_z2() {
        let found = enumerate_semirings(2).unwrap();
        assert_eq!(found.len(), 2);
        let b = catalog::boolean();
        let z2 = catalog::zmod(2);
        assert!(found.iter().any(|s| are_isomorphic(s, &b)));
        assert!(found.iter().any(|s| are_isomorphic(s, &z2)));
    }

    #[test]
    fn order_two_semidomain_filter_keeps_both() {
        let found = enumerate_semirings(2).unwrap();
        assert!(found.iter().all(|s| s.is_semidomain().is_holds()));
    }

    #[test]
    fn strategies_agree_on_small_orders() {
        for n in 2..=3 {
            let backtracked = enumerate_semirings(n).unwrap();
            let filtered = enumerate_by_filtering(n);
            assert_eq!(backtracked.len(), filtered.len(), "order {n}");
            for s in &filtered {
                assert!(
                    backtracked.iter().any(|t| are_isomorphic(t, s)),
                    "order {n}: filtered structure missing from backtracking"
                );
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let z6 = catalog::zmod(6);
        let perm = vec![5, 3, 1, 0, 2, 4];
        assert_eq!(canonical_form(&z6), canonical_form(&z6.relabel(&perm)));
    }

    #[test]
    fn canonical_form_separates_non_isomorphic() {
        assert_ne!(
            canonical_form(&catalog::boolean()),
            canonical_form(&catalog::zmod(2))
        );
        assert_ne!(
            canonical_form(&catalog::chain(3)),
            canonical_form(&catalog::zmod(3))
        );
    }

    #[test]
    fn canonical_form_agrees_with_direct_isomorphism() {
        let members = enumerate_semirings(3).unwrap();
        for a in &members {
            for b in &members {
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    are_isomorphic(a, b)
                );
            }
        }
    }

    #[test]
    fn emitted_representatives_are_valid_and_named() {
        for s in enumerate_semirings(3).unwrap() {
            assert!(validate_axioms(&s.to_raw()).unwrap().valid());
            assert!(s.name().unwrap().starts_with("order3_"));
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<_> = enumerate_semirings(3)
            .unwrap()
            .iter()
            .map(|s| serde_json::to_string(&s.to_raw()).unwrap())
            .collect();
        let b: Vec<_> = enumerate_semirings(3)
            .unwrap()
            .iter()
            .map(|s| serde_json::to_string(&s.to_raw()).unwrap())
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_semirings(5).unwrap_err(),
            EnumerationCapError { order: 5, cap: 4 }
        );
    }
}
