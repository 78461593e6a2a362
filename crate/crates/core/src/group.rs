//! Cayley-table groups and the structural subobjects computed from them.
//!
//! Elements are plain `usize` indices into the table. The identity is always
//! index 0; [`build_group`] relocates it there when the input table puts it
//! elsewhere.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::subgroup::Subgroup;

/// Tables up to this order are checked for associativity on construction.
pub const ASSOCIATIVITY_CAP: usize = 256;

struct GroupData {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// A finite group given by its full multiplication table.
///
/// Cloning is cheap: the table is shared. Two handles are the *same* group
/// only if they point at the same table (see [`FiniteGroup::same_as`]).
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverse[a]
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_order(g);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `x⁻¹ g x`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.inv(x), self.mul(g, x))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.0.element_orders[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.0.labels {
            Some(labels) => labels[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.0
            .table
            .chunks(self.order())
            .map(|row| row.to_vec())
            .collect()
    }

    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.0.element_orders.iter().fold(1, |acc, &o| lcm(acc, o))
    }

    /// Returns `(p, k)` when the order is `p^k` with `k ≥ 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        prime_power(self.order() as u64)
    }

    pub fn is_p_group(&self) -> bool {
        self.prime_power().is_some()
    }

    /// Builds a group from a multiplication closure over `0..order`.
    pub fn from_fn(
        order: usize,
        labels: Option<Vec<String>>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteGroup> {
        let table = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect::<Vec<Vec<usize>>>();
        build_group_labeled(table, labels).map(|(g, _)| g)
    }
}

/// Validates a square table and returns the group it defines.
pub fn build_group(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    build_group_labeled(table, None).map(|(g, _)| g)
}

/// Like [`build_group`], also returning the relabeling `perm` with
/// `perm[new_index] = old_index` (the identity permutation unless the input's
/// identity was not at index 0).
pub fn build_group_labeled(
    table: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
) -> Result<(FiniteGroup, Vec<usize>)> {
    build_group_with_cap(table, labels, ASSOCIATIVITY_CAP)
}

pub fn build_group_with_cap(
    table: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    associativity_cap: usize,
) -> Result<(FiniteGroup, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotAGroup(format!(
                "row {i} has length {} but the table has {n} rows",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(GroupError::NotAGroup(format!(
                "entry {bad} in row {i} is out of range"
            )));
        }
    }
    if let Some(labels) = &labels {
        if labels.len() != n {
            return Err(GroupError::NotAGroup(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
    }

    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;

    // perm[new] = old; swapping the identity into slot 0 is enough.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(0, identity);
    let mut old_to_new = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        old_to_new[old] = new;
    }

    let mut flat = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[a * n + b] = old_to_new[table[perm[a]][perm[b]]];
        }
    }

    let mut seen = vec![false; n];
    for a in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for b in 0..n {
            let x = flat[a * n + b];
            if seen[x] {
                return Err(GroupError::NotAGroup(format!(
                    "row {} repeats element {}",
                    perm[a], perm[x]
                )));
            }
            seen[x] = true;
        }
    }

    let mut inverse = vec![usize::MAX; n];
    for a in 0..n {
        let b = (0..n).find(|&b| flat[a * n + b] == 0).expect("latin row");
        if flat[b * n + a] != 0 {
            return Err(GroupError::NotAGroup(format!(
                "element {} has no two-sided inverse",
                perm[a]
            )));
        }
        inverse[a] = b;
    }

    if n <= associativity_cap {
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    let bc = flat[b * n + c];
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            perm[a], perm[b], perm[c]
                        )));
                    }
                }
            }
        }
    }

    let element_orders = (0..n)
        .map(|g| {
            let mut k = 1;
            let mut x = g;
            while x != 0 {
                x = flat[x * n + g];
                k += 1;
            }
            k
        })
        .collect();

    let labels = labels.map(|l| perm.iter().map(|&old| l[old].clone()).collect());
    let data = GroupData {
        order: n,
        table: flat,
        inverse,
        element_orders,
        labels,
    };
    Ok((FiniteGroup(Arc::new(data)), perm))
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn subgroup_generate(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_mask(g.clone(), mask)
}

pub fn element_order(g: &FiniteGroup, x: usize) -> usize {
    g.element_order(x)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let mask = g
        .elements()
        .map(|z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_mask(g.clone(), mask)
}

/// The subgroup generated by all `[a, b]` with `a ∈ A`, `b ∈ B`.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if !a.parent().same_as(b.parent()) {
        return Err(GroupError::MismatchedParent);
    }
    let g = a.parent();
    let mut gens: Vec<usize> = a
        .members()
        .iter()
        .flat_map(|&x| b.members().iter().map(move |&y| g.commutator(x, y)))
        .collect();
    gens.sort_unstable();
    gens.dedup();
    Ok(subgroup_generate(g, &gens))
}

/// `γ_1 … γ_n` with `γ_1 = G` and `γ_{i+1} = [γ_i, G]`.
pub fn lower_central_series(g: &FiniteGroup, n: usize) -> Vec<Subgroup> {
    let whole = Subgroup::whole(g);
    let mut series = vec![whole.clone()];
    while series.len() < n {
        let last = series.last().expect("non-empty");
        let next = commutator_subgroup(last, &whole).expect("same parent");
        series.push(next);
    }
    series.truncate(n.max(1));
    series
}

/// `γ_n(G)` for `n ≥ 1`.
pub fn gamma(g: &FiniteGroup, n: usize) -> Subgroup {
    lower_central_series(g, n.max(1)).pop().expect("non-empty")
}

/// Least `c` with `γ_{c+1} = 1`; the trivial group has class 0.
pub fn nilpotency_class(g: &FiniteGroup) -> Result<usize> {
    let whole = Subgroup::whole(g);
    let mut current = whole.clone();
    let mut class = 0;
    while !current.is_trivial() {
        let next = commutator_subgroup(&current, &whole)?;
        if next == current {
            return Err(GroupError::NotNilpotent);
        }
        current = next;
        class += 1;
    }
    Ok(class)
}

pub fn is_normal(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.parent().same_as(g)
        && s.members()
            .iter()
            .all(|&h| g.elements().all(|x| s.contains(g.conjugate(h, x))))
}

pub fn conjugacy_class(g: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut class: Vec<usize> = g.elements().map(|y| g.conjugate(x, y)).collect();
    class.sort_unstable();
    class.dedup();
    class
}

pub fn normal_closure(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let conjugates: Vec<usize> = gens.iter().flat_map(|&x| conjugacy_class(g, x)).collect();
    subgroup_generate(g, &conjugates)
}

pub fn exponent(g: &FiniteGroup) -> usize {
    g.exponent()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}
