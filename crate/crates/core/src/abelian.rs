//! Finite abelian groups: cyclic decompositions, rank, the `var` statistic
//! and homomorphism counting between abelian p-groups.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::subgroup::Subgroup;

/// `C_{p^{n_1}} × ⋯ × C_{p^{n_s}}` with `n_1 ≥ ⋯ ≥ n_s ≥ 1`.
///
/// `prime` is `None` only for the trivial group, which is a p-group for
/// every p. `basis` holds elements of the source group realizing the
/// decomposition, or is empty for invariants built from exponents alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianPInvariants {
    #[serde(rename = "p")]
    pub prime: Option<u64>,
    pub exponents: Vec<u32>,
    #[serde(skip)]
    pub basis: Vec<usize>,
}

impl AbelianPInvariants {
    pub fn from_exponents(prime: u64, mut exponents: Vec<u32>) -> Self {
        exponents.retain(|&e| e > 0);
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        AbelianPInvariants {
            prime: (!exponents.is_empty()).then_some(prime),
            exponents,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn order(&self) -> u128 {
        self.prime
            .map_or(1, |p| (p as u128).pow(self.exponents.iter().sum::<u32>()))
    }

    pub fn exponent(&self) -> u64 {
        match (self.prime, self.exponents.first()) {
            (Some(p), Some(&e)) => p.pow(e),
            _ => 1,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Same exponent list; the basis is ignored.
    pub fn same_type(&self, other: &AbelianPInvariants) -> bool {
        self.exponents == other.exponents && (self.is_trivial() || self.prime == other.prime)
    }
}

fn common_prime(a: &AbelianPInvariants, b: &AbelianPInvariants) -> Result<Option<u64>> {
    match (a.prime, b.prime) {
        (Some(p), Some(q)) if p != q => Err(GroupError::PrimeMismatch(p, q)),
        (p, q) => Ok(p.or(q)),
    }
}

pub fn rank(inv: &AbelianPInvariants) -> usize {
    inv.rank()
}

/// Invariants of an abelian p-group given as a Cayley table.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<AbelianPInvariants> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    if g.order() == 1 {
        return Ok(AbelianPInvariants {
            prime: None,
            exponents: Vec::new(),
            basis: Vec::new(),
        });
    }
    let (p, total) = g
        .prime_power()
        .ok_or(GroupError::NotPrimePower(g.order()))?;
    let basis = p_group_basis(g)
        .ok_or_else(|| GroupError::HypothesisViolated("no cyclic decomposition found".into()))?;
    let exponents: Vec<u32> = basis
        .iter()
        .map(|&b| log_p(g.element_order(b) as u64, p))
        .collect();
    debug_assert_eq!(exponents.iter().sum::<u32>(), total);
    Ok(AbelianPInvariants {
        prime: Some(p),
        exponents,
        basis,
    })
}

/// Invariants of an abelian subgroup, with the basis in parent indices.
pub fn subgroup_invariants(s: &Subgroup) -> Result<AbelianPInvariants> {
    let mut inv = abelian_invariants(s.as_group())?;
    inv.basis = inv.basis.iter().map(|&b| s.to_parent(b)).collect();
    Ok(inv)
}

fn log_p(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// Smallest `k ≥ 1` with `x^k ∈ span`.
fn order_modulo(g: &FiniteGroup, x: usize, span: &Subgroup) -> usize {
    let mut y = x;
    let mut k = 1;
    while !span.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Greedy basis: repeatedly adjoin an element whose order equals the maximal
/// order modulo the current span (so the sum stays direct), backtracking if
/// no such element exists.
fn p_group_basis(g: &FiniteGroup) -> Option<Vec<usize>> {
    fn extend(g: &FiniteGroup, span: &Subgroup, basis: &mut Vec<usize>) -> bool {
        if span.is_whole() {
            return true;
        }
        let quotient_orders: Vec<usize> = g.elements().map(|x| order_modulo(g, x, span)).collect();
        let top = *quotient_orders.iter().max().expect("non-empty");
        let candidates: Vec<usize> = g
            .elements()
            .filter(|&x| quotient_orders[x] == top && g.element_order(x) == top)
            .collect();
        for x in candidates {
            let mut gens = basis.clone();
            gens.push(x);
            let next = group::subgroup_generate(g, &gens);
            if next.order() != span.order() * top {
                continue;
            }
            basis.push(x);
            if extend(g, &next, basis) {
                return true;
            }
            basis.pop();
        }
        false
    }
    let mut basis = Vec::new();
    extend(g, &Subgroup::trivial(g), &mut basis).then_some(basis)
}

/// A basis of an arbitrary finite abelian group (p-primary parts
/// concatenated) together with the coordinates of every element.
#[derive(Clone, Debug)]
pub struct AbelianBasis {
    pub basis: Vec<usize>,
    pub orders: Vec<usize>,
    /// `coordinates[g][i]` is the exponent of `basis[i]` in `g`.
    pub coordinates: Vec<Vec<usize>>,
}

pub fn abelian_basis(g: &FiniteGroup) -> Result<AbelianBasis> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let mut basis = Vec::new();
    for p in group::prime_factors(g.order() as u64) {
        let mask: Vec<bool> = g
            .elements()
            .map(|x| group::prime_power(g.element_order(x) as u64).map_or(x == 0, |(q, _)| q == p))
            .collect();
        let primary = Subgroup::from_mask(g.clone(), mask);
        basis.extend(subgroup_invariants(&primary)?.basis);
    }
    let orders: Vec<usize> = basis.iter().map(|&b| g.element_order(b)).collect();

    let mut coordinates = vec![Vec::new(); g.order()];
    let total: usize = orders.iter().product();
    if total != g.order() {
        return Err(GroupError::HypothesisViolated("basis does not span".into()));
    }
    for flat in 0..total {
        let mut rest = flat;
        let mut coords = vec![0; orders.len()];
        for (c, &o) in coords.iter_mut().zip(&orders).rev() {
            *c = rest % o;
            rest /= o;
        }
        let element = coords
            .iter()
            .zip(&basis)
            .fold(0, |acc, (&c, &b)| g.mul(acc, g.pow(b, c)));
        coordinates[element] = coords;
    }
    Ok(AbelianBasis {
        basis,
        orders,
        coordinates,
    })
}

/// `var(sub, sup)` for equal-rank abelian p-groups `sub ⊆ sup`: 1 when the
/// types agree, otherwise `p^{n_r}` for the last position `r` where the
/// subgroup's cyclic factor is smaller.
pub fn var(sub: &AbelianPInvariants, sup: &AbelianPInvariants) -> Result<u64> {
    let p = common_prime(sub, sup)?;
    if sub.rank() != sup.rank() {
        return Err(GroupError::RankMismatch(sub.rank(), sup.rank()));
    }
    if sub.exponents.iter().zip(&sup.exponents).any(|(n, m)| n > m) {
        return Err(GroupError::NotComponentwiseDominated {
            sub: sub.exponents.clone(),
            sup: sup.exponents.clone(),
        });
    }
    match last_smaller_position(sub, sup) {
        None => Ok(1),
        Some(r) => Ok(p.expect("nontrivial").pow(sub.exponents[r])),
    }
}

fn last_smaller_position(sub: &AbelianPInvariants, sup: &AbelianPInvariants) -> Option<usize> {
    sub.exponents
        .iter()
        .zip(&sup.exponents)
        .rposition(|(n, m)| n < m)
}

/// `|Hom(A, B)| = ∏_{i,j} p^{min(n_i, m_j)}`.
pub fn hom_order(a: &AbelianPInvariants, b: &AbelianPInvariants) -> Result<u128> {
    let p = common_prime(a, b)?;
    let e: u32 = a
        .exponents
        .iter()
        .flat_map(|&n| b.exponents.iter().map(move |&m| n.min(m)))
        .sum();
    Ok(p.map_or(1, |p| (p as u128).pow(e)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma26Outcome {
    pub hom_equal: bool,
    pub criterion: bool,
    /// 1-based position defining `var(H, K)` when the ranks agree and `H ≠ K`.
    pub r: Option<usize>,
}

impl Lemma26Outcome {
    pub fn holds(&self) -> bool {
        self.hom_equal == self.criterion
    }
}

/// Compares `Hom(G, H) = Hom(G, K)` (for `H ⊆ K`, equality of orders) with
/// the structural criterion `H = K`, or `d(H) = d(K)` and `exp(G) ≤ var(H, K)`.
pub fn lemma26_test(
    g: &AbelianPInvariants,
    h: &AbelianPInvariants,
    k: &AbelianPInvariants,
) -> Result<Lemma26Outcome> {
    common_prime(g, h)?;
    common_prime(g, k)?;
    common_prime(h, k)?;
    if h.rank() > k.rank() || h.exponents.iter().zip(&k.exponents).any(|(n, m)| n > m) {
        return Err(GroupError::NotComponentwiseDominated {
            sub: h.exponents.clone(),
            sup: k.exponents.clone(),
        });
    }
    let hom_equal = hom_order(g, h)? == hom_order(g, k)?;
    let (criterion, r) = if h.same_type(k) {
        (true, None)
    } else if h.rank() == k.rank() {
        let v = var(h, k)?;
        (
            g.exponent() <= v,
            last_smaller_position(h, k).map(|r| r + 1),
        )
    } else {
        (false, None)
    };
    Ok(Lemma26Outcome {
        hom_equal,
        criterion,
        r,
    })
}

/// All exponent partitions of `k`, each weakly decreasing.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}
