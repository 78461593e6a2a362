//! Exponent and nilpotency-class facts about quotients and products.

use super::report::{put, Instance, TheoremId, TheoremReport};
use crate::error::Result;
use crate::group::{self, FiniteGroup};
use crate::lattice;
use crate::quotient::quotient;
use crate::subgroup::Subgroup;

fn quotient_exponent(g: &FiniteGroup, n: &Subgroup) -> Result<usize> {
    Ok(quotient(g, n)?.group.exponent())
}

/// `Z_k(G)`, the k-th term of the upper central series.
fn upper_central(g: &FiniteGroup, k: usize) -> Result<Subgroup> {
    let mut z = Subgroup::trivial(g);
    for _ in 0..k {
        let q = quotient(g, &z)?;
        let center = group::center(&q.group);
        let mask = g
            .elements()
            .map(|x| center.contains(q.project(x)))
            .collect();
        z = Subgroup::from_mask(g.clone(), mask);
    }
    Ok(z)
}

/// For nilpotent `G` of class `n`: `exp(G/Z(G))` divides `exp(γ_n(G))`, with
/// equality when `n = 2`.
pub fn check_exponent_center_series(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let class = group::nilpotency_class(g);
    let inst = Instance::new("class")
        .witness("class", class.as_ref().ok())
        .hypothesis("G is nilpotent", class.is_ok())
        .hypothesis(
            "class is at least 1",
            class.as_ref().is_ok_and(|&c| c >= 1),
        )
        .conclude(|w| {
            let n = class.clone()?;
            let exp_gz = quotient_exponent(g, &group::center(g))?;
            let exp_gn = group::gamma(g, n).exponent();
            let divides = exp_gn.is_multiple_of(exp_gz);
            let equal_if_two = n != 2 || exp_gz == exp_gn;
            put(w, "exp(G/Z)", exp_gz);
            put(w, "exp(gamma_n)", exp_gn);
            put(w, "exp(G/Z) divides exp(gamma_n)", divides);
            put(w, "exp(gamma_n) divides exp(G/Z)", exp_gz % exp_gn == 0);
            let upper = upper_central(g, n.saturating_sub(1))?;
            let exp_upper = quotient_exponent(g, &upper)?;
            put(w, "exp(G/Z_{n-1})", exp_upper);
            put(
                w,
                "exp(G/Z_{n-1}) divides exp(gamma_n)",
                exp_gn.is_multiple_of(exp_upper),
            );
            Ok(divides && equal_if_two)
        })?;
    Ok(TheoremReport::single(TheoremId::L2_1, spec, inst))
}

/// For normal `H ⊆ K`: `exp(G/K)` divides `exp(G/H)`.
pub fn check_quotient_exponent_divides(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let normals = lattice::normal_subgroups(g);
    let exps = normals
        .iter()
        .map(|n| quotient_exponent(g, n))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = 0usize;
    let mut counterexample = None;
    for (i, h) in normals.iter().enumerate() {
        for (j, k) in normals.iter().enumerate() {
            if h.is_subset_of(k) {
                pairs += 1;
                if exps[i] % exps[j] != 0 && counterexample.is_none() {
                    counterexample = Some((h.members().to_vec(), k.members().to_vec()));
                }
            }
        }
    }
    let inst = Instance::new("normal pairs")
        .hypothesis("normal subgroups H ⊆ K enumerated", pairs > 0)
        .witness("normal_subgroups", normals.len())
        .witness("pairs", pairs)
        .witness("counterexample", &counterexample)
        .conclude(|_| Ok(counterexample.is_none()))?;
    Ok(TheoremReport::single(TheoremId::L2_2, spec, inst))
}

/// For abelian `K`: `H × K` is nilpotent of class `n` iff `H` is.
pub fn check_product_class(
    spec: &str,
    h: &FiniteGroup,
    k: &FiniteGroup,
    product: &FiniteGroup,
) -> Result<TheoremReport> {
    let inst = Instance::new("H x K")
        .witness("|H|", h.order())
        .witness("|K|", k.order())
        .hypothesis("K is abelian", k.is_abelian())
        .conclude(|w| {
            let ch = group::nilpotency_class(h);
            let cg = group::nilpotency_class(product);
            put(w, "class(H)", ch.as_ref().ok());
            put(w, "class(H x K)", cg.as_ref().ok());
            Ok(ch == cg)
        })?;
    Ok(TheoremReport::single(TheoremId::L2_3, spec, inst))
}
