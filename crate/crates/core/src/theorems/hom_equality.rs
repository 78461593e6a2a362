//! When does enlarging the target of homomorphisms between abelian p-groups
//! add nothing new: `Hom(G, H) = Hom(G, K)` for `H ⊆ K`.

use std::ops::ControlFlow;

use serde::Serialize;

use super::report::{put, Instance, TheoremId, TheoremReport};
use crate::abelian::{self, AbelianPInvariants};
use crate::catalog;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice;
use crate::search::MapSearch;
use crate::subgroup::Subgroup;

/// Exponent sum bound of the sweep: groups of order at most `p^4`.
pub const SWEEP_MAX_EXPONENT: u32 = 4;

/// `Hom(G, H) = Hom(G, K)` where `K` is the parent of `h`, decided by
/// searching `Hom(G, K)` for a map whose image leaves `H`.
pub fn hom_sets_equal(g: &FiniteGroup, h: &Subgroup) -> bool {
    if h.is_whole() {
        return true;
    }
    let any = |_: usize, _: usize| true;
    let mut escaped = false;
    MapSearch::new(g, h.parent(), false, &any).run(&mut |image| {
        if image.iter().any(|&y| !h.contains(y)) {
            escaped = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    !escaped
}

/// `H = K`, or `d(H) = d(K)` and `exp(G) ≤ var(H, K)`.
pub fn structural_criterion(
    g: &AbelianPInvariants,
    h: &AbelianPInvariants,
    k: &AbelianPInvariants,
    h_is_k: bool,
) -> Result<bool> {
    if h_is_k {
        return Ok(true);
    }
    if h.rank() != k.rank() {
        return Ok(false);
    }
    Ok(g.exponent() <= abelian::var(h, k)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomEqualityCase {
    pub p: u64,
    pub g: Vec<u32>,
    pub h: Vec<u32>,
    pub k: Vec<u32>,
    pub hom_equal: bool,
    pub criterion: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HomEqualitySweep {
    pub triples: usize,
    pub hom_equal: usize,
    pub failures: Vec<HomEqualityCase>,
}

impl HomEqualitySweep {
    fn merge(&mut self, other: HomEqualitySweep) {
        self.triples += other.triples;
        self.hom_equal += other.hom_equal;
        self.failures.extend(other.failures);
    }
}

/// Every abelian p-group `K` with `|K| ≤ p^max_exponent`, with all of its
/// subgroups.
pub fn targets(p: u64, max_exponent: u32) -> Result<Vec<(FiniteGroup, Vec<Subgroup>)>> {
    let mut out = Vec::new();
    for total in 0..=max_exponent {
        for exps in abelian::partitions(total) {
            let k = catalog::abelian_p_group(p, &exps)?;
            let subs = lattice::subgroups_between(&Subgroup::trivial(&k), &Subgroup::whole(&k))?;
            out.push((k, subs));
        }
    }
    Ok(out)
}

/// Compares brute-force `Hom` equality with the structural criterion for a
/// fixed `G` against every `H ⊆ K` in `targets`.
pub fn sweep_for(
    g: &FiniteGroup,
    targets: &[(FiniteGroup, Vec<Subgroup>)],
) -> Result<HomEqualitySweep> {
    let g_inv = abelian::abelian_invariants(g)?;
    let mut out = HomEqualitySweep::default();
    for (k, subs) in targets {
        let k_inv = abelian::abelian_invariants(k)?;
        for h in subs {
            let h_inv = abelian::subgroup_invariants(h)?;
            let hom_equal = hom_sets_equal(g, h);
            let criterion = structural_criterion(&g_inv, &h_inv, &k_inv, h.is_whole())?;
            out.triples += 1;
            out.hom_equal += usize::from(hom_equal);
            if hom_equal != criterion {
                out.failures.push(HomEqualityCase {
                    p: g_inv.prime.or(k_inv.prime).unwrap_or(0),
                    g: g_inv.exponents.clone(),
                    h: h_inv.exponents.clone(),
                    k: k_inv.exponents.clone(),
                    hom_equal,
                    criterion,
                });
            }
        }
    }
    Ok(out)
}

/// The exhaustive sweep over all `G` and `H ⊆ K` with
/// `|G|, |K| ≤ p^max_exponent`.
pub fn hom_equality_sweep(p: u64, max_exponent: u32) -> Result<HomEqualitySweep> {
    let ks = targets(p, max_exponent)?;
    let gs: Vec<Vec<u32>> = (0..=max_exponent).flat_map(abelian::partitions).collect();
    let parts = super::par_map(&gs, |exps| {
        let g = catalog::abelian_p_group(p, exps)?;
        sweep_for(&g, &ks)
    });
    let mut total = HomEqualitySweep::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// The equivalence for one abelian p-group `G`, against every `H ⊆ K` with
/// `|K| ≤ p^4`. The trivial group is run against both `p = 2` and `p = 3`.
pub fn check_hom_equality_criterion(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let pp = g.prime_power();
    let primes: Vec<u64> = match pp {
        _ if g.order() == 1 => vec![2, 3],
        Some((p, e)) if e <= SWEEP_MAX_EXPONENT => vec![p],
        _ => Vec::new(),
    };
    let inst = Instance::new("sweep")
        .hypothesis("G is abelian", g.is_abelian())
        .hypothesis("G is a p-group", g.order() == 1 || pp.is_some())
        .hypothesis("|G| <= p^4", !primes.is_empty())
        .conclude(|w| {
            let mut sweep = HomEqualitySweep::default();
            for &p in &primes {
                sweep.merge(sweep_for(g, &targets(p, SWEEP_MAX_EXPONENT)?)?);
            }
            put(w, "primes", &primes);
            put(w, "triples", sweep.triples);
            put(w, "hom_equal_triples", sweep.hom_equal);
            put(w, "failures", &sweep.failures);
            Ok(sweep.failures.is_empty())
        })?;
    Ok(TheoremReport::single(TheoremId::L2_6, spec, inst))
}
