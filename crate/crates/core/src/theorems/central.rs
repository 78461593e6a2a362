//! Counting central automorphisms.

use super::report::{put, Instance, TheoremId, TheoremReport};
use crate::aut;
use crate::error::Result;
use crate::group::{self, FiniteGroup};
use crate::hom;
use crate::iso;
use crate::lattice;

/// For purely non-abelian `G`: `|Autcent(G)| = |Hom(G, Z(G))|`.
pub fn check_adney_yen(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let purely = aut::purely_nonabelian_test(g)?;
    let inst = Instance::new("G")
        .witness(
            "abelian_direct_factor_order",
            purely.witness.as_ref().map(|(_, a)| a.order()),
        )
        .hypothesis("G is purely non-abelian", purely.purely)
        .conclude(|w| {
            let z = group::center(g);
            let cent = aut::autcent(g)?.len();
            let homs = hom::enumerate_homs(g, z.as_group())?.len();
            let via_quotient = hom::enumerate_homs_from_quotient(g, &group::gamma(g, 2), &z)?.len();
            put(w, "|Autcent(G)|", cent);
            put(w, "|Hom(G,Z)|", homs);
            put(w, "|Hom(G/gamma_2,Z)|", via_quotient);
            Ok(cent == homs && homs == via_quotient)
        })?;
    Ok(TheoremReport::single(TheoremId::T2_4, spec, inst))
}

/// Nontrivial direct factors of `G` up to isomorphism, as abstract groups.
fn direct_factors(g: &FiniteGroup) -> Vec<FiniteGroup> {
    lattice::direct_decompositions(g)
        .into_iter()
        .map(|(d, _)| d.as_group().clone())
        .collect()
}

/// Whether `H` and `K` have a nontrivial direct factor in common.
pub fn common_direct_factor(h: &FiniteGroup, k: &FiniteGroup) -> Result<Option<usize>> {
    let fk = direct_factors(k);
    for a in direct_factors(h) {
        for b in fk.iter().filter(|b| b.order() == a.order()) {
            if iso::iso_test(&a, b)? {
                return Ok(Some(a.order()));
            }
        }
    }
    Ok(None)
}

/// For `G = H × K` with no common direct factor:
/// `|Autcent(G)| = |Autcent(H)|·|Autcent(K)|·|Hom(H, Z(K))|·|Hom(K, Z(H))|`.
pub fn check_bidwell(
    spec: &str,
    h: &FiniteGroup,
    k: &FiniteGroup,
    product: &FiniteGroup,
) -> Result<TheoremReport> {
    let common = common_direct_factor(h, k)?;
    let inst = Instance::new("H x K")
        .witness("|H|", h.order())
        .witness("|K|", k.order())
        .witness("common_factor_order", common)
        .hypothesis("H and K have no common direct factor", common.is_none())
        .conclude(|w| {
            let g = aut::autcent(product)?.len() as u128;
            let ch = aut::autcent(h)?.len() as u128;
            let ck = aut::autcent(k)?.len() as u128;
            let hk = hom::enumerate_homs(h, group::center(k).as_group())?.len() as u128;
            let kh = hom::enumerate_homs(k, group::center(h).as_group())?.len() as u128;
            put(w, "|Autcent(G)|", g);
            put(w, "|Autcent(H)|", ch);
            put(w, "|Autcent(K)|", ck);
            put(w, "|Hom(H,Z(K))|", hk);
            put(w, "|Hom(K,Z(H))|", kh);
            Ok(g == ch * ck * hk * kh)
        })?;
    Ok(TheoremReport::single(TheoremId::L2_5, spec, inst))
}
