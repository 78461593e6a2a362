//! Automorphisms moving elements inside a central subgroup, compared with
//! homomorphisms into it.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use serde_json::Map;

use super::report::{put, Hypothesis, Instance, TheoremId, TheoremReport};
use crate::aut::{self, Automorphism};
use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::hom;
use crate::iso;
use crate::lattice;
use crate::quotient::quotient;
use crate::subgroup::Subgroup;

/// `1`, `Z`, `γ_2, …, γ_c` and `G` (or as much of the lower central series
/// as is distinct), with display names.
pub fn canonical_subgroups(g: &FiniteGroup) -> Vec<(String, Subgroup)> {
    let mut candidates = vec![
        ("1".to_string(), Subgroup::trivial(g)),
        ("Z".into(), group::center(g)),
    ];
    let whole = Subgroup::whole(g);
    let mut term = group::gamma(g, 2);
    for i in 2.. {
        let next = group::commutator_subgroup(&term, &whole).expect("same parent");
        let done = next == term || term.is_trivial();
        candidates.push((format!("gamma_{i}"), term));
        if done {
            break;
        }
        term = next;
    }
    candidates.push(("G".into(), Subgroup::whole(g)));
    let mut out: Vec<(String, Subgroup)> = Vec::new();
    for (name, s) in candidates {
        if !out.iter().any(|(_, t)| t.members() == s.members()) {
            out.push((name, s));
        }
    }
    out
}

fn commute(m: &Subgroup, n: &Subgroup) -> bool {
    let g = m.parent();
    m.members()
        .iter()
        .all(|&x| n.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// For `M` abelian, `[N, M] = 1` and `f ∈ Aut_N^M(G)`, `gN ↦ g⁻¹f(g)` is well
/// defined, and distinct `f` give distinct maps.
pub fn alpha_injective_instance(
    g: &FiniteGroup,
    (mn, m): (&str, &Subgroup),
    (nn, n): (&str, &Subgroup),
) -> Result<Instance> {
    Instance::new(format!("M={mn}, N={nn}"))
        .hypothesis("M and N are normal", m.is_normal() && n.is_normal())
        .hypothesis("M is abelian", m.is_abelian())
        .hypothesis("[N, M] = 1", commute(m, n))
        .conclude(|w| {
            let list = aut::aut_box(g, m, n)?;
            let q = quotient(g, n)?;
            let mut well_defined = true;
            let mut seen = HashSet::new();
            for f in &list {
                let mut alpha = vec![usize::MAX; q.group.order()];
                for x in g.elements() {
                    let v = g.mul(g.inv(x), f.apply(x));
                    let slot = &mut alpha[q.project(x)];
                    if *slot == usize::MAX {
                        *slot = v;
                    } else if *slot != v {
                        well_defined = false;
                    }
                }
                seen.insert(alpha);
            }
            put(w, "|Aut_N^M(G)|", list.len());
            put(w, "distinct alpha_f", seen.len());
            put(w, "well_defined", well_defined);
            Ok(well_defined && seen.len() == list.len())
        })
}

/// Runs [`alpha_injective_instance`] over pairs of canonical subgroups.
pub fn check_alpha_injective(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let subs = canonical_subgroups(g);
    let mut instances = Vec::new();
    for (mn, m) in &subs {
        for (nn, n) in &subs {
            instances.push(alpha_injective_instance(g, (mn, m), (nn, n))?);
        }
    }
    Ok(TheoremReport::aggregate(
        TheoremId::L3_3,
        spec,
        Vec::new(),
        instances,
        Map::new(),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionCheck {
    pub aut_order: usize,
    pub hom_order: usize,
    /// `α_f` is a homomorphism in the hom set for every `f`.
    pub into: bool,
    pub bijective: bool,
    /// `f ↦ α_f` and `ψ ↦ f_ψ` are mutually inverse.
    pub round_trip: bool,
    /// `α_{f∘g} = α_f · α_g` on all pairs.
    pub multiplicative: bool,
}

impl BijectionCheck {
    pub fn holds(&self) -> bool {
        self.aut_order == self.hom_order
            && self.into
            && self.bijective
            && self.round_trip
            && self.multiplicative
    }
}

/// Checks `f ↦ α_f` as a map from `auts` to `homs` (morphisms `G/N → M`)
/// elementwise and pairwise.
fn verify_alpha_map(
    auts: &[Automorphism],
    homs: &hom::HomSet,
    q: &crate::quotient::QuotientGroup,
    m: &Subgroup,
) -> Result<BijectionCheck> {
    let g = &q.base;
    let mut alphas = Vec::with_capacity(auts.len());
    let mut into = true;
    for f in auts {
        let a = aut::alpha_of(f, q, m)?;
        into &= homs.contains(&a);
        alphas.push(a);
    }
    let distinct: HashSet<&[usize]> = alphas.iter().map(|a| a.image()).collect();
    let bijective = into && distinct.len() == auts.len() && auts.len() == homs.len();

    let mut round_trip = true;
    let by_image: HashMap<&[usize], usize> = auts
        .iter()
        .enumerate()
        .map(|(i, f)| (f.image(), i))
        .collect();
    for psi in &homs.members {
        let f = aut::automorphism_from_hom(psi, q, m)?;
        round_trip &= match by_image.get(f.image()) {
            Some(&i) => alphas[i] == *psi,
            None => false,
        };
    }
    for (f, a) in auts.iter().zip(&alphas) {
        round_trip &= aut::automorphism_from_hom(a, q, m)? == *f;
    }

    // α values in G, indexed by coset, for the pairwise check.
    let values: Vec<Vec<usize>> = alphas
        .iter()
        .map(|a| a.image().iter().map(|&y| m.to_parent(y)).collect())
        .collect();
    let mut multiplicative = true;
    'pairs: for f1 in 0..auts.len() {
        for f2 in 0..auts.len() {
            let ok = q.representatives.iter().enumerate().all(|(c, &r)| {
                let composite = auts[f1].apply(auts[f2].apply(r));
                g.mul(g.inv(r), composite) == g.mul(values[f1][c], values[f2][c])
            });
            if !ok {
                multiplicative = false;
                break 'pairs;
            }
        }
    }
    Ok(BijectionCheck {
        aut_order: auts.len(),
        hom_order: homs.len(),
        into,
        bijective,
        round_trip,
        multiplicative,
    })
}

/// `φ : Aut_N^M(G) → Hom(G/N, M)`, `f ↦ α_f`, is an isomorphism for central
/// `M ⊆ N`.
pub fn central_hom_bijection(
    g: &FiniteGroup,
    m: &Subgroup,
    n: &Subgroup,
) -> Result<BijectionCheck> {
    if !m.is_central() || !m.is_subset_of(n) || !n.is_normal() {
        return Err(GroupError::HypothesisViolated(
            "need M central, M ⊆ N and N normal".into(),
        ));
    }
    let auts = aut::aut_box(g, m, n)?;
    let q = quotient(g, n)?;
    let homs = hom::homs_from_quotient(&q, m)?;
    verify_alpha_map(&auts, &homs, &q, m)
}

fn subgroup_name(g: &FiniteGroup, s: &Subgroup) -> String {
    let named = canonical_subgroups(g);
    named
        .iter()
        .find(|(_, t)| t.members() == s.members())
        .map(|(n, _)| n.clone())
        .unwrap_or_else(|| {
            let labels: Vec<String> = s.members().iter().map(|&x| g.label(x)).collect();
            format!("<{}>", labels.join(","))
        })
}

/// Runs [`central_hom_bijection`] over every pair of normal subgroups
/// `M ⊆ N` with `M` central.
pub fn check_central_hom_bijection(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let normals = lattice::normal_subgroups(g);
    let mut instances = Vec::new();
    for m in normals.iter().filter(|m| m.is_central()) {
        for n in normals.iter().filter(|n| m.is_subset_of(n)) {
            let inst = Instance::new(format!(
                "M={}, N={}",
                subgroup_name(g, m),
                subgroup_name(g, n)
            ))
            .hypothesis("M is central", true)
            .hypothesis("M ⊆ N", true)
            .conclude(|w| {
                let c = central_hom_bijection(g, m, n)?;
                put(w, "check", &c);
                Ok(c.holds())
            })?;
            instances.push(inst);
        }
    }
    let mut witnesses = Map::new();
    put(&mut witnesses, "normal_subgroups", normals.len());
    Ok(TheoremReport::aggregate(
        TheoremId::T3_4,
        spec,
        Vec::new(),
        instances,
        witnesses,
    ))
}

/// `Aut_c^{n-1}(G) ≅ Hom_c(G/H, γ_n(G))` through `f ↦ α_f`, for `G` of class
/// at most `n` and `γ_n(G) ⊆ H ⊆ Z(G)`.
pub fn class_preserving_instance(
    g: &FiniteGroup,
    h: &Subgroup,
    n: usize,
    label: String,
) -> Result<Instance> {
    let class = group::nilpotency_class(g);
    let gamma_n = group::gamma(g, n);
    Instance::new(label)
        .hypothesis("n >= 2", n >= 2)
        .hypothesis(
            "G is nilpotent of class at most n",
            class.is_ok_and(|c| c <= n),
        )
        .hypothesis("gamma_n(G) ⊆ H", gamma_n.is_subset_of(h))
        .hypothesis("H ⊆ Z(G)", h.is_central())
        .conclude(|w| {
            let auts = aut::aut_class_preserving(g, n - 1)?;
            let hc = hom::hom_c(g, h, n)?;
            let c = verify_alpha_map(&auts, &hc.homs, &hc.quotient, &hc.target)?;
            put(w, "|Aut_c^{n-1}(G)|", auts.len());
            put(w, "|Hom_c(G/H, gamma_n)|", hc.homs.len());
            put(w, "check", &c);
            let (a, _) = aut::group_from_automorphisms(&auts)?;
            let isomorphic = iso::iso_test(&a, &hc.homs.as_group()?)?;
            put(w, "isomorphic", isomorphic);
            Ok(c.holds() && isomorphic)
        })
}

/// The default `n`: the nilpotency class, at least 2.
pub fn default_n(g: &FiniteGroup) -> usize {
    group::nilpotency_class(g).unwrap_or(2).max(2)
}

/// Runs [`class_preserving_instance`] for every `H` with `γ_n ⊆ H ⊆ Z`.
pub fn check_class_preserving_hom(
    spec: &str,
    g: &FiniteGroup,
    n: Option<usize>,
) -> Result<TheoremReport> {
    let n = n.unwrap_or_else(|| default_n(g));
    let nilpotent = group::nilpotency_class(g).is_ok();
    let shared = vec![Hypothesis {
        name: "G is nilpotent".into(),
        holds: nilpotent,
    }];
    let mut instances = Vec::new();
    let (gamma_n, z) = (group::gamma(g, n), group::center(g));
    if nilpotent && n >= 2 && gamma_n.is_subset_of(&z) {
        for h in lattice::subgroups_between(&gamma_n, &z)? {
            let label = format!("n={n}, H={}", subgroup_name(g, &h));
            instances.push(class_preserving_instance(g, &h, n, label)?);
        }
    }
    let mut witnesses = Map::new();
    put(&mut witnesses, "n", n);
    Ok(TheoremReport::aggregate(
        TheoremId::T3_5,
        spec,
        shared,
        instances,
        witnesses,
    ))
}

/// The `H = Z(G)` case, with `n` the nilpotency class.
pub fn check_class_preserving_center(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    let class = group::nilpotency_class(g);
    let n = *class.as_ref().unwrap_or(&0);
    let inst = if n >= 2 {
        class_preserving_instance(g, &group::center(g), n, format!("n={n}, H=Z"))?
    } else {
        Instance::new("H=Z").hypothesis("G is nilpotent of class n >= 2", false)
    };
    Ok(TheoremReport::single(
        TheoremId::C3_6,
        spec,
        inst.witness("class", class.ok()),
    ))
}
