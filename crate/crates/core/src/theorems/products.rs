//! Automorphisms of direct products and their restrictions to one factor.

use std::collections::HashSet;

use serde::Serialize;
use serde_json::Map;

use super::report::{put, Hypothesis, Instance, TheoremId, TheoremReport};
use crate::aut::{self, AutSubgroupTag, Automorphism};
use crate::error::Result;
use crate::group::{self, FiniteGroup};
use crate::product::{direct_product, ProductStructure};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionCheck {
    pub product_box_order: usize,
    pub factor_box_order: usize,
    /// Every restriction lands in the factor's box subgroup.
    pub into: bool,
    pub bijective: bool,
    /// Lifting and restricting are mutually inverse.
    pub lift_inverse: bool,
    pub multiplicative: bool,
}

impl RestrictionCheck {
    pub fn holds(&self) -> bool {
        self.into && self.bijective && self.lift_inverse && self.multiplicative
    }
}

/// The box subgroup of the product, the box subgroup of factor `j`, and the
/// restriction of each member of the former.
pub struct Restriction {
    pub product_box: Vec<Automorphism>,
    pub factor_box: Vec<Automorphism>,
    pub images: Vec<Automorphism>,
    pub check: RestrictionCheck,
}

/// Verifies that `f ↦ π_j ∘ f ∘ ι_j` is an isomorphism
/// `Aut_N^M(G) → Aut_{N_j}^{M_j}(H_j)` by checking every element and pair.
pub fn verify_restriction(
    p: &ProductStructure,
    j: usize,
    m_j: &Subgroup,
    n_j: &Subgroup,
) -> Result<Restriction> {
    let (m, n) = aut::product_box(p, j, m_j, n_j)?;
    let big = aut::aut_box(&p.product, &m, &n)?;
    let small = aut::aut_box(&p.factors[j], m_j, n_j)?;
    let small_tag = AutSubgroupTag::Box {
        m: m_j.clone(),
        n: n_j.clone(),
    };
    let images = big
        .iter()
        .map(|f| aut::restrict_product_automorphism(p, f, j, m_j, n_j))
        .collect::<Result<Vec<_>>>()?;

    let mut into = true;
    for a in &images {
        into &= aut::is_member(a, &small_tag)?;
    }
    let mut sorted: Vec<&[usize]> = images.iter().map(Automorphism::image).collect();
    sorted.sort_unstable();
    let bijective =
        sorted.len() == small.len() && sorted.iter().zip(&small).all(|(a, b)| *a == b.image());

    let big_set: HashSet<&[usize]> = big.iter().map(Automorphism::image).collect();
    let mut lift_inverse = true;
    for psi in &small {
        let lifted = aut::lift_product_automorphism(p, psi, j)?;
        lift_inverse &= big_set.contains(lifted.image())
            && aut::restrict_product_automorphism(p, &lifted, j, m_j, n_j)? == *psi;
    }
    for (f, a) in big.iter().zip(&images) {
        lift_inverse &= aut::lift_product_automorphism(p, a, j)? == *f;
    }

    let (emb, proj) = (&p.embeddings[j], &p.projections[j]);
    let factor = &p.factors[j];
    let mut multiplicative = true;
    'pairs: for (f1, a1) in big.iter().zip(&images) {
        for (f2, a2) in big.iter().zip(&images) {
            let ok = factor
                .elements()
                .all(|h| proj.apply(f1.apply(f2.apply(emb.apply(h)))) == a1.apply(a2.apply(h)));
            if !ok {
                multiplicative = false;
                break 'pairs;
            }
        }
    }

    let check = RestrictionCheck {
        product_box_order: big.len(),
        factor_box_order: small.len(),
        into,
        bijective,
        lift_inverse,
        multiplicative,
    };
    Ok(Restriction {
        product_box: big,
        factor_box: small,
        images,
        check,
    })
}

/// `1`, `Z`, `γ_2` and the whole group, without repeats.
fn distinguished_subgroups(h: &FiniteGroup) -> Vec<(&'static str, Subgroup)> {
    let mut out: Vec<(&'static str, Subgroup)> = Vec::new();
    for (name, s) in [
        ("1", Subgroup::trivial(h)),
        ("Z", group::center(h)),
        ("gamma_2", group::gamma(h, 2)),
        ("H", Subgroup::whole(h)),
    ] {
        if !out.iter().any(|(_, t)| t.members() == s.members()) {
            out.push((name, s));
        }
    }
    out
}

/// For every factor `H_j` and `M_j, N_j ∈ {1, Z, γ_2, H_j}`, restriction to
/// `H_j` is an isomorphism `Aut_N^M(G) → Aut_{N_j}^{M_j}(H_j)`.
pub fn check_product_restriction(spec: &str, p: &ProductStructure) -> Result<TheoremReport> {
    let mut instances = Vec::new();
    for (j, h) in p.factors.iter().enumerate() {
        let subs = distinguished_subgroups(h);
        for (mn, m_j) in &subs {
            for (nn, n_j) in &subs {
                let inst = Instance::new(format!("j={}, M={mn}, N={nn}", j + 1))
                    .hypothesis(
                        "M_j and N_j are normal in H_j",
                        m_j.is_normal() && n_j.is_normal(),
                    )
                    .conclude(|w| {
                        let r = verify_restriction(p, j, m_j, n_j)?;
                        put(w, "check", &r.check);
                        Ok(r.check.holds())
                    })?;
                instances.push(inst);
            }
        }
    }
    let shared = vec![Hypothesis {
        name: "G is a direct product of at least two factors".into(),
        holds: p.factors.len() >= 2,
    }];
    Ok(TheoremReport::aggregate(
        TheoremId::T3_1,
        spec,
        shared,
        instances,
        Map::new(),
    ))
}

/// For `G = H × A` and `n ≥ 2`: `Z(G) = Z(H) × A`, `γ_n(G) = γ_n(H) × 1`,
/// restriction is an isomorphism `Aut_{Z(G)}^{γ_n(G)}(G) → Aut_{Z(H)}^{γ_n(H)}(H)`
/// and it carries `Aut_c^{n-1}(G)` onto `Aut_c^{n-1}(H)`.
pub fn correspondence_instance(p: &ProductStructure, n: usize) -> Result<Instance> {
    let (h, a, g) = (&p.factors[0], &p.factors[1], &p.product);
    Instance::new(format!("n={n}"))
        .hypothesis("n >= 2", n >= 2)
        .conclude(|w| {
            let (z_h, gn_h) = (group::center(h), group::gamma(h, n));
            let z_split = group::center(g).members()
                == p.product_subgroup(&[z_h.clone(), Subgroup::whole(a)])?
                    .members();
            let gamma_split = group::gamma(g, n).members()
                == p.product_subgroup(&[gn_h.clone(), Subgroup::trivial(a)])?
                    .members();
            put(w, "Z(G) = Z(H) x A", z_split);
            put(w, "gamma_n(G) = gamma_n(H) x 1", gamma_split);

            let r = verify_restriction(p, 0, &gn_h, &z_h)?;
            put(w, "restriction", &r.check);

            let cp_g = aut::aut_class_preserving(g, n - 1)?;
            let cp_h = aut::aut_class_preserving(h, n - 1)?;
            put(w, "|Aut_c^{n-1}(G)|", cp_g.len());
            put(w, "|Aut_c^{n-1}(H)|", cp_h.len());
            let box_set: HashSet<&[usize]> =
                r.product_box.iter().map(Automorphism::image).collect();
            let inside = cp_g.iter().all(|f| box_set.contains(f.image()));
            put(w, "Aut_c^{n-1}(G) inside the box", inside);
            let mut mapped = Vec::new();
            if inside {
                for f in &cp_g {
                    mapped.push(aut::restrict_product_automorphism(p, f, 0, &gn_h, &z_h)?);
                }
            }
            mapped.sort_by(|x, y| x.image().cmp(y.image()));
            mapped.dedup();
            let onto = inside && mapped == cp_h;
            put(w, "phi(Aut_c^{n-1}(G)) = Aut_c^{n-1}(H)", onto);
            Ok(z_split && gamma_split && r.check.holds() && inside && onto)
        })
}

/// Runs [`correspondence_instance`] for `n = 2, …, max(2, class(H)) + 1`,
/// or only for `n` when given.
pub fn check_abelian_factor_correspondence(
    spec: &str,
    h: &FiniteGroup,
    a: &FiniteGroup,
    n: Option<usize>,
) -> Result<TheoremReport> {
    let purely = aut::purely_nonabelian_test(h)?.purely;
    let shared = vec![
        Hypothesis {
            name: "H is purely non-abelian".into(),
            holds: purely,
        },
        Hypothesis {
            name: "A is abelian and nontrivial".into(),
            holds: a.is_abelian() && a.order() > 1,
        },
    ];
    let mut instances = Vec::new();
    if shared.iter().all(|s| s.holds) {
        let p = direct_product(&[h.clone(), a.clone()])?;
        let ns = match n {
            Some(n) => vec![n],
            None => {
                let top = group::nilpotency_class(h).unwrap_or(1).max(2) + 1;
                (2..=top).collect()
            }
        };
        for n in ns {
            instances.push(correspondence_instance(&p, n)?);
        }
    }
    Ok(TheoremReport::aggregate(
        TheoremId::T3_2,
        spec,
        shared,
        instances,
        Map::new(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct_product, construct_str, Limits};
    use crate::dsl::GroupSpec;
    use crate::theorems::report::Status;

    fn product(s: &str) -> ProductStructure {
        construct_product(&GroupSpec::parse(s).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn quaternion_times_c2() {
        let p = product("Q(8) x C(2)");
        let q8 = &p.factors[0];
        let r = verify_restriction(&p, 0, &group::gamma(q8, 2), &group::center(q8)).unwrap();
        assert!(r.check.holds());
        assert_eq!(r.check.product_box_order, 4);
        assert_eq!(r.check.factor_box_order, 4);
    }

    #[test]
    fn trivial_box() {
        let p = product("D(4) x C(3)");
        let d4 = &p.factors[0];
        let r = verify_restriction(&p, 0, &Subgroup::trivial(d4), &Subgroup::whole(d4)).unwrap();
        assert!(r.check.holds());
        assert_eq!(r.product_box.len(), 1);
        let r = verify_restriction(&p, 0, &group::center(d4), &group::gamma(d4, 2)).unwrap();
        assert!(r.check.holds());
        assert_eq!(r.factor_box.len(), 4);
    }

    #[test]
    fn restriction_report() {
        let p = product("D(4) x C(2)");
        let r = check_product_restriction("D(4) x C(2)", &p).unwrap();
        assert_eq!(r.status, Status::Passed);
    }

    #[test]
    fn correspondence_examples() {
        let c2 = construct_str("C(2)").unwrap();
        let r =
            check_abelian_factor_correspondence("x", &construct_str("Q(8)").unwrap(), &c2, Some(2))
                .unwrap();
        assert_eq!(r.status, Status::Passed);
        let inst = &r.witnesses["instances"][0]["witnesses"];
        assert_eq!(inst["|Aut_c^{n-1}(G)|"], 4);
        assert_eq!(inst["|Aut_c^{n-1}(H)|"], 4);

        let c4 = construct_str("C(4)").unwrap();
        let r =
            check_abelian_factor_correspondence("x", &construct_str("D(4)").unwrap(), &c4, Some(3))
                .unwrap();
        assert_eq!(r.status, Status::Passed);
        assert_eq!(
            r.witnesses["instances"][0]["witnesses"]["|Aut_c^{n-1}(G)|"],
            1
        );
    }

    #[test]
    fn correspondence_needs_abelian_factor() {
        let q8 = construct_str("Q(8)").unwrap();
        let r = check_abelian_factor_correspondence("x", &q8, &q8, None).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
        let one = construct_str("C(1)").unwrap();
        let r = check_abelian_factor_correspondence("x", &q8, &one, None).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
    }
}
