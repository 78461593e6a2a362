//! Homomorphisms into abelian groups, enumerated through the abelianization
//! of the domain.

use crate::abelian;
use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::morphism::Morphism;
use crate::quotient::{self, QuotientGroup};
use crate::subgroup::Subgroup;

/// `Hom(domain, codomain)` (or a subgroup of it) under the pointwise product.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub domain: FiniteGroup,
    pub codomain: FiniteGroup,
    pub members: Vec<Morphism>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, f: &Morphism) -> Option<usize> {
        self.members.iter().position(|m| m.image() == f.image())
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        self.position(f).is_some()
    }

    /// Checks that the members form a group under the pointwise product.
    pub fn verify_group_law(&self) -> Result<()> {
        if !self.codomain.is_abelian() {
            return Err(GroupError::NotAbelianCodomain);
        }
        let trivial = Morphism::trivial(&self.domain, &self.codomain);
        if !self.contains(&trivial) {
            return Err(GroupError::NotAGroup("trivial morphism missing".into()));
        }
        for f in &self.members {
            if !f.is_homomorphism() {
                return Err(GroupError::NotAGroup("member is not a homomorphism".into()));
            }
            if !self.contains(&f.pointwise_inverse()) {
                return Err(GroupError::NotAGroup("not closed under inverses".into()));
            }
            for g in &self.members {
                if !self.contains(&f.pointwise_mul(g)?) {
                    return Err(GroupError::NotAGroup("not closed under products".into()));
                }
            }
        }
        Ok(())
    }

    /// The members as an abstract group: element `i` is `members[i]`.
    pub fn as_group(&self) -> Result<FiniteGroup> {
        let n = self.members.len();
        let mut table = vec![vec![0; n]; n];
        for (i, f) in self.members.iter().enumerate() {
            for (j, g) in self.members.iter().enumerate() {
                table[i][j] = self
                    .position(&f.pointwise_mul(g)?)
                    .ok_or_else(|| GroupError::NotAGroup("not closed under products".into()))?;
            }
        }
        Ok(group::build_group_labeled(table, None)?.0)
    }
}

/// `G/γ_2(G)`.
pub fn abelianization(g: &FiniteGroup) -> QuotientGroup {
    quotient::quotient(g, &group::gamma(g, 2)).expect("γ_2 is normal")
}

/// Every homomorphism `g → a` for abelian `a`. Members are ordered by the
/// images of a basis of the abelianization, first basis element most
/// significant and images in increasing index order.
pub fn enumerate_homs(g: &FiniteGroup, a: &FiniteGroup) -> Result<HomSet> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelianCodomain);
    }
    let ab = abelianization(g);
    let basis = abelian::abelian_basis(&ab.group)?;
    let candidates: Vec<Vec<usize>> = basis
        .orders
        .iter()
        .map(|&o| {
            a.elements()
                .filter(|&y| o % a.element_order(y) == 0)
                .collect()
        })
        .collect();

    let mut members = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let images: Vec<usize> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, ys)| ys[c])
            .collect();
        let on_quotient: Vec<usize> = basis
            .coordinates
            .iter()
            .map(|coords| {
                coords
                    .iter()
                    .zip(&images)
                    .fold(0, |acc, (&c, &y)| a.mul(acc, a.pow(y, c)))
            })
            .collect();
        let image = g.elements().map(|x| on_quotient[ab.project(x)]).collect();
        members.push(Morphism::new_unchecked(g, a, image));

        // Odometer step, last position fastest.
        let mut i = choice.len();
        loop {
            if i == 0 {
                return Ok(HomSet {
                    domain: g.clone(),
                    codomain: a.clone(),
                    members,
                });
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// `Hom(q.group, M)` with `M` realized as `m.as_group()`.
pub fn homs_from_quotient(q: &QuotientGroup, m: &Subgroup) -> Result<HomSet> {
    if !m.parent().same_as(&q.base) {
        return Err(GroupError::MismatchedParent);
    }
    enumerate_homs(&q.group, m.as_group())
}

/// `Hom(G/N, M)`.
pub fn enumerate_homs_from_quotient(g: &FiniteGroup, n: &Subgroup, m: &Subgroup) -> Result<HomSet> {
    let q = quotient::quotient(g, n)?;
    homs_from_quotient(&q, m)
}

/// `Hom_c(G/H, γ_n(G))` together with the quotient and target it lives on.
#[derive(Clone, Debug)]
pub struct HomC {
    pub quotient: QuotientGroup,
    pub target: Subgroup,
    pub homs: HomSet,
}

/// The homomorphisms `f : G/H → γ_n(G)` with `f(gH) ∈ {[g, x] : x ∈ γ_{n-1}(G)}`
/// for every `g ∈ G`.
pub fn hom_c(g: &FiniteGroup, h: &Subgroup, n: usize) -> Result<HomC> {
    if n < 2 {
        return Err(GroupError::HypothesisViolated(format!("n = {n} < 2")));
    }
    if !h.parent().same_as(g) {
        return Err(GroupError::MismatchedParent);
    }
    match group::nilpotency_class(g) {
        Ok(c) if c <= n => {}
        _ => {
            return Err(GroupError::HypothesisViolated(format!(
                "G is not nilpotent of class at most {n}"
            )))
        }
    }
    let gamma_n = group::gamma(g, n);
    if !gamma_n.is_subset_of(h) || !h.is_subset_of(&group::center(g)) {
        return Err(GroupError::HypothesisViolated(format!(
            "H does not lie between γ_{n} and Z"
        )));
    }
    let q = quotient::quotient(g, h)?;
    let all = homs_from_quotient(&q, &gamma_n)?;

    let gamma_prev = group::gamma(g, n - 1);
    let commutators: Vec<Vec<bool>> = g
        .elements()
        .map(|x| {
            let mut set = vec![false; g.order()];
            for &y in gamma_prev.members() {
                set[g.commutator(x, y)] = true;
            }
            set
        })
        .collect();
    let members = all
        .members
        .into_iter()
        .filter(|f| {
            g.elements()
                .all(|x| commutators[x][gamma_n.to_parent(f.apply(q.project(x)))])
        })
        .collect();
    let homs = HomSet {
        domain: all.domain,
        codomain: all.codomain,
        members,
    };
    Ok(HomC {
        quotient: q,
        target: gamma_n,
        homs,
    })
}

pub fn hom_c_subset(g: &FiniteGroup, h: &Subgroup, n: usize) -> Result<HomSet> {
    Ok(hom_c(g, h, n)?.homs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, search};

    fn sorted_images(h: &HomSet) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = h.members.iter().map(|f| f.image().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn abelianization_examples() {
        let c4 = catalog::cyclic(4).unwrap();
        assert!(abelianization(&c4).kernel.is_trivial());
        let d4 = catalog::dihedral(4).unwrap();
        let q = abelianization(&d4);
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.exponent(), 2);
        let h = catalog::heisenberg(3).unwrap();
        let inv = abelian::abelian_invariants(&abelianization(&h).group).unwrap();
        assert_eq!(inv.exponents, vec![1, 1]);
    }

    #[test]
    fn hom_examples() {
        let q8 = catalog::quaternion(8).unwrap();
        let c2 = catalog::cyclic(2).unwrap();
        assert_eq!(enumerate_homs(&q8, &c2).unwrap().len(), 4);
        let one = catalog::cyclic(1).unwrap();
        assert_eq!(enumerate_homs(&q8, &one).unwrap().len(), 1);
        let d4 = catalog::dihedral(4).unwrap();
        let z = group::center(&d4);
        assert_eq!(enumerate_homs(&d4, z.as_group()).unwrap().len(), 4);
        assert_eq!(
            enumerate_homs(&c2, &d4).unwrap_err(),
            GroupError::NotAbelianCodomain
        );
    }

    #[test]
    fn matches_generic_search() {
        let groups = ["Q(8)", "D(4)", "C(8)", "Ab(2; 2, 1)", "D(3)", "Heis(3)"];
        let targets = ["C(1)", "C(2)", "C(4)", "Ab(2; 1, 1)", "C(3)", "C(6)"];
        for gs in groups {
            let g = catalog::construct_str(gs).unwrap();
            for ts in targets {
                let a = catalog::construct_str(ts).unwrap();
                let homs = enumerate_homs(&g, &a).unwrap();
                assert_eq!(
                    sorted_images(&homs),
                    search::all_homomorphisms(&g, &a),
                    "{gs} -> {ts}"
                );
                homs.verify_group_law().unwrap();
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let d4 = catalog::dihedral(4).unwrap();
        let z = group::center(&d4);
        let g2 = group::gamma(&d4, 2);
        assert_eq!(enumerate_homs_from_quotient(&d4, &z, &g2).unwrap().len(), 4);
        let whole = Subgroup::whole(&d4);
        assert_eq!(
            enumerate_homs_from_quotient(&d4, &whole, &g2)
                .unwrap()
                .len(),
            1
        );
        let s = Subgroup::new(&d4, &[0, 4]).unwrap();
        assert_eq!(
            enumerate_homs_from_quotient(&d4, &s, &z).unwrap_err(),
            GroupError::NotNormal
        );

        let g = catalog::construct_str("Q(8) x C(2)").unwrap();
        let z = group::center(&g);
        let g2 = group::gamma(&g, 2);
        assert_eq!(enumerate_homs_from_quotient(&g, &z, &g2).unwrap().len(), 4);
    }

    #[test]
    fn hom_c_examples() {
        let d4 = catalog::dihedral(4).unwrap();
        let homs = hom_c_subset(&d4, &group::center(&d4), 2).unwrap();
        assert_eq!(homs.len(), 4);
        assert!(homs.members.iter().any(Morphism::is_trivial));
        homs.verify_group_law().unwrap();

        let h = catalog::heisenberg(3).unwrap();
        let homs = hom_c_subset(&h, &group::center(&h), 2).unwrap();
        assert_eq!(homs.len(), 9);

        let q16 = catalog::quaternion(16).unwrap();
        assert!(matches!(
            hom_c_subset(&q16, &group::center(&q16), 2),
            Err(GroupError::HypothesisViolated(_))
        ));
    }
}
