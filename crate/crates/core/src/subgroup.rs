use std::fmt;
use std::sync::OnceLock;

use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};

/// A subgroup of a parent [`FiniteGroup`], stored as a sorted member list
/// plus a membership mask over the parent's elements.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
    as_group: OnceLock<FiniteGroup>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent_order", &self.parent.order())
            .field("members", &self.members)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Validates closure under product and inverse.
    pub fn new(parent: &FiniteGroup, members: &[usize]) -> Result<Subgroup> {
        let mut mask = vec![false; parent.order()];
        for &m in members {
            if m >= parent.order() {
                return Err(GroupError::BadParameter(format!(
                    "element {m} out of range"
                )));
            }
            mask[m] = true;
        }
        let sub = Subgroup::from_mask(parent.clone(), mask);
        if !sub.contains(0) {
            return Err(GroupError::HypothesisViolated(
                "subset misses the identity".into(),
            ));
        }
        for &a in &sub.members {
            if !sub.contains(parent.inv(a)) {
                return Err(GroupError::HypothesisViolated(format!(
                    "subset is not closed under inverse at {a}"
                )));
            }
            for &b in &sub.members {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(GroupError::HypothesisViolated(format!(
                        "subset is not closed under product at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn from_mask(parent: FiniteGroup, mask: Vec<bool>) -> Subgroup {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup {
            parent,
            members,
            mask,
            as_group: OnceLock::new(),
        }
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Subgroup::from_mask(parent.clone(), mask)
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_mask(parent.clone(), vec![true; parent.order()])
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&other.parent) {
            return Err(GroupError::MismatchedParent);
        }
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Ok(Subgroup::from_mask(self.parent.clone(), mask))
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&other.parent) {
            return Err(GroupError::MismatchedParent);
        }
        let gens: Vec<usize> = self.members.iter().chain(&other.members).copied().collect();
        Ok(group::subgroup_generate(&self.parent, &gens))
    }

    pub fn is_normal(&self) -> bool {
        group::is_normal(&self.parent, self)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Contained in the center of the parent.
    pub fn is_central(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
    }

    pub fn exponent(&self) -> usize {
        self.members
            .iter()
            .fold(1, |acc, &g| group::lcm(acc, self.parent.element_order(g)))
    }

    /// The subgroup as a standalone group; element `i` corresponds to
    /// `members()[i]` in the parent.
    pub fn as_group(&self) -> &FiniteGroup {
        self.as_group.get_or_init(|| {
            let g = &self.parent;
            let labels = g
                .labels()
                .map(|_| self.members.iter().map(|&m| g.label(m)).collect());
            FiniteGroup::from_fn(self.order(), labels, |a, b| {
                let prod = g.mul(self.members[a], self.members[b]);
                self.local_index(prod).expect("subgroup is closed")
            })
            .expect("a subgroup is a group")
        })
    }

    /// Position of a parent element in `members()`.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.members[local]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn validated_construction() {
        let c4 = catalog::cyclic(4).unwrap();
        assert_eq!(Subgroup::new(&c4, &[0, 2]).unwrap().order(), 2);
        assert!(Subgroup::new(&c4, &[0, 1]).is_err());
        assert!(Subgroup::new(&c4, &[2]).is_err());
    }

    #[test]
    fn subgroup_as_group_round_trip() {
        let d4 = catalog::dihedral(4).unwrap();
        let z = group::center(&d4);
        let zg = z.as_group();
        assert_eq!(zg.order(), 2);
        for a in zg.elements() {
            for b in zg.elements() {
                assert_eq!(
                    z.to_parent(zg.mul(a, b)),
                    d4.mul(z.to_parent(a), z.to_parent(b))
                );
            }
        }
    }

    #[test]
    fn lattice_ops() {
        let g = catalog::abelian_p_group(2, &[1, 1]).unwrap();
        let a = group::subgroup_generate(&g, &[1]);
        let b = group::subgroup_generate(&g, &[2]);
        assert!(a.intersection(&b).unwrap().is_trivial());
        assert!(a.join(&b).unwrap().is_whole());
        assert!(a.is_central() && a.is_normal() && a.is_abelian());
    }
}
