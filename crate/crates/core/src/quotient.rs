use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::morphism::Morphism;
use crate::subgroup::Subgroup;

/// `G/N` on canonical coset representatives (the least member index of each
/// coset). Coset `i` of `group` is the one whose representative is
/// `representatives[i]`; the identity coset is index 0.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub base: FiniteGroup,
    pub kernel: Subgroup,
    pub representatives: Vec<usize>,
    pub group: FiniteGroup,
    pub projection: Morphism,
}

impl QuotientGroup {
    /// Members of coset `i`.
    pub fn coset(&self, i: usize) -> Vec<usize> {
        self.base
            .elements()
            .filter(|&g| self.projection.apply(g) == i)
            .collect()
    }

    pub fn project(&self, g: usize) -> usize {
        self.projection.apply(g)
    }
}

pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup> {
    if !n.parent().same_as(g) {
        return Err(GroupError::MismatchedParent);
    }
    if !group::is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = representatives.len();
        representatives.push(x);
        for &k in n.members() {
            coset_of[g.mul(x, k)] = idx;
        }
    }
    let labels = g.labels().map(|_| {
        representatives
            .iter()
            .map(|&r| format!("{}N", g.label(r)))
            .collect()
    });
    let quotient_group = FiniteGroup::from_fn(representatives.len(), labels, |a, b| {
        coset_of[g.mul(representatives[a], representatives[b])]
    })?;
    let projection = Morphism::new_unchecked(g, &quotient_group, coset_of);
    Ok(QuotientGroup {
        base: g.clone(),
        kernel: n.clone(),
        representatives,
        group: quotient_group,
        projection,
    })
}
