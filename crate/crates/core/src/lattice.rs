//! Subgroup enumeration: normal subgroups, intervals of the subgroup lattice
//! and internal direct decompositions.

use std::collections::HashSet;

use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::subgroup::Subgroup;

/// Closes `start` under joins with the subgroups generated by each atom.
fn close_joins(g: &FiniteGroup, start: Subgroup, atoms: &[Vec<usize>]) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(start.members().to_vec());
    let mut found = vec![start];
    let mut next = 0;
    while next < found.len() {
        let current = found[next].clone();
        next += 1;
        for atom in atoms {
            if atom.iter().all(|&x| current.contains(x)) {
                continue;
            }
            let mut gens = current.members().to_vec();
            gens.extend_from_slice(atom);
            let joined = group::subgroup_generate(g, &gens);
            if seen.insert(joined.members().to_vec()) {
                found.push(joined);
            }
        }
    }
    found.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    found
}

/// All normal subgroups, ordered by (order, members).
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut covered = vec![false; g.order()];
    for x in g.elements().skip(1) {
        if covered[x] {
            continue;
        }
        let class = group::conjugacy_class(g, x);
        for &y in &class {
            covered[y] = true;
        }
        classes.push(class);
    }
    close_joins(g, Subgroup::trivial(g), &classes)
}

/// All subgroups `H` with `lower ⊆ H ⊆ upper`.
pub fn subgroups_between(lower: &Subgroup, upper: &Subgroup) -> Result<Vec<Subgroup>> {
    if !lower.parent().same_as(upper.parent()) {
        return Err(GroupError::MismatchedParent);
    }
    if !lower.is_subset_of(upper) {
        return Ok(Vec::new());
    }
    let atoms: Vec<Vec<usize>> = upper
        .members()
        .iter()
        .filter(|&&x| !lower.contains(x))
        .map(|&x| vec![x])
        .collect();
    Ok(close_joins(lower.parent(), lower.clone(), &atoms))
}

/// Internal direct decompositions `G = D × C` with `D` nontrivial and both
/// factors normal. Each unordered pair appears once per choice of `D`.
pub fn direct_decompositions(g: &FiniteGroup) -> Vec<(Subgroup, Subgroup)> {
    let normals = normal_subgroups(g);
    let mut out = Vec::new();
    for d in normals.iter().filter(|d| !d.is_trivial()) {
        if !g.order().is_multiple_of(d.order()) {
            continue;
        }
        let target = g.order() / d.order();
        for c in normals.iter().filter(|c| c.order() == target) {
            if d.intersection(c).expect("same parent").is_trivial() {
                out.push((d.clone(), c.clone()));
            }
        }
    }
    out
}
