use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::search::MapSearch;

pub const ISO_ORDER_CAP: usize = 256;

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort_unstable();
    v
}

/// An isomorphism `a → b` as an image array, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    for g in [a, b] {
        if g.order() > ISO_ORDER_CAP {
            return Err(GroupError::OrderCapExceeded {
                order: g.order(),
                cap: ISO_ORDER_CAP,
            });
        }
    }
    if a.is_abelian() != b.is_abelian() || order_profile(a) != order_profile(b) {
        return Ok(None);
    }
    let same_order = |x: usize, y: usize| a.element_order(x) == b.element_order(y);
    Ok(MapSearch::new(a, b, true, &same_order).first())
}

pub fn iso_test(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct_str;
    use crate::group;

    #[test]
    fn examples() {
        let d4 = construct_str("D(4)").unwrap();
        assert!(iso_test(&d4, &d4).unwrap());
        let c4 = construct_str("C(4)").unwrap();
        let v4 = construct_str("Ab(2; 1, 1)").unwrap();
        assert!(!iso_test(&c4, &v4).unwrap());
        let q8 = construct_str("Q(8)").unwrap();
        assert!(!iso_test(&d4, &q8).unwrap());
    }

    #[test]
    fn same_profile_not_isomorphic() {
        // Every nonidentity element has order 3 in both.
        let a = construct_str("Ab(3; 1, 1, 1)").unwrap();
        let h = construct_str("Heis(3)").unwrap();
        assert!(!iso_test(&a, &h).unwrap());
        let g = construct_str("D(4) x C(2)").unwrap();
        let k = construct_str("Q(8) x C(2)").unwrap();
        assert!(!iso_test(&g, &k).unwrap());
    }

    #[test]
    fn relabeled_copy() {
        let g = construct_str("SD(16)").unwrap();
        let n = g.order();
        // Reverse all non-identity indices.
        let perm: Vec<usize> = (0..n).map(|i| if i == 0 { 0 } else { n - i }).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| perm[g.mul(perm[a], perm[b])]).collect())
            .collect();
        let h = group::build_group(table).unwrap();
        let iso = find_isomorphism(&g, &h).unwrap().unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(iso[g.mul(x, y)], h.mul(iso[x], iso[y]));
            }
        }
    }
}
