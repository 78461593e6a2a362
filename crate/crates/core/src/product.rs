use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::morphism::Morphism;
use crate::subgroup::Subgroup;

/// Products above this order are refused.
pub const DEFAULT_ORDER_CAP: usize = 256;

/// `H_1 × ⋯ × H_k` with lexicographic tuple indexing: the first factor is
/// the most significant digit.
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub factors: Vec<FiniteGroup>,
    pub product: FiniteGroup,
    pub projections: Vec<Morphism>,
    pub embeddings: Vec<Morphism>,
}

impl ProductStructure {
    pub fn tuple(&self, mut x: usize) -> Vec<usize> {
        let mut t = vec![0; self.factors.len()];
        for (slot, f) in t.iter_mut().zip(&self.factors).rev() {
            *slot = x % f.order();
            x /= f.order();
        }
        t
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    /// `S_1 × ⋯ × S_k` as a subgroup of the product.
    pub fn product_subgroup(&self, parts: &[Subgroup]) -> Result<Subgroup> {
        if parts.len() != self.factors.len() {
            return Err(GroupError::ShapeMismatch(format!(
                "{} parts for {} factors",
                parts.len(),
                self.factors.len()
            )));
        }
        for (p, f) in parts.iter().zip(&self.factors) {
            if !p.parent().same_as(f) {
                return Err(GroupError::MismatchedParent);
            }
        }
        let mask = self
            .product
            .elements()
            .map(|x| self.tuple(x).iter().zip(parts).all(|(&c, p)| p.contains(c)))
            .collect();
        Ok(Subgroup::from_mask(self.product.clone(), mask))
    }

    /// Checks `Z(G) = ∏ Z(H_i)` and `γ_n(G) = ∏ γ_n(H_i)` for `n ≤ depth`.
    pub fn verify_factorization(&self, depth: usize) -> Result<()> {
        let centers: Vec<Subgroup> = self.factors.iter().map(group::center).collect();
        if group::center(&self.product) != self.product_subgroup(&centers)? {
            return Err(GroupError::HypothesisViolated(
                "center of the product does not factorize".into(),
            ));
        }
        let series = group::lower_central_series(&self.product, depth);
        let factor_series: Vec<Vec<Subgroup>> = self
            .factors
            .iter()
            .map(|f| group::lower_central_series(f, depth))
            .collect();
        for (n, term) in series.iter().enumerate() {
            let parts: Vec<Subgroup> = factor_series.iter().map(|s| s[n].clone()).collect();
            if *term != self.product_subgroup(&parts)? {
                return Err(GroupError::HypothesisViolated(format!(
                    "γ_{} of the product does not factorize",
                    n + 1
                )));
            }
        }
        Ok(())
    }
}

pub fn direct_product(factors: &[FiniteGroup]) -> Result<ProductStructure> {
    direct_product_with_cap(factors, DEFAULT_ORDER_CAP)
}

pub fn direct_product_with_cap(factors: &[FiniteGroup], cap: usize) -> Result<ProductStructure> {
    if factors.is_empty() {
        return Err(GroupError::BadParameter("empty product".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .filter(|&o| o <= cap)
        .ok_or(GroupError::OrderCapExceeded {
            order: factors.iter().map(FiniteGroup::order).product(),
            cap,
        })?;

    let radix: Vec<usize> = factors.iter().map(FiniteGroup::order).collect();
    let split = |mut x: usize| -> Vec<usize> {
        let mut t = vec![0; radix.len()];
        for (slot, &r) in t.iter_mut().zip(&radix).rev() {
            *slot = x % r;
            x /= r;
        }
        t
    };
    let join = |t: &[usize]| t.iter().zip(&radix).fold(0, |acc, (&c, &r)| acc * r + c);
    let tuples: Vec<Vec<usize>> = (0..order).map(split).collect();

    let labels = factors.iter().any(|f| f.labels().is_some()).then(|| {
        tuples
            .iter()
            .map(|t| {
                let parts: Vec<String> = t.iter().zip(factors).map(|(&c, f)| f.label(c)).collect();
                format!("({})", parts.join(","))
            })
            .collect()
    });
    let product = FiniteGroup::from_fn(order, labels, |a, b| {
        let t: Vec<usize> = tuples[a]
            .iter()
            .zip(&tuples[b])
            .zip(factors)
            .map(|((&x, &y), f)| f.mul(x, y))
            .collect();
        join(&t)
    })?;

    let projections = factors
        .iter()
        .enumerate()
        .map(|(j, f)| {
            let image = tuples.iter().map(|t| t[j]).collect();
            Morphism::new_unchecked(&product, f, image)
        })
        .collect();
    let embeddings = factors
        .iter()
        .enumerate()
        .map(|(j, f)| {
            let image = f
                .elements()
                .map(|h| {
                    let mut t = vec![0; factors.len()];
                    t[j] = h;
                    join(&t)
                })
                .collect();
            Morphism::new_unchecked(f, &product, image)
        })
        .collect();

    let structure = ProductStructure {
        factors: factors.to_vec(),
        product,
        projections,
        embeddings,
    };
    let depth = factors.iter().map(FiniteGroup::order).max().unwrap_or(1) + 1;
    structure.verify_factorization(depth.min(8))?;
    Ok(structure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{abelian, catalog};

    #[test]
    fn single_factor() {
        let c2 = catalog::cyclic(2).unwrap();
        let p = direct_product(std::slice::from_ref(&c2)).unwrap();
        assert_eq!(p.product.rows(), c2.rows());
        assert_eq!(p.projections[0].image(), &[0, 1]);
    }

    #[test]
    fn q8_times_c2() {
        let p = direct_product(&[catalog::quaternion(8).unwrap(), catalog::cyclic(2).unwrap()])
            .unwrap();
        let g = &p.product;
        assert_eq!(g.order(), 16);
        let z = group::center(g);
        let inv = abelian::subgroup_invariants(&z).unwrap();
        assert_eq!(inv.exponents, vec![1, 1]);
        assert_eq!(group::gamma(g, 2).order(), 2);
        for (proj, emb) in p.projections.iter().zip(&p.embeddings) {
            let round = proj.compose(emb).unwrap();
            assert!(round.image().iter().enumerate().all(|(i, &x)| i == x));
        }
    }

    #[test]
    fn d4_times_c3_class_two() {
        let p =
            direct_product(&[catalog::dihedral(4).unwrap(), catalog::cyclic(3).unwrap()]).unwrap();
        assert_eq!(p.product.order(), 24);
        assert_eq!(group::nilpotency_class(&p.product), Ok(2));
    }

    #[test]
    fn cap_enforced() {
        let c16 = catalog::cyclic(16).unwrap();
        let err = direct_product_with_cap(&[c16.clone(), c16], 128).unwrap_err();
        assert_eq!(
            err,
            GroupError::OrderCapExceeded {
                order: 256,
                cap: 128
            }
        );
    }
}
