use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// An element-indexed map between two finite groups.
#[derive(Clone)]
pub struct Morphism {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    image: Vec<usize>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Morphism").field(&self.image).finish()
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain.same_as(&other.domain)
            && self.codomain.same_as(&other.codomain)
            && self.image == other.image
    }
}

impl Eq for Morphism {}

impl Morphism {
    /// Checks `image[xy] = image[x]·image[y]` on every pair.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        let m = Morphism::new_unchecked(domain, codomain, image);
        if m.image.len() != domain.order() || m.image.iter().any(|&y| y >= codomain.order()) {
            return Err(GroupError::BadParameter(
                "image array has the wrong shape".into(),
            ));
        }
        if !m.is_homomorphism() {
            return Err(GroupError::HypothesisViolated(
                "map is not a homomorphism".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        image: Vec<usize>,
    ) -> Self {
        Morphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            image,
        }
    }

    /// The map sending everything to the identity.
    pub fn trivial(domain: &FiniteGroup, codomain: &FiniteGroup) -> Self {
        Morphism::new_unchecked(domain, codomain, vec![0; domain.order()])
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_trivial(&self) -> bool {
        self.image.iter().all(|&y| y == 0)
    }

    pub fn is_homomorphism(&self) -> bool {
        let (d, c) = (&self.domain, &self.codomain);
        self.image[0] == 0
            && d.elements().all(|x| {
                d.elements()
                    .all(|y| self.image[d.mul(x, y)] == c.mul(self.image[x], self.image[y]))
            })
    }

    pub fn kernel(&self) -> Subgroup {
        let mask = self.image.iter().map(|&y| y == 0).collect();
        Subgroup::from_mask(self.domain.clone(), mask)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if !inner.codomain.same_as(&self.domain) {
            return Err(GroupError::MismatchedParent);
        }
        let image = inner.image.iter().map(|&x| self.image[x]).collect();
        Ok(Morphism::new_unchecked(
            &inner.domain,
            &self.codomain,
            image,
        ))
    }

    /// Pointwise product; meaningful when the codomain is abelian.
    pub fn pointwise_mul(&self, other: &Morphism) -> Result<Morphism> {
        if !self.domain.same_as(&other.domain) || !self.codomain.same_as(&other.codomain) {
            return Err(GroupError::MismatchedParent);
        }
        let image = self
            .image
            .iter()
            .zip(&other.image)
            .map(|(&a, &b)| self.codomain.mul(a, b))
            .collect();
        Ok(Morphism::new_unchecked(&self.domain, &self.codomain, image))
    }

    pub fn pointwise_inverse(&self) -> Morphism {
        let image = self.image.iter().map(|&a| self.codomain.inv(a)).collect();
        Morphism::new_unchecked(&self.domain, &self.codomain, image)
    }
}
