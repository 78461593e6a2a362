//! Automorphism groups by exhaustive generator-image search, the
//! automorphism subgroups defined by fixing and moving conditions, and the
//! explicit maps relating them to homomorphism groups.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::lattice;
use crate::morphism::Morphism;
use crate::product::ProductStructure;
use crate::quotient::QuotientGroup;
use crate::search::MapSearch;
use crate::subgroup::Subgroup;

/// Above this order enumeration still runs but logs a warning.
pub const SOFT_ORDER_CAP: usize = 64;
/// Above this order enumeration is refused.
pub const HARD_ORDER_CAP: usize = 128;
/// Order limit for the direct-factor search in [`purely_nonabelian_test`].
pub const FACTOR_SEARCH_CAP: usize = 256;

/// Orders already warned about, so each is reported once per process.
static WARNED: Mutex<BTreeSet<usize>> = Mutex::new(BTreeSet::new());

#[derive(Clone)]
pub struct Automorphism {
    group: FiniteGroup,
    image: Vec<usize>,
}

impl std::fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Automorphism").field(&self.image).finish()
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.image == other.image
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    /// Checks bijectivity and the homomorphism property.
    pub fn new(group: &FiniteGroup, image: Vec<usize>) -> Result<Automorphism> {
        let n = group.order();
        let mut seen = vec![false; n];
        for &y in &image {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return Err(GroupError::HypothesisViolated(
                    "map is not a bijection".into(),
                ));
            }
        }
        if image.len() != n {
            return Err(GroupError::HypothesisViolated(
                "map is not a bijection".into(),
            ));
        }
        Morphism::new(group, group, image.clone())?;
        Ok(Automorphism {
            group: group.clone(),
            image,
        })
    }

    fn new_unchecked(group: &FiniteGroup, image: Vec<usize>) -> Automorphism {
        Automorphism {
            group: group.clone(),
            image,
        }
    }

    pub fn identity(group: &FiniteGroup) -> Automorphism {
        Automorphism::new_unchecked(group, group.elements().collect())
    }

    /// `g ↦ x⁻¹gx`.
    pub fn conjugation(group: &FiniteGroup, x: usize) -> Automorphism {
        let image = group.elements().map(|g| group.conjugate(g, x)).collect();
        Automorphism::new_unchecked(group, image)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Automorphism) -> Automorphism {
        let image = inner.image.iter().map(|&x| self.image[x]).collect();
        Automorphism::new_unchecked(&self.group, image)
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Automorphism::new_unchecked(&self.group, image)
    }

    pub fn as_morphism(&self) -> Morphism {
        Morphism::new_unchecked(&self.group, &self.group, self.image.clone())
    }
}

/// Which automorphism subgroup to enumerate.
#[derive(Clone, Debug)]
pub enum AutSubgroupTag {
    Full,
    /// `g⁻¹f(g) ∈ Z(G)` for all `g`.
    Central,
    /// `f(g) ∈ {x⁻¹gx : x ∈ γ_n(G)}` for all `g`.
    ClassPreserving(usize),
    /// `Aut^M(G) ∩ Aut_N(G)`.
    Box {
        m: Subgroup,
        n: Subgroup,
    },
    /// `Aut^M(G)`: `f(M) = M` and `g⁻¹f(g) ∈ M` for all `g`.
    Upper(Subgroup),
    /// `Aut_N(G)`: `f` fixes `N` elementwise.
    Lower(Subgroup),
}

impl AutSubgroupTag {
    pub fn name(&self) -> String {
        match self {
            AutSubgroupTag::Full => "full".into(),
            AutSubgroupTag::Central => "central".into(),
            AutSubgroupTag::ClassPreserving(n) => format!("class:{n}"),
            AutSubgroupTag::Box { .. } => "box".into(),
            AutSubgroupTag::Upper(_) => "upper".into(),
            AutSubgroupTag::Lower(_) => "lower".into(),
        }
    }
}

/// Elementwise form of a tag: `f` is in the subgroup iff `allowed(g, f(g))`
/// for every `g` (plus `f(M) = M` for the upper conditions, which follows
/// from `g⁻¹f(g) ∈ M` for a bijection and is rechecked separately).
struct Predicate {
    allowed: Box<dyn Fn(usize, usize) -> bool + Sync>,
    setwise: Option<Subgroup>,
}

fn moves_into(g: &FiniteGroup, m: &Subgroup) -> impl Fn(usize, usize) -> bool + Sync {
    let g = g.clone();
    let m = m.clone();
    move |x, y| m.contains(g.mul(g.inv(x), y))
}

fn fixes(n: &Subgroup) -> impl Fn(usize, usize) -> bool + Sync {
    let n = n.clone();
    move |x, y| !n.contains(x) || x == y
}

fn check_parent(g: &FiniteGroup, s: &Subgroup) -> Result<()> {
    if !s.parent().same_as(g) {
        return Err(GroupError::MismatchedParent);
    }
    Ok(())
}

fn predicate(g: &FiniteGroup, tag: &AutSubgroupTag) -> Result<Predicate> {
    let (allowed, setwise): (Box<dyn Fn(usize, usize) -> bool + Sync>, _) = match tag {
        AutSubgroupTag::Full => (Box::new(|_, _| true), None),
        AutSubgroupTag::Central => (Box::new(moves_into(g, &group::center(g))), None),
        AutSubgroupTag::ClassPreserving(n) => {
            let gamma = group::gamma(g, *n);
            let conj: Vec<Vec<bool>> = g
                .elements()
                .map(|x| {
                    let mut set = vec![false; g.order()];
                    for &c in gamma.members() {
                        set[g.conjugate(x, c)] = true;
                    }
                    set
                })
                .collect();
            (Box::new(move |x, y| conj[x][y]), None)
        }
        AutSubgroupTag::Box { m, n } => {
            for s in [m, n] {
                check_parent(g, s)?;
                if !s.is_normal() {
                    return Err(GroupError::NotNormal);
                }
            }
            let up = moves_into(g, m);
            let down = fixes(n);
            (
                Box::new(move |x, y| up(x, y) && down(x, y)),
                Some(m.clone()),
            )
        }
        AutSubgroupTag::Upper(m) => {
            check_parent(g, m)?;
            if !m.is_normal() {
                return Err(GroupError::NotNormal);
            }
            (Box::new(moves_into(g, m)), Some(m.clone()))
        }
        AutSubgroupTag::Lower(n) => {
            check_parent(g, n)?;
            if !n.is_normal() {
                return Err(GroupError::NotNormal);
            }
            (Box::new(fixes(n)), None)
        }
    };
    Ok(Predicate { allowed, setwise })
}

impl Predicate {
    fn holds(&self, f: &Automorphism) -> bool {
        let elementwise = f
            .image
            .iter()
            .enumerate()
            .all(|(x, &y)| (self.allowed)(x, y));
        let setwise = self.setwise.as_ref().is_none_or(|m| {
            m.members().iter().all(|&x| m.contains(f.apply(x)))
        });
        elementwise && setwise
    }
}

/// Whether `f` satisfies the defining condition of `tag`.
pub fn is_member(f: &Automorphism, tag: &AutSubgroupTag) -> Result<bool> {
    Ok(predicate(&f.group, tag)?.holds(f))
}

fn check_cap(g: &FiniteGroup) -> Result<()> {
    let order = g.order();
    if order > HARD_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: HARD_ORDER_CAP,
        });
    }
    if order > SOFT_ORDER_CAP && WARNED.lock().map_or(true, |mut seen| seen.insert(order)) {
        log::warn!("enumerating automorphisms of a group of order {order}");
    }
    Ok(())
}

/// The automorphisms selected by `tag`, sorted by image array.
pub fn aut_subgroup(g: &FiniteGroup, tag: &AutSubgroupTag) -> Result<Vec<Automorphism>> {
    check_cap(g)?;
    let pred = predicate(g, tag)?;
    let mut found: Vec<Automorphism> = MapSearch::new(g, g, true, &*pred.allowed)
        .collect()
        .into_iter()
        .map(|image| Automorphism::new_unchecked(g, image))
        .collect();
    found.sort_by(|a, b| a.image.cmp(&b.image));
    for f in &found {
        if !pred.holds(f) {
            return Err(GroupError::HypothesisViolated(format!(
                "search returned a map outside the {} subgroup",
                tag.name()
            )));
        }
    }
    Ok(found)
}

/// Whether a list of automorphisms is closed under composition and inverse.
pub fn is_closed(list: &[Automorphism]) -> bool {
    let index: HashMap<&[usize], usize> = list
        .iter()
        .enumerate()
        .map(|(i, f)| (f.image(), i))
        .collect();
    list.iter().all(|f| {
        index.contains_key(f.inverse().image())
            && list
                .iter()
                .all(|h| index.contains_key(f.compose(h).image()))
    })
}

/// Closure checks beyond this many compositions are skipped.
const CLOSURE_CHECK_BUDGET: usize = 1 << 26;

pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Automorphism>> {
    let all = aut_subgroup(g, &AutSubgroupTag::Full)?;
    if all.len() * all.len() * g.order() <= CLOSURE_CHECK_BUDGET && !is_closed(&all) {
        return Err(GroupError::NotAGroup(
            "automorphism list is not closed".into(),
        ));
    }
    Ok(all)
}

/// Central automorphisms, which coincide with `Aut_{γ_2}^{Z}(G)`.
pub fn autcent(g: &FiniteGroup) -> Result<Vec<Automorphism>> {
    let central = aut_subgroup(g, &AutSubgroupTag::Central)?;
    debug_assert_eq!(
        central,
        aut_box(g, &group::center(g), &group::gamma(g, 2))?,
        "Autcent differs from the box subgroup"
    );
    Ok(central)
}

/// `Aut_c^n(G)`.
pub fn aut_class_preserving(g: &FiniteGroup, n: usize) -> Result<Vec<Automorphism>> {
    aut_subgroup(g, &AutSubgroupTag::ClassPreserving(n))
}

/// `Aut_N^M(G)`.
pub fn aut_box(g: &FiniteGroup, m: &Subgroup, n: &Subgroup) -> Result<Vec<Automorphism>> {
    aut_subgroup(
        g,
        &AutSubgroupTag::Box {
            m: m.clone(),
            n: n.clone(),
        },
    )
}

/// `α_f : G/N → M`, `gN ↦ g⁻¹f(g)`, for `f ∈ Aut_N^M(G)` with `M` central.
/// `q` is `G/N`; the codomain is `m.as_group()`.
pub fn alpha_of(f: &Automorphism, q: &QuotientGroup, m: &Subgroup) -> Result<Morphism> {
    let g = &f.group;
    check_parent(g, m)?;
    if !q.base.same_as(g) {
        return Err(GroupError::MismatchedParent);
    }
    if !m.is_central() {
        return Err(GroupError::NotCentral);
    }
    let tag = AutSubgroupTag::Box {
        m: m.clone(),
        n: q.kernel.clone(),
    };
    if !is_member(f, &tag)? {
        return Err(GroupError::NotMember("f is not in Aut_N^M(G)".into()));
    }
    let value = |x: usize| {
        m.local_index(g.mul(g.inv(x), f.apply(x)))
            .expect("g⁻¹f(g) ∈ M")
    };
    let image: Vec<usize> = q.representatives.iter().map(|&r| value(r)).collect();
    for x in g.elements() {
        if image[q.project(x)] != value(x) {
            return Err(GroupError::HypothesisViolated(
                "α_f depends on the coset representative".into(),
            ));
        }
    }
    Morphism::new(&q.group, m.as_group(), image)
}

/// `f_ψ(g) = g·ψ(gN)` for `ψ : G/N → M` with `M ⊆ N` central.
pub fn automorphism_from_hom(
    psi: &Morphism,
    q: &QuotientGroup,
    m: &Subgroup,
) -> Result<Automorphism> {
    let g = &q.base;
    check_parent(g, m)?;
    if !m.is_central() {
        return Err(GroupError::HypothesisViolated("M is not central".into()));
    }
    if !m.is_subset_of(&q.kernel) {
        return Err(GroupError::HypothesisViolated(
            "M is not contained in N".into(),
        ));
    }
    if !psi.domain().same_as(&q.group) || !psi.codomain().same_as(m.as_group()) {
        return Err(GroupError::MismatchedParent);
    }
    let image = g
        .elements()
        .map(|x| g.mul(x, m.to_parent(psi.apply(q.project(x)))))
        .collect();
    Automorphism::new(g, image)
}

/// `M = 1 × ⋯ × M_j × ⋯ × 1` and `N = H_1 × ⋯ × N_j × ⋯ × H_k`.
pub fn product_box(
    p: &ProductStructure,
    j: usize,
    m_j: &Subgroup,
    n_j: &Subgroup,
) -> Result<(Subgroup, Subgroup)> {
    let factor = p
        .factors
        .get(j)
        .ok_or_else(|| GroupError::ShapeMismatch(format!("no factor {j}")))?;
    if !m_j.parent().same_as(factor) || !n_j.parent().same_as(factor) {
        return Err(GroupError::ShapeMismatch(format!(
            "M_j and N_j must be subgroups of factor {j}"
        )));
    }
    let mut ms: Vec<Subgroup> = p.factors.iter().map(Subgroup::trivial).collect();
    let mut ns: Vec<Subgroup> = p.factors.iter().map(Subgroup::whole).collect();
    ms[j] = m_j.clone();
    ns[j] = n_j.clone();
    Ok((p.product_subgroup(&ms)?, p.product_subgroup(&ns)?))
}

/// `α_f(h) = π_j(f(1, …, h, …, 1))` for `f ∈ Aut_N^M(H_1 × ⋯ × H_k)`.
pub fn restrict_product_automorphism(
    p: &ProductStructure,
    f: &Automorphism,
    j: usize,
    m_j: &Subgroup,
    n_j: &Subgroup,
) -> Result<Automorphism> {
    if !f.group.same_as(&p.product) {
        return Err(GroupError::MismatchedParent);
    }
    let (m, n) = product_box(p, j, m_j, n_j)?;
    if !is_member(f, &AutSubgroupTag::Box { m, n })? {
        return Err(GroupError::NotMember(
            "f is not in Aut_N^M of the product".into(),
        ));
    }
    let (emb, proj) = (&p.embeddings[j], &p.projections[j]);
    let image = p.factors[j]
        .elements()
        .map(|h| proj.apply(f.apply(emb.apply(h))))
        .collect();
    Automorphism::new(&p.factors[j], image)
}

/// `f_ψ(h_1, …, h_j, …, h_k) = (h_1, …, ψ(h_j), …, h_k)`.
pub fn lift_product_automorphism(
    p: &ProductStructure,
    psi: &Automorphism,
    j: usize,
) -> Result<Automorphism> {
    let factor = p
        .factors
        .get(j)
        .ok_or_else(|| GroupError::ShapeMismatch(format!("no factor {j}")))?;
    if !psi.group.same_as(factor) {
        return Err(GroupError::MismatchedParent);
    }
    let image = p
        .product
        .elements()
        .map(|x| {
            let mut t = p.tuple(x);
            t[j] = psi.apply(t[j]);
            p.index(&t)
        })
        .collect();
    Ok(Automorphism::new_unchecked(&p.product, image))
}

#[derive(Clone, Debug)]
pub struct PurelyNonabelian {
    pub purely: bool,
    /// `(H, A)` with `G = H × A` and `A` abelian and nontrivial.
    pub witness: Option<(Subgroup, Subgroup)>,
}

/// Whether `G` has no nontrivial abelian direct factor.
pub fn purely_nonabelian_test(g: &FiniteGroup) -> Result<PurelyNonabelian> {
    if g.order() > FACTOR_SEARCH_CAP {
        return Err(GroupError::OrderCapExceeded {
            order: g.order(),
            cap: FACTOR_SEARCH_CAP,
        });
    }
    let witness = lattice::direct_decompositions(g)
        .into_iter()
        .find(|(a, _)| a.is_abelian())
        .map(|(a, h)| (h, a));
    Ok(PurelyNonabelian {
        purely: witness.is_none(),
        witness,
    })
}

/// A set of automorphisms as an abstract group under composition; element
/// `i` is `list[perm[i]]`, where `perm` is the relabeling that puts the
/// identity first.
pub fn group_from_automorphisms(list: &[Automorphism]) -> Result<(FiniteGroup, Vec<usize>)> {
    let index: HashMap<&[usize], usize> = list
        .iter()
        .enumerate()
        .map(|(i, f)| (f.image(), i))
        .collect();
    let table =
        list.iter()
            .map(|f| {
                list.iter()
                    .map(|h| {
                        index.get(f.compose(h).image()).copied().ok_or_else(|| {
                            GroupError::NotAGroup("not closed under composition".into())
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
    group::build_group_labeled(table, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hom;
    use crate::quotient::quotient;

    fn g(s: &str) -> FiniteGroup {
        catalog::construct_str(s).unwrap()
    }

    #[test]
    fn aut_orders() {
        assert_eq!(automorphism_group(&g("C(2)")).unwrap().len(), 1);
        assert_eq!(automorphism_group(&g("Q(8)")).unwrap().len(), 24);
        assert_eq!(automorphism_group(&g("D(4)")).unwrap().len(), 8);
        assert_eq!(automorphism_group(&g("D(3)")).unwrap().len(), 6);
        assert_eq!(automorphism_group(&g("Ab(2; 1, 1)")).unwrap().len(), 6);
        assert_eq!(automorphism_group(&g("Ab(2; 1, 1, 1)")).unwrap().len(), 168);
        assert_eq!(automorphism_group(&g("Heis(3)")).unwrap().len(), 432);
    }

    #[test]
    fn identity_first_and_inner_included() {
        let d4 = g("D(4)");
        let all = automorphism_group(&d4).unwrap();
        assert!(all[0].is_identity());
        for x in d4.elements() {
            assert!(all.contains(&Automorphism::conjugation(&d4, x)));
        }
    }

    #[test]
    fn central_examples() {
        let c4 = g("Ab(2; 2, 1)");
        assert_eq!(autcent(&c4).unwrap(), automorphism_group(&c4).unwrap());
        assert_eq!(autcent(&g("Q(8)")).unwrap().len(), 4);
        assert_eq!(autcent(&g("D(4)")).unwrap().len(), 4);
    }

    #[test]
    fn class_preserving_examples() {
        let q8 = g("Q(8)");
        let inner: Vec<Automorphism> = {
            let mut v: Vec<_> = q8
                .elements()
                .map(|x| Automorphism::conjugation(&q8, x))
                .collect();
            v.sort_by(|a, b| a.image().cmp(b.image()));
            v.dedup();
            v
        };
        assert_eq!(aut_class_preserving(&q8, 1).unwrap(), inner);
        assert_eq!(inner.len(), 4);
        let only_id = aut_class_preserving(&q8, 3).unwrap();
        assert_eq!(only_id.len(), 1);
        assert!(only_id[0].is_identity());
        assert_eq!(aut_class_preserving(&g("Heis(3)"), 1).unwrap().len(), 9);
    }

    #[test]
    fn box_examples() {
        let d4 = g("D(4)");
        let all = automorphism_group(&d4).unwrap();
        let one = Subgroup::trivial(&d4);
        let whole = Subgroup::whole(&d4);
        assert_eq!(aut_box(&d4, &whole, &one).unwrap(), all);
        let z = group::center(&d4);
        let g2 = group::gamma(&d4, 2);
        assert_eq!(aut_box(&d4, &g2, &z).unwrap().len(), 4);
        assert_eq!(aut_box(&d4, &whole, &whole).unwrap().len(), 1);
        let s = Subgroup::new(&d4, &[0, 4]).unwrap();
        assert_eq!(aut_box(&d4, &s, &one).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn alpha_and_lift_round_trip_on_d4() {
        let d4 = g("D(4)");
        let z = group::center(&d4);
        let q = quotient(&d4, &z).unwrap();
        let cent = autcent(&d4).unwrap();
        let alphas: Vec<Morphism> = cent.iter().map(|f| alpha_of(f, &q, &z).unwrap()).collect();
        let homs = hom::homs_from_quotient(&q, &z).unwrap();
        for (f, a) in cent.iter().zip(&alphas) {
            assert!(homs.contains(a));
            assert_eq!(&automorphism_from_hom(a, &q, &z).unwrap(), f);
        }
        for (i, a) in alphas.iter().enumerate() {
            assert!(alphas[..i].iter().all(|b| b != a));
        }
        assert!(alpha_of(&cent[0], &q, &z).unwrap().is_trivial());
        for (f1, a1) in cent.iter().zip(&alphas) {
            for (f2, a2) in cent.iter().zip(&alphas) {
                let composed = alpha_of(&f1.compose(f2), &q, &z).unwrap();
                assert_eq!(composed, a1.pointwise_mul(a2).unwrap());
            }
        }
    }

    #[test]
    fn alpha_errors() {
        let d4 = g("D(4)");
        let q = quotient(&d4, &group::center(&d4)).unwrap();
        let noncentral = Subgroup::new(&d4, &[0, 1, 2, 3]).unwrap();
        let f = Automorphism::identity(&d4);
        assert_eq!(
            alpha_of(&f, &q, &noncentral).unwrap_err(),
            GroupError::NotCentral
        );
        let outer = automorphism_group(&d4)
            .unwrap()
            .into_iter()
            .find(|f| !is_member(f, &AutSubgroupTag::Central).unwrap())
            .unwrap();
        assert!(matches!(
            alpha_of(&outer, &q, &group::center(&d4)),
            Err(GroupError::NotMember(_))
        ));
    }

    #[test]
    fn q8_homs_give_autcent() {
        let q8 = g("Q(8)");
        let z = group::center(&q8);
        let q = quotient(&q8, &z).unwrap();
        let homs = hom::homs_from_quotient(&q, &z).unwrap();
        let mut built: Vec<Automorphism> = homs
            .members
            .iter()
            .map(|psi| automorphism_from_hom(psi, &q, &z).unwrap())
            .collect();
        built.sort_by(|a, b| a.image().cmp(b.image()));
        assert_eq!(built, autcent(&q8).unwrap());
        let trivial = Morphism::trivial(&q.group, z.as_group());
        assert!(automorphism_from_hom(&trivial, &q, &z)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn product_restriction_and_lift() {
        let p = crate::product::direct_product(&[g("Q(8)"), g("C(2)")]).unwrap();
        let h = &p.factors[0];
        let (m1, n1) = (group::gamma(h, 2), group::center(h));
        let (m, n) = product_box(&p, 0, &m1, &n1).unwrap();
        let big = aut_box(&p.product, &m, &n).unwrap();
        let small = aut_box(h, &m1, &n1).unwrap();
        assert_eq!(small.len(), 4);
        let mut images: Vec<Automorphism> = big
            .iter()
            .map(|f| restrict_product_automorphism(&p, f, 0, &m1, &n1).unwrap())
            .collect();
        images.sort_by(|a, b| a.image().cmp(b.image()));
        assert_eq!(images, small);
        for psi in &small {
            let lifted = lift_product_automorphism(&p, psi, 0).unwrap();
            assert!(big.contains(&lifted));
            assert_eq!(
                &restrict_product_automorphism(&p, &lifted, 0, &m1, &n1).unwrap(),
                psi
            );
        }
        let id = Automorphism::identity(&p.product);
        assert!(restrict_product_automorphism(&p, &id, 0, &m1, &n1)
            .unwrap()
            .is_identity());
        assert!(lift_product_automorphism(&p, &Automorphism::identity(h), 0)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn purely_nonabelian_examples() {
        assert!(purely_nonabelian_test(&g("Q(8)")).unwrap().purely);
        assert!(purely_nonabelian_test(&g("D(4)")).unwrap().purely);
        let r = purely_nonabelian_test(&g("Q(8) x C(2)")).unwrap();
        assert!(!r.purely);
        let (h, a) = r.witness.unwrap();
        assert_eq!((h.order(), a.order()), (8, 2));
        let r = purely_nonabelian_test(&g("C(4)")).unwrap();
        assert!(!r.purely);
        assert!(!purely_nonabelian_test(&g("D(4) x C(2)")).unwrap().purely);
    }

    #[test]
    fn composition_table() {
        let list = autcent(&g("Q(8)")).unwrap();
        let (grp, _) = group_from_automorphisms(&list).unwrap();
        assert_eq!(grp.order(), 4);
        assert_eq!(grp.exponent(), 2);
    }

    #[test]
    fn cap() {
        assert_eq!(
            automorphism_group(&g("C(256)")).unwrap_err(),
            GroupError::OrderCapExceeded {
                order: 256,
                cap: 128
            }
        );
    }
}
