//! When central automorphisms coincide with class-preserving ones, or with
//! the automorphisms moving elements inside `γ_n` and fixing the center.

use serde_json::{Map, Value};

use super::report::{put, Hypothesis, Instance, TheoremId, TheoremReport};
use crate::abelian::{self, AbelianPInvariants};
use crate::aut::{self, Automorphism};
use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};
use crate::hom;
use crate::iso;
use crate::quotient::quotient;
use crate::subgroup::Subgroup;

/// Errors with `NotPGroup` or `NotNonabelian` unless `G` is a non-abelian
/// p-group.
pub fn require_nonabelian_p_group(g: &FiniteGroup) -> Result<()> {
    if !g.is_p_group() {
        return Err(GroupError::NotPGroup);
    }
    if g.is_abelian() {
        return Err(GroupError::NotNonabelian);
    }
    Ok(())
}

/// The quantities shared by the branches for one `n`.
struct Series {
    n: usize,
    gamma_n: Subgroup,
    center: Subgroup,
    /// `γ_n ⊆ Z`.
    inside: bool,
    /// `γ_n = Z`.
    equal: bool,
    /// `(d(γ_n), d(Z))` when `γ_n ⊆ Z`.
    ranks: Option<(usize, usize)>,
    /// `var(γ_n, Z)` when `γ_n ⊆ Z` with equal ranks.
    var: Option<u64>,
    exp_abelianization: u64,
}

impl Series {
    fn new(g: &FiniteGroup, n: usize) -> Result<Series> {
        let gamma_n = group::gamma(g, n);
        let center = group::center(g);
        let inside = gamma_n.is_subset_of(&center);
        let equal = gamma_n.members() == center.members();
        let mut ranks = None;
        let mut var = None;
        if inside {
            let (a, b) = (
                abelian::subgroup_invariants(&gamma_n)?,
                abelian::subgroup_invariants(&center)?,
            );
            ranks = Some((a.rank(), b.rank()));
            if a.rank() == b.rank() {
                var = Some(var_of(&a, &b)?);
            }
        }
        let exp_abelianization = quotient(g, &group::gamma(g, 2))?.group.exponent() as u64;
        Ok(Series {
            n,
            gamma_n,
            center,
            inside,
            equal,
            ranks,
            var,
            exp_abelianization,
        })
    }

    fn ranks_equal(&self) -> bool {
        self.ranks.is_some_and(|(a, b)| a == b)
    }

    /// `exp(G/γ_2) > var(γ_n, Z)`, `None` while `var` is undefined.
    fn exp_exceeds_var(&self) -> Option<bool> {
        self.var.map(|v| self.exp_abelianization > v)
    }

    fn record(&self, w: &mut Map<String, Value>) {
        put(w, "n", self.n);
        put(w, "|gamma_n|", self.gamma_n.order());
        put(w, "|Z|", self.center.order());
        put(w, "gamma_n ⊆ Z", self.inside);
        put(w, "gamma_n = Z", self.equal);
        put(w, "d(gamma_n), d(Z)", self.ranks);
        put(w, "var(gamma_n, Z)", self.var);
        put(w, "exp(G/gamma_2)", self.exp_abelianization);
    }
}

/// `var` with the trivial-group case, where both sides are `1`.
fn var_of(a: &AbelianPInvariants, b: &AbelianPInvariants) -> Result<u64> {
    if a.same_type(b) {
        return Ok(1);
    }
    abelian::var(a, b)
}

fn same_set(a: &[Automorphism], b: &[Automorphism]) -> bool {
    a == b
}

/// `Aut_c^{n-1}(G) ≅ Hom(G/Z, γ_n)`, decided only when `γ_n = Z` (otherwise
/// `None`).
fn class_preserving_iso(g: &FiniteGroup, s: &Series, cp: &[Automorphism]) -> Result<Option<bool>> {
    if !s.equal {
        return Ok(None);
    }
    let homs = hom::enumerate_homs_from_quotient(g, &s.center, &s.gamma_n)?;
    if homs.len() != cp.len() {
        return Ok(Some(false));
    }
    let (a, _) = aut::group_from_automorphisms(cp)?;
    Ok(Some(iso::iso_test(&a, &homs.as_group()?)?))
}

fn nonabelian_p_hypotheses(g: &FiniteGroup) -> Vec<Hypothesis> {
    vec![
        Hypothesis {
            name: "G is a p-group".into(),
            holds: g.is_p_group(),
        },
        Hypothesis {
            name: "G is non-abelian".into(),
            holds: !g.is_abelian(),
        },
    ]
}

fn range_of_n(g: &FiniteGroup, n: Option<usize>) -> Vec<usize> {
    match n {
        Some(n) => vec![n],
        None => (2..=group::nilpotency_class(g).unwrap_or(2).max(2)).collect(),
    }
}

/// The forward and converse branches comparing `Aut_c^{n-1}(G)` with
/// `Autcent(G)` for one `n`.
pub fn class_preserving_branches(
    g: &FiniteGroup,
    n: usize,
    cent: &[Automorphism],
) -> Result<Vec<Instance>> {
    let s = Series::new(g, n)?;
    let cp = aut::aut_class_preserving(g, n - 1)?;
    let eq = same_set(&cp, cent);
    let isomorphic = class_preserving_iso(g, &s, &cp)?;
    let base = |label: &str| {
        let mut inst = Instance::new(format!("n={n}: {label}"))
            .witness("|Aut_c^{n-1}(G)|", cp.len())
            .witness("|Autcent(G)|", cent.len())
            .witness("Aut_c^{n-1}(G) = Autcent(G)", eq)
            .witness("Aut_c^{n-1}(G) isomorphic to Hom(G/Z, gamma_n)", isomorphic);
        s.record(&mut inst.witnesses);
        inst.hypothesis("n >= 2", n >= 2)
    };
    let forward_rank = base("forward, containment and rank")
        .hypothesis("Aut_c^{n-1}(G) = Autcent(G)", eq)
        .conclude(|_| Ok(s.inside && s.ranks_equal()))?;
    let forward_var = base("forward, exponent above var")
        .hypothesis("Aut_c^{n-1}(G) = Autcent(G)", eq)
        .hypothesis("var(gamma_n, Z) is defined", s.var.is_some())
        .hypothesis(
            "exp(G/gamma_2) > var(gamma_n, Z)",
            s.exp_exceeds_var() == Some(true),
        )
        .conclude(|_| Ok(s.equal && isomorphic == Some(true)))?;
    let converse = base("converse")
        .hypothesis("gamma_n = Z", s.equal)
        .hypothesis(
            "Aut_c^{n-1}(G) isomorphic to Hom(G/Z, gamma_n)",
            isomorphic == Some(true),
        )
        .conclude(|_| Ok(eq && s.exp_exceeds_var() == Some(true)))?;
    Ok(vec![forward_rank, forward_var, converse])
}

/// Equality of `Aut_c^{n-1}(G)` and `Autcent(G)` for a non-abelian p-group,
/// over `n = 2, …, max(2, class)` unless `n` is given.
pub fn check_central_equals_class_preserving(
    spec: &str,
    g: &FiniteGroup,
    n: Option<usize>,
) -> Result<TheoremReport> {
    require_nonabelian_p_group(g)?;
    let cent = aut::autcent(g)?;
    let mut instances = Vec::new();
    for n in range_of_n(g, n) {
        instances.extend(class_preserving_branches(g, n, &cent)?);
    }
    Ok(TheoremReport::aggregate(
        TheoremId::T4_1,
        spec,
        nonabelian_p_hypotheses(g),
        instances,
        Map::new(),
    ))
}

/// `exp(γ_2) = exp(G/Z) ≤ exp(G/γ_2)`, checked when `γ_2 ⊆ Z`. Also records
/// how `var(γ_2, Z)` compares with `exp(γ_2)`.
fn exponent_chain(g: &FiniteGroup, s: &Series, w: &mut Map<String, Value>) -> Result<bool> {
    if !s.inside {
        put(w, "exponent chain", Value::Null);
        return Ok(true);
    }
    let exp_gamma = s.gamma_n.exponent() as u64;
    let exp_central_quotient = quotient(g, &s.center)?.group.exponent() as u64;
    let chain = exp_gamma == exp_central_quotient && exp_central_quotient <= s.exp_abelianization;
    put(w, "exp(gamma_2)", exp_gamma);
    put(w, "exp(G/Z)", exp_central_quotient);
    put(w, "exponent chain", chain);
    put(
        w,
        "var(gamma_2, Z) < exp(gamma_2)",
        s.var.map(|v| v < exp_gamma),
    );
    Ok(chain)
}

/// `Aut_c(G) = Autcent(G)` iff `Aut_c(G) ≅ Hom(G/Z, γ_2)` and `γ_2 = Z`.
pub fn check_central_class_preserving_criterion(
    spec: &str,
    g: &FiniteGroup,
) -> Result<TheoremReport> {
    require_nonabelian_p_group(g)?;
    let cent = aut::autcent(g)?;
    let s = Series::new(g, 2)?;
    let cp = aut::aut_class_preserving(g, 1)?;
    let mut inst = Instance::new("n=2");
    for h in nonabelian_p_hypotheses(g) {
        inst = inst.hypothesis(h.name, h.holds);
    }
    let inst = inst.conclude(|w| {
        s.record(w);
        let lhs = same_set(&cp, &cent);
        let isomorphic = class_preserving_iso(g, &s, &cp)?;
        let rhs = s.equal && isomorphic == Some(true);
        put(w, "|Aut_c(G)|", cp.len());
        put(w, "|Autcent(G)|", cent.len());
        put(w, "Aut_c(G) = Autcent(G)", lhs);
        put(
            w,
            "Aut_c(G) isomorphic to Hom(G/Z, gamma_2) and gamma_2 = Z",
            rhs,
        );
        let chain = exponent_chain(g, &s, w)?;
        Ok(lhs == rhs && chain)
    })?;
    Ok(TheoremReport::single(TheoremId::C4_2, spec, inst))
}

/// `Aut_{Z}^{γ_n}(G)`: moves elements inside `γ_n` and fixes the center.
pub fn box_subgroup(g: &FiniteGroup, n: usize) -> Result<Vec<Automorphism>> {
    aut::aut_box(g, &group::gamma(g, n), &group::center(g))
}

/// If `Aut_{Z}^{γ_n}(G) = Autcent(G)` then `G` is purely non-abelian and
/// `γ_n ⊆ Z`.
pub fn check_box_equality_purity(
    spec: &str,
    g: &FiniteGroup,
    n: Option<usize>,
) -> Result<TheoremReport> {
    require_nonabelian_p_group(g)?;
    let cent = aut::autcent(g)?;
    let purely = aut::purely_nonabelian_test(g)?.purely;
    let mut instances = Vec::new();
    for n in range_of_n(g, n) {
        let bx = box_subgroup(g, n)?;
        let eq = same_set(&bx, &cent);
        let inside = group::gamma(g, n).is_subset_of(&group::center(g));
        let inst = Instance::new(format!("n={n}"))
            .witness("|Aut_Z^{gamma_n}(G)|", bx.len())
            .witness("|Autcent(G)|", cent.len())
            .witness("purely non-abelian", purely)
            .witness("gamma_n ⊆ Z", inside)
            .hypothesis("n >= 2", n >= 2)
            .hypothesis("Aut_Z^{gamma_n}(G) = Autcent(G)", eq)
            .conclude(|_| Ok(purely && inside))?;
        instances.push(inst);
    }
    Ok(TheoremReport::aggregate(
        TheoremId::L4_3,
        spec,
        nonabelian_p_hypotheses(g),
        instances,
        Map::new(),
    ))
}

/// The forward and converse branches comparing `Aut_{Z}^{γ_n}(G)` with
/// `Autcent(G)` for one `n`.
pub fn box_branches(g: &FiniteGroup, n: usize, cent: &[Automorphism]) -> Result<Vec<Instance>> {
    let s = Series::new(g, n)?;
    let bx = box_subgroup(g, n)?;
    let eq = same_set(&bx, cent);
    let base = |label: &str| {
        let mut inst = Instance::new(format!("n={n}: {label}"))
            .witness("|Aut_Z^{gamma_n}(G)|", bx.len())
            .witness("|Autcent(G)|", cent.len())
            .witness("Aut_Z^{gamma_n}(G) = Autcent(G)", eq);
        s.record(&mut inst.witnesses);
        inst.hypothesis("n >= 2", n >= 2)
    };
    let forward_rank = base("forward, containment and rank")
        .hypothesis("Aut_Z^{gamma_n}(G) = Autcent(G)", eq)
        .conclude(|_| Ok(s.inside && s.ranks_equal()))?;
    let forward_var = base("forward, exponent above var")
        .hypothesis("Aut_Z^{gamma_n}(G) = Autcent(G)", eq)
        .hypothesis("var(gamma_n, Z) is defined", s.var.is_some())
        .hypothesis(
            "exp(G/gamma_2) > var(gamma_n, Z)",
            s.exp_exceeds_var() == Some(true),
        )
        .conclude(|_| Ok(s.equal))?;
    let converse = base("converse")
        .hypothesis("gamma_n = Z", s.equal)
        .conclude(|_| Ok(eq && s.exp_exceeds_var() == Some(true)))?;
    Ok(vec![forward_rank, forward_var, converse])
}

pub fn check_box_equality(spec: &str, g: &FiniteGroup, n: Option<usize>) -> Result<TheoremReport> {
    require_nonabelian_p_group(g)?;
    let cent = aut::autcent(g)?;
    let mut instances = Vec::new();
    for n in range_of_n(g, n) {
        instances.extend(box_branches(g, n, &cent)?);
    }
    Ok(TheoremReport::aggregate(
        TheoremId::T4_4,
        spec,
        nonabelian_p_hypotheses(g),
        instances,
        Map::new(),
    ))
}

/// `Aut_{Z}^{γ_2}(G) = Autcent(G)` iff `γ_2 = Z`.
pub fn check_box_equality_criterion(spec: &str, g: &FiniteGroup) -> Result<TheoremReport> {
    require_nonabelian_p_group(g)?;
    let cent = aut::autcent(g)?;
    let s = Series::new(g, 2)?;
    let bx = box_subgroup(g, 2)?;
    let mut inst = Instance::new("n=2");
    for h in nonabelian_p_hypotheses(g) {
        inst = inst.hypothesis(h.name, h.holds);
    }
    let inst = inst.conclude(|w| {
        s.record(w);
        let lhs = same_set(&bx, &cent);
        put(w, "|Aut_Z^{gamma_2}(G)|", bx.len());
        put(w, "|Autcent(G)|", cent.len());
        put(w, "Aut_Z^{gamma_2}(G) = Autcent(G)", lhs);
        let chain = exponent_chain(g, &s, w)?;
        Ok(lhs == s.equal && chain)
    })?;
    Ok(TheoremReport::single(TheoremId::C4_5, spec, inst))
}
