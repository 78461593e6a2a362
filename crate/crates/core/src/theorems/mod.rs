//! Executable checkers: each validates its hypotheses on a concrete group,
//! then compares the claimed conclusion against brute-force computation.

pub mod bijection;
pub mod central;
pub mod equality;
pub mod hom_equality;
pub mod products;
pub mod report;
pub mod sanity;

use std::time::Instant;

use crate::catalog::{self, Limits};
use crate::dsl::GroupSpec;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::product::{direct_product_with_cap, ProductStructure};

pub use report::{Instance, Status, TheoremId, TheoremReport, CSV_HEADER, SCHEMA_VERSION};

/// A group under test, with its product structure when it was specified as
/// a direct product.
#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub group: FiniteGroup,
    pub product: Option<ProductStructure>,
}

impl Subject {
    pub fn from_spec(spec: &GroupSpec, limits: &Limits) -> Result<Subject> {
        let label = spec.canonical();
        if spec.ast.factors().len() > 1 {
            let p = catalog::construct_product(spec, limits)?;
            Ok(Subject {
                label,
                group: p.product.clone(),
                product: Some(p),
            })
        } else {
            Ok(Subject {
                label,
                group: catalog::construct(spec, limits)?,
                product: None,
            })
        }
    }

    pub fn parse(source: &str, limits: &Limits) -> Result<Subject> {
        Subject::from_spec(&GroupSpec::parse(source)?, limits)
    }

    /// A group without a known product structure, such as one loaded from a
    /// Cayley table.
    pub fn from_group(label: impl Into<String>, group: FiniteGroup) -> Subject {
        Subject {
            label: label.into(),
            group,
            product: None,
        }
    }

    /// `(H, K)` with `G = H × K`: the first factor and the product of the
    /// rest.
    pub fn split(&self) -> Result<Option<(FiniteGroup, FiniteGroup)>> {
        let Some(p) = &self.product else {
            return Ok(None);
        };
        let rest = if p.factors.len() == 2 {
            p.factors[1].clone()
        } else {
            direct_product_with_cap(&p.factors[1..], usize::MAX)?.product
        };
        Ok(Some((p.factors[0].clone(), rest)))
    }
}

fn needs_product(id: TheoremId, label: &str) -> TheoremReport {
    let inst = Instance::new("G").hypothesis("G is given as a direct product", false);
    TheoremReport::single(id, label, inst)
}

fn dispatch(id: TheoremId, s: &Subject, n: Option<usize>) -> Result<TheoremReport> {
    let (label, g) = (s.label.as_str(), &s.group);
    match id {
        TheoremId::L2_1 => sanity::check_exponent_center_series(label, g),
        TheoremId::L2_2 => sanity::check_quotient_exponent_divides(label, g),
        TheoremId::L2_3 => match s.split()? {
            Some((h, k)) => sanity::check_product_class(label, &h, &k, g),
            None => {
                let k = catalog::cyclic(2)?;
                let p = direct_product_with_cap(&[g.clone(), k.clone()], usize::MAX)?;
                sanity::check_product_class(label, g, &k, &p.product)
            }
        },
        TheoremId::T2_4 => central::check_adney_yen(label, g),
        TheoremId::L2_5 => match s.split()? {
            Some((h, k)) => central::check_bidwell(label, &h, &k, g),
            None => Ok(needs_product(id, label)),
        },
        TheoremId::L2_6 => hom_equality::check_hom_equality_criterion(label, g),
        TheoremId::T3_1 => match &s.product {
            Some(p) => products::check_product_restriction(label, p),
            None => Ok(needs_product(id, label)),
        },
        TheoremId::T3_2 => match s.split()? {
            Some((h, a)) => products::check_abelian_factor_correspondence(label, &h, &a, n),
            None => Ok(needs_product(id, label)),
        },
        TheoremId::L3_3 => bijection::check_alpha_injective(label, g),
        TheoremId::T3_4 => bijection::check_central_hom_bijection(label, g),
        TheoremId::T3_5 => bijection::check_class_preserving_hom(label, g, n),
        TheoremId::C3_6 => bijection::check_class_preserving_center(label, g),
        TheoremId::T4_1 => equality::check_central_equals_class_preserving(label, g, n),
        TheoremId::C4_2 => equality::check_central_class_preserving_criterion(label, g),
        TheoremId::L4_3 => equality::check_box_equality_purity(label, g, n),
        TheoremId::T4_4 => equality::check_box_equality(label, g, n),
        TheoremId::C4_5 => equality::check_box_equality_criterion(label, g),
    }
}

/// Runs one checker. Failing group-kind preconditions become NOT-APPLICABLE
/// reports; any other error becomes an ERROR report.
pub fn run_check(id: TheoremId, subject: &Subject, n: Option<usize>) -> TheoremReport {
    let start = Instant::now();
    let mut report = match dispatch(id, subject, n) {
        Ok(r) => r,
        Err(GroupError::NotPGroup) => precondition(id, &subject.label, "G is a p-group"),
        Err(GroupError::NotNonabelian) => precondition(id, &subject.label, "G is non-abelian"),
        Err(e) => {
            log::warn!("{id} on {}: {e}", subject.label);
            TheoremReport::error(id, &subject.label, &e)
        }
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}

fn precondition(id: TheoremId, label: &str, name: &str) -> TheoremReport {
    TheoremReport::single(id, label, Instance::new("G").hypothesis(name, false))
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Every requested checker over every catalog group of order at most
/// `max_order`, ordered by catalog position and then theorem. Groups that
/// cannot be built produce ERROR reports.
pub fn run_corpus(max_order: usize, theorems: &[TheoremId]) -> Vec<TheoremReport> {
    let limits = Limits { max_order };
    let specs: Vec<GroupSpec> = catalog::CORPUS
        .iter()
        .map(|s| GroupSpec::parse(s).expect("catalog specs parse"))
        .filter(|s| s.ast.order() <= max_order)
        .collect();
    let subjects: Vec<std::result::Result<Subject, (String, GroupError)>> = specs
        .iter()
        .map(|s| Subject::from_spec(s, &limits).map_err(|e| (s.canonical(), e)))
        .collect();
    let jobs: Vec<(usize, TheoremId)> = (0..subjects.len())
        .flat_map(|i| theorems.iter().map(move |&t| (i, t)))
        .collect();
    par_map(&jobs, |&(i, id)| match &subjects[i] {
        Ok(s) => run_check(id, s, None),
        Err((label, e)) => TheoremReport::error(id, label, e),
    })
}

/// Tallies by status: `(passed, failed, not_applicable, error)`.
pub fn tally(reports: &[TheoremReport]) -> (usize, usize, usize, usize) {
    let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
    (
        count(Status::Passed),
        count(Status::Failed),
        count(Status::NotApplicable),
        count(Status::Error),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_filter_gives_no_reports() {
        assert!(run_corpus(32, &[]).is_empty());
    }

    #[test]
    fn dispatch_covers_every_id() {
        let s = Subject::parse("Q(8) x C(2)", &Limits::default()).unwrap();
        for id in TheoremId::ALL {
            let r = run_check(id, &s, None);
            assert_eq!(r.theorem_id, id);
            assert_ne!(r.status, Status::Error, "{id}: {:?}", r.error);
            assert_ne!(r.status, Status::Failed, "{id}");
        }
    }

    #[test]
    fn kind_preconditions_are_not_applicable() {
        let s = Subject::parse("C(4)", &Limits::default()).unwrap();
        let r = run_check(TheoremId::C4_5, &s, None);
        assert_eq!(r.status, Status::NotApplicable);
        assert_eq!(r.hypotheses[0].name, "G is non-abelian");
        let r = run_check(TheoremId::T3_1, &s, None);
        assert_eq!(r.status, Status::NotApplicable);
    }

    #[test]
    fn split_of_three_factors() {
        let s = Subject::parse("D(4) x C(2) x C(2)", &Limits::default()).unwrap();
        let (h, k) = s.split().unwrap().unwrap();
        assert_eq!((h.order(), k.order()), (8, 4));
    }

    #[test]
    fn small_corpus_t34() {
        let reports = run_corpus(8, &[TheoremId::T3_4]);
        assert_eq!(
            reports.len(),
            catalog::CORPUS
                .iter()
                .filter(|s| { GroupSpec::parse(s).unwrap().ast.order() <= 8 })
                .count()
        );
        assert_eq!(tally(&reports).1, 0);
    }
}
