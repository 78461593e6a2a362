use groupscope::abelian::{self, hom_order, lemma26_test, partitions, AbelianPInvariants};
use groupscope::aut::{self, Automorphism};
use groupscope::catalog::{self, abelian_p_group, construct_str, Limits, CORPUS};
use groupscope::dsl::GroupSpec;
use groupscope::group::{self, build_group, FiniteGroup};
use groupscope::hom::{abelianization, enumerate_homs, hom_c_subset};
use groupscope::lattice::normal_subgroups;
use groupscope::product::direct_product;
use groupscope::quotient::quotient;
use groupscope::search::MapSearch;
use groupscope::theorems::Subject;
use proptest::prelude::*;

fn corpus(max_order: usize) -> Vec<(String, FiniteGroup)> {
    CORPUS
        .iter()
        .filter(|s| GroupSpec::parse(s).unwrap().ast.order() <= max_order)
        .map(|s| (s.to_string(), construct_str(s).unwrap()))
        .collect()
}

fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    // perm[old] = new
    let n = g.order();
    let mut table = vec![vec![0; n]; n];
    for a in g.elements() {
        for b in g.elements() {
            table[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    build_group(table).unwrap()
}

fn brute_hom_count(a: &FiniteGroup, b: &FiniteGroup) -> usize {
    let any = |_: usize, _: usize| true;
    MapSearch::new(a, b, false, &any).count()
}

fn all_abelian(max_exp: u32) -> Vec<Vec<u32>> {
    (0..=max_exp).flat_map(partitions).collect()
}

#[test]
fn catalog_tables_are_groups() {
    for (spec, g) in corpus(256) {
        let again = build_group(g.rows());
        assert!(again.is_ok(), "{spec}");
    }
}

#[test]
fn lower_central_series_is_descending_normal_and_terminates() {
    for (spec, g) in corpus(64) {
        let series = group::lower_central_series(&g, 8);
        for w in series.windows(2) {
            assert!(w[1].is_subset_of(&w[0]), "{spec}");
        }
        assert!(series.iter().all(|s| s.is_normal()), "{spec}");
        if let Ok(c) = group::nilpotency_class(&g) {
            assert!(group::gamma(&g, c + 1).is_trivial(), "{spec}");
            if c > 0 {
                assert!(!group::gamma(&g, c).is_trivial(), "{spec}");
            }
        }
    }
}

#[test]
fn quotient_exponents_divide_along_normal_chains() {
    for (spec, g) in corpus(32) {
        let normals = normal_subgroups(&g);
        let exps: Vec<usize> = normals
            .iter()
            .map(|n| quotient(&g, n).unwrap().group.exponent())
            .collect();
        for (i, h) in normals.iter().enumerate() {
            for (j, k) in normals.iter().enumerate() {
                if h.is_subset_of(k) {
                    assert_eq!(exps[i] % exps[j], 0, "{spec}");
                }
            }
        }
    }
}

#[test]
fn central_quotient_exponent_equals_derived_exponent_at_class_two() {
    for (spec, g) in corpus(256) {
        if group::nilpotency_class(&g) == Ok(2) {
            let zq = quotient(&g, &group::center(&g)).unwrap();
            assert_eq!(
                zq.group.exponent(),
                group::gamma(&g, 2).exponent(),
                "{spec}"
            );
        }
    }
}

#[test]
fn central_quotient_exponent_exceeds_last_term_for_dihedral_16() {
    let g = construct_str("D(8)").unwrap();
    assert_eq!(group::nilpotency_class(&g), Ok(3));
    let zq = quotient(&g, &group::center(&g)).unwrap();
    assert_eq!(zq.group.exponent(), 4);
    assert_eq!(group::gamma(&g, 3).exponent(), 2);
}

#[test]
fn abelian_factor_keeps_class_of_nontrivial_groups() {
    let ks = ["C(2)", "C(3)", "Ab(2; 1, 1)", "C(4)"].map(|s| construct_str(s).unwrap());
    for (spec, h) in corpus(32) {
        let Ok(c) = group::nilpotency_class(&h) else {
            continue;
        };
        for k in &ks {
            let p = direct_product(&[h.clone(), k.clone()]).unwrap();
            let pc = group::nilpotency_class(&p.product).unwrap();
            if h.order() == 1 {
                assert_eq!((c, pc), (0, usize::from(k.order() > 1)));
            } else {
                assert_eq!(pc, c, "{spec}");
            }
        }
    }
}

#[test]
fn products_factorize_center_and_series() {
    for spec in CORPUS.iter().filter(|s| s.contains(" x ")) {
        let s = Subject::parse(spec, &Limits::default()).unwrap();
        let p = s.product.unwrap();
        p.verify_factorization(4).unwrap();
        let z = group::center(&p.product);
        let parts: Vec<_> = p.factors.iter().map(group::center).collect();
        assert_eq!(z, p.product_subgroup(&parts).unwrap(), "{spec}");
        for n in 1..=4 {
            let parts: Vec<_> = p.factors.iter().map(|f| group::gamma(f, n)).collect();
            assert_eq!(
                group::gamma(&p.product, n),
                p.product_subgroup(&parts).unwrap(),
                "{spec}"
            );
        }
    }
}

#[test]
fn constructor_orders() {
    for n in 3..=16 {
        assert_eq!(catalog::dihedral(n).unwrap().order(), 2 * n);
    }
    for k in 3..=6 {
        assert_eq!(catalog::quaternion(1 << k).unwrap().order(), 1 << k);
    }
    for p in [3, 5] {
        let h = catalog::heisenberg(p).unwrap();
        assert_eq!(h.order() as u64, p * p * p);
        assert_eq!(group::center(&h).order() as u64, p);
        assert_eq!(group::gamma(&h, 2).order() as u64, p);
    }
}

#[test]
fn dsl_round_trip() {
    for spec in CORPUS {
        let parsed = GroupSpec::parse(spec).unwrap();
        let printed = parsed.canonical();
        assert_eq!(GroupSpec::parse(&printed).unwrap().canonical(), printed);
    }
}

#[test]
fn hom_order_matches_search_for_small_abelian_pairs() {
    for (p, max_exp) in [(2, 4), (3, 3)] {
        let groups: Vec<_> = all_abelian(max_exp)
            .into_iter()
            .map(|e| {
                (
                    AbelianPInvariants::from_exponents(p, e.clone()),
                    abelian_p_group(p, &e).unwrap(),
                )
            })
            .collect();
        for (ai, a) in &groups {
            for (bi, b) in &groups {
                assert_eq!(
                    hom_order(ai, bi).unwrap(),
                    brute_hom_count(a, b) as u128,
                    "{:?} -> {:?}",
                    ai.exponents,
                    bi.exponents
                );
            }
        }
    }
}

#[test]
fn hom_count_from_nonabelian_groups_uses_abelianization() {
    let targets: Vec<(u64, Vec<u32>)> = all_abelian(3)
        .into_iter()
        .map(|e| (2, e))
        .chain(all_abelian(2).into_iter().map(|e| (3, e)))
        .collect();
    for (spec, g) in corpus(32) {
        let Some((p, _)) = g.prime_power() else {
            continue;
        };
        let ab = abelian::abelian_invariants(&abelianization(&g).group).unwrap();
        for (q, e) in targets.iter().filter(|(q, _)| *q == p) {
            let a = abelian_p_group(*q, e).unwrap();
            let homs = enumerate_homs(&g, &a).unwrap();
            let inv = AbelianPInvariants::from_exponents(*q, e.clone());
            assert_eq!(
                homs.len() as u128,
                hom_order(&ab, &inv).unwrap(),
                "{spec} -> {e:?}"
            );
            assert_eq!(homs.len(), brute_hom_count(&g, &a), "{spec} -> {e:?}");
            if homs.len() <= 512 {
                homs.verify_group_law().unwrap();
            }
        }
    }
}

#[test]
fn quotient_homs_vanish_on_the_kernel() {
    for (spec, g) in corpus(16) {
        let z = group::center(&g);
        for n in normal_subgroups(&g) {
            if !z.is_subset_of(&n) {
                continue;
            }
            let q = quotient(&g, &n).unwrap();
            let homs = groupscope::hom::homs_from_quotient(&q, &z).unwrap();
            for f in &homs.members {
                for x in g.elements() {
                    let y = f.apply(q.project(x));
                    if n.contains(x) {
                        assert_eq!(y, 0, "{spec}");
                    }
                    for x2 in g.elements() {
                        let lhs = f.apply(q.project(g.mul(x, x2)));
                        let rhs = z.as_group().mul(y, f.apply(q.project(x2)));
                        assert_eq!(lhs, rhs, "{spec}");
                    }
                }
            }
        }
    }
}

#[test]
fn class_preserving_hom_sets_are_subgroups() {
    for (spec, g) in corpus(32) {
        let Ok(c) = group::nilpotency_class(&g) else {
            continue;
        };
        if c < 2 {
            continue;
        }
        for n in 2..=c {
            let h = group::center(&g);
            if !group::gamma(&g, n).is_subset_of(&h) {
                continue;
            }
            let homs = hom_c_subset(&g, &h, n).unwrap();
            homs.verify_group_law()
                .unwrap_or_else(|e| panic!("{spec} n={n}: {e}"));
        }
    }
}

fn is_subset(a: &[Automorphism], b: &[Automorphism]) -> bool {
    a.iter().all(|f| b.contains(f))
}

#[test]
fn automorphism_groups_are_closed_and_contain_inner() {
    for (spec, g) in corpus(32) {
        let all = aut::automorphism_group(&g).unwrap();
        assert!(aut::is_closed(&all), "{spec}");
        assert!(all.iter().all(|f| all.contains(&f.inverse())), "{spec}");
        for x in g.elements() {
            assert!(all.contains(&Automorphism::conjugation(&g, x)), "{spec}");
        }
    }
}

#[test]
fn automorphism_subgroup_containments() {
    for (spec, g) in corpus(32) {
        let z = group::center(&g);
        let cent = aut::autcent(&g).unwrap();
        let boxed = aut::aut_box(&g, &z, &group::gamma(&g, 2)).unwrap();
        assert_eq!(cent, boxed, "{spec}");

        let Ok(c) = group::nilpotency_class(&g) else {
            continue;
        };
        let mut prev = aut::aut_class_preserving(&g, 1).unwrap();
        for n in 2..=c.max(2) + 1 {
            let cur = aut::aut_class_preserving(&g, n).unwrap();
            assert!(is_subset(&cur, &prev), "{spec} n={n}");
            let b = aut::aut_box(&g, &group::gamma(&g, n), &z).unwrap();
            assert!(is_subset(&prev, &b), "{spec} n={n}");
            for &x in group::gamma(&g, n - 1).members() {
                assert!(
                    prev.contains(&Automorphism::conjugation(&g, x)),
                    "{spec} n={n}"
                );
            }
            prev = cur;
        }
    }
}

#[test]
fn hom_equality_criterion_breaks_only_for_trivial_source() {
    for p in [2u64, 3] {
        let all = all_abelian(3);
        for ge in &all {
            let gi = AbelianPInvariants::from_exponents(p, ge.clone());
            for ke in &all {
                let ki = AbelianPInvariants::from_exponents(p, ke.clone());
                for he in all
                    .iter()
                    .filter(|h| h.len() <= ke.len() && h.iter().zip(ke).all(|(a, b)| a <= b))
                {
                    let hi = AbelianPInvariants::from_exponents(p, he.clone());
                    let out = lemma26_test(&gi, &hi, &ki).unwrap();
                    let expected = !(ge.is_empty() && he.len() < ke.len());
                    assert_eq!(out.holds(), expected, "{ge:?} {he:?} {ke:?}");
                }
            }
        }
    }
}

fn invariants_strategy() -> impl Strategy<Value = (u64, Vec<u32>)> {
    prop_oneof![
        (1u32..=5)
            .prop_flat_map(|k| proptest::sample::select(partitions(k)).prop_map(|e| (2u64, e))),
        (1u32..=3)
            .prop_flat_map(|k| proptest::sample::select(partitions(k)).prop_map(|e| (3u64, e))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_survive_relabeling((p, e) in invariants_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = abelian_p_group(p, &e).unwrap();
        let mut perm: Vec<usize> = g.elements().collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let inv = abelian::abelian_invariants(&h).unwrap();
        prop_assert_eq!(inv.prime, Some(p));
        prop_assert_eq!(inv.exponents, e);
    }

    #[test]
    fn torsion_counts_match_exponents((p, e) in invariants_strategy()) {
        let g = abelian_p_group(p, &e).unwrap();
        let inv = abelian::abelian_invariants(&g).unwrap();
        for k in 0..=6u32 {
            let q = (p as usize).pow(k);
            let count = g.elements().filter(|&x| g.pow(x, q) == 0).count();
            let predicted: u32 = inv.exponents.iter().map(|&n| n.min(k)).sum();
            prop_assert_eq!(count, (p as usize).pow(predicted));
        }
    }

    #[test]
    fn abelian_invariants_of_random_relabeled_catalog_groups(idx in 0..CORPUS.len(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = construct_str(CORPUS[idx]).unwrap();
        prop_assume!(g.order() <= 64);
        let mut perm: Vec<usize> = g.elements().collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        prop_assert_eq!(group::nilpotency_class(&g).ok(), group::nilpotency_class(&h).ok());
        prop_assert_eq!(group::center(&g).order(), group::center(&h).order());
        let key = |x: &FiniteGroup| abelian::subgroup_invariants(&group::center(x)).ok().map(|i| (i.prime, i.exponents));
        prop_assert_eq!(key(&g), key(&h));
    }
}
