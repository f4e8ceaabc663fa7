mod common;

use common::{combinations, naive_left_factor, tiles_uniquely};
use lagfactor::catalog::catalog_up_to;
use lagfactor::factor::{find_all_complements, find_factorization, FactorizationOutcome, SearchOptions};
use lagfactor::group::left_coset_representatives;
use lagfactor::subset::{product_check, translate_left, translate_right};
use lagfactor::witness::all_subgroups;
use lagfactor::{is_left_factor, is_right_factor, Side, Subset};

#[test]
fn engine_matches_naive_oracle_up_to_order_12() {
    let mut checked = 0;
    for e in catalog_up_to(12) {
        let g = &e.group;
        let n = g.order();
        for d in (1..=n).filter(|d| n % d == 0) {
            for rest in combinations(n - 1, d - 1) {
                let a: Vec<usize> = std::iter::once(0).chain(rest.iter().map(|x| x + 1)).collect();
                let s = g.subset(a.iter().copied()).unwrap();
                let r = is_left_factor(g, &s).unwrap();
                assert_eq!(r.is_factor, naive_left_factor(g, &a), "{} {:?}", e.name, a);
                if let Some(b) = r.complement {
                    assert!(tiles_uniquely(g, &a, &b.to_vec()));
                } else {
                    assert!(r.exhausted);
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn verdicts_are_translation_invariant_up_to_order_8() {
    for e in catalog_up_to(8) {
        let g = &e.group;
        let n = g.order();
        for d in (1..=n).filter(|d| n % d == 0) {
            for a in combinations(n, d) {
                let s = g.subset(a).unwrap();
                let base = is_left_factor(g, &s).unwrap().is_factor;
                let right_base = is_right_factor(g, &s).unwrap().is_factor;
                for u in g.elements() {
                    assert_eq!(is_left_factor(g, &translate_left(g, u, &s)).unwrap().is_factor, base);
                    assert_eq!(is_left_factor(g, &translate_right(g, &s, u)).unwrap().is_factor, base);
                    assert_eq!(is_right_factor(g, &translate_left(g, u, &s)).unwrap().is_factor, right_base);
                }
            }
        }
    }
}

#[test]
fn subgroups_are_factors_with_coset_representatives() {
    for e in catalog_up_to(16) {
        let g = &e.group;
        for h in all_subgroups(g) {
            assert!(is_left_factor(g, &h).unwrap().is_factor, "{} {:?}", e.name, h);
            let reps = left_coset_representatives(g, &h).unwrap();
            assert_eq!(reps.len(), g.order() / h.len());
            let b = g.subset(reps).unwrap();
            assert!(product_check(g, &h, &b).is_factorization());
        }
    }
}

#[test]
fn all_complements_are_exactly_the_oracle_classes() {
    for e in catalog_up_to(8) {
        let g = &e.group;
        let n = g.order();
        for d in (2..n).filter(|d| n % d == 0) {
            for rest in combinations(n - 1, d - 1) {
                let a: Vec<usize> = std::iter::once(0).chain(rest.iter().map(|x| x + 1)).collect();
                let s = g.subset(a.iter().copied()).unwrap();
                let found = find_all_complements(g, &s, Side::Left).unwrap();
                // Oracle: all complements, grouped into classes {Bv}.
                let mut classes = std::collections::BTreeSet::new();
                for b in combinations(n, n / d) {
                    if tiles_uniquely(g, &a, &b) {
                        let bs = g.subset(b).unwrap();
                        let class: std::collections::BTreeSet<u64> =
                            g.elements().map(|v| translate_right(g, &bs, v).bits()).collect();
                        classes.insert(class);
                    }
                }
                assert_eq!(found.len(), classes.len(), "{} {:?}", e.name, a);
                for b in &found {
                    assert!(b.contains(0));
                    assert!(classes.iter().any(|c| c.contains(&b.bits())));
                }
                assert_eq!(found.is_empty(), !is_left_factor(g, &s).unwrap().is_factor);
            }
        }
    }
}

#[test]
fn right_complements_verify() {
    for e in catalog_up_to(8) {
        let g = &e.group;
        if g.order() % 2 != 0 {
            continue;
        }
        for x in 1..g.order() {
            let s = g.subset([0, x]).unwrap();
            for b in find_all_complements(g, &s, Side::Right).unwrap() {
                assert!(product_check(g, &b, &s).is_factorization());
            }
        }
    }
}

#[test]
fn two_part_factorizations_match_factor_existence() {
    for e in catalog_up_to(8) {
        let g = &e.group;
        let n = g.order();
        for m in (1..=n).filter(|m| n % m == 0) {
            let some_factor = combinations(n, m).iter().any(|a| naive_left_factor(g, a));
            let r = find_factorization(g, &[m, n / m], SearchOptions::default()).unwrap();
            match r.outcome {
                FactorizationOutcome::Found(f) => {
                    assert!(some_factor);
                    assert!(f.verify(g));
                    assert!(f.parts.iter().all(|p| p.contains(0)));
                }
                FactorizationOutcome::Absent => assert!(!some_factor, "{} {m}", e.name),
                FactorizationOutcome::Unknown => unreachable!(),
            }
        }
    }
}

#[test]
fn k_factorization_examples() {
    let parse = |s| lagfactor::parse_group_spec(s).unwrap();
    for (spec, sizes) in [("C8", vec![2, 2, 2]), ("C2^3", vec![2, 2, 2]), ("C3^2", vec![3, 3]), ("S3", vec![2, 3]), ("S3", vec![3, 2])] {
        let g = parse(spec);
        let r = find_factorization(&g, &sizes, SearchOptions::default()).unwrap();
        let FactorizationOutcome::Found(f) = r.outcome else { panic!("{spec} {sizes:?}") };
        // independent check by brute product
        let mut products = vec![0usize];
        for p in &f.parts {
            let g = &g;
            products = products.iter().flat_map(|&x| p.iter().map(move |y| g.mul(x, y))).collect();
        }
        products.sort_unstable();
        assert_eq!(products, (0..g.order()).collect::<Vec<_>>());
    }
    let singleton = find_factorization(&parse("C1"), &[1], SearchOptions::default()).unwrap();
    assert_eq!(
        singleton.outcome,
        FactorizationOutcome::Found(lagfactor::factor::KFactorization { parts: vec![Subset::full(1)], sizes: vec![1] })
    );
}
