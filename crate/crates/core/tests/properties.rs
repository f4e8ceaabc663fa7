use lagfactor::catalog::{catalog, catalog_up_to};
use lagfactor::group::{direct_product, element_order, generated_subgroup, is_subgroup, parse_table_text};
use lagfactor::subset::{enumerate_lagrange_subsets, normalize_to_identity, product_check};
use lagfactor::{GroupTable, Subset};
use proptest::prelude::*;

fn groups() -> Vec<GroupTable> {
    catalog().into_iter().map(|e| e.group).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// (catalog index, raw bits) pairs; bits are masked to the group order.
fn group_and_bits() -> impl Strategy<Value = (usize, u64)> {
    (0..catalog().len(), any::<u64>())
}

fn subset_of(g: &GroupTable, bits: u64) -> Subset {
    let mask = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    Subset::from_bits(g.order(), bits & mask).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn generated_subgroup_is_a_subgroup((gi, bits) in group_and_bits()) {
        let g = &groups()[gi];
        let h = generated_subgroup(g, &subset_of(g, bits));
        prop_assert!(is_subgroup(g, &h));
        prop_assert!(subset_of(g, bits).is_subset_of(&h));
        prop_assert_eq!(g.order() % h.len(), 0);
    }

    #[test]
    fn normalization_is_idempotent((gi, bits) in group_and_bits()) {
        let g = &groups()[gi];
        let a = subset_of(g, bits);
        prop_assume!(!a.is_empty());
        let once = normalize_to_identity(g, &a).unwrap();
        prop_assert!(once.contains(0));
        prop_assert_eq!(once.len(), a.len());
        prop_assert_eq!(normalize_to_identity(g, &once).unwrap(), once);
    }

    #[test]
    fn product_check_is_consistent((gi, x) in group_and_bits(), y in any::<u64>()) {
        let g = &groups()[gi];
        let (a, b) = (subset_of(g, x), subset_of(g, y));
        prop_assume!(!a.is_empty() && !b.is_empty());
        let pc = product_check(g, &a, &b);
        if pc.unique {
            prop_assert_eq!(pc.coverage.len(), a.len() * b.len());
            prop_assert!(pc.collision.is_none());
        } else {
            let c = pc.collision.unwrap();
            prop_assert_ne!(c.first, c.second);
            prop_assert_eq!(g.mul(c.first.0, c.first.1), c.product);
            prop_assert_eq!(g.mul(c.second.0, c.second.1), c.product);
            prop_assert!(pc.coverage.len() < a.len() * b.len());
        }
    }
}

#[test]
fn lagrange_for_singleton_and_pair_seeds() {
    for g in groups() {
        for x in g.elements() {
            for y in x..g.order() {
                let h = generated_subgroup(&g, &g.subset([x, y]).unwrap());
                assert_eq!(g.order() % h.len(), 0);
            }
        }
    }
}

#[test]
fn inverse_has_same_order() {
    for g in groups() {
        for x in g.elements() {
            let o = element_order(&g, x);
            assert_eq!(o, element_order(&g, g.inverse(x)));
            assert_eq!(g.order() % o, 0);
            assert_eq!(g.mul(x, g.inverse(x)), 0);
            assert_eq!(g.mul(g.inverse(x), x), 0);
        }
    }
}

#[test]
fn table_text_round_trips_for_catalog() {
    for e in catalog() {
        let back = parse_table_text(&e.group.to_table_text()).unwrap();
        assert_eq!(back.rows(), e.group.rows(), "{}", e.name);
        assert_eq!(back.names(), e.group.names(), "{}", e.name);
    }
}

#[test]
fn direct_product_orders_are_lcms() {
    let small = catalog_up_to(8);
    for a in &small {
        for b in &small {
            if a.group.order() * b.group.order() > 16 {
                continue;
            }
            let p = direct_product(&a.group, &b.group).unwrap();
            assert_eq!(p.order(), a.group.order() * b.group.order());
            let nb = b.group.order();
            for x in p.elements() {
                let (oa, ob) = (element_order(&a.group, x / nb), element_order(&b.group, x % nb));
                assert_eq!(element_order(&p, x), oa * ob / gcd(oa, ob), "{}x{} {x}", a.name, b.name);
            }
        }
    }
}

#[test]
fn lagrange_subset_counts_are_binomial() {
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for e in catalog() {
        let n = e.group.order();
        if n > 16 {
            continue;
        }
        for d in (1..=n).filter(|d| n % d == 0) {
            assert_eq!(enumerate_lagrange_subsets(&e.group, d).unwrap().count(), binom(n - 1, d - 1), "{} {d}", e.name);
        }
    }
}
