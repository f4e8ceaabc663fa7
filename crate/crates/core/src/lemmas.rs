//! Exhaustive checks of the factor and non-factor constructions over the
//! catalog, summarized per construction and group.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, parse_group_spec, CATALOG_BOUND};
use crate::construct::{complement_for_3subset_elem3, complement_for_4subset_elem2, complement_for_order2_subset};
use crate::factor::is_left_factor;
use crate::group::{element_order, left_coset_representatives, GroupTable};
use crate::subset::{enumerate_lagrange_subsets, product_check, Subset};
use crate::witness::{
    all_subgroups, build_main_witness, build_order8_witness, enumerate_main_witness_params, order8_witness_pairs,
    theorem_case_witness, TheoremCase,
};

/// Seed for the sampled 3-subsets of `C3^3`.
pub const SAMPLE_SEED: u64 = 0x00c3_c3c3;
pub const C3_CUBED_SAMPLE: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSummary {
    pub lemma: String,
    pub group: String,
    pub checked: u64,
    pub passed: u64,
}

impl LemmaSummary {
    fn new(lemma: &str, group: &str) -> Self {
        LemmaSummary { lemma: lemma.to_string(), group: group.to_string(), checked: 0, passed: 0 }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        self.passed += u64::from(ok);
    }

    pub fn ok(&self) -> bool {
        self.checked == self.passed
    }
}

fn group(spec: &str) -> GroupTable {
    parse_group_spec(spec).expect("catalog spec")
}

/// Subgroups are factors, with their coset representatives as complement.
pub fn subgroup_suite() -> Vec<LemmaSummary> {
    catalog()
        .into_iter()
        .filter(|e| e.group.order() <= CATALOG_BOUND)
        .map(|e| {
            let g = &e.group;
            let mut s = LemmaSummary::new("subgroup-lifting", e.name);
            for h in all_subgroups(g) {
                let reps = left_coset_representatives(g, &h).expect("subgroup");
                let b = g.subset(reps).expect("in range");
                let ok = product_check(g, &h, &b).is_factorization() && is_left_factor(g, &h).expect("nonempty").is_factor;
                s.record(ok);
            }
            s
        })
        .collect()
}

/// `{e, x}` is a factor exactly when `x` has even order; even-order cases
/// also get the constructive complement.
pub fn order_two_suite() -> Vec<LemmaSummary> {
    catalog()
        .into_iter()
        .filter(|e| e.group.order() % 2 == 0 && e.group.order() <= CATALOG_BOUND)
        .map(|e| {
            let g = &e.group;
            let mut s = LemmaSummary::new("pair-even-order", e.name);
            for x in g.elements().skip(1) {
                let a = g.subset([0, x]).expect("in range");
                let engine = is_left_factor(g, &a).expect("nonempty").is_factor;
                let even = element_order(g, x).is_multiple_of(2);
                let constructive = match complement_for_order2_subset(g, x) {
                    Ok(b) => product_check(g, &a, &b).is_factorization(),
                    Err(_) => false,
                };
                s.record(engine == even && constructive == even);
            }
            s
        })
        .collect()
}

fn constructive_agrees(g: &GroupTable, a: &Subset, complement: Option<Subset>) -> bool {
    let engine = is_left_factor(g, a).expect("nonempty").is_factor;
    engine && complement.is_some_and(|b| product_check(g, a, &b).is_factorization())
}

/// Identity-containing 4-subsets of elementary abelian 2-groups.
pub fn four_subset_suite() -> Vec<LemmaSummary> {
    ["C2^2", "C2^3", "C2^4"]
        .iter()
        .map(|&name| {
            let g = group(name);
            let mut s = LemmaSummary::new("elementary-2-four-subsets", name);
            for a in enumerate_lagrange_subsets(&g, 4).expect("4 divides") {
                let b = complement_for_4subset_elem2(&g, &a).ok().map(|c| c.complement);
                s.record(constructive_agrees(&g, &a, b));
            }
            s
        })
        .collect()
}

/// A fixed pseudo-random sample of all 3-subsets of `g`.
pub fn sampled_three_subsets(g: &GroupTable, count: usize, seed: u64) -> Vec<Subset> {
    let n = g.order();
    let mut all = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                all.push(g.subset([x, y, z]).expect("in range"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = sample(&mut rng, all.len(), count.min(all.len())).into_vec();
    picks.sort_unstable();
    picks.into_iter().map(|i| all[i]).collect()
}

/// 3-subsets of elementary abelian 3-groups: all identity-containing ones
/// in `C3^2`, a seeded sample in `C3^3`.
pub fn three_subset_suite() -> Vec<LemmaSummary> {
    let mut out = Vec::new();
    let c3sq = group("C3^2");
    let mut s = LemmaSummary::new("elementary-3-three-subsets", "C3^2");
    for a in enumerate_lagrange_subsets(&c3sq, 3).expect("3 divides") {
        let b = complement_for_3subset_elem3(&c3sq, &a).ok().map(|c| c.complement);
        s.record(constructive_agrees(&c3sq, &a, b));
    }
    out.push(s);

    let c3cube = group("C3^3");
    let mut s = LemmaSummary::new("elementary-3-three-subsets", "C3^3");
    for a in sampled_three_subsets(&c3cube, C3_CUBED_SAMPLE, SAMPLE_SEED) {
        let b = complement_for_3subset_elem3(&c3cube, &a).ok().map(|c| c.complement);
        s.record(constructive_agrees(&c3cube, &a, b));
    }
    out.push(s);
    out
}

/// Every parameter tuple of the subgroup-based witness yields a non-factor.
pub fn main_witness_suite() -> Vec<LemmaSummary> {
    catalog()
        .into_iter()
        .map(|e| {
            let g = &e.group;
            let mut s = LemmaSummary::new("large-subgroup-witness", e.name);
            for p in enumerate_main_witness_params(g) {
                let a = build_main_witness(g, &p).expect("enumerated params are valid");
                let r = is_left_factor(g, &a).expect("nonempty");
                s.record(!r.is_factor && r.exhausted && a.len() == p.h.len());
            }
            s
        })
        .collect()
}

/// `{a, a², a³, b}` in the order-8 groups.
pub fn order8_suite() -> Vec<LemmaSummary> {
    ["Q8", "C4xC2", "D4", "C8", "C2^3"]
        .iter()
        .map(|&name| {
            let g = group(name);
            let mut s = LemmaSummary::new("order-8-witness", name);
            for (a, b) in order8_witness_pairs(&g) {
                let w = build_order8_witness(&g, a, b).expect("valid pair");
                let r = is_left_factor(&g, &w).expect("nonempty");
                s.record(!r.is_factor && r.exhausted);
            }
            s
        })
        .collect()
}

/// The three explicit sets for `D4`, `C8`, `C9`.
pub fn theorem_case_suite() -> Vec<LemmaSummary> {
    TheoremCase::ALL
        .iter()
        .map(|&case| {
            let (g, a) = theorem_case_witness(case);
            let mut s = LemmaSummary::new("explicit-case-witness", case.spec());
            let r = is_left_factor(&g, &a).expect("nonempty");
            s.record(g.order() % a.len() == 0 && !r.is_factor && r.exhausted);
            s
        })
        .collect()
}

pub fn run_all() -> Vec<LemmaSummary> {
    let mut out = subgroup_suite();
    out.extend(order_two_suite());
    out.extend(four_subset_suite());
    out.extend(three_subset_suite());
    out.extend(main_witness_suite());
    out.extend(order8_suite());
    out.extend(theorem_case_suite());
    out
}
