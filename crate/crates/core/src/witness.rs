//! Explicit Lagrange subsets that are not left factors.
//!
//! Builders here only construct the sets. Whether they are factors is
//! always decided by the exact-cover engine.

use std::collections::BTreeSet;

use crate::catalog::parse_group_spec;
use crate::error::{Error, Result};
use crate::group::{element_order, generated_subgroup, GroupTable};
use crate::subset::Subset;

/// Parameters of the subgroup-based witness `A = (H ∖ {e, h0}) ∪ {g, h1·g}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MainWitnessParams {
    /// Proper subgroup of order at least 5.
    pub h: Subset,
    pub h0: usize,
    /// In `H`, outside `{e, h0, h0⁻¹}`.
    pub h1: usize,
    /// Outside `H`.
    pub g_elt: usize,
}

impl MainWitnessParams {
    pub fn validate(&self, g: &GroupTable) -> Result<()> {
        let n = g.order();
        let bad = |m: &str| Err(Error::BadParams(m.to_string()));
        if self.h.group_order() != n || [self.h0, self.h1, self.g_elt].iter().any(|&x| x >= n) {
            return bad("element or subset outside the group");
        }
        if !crate::group::is_subgroup(g, &self.h) {
            return bad("H is not a subgroup");
        }
        if self.h.len() == n {
            return bad("H must be a proper subgroup");
        }
        if self.h.len() < 5 {
            return bad("|H| must be at least 5");
        }
        if self.h0 == 0 || !self.h.contains(self.h0) {
            return bad("h0 must be a non-identity element of H");
        }
        if !self.h.contains(self.h1) {
            return bad("h1 must lie in H");
        }
        if self.h1 == 0 || self.h1 == self.h0 || self.h1 == g.inverse(self.h0) {
            return bad("h1 must avoid {e, h0, h0^-1}");
        }
        if self.h.contains(self.g_elt) {
            return bad("g must lie outside H");
        }
        Ok(())
    }
}

/// `A = (H ∖ {e, h0}) ∪ {g, h1·g}`; `|A| = |H|`.
pub fn build_main_witness(g: &GroupTable, p: &MainWitnessParams) -> Result<Subset> {
    p.validate(g)?;
    let mut a = p.h;
    a.remove(0);
    a.remove(p.h0);
    a.insert(p.g_elt);
    a.insert(g.mul(p.h1, p.g_elt));
    assert_eq!(a.len(), p.h.len());
    Ok(a)
}

/// Every subgroup of `g`: closures of all sets of at most two elements,
/// then extended by single elements until nothing new appears. Sorted by
/// size, then by element list.
pub fn all_subgroups(g: &GroupTable) -> Vec<Subset> {
    let n = g.order();
    let mut found = BTreeSet::new();
    for x in 0..n {
        for y in x..n {
            found.insert(generated_subgroup(g, &Subset::from_indices(n, [x, y]).expect("in range")));
        }
    }
    let mut frontier: Vec<Subset> = found.iter().copied().collect();
    while let Some(h) = frontier.pop() {
        for x in h.complement().iter() {
            let mut s = h;
            s.insert(x);
            let k = generated_subgroup(g, &s);
            if found.insert(k) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subset> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

/// Every admissible parameter tuple, over proper subgroups of order at
/// least 5 in ascending order, then `h0`, `h1`, `g` ascending.
pub fn enumerate_main_witness_params(g: &GroupTable) -> impl Iterator<Item = MainWitnessParams> + '_ {
    let n = g.order();
    all_subgroups(g)
        .into_iter()
        .filter(move |h| h.len() >= 5 && h.len() < n)
        .flat_map(move |h| {
            h.iter().filter(|&h0| h0 != 0).flat_map(move |h0| {
                let inv = g.inverse(h0);
                h.iter().filter(move |&h1| h1 != 0 && h1 != h0 && h1 != inv).flat_map(move |h1| {
                    h.complement().iter().map(move |g_elt| MainWitnessParams { h, h0, h1, g_elt })
                })
            })
        })
}

/// `{a, a², a³, b}` for a group of order 8 and elements of order 4 with
/// `⟨a⟩ ≠ ⟨b⟩`.
pub fn build_order8_witness(g: &GroupTable, a: usize, b: usize) -> Result<Subset> {
    if g.order() != 8 {
        return Err(Error::BadParams(format!("group has order {}, expected 8", g.order())));
    }
    if a >= 8 || b >= 8 {
        return Err(Error::BadParams("element outside the group".into()));
    }
    if element_order(g, a) != 4 || element_order(g, b) != 4 {
        return Err(Error::BadParams("a and b must have order 4".into()));
    }
    let cyc = |x| generated_subgroup(g, &Subset::singleton(8, x));
    if cyc(a) == cyc(b) {
        return Err(Error::BadParams("<a> and <b> must differ".into()));
    }
    let a2 = g.mul(a, a);
    Subset::from_indices(8, [a, a2, g.mul(a2, a), b])
}

/// Ordered pairs of order-4 elements generating different cyclic subgroups.
pub fn order8_witness_pairs(g: &GroupTable) -> Vec<(usize, usize)> {
    if g.order() != 8 {
        return Vec::new();
    }
    let fours: Vec<usize> = g.elements().filter(|&x| element_order(g, x) == 4).collect();
    let cyc = |x| generated_subgroup(g, &Subset::singleton(8, x));
    let mut out = Vec::new();
    for &a in &fours {
        for &b in &fours {
            if cyc(a) != cyc(b) {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    D4,
    C8,
    C9,
}

impl TheoremCase {
    pub const ALL: [TheoremCase; 3] = [TheoremCase::D4, TheoremCase::C8, TheoremCase::C9];

    pub fn spec(self) -> &'static str {
        match self {
            TheoremCase::D4 => "D4",
            TheoremCase::C8 => "C8",
            TheoremCase::C9 => "C9",
        }
    }

    fn subset_text(self) -> &'static str {
        match self {
            TheoremCase::D4 => "{a,a^2,b,a^2b}",
            TheoremCase::C8 => "{a,a^2,a^3,a^5}",
            TheoremCase::C9 => "{a,a^2,a^4}",
        }
    }
}

/// The explicit non-factor sets for `D4`, `C8` and `C9`.
pub fn theorem_case_witness(case: TheoremCase) -> (GroupTable, Subset) {
    let g = parse_group_spec(case.spec()).expect("catalog group");
    let a = g.parse_subset(case.subset_text()).expect("names resolve");
    (g, a)
}
