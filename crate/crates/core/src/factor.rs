//! Factor decisions by exact cover over group translates.
//!
//! A subset `A` is a left factor of `G` when some `B` makes the translates
//! `{Ab : b ∈ B}` partition `G`. The search always branches on the smallest
//! uncovered element and tries candidate translates in ascending order of
//! `b`, so the first branch covers the identity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subset::{identity_subsets, product_check, translate_left, translate_right, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[default]
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Why a search returned no complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Refusal {
    /// `|A|` does not divide `|G|`; no search was run.
    SizeNotDividing,
    /// Every branch was visited.
    Exhausted,
    /// The node budget ran out first.
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Factor,
    NotFactor,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorResult {
    pub is_factor: bool,
    pub complement: Option<Subset>,
    pub side: Side,
    pub nodes_explored: u64,
    pub exhausted: bool,
    pub refusal: Option<Refusal>,
}

impl FactorResult {
    pub fn verdict(&self) -> Verdict {
        match (self.is_factor, self.exhausted) {
            (true, _) => Verdict::Factor,
            (false, true) => Verdict::NotFactor,
            (false, false) => Verdict::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many search nodes and report an unknown verdict.
    pub node_budget: Option<u64>,
}

/// Exact-cover search over the `n` translates of one fixed set.
struct TileSearch {
    order: usize,
    tiles: Vec<Subset>,
    // candidates[x]: every b whose tile contains x, ascending
    candidates: Vec<Vec<usize>>,
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
}

impl TileSearch {
    fn new(g: &GroupTable, a: &Subset, side: Side, budget: Option<u64>) -> Self {
        let n = g.order();
        let tiles: Vec<Subset> = (0..n)
            .map(|b| match side {
                Side::Left => translate_right(g, a, b),
                Side::Right => translate_left(g, b, a),
            })
            .collect();
        let mut candidates = vec![Vec::with_capacity(a.len()); n];
        for (b, tile) in tiles.iter().enumerate() {
            for x in tile {
                candidates[x].push(b);
            }
        }
        TileSearch { order: n, tiles, candidates, nodes: 0, budget, out_of_budget: false }
    }

    /// Depth-first search. `visit` is called with each complete cover and
    /// returns `true` to stop the search.
    fn run(&mut self, covered: Subset, chosen: &mut Subset, visit: &mut dyn FnMut(Subset) -> bool) -> bool {
        self.nodes += 1;
        if let Some(limit) = self.budget {
            if self.nodes > limit {
                self.out_of_budget = true;
                return true;
            }
        }
        let Some(x) = covered.complement().first() else {
            return visit(*chosen);
        };
        for i in 0..self.candidates[x].len() {
            let b = self.candidates[x][i];
            let tile = self.tiles[b];
            if tile.is_disjoint(&covered) {
                chosen.insert(b);
                let stop = self.run(covered.union(&tile), chosen, visit);
                chosen.remove(b);
                if stop {
                    return true;
                }
            }
        }
        false
    }

    fn empty(&self) -> Subset {
        Subset::empty(self.order)
    }
}

fn verify_complement(g: &GroupTable, a: &Subset, b: &Subset, side: Side) -> bool {
    match side {
        Side::Left => product_check(g, a, b).is_factorization(),
        Side::Right => product_check(g, b, a).is_factorization(),
    }
}

/// Decides whether `A` is a factor on the given side, returning a verified
/// complement when it is.
pub fn is_factor(g: &GroupTable, a: &Subset, side: Side, opts: SearchOptions) -> Result<FactorResult> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if a.group_order() != g.order() {
        return Err(Error::ElementOutOfRange { index: a.group_order(), order: g.order() });
    }
    if !g.order().is_multiple_of(a.len()) {
        return Ok(FactorResult {
            is_factor: false,
            complement: None,
            side,
            nodes_explored: 0,
            exhausted: true,
            refusal: Some(Refusal::SizeNotDividing),
        });
    }
    let mut search = TileSearch::new(g, a, side, opts.node_budget);
    let mut found = None;
    let mut chosen = search.empty();
    search.run(search.empty(), &mut chosen, &mut |b| {
        found = Some(b);
        true
    });
    if let Some(b) = found {
        assert!(verify_complement(g, a, &b, side), "exact cover produced an invalid complement");
    }
    let exhausted = !search.out_of_budget;
    Ok(FactorResult {
        is_factor: found.is_some(),
        complement: found,
        side,
        nodes_explored: search.nodes,
        exhausted: exhausted || found.is_some(),
        refusal: match (found, exhausted) {
            (Some(_), _) => None,
            (None, true) => Some(Refusal::Exhausted),
            (None, false) => Some(Refusal::BudgetExceeded),
        },
    })
}

/// Is there a `B` with every `x ∈ G` uniquely `x = ab`?
pub fn is_left_factor(g: &GroupTable, a: &Subset) -> Result<FactorResult> {
    is_factor(g, a, Side::Left, SearchOptions::default())
}

/// Is there a `B` with every `x ∈ G` uniquely `x = ba`?
pub fn is_right_factor(g: &GroupTable, a: &Subset) -> Result<FactorResult> {
    is_factor(g, a, Side::Right, SearchOptions::default())
}

/// Every complement of `A`, one per translation class: for left factors the
/// classes are `{Bv}`, for right factors `{vB}`. Each representative
/// contains the identity and is the bitwise-smallest member of its class
/// with that property. Sorted by ascending element list.
pub fn find_all_complements(g: &GroupTable, a: &Subset, side: Side) -> Result<Vec<Subset>> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !g.order().is_multiple_of(a.len()) {
        return Err(Error::NotLagrange { size: a.len(), order: g.order() });
    }
    let mut search = TileSearch::new(g, a, side, None);
    let mut found = Vec::new();
    let mut chosen = Subset::singleton(g.order(), 0);
    let start = search.tiles[0];
    search.run(start, &mut chosen, &mut |b| {
        found.push(b);
        false
    });
    let canonical = |b: &Subset| {
        b.iter()
            .map(|x| match side {
                Side::Left => translate_right(g, b, g.inverse(x)).bits(),
                Side::Right => translate_left(g, g.inverse(x), b).bits(),
            })
            .min()
            .expect("nonempty complement")
    };
    let mut reps: Vec<Subset> = found.into_iter().filter(|b| canonical(b) == b.bits()).collect();
    for b in &reps {
        assert!(verify_complement(g, a, b, side));
    }
    reps.sort_by_key(|b| b.to_vec());
    reps.dedup();
    Ok(reps)
}

/// Ordered parts `A1, ..., Ak` whose product map is a bijection onto `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFactorization {
    pub parts: Vec<Subset>,
    pub sizes: Vec<usize>,
}

impl KFactorization {
    /// Multiplies out every tuple and checks each element of `G` appears
    /// exactly once.
    pub fn verify(&self, g: &GroupTable) -> bool {
        let n = g.order();
        if self.parts.iter().map(Subset::len).ne(self.sizes.iter().copied()) {
            return false;
        }
        let mut products = vec![0usize];
        for part in &self.parts {
            products = products.iter().flat_map(|&p| part.iter().map(move |x| g.mul(p, x))).collect();
        }
        if products.len() != n {
            return false;
        }
        let mut seen = Subset::empty(n);
        for p in products {
            if seen.contains(p) {
                return false;
            }
            seen.insert(p);
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationOutcome {
    Found(KFactorization),
    /// The search space was exhausted without a solution.
    Absent,
    /// The node budget ran out.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSearch {
    pub outcome: FactorizationOutcome,
    pub nodes_explored: u64,
}

struct KSearch<'g> {
    g: &'g GroupTable,
    sizes: &'g [usize],
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
}

impl KSearch<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if matches!(self.budget, Some(limit) if self.nodes > limit) {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    /// Fills part `level` given the prefix product set `prefix`.
    fn part(&mut self, level: usize, prefix: Subset, parts: &mut Vec<Subset>) -> Option<Vec<Subset>> {
        if self.tick() {
            return None;
        }
        if level + 1 == self.sizes.len() {
            // The last part is a complement of the prefix product set.
            let remaining = self.budget.map(|b| b.saturating_sub(self.nodes));
            let res = is_factor(self.g, &prefix, Side::Left, SearchOptions { node_budget: remaining })
                .expect("prefix is nonempty");
            self.nodes += res.nodes_explored;
            if !res.exhausted {
                self.out_of_budget = true;
                return None;
            }
            let b = res.complement?;
            // G·v = G, so a right translate of the last part still works.
            let last = translate_right(self.g, &b, self.g.inverse(b.first().expect("nonempty")));
            let mut out = parts.clone();
            out.push(last);
            return Some(out);
        }
        let size = self.sizes[level];
        let mut chosen = Subset::singleton(self.g.order(), 0);
        self.extend(level, prefix, &mut chosen, prefix, 1, size, parts)
    }

    /// Grows the current part in ascending index order, keeping the
    /// translates `prefix·a` pairwise disjoint.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        level: usize,
        prefix: Subset,
        chosen: &mut Subset,
        cover: Subset,
        next: usize,
        size: usize,
        parts: &mut Vec<Subset>,
    ) -> Option<Vec<Subset>> {
        if chosen.len() == size {
            parts.push(*chosen);
            let found = self.part(level + 1, cover, parts);
            parts.pop();
            return found;
        }
        let n = self.g.order();
        let missing = size - chosen.len();
        for x in next..n {
            if n - x < missing {
                break;
            }
            if self.tick() {
                return None;
            }
            let tile = translate_right(self.g, &prefix, x);
            if tile.is_disjoint(&cover) {
                chosen.insert(x);
                let found = self.extend(level, prefix, chosen, cover.union(&tile), x + 1, size, parts);
                chosen.remove(x);
                if found.is_some() || self.out_of_budget {
                    return found;
                }
            }
        }
        None
    }
}

/// Searches for `G = A1 A2 ⋯ Ak` with `|Ai| = sizes[i]` and unique
/// representation. Every part is normalized to contain the identity: a left
/// translate fixes `A1`, and replacing `(Ai, Ai+1)` by `(Ai·u, u⁻¹·Ai+1)`
/// preserves the product.
pub fn find_factorization(g: &GroupTable, sizes: &[usize], opts: SearchOptions) -> Result<FactorizationSearch> {
    let product = sizes.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m)).unwrap_or(usize::MAX);
    if sizes.is_empty() || product != g.order() {
        return Err(Error::SizeMismatch { product: if sizes.is_empty() { 0 } else { product }, order: g.order() });
    }
    let mut search = KSearch { g, sizes, nodes: 0, budget: opts.node_budget, out_of_budget: false };
    let found = search.part(0, Subset::singleton(g.order(), 0), &mut Vec::new());
    let outcome = match found {
        Some(parts) => {
            let fact = KFactorization { parts, sizes: sizes.to_vec() };
            assert!(fact.verify(g), "search produced an invalid factorization");
            FactorizationOutcome::Found(fact)
        }
        None if search.out_of_budget => FactorizationOutcome::Unknown,
        None => FactorizationOutcome::Absent,
    };
    Ok(FactorizationSearch { outcome, nodes_explored: search.nodes })
}

/// Identity-containing Lagrange subsets of size `d`, paired with whether each
/// is a left factor.
pub fn left_factor_verdicts(g: &GroupTable, d: usize) -> impl Iterator<Item = (Subset, FactorResult)> + '_ {
    identity_subsets(g.order(), d).map(move |s| {
        let r = is_left_factor(g, &s).expect("nonempty subset");
        (s, r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a4, parse_group_spec};
    use crate::group::{build_cyclic, build_dihedral};

    #[test]
    fn basic_left_factors() {
        let c4 = build_cyclic(4).unwrap();
        let r = is_left_factor(&c4, &c4.subset([0, 1]).unwrap()).unwrap();
        assert!(r.is_factor);
        assert_eq!(r.complement.unwrap(), c4.subset([0, 2]).unwrap());
        assert_eq!(r.verdict(), Verdict::Factor);

        for spec in ["C1", "C6", "D4", "A4"] {
            let g = parse_group_spec(spec).unwrap();
            let r = is_left_factor(&g, &g.full()).unwrap();
            assert_eq!(r.complement.unwrap(), Subset::singleton(g.order(), 0));
        }

        let c9 = build_cyclic(9).unwrap();
        let r = is_left_factor(&c9, &c9.subset([1, 2, 4]).unwrap()).unwrap();
        assert!(!r.is_factor && r.exhausted);
        assert_eq!(r.refusal, Some(Refusal::Exhausted));
        assert!(r.nodes_explored > 0);
    }

    #[test]
    fn size_not_dividing_skips_search() {
        let c4 = build_cyclic(4).unwrap();
        let r = is_left_factor(&c4, &c4.subset([0, 1, 2]).unwrap()).unwrap();
        assert_eq!(r.refusal, Some(Refusal::SizeNotDividing));
        assert_eq!(r.nodes_explored, 0);
        assert!(r.exhausted);
        assert_eq!(is_left_factor(&c4, &Subset::empty(4)).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn node_budget_gives_unknown() {
        let c9 = build_cyclic(9).unwrap();
        let a = c9.subset([1, 2, 4]).unwrap();
        let r = is_factor(&c9, &a, Side::Left, SearchOptions { node_budget: Some(1) }).unwrap();
        assert_eq!(r.verdict(), Verdict::Unknown);
        assert_eq!(r.refusal, Some(Refusal::BudgetExceeded));
    }

    #[test]
    fn right_factors() {
        let c6 = build_cyclic(6).unwrap();
        for d in [1, 2, 3, 6] {
            for s in identity_subsets(6, d) {
                assert_eq!(is_left_factor(&c6, &s).unwrap().is_factor, is_right_factor(&c6, &s).unwrap().is_factor);
            }
        }
        let d4 = build_dihedral(4).unwrap();
        let r = is_right_factor(&d4, &Subset::singleton(8, 0)).unwrap();
        assert_eq!(r.complement.unwrap(), d4.full());
        let witness = d4.subset([1, 2, 4, 6]).unwrap();
        let right = is_right_factor(&d4, &witness).unwrap();
        assert!(right.exhausted);
        if let Some(b) = right.complement {
            assert!(product_check(&d4, &b, &witness).is_factorization());
        }
    }

    #[test]
    fn all_complements() {
        let c4 = build_cyclic(4).unwrap();
        let comps = find_all_complements(&c4, &c4.subset([0, 2]).unwrap(), Side::Left).unwrap();
        assert!(comps.contains(&c4.subset([0, 1]).unwrap()));
        for g in [build_cyclic(6).unwrap(), build_dihedral(4).unwrap()] {
            assert_eq!(find_all_complements(&g, &g.full(), Side::Left).unwrap(), vec![Subset::singleton(g.order(), 0)]);
        }
        let c9 = build_cyclic(9).unwrap();
        assert!(find_all_complements(&c9, &c9.subset([1, 2, 4]).unwrap(), Side::Left).unwrap().is_empty());
        assert!(matches!(
            find_all_complements(&c9, &c9.subset([1, 2]).unwrap(), Side::Left),
            Err(Error::NotLagrange { .. })
        ));
    }

    #[test]
    fn k_factorizations() {
        let c4 = build_cyclic(4).unwrap();
        let r = find_factorization(&c4, &[2, 2], SearchOptions::default()).unwrap();
        let FactorizationOutcome::Found(f) = r.outcome else { panic!("expected a factorization") };
        assert_eq!(f.parts, vec![c4.subset([0, 1]).unwrap(), c4.subset([0, 2]).unwrap()]);

        let r = find_factorization(&c4, &[4], SearchOptions::default()).unwrap();
        assert_eq!(r.outcome, FactorizationOutcome::Found(KFactorization { parts: vec![c4.full()], sizes: vec![4] }));

        let g = a4();
        let r = find_factorization(&g, &[2, 3, 2], SearchOptions::default()).unwrap();
        assert_eq!(r.outcome, FactorizationOutcome::Absent);

        assert_eq!(
            find_factorization(&c4, &[2, 3], SearchOptions::default()).unwrap_err(),
            Error::SizeMismatch { product: 6, order: 4 }
        );
        let r = find_factorization(&g, &[2, 3, 2], SearchOptions { node_budget: Some(10) }).unwrap();
        assert_eq!(r.outcome, FactorizationOutcome::Unknown);
    }
}
