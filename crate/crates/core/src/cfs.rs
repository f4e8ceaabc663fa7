//! The strong CFS property: every Lagrange subset is a left factor.

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_up_to, CATALOG_BOUND};
use crate::error::{Error, Result};
use crate::factor::{is_left_factor, FactorResult};
use crate::group::{is_prime, GroupTable};
use crate::subset::{enumerate_lagrange_subsets, Subset};

/// How many non-factor examples a census keeps.
pub const CENSUS_EXAMPLES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeStats {
    pub size: usize,
    pub tested: u64,
    pub nonfactors: u64,
    /// Sizes 1 and `|G|` are always factors and are not enumerated.
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfsReport {
    pub group: String,
    pub order: usize,
    pub holds: bool,
    /// First non-factor Lagrange subset in enumeration order.
    pub witness: Option<(Subset, FactorResult)>,
    pub sizes: Vec<SizeStats>,
    pub nodes_explored: u64,
    pub census: bool,
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Runs every identity-containing Lagrange subset through the factor
/// engine, sizes ascending and lexicographic within a size. Without
/// `census` the run stops at the first non-factor.
pub fn check_strong_cfs(g: &GroupTable, census: bool) -> CfsReport {
    let n = g.order();
    let mut report = CfsReport {
        group: g.spec().unwrap_or("<table>").to_string(),
        order: n,
        holds: true,
        witness: None,
        sizes: Vec::new(),
        nodes_explored: 0,
        census,
    };
    for d in divisors(n) {
        if d == 1 || d == n {
            report.sizes.push(SizeStats { size: d, tested: 0, nonfactors: 0, skipped: true });
            continue;
        }
        let mut stats = SizeStats { size: d, tested: 0, nonfactors: 0, skipped: false };
        for s in enumerate_lagrange_subsets(g, d).expect("d divides n") {
            let r = is_left_factor(g, &s).expect("nonempty");
            stats.tested += 1;
            report.nodes_explored += r.nodes_explored;
            if !r.is_factor {
                assert!(r.exhausted, "unbounded search always exhausts");
                stats.nonfactors += 1;
                report.holds = false;
                if report.witness.is_none() {
                    report.witness = Some((s, r));
                }
                if !census {
                    break;
                }
            }
        }
        report.sizes.push(stats);
        if !report.holds && !census {
            break;
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub tested: u64,
    pub nonfactors: u64,
    pub examples: Vec<Subset>,
}

/// Every identity-containing subset of size `d` that is not a left factor.
pub fn nonfactor_subsets(g: &GroupTable, d: usize) -> Result<Vec<Subset>> {
    Ok(enumerate_lagrange_subsets(g, d)?
        .filter(|s| !is_left_factor(g, s).expect("nonempty").is_factor)
        .collect())
}

pub fn nonfactor_census(g: &GroupTable, d: usize) -> Result<Census> {
    let mut c = Census { tested: 0, nonfactors: 0, examples: Vec::new() };
    for s in enumerate_lagrange_subsets(g, d)? {
        c.tested += 1;
        if !is_left_factor(g, &s)?.is_factor {
            c.nonfactors += 1;
            if c.examples.len() < CENSUS_EXAMPLES {
                c.examples.push(s);
            }
        }
    }
    Ok(c)
}

/// Whether the classification lists the named catalog group: cyclic of
/// prime order, `C4`, `C2^2`, `C2^3` or `C3^2`.
pub fn predicted_strong_cfs(name: &str) -> bool {
    if matches!(name, "C4" | "C2^2" | "C2^3" | "C3^2") {
        return true;
    }
    name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()).is_some_and(is_prime)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremEntry {
    pub name: String,
    pub expected: bool,
    pub report: CfsReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub max_order: usize,
    pub entries: Vec<TheoremEntry>,
    pub expected_positive: Vec<String>,
    pub observed_positive: Vec<String>,
    /// Trivial groups are checked but left out of the comparison.
    pub trivial: Vec<String>,
    pub mismatches: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Classifies every catalog group of order at most `max_order` and compares
/// the strong-CFS groups with the predicted list.
pub fn verify_theorem(max_order: usize, census: bool) -> Result<TheoremReport> {
    if max_order > CATALOG_BOUND {
        return Err(Error::CatalogBoundExceeded { requested: max_order, bound: CATALOG_BOUND });
    }
    let mut out = TheoremReport {
        max_order,
        entries: Vec::new(),
        expected_positive: Vec::new(),
        observed_positive: Vec::new(),
        trivial: Vec::new(),
        mismatches: Vec::new(),
    };
    for entry in catalog_up_to(max_order) {
        let report = check_strong_cfs(&entry.group, census);
        let name = entry.name.to_string();
        let expected = predicted_strong_cfs(entry.name);
        if entry.group.order() == 1 {
            out.trivial.push(name.clone());
        } else {
            if expected {
                out.expected_positive.push(name.clone());
            }
            if report.holds {
                out.observed_positive.push(name.clone());
            }
            if expected != report.holds {
                out.mismatches.push(format!(
                    "{name}: predicted {}, observed {}",
                    if expected { "holds" } else { "fails" },
                    if report.holds { "holds" } else { "fails" }
                ));
            }
        }
        out.entries.push(TheoremEntry { name, expected, report });
    }
    Ok(out)
}
