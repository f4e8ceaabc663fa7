//! Test-only oracles that do not go through the exact-cover engine.

#![allow(dead_code)]

use lagfactor::GroupTable;

/// All `k`-element subsets of `0..n` as sorted index vectors.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every element is hit exactly once by the products `ab`.
pub fn tiles_uniquely(g: &GroupTable, a: &[usize], b: &[usize]) -> bool {
    let mut hits = vec![0u32; g.order()];
    for &x in a {
        for &y in b {
            hits[g.mul(x, y)] += 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// Naive factor test: try every candidate complement of the right size.
pub fn naive_left_factor(g: &GroupTable, a: &[usize]) -> bool {
    let n = g.order();
    if a.is_empty() || !n.is_multiple_of(a.len()) {
        return false;
    }
    combinations(n, n / a.len()).iter().any(|b| tiles_uniquely(g, a, b))
}
