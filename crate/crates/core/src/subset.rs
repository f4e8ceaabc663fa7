//! Subsets of a group as single-word bit vectors, plus the translation and
//! product operations the factor search is built on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A set of element indices of a group of order at most 64.
///
/// Bit `i` is set when element `i` belongs to the set. No bit at or above
/// the group order is ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset {
    bits: u64,
    order: u8,
}

fn mask_for(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        debug_assert!((1..=64).contains(&order));
        Subset { bits: 0, order: order as u8 }
    }

    pub fn full(order: usize) -> Self {
        Subset { bits: mask_for(order), order: order as u8 }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    /// Builds a subset from raw bits, rejecting bits beyond `order`.
    pub fn from_bits(order: usize, bits: u64) -> Result<Self> {
        if !(1..=64).contains(&order) {
            return Err(Error::OrderOutOfRange(order));
        }
        if bits & !mask_for(order) != 0 {
            return Err(Error::ElementOutOfRange { index: 63 - bits.leading_zeros() as usize, order });
        }
        Ok(Subset { bits, order: order as u8 })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for i in items {
            if i >= order {
                return Err(Error::ElementOutOfRange { index: i, order });
            }
            s.insert(i);
        }
        Ok(s)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn group_order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < 64 && self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < self.group_order());
        self.bits |= 1 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.bits &= !(1 << x);
    }

    /// Smallest element index in the set.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits | other.bits, order: self.order }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits & other.bits, order: self.order }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits & !other.bits, order: self.order }
    }

    pub fn complement(&self) -> Subset {
        Subset { bits: !self.bits & mask_for(self.group_order()), order: self.order }
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Element indices in ascending order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for &Subset {
    type Item = usize;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

pub struct SubsetIter {
    bits: u64,
}

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// `uA = {u·a : a ∈ A}`.
pub fn translate_left(g: &GroupTable, u: usize, a: &Subset) -> Subset {
    let mut out = Subset::empty(g.order());
    for x in a {
        out.insert(g.mul(u, x));
    }
    out
}

/// `Av = {a·v : a ∈ A}`.
pub fn translate_right(g: &GroupTable, a: &Subset, v: usize) -> Subset {
    let mut out = Subset::empty(g.order());
    for x in a {
        out.insert(g.mul(x, v));
    }
    out
}

/// Two distinct pairs `(a, b)` and `(a', b')` with the same product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub product: usize,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// Outcome of multiplying out `A·B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductCheck {
    pub coverage: Subset,
    pub unique: bool,
    pub collision: Option<Collision>,
}

impl ProductCheck {
    /// Unique products covering the whole group.
    pub fn is_factorization(&self) -> bool {
        self.unique && self.coverage.len() == self.coverage.group_order()
    }
}

/// Forms every product `ab` in lexicographic `(a, b)` order and records the
/// first repeated product.
pub fn product_check(g: &GroupTable, a: &Subset, b: &Subset) -> ProductCheck {
    let n = g.order();
    let mut witness: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut coverage = Subset::empty(n);
    let mut collision = None;
    for x in a {
        for y in b {
            let p = g.mul(x, y);
            match witness[p] {
                Some(prev) if collision.is_none() => {
                    collision = Some(Collision { product: p, first: prev, second: (x, y) });
                }
                Some(_) => {}
                None => witness[p] = Some((x, y)),
            }
            coverage.insert(p);
        }
    }
    let check = ProductCheck { coverage, unique: collision.is_none(), collision };
    debug_assert!(!check.unique || check.coverage.len() == a.len() * b.len());
    check
}

/// Translates `A` on the left by the inverse of its smallest element so the
/// result contains the identity.
pub fn normalize_to_identity(g: &GroupTable, a: &Subset) -> Result<Subset> {
    let u = a.first().ok_or(Error::EmptySubset)?;
    Ok(translate_left(g, g.inverse(u), a))
}

/// Lexicographic stream of the `d`-subsets of `0..n` that contain index 0.
#[derive(Debug, Clone)]
pub struct IdentitySubsets {
    order: usize,
    // Positions of the d-1 non-identity elements; None once exhausted.
    picks: Option<Vec<usize>>,
}

impl IdentitySubsets {
    fn new(order: usize, d: usize) -> Self {
        let picks = (d >= 1 && d <= order).then(|| (1..d).collect());
        IdentitySubsets { order, picks }
    }
}

impl Iterator for IdentitySubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let picks = self.picks.as_mut()?;
        let mut s = Subset::singleton(self.order, 0);
        for &p in picks.iter() {
            s.insert(p);
        }
        // advance to the next combination of 1..order
        let k = picks.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.picks = None;
                break;
            }
            i -= 1;
            if picks[i] < self.order - k + i {
                picks[i] += 1;
                for j in i + 1..k {
                    picks[j] = picks[j - 1] + 1;
                }
                break;
            }
        }
        Some(s)
    }
}

/// Every size-`d` subset containing the identity, in lexicographic order.
///
/// One representative per left-translation class is all the factor question
/// needs, since factor status is invariant under translation.
pub fn enumerate_lagrange_subsets(g: &GroupTable, d: usize) -> Result<IdentitySubsets> {
    let n = g.order();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotLagrange { size: d, order: n });
    }
    Ok(IdentitySubsets::new(n, d))
}

/// Size-`d` identity-containing subsets of any `n`, without the divisibility
/// requirement.
pub fn identity_subsets(order: usize, d: usize) -> IdentitySubsets {
    IdentitySubsets::new(order, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_dihedral, build_elementary_abelian};

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn translations() {
        let c9 = build_cyclic(9).unwrap();
        let a = set(9, &[1, 2, 4]);
        assert_eq!(translate_left(&c9, 0, &a), a);
        assert_eq!(translate_right(&c9, &a, 0), a);
        assert_eq!(translate_right(&c9, &a, 5), set(9, &[0, 6, 7]));

        let d4 = build_dihedral(4).unwrap();
        // a = 1, a^2 = 2, b = 4, a^2 b = 6
        assert_eq!(translate_left(&d4, 1, &set(8, &[4])), set(8, &[5]));
        let witness = set(8, &[1, 2, 4, 6]);
        assert_eq!(translate_right(&d4, &witness, 4), set(8, &[5, 6, 0, 2]));
    }

    #[test]
    fn product_check_cases() {
        let c4 = build_cyclic(4).unwrap();
        let pc = product_check(&c4, &set(4, &[0, 1]), &set(4, &[0, 2]));
        assert!(pc.unique);
        assert!(pc.is_factorization());

        let pc = product_check(&c4, &set(4, &[0]), &Subset::full(4));
        assert!(pc.is_factorization());

        let pc = product_check(&c4, &set(4, &[0, 1]), &set(4, &[0, 1]));
        assert!(!pc.unique);
        assert_eq!(pc.coverage, set(4, &[0, 1, 2]));
        let c = pc.collision.unwrap();
        assert_eq!(c.product, 1);
        assert_eq!(c.first, (0, 1));
        assert_eq!(c.second, (1, 0));
    }

    #[test]
    fn normalization() {
        let c9 = build_cyclic(9).unwrap();
        assert_eq!(normalize_to_identity(&c9, &set(9, &[1, 2, 4])).unwrap(), set(9, &[0, 1, 3]));
        let s = set(9, &[0, 3, 5]);
        assert_eq!(normalize_to_identity(&c9, &s).unwrap(), s);
        assert_eq!(normalize_to_identity(&c9, &Subset::empty(9)), Err(Error::EmptySubset));

        // {g, h1 g} together with H' from the main-lemma shape in C10
        let c10 = build_cyclic(10).unwrap();
        let a = set(10, &[4, 6, 8, 1, 5]);
        assert!(normalize_to_identity(&c10, &a).unwrap().contains(0));
    }

    #[test]
    fn lagrange_enumeration_counts() {
        let c4 = build_cyclic(4).unwrap();
        let all: Vec<_> = enumerate_lagrange_subsets(&c4, 4).unwrap().collect();
        assert_eq!(all, vec![Subset::full(4)]);

        let c3sq = build_elementary_abelian(3, 2).unwrap();
        assert_eq!(enumerate_lagrange_subsets(&c3sq, 3).unwrap().count(), 28);
        let c2cube = build_elementary_abelian(2, 3).unwrap();
        assert_eq!(enumerate_lagrange_subsets(&c2cube, 4).unwrap().count(), 35);

        assert_eq!(
            enumerate_lagrange_subsets(&c4, 3).unwrap_err(),
            Error::NotLagrange { size: 3, order: 4 }
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let got: Vec<Vec<usize>> = identity_subsets(5, 3).map(|s| s.to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![0, 2, 3],
                vec![0, 2, 4],
                vec![0, 3, 4]
            ]
        );
        assert_eq!(identity_subsets(5, 1).count(), 1);
    }

    #[test]
    fn bits_beyond_order_are_rejected() {
        assert!(Subset::from_bits(4, 0b1_0000).is_err());
        assert!(Subset::from_bits(64, u64::MAX).is_ok());
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(5).complement(), Subset::empty(5));
    }
}
