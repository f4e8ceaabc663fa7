//! Explicit complements for subsets covered by the small-subset results:
//! `{e, x}` with `x` of even order, 4-subsets of elementary abelian
//! 2-groups and 3-subsets of elementary abelian 3-groups. Each builder
//! works inside `H = ⟨A⟩` and lifts the complement to `G` through coset
//! representatives.

use crate::error::{Error, Result};
use crate::group::{coset_representatives_in, element_order, generated_subgroup, is_subgroup, GroupTable};
use crate::subset::{normalize_to_identity, product_check, Subset};

/// `B = B′B″` where `B″` holds representatives of the cosets `Hx`.
///
/// Requires `A·B′ = H` with unique products; the result satisfies
/// `A·B = G` with unique products.
pub fn lift_complement(g: &GroupTable, h: &Subset, a: &Subset, b_prime: &Subset) -> Result<Subset> {
    if !is_subgroup(g, h) {
        return Err(Error::NotASubgroup);
    }
    if !a.is_subset_of(h) || !b_prime.is_subset_of(h) {
        return Err(Error::NotAFactorOfH);
    }
    let pc = product_check(g, a, b_prime);
    if !pc.unique || pc.coverage != *h {
        return Err(Error::NotAFactorOfH);
    }
    let reps = coset_representatives_in(g, &g.full(), h)?;
    let mut b = Subset::empty(g.order());
    for x in b_prime {
        for &r in &reps {
            b.insert(g.mul(x, r));
        }
    }
    debug_assert_eq!(b.len(), b_prime.len() * reps.len());
    Ok(b)
}

fn verified(g: &GroupTable, a: &Subset, b: Subset) -> Result<Subset> {
    if product_check(g, a, &b).is_factorization() {
        Ok(b)
    } else {
        Err(Error::Verification(format!("{} · {}", g.format_subset(a), g.format_subset(&b))))
    }
}

/// Complement of `{e, x}` when `x` has even order `2m`: the even powers
/// `{e, x², …, x^{2m−2}}` of `⟨x⟩`, lifted to `G`.
pub fn complement_for_order2_subset(g: &GroupTable, x: usize) -> Result<Subset> {
    if x >= g.order() {
        return Err(Error::ElementOutOfRange { index: x, order: g.order() });
    }
    let ord = element_order(g, x);
    if !ord.is_multiple_of(2) {
        return Err(Error::OddOrder(ord));
    }
    let n = g.order();
    let a = Subset::from_indices(n, [0, x])?;
    let h = generated_subgroup(g, &Subset::singleton(n, x));
    let x2 = g.mul(x, x);
    let even = Subset::from_indices(n, (0..ord / 2).map(|i| g.power(x2, i as i64)))?;
    let b = lift_complement(g, &h, &a, &even)?;
    verified(g, &a, b)
}

/// A recipe complement together with the translation applied first:
/// `original = translation · normalized`. Left translation of `A` does not
/// change its complements, so `complement` serves both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constructed {
    pub translation: usize,
    pub normalized: Subset,
    pub complement: Subset,
}

fn normalized(g: &GroupTable, a: &Subset) -> Result<(usize, Subset)> {
    if a.contains(0) {
        return Ok((0, *a));
    }
    let u = a.first().ok_or(Error::EmptySubset)?;
    Ok((u, normalize_to_identity(g, a)?))
}

fn has_exponent(g: &GroupTable, p: usize) -> bool {
    g.is_abelian() && g.elements().skip(1).all(|x| element_order(g, x) == p)
}

/// Complement of a 4-subset of an elementary abelian 2-group.
///
/// With `A = {e, x, y, z}` and `H = ⟨A⟩`: if `|H| = 4` then `A = H` and the
/// in-`H` complement is `{e}`; if `xyz = e` then `A` is a subgroup and its
/// coset representatives in `H` serve; otherwise `{e, xyz}`.
pub fn complement_for_4subset_elem2(g: &GroupTable, a: &Subset) -> Result<Constructed> {
    if g.order() == 1 || !has_exponent(g, 2) {
        return Err(Error::NotElementaryAbelian2);
    }
    if a.len() != 4 {
        return Err(Error::WrongSize { expected: 4, actual: a.len() });
    }
    let (translation, norm) = normalized(g, a)?;
    let h = generated_subgroup(g, &norm);
    let b_prime = match h.len() {
        4 => Subset::singleton(g.order(), 0),
        8 => {
            let xs: Vec<usize> = norm.iter().filter(|&v| v != 0).collect();
            let t = g.mul(g.mul(xs[0], xs[1]), xs[2]);
            if t == 0 {
                Subset::from_indices(g.order(), coset_representatives_in(g, &h, &norm)?)?
            } else {
                Subset::from_indices(g.order(), [0, t])?
            }
        }
        other => return Err(Error::Verification(format!("⟨A⟩ has unexpected order {other}"))),
    };
    let complement = verified(g, &norm, lift_complement(g, &h, &norm, &b_prime)?)?;
    verified(g, a, complement)?;
    Ok(Constructed { translation, normalized: norm, complement })
}

/// Complement of a 3-subset of an elementary abelian 3-group.
///
/// With `A = {e, x, y}` and `H = ⟨A⟩`: if `|H| = 3` the in-`H` complement
/// is `{e}`, otherwise `{e, t, t²}` with `t = xy`.
pub fn complement_for_3subset_elem3(g: &GroupTable, a: &Subset) -> Result<Constructed> {
    if g.order() == 1 || !has_exponent(g, 3) {
        return Err(Error::NotElementaryAbelian3);
    }
    if a.len() != 3 {
        return Err(Error::WrongSize { expected: 3, actual: a.len() });
    }
    let (translation, norm) = normalized(g, a)?;
    let h = generated_subgroup(g, &norm);
    let b_prime = match h.len() {
        3 => Subset::singleton(g.order(), 0),
        9 => {
            let xs: Vec<usize> = norm.iter().filter(|&v| v != 0).collect();
            let t = g.mul(xs[0], xs[1]);
            Subset::from_indices(g.order(), [0, t, g.mul(t, t)])?
        }
        other => return Err(Error::Verification(format!("⟨A⟩ has unexpected order {other}"))),
    };
    let complement = verified(g, &norm, lift_complement(g, &h, &norm, &b_prime)?)?;
    verified(g, a, complement)?;
    Ok(Constructed { translation, normalized: norm, complement })
}
