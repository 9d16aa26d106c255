//! Subgroup enumeration by cyclic extension: subgroups are grown one
//! generator at a time, trying one new element per coset.

use std::collections::BTreeMap;

use super::{CayleyTable, ElemSet, GeneratedGroup};
use crate::error::GroupError;
use crate::perm::Permutation;

/// Largest group order accepted by the subgroup enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 256;

fn enumerate(
    g: &GeneratedGroup,
    keep_growing: impl Fn(usize) -> bool,
) -> Result<Vec<ElemSet>, GroupError> {
    if g.order() > MAX_ENUMERATION_ORDER {
        return Err(GroupError::TooLarge(g.order()));
    }
    let t = CayleyTable::new(g.elements());
    let trivial = ElemSet::singleton(t.identity());
    let mut found: BTreeMap<ElemSet, Vec<usize>> = BTreeMap::new();
    found.insert(trivial, Vec::new());
    let mut frontier = vec![trivial];
    while let Some(s) = frontier.pop() {
        if !keep_growing(s.len()) {
            continue;
        }
        let gens = found[&s].clone();
        let mut covered = s;
        for x in 0..t.len() {
            if covered.contains(x) {
                continue;
            }
            // <S, x> = <S, x s> for s in S, so one representative per coset.
            for y in s.iter() {
                covered.insert(t.mul(x, y));
            }
            let mut ext = gens.clone();
            ext.push(x);
            let closed = t.close(&ext);
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(closed) {
                e.insert(ext);
                frontier.push(closed);
            }
        }
    }
    Ok(found.into_keys().collect())
}

fn materialize(g: &GeneratedGroup, set: &ElemSet) -> GeneratedGroup {
    let elems: Vec<Permutation> = set.iter().map(|i| g.elements()[i].clone()).collect();
    GeneratedGroup::from_closed_elements(g.degree(), elems)
}

fn sort_groups(mut v: Vec<GeneratedGroup>) -> Vec<GeneratedGroup> {
    v.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    v
}

/// Every subgroup of `g`, ordered by size and then by element list.
pub fn all_subgroups(g: &GeneratedGroup) -> Result<Vec<GeneratedGroup>, GroupError> {
    let sets = enumerate(g, |_| true)?;
    Ok(sort_groups(
        sets.iter().map(|s| materialize(g, s)).collect(),
    ))
}

/// All subgroups of order `k`.
pub fn subgroups_of_order(g: &GeneratedGroup, k: usize) -> Result<Vec<GeneratedGroup>, GroupError> {
    if k == 0 || !g.order().is_multiple_of(k) {
        return Err(GroupError::BadOrder {
            requested: k,
            order: g.order(),
        });
    }
    // Any subgroup of order k is reached through a chain of subgroups whose
    // orders divide k.
    let sets = enumerate(g, |len| len < k && k.is_multiple_of(len))?;
    Ok(sort_groups(
        sets.iter()
            .filter(|s| s.len() == k)
            .map(|s| materialize(g, s))
            .collect(),
    ))
}

/// Subgroups acting regularly on the points `0..domain_size`.
pub fn sharply_transitive_subgroups(
    g: &GeneratedGroup,
    domain_size: usize,
) -> Result<Vec<GeneratedGroup>, GroupError> {
    let points: Vec<usize> = (0..domain_size).collect();
    Ok(subgroups_of_order(g, domain_size)?
        .into_iter()
        .filter(|s| s.is_regular_on(&points))
        .collect())
}
