use std::collections::BTreeMap;

use serde::Serialize;

use super::{derived_subgroup, GeneratedGroup};
use crate::error::GroupError;

/// Isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_order_histogram: BTreeMap<u64, usize>,
    pub center_order: usize,
    /// `None` when the derived series stalls at a non-trivial perfect group.
    pub derived_length: Option<usize>,
    pub abelianization_invariants: Vec<usize>,
}

fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn ilog(base: usize, mut v: usize) -> usize {
    let mut k = 0;
    while v > 1 {
        debug_assert_eq!(v % base, 0);
        v /= base;
        k += 1;
    }
    k
}

/// Invariant factors `d1 | d2 | ...` of the abelian quotient `g / k`.
///
/// Uses only power counts: for a prime `p`, the number of cosets killed by
/// `p^j` is `p^(sum_i min(e_i, j))` over the `p`-primary exponents `e_i`.
pub fn quotient_invariants(
    g: &GeneratedGroup,
    k: &GeneratedGroup,
) -> Result<Vec<usize>, GroupError> {
    if !k.is_subset_of(g) {
        return Err(GroupError::NotSubset);
    }
    if !super::is_normalized_by(k, g.generators()) {
        return Err(GroupError::NotAbelian);
    }
    let abelian_quotient = g.generators().iter().all(|a| {
        g.generators()
            .iter()
            .all(|b| k.contains(&crate::perm::Permutation::commutator(a, b)))
    });
    if !abelian_quotient {
        return Err(GroupError::NotAbelian);
    }
    let m = g.order() / k.order();
    // exponents per prime, descending
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(m) {
        let target = p_part(m, p);
        let mut counts = vec![1usize];
        let mut power = 1u64;
        while *counts.last().unwrap() < target {
            power *= p as u64;
            let c = g
                .elements()
                .iter()
                .filter(|e| k.contains(&e.pow(power)))
                .count()
                / k.order();
            counts.push(c);
        }
        // r_j = number of cyclic factors with exponent >= j
        let r: Vec<usize> = counts.windows(2).map(|w| ilog(p, w[1] / w[0])).collect();
        let mut exps = Vec::new();
        for j in 0..r.len() {
            let next = r.get(j + 1).copied().unwrap_or(0);
            for _ in next..r[j] {
                exps.push(j as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; len];
    for (p, exps) in &primary {
        for (i, &e) in exps.iter().enumerate() {
            factors[i] *= p.pow(e);
        }
    }
    factors.reverse();
    Ok(factors)
}

fn p_part(mut m: usize, p: usize) -> usize {
    let mut out = 1;
    while m.is_multiple_of(p) {
        m /= p;
        out *= p;
    }
    out
}

/// Invariant factor decomposition of an abelian group.
pub fn abelian_invariants(g: &GeneratedGroup) -> Result<Vec<usize>, GroupError> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    quotient_invariants(g, &GeneratedGroup::trivial(g.degree()))
}

pub fn fingerprint(g: &GeneratedGroup) -> GroupFingerprint {
    let derived = derived_subgroup(g);
    let mut derived_length = None;
    let mut current = g.clone();
    for len in 0..32 {
        if current.is_trivial() {
            derived_length = Some(len);
            break;
        }
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            break;
        }
        current = next;
    }
    GroupFingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_order_histogram: g.element_order_histogram(),
        center_order: g.center().order(),
        derived_length,
        abelianization_invariants: quotient_invariants(g, &derived)
            .expect("derived quotient is abelian"),
    }
}
