//! Small permutation groups with fully materialized element sets.
//!
//! Every group handled here has at most a few hundred elements, so groups are
//! stored as sorted element lists and all predicates are exact set
//! computations.

mod invariants;
mod iso;
pub mod named;
mod subgroups;
mod table;

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::GroupError;
use crate::perm::Permutation;

pub use invariants::{abelian_invariants, fingerprint, quotient_invariants, GroupFingerprint};
pub use iso::{are_isomorphic, find_isomorphism};
pub use subgroups::{
    all_subgroups, sharply_transitive_subgroups, subgroups_of_order, MAX_ENUMERATION_ORDER,
};
pub(crate) use table::{CayleyTable, ElemSet};

/// A permutation group given by generators, with its element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted lexicographically by image sequence.
    elements: Vec<Permutation>,
}

/// Result of [`subgroup_tests`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupTests {
    pub is_subgroup: bool,
    pub is_normal: bool,
}

impl GeneratedGroup {
    /// Closure of `gens` under composition. Empty `gens` gives the trivial
    /// group of the given degree.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut generators: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(GeneratedGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Wraps an element list that is already known to be a group (closed,
    /// containing the identity). Generators are recomputed.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(elements.iter().any(|e| e.is_identity()));
        let mut g = GeneratedGroup {
            degree,
            generators: Vec::new(),
            elements,
        };
        g.generators = g.small_generating_set();
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub fn same_elements(&self, other: &GeneratedGroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_subset_of(&self, other: &GeneratedGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Subgroup of the same degree generated by `gens`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<GeneratedGroup, GroupError> {
        let s = GeneratedGroup::generate(self.degree, gens)?;
        if !s.is_subset_of(self) {
            return Err(GroupError::NotSubset);
        }
        Ok(s)
    }

    /// The group generated by the generators of `self` and `other`.
    pub fn join(&self, other: &GeneratedGroup) -> Result<GeneratedGroup, GroupError> {
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        GeneratedGroup::generate(self.degree, &gens)
    }

    pub fn intersection(&self, other: &GeneratedGroup) -> GeneratedGroup {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        GeneratedGroup::from_closed_elements(self.degree, elements)
    }

    /// Elements satisfying `pred`; the caller guarantees they form a subgroup.
    pub fn filter_subgroup(&self, pred: impl Fn(&Permutation) -> bool) -> GeneratedGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|e| pred(e)).cloned().collect();
        GeneratedGroup::from_closed_elements(self.degree, elements)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut queue = VecDeque::from([point]);
        seen[point] = true;
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        (0..self.degree).filter(|&p| seen[p]).collect()
    }

    pub fn point_stabilizer(&self, point: usize) -> GeneratedGroup {
        self.filter_subgroup(|g| g.fixes(point))
    }

    /// Stabilizer of a point set (setwise).
    pub fn set_stabilizer(&self, set: &[usize]) -> GeneratedGroup {
        let mut member = vec![false; self.degree];
        for &p in set {
            member[p] = true;
        }
        self.filter_subgroup(|g| set.iter().all(|&p| member[g.apply(p)]))
    }

    pub fn is_transitive_on(&self, points: &[usize]) -> bool {
        match points.first() {
            None => true,
            Some(&p) => {
                let orbit = self.orbit(p);
                orbit.len() == points.len() && points.iter().all(|q| orbit.binary_search(q).is_ok())
            }
        }
    }

    /// Transitive on the points with trivial point stabilizers.
    pub fn is_regular_on(&self, points: &[usize]) -> bool {
        self.order() == points.len() && self.is_transitive_on(points)
    }

    /// Point stabilizers within this group are trivial on every point of the
    /// given set.
    pub fn is_semiregular_on(&self, points: &[usize]) -> bool {
        points
            .iter()
            .all(|&p| self.elements.iter().filter(|g| g.fixes(p)).count() == 1)
    }

    pub fn element_order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for e in &self.elements {
            *h.entry(e.order()).or_insert(0) += 1;
        }
        h
    }

    pub fn center(&self) -> GeneratedGroup {
        let gens = &self.generators;
        self.filter_subgroup(|z| gens.iter().all(|g| z.then(g) == g.then(z)))
    }

    /// Greedy generating set: repeatedly adjoin the element that enlarges the
    /// generated subgroup the most.
    pub fn small_generating_set(&self) -> Vec<Permutation> {
        if self.order() == 1 {
            return Vec::new();
        }
        if self.order() > MAX_ENUMERATION_ORDER {
            let mut gens: Vec<Permutation> = Vec::new();
            let mut current = GeneratedGroup::trivial(self.degree);
            for e in &self.elements {
                if !current.contains(e) {
                    gens.push(e.clone());
                    current = GeneratedGroup::generate(self.degree, &gens).expect("same degree");
                }
            }
            return gens;
        }
        let table = CayleyTable::new(&self.elements);
        table
            .small_generating_set()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect()
    }

    /// The set of products `a*b`, `a` in `self`, `b` in `other`.
    pub fn product_set(&self, other: &GeneratedGroup) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| a.then(b)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Subgroup and normality tests of `sub` inside `group`.
pub fn subgroup_tests(
    group: &GeneratedGroup,
    sub: &GeneratedGroup,
) -> Result<SubgroupTests, GroupError> {
    if !sub.is_subset_of(group) {
        return Err(GroupError::NotSubset);
    }
    Ok(SubgroupTests {
        is_subgroup: true,
        is_normal: is_normalized_by(sub, group.generators()),
    })
}

pub(crate) fn is_normalized_by(sub: &GeneratedGroup, gens: &[Permutation]) -> bool {
    gens.iter().all(|g| {
        sub.generators()
            .iter()
            .all(|s| sub.contains(&s.conjugate_by(g)))
    })
}

/// `[G, H]`, the subgroup generated by all commutators `[g, h]`, saturated
/// under conjugation by both groups. `commutator_subgroup(g, g)` is the
/// derived subgroup.
pub fn commutator_subgroup(
    g: &GeneratedGroup,
    h: &GeneratedGroup,
) -> Result<GeneratedGroup, GroupError> {
    if g.degree() != h.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for a in g.generators() {
        for b in h.generators() {
            let c = Permutation::commutator(a, b);
            if !c.is_identity() && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    let mut k = GeneratedGroup::generate(g.degree(), &gens)?;
    let conjugators: Vec<Permutation> = g
        .generators()
        .iter()
        .chain(h.generators())
        .cloned()
        .collect();
    loop {
        let missing: Vec<Permutation> = conjugators
            .iter()
            .flat_map(|x| k.generators().iter().map(move |s| s.conjugate_by(x)))
            .filter(|c| !k.contains(c))
            .collect();
        if missing.is_empty() {
            return Ok(k);
        }
        gens.extend(missing);
        k = GeneratedGroup::generate(g.degree(), &gens)?;
    }
}

pub fn derived_subgroup(g: &GeneratedGroup) -> GeneratedGroup {
    commutator_subgroup(g, g).expect("same degree")
}

pub fn center(g: &GeneratedGroup) -> GeneratedGroup {
    g.center()
}

/// Prime `p` with `order = p^k`, if any (`None` for order 1 as well).
pub fn prime_power_base(order: usize) -> Option<usize> {
    if order < 2 {
        return None;
    }
    let p = (2..=order).find(|d| order.is_multiple_of(*d))?;
    let mut m = order;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Frattini subgroup of a p-group: generated by the derived subgroup and
/// all p-th powers.
pub fn frattini(g: &GeneratedGroup) -> Result<GeneratedGroup, GroupError> {
    if g.order() == 1 {
        return Ok(g.clone());
    }
    let p = prime_power_base(g.order()).ok_or(GroupError::NotPGroup(g.order()))?;
    let derived = derived_subgroup(g);
    let mut gens: Vec<Permutation> = derived.generators().to_vec();
    for e in g.elements() {
        let q = e.pow(p as u64);
        if !q.is_identity() && !derived.contains(&q) && !gens.contains(&q) {
            gens.push(q);
        }
    }
    GeneratedGroup::generate(g.degree(), &gens)
}

/// Checks that `g` is the internal semidirect product of the normal subgroup
/// `n` by the complement `c`.
pub fn split_extension_check(
    g: &GeneratedGroup,
    n: &GeneratedGroup,
    c: &GeneratedGroup,
) -> Result<bool, GroupError> {
    if !n.is_subset_of(g) || !c.is_subset_of(g) {
        return Err(GroupError::NotSubset);
    }
    let normal = is_normalized_by(n, g.generators());
    Ok(normal && n.intersection(c).is_trivial() && n.order() * c.order() == g.order())
}

/// Internal direct product check: both factors normal, trivial intersection,
/// orders multiply.
pub fn direct_product_check(
    g: &GeneratedGroup,
    a: &GeneratedGroup,
    b: &GeneratedGroup,
) -> Result<bool, GroupError> {
    Ok(split_extension_check(g, a, b)? && is_normalized_by(b, g.generators()))
}
