//! Automorphisms, pseudo-automorphisms and translation groups of loops.
//!
//! A right pseudo-automorphism `γ` with companion `c` satisfies
//! `x^γ·(y^γ·c) = (xy)^γ·c`; a left one satisfies `(c·x^γ)·y^γ = c·(xy)^γ`.
//! Both are found as isomorphisms from `L` onto a twisted copy of `L`, so
//! the search is the same generator-image backtracking used for
//! isomorphisms.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::group::{commutator_subgroup, GeneratedGroup};
use crate::loops::{all_isomorphisms, extend_isomorphism, BuiltinLoop, LoopTable, Nucleus};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// A pseudo-automorphism together with its complete companion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoAutomorphism {
    pub gamma: Permutation,
    pub side: Side,
    /// Sorted, nonempty.
    pub companions: Vec<usize>,
}

impl PseudoAutomorphism {
    pub fn is_automorphism(&self) -> bool {
        self.companions.first() == Some(&0)
    }
}

/// All automorphisms of `l`, sorted.
pub fn automorphisms(l: &LoopTable) -> Vec<Permutation> {
    all_isomorphisms(l, l)
}

pub fn automorphism_group(l: &LoopTable) -> GeneratedGroup {
    group_of(l.order(), &automorphisms(l))
}

fn group_of(degree: usize, perms: &[Permutation]) -> GeneratedGroup {
    GeneratedGroup::generate(degree, perms).expect("permutations share the loop's degree")
}

/// `true` iff `gamma` satisfies the defining identity with companion `c`.
pub fn is_pseudo_automorphism(l: &LoopTable, side: Side, gamma: &Permutation, c: usize) -> bool {
    let n = l.order();
    let g = |x: usize| gamma.apply(x);
    (0..n).all(|x| {
        (0..n).all(|y| match side {
            Side::Right => l.mul(g(x), l.mul(g(y), c)) == l.mul(g(l.mul(x, y)), c),
            Side::Left => l.mul(l.mul(c, g(x)), g(y)) == l.mul(c, g(l.mul(x, y))),
        })
    })
}

/// The loop `(L, ⊗)` such that `γ` is a pseudo-automorphism of `L` with
/// companion `c` iff `γ: L -> (L, ⊗)` is an isomorphism.
///
/// Right: `u⊗v = (u·(v·c))/c`. Left: `u⊗v = c\((c·u)·v)`. Both have unit 0.
fn twisted(l: &LoopTable, side: Side, c: usize) -> LoopTable {
    let n = l.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| match side {
                    Side::Right => l.rdiv(l.mul(u, l.mul(v, c)), c),
                    Side::Left => l.ldiv(c, l.mul(l.mul(c, u), v)),
                })
                .collect()
        })
        .collect();
    LoopTable::from_rows(&rows, false).expect("twisted product of a loop is a loop with unit 0")
}

/// Every pseudo-automorphism of the given side, sorted by permutation, each
/// with its full companion set.
pub fn pseudo_automorphisms(l: &LoopTable, side: Side) -> Vec<PseudoAutomorphism> {
    let mut by_gamma: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
    for c in 0..l.order() {
        for gamma in all_isomorphisms(l, &twisted(l, side, c)) {
            by_gamma.entry(gamma).or_default().push(c);
        }
    }
    by_gamma
        .into_iter()
        .map(|(gamma, companions)| PseudoAutomorphism {
            gamma,
            side,
            companions,
        })
        .collect()
}

/// Union of all companion sets of the given side (`C_λ` or `C_ρ`), sorted.
pub fn companion_set(l: &LoopTable, side: Side) -> Vec<usize> {
    let set: BTreeSet<usize> = pseudo_automorphisms(l, side)
        .into_iter()
        .flat_map(|p| p.companions)
        .collect();
    set.into_iter().collect()
}

/// `λ_x ρ_x⁻¹ : u -> (x·u)/x`.
pub fn lambda_rho_inverse(l: &LoopTable, x: usize) -> Permutation {
    l.left_translation(x)
        .then(&l.right_translation(x).inverse())
}

/// `true` iff every `λ_x ρ_x⁻¹` is a right pseudo-automorphism with
/// companion `x`; equivalent to left conjugacy closedness.
pub fn lcc_pseudo_check(l: &LoopTable) -> bool {
    (0..l.order()).all(|x| is_pseudo_automorphism(l, Side::Right, &lambda_rho_inverse(l, x), x))
}

/// `G(L)`, the group generated by all left translations.
pub fn translation_group(l: &LoopTable) -> GeneratedGroup {
    group_of(l.order(), &l.section())
}

/// `G₁`, the stabilizer of the unit in `G(L)`.
pub fn unit_stabilizer_g1(l: &LoopTable) -> GeneratedGroup {
    translation_group(l).point_stabilizer(0)
}

/// Group generated by the translations by nucleus elements: right
/// translations for the right nucleus, left translations otherwise.
/// It is isomorphic to the nucleus.
pub fn nucleus_group(l: &LoopTable, kind: Nucleus) -> GeneratedGroup {
    let perms: Vec<Permutation> = l
        .nucleus(kind)
        .into_iter()
        .map(|a| match kind {
            Nucleus::Right => l.right_translation(a),
            Nucleus::Left | Nucleus::Middle => l.left_translation(a),
        })
        .collect();
    group_of(l.order(), &perms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleTest {
    pub fixes_unit: bool,
    pub is_identity: bool,
}

/// Evaluates `λ_a λ_b λ_c` (apply `λ_a` first), which sends the unit to
/// `c·(b·a)`.
pub fn triple_translation(l: &LoopTable, a: usize, b: usize, c: usize) -> Permutation {
    l.left_translation(a)
        .then(&l.left_translation(b))
        .then(&l.left_translation(c))
}

pub fn triple_translation_test(l: &LoopTable, a: usize, b: usize, c: usize) -> TripleTest {
    let p = triple_translation(l, a, b, c);
    TripleTest {
        fixes_unit: p.fixes(0),
        is_identity: p.is_identity(),
    }
}

/// `[Aut(L), G(L)]`, normally closed in `⟨Aut(L), G(L)⟩`.
pub fn aut_g_commutator(l: &LoopTable) -> GeneratedGroup {
    commutator_subgroup(&automorphism_group(l), &translation_group(l)).expect("same degree")
}

/// The automorphism of `l` determined by images of generators, if the
/// assignment extends.
pub fn extend_to_automorphism(
    l: &LoopTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Permutation> {
    extend_isomorphism(l, l, gens, images)
}

/// Generators `f` and `g` of the builtin loops.
pub const BUILTIN_GENERATORS: [usize; 2] = [1, 4];

/// The named generating automorphisms of a builtin loop: `φ₁, φ₂` for `B1`
/// and `ψ₁, ψ₂` for `B2`, given by the images of `f` and `g`.
pub fn named_automorphisms(which: BuiltinLoop) -> Vec<(&'static str, Permutation)> {
    let l = which.table();
    // (name, image of f, image of g)
    let defs: [(&'static str, usize, usize); 2] = match which {
        // φ₁: f -> f, g -> fg;  φ₂: f -> f³, g -> g
        BuiltinLoop::B1 => [("phi1", 1, 5), ("phi2", 3, 4)],
        // ψ₁: f -> fg, g -> g;  ψ₂: f -> f, g -> f²g
        BuiltinLoop::B2 => [("psi1", 5, 4), ("psi2", 1, 6)],
    };
    defs.iter()
        .map(|&(name, f, g)| {
            let p = extend_to_automorphism(&l, &BUILTIN_GENERATORS, &[f, g])
                .expect("named maps extend to automorphisms");
            (name, p)
        })
        .collect()
}

/// Function composition `outer ∘ inner`: apply `inner` first.
pub fn compose(outer: &Permutation, inner: &Permutation) -> Permutation {
    inner.then(outer)
}

/// Shortest word in `gens` equal to `target`, as generator indices in
/// application order (the first index is applied first).
pub fn shortest_word(gens: &[Permutation], target: &Permutation) -> Option<Vec<usize>> {
    let id = Permutation::identity(target.degree());
    let mut parent: HashMap<Permutation, Option<(Permutation, usize)>> = HashMap::new();
    parent.insert(id.clone(), None);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        if &p == target {
            let mut word = Vec::new();
            let mut cur = p;
            while let Some(Some((prev, i))) = parent.get(&cur).cloned() {
                word.push(i);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for (i, g) in gens.iter().enumerate() {
            let q = p.then(g);
            if !parent.contains_key(&q) {
                parent.insert(q.clone(), Some((p.clone(), i)));
                queue.push_back(q);
            }
        }
    }
    None
}

/// Renders a word (application order) as a composition `gₖ ∘ … ∘ g₁`.
pub fn word_as_composition(word: &[usize], names: &[&str]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter()
        .rev()
        .map(|&i| names[i])
        .collect::<Vec<_>>()
        .join(" ∘ ")
}
