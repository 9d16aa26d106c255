//! Reference permutation models of small named groups, plus product
//! constructions used as isomorphism targets.

use super::GeneratedGroup;
use crate::perm::Permutation;

fn group(degree: usize, gens: Vec<Permutation>) -> GeneratedGroup {
    GeneratedGroup::generate(degree, &gens).expect("consistent degrees")
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> GeneratedGroup {
    group(n, vec![Permutation::from_fn(n, |i| (i + 1) % n)])
}

/// `C2^k` acting on `2k` points, one transposition per factor.
pub fn elementary_abelian(k: usize) -> GeneratedGroup {
    let gens = (0..k)
        .map(|i| Permutation::from_fn(2 * k, |p| if p / 2 == i { p ^ 1 } else { p }))
        .collect();
    group(2 * k, gens)
}

pub fn c2_x_c4() -> GeneratedGroup {
    direct_product(&cyclic(2), &cyclic(4))
}

/// Dihedral group of order 8 as the symmetries of a square.
pub fn dihedral8() -> GeneratedGroup {
    group(
        4,
        vec![
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[&[1, 3]]).unwrap(),
        ],
    )
}

/// Quaternion group in its regular representation. Points 0..8 stand for
/// 1, i, j, k, -1, -i, -j, -k.
pub fn quaternion8() -> GeneratedGroup {
    // right multiplication tables by i and j
    let mul = |a: usize, b: usize| -> usize {
        // unit index 0..4 for 1,i,j,k with sign bit 4
        const T: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let (u, neg) = T[a % 4][b % 4];
        let sign = (a >= 4) ^ (b >= 4) ^ neg;
        u + if sign { 4 } else { 0 }
    };
    group(
        8,
        vec![
            Permutation::from_fn(8, |x| mul(x, 1)),
            Permutation::from_fn(8, |x| mul(x, 2)),
        ],
    )
}

pub fn symmetric(n: usize) -> GeneratedGroup {
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(Permutation::from_fn(n, |i| (i + 1) % n));
        gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
    }
    group(n, gens)
}

pub fn alternating5() -> GeneratedGroup {
    group(
        5,
        vec![
            Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ],
    )
}

fn shift(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    Permutation::from_fn(degree, |x| {
        if x >= offset && x < offset + p.degree() {
            p.apply(x - offset) + offset
        } else {
            x
        }
    })
}

/// `a x b` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &GeneratedGroup, b: &GeneratedGroup) -> GeneratedGroup {
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| shift(g, 0, degree))
        .chain(b.generators().iter().map(|g| shift(g, a.degree(), degree)))
        .collect();
    group(degree, gens)
}

/// External semidirect product `k ⋉ n` where `k` acts on `n` by conjugation
/// `x -> k^-1 x k` inside their common symmetric group.
///
/// The model acts on the elements of `n` (by right multiplication for `n`,
/// by the conjugation automorphism for `k`) together with a disjoint copy of
/// the points of `k`, which makes the action faithful even when the
/// conjugation action is not. Returns `None` if `k` does not normalize `n`.
pub fn semidirect_product_model(k: &GeneratedGroup, n: &GeneratedGroup) -> Option<GeneratedGroup> {
    if k.degree() != n.degree() {
        return None;
    }
    let ne = n.elements();
    let m = ne.len();
    let degree = m + k.degree();
    let mut gens = Vec::new();
    for s in n.generators() {
        gens.push(Permutation::from_fn(degree, |x| {
            if x < m {
                n.index_of(&ne[x].then(s)).expect("closed")
            } else {
                x
            }
        }));
    }
    for a in k.generators() {
        let mut images = Vec::with_capacity(degree);
        for x in ne {
            images.push(n.index_of(&x.conjugate_by(a))?);
        }
        images.extend(a.images().map(|i| i + m));
        gens.push(Permutation::from_images(images).ok()?);
    }
    let model = GeneratedGroup::generate(degree, &gens).ok()?;
    debug_assert_eq!(model.order(), k.order() * n.order());
    Some(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic, fingerprint};

    #[test]
    fn orders() {
        assert_eq!(cyclic(5).order(), 5);
        assert_eq!(elementary_abelian(3).order(), 8);
        assert_eq!(c2_x_c4().order(), 8);
        assert_eq!(dihedral8().order(), 8);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(symmetric(1).order(), 1);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion8();
        assert_eq!(fingerprint(&q).element_order_histogram.get(&2), Some(&1));
        assert!(!q.is_abelian());
    }

    #[test]
    fn semidirect_c2_on_c4_is_d8() {
        // inversion acting on a 4-cycle
        let c4 = cyclic(4);
        let inv = GeneratedGroup::generate(4, &[Permutation::from_cycles(4, &[&[1, 3]]).unwrap()])
            .unwrap();
        let model = semidirect_product_model(&inv, &c4).unwrap();
        assert_eq!(model.order(), 8);
        assert!(are_isomorphic(&model, &dihedral8()));
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct() {
        let c2 = cyclic(2);
        let model = semidirect_product_model(&GeneratedGroup::trivial(2), &c2).unwrap();
        assert_eq!(model.order(), 2);
        let non_normalizing = semidirect_product_model(
            &GeneratedGroup::generate(3, &[Permutation::from_cycles(3, &[&[0, 1]]).unwrap()])
                .unwrap(),
            &GeneratedGroup::generate(3, &[Permutation::from_cycles(3, &[&[1, 2]]).unwrap()])
                .unwrap(),
        );
        assert!(non_normalizing.is_none());
    }
}
