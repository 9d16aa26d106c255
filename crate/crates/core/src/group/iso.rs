use super::{fingerprint, CayleyTable, GeneratedGroup};

const NONE: u32 = u32::MAX;

/// Decides isomorphism of two finite permutation groups.
///
/// Fingerprints are compared first; if they agree, images of a small
/// generating set of `g` are searched in `h` by backtracking, pruned by
/// element order and centralizer size.
pub fn are_isomorphic(g: &GeneratedGroup, h: &GeneratedGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An isomorphism as a map from element positions of `g` to element
/// positions of `h` (both in sorted element order).
pub fn find_isomorphism(g: &GeneratedGroup, h: &GeneratedGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    if g.order() == 1 {
        return Some(vec![0]);
    }
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    let tg = CayleyTable::new(g.elements());
    let th = CayleyTable::new(h.elements());
    let gens = tg.small_generating_set();
    let key = |t: &CayleyTable, x: usize| (t.order_of(x), t.centralizer_size(x));
    let h_keys: Vec<_> = (0..th.len()).map(|x| key(&th, x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let kx = key(&tg, x);
            (0..th.len()).filter(|&y| h_keys[y] == kx).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(&tg, &th, &gens, &candidates, &mut images)
}

fn search(
    tg: &CayleyTable,
    th: &CayleyTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let level = images.len();
    if level == gens.len() {
        let map = propagate(tg, th, gens, images)?;
        return Some(map.into_iter().map(|v| v as usize).collect());
    }
    for &cand in &candidates[level] {
        images.push(cand);
        if propagate(tg, th, &gens[..=level], images).is_some() {
            if let Some(m) = search(tg, th, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` to the generated subgroup, failing on any
/// inconsistency or collision. Every Cayley-graph edge is checked, which
/// makes the resulting map a homomorphism.
fn propagate(
    tg: &CayleyTable,
    th: &CayleyTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<u32>> {
    let mut map = vec![NONE; tg.len()];
    let mut used = vec![false; th.len()];
    map[tg.identity()] = th.identity() as u32;
    used[th.identity()] = true;
    let mut stack = vec![tg.identity()];
    while let Some(x) = stack.pop() {
        let fx = map[x] as usize;
        for (&a, &b) in gens.iter().zip(images) {
            let y = tg.mul(x, a);
            let fy = th.mul(fx, b);
            if map[y] == NONE {
                if used[fy] {
                    return None;
                }
                map[y] = fy as u32;
                used[fy] = true;
                stack.push(y);
            } else if map[y] as usize != fy {
                return None;
            }
        }
    }
    Some(map)
}
