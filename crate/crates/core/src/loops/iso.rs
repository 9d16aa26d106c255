use std::cmp::Ordering;

use super::{LoopTable, Nucleus};
use crate::perm::Permutation;

const NONE: u16 = u16::MAX;

/// Per-element isomorphism invariant used to prune image candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementProfile {
    pub left_translation_order: u64,
    pub right_translation_order: u64,
    pub nuclei: [bool; 3],
}

impl ElementProfile {
    pub fn of(l: &LoopTable) -> Vec<ElementProfile> {
        let nl = l.nucleus(Nucleus::Left);
        let nm = l.nucleus(Nucleus::Middle);
        let nr = l.nucleus(Nucleus::Right);
        (0..l.order())
            .map(|x| ElementProfile {
                left_translation_order: l.left_translation(x).order(),
                right_translation_order: l.right_translation(x).order(),
                nuclei: [
                    nl.binary_search(&x).is_ok(),
                    nm.binary_search(&x).is_ok(),
                    nr.binary_search(&x).is_ok(),
                ],
            })
            .collect()
    }
}

#[derive(Clone)]
struct Partial {
    map: Vec<u16>,
    used: Vec<bool>,
    dom: Vec<usize>,
    /// pairs `dom[i], dom[j]` with `i, j < checked` are already consistent
    checked: usize,
}

impl Partial {
    fn new(n: usize) -> Self {
        let mut map = vec![NONE; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        Partial {
            map,
            used,
            dom: vec![0],
            checked: 0,
        }
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.map[x] != NONE {
            return self.map[x] as usize == y;
        }
        if self.used[y] {
            return false;
        }
        self.map[x] = y as u16;
        self.used[y] = true;
        self.dom.push(x);
        true
    }

    /// Closes the partial map under multiplication, checking
    /// `f(x·y) = f(x)·f(y)` for every pair of mapped elements.
    fn close(&mut self, src: &LoopTable, dst: &LoopTable) -> bool {
        while self.checked < self.dom.len() {
            let i = self.checked;
            let x = self.dom[i];
            for j in 0..=i {
                let y = self.dom[j];
                for (a, b) in [(x, y), (y, x)] {
                    let img = dst.mul(self.map[a] as usize, self.map[b] as usize);
                    if !self.assign(src.mul(a, b), img) {
                        return false;
                    }
                }
            }
            self.checked += 1;
        }
        true
    }
}

/// Visits every isomorphism `src -> dst` until `visit` returns `false`.
fn search(src: &LoopTable, dst: &LoopTable, visit: &mut dyn FnMut(Permutation) -> bool) {
    if src.order() != dst.order() {
        return;
    }
    let n = src.order();
    let ps = ElementProfile::of(src);
    let pd = ElementProfile::of(dst);
    {
        let mut a = ps.clone();
        let mut b = pd.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return;
        }
    }
    let gens = src.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| pd[y] == ps[g]).collect())
        .collect();
    let mut start = Partial::new(n);
    if !start.close(src, dst) {
        return;
    }
    fn rec(
        src: &LoopTable,
        dst: &LoopTable,
        gens: &[usize],
        candidates: &[Vec<usize>],
        level: usize,
        state: &Partial,
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        if level == gens.len() {
            debug_assert_eq!(state.dom.len(), src.order());
            let p = Permutation::from_images(state.map.iter().map(|&v| v as usize).collect())
                .expect("closed injective map is a bijection");
            return visit(p);
        }
        for &c in &candidates[level] {
            let mut next = state.clone();
            if next.assign(gens[level], c)
                && next.close(src, dst)
                && !rec(src, dst, gens, candidates, level + 1, &next, visit)
            {
                return false;
            }
        }
        true
    }
    rec(src, dst, &gens, &candidates, 0, &start, visit);
}

/// The isomorphism `src -> dst` sending each `gens[i]` to `images[i]`, if
/// the assignment extends to one.
pub fn extend_isomorphism(
    src: &LoopTable,
    dst: &LoopTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Permutation> {
    if src.order() != dst.order() || gens.len() != images.len() {
        return None;
    }
    let mut state = Partial::new(src.order());
    for (&g, &img) in gens.iter().zip(images) {
        if !state.assign(g, img) || !state.close(src, dst) {
            return None;
        }
    }
    if !state.close(src, dst) || state.dom.len() != src.order() {
        return None;
    }
    Permutation::from_images(state.map.iter().map(|&v| v as usize).collect()).ok()
}

/// All isomorphisms `src -> dst` as relabeling permutations, sorted.
pub fn all_isomorphisms(src: &LoopTable, dst: &LoopTable) -> Vec<Permutation> {
    let mut out = Vec::new();
    search(src, dst, &mut |p| {
        out.push(p);
        true
    });
    out.sort_unstable();
    out
}

/// An isomorphism `l -> m` as a relabeling permutation, if one exists.
pub fn is_isomorphic(l: &LoopTable, m: &LoopTable) -> Option<Permutation> {
    let mut found = None;
    search(l, m, &mut |p| {
        found = Some(p);
        false
    });
    found
}

/// `m` is isotopic to `l` iff it is isomorphic to some principal isotope of
/// `l`.
pub fn is_isotopic(l: &LoopTable, m: &LoopTable) -> bool {
    if l.order() != m.order() {
        return false;
    }
    let target = canonical_form(m);
    (0..l.order())
        .any(|a| (0..l.order()).any(|b| canonical_form(&l.principal_isotope(a, b)) == target))
}

/// Cells `(r, c)` with `r, c >= 1` in shell order: shell `m` lists
/// `(m, 1..=m)` and then `(1..m, m)`.
fn shell(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m)
        .map(move |c| (m, c))
        .chain((1..m).map(move |r| (r, m)))
}

struct Canon<'a> {
    l: &'a LoopTable,
    best: Option<Vec<u16>>,
    best_labels: Vec<u16>,
}

impl Canon<'_> {
    fn rec(
        &mut self,
        m: usize,
        order: &mut Vec<usize>,
        label: &mut Vec<u16>,
        seq: &mut Vec<u16>,
        mut cmp: Ordering,
    ) {
        let n = self.l.order();
        if m == n {
            if self.best.is_none() || cmp == Ordering::Less {
                self.best = Some(seq.clone());
                self.best_labels = label.clone();
            }
            return;
        }
        if order.len() == m {
            // labels 0..m form a subloop; any other element may come next
            for v in 0..n {
                if label[v] != NONE {
                    continue;
                }
                label[v] = m as u16;
                order.push(v);
                // an earlier sibling may have replaced `best` with an
                // extension of this prefix
                let cmp = match &self.best {
                    Some(best) if best[..seq.len()] == seq[..] => Ordering::Equal,
                    _ => cmp,
                };
                self.rec(m, order, label, seq, cmp);
                order.pop();
                label[v] = NONE;
            }
            return;
        }
        let seq_len = seq.len();
        let order_len = order.len();
        for (r, c) in shell(m) {
            let v = self.l.mul(order[r], order[c]);
            if label[v] == NONE {
                label[v] = order.len() as u16;
                order.push(v);
            }
            let value = label[v];
            if cmp == Ordering::Equal {
                if let Some(best) = &self.best {
                    cmp = value.cmp(&best[seq.len()]);
                }
            }
            seq.push(value);
            if cmp == Ordering::Greater {
                break;
            }
        }
        if cmp != Ordering::Greater {
            self.rec(m + 1, order, label, seq, cmp);
        }
        seq.truncate(seq_len);
        for &v in &order[order_len..] {
            label[v] = NONE;
        }
        order.truncate(order_len);
    }
}

/// The lexicographically least relabeling of `l` (unit kept at 0), with
/// cells compared in shell order.
///
/// Two loops are isomorphic iff their canonical forms are equal.
pub fn canonical_form(l: &LoopTable) -> LoopTable {
    let n = l.order();
    let mut label = vec![NONE; n];
    label[0] = 0;
    let mut order = vec![0];
    let mut canon = Canon {
        l,
        best: None,
        best_labels: Vec::new(),
    };
    let mut seq = Vec::with_capacity(n * n);
    canon.rec(1, &mut order, &mut label, &mut seq, Ordering::Equal);
    let pi = Permutation::from_images(canon.best_labels.iter().map(|&v| v as usize).collect())
        .expect("labels are a bijection");
    let mut out = l.relabel(&pi).expect("relabeling fixes the unit");
    out.names = None;
    out
}
