use crate::perm::Permutation;

/// Bit set over element indices of a group with at most 256 elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub(crate) struct ElemSet([u64; 4]);

impl ElemSet {
    pub fn singleton(i: usize) -> Self {
        let mut s = ElemSet::default();
        s.insert(i);
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let had = self.contains(i);
        self.0[i >> 6] |= 1 << (i & 63);
        !had
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..256).filter(move |&i| self.contains(i))
    }
}

/// Multiplication table of a materialized group, indexed by position in the
/// (sorted) element list.
pub(crate) struct CayleyTable {
    n: usize,
    mul: Vec<u16>,
    identity: usize,
    orders: Vec<u64>,
}

impl CayleyTable {
    pub fn new(elements: &[Permutation]) -> Self {
        let n = elements.len();
        let index = |p: &Permutation| elements.binary_search(p).expect("closed element set") as u16;
        let mut mul = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                mul.push(index(&a.then(b)));
            }
        }
        let identity = elements
            .iter()
            .position(|e| e.is_identity())
            .expect("identity");
        let orders = elements.iter().map(|e| e.order()).collect();
        CayleyTable {
            n,
            mul,
            identity,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer_size(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.commutes(a, b)).count()
    }

    /// Subgroup generated by the given element indices.
    pub fn close(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut current = ElemSet::singleton(self.identity);
        let mut gens = Vec::new();
        while current.len() < self.n {
            let mut best: Option<(usize, ElemSet)> = None;
            for cand in 0..self.n {
                if current.contains(cand) {
                    continue;
                }
                gens.push(cand);
                let s = self.close(&gens);
                gens.pop();
                if best.as_ref().is_none_or(|(_, b)| s.len() > b.len()) {
                    best = Some((cand, s));
                }
            }
            let (g, s) = best.expect("proper subgroup has a missing element");
            gens.push(g);
            current = s;
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elemset_basics() {
        let mut s = ElemSet::default();
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.insert(200));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 200]);
        assert!(s.contains(200) && !s.contains(4));
    }
}
