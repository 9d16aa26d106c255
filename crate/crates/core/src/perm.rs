//! Permutations of `{0, .., n-1}`.
//!
//! Permutations act on the right: the product `a * b` first applies `a` and
//! then `b`, so `x^(ab) = (x^a)^b`. Every module in this crate composes maps
//! with this convention.

use std::fmt;
use std::ops::Mul;

use crate::error::GroupError;

/// A bijection on `{0, .., degree-1}` stored as its image sequence.
///
/// The derived ordering is the lexicographic order on image sequences, which
/// is what [`crate::group::GeneratedGroup`] uses to sort its elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its images, rejecting anything that is not
    /// a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(GroupError::NotAPermutation);
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Like [`Permutation::from_images`] for callers that have already
    /// established bijectivity.
    pub(crate) fn from_images_unchecked(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation { images }
    }

    pub(crate) fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_images_unchecked((0..degree).map(|i| f(i) as u16).collect())
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are
    /// fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(GroupError::NotAPermutation);
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `point`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `self^-1 * other * self`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().then(self).then(other)
    }

    /// The commutator `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().then(&b.inverse()).then(a).then(b)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// Order as a group element (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        self.then(&rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn right_action_composition() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&b * &a).apply(0), 1);
    }

    #[test]
    fn cycle_display_and_order() {
        let p = Permutation::from_cycles(8, &[&[1, 3], &[4, 6], &[5, 7]]).unwrap();
        assert_eq!(p.to_string(), "(1 3)(4 6)(5 7)");
        assert_eq!(p.order(), 2);
        let q = Permutation::from_cycles(8, &[&[4, 5, 6, 7]]).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_pow(p in perm_strategy(9), q in perm_strategy(9)) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.pow(p.order()).is_identity());
            let pq = p.then(&q);
            prop_assert_eq!(pq.inverse(), q.inverse().then(&p.inverse()));
            let c = Permutation::commutator(&p, &q);
            // pq = qp[p,q]
            prop_assert_eq!(pq, q.then(&p).then(&c));
        }
    }
}
