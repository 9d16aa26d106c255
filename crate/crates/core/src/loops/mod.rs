//! Finite loops stored as normalized Latin squares.
//!
//! Elements are indices `0..n`; index 0 is always the two-sided unit. The
//! table entry at row `x`, column `y` is the product `x·y`.

mod builtin;
pub mod catalog;
pub mod format;
mod iso;

use std::fmt;

use serde::Serialize;

use crate::error::LoopError;
use crate::perm::Permutation;

pub use builtin::{builtin, BuiltinLoop};
pub use iso::{
    all_isomorphisms, canonical_form, extend_isomorphism, is_isomorphic, is_isotopic,
    ElementProfile,
};

/// Largest accepted loop order.
pub const MAX_ORDER: usize = 1024;

/// A finite loop as a validated, normalized multiplication table, together
/// with precomputed left and right division tables.
#[derive(Clone)]
pub struct LoopTable {
    n: usize,
    table: Vec<u16>,
    ldiv: Vec<u16>,
    rdiv: Vec<u16>,
    names: Option<Vec<String>>,
}

impl PartialEq for LoopTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for LoopTable {}

impl std::hash::Hash for LoopTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.table.hash(state);
    }
}

impl PartialOrd for LoopTable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then row-major table contents.
impl Ord for LoopTable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.table.cmp(&other.table))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Nucleus {
    Left,
    Middle,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    LeftBol,
    Lcc,
    Associative,
    Lip,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::LeftBol,
        Property::Lcc,
        Property::Associative,
        Property::Lip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LeftBol => "left_bol",
            Property::Lcc => "lcc",
            Property::Associative => "associative",
            Property::Lip => "lip",
        }
    }
}

/// Counterexample to a loop identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyCheck {
    fn pass() -> Self {
        PropertyCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        PropertyCheck {
            holds: false,
            witness: Some(w),
        }
    }
}

impl LoopTable {
    /// Validates a square table. With `normalize`, a two-sided unit that is
    /// not element 0 is swapped into position 0.
    pub fn from_rows(rows: &[Vec<usize>], normalize: bool) -> Result<Self, LoopError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(LoopError::NotSquare);
        }
        if n > MAX_ORDER {
            return Err(LoopError::OrderTooLarge(n));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(LoopError::BadEntry {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        let table: Vec<u16> = rows.iter().flatten().map(|&v| v as u16).collect();
        Self::from_flat(n, table, normalize)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u16>, normalize: bool) -> Result<Self, LoopError> {
        debug_assert_eq!(table.len(), n * n);
        let mut seen = vec![u32::MAX; n];
        let mut stamp = 0u32;
        for r in 0..n {
            for c in 0..n {
                let v = table[r * n + c] as usize;
                if seen[v] == stamp {
                    return Err(LoopError::NotLatin {
                        line: "row",
                        index: r,
                        value: v,
                    });
                }
                seen[v] = stamp;
            }
            stamp += 1;
        }
        for c in 0..n {
            for r in 0..n {
                let v = table[r * n + c] as usize;
                if seen[v] == stamp {
                    return Err(LoopError::NotLatin {
                        line: "column",
                        index: c,
                        value: v,
                    });
                }
                seen[v] = stamp;
            }
            stamp += 1;
        }
        let unit = (0..n)
            .find(|&u| {
                (0..n).all(|y| table[u * n + y] as usize == y && table[y * n + u] as usize == y)
            })
            .ok_or(LoopError::NoUnit)?;
        let table = if unit == 0 {
            table
        } else if normalize {
            let swap = |x: usize| {
                if x == unit {
                    0
                } else if x == 0 {
                    unit
                } else {
                    x
                }
            };
            let mut t = vec![0u16; n * n];
            for x in 0..n {
                for y in 0..n {
                    t[swap(x) * n + swap(y)] = swap(table[x * n + y] as usize) as u16;
                }
            }
            t
        } else {
            return Err(LoopError::UnitNotZero(unit));
        };
        let mut ldiv = vec![0u16; n * n];
        let mut rdiv = vec![0u16; n * n];
        for x in 0..n {
            for z in 0..n {
                let y = table[x * n + z] as usize;
                // x·z = y  =>  x\y = z and y/z = x
                ldiv[x * n + y] = z as u16;
                rdiv[y * n + z] = x as u16;
            }
        }
        Ok(LoopTable {
            n,
            table,
            ldiv,
            rdiv,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element (its index when the loop has no names).
    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(v) => v[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// `x\y`: the unique `z` with `x·z = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.n + y] as usize
    }

    /// `x/y`: the unique `z` with `z·y = x`.
    #[inline]
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        self.rdiv[x * self.n + y] as usize
    }

    /// `λ_x: y -> x·y`
    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation::from_fn(self.n, |y| self.mul(x, y))
    }

    /// `ρ_x: y -> y·x`
    pub fn right_translation(&self, x: usize) -> Permutation {
        Permutation::from_fn(self.n, |y| self.mul(y, x))
    }

    /// All left translations in index order.
    pub fn section(&self) -> Vec<Permutation> {
        (0..self.n).map(|x| self.left_translation(x)).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn in_nucleus(&self, kind: Nucleus, a: usize) -> bool {
        let n = self.n;
        let m = |x, y| self.mul(x, y);
        match kind {
            Nucleus::Left => (0..n).all(|x| (0..n).all(|y| m(m(a, x), y) == m(a, m(x, y)))),
            Nucleus::Middle => (0..n).all(|x| (0..n).all(|y| m(m(x, a), y) == m(x, m(a, y)))),
            Nucleus::Right => (0..n).all(|x| (0..n).all(|y| m(m(x, y), a) == m(x, m(y, a)))),
        }
    }

    /// Sorted nucleus elements.
    pub fn nucleus(&self, kind: Nucleus) -> Vec<usize> {
        (0..self.n).filter(|&a| self.in_nucleus(kind, a)).collect()
    }

    /// The inverse map `J` with `λ_x^-1 = λ_{J(x)}`, if the loop has the left
    /// inverse property.
    pub fn lip_inverse_map(&self) -> Option<Permutation> {
        let images: Vec<usize> = (0..self.n).map(|x| self.rdiv(0, x)).collect();
        let lip = images
            .iter()
            .enumerate()
            .all(|(x, &y)| (0..self.n).all(|z| self.mul(y, self.mul(x, z)) == z));
        if !lip {
            return None;
        }
        Permutation::from_images(images).ok()
    }

    pub fn check_property(&self, prop: Property) -> PropertyCheck {
        let n = self.n;
        let m = |x, y| self.mul(x, y);
        match prop {
            Property::LeftBol => {
                for x in 0..n {
                    for y in 0..n {
                        let w = m(x, m(y, x));
                        for z in 0..n {
                            if m(x, m(y, m(x, z))) != m(w, z) {
                                return PropertyCheck::fail(Witness::Triple(x, y, z));
                            }
                        }
                    }
                }
                PropertyCheck::pass()
            }
            Property::Associative => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if m(m(x, y), z) != m(x, m(y, z)) {
                                return PropertyCheck::fail(Witness::Triple(x, y, z));
                            }
                        }
                    }
                }
                PropertyCheck::pass()
            }
            Property::Lcc => {
                // λ_x^-1 λ_y λ_x : z -> x·(y·(x\z)), which must be λ_w with
                // w its value at the unit.
                for x in 0..n {
                    for y in 0..n {
                        let w = m(x, m(y, self.ldiv(x, 0)));
                        if (0..n).any(|z| m(x, m(y, self.ldiv(x, z))) != m(w, z)) {
                            return PropertyCheck::fail(Witness::Pair(x, y));
                        }
                    }
                }
                PropertyCheck::pass()
            }
            Property::Lip => {
                for x in 0..n {
                    let y = self.rdiv(0, x);
                    if (0..n).any(|z| m(y, m(x, z)) != z) {
                        return PropertyCheck::fail(Witness::Element(x));
                    }
                }
                PropertyCheck::pass()
            }
        }
    }

    pub fn is(&self, prop: Property) -> bool {
        self.check_property(prop).holds
    }

    /// Relabels elements by `pi`: the new table satisfies
    /// `T'[pi(x)][pi(y)] = pi(T[x][y])`. `pi` must send the unit to 0.
    pub fn relabel(&self, pi: &Permutation) -> Result<LoopTable, LoopError> {
        assert_eq!(pi.degree(), self.n);
        let n = self.n;
        let mut t = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                t[pi.apply(x) * n + pi.apply(y)] = pi.apply(self.mul(x, y)) as u16;
            }
        }
        let mut out = LoopTable::from_flat(n, t, false)?;
        if let Some(names) = &self.names {
            let mut new = names.clone();
            for (x, name) in names.iter().enumerate() {
                new[pi.apply(x)] = name.clone();
            }
            out.names = Some(new);
        }
        Ok(out)
    }

    /// Principal isotope `x∘y = (x/b)·(a\y)` with unit `a·b`, relabeled by
    /// the transposition that moves the unit to index 0.
    pub fn principal_isotope(&self, a: usize, b: usize) -> LoopTable {
        let n = self.n;
        let mut t = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                t[x * n + y] = self.mul(self.rdiv(x, b), self.ldiv(a, y)) as u16;
            }
        }
        LoopTable::from_flat(n, t, true).expect("principal isotope of a loop is a loop")
    }

    /// Sorted subloop generated by `gens`.
    pub fn subloop(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut elems = vec![0];
        for &g in gens {
            if !member[g] {
                member[g] = true;
                elems.push(g);
            }
        }
        // closure under multiplication suffices in a finite loop
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            let mut j = 0;
            while j <= i {
                let y = elems[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !member[p] {
                        member[p] = true;
                        elems.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Greedy generating set: repeatedly adjoins the element whose addition
    /// gives the largest subloop.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.n {
            let mut best: Option<(usize, usize)> = None;
            for c in 0..self.n {
                if current.binary_search(&c).is_ok() {
                    continue;
                }
                gens.push(c);
                let size = self.subloop(&gens).len();
                gens.pop();
                if best.is_none_or(|(_, s)| size > s) {
                    best = Some((c, size));
                }
            }
            let (c, _) = best.expect("proper subloop misses an element");
            gens.push(c);
            current = self.subloop(&gens);
        }
        gens
    }

    /// Multiplication table of a subloop, relabeled to `0..k` in the order
    /// of `elems` (which must start with the unit).
    pub fn induced_subtable(&self, elems: &[usize]) -> Option<LoopTable> {
        let pos = |x: usize| elems.iter().position(|&e| e == x);
        let rows: Option<Vec<Vec<usize>>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos(self.mul(x, y))).collect())
            .collect();
        LoopTable::from_rows(&rows?, false).ok()
    }
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LoopTable(order {})", self.n)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> LoopTable {
        LoopTable::from_rows(&[vec![0, 1], vec![1, 0]], false).unwrap()
    }

    #[test]
    fn smallest_group() {
        let l = c2();
        assert_eq!(l.order(), 2);
        assert_eq!(l.lip_inverse_map().unwrap(), Permutation::identity(2));
        assert!(l.is(Property::Associative));
    }

    #[test]
    fn validation_errors() {
        let dup = LoopTable::from_rows(&[vec![0, 1, 1], vec![1, 2, 0], vec![2, 0, 1]], false);
        assert!(matches!(
            dup,
            Err(LoopError::NotLatin {
                line: "row",
                index: 0,
                value: 1
            })
        ));
        let bad = LoopTable::from_rows(&[vec![0, 5], vec![1, 0]], false);
        assert!(matches!(bad, Err(LoopError::BadEntry { value: 5, .. })));
        let nosq = LoopTable::from_rows(&[vec![0, 1]], false);
        assert_eq!(nosq, Err(LoopError::NotSquare));
        // quasigroup without unit: x·y = -x-y mod 3
        let q = LoopTable::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]], false);
        assert_eq!(q, Err(LoopError::NoUnit));
    }

    #[test]
    fn normalization_moves_unit() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(
            LoopTable::from_rows(&rows, false),
            Err(LoopError::UnitNotZero(1))
        );
        let l = LoopTable::from_rows(&rows, true).unwrap();
        assert_eq!(l, c2());
    }

    #[test]
    fn unit_divisions() {
        let l = catalog::cyclic(5);
        for y in 0..5 {
            assert_eq!(l.ldiv(0, y), y);
            assert_eq!(l.rdiv(y, 0), y);
        }
    }

    #[test]
    fn trivial_loop() {
        let l = LoopTable::from_rows(&[vec![0]], false).unwrap();
        for p in Property::ALL {
            assert!(l.is(p));
        }
        assert_eq!(l.principal_isotope(0, 0), l);
        assert!(l.generating_set().is_empty());
    }

    #[test]
    fn isotope_at_unit_is_identity() {
        let l = catalog::nonbol5();
        assert_eq!(l.principal_isotope(0, 0), l);
    }
}
