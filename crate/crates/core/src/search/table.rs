//! Partial Latin squares with left Bol propagation.

use crate::loops::LoopTable;

const UNSET: u8 = u8::MAX;

/// A partially filled normalized Latin square of order at most 8.
///
/// Alongside the table it keeps, per row and per column, the used-value
/// bitmask and the partial inverse (`row_inv[x][v] = z` with `x·z = v`,
/// `col_inv[z][v] = x` with `x·z = v`). Every assignment is recorded on a
/// trail so it can be undone.
#[derive(Clone)]
pub struct PartialTable {
    n: usize,
    cells: [[u8; 8]; 8],
    row_inv: [[u8; 8]; 8],
    col_inv: [[u8; 8]; 8],
    row_used: [u16; 8],
    col_used: [u16; 8],
    trail: Vec<(u8, u8)>,
    queue: Vec<(u8, u8)>,
    filled: usize,
}

impl PartialTable {
    /// Empty table of order `n` with row 0 and column 0 set to the identity.
    pub fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n));
        let mut t = PartialTable {
            n,
            cells: [[UNSET; 8]; 8],
            row_inv: [[UNSET; 8]; 8],
            col_inv: [[UNSET; 8]; 8],
            row_used: [0; 8],
            col_used: [0; 8],
            trail: Vec::with_capacity(64),
            queue: Vec::with_capacity(64),
            filled: 0,
        };
        for i in 0..n {
            t.set(0, i, i);
            if i > 0 {
                t.set(i, 0, i);
            }
        }
        t.trail.clear();
        t
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        let v = self.cells[r][c];
        (v != UNSET).then_some(v as usize)
    }

    pub fn is_complete(&self) -> bool {
        self.filled == self.n * self.n
    }

    /// Values still allowed at `(r, c)` by the Latin constraints.
    pub fn candidates(&self, r: usize, c: usize) -> u16 {
        let full = (1u16 << self.n) - 1;
        full & !(self.row_used[r] | self.col_used[c])
    }

    fn set(&mut self, r: usize, c: usize, v: usize) {
        self.cells[r][c] = v as u8;
        self.row_inv[r][v] = c as u8;
        self.col_inv[c][v] = r as u8;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
        self.trail.push((r as u8, c as u8));
        self.filled += 1;
    }

    fn unset_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (r, c) = self.trail.pop().expect("trail above mark");
            let (r, c) = (r as usize, c as usize);
            let v = self.cells[r][c] as usize;
            self.cells[r][c] = UNSET;
            self.row_inv[r][v] = UNSET;
            self.col_inv[c][v] = UNSET;
            self.row_used[r] &= !(1 << v);
            self.col_used[c] &= !(1 << v);
            self.filled -= 1;
        }
    }

    /// Sets a cell (a no-op if it already holds `v`) and queues it for
    /// propagation. `false` on a Latin conflict.
    fn assign(&mut self, r: usize, c: usize, v: usize) -> bool {
        match self.cells[r][c] {
            UNSET => {
                if (self.row_used[r] | self.col_used[c]) & (1 << v) != 0 {
                    return false;
                }
                self.set(r, c, v);
                self.queue.push((r as u8, c as u8));
                true
            }
            cur => cur as usize == v,
        }
    }

    #[inline]
    fn cell(&self, r: usize, c: usize) -> u8 {
        self.cells[r][c]
    }

    /// Examines the Bol instance `x·(y·(x·z)) = (x·(y·x))·z`, assigning any
    /// cell it forces. `false` on a contradiction.
    fn instance(&mut self, x: usize, y: usize, z: usize) -> bool {
        // left chain: t1 = x·z, t2 = y·t1, lhs = x·t2
        // right chain: t3 = y·x, w = x·t3, rhs = w·z
        let t1 = self.cell(x, z);
        let t3 = self.cell(y, x);
        let w = if t3 == UNSET {
            UNSET
        } else {
            self.cell(x, t3 as usize)
        };
        let t2 = if t1 == UNSET {
            UNSET
        } else {
            self.cell(y, t1 as usize)
        };
        let lhs = if t2 == UNSET {
            UNSET
        } else {
            self.cell(x, t2 as usize)
        };
        let rhs = if w == UNSET {
            UNSET
        } else {
            self.cell(w as usize, z)
        };
        match (lhs, rhs) {
            (UNSET, UNSET) => true,
            (a, b) if a != UNSET && b != UNSET => a == b,
            (value, UNSET) => self.force_right(x, y, z, t3, w, value as usize),
            (UNSET, value) => self.force_left(x, y, z, t1, t2, value as usize),
            _ => unreachable!(),
        }
    }

    /// The left chain evaluates to `value`; push it through the right chain.
    fn force_right(&mut self, x: usize, y: usize, z: usize, t3: u8, w: u8, value: usize) -> bool {
        if w != UNSET {
            return self.assign(w as usize, z, value);
        }
        // w·z = value fixes w when column z already holds value
        let w_forced = self.col_inv[z][value];
        if w_forced == UNSET {
            return true;
        }
        if t3 != UNSET {
            return self.assign(x, t3 as usize, w_forced as usize);
        }
        let t3_forced = self.row_inv[x][w_forced as usize];
        if t3_forced == UNSET {
            return true;
        }
        self.assign(y, x, t3_forced as usize)
    }

    /// The right chain evaluates to `value`; push it through the left chain.
    fn force_left(&mut self, x: usize, y: usize, z: usize, t1: u8, t2: u8, value: usize) -> bool {
        if t2 != UNSET {
            return self.assign(x, t2 as usize, value);
        }
        let t2_forced = self.row_inv[x][value];
        if t2_forced == UNSET {
            return true;
        }
        if t1 != UNSET {
            return self.assign(y, t1 as usize, t2_forced as usize);
        }
        let t1_forced = self.row_inv[y][t2_forced as usize];
        if t1_forced == UNSET {
            return true;
        }
        self.assign(x, z, t1_forced as usize)
    }

    /// Re-examines every Bol instance in which the cell `(r, c)` can occupy
    /// a determined position.
    fn examine(&mut self, r: usize, c: usize) -> bool {
        let n = self.n;
        for other in 0..n {
            // (r, c) = x·z with x = r, z = c
            if !self.instance(r, other, c) {
                return false;
            }
            // (r, c) = y·x with y = r, x = c
            if !self.instance(c, r, other) {
                return false;
            }
            // (r, c) = w·z with w = r, z = c: x·(y·x) = r
            let x = other;
            let t3 = self.row_inv[x][r];
            if t3 != UNSET {
                let y = self.col_inv[x][t3 as usize];
                if y != UNSET && !self.instance(x, y as usize, c) {
                    return false;
                }
            }
            // (r, c) = y·t1 with y = r, t1 = c = x·z
            let z = self.row_inv[x][c];
            if z != UNSET && !self.instance(x, r, z as usize) {
                return false;
            }
            // (r, c) = x·t2 with x = r, t2 = c = y·t1, t1 = r·z
            let y = other;
            let t1 = self.row_inv[y][c];
            if t1 != UNSET {
                let z = self.row_inv[r][t1 as usize];
                if z != UNSET && !self.instance(r, y, z as usize) {
                    return false;
                }
            }
        }
        // (r, c) = x·t3 with x = r, t3 = c = y·r: y is fixed, z free
        let y = self.col_inv[r][c];
        if y != UNSET {
            for z in 0..n {
                if !self.instance(r, y as usize, z) {
                    return false;
                }
            }
        }
        true
    }

    /// Propagates queued assignments to a fixpoint.
    fn propagate(&mut self) -> bool {
        while let Some((r, c)) = self.queue.pop() {
            if !self.examine(r as usize, c as usize) {
                return false;
            }
        }
        true
    }

    fn try_assign(&mut self, r: usize, c: usize, v: usize) -> bool {
        self.queue.clear();
        self.assign(r, c, v) && self.propagate()
    }

    /// Assigns a whole row and propagates; on failure the table is left
    /// unchanged.
    pub fn assign_row(&mut self, r: usize, row: &[usize]) -> bool {
        let mark = self.trail.len();
        self.queue.clear();
        let ok = row.iter().enumerate().all(|(c, &v)| self.assign(r, c, v)) && self.propagate();
        if !ok {
            self.queue.clear();
            self.unset_to(mark);
        }
        ok
    }

    fn next_unset(&self) -> Option<(usize, usize)> {
        (1..self.n)
            .flat_map(|r| (1..self.n).map(move |c| (r, c)))
            .find(|&(r, c)| self.cells[r][c] == UNSET)
    }

    /// Depth-first completion in row-major cell order, smallest value first.
    /// `emit` sees every completed table exactly once, in lexicographic
    /// order.
    pub fn complete(&mut self, nodes: &mut u64, emit: &mut dyn FnMut(&PartialTable)) {
        *nodes += 1;
        let Some((r, c)) = self.next_unset() else {
            emit(self);
            return;
        };
        let mut cands = self.candidates(r, c);
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mark = self.trail.len();
            if self.try_assign(r, c, v) {
                self.complete(nodes, emit);
            }
            self.queue.clear();
            self.unset_to(mark);
        }
    }

    /// All rows that may follow row 0 as row 1 of a normalized Latin square.
    pub fn first_row_candidates(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        let mut row = vec![1usize; n];
        fn rec(
            t: &PartialTable,
            c: usize,
            used: u16,
            row: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if c == t.n {
                out.push(row.clone());
                return;
            }
            let mut cands = t.candidates(1, c) & !used;
            while cands != 0 {
                let v = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                row[c] = v;
                rec(t, c + 1, used | (1 << v), row, out);
            }
        }
        if n > 1 {
            rec(self, 1, 1 << 1, &mut row, &mut out);
        }
        out
    }

    pub fn to_loop(&self) -> LoopTable {
        debug_assert!(self.is_complete());
        let rows: Vec<Vec<usize>> = (0..self.n)
            .map(|r| (0..self.n).map(|c| self.cells[r][c] as usize).collect())
            .collect();
        LoopTable::from_rows(&rows, false).expect("completed partial table is a loop")
    }
}

/// `row` is a permutation with `row[0] = 1`. Relabeling by `π` fixing 0 and
/// 1 turns it into `π⁻¹·row·π`; the leader is the lexicographically least
/// such conjugate.
pub fn is_conjugacy_leader(row: &[usize]) -> bool {
    let n = row.len();
    let mut pi: Vec<usize> = (0..n).collect();
    let mut inv = vec![0usize; n];
    let mut conj = vec![0usize; n];
    loop {
        // conjugate: pi(x) -> pi(row(x))
        for (x, &p) in pi.iter().enumerate() {
            inv[p] = x;
        }
        for (y, slot) in conj.iter_mut().enumerate() {
            *slot = pi[row[inv[y]]];
        }
        if conj.as_slice() < row {
            return false;
        }
        if !next_permutation(&mut pi[2..]) {
            return true;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_table() {
        let t = PartialTable::new(4);
        assert_eq!(t.get(0, 3), Some(3));
        assert_eq!(t.get(2, 0), Some(2));
        assert_eq!(t.get(1, 1), None);
        assert_eq!(t.candidates(1, 1), 0b1101);
        assert_eq!(t.first_row_candidates().len(), 3);
    }

    #[test]
    fn leader_detection() {
        // transposition (0 1) with fixed points vs. the 4-cycle class
        assert!(is_conjugacy_leader(&[1, 0, 2, 3]));
        assert!(is_conjugacy_leader(&[1, 0, 3, 2]));
        assert!(is_conjugacy_leader(&[1, 2, 0, 3]));
        // (0 1 3) is conjugate to (0 1 2) by swapping 2 and 3
        assert!(!is_conjugacy_leader(&[1, 3, 2, 0]));
    }

    #[test]
    fn failed_row_leaves_table_unchanged() {
        let mut t = PartialTable::new(3);
        assert!(!t.assign_row(1, &[1, 1, 0]));
        assert_eq!(t.get(1, 1), None);
        assert!(t.assign_row(1, &[1, 2, 0]));
        // order 3 is forced to Z_3 once row 1 is set
        let mut nodes = 0;
        let mut count = 0;
        t.complete(&mut nodes, &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
