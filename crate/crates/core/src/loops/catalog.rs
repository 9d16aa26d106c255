//! Small reference loops: group tables and a few non-associative examples.

use super::LoopTable;
use crate::group::{named, GeneratedGroup};

/// Cayley table of a permutation group. Elements are indexed in sorted
/// order, so the identity is element 0.
pub fn from_group(g: &GeneratedGroup) -> LoopTable {
    let elems = g.elements();
    let rows: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| g.index_of(&a.then(b)).expect("group is closed"))
                .collect()
        })
        .collect();
    LoopTable::from_rows(&rows, false).expect("group table is a loop")
}

/// `Z_n` under addition.
pub fn cyclic(n: usize) -> LoopTable {
    assert!(n > 0);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| (x + y) % n).collect())
        .collect();
    LoopTable::from_rows(&rows, false).expect("Z_n is a loop")
}

pub fn quaternion() -> LoopTable {
    from_group(&named::quaternion8())
}

/// The smallest non-associative loops have order 5; this one is neither
/// left Bol nor left inverse.
pub fn nonbol5() -> LoopTable {
    let rows = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    LoopTable::from_rows(&rows, false).expect("valid loop")
}

/// The `B2` rules with exponent `i + j + 2ij` in the products `(f^i g) f^j`
/// and `(f^i g)(f^j g)`, encoded like the builtin loops. It is a left Bol
/// loop isotopic to `B2` but not isomorphic to it.
pub fn b2_as_printed() -> LoopTable {
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (i, j) = (x % 4, y % 4);
                    match (x >= 4, y >= 4) {
                        (false, false) => (i + j) % 4,
                        (false, true) => (i + j) % 4 + 4,
                        (true, false) => (i + j + 2 * i * j) % 4 + 4,
                        (true, true) => (i + j + 2 * i * j) % 4,
                    }
                })
                .collect()
        })
        .collect();
    LoopTable::from_rows(&rows, false).expect("valid loop")
}

/// One table for every group of order at most 8, with a short name.
pub fn small_groups() -> Vec<(&'static str, LoopTable)> {
    let mut out: Vec<(&'static str, LoopTable)> = vec![
        ("C1", cyclic(1)),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2xC2", from_group(&named::elementary_abelian(2))),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", from_group(&named::symmetric(3))),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C2xC4", from_group(&named::c2_x_c4())),
        ("C2xC2xC2", from_group(&named::elementary_abelian(3))),
        ("D8", from_group(&named::dihedral8())),
        ("Q8", quaternion()),
    ];
    out.sort_by_key(|(_, l)| l.order());
    out
}
