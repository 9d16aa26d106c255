use std::str::FromStr;

use super::LoopTable;
use crate::error::LoopError;

/// The two order-8 left Bol loops shipped with the crate.
///
/// Elements are `f^i g^j` (`i` mod 4, `j` in {0, 1}) encoded as `i + 4j`,
/// so `e, f, f², f³, g, fg, f²g, f³g` are `0..8`.
///
/// In `B2` the exponent of the products `(f^i g) f^j` and `(f^i g)(f^j g)`
/// is `i - j + 2ij`. With `i + j + 2ij` instead (see
/// [`catalog::b2_as_printed`](super::catalog::b2_as_printed)) the loop is
/// still left Bol but has only four automorphisms, and `f -> fg, g -> g`
/// no longer extends to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinLoop {
    B1,
    B2,
}

impl BuiltinLoop {
    pub const ALL: [BuiltinLoop; 2] = [BuiltinLoop::B1, BuiltinLoop::B2];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinLoop::B1 => "B1",
            BuiltinLoop::B2 => "B2",
        }
    }

    pub fn table(self) -> LoopTable {
        let mut rows = vec![vec![0usize; 8]; 8];
        for (x, row) in rows.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                *cell = self.product(x, y);
            }
        }
        LoopTable::from_rows(&rows, false)
            .expect("builtin rules define a loop")
            .with_names(element_names())
    }

    fn product(self, x: usize, y: usize) -> usize {
        let (i, xg) = (x % 4, x >= 4);
        let (j, yg) = (y % 4, y >= 4);
        let enc = |k: usize, g: bool| k % 4 + if g { 4 } else { 0 };
        match (self, xg, yg) {
            // f^i f^j = f^(i+j)
            (_, false, false) => enc(i + j, false),
            // f^i (f^j g) = f^(i+j) g
            (_, false, true) => enc(i + j, true),
            // (f^i g) f^j = f^(i+j) g
            (BuiltinLoop::B1, true, false) => enc(i + j, true),
            // (f^i g)(f^j g) = f^(2-i+j)
            (BuiltinLoop::B1, true, true) => enc(2 + 4 - i + j, false),
            // (f^i g) f^j = f^(i-j+2ij) g
            (BuiltinLoop::B2, true, false) => enc(i + 3 * j + 2 * i * j, true),
            // (f^i g)(f^j g) = f^(i-j+2ij)
            (BuiltinLoop::B2, true, true) => enc(i + 3 * j + 2 * i * j, false),
        }
    }
}

impl FromStr for BuiltinLoop {
    type Err = LoopError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B1" | "b1" => Ok(BuiltinLoop::B1),
            "B2" | "b2" => Ok(BuiltinLoop::B2),
            other => Err(LoopError::UnknownName(other.to_string())),
        }
    }
}

pub fn builtin(name: &str) -> Result<LoopTable, LoopError> {
    Ok(name.parse::<BuiltinLoop>()?.table())
}

fn element_names() -> Vec<String> {
    ["e", "f", "f^2", "f^3", "g", "fg", "f^2g", "f^3g"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{Nucleus, Property, Witness};
    use crate::perm::Permutation;

    #[test]
    fn b1_products() {
        let b1 = builtin("B1").unwrap();
        assert_eq!(b1.mul(1, 4), 5);
        assert_eq!(b1.mul(4, 4), 2);
        assert_eq!(b1.mul(5, 1), 6);
        assert_eq!(b1.ldiv(4, 2), 4);
        assert_eq!(b1.rdiv(6, 1), 5);
    }

    #[test]
    fn b2_products() {
        let b2 = builtin("B2").unwrap();
        // (fg)·f = f²g, g·g = e, (fg)(fg) = f², g·f = f³g
        assert_eq!(b2.mul(5, 1), 6);
        assert_eq!(b2.mul(4, 4), 0);
        assert_eq!(b2.mul(5, 5), 2);
        assert_eq!(b2.mul(4, 1), 7);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(builtin("B3"), Err(LoopError::UnknownName("B3".into())));
    }

    #[test]
    fn rows_round_trip() {
        for b in BuiltinLoop::ALL {
            let t = b.table();
            assert_eq!(LoopTable::from_rows(&t.rows(), false).unwrap(), t);
        }
    }

    #[test]
    fn left_translation_by_g() {
        let b1 = builtin("B1").unwrap();
        let expected = Permutation::from_images(vec![4, 5, 6, 7, 2, 3, 0, 1]).unwrap();
        assert_eq!(b1.left_translation(4), expected);
        assert!(b1.left_translation(0).is_identity());
    }

    #[test]
    fn nuclei() {
        let b1 = builtin("B1").unwrap();
        let b2 = builtin("B2").unwrap();
        assert_eq!(b1.nucleus(Nucleus::Left), vec![0, 2]);
        assert_eq!(b1.nucleus(Nucleus::Middle), vec![0, 2]);
        assert_eq!(b1.nucleus(Nucleus::Right), vec![0, 1, 2, 3]);
        assert_eq!(b2.nucleus(Nucleus::Left), vec![0, 2]);
        assert_eq!(b2.nucleus(Nucleus::Right), vec![0, 2, 4, 6]);
    }

    #[test]
    fn inverse_maps() {
        let b1 = builtin("B1").unwrap();
        let b2 = builtin("B2").unwrap();
        assert_eq!(b1.lip_inverse_map().unwrap().to_string(), "(1 3)(4 6)(5 7)");
        // (f^i g)² = f^(2i²): g and f²g are involutions, fg and f³g are
        // mutually inverse
        assert_eq!(b2.lip_inverse_map().unwrap().to_string(), "(1 3)(5 7)");
    }

    #[test]
    fn identities() {
        let b1 = builtin("B1").unwrap();
        let b2 = builtin("B2").unwrap();
        for l in [&b1, &b2] {
            assert!(l.is(Property::LeftBol));
            assert!(l.is(Property::Lip));
            assert!(!l.is(Property::Associative));
        }
        assert!(b1.is(Property::Lcc));
        // (g·f)·g = f while g·(f·g) = f³
        assert_eq!(b1.mul(b1.mul(4, 1), 4), 1);
        assert_eq!(b1.mul(4, b1.mul(1, 4)), 3);
        let check = b1.check_property(Property::Associative);
        let Some(Witness::Triple(x, y, z)) = check.witness else {
            panic!("expected a triple witness");
        };
        assert_ne!(b1.mul(b1.mul(x, y), z), b1.mul(x, b1.mul(y, z)));
    }
}
