//! The 3-net of a loop: points `L×L`, vertical lines `x = c`, horizontal
//! lines `y = c` and transversal lines `x·y = c`.
//!
//! Points are indexed `p = x·n + y` wherever a net permutation is needed, so
//! collineation groups of the same loop are directly comparable.

mod collineations;
mod report;

use serde::Serialize;

use crate::loops::LoopTable;
use crate::perm::Permutation;

pub use collineations::{
    beta_projection, bol_reflection, enumerate_gamma, full_group, generated_gamma,
    make_dir_collineation, n_generators, n_group, orbit_of_origin, phi, phi_kernel, recoordinatize,
    stabilizer, Gamma, StabilizerKind, MAX_NET_ORDER,
};
pub use report::{structure_report, NetGroupReport, StructureCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NetPoint {
    pub x: usize,
    pub y: usize,
}

impl NetPoint {
    pub const ORIGIN: NetPoint = NetPoint { x: 0, y: 0 };

    pub fn index(self, n: usize) -> usize {
        self.x * n + self.y
    }

    pub fn from_index(p: usize, n: usize) -> NetPoint {
        NetPoint { x: p / n, y: p % n }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineClass {
    Vertical,
    Horizontal,
    Transversal,
}

impl LineClass {
    pub const ALL: [LineClass; 3] = [
        LineClass::Vertical,
        LineClass::Horizontal,
        LineClass::Transversal,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

/// A line of the net: `class` plus the constant `c` (`x`, `y` or `x·y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LineRef {
    pub class: LineClass,
    pub c: usize,
}

impl LineRef {
    /// `l_h`, the horizontal line through the origin.
    pub const L_H: LineRef = LineRef {
        class: LineClass::Horizontal,
        c: 0,
    };
    /// `l_v`, the vertical line through the origin.
    pub const L_V: LineRef = LineRef {
        class: LineClass::Vertical,
        c: 0,
    };

    /// The `n` points of the line, sorted by index.
    pub fn points(self, l: &LoopTable) -> Vec<NetPoint> {
        let n = l.order();
        match self.class {
            LineClass::Vertical => (0..n).map(|y| NetPoint { x: self.c, y }).collect(),
            LineClass::Horizontal => (0..n).map(|x| NetPoint { x, y: self.c }).collect(),
            LineClass::Transversal => (0..n)
                .map(|x| NetPoint {
                    x,
                    y: l.ldiv(x, self.c),
                })
                .collect(),
        }
    }

    pub fn point_indices(self, l: &LoopTable) -> Vec<usize> {
        self.points(l)
            .into_iter()
            .map(|p| p.index(l.order()))
            .collect()
    }

    pub fn contains(self, l: &LoopTable, p: NetPoint) -> bool {
        match self.class {
            LineClass::Vertical => p.x == self.c,
            LineClass::Horizontal => p.y == self.c,
            LineClass::Transversal => l.mul(p.x, p.y) == self.c,
        }
    }

    pub fn all(l: &LoopTable) -> impl Iterator<Item = LineRef> + '_ {
        LineClass::ALL
            .into_iter()
            .flat_map(move |class| (0..l.order()).map(move |c| LineRef { class, c }))
    }

    /// The line through `p` in the given class.
    pub fn through(l: &LoopTable, class: LineClass, p: NetPoint) -> LineRef {
        let c = match class {
            LineClass::Vertical => p.x,
            LineClass::Horizontal => p.y,
            LineClass::Transversal => l.mul(p.x, p.y),
        };
        LineRef { class, c }
    }
}

/// A direction preserving collineation `(x, y) -> (x^α, y^β)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirCollineation {
    pub alpha: Permutation,
    pub beta: Permutation,
}

impl DirCollineation {
    pub fn identity(n: usize) -> Self {
        DirCollineation {
            alpha: Permutation::identity(n),
            beta: Permutation::identity(n),
        }
    }

    /// `x^α · y^β = 1^α · (xy)^β` for all `x, y`.
    pub fn is_valid(&self, l: &LoopTable) -> bool {
        let a = self.alpha.apply(0);
        l.elements().all(|x| {
            l.elements().all(|y| {
                l.mul(self.alpha.apply(x), self.beta.apply(y))
                    == l.mul(a, self.beta.apply(l.mul(x, y)))
            })
        })
    }

    pub fn apply(&self, p: NetPoint) -> NetPoint {
        NetPoint {
            x: self.alpha.apply(p.x),
            y: self.beta.apply(p.y),
        }
    }

    /// Action on the `n²` point indices.
    pub fn point_map(&self) -> Permutation {
        let n = self.alpha.degree();
        Permutation::from_fn(n * n, |p| self.apply(NetPoint::from_index(p, n)).index(n))
    }

    /// Reads `(α, β)` back from a point permutation that fixes every
    /// parallel class; `None` if the point map does not split.
    pub fn from_point_map(n: usize, map: &Permutation) -> Option<Self> {
        let image =
            |x: usize, y: usize| NetPoint::from_index(map.apply(NetPoint { x, y }.index(n)), n);
        let alpha = Permutation::from_images((0..n).map(|x| image(x, 0).x).collect()).ok()?;
        let beta = Permutation::from_images((0..n).map(|y| image(0, y).y).collect()).ok()?;
        let dc = DirCollineation { alpha, beta };
        (dc.point_map() == *map).then_some(dc)
    }

    /// Applies `self` first.
    pub fn then(&self, other: &DirCollineation) -> DirCollineation {
        DirCollineation {
            alpha: self.alpha.then(&other.alpha),
            beta: self.beta.then(&other.beta),
        }
    }
}

/// A collineation of the net together with its action on the three
/// parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullCollineation {
    pub point_map: Permutation,
    /// Permutation of the classes in the order vertical, horizontal,
    /// transversal.
    pub direction_action: Permutation,
}

impl FullCollineation {
    /// Checks that `point_map` sends every line onto a line and that some
    /// permutation of the classes agrees with every line. Only for `n = 1`,
    /// where the single point lies on all three lines, is there a choice;
    /// the first consistent permutation (identity first) is taken.
    pub fn from_point_map(l: &LoopTable, point_map: Permutation) -> Option<Self> {
        let n = l.order();
        if point_map.degree() != n * n {
            return None;
        }
        // allowed[c][d]: every line of class c maps onto a line of class d
        let mut allowed = [[true; 3]; 3];
        for line in LineRef::all(l) {
            let image: Vec<NetPoint> = line
                .points(l)
                .into_iter()
                .map(|p| NetPoint::from_index(point_map.apply(p.index(n)), n))
                .collect();
            for target in LineClass::ALL {
                let fits = image
                    .iter()
                    .all(|&p| LineRef::through(l, target, image[0]).contains(l, p));
                allowed[line.class.index()][target.index()] &= fits;
            }
        }
        const CLASS_PERMUTATIONS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let images = CLASS_PERMUTATIONS
            .into_iter()
            .find(|perm| (0..3).all(|c| allowed[c][perm[c]]))?;
        let direction_action = Permutation::from_images(images.to_vec()).ok()?;
        Some(FullCollineation {
            point_map,
            direction_action,
        })
    }

    pub fn is_direction_preserving(&self) -> bool {
        self.direction_action.is_identity()
    }

    pub fn class_image(&self, class: LineClass) -> LineClass {
        LineClass::ALL[self.direction_action.apply(class.index())]
    }

    pub fn apply(&self, l: &LoopTable, p: NetPoint) -> NetPoint {
        let n = l.order();
        NetPoint::from_index(self.point_map.apply(p.index(n)), n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::builtin;

    #[test]
    fn lines_have_n_points() {
        let l = builtin("B1").unwrap();
        for line in LineRef::all(&l) {
            let pts = line.points(&l);
            assert_eq!(pts.len(), 8);
            assert!(pts.iter().all(|&p| line.contains(&l, p)));
        }
        assert_eq!(LineRef::all(&l).count(), 24);
    }

    #[test]
    fn point_index_round_trip() {
        for p in 0..64 {
            assert_eq!(NetPoint::from_index(p, 8).index(8), p);
        }
        assert_eq!(NetPoint { x: 2, y: 3 }.index(8), 19);
    }

    #[test]
    fn identity_collineation() {
        let l = builtin("B2").unwrap();
        let id = DirCollineation::identity(8);
        assert!(id.is_valid(&l));
        assert!(id.point_map().is_identity());
        let full = FullCollineation::from_point_map(&l, id.point_map()).unwrap();
        assert!(full.is_direction_preserving());
        assert_eq!(
            DirCollineation::from_point_map(8, &id.point_map()),
            Some(id)
        );
    }

    #[test]
    fn non_collineation_rejected() {
        let l = builtin("B1").unwrap();
        // swapping two points of the same vertical line breaks a horizontal line
        let swap = Permutation::from_cycles(64, &[&[1, 2]]).unwrap();
        assert!(FullCollineation::from_point_map(&l, swap.clone()).is_none());
        assert!(DirCollineation::from_point_map(8, &swap).is_none());
    }

    #[test]
    fn trivial_net_reflection() {
        // the single point of the order-1 net lies on all three lines
        let l = crate::loops::catalog::cyclic(1);
        let full = FullCollineation::from_point_map(&l, Permutation::identity(1)).unwrap();
        assert!(full.is_direction_preserving());
    }
}
