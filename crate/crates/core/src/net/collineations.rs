use rayon::prelude::*;
use serde::Serialize;

use super::{DirCollineation, FullCollineation, LineRef, NetPoint};
use crate::error::NetError;
use crate::group::GeneratedGroup;
use crate::loops::{LoopTable, Property};
use crate::maps::{pseudo_automorphisms, Side};
use crate::perm::Permutation;

/// Largest loop order accepted by [`enumerate_gamma`].
pub const MAX_NET_ORDER: usize = 12;

/// The direction preserving collineation `(α, β)` with `β` and `1^α = a`
/// given. `α` is forced by `x^α · 1^β = a · x^β`; the result is returned
/// only if the full identity `x^α · y^β = a · (xy)^β` holds.
pub fn make_dir_collineation(
    l: &LoopTable,
    beta: &Permutation,
    a: usize,
) -> Option<DirCollineation> {
    let n = l.order();
    if beta.degree() != n || a >= n {
        return None;
    }
    let b0 = beta.apply(0);
    let alpha = Permutation::from_images(
        l.elements()
            .map(|x| l.rdiv(l.mul(a, beta.apply(x)), b0))
            .collect(),
    )
    .ok()?;
    let dc = DirCollineation {
        alpha,
        beta: beta.clone(),
    };
    dc.is_valid(l).then_some(dc)
}

/// The direction preserving collineation group of a net, with its elements
/// as `(α, β)` pairs.
#[derive(Clone, Debug)]
pub struct Gamma {
    /// Sorted by point map, so in the same order as `group.elements()`.
    pub collineations: Vec<DirCollineation>,
    /// Acting on the point indices `x·n + y`.
    pub group: GeneratedGroup,
}

impl Gamma {
    pub fn order(&self) -> usize {
        self.collineations.len()
    }
}

/// Pairs `(x, y)`, both non-unit, grouped by the largest of `x`, `y`, `x·y`.
/// Once `β` is fixed on `0..=k`, every pair in `pairs[k]` can be checked.
fn pairs_by_last_index(l: &LoopTable) -> Vec<Vec<(usize, usize)>> {
    let n = l.order();
    let mut pairs = vec![Vec::new(); n];
    for x in 1..n {
        for y in 1..n {
            pairs[x.max(y).max(l.mul(x, y))].push((x, y));
        }
    }
    pairs
}

struct BetaSearch<'a> {
    l: &'a LoopTable,
    pairs: &'a [Vec<(usize, usize)>],
    a: usize,
    beta: Vec<usize>,
    alpha: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Permutation>,
}

impl BetaSearch<'_> {
    fn run(&mut self, k: usize) {
        let n = self.l.order();
        if k == n {
            self.found
                .push(Permutation::from_images(self.beta.clone()).expect("β is built injectively"));
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            self.beta[k] = v;
            self.alpha[k] = self.l.rdiv(self.l.mul(self.a, v), self.beta[0]);
            let ok = self.pairs[k].iter().all(|&(x, y)| {
                self.l.mul(self.alpha[x], self.beta[y])
                    == self.l.mul(self.a, self.beta[self.l.mul(x, y)])
            });
            if ok {
                self.used[v] = true;
                self.run(k + 1);
                self.used[v] = false;
            }
        }
    }
}

/// All direction preserving collineations, by exhaustive search over
/// `(β, 1^α)`. `β` is assigned point by point and a branch is cut as soon
/// as some instance of `x^α · y^β = 1^α · (xy)^β` is fully determined and
/// fails. Every survivor is revalidated by [`make_dir_collineation`].
///
/// The `(1^α, 1^β)` partitions run on the current rayon pool.
pub fn enumerate_gamma(l: &LoopTable) -> Result<Gamma, NetError> {
    let n = l.order();
    if n > MAX_NET_ORDER {
        return Err(NetError::OrderTooLarge(n));
    }
    let pairs = pairs_by_last_index(l);
    let starts: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut collineations: Vec<DirCollineation> = starts
        .par_iter()
        .flat_map_iter(|&(a, b0)| {
            let mut search = BetaSearch {
                l,
                pairs: &pairs,
                a,
                beta: vec![0; n],
                alpha: vec![0; n],
                used: vec![false; n],
                found: Vec::new(),
            };
            search.beta[0] = b0;
            search.alpha[0] = a;
            search.used[b0] = true;
            search.run(1);
            search.found.into_iter().map(move |beta| {
                make_dir_collineation(l, &beta, a).expect("search checks every pair")
            })
        })
        .collect();
    collineations.sort_by_cached_key(|dc| dc.point_map());
    let points: Vec<Permutation> = collineations
        .iter()
        .map(DirCollineation::point_map)
        .collect();
    let group = GeneratedGroup::from_closed_elements(n * n, points);
    debug_assert_eq!(group.order(), collineations.len());
    Ok(Gamma {
        collineations,
        group,
    })
}

fn require_bol(l: &LoopTable) -> Result<(), NetError> {
    if l.is(Property::LeftBol) {
        Ok(())
    } else {
        Err(NetError::NotBol)
    }
}

/// The pairs `(ρ_a λ_a, λ_a⁻¹)`, i.e. `x -> a·(x·a)` and `y -> a\y`, one for
/// each `a`, each checked against the collineation identity. All of them
/// validate exactly when `l` is left Bol.
pub fn n_generators(l: &LoopTable) -> Vec<(DirCollineation, bool)> {
    l.elements()
        .map(|a| {
            let dc = DirCollineation {
                alpha: l.right_translation(a).then(&l.left_translation(a)),
                beta: l.left_translation(a).inverse(),
            };
            let valid = dc.is_valid(l);
            (dc, valid)
        })
        .collect()
}

/// `N(𝒩)` acting on point indices.
pub fn n_group(l: &LoopTable) -> Result<GeneratedGroup, NetError> {
    require_bol(l)?;
    let gens: Vec<Permutation> = n_generators(l)
        .into_iter()
        .map(|(dc, valid)| {
            debug_assert!(valid);
            dc.point_map()
        })
        .collect();
    Ok(GeneratedGroup::generate(l.order() * l.order(), &gens)?)
}

/// The projection `(α, β) -> β`.
pub fn phi(dc: &DirCollineation) -> Permutation {
    dc.beta.clone()
}

/// Image of a group of direction preserving collineations under the
/// `β`-projection.
pub fn beta_projection(n: usize, g: &GeneratedGroup) -> GeneratedGroup {
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|p| {
            DirCollineation::from_point_map(n, p)
                .expect("direction preserving")
                .beta
        })
        .collect();
    GeneratedGroup::generate(n, &gens).expect("same degree")
}

/// Elements of `N(𝒩)` with `β = id`.
pub fn phi_kernel(l: &LoopTable) -> Result<GeneratedGroup, NetError> {
    let n = l.order();
    let group = n_group(l)?;
    Ok(group.filter_subgroup(|p| {
        DirCollineation::from_point_map(n, p)
            .expect("direction preserving")
            .beta
            .is_identity()
    }))
}

/// `Γ` from structural generators: `N(𝒩)` together with the stabilizer of
/// `l_h`, whose members are `(λ_c β, β)` for the left pseudo-automorphisms
/// `β` with companion `c`. Since `N(𝒩)` is transitive on horizontal lines
/// this is all of `Γ` for a left Bol loop.
pub fn generated_gamma(l: &LoopTable) -> Result<GeneratedGroup, NetError> {
    require_bol(l)?;
    let n = l.order();
    let mut gens: Vec<Permutation> = n_generators(l)
        .into_iter()
        .map(|(dc, _)| dc.point_map())
        .collect();
    for pa in pseudo_automorphisms(l, Side::Left) {
        for &c in &pa.companions {
            let dc = DirCollineation {
                alpha: pa.gamma.then(&l.left_translation(c)),
                beta: pa.gamma.clone(),
            };
            debug_assert!(dc.is_valid(l));
            gens.push(dc.point_map());
        }
    }
    Ok(GeneratedGroup::generate(n * n, &gens)?)
}

/// `P`, the orbit of the origin, sorted by point index.
pub fn orbit_of_origin(l: &LoopTable, gamma: &GeneratedGroup) -> Vec<NetPoint> {
    let n = l.order();
    gamma
        .orbit(NetPoint::ORIGIN.index(n))
        .into_iter()
        .map(|p| NetPoint::from_index(p, n))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilizerKind {
    /// `Γ₀`
    Origin,
    /// `Γ_H`, stabilizer of `l_h`
    HorizontalAxis,
    /// `Γ_V`, stabilizer of `l_v`
    VerticalAxis,
}

pub fn stabilizer(l: &LoopTable, gamma: &GeneratedGroup, kind: StabilizerKind) -> GeneratedGroup {
    match kind {
        StabilizerKind::Origin => gamma.point_stabilizer(NetPoint::ORIGIN.index(l.order())),
        StabilizerKind::HorizontalAxis => gamma.set_stabilizer(&LineRef::L_H.point_indices(l)),
        StabilizerKind::VerticalAxis => gamma.set_stabilizer(&LineRef::L_V.point_indices(l)),
    }
}

/// Coordinate loop of the net with origin `p = (a, b)`.
///
/// Elements are the points `(x, b)` of the horizontal line through `p`; a
/// point `(a, y)` of the vertical line is identified with the point of that
/// horizontal line on the same transversal. The product of `(x₁, b)` and
/// `(x₂, b)` is then `(x₁ · (a\(x₂·b)))/b`. Labels are shifted by `k -> k·a`
/// so that the unit `(a, b)` gets index 0.
pub fn recoordinatize(l: &LoopTable, p: NetPoint) -> LoopTable {
    let (a, b) = (p.x, p.y);
    let label = |k: usize| l.mul(k, a);
    let unlabel = |x: usize| l.rdiv(x, a);
    let rows: Vec<Vec<usize>> = l
        .elements()
        .map(|k1| {
            l.elements()
                .map(|k2| {
                    let (x1, x2) = (label(k1), label(k2));
                    unlabel(l.rdiv(l.mul(x1, l.ldiv(a, l.mul(x2, b))), b))
                })
                .collect()
        })
        .collect();
    LoopTable::from_rows(&rows, false).expect("coordinate loop of a 3-net is a loop with unit 0")
}

/// The point map `σ_m (x, y) = ((m·y)/y′, y′)` with `y′ = m\(x·y)`.
///
/// It fixes the vertical line `x = m` pointwise and exchanges the roles of
/// horizontal and transversal lines through `m·y′ = x·y`; it is always an
/// involution on points, and a collineation exactly when the Bol
/// configuration closes.
fn bol_reflection_map(l: &LoopTable, m: usize) -> Permutation {
    let n = l.order();
    Permutation::from_fn(n * n, |p| {
        let NetPoint { x, y } = NetPoint::from_index(p, n);
        let y2 = l.ldiv(m, l.mul(x, y));
        NetPoint {
            x: l.rdiv(l.mul(m, y), y2),
            y: y2,
        }
        .index(n)
    })
}

/// The Bol reflection with axis `x = m`.
pub fn bol_reflection(l: &LoopTable, m: usize) -> Result<FullCollineation, NetError> {
    let map = bol_reflection_map(l, m);
    let full = FullCollineation::from_point_map(l, map).ok_or(NetError::NotBol)?;
    if !full.point_map.then(&full.point_map).is_identity() {
        return Err(NetError::NotBol);
    }
    Ok(full)
}

/// The full collineation group `⟨Γ, σ₀⟩` on point indices.
pub fn full_group(l: &LoopTable, gamma: &GeneratedGroup) -> Result<GeneratedGroup, NetError> {
    let sigma = bol_reflection(l, 0)?;
    let mut gens = gamma.generators().to_vec();
    gens.push(sigma.point_map);
    Ok(GeneratedGroup::generate(gamma.degree(), &gens)?)
}
