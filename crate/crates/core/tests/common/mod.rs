//! Shared fixtures for the integration tests: seeded random loops, the
//! standard corpus, and invariant checks that return the first violation.

#![allow(dead_code)]

use bolnet::group::{derived_subgroup, GeneratedGroup};
use bolnet::loops::{catalog, BuiltinLoop, Nucleus, Property};
use bolnet::maps::{automorphisms, pseudo_automorphisms, Side};
use bolnet::net::{
    bol_reflection, enumerate_gamma, full_group, generated_gamma, n_generators, orbit_of_origin,
    stabilizer, DirCollineation, LineRef, NetPoint, StabilizerKind,
};
use bolnet::{LoopTable, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// A normalized Latin square of order `n` drawn by randomized backtracking.
pub fn random_loop(n: usize, seed: u64) -> LoopTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![vec![usize::MAX; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[0] = i;
    }
    rows[0] = (0..n).collect();
    fn fill(rows: &mut [Vec<usize>], cell: usize, n: usize, rng: &mut ChaCha8Rng) -> bool {
        if cell == n * n {
            return true;
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            return fill(rows, cell + 1, n, rng);
        }
        let mut values: Vec<usize> = (0..n).collect();
        values.shuffle(rng);
        for v in values {
            let clash = (0..c).any(|k| rows[r][k] == v) || (0..r).any(|k| rows[k][c] == v);
            if !clash {
                rows[r][c] = v;
                if fill(rows, cell + 1, n, rng) {
                    return true;
                }
            }
        }
        rows[r][c] = usize::MAX;
        false
    }
    assert!(fill(&mut rows, 0, n, &mut rng));
    LoopTable::from_rows(&rows, false).expect("normalized Latin square")
}

/// A permutation of `0..n` fixing 0, drawn from `seed`.
pub fn random_unit_fixing(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tail: Vec<usize> = (1..n).collect();
    tail.shuffle(&mut rng);
    let images: Vec<usize> = std::iter::once(0).chain(tail).collect();
    Permutation::from_images(images).expect("shuffle is a permutation")
}

/// B1, B2, every group of order at most 8, and 20 random loops of order 6.
pub fn corpus() -> Vec<(String, LoopTable)> {
    let mut out: Vec<(String, LoopTable)> = BuiltinLoop::ALL
        .iter()
        .map(|b| (b.name().to_string(), b.table()))
        .collect();
    out.extend(
        catalog::small_groups()
            .into_iter()
            .map(|(name, l)| (name.to_string(), l)),
    );
    out.extend((0..20).map(|seed| (format!("random6#{seed}"), random_loop(6, seed))));
    out
}

/// Rows and columns are permutations, translations match the table, and
/// the divisions invert multiplication.
pub fn table_invariants(l: &LoopTable) -> Check {
    let n = l.order();
    for x in 0..n {
        let lambda = l.left_translation(x);
        let rho = l.right_translation(x);
        for y in 0..n {
            ensure!(lambda.apply(y) == l.mul(x, y), "λ_{x}({y})");
            ensure!(rho.apply(y) == l.mul(y, x), "ρ_{x}({y})");
            ensure!(l.mul(x, l.ldiv(x, y)) == y, "x·(x\\y) at {x},{y}");
            ensure!(l.mul(l.rdiv(x, y), y) == x, "(x/y)·y at {x},{y}");
        }
    }
    if l.is(Property::Lip) {
        ensure!(
            l.nucleus(Nucleus::Left) == l.nucleus(Nucleus::Middle),
            "left inverse property but N_λ ≠ N_μ"
        );
    }
    if l.is(Property::LeftBol) {
        let section = l.section();
        for x in 0..n {
            for y in 0..n {
                let lx = l.left_translation(x);
                let t = lx.then(&l.left_translation(y)).then(&lx);
                ensure!(section.contains(&t), "λ_xλ_yλ_x ∉ S(L) for {x},{y}");
            }
        }
    }
    Ok(())
}

/// Right pseudo-automorphism laws: unit fixed, inverse with companion
/// `c^{γ⁻¹}\e`, composite companion `c^{γ'}·c'`, nuclei preserved.
/// Returns how often the alternative composite companion `c^γ·c'` fails.
pub fn pseudo_invariants(l: &LoopTable) -> Result<usize, String> {
    let rights = pseudo_automorphisms(l, Side::Right);
    let is_right =
        |g: &Permutation, c: usize| bolnet::maps::is_pseudo_automorphism(l, Side::Right, g, c);
    let mut other_reading_failures = 0;
    let left = l.nucleus(Nucleus::Left);
    let middle = l.nucleus(Nucleus::Middle);
    for pa in &rights {
        let g = &pa.gamma;
        ensure!(g.apply(0) == 0, "pseudo-automorphism moves the unit");
        let inv = g.inverse();
        for &c in &pa.companions {
            let d = l.ldiv(inv.apply(c), 0);
            ensure!(
                is_right(&inv, d),
                "inverse lacks companion c^γ⁻¹\\e for c = {c}"
            );
        }
        for (set, name) in [(&left, "N_λ"), (&middle, "N_μ")] {
            let image: Vec<usize> = {
                let mut v: Vec<usize> = set.iter().map(|&x| g.apply(x)).collect();
                v.sort_unstable();
                v
            };
            ensure!(image == *set, "{name} not invariant");
        }
        for &m in &left {
            for x in l.elements() {
                ensure!(
                    g.apply(l.mul(m, x)) == l.mul(g.apply(m), g.apply(x)),
                    "(nx)^γ ≠ n^γ x^γ"
                );
            }
        }
        for &m in &middle {
            for x in l.elements() {
                ensure!(
                    g.apply(l.mul(x, m)) == l.mul(g.apply(x), g.apply(m)),
                    "(xn)^γ ≠ x^γ n^γ"
                );
            }
        }
    }
    // composition, first companions only: pairs grow quadratically
    for a in &rights {
        for b in &rights {
            let (c, c2) = (a.companions[0], b.companions[0]);
            let composite = a.gamma.then(&b.gamma);
            ensure!(
                is_right(&composite, l.mul(b.gamma.apply(c), c2)),
                "composite lacks companion c^γ'·c'"
            );
            if !is_right(&composite, l.mul(a.gamma.apply(c), c2)) {
                other_reading_failures += 1;
            }
        }
    }
    for alpha in automorphisms(l) {
        for kind in [Nucleus::Left, Nucleus::Middle, Nucleus::Right] {
            ensure!(
                l.nucleus(kind)
                    .iter()
                    .all(|&x| l.in_nucleus(kind, alpha.apply(x))),
                "automorphism moves a nucleus"
            );
        }
    }
    Ok(other_reading_failures)
}

/// Net invariants that hold for every loop; the Bol ones only where the
/// loop is left Bol.
pub fn net_invariants(l: &LoopTable) -> Check {
    let n = l.order();
    let gamma = enumerate_gamma(l).map_err(|e| e.to_string())?;
    for dc in &gamma.collineations {
        ensure!(dc.is_valid(l), "invalid collineation");
        for line in LineRef::all(l) {
            let image: Vec<NetPoint> = line.points(l).into_iter().map(|p| dc.apply(p)).collect();
            let target = LineRef::through(l, line.class, image[0]);
            ensure!(
                image.iter().all(|&p| target.contains(l, p)),
                "line not mapped to a line"
            );
        }
    }
    let g = &gamma.group;
    let orbit = orbit_of_origin(l, g);
    let g0 = stabilizer(l, g, StabilizerKind::Origin);
    ensure!(g.order() == orbit.len() * g0.order(), "orbit-stabilizer");

    let split =
        |p: &Permutation| DirCollineation::from_point_map(n, p).expect("direction preserving");
    for p in stabilizer(l, g, StabilizerKind::HorizontalAxis).elements() {
        let dc = split(p);
        ensure!(
            bolnet::maps::is_pseudo_automorphism(l, Side::Left, &dc.beta, dc.alpha.apply(0)),
            "Γ_H element without left pseudo-automorphism"
        );
    }
    for p in stabilizer(l, g, StabilizerKind::VerticalAxis).elements() {
        let dc = split(p);
        ensure!(
            bolnet::maps::is_pseudo_automorphism(l, Side::Right, &dc.alpha, dc.beta.apply(0)),
            "Γ_V element without right pseudo-automorphism"
        );
    }

    let bol = l.is(Property::LeftBol);
    let all_valid = n_generators(l).iter().all(|(_, ok)| *ok);
    ensure!(
        all_valid == bol,
        "N generators valid = {all_valid}, left Bol = {bol}"
    );
    if bol {
        let generated = generated_gamma(l).map_err(|e| e.to_string())?;
        ensure!(
            generated.same_elements(g),
            "generated Γ differs from brute force"
        );
        let full = full_group(l, g).map_err(|e| e.to_string())?;
        let reflections: Vec<Permutation> = (0..n)
            .map(|m| bol_reflection(l, m).map(|r| r.point_map))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (m, r) in reflections.iter().enumerate() {
            ensure!(r.then(r).is_identity(), "σ_{m} is not an involution");
            for y in 0..n {
                let p = NetPoint { x: m, y }.index(n);
                ensure!(r.apply(p) == p, "σ_{m} moves its axis");
            }
        }
        for h in full.generators() {
            for r in &reflections {
                let conj = h.inverse().then(r).then(h);
                ensure!(
                    reflections.contains(&conj),
                    "reflections not closed under conjugation"
                );
            }
        }
    }
    Ok(())
}

/// Group invariants on `g`: generation idempotent, commutator subgroup
/// normal, abelianization of the right order.
pub fn group_invariants(g: &GeneratedGroup) -> Check {
    let again = GeneratedGroup::generate(g.degree(), g.elements()).map_err(|e| e.to_string())?;
    ensure!(again.same_elements(g), "generate is not idempotent");
    let derived = derived_subgroup(g);
    ensure!(g.order().is_multiple_of(derived.order()), "Lagrange");
    for x in g.generators() {
        for d in derived.generators() {
            ensure!(
                derived.contains(&x.inverse().then(d).then(x)),
                "G′ not normal"
            );
        }
    }
    let invariants = bolnet::group::quotient_invariants(g, &derived).map_err(|e| e.to_string())?;
    ensure!(
        invariants.iter().product::<usize>() * derived.order() == g.order(),
        "abelianization has the wrong order"
    );
    Ok(())
}
