//! Acceptance criteria 1 to 17. Each criterion prints one PASS/FAIL line;
//! the test fails if the set of failing criteria differs from the known
//! one (criterion 12: `G(B2)` has two candidates for `Λ`, not one).

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use bolnet::group::{abelian_invariants, derived_subgroup, frattini, GeneratedGroup};
use bolnet::loops::{is_isomorphic, BuiltinLoop, Nucleus};
use bolnet::maps::{
    aut_g_commutator, automorphisms, extend_to_automorphism, pseudo_automorphisms,
    translation_group, triple_translation, Side, BUILTIN_GENERATORS,
};
use bolnet::net::{
    bol_reflection, enumerate_gamma, full_group, generated_gamma, n_group, orbit_of_origin,
    phi_kernel, recoordinatize, structure_report, LineClass, NetGroupReport, NetPoint,
};
use bolnet::search::{
    classify, contains_up_to_isomorphism, enumerate_bol, Relation, SearchOptions,
};
use bolnet::{LoopTable, Permutation};

/// Failing criteria that are recorded as genuine discrepancies.
const EXPECTED_FAILURES: &[usize] = &[12];

type Outcome = Result<(), String>;

fn require(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn loops() -> [(BuiltinLoop, LoopTable); 2] {
    [BuiltinLoop::B1, BuiltinLoop::B2].map(|b| (b, b.table()))
}

fn rows(l: &LoopTable) -> Vec<Vec<usize>> {
    l.rows()
}

// Naive oracles computed from the bare rows.

fn naive_is_latin_with_unit(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    let perm = |v: Vec<usize>| {
        let mut s = v;
        s.sort_unstable();
        s == (0..n).collect::<Vec<_>>()
    };
    (0..n).all(|i| t[0][i] == i && t[i][0] == i)
        && (0..n).all(|r| perm(t[r].clone()) && perm((0..n).map(|c| t[c][r]).collect()))
}

fn naive_associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

fn naive_left_bol(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[x][t[y][t[x][z]]] == t[t[x][t[y][x]]][z])))
}

fn naive_inverse(t: &[Vec<usize>], x: usize) -> usize {
    (0..t.len())
        .find(|&y| t[x][y] == 0)
        .expect("Latin row contains the unit")
}

fn naive_lip(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| {
        let xi = naive_inverse(t, x);
        t[xi][x] == 0 && (0..n).all(|y| t[xi][t[x][y]] == y)
    })
}

fn naive_nucleus(t: &[Vec<usize>], kind: Nucleus) -> Vec<usize> {
    let n = t.len();
    let assoc = |x: usize, y: usize, z: usize| t[t[x][y]][z] == t[x][t[y][z]];
    (0..n)
        .filter(|&a| {
            (0..n).all(|x| {
                (0..n).all(|y| match kind {
                    Nucleus::Left => assoc(a, x, y),
                    Nucleus::Middle => assoc(x, a, y),
                    Nucleus::Right => assoc(x, y, a),
                })
            })
        })
        .collect()
}

/// Order of the element `x` in the (power associative) loop.
fn naive_order(t: &[Vec<usize>], x: usize) -> usize {
    let mut p = x;
    let mut k = 1;
    while p != 0 {
        p = t[p][x];
        k += 1;
    }
    k
}

fn power(t: &[Vec<usize>], x: usize, k: usize) -> usize {
    (0..k).fold(0, |acc, _| t[acc][x])
}

/// `f^i g^j ↦ φ(f)^i · φ(g)^j`, using that element `i + 4j` is `f^i·g^j`.
fn map_from_generator_images(
    t: &[Vec<usize>],
    f_image: usize,
    g_image: usize,
) -> Option<Permutation> {
    let images: Vec<usize> = (0..8)
        .map(|k| t[power(t, f_image, k % 4)][power(t, g_image, k / 4)])
        .collect();
    Permutation::from_images(images).ok()
}

fn naive_is_automorphism(t: &[Vec<usize>], p: &Permutation) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| p.apply(t[x][y]) == t[p.apply(x)][p.apply(y)]))
}

fn perm_order(p: &Permutation) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = q.then(p);
        k += 1;
    }
    k
}

/// Every permutation of `0..n` fixing 0.
fn unit_fixing_perms(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut out = Vec::new();
    rec(&mut vec![0], &mut used, &mut out);
    out
}

/// Dihedral of order 8: non-abelian with five involutions.
fn looks_dihedral8(elems: &[Permutation]) -> bool {
    let involutions = elems.iter().filter(|p| perm_order(p) == 2).count();
    let abelian = elems
        .iter()
        .all(|a| elems.iter().all(|b| a.then(b) == b.then(a)));
    elems.len() == 8 && involutions == 5 && !abelian
}

fn check(report: &NetGroupReport, id: &str) -> Outcome {
    match report.check(id) {
        Some(c) if c.passed => Ok(()),
        Some(c) => Err(format!("{id}: {}", c.detail)),
        None => Err(format!("{id}: missing")),
    }
}

fn criterion_1() -> Outcome {
    for (b, l) in loops() {
        let t = rows(&l);
        require(
            l.order() == 8 && naive_is_latin_with_unit(&t),
            format!("{b:?} Latin"),
        )?;
        require(naive_left_bol(&t), format!("{b:?} left Bol"))?;
        require(!naive_associative(&t), format!("{b:?} associative"))?;
        require(naive_lip(&t), format!("{b:?} LIP"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for (b, l) in loops() {
        let t = rows(&l);
        let left = naive_nucleus(&t, Nucleus::Left);
        let middle = naive_nucleus(&t, Nucleus::Middle);
        let right = naive_nucleus(&t, Nucleus::Right);
        require(
            left == l.nucleus(Nucleus::Left),
            "left nucleus disagrees with library",
        )?;
        require(
            right == l.nucleus(Nucleus::Right),
            "right nucleus disagrees with library",
        )?;
        require(left == [0, 2], format!("{b:?} N_λ = {left:?}"))?;
        require(middle == left, format!("{b:?} N_μ = {middle:?}"))?;
        require(
            right.len() == 4 && left.iter().all(|x| right.contains(x)),
            "N_λ ⊂ N_ρ of order 4",
        )?;
        let max_order = right.iter().map(|&x| naive_order(&t, x)).max().unwrap();
        match b {
            BuiltinLoop::B1 => require(max_order == 4, "N_ρ(B1) not cyclic")?,
            BuiltinLoop::B2 => {
                require(right == [0, 2, 4, 6], format!("N_ρ(B2) = {right:?}"))?;
                require(max_order == 2, "N_ρ(B2) not elementary abelian")?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let (f, g) = (BUILTIN_GENERATORS[0], BUILTIN_GENERATORS[1]);
    let b1 = BuiltinLoop::B1.table();
    let t = rows(&b1);
    let phi1 = map_from_generator_images(&t, f, t[f][g]).ok_or("φ₁ not bijective")?;
    let phi2 = map_from_generator_images(&t, power(&t, f, 3), g).ok_or("φ₂ not bijective")?;
    require(
        naive_is_automorphism(&t, &phi1) && naive_is_automorphism(&t, &phi2),
        "φ not automorphisms",
    )?;
    require(
        extend_to_automorphism(&b1, &BUILTIN_GENERATORS, &[phi1.apply(f), phi1.apply(g)])
            == Some(phi1.clone()),
        "library extension of φ₁ differs",
    )?;
    // φ₃ = φ₁∘φ₂ applies φ₂ first
    let phi3 = phi2.then(&phi1);
    require(
        (perm_order(&phi1), perm_order(&phi2), perm_order(&phi3)) == (4, 2, 2),
        "orders of φ₁, φ₂, φ₃",
    )?;

    let b2 = BuiltinLoop::B2.table();
    let t = rows(&b2);
    let psi1 = map_from_generator_images(&t, t[f][g], g).ok_or("ψ₁ not bijective")?;
    let psi2 = map_from_generator_images(&t, f, t[2][g]).ok_or("ψ₂ not bijective")?;
    require(
        naive_is_automorphism(&t, &psi1) && naive_is_automorphism(&t, &psi2),
        "ψ not automorphisms",
    )?;
    let psi3 = psi2.then(&psi1);
    require(
        perm_order(&psi1) == 2 && perm_order(&psi2) == 2,
        "ψ₁, ψ₂ orders",
    )?;
    require(
        perm_order(&psi3) == 4,
        format!("ψ₃ order {}", perm_order(&psi3)),
    )?;
    require(psi3 != psi1.then(&psi2), "ψ₁ and ψ₂ commute")
}

fn criterion_4() -> Outcome {
    let candidates = unit_fixing_perms(8);
    for (b, l) in loops() {
        let t = rows(&l);
        let brute: Vec<Permutation> = candidates
            .iter()
            .filter(|p| naive_is_automorphism(&t, p))
            .cloned()
            .collect();
        let mut lib = automorphisms(&l);
        lib.sort();
        require(
            brute == lib,
            format!("{b:?} automorphisms differ from brute force"),
        )?;
        require(looks_dihedral8(&brute), format!("{b:?} Aut not D8"))?;
        let library_group = bolnet::maps::automorphism_group(&l);
        require(
            bolnet::group::are_isomorphic(&library_group, &bolnet::group::named::dihedral8()),
            "are_isomorphic(Aut, D8)",
        )?;

        let mut left_perms = BTreeSet::new();
        let mut left_companions = BTreeSet::new();
        for p in &candidates {
            for c in 0..8 {
                let ok = (0..8).all(|x| {
                    (0..8).all(|y| t[t[c][p.apply(x)]][p.apply(y)] == t[c][p.apply(t[x][y])])
                });
                if ok {
                    left_perms.insert(p.clone());
                    left_companions.insert(c);
                }
            }
        }
        let left_perms: Vec<Permutation> = left_perms.into_iter().collect();
        require(
            left_perms == brute,
            format!("{b:?} left pseudo-automorphisms ≠ Aut"),
        )?;
        let lib_left: Vec<Permutation> = pseudo_automorphisms(&l, Side::Left)
            .into_iter()
            .map(|p| p.gamma)
            .collect();
        require(lib_left == brute, "library left pseudo-automorphisms")?;
        let companions: Vec<usize> = left_companions.into_iter().collect();
        require(
            companions == naive_nucleus(&t, Nucleus::Left),
            format!("{b:?} C_λ = {companions:?}"),
        )?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (b, l) in loops() {
        let t = rows(&l);
        let j = Permutation::from_images((0..8).map(|x| naive_inverse(&t, x)).collect()).unwrap();
        require(l.lip_inverse_map() == Some(j.clone()), "library J")?;
        let is_aut = naive_is_automorphism(&t, &j);
        let right_companions: Vec<usize> = (0..8)
            .filter(|&c| {
                (0..8).all(|x| {
                    (0..8).all(|y| t[j.apply(x)][t[j.apply(y)][c]] == t[j.apply(t[x][y])][c])
                })
            })
            .collect();
        match b {
            BuiltinLoop::B1 => require(
                !is_aut && !right_companions.is_empty(),
                format!("B1: J automorphism {is_aut}, companions {right_companions:?}"),
            )?,
            BuiltinLoop::B2 => require(is_aut, "B2: J not an automorphism")?,
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (b, l) in loops() {
        let g = translation_group(&l);
        let elems = g.elements();
        require(g.order() == 16, format!("{b:?} |G| = {}", g.order()))?;
        let f2 = l.left_translation(2);
        require(perm_order(&f2) == 2, "λ_{f²} order")?;
        let allowed = [Permutation::identity(8), f2.clone()];
        let mut nontrivial = false;
        for x in elems {
            require(
                allowed.contains(&x.then(x)),
                format!("{b:?} square outside ⟨λ_f²⟩"),
            )?;
            for y in elems {
                let comm = x.inverse().then(&y.inverse()).then(x).then(y);
                require(
                    allowed.contains(&comm),
                    format!("{b:?} commutator outside ⟨λ_f²⟩"),
                )?;
                nontrivial |= !comm.is_identity();
            }
        }
        require(nontrivial, format!("{b:?} G abelian"))?;
        require(derived_subgroup(&g).order() == 2, "library G′ order")?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (b, l) in loops() {
        let t = rows(&l);
        let left = naive_nucleus(&t, Nucleus::Left);
        let right = naive_nucleus(&t, Nucleus::Right);
        for a in 0..8 {
            for bb in 0..8 {
                let c = (0..8).find(|&c| t[c][t[bb][a]] == 0).unwrap();
                // λ_a first, then λ_b, then λ_c
                let composite =
                    Permutation::from_images((0..8).map(|x| t[c][t[bb][t[a][x]]]).collect())
                        .unwrap();
                require(
                    composite == triple_translation(&l, a, bb, c),
                    "library triple translation",
                )?;
                let meets = [a, bb, c].iter().any(|x| left.contains(x));
                require(
                    composite.is_identity() == meets,
                    format!(
                        "{b:?} triple ({a},{bb},{c}): identity {}",
                        composite.is_identity()
                    ),
                )?;
                require(
                    right.iter().all(|&r| composite.apply(r) == r),
                    "N_ρ not fixed",
                )?;
                require(
                    right.iter().all(|&r| {
                        let lam = l.left_translation(r);
                        composite.then(&lam) == lam.then(&composite)
                    }),
                    "does not commute with λ_n for n ∈ N_ρ",
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for (b, l) in loops() {
        let t = rows(&l);
        let mut gens = Vec::new();
        for alpha in automorphisms(&l) {
            for x in 0..8 {
                let lam = l.left_translation(x);
                gens.push(alpha.inverse().then(&lam.inverse()).then(&alpha).then(&lam));
            }
        }
        let comm = GeneratedGroup::generate(8, &gens).map_err(|e| e.to_string())?;
        require(
            comm.same_elements(&aut_g_commutator(&l)),
            "library [Aut, G]",
        )?;
        let right = naive_nucleus(&t, Nucleus::Right);
        let max_order = comm.elements().iter().map(perm_order).max().unwrap();
        let nucleus_max = right.iter().map(|&x| naive_order(&t, x)).max().unwrap();
        require(
            comm.order() == right.len() && comm.is_abelian() && max_order == nucleus_max,
            format!("{b:?} [Aut, G] order {} exponent {max_order}", comm.order()),
        )?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for (b, l) in loops() {
        let n = n_group(&l).map_err(|e| e.to_string())?;
        require(n.order() == 16, format!("{b:?} |N| = {}", n.order()))?;
        require(
            phi_kernel(&l).map_err(|e| e.to_string())?.order() == 1,
            "ker Φ",
        )?;
        let report = structure_report(&l).map_err(|e| e.to_string())?;
        check(&report, "n.transitive_horizontal")?;
        if b == BuiltinLoop::B1 {
            let gamma = enumerate_gamma(&l).map_err(|e| e.to_string())?;
            let orbit = orbit_of_origin(&l, &gamma.group);
            let indices: Vec<usize> = orbit.iter().map(|p| p.index(8)).collect();
            require(orbit.len() == 16, format!("|P| = {}", orbit.len()))?;
            require(n.is_regular_on(&indices), "N not regular on P")?;
            let columns: BTreeSet<usize> = orbit.iter().map(|p| p.x).collect();
            require(columns.len() == 2, "P not on 2 vertical lines")?;
            require(
                columns
                    .iter()
                    .all(|&x| (0..8).all(|y| orbit.contains(&NetPoint { x, y }))),
                "P not a union of vertical lines",
            )?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    for (b, l) in loops() {
        let gamma = enumerate_gamma(&l).map_err(|e| e.to_string())?;
        require(
            gamma.order() == 128,
            format!("{b:?} |Γ| = {}", gamma.order()),
        )?;
        let generated = generated_gamma(&l).map_err(|e| e.to_string())?;
        require(
            generated.same_elements(&gamma.group),
            "generated Γ ≠ brute force",
        )?;
        let full = full_group(&l, &gamma.group).map_err(|e| e.to_string())?;
        require(full.order() == 256, format!("|Γ_full| = {}", full.order()))?;
        for h in full.generators() {
            for g in gamma.group.generators() {
                require(
                    gamma.group.contains(&h.inverse().then(g).then(h)),
                    "Γ not normal",
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let report = structure_report(&BuiltinLoop::B1.table()).map_err(|e| e.to_string())?;
    for id in [
        "b1.gamma_eq_h",
        "b1.split",
        "b1.conjugation_action",
        "b1.semidirect_model",
        "b1.derived_frattini",
    ] {
        check(&report, id)?;
    }
    let gamma = enumerate_gamma(&BuiltinLoop::B1.table()).map_err(|e| e.to_string())?;
    let derived = derived_subgroup(&gamma.group);
    let fr = frattini(&gamma.group).map_err(|e| e.to_string())?;
    require(derived.same_elements(&fr), "Γ′ ≠ Frattini(Γ)")?;
    let inv = abelian_invariants(&derived).map_err(|e| e.to_string())?;
    require(inv == [2, 4], format!("Γ′ invariants {inv:?}"))
}

fn criterion_12() -> Outcome {
    let report = structure_report(&BuiltinLoop::B2.table()).map_err(|e| e.to_string())?;
    let ids = [
        "b2.n0",
        "b2.gamma_h",
        "b2.gamma_mod_n",
        "b2.sigma_direct",
        "b2.derived",
        "b2.frattini_rank",
        "b2.lambda",
        "b2.lambda_unique",
    ];
    let failures: Vec<String> = ids
        .iter()
        .filter_map(|id| check(&report, id).err())
        .collect();
    require(failures.is_empty(), failures.join("; "))
}

fn criterion_13() -> Outcome {
    for (_, l) in loops() {
        let report = structure_report(&l).map_err(|e| e.to_string())?;
        for id in ["hbar.projection", "hbar.derived", "hbar.frattini"] {
            check(&report, id)?;
        }
    }
    Ok(())
}

fn criterion_14() -> Outcome {
    for (b, l) in loops() {
        let gamma = enumerate_gamma(&l).map_err(|e| e.to_string())?;
        let full = full_group(&l, &gamma.group).map_err(|e| e.to_string())?;
        let reflections: Vec<_> = (0..8)
            .map(|m| bol_reflection(&l, m))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (m, r) in reflections.iter().enumerate() {
            let map = &r.point_map;
            require(
                map.then(map).is_identity(),
                format!("{b:?} σ_{m} not an involution"),
            )?;
            require(
                (0..8).all(|y| r.apply(&l, NetPoint { x: m, y }) == NetPoint { x: m, y }),
                format!("{b:?} σ_{m} moves its axis"),
            )?;
            require(
                r.class_image(LineClass::Horizontal) == LineClass::Transversal
                    && r.class_image(LineClass::Transversal) == LineClass::Horizontal
                    && r.class_image(LineClass::Vertical) == LineClass::Vertical,
                "σ_m does not swap horizontal and transversal lines",
            )?;
            for h in full.elements() {
                let axis_image = {
                    let p = NetPoint::from_index(h.apply(NetPoint { x: m, y: 0 }.index(8)), 8);
                    p.x
                };
                let conj = h.inverse().then(map).then(h);
                require(
                    conj == reflections[axis_image].point_map,
                    "γ⁻¹σ_mγ ≠ σ_{m^γ}",
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_15() -> Outcome {
    for (b, l) in loops() {
        let gamma = enumerate_gamma(&l).map_err(|e| e.to_string())?;
        let orbit = orbit_of_origin(&l, &gamma.group);
        for x in 0..8 {
            for y in 0..8 {
                let p = NetPoint { x, y };
                let iso = is_isomorphic(&recoordinatize(&l, p), &l).is_some();
                require(
                    iso == orbit.contains(&p),
                    format!("{b:?} origin ({x},{y}): isomorphic {iso}"),
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_16() -> Outcome {
    let nonassoc = SearchOptions {
        nonassociative_only: true,
        symmetry_breaking: true,
    };
    for n in 1..=7 {
        let out = enumerate_bol(n, nonassoc).map_err(|e| e.to_string())?;
        require(
            out.tables.is_empty(),
            format!("order {n}: {} tables", out.tables.len()),
        )?;
    }
    // symmetry breaking keeps every isomorphism class
    for n in 1..=6 {
        let with = enumerate_bol(
            n,
            SearchOptions {
                nonassociative_only: false,
                symmetry_breaking: true,
            },
        )
        .map_err(|e| e.to_string())?;
        let without = enumerate_bol(
            n,
            SearchOptions {
                nonassociative_only: false,
                symmetry_breaking: false,
            },
        )
        .map_err(|e| e.to_string())?;
        let count = |tables: &[LoopTable]| {
            classify(tables, Relation::Isomorphism).map(|r| r.isomorphism_class_count)
        };
        require(
            count(&with.tables).map_err(|e| e.to_string())?
                == count(&without.tables).map_err(|e| e.to_string())?,
            format!("order {n}: symmetry breaking loses a class"),
        )?;
    }
    let out = enumerate_bol(8, nonassoc).map_err(|e| e.to_string())?;
    for b in BuiltinLoop::ALL {
        require(
            contains_up_to_isomorphism(&out.tables, &b.table()),
            format!("{b:?} missing"),
        )?;
    }
    let result = classify(&out.tables, Relation::Isotopy).map_err(|e| e.to_string())?;
    println!(
        "      order 8: {} tables, {} isomorphism classes (computed)",
        out.tables.len(),
        result.isomorphism_class_count
    );
    require(
        result.isotopy_class_count == Some(2),
        format!("isotopy classes {:?}", result.isotopy_class_count),
    )
}

fn criterion_17() -> Outcome {
    let corpus = common::corpus();
    let mut other_reading_failures = 0;
    for (name, l) in &corpus {
        common::table_invariants(l).map_err(|e| format!("{name}: {e}"))?;
        other_reading_failures +=
            common::pseudo_invariants(l).map_err(|e| format!("{name}: {e}"))?;
        common::group_invariants(&translation_group(l)).map_err(|e| format!("{name}: {e}"))?;
        if l.order() <= 6
            || BuiltinLoop::ALL
                .iter()
                .any(|b| b.table().rows() == l.rows())
        {
            common::net_invariants(l).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    require(
        other_reading_failures > 0,
        "alternative composite companion never fails",
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(usize, fn() -> Outcome); 17] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
        (13, criterion_13),
        (14, criterion_14),
        (15, criterion_15),
        (16, criterion_16),
        (17, criterion_17),
    ];
    let mut failed = Vec::new();
    for (number, run) in criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("criterion {number:>2}: PASS"),
            Err(why) => {
                println!("criterion {number:>2}: FAIL ({why})");
                failed.push(number);
            }
        }
    }
    assert_eq!(
        failed, EXPECTED_FAILURES,
        "unexpected set of failing criteria"
    );
}
