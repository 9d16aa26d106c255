use serde::Serialize;

use super::collineations::{
    beta_projection, bol_reflection, enumerate_gamma, full_group, generated_gamma, n_generators,
    n_group, phi_kernel, recoordinatize, stabilizer, StabilizerKind,
};
use super::{DirCollineation, FullCollineation, LineClass, NetPoint};
use crate::error::NetError;
use crate::group::{
    abelian_invariants, are_isomorphic, derived_subgroup, direct_product_check, fingerprint,
    frattini, named, prime_power_base, quotient_invariants, sharply_transitive_subgroups,
    split_extension_check, subgroup_tests, GeneratedGroup, GroupFingerprint,
};
use crate::loops::{is_isomorphic, BuiltinLoop, LoopTable, Nucleus, Property};
use crate::maps::{
    automorphism_group, automorphisms, companion_set, is_pseudo_automorphism, pseudo_automorphisms,
    translation_group, unit_stabilizer_g1, Side,
};
use crate::perm::Permutation;

/// One verified statement of a structure report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetGroupReport {
    pub loop_order: usize,
    pub left_bol: bool,
    /// `B1` or `B2` when the loop is isomorphic to one of them.
    pub identified_as: Option<&'static str>,
    pub gamma_order: usize,
    pub gamma0_order: usize,
    pub gamma_h_order: usize,
    pub gamma_v_order: usize,
    pub orbit_of_origin: Vec<NetPoint>,
    /// The `x` values of the vertical lines making up `P`, when `P` is a
    /// union of vertical lines.
    pub orbit_vertical_lines: Option<Vec<usize>>,
    pub n_order: Option<usize>,
    pub kernel_order: Option<usize>,
    /// `H = Γ₀ · N`.
    pub h_order: Option<usize>,
    pub full_group_order: Option<usize>,
    pub gamma_derived: GroupFingerprint,
    /// Only for groups of prime power order.
    pub gamma_frattini: Option<GroupFingerprint>,
    /// Order of the `β`-projection of `H′`, recorded without a claim.
    pub h_derived_beta_image_order: Option<usize>,
    /// Abelian invariants of each abelian normal subgroup of `G(L)` acting
    /// sharply transitively on `L`.
    pub lambda_candidates: Vec<Vec<usize>>,
    pub checks: Vec<StructureCheck>,
}

impl NetGroupReport {
    pub fn check(&self, id: &str) -> Option<&StructureCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Default)]
struct Checks(Vec<StructureCheck>);

impl Checks {
    fn push(&mut self, id: &'static str, passed: bool, detail: impl Into<String>) {
        self.0.push(StructureCheck {
            id,
            passed,
            detail: detail.into(),
        });
    }
}

fn split(n: usize, p: &Permutation) -> DirCollineation {
    DirCollineation::from_point_map(n, p).expect("direction preserving")
}

fn invariants_text(inv: &[usize]) -> String {
    format!("{inv:?}")
}

fn is_p_group(g: &GeneratedGroup) -> bool {
    g.order() == 1 || prime_power_base(g.order()).is_some()
}

/// Computes `Γ` and the derived data of the net of `l` and checks the
/// structural statements that apply to it: general facts for every loop,
/// facts about `N(𝒩)` and Bol reflections for left Bol loops, and the
/// detailed decompositions when `l` is isomorphic to `B1` or `B2`.
pub fn structure_report(l: &LoopTable) -> Result<NetGroupReport, NetError> {
    let n = l.order();
    let gamma = enumerate_gamma(l)?;
    let g = &gamma.group;
    let g0 = stabilizer(l, g, StabilizerKind::Origin);
    let gh = stabilizer(l, g, StabilizerKind::HorizontalAxis);
    let gv = stabilizer(l, g, StabilizerKind::VerticalAxis);
    let orbit = g.orbit(NetPoint::ORIGIN.index(n));
    let orbit_points: Vec<NetPoint> = orbit.iter().map(|&p| NetPoint::from_index(p, n)).collect();
    let in_orbit = |p: NetPoint| orbit.binary_search(&p.index(n)).is_ok();

    let mut checks = Checks::default();
    general_checks(
        l,
        &gamma.collineations,
        g,
        &g0,
        &gh,
        &gv,
        &in_orbit,
        &mut checks,
    );

    let vertical_lines: Vec<usize> = (0..n).filter(|&x| in_orbit(NetPoint { x, y: 0 })).collect();
    let is_union = orbit_points.iter().all(|p| vertical_lines.contains(&p.x))
        && orbit.len() == vertical_lines.len() * n;

    let gamma_derived = derived_subgroup(g);
    let gamma_frattini = is_p_group(g).then(|| fingerprint(&frattini(g).expect("p-group")));
    let left_bol = l.is(Property::LeftBol);
    let mut report = NetGroupReport {
        loop_order: n,
        left_bol,
        identified_as: None,
        gamma_order: g.order(),
        gamma0_order: g0.order(),
        gamma_h_order: gh.order(),
        gamma_v_order: gv.order(),
        orbit_of_origin: orbit_points,
        orbit_vertical_lines: is_union.then_some(vertical_lines),
        n_order: None,
        kernel_order: None,
        h_order: None,
        full_group_order: None,
        gamma_derived: fingerprint(&gamma_derived),
        gamma_frattini,
        h_derived_beta_image_order: None,
        lambda_candidates: Vec::new(),
        checks: Vec::new(),
    };
    if left_bol {
        let bol = bol_checks(l, g, &g0, &mut checks)?;
        report.n_order = Some(bol.n.order());
        report.kernel_order = Some(bol.kernel_order);
        report.h_order = Some(bol.h.order());
        report.full_group_order = Some(bol.full_order);
        report.h_derived_beta_image_order =
            Some(beta_projection(n, &derived_subgroup(&bol.h)).order());
        if l.is(Property::Lcc) {
            checks.push(
                "orbit.vertical_union",
                is_union,
                format!(
                    "P is a union of {} vertical lines",
                    report.orbit_vertical_lines.as_ref().map_or(0, Vec::len)
                ),
            );
        }
        let lambdas = lambda_candidates(l)?;
        report.lambda_candidates = lambdas
            .iter()
            .map(|s| abelian_invariants(s).unwrap_or_default())
            .collect();
        if let Some(which) = identify(l) {
            report.identified_as = Some(which.name());
            let ctx = NamedContext {
                l,
                gamma: g,
                g0: &g0,
                gh: &gh,
                bol: &bol,
                orbit: &orbit,
                lambdas: &lambdas,
            };
            match which {
                BuiltinLoop::B1 => b1_checks(&ctx, &mut checks)?,
                BuiltinLoop::B2 => b2_checks(&ctx, &mut checks)?,
            }
            shared_named_checks(&ctx, which, &mut checks)?;
        }
    }
    report.checks = checks.0;
    Ok(report)
}

fn identify(l: &LoopTable) -> Option<BuiltinLoop> {
    BuiltinLoop::ALL
        .into_iter()
        .find(|b| l.order() == 8 && is_isomorphic(l, &b.table()).is_some())
}

#[allow(clippy::too_many_arguments)]
fn general_checks(
    l: &LoopTable,
    collineations: &[DirCollineation],
    g: &GeneratedGroup,
    g0: &GeneratedGroup,
    gh: &GeneratedGroup,
    gv: &GeneratedGroup,
    in_orbit: &dyn Fn(NetPoint) -> bool,
    checks: &mut Checks,
) {
    let n = l.order();
    let orbit_size = (0..n * n)
        .filter(|&p| in_orbit(NetPoint::from_index(p, n)))
        .count();
    checks.push(
        "gamma.orbit_stabilizer",
        g.order() == orbit_size * g0.order(),
        format!("|Γ| = {} = {} · {}", g.order(), orbit_size, g0.order()),
    );

    let lines_ok = collineations.iter().all(|dc| {
        FullCollineation::from_point_map(l, dc.point_map())
            .is_some_and(|f| f.is_direction_preserving())
    });
    checks.push(
        "gamma.lines",
        lines_ok,
        "every element maps each line onto a line of its class",
    );

    let auts = automorphisms(l);
    let g0_pairs: Vec<DirCollineation> = g0.elements().iter().map(|p| split(n, p)).collect();
    let g0_ok = g0_pairs.len() == auts.len()
        && g0_pairs
            .iter()
            .all(|dc| dc.alpha == dc.beta && auts.contains(&dc.alpha));
    checks.push(
        "gamma0.automorphisms",
        g0_ok,
        format!("Γ₀ = {{(α, α) : α ∈ Aut(L)}}, order {}", g0.order()),
    );

    let gh_ok = gh.elements().iter().all(|p| {
        let dc = split(n, p);
        is_pseudo_automorphism(l, Side::Left, &dc.beta, dc.alpha.apply(0))
    });
    checks.push(
        "gamma_h.left_pseudo",
        gh_ok,
        format!(
            "{} elements, each β a left pseudo-automorphism with companion 1^α",
            gh.order()
        ),
    );
    let gv_ok = gv.elements().iter().all(|p| {
        let dc = split(n, p);
        is_pseudo_automorphism(l, Side::Right, &dc.alpha, dc.beta.apply(0))
    });
    checks.push(
        "gamma_v.right_pseudo",
        gv_ok,
        format!(
            "{} elements, each α a right pseudo-automorphism with companion 1^β",
            gv.order()
        ),
    );

    let on_lh: Vec<usize> = (0..n).filter(|&x| in_orbit(NetPoint { x, y: 0 })).collect();
    let on_lv: Vec<usize> = (0..n).filter(|&y| in_orbit(NetPoint { x: 0, y })).collect();
    let c_left = companion_set(l, Side::Left);
    let c_right = companion_set(l, Side::Right);
    checks.push(
        "orbit.l_h_companions",
        on_lh == c_left,
        format!("|l_h ∩ P| = {}, |C_λ| = {}", on_lh.len(), c_left.len()),
    );
    checks.push(
        "orbit.l_v_companions",
        on_lv == c_right,
        format!("|l_v ∩ P| = {}, |C_ρ| = {}", on_lv.len(), c_right.len()),
    );

    let mismatches = (0..n * n)
        .map(|p| NetPoint::from_index(p, n))
        .filter(|&p| is_isomorphic(&recoordinatize(l, p), l).is_some() != in_orbit(p))
        .count();
    checks.push(
        "coordinates.origin_orbit",
        mismatches == 0,
        format!("coordinate loop ≅ L exactly at the points of P ({mismatches} mismatches over {} origins)", n * n),
    );
}

struct BolData {
    n: GeneratedGroup,
    kernel_order: usize,
    h: GeneratedGroup,
    full_order: usize,
}

fn bol_checks(
    l: &LoopTable,
    g: &GeneratedGroup,
    g0: &GeneratedGroup,
    checks: &mut Checks,
) -> Result<BolData, NetError> {
    let n = l.order();
    let generated = generated_gamma(l)?;
    checks.push(
        "gamma.generated",
        generated.same_elements(g),
        format!(
            "⟨N, Γ_H⟩ has order {}, brute force {}",
            generated.order(),
            g.order()
        ),
    );

    let valid = n_generators(l).iter().filter(|(_, v)| *v).count();
    checks.push(
        "n.generators",
        valid == n,
        format!("{valid} of {n} pairs (ρ_aλ_a, λ_a⁻¹) are collineations"),
    );

    let ng = n_group(l)?;
    let normal = subgroup_tests(g, &ng)?.is_normal;
    checks.push(
        "n.normal",
        normal,
        format!("N has order {} and is normal in Γ", ng.order()),
    );

    let kernel = phi_kernel(l)?;
    let j = l.lip_inverse_map();
    let j_pseudo = pseudo_automorphisms(l, Side::Right)
        .into_iter()
        .find(|p| Some(&p.gamma) == j.as_ref());
    checks.push(
        "n.kernel",
        j_pseudo.is_none() || kernel.is_trivial(),
        format!(
            "|ker Φ| = {}; J {} a right pseudo-automorphism",
            kernel.order(),
            if j_pseudo.is_some() { "is" } else { "is not" }
        ),
    );
    if let Some(jp) = &j_pseudo {
        let ok = ng
            .elements()
            .iter()
            .map(|p| split(n, p))
            .filter(|dc| dc.beta.fixes(0))
            .all(|dc| jp.companions.iter().all(|&c| dc.alpha.fixes(c)));
        checks.push(
            "n.unit_fixing_alpha",
            ok,
            format!(
                "elements with 1^β = 1 fix the companions {:?} of J",
                jp.companions
            ),
        );
    }

    let image = beta_projection(n, &ng);
    checks.push(
        "n.phi_image",
        image.same_elements(&translation_group(l)),
        format!("Φ(N) = G(L), order {}", image.order()),
    );
    let horizontal: std::collections::BTreeSet<usize> = ng
        .elements()
        .iter()
        .map(|p| split(n, p).beta.apply(0))
        .collect();
    checks.push(
        "n.transitive_horizontal",
        horizontal.len() == n,
        format!("N reaches {} of {n} horizontal lines", horizontal.len()),
    );

    let reflections: Vec<FullCollineation> = l
        .elements()
        .map(|m| bol_reflection(l, m))
        .collect::<Result<_, _>>()?;
    let shape_ok = reflections.iter().enumerate().all(|(m, s)| {
        s.point_map.then(&s.point_map).is_identity()
            && l.elements()
                .all(|y| s.apply(l, NetPoint { x: m, y }) == NetPoint { x: m, y })
            && s.class_image(LineClass::Vertical) == LineClass::Vertical
            && s.class_image(LineClass::Horizontal) == LineClass::Transversal
    });
    let full = full_group(l, g)?;
    let conj_ok = full.generators().iter().all(|gamma| {
        reflections.iter().enumerate().all(|(m, s)| {
            let axis_image =
                NetPoint::from_index(gamma.apply(NetPoint { x: m, y: 0 }.index(n)), n).x;
            s.point_map.conjugate_by(gamma) == reflections[axis_image].point_map
        })
    });
    checks.push(
        "reflections.shape",
        shape_ok,
        format!(
            "{n} reflections: involutions fixing their axes, swapping horizontal and transversal"
        ),
    );
    checks.push(
        "reflections.normal_set",
        conj_ok,
        "conjugating σ_m by a collineation gives σ at the image axis",
    );

    let coset_ok = full.elements().iter().all(|p| {
        FullCollineation::from_point_map(l, p.clone()).is_some_and(|f| {
            f.class_image(LineClass::Vertical) == LineClass::Vertical
                && (g.contains(p) == f.is_direction_preserving())
        })
    });
    let normal_in_full = subgroup_tests(&full, g)?.is_normal;
    checks.push(
        "full.index_two",
        full.order() == 2 * g.order() && normal_in_full && coset_ok,
        format!(
            "|full| = {}, Γ normal of index {}",
            full.order(),
            full.order() / g.order()
        ),
    );

    let h = g0.join(&ng)?;
    Ok(BolData {
        n: ng,
        kernel_order: kernel.order(),
        h,
        full_order: full.order(),
    })
}

/// Abelian normal subgroups of `G(L)` acting sharply transitively on `L`.
fn lambda_candidates(l: &LoopTable) -> Result<Vec<GeneratedGroup>, NetError> {
    let gl = translation_group(l);
    Ok(sharply_transitive_subgroups(&gl, l.order())?
        .into_iter()
        .filter(|s| s.is_abelian() && subgroup_tests(&gl, s).is_ok_and(|t| t.is_normal))
        .collect())
}

struct NamedContext<'a> {
    l: &'a LoopTable,
    gamma: &'a GeneratedGroup,
    g0: &'a GeneratedGroup,
    gh: &'a GeneratedGroup,
    bol: &'a BolData,
    orbit: &'a [usize],
    lambdas: &'a [GeneratedGroup],
}

fn b1_checks(ctx: &NamedContext, checks: &mut Checks) -> Result<(), NetError> {
    let n = ctx.l.order();
    let (g, g0, ng) = (ctx.gamma, ctx.g0, &ctx.bol.n);
    checks.push(
        "b1.gamma_eq_h",
        ctx.bol.h.same_elements(g),
        format!("|H| = {}", ctx.bol.h.order()),
    );
    checks.push(
        "b1.split",
        split_extension_check(g, ng, g0)?,
        format!(
            "Γ = Γ₀ ⋉ N with |Γ₀| = {}, |N| = {}",
            g0.order(),
            ng.order()
        ),
    );

    let loop_action = automorphisms(ctx.l).iter().all(|alpha| {
        ctx.l.elements().all(|x| {
            ctx.l.left_translation(x).conjugate_by(alpha) == ctx.l.left_translation(alpha.apply(x))
        })
    });
    let net_action = g0.elements().iter().all(|c| {
        let alpha = split(n, c).alpha;
        ng.generators()
            .iter()
            .all(|v| split(n, &v.conjugate_by(c)).beta == split(n, v).beta.conjugate_by(&alpha))
    });
    checks.push(
        "b1.conjugation_action",
        loop_action && net_action,
        "α⁻¹λ_xα = λ_{x^α}, and conjugation by Γ₀ acts on Φ(N) the same way",
    );

    let model =
        named::semidirect_product_model(&automorphism_group(ctx.l), &translation_group(ctx.l));
    let iso = model.as_ref().is_some_and(|m| are_isomorphic(g, m));
    checks.push(
        "b1.semidirect_model",
        iso,
        format!(
            "Γ ≅ Aut(B1) ⋉ G(B1), model order {}",
            model.map_or(0, |m| m.order())
        ),
    );

    let derived = derived_subgroup(g);
    let phi = frattini(g)?;
    let inv = abelian_invariants(&derived).unwrap_or_default();
    checks.push(
        "b1.derived_frattini",
        derived.same_elements(&phi) && inv == [2, 4],
        format!(
            "Γ′ = Frattini(Γ), abelian invariants {}",
            invariants_text(&inv)
        ),
    );

    let p = ctx.orbit;
    let vertical: std::collections::BTreeSet<usize> = p.iter().map(|&q| q / n).collect();
    checks.push(
        "b1.n_regular_on_p",
        ng.is_regular_on(p)
            && p.len() == 16
            && vertical.len() == 2
            && p.len() == vertical.len() * n,
        format!(
            "|P| = {}, {} vertical lines, N regular on P",
            p.len(),
            vertical.len()
        ),
    );
    Ok(())
}

fn b2_checks(ctx: &NamedContext, checks: &mut Checks) -> Result<(), NetError> {
    let n = ctx.l.order();
    let (g, g0, ng, h) = (ctx.gamma, ctx.g0, &ctx.bol.n, &ctx.bol.h);

    let n0 = ng.intersection(g0);
    let g1 = unit_stabilizer_g1(ctx.l);
    let n0_image = beta_projection(n, &n0);
    checks.push(
        "b2.n0",
        n0.order() == 2 && n0_image.same_elements(&g1),
        format!("|N₀| = {}, Φ(N₀) = G₁ of order {}", n0.order(), g1.order()),
    );

    let d8xc2 = named::direct_product(&named::dihedral8(), &named::cyclic(2));
    checks.push(
        "b2.gamma_h",
        are_isomorphic(ctx.gh, &d8xc2),
        format!("Γ_H has order {} and is ≅ D8 × C2", ctx.gh.order()),
    );

    let quotient = quotient_invariants(g, ng)?;
    checks.push(
        "b2.gamma_mod_n",
        quotient == [2, 2, 2],
        format!("Γ/N abelian invariants {}", invariants_text(&quotient)),
    );

    let n_left = ctx.l.nucleus(Nucleus::Left);
    let sigma = DirCollineation {
        alpha: ctx.l.left_translation(n_left[1]),
        beta: Permutation::identity(n),
    };
    let sigma_map = sigma.point_map();
    let sigma_group = GeneratedGroup::generate(n * n, std::slice::from_ref(&sigma_map))?;
    let direct = g.contains(&sigma_map)
        && !h.contains(&sigma_map)
        && direct_product_check(g, h, &sigma_group)?;
    checks.push(
        "b2.sigma_direct",
        direct,
        format!(
            "σ = (λ_{}, id): Γ = H × ⟨σ⟩ with |H| = {}",
            ctx.l.name(n_left[1]),
            h.order()
        ),
    );

    let derived = derived_subgroup(g);
    let inv = abelian_invariants(&derived).unwrap_or_default();
    checks.push(
        "b2.derived",
        inv == [2, 2, 2],
        format!("Γ′ abelian invariants {}", invariants_text(&inv)),
    );
    let phi = frattini(g)?;
    checks.push(
        "b2.frattini_rank",
        phi.same_elements(&derived) && g.order() / phi.order() == 16,
        format!(
            "Frattini(Γ) = Γ′, |Γ/Frattini(Γ)| = {}",
            g.order() / phi.order()
        ),
    );

    let aut = automorphism_group(ctx.l);
    let mut satisfying = Vec::new();
    for lambda in ctx.lambdas {
        // N_Λ, the lift of Λ to N, acts sharply transitively on horizontal
        // lines; H ∩ Γ_H = Γ₀ is then a complement
        let lifted = ng.filter_subgroup(|p| lambda.contains(&split(n, p).beta));
        let targets: std::collections::BTreeSet<usize> = lifted
            .elements()
            .iter()
            .map(|p| NetPoint::from_index(p.apply(0), n).y)
            .collect();
        let model = named::semidirect_product_model(&aut, lambda);
        let ok = lifted.order() == n
            && targets.len() == n
            && subgroup_tests(h, &lifted)?.is_normal
            && split_extension_check(h, &lifted, g0)?
            && model.is_some_and(|m| are_isomorphic(h, &m));
        if ok {
            satisfying.push(abelian_invariants(lambda).unwrap_or_default());
        }
    }
    checks.push(
        "b2.lambda",
        !satisfying.is_empty(),
        format!("Λ with N_Λ ⊴ H, H = Γ₀ ⋉ N_Λ and H ≅ Aut(B2) ⋉ Λ: invariants {satisfying:?}"),
    );
    checks.push(
        "b2.lambda_unique",
        ctx.lambdas.len() == 1,
        format!(
            "{} abelian normal sharply transitive subgroups of G(B2)",
            ctx.lambdas.len()
        ),
    );
    Ok(())
}

fn shared_named_checks(
    ctx: &NamedContext,
    which: BuiltinLoop,
    checks: &mut Checks,
) -> Result<(), NetError> {
    let n = ctx.l.order();
    let ng = &ctx.bol.n;
    checks.push(
        "named.orders",
        ctx.gamma.order() == 128
            && ng.order() == 16
            && ctx.bol.kernel_order == 1
            && ctx.bol.full_order == 256,
        format!(
            "|Γ| = {}, |N| = {}, |ker Φ| = {}, |full| = {}",
            ctx.gamma.order(),
            ng.order(),
            ctx.bol.kernel_order,
            ctx.bol.full_order
        ),
    );

    let h = &ctx.bol.h;
    let h_derived = derived_subgroup(h);
    let h_phi = frattini(h)?;
    checks.push(
        "h.derived_frattini",
        h_derived.is_abelian() && h_derived.same_elements(&h_phi),
        format!(
            "H′ abelian of order {} and equal to Frattini(H)",
            h_derived.order()
        ),
    );

    let hbar = translation_group(ctx.l).join(&automorphism_group(ctx.l))?;
    let projection = beta_projection(n, h);
    checks.push(
        "hbar.projection",
        projection.same_elements(&hbar),
        format!(
            "Φ maps H ({}) onto H̄ = G(L)·Aut(L) ({}), kernel order {}",
            h.order(),
            hbar.order(),
            h.order() / hbar.order()
        ),
    );
    let hbar_derived = derived_subgroup(&hbar);
    let inv = abelian_invariants(&hbar_derived).unwrap_or_default();
    let expected: &[usize] = match which {
        BuiltinLoop::B1 => &[2, 4],
        BuiltinLoop::B2 => &[2, 2, 2],
    };
    checks.push(
        "hbar.derived",
        inv == expected,
        format!("H̄′ abelian invariants {}", invariants_text(&inv)),
    );
    checks.push(
        "hbar.frattini",
        frattini(&hbar)?.same_elements(&hbar_derived),
        "Frattini(H̄) = H̄′",
    );
    Ok(())
}
