//! Claim registry and reports for the command-line tool.
//!
//! Every report is a list of sections `(claim_id, statement, anchor, status,
//! computed_value)`. Statements and anchors come from the static registry
//! below, so a claim reads the same in every report. A section with status
//! `fail` makes the whole report fail.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{NetError, SearchError};
use crate::group::{are_isomorphic, derived_subgroup, fingerprint, named};
use crate::loops::{BuiltinLoop, LoopTable, Nucleus, Property};
use crate::maps::{
    aut_g_commutator, automorphism_group, automorphisms, companion_set, compose,
    extend_to_automorphism, is_pseudo_automorphism, nucleus_group, pseudo_automorphisms,
    shortest_word, translation_group, triple_translation, word_as_composition, Side,
    BUILTIN_GENERATORS,
};
use crate::net::{structure_report, NetGroupReport};
use crate::perm::Permutation;
use crate::search::{classify, contains_up_to_isomorphism, enumerate_bol, Relation, SearchOptions};

pub const SCHEMA: &str = "bolnet-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Computed,
}

impl Status {
    fn of(passed: bool) -> Status {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Computed => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub claim_id: String,
    pub statement: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub computed_value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub input: String,
    pub sections: Vec<Section>,
    /// Structured payload of the command (facts, structure report, search
    /// summary); `null` for `verify`.
    pub data: Value,
    /// Wall-clock time, the only field allowed to differ between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    fn new(command: &'static str, input: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            input: input.into(),
            sections: Vec::new(),
            data: Value::Null,
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(|s| s.status == Status::Fail)
    }

    pub fn section(&self, claim_id: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.claim_id == claim_id)
    }

    /// Pretty JSON. Object keys are sorted (serde_json maps are ordered),
    /// and sections keep registry order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.input);
        for s in &self.sections {
            out.push_str(&format!(
                "{:<4}  {}  {}\n      [{}] {}\n",
                s.status.label(),
                s.claim_id,
                s.computed_value,
                s.anchor,
                s.statement
            ));
        }
        let count = |st: Status| self.sections.iter().filter(|s| s.status == st).count();
        out.push_str(&format!(
            "{} passed, {} failed, {} computed\n",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Computed)
        ));
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("time: {ms} ms\n"));
        }
        out
    }

    fn push(&mut self, claim_id: String, status: Status, computed_value: impl Into<String>) {
        let entry = lookup(&claim_id);
        debug_assert!(
            self.sections.iter().all(|s| s.claim_id != claim_id),
            "duplicate claim {claim_id}"
        );
        self.sections.push(Section {
            claim_id,
            statement: entry.statement,
            anchor: entry.anchor,
            status,
            computed_value: computed_value.into(),
        });
    }
}

/// A registry entry. `key` is the claim id without the loop prefix for
/// per-loop claims (`b1.`, `b2.`) and without the command prefix otherwise.
#[derive(Clone, Copy, Debug)]
pub struct ClaimInfo {
    pub key: &'static str,
    pub statement: &'static str,
    pub anchor: &'static str,
}

const fn claim(key: &'static str, statement: &'static str, anchor: &'static str) -> ClaimInfo {
    ClaimInfo {
        key,
        statement,
        anchor,
    }
}

pub static REGISTRY: &[ClaimInfo] = &[
    // loop structure
    claim("loop.latin", "the multiplication table is a normalized Latin square of order 8", "|L| = 8, e = 0"),
    claim("loop.left_bol", "the left Bol identity holds for all triples", "x(y(xz)) = (x(yx))z"),
    claim("loop.nonassociative", "some triple does not associate", "(xy)z ≠ x(yz)"),
    claim("loop.lip", "every left translation has a left translation as inverse", "λ_x⁻¹ = λ_{x⁻¹}"),
    claim("loop.lcc", "conjugates of left translations by left translations are left translations", "λ_x⁻¹λ_yλ_x ∈ S(L)"),
    claim("nuclei.left", "the left nucleus is {e, f²}", "N_λ = {e, f²}"),
    claim("nuclei.middle", "the middle nucleus equals the left nucleus", "N_μ = N_λ"),
    claim("nuclei.right.cyclic", "the right nucleus is cyclic of order 4", "N_ρ ≅ C4"),
    claim("nuclei.right.klein", "the right nucleus is {e, g, f², f²g}, a Klein four-group", "N_ρ = {e, g, f², f²g} ≅ C2 × C2"),
    claim("nuclei.indices", "the right nucleus has index 2 in L and contains the left nucleus with index 2", "[L : N_ρ] = [N_ρ : N_λ] = 2"),
    claim("aut.named.phi", "f ↦ f, g ↦ fg and f ↦ f³, g ↦ g extend to automorphisms of orders 4 and 2, and their composite has order 2", "φ₃ = φ₁ ∘ φ₂"),
    claim("aut.named.psi", "f ↦ fg, g ↦ g and f ↦ f, g ↦ f²g extend to automorphisms of order 2 whose composite has order 4 and depends on the order of composition", "ψ₃ = ψ₁ ∘ ψ₂ ≠ ψ₂ ∘ ψ₁"),
    claim("aut.dihedral", "the automorphism group has order 8 and is dihedral", "Aut(L) ≅ D8"),
    claim("pseudo.left", "every left pseudo-automorphism is an automorphism, and the left companions form the left nucleus", "C_λ = N_λ"),
    claim("inverse.right_pseudo", "the inverse map is a right pseudo-automorphism but not an automorphism", "J ∉ Aut(L)"),
    claim("inverse.automorphism", "the inverse map is an automorphism", "J ∈ Aut(L)"),
    claim("inverse.word", "shortest expression of the inverse map in the named automorphisms", "J = ψ-word"),
    claim("translations.group", "the left translations generate a non-abelian group of order 16 whose derived subgroup has order 2, is generated by the translation by f², and contains every square", "G(L)′ = ⟨λ_{f²}⟩ ∋ x²"),
    claim("translations.triples", "for c·(ba) = e the product λ_aλ_bλ_c is the identity exactly when one of a, b, c lies in the left nucleus, and it always fixes the right nucleus pointwise", "λ_aλ_bλ_c = id ⟺ {a,b,c} ∩ N_λ ≠ ∅"),
    claim("translations.aut_commutator", "the commutator of the automorphism group with the translation group is isomorphic to the right nucleus", "[Aut(L), G(L)] ≅ N_ρ"),
    // net structure, shared
    claim("gamma.orbit_stabilizer", "the order of Γ is the size of the origin's orbit times the order of its stabilizer", "|Γ| = |P| · |Γ₀|"),
    claim("gamma.lines", "each enumerated pair maps every line onto a line of the same parallel class", "(x,y) ↦ (x^α, y^β)"),
    claim("gamma0.automorphisms", "collineations fixing the origin are exactly the pairs (α, α) with α an automorphism", "Γ₀ = {(α,α) : α ∈ Aut(L)}"),
    claim("gamma_h.left_pseudo", "a collineation fixing the horizontal axis gives a left pseudo-automorphism with companion 1^α", "Γ_H → left pseudo-automorphisms"),
    claim("gamma_v.right_pseudo", "a collineation fixing the vertical axis gives a right pseudo-automorphism with companion 1^β", "Γ_V → right pseudo-automorphisms"),
    claim("orbit.l_h_companions", "the orbit of the origin meets the horizontal axis in the left companions", "l_h ∩ P ↔ C_λ"),
    claim("orbit.l_v_companions", "the orbit of the origin meets the vertical axis in the right companions", "l_v ∩ P ↔ C_ρ"),
    claim("coordinates.origin_orbit", "the coordinate loop at a point is isomorphic to L exactly when the point lies in the orbit of the origin", "L_Q ≅ L ⟺ Q ∈ P"),
    claim("gamma.generated", "Γ found by exhaustive search equals the group generated by N and the stabilizer of the horizontal axis", "Γ = ⟨N, Γ_H⟩"),
    claim("n.generators", "every pair (ρ_aλ_a, λ_a⁻¹) is a direction preserving collineation", "(ρ_xλ_x, λ_x⁻¹) ∈ Γ"),
    claim("n.normal", "N is a normal subgroup of Γ", "N ⊴ Γ"),
    claim("n.kernel", "if the inverse map is a right pseudo-automorphism then the β-projection is injective on N", "ker Φ = 1"),
    claim("n.unit_fixing_alpha", "elements of N with 1^β = 1 fix every companion of the inverse map", "1^β = 1 ⇒ c^α = c"),
    claim("n.phi_image", "the β-projection maps N onto the left translation group", "Φ(N) = G(L)"),
    claim("n.transitive_horizontal", "N is transitive on horizontal lines", "N ↷ {y = c} transitive"),
    claim("reflections.shape", "each Bol reflection is an involution fixing its axis pointwise and swapping horizontal and transversal lines", "σ_m² = id"),
    claim("reflections.normal_set", "conjugating a Bol reflection by a collineation gives the Bol reflection at the image of its axis", "γ⁻¹σ_mγ = σ_{m^γ}"),
    claim("full.index_two", "Γ is normal of index 2 in the full collineation group, whose other coset swaps horizontal and transversal lines", "[Γ_full : Γ] = 2"),
    claim("orbit.vertical_union", "the orbit of the origin is a union of vertical lines", "P = ⋃ {x = m}"),
    claim("named.orders", "Γ has order 128, N has order 16 with trivial kernel, and the full group has order 256", "|Γ| = 128, |N| = 16"),
    claim("h.derived_frattini", "the derived subgroup of H = Γ₀N is abelian and equals its Frattini subgroup", "H′ = Frattini(H)"),
    claim("h.derived_projection", "order of the β-projection of H′", "Φ(H′)"),
    claim("hbar.projection", "the β-projection maps H onto the group generated by translations and automorphisms", "Φ(H) = G(L)Aut(L)"),
    claim("hbar.derived", "the derived subgroup of G(L)Aut(L) is C2 × N_ρ", "H̄′ ≅ C2 × N_ρ"),
    claim("hbar.frattini", "the Frattini subgroup of G(L)Aut(L) is its derived subgroup", "Frattini(H̄) = H̄′"),
    // net structure, B1
    claim("b1.gamma_eq_h", "every direction preserving collineation is a product of an origin-fixing one and an element of N", "Γ = H"),
    claim("b1.split", "Γ splits over N with complement Γ₀", "Γ = Γ₀ ⋉ N"),
    claim("b1.conjugation_action", "automorphisms act on translations by relabeling", "α⁻¹λ_xα = λ_{x^α}"),
    claim("b1.semidirect_model", "Γ is isomorphic to the semidirect product of Aut(B1) with G(B1)", "Γ ≅ Aut(B1) ⋉ G(B1)"),
    claim("b1.derived_frattini", "the derived and Frattini subgroups of Γ coincide and are isomorphic to C2 × C4", "Γ′ = Frattini(Γ) ≅ C2 × C4"),
    claim("b1.n_regular_on_p", "N acts regularly on the orbit of the origin, which has 16 points on 2 vertical lines", "|P| = 16"),
    // net structure, B2
    claim("b2.n0", "the origin stabilizer in N has order 2 and projects onto the unit stabilizer in G(B2)", "N₀ ≅ G₁"),
    claim("b2.gamma_h", "the stabilizer of the horizontal axis is D8 × C2", "Γ_H ≅ D8 × C2"),
    claim("b2.gamma_mod_n", "Γ/N is elementary abelian of order 8", "Γ/N ≅ C2³"),
    claim("b2.sigma_direct", "Γ is the direct product of H with the group generated by (λ_{f²}, id)", "Γ = H × ⟨σ⟩"),
    claim("b2.derived", "the derived subgroup of Γ is elementary abelian of order 8", "Γ′ ≅ C2³"),
    claim("b2.frattini_rank", "the Frattini subgroup of Γ is Γ′ with quotient of order 16, so Γ needs 4 generators", "d(Γ) = 4"),
    claim("b2.lambda", "G(B2) has an abelian normal subgroup Λ, sharply transitive on B2, whose lift to N complements Γ₀ in H, and H ≅ Aut(B2) ⋉ Λ", "H ≅ Aut(B2) ⋉ Λ"),
    claim("b2.lambda_unique", "there is only one abelian normal subgroup of G(B2) acting sharply transitively on B2", "Λ unique"),
    // analyze
    claim("order", "number of elements", "|L|"),
    claim("property.left_bol", "left Bol identity", "x(y(xz)) = (x(yx))z"),
    claim("property.lcc", "left conjugacy closed", "λ_x⁻¹λ_yλ_x ∈ S(L)"),
    claim("property.lip", "left inverse property", "λ_x⁻¹ = λ_{x⁻¹}"),
    claim("property.associative", "associative", "(xy)z = x(yz)"),
    claim("nucleus.left", "left nucleus", "N_λ"),
    claim("nucleus.middle", "middle nucleus", "N_μ"),
    claim("nucleus.right", "right nucleus", "N_ρ"),
    claim("inverse_map", "the inverse map, when the left inverse property holds", "J : x ↦ x⁻¹"),
    claim("aut.order", "number of automorphisms", "|Aut(L)|"),
    claim("aut.fingerprint", "automorphism group invariants: element order histogram, center, abelianization", "Aut(L)"),
    claim("pseudo.left.count", "number of left pseudo-automorphisms", "|PsAut_λ(L)|"),
    claim("pseudo.right.count", "number of right pseudo-automorphisms", "|PsAut_ρ(L)|"),
    claim("companions.left", "elements occurring as left companions", "C_λ"),
    claim("companions.right", "elements occurring as right companions", "C_ρ"),
    // collineations
    claim("gamma.order", "order of the direction preserving collineation group", "|Γ|"),
    claim("gamma0.order", "order of the origin stabilizer", "|Γ₀|"),
    claim("gamma_h.order", "order of the stabilizer of the horizontal axis", "|Γ_H|"),
    claim("gamma_v.order", "order of the stabilizer of the vertical axis", "|Γ_V|"),
    claim("orbit.size", "size of the orbit of the origin", "|P|"),
    claim("n.order", "order of the group generated by the pairs (ρ_aλ_a, λ_a⁻¹)", "|N|"),
    claim("n.kernel_order", "order of the kernel of the β-projection on N", "|ker Φ|"),
    claim("h.order", "order of H = Γ₀N", "|H|"),
    claim("full.order", "order of the full collineation group", "|Γ_full|"),
    claim("gamma.derived", "invariants of the derived subgroup of Γ", "Γ′"),
    claim("lambda.candidates", "abelian invariants of the abelian normal sharply transitive subgroups of G(L)", "Λ ≤ G(L)"),
    // search
    claim("search.total", "tables found by the search", "#tables"),
    claim("search.nonassociative_count", "non-associative tables among them", "#non-associative"),
    claim("search.no_nonassociative", "there is no non-associative left Bol loop of this order", "|L| < 8 ⇒ L a group"),
    claim("search.contains_builtins", "B1 and B2 occur among the non-associative tables up to isomorphism", "B1, B2 ∈ output"),
    claim("search.isomorphism_classes", "isomorphism classes among the tables", "#(≅ classes)"),
    claim("search.isotopy_classes", "isotopy classes among the tables", "#(isotopy classes)"),
    claim("search.two_isotopy_classes", "the non-associative left Bol loops of order 8 form exactly two isotopy classes", "#(isotopy classes) = 2"),
];

fn lookup(claim_id: &str) -> ClaimInfo {
    let stripped = ["b1.", "b2.", "analyze.", "net."]
        .iter()
        .filter_map(|p| claim_id.strip_prefix(p));
    std::iter::once(claim_id)
        .chain(stripped)
        .find_map(|key| REGISTRY.iter().find(|s| s.key == key))
        .copied()
        .unwrap_or_else(|| panic!("claim {claim_id} is not in the registry"))
}

/// Which builtin loops `verify` covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    B1,
    B2,
    All,
}

impl Target {
    fn loops(self) -> Vec<BuiltinLoop> {
        match self {
            Target::B1 => vec![BuiltinLoop::B1],
            Target::B2 => vec![BuiltinLoop::B2],
            Target::All => BuiltinLoop::ALL.to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::B1 => "b1",
            Target::B2 => "b2",
            Target::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Test hook: verify a copy of each builtin with `f²` and `f³`
    /// relabeled, which breaks claims stated in terms of named elements.
    pub corrupt_builtin: bool,
}

fn verified_table(which: BuiltinLoop, options: VerifyOptions) -> LoopTable {
    let l = which.table();
    if options.corrupt_builtin {
        let swap = Permutation::from_cycles(8, &[&[2, 3]]).expect("valid cycle");
        l.relabel(&swap).expect("relabeling keeps a loop")
    } else {
        l
    }
}

/// Runs the claim suite for the builtin loops.
pub fn verify(target: Target, options: VerifyOptions) -> Result<Report, NetError> {
    let mut report = Report::new("verify", target.name());
    for which in target.loops() {
        let l = verified_table(which, options);
        loop_claims(&mut report, which, &l);
        let net = structure_report(&l)?;
        net_claims(&mut report, which, &net);
    }
    Ok(report)
}

const F: usize = BUILTIN_GENERATORS[0];
const G: usize = BUILTIN_GENERATORS[1];
const F2: usize = 2;

fn set_text(l: &LoopTable, elems: &[usize]) -> String {
    let names: Vec<String> = elems.iter().map(|&x| l.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn loop_claims(report: &mut Report, which: BuiltinLoop, l: &LoopTable) {
    let p = which.name().to_lowercase();
    let id = |key: &str| format!("{p}.{key}");
    let b1 = which == BuiltinLoop::B1;

    let latin = l.order() == 8 && l.mul(0, 0) == 0;
    report.push(
        id("loop.latin"),
        Status::of(latin),
        format!("order {}", l.order()),
    );
    for (key, prop, want) in [
        ("loop.left_bol", Property::LeftBol, true),
        ("loop.nonassociative", Property::Associative, false),
        ("loop.lip", Property::Lip, true),
    ] {
        let check = l.check_property(prop);
        let value = match check.witness {
            Some(w) => format!("{}: {}, witness {w:?}", prop.name(), check.holds),
            None => format!("{}: {}", prop.name(), check.holds),
        };
        report.push(id(key), Status::of(check.holds == want), value);
    }
    if b1 {
        let holds = l.is(Property::Lcc);
        report.push(id("loop.lcc"), Status::of(holds), format!("lcc: {holds}"));
    }

    let left = l.nucleus(Nucleus::Left);
    let middle = l.nucleus(Nucleus::Middle);
    let right = l.nucleus(Nucleus::Right);
    report.push(
        id("nuclei.left"),
        Status::of(left == [0, F2]),
        set_text(l, &left),
    );
    report.push(
        id("nuclei.middle"),
        Status::of(middle == left),
        set_text(l, &middle),
    );
    let right_group = nucleus_group(l, Nucleus::Right);
    if b1 {
        let ok = are_isomorphic(&right_group, &named::cyclic(4));
        report.push(
            id("nuclei.right.cyclic"),
            Status::of(ok),
            set_text(l, &right),
        );
    } else {
        let ok = right == [0, F2, G, G + F2]
            && are_isomorphic(&right_group, &named::elementary_abelian(2));
        report.push(
            id("nuclei.right.klein"),
            Status::of(ok),
            set_text(l, &right),
        );
    }
    let indices_ok = right.len() * 2 == l.order()
        && left.len() * 2 == right.len()
        && left.iter().all(|x| right.contains(x));
    report.push(
        id("nuclei.indices"),
        Status::of(indices_ok),
        format!(
            "|L| = {}, |N_ρ| = {}, |N_λ| = {}",
            l.order(),
            right.len(),
            left.len()
        ),
    );

    named_automorphism_claim(report, which, l);

    let aut = automorphism_group(l);
    let aut_ok = aut.order() == 8 && are_isomorphic(&aut, &named::dihedral8());
    report.push(
        id("aut.dihedral"),
        Status::of(aut_ok),
        format!("|Aut| = {}", aut.order()),
    );

    let lefts = pseudo_automorphisms(l, Side::Left);
    let auts = automorphisms(l);
    let c_left = companion_set(l, Side::Left);
    let pseudo_ok = lefts.len() == auts.len()
        && lefts.iter().all(|pa| auts.contains(&pa.gamma))
        && c_left == left;
    report.push(
        id("pseudo.left"),
        Status::of(pseudo_ok),
        format!(
            "{} left pseudo-automorphisms, C_λ = {}",
            lefts.len(),
            set_text(l, &c_left)
        ),
    );

    inverse_claims(report, which, l, &auts);
    translation_claims(report, which, l);
}

fn named_automorphism_claim(report: &mut Report, which: BuiltinLoop, l: &LoopTable) {
    let p = which.name().to_lowercase();
    // (image of f, image of g) for the two named maps
    let defs: [(usize, usize); 2] = match which {
        BuiltinLoop::B1 => [(F, G + F), (3, G)],
        BuiltinLoop::B2 => [(G + F, G), (F, G + F2)],
    };
    let maps: Vec<Option<Permutation>> = defs
        .iter()
        .map(|&(f, g)| extend_to_automorphism(l, &BUILTIN_GENERATORS, &[f, g]))
        .collect();
    let (key, status, value) = match (which, &maps[..]) {
        (BuiltinLoop::B1, [Some(phi1), Some(phi2)]) => {
            let phi3 = compose(phi1, phi2);
            let ok = phi1.order() == 4 && phi2.order() == 2 && phi3.order() == 2;
            (
                "aut.named.phi",
                Status::of(ok),
                format!(
                    "orders φ₁ {}, φ₂ {}, φ₃ {}",
                    phi1.order(),
                    phi2.order(),
                    phi3.order()
                ),
            )
        }
        (BuiltinLoop::B2, [Some(psi1), Some(psi2)]) => {
            let psi3 = compose(psi1, psi2);
            let ok = psi1.order() == 2
                && psi2.order() == 2
                && psi3.order() == 4
                && psi3 != compose(psi2, psi1);
            (
                "aut.named.psi",
                Status::of(ok),
                format!(
                    "orders ψ₁ {}, ψ₂ {}, ψ₃ {}",
                    psi1.order(),
                    psi2.order(),
                    psi3.order()
                ),
            )
        }
        (BuiltinLoop::B1, _) => (
            "aut.named.phi",
            Status::Fail,
            "a named map does not extend".to_string(),
        ),
        (BuiltinLoop::B2, _) => (
            "aut.named.psi",
            Status::Fail,
            "a named map does not extend".to_string(),
        ),
    };
    report.push(format!("{p}.{key}"), status, value);
}

fn inverse_claims(report: &mut Report, which: BuiltinLoop, l: &LoopTable, auts: &[Permutation]) {
    let p = which.name().to_lowercase();
    let Some(j) = l.lip_inverse_map() else {
        let key = match which {
            BuiltinLoop::B1 => "inverse.right_pseudo",
            BuiltinLoop::B2 => "inverse.automorphism",
        };
        report.push(
            format!("{p}.{key}"),
            Status::Fail,
            "no left inverse property",
        );
        return;
    };
    let is_aut = auts.contains(&j);
    match which {
        BuiltinLoop::B1 => {
            let companions: Vec<usize> = l
                .elements()
                .filter(|&c| is_pseudo_automorphism(l, Side::Right, &j, c))
                .collect();
            report.push(
                format!("{p}.inverse.right_pseudo"),
                Status::of(!companions.is_empty() && !is_aut),
                format!("J = {j}, right companions {}", set_text(l, &companions)),
            );
        }
        BuiltinLoop::B2 => {
            report.push(
                format!("{p}.inverse.automorphism"),
                Status::of(is_aut),
                format!("J = {j}"),
            );
            let gens: Vec<Permutation> = [(G + F, G), (F, G + F2)]
                .iter()
                .filter_map(|&(f, g)| extend_to_automorphism(l, &BUILTIN_GENERATORS, &[f, g]))
                .collect();
            let word = (gens.len() == 2)
                .then(|| shortest_word(&gens, &j))
                .flatten()
                .map_or("not expressible".to_string(), |w| {
                    word_as_composition(&w, &["ψ₁", "ψ₂"])
                });
            report.push(format!("{p}.inverse.word"), Status::Computed, word);
        }
    }
}

fn translation_claims(report: &mut Report, which: BuiltinLoop, l: &LoopTable) {
    let p = which.name().to_lowercase();
    let g = translation_group(l);
    let derived = derived_subgroup(&g);
    let squares_in = g.elements().iter().all(|x| derived.contains(&x.then(x)));
    let derived_gen = l.left_translation(F2);
    let g_ok = g.order() == 16
        && !g.is_abelian()
        && derived.order() == 2
        && derived.contains(&derived_gen)
        && !derived_gen.is_identity()
        && squares_in;
    report.push(
        format!("{p}.translations.group"),
        Status::of(g_ok),
        format!(
            "|G| = {}, |G′| = {}, squares in G′: {squares_in}",
            g.order(),
            derived.order()
        ),
    );

    let left = l.nucleus(Nucleus::Left);
    let right = l.nucleus(Nucleus::Right);
    let mut triples = 0;
    let mut bad = 0;
    for a in l.elements() {
        for b in l.elements() {
            let c = l.ldiv(l.mul(b, a), 0);
            triples += 1;
            let t = triple_translation(l, a, b, c);
            let meets = [a, b, c].iter().any(|x| left.contains(x));
            if t.is_identity() != meets || !right.iter().all(|&r| t.fixes(r)) {
                bad += 1;
            }
        }
    }
    report.push(
        format!("{p}.translations.triples"),
        Status::of(bad == 0),
        format!("{triples} triples, {bad} counterexamples"),
    );

    let comm = aut_g_commutator(l);
    let ok = are_isomorphic(&comm, &nucleus_group(l, Nucleus::Right));
    report.push(
        format!("{p}.translations.aut_commutator"),
        Status::of(ok),
        format!("order {}", comm.order()),
    );
}

/// Check ids of the structure report that `verify` expects for each loop.
const SHARED_NET: &[&str] = &[
    "gamma.orbit_stabilizer",
    "gamma.lines",
    "gamma0.automorphisms",
    "gamma_h.left_pseudo",
    "gamma_v.right_pseudo",
    "orbit.l_h_companions",
    "orbit.l_v_companions",
    "coordinates.origin_orbit",
    "gamma.generated",
    "n.generators",
    "n.normal",
    "n.kernel",
    "n.unit_fixing_alpha",
    "n.phi_image",
    "n.transitive_horizontal",
    "reflections.shape",
    "reflections.normal_set",
    "full.index_two",
    "named.orders",
    "h.derived_frattini",
    "hbar.projection",
    "hbar.derived",
    "hbar.frattini",
];

const B1_NET: &[&str] = &[
    "orbit.vertical_union",
    "b1.gamma_eq_h",
    "b1.split",
    "b1.conjugation_action",
    "b1.semidirect_model",
    "b1.derived_frattini",
    "b1.n_regular_on_p",
];

const B2_NET: &[&str] = &[
    "b2.n0",
    "b2.gamma_h",
    "b2.gamma_mod_n",
    "b2.sigma_direct",
    "b2.derived",
    "b2.frattini_rank",
    "b2.lambda",
    "b2.lambda_unique",
];

fn net_claims(report: &mut Report, which: BuiltinLoop, net: &NetGroupReport) {
    let p = which.name().to_lowercase();
    let specific = match which {
        BuiltinLoop::B1 => B1_NET,
        BuiltinLoop::B2 => B2_NET,
    };
    for &check_id in SHARED_NET.iter().chain(specific) {
        let claim_id = if check_id.starts_with("b1.") || check_id.starts_with("b2.") {
            check_id.to_string()
        } else {
            format!("{p}.{check_id}")
        };
        match net.check(check_id) {
            Some(c) => report.push(claim_id, Status::of(c.passed), c.detail.clone()),
            None => report.push(claim_id, Status::Fail, "not established for this table"),
        }
    }
    report.push(
        format!("{p}.h.derived_projection"),
        Status::Computed,
        net.h_derived_beta_image_order
            .map_or("n/a".to_string(), |o| format!("order {o}")),
    );
}

/// Facts about a user-supplied loop.
#[derive(Clone, Debug, Serialize)]
pub struct LoopFacts {
    pub order: usize,
    pub properties: std::collections::BTreeMap<&'static str, bool>,
    pub left_nucleus: Vec<usize>,
    pub middle_nucleus: Vec<usize>,
    pub right_nucleus: Vec<usize>,
    /// Disjoint cycle notation.
    pub inverse_map: Option<String>,
    pub automorphism_count: usize,
    pub automorphism_fingerprint: crate::group::GroupFingerprint,
    pub left_pseudo_automorphisms: usize,
    pub right_pseudo_automorphisms: usize,
    pub left_companions: Vec<usize>,
    pub right_companions: Vec<usize>,
}

pub fn loop_facts(l: &LoopTable) -> LoopFacts {
    LoopFacts {
        order: l.order(),
        properties: Property::ALL.iter().map(|&p| (p.name(), l.is(p))).collect(),
        left_nucleus: l.nucleus(Nucleus::Left),
        middle_nucleus: l.nucleus(Nucleus::Middle),
        right_nucleus: l.nucleus(Nucleus::Right),
        inverse_map: l.lip_inverse_map().map(|j| j.to_string()),
        automorphism_count: automorphisms(l).len(),
        automorphism_fingerprint: fingerprint(&automorphism_group(l)),
        left_pseudo_automorphisms: pseudo_automorphisms(l, Side::Left).len(),
        right_pseudo_automorphisms: pseudo_automorphisms(l, Side::Right).len(),
        left_companions: companion_set(l, Side::Left),
        right_companions: companion_set(l, Side::Right),
    }
}

pub fn analyze(l: &LoopTable, input: &str) -> Report {
    // a file holding a builtin table gets the builtin's element names
    let rows = l.rows();
    let named = BuiltinLoop::ALL
        .iter()
        .map(|b| b.table())
        .find(|b| b.rows() == rows);
    let l = named.as_ref().unwrap_or(l);
    let facts = loop_facts(l);
    let mut report = Report::new("analyze", input);
    let mut info =
        |key: &str, value: String| report.push(format!("analyze.{key}"), Status::Computed, value);
    info("order", facts.order.to_string());
    for (name, holds) in &facts.properties {
        info(&format!("property.{name}"), holds.to_string());
    }
    info("nucleus.left", set_text(l, &facts.left_nucleus));
    info("nucleus.middle", set_text(l, &facts.middle_nucleus));
    info("nucleus.right", set_text(l, &facts.right_nucleus));
    info(
        "inverse_map",
        facts
            .inverse_map
            .clone()
            .unwrap_or_else(|| "none".to_string()),
    );
    info("aut.order", facts.automorphism_count.to_string());
    let fp = &facts.automorphism_fingerprint;
    info(
        "aut.fingerprint",
        format!(
            "orders {:?}, center {}, abelianization {:?}",
            fp.element_order_histogram, fp.center_order, fp.abelianization_invariants
        ),
    );
    info(
        "pseudo.left.count",
        facts.left_pseudo_automorphisms.to_string(),
    );
    info(
        "pseudo.right.count",
        facts.right_pseudo_automorphisms.to_string(),
    );
    info("companions.left", set_text(l, &facts.left_companions));
    info("companions.right", set_text(l, &facts.right_companions));
    report.data = serde_json::to_value(&facts).expect("facts serialize");
    report
}

/// Structure report of the net of `l` as a claim report. The structure
/// checks become pass/fail sections; orders are informational.
pub fn collineations(l: &LoopTable, input: &str) -> Result<Report, NetError> {
    let start = Instant::now();
    let net = structure_report(l)?;
    let mut report = Report::new("collineations", input);
    let info = |report: &mut Report, key: &str, value: String| {
        report.push(format!("net.{key}"), Status::Computed, value)
    };
    info(&mut report, "gamma.order", net.gamma_order.to_string());
    info(&mut report, "gamma0.order", net.gamma0_order.to_string());
    info(&mut report, "gamma_h.order", net.gamma_h_order.to_string());
    info(&mut report, "gamma_v.order", net.gamma_v_order.to_string());
    info(
        &mut report,
        "orbit.size",
        net.orbit_of_origin.len().to_string(),
    );
    let fp = &net.gamma_derived;
    info(
        &mut report,
        "gamma.derived",
        format!(
            "order {}, abelianization {:?}",
            fp.order, fp.abelianization_invariants
        ),
    );
    if net.left_bol {
        let opt = |v: Option<usize>| v.map_or("n/a".to_string(), |o| o.to_string());
        info(&mut report, "n.order", opt(net.n_order));
        info(&mut report, "n.kernel_order", opt(net.kernel_order));
        info(&mut report, "h.order", opt(net.h_order));
        info(&mut report, "full.order", opt(net.full_group_order));
        info(
            &mut report,
            "lambda.candidates",
            format!("{:?}", net.lambda_candidates),
        );
    }
    for c in &net.checks {
        report.push(
            format!("net.{}", c.id),
            Status::of(c.passed),
            c.detail.clone(),
        );
    }
    report.data = serde_json::to_value(&net).expect("report serializes");
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchRequest {
    pub order: usize,
    pub nonassociative_only: bool,
    pub symmetry_breaking: bool,
    pub classify: Option<Relation>,
}

pub fn search(request: SearchRequest) -> Result<Report, SearchError> {
    let start = Instant::now();
    let outcome = enumerate_bol(
        request.order,
        SearchOptions {
            nonassociative_only: request.nonassociative_only,
            symmetry_breaking: request.symmetry_breaking,
        },
    )?;
    let mut input = format!("order {}", request.order);
    if request.nonassociative_only {
        input.push_str(", non-associative only");
    }
    if !request.symmetry_breaking {
        input.push_str(", no symmetry breaking");
    }
    let mut report = Report::new("search", input);
    let tables = &outcome.tables;
    let nonassoc: Vec<LoopTable> = tables
        .iter()
        .filter(|t| !t.is(Property::Associative))
        .cloned()
        .collect();
    report.push(
        "search.total".into(),
        Status::Computed,
        tables.len().to_string(),
    );
    report.push(
        "search.nonassociative_count".into(),
        Status::Computed,
        nonassoc.len().to_string(),
    );
    if request.order < 8 {
        report.push(
            "search.no_nonassociative".into(),
            Status::of(nonassoc.is_empty()),
            format!("{} non-associative tables", nonassoc.len()),
        );
    } else {
        let found: Vec<&str> = BuiltinLoop::ALL
            .iter()
            .filter(|b| contains_up_to_isomorphism(&nonassoc, &b.table()))
            .map(|b| b.name())
            .collect();
        report.push(
            "search.contains_builtins".into(),
            Status::of(found.len() == 2),
            format!("found {found:?}"),
        );
    }
    let mut classification = Value::Null;
    if let Some(relation) = request.classify {
        let result = classify(tables, relation)?;
        report.push(
            "search.isomorphism_classes".into(),
            Status::Computed,
            result.isomorphism_class_count.to_string(),
        );
        if let Some(count) = result.isotopy_class_count {
            if request.order == 8 && request.nonassociative_only {
                report.push(
                    "search.two_isotopy_classes".into(),
                    Status::of(count == 2),
                    count.to_string(),
                );
            } else {
                report.push(
                    "search.isotopy_classes".into(),
                    Status::Computed,
                    count.to_string(),
                );
            }
        }
        classification = serde_json::to_value(&result).expect("classification serializes");
    }
    report.data = serde_json::json!({
        "classification": classification,
        "nodes": outcome.nodes,
        "partitions": outcome.partitions,
    });
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// `true` if every claim id in the registry is distinct.
pub fn registry_is_consistent() -> bool {
    let keys: BTreeSet<&str> = REGISTRY.iter().map(|s| s.key).collect();
    keys.len() == REGISTRY.len()
}
