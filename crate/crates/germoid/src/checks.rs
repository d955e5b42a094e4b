//! The runnable invariant suite: every algebraic and topological law the
//! toolkit relies on, executed against one carrier at a chosen truncation.
//! The command surface exposes it as `check`; the integration tests run it
//! across all built-in carriers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::continuity::{e_continuity_verdict, lower_idempotents, ContinuityVerdict};
use crate::groupoid::{
    germ_eq, germs_over, hausdorff_verdict, separation_aggregate, source_range, sweep_characters,
    Germ, GermRep,
};
use crate::ktheory::{k0_colimit_description, Variant};
use crate::l2::{
    degeneration_report, equivariance_check, gram_psd_check, inner_join_set,
    linear_independence_probe, phi_inner, EpsilonModuleVector,
};
use crate::semigroup::{compose, Code, Element, Family, InverseSemigroup};
use crate::spectrum::{
    act_character, characters, density_check, epsilon_action, CharCode, Character,
};

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// False when the check could not certify either way within its budget.
    pub definite: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: true,
            definite: true,
            detail,
        }
    }
    fn fail(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            definite: true,
            detail,
        }
    }
    fn indefinite(name: &str, detail: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            definite: false,
            detail,
        }
    }
    fn from_flag(name: &str, ok: bool, detail: String) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

/// The largest enumeration level at or below the truncation whose element
/// count stays within the cap, so exhaustive law sweeps stay exhaustive but
/// bounded.
fn law_level(carrier: &InverseSemigroup, truncation: u32, cap: usize) -> u32 {
    let mut level = 0;
    for l in 0..=truncation {
        if carrier.elements(l).len() <= cap {
            level = l;
        } else {
            break;
        }
    }
    level
}

fn law_elements(carrier: &InverseSemigroup, truncation: u32, cap: usize) -> Vec<Element> {
    carrier
        .elements(law_level(carrier, truncation, cap))
        .into_iter()
        .map(|c| carrier.element(c).unwrap())
        .collect()
}

/// Runs the whole suite. Deterministic for a fixed seed.
pub fn run_all(
    carrier: &InverseSemigroup,
    truncation: u32,
    basis_budget: u32,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = vec![
        product_laws(carrier, truncation),
        order_laws(carrier, truncation),
        character_multiplicativity(carrier, truncation),
        action_composition(carrier, truncation),
        carrier_meets(carrier, truncation),
        principal_action_crosscheck(carrier, truncation),
        density(carrier, truncation, basis_budget),
        continuity_soundness(carrier, truncation),
        continuity_monotone(carrier, truncation),
        germ_equivalence_laws(carrier, truncation),
        composition_well_defined(carrier, truncation),
        composition_associativity(carrier, truncation),
        source_range_chaining(carrier, truncation),
        hausdorff_cross_check(carrier, truncation, basis_budget),
        gram_diagonal(carrier, truncation),
        gram_symmetry(carrier, truncation),
        module_compatibility(carrier, truncation),
        psd_random_subsets(carrier, truncation, seed),
        equivariance_window(carrier, truncation),
        independence_probe(carrier, truncation, seed),
        epsilon_action_law(carrier, truncation),
    ];
    if carrier.family() == Some(&Family::ChainWithSymmetry) {
        out.push(epsilon_instances(carrier, truncation));
        out.push(degeneration(carrier, truncation, basis_budget));
        out.push(stage_structure(truncation));
    }
    out
}

fn product_laws(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let window = law_elements(carrier, truncation, 40);
    let mut checked = 0usize;
    for a in &window {
        let asa = compose(&compose(a, &a.star()).unwrap(), a).unwrap();
        if asa != *a {
            return CheckResult::fail("product_laws", format!("g g* g != g at {}", a.name()));
        }
        for b in &window {
            let ab_star = compose(a, b).unwrap().star();
            let bs_as = compose(&b.star(), &a.star()).unwrap();
            if ab_star != bs_as {
                return CheckResult::fail(
                    "product_laws",
                    format!("(ab)* != b* a* at {}, {}", a.name(), b.name()),
                );
            }
            for c in &window {
                let left = compose(&compose(a, b).unwrap(), c).unwrap();
                let right = compose(a, &compose(b, c).unwrap()).unwrap();
                if left != right {
                    return CheckResult::fail(
                        "product_laws",
                        format!("associativity broke at {}, {}, {}", a.name(), b.name(), c.name()),
                    );
                }
                checked += 1;
            }
        }
    }
    let idems: Vec<Element> = window.iter().filter(|e| e.is_idempotent()).cloned().collect();
    for e in &idems {
        for f in &idems {
            if compose(e, f).unwrap() != compose(f, e).unwrap() {
                return CheckResult::fail(
                    "product_laws",
                    format!("idempotents {} and {} do not commute", e.name(), f.name()),
                );
            }
        }
    }
    CheckResult::pass("product_laws", format!("{checked} triples"))
}

fn order_laws(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let window = law_elements(carrier, truncation, 40);
    for a in &window {
        if !carrier.leq(a.code(), a.code()) {
            return CheckResult::fail("order_laws", format!("not reflexive at {}", a.name()));
        }
        for b in &window {
            if carrier.leq(a.code(), b.code()) != carrier.leq_alt(a.code(), b.code()) {
                return CheckResult::fail(
                    "order_laws",
                    format!("the two order forms disagree at {}, {}", a.name(), b.name()),
                );
            }
            if carrier.leq(a.code(), b.code()) && carrier.leq(b.code(), a.code()) && a != b {
                return CheckResult::fail(
                    "order_laws",
                    format!("antisymmetry broke at {}, {}", a.name(), b.name()),
                );
            }
            for c in &window {
                if carrier.leq(a.code(), b.code())
                    && carrier.leq(b.code(), c.code())
                    && !carrier.leq(a.code(), c.code())
                {
                    return CheckResult::fail(
                        "order_laws",
                        format!(
                            "transitivity broke at {}, {}, {}",
                            a.name(),
                            b.name(),
                            c.name()
                        ),
                    );
                }
            }
        }
    }
    CheckResult::pass("order_laws", format!("{} elements", window.len()))
}

fn character_multiplicativity(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 40);
    let chars = sweep_characters(carrier, level);
    let idems = carrier.idempotents(level);
    for x in &chars {
        for e in &idems {
            for f in &idems {
                let ef = carrier.mul(e, f);
                if x.evaluates_code(&ef) != (x.evaluates_code(e) && x.evaluates_code(f)) {
                    return CheckResult::fail(
                        "character_multiplicativity",
                        format!("at {} on {:?}, {:?}", x.render(), e, f),
                    );
                }
            }
        }
    }
    CheckResult::pass(
        "character_multiplicativity",
        format!("{} characters", chars.len()),
    )
}

fn action_composition(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 30);
    let chars = sweep_characters(carrier, level);
    let window = law_elements(carrier, truncation, 30);
    let mut checked = 0usize;
    for x in &chars {
        for g in &window {
            for h in &window {
                let gh = compose(g, h).unwrap();
                let step = act_character(x, g).and_then(|y| act_character(&y, h));
                let joint = act_character(x, &gh);
                if let (Some(a), Some(b)) = (&step, &joint) {
                    if a != b {
                        return CheckResult::fail(
                            "action_composition",
                            format!("at {} with {}, {}", x.render(), g.name(), h.name()),
                        );
                    }
                    checked += 1;
                }
            }
        }
    }
    CheckResult::pass("action_composition", format!("{checked} nonzero chains"))
}

fn carrier_meets(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 40);
    let chars = sweep_characters(carrier, level);
    let idems = carrier.idempotents(level);
    for e in &idems {
        for f in &idems {
            let ef = carrier.mul(e, f);
            for x in &chars {
                if x.evaluates_code(&ef) != (x.evaluates_code(e) && x.evaluates_code(f)) {
                    return CheckResult::fail("carrier_meets", format!("at {}", x.render()));
                }
            }
        }
    }
    CheckResult::pass("carrier_meets", format!("{} idempotents", idems.len()))
}

fn principal_action_crosscheck(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 30);
    let window = law_elements(carrier, truncation, 30);
    for e in carrier.idempotents(level) {
        let e = carrier.element(e).unwrap();
        let x = Character::principal(&e).unwrap();
        for g in &window {
            let moved = act_character(&x, g);
            let mass = epsilon_action(&g.star(), &e).unwrap();
            match moved {
                Some(y) => {
                    let CharCode::Principal(f) = y.code() else {
                        return CheckResult::fail(
                            "principal_action_crosscheck",
                            "principal point moved to a limit point".into(),
                        );
                    };
                    let ok = mass.terms().len() == 1 && mass.terms()[0].1 == *f;
                    if !ok {
                        return CheckResult::fail(
                            "principal_action_crosscheck",
                            format!("point and mass disagree at {} under {}", e.name(), g.name()),
                        );
                    }
                }
                None => {
                    if !mass.is_zero() {
                        return CheckResult::fail(
                            "principal_action_crosscheck",
                            format!("zero point but nonzero mass at {} under {}", e.name(), g.name()),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("principal_action_crosscheck", format!("{} elements", window.len()))
}

fn density(carrier: &InverseSemigroup, truncation: u32, basis_budget: u32) -> CheckResult {
    let report = density_check(carrier, truncation, basis_budget);
    CheckResult::from_flag(
        "density",
        report.passed,
        format!(
            "{} opens checked, {} skipped empty, violations: {:?}",
            report.opens_checked, report.skipped_empty, report.violations
        ),
    )
}

fn continuity_soundness(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let window = law_elements(carrier, truncation, 60);
    let mut unknowns = 0usize;
    for g in &window {
        match e_continuity_verdict(g, truncation) {
            ContinuityVerdict::Continuous { certificate } => {
                let lower = lower_idempotents(g, truncation);
                for f in &certificate {
                    if carrier.mul(g.code(), f.code()) != *f.code() {
                        return CheckResult::fail(
                            "continuity_soundness",
                            format!("certificate member {} not below {}", f.name(), g.name()),
                        );
                    }
                }
                for e in &lower {
                    if !certificate.iter().any(|f| carrier.leq(e.code(), f.code())) {
                        return CheckResult::fail(
                            "continuity_soundness",
                            format!("certificate of {} misses {}", g.name(), e.name()),
                        );
                    }
                }
            }
            ContinuityVerdict::Discontinuous { witness } => {
                let lower = lower_idempotents(g, truncation);
                if lower.iter().any(|e| witness.evaluates(e)) {
                    return CheckResult::fail(
                        "continuity_soundness",
                        format!("witness of {} meets its own lower set", g.name()),
                    );
                }
            }
            ContinuityVerdict::Unknown { .. } => unknowns += 1,
        }
    }
    if unknowns > 0 {
        CheckResult::indefinite(
            "continuity_soundness",
            format!("{unknowns} unknown verdicts in the window"),
        )
    } else {
        CheckResult::pass("continuity_soundness", format!("{} elements", window.len()))
    }
}

fn continuity_monotone(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    if truncation < 4 {
        return CheckResult::pass("continuity_monotone", "window too small, skipped".into());
    }
    let window = law_elements(carrier, truncation.saturating_sub(2), 30);
    for g in &window {
        let mut last: Option<bool> = None; // Some(true)=continuous, Some(false)=discontinuous
        for lvl in [truncation - 2, truncation - 1, truncation] {
            let now = match e_continuity_verdict(g, lvl) {
                ContinuityVerdict::Continuous { .. } => Some(true),
                ContinuityVerdict::Discontinuous { .. } => Some(false),
                ContinuityVerdict::Unknown { .. } => None,
            };
            if let (Some(a), Some(b)) = (last, now) {
                if a != b {
                    return CheckResult::fail(
                        "continuity_monotone",
                        format!("verdict for {} flipped between levels", g.name()),
                    );
                }
            }
            if now.is_some() {
                last = now;
            }
        }
    }
    CheckResult::pass("continuity_monotone", format!("{} elements", window.len()))
}

fn germ_equivalence_laws(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 30);
    let window = law_elements(carrier, truncation, 30);
    for x in sweep_characters(carrier, level) {
        let mut reps = Vec::new();
        for g in &window {
            let gsg = carrier.mul(&carrier.star(g.code()), g.code());
            if x.evaluates_code(&gsg) {
                reps.push(GermRep::new(g.clone(), x.clone()).unwrap());
            }
        }
        for a in &reps {
            if !germ_eq(a, a) {
                return CheckResult::fail("germ_equivalence_laws", "reflexivity broke".into());
            }
            for b in &reps {
                if germ_eq(a, b) != germ_eq(b, a) {
                    return CheckResult::fail("germ_equivalence_laws", "symmetry broke".into());
                }
                for c in &reps {
                    if germ_eq(a, b) && germ_eq(b, c) && !germ_eq(a, c) {
                        return CheckResult::fail(
                            "germ_equivalence_laws",
                            "transitivity broke".into(),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("germ_equivalence_laws", format!("{} elements", window.len()))
}

fn composition_well_defined(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 24);
    let chars = sweep_characters(carrier, level);
    let window = law_elements(carrier, truncation, 24);
    for x in &chars {
        for y in &chars {
            let fy = germs_over(y, level);
            for a_el in &window {
                let gsg = carrier.mul(&carrier.star(a_el.code()), a_el.code());
                if !x.evaluates_code(&gsg) {
                    continue;
                }
                let a = Germ::from_rep(GermRep::new(a_el.clone(), x.clone()).unwrap(), level);
                let canonical = Germ::from_rep(a.rep().clone(), level);
                for b in &fy {
                    let lhs = crate::groupoid::compose_germs(&a, b);
                    let rhs = crate::groupoid::compose_germs(&canonical, b);
                    match (&lhs, &rhs) {
                        (None, None) => {}
                        (Some(p), Some(q)) if p == q => {}
                        _ => {
                            return CheckResult::fail(
                                "composition_well_defined",
                                format!(
                                    "result depends on the representative at {} over {}",
                                    a_el.name(),
                                    x.render()
                                ),
                            )
                        }
                    }
                }
            }
        }
    }
    CheckResult::pass("composition_well_defined", format!("{} elements", window.len()))
}

fn composition_associativity(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 16);
    let chars = sweep_characters(carrier, level);
    let mut germs = Vec::new();
    for x in &chars {
        germs.extend(germs_over(x, level));
    }
    germs.truncate(40);
    for a in &germs {
        for b in &germs {
            for c in &germs {
                let left = crate::groupoid::compose_germs(a, b)
                    .and_then(|ab| crate::groupoid::compose_germs(&ab, c));
                let right = crate::groupoid::compose_germs(b, c)
                    .and_then(|bc| crate::groupoid::compose_germs(a, &bc));
                if let (Some(l), Some(r)) = (&left, &right) {
                    if l != r {
                        return CheckResult::fail(
                            "composition_associativity",
                            "parenthesizations disagree".into(),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("composition_associativity", format!("{} germs", germs.len()))
}

fn source_range_chaining(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 20);
    let chars = sweep_characters(carrier, level);
    let mut germs = Vec::new();
    for x in &chars {
        germs.extend(germs_over(x, level));
    }
    germs.truncate(40);
    for a in &germs {
        for b in &germs {
            if crate::groupoid::compose_germs(a, b).is_some() {
                let (src_a, _) = source_range(a.rep());
                let (_, rng_b) = source_range(b.rep());
                if src_a != rng_b {
                    return CheckResult::fail(
                        "source_range_chaining",
                        "a defined composition with mismatched chaining".into(),
                    );
                }
            }
        }
    }
    CheckResult::pass("source_range_chaining", format!("{} germs", germs.len()))
}

fn hausdorff_cross_check(
    carrier: &InverseSemigroup,
    truncation: u32,
    basis_budget: u32,
) -> CheckResult {
    let level = law_level(carrier, truncation, 24);
    let chars = sweep_characters(carrier, level);
    let agg = separation_aggregate(level, basis_budget, &chars);
    let hd = hausdorff_verdict(carrier, truncation, basis_budget);
    if hd.verdict == "unknown" {
        return CheckResult::indefinite(
            "hausdorff_cross_check",
            "the theorem route is unknown at this truncation".into(),
        );
    }
    let summary = format!(
        "{} pairs: {} separated, {} not separated, {} inconclusive; verdict {}",
        agg.pairs_total, agg.separated, agg.not_separated, agg.inconclusive, hd.verdict
    );
    if hd.verdict == "hausdorff" {
        if agg.not_separated > 0 {
            return CheckResult::fail("hausdorff_cross_check", summary);
        }
        CheckResult::pass("hausdorff_cross_check", summary)
    } else {
        // the theorem route says non-Hausdorff: the direct route must witness
        // it, and an exhausted budget leaves the cross-check open rather
        // than refuted
        if agg.not_separated > 0 {
            CheckResult::pass("hausdorff_cross_check", summary)
        } else if agg.inconclusive > 0 {
            CheckResult::indefinite("hausdorff_cross_check", summary)
        } else {
            CheckResult::fail("hausdorff_cross_check", summary)
        }
    }
}

fn gram_diagonal(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 40);
    let chars = characters(carrier, level);
    let window = law_elements(carrier, truncation, 40);
    for g in &window {
        let f = phi_inner(g, g, truncation).unwrap();
        let ggs = carrier.mul(g.code(), &carrier.star(g.code()));
        for x in &chars {
            if f.eval(x) != x.evaluates_code(&ggs) {
                return CheckResult::fail(
                    "gram_diagonal",
                    format!("<phi,phi> != x(g g*) at {} for {}", x.render(), g.name()),
                );
            }
        }
    }
    CheckResult::pass("gram_diagonal", format!("{} elements", window.len()))
}

fn gram_symmetry(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let window = law_elements(carrier, truncation, 24);
    for a in &window {
        for b in &window {
            let ab = inner_join_set(a, b, truncation).unwrap();
            let ba = inner_join_set(b, a, truncation).unwrap();
            if ab != ba {
                return CheckResult::fail(
                    "gram_symmetry",
                    format!("join sets differ for {}, {}", a.name(), b.name()),
                );
            }
        }
    }
    CheckResult::pass("gram_symmetry", format!("{} elements", window.len()))
}

fn module_compatibility(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 20);
    let chars = characters(carrier, level);
    let window = law_elements(carrier, truncation, 20);
    let idems: Vec<Element> = window.iter().filter(|e| e.is_idempotent()).cloned().collect();
    for g in &window {
        for h in &window {
            for e in &idems {
                let eg = compose(e, g).unwrap();
                let cut = phi_inner(&eg, h, truncation).unwrap();
                let full = phi_inner(g, h, truncation).unwrap();
                for x in &chars {
                    if cut.eval(x) != (full.eval(x) && x.evaluates(e)) {
                        return CheckResult::fail(
                            "module_compatibility",
                            format!(
                                "cut mismatch for {}, {}, {} at {}",
                                g.name(),
                                h.name(),
                                e.name(),
                                x.render()
                            ),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("module_compatibility", format!("{} elements", window.len()))
}

fn psd_random_subsets(carrier: &InverseSemigroup, truncation: u32, seed: u64) -> CheckResult {
    let level = law_level(carrier, truncation, 60);
    let chars = characters(carrier, level);
    let pool = law_elements(carrier, truncation, 60);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..100 {
        let size = rng.gen_range(1..=4usize);
        let subset: Vec<Element> = (0..size)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        match gram_psd_check(&subset, &chars, truncation) {
            Ok(report) if report.passed => {}
            Ok(report) => {
                return CheckResult::fail(
                    "psd_random_subsets",
                    format!("trial {trial}: {:?}", report.violations),
                )
            }
            Err(e) => return CheckResult::fail("psd_random_subsets", e.to_string()),
        }
    }
    CheckResult::pass("psd_random_subsets", "100 seeded subsets".into())
}

fn equivariance_window(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let level = law_level(carrier, truncation, 12);
    let chars = characters(carrier, level + 2);
    let window = law_elements(carrier, truncation, 12);
    let mut checked = 0usize;
    for g in &window {
        for a in &window {
            for b in &window {
                match equivariance_check(g, a, b, &chars, truncation.max(level + 2)) {
                    Ok(r) if r.passed => checked += 1,
                    Ok(r) => {
                        return CheckResult::fail(
                            "equivariance_window",
                            r.mismatches.first().cloned().unwrap_or_default(),
                        )
                    }
                    Err(e) => return CheckResult::fail("equivariance_window", e.to_string()),
                }
            }
        }
    }
    CheckResult::pass("equivariance_window", format!("{checked} triples"))
}

fn independence_probe(carrier: &InverseSemigroup, truncation: u32, seed: u64) -> CheckResult {
    let level = law_level(carrier, truncation, 40);
    let chars = characters(carrier, level);
    let pool = law_elements(carrier, truncation, 40);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b9);
    let mut passes = 0usize;
    for _ in 0..20 {
        let size = rng.gen_range(1..=3usize);
        let mut subset: Vec<Element> = Vec::new();
        while subset.len() < size {
            let g = pool[rng.gen_range(0..pool.len())].clone();
            if !subset.contains(&g) {
                subset.push(g);
            }
        }
        let report =
            linear_independence_probe(&subset, 3, &chars, truncation, rng.gen()).unwrap();
        if report.all_pass {
            passes += 1;
        }
    }
    // trials certify non-nullity; a miss is inconclusive rather than wrong
    if passes == 20 {
        CheckResult::pass("independence_probe", "20 seeded subsets".into())
    } else {
        CheckResult::indefinite(
            "independence_probe",
            format!("{passes}/20 subsets certified"),
        )
    }
}

fn epsilon_action_law(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    let window = law_elements(carrier, truncation, 16);
    for h2 in &window {
        for h1 in &window {
            for g in &window {
                let step = crate::l2::epsilon_act(
                    h2,
                    &crate::l2::epsilon_act(h1, &EpsilonModuleVector::delta(g)).unwrap(),
                )
                .unwrap();
                let joint = crate::l2::epsilon_act(
                    &compose(h2, h1).unwrap(),
                    &EpsilonModuleVector::delta(g),
                )
                .unwrap();
                if step != joint {
                    return CheckResult::fail(
                        "epsilon_action_law",
                        format!("at {}, {}, {}", h2.name(), h1.name(), g.name()),
                    );
                }
            }
        }
    }
    CheckResult::pass("epsilon_action_law", format!("{} elements", window.len()))
}

fn epsilon_instances(carrier: &InverseSemigroup, truncation: u32) -> CheckResult {
    use crate::l2::{epsilon_inner, epsilon_module_product};
    use crate::spectrum::EpsilonFunction;
    let s = carrier.parse("S").unwrap();
    let one = carrier.parse("1").unwrap();
    let n = truncation.max(4);
    let mut ok = epsilon_inner(&s, &s).unwrap() == EpsilonFunction::point_mass(&one).unwrap();
    ok &= epsilon_inner(&s, &one).unwrap().is_zero();
    ok &= epsilon_module_product(&s, &one).unwrap() == EpsilonModuleVector::delta(&s);
    for k in 1..=n {
        let ek = carrier.element(Code::Proj(k)).unwrap();
        ok &= epsilon_inner(&ek, &ek).unwrap() == EpsilonFunction::point_mass(&ek).unwrap();
        ok &= epsilon_module_product(&s, &ek).unwrap().is_zero();
    }
    CheckResult::from_flag("epsilon_instances", ok, format!("levels 1..={n}"))
}

fn degeneration(carrier: &InverseSemigroup, truncation: u32, basis_budget: u32) -> CheckResult {
    match degeneration_report(carrier, truncation, basis_budget) {
        Ok(report) => CheckResult::from_flag(
            "degeneration",
            report.all_verified && report.degenerates,
            format!("norm squared {}", report.norm_squared),
        ),
        Err(e) => CheckResult::fail("degeneration", e.to_string()),
    }
}

fn stage_structure(truncation: u32) -> CheckResult {
    let levels = truncation.clamp(4, 12);
    for variant in [Variant::A, Variant::B] {
        let report = k0_colimit_description(variant, levels);
        if !report.all_verified {
            return CheckResult::fail("stage_structure", format!("{variant:?} failed to verify"));
        }
        for (n, st) in report.stages.iter().enumerate() {
            if st.rank != n + 2 {
                return CheckResult::fail(
                    "stage_structure",
                    format!("{variant:?} level {n} has rank {}", st.rank),
                );
            }
        }
        for inc in &report.inclusions {
            let splits = inc.splitting_rows.len();
            let expected = if variant == Variant::A { 1 } else { 0 };
            if splits != expected {
                return CheckResult::fail(
                    "stage_structure",
                    format!("{variant:?} level {} has {splits} splitting rows", inc.from_level),
                );
            }
        }
    }
    CheckResult::pass("stage_structure", format!("levels 0..={levels}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::partial_bijection::PartialBijection;

    #[test]
    fn suite_passes_on_every_builtin() {
        let carriers: Vec<(InverseSemigroup, u32)> = vec![
            (InverseSemigroup::chain_with_symmetry(), 8),
            (InverseSemigroup::pure_chain(), 8),
            (InverseSemigroup::bicyclic(), 6),
            (InverseSemigroup::polycyclic(2, false).unwrap(), 3),
        ];
        for (carrier, lvl) in carriers {
            let results = run_all(&carrier, lvl, 30, 42);
            for r in &results {
                assert!(r.passed || !r.definite, "{carrier:?} / {}: {}", r.name, r.detail);
                assert!(r.definite, "{carrier:?} / {} is indefinite: {}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn suite_passes_on_a_finite_closure() {
        let swap = PartialBijection::new(2, &[(1, 2), (2, 1)]).unwrap();
        let on_one = PartialBijection::partial_identity(2, &[1]).unwrap();
        let i2 = InverseSemigroup::from_partial_bijections(&[swap, on_one], 100).unwrap();
        let results = run_all(&i2, 4, 30, 42);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
