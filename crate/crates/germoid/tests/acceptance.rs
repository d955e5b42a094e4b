//! The acceptance suite: one test per criterion, each printing a PASS line
//! with its headline numbers once everything inside has been asserted
//! exactly. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::collections::BTreeMap;
use std::time::Instant;

use germoid::continuity::{e_continuity_verdict, semigroup_verdict, ContinuityVerdict};
use germoid::groupoid::{
    direct_separation_check, germs_over, hausdorff_verdict, separation_aggregate,
    sweep_characters, GermRep,
};
use germoid::ktheory::{inclusion, k0_colimit_description, stage, Variant};
use germoid::l2::{
    degeneration_report, epsilon_inner, epsilon_module_product, gram_psd_check, phi_inner,
    EpsilonModuleVector,
};
use germoid::semigroup::partial_bijection::PartialBijection;
use germoid::semigroup::{compose, Code, Element, InverseSemigroup};
use germoid::spectrum::{
    characters, density_check, epsilon_action, CharCode, Character, EpsilonFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn chain() -> InverseSemigroup {
    InverseSemigroup::chain_with_symmetry()
}

fn i_n(n: u32) -> InverseSemigroup {
    let mut generators = Vec::new();
    if n >= 2 {
        let mut pairs: Vec<(u32, u32)> = vec![(1, 2), (2, 1)];
        pairs.extend((3..=n).map(|p| (p, p)));
        generators.push(PartialBijection::new(n, &pairs).unwrap());
    }
    if n >= 3 {
        let cycle: Vec<(u32, u32)> = (1..=n).map(|p| (p, p % n + 1)).collect();
        generators.push(PartialBijection::new(n, &cycle).unwrap());
    }
    let dom: Vec<u32> = (1..n).collect();
    generators.push(PartialBijection::partial_identity(n, &dom).unwrap());
    InverseSemigroup::from_partial_bijections(&generators, 200).unwrap()
}

fn symmetric_inverse_monoid_size(n: u64) -> u64 {
    let binom = |n: u64, k: u64| (0..k).fold(1, |r, i| r * (n - i) / (i + 1));
    let fact = |k: u64| (1..=k).product::<u64>().max(1);
    (0..=n).map(|k| binom(n, k).pow(2) * fact(k)).sum()
}

#[test]
fn acceptance_01_theorem_reproduction_on_the_symmetric_chain() {
    let start = Instant::now();
    let c = chain();
    let s = c.parse("S").unwrap();

    let verdict = e_continuity_verdict(&s, 20);
    let ContinuityVerdict::Discontinuous { witness } = &verdict else {
        panic!("expected a discontinuous verdict for S, got {verdict:?}");
    };
    assert_eq!(witness.code(), &CharCode::Principal(Code::One));

    let report = hausdorff_verdict(&c, 20, 50);
    assert_eq!(report.verdict, "not_hausdorff");
    let pair = &report.evidence["pair"];
    assert_eq!(pair[0]["g"], "S");
    assert_eq!(pair[0]["x"], serde_json::json!({"kind": "principal", "e": "1"}));
    assert_eq!(pair[1]["g"], "1");
    assert_eq!(pair[1]["x"], serde_json::json!({"kind": "principal", "e": "1"}));

    let top = Character::principal(&c.parse("1").unwrap()).unwrap();
    let a = GermRep::new(s.clone(), top.clone()).unwrap();
    let b = GermRep::new(c.parse("1").unwrap(), top).unwrap();
    let outcome = direct_separation_check(&a, &b, 20, 50).unwrap();
    assert!(outcome.is_not_separated(), "expected not separated, got {outcome:?}");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget is 5 s");
    println!(
        "[criterion 01] PASS: S discontinuous at the identity point, groupoid not Hausdorff, \
         pair not separated ({elapsed:?})"
    );
}

#[test]
fn acceptance_02_positive_families_agree_both_routes() {
    for (carrier, truncation) in [
        (InverseSemigroup::pure_chain(), 20u32),
        (InverseSemigroup::bicyclic(), 20),
        (InverseSemigroup::polycyclic(2, false).unwrap(), 4),
    ] {
        let sg = semigroup_verdict(&carrier, truncation);
        assert_eq!(sg.global, "continuous", "{carrier:?}");
        let hd = hausdorff_verdict(&carrier, truncation, 50);
        assert_eq!(hd.verdict, "hausdorff", "{carrier:?}");
        let chars = sweep_characters(&carrier, truncation);
        let agg = separation_aggregate(truncation, 50, &chars);
        assert_eq!(
            agg.not_separated, 0,
            "{carrier:?}: conclusive disagreement {agg:?}"
        );
        assert!(agg.agrees_with(true), "{carrier:?}: {agg:?}");
        println!(
            "[criterion 02] {carrier:?}: continuous + hausdorff, {} pairs all separated \
             ({} inconclusive)",
            agg.separated, agg.inconclusive
        );
    }
    println!("[criterion 02] PASS: zero disagreements across the positive families");
}

#[test]
fn acceptance_03_finite_closures_and_their_germ_counts() {
    let i2 = i_n(2);
    let i3 = i_n(3);
    assert_eq!(i2.size(), Some(7));
    assert_eq!(i3.size(), Some(34));
    assert_eq!(i2.size().unwrap() as u64, symmetric_inverse_monoid_size(2));
    assert_eq!(i3.size().unwrap() as u64, symmetric_inverse_monoid_size(3));

    for carrier in [&i2, &i3] {
        for code in carrier.elements(0) {
            let g = carrier.element(code).unwrap();
            assert!(
                e_continuity_verdict(&g, 0).is_continuous(),
                "{} not continuous",
                g.name()
            );
        }
        // brute-force germ oracle: partition each fiber by an exhaustive
        // equalizer search over the whole filter
        for f in carrier.idempotents(0) {
            let idems = carrier.idempotents(0);
            let filter: Vec<Code> = idems
                .iter()
                .filter(|e| carrier.leq(&f, e))
                .cloned()
                .collect();
            let eligible: Vec<Code> = carrier
                .elements(0)
                .into_iter()
                .filter(|g| {
                    let gsg = carrier.mul(&carrier.star(g), g);
                    carrier.leq(&f, &gsg)
                })
                .collect();
            let mut classes: Vec<Code> = Vec::new();
            for g in &eligible {
                let known = classes
                    .iter()
                    .any(|h| filter.iter().any(|e| carrier.mul(g, e) == carrier.mul(h, e)));
                if !known {
                    classes.push(g.clone());
                }
            }
            let x = Character::from_code(carrier, CharCode::Principal(f.clone()));
            assert_eq!(
                germs_over(&x, 0).len(),
                classes.len(),
                "fiber count mismatch at {}",
                carrier.name(&f)
            );
        }
    }
    println!(
        "[criterion 03] PASS: closure sizes 7 and 34 match the formula oracle; all elements \
         continuous; germ counts match the exhaustive oracle on every fiber"
    );
}

#[test]
fn acceptance_04_diagonal_inner_products() {
    // the diagonal entry is the indicator of the range idempotent, at every
    // character, for the finite closure and for every family; the word-pair
    // sweep stops at length 4 because its level-10 window is astronomical
    let mut checked = 0usize;
    for (carrier, truncation, element_level) in [
        (i_n(3), 10u32, 10u32),
        (chain(), 10, 10),
        (InverseSemigroup::pure_chain(), 10, 10),
        (InverseSemigroup::bicyclic(), 10, 10),
        (InverseSemigroup::polycyclic(2, false).unwrap(), 4, 4),
    ] {
        let chars = characters(&carrier, truncation);
        for code in carrier.elements(element_level) {
            let g = carrier.element(code).unwrap();
            let f = phi_inner(&g, &g, truncation).unwrap();
            let ggs = carrier.mul(g.code(), &carrier.star(g.code()));
            for x in &chars {
                assert_eq!(
                    f.eval(x),
                    x.evaluates_code(&ggs),
                    "{} at {}",
                    g.name(),
                    x.render()
                );
                checked += 1;
            }
        }
    }

    // the pairwise products of the pure chain attain the smaller projection
    let pure = InverseSemigroup::pure_chain();
    for n in 1..=10u32 {
        for m in 1..=10u32 {
            let g = pure.element(Code::Proj(n)).unwrap();
            let h = pure.element(Code::Proj(m)).unwrap();
            let f = phi_inner(&g, &h, 20).unwrap();
            // brute-force oracle over the enumerated join set
            let join: Vec<String> = f.join_set().iter().map(|e| e.name()).collect();
            let expected: Vec<String> = (1..=n.min(m)).map(|k| format!("e{k}")).collect();
            assert_eq!(join, expected);
            assert_eq!(f.maximum().unwrap().code(), &Code::Proj(n.min(m)));
            for x in characters(&pure, 20) {
                assert_eq!(f.eval(&x), x.evaluates_code(&Code::Proj(n.min(m))));
            }
        }
    }
    println!(
        "[criterion 04] PASS: {checked} diagonal evaluations match x(g g*); pure-chain pairs \
         attain the smaller projection"
    );
}

#[test]
fn acceptance_05_positivity_and_equivariance() {
    // 100 seeded random subsets of size <= 4 per carrier, exact minors at
    // every character
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (carrier, truncation, element_level) in [
        (i_n(3), 0u32, 0u32),
        (chain(), 8, 8),
        (InverseSemigroup::pure_chain(), 8, 8),
        (InverseSemigroup::bicyclic(), 5, 5),
        (InverseSemigroup::polycyclic(2, false).unwrap(), 3, 2),
    ] {
        let chars = characters(&carrier, truncation);
        let pool: Vec<Element> = carrier
            .elements(element_level)
            .into_iter()
            .map(|c| carrier.element(c).unwrap())
            .collect();
        for trial in 0..100 {
            let size = rng.gen_range(1..=4usize);
            let subset: Vec<Element> = (0..size)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let report = gram_psd_check(&subset, &chars, truncation).unwrap();
            assert!(
                report.passed,
                "{carrier:?} trial {trial}: {:?}",
                report.violations
            );
        }
    }

    // equivariance over full triple sweeps; the word-pair family is swept at
    // level 2 because its level-6 window is astronomically large
    for (carrier, level, inner) in [
        (chain(), 6u32, 6u32),
        (InverseSemigroup::pure_chain(), 6, 6),
        (InverseSemigroup::bicyclic(), 6, 6),
        (i_n(3), 0, 0),
        (InverseSemigroup::polycyclic(2, false).unwrap(), 2, 2),
    ] {
        let chars = characters(&carrier, (inner + 2).min(8));
        let window: Vec<Element> = carrier
            .elements(level)
            .into_iter()
            .map(|c| carrier.element(c).unwrap())
            .collect();
        let mut lhs_cache: BTreeMap<(Code, Code), germoid::continuity::SpectrumFunction> =
            BTreeMap::new();
        let mut inner_of = |a: &Element, b: &Element| {
            lhs_cache
                .entry((a.code().clone(), b.code().clone()))
                .or_insert_with(|| phi_inner(a, b, inner + 2).unwrap())
                .clone()
        };
        let mut triples = 0usize;
        for g in &window {
            for a in &window {
                for b in &window {
                    let lhs = inner_of(&compose(g, a).unwrap(), &compose(g, b).unwrap());
                    let rhs = inner_of(a, b);
                    for x in &chars {
                        let left = lhs.eval(x);
                        let right = match germoid::spectrum::act_character(x, g) {
                            Some(y) => rhs.eval(&y),
                            None => false,
                        };
                        assert_eq!(
                            left,
                            right,
                            "{carrier:?}: g={} a={} b={} at {}",
                            g.name(),
                            a.name(),
                            b.name(),
                            x.render()
                        );
                    }
                    triples += 1;
                }
            }
        }
        println!("[criterion 05] {carrier:?}: {triples} triples equivariant");
    }
    println!("[criterion 05] PASS: exact positivity on 500 seeded subsets and full equivariance sweeps");
}

#[test]
fn acceptance_06_module_degeneration_trace() {
    let c = chain();
    let report = degeneration_report(&c, 20, 50).unwrap();
    assert!(report.all_verified, "{:#?}", report.steps);
    assert!(report.degenerates);
    assert_eq!(report.norm_squared, "0");

    // the five instance equations, verbatim
    let s = c.parse("S").unwrap();
    let one = c.parse("1").unwrap();
    for n in 1..=20u32 {
        let en = c.element(Code::Proj(n)).unwrap();
        assert_eq!(
            epsilon_inner(&en, &en).unwrap(),
            EpsilonFunction::point_mass(&en).unwrap(),
            "diagonal mass at e{n}"
        );
        assert!(epsilon_module_product(&s, &en).unwrap().is_zero());
    }
    assert_eq!(
        epsilon_inner(&s, &s).unwrap(),
        EpsilonFunction::point_mass(&one).unwrap()
    );
    assert!(epsilon_inner(&s, &one).unwrap().is_zero());
    assert_eq!(
        epsilon_module_product(&s, &one).unwrap(),
        EpsilonModuleVector::delta(&s)
    );
    println!(
        "[criterion 06] PASS: forced collapse verified step by step, ||delta_1 - delta_S||^2 = 0, \
         five instance equations hold"
    );
}

#[test]
fn acceptance_07_stage_ranks_and_splitting_patterns() {
    for variant in [Variant::A, Variant::B] {
        for n in 0..=30u32 {
            let st = stage(variant, n);
            assert_eq!(st.rank as u32, n + 2, "{variant:?} level {n}");
            assert!(st.verified, "{variant:?} level {n} failed verification");
        }
    }
    let mut isolated = 0usize;
    for n in 0..30u32 {
        let a = inclusion(Variant::A, n);
        assert!(a.verified);
        let sums = a.row_sums();
        assert_eq!(
            sums.iter().filter(|&&s| s == 2).count(),
            1,
            "variant A level {n} must split exactly one row"
        );
        assert!(sums.iter().all(|&s| s == 1 || s == 2));
        // the odd sign projection is row 0 at every level and never splits
        assert_eq!(a.matrix[isolated], {
            let mut row = vec![0u32; (n + 3) as usize];
            row[0] = 1;
            row
        });
        isolated = 0;

        let b = inclusion(Variant::B, n);
        assert!(b.verified);
        assert!(b.row_sums().iter().all(|&s| s == 1), "variant B level {n}");
    }
    let ledger = k0_colimit_description(Variant::B, 30);
    assert!(ledger.perpetually_splitting_class.is_none());
    let ledger_a = k0_colimit_description(Variant::A, 30);
    assert_eq!(ledger_a.perpetually_splitting_class.as_deref(), Some("(1+S)/2"));
    println!(
        "[criterion 07] PASS: ranks n+2 through level 30 in both variants; one splitting row per \
         level in A with the odd projection isolated; none in B"
    );
}

#[test]
fn acceptance_08_range_projections_kill_the_identity_mass() {
    for arity in [2u8, 3] {
        let poly = InverseSemigroup::polycyclic(arity, false).unwrap();
        let one = poly.element(Code::Pair(Vec::new(), Vec::new())).unwrap();
        for letter in 1..=arity {
            let gen = poly.element(Code::Pair(vec![letter], Vec::new())).unwrap();
            let range = compose(&gen, &gen.star()).unwrap();
            let moved = epsilon_action(&range, &one).unwrap();
            assert!(moved.is_zero(), "arity {arity} letter {letter}");
        }
    }
    println!(
        "[criterion 08] PASS: every letter range annihilates the identity point mass for \
         alphabets of size 2 and 3"
    );
}

#[test]
fn acceptance_09_density_at_depth() {
    for carrier in [
        chain(),
        InverseSemigroup::pure_chain(),
        InverseSemigroup::bicyclic(),
        InverseSemigroup::polycyclic(2, false).unwrap(),
    ] {
        let report = density_check(&carrier, 50, 50);
        assert!(report.passed, "{carrier:?}: {:?}", report.violations);
        assert!(report.opens_checked > 0, "{carrier:?} checked nothing");
    }
    println!("[criterion 09] PASS: principal points meet every nonempty enumerated basis open at level 50");
}

#[test]
fn acceptance_10_command_surface_is_deterministic() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_germoid");
    let dir = tempfile::tempdir().unwrap();
    let finite = dir.path().join("i3.json");
    std::fs::write(
        &finite,
        r#"{"degree": 3, "generators": [{"pairs": [[1,2],[2,1],[3,3]]}, {"pairs": [[1,2],[2,3],[3,1]]}, {"pairs": [[1,1],[2,2]]}], "cap": 100}"#,
    )
    .unwrap();
    let finite_arg = finite.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["analyze", "--family", "chain_with_symmetry", "--truncation", "10", "--seed", "7"],
        vec!["analyze", "--input", finite_arg, "--seed", "7"],
        vec!["germs", "--family", "chain_with_symmetry", "--character", "1", "--truncation", "8"],
        vec!["gram", "--family", "pure_chain", "--elements", "1,e1,e2", "--truncation", "8", "--seed", "7"],
        vec!["k0", "--variant", "A", "--levels", "10"],
        vec!["k0", "--variant", "B", "--levels", "10"],
        vec!["degeneration", "--family", "chain_with_symmetry", "--truncation", "10"],
        vec!["check", "--family", "bicyclic", "--truncation", "5", "--seed", "7"],
        vec!["analyze", "--family", "polycyclic", "--arity", "2", "--truncation", "3", "--format", "text"],
    ];
    for args in &invocations {
        let runs: Vec<_> = (0..2)
            .map(|_| {
                let out = Command::new(bin).args(args).output().unwrap();
                assert!(
                    out.status.success(),
                    "{:?} exited {:?}: {}",
                    args,
                    out.status.code(),
                    String::from_utf8_lossy(&out.stderr)
                );
                out.stdout
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{args:?} output differs between runs");
        assert!(!runs[0].is_empty());
    }
    println!(
        "[criterion 10] PASS: {} command invocations byte-identical across repeated runs",
        invocations.len()
    );
}

// exit-code contract exercised alongside determinism
#[test]
fn acceptance_10b_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_germoid");

    // 0: definite verdicts
    let ok = Command::new(bin)
        .args(["analyze", "--family", "bicyclic", "--truncation", "8"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    // 1: something stayed unknown (nothing enumerated below the symmetry, so
    // the jump witness cannot be verified)
    let unknown = Command::new(bin)
        .args(["analyze", "--family", "chain_with_symmetry", "--truncation", "0"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(1));

    // 2: malformed input
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let broken = Command::new(bin)
        .args(["analyze", "--input", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(broken.status.code(), Some(2));

    // 2: unresolvable names
    let unknown_char = Command::new(bin)
        .args(["germs", "--family", "pure_chain", "--character", "zork"])
        .output()
        .unwrap();
    assert_eq!(unknown_char.status.code(), Some(2));
    let unknown_el = Command::new(bin)
        .args(["gram", "--family", "pure_chain", "--elements", "nope"])
        .output()
        .unwrap();
    assert_eq!(unknown_el.status.code(), Some(2));
    println!("[criterion 10] exit codes 0, 1, 2 behave as specified");
}
