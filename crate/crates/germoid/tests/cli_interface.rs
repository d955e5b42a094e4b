//! Wire-format contract of the command surface: the JSON shapes named in the
//! interface documentation, the carrier input formats, and end-to-end runs
//! against the installed binary.

use std::process::Command;

fn run(args: &[&str]) -> (serde_json::Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_germoid"))
        .args(args)
        .output()
        .unwrap();
    let code = out.status.code().unwrap();
    let value = serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (value, code)
}

#[test]
fn analyze_wire_shape_for_the_symmetric_chain() {
    let (report, code) = run(&[
        "analyze",
        "--family",
        "chain_with_symmetry",
        "--truncation",
        "12",
    ]);
    assert_eq!(code, 0);
    // the per-element verdict object is flat, with the witness nested
    let s_entry = report["elements"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["element"] == "S")
        .unwrap();
    assert_eq!(
        *s_entry,
        serde_json::json!({
            "element": "S",
            "verdict": "discontinuous",
            "witness": {"kind": "principal", "e": "1"},
        })
    );
    // germ evidence uses the element-name plus character-object shape
    assert_eq!(
        report["hausdorff"]["evidence"]["pair"][0],
        serde_json::json!({"g": "S", "x": {"kind": "principal", "e": "1"}})
    );
    assert_eq!(report["global"], "discontinuous");
    assert_eq!(report["e_continuous"], false);
}

#[test]
fn analyze_accepts_both_input_file_formats() {
    let dir = tempfile::tempdir().unwrap();

    let finite = dir.path().join("i3.json");
    std::fs::write(
        &finite,
        r#"{"degree": 3, "generators": [{"pairs": [[1,2],[2,1],[3,3]]}, {"pairs": [[1,2],[2,3],[3,1]]}, {"pairs": [[1,1],[2,2]]}], "cap": 100}"#,
    )
    .unwrap();
    let (report, code) = run(&["analyze", "--input", finite.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["config"]["carrier"]["kind"], "finite");
    assert_eq!(report["config"]["carrier"]["size"], 34);
    assert_eq!(report["global"], "continuous");
    assert_eq!(report["hausdorff"]["verdict"], "hausdorff");
    assert_eq!(report["elements"].as_array().unwrap().len(), 34);

    let family = dir.path().join("family.json");
    std::fs::write(
        &family,
        r#"{"family": "bicyclic", "truncation": 9}"#,
    )
    .unwrap();
    let (report, code) = run(&["analyze", "--input", family.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["config"]["truncation"], 9);
    assert_eq!(report["global"], "continuous");
}

#[test]
fn germ_fibers_through_the_surface() {
    let (report, code) = run(&[
        "germs",
        "--family",
        "chain_with_symmetry",
        "--character",
        "principal:1",
        "--truncation",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["class_count"], 2);
    // the two-class fiber composes like a two-element group
    assert_eq!(
        report["composition"],
        serde_json::json!([[0, 1], [1, 0]])
    );

    let (report, code) = run(&[
        "germs",
        "--family",
        "bicyclic",
        "--character",
        "limit:inf",
        "--truncation",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["class_count"], 7); // offsets -3..=3

    // a fiber over an eventually periodic infinite word
    let (report, code) = run(&[
        "germs",
        "--family",
        "polycyclic",
        "--arity",
        "2",
        "--character",
        "limit:w:1(21)",
        "--truncation",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["base"]["kind"], "limit");
    assert!(report["class_count"].as_u64().unwrap() >= 2);
}

#[test]
fn gram_surface_reports_attainment_and_positivity() {
    let (report, code) = run(&[
        "gram",
        "--family",
        "chain_with_symmetry",
        "--elements",
        "S,1",
        "--truncation",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["psd"]["passed"], true);
    let attainments = report["attainments"].as_array().unwrap();
    let cross = attainments
        .iter()
        .find(|a| a["g"] == "S" && a["h"] == "1")
        .unwrap();
    assert_eq!(cross["attainment"]["status"], "discontinuous");
    assert_eq!(cross["attainment"]["see"], "degeneration");
    assert_eq!(
        cross["attainment"]["witness"],
        serde_json::json!({"kind": "principal", "e": "1"})
    );
}

#[test]
fn k0_surface_matches_the_stage_story() {
    let (a, code) = run(&["k0", "--variant", "A", "--levels", "6"]);
    assert_eq!(code, 0);
    let ranks: Vec<u64> = a["stages"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![2, 3, 4, 5, 6, 7, 8]);
    for inc in a["inclusions"].as_array().unwrap() {
        assert_eq!(inc["splitting_rows"].as_array().unwrap().len(), 1);
    }
    assert_eq!(a["perpetually_splitting_class"], "(1+S)/2");

    let (b, code) = run(&["k0", "--variant", "B", "--levels", "6"]);
    assert_eq!(code, 0);
    for inc in b["inclusions"].as_array().unwrap() {
        assert_eq!(inc["splitting_rows"].as_array().unwrap().len(), 0);
    }
    assert_eq!(b["perpetually_splitting_class"], serde_json::Value::Null);

    let (tiny, code) = run(&["k0", "--variant", "A", "--levels", "1"]);
    assert_eq!(code, 0);
    assert_eq!(tiny["stages"].as_array().unwrap().len(), 2);
    assert_eq!(tiny["inclusions"].as_array().unwrap().len(), 1);
}

#[test]
fn degeneration_and_check_round_trip() {
    let (d, code) = run(&["degeneration", "--family", "chain_with_symmetry"]);
    assert_eq!(code, 0);
    assert_eq!(d["degenerates"], true);
    assert_eq!(d["norm_squared"], "0");
    assert_eq!(d["steps"].as_array().unwrap().len(), 6);

    // the wrong family is an input error
    let out = Command::new(env!("CARGO_BIN_EXE_germoid"))
        .args(["degeneration", "--family", "bicyclic"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let (c, code) = run(&["check", "--family", "pure_chain", "--truncation", "6"]);
    assert_eq!(code, 0);
    assert_eq!(c["all_passed"], true);
}

#[test]
fn exit_codes_per_command() {
    let bin = env!("CARGO_BIN_EXE_germoid");
    let code_of = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    // 0 everywhere on definite inputs
    assert_eq!(code_of(&["analyze", "--family", "pure_chain"]), 0);
    assert_eq!(code_of(&["germs", "--family", "pure_chain", "--character", "e1"]), 0);
    assert_eq!(code_of(&["gram", "--family", "pure_chain", "--elements", "e1"]), 0);
    assert_eq!(code_of(&["k0", "--levels", "3"]), 0);
    assert_eq!(code_of(&["degeneration", "--family", "chain_with_symmetry"]), 0);
    assert_eq!(code_of(&["check", "--family", "pure_chain", "--truncation", "6"]), 0);

    // 1 when a verdict stays unknown: a zero basis budget starves the
    // intersection hunt behind the cross-check
    assert_eq!(
        code_of(&[
            "check",
            "--family",
            "chain_with_symmetry",
            "--truncation",
            "6",
            "--basis-budget",
            "0"
        ]),
        1
    );

    // 2 on unresolvable inputs, per command
    assert_eq!(code_of(&["analyze", "--family", "zorp"]), 2);
    assert_eq!(code_of(&["germs", "--family", "pure_chain", "--character", "??"]), 2);
    assert_eq!(code_of(&["gram", "--family", "pure_chain", "--elements", "??"]), 2);
    assert_eq!(code_of(&["k0", "--variant", "C"]), 2);
    assert_eq!(code_of(&["degeneration", "--family", "bicyclic"]), 2);
    // clap itself rejects malformed flags with exit 2
    assert_eq!(code_of(&["analyze", "--no-such-flag"]), 2);
}

#[test]
fn text_format_is_a_stable_rendering() {
    let out1 = Command::new(env!("CARGO_BIN_EXE_germoid"))
        .args(["germs", "--family", "pure_chain", "--character", "e2", "--format", "text"])
        .output()
        .unwrap();
    let out2 = Command::new(env!("CARGO_BIN_EXE_germoid"))
        .args(["germs", "--family", "pure_chain", "--character", "e2", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out1.stdout, out2.stdout);
    let text = String::from_utf8(out1.stdout).unwrap();
    assert!(text.contains("class_count: 1"));
    assert!(!text.trim().is_empty());
}
