//! The direct hunt for separating opens, pair by pair: a dominating
//! continuity certificate yields disjoint saturated opens; the jump point of
//! the symmetric chain defeats every pair of basis neighborhoods.
//!
//! Run with `cargo run --example separation_search`.

use germoid::groupoid::{direct_separation_check, GermRep, SeparationOutcome};
use germoid::spectrum::Character;
use germoid::InverseSemigroup;

fn main() {
    let chain = InverseSemigroup::chain_with_symmetry();
    let top = Character::principal(&chain.parse("1").unwrap()).unwrap();
    let a = GermRep::new(chain.parse("S").unwrap(), top.clone()).unwrap();
    let b = GermRep::new(chain.parse("1").unwrap(), top).unwrap();
    println!("symmetric chain, germs of S and 1 over the identity point:");
    match direct_separation_check(&a, &b, 12, 50).unwrap() {
        SeparationOutcome::NotSeparated {
            pairs_checked,
            witnesses,
        } => {
            println!("  not separated; {pairs_checked} neighborhood pairs all intersect");
            if let Some((u, v, germ)) = witnesses.first() {
                println!("  e.g. {u} and {v} share the germ {germ}");
            }
        }
        other => println!("  unexpected outcome {other:?}"),
    }

    // distinct unit germs over different chain points split along carriers
    let pure = InverseSemigroup::pure_chain();
    let a = GermRep::new(
        pure.parse("e1").unwrap(),
        Character::principal(&pure.parse("e1").unwrap()).unwrap(),
    )
    .unwrap();
    let b = GermRep::new(
        pure.parse("e2").unwrap(),
        Character::principal(&pure.parse("e2").unwrap()).unwrap(),
    )
    .unwrap();
    println!("pure chain, unit germs over different points:");
    match direct_separation_check(&a, &b, 8, 20).unwrap() {
        SeparationOutcome::Separated { complement_of, .. } => {
            let names: Vec<String> = complement_of.iter().map(|e| e.name()).collect();
            println!("  separated; the bases disagree on {names:?}");
        }
        other => println!("  unexpected outcome {other:?}"),
    }

    // same-base inequivalent germs in a continuous family split through the
    // complement of the certified carrier
    let bicyclic = InverseSemigroup::bicyclic();
    let x = Character::principal(&bicyclic.parse("(2,2)").unwrap()).unwrap();
    let a = GermRep::new(bicyclic.parse("(3,2)").unwrap(), x.clone()).unwrap();
    let b = GermRep::new(bicyclic.parse("(2,2)").unwrap(), x).unwrap();
    println!("pair family, shift germ against the unit over one point:");
    match direct_separation_check(&a, &b, 8, 20).unwrap() {
        SeparationOutcome::Separated {
            complement_of,
            checked_characters,
        } => {
            let names: Vec<String> = complement_of.iter().map(|e| e.name()).collect();
            println!(
                "  separated by removing the carriers of {names:?}; {checked_characters} points checked"
            );
        }
        other => println!("  unexpected outcome {other:?}"),
    }
}
