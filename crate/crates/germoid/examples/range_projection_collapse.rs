//! In the word-pair family the range projections of the letter generators
//! annihilate the point mass at the identity idempotent: the identity point
//! is isolated from every letter range, so the discretized coefficient
//! algebra collapses under the crossed relations.
//!
//! Run with `cargo run --example range_projection_collapse`.

use germoid::continuity::semigroup_verdict;
use germoid::semigroup::{compose, Code};
use germoid::spectrum::epsilon_action;
use germoid::InverseSemigroup;

fn main() {
    for arity in [2u8, 3] {
        let poly = InverseSemigroup::polycyclic(arity, false).unwrap();
        let one = poly.element(Code::Pair(Vec::new(), Vec::new())).unwrap();
        println!("word-pair family on {arity} letters:");
        for letter in 1..=arity {
            let gen = poly.element(Code::Pair(vec![letter], Vec::new())).unwrap();
            let range = compose(&gen, &gen.star()).unwrap();
            let moved = epsilon_action(&range, &one).unwrap();
            println!(
                "  {}(eps[{}]) = {}",
                range.name(),
                one.name(),
                moved.render()
            );
            assert!(moved.is_zero());
        }
        // the identity idempotent is not below any letter range, which is
        // the whole reason the action kills the point mass
        for letter in 1..=arity {
            let range = Code::Pair(vec![letter], vec![letter]);
            assert!(!poly.leq(one.code(), &range));
        }
        println!("  (the identity sits below no letter range)");
    }

    // and the family is continuous throughout, in contrast with the chain
    let poly = InverseSemigroup::polycyclic(2, false).unwrap();
    let verdict = semigroup_verdict(&poly, 3);
    println!(
        "continuity of the two-letter family at level 3: {}",
        verdict.global
    );
}
