//! Lower idempotent sets and their supremum functions, with certificates and
//! witnesses. The symmetry of the chain family is the canonical failure: its
//! lower set climbs the whole projection chain and the supremum jumps at the
//! identity point.
//!
//! Run with `cargo run --example continuity_verdicts`.

use germoid::continuity::{e_continuity_verdict, lower_idempotents, sup_indicator, ContinuityVerdict};
use germoid::semigroup::Code;
use germoid::spectrum::characters;
use germoid::InverseSemigroup;

fn show(carrier: &germoid::InverseSemigroup, name: &str, truncation: u32) {
    let g = carrier.parse(name).unwrap();
    let lower = lower_idempotents(&g, truncation);
    let names: Vec<String> = lower.iter().map(|e| e.name()).collect();
    println!("  lower set of {name} at level {truncation}: {names:?}");
    match e_continuity_verdict(&g, truncation) {
        ContinuityVerdict::Continuous { certificate } => {
            let cert: Vec<String> = certificate.iter().map(|e| e.name()).collect();
            println!("    continuous, dominated by {cert:?}");
        }
        ContinuityVerdict::Discontinuous { witness } => {
            println!("    discontinuous, jump at {}", witness.render());
        }
        ContinuityVerdict::Unknown { bound } => {
            println!("    unknown at bound {bound}");
        }
    }
}

fn main() {
    let chain = InverseSemigroup::chain_with_symmetry();
    println!("chain with symmetry:");
    show(&chain, "S", 8);
    show(&chain, "e3", 8);
    show(&chain, "1", 8);

    // the supremum below the symmetry evaluates to one on every chain point
    // and to zero at the identity point: a jump, since the chain points
    // accumulate at the identity point
    let s = chain.parse("S").unwrap();
    let f = sup_indicator(&s, 8);
    println!("  values of the supremum below S:");
    for x in characters(&chain, 8) {
        println!("    {} -> {}", x.render(), f.eval(&x) as u8);
    }

    let bicyclic = InverseSemigroup::bicyclic();
    println!("pair-of-naturals family:");
    show(&bicyclic, "(1,0)", 10);
    show(&bicyclic, "(2,2)", 10);

    let poly = InverseSemigroup::polycyclic(2, false).unwrap();
    println!("word-pair family:");
    show(&poly, "1|2", 4);
    show(&poly, "12|12", 4);
    show(&poly, "0", 4);

    // every element of the pure chain has a top in its lower set
    let pure = InverseSemigroup::pure_chain();
    println!("pure chain:");
    for code in pure.elements(4) {
        let g = pure.element(code.clone()).unwrap();
        let v = e_continuity_verdict(&g, 8);
        assert!(v.is_continuous());
        if code == Code::One {
            show(&pure, "1", 8);
        }
    }
    println!("  every element continuous");
}
