//! Finite carriers from partial bijections: closure sizes, idempotents,
//! characters, and continuity verdicts. The closure of the rank-capped
//! injections on n points has size sum over k of C(n,k)^2 k!.
//!
//! Run with `cargo run --example finite_closures`.

use germoid::continuity::semigroup_verdict;
use germoid::semigroup::partial_bijection::PartialBijection;
use germoid::spectrum::characters_finite;
use germoid::InverseSemigroup;

fn monoid_size(n: u64) -> u64 {
    let binom = |n: u64, k: u64| (0..k).fold(1, |r, i| r * (n - i) / (i + 1));
    let fact = |k: u64| (1..=k).product::<u64>().max(1);
    (0..=n).map(|k| binom(n, k).pow(2) * fact(k)).sum()
}

fn main() {
    // two points: the transposition and the partial identity on {1}
    let swap2 = PartialBijection::new(2, &[(1, 2), (2, 1)]).unwrap();
    let on_one = PartialBijection::partial_identity(2, &[1]).unwrap();
    let i2 = InverseSemigroup::from_partial_bijections(&[swap2, on_one], 100).unwrap();
    println!(
        "two-point closure: {} elements (formula says {})",
        i2.size().unwrap(),
        monoid_size(2)
    );

    // three points: the standard generators
    let swap = PartialBijection::new(3, &[(1, 2), (2, 1), (3, 3)]).unwrap();
    let cycle = PartialBijection::new(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
    let e12 = PartialBijection::partial_identity(3, &[1, 2]).unwrap();
    let i3 = InverseSemigroup::from_partial_bijections(&[swap, cycle, e12], 100).unwrap();
    println!(
        "three-point closure: {} elements (formula says {})",
        i3.size().unwrap(),
        monoid_size(3)
    );

    let chars = characters_finite(&i3);
    println!("characters (one per idempotent): {}", chars.len());
    for x in chars.iter().take(4) {
        println!("  {}", x.render());
    }

    let verdict = semigroup_verdict(&i3, 0);
    println!("global continuity verdict: {}", verdict.global);
    let continuous = verdict
        .elements
        .iter()
        .filter(|e| e["verdict"] == "continuous")
        .count();
    println!(
        "continuous elements: {} of {}",
        continuous,
        verdict.elements.len()
    );

    // a description of one element, to show the naming scheme
    let g = i3.parse("g7").unwrap();
    println!(
        "element {} is the partial bijection {:?}",
        g.name(),
        i3.describe_finite(g.code()).unwrap()
    );
}
