//! The character spectrum of the idempotent semilattice: principal points,
//! family limit points, the action on points, and the density sweep that
//! confirms the principal points meet every nonempty basis set.
//!
//! Run with `cargo run --example spectrum_density`.

use germoid::spectrum::{
    act_character, characters, density_check, limit_characters, Character,
};
use germoid::InverseSemigroup;

fn main() {
    let chain = InverseSemigroup::chain_with_symmetry();
    let chars = characters(&chain, 6);
    println!("chain spectrum at level 6 ({} points):", chars.len());
    for x in &chars {
        println!("  {}", x.render());
    }
    println!(
        "limit points: {:?}",
        limit_characters(&chain, 6)
            .iter()
            .map(|x| x.render())
            .collect::<Vec<_>>()
    );

    // the action moves principal points by conjugation
    let bicyclic = InverseSemigroup::bicyclic();
    let x = Character::principal(&bicyclic.parse("(1,1)").unwrap()).unwrap();
    let g = bicyclic.parse("(0,1)").unwrap();
    println!(
        "acting on {} by {} gives {}",
        x.render(),
        g.name(),
        act_character(&x, &g).unwrap().render()
    );
    let gone = bicyclic.parse("(2,0)").unwrap();
    println!(
        "acting on {} by {} gives {:?} (the translate vanishes)",
        x.render(),
        gone.name(),
        act_character(&x, &gone).map(|y| y.render())
    );

    // density: every nonempty enumerated basis set contains a principal point
    for carrier in [
        InverseSemigroup::chain_with_symmetry(),
        InverseSemigroup::pure_chain(),
        InverseSemigroup::bicyclic(),
        InverseSemigroup::polycyclic(2, false).unwrap(),
    ] {
        let report = density_check(&carrier, 12, 50);
        println!(
            "density on {carrier:?}: {} opens checked, {} skipped empty, passed = {}",
            report.opens_checked, report.skipped_empty, report.passed
        );
    }
}
