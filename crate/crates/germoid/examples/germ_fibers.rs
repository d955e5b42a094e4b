//! Germ classes over spectrum points and their composition tables. Over the
//! identity point of the symmetric chain the fiber is a two-element group
//! that the topology cannot pull apart from the unit; over the diagonal
//! limit of the pair family the fiber is the group of integer offsets.
//!
//! Run with `cargo run --example germ_fibers`.

use germoid::groupoid::{compose_germs, fiber_with_table, germs_over, source_range};
use germoid::spectrum::{CharCode, Character};
use germoid::InverseSemigroup;

fn main() {
    let chain = InverseSemigroup::chain_with_symmetry();

    // over a chain point everything collapses to the unit germ
    let x1 = Character::principal(&chain.parse("e1").unwrap()).unwrap();
    println!(
        "fiber over {}: {} class(es)",
        x1.render(),
        germs_over(&x1, 8).len()
    );

    // over the identity point the symmetry survives
    let top = Character::principal(&chain.parse("1").unwrap()).unwrap();
    let (germs, table) = fiber_with_table(&top, 8);
    println!("fiber over {}: {} classes", top.render(), germs.len());
    for (i, g) in germs.iter().enumerate() {
        let (src, rng) = source_range(g.rep());
        println!(
            "  class {i}: germ of {} (source {}, range {})",
            g.rep().element().name(),
            src.render(),
            rng.render()
        );
    }
    println!("  composition table: {table:?}");
    let s = &germs[1];
    let ss = compose_germs(s, s).unwrap();
    println!(
        "  the symmetry germ squares to the unit: {}",
        (ss == germs[0])
    );

    // the diagonal limit fiber of the pair family carries integer offsets
    let bicyclic = InverseSemigroup::bicyclic();
    let inf = Character::from_code(&bicyclic, CharCode::BicyclicInfinity);
    let fiber = germs_over(&inf, 4);
    println!(
        "fiber over {}: {} classes (offsets -4..=4)",
        inf.render(),
        fiber.len()
    );
    // composition adds offsets: pick the +1 and -1 germs and compose
    let up = fiber
        .iter()
        .find(|g| g.rep().element().name() == "(1,0)")
        .unwrap();
    let down = fiber
        .iter()
        .find(|g| g.rep().element().name() == "(0,1)")
        .unwrap();
    let unit = compose_germs(up, down).unwrap();
    println!(
        "  (1,0)-germ composed with (0,1)-germ is the unit: {}",
        unit.rep().element().name() == "(0,0)"
    );
}
