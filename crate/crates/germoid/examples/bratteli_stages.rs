//! Stage structure of the two filtered algebras over the symmetric chain:
//! ranks grow by one per level in both, but the splitting patterns differ.
//! In the first algebra the top projection keeps splitting forever while the
//! odd sign projection never does; in the crossed point-mass algebra nothing
//! ever splits, so its limit is free on the stage generators.
//!
//! Run with `cargo run --example bratteli_stages`.

use germoid::ktheory::{inclusion, k0_colimit_description, stage, Variant};

fn main() {
    for variant in [Variant::A, Variant::B] {
        println!("variant {variant:?}:");
        for n in 0..=3 {
            let st = stage(variant, n);
            println!(
                "  level {n}: rank {} = n + 2, projections {:?} (verified {})",
                st.rank, st.names, st.verified
            );
        }
        let inc = inclusion(variant, 2);
        println!("  inclusion 2 -> 3 (rows into columns): {:?}", inc.matrix);
        println!("  splitting rows: {:?}", inc.splitting_rows());
        println!();
    }

    let a = k0_colimit_description(Variant::A, 12);
    println!(
        "variant A over 12 inclusions: {} stable generators, perpetually splitting class {:?}",
        a.stable_generators.len(),
        a.perpetually_splitting_class
    );
    let stable: Vec<&str> = a
        .stable_generators
        .iter()
        .take(5)
        .map(|g| g.name.as_str())
        .collect();
    println!("  first stable classes: {stable:?}");

    let b = k0_colimit_description(Variant::B, 12);
    println!(
        "variant B over 12 inclusions: {} stable generators, perpetually splitting class {:?}",
        b.stable_generators.len(),
        b.perpetually_splitting_class
    );
    println!("  every stage generator keeps a slot of its own; the limit is free on them");
}
