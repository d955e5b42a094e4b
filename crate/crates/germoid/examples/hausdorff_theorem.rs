//! The headline cross-validation: a carrier's germ groupoid is Hausdorff
//! exactly when every lower-set supremum is continuous. The symmetric chain
//! fails both ways at the same spot; the other families pass both ways.
//!
//! Run with `cargo run --example hausdorff_theorem`.

use germoid::groupoid::{hausdorff_verdict, separation_aggregate, sweep_characters};
use germoid::InverseSemigroup;

fn main() {
    let carriers = [
        (InverseSemigroup::chain_with_symmetry(), 12u32),
        (InverseSemigroup::pure_chain(), 12),
        (InverseSemigroup::bicyclic(), 8),
        (InverseSemigroup::polycyclic(2, false).unwrap(), 3),
    ];
    for (carrier, truncation) in carriers {
        let report = hausdorff_verdict(&carrier, truncation, 50);
        println!("{carrier:?}");
        println!("  continuity: {}", report.continuity_global);
        println!("  theorem route: {}", report.verdict);
        if report.verdict == "not_hausdorff" {
            println!(
                "  non-separable pair: {} and {} over {}",
                report.evidence["pair"][0]["g"],
                report.evidence["pair"][1]["g"],
                report.evidence["pair"][0]["x"]["e"],
            );
            println!(
                "  direct check on the pair: {}",
                report.evidence["separation"]["outcome"]
            );
        }
        let chars = sweep_characters(&carrier, truncation);
        let agg = separation_aggregate(truncation, 50, &chars);
        println!(
            "  direct route over {} fibers: {} pairs, {} separated, {} not separated, {} inconclusive",
            chars.len(),
            agg.pairs_total,
            agg.separated,
            agg.not_separated,
            agg.inconclusive
        );
        let agree = agg.agrees_with(report.verdict == "hausdorff");
        println!("  routes agree: {agree}");
        println!();
    }
}
