//! The forced collapse of any compatible point-mass module over the
//! symmetric chain, step by machine-checked step, plus the discretized
//! module whose one-point inner products stay non-degenerate.
//!
//! Run with `cargo run --example module_degeneration`.

use germoid::l2::{degeneration_report, epsilon_inner, epsilon_module_product, EpsilonModuleVector};
use germoid::InverseSemigroup;

fn main() {
    let chain = InverseSemigroup::chain_with_symmetry();

    let report = degeneration_report(&chain, 12, 50).unwrap();
    println!("forced-collapse trace:");
    for step in &report.steps {
        println!(
            "  [{}] {}: {}",
            if step.verified { "ok" } else { "FAIL" },
            step.name,
            step.statement
        );
    }
    println!(
        "conclusion: ||delta_1 - delta_S||^2 = {}, degenerates = {}",
        report.norm_squared, report.degenerates
    );
    println!();

    // the discretized module sidesteps the collapse: inner products are
    // one-point masses and the module products are sharp
    println!("point-mass module instances:");
    let s = chain.parse("S").unwrap();
    let one = chain.parse("1").unwrap();
    let e3 = chain.parse("e3").unwrap();
    println!(
        "  <delta_e3, delta_e3> = {}",
        epsilon_inner(&e3, &e3).unwrap().render()
    );
    println!(
        "  <delta_S, delta_S> = {}",
        epsilon_inner(&s, &s).unwrap().render()
    );
    println!(
        "  <delta_S, delta_1> = {}",
        epsilon_inner(&s, &one).unwrap().render()
    );
    println!(
        "  delta_S . eps[1] = {}",
        epsilon_module_product(&s, &one).unwrap().render()
    );
    println!(
        "  delta_S . eps[e3] = {}",
        epsilon_module_product(&s, &e3).unwrap().render()
    );
    let d = EpsilonModuleVector::delta(&chain.parse("e2").unwrap());
    println!(
        "  S(delta_e2) = {}",
        germoid::l2::epsilon_act(&s, &d).unwrap().render()
    );
}
