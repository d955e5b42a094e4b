//! The spectrum-valued inner products of the indicator vectors: join sets,
//! attainment, per-character Gram matrices, exact positivity, equivariance,
//! norms, and the seeded independence probe.
//!
//! Run with `cargo run --example gram_matrices`.

use germoid::continuity::ContinuityVerdict;
use germoid::exact::{rat_int, CRat};
use germoid::l2::{
    equivariance_check, gram, gram_psd_check, linear_independence_probe, norm_estimate,
    phi_inner, ModuleVector,
};
use germoid::spectrum::characters;
use germoid::InverseSemigroup;

fn main() {
    let pure = InverseSemigroup::pure_chain();
    let chars = characters(&pure, 8);

    // a pair of projections meets at the lower one
    let e2 = pure.parse("e2").unwrap();
    let e5 = pure.parse("e5").unwrap();
    let f = phi_inner(&e2, &e5, 12).unwrap();
    println!(
        "<phi_e2, phi_e5>: join of {:?}, maximum {}",
        f.join_set().iter().map(|e| e.name()).collect::<Vec<_>>(),
        f.maximum().unwrap().name()
    );

    let elements = vec![pure.parse("1").unwrap(), e2.clone(), e5.clone()];
    let data = gram(&elements, &chars, 12).unwrap();
    println!("gram matrices over the first three characters:");
    for (x, m) in data.characters.iter().zip(&data.matrices).take(3) {
        println!("  at {}: {m:?}", x.render());
    }
    let psd = gram_psd_check(&elements, &chars, 12).unwrap();
    println!(
        "positivity by exact principal minors: {} ({} matrices)",
        psd.passed, psd.matrices_checked
    );

    let probe = linear_independence_probe(&elements, 6, &chars, 12, 17).unwrap();
    println!("independence probe (seeded): all trials pass = {}", probe.all_pass);

    // the translation action respects the inner products pointwise
    let chain = InverseSemigroup::chain_with_symmetry();
    let chars = characters(&chain, 8);
    let s = chain.parse("S").unwrap();
    let r = equivariance_check(
        &s,
        &chain.parse("e1").unwrap(),
        &chain.parse("e2").unwrap(),
        &chars,
        8,
    )
    .unwrap();
    println!(
        "equivariance of the symmetry on (e1, e2): {} over {} characters",
        r.passed, r.checked
    );

    // norms: exact suprema of the quadratic form over the spectrum
    let one = ModuleVector::basis(&pure.parse("1").unwrap());
    let e1 = ModuleVector::basis(&pure.parse("e1").unwrap());
    let diff = one.add(&e1.scale(&CRat::from_rat(rat_int(-1)))).unwrap();
    println!(
        "||phi_1 - phi_e1||^2 on the pure chain = {}",
        norm_estimate(&diff, 10).unwrap()
    );

    // the symmetric chain's cross entry has no dominating certificate, and
    // the norm machinery refuses the vector instead of guessing
    let f = phi_inner(&s, &chain.parse("1").unwrap(), 10).unwrap();
    if let ContinuityVerdict::Discontinuous { witness } = f.attainment() {
        println!(
            "<phi_S, phi_1> is a join up the whole chain; jump at {}",
            witness.render()
        );
    }
    let sv = ModuleVector::basis(&s);
    let ov = ModuleVector::basis(&chain.parse("1").unwrap());
    let bad = ov.add(&sv.scale(&CRat::from_rat(rat_int(-1)))).unwrap();
    match norm_estimate(&bad, 10) {
        Err(e) => println!("norm of phi_1 - phi_S refused: {e}"),
        Ok(v) => println!("unexpected norm {v}"),
    }
}
