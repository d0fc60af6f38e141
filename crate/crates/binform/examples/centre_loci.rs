//! Centres of involution: the locus of quadratics Q for which σ_{Q,z} fixes
//! a given form, cut out by explicit polynomial generators in (q₀,q₁,q₂),
//! together with the covariants that control it.
//!
//! Run with: cargo run --example centre_loci

use std::collections::BTreeMap;

use binform::form::BinaryForm;
use binform::involution::z_from_sign;
use binform::loci::{
    beta_covariant, centre_conditions, embed_form, lambda_covariant, q_universe,
    quartic_centre_discriminant, sextic_cubic_curve,
};
use binform::ring::{format_rational, rat, rat_int, Rational};

fn form(order: usize, raw: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::from_raw(order, raw.iter().map(|&v| rat_int(v)).collect()).unwrap()
}

fn main() {
    // Centre conditions for a quartic under z("++-++") = (−12, 24/7, 3/5).
    let f = form(4, &[1, 0, 1, 1, 0]); // x1·(x1³ + x1x2² + x2³)
    let z = z_from_sign(&"++-++".parse().unwrap()).unwrap();
    let system = centre_conditions(&z, &f).unwrap();
    println!("F = {f}");
    println!("generators of the centre locus (coefficients of the residual):");
    for g in system.generators() {
        println!("  {g}");
    }

    // F has the squared factor candidate Q = x1² (i.e. (q0,q1,q2)=(1,0,0)):
    // every generator vanishes there.
    let at: BTreeMap<String, Rational> = [
        ("q0".to_string(), rat(1, 1)),
        ("q1".to_string(), rat(0, 1)),
        ("q2".to_string(), rat(0, 1)),
    ]
    .into_iter()
    .collect();
    assert!(system
        .generators()
        .iter()
        .all(|g| g.substitute(&at).unwrap() == rat(0, 1)));
    println!("all generators vanish at Q = x1², since x1 divides F\n");

    // β = (Q²,F)₃ and λ = (Q³,F)₅ generate the locus for quartics/sextics.
    let u = q_universe();
    let beta = beta_covariant(&embed_form(&f, &u)).unwrap();
    println!("β(F)  = {beta}");
    let sextic = form(6, &[1, 0, 0, 0, 0, 0, 1]);
    let lambda = lambda_covariant(&embed_form(&sextic, &u)).unwrap();
    println!("λ(x1⁶ + x2⁶) = {lambda}\n");

    // The quartic centre discriminant is a fixed multiple of the
    // catalecticant B_F: zero exactly on harmonic quartics.
    for (label, g) in [
        ("x1⁴ + x2⁴ (harmonic)", form(4, &[1, 0, 0, 0, 1])),
        ("x1⁴ + x1²x2² + x2⁴", form(4, &[1, 0, 1, 0, 1])),
    ] {
        let disc = quartic_centre_discriminant(&g).unwrap();
        println!("centre discriminant of {label}: {}", format_rational(&disc));
    }

    // Sextics: the cubic curve (Q³,F)₆ in the plane of quadratics.
    let curve = sextic_cubic_curve(&form(6, &[1, 0, 0, 0, 1, 0, 1])).unwrap();
    println!("\ncubic curve of x1⁶ + x1²x2⁴ + x2⁶: {curve} = 0");
}
