//! Transvectant calculus basics: covariants of a quartic and two classical
//! identities checked fully symbolically.
//!
//! Run with: cargo run --example transvectants

use binform::form::{
    delta, j_invariant, quartic_covariants, symbolic_quadratic, transvectant, BinaryForm,
};
use binform::poly::{universe, MultiPoly};
use binform::ring::{rat, rat_int, Coeff, Rational};

fn form(order: usize, raw: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::from_raw(order, raw.iter().map(|&v| rat_int(v)).collect()).unwrap()
}

fn main() {
    // F = x1^4 + x2^4: its Hessian-type covariant and invariants.
    let f = form(4, &[1, 0, 0, 0, 1]);
    let h = transvectant(&f, &f, 2).unwrap();
    println!("F        = {f}");
    println!("(F,F)_2  = {h}");
    let (a, b) = quartic_covariants(&f).unwrap();
    println!("A_F = (F,F)_4       = {a}");
    println!("B_F = (F,(F,F)_2)_4 = {b}");
    println!("j(F) = A^3/(A^3-6B^2) = {}", j_invariant(&f).unwrap());

    // x1*x2*(x1^2+x2^2) has the same j-invariant: the two quartics are
    // projectively equivalent.
    let g = form(4, &[0, 1, 0, 1, 0]);
    println!("j({g}) = {}", j_invariant(&g).unwrap());

    // Symbolic identity: (Q,(Q,l)_1)_1 = (Δ/4)·l for the generic quadratic
    // Q = (q0, q1, q2 / x1, x2)^2 and generic linear form l.
    let u = universe(&["q0", "q1", "q2", "l0", "l1"]);
    let q = symbolic_quadratic(&u).unwrap();
    let l = BinaryForm::from_raw(
        1,
        vec![
            MultiPoly::var(&u, "l0").unwrap(),
            MultiPoly::var(&u, "l1").unwrap(),
        ],
    )
    .unwrap();
    let lhs = transvectant(&q, &transvectant(&q, &l, 1).unwrap(), 1).unwrap();
    let rhs = l.scale_by(&delta(&q).unwrap().scale(&rat(1, 4)));
    assert_eq!(lhs, rhs);
    println!("\n(Q,(Q,l)_1)_1 − (Δ/4)·l = 0   [checked symbolically]");

    // Δ is invariant under the unimodular shear x1 → x1 + x2.
    let shear = [
        [MultiPoly::constant(&u, rat(1, 1)), MultiPoly::constant(&u, rat(1, 1))],
        [MultiPoly::constant(&u, rat(0, 1)), MultiPoly::constant(&u, rat(1, 1))],
    ];
    let q_sheared = binform::form::unimodular_substitute(&q, &shear).unwrap();
    assert_eq!(delta(&q_sheared).unwrap(), delta(&q).unwrap());
    println!("Δ(Q∘shear) = Δ(Q)             [checked symbolically]");
}
