//! Exact 6-j symbols and the tetrahedron Clebsch–Gordan normalisation,
//! including the radical-cancellation consistency between the two.
//!
//! Run with: cargo run --example spin_networks

use binform::recoupling::{
    alpha_tilde, racah_6j, tetra_cg, tetra_normalisation_factor, triangle_delta_sq, HalfInt,
};
use binform::ring::{format_rational, rat_int};

fn h(twice: u32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn main() {
    // Triangle deltas (squared, hence exactly rational).
    for (a, b, c) in [(0, 0, 0), (2, 2, 0), (1, 1, 2), (2, 2, 2)] {
        let v = triangle_delta_sq(h(a), h(b), h(c)).unwrap();
        println!(
            "Δ({}, {}, {})² = {}",
            h(a),
            h(b),
            h(c),
            format_rational(&v)
        );
    }
    println!();

    // A 6-j symbol is rational·√radicand; the radicand is the product of the
    // four triangle deltas squared.
    let v = racah_6j(h(2), h(2), h(2), h(2), h(2), h(2)).unwrap();
    println!("{{1 1 1; 1 1 1}} = {v}");
    let v = racah_6j(h(2), h(2), h(2), h(0), h(2), h(2)).unwrap();
    println!("{{1 1 1; 0 1 1}} = {v}");
    println!();

    // The tetrahedron normalisation is exactly rational, and for every label
    // set it factors as (2J+1) · NF · α̃, with the α̃ radical collapsing.
    let labels = [
        ([0, 0, 0, 0, 0, 0], "all zero"),
        ([2, 2, 2, 2, 2, 2], "all one"),
        ([1, 1, 2, 2, 1, 2], "half-integer mix"),
        ([2, 4, 2, 4, 4, 2], "spin-2 mix"),
    ];
    for (t, label) in labels {
        let [j1, j2, j3, j12, j23, jt] = t.map(h);
        let tetra = tetra_cg(j1, j2, j3, j12, j23, jt).unwrap();
        let nf = tetra_normalisation_factor(j1, j2, j3, j12, j23, jt).unwrap();
        let at = alpha_tilde(j1, j2, j3, j12, j23, jt).unwrap();
        let product = at.scale(&nf).scale(&rat_int(t[5] as i64 + 1));
        let rationalised = product
            .to_rational()
            .expect("the radicand collapses to a perfect square");
        assert_eq!(tetra, rationalised);
        println!(
            "tetra({label}) = {} = (2J+1)·NF·α̃ with exact radical cancellation",
            format_rational(&tetra)
        );
    }
}
