//! Recoupling coefficients in action: rewrite nested transvectants with the
//! θ_k table, expand compounds of quadratic powers with ω, and verify both
//! against direct symbolic computation.
//!
//! Run with: cargo run --example recoupling_expansion

use binform::form::{generic_form, symbolic_quadratic, transvectant, BinaryForm};
use binform::poly::{universe, MultiPoly};
use binform::recoupling::{expand_compound, theta_coefficients, transition_g};
use binform::ring::{format_rational, ring_pow};

fn main() {
    // θ: (A,(B,C)_r)_s = Σ_k θ_k((A,B)_k,C)_{r+s−k} for orders (3,2,4),
    // indices (r,s) = (2,1).
    let (a, b, c, r, s) = (3usize, 2usize, 4usize, 2usize, 1usize);
    let table = theta_coefficients(a, b, c, r, s).unwrap();
    println!("θ table for orders ({a},{b},{c}), indices (r,s)=({r},{s}):");
    for (k, v) in table.coefficients() {
        println!("  θ_{k} = {}", format_rational(v));
    }

    // Verify on fully symbolic A, B, C.
    let names: Vec<String> = (0..=a)
        .map(|i| format!("a{i}"))
        .chain((0..=b).map(|i| format!("b{i}")))
        .chain((0..=c).map(|i| format!("c{i}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let u = universe(&refs);
    let fa = generic_form(a, &u, "a").unwrap();
    let fb = generic_form(b, &u, "b").unwrap();
    let fc = generic_form(c, &u, "c").unwrap();
    let lhs = transvectant(&fa, &transvectant(&fb, &fc, r).unwrap(), s).unwrap();
    let mut rhs = BinaryForm::<MultiPoly>::zero(lhs.order());
    for (k, v) in table.coefficients() {
        let inner = transvectant(&fa, &fb, *k).unwrap();
        rhs = rhs.add(&transvectant(&inner, &fc, r + s - k).unwrap().scale(v));
    }
    assert_eq!(lhs, rhs);
    println!("  matches direct symbolic expansion ✓\n");

    // ω: (Q^2,(Q^2,F)_2)_2 for an order-4 form F expands into Δ-weighted
    // transvectants with powers of Q.
    let (qa, qb, qr, qs, d) = (2usize, 2usize, 2usize, 2usize, 4usize);
    let expansion = expand_compound(qa, qb, qr, qs, d).unwrap();
    println!("(Q^{qa},(Q^{qb},F)_{qr})_{qs} for order d={d}:");
    for (t, term) in &expansion {
        println!(
            "  + {} · Δ^{} · (Q^{t},F)_{}",
            format_rational(&term.omega),
            term.delta_power,
            term.transvectant_index
        );
    }
    let uq = binform::form::q_and_form_universe(d, "a");
    let q = symbolic_quadratic(&uq).unwrap();
    let f = generic_form(d, &uq, "a").unwrap();
    let dq = binform::form::delta(&q).unwrap();
    let lhs = transvectant(
        &q.pow(qa),
        &transvectant(&q.pow(qb), &f, qr).unwrap(),
        qs,
    )
    .unwrap();
    let mut rhs = BinaryForm::<MultiPoly>::zero(lhs.order());
    for (t, term) in &expansion {
        let base = transvectant(&q.pow(*t), &f, term.transvectant_index).unwrap();
        rhs = rhs.add(
            &base
                .scale(&term.omega)
                .scale_by(&ring_pow(&dq, term.delta_power)),
        );
    }
    assert_eq!(lhs, rhs);
    println!("  matches direct symbolic expansion ✓\n");

    // The triangular transition matrix relates the geometric involutor to
    // its first row: g_i = 2^d · G_(0,i).
    let d = 6;
    let g = binform::involution::geometric_involutor(d).unwrap();
    let two_d = ring_pow(&binform::ring::rat(2, 1), d);
    for (i, gi) in g.z().iter().enumerate() {
        let from_matrix = transition_g(0, i, d).unwrap() * &two_d;
        assert_eq!(*gi, from_matrix);
    }
    println!("g_i = 2^{d}·G_(0,i) for d = {d} ✓");
}
