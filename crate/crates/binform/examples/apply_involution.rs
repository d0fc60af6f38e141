//! Apply σ_{Q,z} to concrete forms: at Q = x₁x₂ the map simply flips the
//! Cayley coefficients by the sign sequence, and applying it twice recovers
//! Δᵈ·F even over a fully symbolic Q.
//!
//! Run with: cargo run --example apply_involution

use binform::form::{delta, generic_form, q_and_form_universe, symbolic_quadratic, BinaryForm};
use binform::involution::{sigma_apply, sigma_product_form, z_from_sign, SignSequence};
use binform::ring::{rat_int, ring_pow, Rational};

fn form(order: usize, raw: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::from_raw(order, raw.iter().map(|&v| rat_int(v)).collect()).unwrap()
}

fn main() {
    // At Q = x1*x2, σ_{Q,z(s)} maps Cayley coefficients a_i ↦ s_i·a_i.
    let s: SignSequence = "++-++".parse().unwrap();
    let z = z_from_sign(&s).unwrap();
    let q = form(2, &[0, 1, 0]);
    let f = form(4, &[1, 4, 6, 4, 1]); // (x1 + x2)^4
    let image = sigma_apply(&q, &z, &f).unwrap();
    println!("s            = {s}");
    println!("F            = {f}");
    println!("σ_(x1x2),z F = {image}");
    for (i, (a, b)) in f.cayley().iter().zip(image.cayley()).enumerate() {
        assert_eq!(b, a * rat_int(s.sign(i) as i64));
    }
    println!("Cayley coefficients flipped exactly by s\n");

    // Symbolic involution identity: σ² = Δ⁴ · id for generic Q and F.
    let u = q_and_form_universe(4, "a");
    let qs = symbolic_quadratic(&u).unwrap();
    let fs = generic_form(4, &u, "a").unwrap();
    let once = sigma_apply(&qs, &z, &fs).unwrap();
    let twice = sigma_apply(&qs, &z, &once).unwrap();
    let dq = delta(&qs).unwrap();
    assert_eq!(twice, fs.scale_by(&ring_pow(&dq, 4)));
    println!("σ_(Q,z)(σ_(Q,z)(F)) = Δ⁴·F   [checked symbolically for generic Q, F]");

    // For factorable forms, σ_Q is a product of order-1 transvectants:
    // σ_Q(l1···ld) = 2^d · Π (Q, l_i)_1.
    let factors = vec![form(1, &[1, 0]), form(1, &[1, -2]), form(1, &[3, 5])];
    let via_product = sigma_product_form(&q, &factors).unwrap();
    let product = factors
        .iter()
        .fold(BinaryForm::constant(rat_int(1)), |acc, l| acc.mul(l));
    let geometric = binform::involution::geometric_involutor(3).unwrap();
    let via_sigma = sigma_apply(&q, &geometric, &product).unwrap();
    assert_eq!(via_product, via_sigma);
    println!("σ_Q(l1·l2·l3) = 2³·Π(Q,l_i)_1 agrees with the geometric involutor");
}
