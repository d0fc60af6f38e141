//! Enumerate every involutor for small orders and verify each one against
//! the quadratic system (fast path) and, for d ≤ 4 here, the fully symbolic
//! σ∘σ = Δᵈ·id identity (slow path).
//!
//! Run with: cargo run --example involutor_census

use binform::involution::{enumerate_involutors, verify_involutor, VerifyMode};
use binform::ring::format_rational;

fn main() {
    for d in 1..=6 {
        let involutors = enumerate_involutors(d).unwrap();
        println!("order d = {d}: {} involutors", involutors.len());
        for (s, z) in &involutors {
            let fast = verify_involutor(z, VerifyMode::Fast).unwrap();
            let tag = if d <= 4 {
                // The symbolic path expands σ_{Q,z}(σ_{Q,z}(F)) − Δᵈ·F over a
                // generic quadratic Q and generic order-d form F and checks
                // that every coefficient vanishes identically.
                let symbolic = verify_involutor(z, VerifyMode::Symbolic).unwrap();
                assert_eq!(fast, symbolic);
                "fast+symbolic"
            } else {
                "fast"
            };
            let coords: Vec<String> = z.z().iter().map(format_rational).collect();
            println!("  {s}  →  ({})   [{tag}: {fast}]", coords.join(", "));
        }
        println!();
    }
}
