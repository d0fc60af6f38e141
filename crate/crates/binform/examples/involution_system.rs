//! Build the quadratic system SYS(d) whose solutions are exactly the
//! involutors of order d, print its equations, and test membership.
//!
//! Run with: cargo run --example involution_system

use binform::involution::{build_sys, geometric_involutor, z_from_sign};
use binform::ring::rat_int;

fn main() {
    for d in [2, 4, 6] {
        let sys = build_sys(d).unwrap();
        println!("SYS({d}) in z0..z{}:", sys.n());
        for t_half in 1..=sys.n() {
            println!("  {}", sys.render_equation(2 * t_half));
        }
        println!("  {}   (norm)", sys.render_equation(0));

        // The geometric involutor solves the system...
        let g = geometric_involutor(d).unwrap();
        assert!(sys.is_member(g.z()));
        // ...and so does every closed-form z(s); a perturbed vector does not.
        let s = "+-".repeat(d / 2) + "+";
        let z = z_from_sign(&s.parse().unwrap()).unwrap();
        assert!(sys.is_member(z.z()));
        let mut bad = z.z().to_vec();
        bad[0] += rat_int(1);
        assert!(!sys.is_member(&bad));
        println!("  geometric involutor and z(\"{s}\") are members; a perturbation is not\n");
    }
}
