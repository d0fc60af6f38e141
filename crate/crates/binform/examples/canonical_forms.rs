//! Canonical monomial bases: for each sign sequence s, the forms fixed (at
//! Q = x₁x₂) by the involution attached to s are exactly those supported on
//! the plus-monomials (even order) or on the plus- or minus-monomials (odd
//! order).
//!
//! Run with: cargo run --example canonical_forms

use binform::involution::{canonical_basis, canonical_check, SignSequence};
use binform::ring::{rat_int, Rational};

fn monomial_string(pairs: &[(usize, usize)]) -> String {
    let power = |name: &str, e: usize| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    pairs
        .iter()
        .map(|&(p, q)| {
            let (a, b) = (power("x1", p), power("x2", q));
            match (a.is_empty(), b.is_empty()) {
                (true, true) => "1".to_string(),
                (false, true) => a,
                (true, false) => b,
                (false, false) => format!("{a}*{b}"),
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() {
    for text in ["+--+--+", "+--++-", "+-+-+"] {
        let s: SignSequence = text.parse().unwrap();
        let (plus, minus) = canonical_basis(&s);
        println!("s = {s} (order {})", s.d());
        println!("  plus-basis : {}", monomial_string(&plus));
        println!("  minus-basis: {}", monomial_string(&minus));

        // A form supported on the plus-basis passes the canonical test.
        let d = s.d();
        let mut raw: Vec<Rational> = vec![rat_int(0); d + 1];
        for &(_, i) in &plus {
            raw[i] = rat_int(1 + i as i64);
        }
        let f = binform::form::BinaryForm::from_raw(d, raw.clone()).unwrap();
        assert!(canonical_check(&s, &f).unwrap());
        println!("  plus-supported form:   canonical ✓");

        // Adding any disallowed monomial breaks it.
        if let Some(&(_, i)) = minus.first() {
            let mut spoiled = raw.clone();
            spoiled[i] = rat_int(1);
            let g = binform::form::BinaryForm::from_raw(d, spoiled).unwrap();
            assert!(!canonical_check(&s, &g).unwrap());
            println!("  plus + one minus-monomial: canonical ✗ (as it must be)");
        }

        // Odd order: a minus-supported form is also canonical (the square of
        // the involution identity only sees the product of the two pieces).
        if d % 2 == 1 {
            let mut raw = vec![rat_int(0); d + 1];
            for &(_, i) in &minus {
                raw[i] = rat_int(2);
            }
            let h = binform::form::BinaryForm::from_raw(d, raw).unwrap();
            assert!(canonical_check(&s, &h).unwrap());
            println!("  minus-supported form:  canonical ✓ (odd order)");
        }
        println!();
    }
}
