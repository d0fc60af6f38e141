//! Randomized algebraic laws checked with exact arithmetic: transvectant
//! symmetry and bilinearity, degenerate discriminants, wire-format round
//! trips, and sign-sequence parsing. Inputs are random but every assertion
//! is an exact rational identity.

use num::Zero;
use proptest::prelude::*;

use binform::form::{delta, transvectant, BinaryForm};
use binform::involution::{z_from_sign, SignSequence};
use binform::jsonio::{form_from_json, form_json};
use binform::ring::{rat, rat_int, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn form_of_order(order: usize) -> impl Strategy<Value = BinaryForm<Rational>> {
    proptest::collection::vec(small_rational(), order + 1)
        .prop_map(move |raw| BinaryForm::from_raw(order, raw).expect("length matches order"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// (A,B)_r = (−1)^r (B,A)_r.
    #[test]
    fn transvectant_flip_symmetry(
        a in form_of_order(4),
        b in form_of_order(3),
        r in 0usize..=3,
    ) {
        let lhs = transvectant(&a, &b, r).unwrap();
        let flipped = transvectant(&b, &a, r).unwrap();
        let rhs = if r % 2 == 0 { flipped } else { flipped.neg() };
        prop_assert_eq!(lhs, rhs);
    }

    /// (A₁ + c·A₂, B)_r = (A₁,B)_r + c·(A₂,B)_r.
    #[test]
    fn transvectant_is_linear_in_the_first_slot(
        a1 in form_of_order(4),
        a2 in form_of_order(4),
        b in form_of_order(4),
        c in small_rational(),
        r in 0usize..=4,
    ) {
        let combined = transvectant(&a1.add(&a2.scale(&c)), &b, r).unwrap();
        let split = transvectant(&a1, &b, r)
            .unwrap()
            .add(&transvectant(&a2, &b, r).unwrap().scale(&c));
        prop_assert_eq!(combined, split);
    }

    /// The zeroth transvectant is the plain product.
    #[test]
    fn zeroth_transvectant_is_the_product(
        a in form_of_order(3),
        b in form_of_order(2),
    ) {
        prop_assert_eq!(transvectant(&a, &b, 0).unwrap(), a.mul(&b));
    }

    /// Squares of linear forms are exactly the Δ = 0 locus.
    #[test]
    fn squared_linear_forms_have_zero_discriminant(p in -9i64..=9, q in -9i64..=9) {
        let l = BinaryForm::from_raw(1, vec![rat_int(p), rat_int(q)]).unwrap();
        prop_assert!(delta(&l.pow(2)).unwrap().is_zero());
    }

    /// Forms survive the JSON wire format unchanged.
    #[test]
    fn form_json_round_trip(f in form_of_order(5)) {
        prop_assert_eq!(form_from_json(&form_json(&f)).unwrap(), f);
    }

    /// Sign sequences survive display → parse, and flipping the sequence
    /// negates its involutor.
    #[test]
    fn sign_sequence_round_trip_and_negation(
        d in 1usize..=8,
        bits in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let n = d / 2;
        let head: Vec<i8> = (0..=n).map(|i| if bits[i] { 1 } else { -1 }).collect();
        let s = SignSequence::from_head(d, &head).unwrap();
        let reparsed: SignSequence = s.to_string().parse().unwrap();
        prop_assert_eq!(reparsed.signs(), s.signs());

        let z = z_from_sign(&s).unwrap();
        let z_neg = z_from_sign(&s.negated()).unwrap();
        let negated = z.negated();
        prop_assert_eq!(z_neg.z(), negated.z());
    }
}
