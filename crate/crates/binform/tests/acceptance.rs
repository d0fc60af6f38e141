//! Acceptance suite: eleven end-to-end guarantees, one test per guarantee.
//!
//! Each test prints a single `acceptance N: PASS — …` line on success (run
//! with `--nocapture` to see them); any failure panics through an assertion.
//! Every comparison in this file is exact — rational equality or symbolic
//! polynomial identity — with no numeric tolerances anywhere.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use binform::form::{
    delta, generic_form, j_invariant, q_and_form_universe, quartic_covariants, symbolic_quadratic,
    transvectant, BinaryForm,
};
use binform::involution::{
    build_sys, canonical_basis, canonical_check, enumerate_involutors, geometric_involutor,
    sigma_apply, verify_involutor, z_from_sign, Involutor, SignSequence, VerifyMode,
};
use binform::loci::{
    embed_form, lambda_covariant, q_universe, quartic_centre_discriminant, sextic_cubic_curve,
};
use binform::poly::{universe, MultiPoly};
use binform::recoupling::{
    alpha_tilde, expand_compound, is_triad, omega, tetra_cg, tetra_normalisation_factor,
    theta_coefficients, transition_g, HalfInt,
};
use binform::ring::{parse_rational, rat, rat_int, ring_pow, Coeff, Rational};

fn rationals(strs: &[&str]) -> Vec<Rational> {
    strs.iter().map(|s| parse_rational(s).unwrap()).collect()
}

fn int_form(order: usize, raw: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::from_raw(order, raw.iter().map(|&v| rat_int(v)).collect()).unwrap()
}

/// Generic Q = (q₀,q₁,q₂ ⧸ x₁,x₂)² and a generic order-d form with Cayley
/// symbols a₀…a_d, sharing one universe; returns (Q, F, Δ_Q).
fn symbolic_setup(d: usize) -> (BinaryForm<MultiPoly>, BinaryForm<MultiPoly>, MultiPoly) {
    let u = q_and_form_universe(d, "a");
    let q = symbolic_quadratic(&u).unwrap();
    let f = generic_form(d, &u, "a").unwrap();
    let dq = delta(&q).unwrap();
    (q, f, dq)
}

fn involutor_for(signs: &str) -> Involutor {
    z_from_sign(&signs.parse().unwrap()).unwrap()
}

/// Guarantee 1: the symmetrically collected coefficients of the order-6
/// involution system match the frozen golden table exactly, within the
/// five-second construction budget.
#[test]
fn criterion_01_sys6_golden_table() {
    let started = Instant::now();
    let sys = build_sys(6).unwrap();
    let elapsed = started.elapsed();

    // (t, [(i, j, collected coefficient of zᵢzⱼ)]); t = 0 is the norm
    // condition Σ α_{i,i} zᵢ² = 1. Every i ≤ j pair not listed must collect
    // to exactly zero.
    let golden: [(usize, &[(usize, usize, &str)]); 4] = [
        (
            2,
            &[
                (0, 0, "-25/20328"),
                (0, 1, "5/3234"),
                (1, 1, "-1/2058"),
                (1, 2, "22/735"),
                (2, 2, "11/210"),
                (2, 3, "2"),
            ],
        ),
        (
            4,
            &[
                (0, 0, "5/1331"),
                (0, 1, "-15/847"),
                (0, 2, "5/121"),
                (1, 1, "-69/5390"),
                (1, 2, "-2/77"),
                (1, 3, "2"),
                (2, 2, "2/5"),
            ],
        ),
        (
            6,
            &[
                (0, 0, "-5/2541"),
                (0, 1, "4/165"),
                (0, 2, "-7/33"),
                (0, 3, "2"),
                (1, 1, "-1/35"),
                (1, 2, "2/15"),
            ],
        ),
        (
            0,
            &[
                (0, 0, "1/6468"),
                (1, 1, "11/22050"),
                (2, 2, "1/75"),
                (3, 3, "1"),
            ],
        ),
    ];

    let mut values = 0usize;
    for (t, entries) in golden {
        for i in 0..=sys.n() {
            for j in i..=sys.n() {
                let expected = entries
                    .iter()
                    .find(|&&(ei, ej, _)| ei == i && ej == j)
                    .map(|&(_, _, v)| parse_rational(v).unwrap())
                    .unwrap_or_else(|| rat_int(0));
                assert_eq!(
                    sys.collected(i, j, t),
                    expected,
                    "coefficient of z{i}z{j} in the t = {t} equation of SYS(6)"
                );
            }
        }
        values += entries.len();
    }
    assert_eq!(values, 23);
    assert!(
        elapsed < Duration::from_secs(5),
        "build_sys(6) took {elapsed:?}, budget is 5 s"
    );
    println!(
        "acceptance 1: PASS — all 23 golden SYS(6) coefficients exact, every other pair collects \
         to zero (built in {elapsed:?}, budget 5 s)"
    );
}

/// Guarantee 2: the closed-form solution z(s) reproduces the five golden
/// involutors exactly, including the geometric one.
#[test]
fn criterion_02_involutor_golden_vectors() {
    let golden: [(&str, &[&str]); 5] = [
        ("+---+", &["4", "48/7", "-1/5"]),
        ("+-+-+", &["16", "24/7", "1/5"]),
        ("++-++", &["-12", "24/7", "3/5"]),
        ("+++-+++", &["40", "-180/11", "20/7", "5/7"]),
        ("++-+-++", &["-60", "-60/11", "30/7", "3/7"]),
    ];
    for (signs, coords) in golden {
        assert_eq!(
            involutor_for(signs).z(),
            rationals(coords).as_slice(),
            "z({signs})"
        );
    }
    // The alternating order-4 sequence yields the geometric involutor.
    assert_eq!(
        involutor_for("+-+-+").z(),
        geometric_involutor(4).unwrap().z()
    );
    println!("acceptance 2: PASS — all five golden sign-sequence involutors reproduced exactly");
}

/// Guarantee 3: for every order d ≤ 8 the full census of 2^{⌊d/2⌋+1} sign
/// sequences yields pairwise-distinct solutions of SYS(d); for d ≤ 6 each
/// one also passes the fully symbolic composition check σ∘σ = Δᵈ·id over
/// generic Q and F.
#[test]
fn criterion_03_full_census_solves_the_system() {
    let mut census = 0usize;
    let mut symbolic = 0usize;
    for d in 1..=8usize {
        let n = d / 2;
        let sys = build_sys(d).unwrap();
        let all = enumerate_involutors(d).unwrap();
        assert_eq!(all.len(), 1 << (n + 1), "census size at d = {d}");
        for (s, z) in &all {
            assert!(sys.is_member(z.z()), "z({s}) fails SYS({d})");
        }
        for (k, (_, zk)) in all.iter().enumerate() {
            for (_, zl) in &all[k + 1..] {
                assert_ne!(zk.z(), zl.z(), "duplicate involutor at d = {d}");
            }
        }
        census += all.len();
        if d <= 6 {
            for (s, z) in &all {
                assert!(
                    verify_involutor(z, VerifyMode::Symbolic).unwrap(),
                    "σ∘σ ≠ Δ^{d}·id for z({s}) at d = {d}"
                );
                symbolic += 1;
            }
        }
    }
    println!(
        "acceptance 3: PASS — {census} involutors across d = 1..8 solve SYS(d) exactly and are \
         pairwise distinct; {symbolic} of them (d ≤ 6) pass the fully symbolic σ∘σ = Δᵈ·id check"
    );
}

/// Guarantee 4: the golden quintic ω triple is exact, and the ω expansion of
/// a compound transvectant (Qᵃ,(Qᵇ,F)_r)_s agrees with direct symbolic
/// computation on well over thirty parameter tuples with d ≤ 6, a,b ≤ 4.
#[test]
fn criterion_04_omega_golden_and_expansion() {
    // Golden triple ω(5,6;2,4;t) for t = 5, 7, 9. The classical table lists
    // the magnitudes 95/286286, 575/1123122, 95/9438; the closed formula,
    // confirmed by an independent linear solve against direct transvectant
    // computation, fixes the signs at −, +, −, so the signed values are
    // frozen here.
    assert_eq!(omega(5, 6, 2, 4, 5, 5).unwrap(), rat(-95, 286286));
    assert_eq!(omega(5, 6, 2, 4, 7, 5).unwrap(), rat(575, 1123122));
    assert_eq!(omega(5, 6, 2, 4, 9, 5).unwrap(), rat(-95, 9438));

    // (Qᵃ,(Qᵇ,F)_r)_s = Σ_t ω(a,b;r,s;t)·Δ^{(a+b−t)/2}·(Qᵗ,F)_{r+s−a−b+t}
    // over fully symbolic Q and F.
    let mut tuples = 0usize;
    for d in 1..=6usize {
        let (q, f, dq) = symbolic_setup(d);
        for a in 1..=4usize {
            for b in 1..=4usize {
                let r_full = d.min(2 * b);
                let mut seen = BTreeSet::new();
                for r in [r_full, r_full / 2] {
                    let s = (2 * a).min(2 * b + d - 2 * r);
                    if !seen.insert((r, s)) {
                        continue;
                    }
                    let inner = transvectant(&q.pow(b), &f, r).unwrap();
                    let lhs = transvectant(&q.pow(a), &inner, s).unwrap();
                    let mut rhs = BinaryForm::zero(lhs.order());
                    for (t, term) in expand_compound(a, b, r, s, d).unwrap() {
                        rhs = rhs.add(
                            &transvectant(&q.pow(t), &f, term.transvectant_index)
                                .unwrap()
                                .scale(&term.omega)
                                .scale_by(&ring_pow(&dq, term.delta_power)),
                        );
                    }
                    assert!(
                        lhs.sub(&rhs).is_zero(),
                        "ω expansion of (Q^{a},(Q^{b},F)_{r})_{s} fails at d = {d}"
                    );
                    tuples += 1;
                }
            }
        }
    }
    assert!(tuples >= 30, "only {tuples} expansion tuples exercised");
    println!(
        "acceptance 4: PASS — signed quintic ω triple exact; ω expansion matches direct symbolic \
         transvectants on {tuples} tuples (d ≤ 6, a,b ≤ 4)"
    );
}

/// Guarantee 5: the recoupling expansion (A,(B,C)_r)_s = Σ_k θ_k
/// ((A,B)_k,C)_{r+s−k} holds for fully symbolic forms A, B, C on at least
/// fifty parameter tuples with orders a, b, c ≤ 6.
#[test]
fn criterion_05_theta_recoupling_identity() {
    // Deterministic tuple selection: every (a,b,c) ∈ {1..6}³ with
    // a + 2b + 3c ≡ 0 (mod 4), with (r,s) derived from the orders so the
    // indices stay admissible, plus four fixed spot checks.
    let mut tuples: BTreeSet<(usize, usize, usize, usize, usize)> = BTreeSet::new();
    for a in 1..=6usize {
        for b in 1..=6usize {
            for c in 1..=6usize {
                if (a + 2 * b + 3 * c) % 4 != 0 {
                    continue;
                }
                let r = (a + b + c) % (b.min(c) + 1);
                let s = (a * b + c) % (a.min(b + c - 2 * r) + 1);
                tuples.insert((a, b, c, r, s));
            }
        }
    }
    for extra in [
        (2, 2, 2, 1, 1),
        (3, 2, 4, 2, 1),
        (4, 4, 4, 2, 2),
        (6, 6, 6, 3, 3),
    ] {
        tuples.insert(extra);
    }
    assert!(tuples.len() >= 50, "only {} tuples selected", tuples.len());

    for &(a, b, c, r, s) in &tuples {
        let mut names = Vec::new();
        for (prefix, order) in [("a", a), ("b", b), ("c", c)] {
            for i in 0..=order {
                names.push(format!("{prefix}{i}"));
            }
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let u = universe(&refs);
        let fa = generic_form(a, &u, "a").unwrap();
        let fb = generic_form(b, &u, "b").unwrap();
        let fc = generic_form(c, &u, "c").unwrap();

        let lhs = transvectant(&fa, &transvectant(&fb, &fc, r).unwrap(), s).unwrap();
        let mut rhs = BinaryForm::zero(lhs.order());
        for (&k, theta) in theta_coefficients(a, b, c, r, s).unwrap().coefficients() {
            rhs = rhs.add(
                &transvectant(&transvectant(&fa, &fb, k).unwrap(), &fc, r + s - k)
                    .unwrap()
                    .scale(theta),
            );
        }
        assert!(
            lhs.sub(&rhs).is_zero(),
            "θ expansion fails at (a,b,c,r,s) = ({a},{b},{c},{r},{s})"
        );
    }
    println!(
        "acceptance 5: PASS — θ recoupling expansion exact on {} fully symbolic (a,b,c,r,s) \
         tuples with orders ≤ 6",
        tuples.len()
    );
}

/// Guarantee 6: the diagonal coefficients ω(d−2i,d−2i;d−2i,d−2i;0) are
/// strictly positive for every 0 ≤ i ≤ ⌊d/2⌋ and every order d ≤ 12 — the
/// property that makes the norm condition of SYS(d) a genuine normalisation.
#[test]
fn criterion_06_diagonal_omega_positive() {
    let mut checked = 0usize;
    for d in 1..=12usize {
        for i in 0..=(d / 2) {
            let a = d - 2 * i;
            let v = omega(a, a, a, a, 0, d).unwrap();
            assert!(
                v > Rational::zero(),
                "ω({a},{a};{a},{a};0) = {v} at d = {d} is not positive"
            );
            checked += 1;
        }
    }
    println!(
        "acceptance 6: PASS — ω(d−2i,d−2i;d−2i,d−2i;0) > 0 in all {checked} diagonal cases, d ≤ 12"
    );
}

/// Guarantee 7: the residual σ_{Q,z}(F) − Δ^{d/2}F factors through the
/// covariants β = (Q²,F)₃ and λ = (Q³,F)₅ exactly as claimed, over fully
/// symbolic Q and F: ten identities, orders 4 and 6.
#[test]
fn criterion_07_residual_identity_suite() {
    // Order 4, generic Q and F.
    let (q, f, dq) = symbolic_setup(4);
    let d2 = ring_pow(&dq, 2);

    // z(++-++) = (−12, 24/7, 3/5): σ − Δ²·id = −12·Q²·(Q²,F)₄.
    let z = involutor_for("++-++");
    assert_eq!(z.z(), rationals(&["-12", "24/7", "3/5"]).as_slice());
    let residual = sigma_apply(&q, &z, &f).unwrap().sub(&f.scale_by(&d2));
    let conic = transvectant(&q.pow(2), &f, 4).unwrap();
    assert!(
        residual
            .sub(&q.pow(2).mul(&conic).scale(&rat_int(-12)))
            .is_zero(),
        "σ − Δ²·id ≠ −12·Q²·(Q²,F)₄"
    );

    // Geometric z = (16, 24/7, 1/5): σ − Δ²·id = Q·[16(Q³,F)₄ + (24/5)(Q,F)₂Δ] …
    let g = involutor_for("+-+-+");
    let bracket = transvectant(&q.pow(3), &f, 4)
        .unwrap()
        .scale(&rat_int(16))
        .add(
            &transvectant(&q, &f, 2)
                .unwrap()
                .scale(&rat(24, 5))
                .scale_by(&dq),
        );
    let residual_g = sigma_apply(&q, &g, &f).unwrap().sub(&f.scale_by(&d2));
    assert!(
        residual_g.sub(&q.mul(&bracket)).is_zero(),
        "geometric residual ≠ Q·[16(Q³,F)₄ + (24/5)(Q,F)₂Δ]"
    );

    // … and that bracket is −32·(β,Q)₁ for β = (Q²,F)₃.
    let beta = transvectant(&q.pow(2), &f, 3).unwrap();
    assert!(
        bracket
            .sub(&transvectant(&beta, &q, 1).unwrap().scale(&rat_int(-32)))
            .is_zero(),
        "bracket ≠ −32·(β,Q)₁"
    );

    // β is syzygetic: (β,Q)₂ = 0 and (β,(Q,F)₂)₂ = 0.
    assert!(transvectant(&beta, &q, 2).unwrap().is_zero());
    assert!(transvectant(&beta, &transvectant(&q, &f, 2).unwrap(), 2)
        .unwrap()
        .is_zero());

    // Order 6, generic Q and F.
    let (q6, f6, dq6) = symbolic_setup(6);
    let d3 = ring_pow(&dq6, 3);

    // z(+++-+++) = (40, −180/11, 20/7, 5/7): σ − Δ³·id = 40·Q³·(Q³,F)₆.
    let z6 = involutor_for("+++-+++");
    let residual6 = sigma_apply(&q6, &z6, &f6).unwrap().sub(&f6.scale_by(&d3));
    let scalar6 = transvectant(&q6.pow(3), &f6, 6).unwrap();
    assert!(
        residual6
            .sub(&q6.pow(3).mul(&scalar6).scale(&rat_int(40)))
            .is_zero(),
        "σ − Δ³·id ≠ 40·Q³·(Q³,F)₆"
    );

    // μ = (Q⁴,F)₆ + (2/7)·Δ·(Q²,F)₄ equals −2·(λ,Q)₁ for λ = (Q³,F)₅ …
    let mu = transvectant(&q6.pow(4), &f6, 6).unwrap().add(
        &transvectant(&q6.pow(2), &f6, 4)
            .unwrap()
            .scale(&rat(2, 7))
            .scale_by(&dq6),
    );
    let lambda = transvectant(&q6.pow(3), &f6, 5).unwrap();
    assert!(
        mu.sub(&transvectant(&lambda, &q6, 1).unwrap().scale(&rat_int(-2)))
            .is_zero(),
        "μ ≠ −2·(λ,Q)₁"
    );

    // … with λ syzygetic like β: (λ,Q)₂ = 0 and (λ,(Q²,F)₄)₂ = 0.
    assert!(transvectant(&lambda, &q6, 2).unwrap().is_zero());
    assert!(
        transvectant(&lambda, &transvectant(&q6.pow(2), &f6, 4).unwrap(), 2)
            .unwrap()
            .is_zero()
    );

    // z(++-+-++) = (−60, −60/11, 30/7, 3/7): σ − Δ³·id = −60·Q²·μ.
    let z6b = involutor_for("++-+-++");
    assert_eq!(
        z6b.z(),
        rationals(&["-60", "-60/11", "30/7", "3/7"]).as_slice()
    );
    let residual6b = sigma_apply(&q6, &z6b, &f6).unwrap().sub(&f6.scale_by(&d3));
    assert!(
        residual6b
            .sub(&q6.pow(2).mul(&mu).scale(&rat_int(-60)))
            .is_zero(),
        "σ − Δ³·id ≠ −60·Q²·μ"
    );

    println!(
        "acceptance 7: PASS — all ten residual/syzygy identities hold over fully symbolic Q and \
         F at orders 4 and 6"
    );
}

/// Guarantee 8: golden covariant values — λ of x₁⁶ + x₂⁶, the planar cubic
/// of x₁⁶ + x₁²x₂⁴ + x₂⁶, and β of a generic quartic at Q = x₁x₂.
#[test]
fn criterion_08_covariant_golden_values() {
    // λ = (Q³,F)₅ of F = x₁⁶ + x₂⁶ over symbolic Q has raw coefficients
    // (−q₁q₂², q₀³ − q₂³, q₀²q₁).
    let u = q_universe();
    let lam = lambda_covariant(&embed_form(&int_form(6, &[1, 0, 0, 0, 0, 0, 1]), &u)).unwrap();
    let q0 = MultiPoly::var(&u, "q0").unwrap();
    let q1 = MultiPoly::var(&u, "q1").unwrap();
    let q2 = MultiPoly::var(&u, "q2").unwrap();
    let expected_lambda = BinaryForm::from_raw(
        2,
        vec![
            q1.mul_ref(&q2.pow(2)).neg_ref(),
            q0.pow(3).sub_ref(&q2.pow(3)),
            q0.pow(2).mul_ref(&q1),
        ],
    )
    .unwrap();
    assert_eq!(lam, expected_lambda, "λ(x₁⁶ + x₂⁶)");

    // The planar cubic (Q³,F)₆ of F = x₁⁶ + x₁²x₂⁴ + x₂⁶ is
    // q₀³ + (4/5)q₀q₁² + (1/5)q₀²q₂ + q₂³.
    let curve = sextic_cubic_curve(&int_form(6, &[1, 0, 0, 0, 1, 0, 1])).unwrap();
    let expected_curve = MultiPoly::from_terms(
        &u,
        &[
            (&[3, 0, 0][..], rat_int(1)),
            (&[1, 2, 0][..], rat(4, 5)),
            (&[2, 0, 1][..], rat(1, 5)),
            (&[0, 0, 3][..], rat_int(1)),
        ],
    )
    .unwrap();
    assert_eq!(curve, expected_curve, "planar cubic of x₁⁶ + x₁²x₂⁴ + x₂⁶");

    // β = (Q²,F)₃ of a generic quartic (Cayley symbols a₀…a₄) at the point
    // Q = x₁x₂ collapses to ½(a₁x₁² − a₃x₂²).
    let ua = universe(&["a0", "a1", "a2", "a3", "a4"]);
    let fq = generic_form(4, &ua, "a").unwrap();
    let x1x2 = BinaryForm::from_raw(
        2,
        vec![
            MultiPoly::zero_in(&ua),
            MultiPoly::constant(&ua, rat_int(1)),
            MultiPoly::zero_in(&ua),
        ],
    )
    .unwrap();
    let beta = transvectant(&x1x2.pow(2), &fq, 3).unwrap();
    let expected_beta = BinaryForm::from_raw(
        2,
        vec![
            MultiPoly::var(&ua, "a1").unwrap().scale(&rat(1, 2)),
            MultiPoly::zero_in(&ua),
            MultiPoly::var(&ua, "a3").unwrap().scale(&rat(-1, 2)),
        ],
    )
    .unwrap();
    assert_eq!(beta, expected_beta, "β at Q = x₁x₂");

    println!(
        "acceptance 8: PASS — λ(x₁⁶+x₂⁶), the sextic planar cubic, and β at Q = x₁x₂ all match \
         their golden values exactly"
    );
}

/// Guarantee 9: for d ∈ {4,5,6,7} and ten seeded-random sign sequences each,
/// forms supported on the plus-monomial basis satisfy the centre equation at
/// Q = x₁x₂ exactly (σ(F) = Δ^{d/2}F for even d, σ(F)² = ΔᵈF² for odd d,
/// with Δ_{x₁x₂} = 1), and adding a single disallowed monomial breaks both
/// the membership test and the equation.
#[test]
fn criterion_09_canonical_forms_random_signs() {
    let q = int_form(2, &[0, 1, 0]);
    let mut rng = ChaCha8Rng::seed_from_u64(20260814);
    let mut satisfied = 0usize;
    let mut spoiled_count = 0usize;

    for d in [4usize, 5, 6, 7] {
        let n = d / 2;
        for _ in 0..10 {
            let head: Vec<i8> = (0..=n)
                .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
                .collect();
            let s = SignSequence::from_head(d, &head).unwrap();
            let z = z_from_sign(&s).unwrap();
            let (plus, minus) = canonical_basis(&s);

            // Random nonzero coefficients on the plus-monomials only.
            let mut raw = vec![rat_int(0); d + 1];
            for &(_, i) in &plus {
                let num = rng.gen_range(1..=9i64) * if rng.gen::<bool>() { 1 } else { -1 };
                let den = rng.gen_range(1..=9i64);
                raw[i] = rat(num, den);
            }
            let f = BinaryForm::from_raw(d, raw.clone()).unwrap();
            assert!(
                canonical_check(&s, &f).unwrap(),
                "plus-supported form rejected for s = {s}"
            );
            let image = sigma_apply(&q, &z, &f).unwrap();
            if d % 2 == 0 {
                assert_eq!(image, f, "σ(F) ≠ F at Q = x₁x₂ for s = {s}");
            } else {
                assert_eq!(
                    image.mul(&image),
                    f.mul(&f),
                    "σ(F)² ≠ F² at Q = x₁x₂ for s = {s}"
                );
            }
            satisfied += 1;

            // One disallowed monomial must break it. (The all-plus sequence
            // of even order allows every monomial, so there is nothing to
            // spoil there.)
            if let Some(&(_, i)) = minus.first() {
                let mut spoiled_raw = raw.clone();
                spoiled_raw[i] = rat_int(1);
                let spoiled = BinaryForm::from_raw(d, spoiled_raw).unwrap();
                assert!(
                    !canonical_check(&s, &spoiled).unwrap(),
                    "spoiled form accepted for s = {s}"
                );
                let spoiled_image = sigma_apply(&q, &z, &spoiled).unwrap();
                if d % 2 == 0 {
                    assert_ne!(spoiled_image, spoiled, "spoiled σ(F) = F for s = {s}");
                } else {
                    assert_ne!(
                        spoiled_image.mul(&spoiled_image),
                        spoiled.mul(&spoiled),
                        "spoiled σ(F)² = F² for s = {s}"
                    );
                }
                spoiled_count += 1;
            }
        }
    }
    println!(
        "acceptance 9: PASS — {satisfied} random plus-supported forms satisfy the centre \
         equation at Q = x₁x₂ exactly and all {spoiled_count} one-monomial spoilers fail it"
    );
}

/// Guarantee 10: the determinant of the symmetric 3×3 matrix of the conic
/// (Q²,F)₄ equals the fixed nonzero rational c = 2/3 times the quartic
/// invariant B_F, identically in a generic F; and the two j-invariant
/// goldens both sit at j = 1.
#[test]
fn criterion_10_catalecticant_proportionality() {
    let u = q_and_form_universe(4, "a");
    let q = symbolic_quadratic(&u).unwrap();
    let f = generic_form(4, &u, "a").unwrap();
    let conic_form = transvectant(&q.pow(2), &f, 4).unwrap();
    assert_eq!(conic_form.order(), 0);
    let conic = conic_form.raw()[0].clone();

    // Symmetric matrix of the ternary quadratic: diagonal entries are the
    // coefficients of qᵢ², off-diagonal entries half the mixed coefficients.
    let names = ["q0", "q1", "q2"];
    let mut m = vec![vec![MultiPoly::zero_in(&u); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut exps = [0u32; 3];
            exps[i] += 1;
            exps[j] += 1;
            let coeff = conic.extract_coefficient(&names, &exps).unwrap();
            *entry = if i == j {
                coeff
            } else {
                coeff.scale(&rat(1, 2))
            };
        }
    }
    let det = det3(&m);
    let (_, b) = quartic_covariants(&f).unwrap();
    let c = rat(2, 3);
    assert!(!c.is_zero());
    assert!(
        det.sub_ref(&b.scale(&c)).is_zero(),
        "det of the conic matrix is not (2/3)·B_F identically"
    );

    // Numeric spot check through the library's own determinant route:
    // F = x₁⁴ + x₁²x₂² + x₂⁴ has B_F = 35/36, so the discriminant is 35/54.
    assert_eq!(
        quartic_centre_discriminant(&int_form(4, &[1, 0, 1, 0, 1])).unwrap(),
        rat(35, 54)
    );

    // j-invariant goldens: x₁⁴ + x₂⁴ and x₁x₂(x₁² + x₂²) both have j = 1.
    assert_eq!(j_invariant(&int_form(4, &[1, 0, 0, 0, 1])).unwrap(), rat_int(1));
    assert_eq!(j_invariant(&int_form(4, &[0, 1, 0, 1, 0])).unwrap(), rat_int(1));

    println!(
        "acceptance 10: PASS — disc((Q²,F)₄) = (2/3)·B_F identically in a generic quartic \
         (c = 2/3 ≠ 0); j(x₁⁴+x₂⁴) = j(x₁x₂(x₁²+x₂²)) = 1"
    );
}

fn det3(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let pos = m[0][0]
        .mul_ref(&m[1][1])
        .mul_ref(&m[2][2])
        .add_ref(&m[0][1].mul_ref(&m[1][2]).mul_ref(&m[2][0]))
        .add_ref(&m[0][2].mul_ref(&m[1][0]).mul_ref(&m[2][1]));
    let neg = m[0][2]
        .mul_ref(&m[1][1])
        .mul_ref(&m[2][0])
        .add_ref(&m[0][0].mul_ref(&m[1][2]).mul_ref(&m[2][1]))
        .add_ref(&m[0][1].mul_ref(&m[1][0]).mul_ref(&m[2][2]));
    pos.sub_ref(&neg)
}

/// Guarantee 11: the tetrahedron/recoupling cross-checks — the all-zero
/// normalisation is 1; (2J+1)·NF·α̃ reproduces the rational tetrahedron
/// value with exact radical cancellation on every admissible label set with
/// 2j ≤ 4; the geometric involutor is 2ᵈ times the first transition-matrix
/// row and arises from the alternating sequence; and the sign-flip and
/// improper correspondences hold across the full census for d ≤ 8.
#[test]
fn criterion_11_recoupling_cross_checks() {
    let zero = HalfInt::from_twice(0);
    assert_eq!(
        tetra_cg(zero, zero, zero, zero, zero, zero).unwrap(),
        rat_int(1)
    );

    // α̃ normalises a single coupling tree; gluing the two trees of the
    // tetrahedron closes the total-spin edge J into a loop, which
    // contributes its dimension 2J+1 as an extra factor. With that loop
    // factor, (2J+1)·NF·α̃ must be exactly rational (the √radicand of α̃
    // collapses against the 6-j radicand) and equal to the tetrahedron
    // value on every admissible label set.
    let mut admissible = 0usize;
    for j1 in 0..=4u32 {
        for j2 in 0..=4u32 {
            for j3 in 0..=4u32 {
                for j12 in 0..=4u32 {
                    for j23 in 0..=4u32 {
                        for jt in 0..=4u32 {
                            let [a, b, c, ab, bc, j] =
                                [j1, j2, j3, j12, j23, jt].map(HalfInt::from_twice);
                            let triads = [(a, b, ab), (b, c, bc), (a, bc, j), (ab, c, j)];
                            if triads.iter().any(|&(x, y, t)| !is_triad(x, y, t)) {
                                continue;
                            }
                            let tetra = tetra_cg(a, b, c, ab, bc, j).unwrap();
                            let nf = tetra_normalisation_factor(a, b, c, ab, bc, j).unwrap();
                            let at = alpha_tilde(a, b, c, ab, bc, j).unwrap();
                            let dim = rat_int(i64::from(j.twice()) + 1);
                            let product = at.scale(&(nf * dim));
                            let collapsed = product.to_rational().unwrap_or_else(|| {
                                panic!(
                                    "radicand fails to collapse at 2j = \
                                     ({j1},{j2},{j3},{j12},{j23},{jt})"
                                )
                            });
                            assert_eq!(
                                collapsed, tetra,
                                "(2J+1)·NF·α̃ ≠ tetra at 2j = ({j1},{j2},{j3},{j12},{j23},{jt})"
                            );
                            admissible += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(admissible, 570, "admissible label-set count with 2j ≤ 4");

    // gᵢ = 2ᵈ·G_{0,i} and z(γ) = g for d ≤ 8.
    for d in 1..=8usize {
        let g = geometric_involutor(d).unwrap();
        let scale = rat_int(2).pow(d as i32);
        for (i, gi) in g.z().iter().enumerate() {
            assert_eq!(
                *gi,
                &scale * transition_g(0, i, d).unwrap(),
                "g{i} ≠ 2^{d}·G(0,{i}) at d = {d}"
            );
        }
        assert_eq!(
            z_from_sign(&SignSequence::gamma(d)).unwrap().z(),
            g.z(),
            "z(γ) ≠ g at d = {d}"
        );
    }

    // Sign-flip correspondence z(−s) = −z(s) across the census, and the
    // improper involutors (0,…,0,±1) for the constant sequences at even d.
    for d in 1..=8usize {
        for (s, z) in enumerate_involutors(d).unwrap() {
            assert_eq!(
                z_from_sign(&s.negated()).unwrap().z(),
                z.negated().z(),
                "z(−s) ≠ −z(s) at d = {d}"
            );
        }
        if d % 2 == 0 {
            let n = d / 2;
            let mut improper = vec![rat_int(0); n + 1];
            improper[n] = rat_int(1);
            let all_plus = SignSequence::new(vec![1; d + 1]).unwrap();
            assert_eq!(
                z_from_sign(&all_plus).unwrap().z(),
                improper.as_slice(),
                "all-plus sequence at d = {d}"
            );
            let all_minus = SignSequence::new(vec![-1; d + 1]).unwrap();
            let negated: Vec<Rational> = improper.iter().map(|v| -v).collect();
            assert_eq!(
                z_from_sign(&all_minus).unwrap().z(),
                negated.as_slice(),
                "all-minus sequence at d = {d}"
            );
        }
    }

    println!(
        "acceptance 11: PASS — tetra(0,…,0) = 1; (2J+1)·NF·α̃ = tetra with exact radical \
         collapse on all {admissible} admissible label sets (2j ≤ 4); g = 2ᵈ·G₀,·; z(γ) = g; \
         z(−s) = −z(s) and the improper correspondences hold for d ≤ 8"
    );
}
