//! Centre-of-involution loci: the polynomial conditions on an order-2 form Q
//! under which σ_{Q,z} fixes a given form, together with the explicit
//! covariants (β, λ) that generate them in the quartic and sextic cases and
//! the catalecticant discriminant check.
//!
//! # Key operations
//! - [`centre_conditions`]: the defining equations of the centre locus of
//!   (z, F) — the x-coefficients of σ_{Q,z}(F) − Δ^{d/2}F (even d) or
//!   [σ_{Q,z}(F)]² − ΔᵈF² (odd d) as polynomials in the symbols q₀,q₁,q₂.
//! - [`beta_covariant`]: β = (Q²,F)₃ for quartics.
//! - [`lambda_covariant`]: λ = (Q³,F)₅ for sextics.
//! - [`quartic_centre_discriminant`]: the 3×3 symmetric determinant of the
//!   ternary conic (Q²,F)₄, hard-asserted proportional to the covariant
//!   scalar B_F by a fixed constant that is derived symbolically once.
//! - [`sextic_cubic_curve`]: the planar cubic (Q³,F)₆ in q₀,q₁,q₂.
//!
//! # Scope note
//! The returned generators are deliberately un-saturated: the centre locus
//! proper excludes the degenerate conic Δ_Q = 0, and saturating the ideal at
//! Δ is a Gröbner-level operation that is out of scope here. The generators
//! therefore cut out the centre locus together with possible extraneous
//! points on Δ_Q = 0.

use std::sync::Mutex;

use num::Zero;

use crate::error::{Error, Result};
use crate::form::{
    quartic_covariants, symbolic_quadratic, transvectant, BinaryForm,
};
use crate::involution::{sigma_apply, Involutor};
use crate::poly::{universe, MultiPoly, Universe};
use crate::ring::{rat, ring_pow, Coeff, Rational};

/// The polynomial system cutting out the centre locus of an involutor on a
/// fixed form (in the symbols q₀, q₁, q₂).
#[derive(Clone, PartialEq, Debug)]
pub struct CentreSystem {
    d: usize,
    generators: Vec<MultiPoly>,
}

impl CentreSystem {
    pub fn d(&self) -> usize {
        self.d
    }

    /// All x-coefficients of the residual form (some may be the zero
    /// polynomial for special F).
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }
}

/// The universe {q0, q1, q2} used when the input form has rational
/// coefficients.
pub fn q_universe() -> Universe {
    universe(&["q0", "q1", "q2"])
}

/// Embed a rational form into polynomial coefficients over the given
/// universe (each coefficient becomes a constant polynomial).
pub fn embed_form(f: &BinaryForm<Rational>, u: &Universe) -> BinaryForm<MultiPoly> {
    let raw = f
        .raw()
        .iter()
        .map(|c| MultiPoly::constant(u, c.clone()))
        .collect();
    BinaryForm::from_raw(f.order(), raw).expect("length preserved by embedding")
}

/// The variable universe a polynomial-coefficient form lives in (falling
/// back to {q0,q1,q2} when every coefficient is a bare constant).
fn resolve_universe(f: &BinaryForm<MultiPoly>) -> Universe {
    f.raw()
        .iter()
        .map(|c| c.vars())
        .find(|u| !u.is_empty())
        .cloned()
        .unwrap_or_else(q_universe)
}

/// The defining equations of the centre locus of (z, F): treat q₀,q₁,q₂ as
/// symbols, form the residual σ_{Q,z}(F) − Δ^{d/2}F (even d) or
/// [σ_{Q,z}(F)]² − ΔᵈF² (odd d), and return its x-coefficients.
pub fn centre_conditions(z: &Involutor, f: &BinaryForm<Rational>) -> Result<CentreSystem> {
    let d = z.d();
    if f.order() != d {
        return Err(Error::Range(format!(
            "involutor is for order {d} but F has order {}",
            f.order()
        )));
    }
    let u = q_universe();
    let fq = embed_form(f, &u);
    let q = symbolic_quadratic(&u)?;
    let sigma = sigma_apply(&q, z, &fq)?;
    let dq = crate::form::delta(&q)?;
    let residual = if d % 2 == 0 {
        sigma.sub(&fq.scale_by(&ring_pow(&dq, d / 2)))
    } else {
        sigma
            .mul(&sigma)
            .sub(&fq.mul(&fq).scale_by(&ring_pow(&dq, d)))
    };
    Ok(CentreSystem {
        d,
        generators: residual.raw().to_vec(),
    })
}

/// β = (Q²,F)₃ for an order-4 form F, with Q the generic order-2 form whose
/// Cayley coefficients are the symbols q₀,q₁,q₂ (drawn from F's own
/// universe when F is symbolic).
pub fn beta_covariant(f: &BinaryForm<MultiPoly>) -> Result<BinaryForm<MultiPoly>> {
    if f.order() != 4 {
        return Err(Error::Range(format!(
            "beta needs an order-4 form, got order {}",
            f.order()
        )));
    }
    let u = resolve_universe(f);
    let q = symbolic_quadratic(&u)?;
    transvectant(&q.pow(2), f, 3)
}

/// λ = (Q³,F)₅ for an order-6 form F, with Q the generic order-2 form as in
/// [`beta_covariant`].
pub fn lambda_covariant(f: &BinaryForm<MultiPoly>) -> Result<BinaryForm<MultiPoly>> {
    if f.order() != 6 {
        return Err(Error::Range(format!(
            "lambda needs an order-6 form, got order {}",
            f.order()
        )));
    }
    let u = resolve_universe(f);
    let q = symbolic_quadratic(&u)?;
    transvectant(&q.pow(3), f, 5)
}

/// The symmetric 3×3 coefficient matrix of the ternary conic (Q²,F)₄ in
/// (q₀,q₁,q₂): diagonal entries are the qₖ² coefficients, off-diagonal
/// entries are half the mixed coefficients.
fn conic_matrix(f: &BinaryForm<MultiPoly>, u: &Universe) -> Result<[[MultiPoly; 3]; 3]> {
    let q = symbolic_quadratic(u)?;
    // Re-anchor in `u`: extreme inputs (e.g. the zero form) can collapse the
    // transvectant to a constant that no longer mentions the q's.
    let conic = transvectant(&q.pow(2), f, 4)?.raw()[0].embed_into(u)?;
    let names = ["q0", "q1", "q2"];
    let mut rows: Vec<[MultiPoly; 3]> = Vec::with_capacity(3);
    for k in 0..3 {
        let mut row: Vec<MultiPoly> = Vec::with_capacity(3);
        for l in 0..3 {
            let mut exps = [0u32; 3];
            exps[k] += 1;
            exps[l] += 1;
            let c = conic.extract_coefficient(&names, &exps)?;
            row.push(if k == l { c } else { c.scale(&rat(1, 2)) });
        }
        rows.push(row.try_into().expect("three entries"));
    }
    Ok(rows.try_into().expect("three rows"))
}

fn det3<R: Coeff>(m: &[[R; 3]; 3]) -> R {
    let mut acc = R::zero();
    for (c0, c1, c2, negate) in [
        (0, 1, 2, false),
        (1, 2, 0, false),
        (2, 0, 1, false),
        (2, 1, 0, true),
        (0, 2, 1, true),
        (1, 0, 2, true),
    ] {
        let term = m[0][c0].mul_ref(&m[1][c1]).mul_ref(&m[2][c2]);
        acc = if negate {
            acc.sub_ref(&term)
        } else {
            acc.add_ref(&term)
        };
    }
    acc
}

/// The fixed ratio between the conic determinant and B_F, derived once from
/// a fully symbolic quartic and then reused.
static CATALECTICANT_RATIO: Mutex<Option<Rational>> = Mutex::new(None);

fn catalecticant_ratio() -> Result<Rational> {
    {
        let guard = CATALECTICANT_RATIO
            .lock()
            .expect("catalecticant cache poisoned");
        if let Some(c) = guard.as_ref() {
            return Ok(c.clone());
        }
    }
    let u = crate::form::q_and_form_universe(4, "a");
    let f = crate::form::generic_form(4, &u, "a")?;
    let det = det3(&conic_matrix(&f, &u)?);
    let (_, b) = quartic_covariants(&f)?;
    // Read the ratio off any term of B, then insist it matches everywhere.
    let (exps, b_coeff) = b
        .terms()
        .next()
        .map(|(e, c)| (e.clone(), c.clone()))
        .ok_or_else(|| Error::Internal("symbolic B vanished".to_string()))?;
    let det_coeff = det.coefficient(&exps);
    if b_coeff.is_zero() {
        return Err(Error::Internal("zero coefficient in symbolic B".to_string()));
    }
    let c = det_coeff / b_coeff;
    if c.is_zero() || !det.sub_ref(&b.scale(&c)).is_zero() {
        return Err(Error::Internal(
            "conic determinant is not a fixed multiple of B".to_string(),
        ));
    }
    *CATALECTICANT_RATIO
        .lock()
        .expect("catalecticant cache poisoned") = Some(c.clone());
    Ok(c)
}

/// The determinant of the symmetric 3×3 matrix of the conic (Q²,F)₄ for a
/// rational order-4 form. The result is checked on every call to equal the
/// fixed constant times B_F = (F,(F,F)₂)₄.
pub fn quartic_centre_discriminant(f: &BinaryForm<Rational>) -> Result<Rational> {
    if f.order() != 4 {
        return Err(Error::Range(format!(
            "the centre discriminant needs an order-4 form, got order {}",
            f.order()
        )));
    }
    let u = q_universe();
    let fq = embed_form(f, &u);
    let det_poly = det3(&conic_matrix(&fq, &u)?);
    let det = det_poly
        .constant_value()
        .ok_or_else(|| Error::Internal("conic determinant is not constant".to_string()))?;
    let (_, b) = quartic_covariants(f)?;
    let c = catalecticant_ratio()?;
    if det != c.clone() * b {
        return Err(Error::Internal(
            "conic determinant deviates from the fixed multiple of B".to_string(),
        ));
    }
    Ok(det)
}

/// The planar cubic (Q³,F)₆ in q₀,q₁,q₂ attached to a rational order-6
/// form.
pub fn sextic_cubic_curve(f: &BinaryForm<Rational>) -> Result<MultiPoly> {
    if f.order() != 6 {
        return Err(Error::Range(format!(
            "the cubic curve needs an order-6 form, got order {}",
            f.order()
        )));
    }
    let u = q_universe();
    let fq = embed_form(f, &u);
    let q = symbolic_quadratic(&u)?;
    Ok(transvectant(&q.pow(3), &fq, 6)?.raw()[0].clone())
}
