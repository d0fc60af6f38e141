//! Exact transvectant calculus for binary forms.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals
//! (or sparse polynomials over them), and every identity is checked by
//! symbolic expansion, never numerically.
//!
//! # What this crate computes
//!
//! - **Transvectants** ([`form`]): binary forms of any order over a generic
//!   coefficient ring, the transvectant (A,B)_r, the normalised quadratic
//!   discriminant Δ_Q, unimodular substitutions, and the quartic covariants
//!   A_F, B_F with the j-invariant.
//! - **Recoupling coefficients** ([`recoupling`]): triangle deltas, the
//!   Wigner 6-j symbol in exact `rational·√radicand` form, the rational
//!   tetrahedron Clebsch–Gordan normalisation, the θ_k coefficients that
//!   rewrite (A,(B,C)_r)_s in terms of ((A,B)_k,C)_{r+s−k}, their ω
//!   specialisation to powers of a quadratic, and the triangular transition
//!   matrix G.
//! - **Involutions** ([`involution`]): the maps σ_{Q,z}(F) =
//!   Σ zᵢΔⁱ(Q^{d−2i},F)_{d−2i}, the quadratic system they must satisfy to
//!   square to Δᵈ·id, the closed-form solution z(s) indexed by sign
//!   sequences, full enumeration (2^{⌊d/2⌋+1} involutors per order),
//!   dual-path verification, and canonical monomial bases.
//! - **Centre loci** ([`loci`]): the polynomial conditions in (q₀,q₁,q₂)
//!   under which σ_{Q,z} fixes a given form, the covariants β = (Q²,F)₃ and
//!   λ = (Q³,F)₅ that generate them, the catalecticant determinant check,
//!   and the planar cubic (Q³,F)₆ of a sextic.
//! - **Wire formats and CLI** ([`jsonio`], [`cli`]): deterministic JSON
//!   encodings for forms, polynomials, and coefficient tables, plus the
//!   `binform` binary exposing every operation.
//!
//! # Foundations
//!
//! [`ring`] supplies the rational type, memoized factorials/binomials, and
//! the [`ring::Coeff`] abstraction that lets every algorithm run unchanged
//! over plain rationals or multivariate polynomials; [`poly`] is the sparse
//! polynomial implementation with named-variable universes; [`error`] is the
//! shared error taxonomy (range, validation, triad, degenerate-form, parse,
//! internal).
//!
//! # Example
//!
//! ```
//! use binform::form::{transvectant, BinaryForm};
//! use binform::involution::{geometric_involutor, sigma_apply, z_from_sign};
//! use binform::ring::{rat, rat_int};
//!
//! // F = x₁⁴ + x₂⁴ and Q = x₁x₂.
//! let f = BinaryForm::from_raw(4, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(1)]).unwrap();
//! let q = BinaryForm::from_raw(2, vec![rat_int(0), rat_int(1), rat_int(0)]).unwrap();
//!
//! // The Hessian-type covariant (F,F)₂ of F.
//! let h = transvectant(&f, &f, 2).unwrap();
//! assert_eq!(h.order(), 4);
//!
//! // Applying σ_{Q,z} for the geometric involutor z = (16, 24/7, 1/5)
//! // and squaring recovers Δ_Q⁴ = 1 times F.
//! let z = geometric_involutor(4).unwrap();
//! assert_eq!(z.z()[0], rat_int(16));
//! let once = sigma_apply(&q, &z, &f).unwrap();
//! let twice = sigma_apply(&q, &z, &once).unwrap();
//! assert_eq!(twice, f);
//!
//! // Sign sequences index all involutors; "+-+-+" is the geometric one.
//! let s = "+-+-+".parse().unwrap();
//! assert_eq!(z_from_sign(&s).unwrap().z(), z.z());
//! # let _ = rat(1, 5);
//! ```

pub mod cli;
pub mod error;
pub mod form;
pub mod involution;
pub mod jsonio;
pub mod loci;
pub mod poly;
pub mod recoupling;
pub mod ring;
