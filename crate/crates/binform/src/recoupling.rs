//! Exact recoupling coefficients for transvectant calculus.
//!
//! # Key operations
//! - [`triangle_delta_sq`]: squared triangle factor
//!   Δ(a,b,c)² = (a+b−c)!(a+c−b)!(b+c−a)!/(a+b+c+1)!.
//! - [`racah_6j`]: the Wigner 6-j symbol as an exact
//!   [`SqrtRational`] (Racah single-sum × √(product of four Δ²)).
//! - [`tetra_cg`]: the Clebsch–Gordan normalisation of the tetrahedron
//!   graph, an exact rational.
//! - [`tetra_normalisation_factor`], [`alpha_tilde`]: the companion scalar
//!   factor and recoupling coefficient whose product with (2J+1) reproduces
//!   [`tetra_cg`] (the square roots cancel exactly).
//! - [`theta_coefficients`]: θ_k in the expansion
//!   (A,(B,C)_r)_s = Σ_k θ_k ((A,B)_k,C)_{r+s−k}.
//! - [`omega`], [`expand_compound`]: ω(a,b;r,s;t) in the expansion
//!   (Qᵃ,(Qᵇ,F)_r)_s = Σ_t ω·Δ^{(a+b−t)/2}(Qᵗ,F)_{r+s−a−b+t}.
//! - [`transition_g`]: the unitriangular transition matrix G_{i,j} between
//!   the geometric and algebraic coordinates of involutors.
//!
//! # Design notes
//! Half-integers are stored as doubled integers and every factorial argument
//! is checked to be a nonnegative integer before evaluation (a violation is a
//! hard internal error — it indicates a triad-bookkeeping bug, not bad user
//! input). The two P₁/P₂/P₃ factor families that appear here (inside
//! [`alpha_tilde`] and inside [`omega`]) are unrelated; they are named
//! `alpha_tilde_p*` and `omega_p*` to keep them apart. ω and θ results are
//! memoized per parameter tuple since coefficient generation dominates the
//! cost of building involution systems.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{factorial, factorial_opt, sqrt_exact, Rational};

/// A nonnegative half-integer j, stored as 2j.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    twice: u32,
}

impl HalfInt {
    /// Build from the doubled value (2j).
    pub fn from_twice(twice: u32) -> Self {
        HalfInt { twice }
    }

    /// Build from an integer j.
    pub fn from_int(j: u32) -> Self {
        HalfInt { twice: 2 * j }
    }

    /// The doubled value 2j.
    pub fn twice(&self) -> u32 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"j"` for integers and `"n/2"` for proper half-integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(Error::Parse(format!(
                    "half-integer `{s}` must have denominator 2"
                )));
            }
            let n: u32 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid half-integer numerator in `{s}`")))?;
            Ok(HalfInt::from_twice(n))
        } else {
            let j: u32 = s
                .parse()
                .map_err(|_| Error::Parse(format!("invalid half-integer `{s}`")))?;
            Ok(HalfInt::from_int(j))
        }
    }
}

/// An exact value of the shape `rational_part · √radicand` (radicand ≥ 0).
#[derive(Clone, PartialEq, Debug)]
pub struct SqrtRational {
    rational_part: Rational,
    radicand: Rational,
}

impl SqrtRational {
    /// Build a value `rational_part · √radicand`; the radicand must be ≥ 0.
    pub fn new(rational_part: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Range("negative radicand".to_string()));
        }
        Ok(SqrtRational {
            rational_part,
            radicand,
        })
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    /// The radicand exactly as assembled (square factors are not extracted).
    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() || self.radicand.is_zero()
    }

    /// The exact rational value when the radicand is a perfect square.
    pub fn to_rational(&self) -> Option<Rational> {
        sqrt_exact(&self.radicand).map(|root| &self.rational_part * root)
    }

    /// Product (rational parts multiply, radicands multiply).
    pub fn mul(&self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational {
            rational_part: &self.rational_part * &rhs.rational_part,
            radicand: &self.radicand * &rhs.radicand,
        }
    }

    /// Scale the rational part.
    pub fn scale(&self, k: &Rational) -> SqrtRational {
        SqrtRational {
            rational_part: &self.rational_part * k,
            radicand: self.radicand.clone(),
        }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*sqrt({})",
            crate::ring::format_rational(&self.rational_part),
            crate::ring::format_rational(&self.radicand)
        )
    }
}

/// True when (a,b,c) is a triad: a+b+c is an integer and the triangle
/// inequalities |a−b| ≤ c ≤ a+b hold.
pub fn is_triad(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    triad_integral(a, b, c) && triad_inequalities(a, b, c)
}

fn triad_integral(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a.twice() + b.twice() + c.twice()) % 2 == 0
}

fn triad_inequalities(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    a + b >= c && a + c >= b && b + c >= a
}

/// Factorial of a half-integer combination given as a doubled value; the
/// argument must be an even, nonnegative doubled integer (triads guarantee
/// this — a violation is an internal error).
fn fact_half(twice: i64, context: &str) -> Result<BigInt> {
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "factorial argument {twice}/2 in {context} is not a nonnegative integer"
        )));
    }
    Ok(factorial((twice / 2) as u64))
}

/// Factorial of an integer argument that a correct formula keeps ≥ 0.
fn fact_checked(n: i64, context: &str) -> Result<BigInt> {
    factorial_opt(n).ok_or_else(|| {
        Error::Internal(format!("negative factorial argument {n} in {context}"))
    })
}

fn sign_pow(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Δ(a,b,c)² = (a+b−c)!·(a+c−b)!·(b+c−a)!/(a+b+c+1)! for a triad (a,b,c).
pub fn triangle_delta_sq(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<Rational> {
    if !is_triad(a, b, c) {
        return Err(Error::Triad(format!(
            "({a}, {b}, {c}) is not a triad (integral sum + triangle inequalities required)"
        )));
    }
    let (a2, b2, c2) = (a.twice() as i64, b.twice() as i64, c.twice() as i64);
    let num = fact_half(a2 + b2 - c2, "triangle delta")?
        * fact_half(a2 + c2 - b2, "triangle delta")?
        * fact_half(b2 + c2 - a2, "triangle delta")?;
    let den = fact_half(a2 + b2 + c2 + 2, "triangle delta")?;
    Ok(Rational::new(num, den))
}

/// The four triads of the coupling scheme, in the order
/// (j₁,j₂,j₁₂), (j₂,j₃,j₂₃), (j₁,j₂₃,J), (j₁₂,j₃,J).
fn coupling_triads(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> [(HalfInt, HalfInt, HalfInt); 4] {
    [(j1, j2, j12), (j2, j3, j23), (j1, j23, jtot), (j12, j3, jtot)]
}

/// Doubled triad sums T₁..T₄ and doubled quad sums S₁..S₃ of the scheme.
fn triad_and_quad_sums(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> ([i64; 4], [i64; 3]) {
    let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, j3.twice() as i64);
    let (ab, bc, j) = (j12.twice() as i64, j23.twice() as i64, jtot.twice() as i64);
    let t = [a + b + ab, b + c + bc, a + bc + j, ab + c + j];
    let s = [a + b + c + j, b + ab + bc + j, a + c + ab + bc];
    (t, s)
}

/// Racah's alternating single sum over the doubled triad/quad sums:
/// Σₙ (−1)ⁿ (n+1)! / [∏ᵢ(n−Tᵢ)! ∏ⱼ(Sⱼ−n)!], n from max Tᵢ to min Sⱼ.
fn racah_sum(t2: &[i64; 4], s2: &[i64; 3], context: &str) -> Result<Rational> {
    let lo2 = *t2.iter().max().expect("four triads");
    let hi2 = *s2.iter().min().expect("three quads");
    let mut total = Rational::zero();
    let mut n2 = lo2;
    while n2 <= hi2 {
        let num = fact_half(n2 + 2, context)?;
        let mut den = BigInt::one();
        for &ti in t2 {
            den *= fact_half(n2 - ti, context)?;
        }
        for &sj in s2 {
            den *= fact_half(sj - n2, context)?;
        }
        total += sign_pow(n2 / 2) * Rational::new(num, den);
        n2 += 2;
    }
    Ok(total)
}

/// The Wigner 6-j symbol for the coupling scheme (j₁,j₂)→j₁₂, (j₂,j₃)→j₂₃
/// with total J: rational_part = Racah's alternating sum, radicand = the
/// product of the four Δ² triangle factors (kept unevaluated for exactness).
pub fn racah_6j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<SqrtRational> {
    let mut radicand = Rational::one();
    for (x, y, z) in coupling_triads(j1, j2, j3, j12, j23, jtot) {
        radicand *= triangle_delta_sq(x, y, z)?;
    }
    let (t2, s2) = triad_and_quad_sums(j1, j2, j3, j12, j23, jtot);
    let rational_part = racah_sum(&t2, &s2, "6-j sum")?;
    SqrtRational::new(rational_part, radicand)
}

/// The Clebsch–Gordan normalisation of the tetrahedron graph:
///
/// (−1)^{j₁+j₂+j₃+J} · (𝒱/ℰ) · Σₙ (−1)ⁿ(n+1)!/[∏(n−Tᵢ)! ∏(Sⱼ−n)!]
///
/// where 𝒱 is the product of the twelve vertex factorials (x+y−z)! over the
/// four triads, ℰ = ∏ (2jₑ)! over the six edge labels, and n runs from
/// max Tᵢ to min Sⱼ. An empty summation range yields 0; a parity-violating
/// triad is an error.
pub fn tetra_cg(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<Rational> {
    for (x, y, z) in coupling_triads(j1, j2, j3, j12, j23, jtot) {
        if !triad_integral(x, y, z) {
            return Err(Error::Triad(format!(
                "({x}, {y}, {z}) has a non-integral sum"
            )));
        }
    }
    let (t2, s2) = triad_and_quad_sums(j1, j2, j3, j12, j23, jtot);
    // Empty range ⇔ some triangle inequality fails ⇔ some vertex factorial
    // argument is negative; bail out before evaluating 𝒱.
    if t2.iter().max() > s2.iter().min() {
        return Ok(Rational::zero());
    }
    let mut vertices = BigInt::one();
    for (x, y, z) in coupling_triads(j1, j2, j3, j12, j23, jtot) {
        let (x2, y2, z2) = (x.twice() as i64, y.twice() as i64, z.twice() as i64);
        vertices *= fact_half(x2 + y2 - z2, "tetrahedron vertex")?
            * fact_half(x2 + z2 - y2, "tetrahedron vertex")?
            * fact_half(y2 + z2 - x2, "tetrahedron vertex")?;
    }
    let mut edges = BigInt::one();
    for e in [j1, j2, j3, j12, j23, jtot] {
        edges *= factorial(e.twice() as u64);
    }
    let sum = racah_sum(&t2, &s2, "tetrahedron sum")?;
    let sign = sign_pow((j1.twice() + j2.twice() + j3.twice() + jtot.twice()) as i64 / 2);
    Ok(sign * Rational::new(vertices, edges) * sum)
}

/// The scalar normalisation factor
/// (j₁+j₁₂−j₂)!(j₂+j₁₂−j₁)!(j₁₂+J−j₃)!(j₃+J−j₁₂)! / ∏(2jₑ)!
/// that links [`alpha_tilde`] to [`tetra_cg`].
pub fn tetra_normalisation_factor(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<Rational> {
    for (x, y, z) in coupling_triads(j1, j2, j3, j12, j23, jtot) {
        if !is_triad(x, y, z) {
            return Err(Error::Triad(format!("({x}, {y}, {z}) is not a triad")));
        }
    }
    let p1 = alpha_tilde_p1(j1, j2, j3, j12, j23, jtot)?;
    let mut edges = BigInt::one();
    for e in [j1, j2, j3, j12, j23, jtot] {
        edges *= factorial(e.twice() as u64);
    }
    Ok(p1 / Rational::from_integer(edges))
}

/// P₁ of the α̃ factor family:
/// (j₁+j₁₂−j₂)!(j₂+j₁₂−j₁)!(j₁₂+J−j₃)!(j₃+J−j₁₂)!.
fn alpha_tilde_p1(
    j1: HalfInt,
    j2: HalfInt,
    _j3: HalfInt,
    j12: HalfInt,
    _j23: HalfInt,
    jtot: HalfInt,
) -> Result<Rational> {
    let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, _j3.twice() as i64);
    let (ab, j) = (j12.twice() as i64, jtot.twice() as i64);
    let v = fact_half(a + ab - b, "alpha-tilde P1")?
        * fact_half(b + ab - a, "alpha-tilde P1")?
        * fact_half(ab + j - c, "alpha-tilde P1")?
        * fact_half(c + j - ab, "alpha-tilde P1")?;
    Ok(Rational::from_integer(v))
}

/// P₂ of the α̃ factor family (eight vertex-style factorials).
fn alpha_tilde_p2(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<Rational> {
    let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, j3.twice() as i64);
    let (ab, bc, j) = (j12.twice() as i64, j23.twice() as i64, jtot.twice() as i64);
    let v = fact_half(a + bc - j, "alpha-tilde P2")?
        * fact_half(a + j - bc, "alpha-tilde P2")?
        * fact_half(bc + j - a, "alpha-tilde P2")?
        * fact_half(b + c - bc, "alpha-tilde P2")?
        * fact_half(b + bc - c, "alpha-tilde P2")?
        * fact_half(c + bc - b, "alpha-tilde P2")?
        * fact_half(a + b - ab, "alpha-tilde P2")?
        * fact_half(ab + c - j, "alpha-tilde P2")?;
    Ok(Rational::from_integer(v))
}

/// P₃ of the α̃ factor family (four (T+1)!-style factorials).
fn alpha_tilde_p3(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<Rational> {
    let (a, b, c) = (j1.twice() as i64, j2.twice() as i64, j3.twice() as i64);
    let (ab, bc, j) = (j12.twice() as i64, j23.twice() as i64, jtot.twice() as i64);
    let v = fact_half(a + b + ab + 2, "alpha-tilde P3")?
        * fact_half(b + c + bc + 2, "alpha-tilde P3")?
        * fact_half(a + bc + j + 2, "alpha-tilde P3")?
        * fact_half(ab + c + j + 2, "alpha-tilde P3")?;
    Ok(Rational::from_integer(v))
}

/// The recoupling coefficient
/// α̃ = (−1)^{j₁+j₂+j₃+J} · (2J+1)⁻¹ · √(P₂P₃/P₁) · {6-j},
/// carried exactly as a [`SqrtRational`]. Its radicand always collapses to a
/// perfect square when multiplied out against the 6-j radicand, so
/// (2J+1) · [`tetra_normalisation_factor`] · α̃ is exactly rational and equals
/// [`tetra_cg`].
pub fn alpha_tilde(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j12: HalfInt,
    j23: HalfInt,
    jtot: HalfInt,
) -> Result<SqrtRational> {
    for (x, y, z) in coupling_triads(j1, j2, j3, j12, j23, jtot) {
        if !is_triad(x, y, z) {
            return Err(Error::Triad(format!("({x}, {y}, {z}) is not a triad")));
        }
    }
    let sixj = racah_6j(j1, j2, j3, j12, j23, jtot)?;
    let p1 = alpha_tilde_p1(j1, j2, j3, j12, j23, jtot)?;
    let p2 = alpha_tilde_p2(j1, j2, j3, j12, j23, jtot)?;
    let p3 = alpha_tilde_p3(j1, j2, j3, j12, j23, jtot)?;
    let sign = sign_pow((j1.twice() + j2.twice() + j3.twice() + jtot.twice()) as i64 / 2);
    let inv_dim = Rational::new(BigInt::one(), BigInt::from(jtot.twice() + 1));
    let radical = SqrtRational::new(Rational::one(), p2 * p3 / p1)?;
    Ok(radical.mul(&sixj).scale(&(sign * inv_dim)))
}

/// Exact θ_k coefficients of the recoupling expansion
/// (A,(B,C)_r)_s = Σ_k θ_k ((A,B)_k,C)_{r+s−k}
/// for forms A, B, C of orders a, b, c.
#[derive(Clone, PartialEq, Debug)]
pub struct ThetaTable {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub r: usize,
    pub s: usize,
    coefficients: BTreeMap<usize, Rational>,
}

impl ThetaTable {
    /// θ_k (0 outside the admissible window).
    pub fn theta(&self, k: usize) -> Rational {
        self.coefficients
            .get(&k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The admissible k values with their coefficients, in increasing k.
    pub fn coefficients(&self) -> &BTreeMap<usize, Rational> {
        &self.coefficients
    }
}

static THETA_MEMO: Mutex<Option<HashMap<(usize, usize, usize, usize, usize), ThetaTable>>> =
    Mutex::new(None);

/// θ_k for all admissible k in the expansion of (A,(B,C)_r)_s into
/// ((A,B)_k,C)_{r+s−k}, for orders (a,b,c).
///
/// Requires 0 ≤ r ≤ min(b,c) and 0 ≤ s ≤ min(a, b+c−2r). The admissible
/// window is max(0, r+s−c) ≤ k ≤ min(a, b, r+s, a+b−r−s); θ_k = 0 outside.
pub fn theta_coefficients(a: usize, b: usize, c: usize, r: usize, s: usize) -> Result<ThetaTable> {
    if r > b.min(c) {
        return Err(Error::Range(format!(
            "theta: r = {r} exceeds min(b, c) = {}",
            b.min(c)
        )));
    }
    if s > a.min(b + c - 2 * r) {
        return Err(Error::Range(format!(
            "theta: s = {s} exceeds min(a, b+c-2r) = {}",
            a.min(b + c - 2 * r)
        )));
    }
    {
        let guard = THETA_MEMO.lock().expect("theta memo poisoned");
        if let Some(map) = guard.as_ref() {
            if let Some(table) = map.get(&(a, b, c, r, s)) {
                return Ok(table.clone());
            }
        }
    }
    let (ai, bi, ci, ri, si) = (a as i64, b as i64, c as i64, r as i64, s as i64);
    // T₁ = r!(b−r)!(c−r)!s!(a−s)!(b+c−2r−s)!/(b+c−2r)!
    let t1_num = fact_checked(ri, "theta T1")?
        * fact_checked(bi - ri, "theta T1")?
        * fact_checked(ci - ri, "theta T1")?
        * fact_checked(si, "theta T1")?
        * fact_checked(ai - si, "theta T1")?
        * fact_checked(bi + ci - 2 * ri - si, "theta T1")?;
    let t1 = Rational::new(t1_num, fact_checked(bi + ci - 2 * ri, "theta T1")?);

    let k_lo = 0.max(ri + si - ci);
    let k_hi = ai.min(bi).min(ri + si).min(ai + bi - ri - si);
    let mut coefficients = BTreeMap::new();
    let mut k = k_lo;
    while k <= k_hi {
        // T₂(k): alternating sum over every z with all factorial args ≥ 0.
        let z_lo = (ai + bi - k)
            .max(bi + ci - ri)
            .max(ai + bi + ci - 2 * ri - si)
            .max(ai + bi + ci - ri - si - k);
        let z_hi = (ai + bi + ci - ri - si)
            .min(ai + bi + ci - ri - k)
            .min(ai + 2 * bi + ci - 2 * ri - si - k);
        let mut t2 = Rational::zero();
        let mut z = z_lo;
        while z <= z_hi {
            let num = fact_checked(z + 1, "theta T2")?;
            let den = fact_checked(z - ai - bi + k, "theta T2")?
                * fact_checked(z - bi - ci + ri, "theta T2")?
                * fact_checked(z - ai - bi - ci + 2 * ri + si, "theta T2")?
                * fact_checked(z - ai - bi - ci + ri + si + k, "theta T2")?
                * fact_checked(ai + bi + ci - ri - si - z, "theta T2")?
                * fact_checked(ai + bi + ci - ri - k - z, "theta T2")?
                * fact_checked(ai + 2 * bi + ci - 2 * ri - si - k - z, "theta T2")?;
            t2 += sign_pow(z) * Rational::new(num, den);
            z += 1;
        }
        let theta_k = sign_pow(ai + bi + ci + ri + si)
            * &t1
            * Rational::new(
                fact_checked(ai + bi - 2 * k + 1, "theta assembly")?,
                fact_checked(ai + bi - k + 1, "theta assembly")?
                    * fact_checked(ai + bi + ci - ri - si - k + 1, "theta assembly")?,
            )
            * t2;
        coefficients.insert(k as usize, theta_k);
        k += 1;
    }
    let table = ThetaTable {
        a,
        b,
        c,
        r,
        s,
        coefficients,
    };
    let mut guard = THETA_MEMO.lock().expect("theta memo poisoned");
    guard
        .get_or_insert_with(HashMap::new)
        .insert((a, b, c, r, s), table.clone());
    Ok(table)
}

static OMEGA_MEMO: Mutex<
    Option<HashMap<(usize, usize, usize, usize, i64, usize), Rational>>,
> = Mutex::new(None);

/// The admissible t-window of the ω expansion for (Qᵃ,(Qᵇ,F)_r)_s with F of
/// order d: max(|a+b−r−s|, |a−b|) ≤ t ≤ min(a+b+d−r−s, a+b), t ≡ a+b (mod 2).
fn omega_window(a: i64, b: i64, r: i64, s: i64, d: i64) -> (i64, i64) {
    let lo = (a + b - r - s).abs().max((a - b).abs());
    let hi = (a + b + d - r - s).min(a + b);
    (lo, hi)
}

fn omega_preconditions(a: usize, b: usize, r: usize, s: usize, d: usize) -> Result<()> {
    let (ai, bi, ri, si, di) = (a as i64, b as i64, r as i64, s as i64, d as i64);
    if ri > di.min(2 * bi) {
        return Err(Error::Range(format!(
            "omega: r = {r} exceeds min(d, 2b) = {}",
            di.min(2 * bi)
        )));
    }
    if si > (2 * ai).min(2 * bi + di - 2 * ri) {
        return Err(Error::Range(format!(
            "omega: s = {s} exceeds min(2a, 2b+d-2r) = {}",
            (2 * ai).min(2 * bi + di - 2 * ri)
        )));
    }
    Ok(())
}

/// ω(a,b;r,s;t) for a form F of order d in the expansion
///
/// (Qᵃ,(Qᵇ,F)_r)_s = Σ_t ω(a,b;r,s;t) · Δ^{(a+b−t)/2} · (Qᵗ,F)_{r+s−a−b+t}.
///
/// Returns 0 for t outside the admissible window (wrong parity included);
/// violated preconditions on (r,s) are range errors.
pub fn omega(a: usize, b: usize, r: usize, s: usize, t: i64, d: usize) -> Result<Rational> {
    omega_preconditions(a, b, r, s, d)?;
    let (ai, bi, ri, si, di) = (a as i64, b as i64, r as i64, s as i64, d as i64);
    let (lo, hi) = omega_window(ai, bi, ri, si, di);
    if t < lo || t > hi || (t - ai - bi).rem_euclid(2) != 0 {
        return Ok(Rational::zero());
    }
    {
        let guard = OMEGA_MEMO.lock().expect("omega memo poisoned");
        if let Some(map) = guard.as_ref() {
            if let Some(v) = map.get(&(a, b, r, s, t, d)) {
                return Ok(v.clone());
            }
        }
    }
    // P₁ = a!b!r!s!(d−r)!(2b−r)!(2a−s)!(2b+d−2r−s)! / [(2a)!(2b)!(2b+d−2r)!]
    let p1_num = fact_checked(ai, "omega P1")?
        * fact_checked(bi, "omega P1")?
        * fact_checked(ri, "omega P1")?
        * fact_checked(si, "omega P1")?
        * fact_checked(di - ri, "omega P1")?
        * fact_checked(2 * bi - ri, "omega P1")?
        * fact_checked(2 * ai - si, "omega P1")?
        * fact_checked(2 * bi + di - 2 * ri - si, "omega P1")?;
    let p1_den = fact_checked(2 * ai, "omega P1")?
        * fact_checked(2 * bi, "omega P1")?
        * fact_checked(2 * bi + di - 2 * ri, "omega P1")?;
    let p1 = Rational::new(p1_num, p1_den);

    // P₂ = (2t+1)!((a+b+t)/2)!(a+b−t)!(a−b+t)!(b−a+t)! /
    //      [t!(a+b+t+1)!(a+b+d−r−s+t+1)!((a+b−t)/2)!((a−b+t)/2)!((b−a+t)/2)!]
    let p2_num = fact_checked(2 * t + 1, "omega P2")?
        * fact_checked((ai + bi + t) / 2, "omega P2")?
        * fact_checked(ai + bi - t, "omega P2")?
        * fact_checked(ai - bi + t, "omega P2")?
        * fact_checked(bi - ai + t, "omega P2")?;
    let p2_den = fact_checked(t, "omega P2")?
        * fact_checked(ai + bi + t + 1, "omega P2")?
        * fact_checked(ai + bi + di - ri - si + t + 1, "omega P2")?
        * fact_checked((ai + bi - t) / 2, "omega P2")?
        * fact_checked((ai - bi + t) / 2, "omega P2")?
        * fact_checked((bi - ai + t) / 2, "omega P2")?;
    let p2 = Rational::new(p2_num, p2_den);

    // P₃: alternating z-sum over every z with all factorial arguments ≥ 0.
    let z_lo = (ai + bi + t)
        .max(2 * bi + di - ri)
        .max(2 * ai + 2 * bi + di - 2 * ri - si)
        .max(ai + bi + di - ri - si + t);
    let z_hi = (ai + bi + di - ri + t)
        .min(2 * ai + 2 * bi + di - ri - si)
        .min(ai + 3 * bi + di - 2 * ri - si + t);
    let mut p3 = Rational::zero();
    let mut z = z_lo;
    while z <= z_hi {
        let num = fact_checked(z + 1, "omega P3")?;
        let den = fact_checked(z - ai - bi - t, "omega P3")?
            * fact_checked(z - 2 * bi - di + ri, "omega P3")?
            * fact_checked(z - 2 * ai - 2 * bi - di + 2 * ri + si, "omega P3")?
            * fact_checked(z - ai - bi - di + ri + si - t, "omega P3")?
            * fact_checked(ai + bi + di - ri + t - z, "omega P3")?
            * fact_checked(2 * ai + 2 * bi + di - ri - si - z, "omega P3")?
            * fact_checked(ai + 3 * bi + di - 2 * ri - si + t - z, "omega P3")?;
        p3 += sign_pow(z) * Rational::new(num, den);
        z += 1;
    }

    let value = sign_pow(di + ri + si + (ai + bi - t) / 2) * p1 * p2 * p3;
    let mut guard = OMEGA_MEMO.lock().expect("omega memo poisoned");
    guard
        .get_or_insert_with(HashMap::new)
        .insert((a, b, r, s, t, d), value.clone());
    Ok(value)
}

/// One term of the compound-transvectant expansion: the coefficient together
/// with its companion Δ-power and inner transvectant index.
#[derive(Clone, PartialEq, Debug)]
pub struct CompoundTerm {
    /// ω(a,b;r,s;t)
    pub omega: Rational,
    /// Exponent of Δ in the term: (a+b−t)/2.
    pub delta_power: usize,
    /// Transvectant index of the term: r+s−a−b+t, i.e. (Qᵗ,F) taken that many times.
    pub transvectant_index: usize,
}

/// All nonzero terms of (Qᵃ,(Qᵇ,F)_r)_s = Σ_t ω · Δ^{(a+b−t)/2} · (Qᵗ,F)_{r+s−a−b+t},
/// keyed by t. An empty window yields an empty map.
pub fn expand_compound(
    a: usize,
    b: usize,
    r: usize,
    s: usize,
    d: usize,
) -> Result<BTreeMap<usize, CompoundTerm>> {
    omega_preconditions(a, b, r, s, d)?;
    let (ai, bi, ri, si, di) = (a as i64, b as i64, r as i64, s as i64, d as i64);
    let (lo, hi) = omega_window(ai, bi, ri, si, di);
    let mut t = lo;
    if (t - ai - bi).rem_euclid(2) != 0 {
        t += 1;
    }
    let mut out = BTreeMap::new();
    while t <= hi {
        let w = omega(a, b, r, s, t, d)?;
        if !w.is_zero() {
            out.insert(
                t as usize,
                CompoundTerm {
                    omega: w,
                    delta_power: ((ai + bi - t) / 2) as usize,
                    transvectant_index: (ri + si - ai - bi + t) as usize,
                },
            );
        }
        t += 2;
    }
    Ok(out)
}

/// The unitriangular transition matrix
///
/// G_{i,j} = (d−2i)!(2d−4j+1)!(d−i−j)! / [4^{j−i}(d−2j)!²(2d−2i−2j+1)!(j−i)!]
///
/// for 0 ≤ i ≤ j ≤ ⌊d/2⌋, and 0 for j < i.
pub fn transition_g(i: usize, j: usize, d: usize) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Range("transition matrix needs order d ≥ 1".to_string()));
    }
    let n = d / 2;
    if i > n || j > n {
        return Err(Error::Range(format!(
            "transition matrix indices must lie in 0..={n} for d = {d}, got ({i}, {j})"
        )));
    }
    if j < i {
        return Ok(Rational::zero());
    }
    let (ii, ji, di) = (i as i64, j as i64, d as i64);
    let num = fact_checked(di - 2 * ii, "transition G")?
        * fact_checked(2 * di - 4 * ji + 1, "transition G")?
        * fact_checked(di - ii - ji, "transition G")?;
    let dsq = fact_checked(di - 2 * ji, "transition G")?;
    let den = BigInt::from(4).pow((j - i) as u32)
        * (&dsq * &dsq)
        * fact_checked(2 * di - 2 * ii - 2 * ji + 1, "transition G")?
        * fact_checked(ji - ii, "transition G")?;
    Ok(Rational::new(num, den))
}
