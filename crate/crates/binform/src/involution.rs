//! Involutions σ_{Q,z} of binary forms: the quadratic system they solve,
//! sign sequences, the closed-form involutor formula, enumeration,
//! verification, and canonical forms.
//!
//! # Key operations
//! - [`build_sys`]: the quadratic system SYS(d) — n equations
//!   Σ α_{i,j}^{(t)} zᵢzⱼ = 0 (t = 2,4,…,2n) plus the norm condition
//!   Σ α_{i,i}^{(0)} zᵢ² = 1, with α_{i,j}^{(t)} = ω(d−2j,d−2i;d−2i,d−2j;t).
//! - [`z_from_sign`]: the closed-form solution z(s) = (E_{1,i}·E_{2,i})ᵢ
//!   attached to a sign sequence s.
//! - [`enumerate_involutors`]: all 2^{n+1} involutors, in a fixed
//!   lexicographic order.
//! - [`sigma_apply`]: σ_{Q,z}(F) = Σ zᵢ Δⁱ (Q^{d−2i},F)_{d−2i}.
//! - [`verify_involutor`]: membership in SYS(d) (fast path) and the fully
//!   symbolic involution identity σ∘σ = Δᵈ·id (gold-standard path); the
//!   symbolic mode runs both and insists they agree.
//! - [`canonical_basis`] / [`canonical_check`]: the monomial support test
//!   for membership in the canonical family attached to a sign sequence.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::{delta, generic_form, symbolic_quadratic, transvectant, BinaryForm};
use crate::poly::MultiPoly;
use crate::recoupling::omega;
use crate::ring::{factorial_rat, format_rational, rat_int, ring_pow, Coeff, Rational};

/// A sign sequence s₀…s_d with the symmetry s_{d−i} = (−1)ᵈ·sᵢ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignSequence {
    d: usize,
    signs: Vec<i8>, // entries ±1
}

impl SignSequence {
    /// Validate and build from all d+1 signs (entries ±1).
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Validation("empty sign sequence".to_string()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Validation(
                "sign sequence entries must be ±1".to_string(),
            ));
        }
        let d = signs.len() - 1;
        let parity = if d % 2 == 0 { 1 } else { -1 };
        for i in 0..=d {
            if signs[d - i] != parity * signs[i] {
                return Err(Error::Validation(format!(
                    "sign sequence violates the symmetry s[d-i] = (-1)^d s[i] at i = {i}"
                )));
            }
        }
        Ok(SignSequence { d, signs })
    }

    /// Complete a sequence from its initial segment s₀…s_n (n = ⌊d/2⌋).
    pub fn from_head(d: usize, head: &[i8]) -> Result<Self> {
        let n = d / 2;
        if head.len() != n + 1 {
            return Err(Error::Validation(format!(
                "initial segment for d = {d} needs {} signs, got {}",
                n + 1,
                head.len()
            )));
        }
        let parity: i8 = if d % 2 == 0 { 1 } else { -1 };
        let mut signs = vec![0i8; d + 1];
        for (i, &s) in head.iter().enumerate() {
            signs[i] = s;
            signs[d - i] = parity * s;
        }
        SignSequence::new(signs)
    }

    /// The distinguished sequence γ with sᵢ = (−1)^{d−i}
    /// ((+,−,…,−,+) for even d; (−,+,…,−,+) for odd d).
    pub fn gamma(d: usize) -> Self {
        let signs = (0..=d)
            .map(|i| if (d - i) % 2 == 0 { 1 } else { -1 })
            .collect();
        SignSequence::new(signs).expect("gamma always satisfies the symmetry")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    /// The flipped sequence −s.
    pub fn negated(&self) -> Self {
        SignSequence {
            d: self.d,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    /// Parse a string of d+1 characters `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Validation(format!(
                    "invalid sign character `{other}` (expected `+` or `-`)"
                ))),
            })
            .collect::<Result<_>>()?;
        SignSequence::new(signs)
    }
}

/// A solution z = (z₀,…,z_n) of SYS(d).
#[derive(Clone, PartialEq, Debug)]
pub struct Involutor {
    d: usize,
    z: Vec<Rational>,
}

impl Involutor {
    /// Build from the order and the n+1 coordinates (length-checked only;
    /// use [`verify_involutor`] to test membership in SYS(d)).
    pub fn from_parts(d: usize, z: Vec<Rational>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Validation("involutors need order d ≥ 1".to_string()));
        }
        let n = d / 2;
        if z.len() != n + 1 {
            return Err(Error::Validation(format!(
                "an involutor for d = {d} needs {} coordinates, got {}",
                n + 1,
                z.len()
            )));
        }
        Ok(Involutor { d, z })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn negated(&self) -> Self {
        Involutor {
            d: self.d,
            z: self.z.iter().map(|v| -v).collect(),
        }
    }
}

/// The quadratic system SYS(d): the α_{i,j}^{(t)} table (stored
/// unsymmetrized, exactly as produced by ω) for 0 ≤ i,j ≤ n and even
/// t ∈ {0,2,…,2n}.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticSystem {
    d: usize,
    n: usize,
    /// alpha[t/2][i][j] = α_{i,j}^{(t)}
    alpha: Vec<Vec<Vec<Rational>>>,
}

impl QuadraticSystem {
    pub fn d(&self) -> usize {
        self.d
    }

    /// n = ⌊d/2⌋; the system has n quadratic equations plus the norm.
    pub fn n(&self) -> usize {
        self.n
    }

    /// α_{i,j}^{(t)} (unsymmetrized).
    pub fn alpha(&self, i: usize, j: usize, t: usize) -> Rational {
        if t % 2 != 0 || t > 2 * self.n || i > self.n || j > self.n {
            return Rational::zero();
        }
        self.alpha[t / 2][i][j].clone()
    }

    /// Collected coefficient of zᵢzⱼ (i ≤ j) in the t-equation:
    /// α_{i,i}^{(t)} on the diagonal, α_{i,j}^{(t)} + α_{j,i}^{(t)} off it.
    pub fn collected(&self, i: usize, j: usize, t: usize) -> Rational {
        assert!(i <= j, "collected coefficients are indexed with i ≤ j");
        if i == j {
            self.alpha(i, i, t)
        } else {
            self.alpha(i, j, t) + self.alpha(j, i, t)
        }
    }

    /// Exact membership test: every equation of SYS(d) holds for z.
    pub fn is_member(&self, z: &[Rational]) -> bool {
        if z.len() != self.n + 1 {
            return false;
        }
        for t_half in 0..=self.n {
            let mut acc = Rational::zero();
            for i in 0..=self.n {
                for j in 0..=self.n {
                    let a = &self.alpha[t_half][i][j];
                    if !a.is_zero() {
                        acc += a * &z[i] * &z[j];
                    }
                }
            }
            let target = if t_half == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            if acc != target {
                return false;
            }
        }
        true
    }

    /// Render the t-equation (t = 0 is the norm condition "... = 1") with
    /// symmetrically collected coefficients.
    pub fn render_equation(&self, t: usize) -> String {
        let mut out = String::new();
        let mut first = true;
        for i in 0..=self.n {
            for j in i..=self.n {
                let c = self.collected(i, j, t);
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                if first {
                    if c.is_negative() {
                        out.push('-');
                    }
                    first = false;
                } else {
                    out.push_str(if c.is_negative() { " - " } else { " + " });
                }
                if !mag.is_one() {
                    out.push_str(&format_rational(&mag));
                    out.push('*');
                }
                if i == j {
                    out.push_str(&format!("z{i}^2"));
                } else {
                    out.push_str(&format!("z{i}*z{j}"));
                }
            }
        }
        if first {
            out.push('0');
        }
        out.push_str(if t == 0 { " = 1" } else { " = 0" });
        out
    }
}

fn require_positive_order(d: usize, what: &str) -> Result<()> {
    if d == 0 {
        Err(Error::Validation(format!("{what} needs order d ≥ 1")))
    } else {
        Ok(())
    }
}

/// The geometric involutor g = (g₀,…,g_n) with
/// gᵢ = 2^{d−2i}·d!(d−i)!(2d−4i+1)! / [i!(d−2i)!²(2d−2i+1)!].
pub fn geometric_involutor(d: usize) -> Result<Involutor> {
    require_positive_order(d, "the geometric involutor")?;
    let n = d / 2;
    let z = (0..=n)
        .map(|i| {
            let num = rat_int(2).pow((d - 2 * i) as i32)
                * factorial_rat(d as u64)
                * factorial_rat((d - i) as u64)
                * factorial_rat((2 * d - 4 * i + 1) as u64);
            let dsq = factorial_rat((d - 2 * i) as u64);
            let den = factorial_rat(i as u64)
                * &dsq
                * &dsq
                * factorial_rat((2 * d - 2 * i + 1) as u64);
            num / den
        })
        .collect();
    Involutor::from_parts(d, z)
}

/// Build SYS(d): α_{i,j}^{(t)} = ω(d−2j, d−2i; d−2i, d−2j; t) for
/// 0 ≤ i,j ≤ n and even 0 ≤ t ≤ 2n.
pub fn build_sys(d: usize) -> Result<QuadraticSystem> {
    require_positive_order(d, "the quadratic system")?;
    let n = d / 2;
    let mut alpha = Vec::with_capacity(n + 1);
    for t_half in 0..=n {
        let t = 2 * t_half;
        let mut layer = vec![vec![Rational::zero(); n + 1]; n + 1];
        for (i, row) in layer.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = omega(d - 2 * j, d - 2 * i, d - 2 * i, d - 2 * j, t as i64, d)?;
            }
        }
        alpha.push(layer);
    }
    Ok(QuadraticSystem { d, n, alpha })
}

/// The closed-form involutor z(s) attached to a sign sequence:
/// zᵢ(s) = E_{1,i}·E_{2,i} with
///
/// E_{1,i} = d!(2d−4i+1)! / [2^{2i−1}(d−2i)!²] and
/// E_{2,i} = Σ s_ℓ·m_ℓ·(−1)^q·(d−2e)!(d−i−e)! /
///           [(2d−2i−2e+1)!(i−e)!p!q!(ℓ−p)!(d−ℓ−q)!]
///
/// summed over 0 ≤ e ≤ i, 0 ≤ ℓ ≤ n, 0 ≤ p ≤ ℓ, 0 ≤ q ≤ d−ℓ with
/// p+q = d−2e, where m_ℓ = ½ when d = 2ℓ and 1 otherwise.
pub fn z_from_sign(s: &SignSequence) -> Result<Involutor> {
    let d = s.d();
    require_positive_order(d, "the involutor formula")?;
    let n = d / 2;
    let mut z = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // E₁ (the 2^{2i−1} denominator is 1/2 at i = 0; keep it rational).
        let two_pow = if i == 0 {
            Rational::new(1.into(), 2.into())
        } else {
            rat_int(2).pow((2 * i - 1) as i32)
        };
        let dsq = factorial_rat((d - 2 * i) as u64);
        let e1 = factorial_rat(d as u64) * factorial_rat((2 * d - 4 * i + 1) as u64)
            / (two_pow * &dsq * &dsq);

        let mut e2 = Rational::zero();
        for e in 0..=i {
            for l in 0..=n {
                let m_l = if d == 2 * l {
                    Rational::new(1.into(), 2.into())
                } else {
                    Rational::one()
                };
                for p in 0..=l {
                    if p > d - 2 * e {
                        continue;
                    }
                    let q = d - 2 * e - p;
                    if q > d - l {
                        continue;
                    }
                    let num = factorial_rat((d - 2 * e) as u64)
                        * factorial_rat((d - i - e) as u64);
                    let den = factorial_rat((2 * d - 2 * i - 2 * e + 1) as u64)
                        * factorial_rat((i - e) as u64)
                        * factorial_rat(p as u64)
                        * factorial_rat(q as u64)
                        * factorial_rat((l - p) as u64)
                        * factorial_rat((d - l - q) as u64);
                    let sign = if q % 2 == 0 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    e2 += rat_int(s.sign(l) as i64) * &m_l * sign * num / den;
                }
            }
        }
        z.push(e1 * e2);
    }
    Involutor::from_parts(d, z)
}

/// All 2^{n+1} sign sequences with their involutors, ordered
/// lexicographically over the initial segment s₀…s_n with `+` before `-`.
pub fn enumerate_involutors(d: usize) -> Result<Vec<(SignSequence, Involutor)>> {
    require_positive_order(d, "involutor enumeration")?;
    let n = d / 2;
    let count: u64 = 1 << (n + 1);
    let mut out = Vec::with_capacity(count as usize);
    for code in 0..count {
        let head: Vec<i8> = (0..=n)
            .map(|i| {
                // Most significant bit is s₀; bit set means '-'.
                if code >> (n - i) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        let s = SignSequence::from_head(d, &head)?;
        let z = z_from_sign(&s)?;
        out.push((s, z));
    }
    Ok(out)
}

/// σ_{Q,z}(F) = Σᵢ zᵢ·Δⁱ·(Q^{d−2i},F)_{d−2i} for an order-2 form Q and an
/// order-d form F matching the involutor's d.
pub fn sigma_apply<R: Coeff>(
    q: &BinaryForm<R>,
    z: &Involutor,
    f: &BinaryForm<R>,
) -> Result<BinaryForm<R>> {
    if q.order() != 2 {
        return Err(Error::Range(format!(
            "sigma needs an order-2 form Q, got order {}",
            q.order()
        )));
    }
    let d = z.d();
    if f.order() != d {
        return Err(Error::Range(format!(
            "involutor is for order {d} but F has order {}",
            f.order()
        )));
    }
    let dq = delta(q)?;
    let mut out = BinaryForm::zero(d);
    for (i, zi) in z.z().iter().enumerate() {
        if zi.is_zero() {
            continue;
        }
        let term = transvectant(&q.pow(d - 2 * i), f, d - 2 * i)?
            .scale(zi)
            .scale_by(&ring_pow(&dq, i));
        out = out.add(&term);
    }
    Ok(out)
}

/// How [`verify_involutor`] does its work.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyMode {
    /// Exact rational membership in SYS(d).
    Fast,
    /// Fully symbolic σ_{Q,z}∘σ_{Q,z} = Δᵈ·id on generic Q and F, plus the
    /// fast path; the two must agree.
    Symbolic,
}

/// Cached symbolic composition tables: for each d, the matrix
/// M[i][j] = Δ^{i+j}·(Q^{d−2j},(Q^{d−2i},F)_{d−2i})_{d−2j} over generic
/// Q = (q₀,q₁,q₂) and F = (a₀,…,a_d), so that
/// σ_{Q,z}²(F) = Σ_{i,j} zᵢzⱼ·M[i][j].
static COMPOSITION_TABLES: Mutex<Option<HashMap<usize, Arc<Vec<Vec<BinaryForm<MultiPoly>>>>>>> =
    Mutex::new(None);

fn composition_table(d: usize) -> Result<Arc<Vec<Vec<BinaryForm<MultiPoly>>>>> {
    {
        let guard = COMPOSITION_TABLES.lock().expect("composition cache poisoned");
        if let Some(map) = guard.as_ref() {
            if let Some(table) = map.get(&d) {
                return Ok(table.clone());
            }
        }
    }
    let u = crate::form::q_and_form_universe(d, "a");
    let q = symbolic_quadratic(&u)?;
    let f = generic_form(d, &u, "a")?;
    let dq = delta(&q)?;
    let n = d / 2;
    let inner: Vec<BinaryForm<MultiPoly>> = (0..=n)
        .map(|i| transvectant(&q.pow(d - 2 * i), &f, d - 2 * i))
        .collect::<Result<_>>()?;
    let mut table = Vec::with_capacity(n + 1);
    for (i, fi) in inner.iter().enumerate() {
        let mut row = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let outer = transvectant(&q.pow(d - 2 * j), fi, d - 2 * j)?;
            row.push(outer.scale_by(&ring_pow(&dq, i + j)));
        }
        table.push(row);
    }
    let table = Arc::new(table);
    let mut guard = COMPOSITION_TABLES.lock().expect("composition cache poisoned");
    guard
        .get_or_insert_with(HashMap::new)
        .insert(d, table.clone());
    Ok(table)
}

/// True iff z actually is an involutor.
///
/// [`VerifyMode::Fast`] plugs z into SYS(d). [`VerifyMode::Symbolic`]
/// additionally checks σ_{Q,z}(σ_{Q,z}(F)) = Δᵈ·F for fully symbolic Q and
/// F, and errors if the two paths ever disagree.
pub fn verify_involutor(z: &Involutor, mode: VerifyMode) -> Result<bool> {
    let sys = build_sys(z.d())?;
    let fast = sys.is_member(z.z());
    if mode == VerifyMode::Fast {
        return Ok(fast);
    }
    let d = z.d();
    let table = composition_table(d)?;
    let u = crate::form::q_and_form_universe(d, "a");
    let q = symbolic_quadratic(&u)?;
    let f = generic_form(d, &u, "a")?;
    let dq = delta(&q)?;
    let mut sigma2 = BinaryForm::zero(d);
    for (i, zi) in z.z().iter().enumerate() {
        if zi.is_zero() {
            continue;
        }
        for (j, zj) in z.z().iter().enumerate() {
            if zj.is_zero() {
                continue;
            }
            sigma2 = sigma2.add(&table[i][j].scale(&(zi * zj)));
        }
    }
    let symbolic = sigma2.sub(&f.scale_by(&ring_pow(&dq, d))).is_zero();
    if fast != symbolic {
        return Err(Error::Internal(format!(
            "involutor verification paths disagree for z = {:?}: membership {fast}, symbolic {symbolic}",
            z.z()
        )));
    }
    Ok(symbolic)
}

/// The product form σ_Q(ℓ₁⋯ℓ_d) = 2ᵈ·Π (Q,ℓᵢ)₁ for a nonempty list of
/// order-1 factors.
pub fn sigma_product_form<R: Coeff>(
    q: &BinaryForm<R>,
    factors: &[BinaryForm<R>],
) -> Result<BinaryForm<R>> {
    if q.order() != 2 {
        return Err(Error::Range(format!(
            "sigma needs an order-2 form Q, got order {}",
            q.order()
        )));
    }
    if factors.is_empty() {
        return Err(Error::Range(
            "the product form needs at least one linear factor".to_string(),
        ));
    }
    let mut out = BinaryForm::constant(R::one());
    for l in factors {
        if l.order() != 1 {
            return Err(Error::Range(format!(
                "product-form factors must have order 1, got order {}",
                l.order()
            )));
        }
        out = out.mul(&transvectant(q, l, 1)?);
    }
    Ok(out.scale(&rat_int(2).pow(factors.len() as i32)))
}

/// The monomials x₁^{d−i}x₂^i with sᵢ = +1 (first) and sᵢ = −1 (second),
/// as (x₁-exponent, x₂-exponent) pairs.
pub fn canonical_basis(s: &SignSequence) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let d = s.d();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..=d {
        if s.sign(i) > 0 {
            plus.push((d - i, i));
        } else {
            minus.push((d - i, i));
        }
    }
    (plus, minus)
}

/// Membership of F in the canonical family of s: for even d, F must be
/// supported on the plus-monomials; for odd d, on the plus-monomials or on
/// the minus-monomials.
pub fn canonical_check(s: &SignSequence, f: &BinaryForm<Rational>) -> Result<bool> {
    let d = s.d();
    if f.order() != d {
        return Err(Error::Range(format!(
            "sign sequence is for order {d} but F has order {}",
            f.order()
        )));
    }
    let support: Vec<usize> = (0..=d).filter(|&i| !f.raw()[i].is_zero()).collect();
    let in_plus = support.iter().all(|&i| s.sign(i) > 0);
    if d % 2 == 0 {
        Ok(in_plus)
    } else {
        let in_minus = support.iter().all(|&i| s.sign(i) < 0);
        Ok(in_plus || in_minus)
    }
}
