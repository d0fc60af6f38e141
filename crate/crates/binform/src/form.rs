//! Binary forms over an exact coefficient ring and the transvectant calculus.
//!
//! # Key operations
//! - [`BinaryForm`]: a form Σ cᵢ x₁^{m−i} x₂^i stored by raw monomial
//!   coefficients, with a Cayley-coefficient view (aᵢ = cᵢ / C(m,i)).
//! - [`transvectant`]: the r-th transvectant (A,B)_r via the differential
//!   formula with exact rational prefactor.
//! - [`delta`]: the discriminant-type invariant Δ_Q = 4(q₁² − q₀q₂) of an
//!   order-2 form, normalised so Δ_{x₁x₂} = 1.
//! - [`BinaryForm::pow`], [`unimodular_substitute`]: plumbing for powers
//!   Q^k and determinant-1 changes of variables.
//! - [`quartic_covariants`], [`j_invariant`]: A_F = (F,F)₄,
//!   B_F = (F,(F,F)₂)₄ and j = A³/(A³ − 6B²) for order-4 forms.
//! - [`symbolic_quadratic`], [`generic_form`]: forms whose Cayley
//!   coefficients are polynomial symbols — the backbone of every identity
//!   check in this crate.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Universe};
use crate::ring::{binomial_rat, factorial_rat, rat_int, Coeff, Rational};

/// A binary form of fixed order with dense raw monomial coefficients.
///
/// `raw[i]` is the coefficient of x₁^{m−i} x₂^i.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<R: Coeff> {
    order: usize,
    raw: Vec<R>,
}

impl<R: Coeff> BinaryForm<R> {
    /// Build from raw monomial coefficients (length must be order+1).
    pub fn from_raw(order: usize, raw: Vec<R>) -> Result<Self> {
        if raw.len() != order + 1 {
            return Err(Error::Validation(format!(
                "a form of order {order} needs {} coefficients, got {}",
                order + 1,
                raw.len()
            )));
        }
        Ok(BinaryForm { order, raw })
    }

    /// Build from Cayley coefficients aᵢ: raw cᵢ = aᵢ · C(m,i).
    pub fn from_cayley(order: usize, cayley: &[R]) -> Result<Self> {
        if cayley.len() != order + 1 {
            return Err(Error::Validation(format!(
                "a form of order {order} needs {} Cayley coefficients, got {}",
                order + 1,
                cayley.len()
            )));
        }
        let raw = cayley
            .iter()
            .enumerate()
            .map(|(i, a)| a.scale(&binomial_rat(order as u64, i as u64)))
            .collect();
        Ok(BinaryForm { order, raw })
    }

    /// The zero form of the given order.
    pub fn zero(order: usize) -> Self {
        BinaryForm {
            order,
            raw: vec![R::zero(); order + 1],
        }
    }

    /// The form x₁ (order 1).
    pub fn x1() -> Self {
        BinaryForm {
            order: 1,
            raw: vec![R::one(), R::zero()],
        }
    }

    /// The form x₂ (order 1).
    pub fn x2() -> Self {
        BinaryForm {
            order: 1,
            raw: vec![R::zero(), R::one()],
        }
    }

    /// A constant as an order-0 form.
    pub fn constant(value: R) -> Self {
        BinaryForm {
            order: 0,
            raw: vec![value],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw monomial coefficients c₀…c_m.
    pub fn raw(&self) -> &[R] {
        &self.raw
    }

    /// Cayley coefficients aᵢ = cᵢ / C(m,i).
    pub fn cayley(&self) -> Vec<R> {
        self.raw
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.scale(&binomial_rat(self.order as u64, i as u64).recip())
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.raw.iter().all(|c| c.is_zero())
    }

    /// Sum of two forms of the same order (programming error otherwise).
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cannot add forms of different order");
        BinaryForm {
            order: self.order,
            raw: self
                .raw
                .iter()
                .zip(&rhs.raw)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cannot subtract forms of different order");
        BinaryForm {
            order: self.order,
            raw: self
                .raw
                .iter()
                .zip(&rhs.raw)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            order: self.order,
            raw: self.raw.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, k: &Rational) -> Self {
        BinaryForm {
            order: self.order,
            raw: self.raw.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale_by(&self, k: &R) -> Self {
        BinaryForm {
            order: self.order,
            raw: self.raw.iter().map(|c| c.mul_ref(k)).collect(),
        }
    }

    /// Product of two forms (orders add).
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order + rhs.order;
        let mut raw = vec![R::zero(); order + 1];
        for (i, a) in self.raw.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.raw.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = raw[i + j].add_ref(&a.mul_ref(b));
            }
        }
        BinaryForm { order, raw }
    }

    /// k-fold product (k = 0 gives the constant 1).
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = BinaryForm::constant(R::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// ∂/∂x₁ (order drops by one; order must be positive).
    fn dx1(&self) -> Self {
        assert!(self.order > 0, "derivative of an order-0 form");
        let m = self.order;
        let raw = (0..m)
            .map(|i| self.raw[i].scale(&rat_int((m - i) as i64)))
            .collect();
        BinaryForm { order: m - 1, raw }
    }

    /// ∂/∂x₂ (order drops by one; order must be positive).
    fn dx2(&self) -> Self {
        assert!(self.order > 0, "derivative of an order-0 form");
        let m = self.order;
        let raw = (0..m)
            .map(|i| self.raw[i + 1].scale(&rat_int((i + 1) as i64)))
            .collect();
        BinaryForm { order: m - 1, raw }
    }

    /// Mixed partial ∂^{p+q} / ∂x₁^p ∂x₂^q.
    fn mixed_partial(&self, p: usize, q: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..p {
            f = f.dx1();
        }
        for _ in 0..q {
            f = f.dx2();
        }
        f
    }

    /// Evaluate at a point of the coefficient ring.
    pub fn evaluate(&self, x1: &R, x2: &R) -> R {
        let mut total = R::zero();
        for (i, c) in self.raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..(self.order - i) {
                term = term.mul_ref(x1);
            }
            for _ in 0..i {
                term = term.mul_ref(x2);
            }
            total = total.add_ref(&term);
        }
        total
    }
}

/// Renders `c·x₁^{m−i}x₂^i` terms, skipping zero coefficients and eliding
/// unit exponents; polynomial coefficients are parenthesised.
impl<R: Coeff + std::fmt::Display> std::fmt::Display for BinaryForm<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = String::new();
            let p1 = self.order - i;
            if p1 == 1 {
                mono.push_str("x1");
            } else if p1 > 1 {
                mono.push_str(&format!("x1^{p1}"));
            }
            if i >= 1 && !mono.is_empty() {
                mono.push('*');
            }
            if i == 1 {
                mono.push_str("x2");
            } else if i > 1 {
                mono.push_str(&format!("x2^{i}"));
            }
            let cs = c.to_string();
            let mut wrapped = if cs.contains(' ') {
                format!("({cs})")
            } else {
                cs
            };
            // Fold a plain leading minus into the separator.
            if !first {
                if let Some(rest) = wrapped.strip_prefix('-') {
                    write!(f, " - ")?;
                    wrapped = rest.to_string();
                } else {
                    write!(f, " + ")?;
                }
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{wrapped}")?;
            } else if wrapped == "1" {
                write!(f, "{mono}")?;
            } else if wrapped == "-1" {
                write!(f, "-{mono}")?;
            } else {
                write!(f, "{wrapped}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The r-th transvectant
///
/// (A,B)_r = (m−r)!(n−r)!/(m!n!) · Σ_{i=0}^{r} (−1)^i C(r,i)
///           ∂^r A/∂x₁^{r−i}∂x₂^i · ∂^r B/∂x₁^i∂x₂^{r−i},
///
/// an order m+n−2r form. Requires 0 ≤ r ≤ min(m,n).
pub fn transvectant<R: Coeff>(
    a: &BinaryForm<R>,
    b: &BinaryForm<R>,
    r: usize,
) -> Result<BinaryForm<R>> {
    let (m, n) = (a.order(), b.order());
    if r > m.min(n) {
        return Err(Error::Range(format!(
            "transvectant index {r} exceeds min of the orders ({m}, {n})"
        )));
    }
    let mut sum = BinaryForm::zero(m + n - 2 * r);
    for i in 0..=r {
        let da = a.mixed_partial(r - i, i);
        let db = b.mixed_partial(i, r - i);
        let mut term = da.mul(&db).scale(&binomial_rat(r as u64, i as u64));
        if i % 2 == 1 {
            term = term.neg();
        }
        sum = sum.add(&term);
    }
    let prefactor = factorial_rat((m - r) as u64) * factorial_rat((n - r) as u64)
        / (factorial_rat(m as u64) * factorial_rat(n as u64));
    Ok(sum.scale(&prefactor))
}

/// Δ_Q = −2(Q,Q)₂ = 4(q₁² − q₀q₂) for an order-2 form with Cayley
/// coefficients (q₀, q₁, q₂). Normalised so Δ_{x₁x₂} = 1.
pub fn delta<R: Coeff>(q: &BinaryForm<R>) -> Result<R> {
    if q.order() != 2 {
        return Err(Error::Range(format!(
            "delta needs an order-2 form, got order {}",
            q.order()
        )));
    }
    // In raw coefficients c = (c0, c1, c2) with c1 = 2q1: Δ = c1² − 4 c0 c2.
    let c = q.raw();
    Ok(c[1]
        .mul_ref(&c[1])
        .sub_ref(&c[0].mul_ref(&c[2]).scale(&rat_int(4))))
}

/// Compose F with the substitution x₁ → g₀₀x₁ + g₀₁x₂, x₂ → g₁₀x₁ + g₁₁x₂.
/// The matrix must have determinant exactly 1.
pub fn unimodular_substitute<R: Coeff>(
    f: &BinaryForm<R>,
    g: &[[R; 2]; 2],
) -> Result<BinaryForm<R>> {
    let det = g[0][0].mul_ref(&g[1][1]).sub_ref(&g[0][1].mul_ref(&g[1][0]));
    if !det.sub_ref(&R::one()).is_zero() {
        return Err(Error::Validation(
            "substitution matrix must have determinant exactly 1".to_string(),
        ));
    }
    let m = f.order();
    let row0 = BinaryForm::from_raw(1, vec![g[0][0].clone(), g[0][1].clone()])?;
    let row1 = BinaryForm::from_raw(1, vec![g[1][0].clone(), g[1][1].clone()])?;
    let mut out = BinaryForm::zero(m);
    for (i, c) in f.raw().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = row0.pow(m - i).mul(&row1.pow(i)).scale_by(c);
        out = out.add(&term);
    }
    Ok(out)
}

/// The order-4 covariant scalars A_F = (F,F)₄ and B_F = (F,(F,F)₂)₄.
pub fn quartic_covariants<R: Coeff>(f: &BinaryForm<R>) -> Result<(R, R)> {
    if f.order() != 4 {
        return Err(Error::Range(format!(
            "quartic covariants need an order-4 form, got order {}",
            f.order()
        )));
    }
    let a = transvectant(f, f, 4)?.raw()[0].clone();
    let h = transvectant(f, f, 2)?;
    let b = transvectant(f, &h, 4)?.raw()[0].clone();
    Ok((a, b))
}

/// j(F) = A³ / (A³ − 6B²) for an order-4 rational form.
/// A vanishing denominator is reported as a degenerate form.
pub fn j_invariant(f: &BinaryForm<Rational>) -> Result<Rational> {
    let (a, b) = quartic_covariants(f)?;
    let a3 = a.clone() * a.clone() * a;
    let denom = a3.clone() - rat_int(6) * b.clone() * b;
    if num::Zero::is_zero(&denom) {
        return Err(Error::Degenerate(
            "j-invariant denominator A³ − 6B² vanishes".to_string(),
        ));
    }
    Ok(a3 / denom)
}

/// The generic order-2 form with Cayley coefficients q₀, q₁, q₂ drawn as
/// symbols from the given universe (raw coefficients (q₀, 2q₁, q₂)).
pub fn symbolic_quadratic(u: &Universe) -> Result<BinaryForm<MultiPoly>> {
    let q: Vec<MultiPoly> = (0..3)
        .map(|i| MultiPoly::var(u, &format!("q{i}")))
        .collect::<Result<_>>()?;
    BinaryForm::from_cayley(2, &q)
}

/// A generic form of the given order whose Cayley coefficients are the
/// symbols `{prefix}0 … {prefix}{order}` from the given universe.
pub fn generic_form(order: usize, u: &Universe, prefix: &str) -> Result<BinaryForm<MultiPoly>> {
    let a: Vec<MultiPoly> = (0..=order)
        .map(|i| MultiPoly::var(u, &format!("{prefix}{i}")))
        .collect::<Result<_>>()?;
    BinaryForm::from_cayley(order, &a)
}

/// The universe {q0,q1,q2, prefix0..prefixD} used by most symbolic checks.
pub fn q_and_form_universe(order: usize, prefix: &str) -> Universe {
    let mut names: Vec<String> = vec!["q0".into(), "q1".into(), "q2".into()];
    for i in 0..=order {
        names.push(format!("{prefix}{i}"));
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    crate::poly::universe(&refs)
}
