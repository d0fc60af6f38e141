//! Sparse multivariate polynomials over exact rationals.
//!
//! # Key operations
//! - [`MultiPoly`]: sparse exponent-vector → coefficient map with a variable
//!   universe fixed at construction.
//! - Ring arithmetic: [`MultiPoly::add_ref`](crate::ring::Coeff::add_ref),
//!   [`MultiPoly::mul_ref`](crate::ring::Coeff::mul_ref), [`MultiPoly::pow`],
//!   scalar [`MultiPoly::scale`](crate::ring::Coeff::scale).
//! - [`MultiPoly::substitute`]: full evaluation at rational points.
//! - [`MultiPoly::is_zero`](crate::ring::Coeff::is_zero): exact zero test
//!   (the workhorse of every symbolic identity check).
//!
//! # Design notes
//! The variable list is shared behind an `Arc` and its order is canonical for
//! the lifetime of a polynomial. Mixing polynomials from different universes
//! is a programming error and panics, except that constant-valued polynomials
//! (in particular the empty-universe constants produced by
//! [`Coeff::from_rational`]) are promoted automatically. Zero coefficients are
//! never stored, so structural equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{format_rational, Coeff, Rational};

/// Shared, ordered list of variable names.
pub type Universe = Arc<Vec<String>>;

/// Build a variable universe from names. Panics on duplicates (programming
/// error; user-supplied universes are validated at the JSON boundary).
pub fn universe(names: &[&str]) -> Universe {
    let list: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    for (i, a) in list.iter().enumerate() {
        assert!(!a.is_empty(), "empty variable name");
        assert!(
            !list[..i].contains(a),
            "duplicate variable name `{a}` in universe"
        );
    }
    Arc::new(list)
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Universe,
    /// exponent vector (aligned with `vars`) → nonzero coefficient
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Equality is semantic: two polynomials are equal when they have the same
/// terms, matching variables by name, regardless of which universe each one
/// is stored in.
impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.named_terms() == other.named_terms()
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    /// The zero polynomial in the given universe.
    pub fn zero_in(vars: &Universe) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial in the given universe.
    pub fn constant(vars: &Universe, value: Rational) -> Self {
        let mut p = MultiPoly::zero_in(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; vars.len()], value);
        }
        p
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &Universe, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Range(format!("unknown variable `{name}` in universe")))?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = MultiPoly::zero_in(vars);
        p.terms.insert(exps, Rational::one());
        Ok(p)
    }

    /// A single monomial `coeff * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &Universe, exps: &[u32], coeff: Rational) -> Result<Self> {
        if exps.len() != vars.len() {
            return Err(Error::Range(format!(
                "exponent vector length {} does not match universe size {}",
                exps.len(),
                vars.len()
            )));
        }
        let mut p = MultiPoly::zero_in(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        Ok(p)
    }

    /// Build from a list of `(exponents, coefficient)` terms (summing repeats).
    pub fn from_terms(vars: &Universe, terms: &[(&[u32], Rational)]) -> Result<Self> {
        let mut p = MultiPoly::zero_in(vars);
        for (exps, coeff) in terms {
            p = p.add_ref(&MultiPoly::monomial(vars, exps, coeff.clone())?);
        }
        Ok(p)
    }

    /// The variable universe.
    pub fn vars(&self) -> &Universe {
        &self.vars
    }

    /// Iterate terms as `(exponent vector, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `Some(value)` when the polynomial is constant (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (exps, c) = self.terms.iter().next().expect("len checked");
                if exps.iter().all(|&e| e == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms keyed by variable name with zero exponents dropped, as a
    /// universe-independent fingerprint (used by the semantic equality).
    fn named_terms(&self) -> BTreeMap<BTreeMap<&str, u32>, &Rational> {
        self.terms
            .iter()
            .map(|(exps, c)| {
                let key: BTreeMap<&str, u32> = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| (self.vars[i].as_str(), e))
                    .collect();
                (key, c)
            })
            .collect()
    }

    /// Total degree (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Rebuild this polynomial inside a larger universe, matching variables by
    /// name. Fails if a variable that actually occurs is missing there.
    pub fn embed_into(&self, target: &Universe) -> Result<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.iter().enumerate() {
            let occurs = self.terms.keys().any(|e| e[i] > 0);
            match target.iter().position(|v| v == name) {
                Some(idx) => map.push(Some(idx)),
                None if !occurs => map.push(None),
                None => {
                    return Err(Error::Range(format!(
                        "variable `{name}` does not exist in the target universe"
                    )))
                }
            }
        }
        let mut out = MultiPoly::zero_in(target);
        for (exps, c) in &self.terms {
            let mut new_exps = vec![0u32; target.len()];
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    new_exps[map[i].expect("occurring variable mapped")] = e;
                }
            }
            out.terms.insert(new_exps, c.clone());
        }
        Ok(out)
    }

    /// The coefficient of the given monomial in the named variables, as a
    /// polynomial in the remaining variables (same universe, with the named
    /// variables' exponents zeroed out).
    pub fn extract_coefficient(&self, names: &[&str], exps: &[u32]) -> Result<Self> {
        if names.len() != exps.len() {
            return Err(Error::Range(format!(
                "{} variable names but {} exponents",
                names.len(),
                exps.len()
            )));
        }
        let indices: Vec<usize> = names
            .iter()
            .map(|name| {
                self.vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::Range(format!("unknown variable `{name}` in universe")))
            })
            .collect::<Result<_>>()?;
        let mut out = MultiPoly::zero_in(&self.vars);
        'terms: for (term_exps, c) in &self.terms {
            for (&idx, &want) in indices.iter().zip(exps) {
                if term_exps[idx] != want {
                    continue 'terms;
                }
            }
            let mut new_exps = term_exps.clone();
            for &idx in &indices {
                new_exps[idx] = 0;
            }
            out.terms.insert(new_exps, c.clone());
        }
        Ok(out)
    }

    fn unified<'a>(&'a self, rhs: &'a Self) -> (MultiPoly, MultiPoly) {
        if self.vars == rhs.vars {
            return (self.clone(), rhs.clone());
        }
        if let Some(c) = self.constant_value() {
            return (MultiPoly::constant(&rhs.vars, c), rhs.clone());
        }
        if let Some(c) = rhs.constant_value() {
            return (self.clone(), MultiPoly::constant(&self.vars, c));
        }
        panic!(
            "incompatible variable universes: {:?} vs {:?}",
            self.vars, rhs.vars
        );
    }

    /// `self^k` (with `p^0 = 1`).
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::constant(&self.vars, Rational::one());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Evaluate at rational values for the variables.
    ///
    /// Every variable that occurs with a positive exponent must be assigned;
    /// names outside the universe are rejected.
    pub fn substitute(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        for name in values.keys() {
            if !self.vars.iter().any(|v| v == name) {
                return Err(Error::Range(format!(
                    "assignment for `{name}` which is not in the universe"
                )));
            }
        }
        let assigned: Vec<Option<&Rational>> =
            self.vars.iter().map(|v| values.get(v.as_str())).collect();
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = assigned[i].ok_or_else(|| {
                    Error::Range(format!("variable `{}` is unassigned", self.vars[i]))
                })?;
                for _ in 0..e {
                    term *= v;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

impl std::ops::Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl std::ops::Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Zero for MultiPoly {
    /// The zero polynomial in the empty universe (constants promote on use).
    fn zero() -> Self {
        MultiPoly::zero_in(&Arc::new(Vec::new()))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    /// The constant 1 in the empty universe (constants promote on use).
    fn one() -> Self {
        MultiPoly::constant(&Arc::new(Vec::new()), Rational::one())
    }
    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

impl Coeff for MultiPoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.unified(rhs);
        for (exps, c) in b.terms {
            *a.terms.entry(exps).or_insert_with(Rational::zero) += c;
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let (a, b) = self.unified(rhs);
        let mut out = MultiPoly::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                let entry = out.terms.entry(exps).or_insert_with(Rational::zero);
                *entry += prod;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
    fn neg_ref(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return MultiPoly::zero_in(&self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }
    fn from_rational(k: &Rational) -> Self {
        MultiPoly::constant(&Arc::new(Vec::new()), k.clone())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    /// Render as `c*v1^e1*...` terms joined by signs, leading monomials first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(format_rational(&mag));
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
