//! Commutative rings that symmetric-function evaluation runs over.
//!
//! Even-degree forms commute under the wedge product, so Schur polynomials of
//! (1,1)-forms can be evaluated with the same code that handles formal
//! polynomials in commuting scalar variables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exterior::Form;
use crate::rational::{rat, Rational};

pub trait CommutativeRing: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    /// Whether two elements live in the same ambient ring (e.g. same form dimension).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    fn pow(&self, k: usize) -> Self {
        let mut out = self.one_like();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// Forms under the wedge product. Commutative only on even-degree elements,
/// which is the only setting symmetric functions are evaluated in.
impl CommutativeRing for Form {
    fn zero_like(&self) -> Self {
        Form::zero(self.dim()).expect("dimension already validated")
    }
    fn one_like(&self) -> Self {
        Form::one(self.dim()).expect("dimension already validated")
    }
    fn add(&self, other: &Self) -> Self {
        self.add_unchecked(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_unchecked(other)
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        self.wedge_unchecked(other)
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_rational(r)
    }
    fn is_zero(&self) -> bool {
        Form::is_zero(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.dim() == other.dim()
    }
    fn pow(&self, k: usize) -> Self {
        Form::pow(self, k)
    }
}

/// Polynomial with rational coefficients in commuting variables `x_0, x_1, …`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim_exponents(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(k: usize) -> Self {
        let mut e = vec![0; k + 1];
        e[k] = 1;
        let mut p = Self::default();
        p.add_term(e, Rational::one());
        p
    }

    /// Exponent vectors (trailing zeros trimmed) with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&trim_exponents(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = trim_exponents(e);
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// True if every coefficient is a non-negative integer.
    pub fn is_monomial_positive(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && *c >= Rational::zero())
    }

    /// Evaluates with `x_k := values[k]` (missing variables are zero).
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &p) in e.iter().enumerate() {
                let v = values.get(k).cloned().unwrap_or_else(Rational::zero);
                for _ in 0..p {
                    t *= &v;
                }
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: String = e
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| **p > 0)
                    .map(|(k, p)| if *p == 1 { format!("x{k}") } else { format!("x{k}^{p}") })
                    .collect::<Vec<_>>()
                    .join("*");
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{vars}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl CommutativeRing for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero()
    }
    fn one_like(&self) -> Self {
        MPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let n = ea.len().max(eb.len());
                let e: Vec<u32> = (0..n)
                    .map(|k| ea.get(k).copied().unwrap_or(0) + eb.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn scale(&self, r: &Rational) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * r);
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Polynomial in one central variable `x` with coefficients in a ring `R`.
///
/// Always holds at least one coefficient so that the zero of `R` is
/// recoverable; trailing zero coefficients beyond the first are trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: CommutativeRing> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "UniPoly needs at least one coefficient");
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c + x`.
    pub fn shifted(c: &R) -> Self {
        Self::new(vec![c.clone(), c.one_like()])
    }

    pub fn coefficient(&self, j: usize) -> R {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Substitutes `x := value`.
    pub fn eval(&self, value: &R) -> R {
        let mut acc = self.coeffs.last().expect("non-empty").clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(value).add(c);
        }
        acc
    }
}

impl<R: CommutativeRing> CommutativeRing for UniPoly<R> {
    fn zero_like(&self) -> Self {
        Self::constant(self.coeffs[0].zero_like())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like())
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k).add(&other.coefficient(k))).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k).sub(&other.coefficient(k))).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                out[a + b] = out[a + b].add(&ca.mul(cb));
            }
        }
        Self::new(out)
    }
    fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CommutativeRing::is_zero)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.coeffs[0].compatible(&other.coeffs[0])
    }
}
