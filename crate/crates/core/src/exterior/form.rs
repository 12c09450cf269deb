use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};


use super::monomial::Monomial;
use super::MAX_DIM;
use crate::error::{Error, Result};
use crate::rational::{GaussianRational, Rational};

/// An element of the complexified exterior algebra on `dz_1..dz_d, dz̄_1..dz̄_d`
/// with exact Gaussian-rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        Err(Error::UnsupportedDimension(d))
    } else {
        Ok(())
    }
}

/// Sign parity of sorting `list` ascending; `None` if an entry repeats.
fn sort_parity(list: &[usize]) -> Option<bool> {
    let mut odd = false;
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if list[i] == list[j] {
                return None;
            }
            if list[i] > list[j] {
                odd = !odd;
            }
        }
    }
    Some(odd)
}

fn mask_of(d: usize, list: &[usize]) -> Result<u16> {
    let mut mask = 0u16;
    for &k in list {
        if k == 0 || k > d {
            return Err(Error::IndexOutOfRange { index: k, dim: d });
        }
        mask |= 1 << (k - 1);
    }
    Ok(mask)
}

/// Coefficient of the canonical top monomial `dz_1∧…∧dz_d∧dz̄_1∧…∧dz̄_d`
/// in `vol = i dz_1∧dz̄_1∧…∧i dz_d∧dz̄_d`: `i^d (−1)^{d(d−1)/2}`.
///
/// Moving `dz̄_k` right past `dz_{k+1}, …, dz_d` costs `d − k` swaps.
pub fn vol_coefficient(d: usize) -> GaussianRational {
    let swaps = d * d.saturating_sub(1) / 2;
    let c = GaussianRational::i_pow(d as i64);
    if swaps % 2 == 1 {
        -c
    } else {
        c
    }
}

impl Form {
    pub fn zero(d: usize) -> Result<Form> {
        check_dim(d)?;
        Ok(Form {
            dim: d,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(d: usize, c: GaussianRational) -> Result<Form> {
        let mut f = Form::zero(d)?;
        f.add_term(Monomial::ONE, c);
        Ok(f)
    }

    pub fn one(d: usize) -> Result<Form> {
        Form::scalar(d, GaussianRational::one())
    }

    pub fn from_rational(d: usize, r: Rational) -> Result<Form> {
        Form::scalar(d, GaussianRational::real(r))
    }

    /// `c · dz_{h[0]}∧…∧dz̄_{a[0]}∧…` with factors in the given order; the
    /// sign of sorting them is absorbed. Repeated indices give zero.
    pub fn from_factors(d: usize, holo: &[usize], anti: &[usize], c: GaussianRational) -> Result<Form> {
        let mut f = Form::zero(d)?;
        let h = mask_of(d, holo)?;
        let a = mask_of(d, anti)?;
        let (Some(ph), Some(pa)) = (sort_parity(holo), sort_parity(anti)) else {
            return Ok(f);
        };
        let c = if ph ^ pa { -c } else { c };
        f.add_term(Monomial::new(h, a), c);
        Ok(f)
    }

    pub fn from_monomial(d: usize, m: Monomial, c: GaussianRational) -> Result<Form> {
        let mut f = Form::zero(d)?;
        if m.max_index() > d {
            return Err(Error::IndexOutOfRange { index: m.max_index(), dim: d });
        }
        f.add_term(m, c);
        Ok(f)
    }

    pub fn dz(d: usize, k: usize) -> Result<Form> {
        Form::from_factors(d, &[k], &[], GaussianRational::one())
    }

    pub fn dzbar(d: usize, k: usize) -> Result<Form> {
        Form::from_factors(d, &[], &[k], GaussianRational::one())
    }

    /// The canonical volume form `i dz_1∧dz̄_1∧…∧i dz_d∧dz̄_d`.
    pub fn vol(d: usize) -> Result<Form> {
        let full = ((1u32 << d) - 1) as u16;
        Form::from_monomial(d, Monomial::new(full, full), vol_coefficient(d))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn same_dim(&self, other: &Form) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.same_dim(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Form) -> Form {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub(crate) fn sub_unchecked(&self, other: &Form) -> Form {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Form {
        self.scale(&-GaussianRational::one())
    }

    pub fn scale(&self, c: &GaussianRational) -> Form {
        let mut out = Form {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(*m, v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Form {
        self.scale(&GaussianRational::real(r.clone()))
    }

    /// Exterior product. Bilinear, associative and graded-commutative.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.same_dim(other)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Form) -> Form {
        let mut out = Form {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((odd, m)) = ma.wedge(mb) {
                    let c = ca * cb;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Form {
        let mut out = Form::one(self.dim).expect("dimension already validated");
        for _ in 0..k {
            out = out.wedge_unchecked(self);
        }
        out
    }

    /// Antilinear involution sending bidegree (p,q) to (q,p).
    pub fn conjugate(&self) -> Form {
        let mut out = Form {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let (odd, mc) = m.conjugate();
            let c = c.conj();
            out.add_term(mc, if odd { -c } else { c });
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// The common bidegree of all terms; `None` if inhomogeneous or zero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// True if every term has bidegree `(p, q)` (vacuously for zero).
    pub fn is_homogeneous(&self, p: usize, q: usize) -> bool {
        self.terms.keys().all(|m| m.bidegree() == (p, q))
    }

    pub(crate) fn require_bidegree(&self, p: usize, q: usize) -> Result<()> {
        if self.is_homogeneous(p, q) {
            Ok(())
        } else {
            let found: Vec<_> = self
                .terms
                .keys()
                .map(Monomial::bidegree)
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            Err(Error::WrongBidegree {
                expected: (p, q),
                found: found.join(" + "),
            })
        }
    }

    /// Projection onto the terms of bidegree `(p, q)`.
    pub fn component(&self, p: usize, q: usize) -> Form {
        Form {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == (p, q))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The complex number `r` with `self = r · vol`, for a `(d,d)`-form.
    pub fn top_ratio_complex(&self) -> Result<GaussianRational> {
        let d = self.dim;
        self.require_bidegree(d, d)?;
        let full = ((1u32 << d) - 1) as u16;
        let c = self.coefficient(&Monomial::new(full, full));
        Ok(&c / &vol_coefficient(d))
    }

    /// The rational `r` with `self = r · vol`, for a real `(d,d)`-form.
    pub fn top_ratio(&self) -> Result<Rational> {
        let r = self.top_ratio_complex()?;
        if !r.is_real() {
            return Err(Error::NotReal);
        }
        Ok(r.re)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}·{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Default for Form {
    fn default() -> Self {
        Form {
            dim: 1,
            terms: BTreeMap::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn wedge_basics() {
        let dz1 = Form::dz(2, 1).unwrap();
        let dzb1 = Form::dzbar(2, 1).unwrap();
        assert!(dz1.wedge(&dz1).unwrap().is_zero());
        let a = dz1.wedge(&dzb1).unwrap();
        let b = dzb1.wedge(&dz1).unwrap();
        assert_eq!(a, b.neg());
        assert_eq!(a, Form::from_factors(2, &[1], &[1], g(1, 0)).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Form::dz(2, 1).unwrap();
        let b = Form::dz(3, 1).unwrap();
        assert_eq!(a.wedge(&b), Err(Error::DimensionMismatch(2, 3)));
        assert!(Form::zero(0).is_err());
        assert!(Form::zero(MAX_DIM + 1).is_err());
        assert!(Form::dz(2, 3).is_err());
    }

    #[test]
    fn from_factors_absorbs_sort_sign() {
        let a = Form::from_factors(3, &[2, 1], &[], g(1, 0)).unwrap();
        let b = Form::from_factors(3, &[1, 2], &[], g(-1, 0)).unwrap();
        assert_eq!(a, b);
        assert!(Form::from_factors(3, &[2, 2], &[], g(1, 0)).unwrap().is_zero());
    }

    #[test]
    fn vol_ratio_is_one() {
        for d in 1..=4 {
            assert_eq!(Form::vol(d).unwrap().top_ratio().unwrap(), rat(1));
        }
    }

    #[test]
    fn top_ratio_errors() {
        let dz1 = Form::dz(1, 1).unwrap();
        assert!(matches!(dz1.top_ratio(), Err(Error::WrongBidegree { .. })));
        let non_real = Form::from_factors(1, &[1], &[1], g(1, 0)).unwrap();
        assert_eq!(non_real.top_ratio(), Err(Error::NotReal));
        assert_eq!(Form::zero(2).unwrap().top_ratio().unwrap(), rat(0));
    }

    #[test]
    fn d1_scaled_generator() {
        let a = Form::from_factors(1, &[1], &[1], g(0, 5)).unwrap();
        assert_eq!(a.top_ratio().unwrap(), rat(5));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Form::dz(2, 1).unwrap().conjugate(), Form::dzbar(2, 1).unwrap());
        let gen = Form::from_factors(2, &[1], &[1], g(0, 1)).unwrap();
        assert_eq!(gen.conjugate(), gen);
        assert!(gen.is_real());
        assert_eq!(gen.bidegree(), Some((1, 1)));
    }
}
