//! Positivity cones of real (p,p)-forms, at the levels where membership is
//! decidable exactly.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bilinear::SymBilinearForm;
use crate::error::{Error, Result};
use crate::exterior::{Form, HermitianMatrix, Monomial};
use crate::rational::{GaussianRational, Rational};
use crate::random::{form_10, task_rng, DEFAULT_BOX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Cone {
    Positive,
    StrictlyPositive,
    NotPositive,
    WeaklyPositiveUnfalsified,
    WeaklyPositiveFalsified,
}

/// Outcome of a cone test. `NotPositive` carries a `(d−p,0)`-form `β` with
/// negative pairing; `WeaklyPositiveFalsified` carries the simple form used.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeVerdict {
    pub cone: Cone,
    pub witness: Option<Form>,
}

/// Leading principal minors all positive.
pub fn is_positive_definite_11(h: &HermitianMatrix) -> bool {
    (1..=h.dim()).all(|m| h.leading_minor(m).is_positive())
}

fn subsets(d: usize, q: usize) -> Vec<u16> {
    (0u32..1 << d)
        .filter(|m| m.count_ones() as usize == q)
        .map(|m| m as u16)
        .collect()
}

fn real_pp_degree(eta: &Form) -> usize {
    eta.terms().next().map_or(0, |(m, _)| m.bidegree().0)
}

/// Decides membership in the positive cone through the Hermitian form
/// `β ↦ (η ∧ i^{q²} β ∧ β̄) / vol` on `(q,0)`-forms, `q = d − p`.
/// A zero `η` is treated as a `(0,0)`-form; use [`is_positive_pp_at`] to fix `p`.
pub fn is_positive_pp(eta: &Form) -> Result<ConeVerdict> {
    let p = real_pp_degree(eta);
    is_positive_pp_at(eta, p)
}

pub fn is_positive_pp_at(eta: &Form, p: usize) -> Result<ConeVerdict> {
    let d = eta.dim();
    if p > d {
        return Err(Error::OutOfRange(format!("p = {p} for d = {d}")));
    }
    eta.require_bidegree(p, p)?;
    if !eta.is_real() {
        return Err(Error::NotReal);
    }
    let q = d - p;
    let idx = subsets(d, q);
    let n = idx.len();
    let unit = GaussianRational::i_pow((q * q) as i64);
    // m[j][k] = pairing against dz_K ∧ dz̄_J, so that β ↦ b* m b.
    let mut m = vec![vec![GaussianRational::zero(); n]; n];
    for (j, &mj) in idx.iter().enumerate() {
        for (k, &mk) in idx.iter().enumerate() {
            let g = Form::from_monomial(d, Monomial::new(mk, mj), unit.clone())?;
            m[j][k] = eta.wedge_unchecked(&g).top_ratio_complex()?;
        }
    }
    // Real form of b* m b in coordinates (Re b, Im b).
    let mut r = vec![vec![Rational::zero(); 2 * n]; 2 * n];
    for j in 0..n {
        for k in 0..n {
            let (a, b) = (&m[j][k].re, &m[j][k].im);
            r[j][k] = a.clone();
            r[n + j][n + k] = a.clone();
            r[j][n + k] = -b;
            r[n + j][k] = b.clone();
        }
    }
    let real = SymBilinearForm::new("induced", r)?;
    let diag = real.diagonalize();
    let sig = diag.signature();
    if let Some(v) = diag.negative_vector() {
        let mut beta = Form::zero(d)?;
        for (k, &mk) in idx.iter().enumerate() {
            let c = GaussianRational::new(v[k].clone(), v[n + k].clone());
            if !c.is_zero() {
                beta.add_term(Monomial::new(mk, 0), c);
            }
        }
        return Ok(ConeVerdict {
            cone: Cone::NotPositive,
            witness: Some(beta),
        });
    }
    let cone = if sig.n_zero == 0 {
        Cone::StrictlyPositive
    } else {
        Cone::Positive
    };
    Ok(ConeVerdict { cone, witness: None })
}

/// `i α_1∧ᾱ_1 ∧ … ∧ i α_p∧ᾱ_p` for `(1,0)`-forms `α_j` on `C^d`.
pub fn simple_form(d: usize, alphas: &[Form]) -> Result<Form> {
    let mut out = Form::one(d)?;
    let i = GaussianRational::i();
    for a in alphas {
        if a.dim() != d {
            return Err(Error::DimensionMismatch(d, a.dim()));
        }
        a.require_bidegree(1, 0)?;
        let f = a.wedge_unchecked(&a.conjugate()).scale(&i);
        out = out.wedge_unchecked(&f);
    }
    Ok(out)
}

/// Pairs `η` against random simple forms of the complementary bidegree.
/// `WeaklyPositiveUnfalsified` only means no trial found a negative pairing.
pub fn falsify_weak_positivity(eta: &Form, trials: usize, seed: u64) -> Result<ConeVerdict> {
    let p = real_pp_degree(eta);
    falsify_weak_positivity_at(eta, p, trials, seed)
}

pub fn falsify_weak_positivity_at(
    eta: &Form,
    p: usize,
    trials: usize,
    seed: u64,
) -> Result<ConeVerdict> {
    let d = eta.dim();
    if p > d {
        return Err(Error::OutOfRange(format!("p = {p} for d = {d}")));
    }
    eta.require_bidegree(p, p)?;
    if !eta.is_real() {
        return Err(Error::NotReal);
    }
    let q = d - p;
    let witness = (0..trials as u64).into_par_iter().find_map_first(|t| {
        let mut rng = task_rng(seed, t);
        let alphas: Vec<Form> = (0..q).map(|_| form_10(&mut rng, d, DEFAULT_BOX)).collect();
        let gamma = simple_form(d, &alphas).expect("valid (1,0)-forms");
        let pairing = eta.wedge_unchecked(&gamma).top_ratio().expect("real top form");
        pairing.is_negative().then_some(gamma)
    });
    Ok(match witness {
        Some(g) => ConeVerdict {
            cone: Cone::WeaklyPositiveFalsified,
            witness: Some(g),
        },
        None => ConeVerdict {
            cone: Cone::WeaklyPositiveUnfalsified,
            witness: None,
        },
    })
}
