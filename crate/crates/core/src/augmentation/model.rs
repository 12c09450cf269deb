use std::sync::OnceLock;

use num_traits::Zero;

use super::family::FormFamily;
use super::space::AugmentedSpace;
use super::zeta::ZetaForm;
use crate::bilinear::{gram, SymBilinearForm};
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::rational::{binomial, Rational};
use crate::ring::CommutativeRing;
use crate::symfunc::{derived_schur_all, schur, Partition};

/// The forms `Q_i` and families `R_{i,t}` for one `(space, λ)` pair, with
/// each `Q_i` computed at most once.
#[derive(Debug)]
pub struct AugmentationModel {
    space: AugmentedSpace,
    lambda: Partition,
    derived: Vec<Form>,
    h_pows: Vec<Form>,
    q_cache: Vec<OnceLock<SymBilinearForm>>,
}

impl AugmentationModel {
    /// Requires `|λ| = d − 2`.
    pub fn new(space: AugmentedSpace, lambda: Partition) -> Result<Self> {
        let d = space.d();
        if d < 2 || lambda.weight() != d - 2 {
            return Err(Error::InvalidPartition(format!(
                "{lambda:?} has weight {}, expected d − 2 = {}",
                lambda.weight(),
                d as i64 - 2
            )));
        }
        let derived = derived_schur_all(&lambda, space.omega_forms())?;
        let h_pows = (0..=d).map(|k| space.h_form().pow(k)).collect();
        Ok(Self {
            derived,
            h_pows,
            q_cache: (0..=d).map(|_| OnceLock::new()).collect(),
            space,
            lambda,
        })
    }

    pub fn space(&self) -> &AugmentedSpace {
        &self.space
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn d(&self) -> usize {
        self.space.d()
    }

    /// `s_λ^{(j)}(ω)`, zero outside `0..=|λ|` (including negative `j`).
    fn derived(&self, j: i64) -> Form {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.derived.get(j).cloned())
            .unwrap_or_else(|| Form::zero(self.d()).expect("validated"))
    }

    fn zero_form(&self) -> SymBilinearForm {
        SymBilinearForm::zero(self.space.tag(), self.space.dim())
    }

    /// `Q_i` on `V` by the three-case formula; zero for `i ∉ [0, d]`.
    pub fn qi(&self, i: i64) -> SymBilinearForm {
        let d = self.d() as i64;
        if !(0..=d).contains(&i) {
            return self.zero_form();
        }
        self.q_cache[i as usize]
            .get_or_init(|| self.compute_qi(i as usize))
            .clone()
    }

    fn compute_qi(&self, i: usize) -> SymBilinearForm {
        let d = self.d();
        let hp = &self.h_pows[d - i];
        let k = (d - i) as i64;
        let ww = gram(&self.derived(k).wedge_unchecked(hp)).expect("real (d−2,d−2) form");
        let wz_form = self.derived(k - 1).wedge_unchecked(hp);
        let zz = self.derived(k - 2).wedge_unchecked(hp);

        let n = self.space.dim();
        let z = self.space.zeta_index();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for (a, row) in ww.matrix().iter().enumerate() {
            g[a][..z].clone_from_slice(row);
        }
        for (a, alpha) in self.space.w_basis().iter().enumerate() {
            let v = top(&alpha.wedge_unchecked(&wz_form));
            g[a][z] = v.clone();
            g[z][a] = v;
        }
        g[z][z] = top(&zz);
        SymBilinearForm::new(self.space.tag(), g).expect("symmetric by construction")
    }

    /// `Q_i` by expanding `β s_λ(ω + ζ) ζ^i h^{d−i} β′` in the truncated ring
    /// and integrating.
    pub fn qi_product(&self, i: i64) -> SymBilinearForm {
        let d = self.d();
        if !(0..=d as i64).contains(&i) {
            return self.zero_form();
        }
        let i = i as usize;
        let hats: Vec<ZetaForm> = self
            .space
            .omega_forms()
            .iter()
            .map(|w| ZetaForm::constant(w.clone()).add(&ZetaForm::zeta_pow(d, 1)))
            .collect();
        let s = schur(&self.lambda, &hats).expect("non-empty inputs");
        let p = s
            .mul(&ZetaForm::zeta_pow(d, i))
            .mul(&ZetaForm::constant(self.h_pows[d - i].clone()));

        let basis: Vec<ZetaForm> = self
            .space
            .w_basis()
            .iter()
            .map(|a| ZetaForm::constant(a.clone()))
            .chain(std::iter::once(ZetaForm::zeta_pow(d, 1)))
            .collect();
        let n = basis.len();
        let left: Vec<ZetaForm> = basis.iter().map(|b| b.mul(&p)).collect();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for a in 0..n {
            for b in a..n {
                let v = left[a].mul(&basis[b]).integrate().expect("real top form");
                g[b][a] = v.clone();
                g[a][b] = v;
            }
        }
        SymBilinearForm::new(self.space.tag(), g).expect("symmetric by construction")
    }

    /// `R_{i,t} = Σ_{k=0}^{i} binom(d−i+k, k) t^k Q_{i−k}`; zero outside `[0, d]`.
    pub fn r_family(&self, i: i64) -> FormFamily {
        let d = self.d() as i64;
        if !(0..=d).contains(&i) {
            return FormFamily::constant(self.zero_form());
        }
        let coeffs = (0..=i)
            .map(|k| {
                let c = Rational::from_integer(binomial(d - i + k, k));
                self.qi(i - k).scale(&c)
            })
            .collect();
        FormFamily::new(coeffs).expect("shared basis")
    }
}

fn top(f: &Form) -> Rational {
    if f.is_zero() {
        Rational::zero()
    } else {
        f.top_ratio().expect("real top form")
    }
}

pub fn build_qi(space: &AugmentedSpace, lambda: &Partition, i: i64) -> Result<SymBilinearForm> {
    Ok(AugmentationModel::new(space.clone(), lambda.clone())?.qi(i))
}

pub fn build_qi_product(
    space: &AugmentedSpace,
    lambda: &Partition,
    i: i64,
) -> Result<SymBilinearForm> {
    Ok(AugmentationModel::new(space.clone(), lambda.clone())?.qi_product(i))
}

pub fn build_r(space: &AugmentedSpace, lambda: &Partition, i: i64) -> Result<FormFamily> {
    Ok(AugmentationModel::new(space.clone(), lambda.clone())?.r_family(i))
}
