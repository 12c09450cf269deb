use num_traits::{Signed, Zero};
use serde::Serialize;

use super::family::FormFamily;
use crate::bilinear::{hodge_index_defect, is_weak_hr_wrt, Signature, SymBilinearForm};
use crate::json::{rational_opt, rational_str};
use crate::linalg::unit;
use crate::rational::{rat, ratio, Rational};

/// Sample points for the `|t| ≪ 1` conditions: `0, ±1/100, ±1/10`.
pub fn default_t_samples() -> Vec<Rational> {
    vec![rat(0), ratio(1, 100), ratio(-1, 100), ratio(1, 10), ratio(-1, 10)]
}

/// `S(β) = 2 D(β,h) R(β,h) − D(β) R(h)`. The inequality
/// `D(β) R(h) ≤ 2 D(β,h) R(β,h)` holds for all `β` iff `S` is PSD.
pub fn derivative_inequality_form(
    r: &SymBilinearForm,
    dr: &SymBilinearForm,
    h: &[Rational],
) -> SymBilinearForm {
    let u = dr.apply(h);
    let v = r.apply(h);
    let rh = r.quad(h);
    let n = r.dim();
    let g = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &u[i] * &v[j] + &v[i] * &u[j] - &rh * dr.entry(i, j))
                .collect()
        })
        .collect();
    SymBilinearForm::new("derivative-inequality", g).expect("symmetric by construction")
}

/// Weak Hodge-Riemann verdict of `R_t` at one sample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleVerdict {
    #[serde(with = "rational_str")]
    pub t: Rational,
    pub signature: Signature,
    pub weak_hr: bool,
    pub defect_psd: bool,
    /// Only filled where the check uses it (property B).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inequality_psd: Option<bool>,
}

impl SampleVerdict {
    fn new(r_t: &SymBilinearForm, h: &[Rational], t: &Rational) -> Self {
        Self {
            t: t.clone(),
            signature: r_t.signature(),
            weak_hr: is_weak_hr_wrt(r_t, h),
            defect_psd: hodge_index_defect(r_t, h).is_psd(),
            inequality_psd: None,
        }
    }

    fn weak_ok(&self) -> bool {
        self.weak_hr && self.defect_psd
    }
}

/// Largest sampled `|t|` such that every sample with `|s| ≤ |t|` passes.
fn passing_radius<F: Fn(&SampleVerdict) -> bool>(samples: &[SampleVerdict], ok: F) -> Option<Rational> {
    let mut sorted: Vec<&SampleVerdict> = samples.iter().collect();
    sorted.sort_by(|a, b| a.t.abs().cmp(&b.t.abs()));
    let mut radius = None;
    let mut i = 0;
    while i < sorted.len() {
        let r = sorted[i].t.abs();
        let mut j = i;
        while j < sorted.len() && sorted[j].t.abs() == r {
            if !ok(sorted[j]) {
                return radius;
            }
            j += 1;
        }
        radius = Some(r);
        i = j;
    }
    radius
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyAReport {
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
    pub a4: bool,
    pub a5: bool,
    #[serde(with = "rational_str")]
    pub r0_h: Rational,
    #[serde(with = "rational_str")]
    pub r0_prime_h: Rational,
    #[serde(with = "rational_str")]
    pub r0_zeta_h: Rational,
    /// The `c` in `R′_0(β,ζ) = c R_0(β,h)`; `None` when `R_0(·,h) = 0` leaves it undetermined.
    #[serde(with = "rational_opt")]
    pub a4_constant: Option<Rational>,
    pub samples: Vec<SampleVerdict>,
    #[serde(with = "rational_opt")]
    pub passing_radius: Option<Rational>,
}

impl PropertyAReport {
    pub fn passed(&self) -> bool {
        self.a1 && self.a2 && self.a3 && self.a4 && self.a5
    }

    /// Names of the failing conditions.
    pub fn failures(&self) -> Vec<&'static str> {
        [("A1", self.a1), ("A2", self.a2), ("A3", self.a3), ("A4", self.a4), ("A5", self.a5)]
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect()
    }
}

/// Checks A1–A5 for `F` with anchor `h`; `zeta` is the basis index of `ζ`.
pub fn check_property_a(
    f: &FormFamily,
    h: &[Rational],
    zeta: usize,
    t_samples: &[Rational],
) -> PropertyAReport {
    let n = f.dim();
    let r0 = f.eval(&rat(0));
    let df = f.derivative();
    let dr0 = df.eval(&rat(0));
    let r0_h = r0.quad(h);
    let r0_prime_h = dr0.quad(h);

    let samples: Vec<SampleVerdict> = t_samples
        .iter()
        .map(|t| SampleVerdict::new(&f.eval(t), h, t))
        .collect();

    let a3 = derivative_inequality_form(&r0, &dr0, h).is_psd();

    // R′_0(β, ζ) = c R_0(β, h) over the basis of V.
    let lhs = dr0.apply(&unit(n, zeta));
    let rhs = r0.apply(h);
    let a4_constant = rhs
        .iter()
        .position(|x| !x.is_zero())
        .map(|k| &lhs[k] / &rhs[k]);
    let a4 = match &a4_constant {
        Some(c) => lhs.iter().zip(&rhs).all(|(l, r)| *l == c * r),
        None => lhs.iter().all(Zero::is_zero),
    };

    let r0_zeta_h = r0.eval(&unit(n, zeta), h);
    PropertyAReport {
        a1: r0_h.is_positive() && r0_prime_h.is_positive(),
        a2: samples.iter().all(SampleVerdict::weak_ok),
        a3,
        a4,
        a5: r0_zeta_h.is_positive(),
        passing_radius: passing_radius(&samples, SampleVerdict::weak_ok),
        r0_h,
        r0_prime_h,
        r0_zeta_h,
        a4_constant,
        samples,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyBReport {
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
    pub b4: bool,
    pub b5: bool,
    #[serde(with = "rational_str")]
    pub r0_h: Rational,
    pub samples: Vec<SampleVerdict>,
    #[serde(with = "rational_opt")]
    pub passing_radius: Option<Rational>,
}

impl PropertyBReport {
    pub fn passed(&self) -> bool {
        self.b1 && self.b2 && self.b3 && self.b4 && self.b5
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [("B1", self.b1), ("B2", self.b2), ("B3", self.b3), ("B4", self.b4), ("B5", self.b5)]
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect()
    }
}

/// Checks B1–B5 for `F` with anchor `h`; `zeta` is the basis index of `ζ`
/// and `W` is spanned by the remaining basis vectors.
pub fn check_property_b(
    f: &FormFamily,
    h: &[Rational],
    zeta: usize,
    t_samples: &[Rational],
) -> PropertyBReport {
    let n = f.dim();
    let df = f.derivative();
    let ddf = df.derivative();
    let zero = rat(0);
    let r0 = f.eval(&zero);
    let dr0 = df.eval(&zero);
    let ddr0 = ddf.eval(&zero);
    let r0_h = r0.quad(h);

    let samples: Vec<SampleVerdict> = t_samples
        .iter()
        .map(|t| {
            let r_t = f.eval(t);
            let mut s = SampleVerdict::new(&r_t, h, t);
            s.inequality_psd = Some(derivative_inequality_form(&r_t, &df.eval(t), h).is_psd());
            s
        })
        .collect();
    let ok = |s: &SampleVerdict| s.weak_ok() && s.inequality_psd == Some(true);

    let two = rat(2);
    let ez = unit(n, zeta);
    let dd_z = ddr0.apply(&ez);
    let d_h = dr0.apply(h);
    let b4 = (0..n)
        .filter(|&k| k != zeta)
        .all(|k| dd_z[k] == &two * &d_h[k]);
    let b5 = dd_z[zeta] == &two * &r0_h;

    PropertyBReport {
        b1: r0_h.is_positive(),
        b2: samples.iter().all(SampleVerdict::weak_ok),
        b3: samples.iter().all(|s| s.inequality_psd == Some(true)),
        b4,
        b5,
        passing_radius: passing_radius(&samples, ok),
        r0_h,
        samples,
    }
}
