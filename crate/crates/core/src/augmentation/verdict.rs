use serde::Serialize;

use super::checks::{check_property_a, check_property_b, PropertyAReport, PropertyBReport};
use super::family::FormFamily;
use super::model::AugmentationModel;
use crate::bilinear::{is_hr_wrt, Signature};
use crate::error::{Error, Result};
use crate::json::rational_opt;
use crate::rational::{rat, Rational};

/// `NotApplicable` when a hypothesis fails. `Inconsistent` means the
/// hypotheses hold and the conclusion does not, which is always a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Consistent,
    Inconsistent,
    NotApplicable,
}

impl Outcome {
    pub fn from_flags(hypotheses: bool, conclusion: bool) -> Self {
        match (hypotheses, conclusion) {
            (false, _) => Outcome::NotApplicable,
            (true, true) => Outcome::Consistent,
            (true, false) => Outcome::Inconsistent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Aug1Verdict {
    pub property_a: PropertyAReport,
    pub derivative_signature: Signature,
    pub derivative_hr: bool,
    pub hypotheses: bool,
    pub r0_signature: Signature,
    pub conclusion: bool,
    pub outcome: Outcome,
}

/// Hypotheses: property (A) and `R′_0` Hodge-Riemann w.r.t. `h`.
/// Conclusion: `R_0` Hodge-Riemann w.r.t. `h`.
pub fn verify_augmentation1(
    f: &FormFamily,
    h: &[Rational],
    zeta: usize,
    t_samples: &[Rational],
) -> Aug1Verdict {
    let property_a = check_property_a(f, h, zeta, t_samples);
    let dr0 = f.derivative().eval(&rat(0));
    let r0 = f.eval(&rat(0));
    let derivative_hr = is_hr_wrt(&dr0, h);
    let hypotheses = property_a.passed() && derivative_hr;
    let conclusion = is_hr_wrt(&r0, h);
    Aug1Verdict {
        property_a,
        derivative_signature: dr0.signature(),
        derivative_hr,
        hypotheses,
        r0_signature: r0.signature(),
        conclusion,
        outcome: Outcome::from_flags(hypotheses, conclusion),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecursionStep {
    pub i: usize,
    pub property_a: PropertyAReport,
    /// `C_i = d − i + 1`.
    pub c_i: usize,
    /// `R′_{i,0} = C_i R_{i−1,0}` exactly.
    pub derivative_identity: bool,
    pub signature: Signature,
    pub hr: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecursionVerdict {
    pub j: usize,
    pub steps: Vec<RecursionStep>,
    pub h1_property_a: bool,
    pub h2_derivative_identity: bool,
    pub h3_r1_vanishes_on_w: bool,
    pub h4_r2_hr_on_w: bool,
    pub r2_w_signature: Signature,
    #[serde(with = "rational_opt")]
    pub c_r2: Option<Rational>,
    pub h5_c_r2_nonzero: bool,
    pub hypotheses: bool,
    pub conclusion: bool,
    pub outcome: Outcome,
}

/// Hypotheses (1)–(5) of the recursive augmentation for `R_2, …, R_j`, then
/// the conclusion that each `R_{i,0}` is Hodge-Riemann w.r.t. `h`.
pub fn verify_recursion(
    model: &AugmentationModel,
    j: usize,
    t_samples: &[Rational],
) -> Result<RecursionVerdict> {
    let d = model.d();
    if j < 2 || j + 1 > d {
        return Err(Error::OutOfRange(format!("j = {j} (need 2 ≤ j ≤ d − 1 = {})", d as i64 - 1)));
    }
    let space = model.space();
    let h = space.h_vector();
    let zeta = space.zeta_index();
    let zero = rat(0);
    let w: Vec<usize> = (0..zeta).collect();
    let h_w = &h[..zeta];

    let steps: Vec<RecursionStep> = (2..=j)
        .map(|i| {
            let f = model.r_family(i as i64);
            let r0 = f.eval(&zero);
            let c_i = d - i + 1;
            let prev = model.r_family(i as i64 - 1).eval(&zero);
            RecursionStep {
                i,
                property_a: check_property_a(&f, &h, zeta, t_samples),
                c_i,
                derivative_identity: f.derivative().eval(&zero) == prev.scale(&rat(c_i as i64)),
                signature: r0.signature(),
                hr: is_hr_wrt(&r0, &h),
            }
        })
        .collect();

    let r1_w = model.r_family(1).eval(&zero).restrict_indices(&w, "W");
    let r2_w = model.r_family(2).eval(&zero).restrict_indices(&w, "W");
    let c_r2 = steps[0].property_a.a4_constant.clone();

    let h1 = steps.iter().all(|s| s.property_a.passed());
    let h2 = steps.iter().all(|s| s.derivative_identity);
    let h3 = r1_w.is_zero();
    let h4 = is_hr_wrt(&r2_w, h_w);
    let h5 = c_r2.as_ref().is_some_and(|c| *c != zero);
    let hypotheses = h1 && h2 && h3 && h4 && h5;
    let conclusion = steps.iter().all(|s| s.hr);
    Ok(RecursionVerdict {
        j,
        h1_property_a: h1,
        h2_derivative_identity: h2,
        h3_r1_vanishes_on_w: h3,
        h4_r2_hr_on_w: h4,
        r2_w_signature: r2_w.signature(),
        c_r2,
        h5_c_r2_nonzero: h5,
        hypotheses,
        conclusion,
        outcome: Outcome::from_flags(hypotheses, conclusion),
        steps,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Aug2Verdict {
    pub property_b: PropertyBReport,
    /// `R″_0 = 2 R_{d−2,0}`; only checked when the family comes from a model.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_derivative_identity: Option<bool>,
    pub second_derivative_signature: Signature,
    pub second_derivative_hr: bool,
    pub hypotheses: bool,
    pub restricted_signature: Signature,
    pub conclusion: bool,
    pub outcome: Outcome,
}

/// Hypotheses: property (B) and `R″_0` Hodge-Riemann w.r.t. `h`.
/// Conclusion: `R_0|_W` Hodge-Riemann w.r.t. `h`, where `W` omits `ζ`.
pub fn verify_augmentation2_family(
    f: &FormFamily,
    h: &[Rational],
    zeta: usize,
    t_samples: &[Rational],
) -> Aug2Verdict {
    let property_b = check_property_b(f, h, zeta, t_samples);
    let dd = f.derivative().derivative().eval(&rat(0));
    let second_derivative_hr = is_hr_wrt(&dd, h);
    let w: Vec<usize> = (0..f.dim()).filter(|&k| k != zeta).collect();
    let h_w: Vec<Rational> = w.iter().map(|&k| h[k].clone()).collect();
    let r0_w = f.eval(&rat(0)).restrict_indices(&w, "W");
    let hypotheses = property_b.passed() && second_derivative_hr;
    let conclusion = is_hr_wrt(&r0_w, &h_w);
    Aug2Verdict {
        property_b,
        second_derivative_identity: None,
        second_derivative_signature: dd.signature(),
        second_derivative_hr,
        hypotheses,
        restricted_signature: r0_w.signature(),
        conclusion,
        outcome: Outcome::from_flags(hypotheses, conclusion),
    }
}

/// [`verify_augmentation2_family`] for `R_{d,t}`, also checking `R″_0 = 2 R_{d−2,0}`.
pub fn verify_augmentation2(model: &AugmentationModel, t_samples: &[Rational]) -> Aug2Verdict {
    let d = model.d() as i64;
    let space = model.space();
    let f = model.r_family(d);
    let mut v = verify_augmentation2_family(&f, &space.h_vector(), space.zeta_index(), t_samples);
    let dd = f.derivative().derivative().eval(&rat(0));
    let identity = dd == model.r_family(d - 2).eval(&rat(0)).scale(&rat(2));
    v.second_derivative_identity = Some(identity);
    v.hypotheses &= identity;
    v.outcome = Outcome::from_flags(v.hypotheses, v.conclusion);
    v
}
