//! Configuration shared by all commands: validated ranges, fixed or seeded
//! inputs, and the task list.

use std::fs;
use std::path::Path;

use hrlab::exterior::{Form, HermitianMatrix};
use hrlab::positivity::is_positive_definite_11;
use hrlab::random::{positive_forms, task_rng, DEFAULT_BOX};
use hrlab::symfunc::{partitions, Partition};
use serde::{Deserialize, Serialize};

use crate::args::{Common, Span};
use crate::error::{config, CliError};

pub const MAX_D: usize = 8;
pub const MAX_E: usize = 8;

/// Contents of a `--forms` file.
#[derive(Clone, Debug, Deserialize)]
pub struct FixedForms {
    #[serde(default)]
    pub h: Option<Form>,
    pub omegas: Vec<Form>,
}

impl FixedForms {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let f: FixedForms = serde_json::from_str(&text)?;
        let Some(first) = f.omegas.first() else {
            return Err(config("--forms needs at least one omega"));
        };
        let d = first.dim();
        for (k, w) in f.omegas.iter().chain(&f.h).enumerate() {
            if w.dim() != d {
                return Err(config(format!("form {k} has dimension {} but omega 0 has {d}", w.dim())));
            }
            let m = HermitianMatrix::from_form(w)?;
            if !is_positive_definite_11(&m) {
                return Err(config(format!("form {k} is not a strictly positive (1,1)-form")));
            }
        }
        Ok(f)
    }
}

/// Echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub d: Span,
    pub e: Span,
    pub lambda: Option<Partition>,
    pub trials: usize,
    pub seed: Option<u64>,
    pub forms: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Campaign {
    pub settings: Settings,
    pub fixed: Option<FixedForms>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub task: usize,
    pub d: usize,
    pub e: usize,
    pub lambda: Partition,
    pub trial: usize,
    /// False when `λ_1 > e`; such instances are run but nothing is asserted.
    pub in_scope: bool,
}

impl Campaign {
    /// Validates `common` with per-command defaults and a minimum dimension.
    pub fn resolve(common: &Common, default_d: Span, default_e: Span, min_d: usize) -> Result<Self, CliError> {
        let fixed = common.forms.as_deref().map(FixedForms::load).transpose()?;
        let (d, e, trials) = match &fixed {
            Some(f) => {
                let d = Span::single(f.omegas[0].dim());
                let e = Span::single(f.omegas.len());
                if common.d.is_some_and(|x| x != d) || common.e.is_some_and(|x| x != e) {
                    return Err(config(format!("--d/--e disagree with --forms (d = {d}, e = {e})")));
                }
                (d, e, 1)
            }
            None => {
                if common.seed.is_none() {
                    return Err(config("--seed is required for randomized campaigns"));
                }
                (
                    common.d.unwrap_or(default_d),
                    common.e.unwrap_or(default_e),
                    common.trials.unwrap_or(5),
                )
            }
        };
        if d.lo < min_d || d.hi > MAX_D {
            return Err(config(format!("d = {d} outside {min_d}..{MAX_D}")));
        }
        if e.lo < 1 || e.hi > MAX_E {
            return Err(config(format!("e = {e} outside 1..{MAX_E}")));
        }
        if trials == 0 {
            return Err(config("--trials must be positive"));
        }
        Ok(Self {
            settings: Settings {
                d,
                e,
                lambda: common.lambda.clone(),
                trials,
                seed: common.seed,
                forms: common.forms.as_ref().map(|p| p.display().to_string()),
            },
            fixed,
        })
    }

    /// One task per `(d, e, λ, trial)` with `|λ| = d − 2`. Without `--lambda`
    /// only `λ_1 ≤ e` is enumerated; an explicit `λ` with `λ_1 > e` is kept
    /// and marked out of scope.
    pub fn instances(&self) -> Result<Vec<Instance>, CliError> {
        let s = &self.settings;
        let mut out = Vec::new();
        for d in s.d.iter() {
            for e in s.e.iter() {
                let candidates = match &s.lambda {
                    Some(l) if l.weight() == d - 2 => vec![l.clone()],
                    Some(_) => Vec::new(),
                    None => partitions(d - 2, e),
                };
                for lambda in candidates {
                    for trial in 0..s.trials {
                        out.push(Instance {
                            task: out.len(),
                            d,
                            e,
                            in_scope: lambda.fits_rank(e),
                            lambda: lambda.clone(),
                            trial,
                        });
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(config(format!(
                "no partition of d − 2 matches λ = ({}) for d = {}, e = {}",
                s.lambda.as_ref().map(ToString::to_string).unwrap_or_default(),
                s.d,
                s.e
            )));
        }
        Ok(out)
    }

    /// The ω-tuple of a task: the fixed forms, or fresh ones from `(seed, task)`.
    pub fn omegas(&self, task: usize, d: usize, e: usize) -> Vec<Form> {
        match &self.fixed {
            Some(f) => f.omegas.clone(),
            None => {
                let seed = self.settings.seed.expect("checked in resolve");
                positive_forms(&mut task_rng(seed, task as u64), d, e, DEFAULT_BOX)
            }
        }
    }
}
