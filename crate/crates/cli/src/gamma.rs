use std::path::Path;
use std::time::Instant;

use hrlab::bilinear::{gram, Signature};
use hrlab::rational::format_rational;
use hrlab::symfunc::{gamma, partitions, simplex_grid, Partition, WeightVector};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{GammaScanArgs, Span};
use crate::campaign::{Campaign, Settings};
use crate::error::{config, CliError};
use crate::report::{write_report, Report, Status, Summary, Timing, SCHEMA_VERSION};

#[derive(Debug, Serialize)]
pub struct GammaConfig {
    #[serde(flatten)]
    pub settings: Settings,
    pub grid: usize,
}

/// Vertices are single Schur classes and are asserted HR; everything else
/// is recorded without a verdict.
#[derive(Debug, Serialize)]
pub struct ScanPoint {
    pub task: usize,
    pub d: usize,
    pub e: usize,
    pub trial: usize,
    pub x: WeightVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Partition>,
    pub signature: Signature,
    pub hr: bool,
    pub status: Status,
}

pub fn run(args: &GammaScanArgs, start: Instant, out: Option<&Path>) -> Result<bool, CliError> {
    if args.common.lambda.is_some() {
        return Err(config("gamma-scan combines all partitions; --lambda does not apply"));
    }
    if args.grid == 0 {
        return Err(config("--grid must be positive"));
    }
    let campaign = Campaign::resolve(&args.common, Span::single(5), Span::single(3), 2)?;
    let s = &campaign.settings;

    // task = (d, e, trial); every grid point of a task shares its ω-tuple
    let mut jobs = Vec::new();
    let mut task = 0;
    for d in s.d.iter() {
        for e in s.e.iter() {
            let parts = partitions(d - 2, e);
            let grid = simplex_grid(parts.len(), args.grid)?;
            for trial in 0..s.trials {
                for x in &grid {
                    jobs.push((task, d, e, trial, x.clone()));
                }
                task += 1;
            }
        }
    }

    let results = jobs
        .par_iter()
        .map(|(task, d, e, trial, x)| {
            let omegas = campaign.omegas(*task, *d, *e);
            let signature = gram(&gamma(x, d - 2, *e, &omegas)?)?.signature();
            let hr = signature.is_hodge_riemann();
            let vertex = x.vertex_index().map(|k| partitions(d - 2, *e)[k].clone());
            Ok(ScanPoint {
                task: *task,
                d: *d,
                e: *e,
                trial: *trial,
                x: x.clone(),
                status: if vertex.is_some() { Status::of(hr) } else { Status::Exploratory },
                vertex,
                signature,
                hr,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let sightings: Vec<_> = results
        .iter()
        .filter(|p| p.vertex.is_none() && !p.hr)
        .map(|p| json!({"d": p.d, "e": p.e, "trial": p.trial, "x": p.x, "signature": p.signature}))
        .collect();
    for p in results.iter().filter(|p| p.status != Status::Exploratory || !p.hr) {
        let what = match &p.vertex {
            Some(l) => format!("vertex ({l})"),
            None => "interior".to_string(),
        };
        eprintln!(
            "{} gamma-scan d={} e={} trial={} {what} x=({}) signature {}",
            p.status.label(),
            p.d,
            p.e,
            p.trial,
            p.x.weights().iter().map(format_rational).collect::<Vec<_>>().join(","),
            p.signature
        );
    }
    let summary = Summary::tally(results.iter().map(|p| p.status));
    let status = Status::worst(results.iter().map(|p| p.status));
    eprintln!(
        "gamma-scan: {} points, {} vertex failures, {} non-HR interior sightings (exploratory)",
        summary.tasks,
        summary.failed,
        sightings.len()
    );
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: "gamma-scan",
        config: GammaConfig {
            settings: campaign.settings.clone(),
            grid: args.grid,
        },
        results,
        summary,
        findings: Some(json!({"non_hr_interior_points": sightings})),
        status,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    write_report(&report, out)?;
    Ok(status != Status::Fail)
}
