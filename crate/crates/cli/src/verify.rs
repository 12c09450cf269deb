use std::path::Path;
use std::time::Instant;

use hrlab::bilinear::{gram, Signature};
use hrlab::symfunc::{schur, Partition};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Span, VerifyHrArgs};
use crate::campaign::{Campaign, Settings};
use crate::error::CliError;
use crate::report::{write_report, Report, Status, Summary, Timing, SCHEMA_VERSION};

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub task: usize,
    pub d: usize,
    pub e: usize,
    pub lambda: Partition,
    pub trial: usize,
    pub in_scope: bool,
    pub signature: Signature,
    pub expected: Signature,
    pub status: Status,
}

pub fn run(args: &VerifyHrArgs, start: Instant, out: Option<&Path>) -> Result<bool, CliError> {
    let campaign = Campaign::resolve(&args.common, Span { lo: 2, hi: 4 }, Span { lo: 1, hi: 2 }, 2)?;
    let instances = campaign.instances()?;
    let results = instances
        .par_iter()
        .map(|inst| {
            let omegas = campaign.omegas(inst.task, inst.d, inst.e);
            let signature = gram(&schur(&inst.lambda, &omegas)?)?.signature();
            let expected = Signature::new(1, inst.d * inst.d - 1, 0);
            Ok(VerifyResult {
                task: inst.task,
                d: inst.d,
                e: inst.e,
                lambda: inst.lambda.clone(),
                trial: inst.trial,
                in_scope: inst.in_scope,
                signature,
                expected,
                status: if inst.in_scope {
                    Status::of(signature == expected)
                } else {
                    Status::Exploratory
                },
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    for r in &results {
        eprintln!(
            "{} verify-hr d={} e={} λ=({}) trial={} signature {}{}",
            r.status.label(),
            r.d,
            r.e,
            r.lambda,
            r.trial,
            r.signature,
            if r.in_scope { "" } else { " (λ_1 > e, not asserted)" }
        );
    }
    let summary = Summary::tally(results.iter().map(|r| r.status));
    let status = Status::worst(results.iter().map(|r| r.status));
    let report: Report<Settings, VerifyResult> = Report {
        schema_version: SCHEMA_VERSION,
        command: "verify-hr",
        config: campaign.settings,
        results,
        summary,
        findings: None,
        status,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    eprintln!(
        "verify-hr: {} tasks, {} failed",
        report.summary.tasks, report.summary.failed
    );
    write_report(&report, out)?;
    Ok(status != Status::Fail)
}
