use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hrlab::rational::{parse_rational, Rational};
use hrlab::symfunc::Partition;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "hrlab", version, about = "Seeded exact Hodge-Riemann verification campaigns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Signature of the Schur-class pairing on random positive tuples.
    VerifyHr(VerifyHrArgs),
    /// Augmentation properties and verdicts on the R_i families.
    Family(FamilyArgs),
    /// Scan convex combinations of Schur classes over a simplex grid.
    GammaScan(GammaScanArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Dimension, a single value or an inclusive range such as `2..4`.
    #[arg(long)]
    pub d: Option<Span>,

    /// Number of input forms, a single value or a range.
    #[arg(long)]
    pub e: Option<Span>,

    /// Restrict to one partition, e.g. `2,1`; `""` is the empty partition.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,

    /// Random instances per configuration.
    #[arg(long)]
    pub trials: Option<usize>,

    /// Campaign seed. Required unless the inputs are fixed.
    #[arg(long)]
    pub seed: Option<u64>,

    /// JSON file `{"h": form, "omegas": [form, …]}` replacing random inputs.
    #[arg(long)]
    pub forms: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyHrArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub common: Common,

    /// Checks to run; all of them by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub check: Vec<Check>,

    /// Index of the R_i family for the A, B and aug1 checks: an integer or `d`.
    #[arg(long)]
    pub i: Option<IndexArg>,

    /// Sample points for t, comma separated rationals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_t)]
    pub t_samples: Vec<Rational>,

    /// Run a fixed example instead of random instances.
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
}

#[derive(Args, Debug, Clone)]
pub struct GammaScanArgs {
    #[command(flatten)]
    pub common: Common,

    /// Simplex grid resolution.
    #[arg(long, default_value_t = 4)]
    pub grid: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Check {
    #[value(name = "A")]
    #[serde(rename = "A")]
    A,
    #[value(name = "B")]
    #[serde(rename = "B")]
    B,
    #[value(name = "recursion")]
    #[serde(rename = "recursion")]
    Recursion,
    #[value(name = "aug1")]
    #[serde(rename = "aug1")]
    Aug1,
    #[value(name = "aug2")]
    #[serde(rename = "aug2")]
    Aug2,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::A, Check::B, Check::Recursion, Check::Aug1, Check::Aug2];

    pub fn name(self) -> &'static str {
        match self {
            Check::A => "A",
            Check::B => "B",
            Check::Recursion => "recursion",
            Check::Aug1 => "aug1",
            Check::Aug2 => "aug2",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Builtin {
    #[value(name = "remark-3.7")]
    #[serde(rename = "remark-3.7")]
    Remark,
    #[value(name = "minkowski")]
    #[serde(rename = "minkowski")]
    Minkowski,
}

/// Inclusive range of integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn single(v: usize) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("not a non-negative integer: {t:?}"))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span {
                lo: num(a)?,
                hi: num(b.strip_prefix('=').unwrap_or(b))?,
            },
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl Serialize for Span {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexArg {
    Top,
    Fixed(usize),
}

impl IndexArg {
    pub fn resolve(self, d: usize) -> usize {
        match self {
            IndexArg::Top => d,
            IndexArg::Fixed(i) => i,
        }
    }
}

impl FromStr for IndexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "d" {
            return Ok(IndexArg::Top);
        }
        s.trim()
            .parse()
            .map(IndexArg::Fixed)
            .map_err(|_| format!("expected an integer or `d`, got {s:?}"))
    }
}

impl Serialize for IndexArg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexArg::Top => s.serialize_str("d"),
            IndexArg::Fixed(i) => s.serialize_u64(*i as u64),
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: hrlab::Error| e.to_string())
}

fn parse_t(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}
