//! Argument parsing and subcommand dispatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use blowup_core::cohomology::cohomology_table;
use blowup_core::deformation::{thooft_component_dimension, transform_deformation_report};
use blowup_core::instanton::{
    definition_checklist, monad_chern_report, monad_shape, DefinitionItem,
};
use blowup_core::transform::{iterate_transforms, thooft_seed, Witness};
use blowup_core::{
    BundleDescriptor, BundleKind, ChernData, ChowRing, CohomTable, CurveProfile, ElementaryStep,
    InstantonData, Outcome, Stability, Twist,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::acceptance;
use crate::config::{Config, OutputFormat};
use crate::error::{CliError, EXIT_USAGE};
use crate::parse;

pub const SCHEMA: &str = "blowup-calc/1";

#[derive(Debug, Parser)]
#[command(
    name = "blowup-calc",
    version,
    about = "Exact invariants of the blow-up of P3 at a point"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ChernArgs {
    #[arg(long, allow_hyphen_values = true)]
    rank: String,
    /// `a,b` for c1 = aH + bE
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    c1: String,
    /// `k,l` for c2 = kH² + lE²
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    c2: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    m: String,
}

impl ChernArgs {
    fn data(&self) -> Result<ChernData, CliError> {
        let (a, b) = parse::pair(&self.c1)?;
        let (k, l) = parse::pair(&self.c2)?;
        Ok(ChernData::new(
            parse::int(&self.rank)?,
            a,
            b,
            k,
            l,
            parse::int(&self.m)?,
        )?)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridKind {
    #[value(name = "O")]
    Line,
    #[value(name = "Omega1")]
    Omega,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessArg {
    Catalog,
    Asserted,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler characteristic of F(p,q)
    Chi {
        #[command(flatten)]
        chern: ChernArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
        twist: String,
    },
    /// Chern data of F(p,q)
    Twist {
        #[command(flatten)]
        chern: ChernArgs,
        #[arg(long, allow_hyphen_values = true)]
        twist: String,
    },
    /// Cohomology table of O(p,q) or Omega1(p,q)
    Cohom {
        #[arg(long, allow_hyphen_values = true)]
        bundle: String,
    },
    /// Cohomology tables over a rectangle of twists
    CohomGrid {
        #[arg(long, value_enum, default_value = "O")]
        kind: GridKind,
        #[arg(long, allow_hyphen_values = true)]
        pmin: String,
        #[arg(long, allow_hyphen_values = true)]
        pmax: String,
        #[arg(long, allow_hyphen_values = true)]
        qmin: String,
        #[arg(long, allow_hyphen_values = true)]
        qmax: String,
        #[arg(long, value_enum)]
        format: Option<GridFormat>,
    },
    /// Monad multiplicities and the Chern character check
    Monad {
        #[arg(long, allow_hyphen_values = true, default_value = "2")]
        rank: String,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        gamma: String,
    },
    /// Instanton vanishing checklist against supplied cohomology tables
    CheckInstanton {
        #[arg(long)]
        tables: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        rank: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Charges along a sequence of elementary transformations
    Transform {
        /// `thooft:k,l`
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        /// Comma-separated single-line steps, e.g. `P,P,F,X`
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        steps: String,
        /// A final step along a whole curve, e.g. `P*2,(3.1.0)`
        #[arg(long, allow_hyphen_values = true)]
        curve: Option<String>,
        #[arg(long, value_enum, default_value = "catalog")]
        witness: WitnessArg,
    },
    /// Deformation count for a transform along one line
    Deform {
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        line: String,
    },
    /// Dimension 8k − 4l − 3 of the t'Hooft component
    ComponentDim {
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
    },
    /// Run the acceptance suite
    Selftest,
}

fn bundle_label(b: BundleDescriptor) -> String {
    let head = match b.kind {
        BundleKind::LineBundle => "O",
        BundleKind::OmegaTwist => "Omega1",
    };
    format!("{head}({},{})", b.twist.p, b.twist.q)
}

fn outcome_label(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::Unknown => "unknown",
    }
}

fn table_json(t: CohomTable) -> Value {
    json!({ "h0": t.h0, "h1": t.h1, "h2": t.h2, "h3": t.h3 })
}

fn emit(out: &mut dyn Write, format: OutputFormat, mut value: Value) -> Result<(), CliError> {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), SCHEMA.into());
    }
    let text = match format {
        OutputFormat::Pretty => serde_json::to_string_pretty(&value),
        OutputFormat::Json | OutputFormat::Csv => serde_json::to_string(&value),
    }
    .expect("JSON values always serialise");
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntry {
    twist: (i64, i64),
    h: [u64; 4],
}

/// Input of `check-instanton`. Flags override the data fields.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    rank: Option<i64>,
    charge: Option<(i64, i64)>,
    m: Option<i64>,
    gamma: Option<i64>,
    tables: Vec<TableEntry>,
}

fn read_tables(path: &Path) -> Result<TableFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::TableFile {
        path: path.to_owned(),
        source,
    })
}

fn grid(kind: GridKind, p: (i64, i64), q: (i64, i64)) -> Vec<(i64, i64, CohomTable)> {
    let cells: Vec<(i64, i64)> = (p.0..=p.1)
        .flat_map(|p| (q.0..=q.1).map(move |q| (p, q)))
        .collect();
    cells
        .into_par_iter()
        .map(|(p, q)| {
            let b = match kind {
                GridKind::Line => BundleDescriptor::line(p, q),
                GridKind::Omega => BundleDescriptor::omega(p, q),
            };
            (p, q, cohomology_table(b))
        })
        .collect()
}

const MAX_GRID_CELLS: i128 = 1 << 22;

fn range(min: &str, max: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = (parse::int(min)?, parse::int(max)?);
    if lo > hi {
        return Err(CliError::Usage(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn execute(cli: Cli, config: &Config, out: &mut dyn Write) -> Result<u8, CliError> {
    let ring = ChowRing::new(config.epsilon);
    let format = config.output;
    match cli.command {
        Command::Chi { chern, twist } => {
            let (p, q) = parse::pair(&twist)?;
            let chi = chern.data()?.euler_characteristic(Twist::new(p, q))?;
            writeln!(out, "{chi}")?;
        }
        Command::Twist { chern, twist } => {
            let (p, q) = parse::pair(&twist)?;
            let d = chern.data()?.twisted(&ring, Twist::new(p, q));
            let value = json!({ "r": d.rank(), "a": d.a(), "b": d.b(), "k": d.k(), "l": d.l(), "m": d.m() });
            emit(out, format, value)?;
        }
        Command::Cohom { bundle } => {
            let b = parse::bundle(&bundle)?;
            let t = cohomology_table(b);
            if format == OutputFormat::Csv {
                writeln!(out, "h0,h1,h2,h3\n{},{},{},{}", t.h0, t.h1, t.h2, t.h3)?;
            } else {
                let mut value = table_json(t);
                value["bundle"] = bundle_label(b).into();
                value["chi"] = t.euler_characteristic().into();
                emit(out, format, value)?;
            }
        }
        Command::CohomGrid {
            kind,
            pmin,
            pmax,
            qmin,
            qmax,
            format: grid_format,
        } => {
            let (p, q) = (range(&pmin, &pmax)?, range(&qmin, &qmax)?);
            let cells =
                (i128::from(p.1) - i128::from(p.0) + 1) * (i128::from(q.1) - i128::from(q.0) + 1);
            if cells > MAX_GRID_CELLS {
                return Err(CliError::Usage(format!(
                    "grid of {cells} cells exceeds {MAX_GRID_CELLS}"
                )));
            }
            let rows = grid(kind, p, q);
            let csv = match grid_format {
                Some(GridFormat::Csv) => true,
                Some(GridFormat::Json) => false,
                None => format == OutputFormat::Csv,
            };
            if csv {
                writeln!(out, "p,q,h0,h1,h2,h3")?;
                for (p, q, t) in rows {
                    writeln!(out, "{p},{q},{},{},{},{}", t.h0, t.h1, t.h2, t.h3)?;
                }
            } else {
                let cells: Vec<Value> = rows
                    .into_iter()
                    .map(|(p, q, t)| {
                        let mut v = table_json(t);
                        v["p"] = p.into();
                        v["q"] = q.into();
                        v
                    })
                    .collect();
                let kind = match kind {
                    GridKind::Line => "O",
                    GridKind::Omega => "Omega1",
                };
                emit(out, format, json!({ "kind": kind, "cells": cells }))?;
            }
        }
        Command::Monad {
            rank,
            charge,
            gamma,
        } => {
            let (k, l) = parse::pair(&charge)?;
            let d = InstantonData::new(parse::int(&rank)?, k, l, 0, parse::int(&gamma)?)?;
            let s = monad_shape(&d);
            let check = monad_chern_report(&ring, &d, &s);
            let terms: Vec<Value> = s
                .terms()
                .iter()
                .map(|t| json!({ "degree": t.degree, "bundle": bundle_label(t.bundle), "multiplicity": t.multiplicity }))
                .collect();
            let value = json!({
                "rank": d.rank(),
                "charge": [k, l],
                "gamma": d.gamma(),
                "multiplicities": s.multiplicities(),
                "terms": terms,
                "alternating_rank": s.alternating_rank(),
                "check": { "rank": check.rank, "c1": check.c1, "c2": check.c2, "ch3": check.ch3, "all": check.all() },
            });
            emit(out, format, value)?;
        }
        Command::CheckInstanton {
            tables,
            rank,
            charge,
            m,
            gamma,
        } => {
            let file = read_tables(&tables)?;
            let rank = rank
                .as_deref()
                .map(parse::int)
                .transpose()?
                .or(file.rank)
                .unwrap_or(2);
            let charge = match charge
                .as_deref()
                .map(parse::pair)
                .transpose()?
                .or(file.charge)
            {
                Some(c) => c,
                None => {
                    return Err(CliError::Usage(
                        "charge missing: pass --charge or set it in the table file".into(),
                    ))
                }
            };
            let m = m
                .as_deref()
                .map(parse::int)
                .transpose()?
                .or(file.m)
                .unwrap_or(0);
            let gamma = gamma
                .as_deref()
                .map(parse::int)
                .transpose()?
                .or(file.gamma)
                .unwrap_or(0);
            let d = InstantonData::new(rank, charge.0, charge.1, m, gamma)?;
            let supplied: BTreeMap<Twist, CohomTable> = file
                .tables
                .iter()
                .map(|e| {
                    (
                        Twist::new(e.twist.0, e.twist.1),
                        CohomTable::new(e.h[0], e.h[1], e.h[2], e.h[3]),
                    )
                })
                .collect();
            let report = definition_checklist(&d, &supplied);
            let items: Vec<Value> = report
                .items
                .iter()
                .map(|i| {
                    json!({
                        "item": format!("{:?}", i.item),
                        "twist": [i.twist.p, i.twist.q],
                        "degree": i.degree,
                        "outcome": outcome_label(i.outcome),
                    })
                })
                .collect();
            let summary = json!({
                "I": outcome_label(report.item(DefinitionItem::I)),
                "II": outcome_label(report.item(DefinitionItem::II)),
                "III": outcome_label(report.item(DefinitionItem::III)),
                "euler": outcome_label(report.item(DefinitionItem::EulerCharacteristic)),
            });
            let value = json!({
                "rank": rank,
                "charge": [charge.0, charge.1],
                "items": items,
                "summary": summary,
                "overall": outcome_label(report.overall()),
            });
            emit(out, format, value)?;
        }
        Command::Transform {
            seed,
            steps,
            curve,
            witness,
        } => {
            let (k, l) = parse::seed(&seed)?;
            let seed = thooft_seed(k, l)?;
            let witness = match witness {
                WitnessArg::Catalog => Witness::CatalogVerified,
                WitnessArg::Asserted => Witness::AssertedByCaller,
            };
            let mut plan: Vec<ElementaryStep> = parse::components(&steps)?
                .into_iter()
                .map(|c| ElementaryStep::from_profile(CurveProfile::single(c), witness))
                .collect();
            if let Some(curve) = curve {
                plan.push(ElementaryStep::from_profile(parse::curve(&curve)?, witness));
            }
            let points = iterate_transforms(&ring, &seed.data, &plan)?;
            let trajectory: Vec<Value> = points
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let mut v = json!({
                        "step": i,
                        "charge": p.charge(),
                        "admissible": p.admissible,
                        "stable": p.data.stability() == Stability::MuStable,
                        "quotient_charge": p.quotient_charge(),
                        "verdict": p.verdict.map(|v| format!("{v:?}")),
                        "rank0_quotient": p.rank0_quotient,
                    });
                    if config.literal_mode {
                        v["literal_charge"] = json!(p.alternative_charge);
                    }
                    v
                })
                .collect();
            let value = json!({
                "seed": {
                    "charge": [k, l],
                    "pullback_lines": seed.scheme.count(blowup_core::LineType::PullbackLine),
                    "fiber_lines": seed.scheme.count(blowup_core::LineType::FiberLine),
                },
                "trajectory": trajectory,
            });
            emit(out, format, value)?;
        }
        Command::Deform { charge, line } => {
            let (k, l) = parse::pair(&charge)?;
            let report = transform_deformation_report(k, l, parse::line_type(&line)?)?;
            let mut value = serde_json::to_value(&report).expect("report serialises");
            value["charge"] = json!([k, l]);
            emit(out, format, value)?;
        }
        Command::ComponentDim { charge } => {
            let (k, l) = parse::pair(&charge)?;
            writeln!(out, "{}", thooft_component_dimension(k, l)?)?;
        }
        Command::Selftest => {
            let results = acceptance::run_all();
            for r in &results {
                writeln!(out, "{r}")?;
            }
            return Ok(u8::from(!results.iter().all(|r| r.passed)));
        }
    }
    Ok(0)
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit status.
pub fn run<I, T>(args: I, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => write!(out, "{}", e.render()),
                _ => write!(err, "{}", e.render()),
            };
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli, config, out) {
        Ok(code) => code,
        Err(e) => {
            if let CliError::Validation(_) = e {
                let object = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                let _ = emit(out, OutputFormat::Json, object);
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
