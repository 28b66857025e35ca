//! File-driven front end: parse a ring document, run the requested analysis,
//! and emit a deterministic text or JSON report.
//!
//! Exit codes: 0 success, 2 parse or validation failure, 3 resource ceiling,
//! 4 internal invariant violation.

use multiproj_cli::report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use multiproj::grading::{parse_ring_spec, RingSpec};
use multiproj::projmodel::{build_model, separation_verdict};
use multiproj::relevance::{irrelevant_radical_generators, Support};
use multiproj::sections::{binomial_relations, veronese_generators, zero_subring_generators};
use multiproj::{charts, grading, Error};

#[derive(Parser)]
#[command(
    name = "multiproj",
    version,
    about = "Analyze the homogeneous spectrum of a multigraded polynomial ring"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis: charts, fan, irrelevant ideal, separation verdict.
    Analyze {
        /// Path to the ring document (JSON).
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Enumeration cap on the number of variables.
        #[arg(long, default_value_t = 24)]
        max_vars: usize,
    },
    /// The chart at one relevant support.
    Charts {
        spec: PathBuf,
        /// Comma-separated variable names, e.g. `X1,Z`.
        #[arg(long)]
        support: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generators of the degree-zero subring, with brute-force relations.
    Zerosubring {
        spec: PathBuf,
        /// Total-degree bound for the binomial relation search.
        #[arg(long, default_value_t = 6)]
        relation_bound: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generators of a Veronese subring cut out by linear forms.
    Veronese {
        spec: PathBuf,
        /// Semicolon-separated integer forms on the free grading group,
        /// e.g. `1,0;0,1`. Empty means the whole ring.
        #[arg(long, default_value = "")]
        forms: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Separation analysis only.
    Separation {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 24)]
        max_vars: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Malformed(_)
        | Error::DimensionMismatch(_)
        | Error::DuplicateVariable(_)
        | Error::InvalidTorsionOrder(_)
        | Error::Validation(_)
        | Error::IrrelevantSupport { .. }
        | Error::TorsionUnsupported
        | Error::ConstantMonomial => 2,
        Error::Overflow | Error::EnumerationCap { .. } | Error::ResourceCeiling(_) => 3,
        Error::Inconsistency(_) => 4,
    }
}

fn load_spec(path: &PathBuf) -> Result<RingSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_ring_spec(&text)
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: String) -> Result<String, Error> {
    match format {
        Format::Text => Ok(text),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| Error::Inconsistency(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.cmd {
        Cmd::Analyze {
            spec,
            format,
            max_vars,
        } => {
            let ring = load_spec(&spec)?;
            let model = build_model(&ring, max_vars)?;
            let sep = separation_verdict(&model)?;
            let radical = irrelevant_radical_generators(&ring, max_vars)?;
            let kernel = grading::kernel_lattice_of(&ring)?;
            let report =
                report::build_analyze_report(&ring, &model, &sep, &radical, kernel.columns())?;
            emit(format, &report, report::analyze_text(&report))
        }
        Cmd::Charts {
            spec,
            support,
            format,
        } => {
            let ring = load_spec(&spec)?;
            let j = parse_support(&ring, &support)?;
            let chart = charts::build_chart(&ring, &j)?;
            let report = report::ChartReport {
                schema: report::SCHEMA.to_string(),
                ring: report::ring_out(&ring),
                chart: report::chart_out(&ring, &chart)?,
            };
            emit(format, &report, report::charts_text(&report))
        }
        Cmd::Zerosubring {
            spec,
            relation_bound,
            format,
        } => {
            let ring = load_spec(&spec)?;
            let hb = zero_subring_generators(&ring)?;
            let rels = binomial_relations(&hb, relation_bound)?;
            let report = report::SectionReport {
                schema: report::SCHEMA.to_string(),
                ring: report::ring_out(&ring),
                kind: "zero-subring".to_string(),
                forms: vec![],
                generators: report::generator_out(&ring, &hb),
                relation_bound: Some(relation_bound),
                relations: rels
                    .iter()
                    .map(|u| report::relation_out(&ring, &hb, u))
                    .collect(),
            };
            emit(format, &report, report::section_text(&report))
        }
        Cmd::Veronese {
            spec,
            forms,
            format,
        } => {
            let ring = load_spec(&spec)?;
            let forms = parse_forms(&forms)?;
            let hb = veronese_generators(&ring, &forms)?;
            let report = report::SectionReport {
                schema: report::SCHEMA.to_string(),
                ring: report::ring_out(&ring),
                kind: "veronese".to_string(),
                forms,
                generators: report::generator_out(&ring, &hb),
                relation_bound: None,
                relations: vec![],
            };
            emit(format, &report, report::section_text(&report))
        }
        Cmd::Separation {
            spec,
            format,
            max_vars,
        } => {
            let ring = load_spec(&spec)?;
            let model = build_model(&ring, max_vars)?;
            let sep = separation_verdict(&model)?;
            let report = report::SeparationOnlyReport {
                schema: report::SCHEMA.to_string(),
                ring: report::ring_out(&ring),
                separation: report::separation_out(&ring, &sep),
            };
            emit(format, &report, report::separation_only_text(&report))
        }
    }
}

fn parse_support(spec: &RingSpec, text: &str) -> Result<Support, Error> {
    let mut indices = Vec::new();
    for name in text.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let idx = spec
            .variable_index(name)
            .ok_or_else(|| Error::Validation(format!("unknown variable in support: {name}")))?;
        indices.push(idx);
    }
    if indices.is_empty() {
        return Err(Error::Validation("empty support selector".to_string()));
    }
    Ok(Support::new(indices))
}

fn parse_forms(text: &str) -> Result<Vec<Vec<i64>>, Error> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Validation(format!("bad form entry: {x:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}
