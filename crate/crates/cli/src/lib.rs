//! Command-line front end: parse map descriptions, run invariant
//! computations, emit certificates and oracle cross-check reports.
//!
//! Exit codes: 0 success, 1 validation failure (invalid certificate, failed
//! oracle checks, refused computation), 2 usage or parse errors.

pub mod checks;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use fpclass::{
    analyze, bip_certificate_range, fixed_subgroup, parse_family_reference, BipCertificate,
    Error as CoreError, FiberedMapSpec, FixedSubgroupReport, InvariantReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "fpclass",
    version,
    about = "Exact fixed-point class invariants for fibered maps of surface x torus products"
)]
pub struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Print the invariant report and fixed-subgroup report for a map
    Analyze {
        /// Inline family reference: theorem1[:m=N] or theorem2[:m=N]
        family: Option<String>,
        /// Path to a spec file (alternative to an inline family)
        #[arg(long, value_name = "PATH")]
        spec: Option<PathBuf>,
        /// Parameter range A..B (inclusive) or a single value N
        #[arg(long, value_name = "RANGE")]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit the unbounded-index certificate table for a family
    Certificate {
        /// Family name: theorem1[:m=N] or theorem2[:m=N]
        family: String,
        /// Parameter range A..B (inclusive) or a single value N
        #[arg(long, value_name = "RANGE")]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run the randomized oracle cross-check suites
    OracleCheck {
        /// Seed for the randomized sweeps (default 0)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Echo a parsed spec together with its diagnostics
    Describe {
        /// Inline family reference: theorem1[:m=N] or theorem2[:m=N]
        family: Option<String>,
        /// Path to a spec file (alternative to an inline family)
        #[arg(long, value_name = "PATH")]
        spec: Option<PathBuf>,
        /// Single parameter value N (alternative to :m=N)
        #[arg(long, value_name = "RANGE")]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Certificate,
    OracleCheck,
    Describe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecSource {
    Inline(String),
    File(PathBuf),
}

/// Everything one invocation needs; the invariants (an m range is required
/// for certificates and forbidden when analyzing a file spec) are enforced
/// by [`run`].
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub spec_source: Option<SpecSource>,
    pub m_range: Option<(BigInt, BigInt)>,
    pub format: OutputFormat,
    pub seed: Option<u64>,
}

/// A failed run: the message goes to stderr and the kind fixes the exit
/// code (1 for validation failures, 2 for usage/parse errors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunFailure {
    Validation(String),
    Usage(String),
    Io(String),
}

impl RunFailure {
    pub fn message(&self) -> &str {
        match self {
            RunFailure::Validation(m) | RunFailure::Usage(m) | RunFailure::Io(m) => m,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            RunFailure::Validation(_) | RunFailure::Io(_) => 1,
            RunFailure::Usage(_) => 2,
        }
    }
}

impl From<std::io::Error> for RunFailure {
    fn from(e: std::io::Error) -> Self {
        RunFailure::Io(format!("io error: {e}"))
    }
}

fn map_core_error(e: CoreError) -> RunFailure {
    match e {
        CoreError::Degenerate | CoreError::MultipleClasses(_) => {
            RunFailure::Validation(e.to_string())
        }
        other => RunFailure::Usage(other.to_string()),
    }
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, RunFailure> {
        let (command, family, spec, m, format, seed) = match self.command {
            CliCommand::Analyze {
                family,
                spec,
                m,
                format,
            } => (Command::Analyze, family, spec, m, format, None),
            CliCommand::Certificate { family, m, format } => {
                (Command::Certificate, Some(family), None, m, format, None)
            }
            CliCommand::OracleCheck { seed, format } => {
                (Command::OracleCheck, None, None, None, format, seed)
            }
            CliCommand::Describe {
                family,
                spec,
                m,
                format,
            } => (Command::Describe, family, spec, m, format, None),
        };
        let spec_source = match (family, spec) {
            (Some(_), Some(_)) => {
                return Err(RunFailure::Usage(
                    "give either an inline family or --spec, not both".into(),
                ))
            }
            (Some(f), None) => Some(SpecSource::Inline(f)),
            (None, Some(p)) => Some(SpecSource::File(p)),
            (None, None) => None,
        };
        let m_range = m.map(|raw| parse_m_range(&raw)).transpose()?;
        Ok(RunConfig {
            command,
            spec_source,
            m_range,
            format: match format {
                FormatArg::Text => OutputFormat::Text,
                FormatArg::Structured => OutputFormat::Structured,
            },
            seed,
        })
    }
}

/// Parses `A..B` (inclusive) or a single integer `N` as `N..N`.
pub fn parse_m_range(raw: &str) -> Result<(BigInt, BigInt), RunFailure> {
    let parse_int = |s: &str| -> Result<BigInt, RunFailure> {
        s.trim()
            .parse()
            .map_err(|_| RunFailure::Usage(format!("bad integer '{s}' in --m range")))
    };
    match raw.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_int(lo)?;
            let hi = parse_int(hi)?;
            if hi < lo {
                return Err(RunFailure::Usage(format!("empty --m range {lo}..{hi}")));
            }
            Ok((lo, hi))
        }
        None => {
            let n = parse_int(raw)?;
            Ok((n.clone(), n))
        }
    }
}

/// Executes a parsed configuration, writing the report to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunFailure> {
    match config.command {
        Command::Analyze => cmd_analyze(config, out),
        Command::Certificate => cmd_certificate(config, out),
        Command::OracleCheck => cmd_oracle_check(config, out),
        Command::Describe => cmd_describe(config, out),
    }
}

/// Resolves the spec source to the (spec, m) pairs to process.
fn resolve_specs(
    config: &RunConfig,
    single_m_only: bool,
) -> Result<Vec<(FiberedMapSpec, Option<BigInt>)>, RunFailure> {
    match &config.spec_source {
        None => Err(RunFailure::Usage(
            "a family name or --spec <path> is required".into(),
        )),
        Some(SpecSource::File(path)) => {
            if config.m_range.is_some() {
                return Err(RunFailure::Usage(
                    "--m is not allowed together with --spec".into(),
                ));
            }
            let text = std::fs::read_to_string(path).map_err(|e| {
                RunFailure::Usage(format!("cannot read spec file '{}': {e}", path.display()))
            })?;
            let spec = FiberedMapSpec::parse_spec_file(&text).map_err(map_core_error)?;
            Ok(vec![(spec, None)])
        }
        Some(SpecSource::Inline(text)) => {
            let (family, inline_m) = parse_family_reference(text).map_err(map_core_error)?;
            let (lo, hi) = match (inline_m, &config.m_range) {
                (Some(_), Some(_)) => {
                    return Err(RunFailure::Usage(
                        "the family carries :m=N; --m must not be given as well".into(),
                    ))
                }
                (Some(m), None) => (m.clone(), m),
                (None, Some(r)) => r.clone(),
                (None, None) => {
                    return Err(RunFailure::Usage(format!(
                        "family '{0}' needs a parameter: use {0}:m=N or --m",
                        family.name()
                    )))
                }
            };
            if single_m_only && lo != hi {
                return Err(RunFailure::Usage(
                    "this command takes a single m, not a range".into(),
                ));
            }
            let mut specs = Vec::new();
            let mut m = lo;
            while m <= hi {
                specs.push((
                    family.spec(m.clone()).map_err(map_core_error)?,
                    Some(m.clone()),
                ));
                m += 1;
            }
            Ok(specs)
        }
    }
}

fn cmd_analyze(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunFailure> {
    let specs = resolve_specs(config, false)?;
    for (i, (spec, m)) in specs.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let report = analyze(spec).map_err(map_core_error)?;
        let subgroup = fixed_subgroup(spec).map_err(map_core_error)?;
        write_analysis(out, config.format, spec, m.as_ref(), &report, &subgroup)?;
    }
    Ok(())
}

fn write_analysis(
    out: &mut dyn Write,
    format: OutputFormat,
    spec: &FiberedMapSpec,
    m: Option<&BigInt>,
    report: &InvariantReport,
    subgroup: &FixedSubgroupReport,
) -> Result<(), RunFailure> {
    let conditions = if subgroup.conditions.is_empty() {
        "(none)".to_string()
    } else {
        subgroup
            .conditions
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    match format {
        OutputFormat::Text => {
            writeln!(out, "map: {spec}")?;
            writeln!(out, "genus: {}", spec.genus())?;
            writeln!(out, "fiber rank: {}", spec.fiber_rank())?;
            writeln!(out, "euler characteristic: {}", report.euler_characteristic)?;
            writeln!(out, "fiber lefschetz: {}", report.fiber_lefschetz)?;
            writeln!(out, "fiber nielsen: {}", report.fiber_nielsen)?;
            writeln!(out, "total lefschetz: {}", report.total_lefschetz)?;
            writeln!(out, "class count: {}", report.class_count)?;
            if let Some(index) = &report.class_index_abs {
                writeln!(out, "class index |ind|: {index}")?;
            }
            writeln!(
                out,
                "empty classes exist: {}",
                if report.empty_classes_exist {
                    "yes"
                } else {
                    "no"
                }
            )?;
            writeln!(out, "lattice index: {}", subgroup.lattice_index)?;
            writeln!(out, "lattice conditions: {conditions}")?;
            writeln!(out, "fiber formula: {}", subgroup.fiber_formula)?;
        }
        OutputFormat::Structured => {
            writeln!(out, "record=analyze")?;
            writeln!(out, "map={spec}")?;
            writeln!(out, "genus={}", spec.genus())?;
            writeln!(out, "fiber_rank={}", spec.fiber_rank())?;
            if let Some(m) = m {
                writeln!(out, "m={m}")?;
            }
            writeln!(out, "euler_characteristic={}", report.euler_characteristic)?;
            writeln!(out, "fiber_lefschetz={}", report.fiber_lefschetz)?;
            writeln!(out, "fiber_nielsen={}", report.fiber_nielsen)?;
            writeln!(out, "total_lefschetz={}", report.total_lefschetz)?;
            writeln!(out, "class_count={}", report.class_count)?;
            if let Some(index) = &report.class_index_abs {
                writeln!(out, "class_index_abs={index}")?;
            }
            writeln!(out, "empty_classes_exist={}", report.empty_classes_exist)?;
            writeln!(out, "lattice_index={}", subgroup.lattice_index)?;
            writeln!(out, "lattice_conditions={conditions}")?;
            writeln!(out, "fiber_formula={}", subgroup.fiber_formula)?;
        }
    }
    Ok(())
}

fn cmd_certificate(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunFailure> {
    let Some(SpecSource::Inline(text)) = &config.spec_source else {
        return Err(RunFailure::Usage(
            "certificate requires a named family (theorem1 or theorem2)".into(),
        ));
    };
    let (family, inline_m) = parse_family_reference(text).map_err(map_core_error)?;
    let (lo, hi) = match (inline_m, &config.m_range) {
        (Some(_), Some(_)) => {
            return Err(RunFailure::Usage(
                "the family carries :m=N; --m must not be given as well".into(),
            ))
        }
        (Some(m), None) => (m.clone(), m),
        (None, Some(r)) => r.clone(),
        (None, None) => {
            return Err(RunFailure::Usage(
                "certificate requires an m range: use --m A..B".into(),
            ))
        }
    };
    let certificate = bip_certificate_range(family, &lo, &hi).map_err(map_core_error)?;
    write_certificate(out, config.format, &certificate)?;
    if certificate.is_valid() {
        Ok(())
    } else {
        Err(RunFailure::Validation(
            "certificate validation failed".into(),
        ))
    }
}

fn write_certificate(
    out: &mut dyn Write,
    format: OutputFormat,
    certificate: &BipCertificate,
) -> Result<(), RunFailure> {
    let valid_rows = certificate.rows.iter().filter(|r| r.is_valid()).count();
    match format {
        OutputFormat::Text => {
            writeln!(
                out,
                "certificate: family {}, {} row(s)",
                certificate.family,
                certificate.rows.len()
            )?;
            let mut table: Vec<[String; 5]> = vec![[
                "m".into(),
                "total_lefschetz".into(),
                "class_count".into(),
                "class_index_abs".into(),
                "status".into(),
            ]];
            for row in &certificate.rows {
                table.push([
                    row.m.to_string(),
                    row.total_lefschetz.to_string(),
                    row.class_count.to_string(),
                    row.class_index_abs.to_string(),
                    if row.is_valid() {
                        "VALID".into()
                    } else {
                        "INVALID".into()
                    },
                ]);
            }
            let widths: Vec<usize> = (0..5)
                .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &table {
                let mut line = String::new();
                for (c, cell) in row.iter().enumerate() {
                    if c > 0 {
                        line.push_str(" | ");
                    }
                    let _ = write!(line, "{cell:>width$}", width = widths[c]);
                }
                writeln!(out, "{line}")?;
            }
            writeln!(
                out,
                "result: {} ({valid_rows}/{} rows valid)",
                if certificate.is_valid() {
                    "VALID"
                } else {
                    "INVALID"
                },
                certificate.rows.len()
            )?;
        }
        OutputFormat::Structured => {
            for row in &certificate.rows {
                writeln!(out, "record=certificate_row")?;
                writeln!(out, "family={}", certificate.family)?;
                writeln!(out, "m={}", row.m)?;
                writeln!(out, "total_lefschetz={}", row.total_lefschetz)?;
                writeln!(out, "class_count={}", row.class_count)?;
                writeln!(out, "class_index_abs={}", row.class_index_abs)?;
                writeln!(out, "valid={}", row.is_valid())?;
                writeln!(out)?;
            }
            writeln!(out, "record=certificate_summary")?;
            writeln!(out, "family={}", certificate.family)?;
            writeln!(out, "rows={}", certificate.rows.len())?;
            writeln!(out, "valid_rows={valid_rows}")?;
            writeln!(out, "valid={}", certificate.is_valid())?;
        }
    }
    Ok(())
}

fn cmd_oracle_check(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunFailure> {
    if config.spec_source.is_some() {
        return Err(RunFailure::Usage(
            "oracle-check takes no spec argument".into(),
        ));
    }
    let seed = config.seed.unwrap_or(0);
    let outcomes = checks::run_all(seed);
    let trials: u32 = outcomes.iter().map(|o| o.trials).sum();
    let passed: u32 = outcomes.iter().map(|o| o.passed).sum();
    let all_passed = trials == passed;
    match config.format {
        OutputFormat::Text => {
            writeln!(out, "oracle check: seed {seed}")?;
            for o in &outcomes {
                writeln!(out, "{}: {}/{} passed", o.name, o.passed, o.trials)?;
                if let Some(failure) = &o.first_failure {
                    writeln!(out, "  first failure: {failure}")?;
                }
            }
            writeln!(
                out,
                "result: {} ({passed}/{trials} trials)",
                if all_passed { "PASS" } else { "FAIL" }
            )?;
        }
        OutputFormat::Structured => {
            for o in &outcomes {
                writeln!(out, "record=oracle_suite")?;
                writeln!(out, "suite={}", o.name)?;
                writeln!(out, "trials={}", o.trials)?;
                writeln!(out, "passed={}", o.passed)?;
                writeln!(out)?;
            }
            writeln!(out, "record=oracle_summary")?;
            writeln!(out, "seed={seed}")?;
            writeln!(out, "trials={trials}")?;
            writeln!(out, "passed={passed}")?;
            writeln!(out, "pass={all_passed}")?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(RunFailure::Validation(format!(
            "oracle checks failed: {passed}/{trials} trials passed"
        )))
    }
}

fn cmd_describe(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunFailure> {
    let specs = resolve_specs(config, true)?;
    let (spec, _) = &specs[0];
    let diagnostics = spec.diagnostics();
    match config.format {
        OutputFormat::Text => {
            writeln!(
                out,
                "label: {}",
                if spec.label().is_empty() {
                    "(none)"
                } else {
                    spec.label()
                }
            )?;
            writeln!(out, "genus: {}", spec.genus())?;
            writeln!(out, "fiber rank: {}", spec.fiber_rank())?;
            writeln!(out, "euler characteristic: {}", spec.euler_characteristic())?;
            writeln!(out, "retraction: {}", spec.retraction())?;
            writeln!(out, "fiber matrix: {}", spec.fiber_matrix())?;
            writeln!(out, "fiber det: {}", diagnostics.fiber_det)?;
            writeln!(
                out,
                "fiber automorphism: {}",
                if diagnostics.is_fiber_automorphism {
                    "yes"
                } else {
                    "no"
                }
            )?;
            writeln!(out, "lefschetz det: {}", diagnostics.lefschetz_det)?;
            writeln!(
                out,
                "degenerate: {}",
                if diagnostics.degenerate { "yes" } else { "no" }
            )?;
        }
        OutputFormat::Structured => {
            writeln!(out, "record=describe")?;
            writeln!(out, "label={}", spec.label())?;
            writeln!(out, "genus={}", spec.genus())?;
            writeln!(out, "fiber_rank={}", spec.fiber_rank())?;
            writeln!(out, "euler_characteristic={}", spec.euler_characteristic())?;
            writeln!(out, "retraction={}", spec.retraction())?;
            writeln!(out, "fiber_matrix={}", spec.fiber_matrix())?;
            writeln!(out, "fiber_det={}", diagnostics.fiber_det)?;
            writeln!(
                out,
                "is_fiber_automorphism={}",
                diagnostics.is_fiber_automorphism
            )?;
            writeln!(out, "lefschetz_det={}", diagnostics.lefschetz_det)?;
            writeln!(out, "degenerate={}", diagnostics.degenerate)?;
        }
    }
    Ok(())
}

/// Full pipeline from argv, used by the binary and by tests.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write) -> Result<(), RunFailure>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| RunFailure::Usage(e.render().to_string()))?;
    run(&cli.into_config()?, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn m_range_parsing() {
        let (lo, hi) = parse_m_range("1..64").unwrap();
        assert_eq!((lo, hi), (BigInt::from(1), BigInt::from(64)));
        let (lo, hi) = parse_m_range("7").unwrap();
        assert_eq!((lo, hi), (BigInt::from(7), BigInt::from(7)));
        assert!(parse_m_range("5..2").is_err());
        assert!(parse_m_range("a..b").is_err());
        assert!(parse_m_range("").is_err());
    }

    #[test]
    fn analyze_requires_parameter() {
        let config = RunConfig {
            command: Command::Analyze,
            spec_source: Some(SpecSource::Inline("theorem1".into())),
            m_range: None,
            format: OutputFormat::Text,
            seed: None,
        };
        let mut out = Vec::new();
        let err = run(&config, &mut out).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn analyze_single_family_member() {
        let config = RunConfig {
            command: Command::Analyze,
            spec_source: Some(SpecSource::Inline("theorem1:m=1".into())),
            m_range: None,
            format: OutputFormat::Structured,
            seed: None,
        };
        let mut out = Vec::new();
        run(&config, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("total_lefschetz=2"), "got: {text}");
        assert!(text.contains("class_count=1"), "got: {text}");
        assert!(text.contains("class_index_abs=2"), "got: {text}");
    }

    #[test]
    fn certificate_table_marks_rows_valid() {
        let config = RunConfig {
            command: Command::Certificate,
            spec_source: Some(SpecSource::Inline("theorem2".into())),
            m_range: Some((BigInt::one(), BigInt::from(3))),
            format: OutputFormat::Text,
            seed: None,
        };
        let mut out = Vec::new();
        run(&config, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.matches("VALID").count(), 4, "3 rows + summary: {text}");
    }
}
