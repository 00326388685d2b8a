//! The `cayley-pst` command line.
//!
//! Every subcommand reads a group (`-g Z4xZ3xZ3`) and, where relevant, a
//! connection set given inline (`-c "{(1,0),(3,0)}"`) or as `@path` to a
//! JSON array of element tuples. Output goes to stdout unless `--out` is
//! given.
//!
//! Exit codes: 0 on success, 1 when a verdict the user asked to be fatal
//! comes out negative (`check --strict`, failed cross-validation, a
//! non-integral spectrum), 2 on input errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::connection::ConnectionSet;
use crate::enumerate::{enumerate_pst_sets, EnumerateOptions, DEFAULT_CLASS_CAP};
use crate::error::{Error, Result};
use crate::export::{export, ExportFormat};
use crate::group::{AbelianGroup, GroupElement, PowerClass};
use crate::json::{to_json, F17};
use crate::pst::{characterize_pst, PstReport, Verdict};
use crate::spectra::integral_spectrum;
use crate::walk::{
    dense_expm, detect_pst_numeric, identity_row, transition_amplitude, transition_matrix, WalkTime, DEFAULT_DENSE_CAP,
    DEFAULT_TOLERANCE,
};

#[derive(Debug, Parser)]
#[command(name = "cayley-pst", version, about = "Perfect state transfer on Cayley graphs of abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide perfect state transfer for X(G, C).
    Check(CheckArgs),
    /// Print the integer spectrum of X(G, C).
    Spectrum(SetArgs),
    /// Print transition amplitudes of the walk e^{itA}.
    Walk(WalkArgs),
    /// List every power-closed C with perfect state transfer.
    Enumerate(EnumerateArgs),
    /// List the power classes of G.
    Classes(GroupArgs),
    /// Write the graph as adjacency rows, DOT or JSON.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Adjacency,
    Dot,
    Json,
}

impl From<GraphFormat> for ExportFormat {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::Adjacency => ExportFormat::Adjacency,
            GraphFormat::Dot => ExportFormat::Dot,
            GraphFormat::Json => ExportFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group as a product of cyclic factors, e.g. Z4xZ3xZ3.
    #[arg(short = 'g', long = "group")]
    pub group: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    #[arg(short = 'g', long = "group")]
    pub group: String,
    /// Connection set, inline `{...}` or `@file.json`.
    #[arg(short = 'c', long = "connection-set")]
    pub connection_set: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub set: SetArgs,
    /// Also run the numerical walk and report agreement.
    #[arg(long)]
    pub cross_validate: bool,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Exit with status 1 unless the verdict is PST (and cross-validation agrees).
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[command(flatten)]
    pub set: SetArgs,
    /// Time, e.g. pi/2, 3pi/4 or 0.5.
    #[arg(short = 't', long = "time", allow_hyphen_values = true)]
    pub time: String,
    /// Defaults to the identity.
    #[arg(long)]
    pub source: Option<String>,
    /// Omit to print the whole row of the source.
    #[arg(long)]
    pub target: Option<String>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Force numerical cross-validation (default: on for orders up to 128).
    #[arg(long, conflicts_with = "no_cross_validate")]
    pub cross_validate: bool,
    #[arg(long)]
    pub no_cross_validate: bool,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
    pub class_cap: usize,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(short = 'g', long = "group")]
    pub group: String,
    #[arg(short = 'c', long = "connection-set")]
    pub connection_set: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: GraphFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure kinds, mapped to exit codes 1 and 2.
#[derive(Debug)]
enum Failure {
    Verdict(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegral { .. } | Error::CrossValidationMismatch { .. } | Error::AmbiguousPst { .. } => {
                Failure::Verdict(e.to_string())
            }
            other => Failure::Input(other),
        }
    }
}

struct Output {
    body: String,
    warnings: Vec<String>,
    fatal: Option<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            warnings: Vec::new(),
            fatal: None,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let out_path = match &cli.command {
        Command::Check(a) => a.set.out.as_ref(),
        Command::Spectrum(a) => a.out.as_ref(),
        Command::Walk(a) => a.set.out.as_ref(),
        Command::Enumerate(a) => a.group.out.as_ref(),
        Command::Classes(a) => a.out.as_ref(),
        Command::Export(a) => a.out.as_ref(),
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a).map_err(Failure::from),
        Command::Spectrum(a) => cmd_spectrum(a).map_err(Failure::from),
        Command::Walk(a) => cmd_walk(a).map_err(Failure::from),
        Command::Enumerate(a) => cmd_enumerate(a).map_err(Failure::from),
        Command::Classes(a) => cmd_classes(a).map_err(Failure::from),
        Command::Export(a) => cmd_export(a).map_err(Failure::from),
    };
    let mut outcome = Outcome::default();
    match result {
        Ok(output) => {
            for w in &output.warnings {
                writeln!(outcome.stderr, "warning: {w}").unwrap();
            }
            match out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &output.body) {
                        writeln!(outcome.stderr, "error: cannot write {}: {e}", path.display()).unwrap();
                        outcome.code = 2;
                        return outcome;
                    }
                }
                None => outcome.stdout = output.body,
            }
            if let Some(reason) = output.fatal {
                writeln!(outcome.stderr, "{reason}").unwrap();
                outcome.code = 1;
            }
        }
        Err(Failure::Verdict(msg)) => {
            writeln!(outcome.stderr, "error: {msg}").unwrap();
            outcome.code = 1;
        }
        Err(Failure::Input(e)) => {
            writeln!(outcome.stderr, "error: {e}").unwrap();
            outcome.code = 2;
        }
    }
    outcome
}

fn parse_group(text: &str) -> Result<AbelianGroup> {
    text.parse()
}

/// Inline set literal, or `@path` to a JSON array (or a set literal) on disk.
pub fn load_connection_set(group: &AbelianGroup, input: &str) -> Result<ConnectionSet> {
    match input.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            if text.trim_start().starts_with('{') {
                ConnectionSet::parse(group, &text)
            } else {
                ConnectionSet::from_json(group, &text)
            }
        }
        None => ConnectionSet::parse(group, input),
    }
}

fn load(args: &SetArgs) -> Result<ConnectionSet> {
    let group = parse_group(&args.group)?;
    load_connection_set(&group, &args.connection_set)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 0.5 {
        Ok(())
    } else {
        Err(Error::Parse {
            what: "tolerance",
            input: tol.to_string(),
            reason: "must lie in (0, 0.5)".into(),
        })
    }
}

#[derive(Serialize)]
struct CrossValidation {
    time: String,
    tolerance: F17,
    numeric_target: Option<GroupElement>,
    modulus: Option<F17>,
    agrees: Option<bool>,
    /// Max entrywise gap between the character and dense paths at pi/2.
    dense_max_diff: Option<F17>,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    #[serde(flatten)]
    report: &'a PstReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_validation: Option<CrossValidation>,
}

fn cross_validate(c: &ConnectionSet, report: &PstReport, tol: f64) -> Result<CrossValidation> {
    let t = WalkTime::HALF_PI;
    let hit = detect_pst_numeric(c, t.value(), tol)?;
    let agrees = match report.verdict {
        Verdict::OutOfScope => None,
        _ => Some(hit.as_ref().map(|h| &h.target) == report.target()),
    };
    let dense_max_diff = if c.group().size() <= DEFAULT_DENSE_CAP {
        let dense = dense_expm(c, t.value())?;
        Some(F17(dense.max_abs_diff(&transition_matrix(c, t.value()))))
    } else {
        None
    };
    Ok(CrossValidation {
        time: t.to_string(),
        tolerance: F17(tol),
        modulus: hit.as_ref().map(|h| F17(h.phase.norm())),
        numeric_target: hit.map(|h| h.target),
        agrees,
        dense_max_diff,
    })
}

fn yes_no(v: Option<bool>) -> Option<&'static str> {
    v.map(|ok| if ok { "pass" } else { "fail" })
}

fn check_text(c: &ConnectionSet, report: &PstReport, xv: Option<&CrossValidation>) -> String {
    let mut s = String::new();
    writeln!(s, "group: {}", c.group()).unwrap();
    writeln!(s, "set: {} (|C| = {})", c, c.len()).unwrap();
    let verdict = match report.verdict {
        Verdict::Pst => "PST",
        Verdict::NoPst => "NoPST",
        Verdict::OutOfScope => "OutOfScope",
    };
    writeln!(s, "verdict: {verdict}").unwrap();
    if let (Some((src, dst)), Some(t)) = (&report.pair, report.time) {
        writeln!(s, "transfer: {src} -> {dst} at t = {t}").unwrap();
    }
    let cond = &report.conditions;
    for (name, v) in [
        ("power_closed", cond.power_closed),
        ("exactly_one_of_a_b", cond.exactly_one_of_a_b),
        ("c0_equals_4c2", cond.c0_equals_4c2),
        ("c1_equals_2c2", cond.c1_equals_2c2),
        ("c0_c1star_c2star", cond.c0_c1star_c2star),
        ("matching_case", cond.matching_case),
        ("odd_order_case", cond.odd_order_case),
    ] {
        if let Some(v) = yes_no(v) {
            writeln!(s, "  {name}: {v}").unwrap();
        }
    }
    for d in &report.diagnostics {
        writeln!(s, "note: {d}").unwrap();
    }
    if let Some(xv) = xv {
        match &xv.numeric_target {
            Some(t) => writeln!(s, "numeric: transfer to {t} at {}", xv.time).unwrap(),
            None => writeln!(s, "numeric: no transfer at {}", xv.time).unwrap(),
        }
        if let Some(a) = xv.agrees {
            writeln!(s, "agreement: {}", if a { "yes" } else { "NO" }).unwrap();
        }
    }
    s
}

fn cmd_check(args: &CheckArgs) -> Result<Output> {
    let c = load(&args.set)?;
    let report = characterize_pst(&c);
    let xv = if args.cross_validate {
        check_tol(args.tol)?;
        Some(cross_validate(&c, &report, args.tol)?)
    } else {
        None
    };
    let mut fatal = None;
    if let Some(CrossValidation { agrees: Some(false), .. }) = &xv {
        fatal = Some("error: algebraic and numeric verdicts disagree".to_string());
    } else if args.strict && report.verdict != Verdict::Pst {
        fatal = Some(format!("verdict is not PST for {c}"));
    }
    let body = match args.set.format {
        OutputFormat::Json => to_json(&CheckJson {
            report: &report,
            cross_validation: xv,
        }),
        OutputFormat::Text => check_text(&c, &report, xv.as_ref()),
    };
    Ok(Output {
        body,
        warnings: Vec::new(),
        fatal,
    })
}

#[derive(Serialize)]
struct SpectrumJson {
    group: String,
    degree: usize,
    eigenvalues: Vec<[i64; 2]>,
    delta: Option<u64>,
}

fn cmd_spectrum(args: &SetArgs) -> Result<Output> {
    let c = load(args)?;
    let spectrum = integral_spectrum(&c)?;
    let body = match args.format {
        OutputFormat::Json => to_json(&SpectrumJson {
            group: c.group().to_string(),
            degree: c.len(),
            eigenvalues: spectrum.eigenvalues().into_iter().map(|(v, m)| [v, m as i64]).collect(),
            delta: spectrum.delta(),
        }),
        OutputFormat::Text => {
            let mut s = String::new();
            for (v, m) in spectrum.eigenvalues() {
                writeln!(s, "{v}\t{m}").unwrap();
            }
            if let Some(d) = spectrum.delta() {
                writeln!(s, "delta\t{d}").unwrap();
            }
            s
        }
    };
    Ok(Output::ok(body))
}

#[derive(Serialize)]
struct TimeJson {
    exact: String,
    value: F17,
}

#[derive(Serialize)]
struct Amplitude {
    target: GroupElement,
    re: F17,
    im: F17,
    modulus: F17,
}

#[derive(Serialize)]
struct WalkJson {
    time: TimeJson,
    source: GroupElement,
    amplitudes: Vec<Amplitude>,
}

fn cmd_walk(args: &WalkArgs) -> Result<Output> {
    let c = load(&args.set)?;
    let group = c.group();
    let time: WalkTime = args.time.parse()?;
    let t = time.value();
    let source = match &args.source {
        Some(s) => group.parse_element(s)?,
        None => group.identity(),
    };
    let amplitudes: Vec<Amplitude> = match &args.target {
        Some(s) => {
            let target = group.parse_element(s)?;
            let z = transition_amplitude(&c, &source, &target, t)?;
            vec![amplitude(target, z)]
        }
        None => {
            let row = identity_row(&c, t);
            group
                .elements()
                .map(|h| {
                    let z = row[group.index_of(&(&h - &source))];
                    amplitude(h, z)
                })
                .collect()
        }
    };
    let body = match args.set.format {
        OutputFormat::Json => to_json(&WalkJson {
            time: TimeJson {
                exact: time.to_string(),
                value: F17(t),
            },
            source,
            amplitudes,
        }),
        OutputFormat::Text => {
            let mut s = format!("t = {time}\n");
            for a in &amplitudes {
                writeln!(
                    s,
                    "{} -> {}: {} {:+}i  |.| = {}",
                    source,
                    a.target,
                    F17::format(a.re.0),
                    a.im.0,
                    F17::format(a.modulus.0)
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn amplitude(target: GroupElement, z: num_complex::Complex64) -> Amplitude {
    Amplitude {
        target,
        re: F17(z.re),
        im: F17(z.im),
        modulus: F17(z.norm()),
    }
}

#[derive(Serialize)]
struct CensusItem<'a> {
    set: &'a ConnectionSet,
    report: &'a PstReport,
}

#[derive(Serialize)]
struct CensusJson<'a> {
    group: String,
    cross_validated: bool,
    count: usize,
    entries: Vec<CensusItem<'a>>,
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Output> {
    let group = parse_group(&args.group.group)?;
    check_tol(args.tol)?;
    let mut options = EnumerateOptions {
        class_cap: args.class_cap,
        tolerance: args.tol,
        ..EnumerateOptions::for_group(&group)
    };
    let mut warnings = Vec::new();
    if args.cross_validate {
        options.cross_validate = true;
    } else if args.no_cross_validate {
        options.cross_validate = false;
    } else if !options.cross_validate {
        warnings.push(format!("cross-validation is off for {group} (order {}); pass --cross-validate to force it", group.order()));
    }
    let entries = enumerate_pst_sets(&group, &options)?;
    let body = match args.group.format {
        OutputFormat::Json => to_json(&CensusJson {
            group: group.to_string(),
            cross_validated: options.cross_validate,
            count: entries.len(),
            entries: entries
                .iter()
                .map(|e| CensusItem {
                    set: &e.set,
                    report: &e.report,
                })
                .collect(),
        }),
        OutputFormat::Text => {
            let mut s = format!("{} PST connection sets in {group}\n", entries.len());
            for e in &entries {
                writeln!(s, "{}\t|C| = {}", e.set, e.set.len()).unwrap();
            }
            s
        }
    };
    Ok(Output {
        body,
        warnings,
        fatal: None,
    })
}

#[derive(Serialize)]
struct ClassesJson<'a> {
    group: String,
    count: usize,
    classes: &'a [PowerClass],
}

fn cmd_classes(args: &GroupArgs) -> Result<Output> {
    let group = parse_group(&args.group)?;
    let classes = group.power_classes();
    let body = match args.format {
        OutputFormat::Json => to_json(&ClassesJson {
            group: group.to_string(),
            count: classes.len(),
            classes: &classes,
        }),
        OutputFormat::Text => {
            let mut s = String::new();
            for class in &classes {
                let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
                writeln!(s, "order {}\t{{{}}}", class.order, members.join(",")).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn cmd_export(args: &ExportArgs) -> Result<Output> {
    let group = parse_group(&args.group)?;
    let c = load_connection_set(&group, &args.connection_set)?;
    Ok(Output::ok(export(&c, args.format.into())))
}
