//! Command-line front end: `verify`, `pi` and `report`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;

use crate::modeq::{self, ModEqId, ModEqTable};
use crate::pi::{self, RamanujanId};
use crate::qseries::c_to_j_check;
use crate::quatforms::{self, GramSet};
use crate::report::CheckReport;
use crate::singular::{self, numeric_check_tol, standard_suite};

pub const DATA_ENV: &str = "MODPI_DATA";
pub const GRAM_FILE: &str = "gram_p163.txt";
pub const MODEQ_FILE: &str = "modeq_p163.txt";

#[derive(Debug, Parser)]
#[command(name = "modpi", version, about = "Exact checks behind the Chudnovsky 1/pi series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a group of checks and print one CHECK line each.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        opts: Opts,
    },
    /// Compute π or check one of the series against the Machin oracle.
    Pi {
        #[arg(value_enum)]
        method: PiMethod,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run checks and emit them as text or JSON lines.
    Report {
        #[arg(value_enum, default_value = "all")]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Span,
    Modeq,
    Singular,
    Identities,
    Arith,
    Pi,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PiMethod {
    Chudnovsky,
    Machin,
    Ramanujan,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Opts {
    /// Series order (span: q^order; modeq: margin beyond the deepest pole).
    #[arg(long)]
    pub order: Option<i64>,
    #[arg(long)]
    pub digits: Option<usize>,
    /// Working precision in bits for numeric checks.
    #[arg(long, default_value_t = 128)]
    pub prec: usize,
    #[arg(long, value_parser = ["19", "43", "67", "163"])]
    pub n: Option<String>,
    /// Data directory; falls back to $MODPI_DATA, then `data/`.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Compare computed digits with the oracle.
    #[arg(long)]
    pub check: bool,
    /// All modular equations (the default when no --id is given).
    #[arg(long)]
    pub all: bool,
    /// A single modular equation (`f-varphi`, `f-g1`..`f-g6`) or series (`r1103`, `r1123`).
    #[arg(long)]
    pub id: Option<String>,
}

/// Gram matrices and modular-equation tables used by the checks.
pub struct Data {
    pub grams: GramSet,
    pub tables: Vec<ModEqTable>,
    pub source: String,
}

/// Reads both data files from `dir`, or the embedded copies when no
/// directory was requested and `data/` is absent.
pub fn load_data(dir: Option<&Path>) -> Result<Data, String> {
    let env = std::env::var_os(DATA_ENV).map(PathBuf::from);
    let explicit = dir.map(Path::to_path_buf).or(env);
    let dir = match explicit {
        Some(d) => d,
        None => {
            let d = PathBuf::from("data");
            if !d.join(GRAM_FILE).exists() || !d.join(MODEQ_FILE).exists() {
                return Ok(Data {
                    grams: GramSet::embedded_p163(),
                    tables: modeq::embedded_tables(),
                    source: "embedded".into(),
                });
            }
            d
        }
    };
    let read = |f: &str| std::fs::read_to_string(dir.join(f)).map_err(|e| format!("{}: {e}", dir.join(f).display()));
    let grams = GramSet::parse(&read(GRAM_FILE)?).map_err(|e| format!("{GRAM_FILE}: {e}"))?;
    let tables = modeq::parse_modeq_file(&read(MODEQ_FILE)?).map_err(|e| format!("{MODEQ_FILE}: {e}"))?;
    Ok(Data { grams, tables, source: dir.display().to_string() })
}

type Task<'a> = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync + 'a>;

fn span_tasks<'a>(data: &'a Data, opts: &Opts) -> Vec<Task<'a>> {
    let order = opts.order.unwrap_or(400);
    vec![Box::new(move || {
        vec![CheckReport::timed(|| quatforms::span_identity_with(&data.grams, &quatforms::SPAN_WEIGHTS, order))]
    })]
}

fn modeq_tasks<'a>(data: &'a Data, opts: &Opts) -> Result<Vec<Task<'a>>, String> {
    let order = opts.order.unwrap_or(120);
    let selected: Vec<ModEqTable> = match (&opts.id, opts.all) {
        (Some(id), false) => {
            let id: ModEqId = id.parse().map_err(|e: modeq::ModEqError| e.to_string())?;
            data.tables.iter().filter(|t| t.id == id).cloned().collect()
        }
        _ => data.tables.clone(),
    };
    if selected.is_empty() {
        return Err("no matching modular equation in the data".into());
    }
    Ok(vec![Box::new(move || match modeq::verify_tables(&selected, order) {
        Ok(r) => r,
        Err(e) => vec![CheckReport::fail("modeq", e.to_string())],
    })])
}

fn or_fail(name: &str, r: Result<CheckReport, singular::SingularError>) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::fail(name, e.to_string()))
}

fn singular_tasks<'a>(data: &'a Data, opts: &Opts) -> Vec<Task<'a>> {
    let bits = opts.prec;
    let mut tasks: Vec<Task<'a>> = vec![
        Box::new(move || vec![or_fail("f_value", CheckReport::timed_result(|| singular::verify_f_value(bits)))]),
        Box::new(move || {
            vec![or_fail("value_tables", CheckReport::timed_result(|| singular::verify_table_consistency(bits)))]
        }),
        Box::new(|| vec![CheckReport::timed(singular::g2_check)]),
        Box::new(|| vec![CheckReport::timed(singular::constant_recovery)]),
        Box::new(|| vec![CheckReport::timed(singular::verify_v_c_identity)]),
    ];
    // the degree-27 specialization and pole values come from the main equation
    if let Some(main) = data.tables.iter().find(|t| t.id == ModEqId::Varphi) {
        tasks.push(Box::new(move || {
            vec![
                CheckReport::timed(|| modeq::specialization_check(main)),
                CheckReport::timed(|| modeq::pole_values_check(main).0),
            ]
        }));
    }
    tasks
}

fn identity_tasks<'a>(data: &'a Data, opts: &Opts) -> Vec<Task<'a>> {
    let bits = opts.prec;
    let mut tasks: Vec<Task<'a>> = standard_suite()
        .into_iter()
        .map(|(check, digits)| -> Task<'a> {
            Box::new(move || vec![CheckReport::timed(|| numeric_check_tol(&check, bits, digits).report)])
        })
        .collect();
    tasks.push(Box::new(|| vec![c_to_j_check(5)]));
    for t in [BigRational::new(1.into(), 2.into()), BigRational::from_integer(2.into())] {
        tasks.push(Box::new(move || vec![fricke_all(&data.grams, &t, bits)]));
    }
    tasks
}

/// Fricke residual for every form in the set, against `10^-20`.
pub fn fricke_all(set: &GramSet, t: &BigRational, bits: usize) -> CheckReport {
    CheckReport::timed(|| {
        let mut worst = 0f64;
        let mut ok = true;
        for (_, m) in &set.matrices {
            let r = quatforms::fricke_residual(m, t, set.p, bits);
            ok &= r.abs_below_pow10(20);
            worst = worst.max(r.to_f64());
        }
        CheckReport::new(
            format!("fricke_t{t}"),
            ok,
            format!("max residual {worst:.3e} over {} forms", set.matrices.len()),
        )
    })
}

fn arith_tasks<'a>(data: &'a Data, opts: &Opts) -> Vec<Task<'a>> {
    let order = opts.order.unwrap_or(100);
    let p = data.grams.p;
    vec![
        Box::new(move || {
            let eq = |name: &str, got: Result<i64, quatforms::QuatError>, want: i64| match got {
                Ok(v) => CheckReport::new(name, v == want, format!("{v} (expected {want})")),
                Err(e) => CheckReport::fail(name, e.to_string()),
            };
            vec![
                eq("type_number", quatforms::type_number(p), 8),
                eq("genus", quatforms::genus_x0(p), 13),
                eq("class_number", quatforms::class_number(-p).map(|h| h as i64), 1),
            ]
        }),
        Box::new(move || {
            vec![CheckReport::timed(|| {
                let thetas = quatforms::gram_thetas(&data.grams, order);
                let r = quatforms::independence_rank(&thetas, order);
                CheckReport::new("theta_rank", r.rank == 8, format!("rank {} of {} at order {order}", r.rank, r.rows))
            })]
        }),
    ]
}

fn pi_tasks<'a>() -> Vec<Task<'a>> {
    let mut tasks: Vec<Task<'a>> = vec![
        Box::new(|| vec![pi::chudnovsky_check(1000).0]),
        Box::new(|| vec![pi::ramanujan_series_check(RamanujanId::R1103, 100)]),
        Box::new(|| vec![pi::ramanujan_series_check(RamanujanId::R1123, 100)]),
    ];
    for (n, d) in [(19, 30), (43, 30), (67, 30), (163, 60)] {
        tasks.push(Box::new(move || vec![pi::general_series_pi(n, d)]));
    }
    tasks
}

fn tasks_for<'a>(target: Target, data: &'a Data, opts: &Opts) -> Result<Vec<Task<'a>>, String> {
    Ok(match target {
        Target::Span => span_tasks(data, opts),
        Target::Modeq => modeq_tasks(data, opts)?,
        Target::Singular => singular_tasks(data, opts),
        Target::Identities => identity_tasks(data, opts),
        Target::Arith => arith_tasks(data, opts),
        Target::Pi => pi_tasks(),
        Target::All => {
            // per-group flags would conflict, so `all` uses the defaults
            let d = Opts { prec: opts.prec, ..Opts::default() };
            let mut t = span_tasks(data, &d);
            t.extend(modeq_tasks(data, &Opts { all: true, ..d.clone() })?);
            t.extend(singular_tasks(data, &d));
            t.extend(identity_tasks(data, &d));
            t.extend(arith_tasks(data, &d));
            t.extend(pi_tasks());
            t
        }
    })
}

/// Runs the checks of `target` in parallel; results keep task order.
pub fn run_checks(target: Target, data: &Data, opts: &Opts) -> Result<Vec<CheckReport>, String> {
    let tasks = tasks_for(target, data, opts)?;
    Ok(tasks.par_iter().map(|t| t()).collect::<Vec<_>>().concat())
}

fn emit(reports: &[CheckReport], format: Format) -> i32 {
    for r in reports {
        match format {
            Format::Text => println!("{r}"),
            Format::Structured => println!("{}", r.to_json_line()),
        }
    }
    i32::from(!reports.iter().all(CheckReport::passed))
}

fn run_pi(method: PiMethod, opts: &Opts) -> Result<i32, String> {
    match method {
        PiMethod::Chudnovsky => {
            let d = opts.digits.unwrap_or(1000);
            if opts.check {
                let (r, digits) = pi::chudnovsky_check(d);
                println!("{}", pi::format_digits(&digits));
                Ok(emit(&[r], Format::Text))
            } else {
                println!("{}", pi::format_digits(&pi::chudnovsky_pi(d).to_fixed_decimal(d)));
                Ok(0)
            }
        }
        PiMethod::Machin => {
            println!("{}", pi::format_digits(&pi::machin_digits(opts.digits.unwrap_or(1000))));
            Ok(0)
        }
        PiMethod::Ramanujan => {
            let d = opts.digits.unwrap_or(100);
            let ids = match &opts.id {
                Some(s) => vec![s.parse::<RamanujanId>().map_err(|e| e.to_string())?],
                None => vec![RamanujanId::R1103, RamanujanId::R1123],
            };
            let reports: Vec<_> = ids.par_iter().map(|&id| pi::ramanujan_series_check(id, d)).collect();
            Ok(emit(&reports, Format::Text))
        }
        PiMethod::Series => {
            let ns: Vec<i64> = match &opts.n {
                Some(n) => vec![n.parse().expect("validated by clap")],
                None => singular::SUPPORTED_N.to_vec(),
            };
            let reports: Vec<_> = ns
                .par_iter()
                .map(|&n| pi::general_series_pi(n, opts.digits.unwrap_or(if n == 163 { 60 } else { 30 })))
                .collect();
            Ok(emit(&reports, Format::Text))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns 0 when every check passes, 1 on a failed check, 2 on a usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Pi { method, opts } => run_pi(*method, opts),
        Command::Verify { target, opts } => {
            load_data(opts.data.as_deref()).and_then(|d| run_checks(*target, &d, opts)).map(|r| emit(&r, Format::Text))
        }
        Command::Report { target, format, opts } => {
            load_data(opts.data.as_deref()).and_then(|d| run_checks(*target, &d, opts)).map(|r| emit(&r, *format))
        }
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("modpi: {msg}");
            2
        }
    }
}
