//! The `convolvium` command line.
//!
//! Exit status is 0 on success, 1 when a sweep finds violations or a
//! claimed exact division fails, and 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use convolvium_core::paths::{count_paths, enumerate_paths, PathSpec};
use convolvium_core::verify::{Report, Suite, SweepRange};
use convolvium_core::{
    binomial, catalan, gessel, gessel_convolution, m_sum, quarter_psi, super_catalan,
    super_catalan_convolution, ClosedForm, Error, ExactInt, KernelFamily, MSumQuery, SummandKernel,
};
use serde_json::json;

use crate::format::{write_reports, Format};
use crate::runner::{budget_ms_from_env, Runner};

#[derive(Debug, Parser)]
#[command(
    name = "convolvium",
    version,
    about = "Exact alternating convolutions of Catalan-type numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single quantity.
    Compute(ComputeArgs),
    /// Run a verification sweep, or `all` of them.
    Verify(VerifyArgs),
    /// Count or list lattice paths for a Gessel number.
    Paths(PathsArgs),
    /// Tabulate a quantity over a grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Binomial,
    Catalan,
    Supercatalan,
    Gessel,
    /// Gessel convolution over `0..=2n`.
    Phi,
    /// Super Catalan convolution over `0..=2n`.
    Psi,
    QuarterPsi,
    /// M-sum `M(n, j, t; a)` with composite index `n`.
    Msum,
    /// Closed form for `M(2n, j, t; a)`.
    ClosedForm,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub quantity: Quantity,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub m: u64,
    #[arg(long, default_value_t = 0)]
    pub j: u64,
    #[arg(long, default_value_t = 0)]
    pub t: u64,
    #[arg(long)]
    pub a: Option<u64>,
    /// Summand kernel for `msum`: plain, rising, central, supercat,
    /// half-supercat or gessel, optionally written `gessel(3)`.
    #[arg(long)]
    pub kernel: Option<String>,
    /// Closed-form family for `closed-form`, e.g. S2_T1 or PHI_J_T0.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, value_enum, default_value_t = ValueFormat::Plain)]
    pub format: ValueFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValueFormat {
    Plain,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    pub suite: String,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub m_max: Option<u64>,
    #[arg(long)]
    pub r_max: Option<u64>,
    #[arg(long)]
    pub a_max: Option<u64>,
    #[arg(long)]
    pub t_max: Option<u64>,
    #[arg(long)]
    pub identity_max: Option<u64>,
    #[arg(long)]
    pub kr_window: Option<u64>,
    #[arg(long)]
    pub board_max: Option<u64>,
    #[arg(long)]
    pub custom_kernels: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Include wall-clock times in the output.
    #[arg(long)]
    pub timings: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl VerifyArgs {
    pub fn range(&self) -> SweepRange {
        let d = SweepRange::default();
        SweepRange {
            n_max: self.n_max.unwrap_or(d.n_max),
            m_max: self.m_max.unwrap_or(d.m_max),
            r_max: self.r_max.unwrap_or(d.r_max),
            a_max: self.a_max.unwrap_or(d.a_max),
            t_max: self.t_max.unwrap_or(d.t_max),
            identity_max: self.identity_max.unwrap_or(d.identity_max),
            kr_window: self.kr_window.unwrap_or(d.kr_window),
            board_max: self.board_max.unwrap_or(d.board_max),
            custom_kernels: self.custom_kernels.unwrap_or(d.custom_kernels),
            seed: self.seed.unwrap_or(d.seed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Interpretation {
    /// Avoid the diagonal from `(r, r)` on.
    Gessel,
    /// Avoid the diagonal points `(1, 1)..(n, n)`.
    Prefix,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long, value_enum, default_value_t = Interpretation::Gessel)]
    pub interpretation: Interpretation,
    /// Print every path as a word in R and U instead of the count.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub quantity: Quantity,
    #[arg(long)]
    pub n_max: u64,
    /// Defaults to `n-max`.
    #[arg(long)]
    pub r_max: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Claim(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonDivisible { .. } | Error::DivideByZero => Failure::Claim(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("i/o error: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => compute(&a, stdout),
        Command::Verify(a) => verify(&a, stdout, stderr),
        Command::Paths(a) => paths(&a, stdout),
        Command::Table(a) => table(&a, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Claim(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(io_failure),
        None => stdout.write_all(bytes).map_err(io_failure),
    }
}

fn need(v: Option<u64>, flag: &str, what: Quantity) -> Result<u64, Failure> {
    v.ok_or_else(|| {
        let name = what.to_possible_value().expect("no skipped variants");
        usage(format!("{} requires --{flag}", name.get_name()))
    })
}

/// Accepts `gessel` with a separate order or `gessel(3)`.
fn parse_kernel(spec: &str, r: Option<u64>) -> Result<SummandKernel, Failure> {
    let (name, order) = match spec.split_once('(') {
        Some((name, rest)) => {
            let digits = rest
                .strip_suffix(')')
                .ok_or_else(|| usage(format!("malformed kernel {spec:?}")))?;
            let order = digits
                .trim()
                .parse()
                .map_err(|_| usage(format!("malformed kernel order in {spec:?}")))?;
            (name.trim(), Some(order))
        }
        None => (spec.trim(), r),
    };
    let family = KernelFamily::from_name(name).ok_or_else(|| {
        let known: Vec<_> = KernelFamily::BUILTIN.iter().map(|f| f.name()).collect();
        usage(format!(
            "unknown kernel {name:?} (expected one of {})",
            known.join(", ")
        ))
    })?;
    SummandKernel::of_family(family, order).ok_or_else(|| {
        if family == KernelFamily::Custom {
            usage("custom kernels are not available from the command line")
        } else {
            usage(format!("kernel {name} needs an order r >= 1"))
        }
    })
}

fn closed_form(a: &ComputeArgs, n: u64) -> Result<ClosedForm, Failure> {
    let q = Quantity::ClosedForm;
    let family = a
        .family
        .as_deref()
        .ok_or_else(|| usage("closed-form requires --family"))?;
    let key = family.to_ascii_uppercase().replace('-', "_");
    let extra = if key.starts_with("S2") {
        need(a.a, "a", q)?
    } else if key.starts_with("PSI") || key.starts_with("PHI") {
        need(a.r, "r", q)?
    } else {
        0
    };
    ClosedForm::from_name(family, n, a.j, extra).ok_or_else(|| {
        usage(format!(
            "unknown closed-form family {family:?} (expected one of {})",
            ClosedForm::NAMES.join(", ")
        ))
    })
}

type Labelled = (ExactInt, Vec<(&'static str, u64)>);

fn compute_value(a: &ComputeArgs) -> Result<Labelled, Failure> {
    let q = a.quantity;
    let n = need(a.n, "n", q)?;
    Ok(match q {
        Quantity::Binomial => {
            let k = a.k.ok_or_else(|| usage("binomial requires --k"))?;
            // k may be negative; report it as given
            (binomial(n, k), vec![("n", n)])
        }
        Quantity::Catalan => (catalan(n), vec![("n", n)]),
        Quantity::Supercatalan => {
            let r = need(a.r, "r", q)?;
            (super_catalan(n, r)?, vec![("n", n), ("r", r)])
        }
        Quantity::Gessel => {
            let r = need(a.r, "r", q)?;
            (gessel(n, r)?, vec![("n", n), ("r", r)])
        }
        Quantity::Phi | Quantity::Psi | Quantity::QuarterPsi => {
            let r = need(a.r, "r", q)?;
            let f = match q {
                Quantity::Phi => gessel_convolution,
                Quantity::Psi => super_catalan_convolution,
                _ => quarter_psi,
            };
            (f(n, a.m, r)?, vec![("n", n), ("m", a.m), ("r", r)])
        }
        Quantity::Msum => {
            let spec = a
                .kernel
                .as_deref()
                .ok_or_else(|| usage("msum requires --kernel"))?;
            let kernel = parse_kernel(spec, a.r)?;
            let aa = a.a.unwrap_or(0);
            let v = m_sum(&MSumQuery {
                kernel: &kernel,
                n,
                j: a.j,
                t: a.t,
                a: aa,
            })?;
            (v, vec![("n", n), ("j", a.j), ("t", a.t), ("a", aa)])
        }
        Quantity::ClosedForm => {
            let form = closed_form(a, n)?;
            let (n, j, extra) = form.params();
            let mut params = vec![("n", n), ("j", j)];
            if let Some(x) = extra {
                params.push((
                    if form.name().starts_with("S2") {
                        "a"
                    } else {
                        "r"
                    },
                    x,
                ));
            }
            (form.eval()?, params)
        }
    })
}

fn compute(a: &ComputeArgs, stdout: &mut dyn Write) -> Result<u8, Failure> {
    let (value, params) = compute_value(a)?;
    let text = match a.format {
        ValueFormat::Plain => format!("{value}\n"),
        ValueFormat::Json => {
            let mut map = serde_json::Map::new();
            for (k, v) in params {
                map.insert(k.into(), v.into());
            }
            if a.quantity == Quantity::Binomial {
                map.insert("k".into(), a.k.into());
            }
            let name = a.quantity.to_possible_value().expect("no skipped variants");
            let mut out =
                json!({ "quantity": name.get_name(), "params": map, "value": value.to_string() });
            if let Some(k) = &a.kernel {
                out["kernel"] = k.clone().into();
            }
            if let Some(f) = &a.family {
                out["family"] = f.clone().into();
            }
            format!("{out}\n")
        }
    };
    stdout.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(0)
}

fn verify(a: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, Failure> {
    if a.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let budget = budget_ms_from_env().map_err(Failure::Usage)?;
    let runner = Runner::new(a.jobs, budget);
    let range = a.range();
    let reports: Vec<Report> = if a.suite.eq_ignore_ascii_case("all") {
        runner.run_all(&range)
    } else {
        let suite = Suite::from_name(&a.suite).map_err(|e| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            usage(format!("{e} (expected all or one of {})", names.join(", ")))
        })?;
        vec![runner.run_suite(suite, &range)?]
    };
    for r in &reports {
        let _ = write!(
            stderr,
            "{}: {} cases, {} violations",
            r.suite,
            r.cases_checked,
            r.violations.len()
        );
        if let (true, Some(ms)) = (a.timings, r.elapsed_ms) {
            let _ = write!(stderr, ", {ms} ms");
        }
        let _ = writeln!(stderr);
    }
    let mut buf = Vec::new();
    write_reports(&mut buf, &reports, a.format, a.timings).map_err(io_failure)?;
    emit(&a.out, stdout, &buf)?;
    Ok(if reports.iter().all(Report::passed) {
        0
    } else {
        1
    })
}

fn paths(a: &PathsArgs, stdout: &mut dyn Write) -> Result<u8, Failure> {
    if a.r == 0 {
        return Err(usage("paths requires --r >= 1"));
    }
    let spec = match a.interpretation {
        Interpretation::Gessel => PathSpec::gessel_tail(a.n, a.r),
        Interpretation::Prefix => PathSpec::prefix_band(a.n, a.r),
    };
    let mut text = String::new();
    if a.list {
        for p in enumerate_paths(&spec)? {
            text.push_str(&p);
            text.push('\n');
        }
    } else {
        text = format!("{}\n", count_paths(&spec));
    }
    stdout.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(0)
}

fn table_rows(a: &TableArgs) -> Result<(Vec<&'static str>, Vec<Vec<String>>), Failure> {
    let r_max = a.r_max.unwrap_or(a.n_max);
    let mut rows = Vec::new();
    let header = match a.quantity {
        Quantity::Binomial => {
            for n in 0..=a.n_max {
                for k in 0..=n {
                    rows.push(vec![
                        n.to_string(),
                        k.to_string(),
                        binomial(n, k as i64).to_string(),
                    ]);
                }
            }
            vec!["n", "k", "value"]
        }
        Quantity::Catalan => {
            for n in 0..=a.n_max {
                rows.push(vec![n.to_string(), catalan(n).to_string()]);
            }
            vec!["n", "value"]
        }
        Quantity::Supercatalan | Quantity::Gessel => {
            let gessel_table = a.quantity == Quantity::Gessel;
            for n in 0..=a.n_max {
                for r in u64::from(gessel_table)..=r_max {
                    let v = if gessel_table {
                        gessel(n, r)?
                    } else {
                        super_catalan(n, r)?
                    };
                    rows.push(vec![n.to_string(), r.to_string(), v.to_string()]);
                }
            }
            vec!["n", "r", "value"]
        }
        Quantity::Phi | Quantity::Psi | Quantity::QuarterPsi => {
            let f = match a.quantity {
                Quantity::Phi => gessel_convolution,
                Quantity::Psi => super_catalan_convolution,
                _ => quarter_psi,
            };
            for n in 0..=a.n_max {
                for r in 1..=r_max {
                    let v = f(n, a.m, r)?;
                    rows.push(vec![
                        n.to_string(),
                        a.m.to_string(),
                        r.to_string(),
                        v.to_string(),
                    ]);
                }
            }
            vec!["n", "m", "r", "value"]
        }
        Quantity::Msum | Quantity::ClosedForm => {
            return Err(usage(
                "table supports binomial, catalan, supercatalan, gessel, phi, psi and quarter-psi",
            ));
        }
    };
    Ok((header, rows))
}

fn table(a: &TableArgs, stdout: &mut dyn Write) -> Result<u8, Failure> {
    let (header, rows) = table_rows(a)?;
    let mut buf = Vec::new();
    match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(&header).map_err(|e| usage(e.to_string()))?;
            for row in &rows {
                w.write_record(row).map_err(|e| usage(e.to_string()))?;
            }
            w.flush().map_err(io_failure)?;
        }
        Format::Json => {
            for row in &rows {
                let obj: serde_json::Map<_, _> = header
                    .iter()
                    .zip(row)
                    .map(|(h, v)| {
                        // the value column stays a string; the indices are small
                        let cell = if *h == "value" {
                            serde_json::Value::from(v.clone())
                        } else {
                            serde_json::Value::from(v.parse::<u64>().expect("index"))
                        };
                        (h.to_string(), cell)
                    })
                    .collect();
                writeln!(buf, "{}", serde_json::Value::Object(obj)).map_err(io_failure)?;
            }
        }
        Format::Plain => {
            for row in &rows {
                writeln!(buf, "{}", row.join(" ")).map_err(io_failure)?;
            }
        }
    }
    emit(&a.out, stdout, &buf)?;
    Ok(0)
}
