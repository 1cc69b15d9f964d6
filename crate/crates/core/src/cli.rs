//! Command-line front end. Exit codes: 0 when every requested check holds
//! (mismatched conjectures only warn), 1 when a theorem or user claim fails,
//! 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::multisum::{MultisumData, MultisumSpec};
use crate::partitions::{self, PartitionPredicate};
use crate::products::{ProductData, ProductSpec};
use crate::series::first_mismatch;
use crate::verify::{
    catalog, check_lemma, check_qdiff_capparelli, check_wz, find_entry, verify_all, Filter, RunReport, StatusClaim,
    Value, VerifyOptions, VerifyReport, DEFAULT_THEOREM_ORDER, DEFAULT_X_DEGREE,
};

const ORDER_ENV: &str = "QRR_ORDER";

#[derive(Debug, Parser)]
#[command(name = "qrr", version, about = "Exact coefficient checks of q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OrderArg {
    /// Truncation order (inclusive exponent of q).
    #[arg(long, env = ORDER_ENV)]
    order: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog entries.
    List {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, conflicts_with = "conjectures")]
        theorems: bool,
        #[arg(long)]
        conjectures: bool,
    },
    /// Verify catalog entries coefficient by coefficient.
    Verify {
        names: Vec<String>,
        #[arg(long, conflicts_with = "names")]
        all: bool,
        #[arg(long, conflicts_with_all = ["names", "conjectures"])]
        theorems: bool,
        #[arg(long, conflicts_with = "names")]
        conjectures: bool,
        /// Name glob, e.g. `a22-*`.
        #[arg(long, conflicts_with = "names")]
        filter: Option<String>,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value_t = DEFAULT_X_DEGREE)]
        x_degree: usize,
        /// Write the JSON report here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker count; defaults to the available cores.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        /// Show elapsed times in the text report.
        #[arg(long)]
        timings: bool,
    },
    /// Print the coefficients of one side of an entry.
    Series {
        name: String,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value = "lhs", value_parser = ["lhs", "rhs"])]
        side: String,
        #[arg(long, default_value_t = DEFAULT_X_DEGREE)]
        x_degree: usize,
    },
    /// Count partitions under a predicate, optionally against a second one.
    Partitions {
        /// `ag-c k i`, `ag-d k i`, `cap-c a`, `cap-d a` or `residues m s1,s2,.. [--distinct]`.
        #[arg(long, allow_hyphen_values = true)]
        predicate: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<String>,
    },
    /// Check the WZ certificate of the fourth summation lemma.
    Wz {
        #[arg(long)]
        max_m: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check one of the finite summation lemmas.
    Lemma {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        part: u8,
        #[arg(long)]
        max_m: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check the q-difference equation of the Capparelli generating function.
    Qdiff {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        a: u8,
        #[arg(long, default_value_t = DEFAULT_X_DEGREE)]
        x_degree: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Compare a user multisum with a user product, both TOML.
    ///
    /// With one file, it must hold `[multisum]` and `[product]` tables.
    CheckSpec {
        file: PathBuf,
        product_file: Option<PathBuf>,
        #[command(flatten)]
        order: OrderArg,
    },
}

/// Failure of a command: usage problems exit 2, failed claims exit 1.
enum Failure {
    Usage(String),
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the command line `argv` (program name first) against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Claim) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn order_or_default(arg: &OrderArg) -> usize {
    arg.order.unwrap_or(DEFAULT_THEOREM_ORDER)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::List {
            filter,
            theorems,
            conjectures,
        } => {
            let f = status_filter(filter, theorems, conjectures);
            for e in f.select()? {
                writeln!(out, "{:<24} {:<10} {}", e.name, status_str(e.status_claim), e.reference)?;
            }
            Ok(())
        }
        Command::Verify {
            names,
            all,
            theorems,
            conjectures,
            filter,
            order,
            x_degree,
            json,
            jobs,
            timings,
        } => {
            let f = if !names.is_empty() {
                Filter::Names(names)
            } else if all || theorems || conjectures || filter.is_some() {
                status_filter(filter, theorems, conjectures)
            } else {
                return Err(Failure::Usage("give entry names, --all, --theorems, --conjectures or --filter".into()));
            };
            let jobs = jobs
                .map(usize::from)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let opts = VerifyOptions {
                order: order.order,
                x_degree,
            };
            let reports = verify_all(&f, opts, jobs)?;
            print_reports(&reports, timings, out, err)?;
            if let Some(path) = json {
                let run = RunReport {
                    order: order.order.unwrap_or_else(|| reports.iter().map(|r| r.order).max().unwrap_or(0)),
                    entries: reports.clone(),
                };
                let text = serde_json::to_string_pretty(&run).map_err(|e| Failure::Usage(e.to_string()))?;
                if path == Path::new("-") {
                    writeln!(out, "{text}")?;
                } else {
                    fs::write(&path, text + "\n")
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                }
            }
            claim_result(&reports)
        }
        Command::Series {
            name,
            order,
            side,
            x_degree,
        } => {
            let entry = find_entry(&name)?;
            let order = order.order.unwrap_or_else(|| entry.default_order());
            let side = if side == "lhs" { &entry.lhs } else { &entry.rhs };
            match side.eval(order, x_degree)?.0 {
                Value::Uni(s) => writeln!(out, "{s}")?,
                Value::Bi(b) => {
                    for (m, row) in b.rows().iter().enumerate() {
                        writeln!(out, "x^{m}: {row}")?;
                    }
                }
            }
            Ok(())
        }
        Command::Partitions {
            predicate,
            max_n,
            compare,
        } => {
            let p: PartitionPredicate = predicate.parse()?;
            let q: Option<PartitionPredicate> = compare.as_deref().map(str::parse).transpose()?;
            let gp = partitions::gf(&p, max_n);
            match &q {
                None => {
                    writeln!(out, "n count")?;
                    for (n, c) in gp.coeffs().iter().enumerate() {
                        writeln!(out, "{n} {c}")?;
                    }
                    Ok(())
                }
                Some(q) => {
                    let gq = partitions::gf(q, max_n);
                    writeln!(out, "n {p} | {q}")?;
                    for n in 0..=max_n {
                        let (a, b) = (gp.coeff(n), gq.coeff(n));
                        let mark = if a == b { "" } else { "  <- differs" };
                        writeln!(out, "{n} {a} {b}{mark}")?;
                    }
                    match first_mismatch(&gp, &gq)? {
                        None => {
                            writeln!(out, "equinumerous for all n <= {max_n}")?;
                            Ok(())
                        }
                        Some(n) => {
                            writeln!(out, "counts differ first at n = {n}")?;
                            Err(Failure::Claim)
                        }
                    }
                }
            }
        }
        Command::Wz { max_m, order } => single(check_wz(max_m, order_or_default(&order))?, out, err),
        Command::Lemma { part, max_m, order } => single(
            check_lemma(part as usize, max_m, order_or_default(&order))?,
            out,
            err,
        ),
        Command::Qdiff { a, x_degree, order } => single(
            check_qdiff_capparelli(a as usize, x_degree, order_or_default(&order))?,
            out,
            err,
        ),
        Command::CheckSpec {
            file,
            product_file,
            order,
        } => {
            let (spec, product) = load_user_identity(&file, product_file.as_deref())?;
            let order = order_or_default(&order);
            let lhs = spec.eval(order)?;
            let rhs = product.eval(order)?;
            match first_mismatch(&lhs, &rhs)? {
                None => {
                    writeln!(out, "verified to order {order}")?;
                    Ok(())
                }
                Some(n) => {
                    writeln!(
                        out,
                        "mismatch at q^{n}: lhs {} rhs {}",
                        lhs.coeff(n),
                        rhs.coeff(n)
                    )?;
                    Err(Failure::Claim)
                }
            }
        }
    }
}

fn status_filter(glob: Option<String>, theorems: bool, conjectures: bool) -> Filter {
    match (glob, theorems, conjectures) {
        (Some(g), _, _) => Filter::Glob(g),
        (None, true, _) => Filter::Theorems,
        (None, _, true) => Filter::Conjectures,
        _ => Filter::All,
    }
}

fn status_str(s: StatusClaim) -> &'static str {
    match s {
        StatusClaim::Theorem => "theorem",
        StatusClaim::Conjecture => "conjecture",
    }
}

fn report_line(r: &VerifyReport, timings: bool) -> String {
    let mut line = format!(
        "{:<24} {:<10} {:<8} order {}",
        r.name,
        status_str(r.status_claim),
        if r.verified() { "verified" } else { "MISMATCH" },
        r.order
    );
    if let Some(d) = r.x_degree {
        line += &format!(" x-degree {d}");
    }
    if let Some(m) = &r.first_mismatch {
        let at = match m.x_exponent {
            Some(x) => format!("x^{x} q^{}", m.exponent),
            None => format!("q^{}", m.exponent),
        };
        line += &format!(" at {at}: lhs {} rhs {}", m.lhs, m.rhs);
    }
    if let Some(note) = &r.note {
        line += &format!(" ({note})");
    }
    if timings {
        line += &format!(" [{} terms, {} ms]", r.term_count, r.elapsed_ms);
    }
    line
}

fn print_reports(reports: &[VerifyReport], timings: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    for r in reports {
        writeln!(out, "{}", report_line(r, timings))?;
        if !r.verified() && r.status_claim == StatusClaim::Conjecture {
            writeln!(err, "warning: conjecture {} does not hold to order {}", r.name, r.order)?;
        }
    }
    let ok = reports.iter().filter(|r| r.verified()).count();
    writeln!(out, "{ok} of {} verified", reports.len())?;
    Ok(())
}

fn claim_result(reports: &[VerifyReport]) -> CmdResult {
    if reports
        .iter()
        .any(|r| !r.verified() && r.status_claim == StatusClaim::Theorem)
    {
        Err(Failure::Claim)
    } else {
        Ok(())
    }
}

fn single(report: VerifyReport, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    print_reports(std::slice::from_ref(&report), false, out, err)?;
    claim_result(std::slice::from_ref(&report))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CombinedFile {
    multisum: MultisumData,
    product: ProductData,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn parse_toml<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    toml::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Loads a multisum and a product from one combined file or two separate ones.
pub fn load_user_identity(file: &Path, product_file: Option<&Path>) -> Result<(MultisumSpec, ProductSpec)> {
    let (m, p): (MultisumData, ProductData) = match product_file {
        Some(pf) => (parse_toml(file)?, parse_toml(pf)?),
        None => {
            let c: CombinedFile = parse_toml(file)?;
            (c.multisum, c.product)
        }
    };
    let spec = MultisumSpec::try_from(m)?;
    if spec.x_weight().is_some() {
        return Err(Error::InvalidSpec("check-spec compares univariate sums; drop x_weight".into()));
    }
    Ok((spec, ProductSpec::try_from(p)?))
}

/// Names of all catalog entries, for shell completion and documentation.
pub fn entry_names() -> Vec<String> {
    catalog().into_iter().map(|e| e.name).collect()
}
