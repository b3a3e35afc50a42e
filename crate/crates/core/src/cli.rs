//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{filtration_table, pre_filtration_dims, sweep, FiltrationTable};
use crate::error::Error;
use crate::ffpoly::PrimeModulus;
use crate::homspace::{
    div_r_shift, family, ma_space, mul_r_shift, span_rank, verify_k_lemma, verify_qr_identity,
    verify_substitution_identity, HomProblem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ghostkernel",
    version,
    about = "Total Steenrod power kernels M_a over F_p[t,x] and the rank bounds they give"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Family,
    Qr,
    Klemma,
    Subst,
    Shift,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension (and optionally the echelon basis) of M_a.
    Ma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
        /// Also print the basis.
        #[arg(long)]
        basis: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the polynomial identities and membership statements for one prime.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hom dimensions along the filtration V_{a-1} + U_k, k = 0..p.
    Filtration {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank reports for every (p, a) with p a <= max-pa.
    Sweep {
        #[arg(long = "max-pa")]
        max_pa: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: impl Into<String>, r: crate::Result<bool>, ok: impl Into<String>) -> Self {
        match r {
            Ok(passed) => Check::new(name, passed, ok),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyReport<'a> {
    p: u32,
    suite: &'a str,
    passed: bool,
    checks: &'a [Check],
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn modulus(p: u64) -> Result<PrimeModulus, Failure> {
    PrimeModulus::new(p).map_err(|_| Failure::Usage(format!("p must be an odd prime, got {p}")))
}

fn check_a(a: u32) -> Result<(), Failure> {
    if a < 2 {
        return Err(Failure::Usage(format!("a must be at least 2, got {a}")));
    }
    Ok(())
}

fn emit(body: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn family_checks(p: PrimeModulus) -> Vec<Check> {
    let mut checks = Vec::new();
    let elements = family(p);
    match HomProblem::for_ma(p, 2) {
        Ok(m2) => {
            for (k, e) in elements.iter().enumerate() {
                checks.push(Check::from_result(
                    format!("family[k={k}] in M_2"),
                    m2.is_member(e),
                    e.to_string(),
                ));
            }
        }
        Err(e) => checks.push(Check::new("family", false, e.to_string())),
    }
    let rank = span_rank(p, &elements);
    checks.push(Check::new(
        "family independent",
        rank == elements.len(),
        format!("rank {rank} of {} elements", elements.len()),
    ));
    checks
}

pub fn shift_checks(p: PrimeModulus) -> Vec<Check> {
    let q = p.get();
    let mut checks = Vec::new();
    let spaces: Vec<_> = (2..=q).map(|a| (a, ma_space(p, a))).collect();
    let dim2 = match &spaces[0].1 {
        Ok(s) => s.dim(),
        Err(e) => return vec![Check::new("M_2", false, e.to_string())],
    };
    for (a, space) in &spaces {
        let space = match space {
            Ok(s) => s,
            Err(e) => {
                checks.push(Check::new(format!("M_{a}"), false, e.to_string()));
                continue;
            }
        };
        checks.push(Check::new(
            format!("dim M_{a} = dim M_2"),
            space.dim() == dim2,
            format!("{} vs {dim2}", space.dim()),
        ));
        if *a < q {
            let round_trips = space.basis().iter().try_fold(true, |ok, m| {
                let up = mul_r_shift(p, *a, a + 1, m)?;
                Ok::<_, Error>(ok && &div_r_shift(p, a + 1, &up)? == m)
            });
            checks.push(Check::from_result(
                format!("M_{a} -> M_{} -> M_{a} round trip", a + 1),
                round_trips,
                format!("{} basis vectors", space.dim()),
            ));
        }
    }
    checks
}

pub fn run_suite(p: PrimeModulus, suite: Suite) -> Vec<Check> {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Family {
        checks.extend(family_checks(p));
    }
    if all || suite == Suite::Qr {
        checks.push(Check::new("Q(r) identity", verify_qr_identity(p), ""));
    }
    if all || suite == Suite::Subst {
        checks.push(Check::new(
            "substitution identity",
            verify_substitution_identity(p),
            "",
        ));
    }
    if all || suite == Suite::Klemma {
        checks.push(Check::new("K-polynomial identity", verify_k_lemma(p), ""));
    }
    if all || suite == Suite::Shift {
        checks.extend(shift_checks(p));
    }
    checks
}

fn filtration_text(table: &FiltrationTable, pre: &[usize]) -> String {
    let mut s = format!("p = {}, a = {}\n", table.p, table.a);
    s.push_str("  k  dim V  hom_dim  ext11\n");
    for r in &table.rows {
        let ext = r.ext11.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(
            s,
            "{:>3}  {:>5}  {:>7}  {:>5}",
            r.k, r.rep_dim, r.hom_dim, ext
        );
    }
    let pre: Vec<String> = pre.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        s,
        "pre-filtration hom dims (V_(a-2) + U_k): {}",
        pre.join(" ")
    );
    s
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Ma {
            p,
            a,
            basis,
            format,
            out,
        } => {
            let m = modulus(p)?;
            check_a(a)?;
            let report = ma_space(m, a)?.to_report();
            let body = match format {
                Format::Json => json_line(&report),
                Format::Csv => format!(
                    "p,a,delta,dim\n{},{},{},{}\n",
                    report.p, a, report.delta, report.dim
                ),
                Format::Text => {
                    let mut s = format!(
                        "p = {}, a = {}, delta = {}: dim M_a = {}\n",
                        report.p, a, report.delta, report.dim
                    );
                    if basis {
                        for b in &report.basis {
                            let _ = writeln!(s, "  {b}");
                        }
                    }
                    s
                }
            };
            emit(&body, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            p,
            suite,
            format,
            out,
        } => {
            let m = modulus(p)?;
            let checks = run_suite(m, suite);
            let passed = checks.iter().all(|c| c.passed);
            let suite_name = format!("{suite:?}").to_lowercase();
            let body = match format {
                Format::Json => json_line(&VerifyReport {
                    p: m.get(),
                    suite: &suite_name,
                    passed,
                    checks: &checks,
                }),
                Format::Csv => {
                    let mut s = String::from("check,passed\n");
                    for c in &checks {
                        let _ = writeln!(s, "{},{}", c.name.replace(',', ";"), c.passed);
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in &checks {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        let _ = writeln!(s, "{tag} {} {}", c.name, c.detail);
                    }
                    let _ = writeln!(
                        s,
                        "{} checks, {}",
                        checks.len(),
                        if passed { "all passed" } else { "FAILED" }
                    );
                    s
                }
            };
            emit(&body, &out, stdout)?;
            Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Filtration { p, a, format, out } => {
            let m = modulus(p)?;
            check_a(a)?;
            let table = filtration_table(m, a)?;
            let pre = pre_filtration_dims(m, a)?;
            let body = match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Wire<'a> {
                        #[serde(flatten)]
                        table: &'a FiltrationTable,
                        pre_filtration: &'a [usize],
                    }
                    json_line(&Wire {
                        table: &table,
                        pre_filtration: &pre,
                    })
                }
                Format::Csv => {
                    let mut s = String::from("k,rep_dim,hom_dim,ext11\n");
                    for r in &table.rows {
                        let ext = r.ext11.map_or(String::new(), |e| e.to_string());
                        let _ = writeln!(s, "{},{},{},{}", r.k, r.rep_dim, r.hom_dim, ext);
                    }
                    s
                }
                Format::Text => filtration_text(&table, &pre),
            };
            emit(&body, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            max_pa,
            jobs,
            format,
            out,
        } => {
            if max_pa < 6 {
                return Err(Failure::Usage(format!(
                    "max-pa must be at least 6, got {max_pa}"
                )));
            }
            if jobs == 0 {
                return Err(Failure::Usage("jobs must be at least 1".into()));
            }
            let report = sweep(max_pa, jobs)?;
            let body = match format {
                Format::Json => {
                    let mut s = report.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => report.to_csv(),
                Format::Text => {
                    let mut s = String::from("  p   a  dim_ma  ext11  bounds  Z/p      ms\n");
                    for r in &report.rows {
                        let _ = writeln!(
                            s,
                            "{:>3} {:>3} {:>7} {:>6}  [{},{}]  {:<5} {:>8.1}",
                            r.p,
                            r.a,
                            r.dim_ma,
                            r.ext11,
                            r.rank_lower,
                            r.rank_upper,
                            r.conjecture_zp,
                            r.ms
                        );
                    }
                    s
                }
            };
            emit(&body, &out, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                return EXIT_USAGE;
            }
            let _ = stdout.write_all(rendered.as_bytes());
            return EXIT_OK;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["ghostkernel"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ma_with_basis() {
        let (code, out, _) = call(&["ma", "--p", "3", "--a", "2", "--basis"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim M_a = 2"));
        assert!(out.contains("  t^3\n") && out.contains("  x^3\n"));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = call(&["ma", "--p", "4", "--a", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("p must be an odd prime"));
        assert_eq!(call(&["ma", "--p", "5", "--a", "1"]).0, 2);
        assert_eq!(call(&["sweep", "--max-pa", "5"]).0, 2);
        assert_eq!(call(&["sweep", "--max-pa", "6", "--jobs", "0"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["ma", "--p", "3"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_family_text() {
        let (code, out, _) = call(&["verify", "--p", "3", "--suite", "family"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.contains("in M_2")).count(), 2);
        assert!(out.contains("all passed"));
    }

    #[test]
    fn unwritable_output_exits_3() {
        let (code, _, err) = call(&[
            "sweep",
            "--max-pa",
            "6",
            "--out",
            "/nonexistent-dir/x/sweep.json",
        ]);
        assert_eq!(code, 3);
        assert!(err.contains("cannot write"));
    }
}
