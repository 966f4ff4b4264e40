//! The `coxhecke` command line.
//!
//! Each command produces a [`CommandResult`]: the payload goes to standard
//! output, diagnostics to standard error, and the status picks the exit code
//! (0 ok, 2 verification failed, 1 error).

pub mod verify;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::eset::e_set;
use crate::flag::count_rows_csv;
use crate::hecke::HeckeAlgebra;
use crate::poly::IntPoly;

use verify::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: String,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        Self {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
        }
    }

    fn error(err: &Error) -> Self {
        Self {
            status: Status::Error,
            payload: String::new(),
            diagnostics: vec![format!("error: {err}")],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hecke,
    Dihedral,
    Flags,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "coxhecke",
    version,
    about = "Coxeter groups, Hecke algebra structure constants, and flag-variety point counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Coxeter type: A<n>, B<n>, C<n>, D<n>, G2, F4, I2(<m>) or I2(inf)
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All nonzero N(w, w', w'') for fixed w, w'
    Nconst {
        #[command(flatten)]
        common: Common,
        /// Comma-separated generator indices; empty for the identity
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        wp: String,
    },
    /// The set E(w) with d(w) and E'(w)
    Eset {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Length bound for candidates; required for I2(inf)
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Trace of left multiplication by T_w, optionally evaluated at q = AT
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Run the built-in verification suites
    Verify {
        /// Suite to run (also accepted as --suite)
        #[arg(value_enum)]
        suite_pos: Option<Suite>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Type for the hecke suite (default A3)
        #[arg(long = "type")]
        ty: Option<String>,
        /// Flag-space dimension for the flags suite
        #[arg(long)]
        n: Option<usize>,
        /// Prime field size for the flags suite
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

pub fn run(cli: Cli) -> CommandResult {
    let result = match cli.command {
        Command::Nconst { common, w, wp } => cmd_nconst(&common.ty, &w, &wp, common.format),
        Command::Eset { common, w, max_len } => cmd_eset(&common.ty, &w, max_len, common.format),
        Command::Trace { common, w, at } => cmd_trace(&common.ty, &w, at, common.format),
        Command::Verify {
            suite_pos,
            suite,
            ty,
            n,
            q,
            format,
        } => {
            let suite = suite.or(suite_pos).unwrap_or(Suite::All);
            cmd_verify(suite, ty.as_deref(), n, q, format)
        }
    };
    result.unwrap_or_else(|e| CommandResult::error(&e))
}

fn word_text(w: &[usize]) -> String {
    w.iter().join(",")
}

fn csv_word(w: &[usize]) -> String {
    w.iter().join(" ")
}

fn csv_poly(p: &IntPoly) -> String {
    p.coeffs().iter().join(" ")
}

/// Left-aligned text table.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: Vec<&str>| {
        let text = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .join("  ");
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&mut out, header.to_vec());
    for row in rows {
        line(&mut out, row.iter().map(String::as_str).collect());
    }
    out
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct NRecord {
    w: Vec<usize>,
    wp: Vec<usize>,
    wpp: Vec<usize>,
    #[serde(rename = "N")]
    n: IntPoly,
}

/// Every nonzero `N(w, w', w'')`, one record per `w''`.
pub fn cmd_nconst(ty: &str, w: &str, wp: &str, format: Format) -> Result<CommandResult> {
    let sys = CoxeterSystem::build(ty)?;
    let (w, wp) = (
        sys.normal_form(&sys.parse_word(w)?)?,
        sys.normal_form(&sys.parse_word(wp)?)?,
    );
    let prod = HeckeAlgebra::new(&sys).basis_product(w, wp);
    let records: Vec<NRecord> = prod
        .terms()
        .map(|(wpp, n)| NRecord {
            w: sys.word(w),
            wp: sys.word(wp),
            wpp: sys.word(wpp),
            n: n.clone(),
        })
        .collect();
    let payload = match format {
        Format::Json => to_json(&records)?,
        Format::Csv => {
            let mut out = String::from("w,wp,wpp,N\n");
            for r in &records {
                writeln!(
                    out,
                    "{},{},{},{}",
                    csv_word(&r.w),
                    csv_word(&r.wp),
                    csv_word(&r.wpp),
                    csv_poly(&r.n)
                )
                .expect("string write");
            }
            out
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        format!("[{}]", word_text(&r.wpp)),
                        r.n.to_string(),
                        serde_json::to_string(&r.n).expect("poly json"),
                    ]
                })
                .collect();
            let mut out = format!(
                "{ty}: T_[{}] T_[{}]\n",
                word_text(&sys.word(w)),
                word_text(&sys.word(wp))
            );
            out.push_str(&table(&["w''", "N", "coeffs"], &rows));
            out
        }
    };
    Ok(CommandResult::ok(payload))
}

pub fn cmd_eset(
    ty: &str,
    w: &str,
    max_len: Option<usize>,
    format: Format,
) -> Result<CommandResult> {
    let sys = CoxeterSystem::build(ty)?;
    let w = sys.normal_form(&sys.parse_word(w)?)?;
    let mut diagnostics = Vec::new();
    if sys.is_finite() && max_len.is_some() {
        diagnostics.push("note: --max-len is ignored for finite groups".to_string());
    }
    let report = e_set(&sys, w, max_len)?;
    if let Some(l) = report.truncation {
        diagnostics.push(format!("note: candidates truncated at length {l}"));
    }
    let json = report.to_json(&sys);
    let payload = match format {
        Format::Json => to_json(&json)?,
        Format::Csv => {
            let mut out = String::from("z,N,deg,in_e_prime\n");
            for m in &json.members {
                let prime = json.e_prime.contains(&m.z);
                writeln!(
                    out,
                    "{},{},{},{}",
                    csv_word(&m.z),
                    csv_poly(&m.n),
                    m.deg,
                    u8::from(prime)
                )
                .expect("string write");
            }
            out
        }
        Format::Table => {
            let mut out = format!("{ty}: E([{}])", word_text(&json.w));
            match json.truncation {
                Some(l) => writeln!(out, ", candidates of length <= {l} (truncated)"),
                None => writeln!(out),
            }
            .expect("string write");
            let rows: Vec<Vec<String>> = json
                .members
                .iter()
                .map(|m| {
                    vec![
                        format!("[{}]", word_text(&m.z)),
                        m.n.to_string(),
                        m.deg.to_string(),
                        if json.e_prime.contains(&m.z) {
                            "*".into()
                        } else {
                            String::new()
                        },
                    ]
                })
                .collect();
            out.push_str(&table(&["z", "N(w,z,z)", "deg", "E'"], &rows));
            match json.d {
                Some(d) if report.is_truncated() => writeln!(out, "d(w) >= {d} (truncated search)"),
                Some(d) => writeln!(out, "d(w) = {d}"),
                None if report.is_truncated() => {
                    writeln!(out, "no members up to the truncation bound")
                }
                None => writeln!(out, "E(w) is empty"),
            }
            .expect("string write");
            out
        }
    };
    Ok(CommandResult {
        status: Status::Ok,
        payload,
        diagnostics,
    })
}

pub fn cmd_trace(ty: &str, w: &str, at: Option<i64>, format: Format) -> Result<CommandResult> {
    let sys = CoxeterSystem::build(ty)?;
    let w = sys.normal_form(&sys.parse_word(w)?)?;
    let trace = HeckeAlgebra::new(&sys).regular_trace(w)?;
    let value = at.map(|x| trace.eval(x));
    let payload = match format {
        Format::Json => {
            let value_json = value
                .as_ref()
                .map(|v| serde_json::Number::from_string_unchecked(v.to_string()));
            to_json(&json!({
                "type": ty,
                "w": sys.word(w),
                "trace": trace,
                "at": at,
                "value": value_json,
            }))?
        }
        Format::Csv => {
            let mut out = String::from("type,w,trace,at,value\n");
            writeln!(
                out,
                "{ty},{},{},{},{}",
                csv_word(&sys.word(w)),
                csv_poly(&trace),
                at.map(|a| a.to_string()).unwrap_or_default(),
                value.as_ref().map(|v| v.to_string()).unwrap_or_default()
            )
            .expect("string write");
            out
        }
        Format::Table => {
            let mut out = format!(
                "{ty}: tr(T_[{}]) = {}  {}\n",
                word_text(&sys.word(w)),
                trace,
                serde_json::to_string(&trace).expect("poly json")
            );
            if let (Some(a), Some(v)) = (at, &value) {
                writeln!(out, "at q = {a}: {v}").expect("string write");
            }
            out
        }
    };
    Ok(CommandResult::ok(payload))
}

pub fn cmd_verify(
    suite: Suite,
    ty: Option<&str>,
    n: Option<usize>,
    q: Option<u32>,
    format: Format,
) -> Result<CommandResult> {
    let mut checks: Vec<Check> = Vec::new();
    let mut rows = Vec::new();
    if matches!(suite, Suite::Hecke | Suite::All) {
        let sys = CoxeterSystem::build(ty.unwrap_or("A3"))?;
        checks.extend(verify::hecke_suite(&sys)?);
    }
    if matches!(suite, Suite::Dihedral | Suite::All) {
        checks.extend(verify::dihedral_suite()?);
    }
    if matches!(suite, Suite::Flags | Suite::All) {
        let spaces = match (n, q) {
            (Some(n), Some(q)) => vec![(n, q)],
            (None, None) => verify::DEFAULT_FLAG_SPACES.to_vec(),
            _ => {
                return Err(Error::InvalidWord(
                    "--n and --q must be given together".into(),
                ))
            }
        };
        let (c, r) = verify::flags_suite(&spaces)?;
        checks.extend(c);
        rows = r;
    }

    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let status = if failed.is_empty() {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    let payload = match format {
        Format::Json => to_json(&json!({
            "status": if failed.is_empty() { "ok" } else { "verification_failed" },
            "checks": checks,
            "mismatches": failed,
            "counts": rows,
        }))?,
        Format::Csv if suite == Suite::Flags => count_rows_csv(&rows),
        Format::Csv => {
            let mut out = String::from("suite,check,pass,detail\n");
            for c in &checks {
                writeln!(
                    out,
                    "{},\"{}\",{},\"{}\"",
                    c.suite,
                    c.name.replace('"', "\"\""),
                    u8::from(c.passed),
                    c.detail.replace('"', "\"\"")
                )
                .expect("string write");
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for c in &checks {
                writeln!(
                    out,
                    "{} [{}] {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name,
                    c.detail
                )
                .expect("string write");
            }
            writeln!(out, "{} checks, {} failed", checks.len(), failed.len())
                .expect("string write");
            out
        }
    };
    let diagnostics = failed
        .iter()
        .map(|c| format!("mismatch: [{}] {}: {}", c.suite, c.name, c.detail))
        .collect();
    Ok(CommandResult {
        status,
        payload,
        diagnostics,
    })
}
