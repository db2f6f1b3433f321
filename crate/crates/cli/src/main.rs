//! Command-line census of non-abelian semidirect-product covers.
//!
//! Subcommands: count, census, verify, factor, symplectic.
//! Exit codes: 0 ok/match, 1 verification mismatch, 2 invalid input,
//! 3 I/O failure, 4 integrity error (a structural assumption failed).

mod report;

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;

use cover_census::counting::total_cover_count;
use cover_census::modular::{is_prime, pow_mod};
use cover_census::oracle::{verified_cover_count, verify, DEFAULT_ENUMERATION_BUDGET};
use cover_census::poly::{all_ones_poly, eigenvalue_set};
use cover_census::symplectic::adapt_basis;
use cover_census::Error as CoreError;

use report::{
    render_count_text, render_verify_text, CensusRowJson, ReportJson, CENSUS_CSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "cover-census",
    version,
    about = "Exact counts of non-abelian semidirect-product covers of curves, with independent verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Candidate budget for the enumeration oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the cover counts for one (g, m, n).
    Count {
        /// Genus of the base curve (>= 2).
        #[arg(long)]
        g: u32,
        /// Order of the normal cyclic subgroup (>= 2, coprime to n).
        #[arg(long)]
        m: u64,
        /// Degree of the intermediate cyclic cover (>= 2).
        #[arg(long)]
        n: u64,
    },
    /// Tabulate counts over every coprime pair in a grid.
    Census {
        #[arg(long)]
        g: u32,
        /// Largest m to include.
        #[arg(long)]
        m_max: u64,
        /// Largest n to include.
        #[arg(long)]
        n_max: u64,
        /// Verify each row against the oracles.
        #[arg(long)]
        verify: bool,
    },
    /// Compare the closed-form count against both oracles.
    Verify {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// List the lifted eigenvalues modulo p^e with their Hensel trace.
    Factor {
        /// Cover degree: roots of 1 + x + ... + x^(n-1) are listed.
        #[arg(long)]
        n: u32,
        /// Prime, coprime to n.
        #[arg(long)]
        p: u64,
        /// Prime-power exponent.
        #[arg(long)]
        e: u32,
    },
    /// Build an adapted symplectic basis for a surjection onto Z/nZ.
    Symplectic {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u64,
        /// Comma-separated residues of delta on the 2g ambient basis vectors.
        #[arg(long)]
        delta: String,
    },
}

enum CliError {
    Invalid(String),
    Io(String),
    Integrity(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
            CliError::Integrity(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Io(m) | CliError::Integrity(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::Integrity(msg) => CliError::Integrity(format!("integrity error: {msg}")),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mut output = String::new();
    let code = match cli.command {
        Command::Count { g, m, n } => cmd_count(g, m, n, cli.format, &mut output)?,
        Command::Census {
            g,
            m_max,
            n_max,
            verify,
        } => cmd_census(g, m_max, n_max, verify, cli.budget, cli.format, &mut output)?,
        Command::Verify { g, m, n } => cmd_verify(g, m, n, cli.budget, cli.format, &mut output)?,
        Command::Factor { n, p, e } => cmd_factor(n, p, e, cli.format, &mut output)?,
        Command::Symplectic { g, n, delta } => {
            cmd_symplectic(g, n, &delta, cli.format, &mut output)?
        }
    };
    match cli.out {
        Some(path) => {
            let mut file = File::create(&path)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            file.write_all(output.as_bytes())?;
        }
        None => {
            print!("{output}");
        }
    }
    Ok(code)
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn cmd_count(g: u32, m: u64, n: u64, format: Format, out: &mut String) -> Result<i32, CliError> {
    let report = total_cover_count(g, m, n)?;
    match format {
        Format::Text => out.push_str(&render_count_text(&report)),
        Format::Json => out.push_str(&to_json(&ReportJson::new(&report, None))),
        Format::Csv => {
            out.push_str(CENSUS_CSV_HEADER);
            out.push('\n');
            out.push_str(&census_row(&report, "skipped").csv_line());
            out.push('\n');
        }
    }
    Ok(0)
}

fn census_row(report: &cover_census::counting::CoverCountReport, verified: &str) -> CensusRowJson {
    CensusRowJson {
        g: report.g,
        m: report.m,
        n: report.n,
        t: report.refinement_count.to_string(),
        n_cyclic: report.cyclic_count.to_string(),
        c_total: report.total.to_string(),
        verified: verified.to_string(),
    }
}

fn cmd_census(
    g: u32,
    m_max: u64,
    n_max: u64,
    verify_rows: bool,
    budget: u64,
    format: Format,
    out: &mut String,
) -> Result<i32, CliError> {
    if g < 2 {
        return Err(CliError::Invalid("genus must be >= 2".into()));
    }
    if m_max < 2 || n_max < 2 {
        return Err(CliError::Invalid("grid bounds must be >= 2".into()));
    }
    let mut rows = Vec::new();
    for m in 2..=m_max {
        for n in 2..=n_max {
            if m.gcd(&n) != 1 {
                continue;
            }
            let report = total_cover_count(g, m, n)?;
            let verified = if verify_rows {
                let v = verify(g, m, n, budget)?;
                match (v.matched, v.enumeration_ran()) {
                    (true, true) => "true",
                    (true, false) => "kernel-verified",
                    (false, _) => "false",
                }
            } else {
                "skipped"
            };
            rows.push(census_row(&report, verified));
        }
    }
    match format {
        Format::Csv | Format::Text => {
            out.push_str(CENSUS_CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.csv_line());
                out.push('\n');
            }
        }
        Format::Json => out.push_str(&to_json(&rows)),
    }
    Ok(0)
}

fn cmd_verify(
    g: u32,
    m: u64,
    n: u64,
    budget: u64,
    format: Format,
    out: &mut String,
) -> Result<i32, CliError> {
    let (report, verification) = verified_cover_count(g, m, n, budget)?;
    match format {
        Format::Text => out.push_str(&render_verify_text(&verification)),
        Format::Json | Format::Csv => {
            out.push_str(&to_json(&ReportJson::new(&report, Some(&verification))));
        }
    }
    Ok(if verification.matched { 0 } else { 1 })
}

#[derive(serde::Serialize)]
struct FactorRowJson {
    root_mod_p: u64,
    lifted: u64,
    order: u32,
    residual: u64,
}

/// Multiplicative order of a modulo q; divides n for lifted roots.
fn multiplicative_order(a: u64, q: u64, bound: u32) -> u32 {
    let mut acc = a % q;
    for k in 1..=bound {
        if acc == 1 {
            return k;
        }
        acc = cover_census::modular::mul_mod(acc, a, q);
    }
    0
}

fn cmd_factor(n: u32, p: u64, e: u32, format: Format, out: &mut String) -> Result<i32, CliError> {
    if n < 2 {
        return Err(CliError::Invalid("n must be >= 2".into()));
    }
    if !is_prime(p) {
        return Err(CliError::Invalid(format!("{p} is not prime")));
    }
    if e < 1 {
        return Err(CliError::Invalid("e must be >= 1".into()));
    }
    let roots = eigenvalue_set(n, p, e)?;
    let q = p
        .checked_pow(e)
        .ok_or_else(|| CliError::Invalid("p^e does not fit in 64 bits".into()))?;
    let f = all_ones_poly(n);
    let rows: Vec<FactorRowJson> = roots
        .iter()
        .map(|&root| FactorRowJson {
            root_mod_p: root % p,
            lifted: root,
            order: multiplicative_order(root, q, n),
            residual: f.eval_mod(root, q),
        })
        .collect();
    if let Some(bad) = rows.iter().find(|r| r.residual != 0) {
        return Err(CliError::Integrity(format!(
            "lifted root {} does not annihilate f modulo {q}",
            bad.lifted
        )));
    }
    match format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct FactorJson {
                n: u32,
                p: u64,
                e: u32,
                modulus: u64,
                roots: Vec<FactorRowJson>,
            }
            out.push_str(&to_json(&FactorJson {
                n,
                p,
                e,
                modulus: q,
                roots: rows,
            }));
        }
        Format::Text | Format::Csv => {
            out.push_str(&format!(
                "roots of f(x) = 1 + x + ... + x^{} modulo {p}^{e} = {q}\n",
                n - 1
            ));
            if rows.is_empty() {
                out.push_str(&format!(
                    "no roots: gcd({n}, {}) - 1 = 0 linear factors\n",
                    p - 1
                ));
            } else {
                out.push_str("root_mod_p  lifted  order  f(lifted) mod p^e\n");
                for row in &rows {
                    // sanity: a lifted root of order d satisfies root^d = 1
                    debug_assert_eq!(pow_mod(row.lifted, row.order as u64, q), 1);
                    out.push_str(&format!(
                        "{:>10}  {:>6}  {:>5}  {:>12} (ok)\n",
                        row.root_mod_p, row.lifted, row.order, row.residual
                    ));
                }
            }
        }
    }
    Ok(0)
}

fn cmd_symplectic(
    g: u32,
    n: u64,
    delta_csv: &str,
    format: Format,
    out: &mut String,
) -> Result<i32, CliError> {
    let delta: Vec<u64> = delta_csv
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Invalid(format!("delta entry '{part}' is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    let cert = adapt_basis(&delta, g, n)?;
    let reduced: Vec<u64> = delta.iter().map(|&d| d % n).collect();
    let check = cert.check(&reduced);
    match format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct CertJson {
                g: u32,
                n: u64,
                x: Vec<Vec<i64>>,
                y: Vec<Vec<i64>>,
                change_of_basis: Vec<Vec<i64>>,
                delta_x: Vec<u64>,
                delta_y: Vec<u64>,
                checks: Vec<(String, bool)>,
            }
            let dim = 2 * g as usize;
            let change: Vec<Vec<i64>> = (0..dim)
                .map(|i| cert.change_of_basis.row(i).to_vec())
                .collect();
            out.push_str(&to_json(&CertJson {
                g,
                n,
                x: cert.x.clone(),
                y: cert.y.clone(),
                change_of_basis: change,
                delta_x: cert.delta_x.clone(),
                delta_y: cert.delta_y.clone(),
                checks: check
                    .lines()
                    .iter()
                    .map(|&(name, ok)| (name.to_string(), ok))
                    .collect(),
            }));
        }
        Format::Text | Format::Csv => {
            out.push_str(&format!(
                "adapted symplectic basis for delta = ({delta_csv}) mod {n}, g = {g}\n"
            ));
            for i in 0..g as usize {
                out.push_str(&format!(
                    "x{} = {:?}   delta -> {}\n",
                    i + 1,
                    cert.x[i],
                    cert.delta_x[i]
                ));
                out.push_str(&format!(
                    "y{} = {:?}   delta -> {}\n",
                    i + 1,
                    cert.y[i],
                    cert.delta_y[i]
                ));
            }
            out.push_str("change of basis (columns x1, y1, x2, y2, ...):\n");
            for i in 0..2 * g as usize {
                out.push_str(&format!("  {:?}\n", cert.change_of_basis.row(i)));
            }
            for (name, ok) in check.lines() {
                out.push_str(&format!("{} {}\n", if ok { "PASS" } else { "FAIL" }, name));
            }
        }
    }
    Ok(if check.all_pass() { 0 } else { 4 })
}
