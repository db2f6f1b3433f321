//! Output rendering: the fixed JSON schema, the census CSV layout, and
//! the human-readable text views. Counts are serialized as decimal
//! strings since they outgrow 2^53 quickly as the genus grows.

use cover_census::counting::CoverCountReport;
use cover_census::oracle::VerifyReport;
use serde::Serialize;

#[derive(Serialize)]
pub struct ParamsJson {
    pub g: u32,
    pub m: u64,
    pub n: u64,
}

#[derive(Serialize)]
pub struct CountsJson {
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "N_cyclic")]
    pub n_cyclic: String,
    #[serde(rename = "C_total")]
    pub c_total: String,
}

#[derive(Serialize)]
pub struct PerPrimeJson {
    pub p: u64,
    pub e: u32,
    pub lf_count: u64,
    pub pev_count: String,
}

#[derive(Serialize)]
pub struct VerificationJson {
    pub method: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub oracle_value: String,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub params: ParamsJson,
    pub counts: CountsJson,
    pub per_prime: Vec<PerPrimeJson>,
    pub verification: Option<VerificationJson>,
}

impl ReportJson {
    pub fn new(report: &CoverCountReport, verification: Option<&VerifyReport>) -> Self {
        ReportJson {
            params: ParamsJson {
                g: report.g,
                m: report.m,
                n: report.n,
            },
            counts: CountsJson {
                t: report.refinement_count.to_string(),
                n_cyclic: report.cyclic_count.to_string(),
                c_total: report.total.to_string(),
            },
            per_prime: report
                .per_prime
                .iter()
                .map(|f| PerPrimeJson {
                    p: f.p,
                    e: f.e,
                    lf_count: f.linear_factor_count,
                    pev_count: f.primitive_eigenvector_count.to_string(),
                })
                .collect(),
            verification: verification.map(|v| VerificationJson {
                method: if v.enumeration_ran() {
                    "kernel+enumeration".to_string()
                } else {
                    "kernel".to_string()
                },
                matched: v.matched,
                oracle_value: v.kernel.direction_count.to_string(),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct CensusRowJson {
    pub g: u32,
    pub m: u64,
    pub n: u64,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "N_cyclic")]
    pub n_cyclic: String,
    #[serde(rename = "C_total")]
    pub c_total: String,
    pub verified: String,
}

pub const CENSUS_CSV_HEADER: &str = "g,m,n,T,N_cyclic,C_total,verified";

impl CensusRowJson {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.g, self.m, self.n, self.t, self.n_cyclic, self.c_total, self.verified
        )
    }
}

pub fn render_count_text(report: &CoverCountReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("g = {}, m = {}, n = {}\n", report.g, report.m, report.n));
    out.push_str(&format!("T        = {}\n", report.refinement_count));
    out.push_str(&format!("N_cyclic = {}\n", report.cyclic_count));
    out.push_str(&format!("C_total  = {}\n", report.total));
    out.push_str("per-prime breakdown (p, e, linear factors, primitive eigenvectors):\n");
    for f in &report.per_prime {
        out.push_str(&format!(
            "  p = {}  e = {}  lf = {}  pev = {}\n",
            f.p, f.e, f.linear_factor_count, f.primitive_eigenvector_count
        ));
    }
    out
}

pub fn render_verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("g = {}, m = {}, n = {}\n", report.g, report.m, report.n));
    out.push_str(&format!("formula count      = {}\n", report.formula));
    out.push_str(&format!(
        "kernel oracle      = {}\n",
        report.kernel.direction_count
    ));
    match &report.enumeration {
        Some(enumeration) => {
            out.push_str(&format!(
                "enumeration oracle = {}\n",
                enumeration.direction_count
            ));
        }
        None => {
            out.push_str("enumeration oracle = skipped (over budget)\n");
        }
    }
    if report.matched {
        let tag = if report.enumeration_ran() {
            ""
        } else {
            ", kernel-verified"
        };
        out.push_str(&format!("verdict: MATCH ({}{})\n", report.formula, tag));
    } else {
        out.push_str("verdict: MISMATCH\n");
    }
    out
}
