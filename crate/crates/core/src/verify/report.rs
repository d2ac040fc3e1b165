//! Verification reports and their JSON / CSV encodings.

use serde::{Deserialize, Serialize, Serializer};

use crate::thresholds::ThresholdQuery;

/// Fixed CSV header line.
pub const CSV_HEADER: &str = "theorem,n,scanned,hypothesis_hits,conclusion_hits,exceptional_hits,\
budget_exhausted,vacuous,counterexamples,wall_time";

/// Decimal rendering with 12 significant digits, trailing zeros trimmed.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(format_sig(*x).parse().unwrap_or(*x))
}

/// Parameters of the checked statement, as emitted in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub m: usize,
    pub delta: usize,
    pub q: usize,
    pub s: usize,
}

impl From<ThresholdQuery> for ReportParams {
    fn from(t: ThresholdQuery) -> Self {
        ReportParams { n: t.n, r: t.r, k: t.k, m: t.m, delta: t.delta, q: t.q, s: t.s }
    }
}

/// Aggregate outcome of checking one statement over a graph stream.
///
/// Every hypothesis hit lands in exactly one of `conclusion_hits`,
/// `exceptional_hits`, `budget_exhausted` or `counterexamples`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: ReportParams,
    pub source: String,
    pub scanned: u64,
    pub hypothesis_hits: u64,
    pub conclusion_hits: u64,
    pub exceptional_hits: u64,
    pub budget_exhausted: u64,
    /// No graph satisfied the hypothesis, so nothing was tested.
    pub vacuous: bool,
    /// Failing graphs as graph6, sorted.
    pub counterexamples: Vec<String>,
    #[serde(serialize_with = "sig12")]
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, params: ReportParams, source: impl Into<String>) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            params,
            source: source.into(),
            scanned: 0,
            hypothesis_hits: 0,
            conclusion_hits: 0,
            exceptional_hits: 0,
            budget_exhausted: 0,
            vacuous: true,
            counterexamples: Vec::new(),
            wall_time: 0.0,
        }
    }

    /// No counterexample was found.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Process exit code: 0 without counterexamples, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// The accounting identity between the counters.
    pub fn is_consistent(&self) -> bool {
        self.scanned >= self.hypothesis_hits
            && self.hypothesis_hits
                == self.conclusion_hits
                    + self.exceptional_hits
                    + self.budget_exhausted
                    + self.counterexamples.len() as u64
            && self.vacuous == (self.hypothesis_hits == 0)
    }

    pub(crate) fn finish(&mut self, wall_time: f64) {
        self.counterexamples.sort();
        self.vacuous = self.hypothesis_hits == 0;
        self.wall_time = wall_time;
    }
}

/// Output encodings of [`report_emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Encodes a report. JSON is pretty-printed with a stable field order; CSV
/// is the fixed header plus one row, counterexamples joined with `;`.
pub fn report_emit(report: &VerificationReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serialises");
            out.push(b'\n');
            out
        }
        ReportFormat::Csv => {
            let row = format!(
                "{},{},{},{},{},{},{},{},{},{}",
                csv_field(&report.theorem),
                report.params.n,
                report.scanned,
                report.hypothesis_hits,
                report.conclusion_hits,
                report.exceptional_hits,
                report.budget_exhausted,
                report.vacuous,
                csv_field(&report.counterexamples.join(";")),
                format_sig(report.wall_time),
            );
            format!("{CSV_HEADER}\n{row}\n").into_bytes()
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
