//! Output documents for `verify`.

use serde::Serialize;
use tricomb::identities::VerificationReport;

/// Top-level JSON document. Field order is fixed by declaration order, so the
/// serialized form is stable across runs.
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub pass: bool,
    pub reports: Vec<VerificationReport>,
    pub cross_checks: Vec<VerificationReport>,
}

impl ReportDocument {
    pub fn new(command: Vec<String>, reports: Vec<VerificationReport>, cross_checks: Vec<VerificationReport>) -> Self {
        let pass = reports.iter().chain(&cross_checks).all(|r| r.pass);
        ReportDocument {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            pass,
            reports,
            cross_checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut section = |title: &str, rows: &[VerificationReport]| {
            if rows.is_empty() {
                return;
            }
            out.push_str(&format!("{title}\n"));
            for r in rows {
                let domain = match &r.domain.j {
                    Some(j) => format!("n<={} j={j:?}", r.domain.n_max),
                    None => format!("n<={}", r.domain.n_max),
                };
                let outcome = match &r.counterexample {
                    None => "pass".to_owned(),
                    Some(ce) => match &ce.brute_force {
                        Some(b) => format!(
                            "FAIL at {}: enumerated {b}, lhs-offset {}, rhs-offset {}",
                            ce.params, ce.lhs, ce.rhs
                        ),
                        None => format!("FAIL at {}: lhs {} != rhs {}", ce.params, ce.lhs, ce.rhs),
                    },
                };
                out.push_str(&format!(
                    "  {:<10} {:<10} {:<18} {outcome}\n",
                    r.id,
                    r.variant.to_string(),
                    domain
                ));
            }
        };
        section("identities", &self.reports);
        section("cross-checks", &self.cross_checks);
        let failed = self
            .reports
            .iter()
            .chain(&self.cross_checks)
            .filter(|r| !r.pass)
            .count();
        out.push_str(&format!(
            "{} checks, {failed} failed\n",
            self.reports.len() + self.cross_checks.len()
        ));
        out
    }
}
