//! Verification verdicts shared by the library checks and the CLI.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Indeterminate => "INDETERMINATE",
        })
    }
}

/// First index at which a check did not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    pub detail: String,
}

/// Outcome of one named check over an index range.
///
/// `FAIL` always carries a counterexample; `INDETERMINATE` carries one when
/// there is a specific index whose status could not be resolved.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub range: [i64; 2],
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>, range: [i64; 2]) -> Self {
        Self {
            check: check.into(),
            range,
            status: Status::Pass,
            counterexample: None,
            seconds: 0.0,
            expected: None,
        }
    }

    pub fn fail(check: impl Into<String>, range: [i64; 2], n: i64, detail: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            counterexample: Some(Counterexample {
                n,
                detail: detail.into(),
            }),
            ..Self::pass(check, range)
        }
    }

    pub fn indeterminate(
        check: impl Into<String>,
        range: [i64; 2],
        n: i64,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            status: Status::Indeterminate,
            ..Self::fail(check, range, n, detail)
        }
    }

    /// PASS unless `first_failure` is set.
    pub fn from_outcome(
        check: impl Into<String>,
        range: [i64; 2],
        first_failure: Option<(i64, String)>,
    ) -> Self {
        match first_failure {
            None => Self::pass(check, range),
            Some((n, detail)) => Self::fail(check, range, n, detail),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_seconds(mut self, seconds: f64) -> Self {
        self.seconds = seconds;
        self
    }

    pub fn with_expected(mut self, expected: impl Into<String>) -> Self {
        self.expected = Some(expected.into());
        self
    }

    /// Runs `check`, stamping the wall-clock time it took.
    pub fn timed(check: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
        let start = Instant::now();
        let report = check()?;
        Ok(report.with_seconds(start.elapsed().as_secs_f64()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let report: Self =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))?;
        if report.status == Status::Fail && report.counterexample.is_none() {
            return Err(Error::Parse("FAIL report without a counterexample".into()));
        }
        if report.range[0] > report.range[1] {
            return Err(Error::Parse("report range is reversed".into()));
        }
        Ok(report)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<13} {} [{}..={}]",
            self.status.to_string(),
            self.check,
            self.range[0],
            self.range[1]
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "  first counterexample n = {}: {}", c.n, c.detail)?;
        }
        if let Some(e) = &self.expected {
            write!(f, "  (expected: {e})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fail_without_counterexample_is_rejected() {
        let text = r#"{"check":"x","range":[1,2],"status":"FAIL","seconds":0.0}"#;
        assert!(VerificationReport::from_json(text).is_err());
    }

    #[test]
    fn status_spelling() {
        let r = VerificationReport::indeterminate("signs", [1, 3], 2, "width");
        let json = r.to_json();
        assert!(json.contains(r#""status":"INDETERMINATE""#));
        assert!(!json.contains("expected"));
    }

    proptest! {
        #[test]
        fn json_round_trips(
            check in "[a-z_.]{1,20}",
            lo in -5i64..100,
            len in 0i64..1000,
            which in 0u8..3,
            n in -5i64..1000,
            detail in ".{0,40}",
            millis in 0u32..100_000,
        ) {
            let range = [lo, lo + len];
            let report = match which {
                0 => VerificationReport::pass(check, range),
                1 => VerificationReport::fail(check, range, n, detail),
                _ => VerificationReport::indeterminate(check, range, n, detail).with_expected("x"),
            }
            .with_seconds(f64::from(millis) / 1000.0);
            let back = VerificationReport::from_json(&report.to_json()).unwrap();
            prop_assert_eq!(back, report);
        }
    }
}
